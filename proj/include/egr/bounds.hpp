#pragma once

#include "egr/graph.hpp"
#include "egr/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace egr {

/// Unreduced quotient, kept so that a zero or negative denominator can be
/// reported instead of divided by.
struct Fraction {
    BigInt num;
    BigInt den;
};

// All functions require k >= 3 and g >= 3 and throw std::invalid_argument
// otherwise.

/// Moore bound n0(k, g).
BigInt moore_bound(std::uint32_t k, std::uint32_t g);

/// n0 + (k-1)^((g-1)/2) - lambda for odd g, n0 + ceil(2((k-1)^(g/2) - lambda)/k)
/// for even g, n0 + 2 ceil(((k-1)^(g/2) - lambda)/k) for bipartite graphs.
/// nullopt when lambda is above the admissible range.  Throws for a bipartite
/// query with odd g.
std::optional<BigInt> dfjr_bound(std::uint32_t k, std::uint32_t g, std::uint64_t lambda, bool bipartite);

/// (k^3 - 2k^2 + 2k - 1 + lambda) / (lambda + k - 1), doubled for bipartite graphs.
Rational egr4_bound(std::uint32_t k, std::uint64_t lambda, bool bipartite);

/// Spectral bound for even g >= 4.  nullopt if the denominator is not positive.
std::optional<Rational> even_girth_bound(std::uint32_t k, std::uint32_t g, std::uint64_t lambda, bool bipartite);

/// Spectral bound for odd g >= 5, general form.
Fraction odd_girth_fraction(std::uint32_t k, std::uint32_t g, std::uint64_t lambda);
/// The same bound at g = 5, written out as polynomials in k and lambda.
Fraction odd_girth_g5_fraction(std::uint32_t k, std::uint64_t lambda);
/// nullopt when the denominator is not positive (degenerate bound).
std::optional<Rational> odd_girth_bound(std::uint32_t k, std::uint32_t g, std::uint64_t lambda);

/// Upper bound binom(k,2)((k-1)^h - lambda/(k-1)) on the number of
/// (g+1)-cycles through a vertex, g = 2h+1.  nullopt when negative.
std::optional<Rational> vertex_cycle_cap(std::uint32_t k, std::uint32_t g, std::uint64_t lambda);

struct BoundReport {
    std::uint32_t k = 0;
    std::uint32_t g = 0;
    std::uint64_t lambda = 0;
    bool bipartite = false;
    BigInt moore;
    std::optional<BigInt> dfjr;
    std::optional<Rational> egr4;           // g = 4
    std::optional<Rational> spectral_even;  // even g
    std::optional<Rational> spectral_odd;   // odd g, non-degenerate
    std::optional<Rational> vertex_cycle_cap;
    // largest applicable bound, ceiled and rounded up to an even order when
    // the graph is bipartite or k is odd
    BigInt best;
    std::vector<std::string> best_sources;
    std::vector<std::string> notes;
};

BoundReport bound_report(std::uint32_t k, std::uint32_t g, std::uint64_t lambda, bool bipartite);

struct ExtremalVerdict {
    bool certified = false;
    BigInt n;
    BigInt best;
    BigInt gap;  // n - best
    std::vector<std::string> tight_bounds;
    std::string text;
    BoundReport bounds;
};

/// Compares the order with the best lower bound for the signature's triple.
/// A positive verdict certifies that some bound is tight, which is weaker
/// than a proof that no smaller graph exists.
ExtremalVerdict certify_extremal(const EgrSignature& sig);

}  // namespace egr
