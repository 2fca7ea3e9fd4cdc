#pragma once

#include "egr/graph.hpp"
#include "egr/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace egr {

/// moments[l] = trace(A^l) = number of closed walks of length l.
struct MomentTable {
    std::vector<BigInt> moments;
};

inline constexpr std::uint32_t kMaxMomentLength = 16;
inline constexpr std::size_t kMaxSpectralOrder = 2048;

// Exact traces for l = 0..max_length.  Throws std::invalid_argument past
// the caps above.
MomentTable walk_moments(const Graph& g, std::uint32_t max_length);

/// c(l, k): closed walks of length l from the root of the infinite k-regular
/// tree.  Zero for odd l.  Requires k >= 2.
BigInt tree_walk_count(std::uint32_t length, std::uint32_t k);

struct WalkPolynomial {
    std::uint32_t length = 0;
    // coefficients of c(length, k) in ascending powers of k
    std::vector<BigInt> coefficients;

    BigInt operator()(const BigInt& k) const;
};

// c(length, k) as a polynomial in k, by exact interpolation of the walk
// counts.  length must be even.
WalkPolynomial walk_polynomial(std::uint32_t length);

BigInt catalan(std::uint32_t s);
BigInt binomial(std::uint32_t n, std::uint32_t r);

struct EigenvalueGroup {
    double value = 0;
    std::size_t multiplicity = 0;
};

struct Spectrum {
    // descending, with multiplicity
    std::vector<double> eigenvalues;
    std::vector<EigenvalueGroup> groups;
    double off_diagonal_norm = 0;
    int sweeps = 0;
};

/// All eigenvalues of the adjacency matrix by cyclic Jacobi rotations,
/// iterated until the off-diagonal Frobenius norm drops below tol.
/// Eigenvalues within 1e4 * tol of their neighbour share a group.  Throws
/// std::runtime_error on non-convergence.
Spectrum eigenvalues(const Graph& g, double tol = 1e-10);

struct TightSpectrumCertificate {
    bool certified = false;
    std::string reason;
    // (nk - 2k^2) / (n - 2)
    Rational second_eigenvalue_squared;
    double second_eigenvalue = 0;
    std::size_t multiplicity = 0;
    double max_deviation = 0;
};

/// Checks that a bipartite girth-4 egr graph has spectrum
/// {k, +-sqrt((nk-2k^2)/(n-2)) each (n-2)/2 times, -k}, within tol.  A
/// refusal (certified == false) carries the reason.
TightSpectrumCertificate certify_tight_spectrum(const Graph& g, const EgrSignature& sig, double tol = 1e-6);
TightSpectrumCertificate certify_tight_spectrum(const Spectrum& spectrum, const EgrSignature& sig, double tol = 1e-6);

}  // namespace egr
