#include "egr/bounds.hpp"

#include "egr/spectral.hpp"

#include <stdexcept>

namespace egr {

namespace {

void require_kg(std::uint32_t k, std::uint32_t g) {
    if (k < 3) throw std::invalid_argument("degree k must be at least 3");
    if (g < 3) throw std::invalid_argument("girth g must be at least 3");
}

BigInt ipow(const BigInt& b, std::uint32_t e) {
    BigInt r = 1;
    for (std::uint32_t i = 0; i < e; ++i) r *= b;
    return r;
}

BigInt c(std::uint32_t len, std::uint32_t k) { return tree_walk_count(len, k); }

std::optional<Rational> positive_quotient(const Fraction& f) {
    if (f.den <= 0) return std::nullopt;
    return Rational(f.num, f.den);
}

// smallest admissible order >= value
BigInt round_order(const BigInt& value, bool even) {
    if (even && value % 2 != 0) return value + 1;
    return value;
}

}  // namespace

BigInt moore_bound(std::uint32_t k, std::uint32_t g) {
    require_kg(k, g);
    const BigInt km1 = k - 1;
    if (g % 2 == 1) return (BigInt(k) * ipow(km1, (g - 1) / 2) - 2) / (k - 2);
    return (2 * ipow(km1, g / 2) - 2) / (k - 2);
}

std::optional<BigInt> dfjr_bound(std::uint32_t k, std::uint32_t g, std::uint64_t lambda, bool bipartite) {
    require_kg(k, g);
    if (bipartite && g % 2 == 1) throw std::invalid_argument("a bipartite graph has even girth");
    const BigInt n0 = moore_bound(k, g);
    const BigInt top = ipow(BigInt(k - 1), g % 2 == 1 ? (g - 1) / 2 : g / 2);
    if (BigInt(lambda) > top) return std::nullopt;
    const BigInt excess = top - lambda;
    if (g % 2 == 1) return n0 + excess;
    if (bipartite) return n0 + 2 * ceil(Rational(excess, k));
    return n0 + ceil(Rational(2 * excess, k));
}

Rational egr4_bound(std::uint32_t k, std::uint64_t lambda, bool bipartite) {
    require_kg(k, 4);
    const BigInt K = k;
    Rational r(K * K * K - 2 * K * K + 2 * K - 1 + lambda, BigInt(lambda) + K - 1);
    return bipartite ? Rational(2 * r) : r;
}

std::optional<Rational> even_girth_bound(std::uint32_t k, std::uint32_t g, std::uint64_t lambda, bool bipartite) {
    require_kg(k, g);
    if (g % 2 == 1) throw std::invalid_argument("even_girth_bound needs an even girth");
    const BigInt K = k;
    const BigInt cg = c(g, k);
    const BigInt kl = K * lambda;
    const BigInt kg = ipow(K, g);
    if (g % 4 == 0) {
        const BigInt ch = c(g / 2, k);
        Fraction f{cg + kl + kg - 2 * ch * ipow(K, g / 2), cg - ch * ch + kl};
        if (bipartite) f.num *= 2;
        return positive_quotient(f);
    }
    if (bipartite) return positive_quotient({2 * kg, cg + kl});
    return positive_quotient({cg + kl + kg, cg + kl});
}

Fraction odd_girth_fraction(std::uint32_t k, std::uint32_t g, std::uint64_t lambda) {
    require_kg(k, g);
    if (g % 2 == 0 || g < 5) throw std::invalid_argument("odd_girth_bound needs an odd girth of at least 5");
    const BigInt K = k;
    const BigInt L = lambda;
    const BigInt below = c(g - 1, k);
    const BigInt x = c(g + 1, k) + K * ipow(K - 1, (g + 1) / 2) - L * K;
    return {ipow(K, g + 1) * below + ipow(K, g - 1) * x - 2 * ipow(K, g + 1) * L, below * x - K * K * L * L};
}

Fraction odd_girth_g5_fraction(std::uint32_t k, std::uint64_t lambda) {
    require_kg(k, 5);
    const BigInt K = k;
    const BigInt L = lambda;
    const BigInt k2 = K * K, k3 = k2 * K, k4 = k3 * K;
    return {3 * k4 * k2 + k4 * K - 3 * k4 + k3 - 2 * k4 * L - k3 * L,
            2 * k4 + 3 * k3 - 8 * k2 + 5 * K - 1 - L * L - 2 * K * L + L};
}

std::optional<Rational> odd_girth_bound(std::uint32_t k, std::uint32_t g, std::uint64_t lambda) {
    return positive_quotient(odd_girth_fraction(k, g, lambda));
}

std::optional<Rational> vertex_cycle_cap(std::uint32_t k, std::uint32_t g, std::uint64_t lambda) {
    require_kg(k, g);
    if (g % 2 == 0) throw std::invalid_argument("vertex_cycle_cap needs an odd girth");
    const std::uint32_t h = (g - 1) / 2;
    const Rational cap = Rational(binomial(k, 2)) * (Rational(ipow(BigInt(k - 1), h)) - Rational(BigInt(lambda), k - 1));
    if (cap < 0) return std::nullopt;
    return cap;
}

BoundReport bound_report(std::uint32_t k, std::uint32_t g, std::uint64_t lambda, bool bipartite) {
    require_kg(k, g);
    if (bipartite && g % 2 == 1) throw std::invalid_argument("a bipartite graph has even girth");
    BoundReport r;
    r.k = k;
    r.g = g;
    r.lambda = lambda;
    r.bipartite = bipartite;
    r.moore = moore_bound(k, g);
    r.dfjr = dfjr_bound(k, g, lambda, bipartite);
    if (!r.dfjr) r.notes.push_back("dfjr: lambda above (k-1)^floor(g/2), bound omitted");

    if (g % 2 == 0) {
        if (g == 4) r.egr4 = egr4_bound(k, lambda, bipartite);
        r.spectral_even = even_girth_bound(k, g, lambda, bipartite);
        if (!r.spectral_even) r.notes.push_back("spectral_even: bound degenerate (denominator not positive)");
    } else {
        if (g >= 5) {
            r.spectral_odd = odd_girth_bound(k, g, lambda);
            if (!r.spectral_odd) r.notes.push_back("spectral_odd: bound degenerate (denominator not positive)");
        } else {
            r.notes.push_back("spectral_odd: needs g >= 5");
        }
        r.vertex_cycle_cap = vertex_cycle_cap(k, g, lambda);
        if (!r.vertex_cycle_cap) r.notes.push_back("vertex_cycle_cap: negative, not applicable");
    }

    const bool even_order = bipartite || k % 2 == 1;
    if (even_order) r.notes.push_back(bipartite ? "best rounded up to an even order (bipartite)"
                                                : "best rounded up to an even order (odd degree)");
    std::vector<std::pair<std::string, BigInt>> candidates{{"moore", round_order(r.moore, even_order)}};
    if (r.dfjr) candidates.emplace_back("dfjr", round_order(*r.dfjr, even_order));
    if (r.egr4) candidates.emplace_back("egr4", round_order(ceil(*r.egr4), even_order));
    if (r.spectral_even) candidates.emplace_back("spectral_even", round_order(ceil(*r.spectral_even), even_order));
    if (r.spectral_odd) candidates.emplace_back("spectral_odd", round_order(ceil(*r.spectral_odd), even_order));
    r.best = candidates.front().second;
    for (const auto& [name, value] : candidates) r.best = value > r.best ? value : r.best;
    for (const auto& [name, value] : candidates)
        if (value == r.best) r.best_sources.push_back(name);
    return r;
}

ExtremalVerdict certify_extremal(const EgrSignature& sig) {
    ExtremalVerdict v;
    v.bounds = bound_report(sig.k, sig.g, sig.lambda, sig.bipartite);
    v.n = sig.n;
    v.best = v.bounds.best;
    v.gap = v.n - v.best;
    if (v.gap < 0) throw std::logic_error("order " + v.n.str() + " is below the lower bound " + v.best.str());
    v.certified = v.gap == 0;
    if (v.certified) {
        v.tight_bounds = v.bounds.best_sources;
        std::string via;
        for (const auto& s : v.tight_bounds) via += (via.empty() ? "" : ", ") + s;
        v.text = "certified extremal via " + via +
                 " (bound-tightness certificate: the order equals a lower bound; no exhaustive search)";
    } else {
        v.text = "gap = " + v.gap.str() + " (order " + v.n.str() + ", best lower bound " + v.best.str() + ")";
    }
    return v;
}

}  // namespace egr
