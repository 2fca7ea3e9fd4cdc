#include "egr/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace egr {

namespace {

__extension__ using Int128 = __int128;

// (A^t e_v) for t = 0..steps, dotted pairwise to get the diagonal entries.
template <class Int>
std::vector<Int> closed_walks(const Graph& g, std::uint32_t max_length) {
    const std::size_t n = g.order();
    const std::uint32_t steps = (max_length + 1) / 2;
    std::vector<Int> totals(max_length + 1, Int(0));
    std::vector<std::vector<Int>> x(steps + 1, std::vector<Int>(n, Int(0)));
    for (Vertex v = 0; v < n; ++v) {
        for (auto& row : x) std::fill(row.begin(), row.end(), Int(0));
        x[0][v] = 1;
        for (std::uint32_t t = 1; t <= steps; ++t) {
            for (Vertex u = 0; u < n; ++u) {
                Int s = 0;
                for (auto w : g.neighbors(u)) s += x[t - 1][w];
                x[t][u] = s;
            }
        }
        // (A^{a+b})_{vv} = <A^a e_v, A^b e_v>
        for (std::uint32_t l = 0; l <= max_length; ++l) {
            const std::uint32_t a = l / 2;
            const std::uint32_t b = l - a;
            Int s = 0;
            for (Vertex u = 0; u < n; ++u) s += x[a][u] * x[b][u];
            totals[l] += s;
        }
    }
    return totals;
}

BigInt to_big(Int128 v) {
    const bool negative = v < 0;
    __extension__ using UInt128 = unsigned __int128;
    auto u = static_cast<UInt128>(negative ? -v : v);
    BigInt out = static_cast<std::uint64_t>(u >> 64);
    out <<= 64;
    out += static_cast<std::uint64_t>(u);
    return negative ? BigInt(-out) : out;
}

BigInt tree_walks_unchecked(std::uint32_t length, const BigInt& k) {
    if (length % 2 == 1) return 0;
    const std::uint32_t depth = length / 2;
    std::vector<BigInt> cur(depth + 2, 0);
    std::vector<BigInt> next(depth + 2, 0);
    cur[0] = 1;
    for (std::uint32_t step = 0; step < length; ++step) {
        std::fill(next.begin(), next.end(), 0);
        for (std::uint32_t d = 0; d <= depth; ++d) {
            if (cur[d] == 0) continue;
            next[d + 1] += cur[d] * (d == 0 ? k : k - 1);
            if (d > 0) next[d - 1] += cur[d];
        }
        std::swap(cur, next);
    }
    return cur[0];
}

}  // namespace

MomentTable walk_moments(const Graph& g, std::uint32_t max_length) {
    if (max_length > kMaxMomentLength) throw std::invalid_argument("walk length exceeds 16");
    if (g.order() > kMaxSpectralOrder) throw std::invalid_argument("graph order exceeds 2048");
    std::size_t kmax = 0;
    for (Vertex v = 0; v < g.order(); ++v) kmax = std::max(kmax, g.degree(v));

    // every entry of A^t e_v is at most kmax^t, so n * kmax^L bounds all sums
    const double log_bound = std::log2(static_cast<double>(std::max<std::size_t>(g.order(), 1))) +
                             max_length * std::log2(static_cast<double>(std::max<std::size_t>(kmax, 1)));
    MomentTable out;
    if (log_bound < 120.0) {
        for (auto v : closed_walks<Int128>(g, max_length)) out.moments.push_back(to_big(v));
    } else {
        out.moments = closed_walks<BigInt>(g, max_length);
    }
    return out;
}

BigInt tree_walk_count(std::uint32_t length, std::uint32_t k) {
    if (k < 2) throw std::invalid_argument("tree walk count needs k >= 2");
    return tree_walks_unchecked(length, k);
}

BigInt WalkPolynomial::operator()(const BigInt& k) const {
    BigInt v = 0;
    for (std::size_t i = coefficients.size(); i-- > 0;) v = v * k + coefficients[i];
    return v;
}

WalkPolynomial walk_polynomial(std::uint32_t length) {
    if (length % 2 == 1) throw std::invalid_argument("walk polynomial needs an even length");
    const std::uint32_t degree = length / 2;
    // Newton interpolation at k = 0..degree; the walk recursion is a
    // polynomial identity in k, so evaluating outside k >= 2 is fine here.
    std::vector<Rational> diffs;
    for (std::uint32_t i = 0; i <= degree; ++i) diffs.emplace_back(tree_walks_unchecked(length, i));
    for (std::uint32_t level = 1; level <= degree; ++level) {
        for (std::uint32_t i = degree; i >= level; --i) diffs[i] = (diffs[i] - diffs[i - 1]) / level;
    }
    // expand sum diffs[i] * prod_{j<i} (k - j)
    std::vector<Rational> coeffs(degree + 1, Rational(0));
    std::vector<Rational> basis{Rational(1)};
    for (std::uint32_t i = 0; i <= degree; ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j) coeffs[j] += diffs[i] * basis[j];
        std::vector<Rational> grown(basis.size() + 1, Rational(0));
        for (std::size_t j = 0; j < basis.size(); ++j) {
            grown[j + 1] += basis[j];
            grown[j] -= basis[j] * i;
        }
        basis = std::move(grown);
    }
    WalkPolynomial out;
    out.length = length;
    for (const auto& c : coeffs) {
        if (boost::multiprecision::denominator(c) != 1) throw std::logic_error("walk polynomial is not integral");
        out.coefficients.push_back(boost::multiprecision::numerator(c));
    }
    return out;
}

BigInt binomial(std::uint32_t n, std::uint32_t r) {
    if (r > n) return 0;
    BigInt out = 1;
    for (std::uint32_t i = 1; i <= r; ++i) {
        out *= n - r + i;
        out /= i;
    }
    return out;
}

BigInt catalan(std::uint32_t s) { return binomial(2 * s, s) - binomial(2 * s, s + 1); }

Spectrum eigenvalues(const Graph& g, double tol) {
    const std::size_t n = g.order();
    if (n > kMaxSpectralOrder) throw std::invalid_argument("graph order exceeds 2048");
    std::vector<double> a(n * n, 0.0);
    for (Vertex u = 0; u < n; ++u)
        for (auto v : g.neighbors(u)) a[u * n + v] = 1.0;
    auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
    auto off_norm = [&] {
        double s = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) s += at(i, j) * at(i, j);
        return std::sqrt(s);
    };

    constexpr int kMaxSweeps = 100;
    Spectrum out;
    double off = off_norm();
    while (off >= tol) {
        if (out.sweeps == kMaxSweeps) {
            throw std::runtime_error("Jacobi iteration did not converge; off-diagonal norm " + std::to_string(off));
        }
        ++out.sweeps;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = at(k, p);
                    const double akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = at(p, k);
                    const double aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
                at(p, q) = 0.0;
                at(q, p) = 0.0;
            }
        }
        off = off_norm();
    }
    out.off_diagonal_norm = off;
    for (std::size_t i = 0; i < n; ++i) out.eigenvalues.push_back(at(i, i));
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end(), std::greater<>());

    const double group_tol = 1e4 * tol;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i + 1;
        double sum = out.eigenvalues[i];
        while (j < n && out.eigenvalues[j - 1] - out.eigenvalues[j] <= group_tol) sum += out.eigenvalues[j++];
        out.groups.push_back({sum / static_cast<double>(j - i), j - i});
        i = j;
    }
    return out;
}

TightSpectrumCertificate certify_tight_spectrum(const Spectrum& spectrum, const EgrSignature& sig, double tol) {
    TightSpectrumCertificate cert;
    if (sig.g != 4 || !sig.bipartite) {
        cert.reason = "tight-spectrum test needs a bipartite graph of girth 4";
        return cert;
    }
    const std::uint64_t n = sig.n;
    const std::uint64_t k = sig.k;
    if (spectrum.eigenvalues.size() != n) {
        cert.reason = "spectrum size does not match the signature";
        return cert;
    }
    cert.second_eigenvalue_squared = Rational(BigInt(n) * k - BigInt(2) * k * k, BigInt(n - 2));
    cert.second_eigenvalue = std::sqrt(to_double(cert.second_eigenvalue_squared));
    cert.multiplicity = (n - 2) / 2;

    std::vector<double> expected;
    expected.push_back(static_cast<double>(k));
    expected.insert(expected.end(), cert.multiplicity, cert.second_eigenvalue);
    expected.insert(expected.end(), cert.multiplicity, -cert.second_eigenvalue);
    expected.push_back(-static_cast<double>(k));
    for (std::size_t i = 0; i < n; ++i) {
        cert.max_deviation = std::max(cert.max_deviation, std::abs(expected[i] - spectrum.eigenvalues[i]));
    }
    cert.certified = cert.max_deviation <= tol;
    if (!cert.certified) cert.reason = "spectrum deviates from the four-eigenvalue form by " + std::to_string(cert.max_deviation);
    return cert;
}

TightSpectrumCertificate certify_tight_spectrum(const Graph& g, const EgrSignature& sig, double tol) {
    if (sig.g != 4 || !sig.bipartite) return certify_tight_spectrum(Spectrum{}, sig, tol);
    return certify_tight_spectrum(eigenvalues(g), sig, tol);
}

}  // namespace egr
