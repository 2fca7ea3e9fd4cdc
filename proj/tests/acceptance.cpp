// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include "egr/bounds.hpp"
#include "egr/constructions.hpp"
#include "egr/graph6.hpp"
#include "egr/spectral.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

using namespace egr;

namespace {

// collects the first few mismatches of a criterion
class Check {
public:
    void expect(bool ok, const std::string& what) {
        ++total_;
        if (ok) return;
        ++failed_;
        if (failed_ <= 3) problems_ << (failed_ > 1 ? "; " : "") << what;
    }
    bool ok() const { return failed_ == 0; }
    std::string summary() const {
        std::ostringstream s;
        s << total_ - failed_ << "/" << total_ << " checks";
        if (failed_) s << " [" << problems_.str() << "]";
        return s.str();
    }

private:
    int total_ = 0;
    int failed_ = 0;
    std::ostringstream problems_;
};

std::string str(const EgrSignature& s) {
    return "(" + std::to_string(s.n) + "," + std::to_string(s.k) + "," + std::to_string(s.g) + "," +
           std::to_string(s.lambda) + (s.bipartite ? ",bip)" : ")");
}

std::optional<EgrSignature> signature_of(const Graph& g) {
    auto r = verify_egr(g);
    if (auto* s = std::get_if<EgrSignature>(&r)) return *s;
    return std::nullopt;
}

void expect_signature(Check& c, const std::string& label, const Graph& g, EgrSignature want) {
    auto got = signature_of(g);
    c.expect(got && *got == want, label + " expected " + str(want) + " got " + (got ? str(*got) : "failure"));
}

bool spectrum_matches(const Spectrum& s, const std::vector<std::pair<double, std::size_t>>& want) {
    std::vector<double> expanded;
    for (auto [v, m] : want) expanded.insert(expanded.end(), m, v);
    if (expanded.size() != s.eigenvalues.size()) return false;
    for (std::size_t i = 0; i < expanded.size(); ++i)
        if (std::abs(expanded[i] - s.eigenvalues[i]) > 1e-6) return false;
    return true;
}

std::vector<Graph> constructed_graphs() {
    std::vector<Graph> out;
    for (std::uint32_t q : {3u, 4u, 5u}) {
        out.push_back(build_biaffine(field_of_order(q), 1));
        out.push_back(build_biaffine(field_of_order(q), 2));
    }
    for (std::uint32_t q : {3u, 4u}) out.push_back(build_gq_truncation(field_of_order(q)));
    out.push_back(build_ovoid_spread(field_of_order(4)));
    for (std::uint32_t q : {2u, 3u}) out.push_back(build_pencil_graph(field_of_order(q)));
    for (const char* name : {"petersen", "hoffman_singleton", "heawood", "tutte_coxeter"}) out.push_back(named_graph(name));
    for (std::uint32_t k = 3; k <= 6; ++k) out.push_back(named_graph("complete_bipartite(" + std::to_string(k) + ")"));
    return out;
}

Check criterion1() {
    Check c;
    for (std::uint32_t q : {3u, 4u, 5u}) {
        const auto f = field_of_order(q);
        expect_signature(c, "biaffine1 q=" + std::to_string(q), build_biaffine(f, 1),
                         {2ull * q * q, q, 6, std::uint64_t(q - 1) * (q - 1) * (q - 2), true});
        expect_signature(c, "biaffine2 q=" + std::to_string(q), build_biaffine(f, 2),
                         {2ull * q * q - 2, q, 6, std::uint64_t(q - 1) * (q * q - 3 * q + 3), true});
    }
    for (std::uint32_t q : {3u, 4u})
        expect_signature(c, "gq_truncation q=" + std::to_string(q), build_gq_truncation(field_of_order(q)),
                         {2ull * q * q * q, q, 8, std::uint64_t(q - 1) * (q - 1) * ((q - 2) * (q - 2) + 1), true});
    expect_signature(c, "ovoid_spread q=4", build_ovoid_spread(field_of_order(4)), {136, 4, 8, 36, true});
    for (std::uint32_t q : {2u, 3u})
        expect_signature(c, "pencil q=" + std::to_string(q), build_pencil_graph(field_of_order(q)),
                         {2ull * (q * q * q + q * q + q + 1), q * q + q + 1, 4, std::uint64_t(q) * q * q + q * q, true});
    return c;
}

Check criterion2() {
    Check c;
    auto sig = signature_of(named_graph("petersen"));
    c.expect(sig && *sig == EgrSignature{10, 3, 5, 4, false}, "petersen signature");
    auto b = odd_girth_bound(3, 5, 4);
    c.expect(b && *b == Rational(1458, 149), "odd_girth_bound(3,5,4) = 1458/149");
    c.expect(b && std::abs(to_double(*b) - 9.7852) <= 1e-4, "decimal 9.7852");
    if (sig) c.expect(certify_extremal(*sig).certified, "petersen certified extremal");
    return c;
}

Check criterion3() {
    Check c;
    c.expect(egr4_bound(7, 12, true) == 30, "egr4_bound(7,12,bipartite) = 30");
    for (std::uint32_t q : {2u, 3u}) {
        const double k = q * q + q + 1;
        const std::size_t mult = q * q * q + q * q + q;
        const auto g = build_pencil_graph(field_of_order(q));
        const auto s = eigenvalues(g);
        c.expect(spectrum_matches(s, {{k, 1}, {q, mult}, {-double(q), mult}, {-k, 1}}),
                 "pencil q=" + std::to_string(q) + " spectrum");
        auto sig = signature_of(g);
        c.expect(sig && certify_tight_spectrum(s, *sig).certified, "pencil q=" + std::to_string(q) + " certificate");
    }
    return c;
}

Check criterion4() {
    Check c;
    for (std::uint32_t k = 3; k <= 6; ++k) {
        const std::uint64_t l = (k - 1) * (k - 1);
        expect_signature(c, "K_{k,k} k=" + std::to_string(k),
                         named_graph("complete_bipartite(" + std::to_string(k) + ")"), {2ull * k, k, 4, l, true});
        c.expect(egr4_bound(k, l, true) == 2 * k, "egr4_bound k=" + std::to_string(k));
    }
    return c;
}

Check criterion5() {
    Check c;
    for (std::int64_t k = 3; k <= 10; ++k) {
        const auto K = static_cast<std::uint32_t>(k);
        c.expect(tree_walk_count(2, K) == k, "c(2,k)");
        c.expect(tree_walk_count(4, K) == 2 * k * k - k, "c(4,k)");
        c.expect(tree_walk_count(6, K) == 5 * k * k * k - 6 * k * k + 2 * k, "c(6,k)");
        c.expect(tree_walk_count(8, K) == 14 * k * k * k * k - 28 * k * k * k + 20 * k * k - 5 * k, "c(8,k)");
    }
    for (std::uint32_t s = 1; s <= 6; ++s)
        for (std::uint32_t k = 2; k <= 10; ++k) {
            const auto v = tree_walk_count(2 * s, k);
            c.expect(catalan(s) * k * boost::multiprecision::pow(BigInt(k - 1), s - 1) <= v &&
                         v <= catalan(s) * boost::multiprecision::pow(BigInt(k), s),
                     "Catalan sandwich s=" + std::to_string(s) + " k=" + std::to_string(k));
        }
    for (const char* name : {"petersen", "heawood", "tutte_coxeter"}) {
        const auto g = named_graph(name);
        const auto gi = *girth(g);
        const auto m = walk_moments(g, gi).moments;
        for (std::uint32_t l = 0; l < gi; ++l)
            c.expect(m[l] == BigInt(g.order()) * tree_walk_count(l, g.degree(0)),
                     std::string(name) + " moment " + std::to_string(l));
    }
    return c;
}

Check criterion6() {
    Check c;
    for (const auto& g : constructed_graphs()) {
        auto sig = signature_of(g);
        c.expect(sig.has_value(), "constructed graph verifies");
        if (!sig) continue;
        const auto m = walk_moments(g, sig->g).moments;
        const BigInt nk = BigInt(sig->n) * sig->k;
        BigInt want = nk * sig->lambda;
        if (sig->g % 2 == 0) want += BigInt(sig->n) * tree_walk_count(sig->g, sig->k);
        c.expect(m[1] == 0, str(*sig) + " moments[1]");
        c.expect(m[2] == nk, str(*sig) + " moments[2]");
        c.expect(m[sig->g] == want, str(*sig) + " moments[g]");
    }
    return c;
}

Check criterion7() {
    Check c;
    for (auto [name, want] : std::vector<std::pair<std::string, std::uint64_t>>{{"petersen", 6}, {"hoffman_singleton", 630}}) {
        const auto g = named_graph(name);
        auto sig = signature_of(g);
        c.expect(sig.has_value(), name + " verifies");
        if (!sig) continue;
        std::uint64_t best = 0;
        for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, count_cycles_through_vertex(g, v, sig->g + 1));
        const auto cap = vertex_cycle_cap(sig->k, sig->g, sig->lambda);
        c.expect(best == want, name + " max 6-cycles per vertex = " + std::to_string(best));
        c.expect(cap && *cap == Rational(best), name + " cap equals count");
    }
    return c;
}

Check criterion8() {
    Check c;
    c.expect(dfjr_bound(3, 6, 6, true) == BigInt(16), "dfjr(3,6,6,bip) = 16");
    auto b2 = signature_of(build_biaffine(field_of_order(3), 2));
    c.expect(b2 && b2->n == 16, "biaffine2 q=3 has order 16");
    c.expect(dfjr_bound(7, 4, 12, true) == BigInt(22), "dfjr(7,4,12,bip) = 22");
    c.expect(Rational(22) < egr4_bound(7, 12, true), "egr4 strictly dominates dfjr at (7,4,12)");
    c.expect(egr4_bound(7, 12, true) == 30, "true order 30");
    return c;
}

Check criterion9() {
    Check c;
    for (std::uint32_t k = 3; k <= 10; ++k) {
        for (std::uint64_t l = 1; l <= 60; ++l)
            for (bool bip : {false, true})
                c.expect(even_girth_bound(k, 4, l, bip) == egr4_bound(k, l, bip),
                         "g=4 identity k=" + std::to_string(k) + " l=" + std::to_string(l));
        for (std::uint64_t l = 0; l <= 40; ++l) {
            const auto a = odd_girth_fraction(k, 5, l);
            const auto b = odd_girth_g5_fraction(k, l);
            c.expect(a.num * b.den == b.num * a.den && (a.den > 0) == (b.den > 0) && (a.den == 0) == (b.den == 0),
                     "g=5 identity k=" + std::to_string(k) + " l=" + std::to_string(l));
        }
    }
    return c;
}

Check criterion10() {
    Check c;
    std::mt19937 rng(10);
    for (int t = 0; t < 100; ++t) {
        std::uniform_int_distribution<std::size_t> n_dist(1, 64);
        std::uniform_real_distribution<double> p_dist(0.05, 0.9);
        const auto n = n_dist(rng);
        std::bernoulli_distribution coin(p_dist(rng));
        std::vector<Edge> e;
        for (Vertex j = 1; j < n; ++j)
            for (Vertex i = 0; i < j; ++i)
                if (coin(rng)) e.emplace_back(i, j);
        const auto g = Graph::from_edges(n, e);
        const auto s = graph6_encode(g);
        c.expect(graph6_decode(s) == g && graph6_encode(graph6_decode(s)) == s, "random graph " + std::to_string(t));
    }
    for (const auto& g : constructed_graphs()) c.expect(graph6_decode(graph6_encode(g)) == g, "constructed graph");
    for (std::string bad : {"~~~", "", "D", "Dh", "Dhcc", "D c", "Dhd", "~???", "A\x7f", ">>graph6<<"}) {
        bool rejected = false;
        try {
            graph6_decode(bad);
        } catch (const Graph6Error&) {
            rejected = true;
        }
        c.expect(rejected, "malformed input rejected");
    }
    return c;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
        {"construction signatures", criterion1},
        {"Petersen chain", criterion2},
        {"pencil tightness and spectrum", criterion3},
        {"K_{k,k} family", criterion4},
        {"walk-polynomial suite", criterion5},
        {"moment identities", criterion6},
        {"vertex cycle cap sharpness", criterion7},
        {"dfjr reproductions", criterion8},
        {"bound-branch identities", criterion9},
        {"graph6 round trip", criterion10},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Check c;
        try {
            c = criteria[i].second();
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failures += !c.ok();
        std::cout << (c.ok() ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << ": " << c.summary()
                  << " (" << std::fixed << std::setprecision(2) << secs << " s)\n";
    }
    return failures == 0 ? 0 : 1;
}
