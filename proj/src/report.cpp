#include "egr/report.hpp"

#include "egr/graph6.hpp"

namespace egr {

using nlohmann::json;

namespace {

template <class T>
json optional_json(const std::optional<T>& v) {
    if (!v) return nullptr;
    if constexpr (std::is_same_v<T, Rational>) {
        return rational_json(*v);
    } else {
        return v->str();
    }
}

}  // namespace

json rational_json(const Rational& r) {
    return {{"num", boost::multiprecision::numerator(r).str()},
            {"den", boost::multiprecision::denominator(r).str()},
            {"decimal", to_decimal(r, 6)}};
}

json signature_json(const EgrSignature& sig) {
    return {{"n", sig.n}, {"k", sig.k}, {"g", sig.g}, {"lambda", sig.lambda}, {"bipartite", sig.bipartite}};
}

json failure_json(const EgrFailure& f) {
    json out{{"kind", to_string(f.kind)}, {"message", f.message}};
    out["witness_vertex"] = f.witness_vertex ? json(*f.witness_vertex) : json(nullptr);
    out["witness_edge"] = f.witness_edge ? json::array({f.witness_edge->first, f.witness_edge->second}) : json(nullptr);
    if (f.kind == EgrFailureKind::lambda_not_constant) {
        out["min_lambda"] = f.min_lambda;
        out["max_lambda"] = f.max_lambda;
    }
    return out;
}

json result_json(const EgrResult& r) {
    if (const auto* sig = std::get_if<EgrSignature>(&r)) return {{"egr", true}, {"signature", signature_json(*sig)}};
    return {{"egr", false}, {"failure", failure_json(std::get<EgrFailure>(r))}};
}

json bounds_json(const BoundReport& b) {
    return {{"k", b.k},
            {"g", b.g},
            {"lambda", b.lambda},
            {"bipartite", b.bipartite},
            {"moore", b.moore.str()},
            {"dfjr", optional_json(b.dfjr)},
            {"egr4", optional_json(b.egr4)},
            {"spectral_even", optional_json(b.spectral_even)},
            {"spectral_odd", optional_json(b.spectral_odd)},
            {"vertex_cycle_cap", optional_json(b.vertex_cycle_cap)},
            {"best", b.best.str()},
            {"best_sources", b.best_sources},
            {"notes", b.notes}};
}

json verdict_json(const ExtremalVerdict& v) {
    return {{"certified", v.certified},
            {"n", v.n.str()},
            {"best", v.best.str()},
            {"gap", v.gap.str()},
            {"tight_bounds", v.tight_bounds},
            {"verdict", v.text}};
}

json spectrum_json(const Spectrum& s) {
    json groups = json::array();
    for (const auto& g : s.groups) groups.push_back({{"value", g.value}, {"multiplicity", g.multiplicity}});
    json out{{"groups", groups}, {"off_diagonal_norm", s.off_diagonal_norm}, {"sweeps", s.sweeps}};
    out["max"] = s.eigenvalues.empty() ? json(nullptr) : json(s.eigenvalues.front());
    out["min"] = s.eigenvalues.empty() ? json(nullptr) : json(s.eigenvalues.back());
    return out;
}

json moments_json(const MomentTable& m) {
    json out = json::array();
    for (const auto& v : m.moments) out.push_back(v.str());
    return out;
}

json graph_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    json labels = json::array();
    for (const auto& l : g.labels()) labels.push_back({{"kind", l.kind}, {"coords", l.coords}});
    return {{"n", g.order()}, {"edges", edges}, {"labels", labels}, {"graph6", graph6_encode(g)}};
}

}  // namespace egr
