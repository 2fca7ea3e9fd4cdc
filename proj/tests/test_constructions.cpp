#include "doctest.h"
#include "egr/constructions.hpp"
#include "egr/graph6.hpp"

using namespace egr;

namespace {

EgrSignature verified(const Graph& g) {
    auto r = verify_egr(g);
    REQUIRE(std::holds_alternative<EgrSignature>(r));
    return std::get<EgrSignature>(r);
}

// The two colour classes coincide with the label kinds (points / blocks).
void check_bipartition_matches_labels(const Graph& g, const std::string& first_kind) {
    auto colours = bipartition(g);
    REQUIRE(colours.has_value());
    REQUIRE(g.labels().size() == g.order());
    const auto c0 = (*colours)[0];
    for (Vertex v = 0; v < g.order(); ++v) {
        const bool first = g.labels()[v].kind == first_kind;
        CHECK(((*colours)[v] == c0) == first);
    }
}

}  // namespace

TEST_CASE("field_of_order") {
    CHECK(field_of_order(4).order() == 4);
    CHECK(field_of_order(9).characteristic() == 3);
    CHECK_THROWS_AS(field_of_order(6), std::invalid_argument);
    CHECK_THROWS_AS(field_of_order(1), std::invalid_argument);
}

TEST_CASE("biaffine planes") {
    for (std::uint32_t q : {3u, 4u, 5u}) {
        CAPTURE(q);
        auto f = field_of_order(q);
        auto g1 = build_biaffine(f, 1);
        CHECK(verified(g1) == EgrSignature{2 * q * q, q, 6, (q - 1) * (q - 1) * (q - 2), true});
        check_bipartition_matches_labels(g1, "point");
        auto g2 = build_biaffine(f, 2);
        CHECK(verified(g2) == EgrSignature{2 * q * q - 2, q, 6, (q - 1) * (q * q - 3 * q + 3), true});
        check_bipartition_matches_labels(g2, "point");
    }
    CHECK(verified(build_biaffine(field_of_order(3), 1)) == EgrSignature{18, 3, 6, 4, true});
    CHECK(verified(build_biaffine(field_of_order(3), 2)) == EgrSignature{16, 3, 6, 6, true});
    CHECK(verified(build_biaffine(field_of_order(4), 1)) == EgrSignature{32, 4, 6, 18, true});
    CHECK_THROWS_AS(build_biaffine(field_of_order(2), 1), std::invalid_argument);
    CHECK_THROWS_AS(build_biaffine(field_of_order(3), 3), std::invalid_argument);
}

TEST_CASE("generalized quadrangle truncation") {
    for (std::uint32_t q : {3u, 4u}) {
        CAPTURE(q);
        auto g = build_gq_truncation(field_of_order(q));
        const std::uint64_t lambda = (q - 1) * (q - 1) * ((q - 2) * (q - 2) + 1);
        CHECK(verified(g) == EgrSignature{2ull * q * q * q, q, 8, lambda, true});
        check_bipartition_matches_labels(g, "point");
    }
    CHECK(verified(build_gq_truncation(field_of_order(3))) == EgrSignature{54, 3, 8, 8, true});
    CHECK(verified(build_gq_truncation(field_of_order(4))) == EgrSignature{128, 4, 8, 45, true});

    // deleted elements at q = 3: 1 + (q+1)q points and q+1+q^2 lines
    auto g = build_gq_truncation(field_of_order(3));
    std::size_t points = 0;
    for (const auto& l : g.labels()) points += l.kind == "point";
    CHECK(40 - points == 13);
    CHECK(40 - (g.order() - points) == 13);
    CHECK_THROWS_AS(build_gq_truncation(field_of_order(2)), std::invalid_argument);
}

TEST_CASE("ovoid-spread deletion") {
    auto g = build_ovoid_spread(field_of_order(4));
    CHECK(verified(g) == EgrSignature{136, 4, 8, 36, true});
    check_bipartition_matches_labels(g, "point");
    CHECK_THROWS_WITH_AS(build_ovoid_spread(field_of_order(3)), "ovoid does not exist for odd q", std::invalid_argument);
    CHECK_THROWS_AS(build_ovoid_spread(field_of_order(2)), std::invalid_argument);
}

TEST_CASE("pencil graph") {
    for (std::uint32_t q : {2u, 3u}) {
        CAPTURE(q);
        auto g = build_pencil_graph(field_of_order(q));
        const std::uint64_t n = q * q * q + q * q + q + 1;
        CHECK(verified(g) == EgrSignature{2 * n, q * q + q + 1, 4, q * q * q + q * q, true});
        check_bipartition_matches_labels(g, "point");
        // diagonal edges p ~ p'
        for (Vertex p = 0; p < n; ++p) CHECK(g.has_edge(p, static_cast<Vertex>(n + p)));
        for (Vertex r = 0; r < n; ++r) CHECK(g.degree(static_cast<Vertex>(n + r)) == q * q + q + 1);
    }
    CHECK(verified(build_pencil_graph(field_of_order(2))) == EgrSignature{30, 7, 4, 12, true});
    CHECK(verified(build_pencil_graph(field_of_order(3))) == EgrSignature{80, 13, 4, 36, true});
}

TEST_CASE("named graphs") {
    CHECK(verified(named_graph("petersen")) == EgrSignature{10, 3, 5, 4, false});
    CHECK(verified(named_graph("complete_bipartite(3)")) == EgrSignature{6, 3, 4, 4, true});
    auto hs = named_graph("hoffman_singleton");
    CHECK(hs.order() == 50);
    CHECK(verified(hs) == EgrSignature{50, 7, 5, 36, false});
    CHECK(named_graph("cycle(8)").size() == 8);
    CHECK_THROWS_AS(named_graph("dodecahedron"), std::invalid_argument);
    CHECK_THROWS_AS(named_graph("cycle(x)"), std::invalid_argument);
    CHECK_THROWS_AS(named_graph("cycle(2)"), std::invalid_argument);
}

TEST_CASE("builders are deterministic") {
    for (const auto& spec : std::vector<FamilySpec>{{Family::biaffine1, 4, ""},
                                                    {Family::biaffine2, 5, ""},
                                                    {Family::gq_truncation, 3, ""},
                                                    {Family::ovoid_spread, 4, ""},
                                                    {Family::pencil, 3, ""},
                                                    {Family::named, 0, "hoffman_singleton"}}) {
        auto a = build(spec);
        auto b = build(spec);
        CHECK(graph6_encode(a) == graph6_encode(b));
        CHECK(a.labels() == b.labels());
    }
}

TEST_CASE("family names") {
    CHECK(parse_family("pencil") == Family::pencil);
    CHECK(parse_family("gq_truncation") == Family::gq_truncation);
    CHECK_FALSE(parse_family("biaffine3").has_value());
    for (auto f : {Family::biaffine1, Family::biaffine2, Family::gq_truncation, Family::ovoid_spread, Family::pencil,
                   Family::named})
        CHECK(parse_family(to_string(f)) == f);
}
