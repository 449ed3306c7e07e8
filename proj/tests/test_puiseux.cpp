#include "adaptcoord/error.hpp"
#include "adaptcoord/newton.hpp"
#include "adaptcoord/parse.hpp"
#include "adaptcoord/puiseux.hpp"

#include "corpus.hpp"

#include <doctest.h>

using namespace adaptcoord;

namespace {

BiPoly P(const std::string& s) { return parse_polynomial(s); }

ClusterLevel level(int nu1, int nu2, std::initializer_list<std::pair<Rational, int>> cs) {
    ClusterLevel cl;
    cl.nu1 = nu1;
    cl.nu2 = nu2;
    for (const auto& [a, n] : cs) {
        Cluster c;
        c.exponent = a;
        c.count = n;
        cl.clusters.push_back(c);
    }
    return cl;
}

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::InternalInvariantViolation;
}

} // namespace

TEST_CASE("top-level clusters") {
    ClusterLevel a = top_clusters(P("x1*x2^2-x1^3*x2"));
    CHECK(a.nu1 == 1);
    CHECK(a.nu2 == 1);
    REQUIRE(a.clusters.size() == 1);
    CHECK(a.clusters[0].exponent == 2);
    CHECK(a.clusters[0].count == 1);

    ClusterLevel b = top_clusters(P("(x2-x1^2)^2+x1^5"));
    CHECK(b.nu1 == 0);
    CHECK(b.nu2 == 0);
    REQUIRE(b.clusters.size() == 1);
    CHECK(b.clusters[0].exponent == 2);
    CHECK(b.clusters[0].count == 2);

    ClusterLevel c = top_clusters(P("x2^2-x1^3"));
    REQUIRE(c.clusters.size() == 1);
    CHECK(c.clusters[0].exponent == make_rational(3, 2));
    CHECK(c.clusters[0].count == 2);
    CHECK(c.clusters[0].q == 2);
    CHECK(c.clusters[0].p == 3);

    CHECK(code_of([] { top_clusters(P("x1^4")); }) == ErrorCode::DegenerateInX2);
    CHECK(code_of([] { top_clusters(P("x2^2+1")); }) == ErrorCode::NonzeroAtOrigin);
}

TEST_CASE("refinement along rational branches") {
    // Branches x2 = x1^2 + x1^3 (double) and x2 = -x1^2.
    BiPoly f = pow(P("x2-x1^2-x1^3"), 2) * P("x2+x1^2");
    ClusterLevel cl = top_clusters(f, 2);
    REQUIRE(cl.clusters.size() == 1);
    const Cluster& c = cl.clusters[0];
    CHECK(c.exponent == 2);
    CHECK(c.count == 3);
    REQUIRE(c.refinements.size() == 2);
    CHECK(c.refinements[0].coefficient == -1);
    CHECK(c.refinements[0].multiplicity == 1);
    CHECK(c.refinements[1].coefficient == 1);
    CHECK(c.refinements[1].multiplicity == 2);
    REQUIRE(c.refinements[1].sub.size() == 1);
    CHECK(c.refinements[1].sub[0].exponent == 3);
    CHECK(c.refinements[1].sub[0].count == 2);
    CHECK(c.requires_algebraic_extension == 0);

    ClusterLevel irr = top_clusters(P("(x2^2-2*x1^2)*(x2-x1)"), 2);
    REQUIRE(irr.clusters.size() == 1);
    CHECK(irr.clusters[0].requires_algebraic_extension == 2);
    REQUIRE(irr.clusters[0].refinements.size() == 1);
    CHECK(irr.clusters[0].refinements[0].coefficient == 1);
}

TEST_CASE("vertices from cluster data") {
    CHECK(vertices_from_clusters(level(1, 1, {{Rational(2), 1}})) == std::vector<Vertex>{{1, 2}, {3, 1}});
    CHECK(vertices_from_clusters(level(0, 0, {{make_rational(3, 2), 2}})) == std::vector<Vertex>{{0, 2}, {3, 0}});
    CHECK(vertices_from_clusters(level(0, 0, {{Rational(1), 2}})) == std::vector<Vertex>{{0, 2}, {2, 0}});
    CHECK(code_of([] { vertices_from_clusters(level(0, 0, {{make_rational(3, 2), 1}})); }) ==
          ErrorCode::NonIntegerVertex);
}

TEST_CASE("distance from cluster data") {
    CHECK(distance_from_clusters(level(1, 1, {{Rational(2), 1}})) == make_rational(5, 3));
    CHECK(distance_from_clusters(level(0, 0, {{Rational(2), 2}})) == make_rational(4, 3));
    CHECK(distance_from_clusters(level(0, 0, {{Rational(1), 2}})) == 1);
    // (A_1 + 2 B_1) / 3 with A_1 = 4, B_1 = 0.
    CHECK(make_rational(4 + 2 * 0, 3) == make_rational(4, 3));
}

TEST_CASE("edge principal parts from cluster data") {
    CHECK(edge_principal_part_from_clusters(P("x1*x2^2-x1^3*x2"), 1) == P("x1*x2^2-x1^3*x2"));
    CHECK(edge_principal_part_from_clusters(P("(x2-x1^2)^2+x1^5"), 1) == P("(x2-x1^2)^2"));
    BiPoly f = P("x2^2+x1*x2+x1^3");
    CHECK(edge_principal_part_from_clusters(f, 2) == P("x1*x2+x1^3"));
    CHECK(edge_principal_part_from_clusters(f, 1) == P("x2^2+x1*x2"));
    CHECK(code_of([&] { edge_principal_part_from_clusters(f, 3); }) == ErrorCode::IndexOutOfRange);
    CHECK(code_of([&] { edge_principal_part_from_clusters(f, 0); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("property: cluster data reproduces the polyhedron") {
    for (const auto& f : testsupport::random_corpus(400, 61)) {
        ClusterLevel cl = top_clusters(f);
        NewtonPolyhedron np = build_polyhedron(f);
        auto vs = vertices_from_clusters(cl);
        CHECK(vs == np.vertices());
        CHECK(distance_from_clusters(cl) == distance(np));
        for (std::size_t i = 1; i < cl.clusters.size(); ++i) CHECK(cl.clusters[i - 1].exponent < cl.clusters[i].exponent);
        int total = cl.nu2;
        for (const auto& c : cl.clusters) total += c.count;
        CHECK(total == vs.front().B);

        auto edges = np.edges();
        REQUIRE(edges.size() == cl.clusters.size());
        for (std::size_t l = 0; l < edges.size(); ++l) {
            Weight w = edge_weight(edges[l]);
            const Rational& a = cl.clusters[l].exponent;
            CHECK(w.kappa2 / w.kappa1 == a);
            CHECK(vs[l + 1].A + a * vs[l + 1].B == vs[l].A + a * vs[l].B);
            CHECK(edge_principal_part_from_clusters(f, static_cast<int>(l) + 1) == weighted_part(f, w, Rational(1)));
        }
    }
}

TEST_CASE("property: refined cluster counts add up") {
    for (const auto& f : testsupport::random_corpus(200, 62)) {
        ClusterLevel cl = top_clusters(f, 3);
        for (const auto& c : cl.clusters) {
            int sum = c.requires_algebraic_extension;
            for (const auto& r : c.refinements) {
                sum += r.multiplicity;
                int inner = r.exact;
                for (const auto& s : r.sub) {
                    CHECK(s.exponent > c.exponent);
                    inner += s.count;
                }
                if (c.q == 1) CHECK(inner == r.multiplicity);
            }
            CHECK(sum == c.count);
        }
    }
}
