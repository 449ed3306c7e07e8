#include "adaptcoord/adaptedness.hpp"
#include "adaptcoord/error.hpp"
#include "adaptcoord/parse.hpp"
#include "adaptcoord/quasihomog.hpp"

#include "corpus.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace adaptcoord;

namespace {

BiPoly P(const std::string& s) { return parse_polynomial(s); }

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::InternalInvariantViolation;
}

void check_trace(const AdaptResult& r) {
    for (std::size_t k = 0; k < r.steps.size(); ++k) {
        CHECK(r.height >= r.steps[k].d);
        if (k == 0) continue;
        CHECK(r.steps[k].d > r.steps[k - 1].d);
        CHECK(r.steps[k].N <= r.steps[k - 1].N);
        CHECK(r.steps[k].m > r.steps[k - 1].m);
    }
    for (std::size_t l = 1; l < r.jet.terms.size(); ++l) CHECK(r.jet.terms[l].m > r.jet.terms[l - 1].m);
}

} // namespace

TEST_CASE("adaptedness verdicts") {
    AdaptednessReport a = check_adapted(P("x1^2+x2^2"));
    CHECK(a.adapted);
    CHECK(a.condition_a);
    CHECK(a.condition_b);
    CHECK(!a.condition_c);

    AdaptednessReport b = check_adapted(P("(x2-x1^2)^2"));
    CHECK(!b.adapted);
    REQUIRE(b.witness);
    CHECK(b.witness->b == 1);
    CHECK(b.witness->exponent == 2);
    REQUIRE(b.principal_data);
    CHECK(b.principal_data->m_P == 2);

    AdaptednessReport c = check_adapted(P("(x2^2-x1^3)^2"));
    CHECK(c.adapted);
    CHECK(c.condition_a);
    CHECK(!c.condition_b);
    CHECK(c.weight.kappa1 == make_rational(1, 6));
    CHECK(c.weight.kappa2 == make_rational(1, 4));

    AdaptednessReport v = check_adapted(P("x1^2*x2^2+x1^5+x2^7"));
    CHECK(v.adapted);
    CHECK(!v.condition_a);
    CHECK(v.face.kind == FaceKind::Vertex);
    CHECK(v.weight.kappa1 == make_rational(1, 4));
    CHECK(v.weight.kappa2 == make_rational(1, 4));

    AdaptednessReport s = check_adapted(P("(x1-x2^2)^2"));
    CHECK(!s.adapted);
    CHECK(s.axis_swapped);
}

TEST_CASE("adaptedness preconditions") {
    CHECK(code_of([] { check_adapted(BiPoly()); }) == ErrorCode::NotFiniteType);
    CHECK(code_of([] { check_adapted(P("x1+x2^2")); }) == ErrorCode::NonvanishingGradient);
    CHECK(code_of([] { check_adapted(P("1+x1^2")); }) == ErrorCode::NonzeroAtOrigin);
}

TEST_CASE("single shear steps") {
    StepResult a = varchenko_step(P("(x2-x1^2)^2+x1^5"));
    CHECK(a.shear == ShearChange{ShearTarget::X2, Rational(1), 2});
    CHECK(a.f_next == P("x2^2+x1^5"));
    StepResult b = varchenko_step(P("(x2-x1^2)^2"));
    CHECK(b.f_next == P("x2^2"));
    StepResult c = varchenko_step(P("(x2*(1+x1)-x1^2)^2"));
    CHECK(c.shear == ShearChange{ShearTarget::X2, Rational(1), 2});
    CHECK(c.f_next == P("(x2*(1+x1)+x1^3)^2"));
    CHECK(code_of([] { varchenko_step(P("x1^2+x2^2")); }) == ErrorCode::AlreadyAdapted);
}

TEST_CASE("adapting (x2 - x1^2)^2 + x1^5") {
    AdaptResult r = adapt(P("(x2-x1^2)^2+x1^5"));
    CHECK(r.status == AdaptStatus::Terminated);
    REQUIRE(r.jet.terms.size() == 1);
    CHECK(r.jet.terms[0] == JetTerm{Rational(1), 2});
    CHECK(!r.jet.truncated);
    CHECK(r.height == make_rational(10, 7));
    CHECK(r.steps.size() == 1);
    CHECK(r.final_poly == P("x2^2+x1^5"));
    auto vs = build_polyhedron(r.final_poly).vertices();
    CHECK(vs == std::vector<Vertex>{{0, 2}, {5, 0}});
    Weight w = edge_weight({{0, 2}, {5, 0}});
    CHECK(w.kappa1 == make_rational(1, 5));
    CHECK(w.kappa2 == make_rational(1, 2));
}

TEST_CASE("adapting (x2 - x1^2)^2 ends on a horizontal face") {
    AdaptResult r = adapt(P("(x2-x1^2)^2"));
    CHECK(r.status == AdaptStatus::Terminated);
    CHECK(r.height == 2);
    REQUIRE(r.jet.terms.size() == 1);
    CHECK(r.jet.terms[0] == JetTerm{Rational(1), 2});
    CHECK(principal_face(build_polyhedron(r.final_poly)).kind == FaceKind::HorizontalHalfline);
}

TEST_CASE("the branch x2 = x1^2/(1+x1) is certified non-terminating") {
    AdaptResult r = adapt(P("(x2*(1+x1)-x1^2)^2"), 8);
    CHECK(r.status == AdaptStatus::NonterminatingCertified);
    CHECK(r.height == 2);
    CHECK(r.jet.truncated);
    REQUIRE(r.jet.terms.size() == 8);
    REQUIRE(r.steps.size() == 8);
    for (int k = 1; k <= 8; ++k) {
        // x1^2/(1+x1) = sum (-1)^l x1^{l+2}.
        CHECK(r.jet.terms[k - 1] == JetTerm{Rational(k % 2 == 1 ? 1 : -1), k + 1});
        CHECK(r.steps[k - 1].N == 2);
        CHECK(r.steps[k - 1].m == k + 1);
        int mk = k + 1;
        CHECK(r.steps[k - 1].d == make_rational(2 * mk, mk + 1));
        // Cross-check against the edge ((0,2),(2(mk),0)) of the current iterate.
        Weight w = edge_weight({{0, 2}, {2L * mk, 0}});
        CHECK(1 / (w.kappa1 + w.kappa2) == r.steps[k - 1].d);
    }
    check_trace(r);
}

TEST_CASE("a cap below the stabilization window is exceeded") {
    CHECK(code_of([] { adapt(P("(x2*(1+x1)-x1^2)^2"), 2); }) == ErrorCode::IterationCapExceeded);
}

TEST_CASE("heights of reference polynomials") {
    CHECK(height(P("x1^2+x2^2")) == 1);
    CHECK(height(P("x1*x2*(x2-x1^2)")) == make_rational(5, 3));
    CHECK(height(P("(x2-x1^2)^2+x1^5")) == make_rational(10, 7));
    CHECK(height(P("(x2^2-x1^3)^2")) == make_rational(12, 5));
    CHECK(height(P("x1^2*x2^2")) == 2);
    // Axis swapped variant: shear in x1.
    AdaptResult r = adapt(P("(x1-x2^2)^2+x2^5"));
    CHECK(r.axis_swapped);
    CHECK(r.height == make_rational(10, 7));
    CHECK(r.final_poly == P("x1^2+x2^5"));
}

TEST_CASE("the step cap default honours the environment") {
    ::unsetenv("ADAPTCOORD_MAX_STEPS");
    CHECK(default_max_steps() == 64);
    ::setenv("ADAPTCOORD_MAX_STEPS", "5", 1);
    CHECK(default_max_steps() == 5);
    ::setenv("ADAPTCOORD_MAX_STEPS", "five", 1);
    CHECK(code_of([] { default_max_steps(); }) == ErrorCode::InvalidArgument);
    ::unsetenv("ADAPTCOORD_MAX_STEPS");
}

TEST_CASE("property: adaptedness, height and traces over the random corpus") {
    auto corpus = testsupport::random_corpus(400, 51);
    for (const auto& f : corpus) {
        AdaptednessReport rep = check_adapted(f);
        CHECK(rep.adapted == !(rep.condition_a && rep.condition_b && rep.condition_c));
        AdaptResult r = adapt(f);
        Rational d = distance(build_polyhedron(f));
        CHECK(r.height >= d);
        CHECK((r.height == d) == rep.adapted);
        check_trace(r);

        BiPoly fp = principal_part(f);
        Rational bound = detect_weight(fp).kind == WeightKind::NotQuasiHomogeneous ? height(fp) : height_qh(fp);
        CHECK(r.height <= bound);

        if (!rep.adapted) {
            StepResult st = varchenko_step(f);
            CHECK(distance(build_polyhedron(st.f_next)) > d);
        }
        if (r.status == AdaptStatus::Terminated) {
            CHECK(r.final_poly == apply_jet(f, r.jet, r.axis_swapped));
            CHECK(check_adapted(r.final_poly).adapted);
            CHECK(r.height == distance(build_polyhedron(r.final_poly)));
            Face face = principal_face(build_polyhedron(r.final_poly));
            if (face.kind == FaceKind::CompactEdge && !r.jet.terms.empty()) {
                BiPoly g = r.axis_swapped ? swap_axes(r.final_poly) : r.final_poly;
                Weight w = face_weight(principal_face(build_polyhedron(g)));
                CHECK(Rational(r.jet.terms.back().m) < w.kappa2 / w.kappa1);
            }
        }
        X2SquarefreeDecomposition sq = squarefree_part_x2(f);
        bool squarefree = sq.factors.size() == 1 && sq.factors[0].multiplicity == 1 && sq.content.total_degree() == 0;
        if (squarefree) CHECK(r.status == AdaptStatus::Terminated);
    }
}

TEST_CASE("property: height and verdict are invariant under swaps and axis scaling") {
    testsupport::Rng rng(52);
    for (const auto& f : testsupport::random_corpus(300, 53)) {
        Rational h = height(f);
        bool adapted = check_adapted(f).adapted;
        CHECK(height(swap_axes(f)) == h);
        CHECK(check_adapted(swap_axes(f)).adapted == adapted);
        BiPoly g = scale_axes(f, rng.small_rational(3, 3), rng.small_rational(3, 3));
        CHECK(height(g) == h);
        CHECK(check_adapted(g).adapted == adapted);
    }
}
