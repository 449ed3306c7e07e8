#include "adaptcoord/error.hpp"
#include "adaptcoord/newton.hpp"
#include "adaptcoord/parse.hpp"
#include "adaptcoord/quasihomog.hpp"

#include "corpus.hpp"

#include <doctest.h>

#include <numeric>

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

// Random product x1^a x2^b prod (x2^q - lambda x1^p)^n with q <= p coprime, possibly
// times an irreducible (x2^q - lambda x1^p)^2 + x1^{2p} factor.
BiPoly random_weighted_product(testsupport::Rng& rng, long& q, long& p) {
    for (;;) {
        q = rng.uniform(1, 3);
        p = rng.uniform(static_cast<int>(q), 5);
        if (std::gcd(q, p) != 1) continue;
        BiPoly f = BiPoly::monomial(Rational(rng.nonzero(3)), rng.uniform(0, 3), rng.uniform(0, 3));
        int factors = rng.uniform(1, 3);
        for (int i = 0; i < factors; ++i) {
            BiPoly base = BiPoly::monomial(Rational(1), 0, static_cast<int>(q)) -
                          BiPoly::monomial(rng.small_rational(3, 2), static_cast<int>(p), 0);
            if (rng.uniform(0, 4) == 0) base = base * base + BiPoly::monomial(Rational(1), static_cast<int>(2 * p), 0);
            f = f * pow(base, static_cast<unsigned>(rng.uniform(1, 3)));
        }
        if (f.coeff(1, 0) != 0 || f.coeff(0, 1) != 0 || f.size() < 2) continue;
        return f;
    }
}

} // namespace

TEST_CASE("weight detection") {
    WeightDetection a = detect_weight(P("x2^2-2*x1^2*x2+x1^4"));
    REQUIRE(a.kind == WeightKind::Weight);
    CHECK(a.weight.kappa1 == make_rational(1, 4));
    CHECK(a.weight.kappa2 == make_rational(1, 2));
    CHECK(detect_weight(P("x1^3*x2^5")).kind == WeightKind::Monomial);
    CHECK(detect_weight(P("x1^2+x2^3+x1*x2^3")).kind == WeightKind::NotQuasiHomogeneous);
    // Collinear points on a line of positive slope are not quasi-homogeneous.
    CHECK(detect_weight(P("x1*x2+x1^2*x2^2")).kind == WeightKind::NotQuasiHomogeneous);
}

TEST_CASE("analysis of x1 x2 (x2 - x1^2)") {
    QuasiHomogData d = analyze(P("x1*x2^2-x1^3*x2"));
    CHECK(d.nu1 == 1);
    CHECK(d.nu2 == 1);
    CHECK(d.q == 1);
    CHECK(d.p == 2);
    CHECK(d.n == 1);
    CHECK(d.d_h == make_rational(5, 3));
    CHECK(d.d_h == make_rational(1 * 1 + 1 * 2 + 2 * 1 * 1, 1 + 2));
    CHECK(d.m_P == 1);
    CHECK(!d.principal_root);
}

TEST_CASE("analysis of (x2 - x1^2)^2") {
    QuasiHomogData d = analyze(P("x2^2-2*x1^2*x2+x1^4"));
    CHECK(d.nu1 == 0);
    CHECK(d.nu2 == 0);
    CHECK(d.q == 1);
    CHECK(d.p == 2);
    CHECK(d.n == 2);
    CHECK(d.d_h == make_rational(4, 3));
    CHECK(d.m_P == 2);
    REQUIRE(d.principal_root);
    CHECK(d.principal_root->b == 1);
    CHECK(d.principal_root->exponent == 2);
    REQUIRE(d.real_roots.size() == 1);
    CHECK(d.real_roots[0].rational == Rational(1));
    CHECK(d.real_roots[0].multiplicity == 2);
}

TEST_CASE("analysis of (x2^2 - x1^3)^2") {
    QuasiHomogData d = analyze(P("x2^4-2*x1^3*x2^2+x1^6"));
    CHECK(d.q == 2);
    CHECK(d.p == 3);
    CHECK(d.nu1 == 0);
    CHECK(d.nu2 == 0);
    CHECK(d.n == 2);
    CHECK(d.d_h == make_rational(0 + 0 + 6 * 2, 5));
    CHECK(d.m_P == 2);
    CHECK(!d.principal_root);
}

TEST_CASE("irrational real roots are reported by isolating intervals") {
    QuasiHomogData d = analyze(P("(x2^2-2*x1^2)*x2"));
    REQUIRE(d.real_roots.size() == 2);
    for (const auto& r : d.real_roots) {
        CHECK(!r.rational);
        CHECK(r.factor.degree() == 2);
        CHECK(count_real_roots(r.factor, r.interval.lo, r.interval.hi) == 1);
    }
    CHECK(d.real_roots[0].interval.hi <= d.real_roots[1].interval.lo);
}

TEST_CASE("analysis preconditions") {
    CHECK(code_of([] { analyze(P("x1^2+x2^3+x1*x2^3")); }) == ErrorCode::NotQuasiHomogeneous);
    CHECK(code_of([] { analyze(P("x1^2-x1*x2^2")); }) == ErrorCode::AxesNotNormalized);
    CHECK(code_of([] { analyze(P("x2-x1^2")); }) == ErrorCode::NonvanishingGradient);
}

TEST_CASE("quasi-homogeneous heights") {
    CHECK(height_qh(P("(x2-x1^2)^2")) == 2);
    CHECK(height_qh(P("x1*x2*(x2-x1^2)")) == make_rational(5, 3));
    CHECK(height_qh(P("(x2^2-x1^3)^2")) == make_rational(12, 5));
    CHECK(height_qh(P("x1^3*x2")) == 3);
    // Swapped orientation is normalized internally.
    CHECK(height_qh(P("(x1-x2^2)^2")) == 2);
}

TEST_CASE("shear vertex prediction") {
    ShearPrediction a = predict_shear_vertices(P("(x2-x1^2)^2"), Rational(1));
    CHECK(a.first == Vertex{0, 2});
    CHECK(a.last == Vertex{0, 2});
    ShearPrediction b = predict_shear_vertices(P("(x2-x1^2)^2"), Rational(2));
    CHECK(b.first == Vertex{0, 2});
    CHECK(b.last == Vertex{4, 0});
    ShearPrediction c = predict_shear_vertices(P("x1*x2*(x2-x1^2)"), Rational(1));
    CHECK(c.first == Vertex{1, 2});
    CHECK(c.last == Vertex{3, 1});
    // A pure x2 factor lands on the x1 axis after a shear by a non-root.
    ShearPrediction d = predict_shear_vertices(P("x1*x2^2*(x2-x1)"), Rational(3));
    CHECK(d.first == Vertex{1, 3});
    CHECK(d.last == Vertex{4, 0});
    CHECK(code_of([] { predict_shear_vertices(P("(x2^2-x1^3)^2"), Rational(1)); }) == ErrorCode::WrongHomogeneity);
}

TEST_CASE("property: homogeneous distance identity and multiplicity bounds") {
    testsupport::Rng rng(41);
    for (int trial = 0; trial < 300; ++trial) {
        long q = 0, p = 0;
        BiPoly f = random_weighted_product(rng, q, p);
        QuasiHomogData d = analyze(f);
        CHECK(d.q == q);
        CHECK(d.p == p);
        CHECK(1 / (d.weight.kappa1 + d.weight.kappa2) == d.d_h);
        CHECK(d.d_h == make_rational(d.nu1 * q + d.nu2 * p + p * q * d.n, q + p));
        int max_real = 0;
        int above = 0;
        for (const auto& r : d.real_roots) {
            max_real = std::max(max_real, r.multiplicity);
            if (q >= 2) CHECK(r.multiplicity < d.d_h);
            if (r.multiplicity > d.d_h) ++above;
        }
        CHECK(d.m_P == std::max({d.nu1, d.nu2, max_real}));
        if (d.nu1 > d.d_h) ++above;
        if (d.nu2 > d.d_h) ++above;
        CHECK(above <= 1);
        CHECK(height_qh(f) == std::max(Rational(d.m_P), d.d_h));
        CHECK(height_qh(f) == height_qh(swap_axes(f)));
        CHECK(d.principal_root.has_value() == (q == 1 && max_real > d.d_h));
    }
}

TEST_CASE("property: predicted shear vertices match the recomputed polyhedron") {
    testsupport::Rng rng(42);
    for (int trial = 0; trial < 300; ++trial) {
        auto s = testsupport::random_quasihomog(rng);
        Rational b = rng.coin() ? s.roots[rng.uniform(0, static_cast<int>(s.roots.size()) - 1)] : rng.small_rational(5, 4);
        ShearPrediction pred = predict_shear_vertices(s.P, b);
        auto vs = build_polyhedron(apply_shear(s.P, {ShearTarget::X2, b, s.m})).vertices();
        CHECK(pred.first == vs.front());
        CHECK(pred.last == vs.back());
    }
}

TEST_CASE("property: quasi-homogeneous height equals the best distance over grid shears") {
    testsupport::Rng rng(43);
    for (int trial = 0; trial < 150; ++trial) {
        auto s = testsupport::random_quasihomog(rng);
        std::vector<Rational> grid = s.roots;
        for (int extra = 0; extra < 3; ++extra) grid.push_back(rng.small_rational(4, 3));
        Rational best = distance(build_polyhedron(s.P));
        for (const auto& c : grid)
            for (int k = 1; k <= s.m; ++k)
                best = std::max(best, distance(build_polyhedron(apply_shear(s.P, {ShearTarget::X2, c, k}))));
        CHECK(height_qh(s.P) == best);
    }
}
