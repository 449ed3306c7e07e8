#include "adaptcoord/bipoly.hpp"
#include "adaptcoord/error.hpp"
#include "adaptcoord/parse.hpp"

#include "corpus.hpp"

#include <doctest.h>

#include <set>

using namespace adaptcoord;

namespace {

BiPoly P(const std::string& s) { return parse_polynomial(s); }

std::vector<Monomial> M(std::initializer_list<std::pair<int, int>> pts) {
    std::vector<Monomial> out;
    for (auto [j, k] : pts) out.push_back({j, k});
    std::sort(out.begin(), out.end());
    return out;
}

// Evaluation oracle for a shear: f(x1, x2 + b x1^m) at an exact point.
Rational shear_eval(const BiPoly& f, const ShearChange& s, const Rational& a1, const Rational& a2) {
    if (s.target == ShearTarget::X2) return f.eval(a1, a2 + s.b * pow(a1, static_cast<unsigned>(s.m)));
    return f.eval(a1 + s.b * pow(a2, static_cast<unsigned>(s.m)), a2);
}

} // namespace

TEST_CASE("support of simple polynomials") {
    CHECK(support(P("x1^2 + x2^2")) == M({{2, 0}, {0, 2}}));
    // (x2 - x1^2)^2 = x2^2 - 2 x1^2 x2 + x1^4.
    BiPoly sq = P("(x2 - x1^2)^2");
    CHECK(support(sq) == M({{0, 2}, {2, 1}, {4, 0}}));
    CHECK(sq.coeff(2, 1) == -2);
    CHECK(support(P("x1*x2^2-x1^3*x2")) == M({{1, 2}, {3, 1}}));
    try {
        support(BiPoly());
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ZeroPolynomial);
    }
}

TEST_CASE("weighted parts") {
    Weight w = Weight::from_kappa(make_rational(1, 4), make_rational(1, 2));
    CHECK(weighted_part(P("(x2-x1^2)^2+x1^5"), w, Rational(1)) == P("x2^2-2*x1^2*x2+x1^4"));
    Weight half = Weight::from_kappa(make_rational(1, 2), make_rational(1, 2));
    CHECK(weighted_part(P("x1^2+x2^2"), half, Rational(1)) == P("x1^2+x2^2"));
    CHECK(weighted_part(P("x1^2+x2^3"), half, Rational(1)) == P("x1^2"));
    CHECK(weighted_part(P("x1^2+x2^3"), half, Rational(7)).is_zero());
}

TEST_CASE("weight reduction") {
    Weight w = Weight::from_kappa(make_rational(1, 4), make_rational(1, 2));
    CHECK(w.n1 == 1);
    CHECK(w.n2 == 2);
    CHECK(w.m == 4);
    CHECK(w.q() == 1);
    CHECK(w.p() == 2);
    Weight v = Weight::from_kappa(make_rational(1, 6), make_rational(1, 4));
    CHECK(v.n1 == 2);
    CHECK(v.n2 == 3);
    CHECK(v.m == 12);
    CHECK(v.swapped().kappa1 == make_rational(1, 4));
}

TEST_CASE("shears") {
    CHECK(apply_shear(P("(x2-x1^2)^2"), {ShearTarget::X2, Rational(1), 2}) == P("x2^2"));
    CHECK(apply_shear(P("x2^2+x1^5"), {ShearTarget::X2, Rational(1), 2}) == P("x2^2+2*x1^2*x2+x1^4+x1^5"));
    CHECK(apply_shear(P("(x1-x2^3)^2"), {ShearTarget::X1, Rational(1), 3}) == P("x1^2"));
}

TEST_CASE("axis swaps") {
    CHECK(swap_axes(P("x1^2*x2")) == P("x1*x2^2"));
    CHECK(swap_axes(P("x1^2+x1*x2+x2^2")) == P("x1^2+x1*x2+x2^2"));
    CHECK(swap_axes(P("x1^3+x2^2")) == P("x2^3+x1^2"));
}

TEST_CASE("squarefree structure in x2") {
    X2SquarefreeDecomposition a = squarefree_part_x2(P("(x2*(1+x1) - x1^2)^2"));
    REQUIRE(a.factors.size() == 1);
    CHECK(a.factors[0].factor == P("x2*(1+x1) - x1^2"));
    CHECK(a.factors[0].multiplicity == 2);

    X2SquarefreeDecomposition b = squarefree_part_x2(P("x2^2-x1^3"));
    REQUIRE(b.factors.size() == 1);
    CHECK(b.factors[0].factor == P("x2^2-x1^3"));
    CHECK(b.factors[0].multiplicity == 1);

    BiPoly f = P("x2*(x2-x1)^2");
    X2SquarefreeDecomposition c = squarefree_part_x2(f);
    REQUIRE(c.factors.size() == 2);
    CHECK(c.factors[0].factor == P("x2"));
    CHECK(c.factors[0].multiplicity == 1);
    CHECK(c.factors[1].factor == P("x2-x1"));
    CHECK(c.factors[1].multiplicity == 2);
    CHECK(c.squarefree == P("x2*(x2-x1)"));
    CHECK(c.expand() == f);

    try {
        squarefree_part_x2(P("x1^3"));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DegenerateInX2);
    }
}

TEST_CASE("property: shears invert exactly and match pointwise substitution") {
    testsupport::Rng rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        BiPoly f = testsupport::random_sparse(rng);
        ShearChange s{rng.coin() ? ShearTarget::X2 : ShearTarget::X1, rng.small_rational(3, 3), rng.uniform(1, 4)};
        BiPoly g = apply_shear(f, s);
        CHECK(apply_shear(g, {s.target, -s.b, s.m}) == f);
        Rational a1 = rng.small_rational(5, 4), a2 = rng.small_rational(5, 4);
        CHECK(g.eval(a1, a2) == shear_eval(f, s, a1, a2));
        if (s.target == ShearTarget::X2)
            CHECK(g.degree_x2() == f.degree_x2());
        else
            CHECK(g.degree_x1() == f.degree_x1());
    }
}

TEST_CASE("property: swap is an involution") {
    testsupport::Rng rng(22);
    for (int trial = 0; trial < 300; ++trial) {
        BiPoly f = trial % 2 ? testsupport::random_sparse(rng) : testsupport::random_structured(rng);
        CHECK(swap_axes(swap_axes(f)) == f);
        for (const auto& [mono, c] : f.terms()) CHECK(swap_axes(f).coeff(mono.k, mono.j) == c);
    }
}

TEST_CASE("property: weighted parts over all occurring degrees sum to f") {
    testsupport::Rng rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        BiPoly f = testsupport::random_sparse(rng);
        Weight w = Weight::from_kappa(make_rational(rng.uniform(1, 5), rng.uniform(1, 7)),
                                      make_rational(rng.uniform(1, 5), rng.uniform(1, 7)));
        std::set<Rational> degrees;
        for (const auto& [mono, c] : f.terms()) degrees.insert(w.degree_of(mono.j, mono.k));
        BiPoly sum;
        for (const auto& d : degrees) sum += weighted_part(f, w, d);
        CHECK(sum == f);
    }
}

TEST_CASE("property: scaling an axis keeps the support") {
    testsupport::Rng rng(24);
    for (int trial = 0; trial < 300; ++trial) {
        BiPoly f = testsupport::random_structured(rng);
        Rational c1 = rng.small_rational(4, 4), c2 = rng.small_rational(4, 4);
        BiPoly g = scale_axes(f, c1, c2);
        CHECK(support(g) == support(f));
        Rational a1 = rng.small_rational(3, 3), a2 = rng.small_rational(3, 3);
        CHECK(g.eval(a1, a2) == f.eval(c1 * a1, c2 * a2));
    }
}

TEST_CASE("property: squarefree structure re-expands and has squarefree factors") {
    testsupport::Rng rng(25);
    for (int trial = 0; trial < 150; ++trial) {
        BiPoly f = testsupport::random_structured(rng);
        X2SquarefreeDecomposition d = squarefree_part_x2(f);
        CHECK(d.expand() == f);
        for (const auto& fac : d.factors) {
            CHECK(fac.factor.degree_x2() > 0);
            X2SquarefreeDecomposition inner = squarefree_part_x2(fac.factor);
            REQUIRE(inner.factors.size() == 1);
            CHECK(inner.factors[0].multiplicity == 1);
        }
    }
}
