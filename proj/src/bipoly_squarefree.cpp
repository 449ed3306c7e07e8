// Squarefree structure in x2 over Q(x1), computed in Q[x1][x2] with
// content / primitive-part normalization so that every quotient stays polynomial.
#include "adaptcoord/bipoly.hpp"

#include "adaptcoord/error.hpp"

namespace adaptcoord {

namespace {

using PX = std::vector<UniPoly>; // coefficients of x2^k, k = 0..deg

void trim(PX& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

int deg(const PX& a) { return static_cast<int>(a.size()) - 1; }

PX derivative(const PX& a) {
    PX d;
    for (std::size_t k = 1; k < a.size(); ++k) d.push_back(Rational(static_cast<long>(k)) * a[k]);
    trim(d);
    return d;
}

PX sub(const PX& a, const PX& b) {
    PX out(std::max(a.size(), b.size()));
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = out[k] + a[k];
    for (std::size_t k = 0; k < b.size(); ++k) out[k] = out[k] - b[k];
    trim(out);
    return out;
}

UniPoly content(const PX& a) {
    UniPoly g;
    for (const auto& c : a) g = gcd(g, c);
    return g;
}

PX primitive(const PX& a) {
    if (a.empty()) return a;
    UniPoly c = content(a);
    PX out;
    out.reserve(a.size());
    for (const auto& x : a) out.push_back(divide_exact(x, c));
    return out;
}

PX pseudo_remainder(PX a, const PX& b) {
    const UniPoly& lb = b.back();
    while (!a.empty() && deg(a) >= deg(b)) {
        UniPoly la = a.back();
        int shift = deg(a) - deg(b);
        for (auto& x : a) x = lb * x;
        for (int k = 0; k <= deg(b); ++k)
            a[static_cast<std::size_t>(k + shift)] = a[static_cast<std::size_t>(k + shift)] - la * b[static_cast<std::size_t>(k)];
        trim(a);
        a = primitive(a);
    }
    return a;
}

// Primitive gcd of the x2-primitive parts.
PX gcd_primitive(PX a, PX b) {
    a = primitive(a);
    b = primitive(b);
    if (deg(a) < deg(b)) std::swap(a, b);
    while (!b.empty()) {
        PX r = pseudo_remainder(a, b);
        a = std::move(b);
        b = primitive(r);
    }
    if (deg(a) <= 0) return PX{UniPoly::constant(Rational(1))};
    return a;
}

// Exact long division in x2; every leading-coefficient quotient must be exact in Q[x1].
PX divide_exact_px(PX a, const PX& b) {
    ensure(!b.empty(), "division by zero bivariate polynomial");
    if (deg(a) < deg(b)) {
        ensure(a.empty(), "inexact bivariate division");
        return {};
    }
    PX q(static_cast<std::size_t>(deg(a) - deg(b)) + 1);
    while (!a.empty() && deg(a) >= deg(b)) {
        int shift = deg(a) - deg(b);
        UniPoly c = divide_exact(a.back(), b.back());
        q[static_cast<std::size_t>(shift)] = c;
        for (int k = 0; k <= deg(b); ++k)
            a[static_cast<std::size_t>(k + shift)] = a[static_cast<std::size_t>(k + shift)] - c * b[static_cast<std::size_t>(k)];
        ensure(a.back().is_zero(), "bivariate division did not cancel the leading term");
        trim(a);
    }
    ensure(a.empty(), "inexact bivariate division");
    trim(q);
    return q;
}

// Integer coefficients, gcd one, positive coefficient at the largest (k, j).
BiPoly normalize_integer_primitive(const BiPoly& f) {
    Integer den_lcm(1), num_gcd(0);
    for (const auto& [e, c] : f.terms()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    }
    Rational scale = make_rational(den_lcm, num_gcd);
    Monomial lead{-1, -1};
    Rational lead_c;
    for (const auto& [e, c] : f.terms())
        if (e.k > lead.k || (e.k == lead.k && e.j > lead.j)) {
            lead = e;
            lead_c = c;
        }
    if (lead_c < 0) scale = -scale;
    return scale * f;
}

} // namespace

BiPoly divide_exact(const BiPoly& a, const BiPoly& b) {
    if (b.is_zero()) raise(ErrorCode::ZeroPolynomial, "division by zero polynomial");
    if (a.is_zero()) return {};
    return BiPoly::from_poly_in_x2(divide_exact_px(a.as_poly_in_x2(), b.as_poly_in_x2()));
}

BiPoly X2SquarefreeDecomposition::expand() const {
    BiPoly out = content;
    for (const auto& f : factors) out = out * pow(f.factor, static_cast<unsigned>(f.multiplicity));
    return out;
}

X2SquarefreeDecomposition squarefree_part_x2(const BiPoly& f) {
    if (f.is_zero()) raise(ErrorCode::ZeroPolynomial, "squarefree part of zero polynomial");
    if (f.degree_x2() <= 0) raise(ErrorCode::DegenerateInX2, "polynomial does not involve x2");
    X2SquarefreeDecomposition out;
    PX a = primitive(f.as_poly_in_x2());
    // Yun's algorithm; Gauss's lemma keeps each quotient in Q[x1][x2].
    PX b = derivative(a);
    PX c = gcd_primitive(a, b);
    PX w = divide_exact_px(a, c);
    PX y = divide_exact_px(b, c);
    PX z = sub(y, derivative(w));
    int i = 1;
    while (deg(w) > 0) {
        PX g = gcd_primitive(w, z);
        if (deg(g) > 0) out.factors.push_back({normalize_integer_primitive(BiPoly::from_poly_in_x2(g)), i});
        w = divide_exact_px(w, g);
        y = divide_exact_px(z, g);
        z = sub(y, derivative(w));
        ++i;
    }
    out.squarefree = BiPoly::constant(Rational(1));
    BiPoly product = BiPoly::constant(Rational(1));
    for (const auto& fac : out.factors) {
        out.squarefree = out.squarefree * fac.factor;
        product = product * pow(fac.factor, static_cast<unsigned>(fac.multiplicity));
    }
    out.content = divide_exact(f, product);
    ensure(out.content.degree_x2() == 0, "x2-content has positive degree in x2");
    return out;
}

} // namespace adaptcoord
