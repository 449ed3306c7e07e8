#pragma once

#include "adaptcoord/rational.hpp"
#include "adaptcoord/unipoly.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace adaptcoord {

// Exponent pair (j, k) of the monomial x1^j x2^k.
struct Monomial {
    int j = 0;
    int k = 0;
    auto operator<=>(const Monomial&) const = default;
};

// Sparse polynomial in x1, x2 over Q; zero coefficients are never stored.
class BiPoly {
public:
    using Terms = std::map<Monomial, Rational>;

    BiPoly() = default;
    static BiPoly constant(const Rational& c);
    static BiPoly monomial(const Rational& c, int j, int k);
    static BiPoly x1() { return monomial(Rational(1), 1, 0); }
    static BiPoly x2() { return monomial(Rational(1), 0, 1); }

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    Rational coeff(int j, int k) const;
    void add_term(int j, int k, const Rational& c);

    // -1 for the zero polynomial.
    int degree_x1() const;
    int degree_x2() const;
    int total_degree() const;
    // Smallest j (resp. k) over the support; the largest powers of x1 (x2) dividing f.
    int order_x1() const;
    int order_x2() const;

    // Coefficient of x2^k as a polynomial in x1, and the full expansion in x2.
    UniPoly coeff_x2(int k) const;
    std::vector<UniPoly> as_poly_in_x2() const;
    static BiPoly from_poly_in_x2(const std::vector<UniPoly>& coeffs);

    Rational eval(const Rational& a, const Rational& b) const;
    double eval(double a, double b) const;
    BiPoly derivative_x1() const;
    BiPoly derivative_x2() const;

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const Rational& c, const BiPoly& a);
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
};

BiPoly pow(const BiPoly& f, unsigned exponent);

// Human-readable form accepted back by the expression parser, e.g. "x2^2 - 2*x1^2*x2 + x1^4".
std::string to_string(const BiPoly& f);

// Weight (kappa1, kappa2) with reduced form kappa_i = n_i / m, gcd(n1, n2, m) = 1.
struct Weight {
    Rational kappa1;
    Rational kappa2;
    long n1 = 0;
    long n2 = 0;
    long m = 0;

    static Weight from_kappa(const Rational& k1, const Rational& k2);
    Rational degree_of(int j, int k) const { return kappa1 * j + kappa2 * k; }
    // In the normalized orientation kappa1 <= kappa2: kappa1 = q/m, kappa2 = p/m.
    long q() const { return n1 < n2 ? n1 : n2; }
    long p() const { return n1 < n2 ? n2 : n1; }
    Weight swapped() const { return from_kappa(kappa2, kappa1); }
    friend bool operator==(const Weight& a, const Weight& b) { return a.kappa1 == b.kappa1 && a.kappa2 == b.kappa2; }
};

enum class ShearTarget {
    X2, // x2 <- x2 + b * x1^m
    X1, // x1 <- x1 + b * x2^m
};

struct ShearChange {
    ShearTarget target = ShearTarget::X2;
    Rational b;
    int m = 1;
    friend bool operator==(const ShearChange& a, const ShearChange& b) {
        return a.target == b.target && a.b == b.b && a.m == b.m;
    }
};

// Sorted exponent pairs; throws ZeroPolynomial for f = 0.
std::vector<Monomial> support(const BiPoly& f);

BiPoly weighted_part(const BiPoly& f, const Weight& w, const Rational& degree);
BiPoly apply_shear(const BiPoly& f, const ShearChange& s);
BiPoly swap_axes(const BiPoly& f);
// f(c1 * x1, c2 * x2).
BiPoly scale_axes(const BiPoly& f, const Rational& c1, const Rational& c2);

// Quotient of an exact division in Q[x1, x2]; throws InternalInvariantViolation otherwise.
BiPoly divide_exact(const BiPoly& a, const BiPoly& b);

struct BiFactor {
    BiPoly factor; // integer coefficients, primitive, positive leading coefficient
    int multiplicity;
};

struct X2SquarefreeDecomposition {
    BiPoly squarefree; // product of the factors
    BiPoly content;    // polynomial in x1 alone
    std::vector<BiFactor> factors; // multiplicities strictly increasing

    BiPoly expand() const;
};

// f = content * prod F_j^j with F_j squarefree and pairwise coprime in Q(x1)[x2].
X2SquarefreeDecomposition squarefree_part_x2(const BiPoly& f);

} // namespace adaptcoord
