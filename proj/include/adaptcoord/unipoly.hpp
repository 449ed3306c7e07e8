#pragma once

#include "adaptcoord/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace adaptcoord {

// Dense univariate polynomial over Q, coefficients lowest degree first.
// The zero polynomial has an empty coefficient vector.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);
    static UniPoly constant(const Rational& c);
    static UniPoly monomial(const Rational& c, int degree);
    // The linear polynomial y - root.
    static UniPoly linear_factor(const Rational& root);

    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& leading() const;
    Rational coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational eval(const Rational& y) const;
    double eval(double y) const;
    UniPoly derivative() const;
    UniPoly monic() const;
    // Integer coefficients with gcd one and positive leading coefficient.
    UniPoly primitive() const;

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const Rational& c, const UniPoly& a);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

    std::string to_string(const std::string& var = "y") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

UniPoly pow(const UniPoly& p, unsigned exponent);

// Euclidean division; b must be nonzero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
// Quotient of an exact division; throws InternalInvariantViolation otherwise.
UniPoly divide_exact(const UniPoly& a, const UniPoly& b);
// Monic greatest common divisor (zero only when both inputs are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

struct SquarefreeFactor {
    UniPoly factor; // monic, squarefree, positive degree
    int multiplicity;
};

struct SquarefreeDecomposition {
    Rational constant;
    std::vector<SquarefreeFactor> factors; // multiplicities strictly increasing

    UniPoly expand() const;
};

SquarefreeDecomposition squarefree_decompose(const UniPoly& p);

bool is_squarefree(const UniPoly& p);

// A half-open interval (lo, hi]; a missing endpoint stands for -inf / +inf.
struct RootInterval {
    std::optional<Rational> lo;
    std::optional<Rational> hi;
};

// Number of distinct real roots of a squarefree p in (lo, hi], by Sturm's theorem.
int count_real_roots(const UniPoly& p, const std::optional<Rational>& lo = std::nullopt,
                     const std::optional<Rational>& hi = std::nullopt);

// Disjoint bounded intervals (lo, hi], each holding exactly one real root of the
// squarefree p, in increasing order.
struct IsolatingInterval {
    Rational lo;
    Rational hi;
};
std::vector<IsolatingInterval> isolate_real_roots(const UniPoly& p);

// Shrinks an isolating interval of the squarefree p until its width is at most `width`.
IsolatingInterval refine_root(const UniPoly& p, IsolatingInterval iv, const Rational& width);

struct RationalRoot {
    Rational root;
    int multiplicity;
};

struct RationalRoots {
    std::vector<RationalRoot> roots; // increasing order
    UniPoly cofactor;                // input divided by prod (y - r)^mult
};

RationalRoots rational_roots(const UniPoly& p);

} // namespace adaptcoord
