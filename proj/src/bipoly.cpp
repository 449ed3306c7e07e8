#include "adaptcoord/bipoly.hpp"

#include "adaptcoord/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace adaptcoord {

BiPoly BiPoly::constant(const Rational& c) { return monomial(c, 0, 0); }

BiPoly BiPoly::monomial(const Rational& c, int j, int k) {
    BiPoly f;
    f.add_term(j, k, c);
    return f;
}

Rational BiPoly::coeff(int j, int k) const {
    auto it = terms_.find({j, k});
    return it == terms_.end() ? Rational(0) : it->second;
}

void BiPoly::add_term(int j, int k, const Rational& c) {
    if (j < 0 || k < 0) raise(ErrorCode::InvalidArgument, "negative exponent");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace({j, k}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int BiPoly::degree_x1() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.j);
    return d;
}

int BiPoly::degree_x2() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.k);
    return d;
}

int BiPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.j + e.k);
    return d;
}

int BiPoly::order_x1() const {
    if (is_zero()) raise(ErrorCode::ZeroPolynomial, "order of zero polynomial");
    int d = terms_.begin()->first.j;
    for (const auto& [e, c] : terms_) d = std::min(d, e.j);
    return d;
}

int BiPoly::order_x2() const {
    if (is_zero()) raise(ErrorCode::ZeroPolynomial, "order of zero polynomial");
    int d = terms_.begin()->first.k;
    for (const auto& [e, c] : terms_) d = std::min(d, e.k);
    return d;
}

UniPoly BiPoly::coeff_x2(int k) const {
    std::vector<Rational> v;
    for (const auto& [e, c] : terms_) {
        if (e.k != k) continue;
        if (v.size() <= static_cast<std::size_t>(e.j)) v.resize(static_cast<std::size_t>(e.j) + 1);
        v[static_cast<std::size_t>(e.j)] = c;
    }
    return UniPoly(std::move(v));
}

std::vector<UniPoly> BiPoly::as_poly_in_x2() const {
    std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(degree_x2() + 1));
    for (const auto& [e, c] : terms_) {
        auto& row = rows[static_cast<std::size_t>(e.k)];
        if (row.size() <= static_cast<std::size_t>(e.j)) row.resize(static_cast<std::size_t>(e.j) + 1);
        row[static_cast<std::size_t>(e.j)] = c;
    }
    std::vector<UniPoly> out;
    out.reserve(rows.size());
    for (auto& row : rows) out.emplace_back(std::move(row));
    return out;
}

BiPoly BiPoly::from_poly_in_x2(const std::vector<UniPoly>& coeffs) {
    BiPoly f;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        for (int j = 0; j <= coeffs[k].degree(); ++j) f.add_term(j, static_cast<int>(k), coeffs[k].coeff(j));
    return f;
}

Rational BiPoly::eval(const Rational& a, const Rational& b) const {
    Rational acc(0);
    for (const auto& [e, c] : terms_) acc += c * pow(a, static_cast<unsigned>(e.j)) * pow(b, static_cast<unsigned>(e.k));
    return acc;
}

double BiPoly::eval(double a, double b) const {
    double acc = 0.0;
    for (const auto& [e, c] : terms_) acc += c.get_d() * std::pow(a, e.j) * std::pow(b, e.k);
    return acc;
}

BiPoly BiPoly::derivative_x1() const {
    BiPoly d;
    for (const auto& [e, c] : terms_)
        if (e.j > 0) d.add_term(e.j - 1, e.k, c * e.j);
    return d;
}

BiPoly BiPoly::derivative_x2() const {
    BiPoly d;
    for (const auto& [e, c] : terms_)
        if (e.k > 0) d.add_term(e.j, e.k - 1, c * e.k);
    return d;
}

BiPoly BiPoly::operator-() const {
    BiPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.j, e.k, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.j, e.k, -c);
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term(ea.j + eb.j, ea.k + eb.k, ca * cb);
    return out;
}

BiPoly operator*(const Rational& c, const BiPoly& a) {
    if (c == 0) return {};
    BiPoly out = a;
    for (auto& [e, x] : out.terms_) x *= c;
    return out;
}

BiPoly pow(const BiPoly& f, unsigned exponent) {
    BiPoly out = BiPoly::constant(Rational(1));
    BiPoly base = f;
    while (exponent) {
        if (exponent & 1u) out = out * base;
        exponent >>= 1u;
        if (exponent) base = base * base;
    }
    return out;
}

std::string to_string(const BiPoly& f) {
    if (f.is_zero()) return "0";
    std::vector<std::pair<Monomial, Rational>> order(f.terms().begin(), f.terms().end());
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        if (a.first.k != b.first.k) return a.first.k > b.first.k;
        return a.first.j < b.first.j;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : order) {
        Rational mag = abs(c);
        os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        bool constant = e.j == 0 && e.k == 0;
        bool unit = mag == 1 && !constant;
        std::vector<std::string> factors;
        if (!unit) factors.push_back(to_string(mag));
        if (e.j > 0) factors.push_back(e.j == 1 ? "x1" : "x1^" + std::to_string(e.j));
        if (e.k > 0) factors.push_back(e.k == 1 ? "x2" : "x2^" + std::to_string(e.k));
        for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
        first = false;
    }
    return os.str();
}

Weight Weight::from_kappa(const Rational& k1, const Rational& k2) {
    if (k1 < 0 || k2 < 0 || (k1 == 0 && k2 == 0)) raise(ErrorCode::InvalidArgument, "weight must be nonnegative and nonzero");
    Weight w;
    w.kappa1 = k1;
    w.kappa2 = k2;
    Integer m;
    mpz_lcm(m.get_mpz_t(), k1.get_den_mpz_t(), k2.get_den_mpz_t());
    Rational mr(m);
    w.m = to_long(mr);
    w.n1 = to_long(Rational(k1 * mr));
    w.n2 = to_long(Rational(k2 * mr));
    return w;
}

std::vector<Monomial> support(const BiPoly& f) {
    if (f.is_zero()) raise(ErrorCode::ZeroPolynomial, "support of zero polynomial");
    std::vector<Monomial> out;
    out.reserve(f.size());
    for (const auto& [e, c] : f.terms()) out.push_back(e);
    return out;
}

BiPoly weighted_part(const BiPoly& f, const Weight& w, const Rational& degree) {
    BiPoly out;
    for (const auto& [e, c] : f.terms())
        if (w.degree_of(e.j, e.k) == degree) out.add_term(e.j, e.k, c);
    return out;
}

BiPoly apply_shear(const BiPoly& f, const ShearChange& s) {
    if (s.b == 0 || s.m < 1) raise(ErrorCode::InvalidArgument, "shear needs b != 0 and m >= 1");
    if (s.target == ShearTarget::X1) return swap_axes(apply_shear(swap_axes(f), {ShearTarget::X2, s.b, s.m}));
    int kmax = std::max(f.degree_x2(), 0);
    std::vector<Rational> bpow(static_cast<std::size_t>(kmax) + 1);
    bpow[0] = 1;
    for (int i = 1; i <= kmax; ++i) bpow[static_cast<std::size_t>(i)] = bpow[static_cast<std::size_t>(i - 1)] * s.b;
    BiPoly out;
    Integer binom;
    for (const auto& [e, c] : f.terms()) {
        // c x1^j (x2 + b x1^m)^k = sum_i C(k, i) b^(k-i) c x1^(j + m(k-i)) x2^i
        for (int i = 0; i <= e.k; ++i) {
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(e.k), static_cast<unsigned long>(i));
            Rational term = c * bpow[static_cast<std::size_t>(e.k - i)];
            term *= Rational(binom);
            out.add_term(e.j + s.m * (e.k - i), i, term);
        }
    }
    return out;
}

BiPoly swap_axes(const BiPoly& f) {
    BiPoly out;
    for (const auto& [e, c] : f.terms()) out.add_term(e.k, e.j, c);
    return out;
}

BiPoly scale_axes(const BiPoly& f, const Rational& c1, const Rational& c2) {
    if (c1 == 0 || c2 == 0) raise(ErrorCode::InvalidArgument, "axis scaling by zero");
    BiPoly out;
    for (const auto& [e, c] : f.terms())
        out.add_term(e.j, e.k, c * pow(c1, static_cast<unsigned>(e.j)) * pow(c2, static_cast<unsigned>(e.k)));
    return out;
}

} // namespace adaptcoord
