#include "adaptcoord/unipoly.hpp"

#include "adaptcoord/error.hpp"

#include <algorithm>
#include <sstream>

namespace adaptcoord {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, int degree) {
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::linear_factor(const Rational& root) {
    return UniPoly(std::vector<Rational>{-root, Rational(1)});
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& UniPoly::leading() const {
    if (coeffs_.empty()) raise(ErrorCode::ZeroPolynomial, "leading coefficient of zero polynomial");
    return coeffs_.back();
}

Rational UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<std::size_t>(i)];
}

Rational UniPoly::eval(const Rational& y) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * y + *it;
    return acc;
}

double UniPoly::eval(double y) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * y + it->get_d();
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
    return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    Rational inv = 1 / leading();
    return inv * *this;
}

UniPoly UniPoly::primitive() const {
    if (is_zero()) return *this;
    Integer den_lcm(1), num_gcd(0);
    for (const auto& c : coeffs_) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    }
    Rational scale = make_rational(den_lcm, num_gcd);
    if (leading() < 0) scale = -scale;
    return scale * *this;
}

UniPoly UniPoly::operator-() const {
    std::vector<Rational> v = coeffs_;
    for (auto& c : v) c = -c;
    return UniPoly(std::move(v));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
    return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UniPoly(std::move(v));
}

UniPoly operator*(const Rational& c, const UniPoly& a) {
    std::vector<Rational> v = a.coeffs_;
    for (auto& x : v) x *= c;
    return UniPoly(std::move(v));
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Rational mag = abs(c);
        os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        bool unit = mag == 1 && i > 0;
        if (!unit) os << adaptcoord::to_string(mag);
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

UniPoly pow(const UniPoly& p, unsigned exponent) {
    UniPoly out = UniPoly::constant(Rational(1));
    UniPoly base = p;
    while (exponent) {
        if (exponent & 1u) out = out * base;
        exponent >>= 1u;
        if (exponent) base = base * base;
    }
    return out;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) raise(ErrorCode::ZeroPolynomial, "division by zero polynomial");
    std::vector<Rational> rem = a.coeffs();
    int db = b.degree();
    if (a.degree() < db) return {UniPoly(), a};
    std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db) + 1);
    Rational inv = 1 / b.leading();
    for (int i = a.degree(); i >= db; --i) {
        Rational c = rem[static_cast<std::size_t>(i)] * inv;
        if (c == 0) continue;
        quo[static_cast<std::size_t>(i - db)] = c;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
    }
    return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly divide_exact(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divmod(a, b);
    ensure(r.is_zero(), "inexact univariate division");
    return q;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = divmod(x, y).second;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

UniPoly SquarefreeDecomposition::expand() const {
    UniPoly out = UniPoly::constant(constant);
    for (const auto& f : factors) out = out * pow(f.factor, static_cast<unsigned>(f.multiplicity));
    return out;
}

SquarefreeDecomposition squarefree_decompose(const UniPoly& p) {
    if (p.is_zero()) raise(ErrorCode::ZeroPolynomial, "squarefree decomposition of zero");
    SquarefreeDecomposition out;
    out.constant = p.leading();
    UniPoly a = p.monic();
    if (a.degree() == 0) return out;
    // Yun's algorithm.
    UniPoly b = a.derivative();
    UniPoly c = gcd(a, b);
    UniPoly w = divide_exact(a, c);
    UniPoly y = divide_exact(b, c);
    UniPoly z = y - w.derivative();
    int i = 1;
    while (w.degree() > 0) {
        UniPoly g = gcd(w, z);
        if (g.degree() > 0) out.factors.push_back({g, i});
        w = divide_exact(w, g);
        y = divide_exact(z, g);
        z = y - w.derivative();
        ++i;
    }
    return out;
}

bool is_squarefree(const UniPoly& p) {
    if (p.is_zero()) return false;
    return gcd(p, p.derivative()).degree() <= 0;
}

namespace {

std::vector<UniPoly> sturm_chain(const UniPoly& p) {
    std::vector<UniPoly> chain{p, p.derivative()};
    while (!chain.back().is_zero()) {
        UniPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    if (chain.back().is_zero()) chain.pop_back();
    return chain;
}

int variations(const std::vector<int>& signs) {
    int count = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

int variations_at(const std::vector<UniPoly>& chain, const std::optional<Rational>& x, bool at_minus_inf) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& q : chain) {
        if (x) {
            signs.push_back(sgn(q.eval(*x)));
        } else {
            int s = sgn(q.leading());
            if (at_minus_inf && q.degree() % 2 == 1) s = -s;
            signs.push_back(s);
        }
    }
    return variations(signs);
}

Rational cauchy_bound(const UniPoly& p) {
    Rational m(0);
    for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coeff(i) / p.leading())));
    return m + 1;
}

struct SturmCounter {
    std::vector<UniPoly> chain;
    int count(const std::optional<Rational>& lo, const std::optional<Rational>& hi) const {
        return variations_at(chain, lo, true) - variations_at(chain, hi, false);
    }
};

} // namespace

int count_real_roots(const UniPoly& p, const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
    if (p.is_zero()) raise(ErrorCode::ZeroPolynomial, "root count of zero polynomial");
    if (!is_squarefree(p)) raise(ErrorCode::NotSquarefree, "Sturm counting needs a squarefree polynomial");
    if (lo && hi && *lo >= *hi) return 0;
    if (p.degree() == 0) return 0;
    return SturmCounter{sturm_chain(p)}.count(lo, hi);
}

std::vector<IsolatingInterval> isolate_real_roots(const UniPoly& p) {
    if (p.is_zero()) raise(ErrorCode::ZeroPolynomial, "root isolation of zero polynomial");
    if (!is_squarefree(p)) raise(ErrorCode::NotSquarefree, "root isolation needs a squarefree polynomial");
    std::vector<IsolatingInterval> out;
    if (p.degree() <= 0) return out;
    SturmCounter sc{sturm_chain(p)};
    Rational bound = cauchy_bound(p);
    struct Pending {
        Rational lo, hi;
        int n;
    };
    std::vector<Pending> stack{{-bound, bound, sc.count(-bound, bound)}};
    while (!stack.empty()) {
        Pending cur = stack.back();
        stack.pop_back();
        if (cur.n == 0) continue;
        if (cur.n == 1) {
            out.push_back({cur.lo, cur.hi});
            continue;
        }
        Rational mid = (cur.lo + cur.hi) / 2;
        int left = sc.count(cur.lo, mid);
        stack.push_back({mid, cur.hi, cur.n - left});
        stack.push_back({cur.lo, mid, left});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
    return out;
}

IsolatingInterval refine_root(const UniPoly& p, IsolatingInterval iv, const Rational& width) {
    SturmCounter sc{sturm_chain(p)};
    while (iv.hi - iv.lo > width) {
        Rational mid = (iv.lo + iv.hi) / 2;
        if (sc.count(iv.lo, mid) == 1)
            iv.hi = mid;
        else
            iv.lo = mid;
    }
    return iv;
}

RationalRoots rational_roots(const UniPoly& p) {
    if (p.is_zero()) raise(ErrorCode::ZeroPolynomial, "rational roots of zero polynomial");
    RationalRoots out;
    UniPoly divisor = UniPoly::constant(Rational(1));
    for (const auto& f : squarefree_decompose(p).factors) {
        // A rational root r of the primitive form satisfies lc * r in Z, so an
        // isolating interval narrower than 1/lc holds at most one candidate.
        UniPoly g = f.factor.primitive();
        Rational lc = g.leading();
        Rational width = 1 / (2 * lc);
        for (auto iv : isolate_real_roots(g)) {
            iv = refine_root(g, iv, width);
            Rational scaled = iv.hi * lc;
            Rational cand = make_rational(adaptcoord::floor(scaled), lc.get_num());
            if (cand > iv.lo && g.eval(cand) == 0) {
                out.roots.push_back({cand, f.multiplicity});
                divisor = divisor * pow(UniPoly::linear_factor(cand), static_cast<unsigned>(f.multiplicity));
            }
        }
    }
    std::sort(out.roots.begin(), out.roots.end(), [](const auto& a, const auto& b) { return a.root < b.root; });
    out.cofactor = divide_exact(p, divisor);
    return out;
}

} // namespace adaptcoord
