#include "adaptcoord/quasihomog.hpp"

#include "adaptcoord/error.hpp"

#include <algorithm>

namespace adaptcoord {

WeightDetection detect_weight(const BiPoly& P) {
    auto pts = support(P);
    if (pts.size() == 1) return {WeightKind::Monomial, {}};
    auto [lo, hi] = std::minmax_element(pts.begin(), pts.end(), [](const Monomial& a, const Monomial& b) {
        return a.j != b.j ? a.j < b.j : a.k > b.k;
    });
    if (lo->j >= hi->j || lo->k <= hi->k) return {};
    Weight w = edge_weight({{lo->j, lo->k}, {hi->j, hi->k}});
    for (const auto& e : pts)
        if (w.degree_of(e.j, e.k) != 1) return {};
    return {WeightKind::Weight, w};
}

namespace {

struct Factorization {
    Weight weight;
    long q, p;
    int nu1, nu2, n;
    UniPoly q_poly;
};

// P = x1^nu1 x2^nu2 Q(x1^p, x2^q) with Q homogeneous of degree n; kappa1 <= kappa2.
Factorization factorize(const BiPoly& P, ErrorCode orientation_error) {
    WeightDetection det = detect_weight(P);
    if (det.kind == WeightKind::Monomial) raise(ErrorCode::NotQuasiHomogeneous, "a monomial has no unique weight");
    if (det.kind != WeightKind::Weight) raise(ErrorCode::NotQuasiHomogeneous, "support is not on a line of negative slope");
    if (det.weight.kappa1 > det.weight.kappa2)
        raise(orientation_error, "kappa1 > kappa2; swap axes first");
    Factorization out;
    out.weight = det.weight;
    out.q = det.weight.n1;
    out.p = det.weight.n2;
    out.nu1 = P.order_x1();
    out.nu2 = P.order_x2();
    int kmax = P.degree_x2() - out.nu2;
    ensure(kmax % out.q == 0, "x2-exponents not divisible by q");
    out.n = static_cast<int>(kmax / out.q);
    std::vector<Rational> coeffs(static_cast<std::size_t>(out.n) + 1);
    for (const auto& [e, c] : P.terms()) {
        long j = e.j - out.nu1, k = e.k - out.nu2;
        ensure(k % out.q == 0 && j % out.p == 0, "reduced exponents off the weight lattice");
        long s = k / out.q;
        ensure(j / out.p == out.n - s, "term off the homogeneous line");
        coeffs[static_cast<std::size_t>(s)] = c;
    }
    out.q_poly = UniPoly(std::move(coeffs));
    ensure(out.q_poly.degree() == out.n && out.q_poly.coeff(0) != 0, "Q(1, y) has wrong shape");
    return out;
}

void require_vanishing_gradient(const BiPoly& P) {
    if (P.coeff(0, 0) != 0) raise(ErrorCode::NonzeroAtOrigin, "polynomial does not vanish at the origin");
    if (P.coeff(1, 0) != 0 || P.coeff(0, 1) != 0)
        raise(ErrorCode::NonvanishingGradient, "polynomial has a nonzero linear part");
}

} // namespace

QuasiHomogData analyze(const BiPoly& P) {
    Factorization fz = factorize(P, ErrorCode::AxesNotNormalized);
    require_vanishing_gradient(P);
    QuasiHomogData out;
    out.weight = fz.weight;
    out.q = fz.q;
    out.p = fz.p;
    out.m = fz.weight.m;
    out.nu1 = fz.nu1;
    out.nu2 = fz.nu2;
    out.n = fz.n;
    out.q_poly = fz.q_poly;

    RationalRoots rr = rational_roots(fz.q_poly);
    int max_real = 0;
    for (const auto& f : squarefree_decompose(fz.q_poly).factors) {
        out.M += f.factor.degree();
        for (const auto& iv : isolate_real_roots(f.factor)) {
            RealRootClass cls;
            cls.factor = f.factor;
            cls.interval = iv;
            cls.multiplicity = f.multiplicity;
            for (const auto& r : rr.roots)
                if (r.multiplicity == f.multiplicity && r.root > iv.lo && r.root <= iv.hi) cls.rational = r.root;
            out.real_roots.push_back(cls);
            max_real = std::max(max_real, f.multiplicity);
        }
    }
    std::sort(out.real_roots.begin(), out.real_roots.end(),
              [](const auto& a, const auto& b) { return a.interval.lo < b.interval.lo; });

    out.d_h = make_rational(fz.nu1 * fz.q + fz.nu2 * fz.p + fz.p * fz.q * fz.n, fz.q + fz.p);
    ensure(out.d_h == 1 / (fz.weight.kappa1 + fz.weight.kappa2), "homogeneous distance identity failed");
    out.m_P = std::max({fz.nu1, fz.nu2, max_real});

    if (out.q == 1) {
        for (const auto& cls : out.real_roots) {
            if (cls.multiplicity <= out.d_h) continue;
            ensure(!out.principal_root, "two real roots exceed the homogeneous distance");
            if (!cls.rational) raise(ErrorCode::InternalInvariantViolation, "principal root is not rational");
            out.principal_root = PrincipalRoot{*cls.rational, static_cast<int>(out.p)};
        }
    }
    return out;
}

Rational height_qh(const BiPoly& P) {
    WeightDetection det = detect_weight(P);
    if (det.kind == WeightKind::Monomial) {
        require_vanishing_gradient(P);
        return Rational(std::max(P.order_x1(), P.order_x2()));
    }
    if (det.kind != WeightKind::Weight) raise(ErrorCode::NotQuasiHomogeneous, "support is not on a line of negative slope");
    QuasiHomogData d = analyze(det.weight.kappa1 > det.weight.kappa2 ? swap_axes(P) : P);
    return std::max(Rational(d.m_P), d.d_h);
}

ShearPrediction predict_shear_vertices(const BiPoly& P, const Rational& b) {
    if (b == 0) raise(ErrorCode::InvalidArgument, "shear coefficient must be nonzero");
    WeightDetection det = detect_weight(P);
    if (det.kind != WeightKind::Weight) raise(ErrorCode::WrongHomogeneity, "needs a non-monomial quasi-homogeneous polynomial");
    Factorization fz = factorize(P, ErrorCode::WrongHomogeneity);
    if (fz.q != 1) raise(ErrorCode::WrongHomogeneity, "weight is not of the form (1, m)");
    long m = fz.p, alpha = fz.nu1, beta = fz.nu2, N = fz.n;
    long root_mult = 0;
    UniPoly g = fz.q_poly;
    while (!g.is_zero() && g.eval(b) == 0) {
        ++root_mult;
        g = g.derivative();
    }
    ShearPrediction out;
    out.first = {alpha, beta + N};
    if (root_mult > 0)
        out.last = {alpha + m * beta + m * (N - root_mult), root_mult};
    else
        out.last = {alpha + m * beta + m * N, 0};
    return out;
}

} // namespace adaptcoord
