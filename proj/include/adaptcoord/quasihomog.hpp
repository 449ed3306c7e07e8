#pragma once

#include "adaptcoord/bipoly.hpp"
#include "adaptcoord/newton.hpp"
#include "adaptcoord/unipoly.hpp"

#include <optional>
#include <vector>

namespace adaptcoord {

enum class WeightKind { Weight, Monomial, NotQuasiHomogeneous };

struct WeightDetection {
    WeightKind kind = WeightKind::NotQuasiHomogeneous;
    Weight weight; // meaningful for kind == Weight
};

WeightDetection detect_weight(const BiPoly& P);

// One real root lambda of Q(1, y); it describes the real curve x2^q = lambda x1^p.
struct RealRootClass {
    std::optional<Rational> rational; // exact value when the root is rational
    UniPoly factor;                   // squarefree factor of Q(1, y) vanishing at the root
    IsolatingInterval interval;       // (lo, hi] containing exactly this root of `factor`
    int multiplicity = 0;
};

struct PrincipalRoot {
    Rational b;
    int exponent = 0;
};

struct QuasiHomogData {
    Weight weight;
    long q = 0;
    long p = 0;
    long m = 0;
    int nu1 = 0;
    int nu2 = 0;
    int n = 0;    // degree of Q(1, y)
    int M = 0;    // distinct complex roots of Q(1, y)
    UniPoly q_poly; // Q(1, y)
    std::vector<RealRootClass> real_roots; // increasing order
    Rational d_h;
    int m_P = 0;
    std::optional<PrincipalRoot> principal_root;
};

// P quasi-homogeneous with kappa1 <= kappa2 and vanishing gradient at the origin; not a monomial.
QuasiHomogData analyze(const BiPoly& P);

// Quasi-homogeneous height max{m(P), d_h(P)}; axes are normalized internally.
// A monomial c x1^a x2^b has height max{a, b}.
Rational height_qh(const BiPoly& P);

struct ShearPrediction {
    Vertex first; // (A0, B0)
    Vertex last;  // (A1, B1)
    friend bool operator==(const ShearPrediction&, const ShearPrediction&) = default;
};

// Extreme vertices of the Newton diagram of P(x1, x2 + b x1^m) for P homogeneous
// with respect to the weight (1, m).
ShearPrediction predict_shear_vertices(const BiPoly& P, const Rational& b);

} // namespace adaptcoord
