#pragma once

#include "adaptcoord/bipoly.hpp"
#include "adaptcoord/newton.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace testsupport {

using adaptcoord::BiPoly;
using adaptcoord::Monomial;
using adaptcoord::Rational;
using adaptcoord::Vertex;

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
    bool coin() { return uniform(0, 1) == 1; }
    // Nonzero integer in [-bound, bound].
    int nonzero(int bound);
    Rational small_rational(int num_bound, int den_bound);

private:
    std::mt19937_64 eng_;
};

// Integer coefficients in [-5, 5], total degree <= 10, no terms of total degree < 2,
// positive degree in x2.
bool in_corpus_class(const BiPoly& f);

BiPoly random_sparse(Rng& rng);
// Products of binomial factors and shears of sparse polynomials, filtered by rejection.
BiPoly random_structured(Rng& rng);

// (x2 - psi(x1))^n plus higher-order terms: usually has a principal root.
BiPoly random_branch_power(Rng& rng);

// Cycles through sparse, structured and branch-power samples; deterministic for a given seed.
std::vector<BiPoly> random_corpus(std::size_t count, std::uint64_t seed);

// c x1^alpha x2^beta prod (x2 - lambda_i x1^m)^{n_i}, optionally times an
// irreducible (x2^2 + a x1^{2m}); homogeneous for the weight (1, m).
struct QuasiHomogSample {
    BiPoly P;
    int m = 1;
    std::vector<Rational> roots; // the lambda_i
};
QuasiHomogSample random_quasihomog(Rng& rng);

// Vertices of the Newton polyhedron by extremality tests over all support pairs.
std::vector<Vertex> oracle_vertices(const std::vector<Monomial>& support);

// Least t with (t, t) in conv(support) + quadrant, minimized over segments between support points.
Rational oracle_distance(const std::vector<Monomial>& support);

} // namespace testsupport
