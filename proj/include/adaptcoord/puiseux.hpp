#pragma once

#include "adaptcoord/bipoly.hpp"
#include "adaptcoord/newton.hpp"
#include "adaptcoord/unipoly.hpp"

#include <vector>

namespace adaptcoord {

struct Cluster;

// Roots of one cluster whose expansion starts with c * x1^a for a rational c.
struct ClusterRefinement {
    Rational coefficient;
    int multiplicity = 0; // roots with this leading term
    int exact = 0;        // roots equal to the jet so far (x2-order after the shear)
    std::vector<Cluster> sub; // clusters with exponent > a in the sheared frame
};

// Roots x2 = c x1^a + ... sharing the leading exponent a = p/q.
struct Cluster {
    Rational exponent;
    int count = 0; // roots with multiplicity
    long q = 1;
    long p = 1;
    // Edge polynomial Q(y): the cluster's part of f is x1^A x2^B Q(x2^q / x1^p) up to the monomial factor.
    UniPoly edge_poly;
    std::vector<ClusterRefinement> refinements;
    // Roots whose leading coefficient is irrational or complex (needs an algebraic extension).
    int requires_algebraic_extension = 0;
};

struct ClusterLevel {
    int nu1 = 0;
    int nu2 = 0; // trivial roots x2 = 0
    std::vector<Cluster> clusters; // strictly increasing exponents
};

// Clusters read from the x1-valuations of the x2-coefficients; depth > 1
// refines along rational branches.
ClusterLevel top_clusters(const BiPoly& f, int depth = 1);

std::vector<Vertex> vertices_from_clusters(const ClusterLevel& cl);
Rational distance_from_clusters(const ClusterLevel& cl);

// Principal part of f on its l-th compact edge (1-based), rebuilt from cluster data.
BiPoly edge_principal_part_from_clusters(const BiPoly& f, int l);

} // namespace adaptcoord
