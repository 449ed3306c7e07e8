#include "adaptcoord/puiseux.hpp"

#include "adaptcoord/error.hpp"

#include <map>
#include <set>

namespace adaptcoord {

namespace {

struct Row {
    int v;       // smallest x1-exponent in the row
    Rational lc; // its coefficient
};

// x1-valuation table of the coefficients of x2^k.
std::map<int, Row> valuation_rows(const BiPoly& f) {
    std::map<int, Row> rows;
    for (const auto& [e, c] : f.terms()) {
        auto it = rows.find(e.k);
        if (it == rows.end() || e.j < it->second.v) rows[e.k] = {e.j, c};
    }
    return rows;
}

ClusterLevel clusters_impl(const BiPoly& f, int depth);

void refine(const BiPoly& f, Cluster& cl, int depth) {
    if (cl.q != 1) {
        cl.requires_algebraic_extension = cl.count;
        return;
    }
    RationalRoots rr = rational_roots(cl.edge_poly);
    int covered = 0;
    for (const auto& r : rr.roots) {
        ClusterRefinement ref;
        ref.coefficient = r.root;
        ref.multiplicity = r.multiplicity;
        covered += r.multiplicity;
        if (depth > 1) {
            BiPoly g = apply_shear(f, {ShearTarget::X2, r.root, static_cast<int>(cl.p)});
            ClusterLevel sub = clusters_impl(g, depth - 1);
            ref.exact = sub.nu2;
            int total = ref.exact;
            for (auto& c : sub.clusters) {
                if (c.exponent <= cl.exponent) continue;
                total += c.count;
                ref.sub.push_back(std::move(c));
            }
            ensure(total == ref.multiplicity, "sub-cluster counts do not add up");
        }
        cl.refinements.push_back(std::move(ref));
    }
    cl.requires_algebraic_extension = cl.count - covered;
}

ClusterLevel clusters_impl(const BiPoly& f, int depth) {
    auto rows = valuation_rows(f);
    ClusterLevel out;
    out.nu1 = rows.begin()->second.v;
    out.nu2 = rows.begin()->first;
    for (const auto& [k, r] : rows) out.nu1 = std::min(out.nu1, r.v);

    std::set<Rational> slopes;
    for (auto a = rows.begin(); a != rows.end(); ++a)
        for (auto b = std::next(a); b != rows.end(); ++b)
            if (a->second.v > b->second.v) slopes.insert(make_rational(a->second.v - b->second.v, b->first - a->first));

    for (const auto& a : slopes) {
        Rational best;
        std::vector<int> hits;
        for (const auto& [k, r] : rows) {
            Rational t = r.v + a * k;
            if (hits.empty() || t < best) {
                best = t;
                hits = {k};
            } else if (t == best) {
                hits.push_back(k);
            }
        }
        if (hits.size() < 2) continue;
        Cluster cl;
        cl.exponent = a;
        cl.count = hits.back() - hits.front();
        cl.q = a.get_den().get_si();
        cl.p = a.get_num().get_si();
        std::vector<Rational> coeffs(static_cast<std::size_t>(cl.count / cl.q) + 1);
        for (int k : hits) {
            ensure((k - hits.front()) % cl.q == 0, "edge row off the slope lattice");
            coeffs[static_cast<std::size_t>((k - hits.front()) / cl.q)] = rows.at(k).lc;
        }
        cl.edge_poly = UniPoly(std::move(coeffs));
        refine(f, cl, depth);
        out.clusters.push_back(std::move(cl));
    }
    return out;
}

} // namespace

ClusterLevel top_clusters(const BiPoly& f, int depth) {
    if (f.is_zero()) raise(ErrorCode::ZeroPolynomial, "clusters of zero polynomial");
    if (f.coeff(0, 0) != 0) raise(ErrorCode::NonzeroAtOrigin, "f(0,0) must vanish");
    if (f.degree_x2() <= 0) raise(ErrorCode::DegenerateInX2, "polynomial does not involve x2");
    if (depth < 1) raise(ErrorCode::InvalidArgument, "cluster depth must be positive");
    return clusters_impl(f, depth);
}

std::vector<Vertex> vertices_from_clusters(const ClusterLevel& cl) {
    long total = 0;
    for (const auto& c : cl.clusters) total += c.count;
    std::vector<Vertex> out{{cl.nu1, cl.nu2 + total}};
    Rational A(cl.nu1);
    long remaining = total;
    for (std::size_t l = 0; l < cl.clusters.size(); ++l) {
        const auto& c = cl.clusters[l];
        if (l > 0) ensure(c.exponent > cl.clusters[l - 1].exponent, "cluster exponents not increasing");
        A += c.exponent * c.count;
        remaining -= c.count;
        if (!is_integer(A)) raise(ErrorCode::NonIntegerVertex, "vertex abscissa " + to_string(A) + " is not an integer");
        out.push_back({A.get_num().get_si(), cl.nu2 + remaining});
    }
    return out;
}

Rational distance_from_clusters(const ClusterLevel& cl) {
    auto v = vertices_from_clusters(cl);
    Rational d = std::max(Rational(v.front().A), Rational(v.back().B));
    for (std::size_t l = 1; l < v.size(); ++l) {
        const Rational& a = cl.clusters[l - 1].exponent;
        Rational dl = (v[l].A + a * v[l].B) / (1 + a);
        if (dl > d) d = dl;
    }
    return d;
}

BiPoly edge_principal_part_from_clusters(const BiPoly& f, int l) {
    ClusterLevel cl = top_clusters(f);
    if (l < 1 || l > static_cast<int>(cl.clusters.size()))
        raise(ErrorCode::IndexOutOfRange, "edge index " + std::to_string(l) + " out of range");
    auto v = vertices_from_clusters(cl);
    const Cluster& c = cl.clusters[static_cast<std::size_t>(l - 1)];
    SquarefreeDecomposition sq = squarefree_decompose(c.edge_poly);
    BiPoly out = BiPoly::monomial(sq.constant, static_cast<int>(v[static_cast<std::size_t>(l - 1)].A),
                                  static_cast<int>(v[static_cast<std::size_t>(l)].B));
    for (const auto& g : sq.factors) {
        // x1^(p deg g) g(x2^q / x1^p)
        BiPoly h;
        int dg = g.factor.degree();
        for (int s = 0; s <= dg; ++s)
            h.add_term(static_cast<int>(c.p * (dg - s)), static_cast<int>(c.q * s), g.factor.coeff(s));
        out = out * pow(h, static_cast<unsigned>(g.multiplicity));
    }
    return out;
}

} // namespace adaptcoord
