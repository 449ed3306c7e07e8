#include "adaptcoord/adaptedness.hpp"

#include "adaptcoord/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace adaptcoord {

namespace {

void require_preconditions(const BiPoly& f) {
    if (f.is_zero()) raise(ErrorCode::NotFiniteType, "the zero polynomial has empty Taylor support");
    if (f.coeff(0, 0) != 0) raise(ErrorCode::NonzeroAtOrigin, "f(0,0) must vanish");
    if (f.coeff(1, 0) != 0 || f.coeff(0, 1) != 0) raise(ErrorCode::NonvanishingGradient, "f has a nonzero linear part");
}

AdaptednessReport check_normalized(const BiPoly& g) {
    NewtonPolyhedron np = build_polyhedron(g);
    AdaptednessReport rep;
    rep.distance = distance(np);
    rep.face = principal_face(np);
    switch (rep.face.kind) {
    case FaceKind::Vertex: {
        Rational k = 1 / (2 * rep.distance);
        rep.weight = Weight::from_kappa(k, k);
        rep.condition_b = true;
        return rep;
    }
    case FaceKind::HorizontalHalfline:
        rep.weight = Weight::from_kappa(Rational(0), make_rational(1, rep.face.a.B));
        return rep;
    case FaceKind::VerticalHalfline:
        rep.weight = Weight::from_kappa(make_rational(1, rep.face.a.A), Rational(0));
        return rep;
    case FaceKind::CompactEdge:
        break;
    }
    rep.weight = face_weight(rep.face);
    rep.condition_a = true;
    rep.condition_b = is_integer(Rational(rep.weight.kappa2 / rep.weight.kappa1));
    QuasiHomogData qd = analyze(face_part(g, rep.face));
    // Axis roots have order nu1, nu2 <= d on a compact principal edge, so
    // m(f_p) > d already forces the maximal-order roots off the axes.
    rep.condition_c = qd.m_P > rep.distance && qd.nu1 < qd.m_P && qd.nu2 < qd.m_P;
    rep.adapted = !(rep.condition_a && rep.condition_b && rep.condition_c);
    if (!rep.adapted) {
        ensure(qd.principal_root.has_value(), "non-adapted edge without a principal root");
        rep.witness = qd.principal_root;
    }
    rep.principal_data = std::move(qd);
    return rep;
}

bool needs_swap(const BiPoly& f) {
    Face face = principal_face(build_polyhedron(f));
    if (face.kind == FaceKind::VerticalHalfline) return true;
    if (face.kind != FaceKind::CompactEdge) return false;
    Weight w = face_weight(face);
    return w.kappa1 > w.kappa2;
}

int principal_multiplicity(const AdaptednessReport& rep) {
    ensure(rep.witness && rep.principal_data, "principal root data missing");
    for (const auto& cls : rep.principal_data->real_roots)
        if (cls.rational && *cls.rational == rep.witness->b) return cls.multiplicity;
    raise(ErrorCode::InternalInvariantViolation, "principal root not among the real roots");
}

// Degree bound for polynomial roots x2 = r(x1) of F: the exponent of r equals
// a slope of the upper Newton polygon of F, so it is at most that maximum.
long polynomial_root_degree_bound(const BiPoly& F) {
    auto rows = F.as_poly_in_x2();
    long bound = 0;
    for (std::size_t k1 = 0; k1 < rows.size(); ++k1) {
        if (rows[k1].is_zero()) continue;
        for (std::size_t k2 = k1 + 1; k2 < rows.size(); ++k2) {
            if (rows[k2].is_zero()) continue;
            Rational slope = make_rational(rows[k1].degree() - rows[k2].degree(), static_cast<long>(k2 - k1));
            Integer f = adaptcoord::floor(slope);
            if (f > bound) bound = f.get_si();
        }
    }
    return bound;
}

// Next term of the unique power-series root of a polynomial whose Newton
// polygon ends with an edge (A, 1) -- (A', 0).
std::optional<JetTerm> simple_branch_term(const BiPoly& G) {
    if (G.order_x2() > 0) return std::nullopt;
    NewtonPolyhedron np = build_polyhedron(G);
    const auto& v = np.vertices();
    if (v.size() < 2 || v.back().B != 0 || v[v.size() - 2].B != 1) return std::nullopt;
    long a = v[v.size() - 2].A, a_end = v.back().A;
    Rational c = -G.coeff(static_cast<int>(a_end), 0) / G.coeff(static_cast<int>(a), 1);
    return JetTerm{c, static_cast<int>(a_end - a)};
}

// Exact continuation of the principal branch on the squarefree factor that
// carries it; certifies that the branch is not a polynomial.
class BranchCertifier {
public:
    explicit BranchCertifier(const BiPoly& base) : base_(base) {}

    bool try_certify(const RootJet& jet, int N, const JetTerm& current) {
        if (!decomposition_) decomposition_ = squarefree_part_x2(base_);
        const BiPoly* factor = nullptr;
        for (const auto& f : decomposition_->factors)
            if (f.multiplicity == N) factor = &f.factor;
        if (!factor) return false;
        BiPoly G = apply_jet(*factor, jet, false);
        auto first = simple_branch_term(G);
        if (!first || !(*first == current)) return false;
        long bound = polynomial_root_degree_bound(*factor);
        BiPoly H = G;
        for (auto term = first; term; term = simple_branch_term(H)) {
            if (term->m > bound) {
                live_ = G;
                return true;
            }
            H = apply_shear(H, {ShearTarget::X2, term->b, term->m});
        }
        // The continuation stopped: the branch is a polynomial and the algorithm terminates.
        return false;
    }

    // Consumes the next branch term; it must coincide with the algorithm's step.
    void cross_check(const JetTerm& step) {
        auto term = simple_branch_term(*live_);
        ensure(term && *term == step, "Varchenko step disagrees with the branch continuation");
        live_ = apply_shear(*live_, {ShearTarget::X2, term->b, term->m});
    }

private:
    BiPoly base_;
    std::optional<X2SquarefreeDecomposition> decomposition_;
    std::optional<BiPoly> live_;
};

bool trailing_constant(const std::vector<StepTrace>& steps, int N, int window) {
    if (static_cast<int>(steps.size()) < window) return false;
    for (auto it = steps.rbegin(); it != steps.rbegin() + window; ++it)
        if (it->N != N) return false;
    return true;
}

} // namespace

AdaptednessReport check_adapted(const BiPoly& f) {
    require_preconditions(f);
    if (needs_swap(f)) {
        AdaptednessReport rep = check_normalized(swap_axes(f));
        rep.axis_swapped = true;
        return rep;
    }
    return check_normalized(f);
}

StepResult varchenko_step(const BiPoly& f) {
    AdaptednessReport rep = check_adapted(f);
    if (rep.adapted) raise(ErrorCode::AlreadyAdapted, "coordinates are already adapted");
    ShearChange s{rep.axis_swapped ? ShearTarget::X1 : ShearTarget::X2, rep.witness->b, rep.witness->exponent};
    BiPoly next = apply_shear(f, s);
    ensure(distance(build_polyhedron(next)) > rep.distance, "Varchenko step did not increase the distance");
    return {s, std::move(next)};
}

const char* adapt_status_name(AdaptStatus s) {
    return s == AdaptStatus::Terminated ? "terminated" : "nonterminating-certified";
}

int default_max_steps() {
    const char* env = std::getenv("ADAPTCOORD_MAX_STEPS");
    if (!env || !*env) return 64;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 0 || v > 1000000) raise(ErrorCode::InvalidArgument, std::string("bad ADAPTCOORD_MAX_STEPS '") + env + "'");
    return static_cast<int>(v);
}

BiPoly apply_jet(const BiPoly& f, const RootJet& jet, bool axis_swapped) {
    BiPoly out = f;
    for (const auto& t : jet.terms) out = apply_shear(out, {axis_swapped ? ShearTarget::X1 : ShearTarget::X2, t.b, t.m});
    return out;
}

AdaptResult adapt(const BiPoly& f, const AdaptOptions& options) {
    require_preconditions(f);
    AdaptResult result;
    result.axis_swapped = needs_swap(f);
    BiPoly g = result.axis_swapped ? swap_axes(f) : f;
    BranchCertifier certifier(g);
    bool certified = false;
    int certified_N = 0;
    AdaptednessReport rep = check_normalized(g);

    auto finish = [&](AdaptStatus status) {
        result.status = status;
        result.final_poly = result.axis_swapped ? swap_axes(g) : g;
        if (status == AdaptStatus::Terminated) {
            result.height = rep.distance;
        } else {
            result.height = Rational(certified_N);
            result.jet.truncated = true;
        }
        for (const auto& s : result.steps) ensure(result.height >= s.d, "height below a step distance");
        return result;
    };

    while (true) {
        if (rep.adapted) {
            ensure(!certified, "certified branch but the algorithm terminated");
            return finish(AdaptStatus::Terminated);
        }
        if (static_cast<int>(result.steps.size()) >= options.max_steps) {
            if (certified) return finish(AdaptStatus::NonterminatingCertified);
            raise(ErrorCode::IterationCapExceeded,
                  "no adapted coordinates after " + std::to_string(options.max_steps) + " steps");
        }
        JetTerm term{rep.witness->b, rep.witness->exponent};
        int N = principal_multiplicity(rep);
        if (!result.steps.empty()) {
            ensure(N <= result.steps.back().N, "principal multiplicity increased");
            ensure(term.m > result.steps.back().m, "jet exponents not increasing");
        }
        if (certified) {
            ensure(N == certified_N, "multiplicity changed after certification");
            certifier.cross_check(term);
        } else if (trailing_constant(result.steps, N, options.stabilization_window)) {
            auto* pd = &*rep.principal_data;
            bool single_root = rep.face.b.B == 0 && pd->M == 1 && pd->n == N;
            if (single_root && certifier.try_certify(result.jet, N, term)) {
                certified = true;
                certified_N = N;
                if (options.stop_when_certified) return finish(AdaptStatus::NonterminatingCertified);
                certifier.cross_check(term);
            }
        }
        result.steps.push_back({N, term.m, rep.distance});
        result.jet.terms.push_back(term);
        g = apply_shear(g, {ShearTarget::X2, term.b, term.m});
        // After the first step the principal face is flatter, so no further swap is needed.
        ensure(!needs_swap(g), "axis swap required after a shear");
        AdaptednessReport next = check_normalized(g);
        ensure(next.distance > rep.distance, "Varchenko step did not increase the distance");
        rep = std::move(next);
    }
}

AdaptResult adapt(const BiPoly& f, int max_steps) {
    AdaptOptions o;
    o.max_steps = max_steps;
    return adapt(f, o);
}

AdaptResult adapt(const BiPoly& f) { return adapt(f, default_max_steps()); }

Rational height(const BiPoly& f) {
    AdaptOptions o;
    o.max_steps = default_max_steps();
    o.stop_when_certified = true;
    return adapt(f, o).height;
}

} // namespace adaptcoord
