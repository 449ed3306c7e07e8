#pragma once

#include "adaptcoord/bipoly.hpp"
#include "adaptcoord/newton.hpp"
#include "adaptcoord/quasihomog.hpp"

#include <optional>
#include <vector>

namespace adaptcoord {

struct AdaptednessReport {
    bool adapted = true;
    bool condition_a = false; // principal face is a compact edge
    bool condition_b = false; // kappa2 / kappa1 is a positive integer
    bool condition_c = false; // m(f_p) > d(f), maximal root off the axes
    bool axis_swapped = false;
    Rational distance;
    Face face;     // principal face in the normalized orientation
    Weight weight; // face weight; kappa1 = kappa2 = 1/(2d) for a vertex face
    std::optional<PrincipalRoot> witness;
    // Factorization data of the principal part when the face is a compact edge.
    std::optional<QuasiHomogData> principal_data;
};

// f nonzero with no constant or linear terms.
AdaptednessReport check_adapted(const BiPoly& f);

struct StepResult {
    ShearChange shear;
    BiPoly f_next;
};

// One shear by the principal root; AlreadyAdapted when there is none.
StepResult varchenko_step(const BiPoly& f);

struct JetTerm {
    Rational b;
    int m = 0;
    friend bool operator==(const JetTerm&, const JetTerm&) = default;
};

struct RootJet {
    std::vector<JetTerm> terms;
    bool truncated = false;
};

struct StepTrace {
    int N = 0;
    int m = 0;
    Rational d; // distance before the step
    friend bool operator==(const StepTrace&, const StepTrace&) = default;
};

enum class AdaptStatus { Terminated, NonterminatingCertified };

const char* adapt_status_name(AdaptStatus s);

struct AdaptResult {
    // psi(x1) = sum b x1^m; with axis_swapped the roles of x1 and x2 are exchanged,
    // so the adapted coordinate is x1 - psi(x2).
    RootJet jet;
    bool axis_swapped = false;
    Rational height;
    // f after the full jet shear, written in the original variable names.
    BiPoly final_poly;
    std::vector<StepTrace> steps;
    AdaptStatus status = AdaptStatus::Terminated;
};

struct AdaptOptions {
    int max_steps = 64;
    // Trailing steps with constant N before certification is attempted.
    int stabilization_window = 3;
    // Return as soon as non-termination is certified instead of running to the cap.
    bool stop_when_certified = false;
};

// Step cap default, overridable through the ADAPTCOORD_MAX_STEPS environment variable.
int default_max_steps();

AdaptResult adapt(const BiPoly& f, const AdaptOptions& options);
AdaptResult adapt(const BiPoly& f, int max_steps);
AdaptResult adapt(const BiPoly& f);

Rational height(const BiPoly& f);

// Composite substitution x2 <- x2 + psi(x1) (or its mirror when swapped) applied to f.
BiPoly apply_jet(const BiPoly& f, const RootJet& jet, bool axis_swapped);

} // namespace adaptcoord
