#pragma once

#include "adaptcoord/adaptedness.hpp"
#include "adaptcoord/bipoly.hpp"
#include "adaptcoord/newton.hpp"
#include "adaptcoord/puiseux.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace adaptcoord {

struct EdgeReport {
    Vertex left;
    Vertex right;
    Rational kappa1;
    Rational kappa2;
    friend bool operator==(const EdgeReport&, const EdgeReport&) = default;
};

struct WitnessReport {
    Rational b;
    int m = 0;
    friend bool operator==(const WitnessReport&, const WitnessReport&) = default;
};

struct ClusterSummary {
    Rational exponent;
    int count = 0;
    friend bool operator==(const ClusterSummary&, const ClusterSummary&) = default;
};

struct ClusterCheckReport {
    int nu1 = 0;
    int nu2 = 0;
    std::vector<ClusterSummary> clusters;
    bool vertices_match = false;
    bool distance_match = false;
    friend bool operator==(const ClusterCheckReport&, const ClusterCheckReport&) = default;
};

struct AnalysisReport {
    std::string input;
    std::string polynomial;
    std::vector<Monomial> support;
    std::vector<Vertex> vertices;
    Rational distance;
    FaceKind face_kind = FaceKind::Vertex;
    std::vector<Vertex> face_vertices;
    std::vector<EdgeReport> edges;

    bool adapted_input = false;
    bool condition_a = false;
    bool condition_b = false;
    bool condition_c = false;
    bool axis_swapped = false;
    std::optional<WitnessReport> witness;

    // Empty when adaptation was skipped.
    std::optional<AdaptStatus> status;
    std::optional<Rational> height;
    std::vector<JetTerm> jet;
    bool jet_truncated = false;
    bool jet_axis_swapped = false;
    std::vector<StepTrace> steps;
    std::optional<std::string> final_polynomial;
    std::vector<Vertex> final_vertices;

    // Empty when f does not involve x2.
    std::optional<ClusterCheckReport> cluster_check;

    friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

struct AnalyzeOptions {
    bool run_adapt = true;
    int max_steps = 64;
};

AnalysisReport analyze_polynomial(const std::string& input, const AnalyzeOptions& options);

std::string to_text(const AnalysisReport& r);

void to_json(nlohmann::json& j, const AnalysisReport& r);
void from_json(const nlohmann::json& j, AnalysisReport& r);

nlohmann::json cluster_level_to_json(const ClusterLevel& cl);

} // namespace adaptcoord
