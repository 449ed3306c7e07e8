#include "adaptcoord/report.hpp"

#include "adaptcoord/error.hpp"
#include "adaptcoord/parse.hpp"

#include <iomanip>
#include <sstream>

namespace adaptcoord {

using nlohmann::json;

AnalysisReport analyze_polynomial(const std::string& input, const AnalyzeOptions& options) {
    AnalysisReport r;
    r.input = input;
    BiPoly f = parse_polynomial(input);
    AdaptednessReport ar = check_adapted(f);
    r.polynomial = to_string(f);
    r.support = support(f);
    NewtonPolyhedron np = build_polyhedron(f);
    r.vertices = np.vertices();
    r.distance = distance(np);
    Face face = principal_face(np);
    r.face_kind = face.kind;
    r.face_vertices = {face.a};
    if (face.kind == FaceKind::CompactEdge) r.face_vertices.push_back(face.b);
    for (const auto& e : np.edges()) {
        Weight w = edge_weight(e);
        r.edges.push_back({e.left, e.right, w.kappa1, w.kappa2});
    }
    r.adapted_input = ar.adapted;
    r.condition_a = ar.condition_a;
    r.condition_b = ar.condition_b;
    r.condition_c = ar.condition_c;
    r.axis_swapped = ar.axis_swapped;
    if (ar.witness) r.witness = WitnessReport{ar.witness->b, ar.witness->exponent};

    if (options.run_adapt) {
        AdaptResult res = adapt(f, options.max_steps);
        r.status = res.status;
        r.height = res.height;
        r.jet = res.jet.terms;
        r.jet_truncated = res.jet.truncated;
        r.jet_axis_swapped = res.axis_swapped && !res.jet.terms.empty();
        r.steps = res.steps;
        r.final_polynomial = to_string(res.final_poly);
        r.final_vertices = build_polyhedron(res.final_poly).vertices();
    }

    if (f.degree_x2() > 0) {
        ClusterLevel cl = top_clusters(f);
        ClusterCheckReport cc;
        cc.nu1 = cl.nu1;
        cc.nu2 = cl.nu2;
        for (const auto& c : cl.clusters) cc.clusters.push_back({c.exponent, c.count});
        cc.vertices_match = vertices_from_clusters(cl) == r.vertices;
        cc.distance_match = distance_from_clusters(cl) == r.distance;
        r.cluster_check = cc;
    }
    return r;
}

namespace {

std::string vertex_text(const Vertex& v) { return "(" + std::to_string(v.A) + "," + std::to_string(v.B) + ")"; }

std::string jet_text(const std::vector<JetTerm>& jet, const std::string& var) {
    if (jet.empty()) return "0";
    // Increasing powers read best for a series.
    std::ostringstream os;
    bool first = true;
    for (const auto& t : jet) {
        Rational mag = abs(t.b);
        os << (t.b < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        if (mag != 1) os << to_string(mag) << "*";
        os << var << "^" << t.m;
        first = false;
    }
    return os.str();
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

} // namespace

std::string to_text(const AnalysisReport& r) {
    std::ostringstream os;
    os << "input:          " << r.input << "\n";
    os << "polynomial:     " << r.polynomial << "\n";
    os << "vertices:      ";
    for (const auto& v : r.vertices) os << " " << vertex_text(v);
    os << "\n";
    os << "distance:       " << to_string(r.distance) << "\n";
    os << "principal face: " << face_kind_name(r.face_kind);
    for (std::size_t i = 0; i < r.face_vertices.size(); ++i) os << (i ? "-" : " ") << vertex_text(r.face_vertices[i]);
    os << "\n";
    for (const auto& e : r.edges)
        os << "edge weight:    " << vertex_text(e.left) << "-" << vertex_text(e.right) << " kappa = ("
           << to_string(e.kappa1) << ", " << to_string(e.kappa2) << ")\n";
    os << "adapted:        " << yes_no(r.adapted_input) << " (a=" << yes_no(r.condition_a) << " b=" << yes_no(r.condition_b)
       << " c=" << yes_no(r.condition_c) << (r.axis_swapped ? ", axes swapped" : "") << ")\n";
    if (r.witness) os << "principal root: b = " << to_string(r.witness->b) << ", m = " << r.witness->m << "\n";
    if (r.status) {
        os << "height:         " << to_string(*r.height) << " (" << adapt_status_name(*r.status) << " after "
           << r.steps.size() << (r.steps.size() == 1 ? " step" : " steps") << ")\n";
        std::string var = r.jet_axis_swapped ? "x2" : "x1";
        os << "jet:            psi(" << var << ") = " << jet_text(r.jet, var) << (r.jet_truncated ? " + ..." : "") << "\n";
        for (std::size_t k = 0; k < r.steps.size(); ++k)
            os << std::left << std::setw(16) << ("step " + std::to_string(k + 1) + ":") << "N = " << r.steps[k].N << ", m = " << r.steps[k].m
               << ", d = " << to_string(r.steps[k].d) << "\n";
        os << "adapted form:   " << *r.final_polynomial << "\n";
        os << "final vertices:";
        for (const auto& v : r.final_vertices) os << " " << vertex_text(v);
        os << "\n";
    }
    if (r.cluster_check)
        os << "cluster check:  vertices " << (r.cluster_check->vertices_match ? "agree" : "DISAGREE") << ", distance "
           << (r.cluster_check->distance_match ? "agrees" : "DISAGREES") << "\n";
    return os.str();
}

namespace {

json vertex_json(const Vertex& v) { return json::array({v.A, v.B}); }
Vertex vertex_from(const json& j) { return {j.at(0).get<long>(), j.at(1).get<long>()}; }

json vertices_json(const std::vector<Vertex>& vs) {
    json a = json::array();
    for (const auto& v : vs) a.push_back(vertex_json(v));
    return a;
}
std::vector<Vertex> vertices_from(const json& j) {
    std::vector<Vertex> out;
    for (const auto& v : j) out.push_back(vertex_from(v));
    return out;
}

Rational rat_from(const json& j) { return parse_rational(j.get<std::string>()); }

FaceKind face_kind_from(const std::string& s) {
    for (FaceKind k : {FaceKind::Vertex, FaceKind::CompactEdge, FaceKind::HorizontalHalfline, FaceKind::VerticalHalfline})
        if (s == face_kind_name(k)) return k;
    raise(ErrorCode::InvalidArgument, "unknown face kind '" + s + "'");
}

AdaptStatus status_from(const std::string& s) {
    for (AdaptStatus st : {AdaptStatus::Terminated, AdaptStatus::NonterminatingCertified})
        if (s == adapt_status_name(st)) return st;
    raise(ErrorCode::InvalidArgument, "unknown status '" + s + "'");
}

} // namespace

void to_json(json& j, const AnalysisReport& r) {
    j = json::object();
    j["schema"] = "adaptcoord.analysis";
    j["version"] = 1;
    j["input"] = r.input;
    j["polynomial"] = r.polynomial;
    json sup = json::array();
    for (const auto& m : r.support) sup.push_back(json::array({m.j, m.k}));
    j["support"] = sup;
    j["vertices"] = vertices_json(r.vertices);
    j["distance"] = to_string(r.distance);
    j["principal_face"] = {{"kind", face_kind_name(r.face_kind)}, {"vertices", vertices_json(r.face_vertices)}};
    json edges = json::array();
    for (const auto& e : r.edges)
        edges.push_back({{"from", vertex_json(e.left)}, {"to", vertex_json(e.right)},
                         {"kappa", json::array({to_string(e.kappa1), to_string(e.kappa2)})}});
    j["edges"] = edges;
    j["adapted_input"] = r.adapted_input;
    j["conditions"] = {{"a", r.condition_a}, {"b", r.condition_b}, {"c", r.condition_c}};
    j["axis_swapped"] = r.axis_swapped;
    j["witness"] = r.witness ? json{{"b", to_string(r.witness->b)}, {"m", r.witness->m}} : json(nullptr);
    j["status"] = r.status ? json(adapt_status_name(*r.status)) : json("skipped");
    j["height"] = r.height ? json(to_string(*r.height)) : json(nullptr);
    json jet = json::array();
    for (const auto& t : r.jet) jet.push_back(json::array({to_string(t.b), t.m}));
    j["jet"] = jet;
    j["jet_truncated"] = r.jet_truncated;
    j["jet_axis_swapped"] = r.jet_axis_swapped;
    json steps = json::array();
    for (const auto& s : r.steps) steps.push_back({{"N", s.N}, {"m", s.m}, {"d", to_string(s.d)}});
    j["steps"] = steps;
    j["final_polynomial"] = r.final_polynomial ? json(*r.final_polynomial) : json(nullptr);
    j["final_vertices"] = vertices_json(r.final_vertices);
    if (r.cluster_check) {
        json cl = json::array();
        for (const auto& c : r.cluster_check->clusters) cl.push_back({{"exponent", to_string(c.exponent)}, {"count", c.count}});
        j["cluster_check"] = {{"nu1", r.cluster_check->nu1},
                              {"nu2", r.cluster_check->nu2},
                              {"clusters", cl},
                              {"vertices_match", r.cluster_check->vertices_match},
                              {"distance_match", r.cluster_check->distance_match}};
    } else {
        j["cluster_check"] = nullptr;
    }
}

void from_json(const json& j, AnalysisReport& r) {
    r = AnalysisReport{};
    r.input = j.at("input").get<std::string>();
    r.polynomial = j.at("polynomial").get<std::string>();
    for (const auto& m : j.at("support")) r.support.push_back({m.at(0).get<int>(), m.at(1).get<int>()});
    r.vertices = vertices_from(j.at("vertices"));
    r.distance = rat_from(j.at("distance"));
    r.face_kind = face_kind_from(j.at("principal_face").at("kind").get<std::string>());
    r.face_vertices = vertices_from(j.at("principal_face").at("vertices"));
    for (const auto& e : j.at("edges"))
        r.edges.push_back({vertex_from(e.at("from")), vertex_from(e.at("to")), rat_from(e.at("kappa").at(0)),
                           rat_from(e.at("kappa").at(1))});
    r.adapted_input = j.at("adapted_input").get<bool>();
    r.condition_a = j.at("conditions").at("a").get<bool>();
    r.condition_b = j.at("conditions").at("b").get<bool>();
    r.condition_c = j.at("conditions").at("c").get<bool>();
    r.axis_swapped = j.at("axis_swapped").get<bool>();
    if (!j.at("witness").is_null()) r.witness = WitnessReport{rat_from(j["witness"].at("b")), j["witness"].at("m").get<int>()};
    std::string status = j.at("status").get<std::string>();
    if (status != "skipped") r.status = status_from(status);
    if (!j.at("height").is_null()) r.height = rat_from(j["height"]);
    for (const auto& t : j.at("jet")) r.jet.push_back({rat_from(t.at(0)), t.at(1).get<int>()});
    r.jet_truncated = j.at("jet_truncated").get<bool>();
    r.jet_axis_swapped = j.at("jet_axis_swapped").get<bool>();
    for (const auto& s : j.at("steps")) r.steps.push_back({s.at("N").get<int>(), s.at("m").get<int>(), rat_from(s.at("d"))});
    if (!j.at("final_polynomial").is_null()) r.final_polynomial = j["final_polynomial"].get<std::string>();
    r.final_vertices = vertices_from(j.at("final_vertices"));
    if (!j.at("cluster_check").is_null()) {
        const json& c = j["cluster_check"];
        ClusterCheckReport cc;
        cc.nu1 = c.at("nu1").get<int>();
        cc.nu2 = c.at("nu2").get<int>();
        for (const auto& x : c.at("clusters")) cc.clusters.push_back({rat_from(x.at("exponent")), x.at("count").get<int>()});
        cc.vertices_match = c.at("vertices_match").get<bool>();
        cc.distance_match = c.at("distance_match").get<bool>();
        r.cluster_check = cc;
    }
}

namespace {

json cluster_json(const Cluster& c) {
    json out = {{"exponent", to_string(c.exponent)},
                {"count", c.count},
                {"q", c.q},
                {"p", c.p},
                {"edge_polynomial", c.edge_poly.to_string("y")},
                {"requires_algebraic_extension", c.requires_algebraic_extension}};
    json refs = json::array();
    for (const auto& r : c.refinements) {
        json sub = json::array();
        for (const auto& s : r.sub) sub.push_back(cluster_json(s));
        refs.push_back({{"coefficient", to_string(r.coefficient)},
                        {"multiplicity", r.multiplicity},
                        {"exact", r.exact},
                        {"sub_clusters", sub}});
    }
    out["refinements"] = refs;
    return out;
}

} // namespace

json cluster_level_to_json(const ClusterLevel& cl) {
    json clusters = json::array();
    for (const auto& c : cl.clusters) clusters.push_back(cluster_json(c));
    return {{"nu1", cl.nu1},
            {"nu2", cl.nu2},
            {"clusters", clusters},
            {"vertices", vertices_json(vertices_from_clusters(cl))},
            {"distance", to_string(distance_from_clusters(cl))}};
}

} // namespace adaptcoord
