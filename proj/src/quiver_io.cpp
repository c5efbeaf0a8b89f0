#include "klr/quiver_io.hpp"

#include <sstream>

namespace klr {

namespace {

std::string label(const Arrow& a) { return "(" + std::to_string(a.i) + "," + std::to_string(a.j) + ")"; }

std::string tag_suffix(const std::set<int>& tags) {
    std::string s;
    for (int t : tags) s += (s.empty() ? "" : ",") + std::to_string(t);
    return s;
}

} // namespace

nlohmann::json to_json(const WeightQuiver& q) {
    nlohmann::json j;
    j["ell"] = q.ell;
    j["k"] = level(q.base);
    j["base"] = q.base;
    j["vertices"] = nlohmann::json::array();
    for (const MaxWeightEntry& v : q.vertices)
        j["vertices"].push_back({{"coeffs", v.weight}, {"x", v.x}, {"beta", v.beta.coeffs}});
    j["arrows"] = nlohmann::json::array();
    for (const Arrow& a : q.arrows) j["arrows"].push_back({{"src", a.src}, {"dst", a.dst}, {"label", {a.i, a.j}}});
    return j;
}

nlohmann::json to_json(const TQuiver& t) {
    nlohmann::json j = to_json(t.quiver);
    for (std::size_t v = 0; v < t.tags.size(); ++v)
        j["vertices"][v]["tags"] = std::vector<int>(t.tags[v].begin(), t.tags[v].end());
    return j;
}

WeightQuiver quiver_from_json(const nlohmann::json& j) {
    WeightQuiver q;
    q.ell = j.at("ell").get<int>();
    q.base = j.at("base").get<IntVec>();
    for (const auto& v : j.at("vertices")) {
        MaxWeightEntry entry;
        entry.weight = v.at("coeffs").get<IntVec>();
        entry.x = v.at("x").get<IntVec>();
        entry.beta = RootVector{v.at("beta").get<IntVec>()};
        const WeightCoeffs b = root_to_weight(entry.beta);
        entry.max_weight.lambda.resize(q.base.size());
        for (std::size_t i = 0; i < q.base.size(); ++i) entry.max_weight.lambda[i] = q.base[i] - b.lambda[i];
        entry.max_weight.delta = -b.delta;
        q.vertices.push_back(std::move(entry));
    }
    for (const auto& a : j.at("arrows")) {
        const auto lab = a.at("label").get<IntVec>();
        if (lab.size() != 2) throw Error(ErrorKind::ParameterRange, "arrow label must be a pair");
        q.arrows.push_back(Arrow{a.at("src").get<int>(), a.at("dst").get<int>(), lab[0], lab[1]});
    }
    return q;
}

std::string to_dot(const WeightQuiver& q, const std::string& name) {
    std::ostringstream os;
    os << "digraph " << name << " {\n";
    for (std::size_t v = 0; v < q.vertices.size(); ++v)
        os << "  v" << v << " [label=\"" << format_weight(q.vertices[v].weight) << "\"];\n";
    for (const Arrow& a : q.arrows)
        os << "  v" << a.src << " -> v" << a.dst << " [label=\"" << label(a) << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string to_dot(const TQuiver& t) {
    std::ostringstream os;
    os << "digraph T {\n";
    for (std::size_t v = 0; v < t.quiver.vertices.size(); ++v) {
        os << "  v" << v << " [label=\"" << format_weight(t.quiver.vertices[v].weight);
        if (!t.tags[v].empty()) os << "\\nT" << tag_suffix(t.tags[v]);
        os << "\"];\n";
    }
    for (const Arrow& a : t.quiver.arrows)
        os << "  v" << a.src << " -> v" << a.dst << " [label=\"" << label(a) << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string to_text(const WeightQuiver& q) {
    std::ostringstream os;
    os << "vertices " << q.vertices.size() << "\n";
    for (std::size_t v = 0; v < q.vertices.size(); ++v)
        os << "  " << v << "  " << format_weight(q.vertices[v].weight) << "  X=" << format_vector(q.vertices[v].x)
           << "\n";
    os << "arrows " << q.arrows.size() << "\n";
    for (const Arrow& a : q.arrows)
        os << "  " << format_weight(q.vertices[a.src].weight) << " --" << label(a) << "--> "
           << format_weight(q.vertices[a.dst].weight) << "\n";
    return os.str();
}

std::string to_text(const TQuiver& t) {
    std::ostringstream os;
    os << "vertices " << t.quiver.vertices.size() << "\n";
    for (std::size_t v = 0; v < t.quiver.vertices.size(); ++v) {
        os << "  " << v << "  " << format_weight(t.quiver.vertices[v].weight);
        os << "  T" << (t.tags[v].empty() ? std::string("-") : tag_suffix(t.tags[v]));
        os << "  beta=" << format_root(t.quiver.vertices[v].beta) << "\n";
    }
    os << "arrows " << t.quiver.arrows.size() << "\n";
    for (const Arrow& a : t.quiver.arrows)
        os << "  " << format_weight(t.quiver.vertices[a.src].weight) << " --" << label(a) << "--> "
           << format_weight(t.quiver.vertices[a.dst].weight) << "\n";
    return os.str();
}

} // namespace klr
