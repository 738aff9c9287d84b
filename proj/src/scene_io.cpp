#include "curvemul/scene_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "curvemul/error.hpp"

namespace curvemul::scene {

using nlohmann::json;

namespace {

CurveId curve_id_of(const json& j) {
    // Curve ids are strings; bare integers in hand-written files are accepted.
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<std::int64_t>());
    throw Error(ErrorCode::MalformedInput, "curve id must be a string");
}

json to_json(const Scene& s) {
    json j;
    j["name"] = s.name;
    if (s.genus) j["genus"] = *s.genus;
    j["vertices"] = json::array();
    for (const auto& v : s.vertices) j["vertices"].push_back({{"id", v.id}, {"halfedges_ccw", v.halfedges_ccw}});
    j["edges"] = json::array();
    for (const auto& e : s.edges) {
        json je = {{"id", e.id}, {"half", {e.half[0], e.half[1]}}, {"curve", e.curve}};
        if (e.marker) je["marker"] = {e.marker->p, e.marker->q};
        j["edges"].push_back(std::move(je));
    }
    j["curves"] = json::array();
    for (const auto& c : s.curves) {
        json jc = {{"id", c.id}};
        if (c.expected_components) jc["components"] = *c.expected_components;
        j["curves"].push_back(std::move(jc));
    }
    if (!s.junctions.empty()) {
        j["junctions"] = json::array();
        for (const auto& jn : s.junctions) j["junctions"].push_back({{"halfedges_ccw", jn.halfedges_ccw}});
    }
    return j;
}

Scene from_json(const json& j) {
    Scene s;
    s.name = j.value("name", "");
    if (j.contains("genus")) s.genus = j.at("genus").get<std::int64_t>();
    for (const auto& jv : j.at("vertices"))
        s.vertices.push_back({jv.at("id").get<VertexId>(), jv.at("halfedges_ccw").get<std::vector<HalfEdgeId>>()});
    for (const auto& je : j.at("edges")) {
        Edge e;
        e.id = je.at("id").get<EdgeId>();
        const auto half = je.at("half").get<std::vector<HalfEdgeId>>();
        if (half.size() != 2) throw Error(ErrorCode::MalformedInput, "edge " + std::to_string(e.id) + " needs two halves");
        e.half = {half[0], half[1]};
        e.curve = curve_id_of(je.at("curve"));
        if (je.contains("marker") && !je.at("marker").is_null()) {
            const auto m = je.at("marker").get<std::vector<std::int64_t>>();
            if (m.size() != 2) throw Error(ErrorCode::MalformedInput, "marker must be [p, q]");
            e.marker = Marker{m[0], m[1]};
        }
        s.edges.push_back(std::move(e));
    }
    for (const auto& jc : j.at("curves")) {
        Curve c{curve_id_of(jc.at("id")), std::nullopt};
        if (jc.contains("components")) c.expected_components = jc.at("components").get<std::int64_t>();
        s.curves.push_back(std::move(c));
    }
    if (j.contains("junctions")) {
        for (const auto& jn : j.at("junctions")) {
            const auto hs = jn.at("halfedges_ccw").get<std::vector<HalfEdgeId>>();
            if (hs.size() != 4) throw Error(ErrorCode::MalformedInput, "junction needs four half-edges");
            s.junctions.push_back({{hs[0], hs[1], hs[2], hs[3]}});
        }
    }
    return s;
}

}  // namespace

std::string scene_to_text(const Scene& s) { return to_json(s).dump(2) + "\n"; }

Scene scene_from_text(std::string_view text) {
    try {
        return from_json(json::parse(text));
    } catch (const json::exception& e) {
        throw Error(ErrorCode::MalformedInput, e.what());
    }
}

Scene load_scene(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return scene_from_text(buf.str());
}

void save_scene(const Scene& s, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
    out << scene_to_text(s);
    if (!out) throw Error(ErrorCode::Io, "write failed for " + path.string());
}

}  // namespace curvemul::scene
