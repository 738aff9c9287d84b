#include "curvemul/dt.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "curvemul/checked.hpp"
#include "curvemul/error.hpp"

namespace curvemul::dt {

using nlohmann::json;

SlotRef parse_slot(std::string_view text) {
    const auto dot = text.rfind('.');
    if (dot == std::string_view::npos || dot == 0 || dot + 2 != text.size())
        throw Error(ErrorCode::UnknownSlot, "slot must look like 'pants.index', got '" + std::string(text) + "'");
    const char c = text[dot + 1];
    if (c < '0' || c > '2') throw Error(ErrorCode::UnknownSlot, "slot index must be 0, 1 or 2 in '" + std::string(text) + "'");
    return {std::string(text.substr(0, dot)), c - '0'};
}

namespace {

struct Layout {
    std::map<std::string, std::size_t> pants_index;
    // For each pants and slot: internal curve index, or -1 for boundary (then boundary index).
    std::vector<std::array<int, 3>> curve_at;
    std::vector<std::array<int, 3>> boundary_at;
    DecompositionInfo info;
};

Layout layout_of(const PantsDecomposition& d) {
    Layout l;
    for (std::size_t i = 0; i < d.pants.size(); ++i)
        if (!l.pants_index.emplace(d.pants[i], i).second)
            throw Error(ErrorCode::SlotReuse, "pants id '" + d.pants[i] + "' appears twice");
    l.curve_at.assign(d.pants.size(), {-1, -1, -1});
    l.boundary_at.assign(d.pants.size(), {-1, -1, -1});

    std::vector<std::size_t> parent(d.pants.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    for (std::size_t i = 0; i < d.gluing.size(); ++i) {
        std::array<std::size_t, 2> p{};
        for (int k = 0; k < 2; ++k) {
            const SlotRef& r = d.gluing[i][k];
            auto it = l.pants_index.find(r.pants);
            if (it == l.pants_index.end() || r.slot < 0 || r.slot > 2)
                throw Error(ErrorCode::UnknownSlot, "gluing " + std::to_string(i) + " names unknown slot " + r.to_string());
            p[k] = it->second;
            auto& cell = l.curve_at[p[k]][r.slot];
            if (cell >= 0) throw Error(ErrorCode::SlotReuse, "slot " + r.to_string() + " is glued twice");
            cell = static_cast<int>(i);
        }
        parent[find(p[0])] = find(p[1]);
    }

    for (std::size_t p = 0; p < d.pants.size(); ++p)
        for (int s = 0; s < 3; ++s)
            if (l.curve_at[p][s] < 0) {
                l.boundary_at[p][s] = static_cast<int>(l.info.boundary_slots.size());
                l.info.boundary_slots.push_back({d.pants[p], s});
            }

    const auto P = static_cast<std::int64_t>(d.pants.size());
    const auto B = static_cast<std::int64_t>(l.info.boundary_slots.size());
    const auto C = static_cast<std::int64_t>(d.gluing.size());
    if (P == 0) throw Error(ErrorCode::CountMismatch, "no pants");
    for (std::size_t p = 0; p < d.pants.size(); ++p)
        if (find(p) != find(0)) throw Error(ErrorCode::CountMismatch, "gluing leaves pants '" + d.pants[p] + "' disconnected");
    // chi = -P = 2 - 2g - B
    const std::int64_t twice_genus = 2 + P - B;
    if (twice_genus < 0 || twice_genus % 2 != 0 || 3 * P != 2 * C + B)
        throw Error(ErrorCode::CountMismatch, std::to_string(P) + " pants with " + std::to_string(B) +
                                                  " boundary slots do not form a surface");
    l.info.genus = twice_genus / 2;
    l.info.boundary_count = B;
    l.info.internal_curves = C;
    if (C != 3 * l.info.genus + B - 3)
        throw Error(ErrorCode::CountMismatch, "expected " + std::to_string(3 * l.info.genus + B - 3) + " pants curves");
    return l;
}

std::size_t slot_of(const DTCoords& x, std::size_t i) {
    if (i < 1 || i > x.m.size())
        throw Error(ErrorCode::UnknownCurveIndex,
                    "curve " + std::to_string(i) + " of " + std::to_string(x.m.size()) + " (curves are numbered from 1)");
    return i - 1;
}

}  // namespace

DecompositionInfo validate_decomposition(const PantsDecomposition& d) { return layout_of(d).info; }

void validate_coords(const PantsDecomposition& d, const DTCoords& x) {
    const Layout l = layout_of(d);
    const auto C = static_cast<std::size_t>(l.info.internal_curves);
    if (x.m.size() != C || x.t.size() != C || x.b.size() != l.info.boundary_slots.size())
        throw Error(ErrorCode::CountMismatch, "coordinates do not match the decomposition's " + std::to_string(C) +
                                                  " curves and " + std::to_string(l.info.boundary_slots.size()) +
                                                  " boundary slots");
    for (auto v : x.m)
        if (v < 0) throw Error(ErrorCode::NegativeIntersection, "m has a negative entry");
    for (auto v : x.b)
        if (v < 0) throw Error(ErrorCode::NegativeIntersection, "b has a negative entry");
    for (std::size_t p = 0; p < d.pants.size(); ++p) {
        std::int64_t sum = 0;
        for (int s = 0; s < 3; ++s)
            sum = checked::add(sum, l.curve_at[p][s] >= 0 ? x.m[l.curve_at[p][s]] : x.b[l.boundary_at[p][s]]);
        if (sum % 2 != 0)
            throw Error(ErrorCode::ParityViolation, "pants '" + d.pants[p] + "' sees odd total " + std::to_string(sum));
    }
    for (std::size_t i = 0; i < C; ++i)
        if (x.m[i] == 0 && x.t[i] < 0)
            throw Error(ErrorCode::NegativeTwistOnMissedCurve, "m_" + std::to_string(i) + " = 0 but t_" +
                                                                   std::to_string(i) + " = " + std::to_string(x.t[i]));
}

std::int64_t pants_curve_intersection(const DTCoords& x, std::size_t i) {
    return x.m[slot_of(x, i)];
}

DTCoords twist_multiply(const DTCoords& x, std::span<const std::int64_t> k) {
    if (k.size() != x.t.size())
        throw Error(ErrorCode::CountMismatch, "twist vector has " + std::to_string(k.size()) + " entries, expected " +
                                                  std::to_string(x.t.size()));
    DTCoords out = x;
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (k[i] == 0) continue;
        if (x.m[i] == 0)
            throw Error(ErrorCode::TwistOnMissedCurve, "cannot twist along curve " + std::to_string(i) + " with m = 0");
        out.t[i] = checked::add(out.t[i], k[i]);
    }
    return out;
}

DTCoords dehn_twist(const DTCoords& x, std::size_t i, torus::TwistDirection direction) {
    const std::size_t j = slot_of(x, i);
    DTCoords out = x;
    out.t[j] = direction == torus::TwistDirection::Positive ? checked::add(x.t[j], x.m[j])
                                                           : checked::sub(x.t[j], x.m[j]);
    return out;
}

std::vector<std::int64_t> solve_twists(const DTCoords& x1, const DTCoords& x2) {
    if (x1.m != x2.m || x1.b != x2.b || x1.t.size() != x2.t.size())
        throw Error(ErrorCode::IntersectionMismatch, "the two systems meet the pants curves or boundary differently");
    std::vector<std::int64_t> k(x1.t.size());
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (x1.m[i] == 0 && x1.t[i] != x2.t[i])
            throw Error(ErrorCode::MissedCurveTwistMismatch,
                        "curve " + std::to_string(i) + " is missed but the copy counts differ");
        k[i] = checked::sub(x1.t[i], x2.t[i]);
    }
    return k;
}

std::string dt_to_text(const DTFile& f) {
    json j;
    if (!f.name.empty()) j["name"] = f.name;
    j["pants"] = json::array();
    for (const auto& p : f.decomposition.pants) j["pants"].push_back({{"id", p}});
    j["gluing"] = json::array();
    for (const auto& g : f.decomposition.gluing) j["gluing"].push_back({g[0].to_string(), g[1].to_string()});
    j["m"] = f.coords.m;
    j["t"] = f.coords.t;
    j["b"] = f.coords.b;
    return j.dump(2) + "\n";
}

DTFile dt_from_text(std::string_view text) {
    try {
        const json j = json::parse(text);
        DTFile f;
        f.name = j.value("name", "");
        for (const auto& p : j.at("pants")) {
            const json& id = p.is_object() ? p.at("id") : p;
            f.decomposition.pants.push_back(id.is_string() ? id.get<std::string>() : std::to_string(id.get<std::int64_t>()));
        }
        for (const auto& g : j.at("gluing")) {
            const auto pair = g.get<std::vector<std::string>>();
            if (pair.size() != 2) throw Error(ErrorCode::MalformedInput, "gluing entries are pairs of slots");
            f.decomposition.gluing.push_back({parse_slot(pair[0]), parse_slot(pair[1])});
        }
        f.coords.m = j.value("m", std::vector<std::int64_t>{});
        f.coords.t = j.value("t", std::vector<std::int64_t>{});
        f.coords.b = j.value("b", std::vector<std::int64_t>{});
        return f;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::MalformedInput, e.what());
    }
}

DTFile load_dt(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return dt_from_text(buf.str());
}

void save_dt(const DTFile& f, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
    out << dt_to_text(f);
    if (!out) throw Error(ErrorCode::Io, "write failed for " + path.string());
}

PantsDecomposition genus2_decomposition() {
    return {{"P0", "P1"}, {{SlotRef{"P0", 0}, SlotRef{"P1", 0}},
                           {SlotRef{"P0", 1}, SlotRef{"P1", 1}},
                           {SlotRef{"P0", 2}, SlotRef{"P1", 2}}}};
}

PantsDecomposition one_holed_torus_decomposition() {
    return {{"P0"}, {{SlotRef{"P0", 1}, SlotRef{"P0", 2}}}};
}

PantsDecomposition pants_decomposition() { return {{"P0"}, {}}; }

}  // namespace curvemul::dt
