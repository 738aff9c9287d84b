#include "curvemul/torus_scenes.hpp"

#include <boost/rational.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

#include "curvemul/checked.hpp"
#include "curvemul/error.hpp"

namespace curvemul::scene {

namespace {

using Q = boost::rational<std::int64_t>;

struct QVec {
    Q x, y;
    friend bool operator<(const QVec& a, const QVec& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }
    friend bool operator==(const QVec& a, const QVec& b) { return a.x == b.x && a.y == b.y; }
};

struct IVec {
    std::int64_t x, y;
};

Q floor_of(const Q& r) {
    const auto n = r.numerator();
    const auto d = r.denominator();  // always positive
    return Q(n >= 0 ? n / d : -((-n + d - 1) / d));
}

Q frac(const Q& r) { return r - floor_of(r); }

QVec mod1(const QVec& v) { return {frac(v.x), frac(v.y)}; }

Q det(const QVec& a, const IVec& b) { return a.x * b.y - a.y * b.x; }
Q det(const IVec& a, const QVec& b) { return b.y * a.x - b.x * a.y; }

/// (s, t) with a*s + b*t = gcd(a, b) = 1 for primitive (a, b).
IVec bezout(std::int64_t a, std::int64_t b) {
    std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        old_r = std::exchange(r, old_r - q * r);
        old_s = std::exchange(s, old_s - q * s);
        old_t = std::exchange(t, old_t - q * t);
    }
    if (old_r < 0) {
        old_s = -old_s;
        old_t = -old_t;
    }
    return {old_s, old_t};
}

struct Line {
    std::size_t family;
    QVec base;
    IVec dir;  // primitive
};

struct Hit {
    Q param;
    QVec point;
    HalfEdgeId out;
    HalfEdgeId in;
};

struct Retry {};

Scene build(const std::string& name, const std::vector<LineFamily>& families, int attempt) {
    std::vector<Line> lines;
    for (std::size_t f = 0; f < families.size(); ++f) {
        const auto& fam = families[f];
        const std::int64_t d = std::gcd(fam.p, fam.q);
        const IVec v{fam.p / d, fam.q / d};
        const IVec st = bezout(v.x, v.y);
        const IVec u{-st.y, st.x};  // det(v, u) = 1
        const auto fi = static_cast<std::int64_t>(f);
        const QVec offset = attempt == 0 ? QVec{Q(0), Q(0)}
                                         : QVec{Q(fi, 2 * attempt + 3), Q(fi * attempt, (2 * attempt + 5) * 7)};
        for (std::int64_t k = 0; k < d; ++k)
            lines.push_back({f, {offset.x + Q(k, d) * u.x, offset.y + Q(k, d) * u.y}, v});
    }

    Scene s;
    s.name = name;
    s.genus = 1;
    std::vector<std::vector<Hit>> hits(lines.size());
    std::set<QVec> points;
    HalfEdgeId next_he = 0;
    VertexId next_vertex = 0;

    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            const IVec v = lines[i].dir;
            const IVec w = lines[j].dir;
            const std::int64_t D = checked::det(v.x, v.y, w.x, w.y);
            const QVec gap{lines[j].base.x - lines[i].base.x, lines[j].base.y - lines[i].base.y};
            if (D == 0) {
                if (frac(det(v, gap)) == Q(0)) throw Retry{};  // coincident parallel lines
                continue;
            }
            const IVec st = bezout(w.x, w.y);
            const IVec n1{st.y, -st.x};  // det(n1, w) = 1
            for (std::int64_t jj = 0; jj < checked::abs(D); ++jj) {
                const QVec c{gap.x + jj * n1.x, gap.y + jj * n1.y};
                const Q t = frac(det(c, w) / D);
                const Q u = frac(-det(v, c) / D);
                const QVec x = mod1({lines[i].base.x + t * v.x, lines[i].base.y + t * v.y});
                const QVec y = mod1({lines[j].base.x + u * w.x, lines[j].base.y + u * w.y});
                if (!(x == y)) throw std::logic_error("torus_lines_scene: crossing parameters disagree");
                if (!points.insert(x).second) throw Retry{};  // triple point

                const HalfEdgeId i_out = next_he++, i_in = next_he++, j_out = next_he++, j_in = next_he++;
                Vertex vert{next_vertex++, {}};
                vert.halfedges_ccw = D > 0 ? std::vector<HalfEdgeId>{i_out, j_out, i_in, j_in}
                                           : std::vector<HalfEdgeId>{i_out, j_in, i_in, j_out};
                s.vertices.push_back(std::move(vert));
                hits[i].push_back({t, x, i_out, i_in});
                hits[j].push_back({u, y, j_out, j_in});
            }
        }
    }

    EdgeId next_edge = 0;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        auto& h = hits[i];
        const IVec v = lines[i].dir;
        if (h.empty()) {
            const HalfEdgeId out = next_he++, in = next_he++;
            s.vertices.push_back({next_vertex++, {out, in}});
            h.push_back({Q(0), mod1(lines[i].base), out, in});
        }
        std::sort(h.begin(), h.end(), [](const Hit& a, const Hit& b) { return a.param < b.param; });
        for (std::size_t k = 0; k < h.size(); ++k) {
            const Hit& a = h[k];
            const Hit& b = h[(k + 1) % h.size()];
            Q step = b.param - a.param;
            if (step <= Q(0)) step += Q(1);
            const Q mx = a.point.x + step * v.x - b.point.x;
            const Q my = a.point.y + step * v.y - b.point.y;
            if (mx.denominator() != 1 || my.denominator() != 1)
                throw std::logic_error("torus_lines_scene: non-integral edge marker");
            s.edges.push_back({next_edge++, {a.out, b.in}, families[lines[i].family].curve,
                               Marker{mx.numerator(), my.numerator()}});
        }
    }

    for (const auto& fam : families) s.curves.push_back({fam.curve, std::gcd(fam.p, fam.q)});
    return s;
}

}  // namespace

Scene torus_lines_scene(const std::string& name, const std::vector<LineFamily>& families) {
    std::set<CurveId> ids;
    for (const auto& f : families) {
        if (f.p == 0 && f.q == 0) throw Error(ErrorCode::InvalidClass, "curve '" + f.curve + "' has slope (0,0)");
        if (!ids.insert(f.curve).second) throw Error(ErrorCode::MalformedInput, "duplicate curve '" + f.curve + "'");
    }
    for (int attempt = 0; attempt < 64; ++attempt) {
        try {
            return build(name, families, attempt);
        } catch (const Retry&) {
        }
    }
    throw Error(ErrorCode::TriplePoint, "could not place the lines of '" + name + "' in general position");
}

Scene torus_grid_scene(std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s) {
    if ((p == 0 && q == 0) || (r == 0 && s == 0)) throw Error(ErrorCode::InvalidClass, "zero slope");
    if (checked::det(p, q, r, s) == 0)
        throw Error(ErrorCode::ParallelSlopes, "(" + std::to_string(p) + "," + std::to_string(q) + ") and (" +
                                                   std::to_string(r) + "," + std::to_string(s) + ") are parallel");
    const std::string name = "grid_" + std::to_string(p) + "_" + std::to_string(q) + "_" + std::to_string(r) +
                             "_" + std::to_string(s);
    return torus_lines_scene(name, {{"A", p, q}, {"B", r, s}});
}

}  // namespace curvemul::scene
