#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "curvemul/corpus.hpp"
#include "curvemul/dt.hpp"
#include "curvemul/error.hpp"
#include "curvemul/scene.hpp"
#include "curvemul/scene_io.hpp"
#include "curvemul/torus.hpp"
#include "curvemul/torus_scenes.hpp"
#include "curvemul/verify.hpp"

using namespace curvemul;

namespace {

struct Range {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
};

Range parse_range(const std::string& text) {
    static const std::regex re(R"(\s*\(?\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*\)?\s*)");
    std::smatch m;
    if (!std::regex_match(text, m, re))
        throw Error(ErrorCode::MalformedInput, "range must look like 'a..b', got '" + text + "'");
    return {std::stoll(m[1]), std::stoll(m[2])};
}

// "-1,2" and "-2..2" look like short options to the parser; parenthesize them.
std::vector<std::string> shield_negative_arguments(int argc, char** argv) {
    static const std::regex looks_negative(R"(-\d+(,-?\d+|\.\.-?\d+))");
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (std::regex_match(a, looks_negative)) a = "(" + a + ")";
        args.push_back(std::move(a));
    }
    std::reverse(args.begin(), args.end());
    return args;
}

scene::SmoothingConvention convention_of(bool flipped) {
    return flipped ? scene::SmoothingConvention::Flipped : scene::SmoothingConvention::Standard;
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f || !(f << text)) throw Error(ErrorCode::Io, "cannot write " + out);
}

void print_census(const scene::Scene& s) {
    const auto census = scene::components(s);
    std::map<torus::TorusClass, std::int64_t> classes;
    bool markers = true;
    for (std::size_t i = 0; i < census.components.size(); ++i) {
        const auto& c = census.components[i];
        std::cout << "component " << i << " curve=" << c.curve << " edges=" << c.edges.size()
                  << " crossings=" << c.crossings;
        if (c.homology) {
            std::cout << " homology=(" << c.homology->p << "," << c.homology->q << ")";
            if (c.homology->p != 0 || c.homology->q != 0)
                ++classes[scene::torus_class_of_component(c).primitive()];
        } else {
            markers = false;
        }
        std::cout << "\n";
    }
    const auto trivial = scene::trivial_components(s);
    std::cout << "trivial_components=" << trivial.size() << "\n";
    if (markers)
        for (const auto& [c, k] : classes) std::cout << "class " << c.to_string() << " x" << k << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Resolution products of curve systems"};
    app.require_subcommand(1);

    // torus
    auto* torus_cmd = app.add_subcommand("torus", "Exact torus algebra")->require_subcommand(1);
    std::string class_a, class_b;
    auto* mul = torus_cmd->add_subcommand("mul", "Resolution product of two classes");
    mul->add_option("a", class_a, "x,y")->required();
    mul->add_option("b", class_b, "x,y")->required();
    auto* inter = torus_cmd->add_subcommand("int", "Geometric intersection number");
    inter->add_option("a", class_a)->required();
    inter->add_option("b", class_b)->required();
    std::string along, on;
    bool negative = false;
    auto* twist = torus_cmd->add_subcommand("twist", "Dehn twist along a simple loop");
    twist->add_option("--along", along)->required();
    twist->add_option("--on", on)->required();
    twist->add_flag("--neg", negative, "Negative twist");
    std::string alpha, beta, gamma, range = "-3..3";
    auto* profile = torus_cmd->add_subcommand("profile", "CSV of n, I(alpha^n beta, gamma)");
    profile->add_option("--alpha", alpha)->required();
    profile->add_option("--beta", beta)->required();
    profile->add_option("--gamma", gamma)->required();
    profile->add_option("--range", range)->capture_default_str();

    // scene
    auto* scene_cmd = app.add_subcommand("scene", "Combinatorial curve configurations")->require_subcommand(1);
    std::string file, from, to, out;
    bool flipped = false;
    auto* validate = scene_cmd->add_subcommand("validate", "Check invariants and report genus");
    validate->add_option("file", file)->required();
    auto* faces = scene_cmd->add_subcommand("faces", "List faces and their corner counts");
    faces->add_option("file", file)->required();
    auto* resolve = scene_cmd->add_subcommand("resolve", "Smooth every crossing between two curves");
    resolve->add_option("file", file)->required();
    resolve->add_option("--from", from)->required();
    resolve->add_option("--to", to)->required();
    resolve->add_option("--out", out, "Output file (default stdout)");
    auto* census = scene_cmd->add_subcommand("census", "Components, optionally after resolving");
    census->add_option("file", file)->required();
    census->add_option("--from", from);
    census->add_option("--to", to);
    auto* bigons = scene_cmd->add_subcommand("bigons", "Bigons between two curves");
    bigons->add_option("file", file)->required();
    bigons->add_option("--from", from)->required();
    bigons->add_option("--to", to)->required();
    for (auto* sub : {resolve, census})
        sub->add_flag("--flipped-smoothing", flipped)->group("");
    std::vector<std::int64_t> slopes;
    auto* grid = scene_cmd->add_subcommand("grid", "Straight-line pair (p,q), (r,s) on the torus");
    grid->add_option("slopes", slopes, "p q r s")->required()->expected(4);
    grid->add_option("--out", out);
    std::string corpus_dir;
    std::int64_t corpus_bound = 4;
    auto* corpus = scene_cmd->add_subcommand("corpus", "Write control scenes and torus grids");
    corpus->add_option("dir", corpus_dir)->required();
    corpus->add_option("--bound", corpus_bound)->capture_default_str();

    // dt
    auto* dt_cmd = app.add_subcommand("dt", "Twist coordinates on pants decompositions")->require_subcommand(1);
    std::string file2;
    std::vector<std::int64_t> k;
    std::int64_t curve_index = -1;
    auto* dt_validate = dt_cmd->add_subcommand("validate", "Check a decomposition and its coordinates");
    dt_validate->add_option("file", file)->required();
    auto* dt_twist = dt_cmd->add_subcommand("twist", "Apply twists: --k k_1 ... k_C or --curve i [--neg]");
    dt_twist->add_option("file", file)->required();
    auto* k_opt = dt_twist->add_option("--k", k)->allow_extra_args();
    auto* curve_opt = dt_twist->add_option("--curve", curve_index);
    k_opt->excludes(curve_opt);
    dt_twist->add_flag("--neg", negative);
    dt_twist->add_option("--out", out);
    auto* dt_solve = dt_cmd->add_subcommand("solve", "Twist vector carrying the second file to the first");
    dt_solve->add_option("file", file)->required();
    dt_solve->add_option("other", file2)->required();

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Run the verification suites");
    std::vector<std::string> suites;
    std::int64_t bound = 0, gamma_bound = 0, trials = 0, m_max = -1;
    std::uint64_t seed = 7;
    std::string n_range, report_path;
    verify_cmd->add_option("--suite", suites, "theorem1, convexity, theorem6, prop7, lemma4, dt")
        ->delimiter(',');
    verify_cmd->add_option("--bound", bound, "Class bound for every torus suite");
    verify_cmd->add_option("--gamma-bound", gamma_bound);
    verify_cmd->add_option("--range", n_range, "Exponent range a..b");
    verify_cmd->add_option("--m-max", m_max);
    verify_cmd->add_option("--trials", trials);
    verify_cmd->add_option("--seed", seed);
    verify_cmd->add_option("--corpus", corpus_dir, "Load control scenes from this directory");
    verify_cmd->add_option("--out", report_path, "Report file (default stdout)");
    verify_cmd->add_flag("--flipped-smoothing", flipped)->group("");

    try {
        app.parse(shield_negative_arguments(argc, argv));
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*mul) {
            std::cout << torus::multiply(torus::parse_class(class_a), torus::parse_class(class_b)).to_string() << "\n";
        } else if (*inter) {
            std::cout << torus::intersection(torus::parse_class(class_a), torus::parse_class(class_b)) << "\n";
        } else if (*twist) {
            const auto dir = negative ? torus::TwistDirection::Negative : torus::TwistDirection::Positive;
            std::cout << torus::dehn_twist(torus::parse_class(along), torus::parse_class(on), dir).to_string() << "\n";
        } else if (*profile) {
            const auto r = parse_range(range);
            const auto p = torus::convexity_profile(torus::parse_class(alpha), torus::parse_class(beta),
                                                    torus::parse_class(gamma), r.lo, r.hi);
            std::cout << "n,value\n";
            for (std::size_t i = 0; i < p.values.size(); ++i)
                std::cout << r.lo + static_cast<std::int64_t>(i) << "," << p.values[i] << "\n";
        } else if (*validate) {
            const auto d = scene::validate(scene::load_scene(file));
            std::cout << "ok vertices=" << d.vertices << " edges=" << d.edges << " faces=" << d.faces
                      << " euler=" << d.euler_characteristic << " genus=" << d.genus << " crossings=" << d.crossings
                      << " junctions=" << d.junctions << "\n";
        } else if (*faces) {
            const auto s = scene::load_scene(file);
            scene::validate(s);
            const auto fs = scene::trace_faces(s);
            for (std::size_t i = 0; i < fs.size(); ++i) {
                std::cout << "face " << i << " degree=" << fs[i].degree << " sides=";
                for (std::size_t j = 0; j < fs[i].polygon_sides.size(); ++j)
                    std::cout << (j ? "," : "") << fs[i].polygon_sides[j];
                std::cout << "\n";
            }
        } else if (*resolve) {
            const auto s = scene::resolve(scene::load_scene(file), from, to, convention_of(flipped));
            emit(scene::scene_to_text(s), out);
        } else if (*census) {
            auto s = scene::load_scene(file);
            if (from.empty() != to.empty()) throw Error(ErrorCode::MalformedInput, "--from and --to go together");
            if (!from.empty()) s = scene::resolve(s, from, to, convention_of(flipped));
            else scene::validate(s);
            print_census(s);
        } else if (*bigons) {
            const auto s = scene::load_scene(file);
            scene::validate(s);
            const auto found = scene::find_bigons(s, from, to);
            std::cout << "bigons=" << found.size() << "\n";
            for (const auto& f : found) {
                std::cout << "bigon halfedges=";
                for (std::size_t j = 0; j < f.sides.size(); ++j) std::cout << (j ? "," : "") << f.sides[j].halfedge;
                std::cout << "\n";
            }
        } else if (*grid) {
            emit(scene::scene_to_text(scene::torus_grid_scene(slopes[0], slopes[1], slopes[2], slopes[3])), out);
        } else if (*corpus) {
            std::cout << scene::write_scene_corpus(corpus_dir, corpus_bound) << " files written\n";
        } else if (*dt_validate) {
            const auto f = dt::load_dt(file);
            const auto info = dt::validate_decomposition(f.decomposition);
            dt::validate_coords(f.decomposition, f.coords);
            std::cout << "ok genus=" << info.genus << " boundary=" << info.boundary_count
                      << " curves=" << info.internal_curves << "\n";
        } else if (*dt_twist) {
            auto f = dt::load_dt(file);
            dt::validate_coords(f.decomposition, f.coords);
            if (*curve_opt) {
                f.coords = dt::dehn_twist(f.coords, static_cast<std::size_t>(std::max<std::int64_t>(curve_index, 0)),
                                          negative ? torus::TwistDirection::Negative : torus::TwistDirection::Positive);
            } else {
                f.coords = dt::twist_multiply(f.coords, k);
            }
            emit(dt::dt_to_text(f), out);
        } else if (*dt_solve) {
            const auto a = dt::load_dt(file);
            const auto b = dt::load_dt(file2);
            const auto ks = dt::solve_twists(a.coords, b.coords);
            for (std::size_t i = 0; i < ks.size(); ++i) std::cout << (i ? " " : "") << ks[i];
            std::cout << "\n";
        } else if (*verify_cmd) {
            verify::Config c;
            c.suites = suites;
            if (bound > 0)
                c.theorem1_bound = c.convexity_bound = c.theorem6_bound = c.prop7_bound = c.lemma4_bound = bound;
            else if (bound < 0 || verify_cmd->count("--bound"))
                throw Error(ErrorCode::InvalidBound, "--bound must be >= 1");
            if (verify_cmd->count("--gamma-bound")) c.gamma_bound = gamma_bound;
            if (verify_cmd->count("--m-max")) c.m_max = m_max;
            if (verify_cmd->count("--trials")) c.dt_trials = trials;
            c.seed = seed;
            if (!n_range.empty()) {
                const auto r = parse_range(n_range);
                c.n_min = r.lo;
                c.n_max = r.hi;
            }
            if (!corpus_dir.empty()) c.corpus_dir = corpus_dir;
            c.smoothing = convention_of(flipped);
            const auto report = verify::run_all(c);
            if (report_path.empty()) std::cout << report.to_json().dump(2) << "\n";
            else verify::write_report(report, report_path);
            for (const auto& s : report.suites)
                std::cerr << (s.passed() ? "PASS " : "FAIL ") << s.suite << " cases=" << s.cases
                          << " failures=" << s.failure_count << "\n";
            return report.passed() ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
