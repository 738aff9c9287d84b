// One line per acceptance criterion; exit status 1 if any fails.
// usage: acceptance CORPUS_DIR [GENERATED_CORPUS_DIR]

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "curvemul/dt.hpp"
#include "curvemul/error.hpp"
#include "curvemul/scene.hpp"
#include "curvemul/scene_io.hpp"
#include "curvemul/torus.hpp"
#include "curvemul/verify.hpp"

using namespace curvemul;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool ok = false;
    std::string detail;
};

int failed = 0;

void criterion(int id, const std::string& title, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (!o.ok) ++failed;
    std::cout << (o.ok ? "PASS" : "FAIL") << " [" << id << "] " << title << ": " << o.detail << " (" << ms
              << " ms)" << std::endl;
}

Outcome suite_outcome(const verify::SuiteReport& r, double limit_ms) {
    std::string detail = std::to_string(r.cases) + " cases, " + std::to_string(r.failure_count) + " failures, " +
                         std::to_string(static_cast<long long>(r.millis)) + " ms";
    if (limit_ms > 0) detail += " (limit " + std::to_string(static_cast<long long>(limit_ms)) + " ms)";
    if (!r.failures.empty()) detail += "; first: " + r.failures[0].clause + " " + r.failures[0].inputs;
    return {r.passed() && (limit_ms <= 0 || r.millis < limit_ms), detail};
}

std::string join(const std::vector<std::int64_t>& v) {
    std::string out;
    for (auto x : v) out += (out.empty() ? "" : ",") + std::to_string(x);
    return "[" + out + "]";
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance CORPUS_DIR [GENERATED_CORPUS_DIR]\n";
        return 2;
    }
    const fs::path corpus = argv[1];
    const fs::path generated = argc > 2 ? fs::path(argv[2]) : fs::path();

    criterion(1, "product laws, classes |x|,|y| <= 4", [] {
        return suite_outcome(verify::suite_theorem1(4), 5000);
    });

    criterion(2, "convexity, |coords| <= 3, n in -6..6, spot profile", [] {
        const auto r = verify::suite_convexity(3, -6, 6);
        auto o = suite_outcome(r, 0);
        const auto p = torus::convexity_profile({1, 0}, {0, 1}, {1, 2}, -2, 2);
        const bool spot = p.values == std::vector<std::int64_t>{5, 3, 1, 1, 3};
        o.detail += "; profile (1,0),(0,1),(1,2) on -2..2 = " + join(p.values);
        o.ok = o.ok && spot && r.clause_cases.count("spot-profile") == 1;
        return o;
    });

    criterion(3, "non-associativity witness and associative instance", [] {
        const torus::TorusClass e1(1, 0), e2(0, 1), d(1, 1);
        const auto left = torus::multiply(torus::multiply(e1, e2), d);
        const auto right = torus::multiply(e1, torus::multiply(e2, d));
        const auto assoc_r = torus::multiply(e1, torus::multiply(e2, e1));
        const auto assoc_l = torus::multiply(torus::multiply(e1, e2), e1);
        const bool ok = left == torus::TorusClass(2, 2) && right == torus::TorusClass(2, 0) &&
                        assoc_r == torus::TorusClass(0, 1) && assoc_l == torus::TorusClass(0, 1);
        return Outcome{ok, "((1,0)(0,1))(1,1)=" + left.to_string() + " (1,0)((0,1)(1,1))=" + right.to_string() +
                               " (1,0)((0,1)(1,0))=" + assoc_r.to_string() + " ((1,0)(0,1))(1,0)=" +
                               assoc_l.to_string()};
    });

    criterion(4, "resolution oracle over grids |p|,|q|,|r|,|s| <= 4, flipped smoothing caught", [&] {
        const auto r = verify::suite_lemma4_and_oracle(4, scene::SmoothingConvention::Standard, corpus);
        auto o = suite_outcome(r, 5000);
        const auto flipped = verify::suite_lemma4_and_oracle(1, scene::SmoothingConvention::Flipped, corpus);
        const bool caught = !flipped.passed() && !flipped.failures.empty() &&
                            flipped.failures.front().inputs == "A=(1,0) B=(0,1)";
        o.detail += "; flipped smoothing: " + std::to_string(flipped.failure_count) + " failures, first at " +
                    (flipped.failures.empty() ? std::string("none") : flipped.failures.front().inputs);
        o.ok = o.ok && caught;
        return o;
    });

    criterion(5, "twist non-commutation and fixed-point freeness, classes <= 4, gamma <= 6", [] {
        return suite_outcome(verify::suite_theorem6(4, 6), 0);
    });

    criterion(6, "multi-twist intersection bounds on the torus, bound 3, m <= 3", [] {
        const auto r = verify::suite_prop7(3, 3);
        auto o = suite_outcome(r, 0);
        torus::TorusClass b(0, 1);
        for (int i = 0; i < 2; ++i) b = torus::dehn_twist({1, 0}, b, torus::TwistDirection::Positive);
        const auto mid = torus::intersection(b, {1, 2});
        o.detail += "; I(D^2(0,1),(1,2)) = " + std::to_string(mid) + ", bounds 4+-1";
        o.ok = o.ok && mid == 3 && r.clause_cases.count("spot-value") == 1;
        return o;
    });

    criterion(7, "twist coordinates, 1000 seeded trials on three decompositions", [] {
        return suite_outcome(verify::suite_dt(1000, 7), 1000);
    });

    criterion(8, "file round trips for every corpus scene and coordinate file", [&] {
        std::size_t scenes = 0, dts = 0;
        std::vector<std::string> bad;
        const auto tmp = fs::temp_directory_path() / "curvemul_acceptance_roundtrip.json";
        std::vector<fs::path> roots{corpus};
        if (!generated.empty()) roots.push_back(generated);
        for (const auto& root : roots) {
            for (const auto& entry : fs::recursive_directory_iterator(root)) {
                if (entry.path().extension() != ".json") continue;
                const bool is_dt = entry.path().parent_path().filename() == "dt";
                try {
                    if (is_dt) {
                        const auto f = dt::load_dt(entry.path());
                        dt::save_dt(f, tmp);
                        const auto g = dt::load_dt(tmp);
                        dt::validate_coords(g.decomposition, g.coords);
                        if (!(g.coords == f.coords) || g.decomposition.gluing != f.decomposition.gluing ||
                            g.decomposition.pants != f.decomposition.pants)
                            bad.push_back(entry.path().string());
                        ++dts;
                    } else {
                        const auto s = scene::load_scene(entry.path());
                        scene::save_scene(s, tmp);
                        if (!scene::isomorphic(scene::load_scene(tmp), s)) bad.push_back(entry.path().string());
                        ++scenes;
                    }
                } catch (const Error& e) {
                    bad.push_back(entry.path().string() + ": " + e.what());
                }
            }
        }
        fs::remove(tmp);
        std::string detail = std::to_string(scenes) + " scenes, " + std::to_string(dts) + " coordinate files";
        if (!bad.empty()) detail += "; first mismatch " + bad.front();
        return Outcome{bad.empty() && scenes > 0 && dts >= 3, detail};
    });

    std::cout << (failed == 0 ? "ALL CRITERIA PASS" : std::to_string(failed) + " CRITERIA FAIL") << std::endl;
    return failed == 0 ? 0 : 1;
}
