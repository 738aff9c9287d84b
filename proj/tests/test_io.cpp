#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "curvemul/corpus.hpp"
#include "curvemul/dt.hpp"
#include "curvemul/error.hpp"
#include "curvemul/scene.hpp"
#include "curvemul/scene_io.hpp"
#include "curvemul/torus_scenes.hpp"

using namespace curvemul;
using namespace curvemul::scene;
namespace fs = std::filesystem;

namespace {

template <typename F>
ErrorCode code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::Io;
}

fs::path scratch_dir(const char* name) {
    const auto dir = fs::temp_directory_path() / ("curvemul_test_" + std::string(name));
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("scene text round trip") {
    for (const auto& s : {torus_grid_scene(2, -1, 1, 3), genus2_filling_pair(), bigon_control_scene(),
                          trivial_component_control_scene(), resolve(torus_grid_scene(2, 0, 0, 2), "A", "B")}) {
        const auto back = scene_from_text(scene_to_text(s));
        CHECK(isomorphic(s, back));
        CHECK(scene_to_text(back) == scene_to_text(s));
    }
}

TEST_CASE("scene file round trip") {
    const auto dir = scratch_dir("scene");
    const auto s = torus_grid_scene(3, 1, -1, 2);
    save_scene(s, dir / "g.json");
    CHECK(isomorphic(load_scene(dir / "g.json"), s));
    CHECK(code_of([&] { load_scene(dir / "missing.json"); }) == ErrorCode::Io);
    CHECK(code_of([&] { save_scene(s, dir / "no" / "such" / "dir.json"); }) == ErrorCode::Io);
    fs::remove_all(dir);
}

TEST_CASE("minimal scene file") {
    const char* text = R"({"name": "m", "vertices": [{"id": 0, "halfedges_ccw": [0, 2, 1, 3]}],
        "edges": [{"id": 0, "half": [0, 1], "curve": "A", "marker": [1, 0]},
                  {"id": 1, "half": [2, 3], "curve": "B", "marker": [0, 1]}],
        "curves": [{"id": "A"}, {"id": "B"}]})";
    const auto s = scene_from_text(text);
    CHECK(validate(s).genus == 1);
    auto grid = torus_grid_scene(1, 0, 0, 1);
    CHECK_FALSE(isomorphic(s, grid));  // the grid declares genus and component counts
    grid.genus.reset();
    for (auto& c : grid.curves) c.expected_components.reset();
    CHECK(isomorphic(s, grid));
}

TEST_CASE("malformed scene text") {
    CHECK(code_of([] { scene_from_text("{"); }) == ErrorCode::MalformedInput);
    CHECK(code_of([] { scene_from_text(R"({"vertices": 3})"); }) == ErrorCode::MalformedInput);
}

TEST_CASE("corpus writer") {
    const auto dir = scratch_dir("corpus");
    const auto written = write_scene_corpus(dir, 1);
    CHECK(written > 3);
    std::size_t grids = 0;
    for (const auto& entry : fs::directory_iterator(dir / "grids")) {
        const auto s = load_scene(entry.path());
        CHECK(validate(s).genus == 1);
        ++grids;
    }
    CHECK(grids + 3 == written);
    CHECK(isomorphic(load_scene(dir / "genus2_filling_pair.json"), genus2_filling_pair()));
    fs::remove_all(dir);
}

TEST_CASE("dt file round trip") {
    dt::DTFile f{"g2", dt::genus2_decomposition(), {{2, 0, 0}, {3, 0, 1}, {}}};
    const auto back = dt::dt_from_text(dt::dt_to_text(f));
    CHECK(back.name == "g2");
    CHECK(back.coords == f.coords);
    CHECK(back.decomposition.pants == f.decomposition.pants);
    CHECK(back.decomposition.gluing == f.decomposition.gluing);
    CHECK(code_of([] { dt::dt_from_text(R"({"pants": [{"id": "P0"}], "gluing": [["P0.7", "P0.1"]]})"); }) ==
          ErrorCode::UnknownSlot);
    CHECK(code_of([] { dt::load_dt("/nonexistent/x.json"); }) == ErrorCode::Io);
}
