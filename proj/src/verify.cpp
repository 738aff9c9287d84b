#include "curvemul/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <fstream>
#include <random>
#include <sstream>

#include "curvemul/checked.hpp"
#include "curvemul/corpus.hpp"
#include "curvemul/dt.hpp"
#include "curvemul/error.hpp"
#include "curvemul/scene_io.hpp"
#include "curvemul/torus.hpp"
#include "curvemul/torus_scenes.hpp"

namespace curvemul::verify {

using nlohmann::json;
using torus::TorusClass;
using torus::TwistDirection;

namespace {

using Clock = std::chrono::steady_clock;

class Timer {
public:
    explicit Timer(SuiteReport& r) : report_(r), start_(Clock::now()) {}
    ~Timer() { report_.millis = std::chrono::duration<double, std::milli>(Clock::now() - start_).count(); }

private:
    SuiteReport& report_;
    Clock::time_point start_;
};

void require_bound(std::int64_t b, const char* what) {
    if (b < 1) throw Error(ErrorCode::InvalidBound, std::string(what) + " must be >= 1, got " + std::to_string(b));
}

std::string str(const TorusClass& c) { return c.to_string(); }
std::string cls(const TorusClass& c) { return std::to_string(c.x()) + "," + std::to_string(c.y()); }

std::string inputs_of(std::initializer_list<std::pair<const char*, TorusClass>> named) {
    std::string out;
    for (const auto& [name, c] : named) {
        if (!out.empty()) out += " ";
        out += std::string(name) + "=" + str(c);
    }
    return out;
}

std::int64_t det(const TorusClass& a, const TorusClass& b) { return checked::det(a.x(), a.y(), b.x(), b.y()); }

int sign(std::int64_t v) { return (v > 0) - (v < 0); }

TorusClass twist_power(const TorusClass& a, const TorusClass& b, std::int64_t n) {
    TorusClass c = b;
    const auto dir = n >= 0 ? TwistDirection::Positive : TwistDirection::Negative;
    for (std::int64_t i = 0; i < checked::abs(n); ++i) c = torus::dehn_twist(a, c, dir);
    return c;
}

std::string join(const std::vector<std::int64_t>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out + "]";
}

}  // namespace

json SuiteReport::to_json(bool include_timing) const {
    json j;
    j["suite"] = suite;
    j["params"] = params;
    j["cases"] = cases;
    j["clauses"] = clause_cases;
    j["passed"] = passed();
    j["bounded_evidence"] = bounded_evidence;
    j["failure_count"] = failure_count;
    j["failures"] = json::array();
    for (const auto& f : failures)
        j["failures"].push_back(
            {{"clause", f.clause}, {"inputs", f.inputs}, {"lhs", f.lhs}, {"rhs", f.rhs}, {"rerun", f.rerun}});
    if (include_timing) j["millis"] = millis;
    return j;
}

SuiteReport suite_theorem1(std::int64_t bound) {
    require_bound(bound, "bound");
    SuiteReport r;
    r.suite = "theorem1";
    r.params = {{"bound", bound}};
    Timer timer(r);
    const auto classes = torus::enumerate_classes(bound);
    r.params["classes"] = classes.size();

    const auto mul_rerun = [](const TorusClass& a, const TorusClass& b) {
        return "curvemul torus mul " + cls(a) + " " + cls(b);
    };

    for (const auto& a : classes) {
        for (const auto& b : classes) {
            const std::int64_t I = torus::intersection(a, b);
            const TorusClass ab = torus::multiply(a, b);
            const TorusClass ba = torus::multiply(b, a);
            const auto in = inputs_of({{"a", a}, {"b", b}});

            if (I == 0) {
                r.expect("b-commute", ab == ba, [&] { return Failure{{}, in, str(ab), str(ba), mul_rerun(a, b)}; });
                for (const auto& c : classes) {
                    const auto lhs = torus::intersection(ab, c);
                    const auto rhs = torus::intersection(a, c) + torus::intersection(b, c);
                    r.expect("b-additive", lhs == rhs, [&] {
                        return Failure{{}, inputs_of({{"a", a}, {"b", b}, {"c", c}}), std::to_string(lhs),
                                       std::to_string(rhs), mul_rerun(a, b)};
                    });
                }
            } else {
                r.expect("b-converse", ab != ba, [&] { return Failure{{}, in, str(ab), str(ba), mul_rerun(a, b)}; });
                const TorusClass a_ba = torus::multiply(a, ba);
                const TorusClass ab_a = torus::multiply(ab, a);
                r.expect("d-cancel-left", a_ba == b,
                         [&] { return Failure{{}, in, str(a_ba), str(b), mul_rerun(a, ba)}; });
                r.expect("d-cancel-right", ab_a == b,
                         [&] { return Failure{{}, in, str(ab_a), str(b), mul_rerun(ab, a)}; });
                const auto i1 = torus::intersection(a, ab);
                const auto i2 = torus::intersection(a, ba);
                r.expect("d-intersection", i1 == I && i2 == I, [&] {
                    return Failure{{}, in, std::to_string(i1) + "," + std::to_string(i2),
                                   std::to_string(I) + "," + std::to_string(I), mul_rerun(a, b)};
                });

                const int delta = sign(det(a, b));
                for (std::int64_t n = -5; n <= 5; ++n) {
                    const TorusClass got = torus::signed_power_multiply(a, n, b);
                    const TorusClass want = torus::normalize(delta * n * a.x() + b.x(), delta * n * a.y() + b.y());
                    r.expect("power-closed-form", got == want, [&] {
                        return Failure{{}, in + " n=" + std::to_string(n), str(got), str(want), mul_rerun(a, b)};
                    });
                }
                for (std::int64_t n = -3; n <= 3; ++n) {
                    for (std::int64_t m = -3; m <= 3; ++m) {
                        const TorusClass lhs =
                            torus::signed_power_multiply(a, n, torus::signed_power_multiply(a, m, b));
                        const TorusClass rhs = torus::signed_power_multiply(a, n + m, b);
                        r.expect("exponent-law", lhs == rhs, [&] {
                            return Failure{{}, in + " n=" + std::to_string(n) + " m=" + std::to_string(m), str(lhs),
                                           str(rhs), mul_rerun(a, b)};
                        });
                    }
                }
            }

            for (std::int64_t k = 1; k <= 5; ++k) {
                const TorusClass lhs = torus::multiply(torus::power(a, k), torus::power(b, k));
                const TorusClass rhs = torus::power(ab, k);
                r.expect("e-powers", lhs == rhs, [&] {
                    return Failure{{}, in + " k=" + std::to_string(k), str(lhs), str(rhs), mul_rerun(a, b)};
                });
            }

            if (a.is_primitive()) {
                // Transvection b -> b + det(a, b) a, computed without the product.
                const std::int64_t d = det(a, b);
                const TorusClass want_pos = torus::normalize(b.x() + d * a.x(), b.y() + d * a.y());
                const TorusClass want_neg = torus::normalize(b.x() - d * a.x(), b.y() - d * a.y());
                const TorusClass pos = torus::dehn_twist(a, b, TwistDirection::Positive);
                const TorusClass neg = torus::dehn_twist(a, b, TwistDirection::Negative);
                const std::string rerun = "curvemul torus twist --along " + cls(a) + " --on " + cls(b);
                r.expect("f-twist", pos == want_pos,
                         [&] { return Failure{{}, in, str(pos), str(want_pos), rerun}; });
                r.expect("f-twist", neg == want_neg,
                         [&] { return Failure{{}, in, str(neg), str(want_neg), rerun + " --neg"}; });
                const TorusClass back = torus::dehn_twist(a, pos, TwistDirection::Negative);
                r.expect("f-inverse", back == b, [&] { return Failure{{}, in, str(back), str(b), rerun}; });
            } else {
                bool threw = false;
                try {
                    torus::dehn_twist(a, b, TwistDirection::Positive);
                } catch (const Error& e) {
                    threw = e.code() == ErrorCode::NotSimpleLoop;
                }
                r.expect("f-rejects-multicurve", threw, [&] {
                    return Failure{{}, in, "no NotSimpleLoop", "NotSimpleLoop",
                                   "curvemul torus twist --along " + cls(a) + " --on " + cls(b)};
                });
            }

            for (const auto& c : classes) {
                const auto x = torus::intersection(a, c);
                const auto y = torus::intersection(b, c);
                const auto z = torus::intersection(ab, c);
                r.expect("g-triangle", x <= y + z && y <= x + z && z <= x + y, [&] {
                    return Failure{{}, inputs_of({{"a", a}, {"b", b}, {"c", c}}),
                                   std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z),
                                   "each <= sum of the other two", mul_rerun(a, b)};
                });
            }
        }
    }

    const TorusClass e1(1, 0), e2(0, 1), d(1, 1);
    const auto witness = [&](const TorusClass& got, const TorusClass& want, const std::string& expr) {
        r.expect("c-witness", got == want, [&] { return Failure{{}, expr, str(got), str(want), "curvemul torus mul"}; });
    };
    witness(torus::multiply(torus::multiply(e1, e2), d), TorusClass(2, 2), "((1,0)(0,1))(1,1)");
    witness(torus::multiply(e1, torus::multiply(e2, d)), TorusClass(2, 0), "(1,0)((0,1)(1,1))");
    witness(torus::multiply(e1, torus::multiply(e2, e1)), TorusClass(0, 1), "(1,0)((0,1)(1,0))");
    witness(torus::multiply(torus::multiply(e1, e2), e1), TorusClass(0, 1), "((1,0)(0,1))(1,0)");
    return r;
}

SuiteReport suite_convexity(std::int64_t bound, std::int64_t n_min, std::int64_t n_max) {
    require_bound(bound, "bound");
    if (n_min > n_max) throw Error(ErrorCode::InvalidBound, "empty n range");
    SuiteReport r;
    r.suite = "convexity";
    r.params = {{"bound", bound}, {"n_min", n_min}, {"n_max", n_max}};
    Timer timer(r);
    const auto classes = torus::enumerate_classes(bound);
    const std::string range = std::to_string(n_min) + ".." + std::to_string(n_max);
    const auto profile_rerun = [&](const TorusClass& a, const TorusClass& b, const TorusClass& g) {
        return "curvemul torus profile --alpha " + cls(a) + " --beta " + cls(b) + " --gamma " + cls(g) +
               " --range " + range;
    };

    for (const auto& a : classes) {
        for (const auto& b : classes) {
            const std::int64_t I = torus::intersection(a, b);
            const int delta = sign(det(a, b));
            for (const auto& g : classes) {
                const auto in = inputs_of({{"alpha", a}, {"beta", b}, {"gamma", g}});
                const auto profile = torus::convexity_profile(a, b, g, n_min, n_max);
                const auto bad = profile.first_violation();
                r.expect("midpoint", !bad, [&] {
                    const auto i = *bad;
                    return Failure{{}, in + " n=" + std::to_string(n_min + static_cast<std::int64_t>(i)),
                                   std::to_string(2 * profile.values[i]),
                                   std::to_string(profile.values[i - 1] + profile.values[i + 1]),
                                   profile_rerun(a, b, g)};
                });

                const auto f = [&](std::int64_t n) {
                    return torus::intersection(torus::signed_power_multiply(a, n, b), g);
                };
                const auto f0 = f(0), f1 = f(1), f2 = f(2);
                r.expect("first-step", 2 * f1 <= f0 + f2, [&] {
                    return Failure{{}, in, std::to_string(2 * f1), std::to_string(f0 + f2), profile_rerun(a, b, g)};
                });

                std::vector<std::int64_t> closed;
                for (std::int64_t n = n_min; n <= n_max; ++n) {
                    if (I > 0) closed.push_back(checked::abs(delta * n * det(a, g) + det(b, g)));
                    else closed.push_back(checked::abs(n) * torus::intersection(a, g) + torus::intersection(b, g));
                }
                r.expect("closed-form", closed == profile.values, [&] {
                    return Failure{{}, in, join(profile.values), join(closed), profile_rerun(a, b, g)};
                });

                if (!a.is_primitive()) continue;
                std::vector<std::int64_t> twisted;
                bool agrees = true;
                std::int64_t where = 0;
                TorusClass cur = twist_power(a, b, n_min);
                for (std::int64_t n = n_min; n <= n_max; ++n) {
                    twisted.push_back(torus::intersection(cur, g));
                    if (agrees && cur != torus::signed_power_multiply(a, I * n, b)) {
                        agrees = false;
                        where = n;
                    }
                    if (n < n_max) cur = torus::dehn_twist(a, cur, TwistDirection::Positive);
                }
                r.expect("twist-power", agrees, [&] {
                    const TorusClass lhs = twist_power(a, b, where);
                    const TorusClass rhs = torus::signed_power_multiply(a, I * where, b);
                    return Failure{{}, in + " n=" + std::to_string(where), str(lhs), str(rhs),
                                   "curvemul torus twist --along " + cls(a) + " --on " + cls(b)};
                });
                bool convex = true;
                std::size_t at = 0;
                for (std::size_t i = 1; i + 1 < twisted.size() && convex; ++i)
                    if (2 * twisted[i] > twisted[i - 1] + twisted[i + 1]) {
                        convex = false;
                        at = i;
                    }
                r.expect("twist-midpoint", convex, [&] {
                    return Failure{{}, in + " n=" + std::to_string(n_min + static_cast<std::int64_t>(at)),
                                   std::to_string(2 * twisted[at]),
                                   std::to_string(twisted[at - 1] + twisted[at + 1]), profile_rerun(a, b, g)};
                });
            }
        }
    }

    const auto spot = torus::convexity_profile(TorusClass(1, 0), TorusClass(0, 1), TorusClass(1, 2), -2, 2);
    const std::vector<std::int64_t> want{5, 3, 1, 1, 3};
    r.expect("spot-profile", spot.values == want, [&] {
        return Failure{{}, "alpha=(1,0) beta=(0,1) gamma=(1,2) n=-2..2", join(spot.values), join(want),
                       "curvemul torus profile --alpha 1,0 --beta 0,1 --gamma 1,2 --range -2..2"};
    });
    return r;
}

SuiteReport suite_theorem6(std::int64_t bound, std::int64_t gamma_bound) {
    require_bound(bound, "bound");
    require_bound(gamma_bound, "gamma_bound");
    SuiteReport r;
    r.suite = "theorem6";
    r.params = {{"bound", bound}, {"gamma_bound", gamma_bound}};
    r.bounded_evidence = true;
    Timer timer(r);
    std::vector<TorusClass> prim;
    for (const auto& c : torus::enumerate_classes(bound))
        if (c.is_primitive()) prim.push_back(c);
    const auto gammas = torus::enumerate_classes(gamma_bound);
    std::int64_t skipped = 0;
    const auto pos = TwistDirection::Positive;
    const auto neg = TwistDirection::Negative;

    for (const auto& a : prim) {
        for (const auto& b : prim) {
            if (torus::intersection(a, b) == 0) {
                ++skipped;
                continue;
            }
            const auto in = inputs_of({{"alpha", a}, {"beta", b}});
            const TorusClass lhs = torus::dehn_twist(a, torus::dehn_twist(b, a, pos), pos);
            const TorusClass rhs = torus::dehn_twist(b, torus::dehn_twist(a, a, pos), pos);
            r.expect("a-noncommuting", lhs != rhs, [&] {
                return Failure{{}, in, str(lhs), str(rhs), "curvemul torus twist --along " + cls(b) + " --on " + cls(a)};
            });
            for (const auto& g : gammas) {
                const TorusClass img = torus::dehn_twist(a, torus::dehn_twist(b, g, pos), neg);
                r.expect("b-no-fixed-point", img != g, [&] {
                    return Failure{{}, in + " gamma=" + str(g), str(img), str(g),
                                   "curvemul torus twist --along " + cls(b) + " --on " + cls(g)};
                });
            }
        }
    }
    r.params["skipped_disjoint_pairs"] = skipped;
    return r;
}

SuiteReport suite_prop7(std::int64_t bound, std::int64_t m_max) {
    require_bound(bound, "bound");
    if (m_max < 0) throw Error(ErrorCode::InvalidBound, "m_max must be >= 0");
    SuiteReport r;
    r.suite = "prop7";
    r.params = {{"bound", bound}, {"m_max", m_max}, {"surface", "torus"}};
    Timer timer(r);
    const auto classes = torus::enumerate_classes(bound);

    const auto check = [&](const TorusClass& a, std::int64_t m, const TorusClass& b, const TorusClass& g) {
        const TorusClass twisted = twist_power(a, b, m);
        const auto mid = torus::intersection(twisted, g);
        const auto S = m * torus::intersection(a, b) * torus::intersection(a, g);
        const auto slack = torus::intersection(b, g);
        const auto in = inputs_of({{"alpha", a}, {"beta", b}, {"gamma", g}}) + " m=" + std::to_string(m);
        const std::string rerun = "curvemul torus twist --along " + cls(a) + " --on " + cls(b);
        r.expect("lower", S - slack <= mid,
                 [&] { return Failure{{}, in, std::to_string(S - slack), std::to_string(mid), rerun}; });
        r.expect("upper", mid <= S + slack,
                 [&] { return Failure{{}, in, std::to_string(mid), std::to_string(S + slack), rerun}; });
        return mid;
    };

    for (const auto& a : classes) {
        if (!a.is_primitive()) continue;
        for (std::int64_t m = 0; m <= m_max; ++m)
            for (const auto& b : classes)
                for (const auto& g : classes) check(a, m, b, g);
    }

    const TorusClass a(1, 0), b(0, 1), g(1, 2);
    const auto mid = check(a, 2, b, g);
    const auto S = 2 * torus::intersection(a, b) * torus::intersection(a, g);
    r.expect("spot-value", mid == 3 && S == 4 && torus::intersection(b, g) == 1, [&] {
        return Failure{{}, "alpha=(1,0) beta=(0,1) gamma=(1,2) m=2",
                       std::to_string(mid) + " in " + std::to_string(S) + "+-" + std::to_string(torus::intersection(b, g)),
                       "3 in 4+-1", "curvemul torus twist --along 1,0 --on 0,1"};
    });
    return r;
}

SuiteReport suite_lemma4_and_oracle(std::int64_t bound, scene::SmoothingConvention convention,
                                    const std::optional<std::filesystem::path>& corpus_dir) {
    require_bound(bound, "bound");
    SuiteReport r;
    r.suite = "lemma4";
    r.params = {{"bound", bound},
                {"smoothing", convention == scene::SmoothingConvention::Standard ? "standard" : "flipped"}};
    Timer timer(r);

    const auto census_of = [](const scene::Scene& s, std::string& error) {
        std::map<TorusClass, std::int64_t> out;
        const auto census = scene::components(s);
        for (std::size_t i = 0; i < census.components.size(); ++i) {
            try {
                ++out[scene::torus_class_of_component(census.components[i]).primitive()];
            } catch (const Error& e) {
                error = e.what();
            }
        }
        return out;
    };
    const auto render = [](const std::map<TorusClass, std::int64_t>& m) {
        std::string out;
        for (const auto& [c, k] : m) out += (out.empty() ? "" : " ") + std::to_string(k) + "x" + c.to_string();
        return out.empty() ? std::string("{}") : out;
    };

    // Smallest grids first, starting with the meridian-longitude pair, so the
    // leading witnesses are the simplest ones.
    std::vector<std::array<std::int64_t, 4>> grids{{1, 0, 0, 1}};
    for (std::int64_t shell = 1; shell <= bound; ++shell)
        for (std::int64_t p = -shell; p <= shell; ++p)
            for (std::int64_t q = -shell; q <= shell; ++q)
                for (std::int64_t u = -shell; u <= shell; ++u)
                    for (std::int64_t v = -shell; v <= shell; ++v) {
                        const std::array<std::int64_t, 4> g{p, q, u, v};
                        const auto size = std::max({checked::abs(p), checked::abs(q), checked::abs(u), checked::abs(v)});
                        if (size != shell || g == grids.front() || p * v - q * u == 0) continue;
                        grids.push_back(g);
                    }

    for (const auto& [p, q, u, v] : grids) {
        const TorusClass A(p, q), B(u, v);
        const std::string in = "A=(" + std::to_string(p) + "," + std::to_string(q) + ") B=(" +
                               std::to_string(u) + "," + std::to_string(v) + ")";
        const std::string grid = "curvemul scene grid " + std::to_string(p) + " " + std::to_string(q) +
                                 " " + std::to_string(u) + " " + std::to_string(v) + " --out g.json";
        const std::string smooth_flag =
            convention == scene::SmoothingConvention::Flipped ? " --flipped-smoothing" : "";

        scene::Scene s;
        try {
            s = scene::torus_grid_scene(p, q, u, v);
            scene::validate(s);
        } catch (const Error& e) {
            r.expect("grid-valid", false, [&] { return Failure{{}, in, e.what(), "valid scene", grid}; });
            continue;
        }
        const auto crossings = scene::crossing_count(s, "A", "B");
        const auto I = torus::intersection(A, B);
        r.expect("crossings", crossings == I, [&] {
            return Failure{{}, in, std::to_string(crossings), std::to_string(I),
                           grid + " && curvemul scene validate g.json"};
        });
        const auto bigons = scene::find_bigons(s, "A", "B");
        r.expect("bigon-free", bigons.empty(), [&] {
            return Failure{{}, in, std::to_string(bigons.size()) + " bigons", "0 bigons",
                           grid + " && curvemul scene bigons g.json --from A --to B"};
        });
        const auto bad = scene::corner_alternation_violations(s, "A", "B", convention);
        r.expect("corner-alternation", bad.empty(), [&] {
            return Failure{{}, in, std::to_string(bad.size()) + " faces", "0 faces", grid};
        });

        for (const bool forward : {true, false}) {
            const std::string from = forward ? "A" : "B";
            const std::string to = forward ? "B" : "A";
            const TorusClass product = forward ? torus::multiply(A, B) : torus::multiply(B, A);
            const std::map<TorusClass, std::int64_t> want{{product.primitive(), product.multiplicity()}};
            const std::string rerun = grid + " && curvemul scene census g.json --from " + from + " --to " +
                                      to + smooth_flag;
            const std::string tag = forward ? "" : "-reverse";
            scene::Scene res;
            try {
                res = scene::resolve(s, from, to, convention);
            } catch (const Error& e) {
                r.expect("resolve" + tag, false,
                         [&] { return Failure{{}, in, e.what(), "resolved scene", rerun}; });
                continue;
            }
            const auto trivial = scene::trivial_components(res);
            r.expect("no-trivial-components" + tag, trivial.empty(), [&] {
                return Failure{{}, in, std::to_string(trivial.size()) + " trivial", "0 trivial", rerun};
            });
            std::string error;
            const auto got = census_of(res, error);
            r.expect("census" + tag, error.empty() && got == want, [&] {
                return Failure{{}, in, error.empty() ? render(got) : error, render(want), rerun};
            });
            const auto g0 = scene::euler_genus(s);
            const auto g1 = scene::euler_genus(res);
            r.expect("genus-preserved" + tag, g0.genus == g1.genus, [&] {
                return Failure{{}, in, std::to_string(g1.genus), std::to_string(g0.genus), rerun};
            });
        }
    }

    const auto load = [&](const char* file, scene::Scene (*build)()) {
        if (corpus_dir) return scene::load_scene(*corpus_dir / file);
        return build();
    };

    const auto bigon = load("bigon_control.json", scene::bigon_control_scene);
    const auto bigons = scene::find_bigons(bigon, "A", "B");
    r.expect("control-bigon-detected", !bigons.empty(), [&] {
        return Failure{{}, "bigon_control", "0 bigons", ">= 1 bigon",
                       "curvemul scene bigons corpus/bigon_control.json --from A --to B"};
    });
    bool refused = false;
    try {
        scene::resolve(bigon, "A", "B", convention);
    } catch (const Error& e) {
        refused = e.code() == ErrorCode::BigonPresent;
    }
    r.expect("control-bigon-refused", refused, [&] {
        return Failure{{}, "bigon_control", "resolved", "BigonPresent",
                       "curvemul scene resolve corpus/bigon_control.json --from A --to B"};
    });

    const auto trivial = load("trivial_component_control.json", scene::trivial_component_control_scene);
    const auto found = scene::trivial_components(trivial);
    r.expect("control-trivial-detected", !found.empty(), [&] {
        return Failure{{}, "trivial_component_control", "0 trivial", ">= 1 trivial",
                       "curvemul scene census corpus/trivial_component_control.json"};
    });

    const auto filling = load("genus2_filling_pair.json", scene::genus2_filling_pair);
    std::string outcome;
    bool ok = false;
    try {
        const auto d = scene::validate(filling);
        const auto res = scene::resolve(filling, "A", "B", convention);
        const auto t = scene::trivial_components(res);
        ok = d.genus == 2 && scene::find_bigons(filling, "A", "B").empty() && t.empty();
        outcome = "genus " + std::to_string(d.genus) + ", " + std::to_string(t.size()) + " trivial";
    } catch (const Error& e) {
        outcome = e.what();
    }
    r.expect("control-genus2-curve-system", ok, [&] {
        return Failure{{}, "genus2_filling_pair", outcome, "genus 2, 0 trivial",
                       "curvemul scene census corpus/genus2_filling_pair.json --from A --to B"};
    });
    return r;
}

namespace {

struct NamedDecomposition {
    const char* name;
    dt::PantsDecomposition d;
};

dt::DTCoords random_coords(const dt::PantsDecomposition& d, const dt::DecompositionInfo& info,
                           std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> count(0, 4);
    std::uniform_int_distribution<std::int64_t> twist(-6, 6);
    const auto C = static_cast<std::size_t>(info.internal_curves);
    dt::DTCoords x;
    for (;;) {
        x.m.assign(C, 0);
        x.b.assign(info.boundary_slots.size(), 0);
        x.t.assign(C, 0);
        for (auto& v : x.m) v = count(rng);
        for (auto& v : x.b) v = count(rng);
        try {
            dt::validate_coords(d, x);
            break;
        } catch (const Error&) {
        }
    }
    for (std::size_t i = 0; i < C; ++i) x.t[i] = x.m[i] == 0 ? count(rng) : twist(rng);
    return x;
}

std::vector<std::int64_t> random_k(const dt::DTCoords& x, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> dist(-5, 5);
    std::vector<std::int64_t> k(x.t.size());
    for (std::size_t i = 0; i < k.size(); ++i) k[i] = x.m[i] == 0 ? 0 : dist(rng);
    return k;
}

std::string coords_str(const dt::DTCoords& x) {
    return "m=" + join(x.m) + " t=" + join(x.t) + " b=" + join(x.b);
}

}  // namespace

SuiteReport suite_dt(std::int64_t trials, std::uint64_t seed) {
    require_bound(trials, "trials");
    SuiteReport r;
    r.suite = "dt";
    r.params = {{"trials", trials}, {"seed", seed}};
    Timer timer(r);
    const std::vector<NamedDecomposition> decompositions{{"genus2", dt::genus2_decomposition()},
                                                         {"one_holed_torus", dt::one_holed_torus_decomposition()},
                                                         {"pants", dt::pants_decomposition()}};
    std::mt19937_64 rng(seed);
    const std::string rerun = "curvemul verify --suite dt --trials " + std::to_string(trials) + " --seed " +
                              std::to_string(seed);

    for (const auto& [name, d] : decompositions) {
        const auto info = dt::validate_decomposition(d);
        for (std::int64_t trial = 0; trial < trials; ++trial) {
            const auto x = random_coords(d, info, rng);
            const auto k = random_k(x, rng);
            const auto k2 = random_k(x, rng);
            const std::string in = std::string(name) + " trial=" + std::to_string(trial) + " " + coords_str(x) +
                                   " k=" + join(k);

            const auto y = dt::twist_multiply(x, k);
            const auto solved = dt::solve_twists(y, x);
            r.expect("round-trip", solved == k, [&] { return Failure{{}, in, join(solved), join(k), rerun}; });
            const auto zero = dt::solve_twists(x, x);
            r.expect("zero-twist", std::all_of(zero.begin(), zero.end(), [](auto v) { return v == 0; }),
                     [&] { return Failure{{}, in, join(zero), "zeros", rerun}; });
            r.expect("m-b-invariant", y.m == x.m && y.b == x.b,
                     [&] { return Failure{{}, in, coords_str(y), coords_str(x), rerun}; });

            const auto xy = dt::twist_multiply(dt::twist_multiply(x, k), k2);
            const auto yx = dt::twist_multiply(dt::twist_multiply(x, k2), k);
            r.expect("commutation", xy == yx,
                     [&] { return Failure{{}, in + " k2=" + join(k2), coords_str(xy), coords_str(yx), rerun}; });

            std::string parity;
            try {
                dt::validate_coords(d, y);
            } catch (const Error& e) {
                parity = e.what();
            }
            r.expect("parity-preserved", parity.empty(), [&] { return Failure{{}, in, parity, "valid", rerun}; });

            for (std::size_t i = 0; i < x.m.size(); ++i) {
                std::vector<std::int64_t> e(x.m.size(), 0);
                e[i] = x.m[i];
                const auto lhs = dt::dehn_twist(x, i + 1, TwistDirection::Positive);
                // A twist along a missed curve is the identity.
                const auto rhs = x.m[i] == 0 ? x : dt::twist_multiply(x, e);
                r.expect("dehn-twist", lhs == rhs, [&] {
                    return Failure{{}, in + " i=" + std::to_string(i + 1), coords_str(lhs), coords_str(rhs), rerun};
                });
            }

            if (!x.m.empty()) {
                auto z = x;
                z.m[0] += 2;
                bool mismatch = false;
                try {
                    dt::solve_twists(z, x);
                } catch (const Error& e) {
                    mismatch = e.code() == ErrorCode::IntersectionMismatch;
                }
                r.expect("expected-mismatch", mismatch,
                         [&] { return Failure{{}, in, "no error", "IntersectionMismatch", rerun}; });
            }
        }
    }

    bool mismatch = false;
    try {
        const auto g2 = dt::validate_decomposition(decompositions[0].d);
        const auto pp = dt::validate_decomposition(decompositions[2].d);
        dt::DTCoords a{std::vector<std::int64_t>(g2.internal_curves, 2), std::vector<std::int64_t>(g2.internal_curves, 0),
                       {}};
        dt::DTCoords b{{}, {}, std::vector<std::int64_t>(pp.boundary_slots.size(), 2)};
        dt::solve_twists(a, b);
    } catch (const Error& e) {
        mismatch = e.code() == ErrorCode::IntersectionMismatch;
    }
    r.expect("expected-mismatch", mismatch,
             [&] { return Failure{{}, "genus2 vs pants", "no error", "IntersectionMismatch", rerun}; });
    return r;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"theorem1", "convexity", "theorem6", "prop7", "lemma4", "dt"};
    return names;
}

bool OverallReport::passed() const {
    return std::all_of(suites.begin(), suites.end(), [](const SuiteReport& s) { return s.passed(); });
}

json OverallReport::to_json(bool include_timing) const {
    json j;
    j["passed"] = passed();
    j["suites"] = json::array();
    for (const auto& s : suites) j["suites"].push_back(s.to_json(include_timing));
    return j;
}

OverallReport run_all(const Config& c) {
    const auto& names = suite_names();
    for (const auto& s : c.suites)
        if (std::find(names.begin(), names.end(), s) == names.end())
            throw Error(ErrorCode::InvalidBound, "unknown suite '" + s + "'");
    const auto wanted = [&](const std::string& s) {
        return c.suites.empty() || std::find(c.suites.begin(), c.suites.end(), s) != c.suites.end();
    };
    OverallReport out;
    if (wanted("theorem1")) out.suites.push_back(suite_theorem1(c.theorem1_bound));
    if (wanted("convexity")) out.suites.push_back(suite_convexity(c.convexity_bound, c.n_min, c.n_max));
    if (wanted("theorem6")) out.suites.push_back(suite_theorem6(c.theorem6_bound, c.gamma_bound));
    if (wanted("prop7")) out.suites.push_back(suite_prop7(c.prop7_bound, c.m_max));
    if (wanted("lemma4")) out.suites.push_back(suite_lemma4_and_oracle(c.lemma4_bound, c.smoothing, c.corpus_dir));
    if (wanted("dt")) out.suites.push_back(suite_dt(c.dt_trials, c.seed));
    return out;
}

void write_report(const OverallReport& report, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::Io, "cannot write report to " + path.string());
    out << report.to_json().dump(2) << "\n";
    if (!out) throw Error(ErrorCode::Io, "write failed for " + path.string());
}

}  // namespace curvemul::verify
