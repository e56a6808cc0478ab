// Acceptance suite: runs every structural claim against the fixture corpus
// and prints one pass/fail line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "wirecode/embed.hpp"
#include "wirecode/serialize.hpp"
#include "wirecode/syndrome.hpp"
#include "wirecode/verify.hpp"

using namespace wirecode;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void run(int id, const std::string& name, const std::function<void(Outcome&)>& body) {
    Outcome out;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.pass = false;
        out.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!out.pass) ++failures;
    std::printf("%s  criterion %2d: %s (%.1fs)%s%s\n", out.pass ? "PASS" : "FAIL", id, name.c_str(), secs,
                out.detail.empty() ? "" : " -- ", out.detail.c_str());
    std::fflush(stdout);
}

void expect(Outcome& out, bool cond, const std::string& msg) {
    if (!cond) {
        out.pass = false;
        if (!out.detail.empty()) out.detail += "; ";
        out.detail += msg;
    }
}

std::vector<StabilizerCode> named_fixtures() {
    return {fixtures::repetition(), fixtures::five_qubit(), fixtures::shor(), fixtures::four_two_two(),
            fixtures::toric_2x2(), fixtures::overcomplete_repetition()};
}

std::vector<StabilizerCode> random_corpus() {
    std::vector<StabilizerCode> codes;
    for (uint64_t seed = 100; seed < 120; ++seed) codes.push_back(fixtures::random_commuting(seed));
    return codes;
}

} // namespace

int main() {
    std::printf("wirecode acceptance suite\n");

    // 1. k preservation across every construction
    run(1, "k preservation for build/layout2d/layout3d/graph-embed", [](Outcome& out) {
        GeneralGraph reg = random_regular_graph(64, 3, 2024);
        std::vector<StabilizerCode> codes = {fixtures::repetition(), fixtures::five_qubit(), fixtures::shor()};
        for (auto& c : random_corpus()) codes.push_back(c);
        for (size_t i = 0; i < codes.size(); ++i) {
            const auto& code = codes[i];
            int k_in = code.n - gf2_rank(code.checks);
            auto tag = [&](const std::string& what) { return what + " on code " + std::to_string(i); };
            expect(out, compute_k(build_wire_code(code).base) == k_in, tag("build"));
            expect(out, compute_k(layout_2d(code).wire.base) == k_in, tag("layout2d"));
            expect(out, compute_k(layout_Dd(code, 3, 7).wire.base) == k_in, tag("layout3d"));
            expect(out, compute_k(embed_on_graph(code, reg, 7).wire.base) == k_in, tag("embed"));
        }
    });

    // 2. distance bound d_wire >= ceil(d_in / omega), exact values recorded
    run(2, "distance bound on repetition, [[4,2,2]], five-qubit wire codes", [](Outcome& out) {
        struct Case {
            StabilizerCode code;
            int d_in;
        };
        std::vector<Case> cases = {{fixtures::repetition(), 1}, {fixtures::four_two_two(), 2},
                                   {fixtures::five_qubit(), 3}};
        std::string recorded;
        for (auto& [code, d_in] : cases) {
            int omega = code.max_check_weight();
            int target = (d_in + omega - 1) / omega;
            DistanceResult din = dressed_distance(as_subsystem(code), d_in);
            expect(out, din.found && din.d == d_in, "input distance mismatch");
            WireCode wire = build_wire_code(code);
            if (target > 1) {
                DistanceResult below = dressed_distance(wire.base, target - 1);
                expect(out, !below.found, "dressed logical below the target");
            }
            DistanceResult exact = dressed_distance(wire.base, 4);
            expect(out, !exact.found || exact.d >= target, "wire distance under the bound");
            recorded += (recorded.empty() ? "" : ", ") + std::to_string(code.n) + "q: d_wire " +
                        (exact.found ? "= " + std::to_string(exact.d) : "> 4") + " target " +
                        std::to_string(target);
        }
        out.detail = recorded;
    });

    // 3. weight and degree three over the full corpus
    run(3, "multi-qubit check weight <= 3 and qubit degree <= 3", [](Outcome& out) {
        std::vector<StabilizerCode> codes = named_fixtures();
        for (auto& c : random_corpus()) codes.push_back(c);
        for (int d = 2; d <= 5; ++d) codes.push_back(fixtures::rotated_surface(d));
        for (size_t i = 0; i < codes.size(); ++i) {
            WireCode wire = build_wire_code(codes[i]);
            expect(out, wire.max_multi_weight() <= 3, "build weight on code " + std::to_string(i));
            expect(out, wire.max_multi_degree() <= 3, "build degree on code " + std::to_string(i));
            PlacedWireCode flat = layout_2d(codes[i]);
            expect(out, flat.wire.max_multi_weight() <= 3, "2d weight on code " + std::to_string(i));
            expect(out, flat.wire.max_multi_degree() <= 3, "2d degree on code " + std::to_string(i));
        }
    });

    // 4. locality and stacking of the geometric layouts
    run(4, "zero locality violations, stacking within omega*delta+1", [](Outcome& out) {
        for (const auto& code : named_fixtures()) {
            int bound = code.max_check_weight() * code.max_qubit_degree() + 1;
            PlacedWireCode flat = layout_2d(code);
            LocalityReport l2 = check_locality(flat);
            expect(out, l2.violations == 0, "2d violations");
            expect(out, l2.stacking_max <= bound, "2d stacking");
            PlacedWireCode cube = layout_Dd(code, 3, 11);
            LocalityReport l3 = check_locality(cube);
            expect(out, l3.violations == 0, "3d violations");
            expect(out, l3.stacking_max <= bound, "3d stacking");
        }
    });

    // 5. stabilizer recovery identity for every check of every fixture
    run(5, "stabilizer recovery recovers each input check exactly", [](Outcome& out) {
        std::vector<StabilizerCode> codes = named_fixtures();
        for (auto& c : random_corpus()) codes.push_back(c);
        GeneralGraph reg = random_regular_graph(64, 3, 2024);
        for (size_t i = 0; i < codes.size(); ++i) {
            const auto& code = codes[i];
            std::vector<WireCode> wires;
            wires.push_back(build_wire_code(code));
            wires.push_back(layout_2d(code).wire);
            wires.push_back(layout_Dd(code, 3, 13).wire);
            wires.push_back(embed_on_graph(code, reg, 13).wire);
            for (const auto& wire : wires)
                for (int s = 0; s < code.num_checks(); ++s) {
                    PauliOperator r = stabilizer_recovery(wire, s);
                    expect(out, r.str() == embed(code.checks[s], wire.base.n).str(),
                           "recovery failed on code " + std::to_string(i));
                }
        }
    });

    // 6. color classes: count bound and within-class disjointness
    run(6, "color classes within omega*delta+1, pairwise disjoint", [](Outcome& out) {
        std::vector<StabilizerCode> codes = named_fixtures();
        for (auto& c : random_corpus()) codes.push_back(c);
        int worst = 0;
        for (const auto& code : codes) {
            ColorClasses classes = color_classes(code);
            int bound = code.max_check_weight() * code.max_qubit_degree() + 1;
            expect(out, classes.count() <= bound, "class count exceeds the bound");
            worst = std::max(worst, classes.count());
            size_t total = 0;
            for (const auto& cls : classes.classes) {
                total += cls.size();
                for (size_t i = 0; i < cls.size(); ++i)
                    for (size_t j = i + 1; j < cls.size(); ++j)
                        expect(out, cls[i].first != cls[j].first && cls[i].second != cls[j].second,
                               "class shares a qubit or check");
            }
            size_t incidences = 0;
            for (const auto& c : code.checks) incidences += support(c).size();
            expect(out, total == incidences, "classes do not cover all incidences");
        }
        out.detail = "largest measured class count " + std::to_string(worst);
    });

    // 7. grid routing: exact per-class edge-disjointness, empirical height ratio
    run(7, "edge-disjoint grid routing on [8]^2 and [4]^3 instances", [](Outcome& out) {
        std::ostringstream ratios;
        {
            std::mt19937_64 rng(42);
            std::vector<int> cols = {0, 2, 5, 7};
            std::vector<int> perm = cols;
            for (size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);
            std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs;
            for (size_t i = 0; i < cols.size(); ++i) pairs.push_back({{cols[i]}, {perm[i]}});
            RoutedPaths routed = route_grid(pairs, 2, {8}, 8, 42);
            expect(out, routed.max_edge_usage() <= 1, "2d paths share an edge");
            ratios << "c_2 = " << routed.height_ratio;
        }
        {
            std::mt19937_64 rng(43);
            std::vector<int> cells;
            for (int i = 0; i < 16; ++i) cells.push_back(i);
            for (size_t i = cells.size(); i > 1; --i) std::swap(cells[i - 1], cells[rng() % i]);
            cells.resize(8);
            std::vector<int> perm = cells;
            for (size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);
            std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs;
            for (size_t i = 0; i < cells.size(); ++i)
                pairs.push_back({{cells[i] / 4, cells[i] % 4}, {perm[i] / 4, perm[i] % 4}});
            RoutedPaths routed = route_grid(pairs, 3, {4, 4}, 4, 43);
            expect(out, routed.max_edge_usage() <= 1, "3d paths share an edge");
            for (const auto& p : routed.paths)
                for (size_t i = 0; i + 1 < p.size(); ++i)
                    expect(out, routed.grid.manhattan(p[i], p[i + 1]) == 1, "3d path uses a non-edge");
            ratios << ", c_3 = " << routed.height_ratio;
        }
        out.detail = ratios.str();
    });

    // 8. scaling exponent of the 3D layouts over the surface-code family
    run(8, "n_wire growth exponent 1.5 +/- 0.2 at D=3", [](Outcome& out) {
        std::vector<double> xs, ys;
        std::ostringstream sizes;
        for (int d = 4; d <= 10; ++d) {
            StabilizerCode code = fixtures::rotated_surface(d);
            PlacedWireCode placed = layout_Dd(code, 3, 17);
            xs.push_back(std::log(double(code.n)));
            ys.push_back(std::log(double(placed.wire.base.n)));
            sizes << (d > 4 ? " " : "") << code.n << ":" << placed.wire.base.n;
        }
        double n = double(xs.size()), sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (size_t i = 0; i < xs.size(); ++i) {
            sx += xs[i];
            sy += ys[i];
            sxx += xs[i] * xs[i];
            sxy += xs[i] * ys[i];
        }
        double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        std::ostringstream msg;
        msg << "fitted slope " << slope << " over n_wire {" << sizes.str() << "}";
        out.detail = msg.str();
        expect(out, slope >= 1.3 && slope <= 1.7, "slope outside 1.5 +/- 0.2");
    });

    // 9. syndrome extraction reproduces the anticommutation pattern
    run(9, "reconstructed syndromes match for every single-qubit error", [](Outcome& out) {
        uint64_t seed = 5000;
        for (const auto& code : {fixtures::repetition(), fixtures::five_qubit()}) {
            WireCode wire = build_wire_code(code);
            Schedule sched = build_schedule(wire);
            for (int q = 0; q < code.n; ++q)
                for (char p : {'X', 'Y', 'Z'}) {
                    PauliOperator error = single_site(code.n, q, p);
                    SimulationResult r = simulate_extraction(wire, sched, error, seed++, 2);
                    for (int s = 0; s < code.num_checks(); ++s) {
                        uint8_t want = commutes(error, code.checks[s]) ? 0 : 1;
                        expect(out, r.syndromes[0][s] == want, "first-pass syndrome mismatch");
                        expect(out, r.syndromes[1][s] == want, "second-pass syndrome mismatch");
                    }
                }
        }
    });

    // 10. relations map to identity-product relations in the wire code
    run(10, "relations of the over-complete repetition and toric codes", [](Outcome& out) {
        for (const auto& code : {fixtures::overcomplete_repetition(), fixtures::toric_2x2()}) {
            WireCode wire = build_wire_code(code);
            auto rels = relations(code);
            expect(out, !rels.empty(), "expected at least one relation");
            for (const auto& rel : rels)
                expect(out, verify_relation_image(code, wire, rel), "relation image not identity");
        }
    });

    // 11. negative control: a deleted single-site X check is detected
    run(11, "deleting one single-site X check yields a weight-1 dressed logical", [](Outcome& out) {
        auto code = fixtures::five_qubit();
        PlacedWireCode placed = layout_2d(code);
        DistanceResult before = dressed_distance(placed.wire.base, 1);
        expect(out, !before.found, "intact code already has a weight-1 logical");
        int victim = placed.wire.base.single_site_set.front();
        placed.wire.base.gauge[victim] = PauliOperator(placed.wire.base.n);
        DistanceResult after = dressed_distance(placed.wire.base, 1);
        expect(out, after.found && after.d == 1, "mutation not detected");
        VerificationReport rep = verify_all(code, placed, 1);
        expect(out, rep.d_found && rep.d_wire_found == 1, "suite missed the weight-1 witness");
        if (after.found) out.detail = "witness weight-1 at qubit " + std::to_string(support(after.witness)[0]);
    });

    std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "ALL GREEN" : "RED", failures);
    return failures == 0 ? 0 : 1;
}
