#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "wirecode/serialize.hpp"

using namespace wirecode;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitRouting = 3;

StabilizerCode load_code(const std::string& path) { return parse_code_text(read_text_file(path)); }

int quick_distance_target(const StabilizerCode& code) {
    int cap = std::min(code.n, 4);
    DistanceResult d = dressed_distance(as_subsystem(code), cap);
    int d_in = d.found ? d.d : cap + 1;
    int omega = code.max_check_weight();
    return (d_in + omega - 1) / omega;
}

struct TargetConfig {
    int dim = 0;             // 0 = none, 2 = planar, >=3 = grid routing
    std::string graph_path;  // non-empty = general graph

    int count() const { return (dim > 0 ? 1 : 0) + (graph_path.empty() ? 0 : 1); }
};

PlacedWireCode build_target(const StabilizerCode& code, const TargetConfig& t, uint64_t seed, int retries,
                            bool post_reduce, EmbeddingPlan* plan_out, int* congestion_out) {
    if (!t.graph_path.empty()) {
        GeneralGraph g = parse_edge_list(read_text_file(t.graph_path));
        EmbeddingPlan plan;
        PlacedWireCode placed = embed_on_graph(code, g, seed, post_reduce, &plan);
        if (plan_out) *plan_out = plan;
        if (congestion_out) *congestion_out = plan.congestion;
        return placed;
    }
    if (t.dim == 2) return layout_2d(code);
    return layout_Dd(code, t.dim, seed, retries);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"wirecode: compile stabilizer codes into weight/degree-3 local subsystem codes"};
    app.require_subcommand(1);

    std::string code_path, graph_path, out_path, error_string;
    int dim = 0, wmax = 0, retries = 8, passes = 1;
    uint64_t seed = 1;
    bool no_reduce = false;

    auto add_common = [&](CLI::App* cmd, bool needs_target) {
        cmd->add_option("code", code_path, "input code file (one Pauli string per line)")->required();
        cmd->add_option("--seed", seed, "seed for randomized choices");
        cmd->add_option("--out", out_path, "output path");
        if (needs_target) {
            cmd->add_option("--dim", dim, "grid dimension (2 for the planar layout, >=3 for routed layouts)");
            cmd->add_option("--graph", graph_path, "edge-list file of a target connectivity graph");
            cmd->add_option("--retries", retries, "height retries for grid routing");
            cmd->add_flag("--no-reduce", no_reduce, "skip weight/degree reduction in graph embedding");
        }
    };

    auto* cmd_build = app.add_subcommand("build", "weight/degree reduction with unit edge lengths");
    add_common(cmd_build, false);

    auto* cmd_layout = app.add_subcommand("layout", "geometric layout on a grid");
    add_common(cmd_layout, true);

    auto* cmd_embed = app.add_subcommand("embed", "local embedding on a general graph");
    add_common(cmd_embed, true);

    auto* cmd_verify = app.add_subcommand("verify", "build, lay out, and verify every structural property");
    add_common(cmd_verify, true);
    cmd_verify->add_option("--wmax", wmax, "dressed-distance search budget on the wire code");

    auto* cmd_schedule = app.add_subcommand("schedule", "two-phase gauge measurement schedule");
    add_common(cmd_schedule, false);

    auto* cmd_simulate = app.add_subcommand("simulate", "simulate syndrome extraction for a data error");
    add_common(cmd_simulate, false);
    cmd_simulate->add_option("--error", error_string, "Pauli string on the data register")->required();
    cmd_simulate->add_option("--passes", passes, "number of schedule passes");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_build->parsed()) {
            StabilizerCode code = load_code(code_path);
            WireCode wire = build_wire_code(code);
            int k = compute_k(wire.base);
            int delta = std::max(code.max_qubit_degree(), 1);
            std::cout << "[[" << wire.base.n << "," << k << ",d>=" << quick_distance_target(code) << "]]"
                      << " weight " << wire.max_multi_weight() << " degree " << wire.max_multi_degree()
                      << " overhead " << double(wire.base.n) / double(code.n) << " (<= " << 3 * delta
                      << " x n_in)\n";
            write_text_file(out_path.empty() ? code_path + ".wire.json" : out_path, wire_to_json(wire));
            return kExitOk;
        }
        if (cmd_layout->parsed()) {
            if (dim < 2) throw CLI::ValidationError("--dim", "layout needs --dim 2 or --dim >= 3");
            StabilizerCode code = load_code(code_path);
            PlacedWireCode placed = dim == 2 ? layout_2d(code) : layout_Dd(code, dim, seed, retries);
            std::string base = out_path.empty() ? code_path + ".placed" : out_path;
            write_text_file(base + ".json", placed_to_json(placed));
            write_text_file(base + ".dot", placed_to_dot(placed));
            std::cout << "n " << placed.wire.base.n << " stacking " << placed.stacking_max();
            if (placed.target.kind == Target::Kind::grid) {
                std::cout << " extents";
                for (int e : placed.target.grid.extents) std::cout << " " << e;
            }
            std::cout << "\n";
            return kExitOk;
        }
        if (cmd_embed->parsed()) {
            if (graph_path.empty()) throw CLI::ValidationError("--graph", "embed needs a target graph");
            StabilizerCode code = load_code(code_path);
            GeneralGraph g = parse_edge_list(read_text_file(graph_path));
            EmbeddingPlan plan;
            PlacedWireCode placed = embed_on_graph(code, g, seed, !no_reduce, &plan);
            std::string base = out_path.empty() ? code_path + ".embedded" : out_path;
            write_text_file(base + ".json", placed_to_json(placed));
            write_text_file(base + ".plan.json", plan_to_json(plan));
            std::cout << "n " << placed.wire.base.n << " congestion " << plan.congestion << " c "
                      << plan.c_multiplicity << " expansion>= " << expansion_lower_bound(g) << "\n";
            return kExitOk;
        }
        if (cmd_verify->parsed()) {
            TargetConfig t;
            t.dim = dim;
            t.graph_path = graph_path;
            if (t.count() != 1) throw CLI::ValidationError("target", "verify needs exactly one of --dim / --graph");
            StabilizerCode code = load_code(code_path);
            int congestion = 0;
            PlacedWireCode placed = build_target(code, t, seed, retries, !no_reduce, nullptr, &congestion);
            int budget = wmax > 0 ? wmax : std::min(code.n, 4);
            VerificationReport report = verify_all(code, placed, budget, congestion);
            std::cout << report.table();
            if (!out_path.empty()) write_text_file(out_path, report_to_json(report));
            return report.all_green() ? kExitOk : kExitVerifyFail;
        }
        if (cmd_schedule->parsed()) {
            StabilizerCode code = load_code(code_path);
            WireCode wire = build_wire_code(code);
            Schedule sched = build_schedule(wire);
            write_text_file(out_path.empty() ? code_path + ".schedule.json" : out_path, schedule_to_json(sched));
            std::cout << sched.rounds.size() << " rounds\n";
            return kExitOk;
        }
        if (cmd_simulate->parsed()) {
            StabilizerCode code = load_code(code_path);
            PauliOperator error = parse_pauli(error_string);
            if (error.n != code.n) throw std::invalid_argument("--error must act on the data register");
            WireCode wire = build_wire_code(code);
            Schedule sched = build_schedule(wire);
            SimulationResult result = simulate_extraction(wire, sched, error, seed, passes);
            write_text_file(out_path.empty() ? code_path + ".sim.json" : out_path,
                            simulation_to_json(result, seed, error_string));
            std::cout << "syndrome";
            for (uint8_t b : result.syndromes[0]) std::cout << " " << int(b);
            std::cout << "\n";
            return kExitOk;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::runtime_error& e) {
        std::string what = e.what();
        std::cerr << "error: " << what << "\n";
        return what.find("routing") != std::string::npos ? kExitRouting : kExitInput;
    }
    return kExitInput;
}
