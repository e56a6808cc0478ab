#include "wirecode/serialize.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace wirecode {

using nlohmann::json;

namespace {

json gen_to_json(const PauliOperator& g) {
    json terms = json::array();
    for (int q : support(g)) terms.push_back(json::array({q, std::string(1, g.char_at(q))}));
    return terms;
}

PauliOperator gen_from_json(const json& terms, int n) {
    PauliOperator g(n);
    for (const auto& t : terms) g.set_type(t.at(0).get<int>(), t.at(1).get<std::string>().at(0));
    return g;
}

json wire_to_json_obj(const WireCode& wire) {
    json j;
    j["format"] = "wirecode/1";
    j["n"] = wire.base.n;
    std::string regs(wire.base.n, 'd');
    for (int q = 0; q < wire.base.n; ++q)
        regs[q] = wire.base.register_of[q] == Register::data ? 'd'
                 : wire.base.register_of[q] == Register::copy ? 'c'
                                                              : 'a';
    j["registers"] = regs;
    json gens = json::array();
    for (const auto& g : wire.base.gauge) gens.push_back(gen_to_json(g));
    j["generators"] = gens;
    j["groups"] = {{"single_site", wire.base.single_site_set},
                   {"copy", wire.base.copy_set},
                   {"anc", wire.base.anc_set}};
    json input;
    input["n"] = wire.input.n;
    json checks = json::array();
    for (const auto& c : wire.input.checks) checks.push_back(c.str());
    input["checks"] = checks;
    j["input"] = input;

    json branches = json::array();
    for (const auto& [key, br] : wire.branch_of) {
        json b;
        b["qubit"] = br.target;
        b["pauli"] = std::string(1, br.pauli);
        b["copies"] = br.copy_qubits;
        b["couplings"] = br.couplings;
        b["single_x"] = br.single_x;
        branches.push_back(b);
    }
    json slots = json::array();
    for (const auto& [key, copy] : wire.copy_slot) slots.push_back(json::array({key.first, key.second, copy}));
    json lengths = json::array();
    for (const auto& [key, len] : wire.edge_lengths) lengths.push_back(json::array({key.first, key.second, len}));
    j["provenance"] = {{"branches", branches}, {"anc_of", wire.anc_of}, {"copy_slot", slots},
                       {"edge_lengths", lengths}};
    return j;
}

WireCode wire_from_json_obj(const json& j) {
    if (j.at("format").get<std::string>() != "wirecode/1")
        throw std::invalid_argument("expected a wirecode/1 document");
    WireCode wire;
    wire.base.n = j.at("n").get<int>();
    std::string regs = j.at("registers").get<std::string>();
    if (int(regs.size()) != wire.base.n) throw std::invalid_argument("register string length mismatch");
    for (char c : regs)
        wire.base.register_of.push_back(c == 'd' ? Register::data : c == 'c' ? Register::copy : Register::anc);
    for (const auto& g : j.at("generators")) wire.base.gauge.push_back(gen_from_json(g, wire.base.n));
    wire.base.single_site_set = j.at("groups").at("single_site").get<std::vector<int>>();
    wire.base.copy_set = j.at("groups").at("copy").get<std::vector<int>>();
    wire.base.anc_set = j.at("groups").at("anc").get<std::vector<int>>();
    std::vector<std::string> checks;
    for (const auto& c : j.at("input").at("checks")) checks.push_back(c.get<std::string>());
    wire.input = make_code(j.at("input").at("n").get<int>(), checks);
    for (const auto& b : j.at("provenance").at("branches")) {
        Branch br;
        br.target = b.at("qubit").get<int>();
        br.pauli = b.at("pauli").get<std::string>().at(0);
        br.copy_qubits = b.at("copies").get<std::vector<int>>();
        br.couplings = b.at("couplings").get<std::vector<int>>();
        br.single_x = b.at("single_x").get<std::vector<int>>();
        wire.branch_of[{br.target, br.pauli}] = br;
    }
    wire.anc_of = j.at("provenance").at("anc_of").get<std::vector<std::vector<int>>>();
    for (const auto& s : j.at("provenance").at("copy_slot"))
        wire.copy_slot[{s.at(0).get<int>(), s.at(1).get<int>()}] = s.at(2).get<int>();
    for (const auto& l : j.at("provenance").at("edge_lengths"))
        wire.edge_lengths[{l.at(0).get<int>(), l.at(1).get<int>()}] = l.at(2).get<int>();
    return wire;
}

json target_to_json(const Target& t) {
    json j;
    if (t.kind == Target::Kind::grid) {
        j["kind"] = "grid";
        j["dim"] = t.grid.dim;
        j["extents"] = t.grid.extents;
    } else {
        j["kind"] = "graph";
        j["n"] = t.graph.n;
        json edges = json::array();
        for (auto [u, v] : t.graph.edges()) edges.push_back(json::array({u, v}));
        j["edges"] = edges;
    }
    return j;
}

Target target_from_json(const json& j) {
    if (j.at("kind").get<std::string>() == "grid") {
        GridTarget g;
        g.dim = j.at("dim").get<int>();
        g.extents = j.at("extents").get<std::vector<int>>();
        return grid_target(g);
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    return graph_target(make_graph(j.at("n").get<int>(), edges));
}

} // namespace

std::string wire_to_json(const WireCode& wire) { return wire_to_json_obj(wire).dump(2) + "\n"; }

WireCode wire_from_json(const std::string& text) { return wire_from_json_obj(json::parse(text)); }

std::string placed_to_json(const PlacedWireCode& placed) {
    json j;
    j["format"] = "placed/1";
    j["wire"] = wire_to_json_obj(placed.wire);
    j["target"] = target_to_json(placed.target);
    j["placement"] = placed.placement;
    j["stacking_max"] = placed.stacking_max();
    return j.dump(2) + "\n";
}

PlacedWireCode placed_from_json(const std::string& text) {
    json j = json::parse(text);
    if (j.at("format").get<std::string>() != "placed/1") throw std::invalid_argument("expected a placed/1 document");
    PlacedWireCode placed;
    placed.wire = wire_from_json_obj(j.at("wire"));
    placed.target = target_from_json(j.at("target"));
    placed.placement = j.at("placement").get<std::vector<int>>();
    if (int(placed.placement.size()) != placed.wire.base.n)
        throw std::invalid_argument("placement does not cover all qubits");
    return placed;
}

std::string plan_to_json(const EmbeddingPlan& plan) {
    json j;
    j["format"] = "embedplan/1";
    j["eta_qubit"] = plan.eta_qubit;
    j["eta_check"] = plan.eta_check;
    json paths = json::array();
    for (const auto& [key, path] : plan.paths)
        paths.push_back({{"check", key.first}, {"qubit", key.second}, {"path", path}});
    j["paths"] = paths;
    j["congestion"] = plan.congestion;
    j["c"] = plan.c_multiplicity;
    return j.dump(2) + "\n";
}

EmbeddingPlan plan_from_json(const std::string& text) {
    json j = json::parse(text);
    if (j.at("format").get<std::string>() != "embedplan/1")
        throw std::invalid_argument("expected an embedplan/1 document");
    EmbeddingPlan plan;
    plan.eta_qubit = j.at("eta_qubit").get<std::vector<int>>();
    plan.eta_check = j.at("eta_check").get<std::vector<int>>();
    for (const auto& p : j.at("paths"))
        plan.paths[{p.at("check").get<int>(), p.at("qubit").get<int>()}] = p.at("path").get<std::vector<int>>();
    plan.congestion = j.at("congestion").get<int>();
    plan.c_multiplicity = j.at("c").get<int>();
    return plan;
}

std::string schedule_to_json(const Schedule& sched) {
    json j;
    j["format"] = "schedule/1";
    json rounds = json::array();
    for (const auto& r : sched.rounds)
        rounds.push_back({{"partition", r.partition}, {"phase1", r.phase1}, {"phase2", r.phase2}});
    j["rounds"] = rounds;
    j["round_of_check"] = sched.round_of_check;
    j["reconstruction"] = sched.recon_gens;
    return j.dump(2) + "\n";
}

std::string simulation_to_json(const SimulationResult& result, uint64_t seed, const std::string& error) {
    json j;
    j["format"] = "simulation/1";
    j["seed"] = seed;
    j["error"] = error;
    j["phase1"] = result.phase1;
    j["phase2"] = result.phase2;
    j["syndromes"] = result.syndromes;
    return j.dump(2) + "\n";
}

std::string report_to_json(const VerificationReport& r) {
    json j;
    j["format"] = "report/1";
    j["n_in"] = r.n_in;
    j["n_wire"] = r.n_wire;
    j["k_in"] = r.k_in;
    j["k_wire"] = r.k_wire;
    j["k_match"] = r.k_match;
    j["max_weight"] = r.max_weight;
    j["max_degree"] = r.max_degree;
    j["omega"] = r.omega;
    j["d_in_used"] = r.d_in_used;
    j["d_in_exact"] = r.d_in_exact;
    j["d_target"] = r.d_target;
    j["d_found"] = r.d_found;
    j["d_wire_found"] = r.d_wire_found;
    j["d_witness"] = r.d_witness;
    j["bound_ok"] = r.bound_ok;
    j["d_inconclusive"] = r.d_inconclusive;
    j["locality_violations"] = r.locality_violations;
    j["stacking_max"] = r.stacking_max;
    j["congestion_max"] = r.congestion_max;
    j["relations_ok"] = r.relations_ok;
    j["recovery_ok"] = r.recovery_ok;
    j["overhead_ratio"] = r.overhead_ratio;
    j["all_green"] = r.all_green();
    return j.dump(2) + "\n";
}

std::string placed_to_dot(const PlacedWireCode& placed) {
    std::ostringstream out;
    out << "graph wirecode {\n";
    out << "  node [shape=circle, style=filled, fillcolor=white];\n";
    bool grid = placed.target.kind == Target::Kind::grid;
    for (int q = 0; q < placed.wire.base.n; ++q) {
        out << "  q" << q << " [";
        switch (placed.wire.base.register_of[q]) {
            case Register::data: out << "fillcolor=lightblue"; break;
            case Register::copy: out << "fillcolor=peachpuff"; break;
            case Register::anc: out << "fillcolor=lightgray"; break;
        }
        if (grid) {
            auto c = placed.target.grid.coords(placed.placement[q]);
            out << ", pos=\"" << c[0] << "," << (c.size() > 1 ? c[1] : 0) << "!\"";
        }
        out << "];\n";
    }
    for (size_t gi = 0; gi < placed.wire.base.gauge.size(); ++gi) {
        const auto& g = placed.wire.base.gauge[gi];
        if (g.weight() < 2) continue;
        out << "  g" << gi << " [shape=box, fillcolor=black, width=0.1, height=0.1, label=\"\"];\n";
        for (int q : support(g)) out << "  g" << gi << " -- q" << q << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

} // namespace wirecode
