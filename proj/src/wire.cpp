#include "wirecode/wire.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace wirecode {

namespace {

const char kTypes[3] = {'X', 'Y', 'Z'};

int type_count(const DegreeProfile& p, int q, char t) {
    switch (t) {
        case 'X': return p.dx[q];
        case 'Y': return p.dy[q];
        default: return p.dz[q];
    }
}

} // namespace

std::vector<int> WireCode::copy_correction(int s) const {
    std::vector<int> gens;
    const PauliOperator& check = input.checks[s];
    for (int q : support(check)) {
        auto slot_it = copy_slot.find({s, q});
        if (slot_it == copy_slot.end()) continue;
        int slot = slot_it->second;
        const Branch& br = branch_of.at({q, check.char_at(q)});
        // walk the branch coupling tree from the data qubit to the slot
        std::map<int, std::vector<std::pair<int, int>>> adj; // qubit -> (neighbor, gen)
        for (int g : br.couplings) {
            auto sup = support(base.gauge[g]);
            if (sup.size() != 2) throw std::logic_error("branch coupling is not two-body");
            adj[sup[0]].push_back({sup[1], g});
            adj[sup[1]].push_back({sup[0], g});
        }
        std::map<int, std::pair<int, int>> prev; // qubit -> (from, gen)
        std::queue<int> frontier;
        frontier.push(q);
        prev[q] = {q, -1};
        while (!frontier.empty()) {
            int u = frontier.front();
            frontier.pop();
            if (u == slot) break;
            for (auto [v, g] : adj[u])
                if (!prev.count(v)) {
                    prev[v] = {u, g};
                    frontier.push(v);
                }
        }
        if (!prev.count(slot)) throw std::logic_error("copy slot unreachable from data qubit");
        for (int u = slot; u != q; u = prev[u].first) gens.push_back(prev[u].second);
    }
    std::sort(gens.begin(), gens.end());
    return gens;
}

int WireCode::max_multi_weight() const {
    int w = 0;
    for (size_t i = 0; i < base.gauge.size(); ++i) {
        int wt = base.gauge[i].weight();
        if (wt >= 2) w = std::max(w, wt);
    }
    return w;
}

int WireCode::max_multi_degree() const {
    std::vector<int> deg(base.n, 0);
    for (const auto& g : base.gauge) {
        if (g.weight() < 2) continue;
        for (int q : support(g)) ++deg[q];
    }
    return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

void WireCode::validate() const {
    base.validate();
    if (max_multi_weight() > 3) throw std::logic_error("multi-qubit check of weight > 3");
    if (max_multi_degree() > 3) throw std::logic_error("qubit in more than 3 multi-qubit checks");
    if (anc_of.size() != input.checks.size()) throw std::logic_error("anc_of does not cover all input checks");
    size_t grouped = base.single_site_set.size() + base.copy_set.size() + base.anc_set.size();
    if (grouped != base.gauge.size()) throw std::logic_error("generator groups do not partition the gauge list");
}

int WireCode::add_qubits(int count, Register reg) {
    int first = base.n;
    base.n += count;
    base.register_of.resize(base.n, reg);
    for (auto& g : base.gauge) g = embed(g, base.n);
    return first;
}

WireCode degree_reduce(const StabilizerCode& code) {
    code.validate();
    DegreeProfile profile = degree_profile(code);

    WireCode wire;
    wire.input = code;
    wire.base.n = code.n;
    wire.base.register_of.assign(code.n, Register::data);
    wire.anc_of.assign(code.checks.size(), {});

    // reserve copy ids qubit by qubit, branch type order X, Y, Z
    for (int q = 0; q < code.n; ++q) {
        for (char t : kTypes) {
            int d = type_count(profile, q, t);
            if (d < 2) continue;
            Branch br;
            br.pauli = t;
            br.target = q;
            int first = wire.add_qubits(d, Register::copy);
            for (int j = 0; j < d; ++j) br.copy_qubits.push_back(first + j);
            wire.branch_of[{q, t}] = br;
        }
    }

    // assign each check's incidences to distinct copies, in check order
    std::map<std::pair<int, char>, int> next_slot;
    for (int s = 0; s < code.num_checks(); ++s) {
        for (int q : support(code.checks[s])) {
            char t = code.checks[s].char_at(q);
            auto it = wire.branch_of.find({q, t});
            if (it == wire.branch_of.end()) continue; // direct support
            int j = next_slot[{q, t}]++;
            wire.copy_slot[{s, q}] = it->second.copy_qubits[j];
        }
    }

    // branch couplings and single-site X checks
    for (auto& [key, br] : wire.branch_of) {
        PauliOperator attach(wire.base.n);
        attach.set_type(br.target, br.pauli);
        attach.set_type(br.copy_qubits[0], 'Z');
        br.couplings.push_back(int(wire.base.gauge.size()));
        wire.base.copy_set.push_back(int(wire.base.gauge.size()));
        wire.base.gauge.push_back(attach);
        for (size_t j = 0; j + 1 < br.copy_qubits.size(); ++j) {
            PauliOperator link(wire.base.n);
            link.set_type(br.copy_qubits[j], 'Z');
            link.set_type(br.copy_qubits[j + 1], 'Z');
            br.couplings.push_back(int(wire.base.gauge.size()));
            wire.base.copy_set.push_back(int(wire.base.gauge.size()));
            wire.base.gauge.push_back(link);
        }
        for (int r : br.copy_qubits) {
            br.single_x.push_back(int(wire.base.gauge.size()));
            wire.base.single_site_set.push_back(int(wire.base.gauge.size()));
            wire.base.gauge.push_back(single_site(wire.base.n, r, 'X'));
        }
    }
    return wire;
}

WeightReduction weight_reduce_check(const PauliOperator& check, const std::vector<int>& order) {
    int w = int(order.size());
    if (w != check.weight()) throw std::invalid_argument("order must list exactly the support of the check");
    if (w < 2) throw std::invalid_argument("weight_reduce_check: check weight below 2");
    WeightReduction out;
    if (w <= 3) {
        out.n_total = check.n;
        out.checks.push_back(check);
        return out;
    }
    out.n_total = check.n + (w - 3);
    for (int a = 0; a < w - 3; ++a) out.anc_qubits.push_back(check.n + a);
    for (int i = 0; i < w - 2; ++i) {
        PauliOperator g(out.n_total);
        if (i == 0) {
            g.set_type(order[0], check.char_at(order[0]));
            g.set_type(order[1], check.char_at(order[1]));
            g.set_type(out.anc_qubits[0], 'Z');
        } else if (i == w - 3) {
            g.set_type(out.anc_qubits[i - 1], 'Z');
            g.set_type(order[w - 2], check.char_at(order[w - 2]));
            g.set_type(order[w - 1], check.char_at(order[w - 1]));
        } else {
            g.set_type(out.anc_qubits[i - 1], 'Z');
            g.set_type(order[i + 1], check.char_at(order[i + 1]));
            g.set_type(out.anc_qubits[i], 'Z');
        }
        out.checks.push_back(std::move(g));
    }
    return out;
}

WireCode build_wire_code(const StabilizerCode& code) {
    WireCode wire = degree_reduce(code);

    for (int s = 0; s < code.num_checks(); ++s) {
        const PauliOperator& check = code.checks[s];
        // substituted support: copy slots where a branch exists, direct otherwise
        std::vector<std::pair<int, char>> terms;
        for (int q : support(check)) {
            auto it = wire.copy_slot.find({s, q});
            if (it != wire.copy_slot.end())
                terms.push_back({it->second, 'Z'});
            else
                terms.push_back({q, check.char_at(q)});
        }
        int w = int(terms.size());
        if (w <= 3) {
            PauliOperator g(wire.base.n);
            for (auto [u, t] : terms) g.set_type(u, t);
            wire.anc_of[s].push_back(int(wire.base.gauge.size()));
            wire.base.anc_set.push_back(int(wire.base.gauge.size()));
            wire.base.gauge.push_back(std::move(g));
            continue;
        }
        int first_anc = wire.add_qubits(w - 3, Register::anc);
        for (int i = 0; i < w - 2; ++i) {
            PauliOperator g(wire.base.n);
            if (i == 0) {
                g.set_type(terms[0].first, terms[0].second);
                g.set_type(terms[1].first, terms[1].second);
                g.set_type(first_anc, 'Z');
            } else if (i == w - 3) {
                g.set_type(first_anc + i - 1, 'Z');
                g.set_type(terms[w - 2].first, terms[w - 2].second);
                g.set_type(terms[w - 1].first, terms[w - 1].second);
            } else {
                g.set_type(first_anc + i - 1, 'Z');
                g.set_type(terms[i + 1].first, terms[i + 1].second);
                g.set_type(first_anc + i, 'Z');
            }
            wire.anc_of[s].push_back(int(wire.base.gauge.size()));
            wire.base.anc_set.push_back(int(wire.base.gauge.size()));
            wire.base.gauge.push_back(std::move(g));
        }
        for (int a = 0; a < w - 3; ++a) {
            wire.base.single_site_set.push_back(int(wire.base.gauge.size()));
            wire.base.gauge.push_back(single_site(wire.base.n, first_anc + a, 'X'));
        }
    }
    return wire;
}

void stretch_edge(WireCode& wire, int gen, int qubit, int len) {
    if (len < 1) throw std::invalid_argument("stretch_edge: length must be >= 1");
    if (gen < 0 || gen >= int(wire.base.gauge.size())) throw std::invalid_argument("stretch_edge: no such generator");
    int t = wire.base.gauge[gen].type_at(qubit);
    if (t == 0) throw std::invalid_argument("stretch_edge: generator does not act on qubit");
    if (len == 1) return;

    char pauli = wire.base.gauge[gen].char_at(qubit);
    int first = wire.add_qubits(len - 1, Register::anc);

    // which provenance list owns this generator
    std::vector<int>* owner = nullptr;
    for (auto& lst : wire.anc_of)
        if (std::find(lst.begin(), lst.end(), gen) != lst.end()) owner = &lst;
    if (!owner)
        for (auto& [key, br] : wire.branch_of)
            if (std::find(br.couplings.begin(), br.couplings.end(), gen) != br.couplings.end())
                owner = &br.couplings;
    bool in_copy_set =
        std::find(wire.base.copy_set.begin(), wire.base.copy_set.end(), gen) != wire.base.copy_set.end();

    wire.base.gauge[gen].set_type(qubit, 'I');
    wire.base.gauge[gen].set_type(first, 'Z');

    auto push_coupling = [&](const PauliOperator& g) {
        int id = int(wire.base.gauge.size());
        if (owner) owner->push_back(id);
        if (in_copy_set)
            wire.base.copy_set.push_back(id);
        else
            wire.base.anc_set.push_back(id);
        wire.base.gauge.push_back(g);
    };

    for (int tdx = 0; tdx + 1 < len - 1; ++tdx) {
        PauliOperator g(wire.base.n);
        g.set_type(first + tdx, 'Z');
        g.set_type(first + tdx + 1, 'Z');
        push_coupling(g);
    }
    PauliOperator last(wire.base.n);
    last.set_type(first + len - 2, 'Z');
    last.set_type(qubit, pauli);
    push_coupling(last);

    for (int a = 0; a < len - 1; ++a) {
        wire.base.single_site_set.push_back(int(wire.base.gauge.size()));
        wire.base.gauge.push_back(single_site(wire.base.n, first + a, 'X'));
    }
    wire.edge_lengths[{gen, qubit}] = len;
}

PauliOperator stabilizer_recovery(const WireCode& wire, int s) {
    if (s < 0 || s >= wire.input.num_checks()) throw std::invalid_argument("stabilizer_recovery: no such check");
    PauliOperator acc(wire.base.n);
    for (int g : wire.anc_of[s]) acc = multiply(acc, wire.base.gauge[g]);
    for (int g : wire.copy_correction(s)) acc = multiply(acc, wire.base.gauge[g]);
    PauliOperator expected = embed(wire.input.checks[s], wire.base.n);
    if (!(acc.x == expected.x && acc.z == expected.z))
        throw std::logic_error("stabilizer recovery failed for check " + std::to_string(s) +
                               ": got " + acc.str());
    return acc;
}

bool verify_relation_image(const StabilizerCode& input, const WireCode& wire, const std::vector<int>& relation) {
    PauliOperator prod(input.n);
    for (int i : relation) prod = multiply(prod, input.checks.at(i));
    if (!prod.is_identity())
        throw std::invalid_argument("verify_relation_image: index set is not a relation of the input code");
    PauliOperator acc(wire.base.n);
    for (int i : relation) acc = multiply(acc, stabilizer_recovery(wire, i));
    return acc.is_identity();
}

} // namespace wirecode
