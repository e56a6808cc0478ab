#include "wirecode/embed.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <random>
#include <stdexcept>

namespace wirecode {

namespace {

template <class T>
void seeded_shuffle(std::vector<T>& v, std::mt19937_64& rng) {
    for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng() % i]);
}

int edge_key(const GeneralGraph& g, int u, int v) {
    (void)g;
    int lo = std::min(u, v), hi = std::max(u, v);
    return lo * 1000003 + hi; // graphs here are far below this size
}

} // namespace

std::vector<int> bfs_distances(const GeneralGraph& g, int src) {
    std::vector<int> dist(g.n, -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.adj[u])
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
    }
    return dist;
}

CongestionRoutes route_congestion(const GeneralGraph& g, const std::vector<std::pair<int, int>>& pairs,
                                  uint64_t seed) {
    for (auto [u, v] : pairs)
        if (u < 0 || v < 0 || u >= g.n || v >= g.n) throw std::invalid_argument("route_congestion: bad endpoint");
    std::map<int, int> usage;
    CongestionRoutes out;
    out.paths.resize(pairs.size());
    std::vector<int> order(pairs.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = int(i);
    std::mt19937_64 rng(seed);
    seeded_shuffle(order, rng);
    for (int idx : order) {
        auto [src, dst] = pairs[idx];
        if (src == dst) {
            out.paths[idx] = {src};
            continue;
        }
        // Dijkstra, edge cost 2^usage (capped)
        const int64_t INF = std::numeric_limits<int64_t>::max();
        std::vector<int64_t> dist(g.n, INF);
        std::vector<int> prev(g.n, -1);
        using Item = std::pair<int64_t, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
        dist[src] = 0;
        pq.push({0, src});
        while (!pq.empty()) {
            auto [d, u] = pq.top();
            pq.pop();
            if (d != dist[u]) continue;
            if (u == dst) break;
            for (int v : g.adj[u]) {
                int use = 0;
                auto it = usage.find(edge_key(g, u, v));
                if (it != usage.end()) use = it->second;
                int64_t w = int64_t(1) << std::min(use, 40);
                if (dist[u] + w < dist[v]) {
                    dist[v] = dist[u] + w;
                    prev[v] = u;
                    pq.push({dist[v], v});
                }
            }
        }
        if (dist[dst] == INF) throw std::runtime_error("route_congestion: graph is disconnected");
        std::vector<int> path;
        for (int v = dst; v != -1; v = prev[v]) path.push_back(v);
        std::reverse(path.begin(), path.end());
        for (size_t i = 0; i + 1 < path.size(); ++i) ++usage[edge_key(g, path[i], path[i + 1])];
        out.paths[idx] = std::move(path);
    }
    for (auto& [k, v] : usage) out.congestion = std::max(out.congestion, v);
    return out;
}

namespace {

// Deferred generator builder shared with the layouts would be overkill here;
// graphs in scope are small, so incremental add_qubits is fine.
struct EmbedBuilder {
    WireCode& wire;
    std::map<int, int>& vertex_of;

    int new_qubit(int vertex) {
        int id = wire.add_qubits(1, Register::anc);
        vertex_of[id] = vertex;
        return id;
    }

    void coupling(std::vector<std::pair<int, char>> terms, int check) {
        PauliOperator g(wire.base.n);
        for (auto [q, t] : terms) g.set_type(q, t);
        wire.base.anc_set.push_back(int(wire.base.gauge.size()));
        wire.anc_of[check].push_back(int(wire.base.gauge.size()));
        wire.base.gauge.push_back(std::move(g));
    }

    void single(int qubit) {
        wire.base.single_site_set.push_back(int(wire.base.gauge.size()));
        wire.base.gauge.push_back(single_site(wire.base.n, qubit, 'X'));
    }
};

} // namespace

PlacedWireCode embed_on_graph(const StabilizerCode& code, const GeneralGraph& g, uint64_t seed,
                              bool post_reduce, EmbeddingPlan* plan_out) {
    code.validate();
    if (g.n < 1 || g.num_edges() < 1) throw std::invalid_argument("embed_on_graph: target needs a vertex and an edge");
    if (!g.connected()) throw std::invalid_argument("embed_on_graph: target graph is disconnected");

    int items = code.n + code.num_checks();
    std::vector<int> eta(items);
    std::mt19937_64 rng(seed);
    bool injective = items <= g.n;
    if (injective) {
        std::vector<int> verts(g.n);
        for (int v = 0; v < g.n; ++v) verts[v] = v;
        seeded_shuffle(verts, rng);
        for (int i = 0; i < items; ++i) eta[i] = verts[i];
    } else {
        for (int i = 0; i < items; ++i) eta[i] = i % g.n;
    }

    std::vector<std::pair<int, int>> incidences; // (q, s)
    for (int s = 0; s < code.num_checks(); ++s)
        for (int q : support(code.checks[s])) incidences.push_back({q, s});

    // local search: swap two assignments when the total path length drops
    if (injective && g.n <= 2048) {
        std::vector<std::vector<int>> dist(g.n);
        for (int v = 0; v < g.n; ++v) dist[v] = bfs_distances(g, v);
        auto total = [&]() {
            long long t = 0;
            for (auto [q, s] : incidences) t += dist[eta[q]][eta[code.n + s]];
            return t;
        };
        long long best = total();
        for (int it = 0; it < 2 * g.n; ++it) {
            int a = int(rng() % items), b = int(rng() % items);
            if (a == b) continue;
            std::swap(eta[a], eta[b]);
            long long t = total();
            if (t < best)
                best = t;
            else
                std::swap(eta[a], eta[b]);
        }
    }

    WireCode wire = post_reduce ? degree_reduce(code) : [&] {
        WireCode w;
        w.input = code;
        w.base.n = code.n;
        w.base.register_of.assign(code.n, Register::data);
        w.anc_of.assign(code.checks.size(), {});
        return w;
    }();

    std::map<int, int> vertex_of;
    for (int q = 0; q < code.n; ++q) {
        vertex_of[q] = eta[q];
        for (char t : {'X', 'Y', 'Z'}) {
            auto it = wire.branch_of.find({q, t});
            if (it != wire.branch_of.end())
                for (int r : it->second.copy_qubits) vertex_of[r] = eta[q];
        }
    }

    // route each color class independently; densities merge by summation
    EmbeddingPlan plan;
    plan.eta_qubit.assign(eta.begin(), eta.begin() + code.n);
    plan.eta_check.assign(eta.begin() + code.n, eta.end());
    for (const auto& cls : color_classes(code).classes) {
        std::vector<std::pair<int, int>> endpoints;
        std::vector<std::pair<int, int>> keys;
        for (auto [q, s] : cls) {
            if (code.checks[s].weight() < 2) continue;
            endpoints.push_back({eta[q], eta[code.n + s]});
            keys.push_back({s, q});
        }
        if (endpoints.empty()) continue;
        CongestionRoutes routes = route_congestion(g, endpoints, rng());
        for (size_t i = 0; i < keys.size(); ++i) plan.paths[keys[i]] = routes.paths[i];
    }

    EmbedBuilder builder{wire, vertex_of};
    std::vector<std::vector<int>> check_ends(code.num_checks());
    for (int s = 0; s < code.num_checks(); ++s) {
        auto sup = support(code.checks[s]);
        check_ends[s].assign(sup.size(), -1);
        for (size_t pos = 0; pos < sup.size(); ++pos) {
            int q = sup[pos];
            if (code.checks[s].weight() < 2) continue;
            int source = q;
            char pauli = code.checks[s].char_at(q);
            auto slot = wire.copy_slot.find({s, q});
            if (slot != wire.copy_slot.end()) {
                source = slot->second;
                pauli = 'Z';
            }
            const auto& path = plan.paths.at({s, q});
            int prev = source;
            char prev_type = pauli;
            if (path.size() == 1) {
                // eta(q) == eta(s): a single stacked wire qubit keeps the
                // tooth structure intact
                int nq = builder.new_qubit(path[0]);
                builder.coupling({{prev, prev_type}, {nq, 'Z'}}, s);
                builder.single(nq);
                prev = nq;
            } else {
                for (size_t t = 1; t < path.size(); ++t) {
                    int nq = builder.new_qubit(path[t]);
                    builder.coupling({{prev, prev_type}, {nq, 'Z'}}, s);
                    builder.single(nq);
                    prev = nq;
                    prev_type = 'Z';
                }
            }
            check_ends[s][pos] = prev;
        }
    }

    for (int s = 0; s < code.num_checks(); ++s) {
        const PauliOperator& check = code.checks[s];
        int w = check.weight();
        if (w < 2) {
            int q = support(check)[0];
            auto slot = wire.copy_slot.find({s, q});
            if (slot != wire.copy_slot.end())
                builder.coupling({{slot->second, 'Z'}}, s);
            else
                builder.coupling({{q, check.char_at(q)}}, s);
            continue;
        }
        int site = eta[code.n + s];
        const std::vector<int>& ends = check_ends[s];
        if (w <= 3 || !post_reduce) {
            std::vector<std::pair<int, char>> terms;
            for (int e : ends) terms.push_back({e, 'Z'});
            builder.coupling(std::move(terms), s);
        } else {
            std::vector<int> bq(w - 3);
            for (int a = 0; a < w - 3; ++a) {
                bq[a] = builder.new_qubit(site);
                builder.single(bq[a]);
            }
            for (int i = 0; i < w - 2; ++i) {
                if (i == 0)
                    builder.coupling({{ends[0], 'Z'}, {ends[1], 'Z'}, {bq[0], 'Z'}}, s);
                else if (i == w - 3)
                    builder.coupling({{bq[i - 1], 'Z'}, {ends[w - 2], 'Z'}, {ends[w - 1], 'Z'}}, s);
                else
                    builder.coupling({{bq[i - 1], 'Z'}, {ends[i + 1], 'Z'}, {bq[i], 'Z'}}, s);
            }
        }
    }

    PlacedWireCode placed;
    placed.wire = std::move(wire);
    placed.target = graph_target(g);
    placed.placement.resize(placed.wire.base.n);
    for (auto& [q, v] : vertex_of) placed.placement[q] = v;

    // recount multiplicities for the plan report
    std::map<int, int> edge_mult;
    int congestion = 0;
    for (auto& [key, path] : plan.paths)
        for (size_t i = 0; i + 1 < path.size(); ++i)
            congestion = std::max(congestion, ++edge_mult[edge_key(g, path[i], path[i + 1])]);
    plan.congestion = congestion;
    plan.c_multiplicity = std::max(placed.stacking_max(), congestion);
    if (plan_out) *plan_out = plan;
    return placed;
}

PlacedWireCode embed_with_plan(const WireCode& wire_in, const EmbeddingPlan& plan, const GeneralGraph& g) {
    WireCode wire = wire_in;
    const StabilizerCode& code = wire.input;
    if (int(plan.eta_qubit.size()) != code.n || int(plan.eta_check.size()) != code.num_checks())
        throw std::invalid_argument("embed_with_plan: plan does not cover the code");

    std::map<int, int> vertex_of;
    for (int q = 0; q < code.n; ++q) vertex_of[q] = plan.eta_qubit[q];
    for (auto& [key, br] : wire.branch_of)
        for (int r : br.copy_qubits) vertex_of[r] = plan.eta_qubit[br.target];
    for (int s = 0; s < code.num_checks(); ++s)
        for (int gi : wire.anc_of[s])
            for (int q : support(wire.base.gauge[gi]))
                if (wire.base.register_of[q] == Register::anc) vertex_of[q] = plan.eta_check[s];

    for (int s = 0; s < code.num_checks(); ++s) {
        for (int q : support(code.checks[s])) {
            auto pit = plan.paths.find({s, q});
            if (pit == plan.paths.end()) throw std::invalid_argument("embed_with_plan: missing path for an incidence");
            const std::vector<int>& path = pit->second;
            if (path.front() != plan.eta_qubit[q] || path.back() != plan.eta_check[s])
                throw std::invalid_argument("embed_with_plan: path endpoints disagree with the assignment");
            int len = int(path.size()) - 1;
            if (len <= 1) continue;
            int source = q;
            auto slot = wire.copy_slot.find({s, q});
            if (slot != wire.copy_slot.end()) source = slot->second;
            // the gadget coupling acting on this tooth
            int gen = -1;
            for (int gi : wire.anc_of[s])
                if (wire.base.gauge[gi].type_at(source) != 0) gen = gi;
            if (gen < 0) throw std::invalid_argument("embed_with_plan: wire code has no coupling for an incidence");
            int first_new = wire.base.n;
            stretch_edge(wire, gen, source, len);
            for (int t = 0; t < len - 1; ++t) vertex_of[first_new + t] = path[len - 1 - t];
        }
    }

    PlacedWireCode placed;
    placed.wire = std::move(wire);
    placed.target = graph_target(g);
    placed.placement.resize(placed.wire.base.n);
    for (auto& [q, v] : vertex_of) placed.placement[q] = v;
    return placed;
}

} // namespace wirecode
