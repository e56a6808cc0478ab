#include "wirecode/layout.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <random>
#include <stdexcept>

namespace wirecode {

namespace {

template <class T>
void seeded_shuffle(std::vector<T>& v, std::mt19937_64& rng) {
    for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng() % i]);
}

int iceil_root(int value, int power) {
    if (value <= 1) return 1;
    int r = int(std::ceil(std::pow(double(value), 1.0 / power)));
    while (std::pow(double(r), power) < value - 1e-9) ++r;
    while (r > 1 && std::pow(double(r - 1), power) >= value) --r;
    return r;
}

} // namespace

int GridTarget::num_vertices() const {
    int n = 1;
    for (int e : extents) n *= e;
    return n;
}

int GridTarget::index(const std::vector<int>& c) const {
    int v = 0;
    for (int a = 0; a < dim; ++a) v = v * extents[a] + c[a];
    return v;
}

std::vector<int> GridTarget::coords(int vertex) const {
    std::vector<int> c(dim);
    for (int a = dim - 1; a >= 0; --a) {
        c[a] = vertex % extents[a];
        vertex /= extents[a];
    }
    return c;
}

std::vector<int> GridTarget::neighbors(int vertex) const {
    std::vector<int> out;
    std::vector<int> c = coords(vertex);
    int stride = 1;
    for (int a = dim - 1; a >= 0; --a) {
        if (c[a] > 0) out.push_back(vertex - stride);
        if (c[a] + 1 < extents[a]) out.push_back(vertex + stride);
        stride *= extents[a];
    }
    return out;
}

int GridTarget::manhattan(int u, int v) const {
    auto a = coords(u), b = coords(v);
    int d = 0;
    for (int i = 0; i < dim; ++i) d += std::abs(a[i] - b[i]);
    return d;
}

int Target::num_vertices() const { return kind == Kind::grid ? grid.num_vertices() : graph.n; }

bool Target::adjacent(int u, int v) const {
    if (kind == Kind::grid) return grid.manhattan(u, v) == 1;
    return graph.has_edge(u, v);
}

Target grid_target(GridTarget g) {
    Target t;
    t.kind = Target::Kind::grid;
    t.grid = std::move(g);
    return t;
}

Target graph_target(GeneralGraph g) {
    Target t;
    t.kind = Target::Kind::graph;
    t.graph = std::move(g);
    return t;
}

std::vector<int> PlacedWireCode::stacking_counts() const {
    std::vector<int> counts(target.num_vertices(), 0);
    for (int v : placement) ++counts[v];
    return counts;
}

int PlacedWireCode::stacking_max() const {
    auto c = stacking_counts();
    return c.empty() ? 0 : *std::max_element(c.begin(), c.end());
}

ColorClasses color_classes(const StabilizerCode& code) {
    std::vector<std::pair<int, int>> pairs; // (q, s)
    for (int s = 0; s < code.num_checks(); ++s)
        for (int q : support(code.checks[s])) pairs.push_back({q, s});
    std::vector<int> color(pairs.size(), -1);
    int max_color = -1;
    for (size_t i = 0; i < pairs.size(); ++i) {
        std::vector<char> taken(pairs.size() + 1, 0);
        for (size_t j = 0; j < i; ++j)
            if (pairs[j].first == pairs[i].first || pairs[j].second == pairs[i].second) taken[color[j]] = 1;
        int c = 0;
        while (taken[c]) ++c;
        color[i] = c;
        max_color = std::max(max_color, c);
    }
    ColorClasses out;
    out.classes.resize(max_color + 1);
    for (size_t i = 0; i < pairs.size(); ++i) out.classes[color[i]].push_back(pairs[i]);
    return out;
}

namespace {

int grid_edge_id(const GridTarget& grid, int u, int v) {
    int lo = std::min(u, v), hi = std::max(u, v);
    int stride = 1, axis = -1;
    for (int a = grid.dim - 1; a >= 0; --a) {
        if (hi - lo == stride) {
            axis = a;
            break;
        }
        stride *= grid.extents[a];
    }
    if (axis < 0) throw std::logic_error("grid_edge_id on non-adjacent vertices");
    return lo * grid.dim + axis;
}

uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// One color class: sequential shortest paths with hard unit edge capacity,
// a soft penalty on vertices already holding this class's qubits, and a
// deterministic per-attempt edge jitter so equal-length paths spread out
// instead of hugging the grid boundary. A* with the Manhattan bound keeps
// long thin grids fast; search state is stamped so buffers are reused.
struct ClassRouter {
    const GridTarget& grid;
    uint64_t salt;
    std::vector<char> edge_used;
    std::vector<int> occupancy;
    std::vector<int64_t> dist;
    std::vector<int> prev;
    std::vector<uint32_t> stamp;
    uint32_t cur_stamp = 0;

    ClassRouter(const GridTarget& g, uint64_t jitter_salt)
        : grid(g), salt(jitter_salt), edge_used(size_t(g.num_vertices()) * g.dim, 0),
          occupancy(g.num_vertices(), 0), dist(g.num_vertices(), 0), prev(g.num_vertices(), -1),
          stamp(g.num_vertices(), 0) {}

    int64_t edge_cost(int id, int to) const {
        return 1024 + int64_t(mix64(salt ^ uint64_t(id)) & 255) + 16 * std::min(occupancy[to], 64);
    }

    std::vector<int> find_path(int src, int dst) {
        ++cur_stamp;
        auto seen = [&](int v) { return stamp[v] == cur_stamp; };
        auto touch = [&](int v) { stamp[v] = cur_stamp; };
        using Item = std::pair<int64_t, int>; // (g + heuristic, vertex)
        std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
        touch(src);
        dist[src] = 0;
        prev[src] = -1;
        pq.push({int64_t(1024) * grid.manhattan(src, dst), src});
        bool reached = false;
        while (!pq.empty()) {
            auto [f, u] = pq.top();
            pq.pop();
            if (u == dst) {
                reached = true;
                break;
            }
            if (f - int64_t(1024) * grid.manhattan(u, dst) != dist[u]) continue;
            for (int v : grid.neighbors(u)) {
                int id = grid_edge_id(grid, u, v);
                if (edge_used[id]) continue;
                int64_t nd = dist[u] + edge_cost(id, v);
                if (!seen(v) || nd < dist[v]) {
                    touch(v);
                    dist[v] = nd;
                    prev[v] = u;
                    pq.push({nd + int64_t(1024) * grid.manhattan(v, dst), v});
                }
            }
        }
        if (!reached) return {};
        std::vector<int> path;
        for (int v = dst; v != -1; v = prev[v]) path.push_back(v);
        std::reverse(path.begin(), path.end());
        return path;
    }

    bool route(int src, int dst, std::vector<int>& out) {
        out = find_path(src, dst);
        if (out.empty()) return false;
        for (size_t i = 0; i + 1 < out.size(); ++i) edge_used[grid_edge_id(grid, out[i], out[i + 1])] = 1;
        for (size_t i = 1; i < out.size(); ++i) ++occupancy[out[i]];
        return true;
    }
};

// One greedy attempt over one class. Pairs are (source vertex, sink vertex)
// on the bottom/top faces; `order` fixes the routing sequence.
std::vector<std::vector<int>> greedy_class_attempt(const GridTarget& grid,
                                                   const std::vector<std::pair<int, int>>& pairs,
                                                   const std::vector<int>& order, uint64_t salt,
                                                   int* blocking = nullptr) {
    ClassRouter router(grid, salt);
    std::vector<std::vector<int>> paths(pairs.size());
    for (int idx : order)
        if (!router.route(pairs[idx].first, pairs[idx].second, paths[idx])) {
            if (blocking) *blocking = idx;
            return {};
        }
    return paths;
}

bool paths_edge_disjoint(const GridTarget& grid, const std::vector<std::vector<int>>& paths) {
    std::vector<char> used(size_t(grid.num_vertices()) * grid.dim, 0);
    for (const auto& p : paths)
        for (size_t i = 0; i + 1 < p.size(); ++i) {
            int id = grid_edge_id(grid, p[i], p[i + 1]);
            if (used[id]) return false;
            used[id] = 1;
        }
    return true;
}

// Constructive fallback candidate: pair i rises in its source column,
// crosses in a private layer, and rises in its sink column. Disjointness is
// not guaranteed when a source column doubles as another pair's sink
// column, so the result is verified and discarded if it clashes.
std::vector<std::vector<int>> layered_class_attempt(const GridTarget& grid,
                                                    const std::vector<std::pair<int, int>>& pairs) {
    int h = grid.extents[grid.dim - 1];
    if (int(pairs.size()) + 1 > h) return {};
    std::vector<std::vector<int>> paths(pairs.size());
    for (size_t i = 0; i < pairs.size(); ++i) {
        int layer = int(i) + 1;
        std::vector<int> src = grid.coords(pairs[i].first);
        std::vector<int> dst = grid.coords(pairs[i].second);
        std::vector<int> cur = src;
        std::vector<int>& path = paths[i];
        path.push_back(grid.index(cur));
        while (cur[grid.dim - 1] < layer) {
            ++cur[grid.dim - 1];
            path.push_back(grid.index(cur));
        }
        for (int a = 0; a < grid.dim - 1; ++a)
            while (cur[a] != dst[a]) {
                cur[a] += dst[a] > cur[a] ? 1 : -1;
                path.push_back(grid.index(cur));
            }
        while (cur[grid.dim - 1] < h - 1) {
            ++cur[grid.dim - 1];
            path.push_back(grid.index(cur));
        }
    }
    if (!paths_edge_disjoint(grid, paths)) return {};
    return paths;
}

std::vector<std::vector<int>> route_class(const GridTarget& grid, const std::vector<std::pair<int, int>>& pairs,
                                          std::mt19937_64& rng, int* blocking = nullptr) {
    std::vector<int> order(pairs.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = int(i);
    seeded_shuffle(order, rng);
    for (int inner = 0; inner < 4; ++inner) {
        auto paths = greedy_class_attempt(grid, pairs, order, rng(), blocking);
        if (!paths.empty()) return paths;
        seeded_shuffle(order, rng);
    }
    return layered_class_attempt(grid, pairs);
}

} // namespace

std::vector<int> RoutedPaths::edge_usage() const {
    std::vector<int> usage(size_t(grid.num_vertices()) * grid.dim, 0);
    for (const auto& p : paths)
        for (size_t i = 0; i + 1 < p.size(); ++i) ++usage[grid_edge_id(grid, p[i], p[i + 1])];
    return usage;
}

int RoutedPaths::max_edge_usage() const {
    auto u = edge_usage();
    return u.empty() ? 0 : *std::max_element(u.begin(), u.end());
}

RoutedPaths route_grid(const std::vector<std::pair<std::vector<int>, std::vector<int>>>& pairs,
                       int dim, const std::vector<int>& base_extents, int start_height,
                       uint64_t seed, int max_retries) {
    if (int(base_extents.size()) != dim - 1) throw std::invalid_argument("route_grid: base must have dim-1 axes");
    for (size_t i = 0; i < pairs.size(); ++i)
        for (size_t j = i + 1; j < pairs.size(); ++j) {
            if (pairs[i].first == pairs[j].first) throw std::invalid_argument("route_grid: duplicate source");
            if (pairs[i].second == pairs[j].second) throw std::invalid_argument("route_grid: duplicate sink");
        }
    int base_side = *std::max_element(base_extents.begin(), base_extents.end());
    int blocking = -1;
    for (int attempt = 0; attempt <= max_retries; ++attempt) {
        int h = start_height + attempt * base_side;
        GridTarget grid;
        grid.dim = dim;
        grid.extents = base_extents;
        grid.extents.push_back(h);
        std::vector<std::pair<int, int>> terminals;
        for (const auto& [src, dst] : pairs) {
            std::vector<int> src_c = src;
            src_c.push_back(0);
            std::vector<int> dst_c = dst;
            dst_c.push_back(h - 1);
            terminals.push_back({grid.index(src_c), grid.index(dst_c)});
        }
        std::mt19937_64 rng(seed + uint64_t(attempt) * 0x9e3779b97f4a7c15ull);
        auto paths = route_class(grid, terminals, rng, &blocking);
        if (!paths.empty()) {
            RoutedPaths out;
            out.grid = grid;
            out.paths = std::move(paths);
            out.height = h;
            out.height_ratio = double(h) / double(base_side);
            out.retries = attempt;
            return out;
        }
    }
    throw std::runtime_error("route_grid: no edge-disjoint routing after " + std::to_string(max_retries) +
                             " retries; blocking pair " + std::to_string(blocking));
}

namespace {

// Deferred generator construction so that layouts can allocate all their
// qubits before any operator is materialized.
struct LayoutBuilder {
    WireCode& wire;
    int next_qubit;
    int next_gen;
    std::vector<std::pair<int, char>> singles;               // (qubit, 'X')
    std::vector<std::vector<std::pair<int, char>>> couplings;
    std::vector<int> coupling_ids;

    explicit LayoutBuilder(WireCode& w)
        : wire(w), next_qubit(w.base.n), next_gen(int(w.base.gauge.size())) {}

    int new_qubit() { return next_qubit++; }

    int add_coupling(std::vector<std::pair<int, char>> terms, int check) {
        int id = next_gen++;
        wire.base.anc_set.push_back(id);
        wire.anc_of[check].push_back(id);
        couplings.push_back(std::move(terms));
        coupling_ids.push_back(id);
        return id;
    }

    void add_single(int qubit) {
        int id = next_gen++;
        wire.base.single_site_set.push_back(id);
        couplings.push_back({{qubit, 'X'}});
        coupling_ids.push_back(id);
    }

    void finalize() {
        int old_n = wire.base.n;
        wire.base.n = next_qubit;
        wire.base.register_of.resize(next_qubit, Register::anc);
        if (next_qubit != old_n)
            for (auto& g : wire.base.gauge) g = embed(g, next_qubit);
        for (size_t i = 0; i < couplings.size(); ++i) {
            PauliOperator g(wire.base.n);
            for (auto [q, t] : couplings[i]) g.set_type(q, t);
            if (int(wire.base.gauge.size()) != coupling_ids[i]) throw std::logic_error("draft id mismatch");
            wire.base.gauge.push_back(std::move(g));
        }
    }
};

} // namespace

PlacedWireCode layout_2d(const StabilizerCode& code) {
    WireCode wire = degree_reduce(code);

    std::map<int, std::pair<int, int>> pos; // qubit -> (x, y); y = -1 holds Y-branch detours
    std::vector<int> data_col(code.n, 0);

    int cursor = 0;
    for (int q = 0; q < code.n; ++q) {
        auto zbr = wire.branch_of.find({q, 'Z'});
        auto xbr = wire.branch_of.find({q, 'X'});
        auto ybr = wire.branch_of.find({q, 'Y'});
        int nz = zbr == wire.branch_of.end() ? 0 : int(zbr->second.copy_qubits.size());
        int nx = xbr == wire.branch_of.end() ? 0 : int(xbr->second.copy_qubits.size());
        int ny = ybr == wire.branch_of.end() ? 0 : int(ybr->second.copy_qubits.size());
        int col = cursor + nz;
        data_col[q] = col;
        pos[q] = {col, 0};
        if (zbr != wire.branch_of.end())
            for (int j = 0; j < nz; ++j) pos[zbr->second.copy_qubits[j]] = {col - 1 - j, 0};
        if (xbr != wire.branch_of.end())
            for (int j = 0; j < nx; ++j) pos[xbr->second.copy_qubits[j]] = {col + 1 + j, 0};
        if (ybr != wire.branch_of.end())
            for (int j = 0; j < ny; ++j) pos[ybr->second.copy_qubits[j]] = {col + nx + 1 + j, 0};
        cursor += nz + nx + ny + 2;
    }

    // Y-branch attaches detour behind the X-branch on row -1
    for (int q = 0; q < code.n; ++q) {
        auto ybr = wire.branch_of.find({q, 'Y'});
        if (ybr == wire.branch_of.end()) continue;
        int attach = ybr->second.couplings[0];
        int first_copy_col = pos[ybr->second.copy_qubits[0]].first;
        int len = first_copy_col - data_col[q] + 2;
        int first_new = wire.base.n;
        stretch_edge(wire, attach, q, len);
        for (int t = 0; t < len - 1; ++t) pos[first_new + t] = {first_copy_col - t, -1};
    }

    LayoutBuilder builder(wire);

    for (int s = 0; s < code.num_checks(); ++s) {
        int row = s + 1;
        const PauliOperator& check = code.checks[s];
        struct Tooth {
            int source;
            char pauli;
            int col;
            int top = -1;
        };
        std::vector<Tooth> teeth;
        for (int q : support(check)) {
            auto slot = wire.copy_slot.find({s, q});
            if (slot != wire.copy_slot.end())
                teeth.push_back({slot->second, 'Z', pos[slot->second].first});
            else
                teeth.push_back({q, check.char_at(q), data_col[q]});
        }
        std::sort(teeth.begin(), teeth.end(), [](const Tooth& a, const Tooth& b) { return a.col < b.col; });
        int w = int(teeth.size());
        if (w == 1) {
            builder.add_coupling({{teeth[0].source, teeth[0].pauli}}, s);
            continue;
        }
        for (auto& tooth : teeth) {
            int prev = tooth.source;
            char prev_type = tooth.pauli;
            for (int y = 1; y <= row; ++y) {
                int nq = builder.new_qubit();
                pos[nq] = {tooth.col, y};
                builder.add_coupling({{prev, prev_type}, {nq, 'Z'}}, s);
                builder.add_single(nq);
                prev = nq;
                prev_type = 'Z';
            }
            tooth.top = prev;
        }
        // horizontal runs; interior teeth carry a stacked junction qubit and
        // a weight-3 junction check
        std::vector<int> junction_stack(w, -1);
        std::vector<int> run_first(w, -1);
        for (int j = 0; j + 1 < w; ++j) {
            std::vector<int> members;
            if (j == 0) members.push_back(teeth[0].top);
            for (int c = teeth[j].col + 1; c < teeth[j + 1].col; ++c) {
                int nq = builder.new_qubit();
                pos[nq] = {c, row};
                builder.add_single(nq);
                members.push_back(nq);
                if (run_first[j] < 0) run_first[j] = nq;
            }
            if (j + 1 <= w - 2) {
                int nq = builder.new_qubit();
                pos[nq] = {teeth[j + 1].col, row};
                builder.add_single(nq);
                junction_stack[j + 1] = nq;
                members.push_back(nq);
            } else {
                members.push_back(teeth[w - 1].top);
            }
            for (size_t i = 0; i + 1 < members.size(); ++i)
                builder.add_coupling({{members[i], 'Z'}, {members[i + 1], 'Z'}}, s);
        }
        for (int j = 1; j <= w - 2; ++j) {
            if (run_first[j] < 0) throw std::logic_error("layout_2d: teeth too close for a junction");
            builder.add_coupling({{junction_stack[j], 'Z'}, {teeth[j].top, 'Z'}, {run_first[j], 'Z'}}, s);
        }
    }
    builder.finalize();

    int min_y = 0, max_y = 0, max_x = 0;
    for (auto& [q, xy] : pos) {
        min_y = std::min(min_y, xy.second);
        max_y = std::max(max_y, xy.second);
        max_x = std::max(max_x, xy.first);
    }
    GridTarget grid;
    grid.dim = 2;
    grid.extents = {max_x + 1, max_y - min_y + 1};
    PlacedWireCode placed;
    placed.wire = std::move(wire);
    placed.target = grid_target(grid);
    placed.placement.resize(placed.wire.base.n);
    for (auto& [q, xy] : pos) placed.placement[q] = grid.index({xy.first, xy.second - min_y});
    return placed;
}

PlacedWireCode layout_Dd(const StabilizerCode& code, int dim, uint64_t seed, int max_retries) {
    if (dim < 3) throw std::invalid_argument("layout_Dd: dimension must be >= 3");
    WireCode wire = degree_reduce(code);

    int ray = 0;
    for (auto& [key, br] : wire.branch_of) ray = std::max(ray, int(br.copy_qubits.size()));
    int block = 2 * ray + 1;
    // twice the needed sites: keeps every routing class below half the face,
    // the regime where edge-disjoint paths exist with bounded height
    int m0 = iceil_root(2 * std::max(code.n, std::max(code.num_checks(), 1)), dim - 1);
    int side = m0 * block;
    std::vector<int> base_extents(dim - 1, side);

    auto block_center = [&](int i) {
        std::vector<int> c(dim - 1, ray);
        for (int a = dim - 2; a >= 0; --a) {
            c[a] = (i % m0) * block + ray;
            i /= m0;
        }
        return c;
    };

    std::map<int, std::vector<int>> face_pos; // qubit -> (dim-1)-coords on the bottom face
    for (int q = 0; q < code.n; ++q) {
        auto center = block_center(q);
        face_pos[q] = center;
        for (char t : {'X', 'Y', 'Z'}) {
            auto it = wire.branch_of.find({q, t});
            if (it == wire.branch_of.end()) continue;
            for (size_t j = 0; j < it->second.copy_qubits.size(); ++j) {
                auto c = center;
                if (t == 'X') c[0] += int(j) + 1;
                if (t == 'Y') c[0] -= int(j) + 1;
                if (t == 'Z') c[1] += int(j) + 1;
                face_pos[it->second.copy_qubits[j]] = c;
            }
        }
    }

    struct PairInfo {
        int q, s, pos_in_support;
        int source;
        char pauli;
    };
    std::vector<std::vector<PairInfo>> class_pairs;
    for (const auto& cls : color_classes(code).classes) {
        std::vector<PairInfo> filtered;
        for (auto [q, s] : cls) {
            if (code.checks[s].weight() < 2) continue;
            PairInfo info;
            info.q = q;
            info.s = s;
            auto sup = support(code.checks[s]);
            info.pos_in_support = int(std::find(sup.begin(), sup.end(), q) - sup.begin());
            auto slot = wire.copy_slot.find({s, q});
            if (slot != wire.copy_slot.end()) {
                info.source = slot->second;
                info.pauli = 'Z';
            } else {
                info.source = q;
                info.pauli = code.checks[s].char_at(q);
            }
            filtered.push_back(info);
        }
        if (!filtered.empty()) class_pairs.push_back(std::move(filtered));
    }

    GridTarget grid;
    std::vector<std::vector<std::vector<int>>> class_paths;
    for (int attempt = 0;; ++attempt) {
        if (attempt > max_retries)
            throw std::runtime_error("layout_Dd: routing failed after " + std::to_string(max_retries) + " retries");
        int h = side * (attempt + 1);
        grid.dim = dim;
        grid.extents = base_extents;
        grid.extents.push_back(h);
        class_paths.assign(class_pairs.size(), {});
        bool ok = true;
        for (size_t j = 0; j < class_pairs.size() && ok; ++j) {
            std::vector<std::pair<int, int>> terminals;
            for (const PairInfo& info : class_pairs[j]) {
                std::vector<int> src_c = face_pos[info.source];
                src_c.push_back(0);
                std::vector<int> dst_c = block_center(info.s);
                dst_c.push_back(h - 1);
                terminals.push_back({grid.index(src_c), grid.index(dst_c)});
            }
            std::mt19937_64 rng(seed + uint64_t(attempt) * 1000003ull + j * 7919ull);
            class_paths[j] = route_class(grid, terminals, rng);
            ok = !class_paths[j].empty();
        }
        if (ok) break;
    }

    std::map<int, int> qubit_vertex;
    auto vertex_of_face = [&](const std::vector<int>& face, int z) {
        std::vector<int> c = face;
        c.push_back(z);
        return grid.index(c);
    };
    for (auto& [q, fp] : face_pos) qubit_vertex[q] = vertex_of_face(fp, 0);

    LayoutBuilder builder(wire);
    std::vector<std::vector<int>> check_ends(code.num_checks());
    for (int s = 0; s < code.num_checks(); ++s) check_ends[s].assign(support(code.checks[s]).size(), -1);

    for (size_t j = 0; j < class_pairs.size(); ++j)
        for (size_t i = 0; i < class_pairs[j].size(); ++i) {
            const PairInfo& info = class_pairs[j][i];
            const std::vector<int>& path = class_paths[j][i];
            int prev = info.source;
            char prev_type = info.pauli;
            for (size_t t = 1; t < path.size(); ++t) {
                int nq = builder.new_qubit();
                qubit_vertex[nq] = path[t];
                builder.add_coupling({{prev, prev_type}, {nq, 'Z'}}, info.s);
                builder.add_single(nq);
                prev = nq;
                prev_type = 'Z';
            }
            check_ends[info.s][info.pos_in_support] = prev;
        }

    for (int s = 0; s < code.num_checks(); ++s) {
        const PauliOperator& check = code.checks[s];
        int w = check.weight();
        if (w < 2) {
            int q = support(check)[0];
            auto slot = wire.copy_slot.find({s, q});
            if (slot != wire.copy_slot.end())
                builder.add_coupling({{slot->second, 'Z'}}, s);
            else
                builder.add_coupling({{q, check.char_at(q)}}, s);
            continue;
        }
        int site = vertex_of_face(block_center(s), grid.extents[dim - 1] - 1);
        const std::vector<int>& ends = check_ends[s];
        if (w <= 3) {
            std::vector<std::pair<int, char>> terms;
            for (int e : ends) terms.push_back({e, 'Z'});
            builder.add_coupling(std::move(terms), s);
        } else {
            std::vector<int> bq(w - 3);
            for (int a = 0; a < w - 3; ++a) {
                bq[a] = builder.new_qubit();
                qubit_vertex[bq[a]] = site;
                builder.add_single(bq[a]);
            }
            for (int i = 0; i < w - 2; ++i) {
                if (i == 0)
                    builder.add_coupling({{ends[0], 'Z'}, {ends[1], 'Z'}, {bq[0], 'Z'}}, s);
                else if (i == w - 3)
                    builder.add_coupling({{bq[i - 1], 'Z'}, {ends[w - 2], 'Z'}, {ends[w - 1], 'Z'}}, s);
                else
                    builder.add_coupling({{bq[i - 1], 'Z'}, {ends[i + 1], 'Z'}, {bq[i], 'Z'}}, s);
            }
        }
    }
    builder.finalize();

    PlacedWireCode placed;
    placed.wire = std::move(wire);
    placed.target = grid_target(grid);
    placed.placement.resize(placed.wire.base.n);
    for (auto& [q, v] : qubit_vertex) placed.placement[q] = v;
    return placed;
}

LocalityReport check_locality(const PlacedWireCode& placed) {
    LocalityReport report;
    for (size_t gi = 0; gi < placed.wire.base.gauge.size(); ++gi) {
        const auto& g = placed.wire.base.gauge[gi];
        if (g.weight() < 2) continue;
        auto sup = support(g);
        bool bad = false;
        int diameter = 0;
        for (size_t a = 0; a < sup.size(); ++a)
            for (size_t b = a + 1; b < sup.size(); ++b) {
                int u = placed.placement[sup[a]], v = placed.placement[sup[b]];
                int d;
                if (u == v)
                    d = 0;
                else if (placed.target.adjacent(u, v))
                    d = 1;
                else
                    d = placed.target.kind == Target::Kind::grid ? placed.target.grid.manhattan(u, v) : 2;
                diameter = std::max(diameter, d);
                if (d > 1 && !bad) {
                    bad = true;
                    if (report.examples.size() < 16)
                        report.examples.push_back({int(gi), sup[a], sup[b]});
                }
            }
        report.max_check_diameter = std::max(report.max_check_diameter, diameter);
        if (bad) ++report.violations;
    }
    report.stacking_max = placed.stacking_max();
    return report;
}

} // namespace wirecode
