#include "wirecode/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wirecode {

int GeneralGraph::num_edges() const {
    int m = 0;
    for (const auto& a : adj) m += int(a.size());
    return m / 2;
}

int GeneralGraph::max_degree() const {
    size_t d = 0;
    for (const auto& a : adj) d = std::max(d, a.size());
    return int(d);
}

bool GeneralGraph::has_edge(int u, int v) const {
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

bool GeneralGraph::connected() const {
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++count;
                q.push(v);
            }
    }
    return count == n;
}

std::vector<std::pair<int, int>> GeneralGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
        for (int v : adj[u])
            if (u < v) out.push_back({u, v});
    return out;
}

GeneralGraph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    GeneralGraph g;
    g.n = n;
    g.adj.assign(n, {});
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop not allowed");
        auto key = std::minmax(u, v);
        if (!seen.insert({key.first, key.second}).second) continue;
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& a : g.adj) std::sort(a.begin(), a.end());
    return g;
}

GeneralGraph cycle_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    return make_graph(n, e);
}

GeneralGraph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.push_back({i, j});
    return make_graph(n, e);
}

GeneralGraph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return make_graph(n, e);
}

GeneralGraph random_regular_graph(int n, int degree, uint64_t seed) {
    if ((n * degree) % 2 != 0) throw std::invalid_argument("n * degree must be even");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<int> stubs;
        for (int v = 0; v < n; ++v)
            for (int d = 0; d < degree; ++d) stubs.push_back(v);
        std::shuffle(stubs.begin(), stubs.end(), rng);
        std::set<std::pair<int, int>> used;
        bool ok = true;
        for (size_t i = 0; i < stubs.size() && ok; i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v) ok = false;
            auto key = std::minmax(u, v);
            if (ok && !used.insert({key.first, key.second}).second) ok = false;
        }
        if (!ok) continue;
        GeneralGraph g = make_graph(n, {used.begin(), used.end()});
        if (g.connected()) return g;
    }
    throw std::runtime_error("failed to sample a connected regular graph");
}

GeneralGraph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::pair<int, int>> edges;
    int max_v = -1;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        long long u, v;
        if (!(ls >> u)) continue;
        if (!(ls >> v)) throw std::invalid_argument("line " + std::to_string(lineno) + ": expected two vertex ids");
        edges.push_back({int(u), int(v)});
        max_v = std::max(max_v, int(std::max(u, v)));
    }
    return make_graph(max_v + 1, edges);
}

std::string edge_list_to_text(const GeneralGraph& g) {
    std::string out;
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

Rational cheeger_exact(const GeneralGraph& g) {
    if (g.n > 22) throw std::invalid_argument("cheeger_exact: graph too large for subset enumeration");
    if (g.n < 2) return {0, 1};
    std::vector<uint32_t> nbr(g.n, 0);
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u]) nbr[u] |= uint32_t(1) << v;
    long long best_num = -1, best_den = 1;
    uint32_t full = (g.n == 32) ? ~uint32_t(0) : ((uint32_t(1) << g.n) - 1);
    // enumerate up to complement: fix vertex 0 inside S
    for (uint32_t s = 1; s < (uint32_t(1) << (g.n - 1)); ++s) {
        uint32_t S = (s << 1) | 1;
        if (S == full) continue;
        long long boundary = 0;
        uint32_t comp = full & ~S;
        for (int u = 0; u < g.n; ++u)
            if (S & (uint32_t(1) << u)) boundary += std::popcount(nbr[u] & comp);
        long long side = std::min(std::popcount(S), std::popcount(comp));
        if (best_num < 0 || boundary * best_den < best_num * side) {
            best_num = boundary;
            best_den = side;
        }
    }
    long long g_ = std::gcd(best_num, best_den);
    if (g_ > 0) {
        best_num /= g_;
        best_den /= g_;
    }
    return {best_num, best_den};
}

double expansion_lower_bound(const GeneralGraph& g) {
    if (g.n < 2 || !g.connected()) return 0.0;
    int n = g.n;
    double c = 2.0 * g.max_degree() + 1.0;
    std::vector<double> b(n), next(n);
    for (int i = 0; i < n; ++i) b[i] = 1.0 / (i + 1.0); // fixed deterministic start
    auto deflate = [&](std::vector<double>& v) {
        double mean = 0;
        for (double x : v) mean += x;
        mean /= n;
        for (double& x : v) x -= mean;
    };
    auto norm = [&](const std::vector<double>& v) {
        double s = 0;
        for (double x : v) s += x * x;
        return std::sqrt(s);
    };
    deflate(b);
    double nb = norm(b);
    for (double& x : b) x /= nb;
    double mu = 0.0, prev_mu = -1.0;
    for (int iter = 0; iter < 100000 && std::abs(mu - prev_mu) > 1e-8 * c; ++iter) {
        prev_mu = mu;
        // next = (cI - L) b = c b - D b + A b
        for (int i = 0; i < n; ++i) {
            double acc = (c - double(g.adj[i].size())) * b[i];
            for (int j : g.adj[i]) acc += b[j];
            next[i] = acc;
        }
        deflate(next);
        mu = norm(next);
        for (int i = 0; i < n; ++i) b[i] = next[i] / mu;
    }
    double lambda2 = c - mu;
    return lambda2 / 2.0;
}

} // namespace wirecode
