#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wirecode {

// Simple undirected graph, adjacency lists sorted ascending.
struct GeneralGraph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    int num_edges() const;
    int max_degree() const;
    bool has_edge(int u, int v) const;
    bool connected() const;

    // sorted unique (u < v) edge list
    std::vector<std::pair<int, int>> edges() const;
};

GeneralGraph make_graph(int n, const std::vector<std::pair<int, int>>& edges);
GeneralGraph cycle_graph(int n);
GeneralGraph complete_graph(int n);
GeneralGraph path_graph(int n);

// Random d-regular graph via the pairing model, resampled until simple and
// connected. Deterministic for a fixed seed.
GeneralGraph random_regular_graph(int n, int degree, uint64_t seed);

// Edge-list text format: one "u v" pair per line, 0-indexed, '#' comments.
GeneralGraph parse_edge_list(const std::string& text);
std::string edge_list_to_text(const GeneralGraph& g);

struct Rational {
    long long num = 0;
    long long den = 1;
    double value() const { return den == 0 ? 0.0 : double(num) / double(den); }
};

// Exact edge expansion min_S |E(S,~S)| / min(|S|,|~S|) by subset
// enumeration. Limited to |V| <= 22.
Rational cheeger_exact(const GeneralGraph& g);

// lambda_2 / 2 from the graph Laplacian via power iteration on the deflated
// complement. A cheap screen for large graphs; never used in correctness
// assertions. Returns 0 for disconnected graphs.
double expansion_lower_bound(const GeneralGraph& g);

} // namespace wirecode
