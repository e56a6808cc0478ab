#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "wirecode/layout.hpp"

namespace wirecode {

// Assignment of input qubits and checks to vertices of a target graph plus
// one routed path per (check, qubit) incidence.
struct EmbeddingPlan {
    std::vector<int> eta_qubit;
    std::vector<int> eta_check;
    std::map<std::pair<int, int>, std::vector<int>> paths; // (s, q) -> vertex path eta(q)..eta(s)
    int congestion = 0;     // max paths through any edge, recounted at finalize
    int c_multiplicity = 0; // max per-vertex / per-edge multiplicity of the embedding
};

struct CongestionRoutes {
    std::vector<std::vector<int>> paths; // input order
    int congestion = 0;
};

// Sequential shortest-path routing with edge cost 2^usage. Pair order is
// shuffled by the seed; results are deterministic for a fixed seed.
CongestionRoutes route_congestion(const GeneralGraph& g, const std::vector<std::pair<int, int>>& pairs,
                                  uint64_t seed);

// Wire code local on an arbitrary connected graph: every multi-qubit check
// ends up supported on a single vertex or a single edge. With post_reduce
// the output also has weight and degree at most three; without it, check
// junctions keep their full weight and data qubits keep their full degree.
// When the graph has fewer vertices than n_in + m_in the assignment falls
// back to a round-robin (c grows accordingly).
PlacedWireCode embed_on_graph(const StabilizerCode& code, const GeneralGraph& g, uint64_t seed,
                              bool post_reduce = true, EmbeddingPlan* plan_out = nullptr);

// Replays a plan over an abstract wire code: stretches every (check, qubit)
// tooth coupling to the plan's path length and places qubits along the
// paths. Unit-length plans leave the gauge group unchanged up to labeling.
PlacedWireCode embed_with_plan(const WireCode& wire, const EmbeddingPlan& plan, const GeneralGraph& g);

std::vector<int> bfs_distances(const GeneralGraph& g, int src);

} // namespace wirecode
