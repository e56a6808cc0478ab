#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "wirecode/graph.hpp"
#include "wirecode/wire.hpp"

namespace wirecode {

// Axis-aligned grid in `dim` dimensions with nearest-neighbor edges. The
// last axis is the routing height.
struct GridTarget {
    int dim = 2;
    std::vector<int> extents;

    int num_vertices() const;
    int index(const std::vector<int>& coords) const;
    std::vector<int> coords(int vertex) const;
    std::vector<int> neighbors(int vertex) const;
    int manhattan(int u, int v) const;
};

// Placement target: either a grid or a general connectivity graph.
struct Target {
    enum class Kind { grid, graph };
    Kind kind = Kind::grid;
    GridTarget grid;
    GeneralGraph graph;

    int num_vertices() const;
    bool adjacent(int u, int v) const;
};

Target grid_target(GridTarget g);
Target graph_target(GeneralGraph g);

struct PlacedWireCode {
    WireCode wire;
    Target target;
    std::vector<int> placement; // qubit -> vertex

    std::vector<int> stacking_counts() const;
    int stacking_max() const;
};

// Partition of the (qubit, check) incidence pairs of a code into classes in
// which no two pairs share a qubit or a check. Greedy coloring; class count
// is at most omega * delta + 1.
struct ColorClasses {
    std::vector<std::vector<std::pair<int, int>>> classes; // pairs (q, s)
    int count() const { return int(classes.size()); }
};

ColorClasses color_classes(const StabilizerCode& code);

// Edge-disjoint routing of terminal pairs through a grid, bottom face to
// top face. Sequential shortest-path with unit edge capacity and seeded
// pair order; on failure the height grows by the base side and everything
// is rerouted, up to max_retries times.
struct RoutedPaths {
    GridTarget grid;                        // final grid, including achieved height
    std::vector<std::vector<int>> paths;    // vertex ids, source..sink, input order
    int height = 0;
    double height_ratio = 0.0;              // achieved height / base side
    int retries = 0;

    // recount of per-edge usage; keys are (min vertex)*dim+axis
    std::vector<int> edge_usage() const;
    int max_edge_usage() const;
};

// pairs: ((D-1)-dim source coords on the bottom face, (D-1)-dim sink coords
// on the top face). Sources must be distinct, and sinks must be distinct.
RoutedPaths route_grid(const std::vector<std::pair<std::vector<int>, std::vector<int>>>& pairs,
                       int dim, const std::vector<int>& base_extents, int start_height,
                       uint64_t seed, int max_retries = 8);

// 2D wire code: data strips with branches on the base row, one row per
// check, vertical tooth wires from the used copy qubits and a horizontal
// chain with weight-3 junction checks.
PlacedWireCode layout_2d(const StabilizerCode& code);

// D-dimensional wire code (D >= 3): branches in per-qubit blocks on the
// bottom face, check sites on the top face, one routing pass per color
// class, chains of anc qubits along each path.
PlacedWireCode layout_Dd(const StabilizerCode& code, int dim, uint64_t seed = 1, int max_retries = 8);

struct LocalityReport {
    int violations = 0;
    std::vector<std::array<int, 3>> examples; // (gen, qubit a, qubit b), capped
    int stacking_max = 0;
    int max_check_diameter = 0;
};

// Asserts that every multi-qubit gauge check spans vertices that are
// pairwise identical or adjacent. Violations are reported, not thrown.
LocalityReport check_locality(const PlacedWireCode& placed);

} // namespace wirecode
