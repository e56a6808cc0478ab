#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wirecode/gf2.hpp"
#include "wirecode/pauli.hpp"

namespace wirecode {

// Input stabilizer code: a list of pairwise commuting checks on n qubits.
struct StabilizerCode {
    int n = 0;
    std::vector<PauliOperator> checks;
    std::vector<std::string> check_labels;

    int num_checks() const { return int(checks.size()); }
    int max_check_weight() const; // omega
    int max_qubit_degree() const; // delta

    // Throws if lengths are inconsistent, a check has weight 0, or two
    // checks anticommute (the message names the offending pair).
    void validate() const;
};

StabilizerCode make_code(int n, const std::vector<std::string>& check_strings);

// Parses the code text format: one Pauli string per line, '#' comments,
// blank lines ignored. All lines must have equal length.
StabilizerCode parse_code_text(const std::string& text);
std::string code_to_text(const StabilizerCode& code);

// Per-qubit, per-Pauli-type check incidence counts. A Y entry counts toward
// delta_Y only.
struct DegreeProfile {
    std::vector<int> dx, dy, dz;
    int total(int q) const { return dx[q] + dy[q] + dz[q]; }
    int sum_total() const;
    int max_total() const;
};

DegreeProfile degree_profile(const StabilizerCode& code);

// Basis of the relations of the code: index sets r with prod_{i in r} s_i = 1.
std::vector<std::vector<int>> relations(const StabilizerCode& code);

enum class Register : uint8_t { data = 0, copy = 1, anc = 2 };

// Subsystem code: gauge generators need not commute. Generator indices are
// partitioned into the single-site X group and the copy / anc coupling
// groups of the wire construction (both empty for plain gauge groups).
struct SubsystemCode {
    int n = 0;
    std::vector<PauliOperator> gauge;
    std::vector<Register> register_of;     // one tag per qubit
    std::vector<int> single_site_set;      // indices of weight-1 X generators
    std::vector<int> copy_set;             // branch couplings
    std::vector<int> anc_set;              // check-gadget couplings

    void validate() const;
};

// Views a stabilizer code as its own (abelian) gauge group.
SubsystemCode as_subsystem(const StabilizerCode& code);

struct CodeParams {
    int n = 0;
    int k = 0;
    int d_lower = 0;
    std::optional<int> d_exact;
};

// k = n - (rank(G) + rank(center(G))) / 2. Reduces to n - rank for abelian G.
int compute_k(const SubsystemCode& code);

// 2k generators of N(G) modulo the stabilizer group (bare logical operators).
std::vector<PauliOperator> bare_logicals(const SubsystemCode& code);

struct DistanceResult {
    bool found = false;
    int d = 0;
    PauliOperator witness;
};

// Minimum weight over N(S) \ G with S = center(G), searched by increasing
// weight up to w_max. found=false means every operator of weight <= w_max
// was excluded, i.e. d > w_max.
DistanceResult dressed_distance(const SubsystemCode& code, int w_max);

} // namespace wirecode
