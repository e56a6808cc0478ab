#pragma once

#include <map>
#include <utility>
#include <vector>

#include "wirecode/code.hpp"

namespace wirecode {

// A P-branch: a chain of copy qubits hung off a data qubit. The couplings
// list holds every two-body gauge check of the branch (the P.Z attach, the
// Z.Z chain links, and any fragments introduced by edge stretching); they
// always form a tree on {target} + copies + interior qubits.
struct Branch {
    char pauli = 'Z';
    int target = -1;
    std::vector<int> copy_qubits;
    std::vector<int> couplings;
    std::vector<int> single_x;
};

struct WireCode {
    SubsystemCode base;
    StabilizerCode input;

    std::map<std::pair<int, char>, Branch> branch_of;   // (data qubit, Pauli type)
    std::vector<std::vector<int>> anc_of;               // per input check: gadget coupling gens
    std::map<std::pair<int, int>, int> copy_slot;       // (check, qubit) -> copy qubit; absent = direct
    std::map<std::pair<int, int>, int> edge_lengths;    // (gen, qubit) -> stretched length (1 if absent)

    int n() const { return base.n; }

    // Copy-register couplings whose product maps each used copy slot of
    // check s back onto its data qubit.
    std::vector<int> copy_correction(int s) const;

    // Checks the structural requirements: multi-qubit checks have weight
    // <= 3, every qubit sits in <= 3 multi-qubit checks, register tags and
    // generator groups partition correctly.
    void validate() const;

    int max_multi_weight() const;
    int max_multi_degree() const;

    // Appends `count` fresh qubits with the given register tag, extending
    // every generator with identities. Returns the first new id.
    int add_qubits(int count, Register reg);
};

// Degree reduction only: introduces a P-branch of length delta_P for every
// qubit with delta_P >= 2 and records the copy slot each check will use.
// The check gadgets are not built yet.
WireCode degree_reduce(const StabilizerCode& code);

struct WeightReduction {
    int n_total = 0;
    std::vector<int> anc_qubits;
    std::vector<PauliOperator> checks;
};

// Resolves one check into a chain of weight-3 checks using order as the
// qubit order. Checks of weight 3 or less pass through unchanged; weight
// below 2 is rejected.
WeightReduction weight_reduce_check(const PauliOperator& check, const std::vector<int>& order);

// Full transform: degree reduction followed by weight reduction of every
// check, all edge lengths 1.
WireCode build_wire_code(const StabilizerCode& code);

// Replaces the coupling of generator `gen` to `qubit` by a chain of length
// len-1 interior qubits with ZZ links and single-site X checks. len = 1 is
// the identity transform.
void stretch_edge(WireCode& wire, int gen, int qubit, int len);

// Product of the gadget couplings of check s with the copy correction.
// Throws if the result is not exactly the input check on the data register;
// this is the primary internal consistency oracle.
PauliOperator stabilizer_recovery(const WireCode& wire, int s);

// True iff the product of the recovered images of the checks in `relation`
// is the identity. Throws if `relation` is not a relation of the input code.
bool verify_relation_image(const StabilizerCode& input, const WireCode& wire, const std::vector<int>& relation);

} // namespace wirecode
