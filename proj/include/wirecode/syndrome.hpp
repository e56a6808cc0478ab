#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "wirecode/wire.hpp"

namespace wirecode {

// Two-phase gauge measurement schedule. Each round handles one color of
// input checks: phase 1 measures the multi-qubit couplings of those checks'
// gadgets (gadgets of different checks in a round share no qubit), phase 2
// measures single-qubit X on the anc and copy qubits phase 1 touched.
//
// A check's syndrome is the value of its dressed stabilizer: the check
// image times an X dressing on anc/copy qubits that makes it commute with
// the whole gauge group. The reconstruction therefore XORs the round's
// gadget outcomes with the latest prior X outcomes on the dressing qubits
// (the |+> initialization supplies +1 before the first touch).
struct Schedule {
    struct Round {
        int partition = 0;
        std::vector<int> phase1; // gauge generator indices
        std::vector<int> phase2;
    };
    std::vector<Round> rounds;
    std::vector<int> round_of_check;
    std::vector<std::vector<int>> recon_gens;  // per check: gadget couplings
    std::vector<std::vector<int>> dressing;    // per check: X-dressing qubits
    // static first-pass subset: (round, generator) whose outcomes XOR to
    // the syndrome, cached at build time
    std::vector<std::vector<std::pair<int, int>>> recon_entries;
    std::map<int, int> single_of; // anc/copy qubit -> its single-site X generator
};

Schedule build_schedule(const WireCode& wire);

// measurement record of one full pass, keyed by (round, generator)
using OutcomeRecord = std::map<std::pair<int, int>, uint8_t>;

uint8_t reconstruct_syndrome(const OutcomeRecord& outcomes, const Schedule& sched, int s);

// Stabilizer-state tableau with sign bits; used only by the measurement
// simulator, the rest of the library is phaseless.
class Tableau {
  public:
    Tableau(int n, uint64_t seed);

    // rows must be independent and commuting; count = n when complete
    void set_row(int i, const PauliOperator& p, bool negative = false);

    // Projective measurement of a Hermitian Pauli. When the outcome is
    // random it is drawn from the seeded generator unless `prefer` selects
    // the branch; determined outcomes are returned as-is.
    int measure(const PauliOperator& p, std::optional<int> prefer = std::nullopt);

    // conjugation by a (phaseless) Pauli error: flips signs of
    // anticommuting rows
    void apply_pauli(const PauliOperator& e);

    int n() const { return n_; }

  private:
    struct Row {
        BitVec x, z;
        uint8_t sign = 0;
    };
    int n_;
    std::vector<Row> rows_;
    std::mt19937_64 rng_;

    bool anticommutes(const Row& r, const PauliOperator& p) const;
    void row_mult(Row& acc, const Row& src) const; // acc <- src * acc with sign tracking
};

// Commuting logical-Z representatives of a stabilizer code, one per logical
// qubit, obtained by symplectic pairing of the bare logicals.
std::vector<PauliOperator> logical_z_representatives(const StabilizerCode& code);

struct SimulationResult {
    std::vector<std::vector<std::vector<uint8_t>>> phase1; // pass / round / outcome bits
    std::vector<std::vector<std::vector<uint8_t>>> phase2;
    std::vector<std::vector<uint8_t>> syndromes; // pass / input check
};

// Prepares a fixed codeword of the input code on the data register with all
// anc/copy qubits in |+>, applies the error, and runs the schedule for the
// requested number of passes.
SimulationResult simulate_extraction(const WireCode& wire, const Schedule& sched, const PauliOperator& error,
                                     uint64_t seed, int passes = 1);

} // namespace wirecode
