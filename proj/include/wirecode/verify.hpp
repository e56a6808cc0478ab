#pragma once

#include <string>

#include "wirecode/layout.hpp"

namespace wirecode {

struct VerificationReport {
    int n_in = 0, n_wire = 0;
    int k_in = 0, k_wire = 0;
    bool k_match = false;

    int max_weight = 0;  // over multi-qubit checks
    int max_degree = 0;  // multi-qubit checks per qubit

    int omega = 0;
    int d_in_used = 0;
    bool d_in_exact = false;
    int d_target = 0;       // ceil(d_in / omega)
    bool d_found = false;
    int d_wire_found = 0;   // exact d when found, else the exhausted budget
    bool bound_ok = false;
    bool d_inconclusive = false;
    std::string d_witness;

    int locality_violations = 0;
    int stacking_max = 0;
    int congestion_max = 0;

    bool relations_ok = false;
    std::string relations_note;
    bool recovery_ok = false;
    std::string recovery_note;

    double overhead_ratio = 0.0;

    bool all_green() const;
    std::string table() const; // human-readable summary
};

// Runs every structural check against a placed wire code: k preservation,
// weight/degree bounds, bounded-budget distance with the ceil(d_in/omega)
// target, locality, stabilizer recovery, and relation images. w_max caps
// the dressed-distance search on the wire code. congestion_max is supplied
// by the construction that produced the placement (0 when not applicable).
VerificationReport verify_all(const StabilizerCode& input, const PlacedWireCode& placed, int w_max,
                              int congestion_max = 0);

} // namespace wirecode
