#include "wirecode/verify.hpp"

#include <cmath>
#include <sstream>

namespace wirecode {

bool VerificationReport::all_green() const {
    return k_match && max_weight <= 3 && max_degree <= 3 && bound_ok && !d_inconclusive &&
           locality_violations == 0 && relations_ok && recovery_ok;
}

std::string VerificationReport::table() const {
    std::ostringstream out;
    auto line = [&](const std::string& name, const std::string& value, bool ok) {
        out << (ok ? "  [ok]   " : "  [FAIL] ") << name << ": " << value << "\n";
    };
    out << "verification report\n";
    line("k preservation", std::to_string(k_in) + " -> " + std::to_string(k_wire), k_match);
    line("max check weight", std::to_string(max_weight), max_weight <= 3);
    line("max qubit degree", std::to_string(max_degree), max_degree <= 3);
    {
        std::string d = d_found ? std::to_string(d_wire_found) : ("> " + std::to_string(d_wire_found));
        std::string target = "target " + std::to_string(d_target) + " (d_in " + std::to_string(d_in_used) +
                             (d_in_exact ? "" : " lower bound") + ", omega " + std::to_string(omega) + ")";
        line("distance bound", d + ", " + target + (d_inconclusive ? ", inconclusive" : ""),
             bound_ok && !d_inconclusive);
    }
    line("locality violations", std::to_string(locality_violations), locality_violations == 0);
    line("stacking max", std::to_string(stacking_max), true);
    line("congestion max", std::to_string(congestion_max), true);
    line("stabilizer recovery", recovery_ok ? "exact" : recovery_note, recovery_ok);
    line("relations", relations_ok ? "preserved" : relations_note, relations_ok);
    out << "  n " << n_in << " -> " << n_wire << " (overhead " << overhead_ratio << ")\n";
    return out.str();
}

VerificationReport verify_all(const StabilizerCode& input, const PlacedWireCode& placed, int w_max,
                              int congestion_max) {
    const WireCode& wire = placed.wire;
    VerificationReport rep;
    rep.n_in = input.n;
    rep.n_wire = wire.base.n;
    rep.overhead_ratio = double(rep.n_wire) / double(rep.n_in);
    rep.k_in = input.n - gf2_rank(input.checks);
    rep.k_wire = compute_k(wire.base);
    rep.k_match = rep.k_in == rep.k_wire;

    rep.max_weight = wire.max_multi_weight();
    rep.max_degree = wire.max_multi_degree();
    rep.omega = input.max_check_weight();

    // input distance, exact when the fixed search budget suffices
    {
        int cap = std::min(input.n, 4);
        DistanceResult din = dressed_distance(as_subsystem(input), cap);
        rep.d_in_exact = din.found;
        rep.d_in_used = din.found ? din.d : cap + 1;
    }
    rep.d_target = (rep.d_in_used + rep.omega - 1) / rep.omega;

    DistanceResult dw = dressed_distance(wire.base, std::max(w_max, 1));
    rep.d_found = dw.found;
    rep.d_wire_found = dw.d;
    if (dw.found) rep.d_witness = dw.witness.str();
    if (dw.found)
        rep.bound_ok = dw.d >= rep.d_target;
    else if (dw.d >= rep.d_target - 1) // exhausted every weight below the target
        rep.bound_ok = true;
    else
        rep.d_inconclusive = true;
    if (!rep.d_in_exact) rep.d_inconclusive = true;

    LocalityReport loc = check_locality(placed);
    rep.locality_violations = loc.violations;
    rep.stacking_max = loc.stacking_max;
    rep.congestion_max = congestion_max;

    rep.recovery_ok = true;
    for (int s = 0; s < input.num_checks() && rep.recovery_ok; ++s) {
        try {
            stabilizer_recovery(wire, s);
        } catch (const std::exception& e) {
            rep.recovery_ok = false;
            rep.recovery_note = e.what();
        }
    }

    rep.relations_ok = true;
    for (const auto& rel : relations(input)) {
        bool ok = false;
        try {
            ok = verify_relation_image(input, wire, rel);
        } catch (const std::exception& e) {
            rep.relations_note = e.what();
        }
        if (!ok) {
            rep.relations_ok = false;
            if (rep.relations_note.empty()) rep.relations_note = "relation image is not the identity";
            break;
        }
    }
    return rep;
}

} // namespace wirecode
