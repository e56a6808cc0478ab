#include "wirecode/syndrome.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace wirecode {

Schedule build_schedule(const WireCode& wire) {
    const StabilizerCode& code = wire.input;
    int m = code.num_checks();
    int nw = wire.base.n;

    // full gadget of each input check: anc couplings plus copy corrections
    std::vector<std::vector<int>> gadget(m);
    std::vector<std::set<int>> touched(m);
    for (int s = 0; s < m; ++s) {
        gadget[s] = wire.anc_of[s];
        for (int g : wire.copy_correction(s)) gadget[s].push_back(g);
        std::sort(gadget[s].begin(), gadget[s].end());
        gadget[s].erase(std::unique(gadget[s].begin(), gadget[s].end()), gadget[s].end());
        for (int g : gadget[s])
            for (int q : support(wire.base.gauge[g])) touched[s].insert(q);
    }

    // greedy coloring: same-round checks must have disjoint gadget supports
    std::vector<int> color(m, -1);
    int num_colors = 0;
    for (int s = 0; s < m; ++s) {
        std::vector<char> taken(m + 1, 0);
        for (int t = 0; t < s; ++t) {
            bool overlap = false;
            for (int q : touched[s])
                if (touched[t].count(q)) {
                    overlap = true;
                    break;
                }
            if (overlap) taken[color[t]] = 1;
        }
        int c = 0;
        while (taken[c]) ++c;
        color[s] = c;
        num_colors = std::max(num_colors, c + 1);
    }

    Schedule sched;
    for (int gi : wire.base.single_site_set) sched.single_of[support(wire.base.gauge[gi])[0]] = gi;

    sched.rounds.resize(num_colors);
    sched.round_of_check.assign(m, -1);
    sched.recon_gens.assign(m, {});
    sched.dressing.assign(m, {});
    sched.recon_entries.assign(m, {});
    for (int r = 0; r < num_colors; ++r) sched.rounds[r].partition = r;

    std::vector<std::set<int>> round_touched(num_colors);
    for (int s = 0; s < m; ++s) {
        int r = color[s];
        sched.round_of_check[s] = r;
        sched.recon_gens[s] = gadget[s];
        auto& round = sched.rounds[r];
        round.phase1.insert(round.phase1.end(), gadget[s].begin(), gadget[s].end());
        for (int q : touched[s]) {
            if (wire.base.register_of[q] == Register::data) continue;
            auto it = sched.single_of.find(q);
            if (it == sched.single_of.end())
                throw std::logic_error("schedule: anc/copy qubit without a single-site X check");
            round.phase2.push_back(it->second);
            round_touched[r].insert(q);
        }
    }
    for (auto& round : sched.rounds) {
        std::sort(round.phase1.begin(), round.phase1.end());
        round.phase1.erase(std::unique(round.phase1.begin(), round.phase1.end()), round.phase1.end());
        std::sort(round.phase2.begin(), round.phase2.end());
        round.phase2.erase(std::unique(round.phase2.begin(), round.phase2.end()), round.phase2.end());
    }

    // X dressing per check: solve <X_D, g> = <s x 1, g> over GF(2) for all
    // multi-qubit generators g, with D restricted off the data register
    std::vector<BitVec> equations;
    std::vector<const PauliOperator*> equation_gen;
    for (const auto& g : wire.base.gauge) {
        if (g.weight() < 2) continue;
        BitVec row(nw);
        for (int q = 0; q < nw; ++q)
            if (g.z.get(q)) row.set(q, true);
        equations.push_back(std::move(row));
        equation_gen.push_back(&g);
    }
    size_t gen_equations = equations.size();
    for (int q = 0; q < nw; ++q)
        if (wire.base.register_of[q] == Register::data) {
            BitVec row(nw);
            row.set(q, true);
            equations.push_back(std::move(row));
        }
    for (int s = 0; s < m; ++s) {
        PauliOperator image = embed(code.checks[s], nw);
        std::vector<bool> rhs;
        for (size_t e = 0; e < gen_equations; ++e) rhs.push_back(!commutes(image, *equation_gen[e]));
        rhs.resize(equations.size(), false);
        auto solution = solve_gf2(equations, rhs, nw);
        if (!solution) throw std::logic_error("schedule: no dressed stabilizer image for check " + std::to_string(s));
        for (int q = 0; q < nw; ++q)
            if (solution->get(q)) sched.dressing[s].push_back(q);
    }

    // static first-pass reconstruction subset
    for (int s = 0; s < m; ++s) {
        int r = sched.round_of_check[s];
        for (int g : sched.recon_gens[s]) sched.recon_entries[s].push_back({r, g});
        for (int q : sched.dressing[s]) {
            int last = -1;
            for (int t = 0; t < r; ++t)
                if (round_touched[t].count(q)) last = t;
            if (last >= 0) sched.recon_entries[s].push_back({last, sched.single_of.at(q)});
        }
    }
    return sched;
}

uint8_t reconstruct_syndrome(const OutcomeRecord& outcomes, const Schedule& sched, int s) {
    uint8_t bit = 0;
    for (auto [round, gen] : sched.recon_entries.at(s)) {
        auto it = outcomes.find({round, gen});
        if (it == outcomes.end()) throw std::invalid_argument("reconstruct_syndrome: incomplete outcome record");
        bit ^= it->second;
    }
    return bit;
}

Tableau::Tableau(int n, uint64_t seed) : n_(n), rng_(seed) {}

void Tableau::set_row(int i, const PauliOperator& p, bool negative) {
    if (int(rows_.size()) <= i) rows_.resize(i + 1);
    rows_[i] = {p.x, p.z, uint8_t(negative ? 1 : 0)};
}

bool Tableau::anticommutes(const Row& r, const PauliOperator& p) const {
    return BitVec::dot(r.x, p.z) ^ BitVec::dot(r.z, p.x);
}

namespace {

// exponent of i in P(a) * P(b); type encoding 0=I, 1=X, 2=Z, 3=Y
constexpr int kPhase[4][4] = {
    {0, 0, 0, 0},
    {0, 0, 3, 1},
    {0, 1, 0, 3},
    {0, 3, 1, 0},
};

int pauli_type(const BitVec& x, const BitVec& z, int i) { return int(x.get(i)) | (int(z.get(i)) << 1); }

} // namespace

void Tableau::row_mult(Row& acc, const Row& src) const {
    int phase = 2 * (acc.sign + src.sign);
    for (int i = 0; i < n_; ++i)
        phase += kPhase[pauli_type(src.x, src.z, i)][pauli_type(acc.x, acc.z, i)];
    phase &= 3;
    if (phase & 1) throw std::logic_error("tableau: product of stabilizer elements has imaginary phase");
    acc.x.xor_with(src.x);
    acc.z.xor_with(src.z);
    acc.sign = uint8_t(phase >> 1);
}

int Tableau::measure(const PauliOperator& p, std::optional<int> prefer) {
    std::vector<int> anti;
    for (size_t i = 0; i < rows_.size(); ++i)
        if (anticommutes(rows_[i], p)) anti.push_back(int(i));
    if (!anti.empty()) {
        int pivot = anti[0];
        for (size_t k = 1; k < anti.size(); ++k) row_mult(rows_[anti[k]], rows_[pivot]);
        int outcome = prefer ? *prefer : int(rng_() & 1);
        rows_[pivot] = {p.x, p.z, uint8_t(outcome)};
        return outcome;
    }
    // deterministic: express p as a product of rows and track the sign
    std::vector<std::pair<BitVec, BitVec>> reduced; // (vector, combo)
    BitVec target = symplectic_vector(p);
    BitVec combo(int(rows_.size()));
    for (size_t i = 0; i < rows_.size(); ++i) {
        PauliOperator rp(n_);
        rp.x = rows_[i].x;
        rp.z = rows_[i].z;
        BitVec v = symplectic_vector(rp);
        BitVec c(int(rows_.size()));
        c.set(int(i), true);
        for (auto& [rv, rc] : reduced) {
            int piv = rv.first_set();
            if (piv >= 0 && v.get(piv)) {
                v.xor_with(rv);
                c.xor_with(rc);
            }
        }
        if (v.any()) reduced.push_back({std::move(v), std::move(c)});
    }
    for (auto& [rv, rc] : reduced) {
        int piv = rv.first_set();
        if (piv >= 0 && target.get(piv)) {
            target.xor_with(rv);
            combo.xor_with(rc);
        }
    }
    if (target.any()) throw std::logic_error("tableau: measured operator outside the stabilizer span");
    Row acc;
    acc.x = BitVec(n_);
    acc.z = BitVec(n_);
    acc.sign = 0;
    for (int i = 0; i < int(rows_.size()); ++i)
        if (combo.get(i)) row_mult(acc, rows_[i]);
    return acc.sign;
}

void Tableau::apply_pauli(const PauliOperator& e) {
    for (auto& r : rows_) {
        if (BitVec::dot(r.x, e.z) ^ BitVec::dot(r.z, e.x)) r.sign ^= 1;
    }
}

std::vector<PauliOperator> logical_z_representatives(const StabilizerCode& code) {
    std::vector<PauliOperator> pool = bare_logicals(as_subsystem(code));
    std::vector<PauliOperator> reps;
    while (!pool.empty()) {
        PauliOperator a = pool.front();
        int partner = -1;
        for (size_t i = 1; i < pool.size(); ++i)
            if (!commutes(pool[i], a)) {
                partner = int(i);
                break;
            }
        if (partner < 0) throw std::logic_error("logical pairing failed: unpaired operator");
        PauliOperator b = pool[partner];
        std::vector<PauliOperator> rest;
        for (size_t i = 1; i < pool.size(); ++i) {
            if (int(i) == partner) continue;
            PauliOperator v = pool[i];
            if (!commutes(v, a)) v = multiply(v, b);
            if (!commutes(v, b)) v = multiply(v, a);
            rest.push_back(std::move(v));
        }
        reps.push_back(std::move(a));
        pool = std::move(rest);
    }
    return reps;
}

SimulationResult simulate_extraction(const WireCode& wire, const Schedule& sched, const PauliOperator& error,
                                     uint64_t seed, int passes) {
    const StabilizerCode& code = wire.input;
    if (error.n != code.n) throw std::invalid_argument("simulate: error must act on the data register");
    for (int s = 0; s < code.num_checks(); ++s)
        for (int g : wire.anc_of[s]) {
            const auto& round = sched.rounds.at(sched.round_of_check[s]);
            if (!std::binary_search(round.phase1.begin(), round.phase1.end(), g))
                throw std::invalid_argument("simulate: schedule does not cover a gadget coupling");
        }

    int nw = wire.base.n;
    Tableau tab(nw, seed);
    int row = 0;
    for (int q = 0; q < nw; ++q) {
        if (wire.base.register_of[q] == Register::data)
            tab.set_row(row++, single_site(nw, q, 'Z'));
        else
            tab.set_row(row++, single_site(nw, q, 'X'));
    }
    // fix a codeword: project onto the input checks and a commuting set of
    // logical-Z representatives, all preferred to +1
    for (const auto& check : code.checks) tab.measure(embed(check, nw), 0);
    for (const auto& zrep : logical_z_representatives(code)) tab.measure(embed(zrep, nw), 0);

    tab.apply_pauli(embed(error, nw));

    SimulationResult result;
    result.phase1.resize(passes);
    result.phase2.resize(passes);
    result.syndromes.resize(passes);
    std::vector<uint8_t> last_x(nw, 0); // latest X outcome per qubit; |+> init = 0
    for (int pass = 0; pass < passes; ++pass) {
        result.phase1[pass].resize(sched.rounds.size());
        result.phase2[pass].resize(sched.rounds.size());
        std::vector<uint8_t> dress_bit(code.num_checks(), 0);
        std::map<int, uint8_t> round_outcome; // gen -> bit within this pass's round
        for (size_t r = 0; r < sched.rounds.size(); ++r) {
            // snapshot the dressing values of this round's checks before
            // phase 1 disturbs them
            for (int s = 0; s < code.num_checks(); ++s) {
                if (sched.round_of_check[s] != int(r)) continue;
                uint8_t bit = 0;
                for (int q : sched.dressing[s]) bit ^= last_x[q];
                dress_bit[s] = bit;
            }
            for (int g : sched.rounds[r].phase1) {
                uint8_t bit = uint8_t(tab.measure(wire.base.gauge[g]));
                round_outcome[g] = bit;
                result.phase1[pass][r].push_back(bit);
            }
            for (int g : sched.rounds[r].phase2) {
                uint8_t bit = uint8_t(tab.measure(wire.base.gauge[g]));
                last_x[support(wire.base.gauge[g])[0]] = bit;
                result.phase2[pass][r].push_back(bit);
            }
            for (int s = 0; s < code.num_checks(); ++s) {
                if (sched.round_of_check[s] != int(r)) continue;
                uint8_t bit = dress_bit[s];
                for (int g : sched.recon_gens[s]) bit ^= round_outcome.at(g);
                dress_bit[s] = bit;
            }
        }
        result.syndromes[pass].resize(code.num_checks());
        for (int s = 0; s < code.num_checks(); ++s) result.syndromes[pass][s] = dress_bit[s];
    }
    return result;
}

} // namespace wirecode
