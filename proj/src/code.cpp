#include "wirecode/code.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wirecode {

int StabilizerCode::max_check_weight() const {
    int w = 0;
    for (const auto& c : checks) w = std::max(w, c.weight());
    return w;
}

int StabilizerCode::max_qubit_degree() const {
    DegreeProfile p = degree_profile(*this);
    return p.max_total();
}

void StabilizerCode::validate() const {
    for (size_t i = 0; i < checks.size(); ++i) {
        if (checks[i].n != n) throw std::invalid_argument("check " + std::to_string(i) + " has wrong length");
        if (checks[i].weight() < 1) throw std::invalid_argument("check " + std::to_string(i) + " has weight 0");
    }
    for (size_t i = 0; i < checks.size(); ++i)
        for (size_t j = i + 1; j < checks.size(); ++j)
            if (!commutes(checks[i], checks[j]))
                throw std::invalid_argument("checks " + std::to_string(i) + " and " + std::to_string(j) +
                                            " anticommute");
}

StabilizerCode make_code(int n, const std::vector<std::string>& check_strings) {
    StabilizerCode code;
    code.n = n;
    for (const auto& s : check_strings) {
        PauliOperator p = parse_pauli(s);
        if (p.n != n) throw std::invalid_argument("check '" + s + "' does not act on " + std::to_string(n) + " qubits");
        code.checks.push_back(std::move(p));
        code.check_labels.push_back(s);
    }
    code.validate();
    return code;
}

StabilizerCode parse_code_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> strings;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r')) line.pop_back();
        size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        line = line.substr(start);
        if (!strings.empty() && line.size() != strings[0].size())
            throw std::invalid_argument("line " + std::to_string(lineno) + ": check length " +
                                        std::to_string(line.size()) + " differs from " +
                                        std::to_string(strings[0].size()));
        try {
            strings.push_back(line);
            parse_pauli(line);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (strings.empty()) throw std::invalid_argument("code file contains no checks");
    return make_code(int(strings[0].size()), strings);
}

std::string code_to_text(const StabilizerCode& code) {
    std::string out;
    for (const auto& c : code.checks) {
        out += c.str();
        out += '\n';
    }
    return out;
}

int DegreeProfile::sum_total() const {
    int s = 0;
    for (size_t q = 0; q < dx.size(); ++q) s += dx[q] + dy[q] + dz[q];
    return s;
}

int DegreeProfile::max_total() const {
    int m = 0;
    for (size_t q = 0; q < dx.size(); ++q) m = std::max(m, dx[q] + dy[q] + dz[q]);
    return m;
}

DegreeProfile degree_profile(const StabilizerCode& code) {
    DegreeProfile p;
    p.dx.assign(code.n, 0);
    p.dy.assign(code.n, 0);
    p.dz.assign(code.n, 0);
    for (const auto& c : code.checks)
        for (int q = 0; q < code.n; ++q) switch (c.type_at(q)) {
                case 1: ++p.dx[q]; break;
                case 2: ++p.dz[q]; break;
                case 3: ++p.dy[q]; break;
                default: break;
            }
    return p;
}

std::vector<std::vector<int>> relations(const StabilizerCode& code) {
    std::vector<BitVec> rows;
    rows.reserve(code.checks.size());
    for (const auto& c : code.checks) rows.push_back(symplectic_vector(c));
    std::vector<std::vector<int>> result;
    for (const BitVec& combo : left_kernel(rows)) {
        std::vector<int> rel;
        for (int i = 0; i < int(code.checks.size()); ++i)
            if (combo.get(i)) rel.push_back(i);
        result.push_back(std::move(rel));
    }
    return result;
}

void SubsystemCode::validate() const {
    if (int(register_of.size()) != n) throw std::invalid_argument("register tags do not cover all qubits");
    for (const auto& g : gauge)
        if (g.n != n) throw std::invalid_argument("gauge generator length mismatch");
    for (int i : single_site_set) {
        const auto& g = gauge.at(i);
        if (g.weight() != 1 || !g.x.any() || g.z.any())
            throw std::invalid_argument("single-site generator " + std::to_string(i) + " is not a weight-1 X");
    }
}

SubsystemCode as_subsystem(const StabilizerCode& code) {
    SubsystemCode s;
    s.n = code.n;
    s.gauge = code.checks;
    s.register_of.assign(code.n, Register::data);
    return s;
}

int compute_k(const SubsystemCode& code) {
    int rank_g = gf2_rank(code.gauge);
    int rank_s = int(center(code.gauge).size());
    if ((rank_g + rank_s) % 2 != 0)
        throw std::logic_error("rank(G)+rank(center) must be even");
    return code.n - (rank_g + rank_s) / 2;
}

std::vector<PauliOperator> bare_logicals(const SubsystemCode& code) {
    std::vector<PauliOperator> stab = center(code.gauge);
    Echelon e(2 * code.n);
    for (const auto& s : stab) e.add(symplectic_vector(s));
    std::vector<PauliOperator> logicals;
    for (const auto& v : normalizer_basis(code.gauge, code.n))
        if (e.add(symplectic_vector(v))) logicals.push_back(v);
    return logicals;
}

namespace {

// Support-restricted commutation pruning: each stabilizer generator keeps
// only its x/z bits over the w chosen qubits.
struct RestrictedStab {
    uint64_t x = 0, z = 0;
};

bool next_combination(std::vector<int>& idx, int n) {
    int w = int(idx.size());
    for (int i = w - 1; i >= 0; --i) {
        if (idx[i] < n - (w - i)) {
            ++idx[i];
            for (int j = i + 1; j < w; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

DistanceResult dressed_distance(const SubsystemCode& code, int w_max) {
    if (w_max < 1) throw std::invalid_argument("dressed_distance: w_max must be >= 1");
    std::vector<PauliOperator> stab = center(code.gauge);
    Echelon gauge_span(2 * code.n);
    for (const auto& g : code.gauge) gauge_span.add(symplectic_vector(g));

    int n = code.n;
    for (int w = 1; w <= std::min(w_max, n); ++w) {
        std::vector<int> idx(w);
        for (int i = 0; i < w; ++i) idx[i] = i;
        // The support enumeration splits into independent chunks (one per
        // support); the result is the minimum over chunks, so evaluation
        // order does not matter.
        do {
            std::vector<RestrictedStab> rs(stab.size());
            for (size_t s = 0; s < stab.size(); ++s)
                for (int b = 0; b < w; ++b) {
                    if (stab[s].x.get(idx[b])) rs[s].x |= uint64_t(1) << b;
                    if (stab[s].z.get(idx[b])) rs[s].z |= uint64_t(1) << b;
                }
            // all assignments of X/Z/Y to the support, odometer order
            std::vector<int> types(w, 1);
            while (true) {
                uint64_t px = 0, pz = 0;
                for (int b = 0; b < w; ++b) {
                    if (types[b] & 1) px |= uint64_t(1) << b;
                    if (types[b] & 2) pz |= uint64_t(1) << b;
                }
                bool ok = true;
                for (const auto& s : rs)
                    if (std::popcount((px & s.z) ^ (pz & s.x)) & 1) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    PauliOperator cand(n);
                    for (int b = 0; b < w; ++b) {
                        if (types[b] & 1) cand.x.set(idx[b], true);
                        if (types[b] & 2) cand.z.set(idx[b], true);
                    }
                    if (!gauge_span.contains(symplectic_vector(cand)))
                        return {true, w, std::move(cand)};
                }
                int pos = w - 1;
                while (pos >= 0 && types[pos] == 3) types[pos--] = 1;
                if (pos < 0) break;
                ++types[pos];
            }
        } while (next_combination(idx, n));
    }
    return {false, w_max, PauliOperator(n)};
}

} // namespace wirecode
