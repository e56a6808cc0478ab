#pragma once

#include <string>
#include <vector>

#include "wirecode/bitvec.hpp"

namespace wirecode {

// Phaseless n-qubit Pauli operator in symplectic form: a pair of X/Z bit
// vectors. Signs are deliberately not tracked here; the measurement
// simulator keeps its own sign bits.
struct PauliOperator {
    int n = 0;
    BitVec x, z;

    PauliOperator() = default;
    explicit PauliOperator(int nq) : n(nq), x(nq), z(nq) {}

    bool is_identity() const { return !x.any() && !z.any(); }
    int weight() const;

    // 0=I, 1=X, 2=Z, 3=Y at qubit i
    int type_at(int i) const { return int(x.get(i)) | (int(z.get(i)) << 1); }
    char char_at(int i) const;
    void set_type(int i, char p);

    std::string str() const;
};

PauliOperator parse_pauli(const std::string& text);

bool commutes(const PauliOperator& a, const PauliOperator& b);
PauliOperator multiply(const PauliOperator& a, const PauliOperator& b);

// Pads `p` (acting on the first p.n qubits) with identity up to n_total.
PauliOperator embed(const PauliOperator& p, int n_total);

// Single-site operator on n qubits.
PauliOperator single_site(int n, int qubit, char p);

std::vector<int> support(const PauliOperator& p);

} // namespace wirecode
