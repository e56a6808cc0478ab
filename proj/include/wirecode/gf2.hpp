#pragma once

#include <optional>
#include <vector>

#include "wirecode/pauli.hpp"

namespace wirecode {

// Incremental row-echelon reducer over GF(2). Rows are kept reduced with a
// unique pivot column each, so membership queries are one back-substitution.
class Echelon {
  public:
    explicit Echelon(int ncols) : ncols_(ncols) {}

    // Reduces v against the stored rows in place; returns the residual.
    BitVec reduce(BitVec v) const;

    // Adds v to the basis if independent. Returns true if the rank grew.
    bool add(BitVec v);

    bool contains(const BitVec& v) const { return !reduce(v).any(); }
    int rank() const { return int(rows_.size()); }
    int cols() const { return ncols_; }

  private:
    int ncols_;
    std::vector<std::pair<int, BitVec>> rows_; // (pivot, row), pivot ascending
};

// A Pauli viewed as a length-2n GF(2) vector: x bits then z bits.
BitVec symplectic_vector(const PauliOperator& p);
PauliOperator from_symplectic(const BitVec& v, int n);

// Symplectic partner of p: (z | x). <sym(a), partner(b)> = commutation form.
BitVec symplectic_partner(const PauliOperator& p);

int gf2_rank(const std::vector<PauliOperator>& ops);

// Basis of {c : sum_i c_i rows_i = 0}. Coefficient vectors have length rows.size().
std::vector<BitVec> left_kernel(const std::vector<BitVec>& rows);

// One solution x of the system <row_i, x> = rhs_i, if any.
std::optional<BitVec> solve_gf2(const std::vector<BitVec>& rows, const std::vector<bool>& rhs, int ncols);

// Basis of {v : <row_i, v> = 0 for all i}.
std::vector<BitVec> right_kernel(const std::vector<BitVec>& rows, int ncols);

// Generators of the subgroup of <generators> commuting with every generator,
// i.e. the stabilizer group when `generators` is a gauge group. Computed as
// the kernel of the pairwise commutation matrix acting on exponent vectors.
// The returned list is GF(2)-independent; an empty list means the center is
// trivial (identity only).
std::vector<PauliOperator> center(const std::vector<PauliOperator>& generators);

bool in_group(const PauliOperator& p, const std::vector<PauliOperator>& generators);

// Generators of the full normalizer N(G) in the n-qubit Pauli group:
// all operators commuting with every element of <generators>.
std::vector<PauliOperator> normalizer_basis(const std::vector<PauliOperator>& generators, int n);

} // namespace wirecode
