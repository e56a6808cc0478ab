#include "wirecode/gf2.hpp"

#include <algorithm>
#include <stdexcept>

namespace wirecode {

BitVec Echelon::reduce(BitVec v) const {
    for (const auto& [pivot, row] : rows_) {
        if (v.get(pivot)) v.xor_with(row);
    }
    return v;
}

bool Echelon::add(BitVec v) {
    v = reduce(v);
    int pivot = v.first_set();
    if (pivot < 0) return false;
    // keep earlier rows reduced against the new pivot
    for (auto& [p, row] : rows_)
        if (row.get(pivot)) row.xor_with(v);
    auto it = std::lower_bound(rows_.begin(), rows_.end(), pivot,
                               [](const auto& r, int val) { return r.first < val; });
    rows_.insert(it, {pivot, std::move(v)});
    return true;
}

BitVec symplectic_vector(const PauliOperator& p) {
    BitVec v(2 * p.n);
    for (int i = 0; i < p.n; ++i) {
        if (p.x.get(i)) v.set(i, true);
        if (p.z.get(i)) v.set(p.n + i, true);
    }
    return v;
}

PauliOperator from_symplectic(const BitVec& v, int n) {
    PauliOperator p(n);
    for (int i = 0; i < n; ++i) {
        if (v.get(i)) p.x.set(i, true);
        if (v.get(n + i)) p.z.set(i, true);
    }
    return p;
}

BitVec symplectic_partner(const PauliOperator& p) {
    BitVec v(2 * p.n);
    for (int i = 0; i < p.n; ++i) {
        if (p.z.get(i)) v.set(i, true);
        if (p.x.get(i)) v.set(p.n + i, true);
    }
    return v;
}

int gf2_rank(const std::vector<PauliOperator>& ops) {
    if (ops.empty()) return 0;
    Echelon e(2 * ops[0].n);
    for (const auto& op : ops) e.add(symplectic_vector(op));
    return e.rank();
}

std::vector<BitVec> left_kernel(const std::vector<BitVec>& rows) {
    std::vector<BitVec> kernel;
    if (rows.empty()) return kernel;
    int m = int(rows.size());
    // eliminate rows while tracking the combination that produced each one
    std::vector<std::pair<int, std::pair<BitVec, BitVec>>> echelon; // pivot -> (row, combo)
    for (int i = 0; i < m; ++i) {
        BitVec r = rows[i];
        BitVec combo(m);
        combo.set(i, true);
        for (const auto& [pivot, rc] : echelon) {
            if (r.get(pivot)) {
                r.xor_with(rc.first);
                combo.xor_with(rc.second);
            }
        }
        int pivot = r.first_set();
        if (pivot < 0)
            kernel.push_back(combo);
        else
            echelon.push_back({pivot, {std::move(r), std::move(combo)}});
    }
    return kernel;
}

std::optional<BitVec> solve_gf2(const std::vector<BitVec>& rows, const std::vector<bool>& rhs, int ncols) {
    // augmented elimination; the extra column carries the right-hand side
    std::vector<std::pair<BitVec, bool>> sys;
    for (size_t i = 0; i < rows.size(); ++i) sys.push_back({rows[i], rhs[i]});
    std::vector<int> pivot_col;
    size_t rank = 0;
    for (int col = 0; col < ncols && rank < sys.size(); ++col) {
        size_t sel = rank;
        while (sel < sys.size() && !sys[sel].first.get(col)) ++sel;
        if (sel == sys.size()) continue;
        std::swap(sys[rank], sys[sel]);
        for (size_t r = 0; r < sys.size(); ++r)
            if (r != rank && sys[r].first.get(col)) {
                sys[r].first.xor_with(sys[rank].first);
                sys[r].second = sys[r].second != sys[rank].second;
            }
        pivot_col.push_back(col);
        ++rank;
    }
    for (size_t r = rank; r < sys.size(); ++r)
        if (sys[r].second) return std::nullopt; // inconsistent
    BitVec x(ncols);
    for (size_t r = 0; r < rank; ++r)
        if (sys[r].second) x.set(pivot_col[r], true);
    return x;
}

std::vector<BitVec> right_kernel(const std::vector<BitVec>& rows, int ncols) {
    // Gauss-Jordan; free columns parameterize the kernel.
    std::vector<BitVec> mat = rows;
    std::vector<int> pivot_col_of_row;
    std::vector<int> pivot_row_of_col(ncols, -1);
    size_t rank = 0;
    for (int col = 0; col < ncols && rank < mat.size(); ++col) {
        size_t sel = rank;
        while (sel < mat.size() && !mat[sel].get(col)) ++sel;
        if (sel == mat.size()) continue;
        std::swap(mat[rank], mat[sel]);
        for (size_t r = 0; r < mat.size(); ++r)
            if (r != rank && mat[r].get(col)) mat[r].xor_with(mat[rank]);
        pivot_col_of_row.push_back(col);
        pivot_row_of_col[col] = int(rank);
        ++rank;
    }
    std::vector<BitVec> kernel;
    for (int col = 0; col < ncols; ++col) {
        if (pivot_row_of_col[col] >= 0) continue;
        BitVec v(ncols);
        v.set(col, true);
        for (size_t r = 0; r < rank; ++r)
            if (mat[r].get(col)) v.set(pivot_col_of_row[r], true);
        kernel.push_back(std::move(v));
    }
    return kernel;
}

std::vector<PauliOperator> center(const std::vector<PauliOperator>& generators) {
    std::vector<PauliOperator> result;
    if (generators.empty()) return result;
    int m = int(generators.size());
    int n = generators[0].n;
    std::vector<BitVec> comm(m, BitVec(m));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (!commutes(generators[i], generators[j])) {
                comm[i].set(j, true);
                comm[j].set(i, true);
            }
    Echelon reducer(2 * n);
    for (const BitVec& expo : right_kernel(comm, m)) {
        PauliOperator elem(n);
        for (int i = 0; i < m; ++i)
            if (expo.get(i)) elem = multiply(elem, generators[i]);
        if (elem.is_identity()) continue;
        if (reducer.add(symplectic_vector(elem))) result.push_back(std::move(elem));
    }
    return result;
}

bool in_group(const PauliOperator& p, const std::vector<PauliOperator>& generators) {
    Echelon e(2 * p.n);
    for (const auto& g : generators) {
        if (g.n != p.n) throw std::invalid_argument("in_group: operator length mismatch");
        e.add(symplectic_vector(g));
    }
    return e.contains(symplectic_vector(p));
}

std::vector<PauliOperator> normalizer_basis(const std::vector<PauliOperator>& generators, int n) {
    std::vector<BitVec> rows;
    rows.reserve(generators.size());
    for (const auto& g : generators) rows.push_back(symplectic_partner(g));
    std::vector<PauliOperator> basis;
    for (const BitVec& v : right_kernel(rows, 2 * n)) basis.push_back(from_symplectic(v, n));
    return basis;
}

} // namespace wirecode
