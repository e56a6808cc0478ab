#pragma once

#include <random>
#include <string>
#include <vector>

#include "wirecode/code.hpp"

namespace wirecode::fixtures {

inline StabilizerCode repetition() { return make_code(3, {"ZZI", "IZZ"}); }

inline StabilizerCode overcomplete_repetition() { return make_code(3, {"ZZI", "IZZ", "ZIZ"}); }

inline StabilizerCode five_qubit() { return make_code(5, {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}); }

inline StabilizerCode four_two_two() { return make_code(4, {"XXXX", "ZZZZ"}); }

inline StabilizerCode shor() {
    return make_code(9, {"XXXXXXIII", "IIIXXXXXX", "ZZIIIIIII", "IZZIIIIII", "IIIZZIIII", "IIIIZZIII",
                         "IIIIIIZZI", "IIIIIIIZZ"});
}

// 2x2 toric code: 8 edge qubits, 4 star and 4 plaquette checks, two
// relations (the stars multiply to identity, as do the plaquettes).
inline StabilizerCode toric_2x2() {
    auto h = [](int i, int j) { return ((i & 1) << 1) | (j & 1); };       // 0..3
    auto v = [](int i, int j) { return 4 + (((i & 1) << 1) | (j & 1)); }; // 4..7
    std::vector<std::string> checks;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            std::string star(8, 'I');
            star[h(i, j)] = 'X';
            star[h(i, j + 1)] = 'X';
            star[v(i, j)] = 'X';
            star[v(i + 1, j)] = 'X';
            checks.push_back(star);
        }
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            std::string plaq(8, 'I');
            plaq[h(i, j)] = 'Z';
            plaq[h(i + 1, j)] = 'Z';
            plaq[v(i, j)] = 'Z';
            plaq[v(i, j + 1)] = 'Z';
            checks.push_back(plaq);
        }
    return make_code(8, checks);
}

// Rotated surface code on a d x d data-qubit patch: d^2 - 1 checks, one
// logical qubit. Faces are checkerboard-colored; the boundary keeps X-type
// half-faces on top/bottom and Z-type ones on the sides.
inline StabilizerCode rotated_surface(int d) {
    int n = d * d;
    auto qubit = [d](int r, int c) { return r * d + c; };
    std::vector<std::string> checks;
    for (int r = -1; r <= d - 1; ++r)
        for (int c = -1; c <= d - 1; ++c) {
            bool top = r == -1, bottom = r == d - 1, left = c == -1, right = c == d - 1;
            bool x_type = ((r + c) % 2 + 2) % 2 == 0;
            if ((top || bottom) && (left || right)) continue;
            if (top || bottom) {
                if (!x_type) continue;
            } else if (left || right) {
                if (x_type) continue;
            }
            std::string check(n, 'I');
            for (int dr = 0; dr <= 1; ++dr)
                for (int dc = 0; dc <= 1; ++dc) {
                    int rr = r + dr, cc = c + dc;
                    if (rr < 0 || cc < 0 || rr >= d || cc >= d) continue;
                    check[qubit(rr, cc)] = x_type ? 'X' : 'Z';
                }
            checks.push_back(check);
        }
    return make_code(n, checks);
}

// Random commuting, independent check set on 3..10 qubits.
inline StabilizerCode random_commuting(uint64_t seed) {
    std::mt19937_64 rng(seed);
    int n = 3 + int(rng() % 8);
    int m = 1 + int(rng() % (n - 1));
    std::vector<PauliOperator> checks;
    Echelon span(2 * n);
    int guard = 0;
    while (int(checks.size()) < m && guard++ < 20000) {
        PauliOperator p(n);
        for (int q = 0; q < n; ++q) {
            int t = int(rng() % 4);
            if (t == 1) p.set_type(q, 'X');
            if (t == 2) p.set_type(q, 'Z');
            if (t == 3) p.set_type(q, 'Y');
        }
        if (p.weight() == 0) continue;
        bool ok = true;
        for (const auto& c : checks)
            if (!commutes(c, p)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        if (!span.add(symplectic_vector(p))) continue;
        checks.push_back(std::move(p));
    }
    StabilizerCode code;
    code.n = n;
    code.checks = std::move(checks);
    for (size_t i = 0; i < code.checks.size(); ++i) code.check_labels.push_back(code.checks[i].str());
    code.validate();
    return code;
}

} // namespace wirecode::fixtures
