#include "wirecode/pauli.hpp"

#include <stdexcept>

namespace wirecode {

int PauliOperator::weight() const {
    int c = 0;
    const auto& wx = x.words();
    const auto& wz = z.words();
    for (size_t k = 0; k < wx.size(); ++k) c += std::popcount(wx[k] | wz[k]);
    return c;
}

char PauliOperator::char_at(int i) const {
    static const char tab[4] = {'I', 'X', 'Z', 'Y'};
    return tab[type_at(i)];
}

void PauliOperator::set_type(int i, char p) {
    switch (p) {
        case 'I': x.set(i, false); z.set(i, false); break;
        case 'X': x.set(i, true); z.set(i, false); break;
        case 'Z': x.set(i, false); z.set(i, true); break;
        case 'Y': x.set(i, true); z.set(i, true); break;
        default: throw std::invalid_argument(std::string("invalid Pauli character '") + p + "'");
    }
}

std::string PauliOperator::str() const {
    std::string s(n, 'I');
    for (int i = 0; i < n; ++i) s[i] = char_at(i);
    return s;
}

PauliOperator parse_pauli(const std::string& text) {
    PauliOperator p(int(text.size()));
    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z')
            throw std::invalid_argument("pauli parse error: invalid character '" + std::string(1, c) +
                                        "' at position " + std::to_string(i));
        p.set_type(int(i), c);
    }
    return p;
}

bool commutes(const PauliOperator& a, const PauliOperator& b) {
    if (a.n != b.n) throw std::invalid_argument("commutes: operator length mismatch");
    return !(BitVec::dot(a.x, b.z) ^ BitVec::dot(a.z, b.x));
}

PauliOperator multiply(const PauliOperator& a, const PauliOperator& b) {
    if (a.n != b.n) throw std::invalid_argument("multiply: operator length mismatch");
    PauliOperator r = a;
    r.x.xor_with(b.x);
    r.z.xor_with(b.z);
    return r;
}

PauliOperator embed(const PauliOperator& p, int n_total) {
    if (n_total < p.n) throw std::invalid_argument("embed: target size smaller than operator");
    PauliOperator r(n_total);
    for (int i = 0; i < p.n; ++i) {
        if (p.x.get(i)) r.x.set(i, true);
        if (p.z.get(i)) r.z.set(i, true);
    }
    return r;
}

PauliOperator single_site(int n, int qubit, char p) {
    PauliOperator r(n);
    r.set_type(qubit, p);
    return r;
}

std::vector<int> support(const PauliOperator& p) {
    std::vector<int> s;
    for (int i = 0; i < p.n; ++i)
        if (p.type_at(i) != 0) s.push_back(i);
    return s;
}

} // namespace wirecode
