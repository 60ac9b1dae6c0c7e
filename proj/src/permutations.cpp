#include "pcsym/permutations.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pcsym {

int Permutation::position_of(int v) const {
    for (int i = 0; i < size(); ++i)
        if (word[i] == v) return i + 1;
    throw std::out_of_range("position_of: value not present");
}

std::vector<Permutation> all_permutations(int n) {
    if (n < 0) throw std::invalid_argument("all_permutations: negative size");
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation{w});
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

Int u_sequence(int r) {
    if (r < 0) throw std::invalid_argument("u_sequence: negative index");
    Int count = 0;
    for (const auto& p : all_permutations(r + 1)) {
        bool ok = true;
        for (int s = 0; s + 1 < p.size(); ++s)
            if (p.word[s + 1] == p.word[s] + 1) {
                ok = false;
                break;
            }
        if (ok) ++count;
    }
    return count;
}

Int v_sequence(int r) {
    if (r < 0) throw std::invalid_argument("v_sequence: negative index");
    Int count = 0;
    for (const auto& p : all_permutations(r)) {
        bool ok = true;
        for (int s = 0; s < p.size(); ++s)
            if (p.word[s] == s + 1) {
                ok = false;
                break;
            }
        if (ok) ++count;
    }
    return count;
}

}  // namespace pcsym
