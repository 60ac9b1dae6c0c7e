#include "pcsym/kostka.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pcsym {

namespace {

using Memo = std::map<std::pair<std::vector<int>, std::vector<int>>, Int>;

Int count(const std::vector<int>& shape, const std::vector<int>& content, Memo& memo) {
    if (content.empty()) return shape.empty() ? 1 : 0;
    auto key = std::make_pair(shape, content);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    // The largest entry occupies a horizontal strip of size content.back().
    // Enumerate inner shapes nu with nu interlacing shape and the right size,
    // then recurse on the truncated content.
    int strip = content.back();
    std::vector<int> rest(content.begin(), content.end() - 1);
    int inner_total = 0;
    for (int x : shape) inner_total += x;
    inner_total -= strip;

    Int total = 0;
    std::vector<int> nu(shape.size(), 0);
    // Row by row choose nu[i] in [shape[i+1], shape[i]] summing to inner_total.
    std::function<void(size_t, int)> rec = [&](size_t i, int remaining) {
        if (i == shape.size()) {
            if (remaining != 0) return;
            std::vector<int> trimmed;
            for (int x : nu)
                if (x > 0) trimmed.push_back(x);
            total += count(trimmed, rest, memo);
            return;
        }
        int lo = (i + 1 < shape.size()) ? shape[i + 1] : 0;
        for (int v = lo; v <= shape[i] && v <= remaining; ++v) {
            nu[i] = v;
            rec(i + 1, remaining - v);
        }
        nu[i] = 0;
    };
    rec(0, inner_total);
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

Int kostka(const Partition& shape, const Partition& content) {
    if (shape.weight() != content.weight())
        throw std::invalid_argument("kostka: shape and content weights differ");
    Memo memo;
    return count(shape.parts, content.parts, memo);
}

}  // namespace pcsym
