#include "pcsym/setpartitions.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pcsym {

SetPartition::SetPartition(int ground_size, std::vector<std::vector<int>> bs)
    : n(ground_size), blocks(std::move(bs)) {
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    size_t total = 0;
    for (auto& b : blocks) {
        if (b.empty()) throw std::invalid_argument("set partition: empty block");
        std::sort(b.begin(), b.end());
        for (int v : b) {
            if (v < 1 || v > n) throw std::invalid_argument("set partition: element out of range");
            if (seen[v]) throw std::invalid_argument("set partition: repeated element");
            seen[v] = true;
        }
        total += b.size();
    }
    if (total != static_cast<size_t>(n))
        throw std::invalid_argument("set partition: blocks do not cover the ground set");
    std::sort(blocks.begin(), blocks.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
}

SetPartition SetPartition::from_rgs(const std::vector<int>& rgs) {
    int n = static_cast<int>(rgs.size());
    int nblocks = rgs.empty() ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<std::vector<int>> bs(nblocks);
    for (int i = 0; i < n; ++i) bs[rgs[i]].push_back(i + 1);
    return SetPartition(n, std::move(bs));
}

Partition SetPartition::type() const {
    std::vector<int> sizes;
    sizes.reserve(blocks.size());
    for (const auto& b : blocks) sizes.push_back(static_cast<int>(b.size()));
    return Partition(std::move(sizes));
}

int SetPartition::block_of(int v) const {
    for (size_t i = 0; i < blocks.size(); ++i)
        if (std::binary_search(blocks[i].begin(), blocks[i].end(), v))
            return static_cast<int>(i);
    throw std::out_of_range("block_of: element not in ground set");
}

std::string SetPartition::str() const {
    std::string s = "{";
    for (size_t i = 0; i < blocks.size(); ++i) {
        if (i) s += "|";
        for (size_t j = 0; j < blocks[i].size(); ++j) {
            if (j) s += ",";
            s += std::to_string(blocks[i][j]);
        }
    }
    return s + "}";
}

SetPartition bottom_partition(int n) {
    std::vector<std::vector<int>> bs;
    for (int v = 1; v <= n; ++v) bs.push_back({v});
    return SetPartition(n, std::move(bs));
}

SetPartition top_partition(int n) {
    if (n == 0) return SetPartition(0, {});
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 1);
    return SetPartition(n, {all});
}

std::vector<SetPartition> set_partitions(int n) {
    if (n < 0) throw std::invalid_argument("set_partitions: negative ground size");
    std::vector<SetPartition> out;
    std::vector<int> rgs(n, 0);
    // Restricted growth strings: rgs[0] = 0 and rgs[i] <= max(prefix)+1.
    std::function<void(int, int)> rec = [&](int i, int maxid) {
        if (i == n) {
            out.push_back(SetPartition::from_rgs(rgs));
            return;
        }
        for (int id = 0; id <= maxid + 1; ++id) {
            rgs[i] = id;
            rec(i + 1, std::max(maxid, id));
        }
    };
    if (n == 0)
        out.push_back(SetPartition(0, {}));
    else
        rec(0, -1);
    return out;
}

bool refines(const SetPartition& pi, const SetPartition& sigma) {
    if (pi.n != sigma.n)
        throw std::invalid_argument("refines: ground-size mismatch");
    for (const auto& b : pi.blocks) {
        int target = sigma.block_of(b[0]);
        for (int v : b)
            if (sigma.block_of(v) != target) return false;
    }
    return true;
}

Partition interval_type(const SetPartition& pi, const SetPartition& sigma) {
    if (!refines(pi, sigma))
        throw std::invalid_argument("interval_type: arguments not comparable");
    std::vector<int> counts(sigma.blocks.size(), 0);
    for (const auto& b : pi.blocks) ++counts[sigma.block_of(b[0])];
    return Partition(std::move(counts));
}

Int mobius_interval(const SetPartition& pi, const SetPartition& sigma) {
    // Each sigma-block contributes (-1)^{b-1} (b-1)! where b is the
    // number of pi-blocks merged into it; intervals of the partition
    // lattice factor into full partition lattices, so this is exact.
    Partition t = interval_type(pi, sigma);  // validates comparability
    Int r = 1;
    for (int b : t.parts) {
        r *= factorial(b - 1);
        if ((b - 1) % 2 != 0) r = -r;
    }
    return r;
}

Int lambda_factorial(const SetPartition& pi, const SetPartition& sigma) {
    Partition t = interval_type(pi, sigma);
    Int r = 1;
    for (int b : t.parts) r *= factorial(b);
    return r;
}

SetPartition lattice_join(const SetPartition& pi, const SetPartition& sigma) {
    if (pi.n != sigma.n)
        throw std::invalid_argument("lattice_join: ground-size mismatch");
    int n = pi.n;
    std::vector<int> parent(static_cast<size_t>(n) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    for (const auto& b : pi.blocks)
        for (size_t j = 1; j < b.size(); ++j) unite(b[0], b[j]);
    for (const auto& b : sigma.blocks)
        for (size_t j = 1; j < b.size(); ++j) unite(b[0], b[j]);
    std::vector<std::vector<int>> bs;
    std::vector<int> root_to_block(static_cast<size_t>(n) + 1, -1);
    for (int v = 1; v <= n; ++v) {
        int r = find(v);
        if (root_to_block[r] < 0) {
            root_to_block[r] = static_cast<int>(bs.size());
            bs.emplace_back();
        }
        bs[root_to_block[r]].push_back(v);
    }
    return SetPartition(n, std::move(bs));
}

SetPartition parse_set_partition(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s += c;
    if (s.size() < 2 || s.front() != '{' || s.back() != '}')
        throw std::invalid_argument("set-partition syntax: expected \"{..|..}\", got " + text);
    s = s.substr(1, s.size() - 2);
    std::vector<std::vector<int>> bs;
    int maxv = 0;
    if (!s.empty()) {
        std::stringstream bss(s);
        std::string blk;
        while (std::getline(bss, blk, '|')) {
            std::vector<int> b;
            std::stringstream ess(blk);
            std::string item;
            while (std::getline(ess, item, ',')) {
                size_t used = 0;
                int v = std::stoi(item, &used);
                if (used != item.size())
                    throw std::invalid_argument("set-partition syntax: bad element \"" + item + "\"");
                b.push_back(v);
                maxv = std::max(maxv, v);
            }
            if (b.empty()) throw std::invalid_argument("set-partition syntax: empty block");
            bs.push_back(std::move(b));
        }
    }
    return SetPartition(maxv, std::move(bs));
}

std::vector<std::vector<Int>> mobius_matrix(const std::vector<SetPartition>& elems) {
    size_t m = elems.size();
    std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) leq[i][j] = refines(elems[i], elems[j]);
    std::vector<std::vector<Int>> mu(m, std::vector<Int>(m, 0));
    // mu(x,x) = 1; mu(x,z) = -sum_{x <= y < z} mu(x,y).  Process targets
    // in an order compatible with <= by counting elements below.
    std::vector<size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> below(m, 0);
    for (size_t j = 0; j < m; ++j)
        for (size_t i = 0; i < m; ++i)
            if (i != j && leq[i][j]) ++below[j];
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return below[a] < below[b]; });
    for (size_t i = 0; i < m; ++i) {
        mu[i][i] = 1;
        for (size_t jo : order) {
            if (jo == i || !leq[i][jo]) continue;
            Int s = 0;
            for (size_t k = 0; k < m; ++k)
                if (leq[i][k] && leq[k][jo] && k != jo) s += mu[i][k];
            mu[i][jo] = -s;
        }
    }
    return mu;
}

}  // namespace pcsym
