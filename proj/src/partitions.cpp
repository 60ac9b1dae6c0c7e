#include "pcsym/partitions.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace pcsym {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    for (int x : parts)
        if (x < 1) throw std::invalid_argument("partition parts must be positive");
}

int Partition::weight() const {
    int w = 0;
    for (int x : parts) w += x;
    return w;
}

std::string Partition::str() const {
    std::string s = "[";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s + "]";
}

std::vector<Partition> integer_partitions(int n) {
    if (n < 0) throw std::invalid_argument("integer_partitions: negative weight");
    std::vector<Partition> out;
    std::vector<int> cur;
    // Parts chosen weakly decreasing with the largest part first: the
    // natural depth-first order is exactly reverse-lexicographic.
    std::function<void(int, int)> rec = [&](int rem, int maxpart) {
        if (rem == 0) {
            Partition p;
            p.parts = cur;
            out.push_back(std::move(p));
            return;
        }
        for (int k = std::min(rem, maxpart); k >= 1; --k) {
            cur.push_back(k);
            rec(rem - k, k);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

Int r_factorial(const Partition& lam) {
    Int r = 1;
    size_t i = 0;
    while (i < lam.parts.size()) {
        size_t j = i;
        while (j < lam.parts.size() && lam.parts[j] == lam.parts[i]) ++j;
        r *= factorial(static_cast<long>(j - i));
        i = j;
    }
    return r;
}

int sgn_partition(const Partition& lam) {
    return (lam.weight() - lam.length()) % 2 == 0 ? 1 : -1;
}

Partition conjugate(const Partition& lam) {
    std::vector<int> cols;
    for (int j = 1; lam.length() > 0 && j <= lam.parts[0]; ++j) {
        int h = 0;
        for (int p : lam.parts)
            if (p >= j) ++h;
        cols.push_back(h);
    }
    Partition out;
    out.parts = std::move(cols);
    return out;
}

Partition union_parts(const Partition& a, const Partition& b) {
    std::vector<int> parts = a.parts;
    parts.insert(parts.end(), b.parts.begin(), b.parts.end());
    return Partition(std::move(parts));
}

Partition subset_type(std::uint32_t s_mask, int d) {
    if (d < 0) throw std::invalid_argument("subset_type: negative d");
    if (s_mask & ~full_mask(d))
        throw std::invalid_argument("subset_type: subset element outside [d-1]");
    std::vector<int> parts;
    int run = 0;
    for (int i = 1; i <= d; ++i) {
        ++run;
        bool brk = (i < d) && (s_mask >> (i - 1) & 1u);
        if (brk || i == d) {
            parts.push_back(run);
            run = 0;
        }
    }
    return Partition(std::move(parts));
}

Partition parse_partition(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s += c;
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw std::invalid_argument("partition syntax: expected \"[a,b,...]\", got " + text);
    s = s.substr(1, s.size() - 2);
    std::vector<int> parts;
    if (!s.empty()) {
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) {
            size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size())
                throw std::invalid_argument("partition syntax: bad part \"" + item + "\"");
            parts.push_back(v);
        }
    }
    return Partition(std::move(parts));
}

}  // namespace pcsym
