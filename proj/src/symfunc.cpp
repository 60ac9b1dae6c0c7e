#include "pcsym/symfunc.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "pcsym/kostka.hpp"

namespace pcsym {

std::string basis_name(Basis b) {
    switch (b) {
        case Basis::m: return "m";
        case Basis::mtilde: return "mtilde";
        case Basis::p: return "p";
        case Basis::e: return "e";
        case Basis::h: return "h";
        case Basis::s: return "s";
        case Basis::f: return "f";
        case Basis::xitilde: return "xitilde";
    }
    throw std::logic_error("basis_name: unreachable");
}

Basis parse_basis(const std::string& name) {
    if (name == "m") return Basis::m;
    if (name == "mtilde") return Basis::mtilde;
    if (name == "p") return Basis::p;
    if (name == "e") return Basis::e;
    if (name == "h") return Basis::h;
    if (name == "s") return Basis::s;
    if (name == "f") return Basis::f;
    if (name == "xitilde") return Basis::xitilde;
    throw std::invalid_argument("unknown basis \"" + name + "\"");
}

namespace {

constexpr int kHardDegreeLimit = 14;
std::atomic<int> g_degree_cap{8};

}  // namespace

int degree_cap() { return g_degree_cap.load(); }

void set_degree_cap(int cap) {
    if (cap < 0 || cap > kHardDegreeLimit)
        throw std::invalid_argument("degree cap must lie in [0, 14]");
    g_degree_cap.store(cap);
}

// ---------------------------------------------------------------------------
// Matrix utilities.

std::vector<std::vector<Rat>> invert_matrix(std::vector<std::vector<Rat>> a) {
    size_t n = a.size();
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw std::invalid_argument("invert_matrix: not square");
        inv[i][i] = 1;
    }
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw std::runtime_error("invert_matrix: singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rat d = a[col][col];
        for (size_t j = 0; j < n; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rat f = a[r][col];
            for (size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

// ---------------------------------------------------------------------------
// Per-degree transition tables between the p hub and each other basis.

namespace {

struct BasisTable {
    std::vector<Partition> parts;          // all partitions of the degree, reverse-lex
    std::map<Partition, int, PartitionOrder> index;
    std::vector<std::vector<Rat>> to_p;    // row r: basis element parts[r] in p-coords
    std::vector<std::vector<Rat>> from_p;  // (to_p transposed) inverted
};

// Number of ways to distribute the parts of mu over slots with exact
// capacities lam (one column of the p-into-m expansion matrix).
Int assignment_count(const std::vector<int>& mu, size_t idx, std::vector<int> rem,
                     std::map<std::pair<size_t, std::vector<int>>, Int>& memo) {
    std::sort(rem.begin(), rem.end());
    if (idx == mu.size()) {
        for (int r : rem)
            if (r != 0) return 0;
        return 1;
    }
    auto key = std::make_pair(idx, rem);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Int total = 0;
    for (size_t s = 0; s < rem.size(); ++s) {
        if (s > 0 && rem[s] == rem[s - 1]) continue;  // same capacity, same count
        if (rem[s] < mu[idx]) continue;
        // Multiplicity: identical capacities are distinct slots.
        size_t same = 1;
        while (s + same < rem.size() && rem[s + same] == rem[s]) ++same;
        std::vector<int> next = rem;
        next[s] -= mu[idx];
        total += Int(same) * assignment_count(mu, idx + 1, std::move(next), memo);
    }
    memo.emplace(std::move(key), total);
    return total;
}

std::vector<std::vector<Rat>> monomial_rows(const BasisTable& t) {
    size_t n = t.parts.size();
    // p_mu = sum_lam R[mu][lam] m_lam by direct expansion, then invert.
    std::vector<std::vector<Rat>> R(n, std::vector<Rat>(n, Rat(0)));
    for (size_t r = 0; r < n; ++r) {
        std::map<std::pair<size_t, std::vector<int>>, Int> memo;
        for (size_t c = 0; c < n; ++c) {
            Int cnt = assignment_count(t.parts[r].parts, 0, t.parts[c].parts, memo);
            if (cnt != 0) R[r][c] = Rat(cnt);
        }
    }
    return invert_matrix(std::move(R));
}

std::vector<Rat> symfunc_to_row(const SymFunc& g, const BasisTable& t) {
    std::vector<Rat> row(t.parts.size(), Rat(0));
    for (const auto& [lam, c] : g.p_coeffs()) row[t.index.at(lam)] = c;
    return row;
}

// e_n and h_n in the hub via the Newton recurrences.
SymFunc elementary_sym(int n) {
    static std::vector<SymFunc> cache{SymFunc::one()};
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    for (int k = static_cast<int>(cache.size()); k <= n; ++k) {
        SymFunc acc;
        for (int j = 1; j <= k; ++j) {
            SymFunc term = SymFunc::p_term(Partition({j})) * cache[k - j];
            acc = (j % 2 == 1) ? acc + term : acc - term;
        }
        cache.push_back(acc.scaled(Rat(1, k)));
    }
    return cache[n];
}

SymFunc complete_sym(int n) {
    static std::vector<SymFunc> cache{SymFunc::one()};
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    for (int k = static_cast<int>(cache.size()); k <= n; ++k) {
        SymFunc acc;
        for (int j = 1; j <= k; ++j) acc = acc + SymFunc::p_term(Partition({j})) * cache[k - j];
        cache.push_back(acc.scaled(Rat(1, k)));
    }
    return cache[n];
}

BasisTable build_table(Basis b, int deg);

std::shared_mutex g_cache_mutex;
std::map<std::pair<int, int>, BasisTable> g_cache;

const BasisTable& basis_data(Basis b, int deg) {
    if (deg > kHardDegreeLimit)
        throw std::runtime_error("basis conversion at degree " + std::to_string(deg) +
                                 " exceeds the hard limit of 14");
    if (deg > degree_cap())
        throw std::runtime_error("basis conversion at degree " + std::to_string(deg) +
                                 " exceeds the configured degree cap of " +
                                 std::to_string(degree_cap()));
    auto key = std::make_pair(static_cast<int>(b), deg);
    {
        std::shared_lock lock(g_cache_mutex);
        auto it = g_cache.find(key);
        if (it != g_cache.end()) return it->second;
    }
    BasisTable table = build_table(b, deg);  // may recompute concurrently; idempotent
    std::unique_lock lock(g_cache_mutex);
    auto [it, inserted] = g_cache.try_emplace(key, std::move(table));
    return it->second;
}

BasisTable build_table(Basis b, int deg) {
    BasisTable t;
    t.parts = integer_partitions(deg);
    for (size_t i = 0; i < t.parts.size(); ++i) t.index.emplace(t.parts[i], static_cast<int>(i));
    size_t n = t.parts.size();
    t.to_p.assign(n, std::vector<Rat>(n, Rat(0)));

    switch (b) {
        case Basis::p:
            for (size_t r = 0; r < n; ++r) t.to_p[r][r] = 1;
            break;
        case Basis::m:
            t.to_p = monomial_rows(t);
            break;
        case Basis::mtilde: {
            t.to_p = monomial_rows(t);
            for (size_t r = 0; r < n; ++r) {
                Rat scale(r_factorial(t.parts[r]));
                for (auto& x : t.to_p[r]) x *= scale;
            }
            break;
        }
        case Basis::e:
            for (size_t r = 0; r < n; ++r) {
                SymFunc prod = SymFunc::one();
                for (int part : t.parts[r].parts) prod = prod * elementary_sym(part);
                t.to_p[r] = symfunc_to_row(prod, t);
            }
            break;
        case Basis::h:
            for (size_t r = 0; r < n; ++r) {
                SymFunc prod = SymFunc::one();
                for (int part : t.parts[r].parts) prod = prod * complete_sym(part);
                t.to_p[r] = symfunc_to_row(prod, t);
            }
            break;
        case Basis::s: {
            const BasisTable& mt = basis_data(Basis::m, deg);
            for (size_t r = 0; r < n; ++r)
                for (size_t c = 0; c < n; ++c) {
                    Int k = kostka(t.parts[r], t.parts[c]);
                    if (k == 0) continue;
                    for (size_t j = 0; j < n; ++j) t.to_p[r][j] += Rat(k) * mt.to_p[c][j];
                }
            break;
        }
        case Basis::f: {
            const BasisTable& mt = basis_data(Basis::mtilde, deg);
            // f_lambda = (sgn lambda) omega(mtilde_lambda); omega scales p_nu
            // by sgn(nu).
            for (size_t r = 0; r < n; ++r) {
                int sl = sgn_partition(t.parts[r]);
                for (size_t j = 0; j < n; ++j)
                    t.to_p[r][j] = Rat(sl * sgn_partition(t.parts[j])) * mt.to_p[r][j];
            }
            break;
        }
        case Basis::xitilde: {
            const BasisTable& mt = basis_data(Basis::mtilde, deg);
            for (size_t r = 0; r < n; ++r) {
                // Count tuples of compositions of the parts by the multiset of
                // their segments; each target nu receives cnt_nu / l(nu)! in
                // the mtilde expansion.
                std::map<Partition, Int, PartitionOrder> counts;
                counts.emplace(Partition(), 1);
                for (int part : t.parts[r].parts) {
                    std::map<Partition, Int, PartitionOrder> next;
                    for (std::uint32_t mask = 0; mask <= full_mask(part); ++mask) {
                        Partition segs = subset_type(mask, part);
                        for (const auto& [acc, cnt] : counts)
                            next[union_parts(acc, segs)] += cnt;
                    }
                    counts = std::move(next);
                }
                for (const auto& [nu, cnt] : counts) {
                    Rat coeff = Rat(cnt) / Rat(factorial(nu.length()));
                    size_t c = static_cast<size_t>(t.index.at(nu));
                    for (size_t j = 0; j < n; ++j) t.to_p[r][j] += coeff * mt.to_p[c][j];
                }
            }
            break;
        }
    }

    std::vector<std::vector<Rat>> transposed(n, std::vector<Rat>(n, Rat(0)));
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) transposed[c][r] = t.to_p[r][c];
    t.from_p = invert_matrix(std::move(transposed));
    return t;
}

}  // namespace

// ---------------------------------------------------------------------------
// SymFunc.

SymFunc SymFunc::one() { return p_term(Partition()); }

SymFunc SymFunc::p_term(const Partition& lam, const Rat& c) {
    SymFunc g;
    g.add_p_term(lam, c);
    return g;
}

Rat SymFunc::p_coeff(const Partition& lam) const {
    auto it = terms_.find(lam);
    return it == terms_.end() ? Rat(0) : it->second;
}

void SymFunc::add_p_term(const Partition& lam, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(lam, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int SymFunc::max_degree() const {
    int d = -1;
    for (const auto& [lam, c] : terms_) d = std::max(d, lam.weight());
    return d;
}

bool SymFunc::is_homogeneous(int* degree_out) const {
    int deg = -1;
    for (const auto& [lam, c] : terms_) {
        if (deg < 0)
            deg = lam.weight();
        else if (deg != lam.weight())
            return false;
    }
    if (degree_out) *degree_out = deg;
    return true;
}

SymFunc SymFunc::homogeneous_part(int degree) const {
    SymFunc g;
    for (const auto& [lam, c] : terms_)
        if (lam.weight() == degree) g.add_p_term(lam, c);
    return g;
}

SymFunc SymFunc::basis_elem(Basis b, const Partition& lam) {
    if (b == Basis::p) return p_term(lam);
    const BasisTable& t = basis_data(b, lam.weight());
    SymFunc g;
    size_t r = static_cast<size_t>(t.index.at(lam));
    for (size_t c = 0; c < t.parts.size(); ++c) g.add_p_term(t.parts[c], t.to_p[r][c]);
    return g;
}

SymFunc SymFunc::from_basis(Basis b, const PartitionMap<Rat>& coeffs) {
    SymFunc g;
    for (const auto& [lam, c] : coeffs) g = g + basis_elem(b, lam).scaled(c);
    return g;
}

PartitionMap<Rat> SymFunc::in_basis(Basis b) const {
    if (b == Basis::p) return terms_;
    PartitionMap<Rat> out;
    // Handle each homogeneous piece against its own degree table.
    std::map<int, std::vector<std::pair<Partition, Rat>>> by_degree;
    for (const auto& [lam, c] : terms_) by_degree[lam.weight()].push_back({lam, c});
    for (const auto& [deg, items] : by_degree) {
        const BasisTable& t = basis_data(b, deg);
        std::vector<Rat> gvec(t.parts.size(), Rat(0));
        for (const auto& [lam, c] : items) gvec[t.index.at(lam)] = c;
        for (size_t r = 0; r < t.parts.size(); ++r) {
            Rat a(0);
            for (size_t c = 0; c < t.parts.size(); ++c)
                if (gvec[c] != 0) a += t.from_p[r][c] * gvec[c];
            if (a != 0) out.emplace(t.parts[r], a);
        }
    }
    return out;
}

SymFunc SymFunc::operator+(const SymFunc& o) const {
    SymFunc r = *this;
    for (const auto& [lam, c] : o.terms_) r.add_p_term(lam, c);
    return r;
}

SymFunc SymFunc::operator-(const SymFunc& o) const {
    SymFunc r = *this;
    for (const auto& [lam, c] : o.terms_) r.add_p_term(lam, -c);
    return r;
}

SymFunc SymFunc::operator*(const SymFunc& o) const {
    SymFunc r;
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : o.terms_) r.add_p_term(union_parts(a, b), ca * cb);
    return r;
}

SymFunc SymFunc::operator-() const {
    SymFunc r;
    for (const auto& [lam, c] : terms_) r.add_p_term(lam, -c);
    return r;
}

SymFunc SymFunc::scaled(const Rat& c) const {
    SymFunc r;
    for (const auto& [lam, k] : terms_) r.add_p_term(lam, k * c);
    return r;
}

SymFunc SymFunc::omega() const {
    SymFunc r;
    for (const auto& [lam, c] : terms_) r.add_p_term(lam, Rat(sgn_partition(lam)) * c);
    return r;
}

SymFunc SymFunc::negate_vars() const {
    SymFunc r;
    for (const auto& [lam, c] : terms_)
        r.add_p_term(lam, lam.weight() % 2 == 0 ? c : -c);
    return r;
}

SymFunc SymFunc::p_partial_derivative(int i) const {
    if (i < 1) throw std::invalid_argument("p_partial_derivative: index must be positive");
    SymFunc r;
    for (const auto& [lam, c] : terms_) {
        int mult = 0;
        for (int part : lam.parts)
            if (part == i) ++mult;
        if (mult == 0) continue;
        std::vector<int> rest;
        bool removed = false;
        for (int part : lam.parts) {
            if (part == i && !removed) {
                removed = true;
                continue;
            }
            rest.push_back(part);
        }
        r.add_p_term(Partition(std::move(rest)), c * mult);
    }
    return r;
}

BivarPoly SymFunc::specialize_ones() const {
    BivarPoly out(BivarPoly::Vars{{"i", "j"}});
    for (const auto& [lam, c] : terms_) out.add_term(lam.length(), 0, c);
    return out;
}

SymFunc2 SymFunc::superficiate() const {
    SymFunc2 out;
    for (const auto& [lam, c] : terms_) {
        int l = lam.length();
        if (l > 30) throw std::runtime_error("superficiate: too many parts");
        for (std::uint32_t mask = 0; mask < (1u << l); ++mask) {
            std::vector<int> xs, ys;
            for (int t = 0; t < l; ++t)
                ((mask >> t) & 1u ? ys : xs).push_back(lam.parts[t]);
            Partition mu(std::move(ys));
            out.add_term(Partition(std::move(xs)), mu, Rat(sgn_partition(mu)) * c);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// SymFunc2.

bool SymFunc2::KeyOrder::operator()(const std::pair<Partition, Partition>& a,
                                    const std::pair<Partition, Partition>& b) const {
    int da = a.first.weight() + a.second.weight();
    int db = b.first.weight() + b.second.weight();
    if (da != db) return da < db;
    PartitionOrder lt;
    if (lt(a.first, b.first)) return true;
    if (lt(b.first, a.first)) return false;
    return lt(a.second, b.second);
}

SymFunc2 SymFunc2::one() { return p2_term(Partition(), Partition()); }

SymFunc2 SymFunc2::from_x(const SymFunc& g) {
    SymFunc2 out;
    for (const auto& [lam, c] : g.p_coeffs()) out.add_term(lam, Partition(), c);
    return out;
}

SymFunc2 SymFunc2::from_y(const SymFunc& g) {
    SymFunc2 out;
    for (const auto& [lam, c] : g.p_coeffs()) out.add_term(Partition(), lam, c);
    return out;
}

SymFunc2 SymFunc2::p2_term(const Partition& lx, const Partition& ly, const Rat& c) {
    SymFunc2 out;
    out.add_term(lx, ly, c);
    return out;
}

Rat SymFunc2::coeff(const Partition& lx, const Partition& ly) const {
    auto it = terms_.find({lx, ly});
    return it == terms_.end() ? Rat(0) : it->second;
}

void SymFunc2::add_term(const Partition& lx, const Partition& ly, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(std::make_pair(lx, ly), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int SymFunc2::max_degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first.weight() + k.second.weight());
    return d;
}

SymFunc2 SymFunc2::operator+(const SymFunc2& o) const {
    SymFunc2 r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
    return r;
}

SymFunc2 SymFunc2::operator-(const SymFunc2& o) const {
    SymFunc2 r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, -c);
    return r;
}

SymFunc2 SymFunc2::operator*(const SymFunc2& o) const {
    SymFunc2 r;
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : o.terms_)
            r.add_term(union_parts(a.first, b.first), union_parts(a.second, b.second), ca * cb);
    return r;
}

SymFunc2 SymFunc2::operator-() const {
    SymFunc2 r;
    for (const auto& [k, c] : terms_) r.add_term(k.first, k.second, -c);
    return r;
}

SymFunc2 SymFunc2::scaled(const Rat& c) const {
    SymFunc2 r;
    for (const auto& [k, x] : terms_) r.add_term(k.first, k.second, x * c);
    return r;
}

SymFunc2 SymFunc2::omega_x() const {
    SymFunc2 r;
    for (const auto& [k, c] : terms_)
        r.add_term(k.first, k.second, Rat(sgn_partition(k.first)) * c);
    return r;
}

SymFunc2 SymFunc2::negate_y() const {
    SymFunc2 r;
    for (const auto& [k, c] : terms_)
        r.add_term(k.first, k.second, k.second.weight() % 2 == 0 ? c : -c);
    return r;
}

SymFunc2 SymFunc2::delta_xy() const {
    SymFunc2 r;
    for (const auto& [k, c] : terms_) {
        int l = k.first.length();
        if (l > 30) throw std::runtime_error("delta: too many parts");
        for (std::uint32_t mask = 0; mask < (1u << l); ++mask) {
            std::vector<int> xs, ys;
            for (int t = 0; t < l; ++t)
                ((mask >> t) & 1u ? ys : xs).push_back(k.first.parts[t]);
            r.add_term(Partition(std::move(xs)),
                       union_parts(Partition(std::move(ys)), k.second), c);
        }
    }
    return r;
}

SymFunc2 SymFunc2::kappa_y() const {
    SymFunc2 r;
    for (const auto& [k, c] : terms_)
        r.add_term(k.first, k.second, Rat(ipow(Int(-2), k.second.length())) * c);
    return r;
}

BivarPoly SymFunc2::specialize2() const {
    BivarPoly out(BivarPoly::Vars{{"i", "j"}});
    for (const auto& [k, c] : terms_) out.add_term(k.first.length(), k.second.length(), c);
    return out;
}

SymFunc SymFunc2::restrict_y0() const {
    SymFunc g;
    for (const auto& [k, c] : terms_)
        if (k.second.empty()) g.add_p_term(k.first, c);
    return g;
}

std::map<Partition, SymFunc, PartitionOrder> SymFunc2::group_by_y() const {
    std::map<Partition, SymFunc, PartitionOrder> out;
    for (const auto& [k, c] : terms_) out[k.second].add_p_term(k.first, c);
    return out;
}

// ---------------------------------------------------------------------------
// TPoly.

SymFunc TPoly::coeff(long power) const {
    auto it = terms_.find(power);
    return it == terms_.end() ? SymFunc() : it->second;
}

void TPoly::add_term(long power, const SymFunc& g) {
    if (power < 0) throw std::invalid_argument("TPoly: negative power of t");
    if (g.is_zero()) return;
    auto [it, inserted] = terms_.emplace(power, g);
    if (!inserted) {
        it->second = it->second + g;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TPoly TPoly::operator+(const TPoly& o) const {
    TPoly r = *this;
    for (const auto& [k, g] : o.terms_) r.add_term(k, g);
    return r;
}

TPoly TPoly::scaled(const Rat& c) const {
    TPoly r;
    for (const auto& [k, g] : terms_) r.add_term(k, g.scaled(c));
    return r;
}

SymFunc TPoly::eval(const Rat& t) const {
    SymFunc out;
    for (const auto& [k, g] : terms_) {
        Rat tk(1);
        for (long s = 0; s < k; ++s) tk *= t;
        out = out + g.scaled(tk);
    }
    return out;
}

}  // namespace pcsym
