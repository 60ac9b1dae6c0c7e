#include "pcsym/qsym.hpp"

#include <stdexcept>

namespace pcsym {

QSymFunc::QSymFunc(int degree) : d_(degree) {
    if (degree < 0) throw std::invalid_argument("QSymFunc: negative degree");
    if (degree > 30) throw std::invalid_argument("QSymFunc: degree too large for masks");
}

Rat QSymFunc::m_coeff(std::uint32_t s_mask) const {
    auto it = terms_.find(s_mask);
    return it == terms_.end() ? Rat(0) : it->second;
}

void QSymFunc::add_m_term(std::uint32_t s_mask, const Rat& c) {
    if (s_mask > full_mask(d_))
        throw std::invalid_argument("QSymFunc: subset mask outside [d-1]");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(s_mask, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

QSymFunc QSymFunc::operator+(const QSymFunc& o) const {
    if (d_ != o.d_) throw std::invalid_argument("QSymFunc: degree mismatch");
    QSymFunc r = *this;
    for (const auto& [s, c] : o.terms_) r.add_m_term(s, c);
    return r;
}

QSymFunc QSymFunc::operator-(const QSymFunc& o) const {
    if (d_ != o.d_) throw std::invalid_argument("QSymFunc: degree mismatch");
    QSymFunc r = *this;
    for (const auto& [s, c] : o.terms_) r.add_m_term(s, -c);
    return r;
}

QSymFunc QSymFunc::scaled(const Rat& c) const {
    QSymFunc r(d_);
    for (const auto& [s, k] : terms_) r.add_m_term(s, k * c);
    return r;
}

QSymFunc q_fundamental(std::uint32_t s_mask, int d) {
    QSymFunc q(d);
    std::uint32_t full = full_mask(d);
    if (s_mask > full) throw std::invalid_argument("q_fundamental: mask outside [d-1]");
    // Supersets of s_mask: iterate over subsets of the complement.
    std::uint32_t rest = full & ~s_mask;
    std::uint32_t sub = 0;
    while (true) {
        q.add_m_term(s_mask | sub, Rat(1));
        if (sub == rest) break;
        sub = (sub - rest) & rest;  // next subset of rest
    }
    return q;
}

QSymFunc qsym_from_sym(const SymFunc& g, int d) {
    int deg = -1;
    if (!g.is_homogeneous(&deg) || (deg >= 0 && deg != d))
        throw std::invalid_argument("qsym_from_sym: input not homogeneous of the given degree");
    QSymFunc q(d);
    if (g.is_zero()) return q;
    auto mcoeffs = g.in_basis(Basis::m);
    for (std::uint32_t s = 0; s <= full_mask(d); ++s) {
        auto it = mcoeffs.find(subset_type(s, d));
        if (it != mcoeffs.end()) q.add_m_term(s, it->second);
        if (d <= 1) break;  // full_mask(d) == 0; avoid re-testing
    }
    return q;
}

std::map<std::uint32_t, Rat> sym_to_Q(const SymFunc& g, int d) {
    QSymFunc q = qsym_from_sym(g, d);
    // M_T = sum_{U >= T} (-1)^{|U|-|T|} Q_U, so
    // b_U = sum_{T <= U} (-1)^{|U|-|T|} c_T.
    std::map<std::uint32_t, Rat> b;
    for (std::uint32_t u = 0; u <= full_mask(d); ++u) {
        Rat total(0);
        std::uint32_t sub = 0;
        while (true) {
            Rat c = q.m_coeff(sub);
            if (c != 0) {
                int diff = __builtin_popcount(u) - __builtin_popcount(sub);
                total += (diff % 2 == 0) ? c : -c;
            }
            if (sub == u) break;
            sub = (sub - u) & u;  // next subset of u
        }
        if (total != 0) b.emplace(u, total);
        if (d <= 1) break;
    }
    return b;
}

SymFunc qsym_to_sym(const QSymFunc& q) {
    int d = q.degree();
    PartitionMap<Rat> mcoeffs;
    for (std::uint32_t s = 0; s <= full_mask(d); ++s) {
        Partition type = subset_type(s, d);
        Rat c = q.m_coeff(s);
        auto it = mcoeffs.find(type);
        if (it == mcoeffs.end())
            mcoeffs.emplace(type, c);
        else if (it->second != c)
            throw std::invalid_argument("qsym_to_sym: function is not symmetric");
        if (d <= 1) break;
    }
    PartitionMap<Rat> nonzero;
    for (const auto& [lam, c] : mcoeffs)
        if (c != 0) nonzero.emplace(lam, c);
    return SymFunc::from_basis(Basis::m, nonzero);
}

SymFunc q_complement_map(const SymFunc& g, int d) {
    auto b = sym_to_Q(g, d);
    QSymFunc out(d);
    std::uint32_t full = full_mask(d);
    for (const auto& [s, c] : b) {
        QSymFunc q = q_fundamental(full & ~s, d).scaled(c);
        out = out + q;
    }
    return qsym_to_sym(out);
}

}  // namespace pcsym
