// Quasi-symmetric functions of a fixed degree d.
//
// A QSymFunc is stored in the monomial quasi-symmetric basis M_S,
// indexed by subsets S of [d-1] encoded as bitmasks (bit i-1 marks i).
// M_S sums the words x_{i_1}...x_{i_d} with i weakly increasing and
// strictly increasing exactly at the positions in S.  The fundamental
// basis Q_S = sum_{T >= S} M_T and its inversion let a symmetric
// function of degree d be expanded uniquely as sum b_S Q_S; a function
// is symmetric exactly when its M coefficients are constant on subsets
// of equal type (the partition of segment lengths cut at S).

#pragma once

#include <cstdint>
#include <map>

#include "pcsym/partitions.hpp"
#include "pcsym/rational.hpp"
#include "pcsym/symfunc.hpp"

namespace pcsym {

class QSymFunc {
public:
    explicit QSymFunc(int degree);

    int degree() const { return d_; }
    const std::map<std::uint32_t, Rat>& m_coeffs() const { return terms_; }
    Rat m_coeff(std::uint32_t s_mask) const;
    void add_m_term(std::uint32_t s_mask, const Rat& c);

    QSymFunc operator+(const QSymFunc& o) const;
    QSymFunc operator-(const QSymFunc& o) const;
    QSymFunc scaled(const Rat& c) const;
    friend bool operator==(const QSymFunc&, const QSymFunc&) = default;

private:
    int d_;
    std::map<std::uint32_t, Rat> terms_;
};

// The fundamental quasi-symmetric function Q_S in the M basis.
QSymFunc q_fundamental(std::uint32_t s_mask, int d);

// M-basis expansion of a symmetric function: coefficient of M_T is the
// monomial coefficient of type(T).  Requires g homogeneous of degree d
// (zero counts as homogeneous); throws otherwise.
QSymFunc qsym_from_sym(const SymFunc& g, int d);

// The unique coefficients b_S with g = sum_S b_S Q_{S,d}.
std::map<std::uint32_t, Rat> sym_to_Q(const SymFunc& g, int d);

// Back from quasi-symmetric to symmetric; throws if the M coefficients
// are not constant on type classes.
SymFunc qsym_to_sym(const QSymFunc& q);

// Expand in Q, send Q_S to Q_{[d-1] minus S}, reassemble.  Equals omega.
SymFunc q_complement_map(const SymFunc& g, int d);

}  // namespace pcsym
