// Symmetric functions with exact rational coefficients.
//
// SymFunc stores every function in power-sum coordinates (the hub):
// each supported endomorphism (omega, variable negation, superfication,
// specialization, partial derivatives) is diagonal or substitution-simple
// on p_lambda, so conversions in and out of the other bases (m, m-tilde,
// e, h, s, f, xi-tilde) reduce to per-degree transition matrices that are
// computed lazily, cached write-once, and shared across threads.
//
// SymFunc2 is the two-alphabet analogue, a polynomial in products
// p_lambda(x) p_mu(y); it carries the four ring endomorphisms used by
// the reciprocity machinery (omega_x, y-negation, the union-of-alphabets
// map delta, and the kappa scaling) plus specialization to counting
// polynomials in (i, j).
//
// TPoly is a polynomial in one extra central variable t with SymFunc
// coefficients.

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "pcsym/bivar.hpp"
#include "pcsym/partitions.hpp"
#include "pcsym/rational.hpp"

namespace pcsym {

enum class Basis { m, mtilde, p, e, h, s, f, xitilde };

// Basis names as used by the CLI and serialized output: "m", "mtilde",
// "p", "e", "h", "s", "f", "xitilde".
std::string basis_name(Basis b);
Basis parse_basis(const std::string& name);

// Conversions to and from non-p bases refuse degrees above the cap.
// The default cap is 8; it can be raised, but never beyond 14.
int degree_cap();
void set_degree_cap(int cap);

class SymFunc2;

class SymFunc {
public:
    SymFunc() = default;

    static SymFunc zero() { return SymFunc(); }
    static SymFunc one();                       // the empty product p_{[]}
    static SymFunc p_term(const Partition& lam, const Rat& c = Rat(1));
    // The basis element converted into the hub; uses the transition cache.
    static SymFunc basis_elem(Basis b, const Partition& lam);
    static SymFunc from_basis(Basis b, const PartitionMap<Rat>& coeffs);

    const PartitionMap<Rat>& p_coeffs() const { return terms_; }
    Rat p_coeff(const Partition& lam) const;
    void add_p_term(const Partition& lam, const Rat& c);
    bool is_zero() const { return terms_.empty(); }
    // Largest |lambda| with nonzero coefficient; -1 for the zero function.
    int max_degree() const;
    bool is_homogeneous(int* degree_out = nullptr) const;
    // The homogeneous piece of the given degree.
    SymFunc homogeneous_part(int degree) const;

    PartitionMap<Rat> in_basis(Basis b) const;

    SymFunc operator+(const SymFunc& o) const;
    SymFunc operator-(const SymFunc& o) const;
    SymFunc operator*(const SymFunc& o) const;
    SymFunc operator-() const;
    SymFunc scaled(const Rat& c) const;
    friend bool operator==(const SymFunc&, const SymFunc&) = default;

    SymFunc omega() const;          // p_lambda -> (sgn lambda) p_lambda
    SymFunc negate_vars() const;    // p_lambda -> (-1)^{|lambda|} p_lambda
    SymFunc p_partial_derivative(int i) const;
    BivarPoly specialize_ones() const;  // p_lambda(1^i) = i^{l(lambda)}; vars (i, j)
    SymFunc2 superficiate() const;  // p_n -> p_n(x) + (-1)^{n-1} p_n(y)

private:
    PartitionMap<Rat> terms_;
};

// ---------------------------------------------------------------------------

class SymFunc2 {
public:
    // Keys order by total degree, then by the x-partition, then the y-partition.
    struct KeyOrder {
        bool operator()(const std::pair<Partition, Partition>& a,
                        const std::pair<Partition, Partition>& b) const;
    };
    using TermMap = std::map<std::pair<Partition, Partition>, Rat, KeyOrder>;

    SymFunc2() = default;

    static SymFunc2 zero() { return SymFunc2(); }
    static SymFunc2 one();
    static SymFunc2 from_x(const SymFunc& g);   // alphabet x only
    static SymFunc2 from_y(const SymFunc& g);   // alphabet y only
    static SymFunc2 p2_term(const Partition& lx, const Partition& ly,
                            const Rat& c = Rat(1));

    const TermMap& terms() const { return terms_; }
    Rat coeff(const Partition& lx, const Partition& ly) const;
    void add_term(const Partition& lx, const Partition& ly, const Rat& c);
    bool is_zero() const { return terms_.empty(); }
    int max_degree() const;  // max |lambda|+|mu|; -1 when zero

    SymFunc2 operator+(const SymFunc2& o) const;
    SymFunc2 operator-(const SymFunc2& o) const;
    SymFunc2 operator*(const SymFunc2& o) const;
    SymFunc2 operator-() const;
    SymFunc2 scaled(const Rat& c) const;
    friend bool operator==(const SymFunc2&, const SymFunc2&) = default;

    SymFunc2 omega_x() const;    // scale by sgn(lambda)
    SymFunc2 negate_y() const;   // scale by (-1)^{|mu|}
    SymFunc2 delta_xy() const;   // p_m(x) -> p_m(x)+p_m(y); y factors fixed
    SymFunc2 kappa_y() const;    // scale by (-2)^{l(mu)}
    BivarPoly specialize2() const;  // p_lambda(x)p_mu(y) -> i^{l(lambda)} j^{l(mu)}
    SymFunc restrict_y0() const;    // keep y-free terms
    // x-side functions grouped by their y-partition factor.
    std::map<Partition, SymFunc, PartitionOrder> group_by_y() const;

private:
    TermMap terms_;
};

// ---------------------------------------------------------------------------

class TPoly {
public:
    TPoly() = default;

    const std::map<long, SymFunc>& terms() const { return terms_; }
    SymFunc coeff(long power) const;
    void add_term(long power, const SymFunc& g);
    bool is_zero() const { return terms_.empty(); }

    TPoly operator+(const TPoly& o) const;
    TPoly scaled(const Rat& c) const;
    friend bool operator==(const TPoly&, const TPoly&) = default;

    SymFunc eval(const Rat& t) const;

private:
    std::map<long, SymFunc> terms_;
};

// Exact inverse of a square rational matrix (Gauss-Jordanized); throws
// std::runtime_error on a singular input.
std::vector<std::vector<Rat>> invert_matrix(std::vector<std::vector<Rat>> a);

}  // namespace pcsym
