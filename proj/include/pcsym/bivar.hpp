// Exact bivariate polynomials.
//
// BivarPoly is a polynomial in two named variables with rational
// coefficients, stored sparsely by exponent pair.  It carries its
// variable names ("i","j" for counting polynomials, "m","n" for the
// two-parameter chromatic evaluations) so that serialized output is
// self-describing; arithmetic between polynomials demands matching
// names.  subst() rebinds both variables to arbitrary polynomials,
// which is how reciprocity substitutions and changes of parameters
// are performed exactly.

#pragma once

#include <array>
#include <map>
#include <string>

#include "pcsym/rational.hpp"

namespace pcsym {

class BivarPoly {
public:
    using Vars = std::array<std::string, 2>;
    using Exps = std::array<long, 2>;

    BivarPoly() : vars_{{"i", "j"}} {}
    explicit BivarPoly(Vars vars) : vars_(std::move(vars)) {}

    static BivarPoly constant(const Vars& vars, const Rat& c);
    static BivarPoly variable(const Vars& vars, int which);  // which in {0, 1}

    const Vars& vars() const { return vars_; }
    const std::map<Exps, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // True when no term uses the second variable.
    bool univariate() const;
    long total_degree() const;  // max e1+e2 over terms; -1 for the zero poly

    Rat coeff(long e1, long e2) const;
    void add_term(long e1, long e2, const Rat& c);  // accumulates, drops zeros

    BivarPoly operator+(const BivarPoly& o) const;
    BivarPoly operator-(const BivarPoly& o) const;
    BivarPoly operator*(const BivarPoly& o) const;
    BivarPoly operator-() const;
    BivarPoly scaled(const Rat& c) const;
    BivarPoly pow(long k) const;
    friend bool operator==(const BivarPoly&, const BivarPoly&) = default;

    Rat eval(const Rat& x, const Rat& y) const;
    // Substitute r0 for the first variable and r1 for the second; the
    // replacements must share variable names, which the result adopts.
    BivarPoly subst(const BivarPoly& r0, const BivarPoly& r1) const;
    // Rename variables without touching coefficients.
    BivarPoly with_vars(const Vars& vars) const;

    bool integer_coeffs() const;
    bool nonnegative_coeffs() const;

    // Deterministic display: terms by total degree descending, then by
    // first-variable exponent descending, e.g. "i^2 - 2i*j + 3".
    std::string str() const;

private:
    void check_same(const BivarPoly& o) const;
    Vars vars_;
    std::map<Exps, Rat> terms_;
};

// Product (base)(base-1)...(base-k+1); k = 0 gives the constant 1.
BivarPoly falling_factorial(const BivarPoly& base, long k);
// Binomial coefficient C(base, k) as a polynomial, falling/k!.
BivarPoly binom_poly(const BivarPoly& base, long k);

}  // namespace pcsym
