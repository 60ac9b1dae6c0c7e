// Truncated polynomials in several commuting indeterminates a_1..a_d.
//
// TruncatedMultiPoly works modulo total degree > max_degree: every
// product discards terms above the cap, so power series manipulations
// (in particular inverting a walk generating function) stay finite and
// exact.  Exponent vectors index variables 0..num_vars-1.

#pragma once

#include <map>
#include <vector>

#include "pcsym/rational.hpp"

namespace pcsym {

class TruncatedMultiPoly {
public:
    TruncatedMultiPoly(int num_vars, int max_degree);
    static TruncatedMultiPoly constant(int num_vars, int max_degree, const Rat& c);
    static TruncatedMultiPoly variable(int num_vars, int max_degree, int which);

    int num_vars() const { return nvars_; }
    int max_degree() const { return maxdeg_; }
    const std::map<std::vector<int>, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const std::vector<int>& exps, const Rat& c);  // truncates silently
    Rat coeff(const std::vector<int>& exps) const;

    TruncatedMultiPoly operator+(const TruncatedMultiPoly& o) const;
    TruncatedMultiPoly operator-(const TruncatedMultiPoly& o) const;
    TruncatedMultiPoly operator*(const TruncatedMultiPoly& o) const;
    TruncatedMultiPoly scaled(const Rat& c) const;
    friend bool operator==(const TruncatedMultiPoly&, const TruncatedMultiPoly&) = default;

private:
    void check_same(const TruncatedMultiPoly& o) const;
    int nvars_;
    int maxdeg_;
    std::map<std::vector<int>, Rat> terms_;
};

// Multiplicative inverse of alpha[0] + alpha[1] + ... truncated at total
// degree N, computed as the alternating geometric series in the positive
// part.  Requires alpha[0] == 1; throws otherwise.
TruncatedMultiPoly csv_series(const std::vector<TruncatedMultiPoly>& alpha, int N);

}  // namespace pcsym
