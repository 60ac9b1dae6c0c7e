#include "pcsym/multipoly.hpp"

#include <numeric>
#include <stdexcept>

namespace pcsym {

TruncatedMultiPoly::TruncatedMultiPoly(int num_vars, int max_degree)
    : nvars_(num_vars), maxdeg_(max_degree) {
    if (num_vars < 0 || max_degree < 0)
        throw std::invalid_argument("TruncatedMultiPoly: negative size");
}

TruncatedMultiPoly TruncatedMultiPoly::constant(int num_vars, int max_degree, const Rat& c) {
    TruncatedMultiPoly p(num_vars, max_degree);
    p.add_term(std::vector<int>(num_vars, 0), c);
    return p;
}

TruncatedMultiPoly TruncatedMultiPoly::variable(int num_vars, int max_degree, int which) {
    if (which < 0 || which >= num_vars)
        throw std::invalid_argument("TruncatedMultiPoly::variable: index out of range");
    TruncatedMultiPoly p(num_vars, max_degree);
    std::vector<int> e(num_vars, 0);
    e[which] = 1;
    p.add_term(e, Rat(1));
    return p;
}

void TruncatedMultiPoly::add_term(const std::vector<int>& exps, const Rat& c) {
    if (static_cast<int>(exps.size()) != nvars_)
        throw std::invalid_argument("TruncatedMultiPoly: exponent arity mismatch");
    if (c == 0) return;
    int deg = std::accumulate(exps.begin(), exps.end(), 0);
    if (deg > maxdeg_) return;  // work modulo high total degree
    auto [it, inserted] = terms_.emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rat TruncatedMultiPoly::coeff(const std::vector<int>& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rat(0) : it->second;
}

void TruncatedMultiPoly::check_same(const TruncatedMultiPoly& o) const {
    if (nvars_ != o.nvars_ || maxdeg_ != o.maxdeg_)
        throw std::invalid_argument("TruncatedMultiPoly: arity or degree cap mismatch");
}

TruncatedMultiPoly TruncatedMultiPoly::operator+(const TruncatedMultiPoly& o) const {
    check_same(o);
    TruncatedMultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

TruncatedMultiPoly TruncatedMultiPoly::operator-(const TruncatedMultiPoly& o) const {
    check_same(o);
    TruncatedMultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

TruncatedMultiPoly TruncatedMultiPoly::operator*(const TruncatedMultiPoly& o) const {
    check_same(o);
    TruncatedMultiPoly r(nvars_, maxdeg_);
    std::vector<int> sum(nvars_);
    for (const auto& [e, c] : terms_)
        for (const auto& [f, d] : o.terms_) {
            for (int v = 0; v < nvars_; ++v) sum[v] = e[v] + f[v];
            r.add_term(sum, c * d);
        }
    return r;
}

TruncatedMultiPoly TruncatedMultiPoly::scaled(const Rat& c) const {
    TruncatedMultiPoly r(nvars_, maxdeg_);
    for (const auto& [e, k] : terms_) r.add_term(e, k * c);
    return r;
}

TruncatedMultiPoly csv_series(const std::vector<TruncatedMultiPoly>& alpha, int N) {
    if (alpha.empty()) throw std::invalid_argument("csv_series: empty sequence");
    int nvars = alpha[0].num_vars();
    TruncatedMultiPoly one = TruncatedMultiPoly::constant(nvars, N, Rat(1));
    TruncatedMultiPoly total(nvars, N);
    for (const auto& a : alpha)
        for (const auto& [e, c] : a.terms()) total.add_term(e, c);
    if (total.coeff(std::vector<int>(nvars, 0)) != 1)
        throw std::invalid_argument("csv_series: constant term must be 1");
    TruncatedMultiPoly plus = total - one;              // strictly positive degrees
    TruncatedMultiPoly inv = one, power = one;
    for (int k = 1; k <= N; ++k) {
        power = power * plus;
        if (power.is_zero()) break;
        inv = (k % 2 == 0) ? inv + power : inv - power;
    }
    return inv;
}

}  // namespace pcsym
