#include "pcsym/bivar.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace pcsym {

BivarPoly BivarPoly::constant(const Vars& vars, const Rat& c) {
    BivarPoly p(vars);
    p.add_term(0, 0, c);
    return p;
}

BivarPoly BivarPoly::variable(const Vars& vars, int which) {
    if (which != 0 && which != 1)
        throw std::invalid_argument("BivarPoly::variable: index must be 0 or 1");
    BivarPoly p(vars);
    p.add_term(which == 0 ? 1 : 0, which == 0 ? 0 : 1, Rat(1));
    return p;
}

bool BivarPoly::univariate() const {
    for (const auto& [e, c] : terms_)
        if (e[1] != 0) return false;
    return true;
}

long BivarPoly::total_degree() const {
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1]);
    return d;
}

Rat BivarPoly::coeff(long e1, long e2) const {
    auto it = terms_.find({e1, e2});
    return it == terms_.end() ? Rat(0) : it->second;
}

void BivarPoly::add_term(long e1, long e2, const Rat& c) {
    if (c == 0) return;
    if (e1 < 0 || e2 < 0) throw std::invalid_argument("BivarPoly: negative exponent");
    Exps key{e1, e2};
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void BivarPoly::check_same(const BivarPoly& o) const {
    if (vars_ != o.vars_)
        throw std::invalid_argument("BivarPoly: variable names differ (" + vars_[0] + "," +
                                    vars_[1] + ") vs (" + o.vars_[0] + "," + o.vars_[1] + ")");
}

BivarPoly BivarPoly::operator+(const BivarPoly& o) const {
    check_same(o);
    BivarPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e[0], e[1], c);
    return r;
}

BivarPoly BivarPoly::operator-(const BivarPoly& o) const {
    check_same(o);
    BivarPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e[0], e[1], -c);
    return r;
}

BivarPoly BivarPoly::operator*(const BivarPoly& o) const {
    check_same(o);
    BivarPoly r(vars_);
    for (const auto& [e, c] : terms_)
        for (const auto& [f, d] : o.terms_) r.add_term(e[0] + f[0], e[1] + f[1], c * d);
    return r;
}

BivarPoly BivarPoly::operator-() const {
    BivarPoly r(vars_);
    for (const auto& [e, c] : terms_) r.add_term(e[0], e[1], -c);
    return r;
}

BivarPoly BivarPoly::scaled(const Rat& c) const {
    BivarPoly r(vars_);
    for (const auto& [e, k] : terms_) r.add_term(e[0], e[1], k * c);
    return r;
}

BivarPoly BivarPoly::pow(long k) const {
    if (k < 0) throw std::invalid_argument("BivarPoly::pow: negative power");
    BivarPoly r = constant(vars_, Rat(1));
    for (long t = 0; t < k; ++t) r = r * *this;
    return r;
}

Rat BivarPoly::eval(const Rat& x, const Rat& y) const {
    Rat total = 0;
    for (const auto& [e, c] : terms_) {
        Rat term = c;
        for (long t = 0; t < e[0]; ++t) term *= x;
        for (long t = 0; t < e[1]; ++t) term *= y;
        total += term;
    }
    return total;
}

BivarPoly BivarPoly::subst(const BivarPoly& r0, const BivarPoly& r1) const {
    if (r0.vars_ != r1.vars_)
        throw std::invalid_argument("BivarPoly::subst: replacement variables differ");
    BivarPoly out(r0.vars_);
    for (const auto& [e, c] : terms_) {
        BivarPoly term = r0.pow(e[0]) * r1.pow(e[1]);
        out = out + term.scaled(c);
    }
    return out;
}

BivarPoly BivarPoly::with_vars(const Vars& vars) const {
    BivarPoly r(vars);
    for (const auto& [e, c] : terms_) r.add_term(e[0], e[1], c);
    return r;
}

bool BivarPoly::integer_coeffs() const {
    for (const auto& [e, c] : terms_)
        if (c.get_den() != 1) return false;
    return true;
}

bool BivarPoly::nonnegative_coeffs() const {
    for (const auto& [e, c] : terms_)
        if (c < 0) return false;
    return true;
}

std::string BivarPoly::str() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exps, Rat>> items(terms_.begin(), terms_.end());
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        long da = a.first[0] + a.first[1], db = b.first[0] + b.first[1];
        if (da != db) return da > db;
        return a.first[0] > b.first[0];
    });
    std::string s;
    for (const auto& [e, c] : items) {
        Rat a = c;
        bool neg = a < 0;
        if (neg) a = -a;
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        std::string mono;
        auto append_var = [&](const std::string& v, long exp) {
            if (exp == 0) return;
            if (!mono.empty()) mono += "*";
            mono += v;
            if (exp > 1) mono += "^" + std::to_string(exp);
        };
        append_var(vars_[0], e[0]);
        append_var(vars_[1], e[1]);
        if (mono.empty())
            s += rat_str(a);
        else if (a == 1)
            s += mono;
        else
            s += rat_str(a) + "*" + mono;
    }
    return s;
}

BivarPoly falling_factorial(const BivarPoly& base, long k) {
    if (k < 0) throw std::invalid_argument("falling_factorial: negative length");
    BivarPoly r = BivarPoly::constant(base.vars(), Rat(1));
    for (long t = 0; t < k; ++t)
        r = r * (base - BivarPoly::constant(base.vars(), Rat(t)));
    return r;
}

BivarPoly binom_poly(const BivarPoly& base, long k) {
    return falling_factorial(base, k).scaled(Rat(1) / Rat(factorial(k)));
}

}  // namespace pcsym
