// Unit tests for the symmetric-function layer: hub storage, basis
// transitions, endomorphisms, the two-alphabet ring, quasi-symmetric
// expansions, bivariate/truncated polynomials, and JSON round trips.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <atomic>
#include <thread>

#include "pcsym/json_io.hpp"
#include "pcsym/multipoly.hpp"
#include "pcsym/qsym.hpp"
#include "pcsym/symfunc.hpp"

using namespace pcsym;
using Json = nlohmann::json;

namespace {

Partition P(std::vector<int> parts = {}) { return Partition(std::move(parts)); }

SymFunc b(Basis basis, std::vector<int> parts) {
    return SymFunc::basis_elem(basis, P(std::move(parts)));
}

}  // namespace

TEST_CASE("basis conversion examples") {
    // p_2 in the monomial basis is m_2.
    auto pm = b(Basis::p, {2}).in_basis(Basis::m);
    REQUIRE(pm.size() == 1);
    CHECK(pm.at(P({2})) == 1);

    // mtilde_{11} = p_{11} - p_2.
    auto mt = b(Basis::mtilde, {1, 1});
    CHECK(mt.p_coeff(P({1, 1})) == 1);
    CHECK(mt.p_coeff(P({2})) == -1);

    // mtilde_lambda = r_lambda! m_lambda.
    for (int deg = 1; deg <= 5; ++deg)
        for (const auto& lam : integer_partitions(deg)) {
            auto diff = SymFunc::basis_elem(Basis::mtilde, lam) -
                        SymFunc::basis_elem(Basis::m, lam).scaled(Rat(r_factorial(lam)));
            CHECK(diff.is_zero());
        }

    // Degree-2 Schur functions in the hub.
    auto s2 = b(Basis::s, {2});
    CHECK(s2.p_coeff(P({2})) == Rat(1, 2));
    CHECK(s2.p_coeff(P({1, 1})) == Rat(1, 2));
    auto s11 = b(Basis::s, {1, 1});
    CHECK(s11.p_coeff(P({2})) == Rat(-1, 2));
    CHECK(s11.p_coeff(P({1, 1})) == Rat(1, 2));
    auto s21m = b(Basis::s, {2, 1}).in_basis(Basis::m);
    CHECK(s21m.at(P({2, 1})) == 1);
    CHECK(s21m.at(P({1, 1, 1})) == 2);
    CHECK(s21m.count(P({3})) == 0);

    // e_2 = (p_{11} - p_2)/2 and h_2 = (p_{11} + p_2)/2.
    auto e2 = b(Basis::e, {2});
    CHECK(e2.p_coeff(P({1, 1})) == Rat(1, 2));
    CHECK(e2.p_coeff(P({2})) == Rat(-1, 2));
    auto h2 = b(Basis::h, {2});
    CHECK(h2.p_coeff(P({1, 1})) == Rat(1, 2));
    CHECK(h2.p_coeff(P({2})) == Rat(1, 2));

    // f_{11} = p_{11} + p_2 (unsigned Mobius expansion).
    auto f11 = b(Basis::f, {1, 1});
    CHECK(f11.p_coeff(P({1, 1})) == 1);
    CHECK(f11.p_coeff(P({2})) == 1);
}

TEST_CASE("xitilde spot values") {
    // Degree 2: xitilde_2 = m_2 + m_{11}; xitilde_{11} = m_{11}.
    auto x2 = b(Basis::xitilde, {2}).in_basis(Basis::m);
    CHECK(x2.at(P({2})) == 1);
    CHECK(x2.at(P({1, 1})) == 1);
    auto x11 = b(Basis::xitilde, {1, 1}).in_basis(Basis::m);
    REQUIRE(x11.size() == 1);
    CHECK(x11.at(P({1, 1})) == 1);

    // Degree 3 row for xitilde_{21}: (0, 1/2, 1) over m_3, m_{21}, m_{111}.
    auto x21 = b(Basis::xitilde, {2, 1}).in_basis(Basis::m);
    CHECK(x21.count(P({3})) == 0);
    CHECK(x21.at(P({2, 1})) == Rat(1, 2));
    CHECK(x21.at(P({1, 1, 1})) == 1);
}

TEST_CASE("omega and variable negation") {
    CHECK(b(Basis::e, {3}).omega() == b(Basis::h, {3}));
    CHECK(b(Basis::e, {3, 2}).omega() == b(Basis::h, {3, 2}));
    CHECK(b(Basis::p, {2, 1}).omega() == -b(Basis::p, {2, 1}));

    // omega is an involution and a ring map.
    auto g = b(Basis::s, {2, 1}) + b(Basis::m, {3}).scaled(Rat(5, 3));
    CHECK(g.omega().omega() == g);
    auto h = b(Basis::e, {2});
    CHECK((g * h).omega() == g.omega() * h.omega());

    // negate_vars fixes e_2 and flips p_1.
    CHECK(b(Basis::e, {2}).negate_vars() == b(Basis::e, {2}));
    CHECK(b(Basis::p, {1}).negate_vars() == -b(Basis::p, {1}));
    // mtilde_{111} = 6e_3 maps to 6h_3 under omega.
    CHECK(b(Basis::mtilde, {1, 1, 1}).omega() == b(Basis::h, {3}).scaled(6));
}

TEST_CASE("round trip through every basis") {
    std::vector<Basis> bases{Basis::m,     Basis::mtilde, Basis::p, Basis::e,
                             Basis::h,     Basis::s,      Basis::f, Basis::xitilde};
    auto g = b(Basis::s, {3, 1}) + b(Basis::p, {2, 2}).scaled(Rat(-7, 2)) +
             b(Basis::m, {2, 1, 1}) + SymFunc::one().scaled(Rat(4));
    for (Basis basis : bases) {
        auto coeffs = g.in_basis(basis);
        CHECK(SymFunc::from_basis(basis, coeffs) == g);
    }
}

TEST_CASE("degree cap") {
    SymFunc g = SymFunc::p_term(P({9}));
    CHECK_THROWS(g.in_basis(Basis::m));                  // default cap is 8
    CHECK(g.in_basis(Basis::p).size() == 1);             // hub access is uncapped
    set_degree_cap(9);
    CHECK(g.in_basis(Basis::m).at(P({9})) == 1);
    set_degree_cap(8);
    CHECK_THROWS(set_degree_cap(15));
    CHECK_THROWS(SymFunc::p_term(P({15})).in_basis(Basis::m));
}

TEST_CASE("derivatives and specializations") {
    auto p22 = b(Basis::p, {2, 2});
    CHECK(p22.p_partial_derivative(2) == b(Basis::p, {2}).scaled(2));
    CHECK(b(Basis::p, {3, 1}).p_partial_derivative(2).is_zero());
    auto p111 = b(Basis::p, {1, 1, 1});
    CHECK(p111.p_partial_derivative(1) == b(Basis::p, {1, 1}).scaled(3));

    // p_{22}(1^i) = i^2; mtilde_{11}(1^i) = i(i-1); e_2(1^i) = (i^2-i)/2.
    BivarPoly::Vars ij{{"i", "j"}};
    auto i = BivarPoly::variable(ij, 0);
    CHECK(b(Basis::p, {2, 2}).specialize_ones() == i * i);
    CHECK(b(Basis::mtilde, {1, 1}).specialize_ones() == falling_factorial(i, 2));
    CHECK(b(Basis::e, {2}).specialize_ones() == (i * i - i).scaled(Rat(1, 2)));
    // mtilde_lambda(1^i) is the falling factorial of length l(lambda).
    for (int deg = 1; deg <= 4; ++deg)
        for (const auto& lam : integer_partitions(deg))
            CHECK(SymFunc::basis_elem(Basis::mtilde, lam).specialize_ones() ==
                  falling_factorial(i, lam.length()));
}

TEST_CASE("superfication") {
    auto s1 = b(Basis::p, {1}).superficiate();
    CHECK(s1.coeff(P({1}), P()) == 1);
    CHECK(s1.coeff(P(), P({1})) == 1);
    auto s2 = b(Basis::p, {2}).superficiate();
    CHECK(s2.coeff(P({2}), P()) == 1);
    CHECK(s2.coeff(P(), P({2})) == -1);

    // Specializing the superfication of p_d gives i + (-1)^{d-1} j.
    BivarPoly::Vars ij{{"i", "j"}};
    auto vi = BivarPoly::variable(ij, 0);
    auto vj = BivarPoly::variable(ij, 1);
    for (int d = 1; d <= 5; ++d) {
        auto got = SymFunc::p_term(P({d})).superficiate().specialize2();
        auto want = (d % 2 == 1) ? vi + vj : vi - vj;
        CHECK(got == want);
    }
}

TEST_CASE("two-alphabet endomorphisms") {
    auto t = SymFunc2::p2_term(P({2}), P({1}));
    CHECK(t.omega_x() == -t);
    CHECK(t.negate_y() == -t);
    CHECK(t.kappa_y() == t.scaled(-2));

    auto dx = SymFunc2::p2_term(P({2}), P()).delta_xy();
    CHECK(dx.coeff(P({2}), P()) == 1);
    CHECK(dx.coeff(P(), P({2})) == 1);

    // iota = delta . omega_x . negate_y is an involution on p_m(x) p_n(y).
    auto iota = [](const SymFunc2& g) { return g.negate_y().omega_x().delta_xy(); };
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; n <= 4; ++n) {
            Partition lm = m ? P({m}) : P();
            Partition ln = n ? P({n}) : P();
            auto g = SymFunc2::p2_term(lm, ln);
            CHECK(iota(iota(g)) == g);
        }

    // The hat transform delta . kappa conjugates iota into omega_x . negate_y.
    auto hat = [](const SymFunc2& g) { return g.kappa_y().delta_xy(); };
    for (int m = 1; m <= 4; ++m)
        for (int n = 0; n <= 4; ++n) {
            Partition ln = n ? P({n}) : P();
            auto g = SymFunc2::p2_term(P({m}), ln);
            CHECK(hat(iota(g)) == hat(g).negate_y().omega_x());
        }

    // specialize2 after delta on a pure-x function replaces i by i+j.
    BivarPoly::Vars ij{{"i", "j"}};
    auto vi = BivarPoly::variable(ij, 0);
    auto vj = BivarPoly::variable(ij, 1);
    auto g = b(Basis::mtilde, {2, 1});
    auto direct = SymFunc2::from_x(g).delta_xy().specialize2();
    auto expected = g.specialize_ones().subst(vi + vj, vj);
    CHECK(direct == expected);

    // Grouping and restriction.
    auto mix = SymFunc2::p2_term(P({2}), P({1})) + SymFunc2::p2_term(P({1, 1}), P());
    CHECK(mix.restrict_y0() == b(Basis::p, {1, 1}));
    CHECK(mix.group_by_y().size() == 2);
}

TEST_CASE("quasi-symmetric expansions") {
    // Q_{empty,2} = h_2 and Q_{{1},2} = e_2.
    CHECK(qsym_to_sym(q_fundamental(0u, 2)) == b(Basis::h, {2}));
    CHECK(qsym_to_sym(q_fundamental(1u, 2)) == b(Basis::e, {2}));

    // M coefficients of a symmetric function depend only on the subset type.
    auto g = b(Basis::s, {2, 1});
    auto q = qsym_from_sym(g, 3);
    auto mcoeffs = g.in_basis(Basis::m);
    for (std::uint32_t s = 0; s <= full_mask(3); ++s) {
        Partition type = subset_type(s, 3);
        Rat want = mcoeffs.count(type) ? mcoeffs.at(type) : Rat(0);
        CHECK(q.m_coeff(s) == want);
    }

    // Reassembling from the fundamental expansion reproduces the function.
    for (const auto& lam : integer_partitions(4)) {
        auto f = SymFunc::basis_elem(Basis::s, lam);
        auto bq = sym_to_Q(f, 4);
        QSymFunc sum(4);
        for (const auto& [mask, c] : bq) sum = sum + q_fundamental(mask, 4).scaled(c);
        CHECK(qsym_to_sym(sum) == f);
    }

    // The complement map realizes omega.
    for (int d = 1; d <= 4; ++d)
        for (const auto& lam : integer_partitions(d)) {
            auto f = SymFunc::basis_elem(Basis::s, lam);
            CHECK(q_complement_map(f, d) == f.omega());
        }
    CHECK(q_complement_map(b(Basis::e, {4}), 4) == b(Basis::h, {4}));

    // Non-homogeneous input is rejected.
    CHECK_THROWS(qsym_from_sym(b(Basis::p, {1}) + b(Basis::p, {2}), 2));
}

TEST_CASE("bivariate polynomials") {
    BivarPoly::Vars ij{{"i", "j"}};
    auto i = BivarPoly::variable(ij, 0);
    auto j = BivarPoly::variable(ij, 1);
    auto p = (i + j) * (i - j);
    CHECK(p.coeff(2, 0) == 1);
    CHECK(p.coeff(0, 2) == -1);
    CHECK(p.coeff(1, 1) == 0);
    CHECK(p.eval(Rat(3), Rat(2)) == 5);
    CHECK(falling_factorial(i, 3).eval(Rat(5), Rat(0)) == 60);
    CHECK(binom_poly(i + BivarPoly::constant(ij, Rat(2)), 2).eval(Rat(2), Rat(0)) == 6);
    CHECK(binom_poly(i, 2).str() == "1/2*i^2 - 1/2*i");
    CHECK((i * i - j).subst(j, i) == j * j - i);
    CHECK(p.univariate() == false);
    CHECK((i * i + i).univariate() == true);
    BivarPoly::Vars mn{{"m", "n"}};
    CHECK_THROWS(i + BivarPoly::variable(mn, 0));
    CHECK((i - i).is_zero());
    CHECK((-p) + p == BivarPoly(ij));
    CHECK(p.str() == "i^2 - j^2");
}

TEST_CASE("truncated multivariate polynomials") {
    auto one = TruncatedMultiPoly::constant(2, 2, Rat(1));
    auto a1 = TruncatedMultiPoly::variable(2, 2, 0);
    auto inv = csv_series({one, a1}, 2);
    CHECK(inv.coeff({0, 0}) == 1);
    CHECK(inv.coeff({1, 0}) == -1);
    CHECK(inv.coeff({2, 0}) == 1);
    CHECK((inv * (one + a1)).coeff({0, 0}) == 1);
    CHECK((inv * (one + a1)).coeff({1, 0}) == 0);
    CHECK((inv * (one + a1)).coeff({2, 0}) == 0);
    CHECK(csv_series({one}, 3) == TruncatedMultiPoly::constant(2, 3, Rat(1)));
    CHECK_THROWS(csv_series({a1}, 2));

    // Truncation drops everything above the cap.
    auto sq = a1 * a1 * a1;
    CHECK(sq.is_zero());
}

TEST_CASE("t-polynomials") {
    TPoly f;
    f.add_term(0, b(Basis::p, {1, 1}));
    f.add_term(1, b(Basis::p, {2}));
    CHECK(f.eval(Rat(-1)) == b(Basis::p, {1, 1}) - b(Basis::p, {2}));
    CHECK(f.eval(Rat(0)) == b(Basis::p, {1, 1}));
    CHECK(f.coeff(1) == b(Basis::p, {2}));
    CHECK(f.coeff(5).is_zero());
}

TEST_CASE("json round trips and pretty forms") {
    auto g = b(Basis::s, {2, 1}) + b(Basis::m, {1, 1}).scaled(Rat(-1, 2));
    for (Basis basis : {Basis::m, Basis::p, Basis::s, Basis::xitilde}) {
        Json j = symfunc_to_json(g, basis);
        CHECK(symfunc_from_json(j) == g);
        CHECK(j.at("basis").get<std::string>() == basis_name(basis));
    }
    Json j = symfunc_to_json(b(Basis::m, {2, 1}).scaled(Rat(1, 2)), Basis::m);
    CHECK(j["terms"][0]["num"] == 1);
    CHECK(j["terms"][0]["den"] == 2);
    CHECK(j["terms"][0]["partition"] == Json::array({2, 1}));

    CHECK(pretty_symfunc(b(Basis::m, {3}) + b(Basis::m, {2, 1}).scaled(2), Basis::m) ==
          "m[3] + 2 m[2,1]");
    CHECK(pretty_symfunc(SymFunc::one().scaled(Rat(3, 2)), Basis::p) == "3/2");
    CHECK(pretty_symfunc(SymFunc(), Basis::m) == "0");

    auto two = SymFunc2::p2_term(P({2}), P({1})).scaled(Rat(3));
    Json j2 = symfunc2_to_json(two);
    CHECK(j2["terms"][0]["x_partition"] == Json::array({2}));
    CHECK(j2["terms"][0]["y_partition"] == Json::array({1}));
    CHECK(pretty_symfunc2(two) == "3 px[2] py[1]");

    BivarPoly::Vars ij{{"i", "j"}};
    auto bp = BivarPoly::variable(ij, 0) + BivarPoly::variable(ij, 1).scaled(Rat(-2));
    Json jb = bivar_to_json(bp);
    CHECK(jb["vars"] == Json::array({"i", "j"}));
    CHECK(jb["terms"].size() == 2);

    TPoly tp;
    tp.add_term(2, b(Basis::p, {1}));
    CHECK(pretty_tpoly(tp, Basis::p) == "(p[1]) t^2");
    CHECK(tpoly_to_json(tp, Basis::p)["terms"][0]["power"] == 2);
}

TEST_CASE("transition cache tolerates concurrent access") {
    std::vector<std::thread> workers;
    std::atomic<bool> ok{true};
    for (int t = 0; t < 4; ++t)
        workers.emplace_back([&ok] {
            try {
                for (int deg = 1; deg <= 6; ++deg)
                    for (const auto& lam : integer_partitions(deg))
                        if (SymFunc::basis_elem(Basis::xitilde, lam).is_zero()) ok = false;
            } catch (...) {
                ok = false;
            }
        });
    for (auto& w : workers) w.join();
    CHECK(ok.load());
}
