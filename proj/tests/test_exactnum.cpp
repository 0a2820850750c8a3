#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lmow/series.hpp"

using namespace lmow;

namespace {

Rational Q(long n, long d = 1) { return Rational(n, d); }

// Independent oracle: log(1+x) by the Mercator series, written directly
// against coefficient arrays rather than through TruncatedSeries operators.
std::vector<Rational> mercator_log(const std::vector<Rational>& s, int order) {
    std::vector<Rational> x(order + 1);
    for (int k = 1; k <= order && k < (int)s.size(); ++k)
        x[k] = s[k];
    std::vector<Rational> out(order + 1), p = x;
    for (int k = 1; k <= order; ++k) {
        Rational c = Q(k % 2 == 1 ? 1 : -1, k);
        for (int j = 0; j <= order; ++j)
            out[j] += p[j] * c;
        // p *= x
        std::vector<Rational> np(order + 1);
        for (int i = 0; i <= order; ++i)
            for (int j = 0; i + j <= order; ++j)
                np[i + j] += p[i] * x[j];
        p = np;
    }
    return out;
}

TruncatedSeries random_series(std::mt19937& rng, int order, bool unit_head) {
    std::uniform_int_distribution<long> num(-6, 6), den(1, 5);
    TruncatedSeries s(order);
    s.set_coeff(0, unit_head ? Q(1) : Q(0));
    for (int k = 1; k <= order; ++k)
        s.set_coeff(k, Q(num(rng), den(rng)));
    return s;
}

} // namespace

TEST_CASE("rational arithmetic is exact and in lowest terms") {
    CHECK(Q(2, 4) == Q(1, 2));
    CHECK(Q(-2, -4) == Q(1, 2));
    CHECK(Q(2, -4) == Q(-1, 2));
    CHECK((Q(1, 3) + Q(1, 6)) == Q(1, 2));
    CHECK((Q(1, 3) * Q(3, 7)) == Q(1, 7));
    CHECK((Q(1, 3) / Q(1, 6)) == Q(2));
    CHECK(Q(1, 2).str() == "1/2");
    CHECK(Q(-5).str() == "-5");
    CHECK(Rational("7/21") == Q(1, 3));
    CHECK(Rational("-3") == Q(-3));
    CHECK(Q(-2).pow(3) == Q(-8));
    CHECK(Q(2, 3).pow(-2) == Q(9, 4));
    CHECK_THROWS_AS(Q(1, 1) / Q(0), domain_error);
    CHECK_THROWS_AS(Rational("abc"), structure_error);
    CHECK(rational_factorial(6) == Q(720));
    CHECK(double_factorial_odd(5) == Q(945));
}

TEST_CASE("series arithmetic truncates to the minimum order") {
    TruncatedSeries a = TruncatedSeries::from_coeffs({Q(1), Q(1)}, 5);
    TruncatedSeries b = TruncatedSeries::from_coeffs({Q(1), Q(-1)}, 3);
    TruncatedSeries p = a * b;
    CHECK(p.order() == 3);
    CHECK(p.coeff(0) == Q(1));
    CHECK(p.coeff(1) == Q(0));
    CHECK(p.coeff(2) == Q(-1));
}

TEST_CASE("series_log matches the stated examples") {
    TruncatedSeries s = TruncatedSeries::from_coeffs({Q(1), Q(1)}, 3);
    TruncatedSeries l = series_log(s);
    CHECK(l.coeff(1) == Q(1));
    CHECK(l.coeff(2) == Q(-1, 2));
    CHECK(l.coeff(3) == Q(1, 3));

    CHECK(series_log(TruncatedSeries::constant(Q(1), 5)).is_zero());

    // log(nu): verified by exponentiating back.
    TruncatedSeries nu = nu_series(4);
    TruncatedSeries ln = series_log(nu);
    CHECK(ln.coeff(2) == Q(-1, 24));
    CHECK(ln.coeff(4) == Q(1, 2880));
    CHECK(series_exp(ln) == nu);

    CHECK_THROWS_AS(series_log(TruncatedSeries::constant(Q(2), 3)), domain_error);
}

TEST_CASE("series_exp matches the stated examples") {
    CHECK(series_exp(TruncatedSeries(4)) == TruncatedSeries::constant(Q(1), 4));

    TruncatedSeries h = TruncatedSeries::from_coeffs({Q(0), Q(1)}, 2);
    TruncatedSeries e = series_exp(h);
    CHECK(e.coeff(0) == Q(1));
    CHECK(e.coeff(1) == Q(1));
    CHECK(e.coeff(2) == Q(1, 2));

    TruncatedSeries q = TruncatedSeries::from_coeffs({Q(0), Q(0), Q(1, 48)}, 4);
    TruncatedSeries eq = series_exp(q);
    CHECK(eq.coeff(2) == Q(1, 48));
    CHECK(eq.coeff(4) == Q(1, 4608));

    CHECK_THROWS_AS(series_exp(TruncatedSeries::constant(Q(1), 3)), domain_error);
}

TEST_CASE("exp and log are mutually inverse on random series") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 40; ++trial) {
        int order = 1 + (int)(rng() % 10);
        TruncatedSeries u = random_series(rng, order, true);
        CHECK(series_exp(series_log(u)) == u);
        TruncatedSeries v = random_series(rng, order, false);
        CHECK(series_log(series_exp(v)) == v);
    }
}

TEST_CASE("nu_series against the sinh oracle") {
    TruncatedSeries nu4 = nu_series(4);
    CHECK(nu4.coeff(0) == Q(1));
    CHECK(nu4.coeff(2) == Q(-1, 24));
    CHECK(nu4.coeff(4) == Q(7, 5760));
    CHECK(nu_series(0) == TruncatedSeries::constant(Q(1), 0));

    TruncatedSeries nu5 = nu_series(5);
    CHECK(nu5.coeff(5) == Q(0));
    for (int k = 0; k <= 4; ++k)
        CHECK(nu5.coeff(k) == nu4.coeff(k));

    // Oracle: nu(N) * (e^{h/2}-e^{-h/2}) == h, with the sinh factor built
    // termwise from factorials.
    for (int n : {2, 5, 9}) {
        TruncatedSeries sinh2(n + 1);
        for (int j = 1; j <= n + 1; j += 2)
            sinh2.set_coeff(j, Q(1, 2).pow(j - 1) / rational_factorial(j) * Q(2) * Q(1, 2));
        TruncatedSeries lifted(n + 1);
        for (int k = 0; k <= n; ++k)
            lifted.set_coeff(k, nu_series(n).coeff(k));
        TruncatedSeries prod = lifted * sinh2;
        for (int k = 0; k <= n + 1; ++k)
            CHECK(prod.coeff(k) == (k == 1 ? Q(1) : Q(0)));
    }
}

TEST_CASE("b_coefficients values and truncation independence") {
    auto b2 = b_coefficients(2);
    CHECK(b2.size() == 1);
    CHECK(b2[2] == Q(1, 48));

    auto b4 = b_coefficients(4);
    CHECK(b4[2] == Q(1, 48));
    CHECK(b4[4] == Q(-1, 5760));

    CHECK(b_coefficients(0).empty());
    CHECK_THROWS_AS(b_coefficients(3), domain_error);

    auto b10 = b_coefficients(10);
    for (auto& [k, v] : b4)
        CHECK(b10[k] == v);

    // Independent oracle: -1/2 Mercator-log of nu, coefficientwise.
    std::vector<Rational> nuc;
    for (int k = 0; k <= 10; ++k)
        nuc.push_back(nu_series(10).coeff(k));
    auto l = mercator_log(nuc, 10);
    for (auto& [k, v] : b10)
        CHECK(v == l[k] * Q(-1, 2));
}

TEST_CASE("symmetric laurent polynomials") {
    SymmetricLaurent one = SymmetricLaurent::one();
    CHECK(one.eval_one() == Q(1));

    SymmetricLaurent trefoil(1, {Q(1), Q(-1), Q(1)});
    CHECK(trefoil.at(1) == Q(1));
    CHECK(trefoil.at(0) == Q(-1));
    CHECK(trefoil.at(-1) == Q(1));
    CHECK(trefoil.is_normalized());

    CHECK_THROWS_AS(SymmetricLaurent(1, {Q(1), Q(0), Q(2)}), domain_error);

    SymmetricLaurent sq = trefoil * trefoil;
    CHECK(sq.span() == 2);
    CHECK(sq.at(2) == Q(1));
    CHECK(sq.at(1) == Q(-2));
    CHECK(sq.at(0) == Q(3));
    CHECK(sq.eval_one() == Q(1));

    // Trimming: padded representation equals the tight one.
    SymmetricLaurent padded(2, {Q(0), Q(1), Q(-1), Q(1), Q(0)});
    CHECK(padded == trefoil);
}

TEST_CASE("laurent_eval_exp against the termwise exponential oracle") {
    CHECK(laurent_eval_exp(SymmetricLaurent::one(), 6) ==
          TruncatedSeries::constant(Q(1), 6));

    SymmetricLaurent trefoil(1, {Q(1), Q(-1), Q(1)});
    TruncatedSeries t = laurent_eval_exp(trefoil, 4);
    CHECK(t.coeff(0) == Q(1));
    CHECK(t.coeff(2) == Q(1));
    CHECK(t.coeff(4) == Q(1, 12));
    CHECK(t.coeff(1) == Q(0));
    CHECK(t.coeff(3) == Q(0));

    SymmetricLaurent fig8(1, {Q(-1), Q(3), Q(-1)});
    TruncatedSeries f = laurent_eval_exp(fig8, 4);
    CHECK(f.coeff(0) == Q(1));
    CHECK(f.coeff(2) == Q(-1));
    CHECK(f.coeff(4) == Q(-1, 12));

    // Oracle: sum exp(k h) termwise from factorials.
    std::mt19937 rng(77);
    for (int trial = 0; trial < 10; ++trial) {
        int span = 1 + (int)(rng() % 3);
        std::vector<Rational> cs(2 * span + 1);
        for (int k = 0; k <= span; ++k) {
            Rational v = Q((long)(rng() % 9) - 4, 1 + (long)(rng() % 3));
            cs[span + k] = v;
            cs[span - k] = v;
        }
        SymmetricLaurent p(span, cs);
        int order = 6;
        TruncatedSeries got = laurent_eval_exp(p, order);
        for (int j = 0; j <= order; ++j) {
            Rational expect;
            for (int k = -span; k <= span; ++k)
                expect += p.at(k) * Q(k).pow(j) / rational_factorial(j);
            CHECK(got.coeff(j) == expect);
        }
    }
}
