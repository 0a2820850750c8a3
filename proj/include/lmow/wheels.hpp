#pragma once

#include <map>

#include "lmow/closure.hpp"
#include "lmow/series.hpp"

namespace lmow {

// Primitive part of an element of the wheel algebra: the coefficient of
// each single even wheel.
struct AlphaSeries {
    std::map<int, Rational> coeffs; // wheel size 2m -> coefficient

    Rational at(int w) const {
        auto it = coeffs.find(w);
        return it == coeffs.end() ? Rational(0) : it->second;
    }

    void set(int w, const Rational& v) {
        if (w <= 0 || w % 2 != 0)
            throw domain_error("AlphaSeries: wheel sizes must be positive and even");
        if (v.is_zero())
            coeffs.erase(w);
        else
            coeffs[w] = v;
    }

    friend bool operator==(const AlphaSeries& a, const AlphaSeries& b) {
        return a.coeffs == b.coeffs;
    }
    friend bool operator!=(const AlphaSeries& a, const AlphaSeries& b) { return !(a == b); }
};

namespace detail {

inline void require_normalized(const SymmetricLaurent& a) {
    if (!a.is_normalized())
        throw domain_error("Alexander polynomial must evaluate to 1 at t = 1");
}

} // namespace detail

// a'_{2m}: coefficients of -1/2 log(A(e^h)).
inline std::map<int, Rational> a_prime_from_alexander(const SymmetricLaurent& a, int max_degree) {
    detail::require_normalized(a);
    if (max_degree < 0)
        throw domain_error("a_prime_from_alexander: negative degree bound");
    TruncatedSeries l = series_log(laurent_eval_exp(a, max_degree));
    std::map<int, Rational> out;
    for (int k = 1; k <= max_degree; ++k) {
        if (k % 2 == 1) {
            if (!l.coeff(k).is_zero())
                throw internal_error("a_prime_from_alexander: odd coefficient survived");
            continue;
        }
        Rational v = l.coeff(k) * Rational(-1, 2);
        if (!v.is_zero())
            out[k] = v;
    }
    return out;
}

// alpha(M): coefficient of w_{2m} is 2 b_{2m} + a'_{2m}(M).
inline AlphaSeries alpha_from_alexander(const SymmetricLaurent& a, int max_degree) {
    std::map<int, Rational> ap = a_prime_from_alexander(a, max_degree);
    std::map<int, Rational> b = b_coefficients(max_degree - max_degree % 2);
    AlphaSeries out;
    for (int w = 2; w <= max_degree; w += 2) {
        Rational v = Rational(2) * (b.count(w) ? b[w] : Rational(0)) +
                     (ap.count(w) ? ap[w] : Rational(0));
        if (!v.is_zero())
            out.coeffs[w] = v;
    }
    return out;
}

// exp with respect to disjoint union, truncated by total degree.
inline WheelSeries exp_disjoint(const AlphaSeries& alpha, int max_degree) {
    WheelSeries lin(max_degree);
    for (const auto& [w, v] : alpha.coeffs)
        lin.add({w}, v);
    WheelSeries result = WheelSeries::unit(max_degree);
    WheelSeries term = WheelSeries::unit(max_degree);
    for (int k = 1; 2 * k <= max_degree; ++k) {
        term = product(term, lin) * Rational(1, k);
        if (term.is_zero())
            break;
        result += term;
    }
    return result;
}

// Inverse of exp_disjoint; rejects series that are not exponentials of a
// single-wheel combination within the truncation.
inline AlphaSeries log_disjoint(const WheelSeries& w) {
    if (!w.coeff({}).is_one())
        throw domain_error("log_disjoint: constant term must be 1");
    int maxdeg = w.max_degree();
    WheelSeries u = w;
    u.add({}, Rational(-1));
    WheelSeries acc(maxdeg);
    WheelSeries p = WheelSeries::unit(maxdeg);
    for (int k = 1; 2 * k <= maxdeg; ++k) {
        p = product(p, u);
        if (p.is_zero())
            break;
        acc += p * Rational(k % 2 == 1 ? 1 : -1, k);
    }
    AlphaSeries out;
    for (const auto& [mono, v] : acc.terms()) {
        if (mono.size() != 1)
            throw domain_error("log_disjoint: input is not an exponential of wheels");
        out.coeffs[mono[0]] = v;
    }
    return out;
}

// Unique symmetric Laurent polynomial of span <= span_bound, value 1 at
// t = 1, whose a' expansion matches the given coefficients. Missing map
// entries are treated as prescribed zeros; entries beyond 2*span_bound are
// verified and reported as a span failure when unmatched.
inline SymmetricLaurent alexander_from_a_prime(const std::map<int, Rational>& coeffs,
                                               int span_bound) {
    if (span_bound < 0)
        throw domain_error("alexander_from_a_prime: negative span bound");
    for (const auto& [w, v] : coeffs)
        if (w <= 0 || w % 2 != 0)
            throw domain_error("alexander_from_a_prime: indices must be positive even");

    int d = span_bound;
    // A(e^h) = exp(-2 sum a'_{2m} h^{2m}) through order 2d.
    TruncatedSeries target(2 * d);
    {
        TruncatedSeries e(2 * d);
        for (const auto& [w, v] : coeffs)
            if (w <= 2 * d)
                e.set_coeff(w, v * Rational(-2));
        target = series_exp(e);
    }

    // Unknowns c_0..c_d; equations: order 0 (normalization) and each
    // even order 2j <= 2d of c_0 + sum_k c_k (e^{kh}+e^{-kh}).
    int n = d + 1;
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
    m[0][0] = Rational(1);
    for (int k = 1; k <= d; ++k)
        m[0][k] = Rational(2);
    m[0][n] = Rational(1);
    for (int j = 1; j <= d; ++j) {
        for (int k = 1; k <= d; ++k)
            m[j][k] = Rational(2) * Rational(k).pow(2 * j) / rational_factorial(2 * j);
        m[j][n] = target.coeff(2 * j);
    }
    // exact elimination
    for (int col = 0, row = 0; col < n && row < n; ++col) {
        int sel = -1;
        for (int i = row; i < n; ++i)
            if (!m[i][col].is_zero()) {
                sel = i;
                break;
            }
        if (sel < 0)
            throw internal_error("alexander_from_a_prime: singular moment system");
        std::swap(m[sel], m[row]);
        Rational inv = m[row][col].reciprocal();
        for (int k = col; k <= n; ++k)
            m[row][k] *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == row || m[i][col].is_zero())
                continue;
            Rational f = m[i][col];
            for (int k = col; k <= n; ++k)
                m[i][k] -= f * m[row][k];
        }
        ++row;
    }
    std::vector<Rational> c(2 * d + 1);
    c[d] = m[0][n];
    for (int k = 1; k <= d; ++k) {
        c[d + k] = m[k][n];
        c[d - k] = m[k][n];
    }
    SymmetricLaurent result(d, c);

    // The solution must reproduce every prescribed coefficient, including
    // those beyond the degrees used in the solve.
    int maxw = 2 * d;
    for (const auto& [w, v] : coeffs)
        maxw = std::max(maxw, w);
    std::map<int, Rational> back = a_prime_from_alexander(result, maxw);
    for (int w = 2; w <= maxw; w += 2) {
        Rational want = coeffs.count(w) ? coeffs.at(w) : Rational(0);
        Rational got = back.count(w) ? back.at(w) : Rational(0);
        if (want != got)
            throw span_error("alexander_from_a_prime: no polynomial of span <= " +
                             std::to_string(span_bound) + " matches the series");
    }
    return result;
}

// Normalization guard for externally supplied Alexander polynomials.
inline SymmetricLaurent validate_manifold_alexander(const SymmetricLaurent& p) {
    Rational v = p.eval_one();
    if (v.is_zero())
        throw domain_error("validate_manifold_alexander: value at t = 1 is zero");
    return p * v.reciprocal();
}

} // namespace lmow
