#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "lmow/errors.hpp"
#include "lmow/rational.hpp"

namespace lmow {

// Formal power series in h, truncated at a fixed order. Arithmetic between
// series of different orders truncates to the smaller order.
class TruncatedSeries {
  public:
    explicit TruncatedSeries(int order) : order_(order), c_(order + 1) {
        if (order < 0)
            throw domain_error("TruncatedSeries: negative order");
    }

    static TruncatedSeries constant(const Rational& v, int order) {
        TruncatedSeries s(order);
        s.c_[0] = v;
        return s;
    }

    static TruncatedSeries from_coeffs(std::vector<Rational> coeffs, int order) {
        TruncatedSeries s(order);
        for (int k = 0; k <= order && k < (int)coeffs.size(); ++k)
            s.c_[k] = coeffs[k];
        return s;
    }

    int order() const { return order_; }

    const Rational& coeff(int k) const {
        if (k < 0 || k > order_)
            throw domain_error("TruncatedSeries: coefficient index out of range");
        return c_[k];
    }

    void set_coeff(int k, const Rational& v) {
        if (k < 0 || k > order_)
            throw domain_error("TruncatedSeries: coefficient index out of range");
        c_[k] = v;
    }

    bool is_zero() const {
        for (const auto& v : c_)
            if (!v.is_zero())
                return false;
        return true;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.order_, b.order_));
        for (int k = 0; k <= r.order_; ++k)
            r.c_[k] = a.c_[k] + b.c_[k];
        return r;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.order_, b.order_));
        for (int k = 0; k <= r.order_; ++k)
            r.c_[k] = a.c_[k] - b.c_[k];
        return r;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.order_, b.order_));
        for (int i = 0; i <= r.order_; ++i) {
            if (a.c_[i].is_zero())
                continue;
            for (int j = 0; i + j <= r.order_; ++j) {
                if (b.c_[j].is_zero())
                    continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }

    TruncatedSeries operator*(const Rational& v) const {
        TruncatedSeries r(*this);
        for (auto& x : r.c_)
            x *= v;
        return r;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.order_ == b.order_ && a.c_ == b.c_;
    }
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) {
        return !(a == b);
    }

    // Multiplicative inverse; the constant term must be invertible.
    TruncatedSeries inverse() const {
        if (c_[0].is_zero())
            throw domain_error("TruncatedSeries: inverse requires unit constant term");
        TruncatedSeries r(order_);
        Rational inv0 = c_[0].reciprocal();
        r.c_[0] = inv0;
        for (int n = 1; n <= order_; ++n) {
            Rational acc;
            for (int k = 1; k <= n; ++k)
                acc += c_[k] * r.c_[n - k];
            r.c_[n] = -(inv0 * acc);
        }
        return r;
    }

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (int k = 0; k <= order_; ++k) {
            if (c_[k].is_zero())
                continue;
            std::string cs = c_[k].str();
            bool neg = cs[0] == '-';
            if (neg)
                cs = cs.substr(1);
            os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
            if (cs != "1" || k == 0)
                os << cs;
            if (cs != "1" && k != 0)
                os << "*";
            if (k == 1)
                os << "h";
            else if (k > 1)
                os << "h^" << k;
            first = false;
        }
        if (first)
            os << "0";
        return os.str();
    }

  private:
    int order_;
    std::vector<Rational> c_;
};

inline TruncatedSeries operator*(const Rational& v, const TruncatedSeries& s) { return s * v; }

// log s for a series with constant term 1.
inline TruncatedSeries series_log(const TruncatedSeries& s) {
    if (!s.coeff(0).is_one())
        throw domain_error("series_log: constant term must be 1");
    int n = s.order();
    TruncatedSeries x = s - TruncatedSeries::constant(Rational(1), n);
    TruncatedSeries r(n), p = x;
    for (int k = 1; k <= n; ++k) {
        r = r + p * (Rational(k % 2 == 1 ? 1 : -1) / Rational(k));
        if (k < n)
            p = p * x;
    }
    return r;
}

// exp s for a series with constant term 0.
inline TruncatedSeries series_exp(const TruncatedSeries& s) {
    if (!s.coeff(0).is_zero())
        throw domain_error("series_exp: constant term must be 0");
    int n = s.order();
    TruncatedSeries r = TruncatedSeries::constant(Rational(1), n);
    TruncatedSeries p = TruncatedSeries::constant(Rational(1), n);
    for (int k = 1; k <= n; ++k) {
        p = p * s;
        r = r + p * rational_factorial(k).reciprocal();
    }
    return r;
}

// Series of exp(a*h) where a is rational.
inline TruncatedSeries exp_linear(const Rational& a, int order) {
    TruncatedSeries r(order);
    Rational pw(1);
    for (int k = 0; k <= order; ++k) {
        r.set_coeff(k, pw / rational_factorial(k));
        pw *= a;
    }
    return r;
}

// h / (e^{h/2} - e^{-h/2}); an even series with constant term 1.
inline TruncatedSeries nu_series(int order) {
    if (order < 0)
        throw domain_error("nu_series: negative order");
    // (e^{h/2} - e^{-h/2}) / h  =  sum_{j even} (1/2)^j h^j / (j+1)!
    TruncatedSeries d(order);
    Rational half(1, 2);
    for (int j = 0; j <= order; j += 2)
        d.set_coeff(j, half.pow(j) / rational_factorial(j + 1));
    return d.inverse();
}

// Coefficients b_{2m} of -1/2 log(nu_series), for 2m <= max_degree.
inline std::map<int, Rational> b_coefficients(int max_degree) {
    if (max_degree < 0 || max_degree % 2 != 0)
        throw domain_error("b_coefficients: max_degree must be even and >= 0");
    std::map<int, Rational> out;
    if (max_degree == 0)
        return out;
    TruncatedSeries l = series_log(nu_series(max_degree));
    for (int m = 2; m <= max_degree; m += 2)
        out[m] = l.coeff(m) * Rational(-1, 2);
    return out;
}

// Symmetric Laurent polynomial in t: coefficient of t^k equals that of t^{-k}.
class SymmetricLaurent {
  public:
    SymmetricLaurent() : span_(0), c_(1) { c_[0] = Rational(1) - Rational(1); }

    // coeffs lists powers -span .. span.
    SymmetricLaurent(int span, std::vector<Rational> coeffs) : span_(span), c_(std::move(coeffs)) {
        if (span < 0 || (int)c_.size() != 2 * span + 1)
            throw structure_error("SymmetricLaurent: coefficient list has wrong length");
        for (int k = 1; k <= span_; ++k)
            if (c_[span_ + k] != c_[span_ - k])
                throw domain_error("SymmetricLaurent: coefficients not symmetric");
        trim();
    }

    static SymmetricLaurent one() { return constant(Rational(1)); }

    static SymmetricLaurent constant(const Rational& v) {
        return SymmetricLaurent(0, {v});
    }

    int span() const { return span_; }

    // Coefficient of t^k (zero outside the span).
    Rational at(int k) const {
        int a = k < 0 ? -k : k;
        if (a > span_)
            return Rational(0);
        return c_[span_ + k];
    }

    Rational eval_one() const {
        Rational acc;
        for (const auto& v : c_)
            acc += v;
        return acc;
    }

    bool is_normalized() const { return eval_one().is_one(); }

    friend SymmetricLaurent operator+(const SymmetricLaurent& a, const SymmetricLaurent& b) {
        int sp = std::max(a.span_, b.span_);
        std::vector<Rational> c(2 * sp + 1);
        for (int k = -sp; k <= sp; ++k)
            c[sp + k] = a.at(k) + b.at(k);
        return SymmetricLaurent(sp, std::move(c));
    }

    friend SymmetricLaurent operator*(const SymmetricLaurent& a, const SymmetricLaurent& b) {
        int sp = a.span_ + b.span_;
        std::vector<Rational> c(2 * sp + 1);
        for (int i = -a.span_; i <= a.span_; ++i) {
            if (a.at(i).is_zero())
                continue;
            for (int j = -b.span_; j <= b.span_; ++j)
                c[sp + i + j] += a.at(i) * b.at(j);
        }
        return SymmetricLaurent(sp, std::move(c));
    }

    SymmetricLaurent operator*(const Rational& v) const {
        SymmetricLaurent r(*this);
        for (auto& x : r.c_)
            x *= v;
        r.trim();
        return r;
    }

    friend bool operator==(const SymmetricLaurent& a, const SymmetricLaurent& b) {
        return a.span_ == b.span_ && a.c_ == b.c_;
    }
    friend bool operator!=(const SymmetricLaurent& a, const SymmetricLaurent& b) {
        return !(a == b);
    }

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (int k = span_; k >= -span_; --k) {
            Rational v = at(k);
            if (v.is_zero())
                continue;
            std::string cs = v.str();
            bool neg = cs[0] == '-';
            if (neg)
                cs = cs.substr(1);
            if (first)
                os << (neg ? "-" : "");
            else
                os << (neg ? " - " : " + ");
            if (cs != "1" || k == 0)
                os << cs;
            if (k != 0 && cs != "1")
                os << "*";
            if (k == 1)
                os << "t";
            else if (k == -1)
                os << "t^-1";
            else if (k != 0)
                os << "t^" << k;
            first = false;
        }
        if (first)
            os << "0";
        return os.str();
    }

  private:
    void trim() {
        while (span_ > 0 && c_[0].is_zero() && c_[2 * span_].is_zero()) {
            c_.erase(c_.begin());
            c_.pop_back();
            --span_;
        }
    }

    int span_;
    std::vector<Rational> c_; // index i <-> power i - span_
};

// Series of p(e^h) to the given truncation order.
inline TruncatedSeries laurent_eval_exp(const SymmetricLaurent& p, int order) {
    if (order < 0)
        throw domain_error("laurent_eval_exp: negative order");
    TruncatedSeries r = TruncatedSeries::constant(p.at(0), order);
    for (int k = 1; k <= p.span(); ++k) {
        if (p.at(k).is_zero())
            continue;
        // c_k (e^{kh} + e^{-kh})
        r = r + (exp_linear(Rational(k), order) + exp_linear(Rational(-k), order)) * p.at(k);
    }
    return r;
}

} // namespace lmow
