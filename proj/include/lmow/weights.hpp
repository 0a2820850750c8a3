#pragma once

#include <functional>
#include <map>
#include <sstream>
#include <vector>

#include "lmow/closure.hpp"
#include "lmow/series.hpp"

namespace lmow {

// Polynomial in the formal circle variable c with exact coefficients.
class CPolynomial {
  public:
    CPolynomial() = default;
    explicit CPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static CPolynomial constant(const Rational& v) { return CPolynomial({v}); }
    static CPolynomial c_power(int k) {
        std::vector<Rational> c(k + 1);
        c[k] = Rational(1);
        return CPolynomial(std::move(c));
    }

    int degree() const { return (int)c_.size() - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }

    Rational coeff(int k) const {
        return k >= 0 && k < (int)c_.size() ? c_[k] : Rational(0);
    }

    friend CPolynomial operator+(const CPolynomial& a, const CPolynomial& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
        for (size_t k = 0; k < c.size(); ++k)
            c[k] = a.coeff((int)k) + b.coeff((int)k);
        return CPolynomial(std::move(c));
    }

    friend CPolynomial operator-(const CPolynomial& a, const CPolynomial& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
        for (size_t k = 0; k < c.size(); ++k)
            c[k] = a.coeff((int)k) - b.coeff((int)k);
        return CPolynomial(std::move(c));
    }

    friend CPolynomial operator*(const CPolynomial& a, const CPolynomial& b) {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] += a.c_[i] * b.c_[j];
        return CPolynomial(std::move(c));
    }

    CPolynomial operator*(const Rational& v) const {
        CPolynomial r(*this);
        for (auto& x : r.c_)
            x *= v;
        r.trim();
        return r;
    }

    friend bool operator==(const CPolynomial& a, const CPolynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const CPolynomial& a, const CPolynomial& b) { return !(a == b); }

    Rational eval(const Rational& v) const {
        Rational acc;
        for (int k = degree(); k >= 0; --k)
            acc = acc * v + c_[k];
        return acc;
    }

    std::string str() const {
        if (is_zero())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (int k = degree(); k >= 0; --k) {
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
                os << "c";
            else if (k > 1)
                os << "c^" << k;
            first = false;
        }
        return os.str();
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero())
            c_.pop_back();
    }
    std::vector<Rational> c_;
};

namespace detail {

// Eligible edges for the H-resolution: both endpoints trivalent and distinct.
inline std::vector<int> eligible_edges(const UniTrivalentDiagram& d, const DartIndex& ix) {
    std::vector<int> out;
    for (int p = 0; p < d.dart_count(); ++p) {
        int q = d.pairing[p];
        if (p < q && ix.is_trivalent(p) && ix.is_trivalent(q) &&
            ix.cell_of[p] != ix.cell_of[q])
            out.push_back(p);
    }
    return out;
}

// Rotates the cell of `p` so it reads (p, A, B).
inline std::pair<int, int> outer_darts(const DartIndex& ix, int p) {
    int a = ix.rot_next[p];
    return {a, ix.rot_next[a]};
}

// Extracts one connected component as a standalone diagram (circles stay
// behind).
inline UniTrivalentDiagram subdiagram(const UniTrivalentDiagram& d, const std::vector<int>& comp) {
    std::vector<int> remap(d.dart_count(), -1);
    for (size_t i = 0; i < comp.size(); ++i)
        remap[comp[i]] = (int)i;
    UniTrivalentDiagram out;
    out.pairing.assign(comp.size(), -1);
    for (int x : comp)
        out.pairing[remap[x]] = remap[d.pairing[x]];
    for (const auto& t : d.trivalent)
        if (remap[t[0]] >= 0)
            out.trivalent.push_back({remap[t[0]], remap[t[1]], remap[t[2]]});
    for (int x : d.univalent)
        if (remap[x] >= 0)
            out.univalent.push_back(remap[x]);
    return out;
}

inline CPolynomial w_eval_impl(const UniTrivalentDiagram& d,
                               const std::function<int(const std::vector<int>&)>& pick) {
    if (d.legs() != 0)
        throw domain_error("w_eval: diagram must have zero legs");
    if (d.trivalent.empty())
        return CPolynomial::c_power(d.circles);
    std::vector<std::vector<int>> comps = dart_components(d);
    if (comps.size() > 1 || d.circles > 0) {
        // Components evaluate independently; the map is multiplicative.
        CPolynomial acc = CPolynomial::c_power(d.circles);
        for (const auto& comp : comps)
            acc = acc * w_eval_impl(subdiagram(d, comp), pick);
        return acc;
    }
    DartIndex ix(d);
    std::vector<int> edges = eligible_edges(d, ix);
    if (edges.empty())
        throw internal_error("w_eval: no resolvable edge in a diagram with vertices");
    int p = edges[pick(edges)];
    int q = d.pairing[p];
    auto [A, B] = outer_darts(ix, p);
    auto [C, D] = outer_darts(ix, q);
    std::vector<int> drop = {p, q, A, B, C, D};
    // W(H) = W(=) - W(X): the parallel regluing joins the outer strands on
    // the same side of the resolved bar, the crossed one joins them
    // diametrically.
    UniTrivalentDiagram par = rewire(d, {{A, D}, {B, C}}, drop);
    UniTrivalentDiagram crs = rewire(d, {{A, C}, {B, D}}, drop);
    return w_eval_impl(par, pick) - w_eval_impl(crs, pick);
}

} // namespace detail

// Weight map on zero-leg diagrams: repeatedly resolves an internal edge by
// the parallel-minus-crossed rule and counts residual circles as powers of
// c. Edges are resolved in canonical (lowest dart) order; see
// w_eval_with_choice for the order-dependence caveat exercised in tests.
inline CPolynomial w_eval(const UniTrivalentDiagram& d) {
    return detail::w_eval_impl(d, [](const std::vector<int>&) { return 0; });
}

inline CPolynomial w_eval(const DiagramCombination& x) {
    CPolynomial acc;
    for (const auto& [k, c] : x.terms())
        acc = acc + w_eval(k.repr) * c;
    return acc;
}

// Same recursion with an injectable edge choice (index into the eligible
// edge list at every step).
inline CPolynomial w_eval_with_choice(const UniTrivalentDiagram& d,
                                      const std::function<int(const std::vector<int>&)>& pick) {
    return detail::w_eval_impl(d, pick);
}

// The Conway weight system on interval-free characters: (-2)^p on a
// disjoint union of p coherently oriented even wheels, 0 otherwise.
// Returned per degree.
inline std::map<int, Rational> w_conway(const DiagramCombination& x) {
    std::map<int, Rational> out;
    for (const auto& [k, c] : x.terms()) {
        if (k.circles() > 0)
            throw structure_error("w_conway: circle components are not Chinese characters");
        Classification cl = component_classification(k.repr);
        if (!cl.in_B_prime())
            throw domain_error("w_conway: input has an interval component (not in B')");
        if (!cl.in_B_wheels())
            continue;
        DartIndex ix(k.repr);
        int p = 0, orient = 1;
        for (const auto& comp : dart_components(k.repr)) {
            int legs_here = 0;
            for (int d : comp)
                if (!ix.is_trivalent(d))
                    legs_here++;
            orient *= wheel_orientation_sign(legs_here);
            ++p;
        }
        Rational v = Rational(-2).pow(p) * c * Rational(orient);
        auto [it, fresh] = out.emplace(k.degree(), v);
        if (!fresh)
            it->second += v;
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

// W_{.,h}: multiplies the degree-m evaluation by h^m and sums.
inline TruncatedSeries w_hbar_grade(
    const DiagramCombination& x,
    const std::function<std::map<int, Rational>(const DiagramCombination&)>& value_op,
    int order = -1) {
    std::map<int, Rational> values = value_op(x);
    if (order < 0) {
        order = 0;
        for (const auto& [m, v] : values)
            order = std::max(order, m);
    }
    TruncatedSeries r(order);
    for (const auto& [m, v] : values)
        if (m <= order)
            r.set_coeff(m, v);
    return r;
}

} // namespace lmow
