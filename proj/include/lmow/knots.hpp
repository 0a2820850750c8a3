#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "lmow/series.hpp"

namespace lmow {

// Conway polynomial in z.
class ConwayPolynomial {
  public:
    ConwayPolynomial() = default;
    explicit ConwayPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static ConwayPolynomial one() { return ConwayPolynomial({Rational(1)}); }

    int degree() const { return (int)c_.size() - 1; }
    bool is_zero() const { return c_.empty(); }
    Rational coeff(int k) const { return k >= 0 && k < (int)c_.size() ? c_[k] : Rational(0); }

    bool even_powers_only() const {
        for (size_t k = 1; k < c_.size(); k += 2)
            if (!c_[k].is_zero())
                return false;
        return true;
    }

    friend ConwayPolynomial operator+(const ConwayPolynomial& a, const ConwayPolynomial& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
        for (size_t k = 0; k < c.size(); ++k)
            c[k] = a.coeff((int)k) + b.coeff((int)k);
        return ConwayPolynomial(std::move(c));
    }

    ConwayPolynomial operator*(const Rational& v) const {
        ConwayPolynomial r(*this);
        for (auto& x : r.c_)
            x *= v;
        r.trim();
        return r;
    }

    // multiply by z
    ConwayPolynomial shifted() const {
        if (is_zero())
            return {};
        std::vector<Rational> c(c_.size() + 1);
        for (size_t k = 0; k < c_.size(); ++k)
            c[k + 1] = c_[k];
        return ConwayPolynomial(std::move(c));
    }

    friend bool operator==(const ConwayPolynomial& a, const ConwayPolynomial& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const ConwayPolynomial& a, const ConwayPolynomial& b) {
        return !(a == b);
    }

    std::string str() const {
        if (is_zero())
            return "0";
        std::string out;
        for (int k = 0; k <= degree(); ++k) {
            if (c_[k].is_zero())
                continue;
            std::string cs = c_[k].str();
            bool neg = cs[0] == '-';
            if (neg)
                cs = cs.substr(1);
            out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
            if (cs != "1" || k == 0)
                out += cs;
            if (cs != "1" && k != 0)
                out += "*";
            if (k == 1)
                out += "z";
            else if (k > 1)
                out += "z^" + std::to_string(k);
        }
        return out;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero())
            c_.pop_back();
    }
    std::vector<Rational> c_;
};

// PD code of an oriented knot diagram: each crossing is an ordered tuple
// (a,b,c,d) of arc labels read counterclockwise starting from the incoming
// under-strand; arcs are numbered consecutively along the knot.
struct PDCode {
    std::vector<std::array<int, 4>> crossings;
};

// Seifert matrix of a knot (square integer matrix with det(V - V^T) = 1).
struct SeifertMatrix {
    std::vector<std::vector<long>> v;

    int size() const { return (int)v.size(); }

    void validate() const {
        for (const auto& row : v)
            if ((int)row.size() != size())
                throw structure_error("SeifertMatrix: not square");
        if (size() % 2 != 0)
            throw structure_error("SeifertMatrix: odd size");
    }
};

namespace detail {

// Skein-recursion state: crossings with 4 ports each; ports are paired by
// the arcs. Under-strand enters port 0 and leaves port 2; the over-strand
// runs 3 -> 1 on a positive crossing and 1 -> 3 on a negative one.
struct SkeinDiagram {
    std::vector<int> port_pair; // 4 per crossing; -1 when removed
    std::vector<int> sign;      // +1 / -1; 0 when the crossing is removed
    int circles = 0;

    int crossing_count() const {
        int n = 0;
        for (int s : sign)
            n += s != 0;
        return n;
    }

    bool out_port(int p) const {
        int c = p / 4, r = p % 4;
        return r == 2 || r == (sign[c] > 0 ? 1 : 3);
    }

    int next_out(int in_port) const {
        int c = in_port / 4, r = in_port % 4;
        if (r == 0)
            return 4 * c + 2;
        return 4 * c + (sign[c] > 0 ? 1 : 3);
    }
};

struct Traversal {
    int components = 0;
    int first_bad = -1; // crossing index, -1 when descending
};

inline Traversal traverse(const SkeinDiagram& d, int basepoint) {
    Traversal t;
    t.components = d.circles;
    std::vector<int> outs;
    for (int p = 0; p < (int)d.port_pair.size(); ++p)
        if (d.port_pair[p] >= 0 && d.out_port(p))
            outs.push_back(p);
    if (outs.empty())
        return t;
    std::vector<char> seen_port(d.port_pair.size(), 0);
    std::vector<char> visited(d.sign.size(), 0);
    for (size_t idx = 0; idx < outs.size(); ++idx) {
        int s = outs[(basepoint + idx) % outs.size()];
        if (seen_port[s])
            continue;
        ++t.components;
        int p = s;
        do {
            seen_port[p] = 1;
            int in = d.port_pair[p];
            int c = in / 4, r = in % 4;
            if (!visited[c]) {
                visited[c] = 1;
                if (r == 0 && t.first_bad < 0)
                    t.first_bad = c;
            }
            p = d.next_out(in);
        } while (p != s);
    }
    return t;
}

inline SkeinDiagram switched(const SkeinDiagram& d, int c) {
    SkeinDiagram out = d;
    // Rotate the tuple so the old over-strand becomes the under one.
    // sign +: (a,b,c,d) -> (d,a,b,c): old port j -> new port (j+1)%4.
    // sign -: (a,b,c,d) -> (b,c,d,a): old port j -> new port (j+3)%4.
    int shift = d.sign[c] > 0 ? 1 : 3;
    std::array<int, 4> newp;
    for (int j = 0; j < 4; ++j)
        newp[(j + shift) % 4] = d.port_pair[4 * c + j];
    for (int j = 0; j < 4; ++j) {
        int partner = newp[j];
        if (partner / 4 == c) {
            // arc from this crossing to itself; remap the partner too
            int oldr = partner % 4;
            partner = 4 * c + (oldr + shift) % 4;
        }
        out.port_pair[4 * c + j] = partner;
    }
    for (int j = 0; j < 4; ++j) {
        int q = out.port_pair[4 * c + j];
        if (q / 4 != c)
            out.port_pair[q] = 4 * c + j;
    }
    out.sign[c] = -d.sign[c];
    return out;
}

inline SkeinDiagram smoothed(const SkeinDiagram& d, int c) {
    SkeinDiagram out = d;
    std::array<std::pair<int, int>, 2> joints;
    if (d.sign[c] > 0)
        joints = {{{4 * c + 0, 4 * c + 1}, {4 * c + 2, 4 * c + 3}}};
    else
        joints = {{{4 * c + 0, 4 * c + 3}, {4 * c + 1, 4 * c + 2}}};
    std::map<int, int> joint;
    for (auto [x, y] : joints) {
        joint[x] = y;
        joint[y] = x;
    }
    auto is_connector = [&](int p) { return p / 4 == c; };
    std::vector<char> used(4, 0);
    for (int p = 0; p < (int)out.port_pair.size(); ++p) {
        if (out.port_pair[p] < 0 || is_connector(p))
            continue;
        int z = d.port_pair[p];
        if (!is_connector(z))
            continue;
        while (is_connector(z)) {
            used[z % 4] = 1;
            used[joint[z] % 4] = 1;
            z = d.port_pair[joint[z]];
        }
        out.port_pair[p] = z;
        out.port_pair[z] = p;
    }
    for (int r = 0; r < 4; ++r) {
        if (used[r])
            continue;
        // closed loop among the four ports
        int z = 4 * c + r;
        do {
            used[z % 4] = 1;
            used[joint[z] % 4] = 1;
            z = d.port_pair[joint[z]];
        } while (z != 4 * c + r);
        out.circles++;
    }
    for (int j = 0; j < 4; ++j)
        out.port_pair[4 * c + j] = -1;
    out.sign[c] = 0;
    return out;
}

inline ConwayPolynomial conway_eval(const SkeinDiagram& d, int basepoint) {
    Traversal t = traverse(d, basepoint);
    if (t.first_bad < 0)
        return t.components == 1 ? ConwayPolynomial::one() : ConwayPolynomial();
    int s = d.sign[t.first_bad];
    ConwayPolynomial a = conway_eval(switched(d, t.first_bad), basepoint);
    ConwayPolynomial b = conway_eval(smoothed(d, t.first_bad), basepoint);
    return a + b.shifted() * Rational(s);
}

} // namespace detail

// Validates a PD code and builds the internal skein representation.
inline detail::SkeinDiagram pd_to_skein(const PDCode& pd) {
    int n = (int)pd.crossings.size();
    if (n == 0) {
        detail::SkeinDiagram d;
        d.circles = 1; // crossingless unknot
        return d;
    }
    if (n > 12)
        throw domain_error("PD code: more than 12 crossings");
    int arcs = 2 * n;
    auto next_arc = [&](int x) { return x % arcs + 1; };

    detail::SkeinDiagram d;
    d.port_pair.assign(4 * n, -1);
    d.sign.assign(n, 0);

    std::vector<int> arc_out(arcs + 1, -1), arc_in(arcs + 1, -1);
    auto place = [&](std::vector<int>& where, int arc, int port) {
        if (arc < 1 || arc > arcs)
            throw structure_error("PD code: arc label out of range");
        if (where[arc] != -1)
            throw structure_error("PD code: arc used twice in the same role");
        where[arc] = port;
    };

    // A crossing can admit both over-orientations by arc labels alone
    // (only with two arcs in total); disambiguate by role consistency.
    std::function<void(int)> place_from;
    place_from = [&](int c) {
        if (c == n)
            return;
        auto [a, b, cc, dd] = pd.crossings[c];
        if (cc != next_arc(a))
            throw structure_error("PD code: under-strand arcs not consecutive");
        std::vector<int> signs;
        if (b == next_arc(dd))
            signs.push_back(+1); // over-strand runs d -> b
        if (dd == next_arc(b))
            signs.push_back(-1); // over-strand runs b -> d
        if (signs.empty())
            throw structure_error("PD code: over-strand arcs not consecutive");
        std::vector<int> save_out = arc_out, save_in = arc_in;
        for (size_t k = 0; k < signs.size(); ++k) {
            try {
                d.sign[c] = signs[k];
                place(arc_in, a, 4 * c + 0);
                place(arc_out, cc, 4 * c + 2);
                if (signs[k] > 0) {
                    place(arc_in, dd, 4 * c + 3);
                    place(arc_out, b, 4 * c + 1);
                } else {
                    place(arc_in, b, 4 * c + 1);
                    place(arc_out, dd, 4 * c + 3);
                }
                place_from(c + 1);
                return;
            } catch (const structure_error&) {
                if (k + 1 == signs.size())
                    throw;
                arc_out = save_out;
                arc_in = save_in;
            }
        }
    };
    place_from(0);
    for (int x = 1; x <= arcs; ++x) {
        if (arc_out[x] < 0 || arc_in[x] < 0)
            throw structure_error("PD code: arc " + std::to_string(x) +
                                  " does not appear exactly twice");
        d.port_pair[arc_out[x]] = arc_in[x];
        d.port_pair[arc_in[x]] = arc_out[x];
    }
    // knots only: the traversal must cover everything in one component
    detail::Traversal t = detail::traverse(d, 0);
    if (t.components != 1)
        throw structure_error("PD code: not a single-component knot diagram");
    return d;
}

// Conway polynomial by the skein recursion with the descending-diagram
// termination strategy. The basepoint selects the traversal start; the
// result is independent of it.
inline ConwayPolynomial conway_from_pd(const PDCode& pd, int basepoint = 0) {
    ConwayPolynomial c = detail::conway_eval(pd_to_skein(pd), basepoint);
    if (!c.even_powers_only() || !c.coeff(0).is_one())
        throw internal_error("conway_from_pd: knot polynomial shape violated");
    return c;
}

// A(t) = C(z) at z^2 = t - 2 + 1/t.
inline SymmetricLaurent conway_to_alexander(const ConwayPolynomial& c) {
    if (!c.even_powers_only())
        throw domain_error("conway_to_alexander: odd powers present");
    SymmetricLaurent zz(1, {Rational(1), Rational(-2), Rational(1)});
    SymmetricLaurent acc = SymmetricLaurent::constant(c.coeff(0));
    SymmetricLaurent p = SymmetricLaurent::one();
    for (int k = 2; k <= c.degree(); k += 2) {
        p = p * zz;
        acc = acc + p * c.coeff(k);
    }
    return acc;
}

// nu(h) * C(e^{h/2}-e^{-h/2}) as a truncated series.
inline TruncatedSeries renormalized_conway(const ConwayPolynomial& c, int order) {
    if (order < 0)
        throw domain_error("renormalized_conway: negative order");
    // e^{h/2} - e^{-h/2}
    TruncatedSeries s(order);
    for (int j = 1; j <= order; j += 2)
        s.set_coeff(j, Rational(1, 2).pow(j - 1) * Rational(1, 2) * Rational(2) /
                           rational_factorial(j));
    TruncatedSeries acc = TruncatedSeries::constant(c.coeff(0), order);
    TruncatedSeries p = TruncatedSeries::constant(Rational(1), order);
    for (int k = 1; k <= c.degree(); ++k) {
        p = p * s;
        if (!c.coeff(k).is_zero())
            acc = acc + p * c.coeff(k);
    }
    return nu_series(order) * acc;
}

// det(t^{1/2} V - t^{-1/2} V^T), normalized symmetric with value 1 at t=1.
inline SymmetricLaurent alexander_from_seifert(const SeifertMatrix& sm) {
    sm.validate();
    int n = sm.size();
    int g = n / 2;
    // P(t) = det(t V - V^T) over Z[t], by expansion over column subsets.
    using Poly = std::vector<Rational>; // degree <= n
    std::map<unsigned, Poly> memo;
    std::function<Poly(int, unsigned)> det = [&](int row, unsigned cols) -> Poly {
        if (row == n)
            return Poly{Rational(1)};
        auto it = memo.find(cols);
        if (it != memo.end())
            return it->second;
        Poly acc(n + 1);
        int sign = 1;
        for (int j = 0; j < n; ++j) {
            if (!(cols & (1u << j)))
                continue;
            // entry (row, j): t V[row][j] - V[j][row]
            Rational lin(sm.v[row][j]), cst(-sm.v[j][row]);
            if (!lin.is_zero() || !cst.is_zero()) {
                Poly sub = det(row + 1, cols & ~(1u << j));
                for (int k = 0; k < (int)sub.size(); ++k) {
                    if (sub[k].is_zero())
                        continue;
                    Rational s = Rational(sign) * sub[k];
                    acc[k] += s * cst;
                    acc[k + 1] += s * lin;
                }
            }
            sign = -sign;
        }
        memo.emplace(cols, acc);
        return acc;
    };
    Poly p = det(0, n == 0 ? 0 : (1u << n) - 1);
    if (n == 0)
        p = Poly{Rational(1)};

    Rational at_one;
    for (const auto& v : p)
        at_one += v;
    if (!at_one.is_one())
        throw domain_error("alexander_from_seifert: det(V - V^T) != 1, not a Seifert matrix");

    // A = t^{-g} P: powers k - g for k = 0..n.
    std::vector<Rational> coeffs(2 * g + 1);
    for (int k = 0; k <= n && k < (int)p.size(); ++k)
        coeffs[k] = p[k];
    return SymmetricLaurent(g, coeffs);
}

// Bundled table entries, cross-validated by the test suite.
struct KnotEntry {
    std::string name;
    PDCode pd;
    SeifertMatrix seifert;
};

inline const std::vector<KnotEntry>& knot_table() {
    static const std::vector<KnotEntry> table = {
        {"unknot", PDCode{{}}, SeifertMatrix{{}}},
        {"trefoil",
         PDCode{{{{1, 4, 2, 5}}, {{3, 6, 4, 1}}, {{5, 2, 6, 3}}}},
         SeifertMatrix{{{-1, 1}, {0, -1}}}},
        {"figure8",
         PDCode{{{{4, 2, 5, 1}}, {{8, 6, 1, 5}}, {{6, 3, 7, 4}}, {{2, 7, 3, 8}}}},
         SeifertMatrix{{{1, 1}, {0, -1}}}},
        {"5_1",
         PDCode{{{{1, 6, 2, 7}}, {{3, 8, 4, 9}}, {{5, 10, 6, 1}}, {{7, 2, 8, 3}}, {{9, 4, 10, 5}}}},
         SeifertMatrix{{{-1, 1, 0, 0}, {0, -1, 1, 0}, {0, 0, -1, 1}, {0, 0, 0, -1}}}},
        {"5_2",
         PDCode{{{{1, 4, 2, 5}}, {{3, 8, 4, 9}}, {{5, 10, 6, 1}}, {{9, 6, 10, 7}}, {{7, 2, 8, 3}}}},
         SeifertMatrix{{{1, 1}, {0, 2}}}},
        {"6_1",
         PDCode{{{{1, 4, 2, 5}},
                 {{7, 10, 8, 11}},
                 {{3, 9, 4, 8}},
                 {{9, 3, 10, 2}},
                 {{5, 12, 6, 1}},
                 {{11, 6, 12, 7}}}},
         SeifertMatrix{{{1, 1}, {0, -2}}}},
    };
    return table;
}

inline const KnotEntry& knot_by_name(const std::string& name) {
    for (const auto& e : knot_table())
        if (e.name == name)
            return e;
    throw domain_error("unknown knot name: " + name);
}

} // namespace lmow
