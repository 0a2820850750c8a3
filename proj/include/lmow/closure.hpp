#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "lmow/canonical.hpp"
#include "lmow/diagram.hpp"
#include "lmow/errors.hpp"

namespace lmow {

// Removes the darts in `drop` and reconnects the surviving structure.
// Darts listed in `joints` (all of which must be dropped) are fused in
// pairs: the edge ending at one joint dart continues into the edge ending
// at its partner. Chains that close up with no surviving endpoint become
// circle components. Dropped darts not mentioned in any joint must have
// dropped partners (their edges simply disappear along with the vertices).
inline UniTrivalentDiagram rewire(const UniTrivalentDiagram& d,
                                  const std::vector<std::pair<int, int>>& joints,
                                  const std::vector<int>& drop) {
    int n = d.dart_count();
    std::vector<int> joint(n, -1);
    std::vector<char> dropped(n, 0);
    for (int x : drop)
        dropped[x] = 1;
    for (const auto& [a, b] : joints) {
        if (!dropped[a] || !dropped[b])
            throw internal_error("rewire: joint darts must be dropped");
        joint[a] = b;
        joint[b] = a;
    }

    UniTrivalentDiagram out;
    out.circles = d.circles;

    std::vector<int> remap(n, -1);
    int m = 0;
    for (int x = 0; x < n; ++x)
        if (!dropped[x])
            remap[x] = m++;

    out.pairing.assign(m, -1);
    std::vector<char> used(n, 0);
    for (int x = 0; x < n; ++x) {
        if (dropped[x] || out.pairing[remap[x]] >= 0)
            continue;
        // Walk from the survivor through joint chains to the far survivor.
        int z = d.pairing[x];
        while (dropped[z]) {
            if (joint[z] < 0)
                throw internal_error("rewire: dangling dropped dart");
            used[z] = 1;
            used[joint[z]] = 1;
            z = d.pairing[joint[z]];
        }
        out.pairing[remap[x]] = remap[z];
        out.pairing[remap[z]] = remap[x];
    }
    // Closed chains entirely inside the connectors become circles.
    for (int x = 0; x < n; ++x) {
        if (joint[x] < 0 || used[x])
            continue;
        int z = x;
        do {
            used[z] = 1;
            used[joint[z]] = 1;
            z = d.pairing[joint[z]];
            if (joint[z] < 0)
                throw internal_error("rewire: chain left the connector set");
        } while (z != x);
        out.circles++;
    }

    for (const auto& t : d.trivalent) {
        int dc = dropped[t[0]] + dropped[t[1]] + dropped[t[2]];
        if (dc == 0)
            out.trivalent.push_back({remap[t[0]], remap[t[1]], remap[t[2]]});
        else if (dc != 3)
            throw internal_error("rewire: partially dropped trivalent vertex");
    }
    for (int x : d.univalent)
        if (!dropped[x])
            out.univalent.push_back(remap[x]);
    return out;
}

namespace detail {

inline void enumerate_matchings(std::vector<int>& legs,
                                std::vector<std::pair<int, int>>& current,
                                const UniTrivalentDiagram& d,
                                DiagramCombination& acc, size_t& count) {
    if (legs.empty()) {
        ++count;
        acc.add(rewire(d, current, [&] {
                    std::vector<int> drop;
                    for (const auto& [a, b] : current) {
                        drop.push_back(a);
                        drop.push_back(b);
                    }
                    return drop;
                }()),
                Rational(1));
        return;
    }
    int first = legs.front();
    for (size_t i = 1; i < legs.size(); ++i) {
        std::vector<int> rest;
        for (size_t j = 1; j < legs.size(); ++j)
            if (j != i)
                rest.push_back(legs[j]);
        current.emplace_back(first, legs[i]);
        enumerate_matchings(rest, current, d, acc, count);
        current.pop_back();
    }
}

} // namespace detail

// Sum over all (2k-1)!! pairings of the legs; each pairing fuses the two
// leg edges into one. `enumerated` reports the raw matching count before
// canonical merging.
inline DiagramCombination close(const UniTrivalentDiagram& d, size_t* enumerated = nullptr) {
    if (d.legs() % 2 != 0)
        throw domain_error("close: odd number of legs");
    DiagramCombination acc;
    std::vector<int> legs = d.univalent;
    std::sort(legs.begin(), legs.end());
    std::vector<std::pair<int, int>> current;
    size_t count = 0;
    detail::enumerate_matchings(legs, current, d, acc, count);
    if (enumerated)
        *enumerated = count;
    return acc;
}

inline DiagramCombination close(const DiagramCombination& x) {
    DiagramCombination acc;
    for (const auto& [k, c] : x.terms())
        acc += close(k.repr) * c;
    return acc;
}

// O_{-2m}: each diagram with c circle components becomes (-2m)^c times the
// circle-free diagram.
inline DiagramCombination o_substitute(const DiagramCombination& x, int m) {
    if (m < 0)
        throw domain_error("o_substitute: m must be nonnegative");
    DiagramCombination out;
    for (const auto& [k, c] : x.terms()) {
        int circ = k.circles();
        Rational factor = Rational(-2 * (long)m).pow(circ);
        if (factor.is_zero())
            continue;
        out.add_canonical(k.without_circles(), c * factor);
    }
    return out;
}

// iota_m(C) = O_{-2m}(close(C)) when C has exactly 2m legs, else 0.
inline DiagramCombination iota(const UniTrivalentDiagram& d, int m) {
    if (m < 0)
        throw domain_error("iota: m must be nonnegative");
    if (d.legs() != 2 * m)
        return DiagramCombination::zero();
    return o_substitute(close(d), m);
}

inline DiagramCombination iota(const DiagramCombination& x, int m) {
    DiagramCombination acc;
    for (const auto& [k, c] : x.terms())
        acc += iota(k.repr, m) * c;
    return acc;
}

// O_{-2m}(close(C u I)) == (-2)(m-k) O_{-2m}(close(C)) for C with 2k legs.
inline bool interval_identity_check(const UniTrivalentDiagram& c, int m) {
    if (c.legs() % 2 != 0)
        throw domain_error("interval_identity_check: odd leg count");
    int k = c.legs() / 2;
    DiagramCombination lhs = o_substitute(close(disjoint_union(c, interval())), m);
    DiagramCombination rhs = o_substitute(close(c), m) * Rational(-2 * ((long)m - k));
    return lhs == rhs;
}

// A formal series in even wheels: monomials are multisets of even wheel
// sizes, graded by their total (= number of legs = diagram degree).
class WheelSeries {
  public:
    using Terms = std::map<std::vector<int>, Rational>;

    explicit WheelSeries(int max_degree = 0) : max_degree_(max_degree) {}

    static WheelSeries unit(int max_degree) {
        WheelSeries w(max_degree);
        w.terms_[{}] = Rational(1);
        return w;
    }

    int max_degree() const { return max_degree_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(const std::vector<int>& mono) const {
        auto it = terms_.find(mono);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    static int mono_degree(const std::vector<int>& mono) {
        int s = 0;
        for (int w : mono)
            s += w;
        return s;
    }

    void add(std::vector<int> mono, const Rational& v) {
        if (v.is_zero())
            return;
        for (int w : mono)
            if (w <= 0 || w % 2 != 0)
                throw domain_error("WheelSeries: wheel sizes must be positive and even");
        if (mono_degree(mono) > max_degree_)
            return;
        std::sort(mono.begin(), mono.end());
        auto it = terms_.find(mono);
        if (it == terms_.end())
            terms_.emplace(std::move(mono), v);
        else {
            it->second += v;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    WheelSeries& operator+=(const WheelSeries& o) {
        for (const auto& [k, v] : o.terms_)
            add(k, v);
        return *this;
    }

    WheelSeries operator*(const Rational& v) const {
        WheelSeries r(max_degree_);
        if (v.is_zero())
            return r;
        for (const auto& [k, c] : terms_)
            r.terms_.emplace(k, c * v);
        return r;
    }

    // Disjoint-union product, truncated by total degree.
    friend WheelSeries product(const WheelSeries& a, const WheelSeries& b) {
        WheelSeries r(std::min(a.max_degree_, b.max_degree_));
        for (const auto& [ka, ca] : a.terms_) {
            for (const auto& [kb, cb] : b.terms_) {
                std::vector<int> mono = ka;
                mono.insert(mono.end(), kb.begin(), kb.end());
                r.add(std::move(mono), ca * cb);
            }
        }
        return r;
    }

    friend bool operator==(const WheelSeries& a, const WheelSeries& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const WheelSeries& a, const WheelSeries& b) { return !(a == b); }

    // Realizes each monomial as a disjoint union of wheels.
    DiagramCombination to_combination() const {
        DiagramCombination out;
        for (const auto& [mono, c] : terms_) {
            UniTrivalentDiagram d = empty_diagram();
            for (int w : mono)
                d = disjoint_union(d, wheel(w));
            out.add(d, c);
        }
        return out;
    }

  private:
    int max_degree_;
    Terms terms_;
};

// Sign relating the canonical representative of the n-wheel class to the
// coherently oriented wheel built by wheel(n). Pure cache, guarded for
// concurrent use.
inline int wheel_orientation_sign(int n) {
    static std::mutex mu;
    static std::map<int, int> memo;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(n);
        if (it != memo.end())
            return it->second;
    }
    CanonResult r = canonicalize(wheel(n));
    if (r.zero)
        throw internal_error("wheel_orientation_sign: odd wheel");
    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(n, r.sign);
    return r.sign;
}

// Projection of an interval-free combination onto its all-wheel part.
// General deframing is not available; on B' this is the projection along
// the excess summand. Monomial coefficients are stated relative to the
// coherently oriented wheels, matching WheelSeries::to_combination.
inline WheelSeries p_wh(const DiagramCombination& x) {
    int maxdeg = 0;
    for (const auto& [k, c] : x.terms())
        maxdeg = std::max(maxdeg, k.degree());
    WheelSeries out(maxdeg);
    for (const auto& [k, c] : x.terms()) {
        if (k.circles() > 0)
            throw structure_error("p_wh: circle components are not Chinese characters");
        Classification cl = component_classification(k.repr);
        if (!cl.in_B_prime())
            throw domain_error("p_wh: input has an interval component (not in B')");
        if (!cl.in_B_wheels())
            continue;
        DartIndex ix(k.repr);
        std::vector<int> mono;
        int orient = 1;
        for (const auto& comp : dart_components(k.repr)) {
            int legs_here = 0;
            for (int d : comp)
                if (!ix.is_trivalent(d))
                    legs_here++;
            orient *= wheel_orientation_sign(legs_here);
            mono.push_back(legs_here);
        }
        out.add(std::move(mono), c * Rational(orient));
    }
    return out;
}

// Fact 2 with a = c = 1: the degree-m part of iota_m(b) equals the closure
// of the wheel part of the degree-2m piece of b.
inline bool fact2_check(const DiagramCombination& b, int m) {
    DiagramCombination lhs = iota(b, m).degree_part(m);
    DiagramCombination rhs = close(p_wh(b.degree_part(2 * m)).to_combination());
    return lhs == rhs;
}

} // namespace lmow
