#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "lmow/diagram.hpp"
#include "lmow/rational.hpp"

namespace lmow {

// Canonical representative of an isomorphism class of diagrams modulo
// relabeling, with antisymmetry signs tracked separately. Two diagrams are
// equal up to sign iff their keys are equal.
struct CanonicalDiagram {
    UniTrivalentDiagram repr;
    std::vector<int32_t> key;

    int degree() const { return repr.degree(); }
    int legs() const { return repr.legs(); }
    int circles() const { return repr.circles; }

    // Same class with the circle components stripped; the leading key
    // entry is the circle count.
    CanonicalDiagram without_circles() const {
        CanonicalDiagram c = *this;
        c.repr.circles = 0;
        c.key[0] = 0;
        return c;
    }

    friend bool operator<(const CanonicalDiagram& a, const CanonicalDiagram& b) {
        return a.key < b.key;
    }
    friend bool operator==(const CanonicalDiagram& a, const CanonicalDiagram& b) {
        return a.key == b.key;
    }
};

struct CanonResult {
    bool zero = false;
    int sign = 1;
    CanonicalDiagram canon;
};

namespace detail {

// Minimal traversal code of one connected component. Labels are assigned in
// discovery order; expanding a trivalent vertex labels its two remaining
// darts consecutively, in either cyclic direction (reversal costs a sign).
// The emitted token stream, minimized over start darts and direction
// choices, is a complete invariant of the component up to sign.
class ComponentCoder {
  public:
    ComponentCoder(const UniTrivalentDiagram& d, const DartIndex& ix,
                   const std::vector<int>& comp)
        : d_(d), ix_(ix), comp_(comp), n_((int)comp.size()) {
        label_.assign(d.dart_count(), -1);
        entry_.assign(d.trivalent.size(), -1);
        best_.assign(2 * n_, INT32_MAX);
    }

    // Returns false when the component admits a sign-reversing automorphism.
    bool run(std::vector<int32_t>& best_out, int& sign_out) {
        for (int start : comp_) {
            reset();
            order_.push_back(start);
            label_[start] = 0;
            next_ = 1;
            if (ix_.is_trivalent(start)) {
                int cell = ix_.cell_of[start];
                int r1 = ix_.rot_next[start], r2 = ix_.rot_next[r1];
                entry_[cell] = start;
                assign(r1);
                assign(r2);
                process(0, 0, +1);
                unassign(r2);
                unassign(r1);
                assign(r2);
                assign(r1);
                process(0, 0, -1);
                unassign(r1);
                unassign(r2);
                entry_[cell] = -1;
            } else {
                process(0, 0, +1);
            }
            label_[start] = -1;
            order_.clear();
        }
        if (seen_pos_ && seen_neg_)
            return false;
        best_out = best_;
        sign_out = seen_pos_ ? +1 : -1;
        return true;
    }

  private:
    void reset() {
        tokens_.clear();
        next_ = 0;
    }

    void assign(int dart) {
        label_[dart] = next_++;
        order_.push_back(dart);
    }

    void unassign(int dart) {
        label_[dart] = -1;
        order_.pop_back();
        --next_;
    }

    // cmp: 0 while equal to the best prefix, 1 once strictly smaller.
    // Returns the new cmp, or -1 to prune.
    int push_token(int32_t t, int cmp) {
        int k = (int)tokens_.size();
        tokens_.push_back(t);
        if (cmp == 0) {
            if (t > best_[k])
                return -1;
            if (t < best_[k])
                return 1;
        }
        return cmp;
    }

    void pop_token() { tokens_.pop_back(); }

    void process(int pos, int cmp, int sign) {
        if (epoch_ != best_epoch_) {
            // The best code was replaced deeper in the search; every live
            // frame lies on its path, so the relation resets to "equal".
            cmp = 0;
            epoch_ = best_epoch_;
        }
        if (pos == n_) {
            if (cmp == 1) {
                best_ = tokens_;
                seen_pos_ = sign > 0;
                seen_neg_ = sign < 0;
                ++best_epoch_;
                epoch_ = best_epoch_;
            } else {
                seen_pos_ = seen_pos_ || sign > 0;
                seen_neg_ = seen_neg_ || sign < 0;
            }
            return;
        }
        int dart = order_[pos];
        int32_t ct;
        if (!ix_.is_trivalent(dart))
            ct = 1;
        else
            ct = entry_[ix_.cell_of[dart]] == dart ? 3 : 0;
        int c1 = push_token(ct, cmp);
        if (c1 < 0) {
            pop_token();
            return;
        }
        int partner = d_.pairing[dart];
        if (label_[partner] < 0) {
            assign(partner);
            int c2 = push_token(label_[partner], c1);
            if (c2 >= 0) {
                if (ix_.is_trivalent(partner)) {
                    int cell = ix_.cell_of[partner];
                    int r1 = ix_.rot_next[partner], r2 = ix_.rot_next[r1];
                    entry_[cell] = partner;
                    assign(r1);
                    assign(r2);
                    process(pos + 1, c2, sign);
                    unassign(r2);
                    unassign(r1);
                    assign(r2);
                    assign(r1);
                    process(pos + 1, c2, -sign);
                    unassign(r1);
                    unassign(r2);
                    entry_[cell] = -1;
                } else {
                    process(pos + 1, c2, sign);
                }
            }
            pop_token();
            unassign(partner);
        } else {
            int c2 = push_token(label_[partner], c1);
            if (c2 >= 0)
                process(pos + 1, c2, sign);
            pop_token();
        }
        pop_token();
    }

    const UniTrivalentDiagram& d_;
    const DartIndex& ix_;
    const std::vector<int>& comp_;
    int n_;
    std::vector<int> label_, entry_, order_;
    std::vector<int32_t> tokens_, best_;
    int next_ = 0;
    bool seen_pos_ = false, seen_neg_ = false;
    long epoch_ = 0, best_epoch_ = 0;
};

// Rebuilds a component structure from its token code.
inline void append_component(UniTrivalentDiagram& out, const std::vector<int32_t>& tokens) {
    int off = out.dart_count();
    int n = (int)tokens.size() / 2;
    for (int i = 0; i < n; ++i)
        out.pairing.push_back(off + tokens[2 * i + 1]);
    for (int i = 0; i < n; ++i) {
        if (tokens[2 * i] == 3)
            out.trivalent.push_back({off + i, off + i + 1, off + i + 2});
        else if (tokens[2 * i] == 1)
            out.univalent.push_back(off + i);
    }
}

} // namespace detail

// Canonical form with antisymmetry sign. Returns zero when the diagram has
// an automorphism reversing an odd number of cyclic orders (then it equals
// its own negative).
inline CanonResult canonicalize(const UniTrivalentDiagram& d) {
    d.validate();
    CanonResult res;
    DartIndex ix(d);

    // Fast antisymmetry kills: a self-loop at a trivalent vertex, or two
    // legs attached to the same trivalent vertex, each admit an odd flip
    // automorphism.
    for (const auto& t : d.trivalent) {
        int legs_here = 0;
        for (int x : t) {
            int p = d.pairing[x];
            if (p == t[0] || p == t[1] || p == t[2]) {
                res.zero = true;
                return res;
            }
            if (!ix.is_trivalent(p))
                legs_here++;
        }
        if (legs_here >= 2) {
            res.zero = true;
            return res;
        }
    }

    std::vector<std::vector<int32_t>> codes;
    int total_sign = 1;
    for (const auto& comp : dart_components(d)) {
        detail::ComponentCoder coder(d, ix, comp);
        std::vector<int32_t> code;
        int sign;
        if (!coder.run(code, sign)) {
            res.zero = true;
            return res;
        }
        total_sign *= sign;
        codes.push_back(std::move(code));
    }
    std::sort(codes.begin(), codes.end());

    CanonicalDiagram canon;
    canon.repr.circles = d.circles;
    canon.key.push_back(d.circles);
    canon.key.push_back((int32_t)codes.size());
    for (const auto& code : codes) {
        canon.key.push_back((int32_t)code.size());
        canon.key.insert(canon.key.end(), code.begin(), code.end());
        detail::append_component(canon.repr, code);
    }
    res.sign = total_sign;
    res.canon = std::move(canon);
    return res;
}

// Finite formal sum of canonical diagrams with exact rational coefficients.
class DiagramCombination {
  public:
    using Terms = std::map<CanonicalDiagram, Rational>;

    DiagramCombination() = default;

    static DiagramCombination zero() { return {}; }

    static DiagramCombination unit() { return single(empty_diagram(), Rational(1)); }

    static DiagramCombination single(const UniTrivalentDiagram& d, const Rational& coeff) {
        DiagramCombination c;
        c.add(d, coeff);
        return c;
    }

    void add(const UniTrivalentDiagram& d, const Rational& coeff) {
        if (coeff.is_zero())
            return;
        CanonResult r = canonicalize(d);
        if (r.zero)
            return;
        add_canonical(std::move(r.canon), coeff * Rational(r.sign));
    }

    void add_canonical(CanonicalDiagram canon, const Rational& coeff) {
        if (coeff.is_zero())
            return;
        auto it = terms_.find(canon);
        if (it == terms_.end()) {
            terms_.emplace(std::move(canon), coeff);
        } else {
            it->second += coeff;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    DiagramCombination& operator+=(const DiagramCombination& o) {
        for (const auto& [k, v] : o.terms_)
            add_canonical(k, v);
        return *this;
    }

    friend DiagramCombination operator+(DiagramCombination a, const DiagramCombination& b) {
        return a += b;
    }

    DiagramCombination operator*(const Rational& v) const {
        DiagramCombination r;
        if (v.is_zero())
            return r;
        for (const auto& [k, c] : terms_)
            r.terms_.emplace(k, c * v);
        return r;
    }

    friend DiagramCombination operator-(const DiagramCombination& a, const DiagramCombination& b) {
        DiagramCombination r = a;
        r += b * Rational(-1);
        return r;
    }

    // Bilinear extension of disjoint union.
    friend DiagramCombination product(const DiagramCombination& a, const DiagramCombination& b) {
        DiagramCombination r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                r.add(disjoint_union(ka.repr, kb.repr), ca * cb);
        return r;
    }

    DiagramCombination degree_part(int n) const {
        DiagramCombination r;
        for (const auto& [k, v] : terms_)
            if (k.degree() == n)
                r.terms_.emplace(k, v);
        return r;
    }

    friend bool operator==(const DiagramCombination& a, const DiagramCombination& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const DiagramCombination& a, const DiagramCombination& b) {
        return !(a == b);
    }

  private:
    Terms terms_;
};

} // namespace lmow
