#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "lmow/canonical.hpp"
#include "lmow/closure.hpp"
#include "lmow/errors.hpp"

namespace lmow {

namespace detail {

// All loopless 3-regular multigraphs on `v` labeled vertices, as edge
// multiset assignments over the upper triangle. Self-loops are excluded
// outright: they canonicalize to zero.
inline void enumerate_multigraphs(int v, std::vector<std::vector<std::pair<int, int>>>& out_edges,
                                  std::vector<int>& deg, std::vector<std::pair<int, int>>& acc,
                                  int i, int j) {
    if (i == v) {
        out_edges.push_back(acc);
        return;
    }
    if (j == v) {
        if (deg[i] != 3)
            return;
        enumerate_multigraphs(v, out_edges, deg, acc, i + 1, i + 2);
        return;
    }
    int cap = std::min(3 - deg[i], 3 - deg[j]);
    for (int m = 0; m <= cap; ++m) {
        deg[i] += m;
        deg[j] += m;
        for (int t = 0; t < m; ++t)
            acc.emplace_back(i, j);
        enumerate_multigraphs(v, out_edges, deg, acc, i, j + 1);
        for (int t = 0; t < m; ++t)
            acc.pop_back();
        deg[i] -= m;
        deg[j] -= m;
    }
}

inline UniTrivalentDiagram diagram_from_edges(int v, const std::vector<std::pair<int, int>>& edges) {
    UniTrivalentDiagram d;
    d.pairing.assign(3 * v, -1);
    std::vector<int> used(v, 0);
    for (const auto& [a, b] : edges) {
        int da = 3 * a + used[a]++;
        int db = 3 * b + used[b]++;
        d.pairing[da] = db;
        d.pairing[db] = da;
    }
    for (int i = 0; i < v; ++i)
        d.trivalent.push_back({3 * i, 3 * i + 1, 3 * i + 2});
    return d;
}

} // namespace detail

// All isomorphism classes of zero-leg trivalent diagrams of the given
// degree (2n vertices), excluding antisymmetry-zero classes; disconnected
// graphs included. Supported for n <= 4.
inline const std::vector<CanonicalDiagram>& enumerate_trivalent(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<CanonicalDiagram>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto hit = cache.find(n);
        if (hit != cache.end())
            return hit->second;
    }
    if (n < 0 || n > 4)
        throw domain_error("enumerate_trivalent: degree out of supported range 0..4");

    std::vector<CanonicalDiagram> basis;
    if (n == 0) {
        basis.push_back(canonicalize(empty_diagram()).canon);
    } else {
        int v = 2 * n;
        std::vector<std::vector<std::pair<int, int>>> all_edges;
        std::vector<int> deg(v, 0);
        std::vector<std::pair<int, int>> acc;
        detail::enumerate_multigraphs(v, all_edges, deg, acc, 0, 1);
        std::map<std::vector<int32_t>, CanonicalDiagram> classes;
        for (const auto& edges : all_edges) {
            CanonResult r = canonicalize(detail::diagram_from_edges(v, edges));
            if (r.zero)
                continue;
            classes.emplace(r.canon.key, r.canon);
        }
        for (auto& [k, c] : classes)
            basis.push_back(std::move(c));
    }
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(n, std::move(basis)).first->second;
}

// The three-term IHX relation attached to one edge of a zero-leg graph:
// [G] - [H] + [X], where the bar's outer strands (A,B | C,D) are reglued
// as (A,C | B,D) and (A,D | B,C) with the written cyclic orders.
inline DiagramCombination ihx_relation(const UniTrivalentDiagram& g, int dart) {
    DartIndex ix(g);
    int p = dart, q = g.pairing[dart];
    if (!ix.is_trivalent(p) || !ix.is_trivalent(q) || ix.cell_of[p] == ix.cell_of[q])
        throw domain_error("ihx_relation: edge must join two distinct trivalent vertices");
    int A = ix.rot_next[p], B = ix.rot_next[A];
    int C = ix.rot_next[q], D = ix.rot_next[C];

    auto rewired = [&](int u1, int u2, int v1, int v2) {
        UniTrivalentDiagram r = g;
        r.trivalent[ix.cell_of[p]] = {p, u1, u2};
        r.trivalent[ix.cell_of[q]] = {q, v1, v2};
        return r;
    };

    DiagramCombination rel;
    rel.add(g, Rational(1));
    rel.add(rewired(A, C, B, D), Rational(-1));
    rel.add(rewired(A, D, B, C), Rational(1));
    return rel;
}

// Every IHX relation of every basis graph, one combination per (graph, edge).
inline std::vector<DiagramCombination> ihx_relations(const std::vector<CanonicalDiagram>& basis) {
    std::vector<DiagramCombination> rows;
    for (const auto& b : basis) {
        const UniTrivalentDiagram& g = b.repr;
        DartIndex ix(g);
        for (int p = 0; p < g.dart_count(); ++p) {
            int q = g.pairing[p];
            if (p < q && ix.cell_of[p] != ix.cell_of[q]) {
                DiagramCombination rel = ihx_relation(g, p);
                if (!rel.is_zero())
                    rows.push_back(std::move(rel));
            }
        }
    }
    return rows;
}

// A fixed degree of the trivalent-graph algebra presented as an enumerated
// ambient basis together with the row-reduced IHX relation matrix.
class QuotientSpace {
  public:
    explicit QuotientSpace(int degree) : degree_(degree) {
        basis_ = enumerate_trivalent(degree);
        for (int i = 0; i < (int)basis_.size(); ++i)
            index_.emplace(basis_[i].key, i);
        for (const auto& rel : ihx_relations(basis_))
            insert_row(to_vector(rel));
        // Self-consistency: every relation reduces to zero against the rows.
        for (const auto& rel : ihx_relations(basis_)) {
            std::vector<Rational> v = reduce(to_vector(rel));
            for (const auto& x : v)
                if (!x.is_zero())
                    throw internal_error("QuotientSpace: relation outside its own row space");
        }
    }

    int degree() const { return degree_; }
    const std::vector<CanonicalDiagram>& ambient_basis() const { return basis_; }
    int ambient_dim() const { return (int)basis_.size(); }
    int rank() const { return (int)rows_.size(); }
    int quotient_dim() const { return ambient_dim() - rank(); }

    // Ambient coordinates of a homogeneous zero-leg combination.
    std::vector<Rational> to_vector(const DiagramCombination& x) const {
        std::vector<Rational> v(basis_.size());
        for (const auto& [k, c] : x.terms()) {
            if (k.degree() != degree_ || k.legs() != 0)
                throw domain_error("QuotientSpace: term of wrong degree or with legs");
            if (k.circles() != 0)
                throw domain_error("QuotientSpace: circle components must be substituted away");
            auto it = index_.find(k.key);
            if (it == index_.end())
                throw internal_error("QuotientSpace: class missing from ambient basis");
            v[it->second] = c;
        }
        return v;
    }

    // Reduced coset representative; equal vectors mean equal classes.
    std::vector<Rational> coordinates(const DiagramCombination& x) const {
        return reduce(to_vector(x));
    }

    bool equal_mod_relations(const DiagramCombination& x, const DiagramCombination& y) const {
        return coordinates(x) == coordinates(y);
    }

    // Rank of the span of the images in the quotient.
    int map_rank(const std::vector<DiagramCombination>& images) const {
        std::vector<std::vector<Rational>> acc;
        std::vector<int> pivots;
        for (const auto& img : images) {
            std::vector<Rational> v = coordinates(img);
            for (size_t r = 0; r < acc.size(); ++r)
                if (!v[pivots[r]].is_zero()) {
                    Rational f = v[pivots[r]];
                    for (size_t k = 0; k < v.size(); ++k)
                        v[k] -= f * acc[r][k];
                }
            int piv = find_pivot(v);
            if (piv >= 0) {
                Rational inv = v[piv].reciprocal();
                for (auto& x : v)
                    x *= inv;
                acc.push_back(std::move(v));
                pivots.push_back(piv);
            }
        }
        return (int)acc.size();
    }

    const std::vector<std::vector<Rational>>& relation_rows() const { return rows_; }

  private:
    static int find_pivot(const std::vector<Rational>& v) {
        for (size_t k = 0; k < v.size(); ++k)
            if (!v[k].is_zero())
                return (int)k;
        return -1;
    }

    std::vector<Rational> reduce(std::vector<Rational> v) const {
        for (size_t r = 0; r < rows_.size(); ++r) {
            const Rational& x = v[pivots_[r]];
            if (!x.is_zero()) {
                Rational f = x;
                for (size_t k = 0; k < v.size(); ++k)
                    v[k] -= f * rows_[r][k];
            }
        }
        return v;
    }

    void insert_row(std::vector<Rational> v) {
        v = reduce(std::move(v));
        int piv = find_pivot(v);
        if (piv < 0)
            return;
        Rational inv = v[piv].reciprocal();
        for (auto& x : v)
            x *= inv;
        // Keep the matrix fully reduced.
        for (size_t r = 0; r < rows_.size(); ++r) {
            Rational f = rows_[r][piv];
            if (!f.is_zero())
                for (size_t k = 0; k < v.size(); ++k)
                    rows_[r][k] -= f * v[k];
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(piv);
    }

    int degree_;
    std::vector<CanonicalDiagram> basis_;
    std::map<std::vector<int32_t>, int> index_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<int> pivots_;
};

// Shared immutable spaces, built once per degree.
inline const QuotientSpace& quotient_space(int degree) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<QuotientSpace>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(degree);
        if (it != cache.end())
            return *it->second;
    }
    auto built = std::make_unique<QuotientSpace>(degree);
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(degree);
    if (it == cache.end())
        it = cache.emplace(degree, std::move(built)).first;
    return *it->second;
}

} // namespace lmow
