#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <vector>

#include "lmow/errors.hpp"

namespace lmow {

// A uni-trivalent diagram (Chinese character / trivalent graph). Darts are
// indices 0..D-1; `pairing` is a fixed-point-free involution giving the
// edges; vertices partition the darts into univalent singletons and
// trivalent triples. A triple (a,b,c) carries the cyclic order a->b->c->a.
// Vertex-free circle components are counted separately in `circles`.
struct UniTrivalentDiagram {
    int circles = 0;
    std::vector<int> pairing;
    std::vector<std::array<int, 3>> trivalent;
    std::vector<int> univalent;

    int dart_count() const { return (int)pairing.size(); }
    int legs() const { return (int)univalent.size(); }
    int vertex_count() const { return (int)(trivalent.size() + univalent.size()); }

    // Degree is half the number of vertices; circles contribute zero.
    int degree() const { return vertex_count() / 2; }

    bool empty() const { return pairing.empty() && circles == 0; }

    void validate() const {
        int d = dart_count();
        if (circles < 0)
            throw structure_error("diagram: negative circle count");
        std::vector<int> seen(d, 0);
        for (const auto& t : trivalent)
            for (int x : t) {
                if (x < 0 || x >= d)
                    throw structure_error("diagram: dart index out of range");
                seen[x]++;
            }
        for (int x : univalent) {
            if (x < 0 || x >= d)
                throw structure_error("diagram: dart index out of range");
            seen[x]++;
        }
        for (int x = 0; x < d; ++x)
            if (seen[x] != 1)
                throw structure_error("diagram: darts do not partition into vertices");
        for (int x = 0; x < d; ++x) {
            int y = pairing[x];
            if (y < 0 || y >= d || y == x || pairing[y] != x)
                throw structure_error("diagram: pairing is not a fixed-point-free involution");
        }
        if (vertex_count() % 2 != 0)
            throw structure_error("diagram: odd vertex count");
    }
};

inline UniTrivalentDiagram empty_diagram() { return {}; }

inline UniTrivalentDiagram circles_diagram(int k) {
    UniTrivalentDiagram d;
    d.circles = k;
    return d;
}

// The interval: two univalent vertices joined by an edge.
inline UniTrivalentDiagram interval() {
    UniTrivalentDiagram d;
    d.pairing = {1, 0};
    d.univalent = {0, 1};
    return d;
}

// The wheel w_n: an n-cycle of trivalent hubs, each carrying one outward
// leg, with coherent cyclic orders (leg, forward rim, backward rim).
inline UniTrivalentDiagram wheel(int n) {
    if (n <= 0)
        throw domain_error("wheel: n must be positive");
    UniTrivalentDiagram d;
    // hub i owns darts 4i (spoke), 4i+1 (rim forward), 4i+2 (rim backward);
    // leg i is dart 4i+3.
    d.pairing.assign(4 * n, -1);
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        d.pairing[4 * i] = 4 * i + 3;
        d.pairing[4 * i + 3] = 4 * i;
        d.pairing[4 * i + 1] = 4 * j + 2;
        d.pairing[4 * j + 2] = 4 * i + 1;
        d.trivalent.push_back({4 * i, 4 * i + 1, 4 * i + 2});
        d.univalent.push_back(4 * i + 3);
    }
    return d;
}

inline UniTrivalentDiagram disjoint_union(const UniTrivalentDiagram& a,
                                          const UniTrivalentDiagram& b) {
    UniTrivalentDiagram d = a;
    int off = a.dart_count();
    d.circles += b.circles;
    for (int x : b.pairing)
        d.pairing.push_back(x + off);
    for (const auto& t : b.trivalent)
        d.trivalent.push_back({t[0] + off, t[1] + off, t[2] + off});
    for (int x : b.univalent)
        d.univalent.push_back(x + off);
    return d;
}

// Dart-level lookup tables shared by canonicalization and rewiring.
struct DartIndex {
    std::vector<int> cell_of;   // index into trivalent (or ~index into univalent)
    std::vector<int> rot_next;  // next dart in the cyclic order, -1 for legs

    explicit DartIndex(const UniTrivalentDiagram& d)
        : cell_of(d.dart_count(), 0), rot_next(d.dart_count(), -1) {
        for (int c = 0; c < (int)d.trivalent.size(); ++c) {
            const auto& t = d.trivalent[c];
            for (int k = 0; k < 3; ++k) {
                cell_of[t[k]] = c;
                rot_next[t[k]] = t[(k + 1) % 3];
            }
        }
        for (int c = 0; c < (int)d.univalent.size(); ++c)
            cell_of[d.univalent[c]] = ~c;
    }

    bool is_trivalent(int dart) const { return rot_next[dart] >= 0; }
};

// Connected components of the dart structure (circles are not included).
inline std::vector<std::vector<int>> dart_components(const UniTrivalentDiagram& d) {
    int n = d.dart_count();
    std::vector<int> comp(n, -1);
    DartIndex ix(d);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0)
            continue;
        int id = (int)out.size();
        out.emplace_back();
        std::vector<int> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            out[id].push_back(x);
            for (int y : {d.pairing[x], ix.rot_next[x]}) {
                if (y >= 0 && comp[y] < 0) {
                    comp[y] = id;
                    stack.push_back(y);
                }
            }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

struct ComponentInfo {
    int trivalent_count = 0;
    int univalent_count = 0;
    bool is_interval = false;
    bool is_wheel = false;
    int trivalent_excess = 0;
};

struct Classification {
    std::vector<ComponentInfo> components;
    int circles = 0;

    bool in_B_prime() const {
        for (const auto& c : components)
            if (c.is_interval)
                return false;
        return true;
    }
    bool in_B_wheels() const {
        if (circles > 0)
            return false;
        for (const auto& c : components)
            if (!c.is_wheel)
                return false;
        return true;
    }
    bool has_excess_component() const {
        for (const auto& c : components)
            if (c.trivalent_excess > 0)
                return true;
        return false;
    }
};

// Per-component report supporting the B', B'', B_wh membership tests.
inline Classification component_classification(const UniTrivalentDiagram& d) {
    Classification cl;
    cl.circles = d.circles;
    DartIndex ix(d);
    for (const auto& comp : dart_components(d)) {
        ComponentInfo info;
        std::vector<int> triv_cells, univ_cells;
        for (int x : comp) {
            if (ix.is_trivalent(x))
                triv_cells.push_back(ix.cell_of[x]);
            else
                univ_cells.push_back(ix.cell_of[x]);
        }
        std::sort(triv_cells.begin(), triv_cells.end());
        triv_cells.erase(std::unique(triv_cells.begin(), triv_cells.end()), triv_cells.end());
        info.trivalent_count = (int)triv_cells.size();
        info.univalent_count = (int)univ_cells.size();
        info.trivalent_excess = info.trivalent_count - info.univalent_count;
        info.is_interval = info.trivalent_count == 0 && info.univalent_count == 2;
        if (info.trivalent_count >= 1 && info.trivalent_count == info.univalent_count) {
            // A wheel is the case where every hub carries exactly one leg.
            bool wheel_like = true;
            for (int c : triv_cells) {
                int legs_here = 0;
                for (int x : d.trivalent[c])
                    if (!ix.is_trivalent(d.pairing[x]))
                        legs_here++;
                if (legs_here != 1)
                    wheel_like = false;
            }
            info.is_wheel = wheel_like;
        }
        cl.components.push_back(info);
    }
    return cl;
}

} // namespace lmow
