#pragma once

#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lmow/knots.hpp"
#include "lmow/lmo.hpp"
#include "lmow/weights.hpp"

namespace lmow {

struct CriterionResult {
    int number;
    std::string name;
    bool passed;
    std::string detail;
    double seconds;
};

namespace acceptance_detail {

inline UniTrivalentDiagram theta_diagram() {
    UniTrivalentDiagram d;
    d.pairing = {3, 5, 4, 0, 2, 1};
    d.trivalent.push_back({0, 1, 2});
    d.trivalent.push_back({3, 4, 5});
    return d;
}

inline UniTrivalentDiagram chorded_wheel(int n, int chords = 1) {
    UniTrivalentDiagram d = wheel(n);
    std::vector<std::pair<int, int>> joints;
    std::vector<int> drop;
    for (int k = 0; k < chords; ++k) {
        joints.emplace_back(d.univalent[2 * k], d.univalent[2 * k + 1]);
        drop.push_back(d.univalent[2 * k]);
        drop.push_back(d.univalent[2 * k + 1]);
    }
    return rewire(d, joints, drop);
}

inline UniTrivalentDiagram random_wheel_union(std::mt19937& rng, int parts) {
    UniTrivalentDiagram d = empty_diagram();
    for (int i = 0; i < parts; ++i)
        d = disjoint_union(d, wheel(2 + 2 * (int)(rng() % 3)));
    return d;
}

inline UniTrivalentDiagram random_excess_character(std::mt19937& rng) {
    // always contains a component with more trivalent than univalent vertices
    UniTrivalentDiagram d;
    switch (rng() % 3) {
        case 0: d = theta_diagram(); break;
        case 1: d = chorded_wheel(4); break;
        default: d = chorded_wheel(6); break;
    }
    if (rng() % 2)
        d = disjoint_union(d, wheel(2 + 2 * (int)(rng() % 2)));
    return d;
}

inline UniTrivalentDiagram random_interval_free(std::mt19937& rng, int max_legs) {
    UniTrivalentDiagram d = empty_diagram();
    int legs = 0;
    for (int guard = 0; guard < 8; ++guard) {
        UniTrivalentDiagram piece;
        switch (rng() % 4) {
            case 0: piece = theta_diagram(); break;
            case 1: piece = chorded_wheel(4 + 2 * (int)(rng() % 2)); break;
            default: piece = wheel(2 + 2 * (int)(rng() % 3)); break;
        }
        if (legs + piece.legs() > max_legs)
            break;
        legs += piece.legs();
        d = disjoint_union(d, piece);
        if (rng() % 2)
            break;
    }
    if (d.empty())
        d = wheel(2);
    return d;
}

inline std::vector<std::vector<int>> wheel_monomials(int total) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int minw) {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int w = minw; w <= rem; w += 2) {
            cur.push_back(w);
            rec(rem - w, w);
            cur.pop_back();
        }
    };
    rec(total, 2);
    return out;
}

inline DiagramCombination close_monomial(const std::vector<int>& mono) {
    UniTrivalentDiagram d = empty_diagram();
    for (int w : mono)
        d = disjoint_union(d, wheel(w));
    return close(d);
}

using Check = std::function<std::pair<bool, std::string>()>;

inline CriterionResult run(int number, const std::string& name, const Check& fn) {
    auto t0 = std::chrono::steady_clock::now();
    CriterionResult r{number, name, false, "", 0.0};
    try {
        auto [ok, detail] = fn();
        r.passed = ok;
        r.detail = detail;
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

} // namespace acceptance_detail

inline std::vector<CriterionResult> run_acceptance() {
    using namespace acceptance_detail;
    namespace ad = acceptance_detail;
    std::vector<CriterionResult> out;

    out.push_back(run(1, "wheel coefficients b2, b4", []() -> std::pair<bool, std::string> {
        auto b = b_coefficients(4);
        bool ok = b[2] == Rational(1, 48) && b[4] == Rational(-1, 5760);
        // verify by exponentiating back: -2 sum b h^{2m} = log(nu)
        TruncatedSeries s(4);
        for (auto& [m, v] : b)
            s.set_coeff(m, v * Rational(-2));
        ok = ok && series_exp(s) == nu_series(4);
        return {ok, "b2 = " + b[2].str() + ", b4 = " + b[4].str()};
    }));

    out.push_back(run(2, "closed-wheel weight recursion", []() -> std::pair<bool, std::string> {
        CPolynomial base = w_eval(close(wheel(2)));
        CPolynomial expect_base = CPolynomial::c_power(2) - CPolynomial::c_power(1);
        bool ok = base == expect_base;
        std::string detail = "W(close(w2)) = " + base.str();
        std::string fails;
        CPolynomial prev = base;
        bool at3 = true;
        for (int m = 1; m <= 4; ++m) {
            CPolynomial lhs = w_eval(close(wheel(2 * m + 2)));
            CPolynomial rhs =
                (CPolynomial::c_power(1) + CPolynomial::constant(Rational(2 * m))) * prev;
            if (lhs != rhs) {
                ok = false;
                if (!fails.empty())
                    fails += ", ";
                fails += "m = " + std::to_string(m);
            }
            at3 = at3 && lhs.eval(Rational(3)) == rhs.eval(Rational(3));
            prev = lhs;
        }
        if (!fails.empty()) {
            detail += "; recursion W(close(w_{2m+2})) = (c+2m) W(close(w_{2m})) fails at " +
                      fails +
                      " (the edge-resolution rule is order-sensitive at formal c";
            detail += at3 ? "; every step verified to hold at c = 3)" : ")";
        }
        return {ok, detail};
    }));

    out.push_back(run(3, "antisymmetry vanishing", []() -> std::pair<bool, std::string> {
        bool ok = true;
        for (int k = 0; k <= 4; ++k)
            ok = ok && canonicalize(wheel(2 * k + 1)).zero;
        UniTrivalentDiagram tad;
        tad.pairing = {1, 0, 3, 2};
        tad.trivalent.push_back({0, 2, 1});
        tad.univalent = {3};
        ok = ok && canonicalize(tad).zero;
        UniTrivalentDiagram tad2 = disjoint_union(tad, wheel(2));
        ok = ok && canonicalize(tad2).zero;
        return {ok, "odd wheels w1..w9 and tadpoles vanish"};
    }));

    out.push_back(run(4, "Conway weight system values", []() -> std::pair<bool, std::string> {
        std::mt19937 rng(140);
        bool ok = true;
        for (int t = 0; t < 20; ++t) {
            int parts = 1 + (int)(rng() % 4);
            UniTrivalentDiagram d = random_wheel_union(rng, parts);
            auto v = w_conway(DiagramCombination::single(d, Rational(1)));
            ok = ok && v.size() == 1 && v[d.degree()] == Rational(-2).pow(parts);
        }
        for (int t = 0; t < 20; ++t) {
            UniTrivalentDiagram d = random_excess_character(rng);
            DiagramCombination x = DiagramCombination::single(d, Rational(1));
            ok = ok && !x.is_zero() && w_conway(x).empty();
        }
        return {ok, "(-2)^p on 20 wheel unions, 0 on 20 excess characters"};
    }));

    out.push_back(run(5, "forward/inverse round trip", []() -> std::pair<bool, std::string> {
        std::vector<std::pair<SymmetricLaurent, int>> cases = {
            {SymmetricLaurent::one(), 0},
            {SymmetricLaurent(1, {Rational(1), Rational(-1), Rational(1)}), 1},
            {SymmetricLaurent(1, {Rational(-1), Rational(3), Rational(-1)}), 1},
            {SymmetricLaurent(1, {Rational(2), Rational(-3), Rational(2)}), 1},
        };
        bool ok = true;
        for (const auto& [a, span] : cases)
            ok = ok && lmo_invert(lmo_forward(a, 4), 4, span) == a;
        return {ok, "identity on 1, trefoil, figure-eight, and 5_2 polynomials"};
    }));

    out.push_back(run(6, "closure rank vs quotient dimension", []() -> std::pair<bool, std::string> {
        std::vector<int> expect = {1, 2, 3, 5}; // partitions of 2n into even parts
        bool ok = true;
        std::ostringstream os;
        for (int n = 1; n <= 4; ++n) {
            std::vector<DiagramCombination> imgs;
            for (const auto& mono : ad::wheel_monomials(2 * n))
                imgs.push_back(ad::close_monomial(mono));
            int rank = quotient_space(n).map_rank(imgs);
            ok = ok && (int)imgs.size() == expect[n - 1] && rank == expect[n - 1];
            os << "degree " << n << ": rank " << rank << "/" << quotient_space(n).quotient_dim()
               << (n < 4 ? ", " : "");
        }
        // regression-pinned dimension, derived by the enumeration +
        // row-reduction oracle
        ok = ok && quotient_space(4).quotient_dim() == 6;
        ok = ok && expect[3] < quotient_space(4).quotient_dim();
        return {ok, os.str()};
    }));

    out.push_back(run(7, "interval identity", []() -> std::pair<bool, std::string> {
        std::mt19937 rng(170);
        bool ok = true;
        int done = 0;
        while (done < 50) {
            UniTrivalentDiagram c = random_interval_free(rng, 8);
            int m = (int)(rng() % 5);
            ok = ok && interval_identity_check(c, m);
            ++done;
        }
        return {ok, "50 randomized interval-free characters, m <= 4"};
    }));

    out.push_back(run(8, "contraction identity (a = c = 1)", []() -> std::pair<bool, std::string> {
        std::mt19937 rng(180);
        bool ok = true;
        int done = 0;
        while (done < 30) {
            UniTrivalentDiagram d = random_interval_free(rng, 8);
            if (d.degree() > 6)
                continue;
            std::uniform_int_distribution<long> num(-4, 4), den(1, 4);
            Rational coeff(num(rng), den(rng));
            if (coeff.is_zero())
                coeff = Rational(1);
            DiagramCombination b = DiagramCombination::single(d, coeff);
            for (int m = 0; m <= 3; ++m)
                ok = ok && fact2_check(b, m);
            ++done;
        }
        return {ok, "30 randomized characters of degree <= 6, m <= 3"};
    }));

    out.push_back(run(9, "knot polynomial cross-validation", []() -> std::pair<bool, std::string> {
        bool ok = true;
        for (const auto& e : knot_table())
            ok = ok && conway_to_alexander(conway_from_pd(e.pd)) ==
                           alexander_from_seifert(e.seifert);
        ConwayPolynomial tre = conway_from_pd(knot_by_name("trefoil").pd);
        ok = ok && tre == ConwayPolynomial({Rational(1), Rational(0), Rational(1)});
        ok = ok && alexander_from_seifert(knot_by_name("trefoil").seifert) ==
                       SymmetricLaurent(1, {Rational(1), Rational(-1), Rational(1)});
        ConwayPolynomial fig = conway_from_pd(knot_by_name("figure8").pd);
        ok = ok && fig == ConwayPolynomial({Rational(1), Rational(0), Rational(-1)});
        ok = ok && alexander_from_seifert(knot_by_name("figure8").seifert) ==
                       SymmetricLaurent(1, {Rational(-1), Rational(3), Rational(-1)});
        return {ok, "both routes agree on all bundled knots"};
    }));

    out.push_back(run(10, "weight map well-definedness", []() -> std::pair<bool, std::string> {
        bool ihx_ok = true;
        for (int n = 1; n <= 3 && ihx_ok; ++n)
            for (const auto& r : ihx_relations(enumerate_trivalent(n)))
                if (!w_eval(r).is_zero()) {
                    ihx_ok = false;
                    break;
                }
        std::mt19937 rng(200);
        bool order_ok = true;
        std::vector<UniTrivalentDiagram> pool;
        for (int w = 2; w <= 6; w += 2) {
            DiagramCombination cl = close(wheel(w));
            for (const auto& [k, v] : cl.terms())
                pool.push_back(k.repr);
        }
        for (int t = 0; t < 100 && order_ok; ++t) {
            const UniTrivalentDiagram& d = pool[rng() % pool.size()];
            CPolynomial a = w_eval(d);
            CPolynomial b = w_eval_with_choice(
                d, [&](const std::vector<int>& es) { return (int)(rng() % es.size()); });
            order_ok = a == b;
        }
        bool ok = ihx_ok && order_ok;
        std::string detail;
        if (ok)
            detail = "vanishes on IHX rows, resolution-order invariant";
        else
            detail = std::string(ihx_ok ? "" : "nonzero on IHX relation rows; ") +
                     (order_ok ? "" : "resolution order changes the value; ") +
                     "the parallel-minus-crossed rewrite is inconsistent at formal c "
                     "(consistent at c = 3)";
        return {ok, detail};
    }));

    out.push_back(run(11, "not-in-image detection", []() -> std::pair<bool, std::string> {
        LMOElement z = lmo_forward(SymmetricLaurent::one(), 4);
        const QuotientSpace& q4 = quotient_space(4);
        std::vector<DiagramCombination> imgs;
        for (const auto& mono : ad::wheel_monomials(8))
            imgs.push_back(ad::close_monomial(mono));
        int base = q4.map_rank(imgs);
        for (const auto& b : q4.ambient_basis()) {
            DiagramCombination cand = DiagramCombination::single(b.repr, Rational(1));
            imgs.push_back(cand);
            bool outside = q4.map_rank(imgs) > base;
            imgs.pop_back();
            if (!outside)
                continue;
            LMOElement pert = z;
            pert.parts[4] += cand;
            try {
                lmo_invert(pert, 4, 0);
                return {false, "perturbed element inverted without error"};
            } catch (const not_in_image_error&) {
                return {true, "perturbation outside the closure image is rejected"};
            }
        }
        return {false, "no basis element outside the closure image (contradicts criterion 6)"};
    }));

    return out;
}

} // namespace lmow
