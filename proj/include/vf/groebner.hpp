#pragma once

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "budget.hpp"
#include "poly.hpp"

namespace vf {

// Buchberger with the product and chain pair-elimination criteria.  No F4/F5:
// correctness and determinism over speed at this scale.

template <class K>
Poly<K> normal_form(const Poly<K>& p, const std::vector<Poly<K>>& basis, const TermOrder& ord,
                    Budget& budget = unlimited_budget()) {
    Poly<K> cur = p, rem(p.nvars());
    std::vector<typename Poly<K>::Term> rem_terms;
    while (!cur.is_zero()) {
        budget.charge();
        const auto& lt = cur.leading_term(ord);
        const Poly<K>* reducer = nullptr;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            if (g.leading_term(ord).m.divides(lt.m)) {
                reducer = &g;
                break;
            }
        }
        if (reducer) {
            const auto& glt = reducer->leading_term(ord);
            cur = cur - reducer->mul_term(lt.m / glt.m, lt.c / glt.c);
        } else {
            rem_terms.push_back(lt);
            cur = cur - Poly<K>::monomial(lt.m, lt.c);
        }
    }
    return Poly<K>::from_terms(p.nvars(), std::move(rem_terms));
}

template <class K>
Poly<K> s_poly(const Poly<K>& f, const Poly<K>& g, const TermOrder& ord) {
    const auto& lf = f.leading_term(ord);
    const auto& lg = g.leading_term(ord);
    Monomial l = Monomial::lcm(lf.m, lg.m);
    return f.mul_term(l / lf.m, lf.c.inv()) - g.mul_term(l / lg.m, lg.c.inv());
}

namespace detail {

struct Pair {
    std::size_t i, j;
    Monomial lcm;
    std::uint64_t deg;
};

} // namespace detail

// Reduced Groebner basis: unique for (ideal, order); generators monic, tails
// fully reduced, sorted ascending by leading monomial.
template <class K>
std::vector<Poly<K>> groebner_basis(std::vector<Poly<K>> gens, const TermOrder& ord,
                                    Budget& budget = unlimited_budget()) {
    std::vector<Poly<K>> basis;
    for (auto& g : gens)
        if (!g.is_zero()) basis.push_back(std::move(g));
    if (basis.empty()) return {};

    std::vector<detail::Pair> pairs;
    std::set<std::pair<std::size_t, std::size_t>> done;
    auto push_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            detail::Pair p{i, j, Monomial::lcm(basis[i].leading_term(ord).m, basis[j].leading_term(ord).m), 0};
            p.deg = p.lcm.degree();
            pairs.push_back(std::move(p));
        }
    };
    for (std::size_t j = 0; j < basis.size(); ++j) push_pairs(j);

    auto pick = [&]() {
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            const auto &a = pairs[k], &b = pairs[best];
            int c = a.deg < b.deg ? -1 : a.deg > b.deg ? 1 : ord.cmp(a.lcm, b.lcm);
            if (c < 0 || (c == 0 && (a.i < b.i || (a.i == b.i && a.j < b.j)))) best = k;
        }
        auto p = pairs[best];
        pairs.erase(pairs.begin() + best);
        return p;
    };

    while (!pairs.empty()) {
        budget.charge(4);
        auto p = pick();
        done.insert({p.i, p.j});
        const Monomial& li = basis[p.i].leading_term(ord).m;
        const Monomial& lj = basis[p.j].leading_term(ord).m;
        if (li.coprime(lj)) continue; // product criterion
        bool chained = false;         // chain criterion
        for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == p.i || k == p.j) continue;
            if (!basis[k].leading_term(ord).m.divides(p.lcm)) continue;
            auto key1 = std::minmax(p.i, k), key2 = std::minmax(p.j, k);
            if (done.count({key1.first, key1.second}) && done.count({key2.first, key2.second}))
                chained = true;
        }
        if (chained) continue;
        Poly<K> s = normal_form(s_poly(basis[p.i], basis[p.j], ord), basis, ord, budget);
        if (!s.is_zero()) {
            basis.push_back(std::move(s));
            push_pairs(basis.size() - 1);
        }
    }

    // minimalize: drop elements whose LT is divisible by another LT
    std::vector<Poly<K>> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const Monomial& l = basis[i].leading_term(ord).m;
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& lj = basis[j].leading_term(ord).m;
            if (lj.divides(l) && (!(lj == l) || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    // inter-reduce tails
    std::vector<Poly<K>> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly<K>> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Poly<K> r = normal_form(minimal[i], others, ord, budget);
        if (!r.is_zero()) reduced.push_back(r.monic(ord));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Poly<K>& a, const Poly<K>& b) {
        return ord.cmp(a.leading_term(ord).m, b.leading_term(ord).m) < 0;
    });
    return reduced;
}

} // namespace vf
