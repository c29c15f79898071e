#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "groebner.hpp"

namespace vf {

// Ideal in K[x_1..x_n], presented by generators.  Reduced Groebner bases are
// cached per term order; values are immutable, the cache is synchronized so
// ideals can be shared across threads.
template <class K>
class Ideal {
public:
    Ideal() = default;
    explicit Ideal(std::size_t nvars) : nvars_(nvars) {}
    Ideal(std::size_t nvars, std::vector<Poly<K>> gens) : nvars_(nvars), gens_(std::move(gens)) {
        for (auto& g : gens_)
            if (g.nvars() != nvars_) throw AlgebraMismatch("generator in wrong ring");
    }

    std::size_t nvars() const { return nvars_; }
    const std::vector<Poly<K>>& gens() const { return gens_; }
    bool is_zero_ideal() const {
        for (const auto& g : gens_)
            if (!g.is_zero()) return false;
        return true;
    }

    const std::vector<Poly<K>>& groebner(const TermOrder& ord,
                                         Budget& budget = unlimited_budget()) const {
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto key = ord.signature();
        auto it = cache_->bases.find(key);
        if (it != cache_->bases.end()) return it->second;
        auto gb = groebner_basis(gens_, ord, budget);
        return cache_->bases.emplace(key, std::move(gb)).first->second;
    }

    bool contains(const Poly<K>& p, Budget& budget = unlimited_budget()) const {
        if (p.is_zero()) return true;
        TermOrder ord = TermOrder::grevlex();
        return normal_form(p, groebner(ord, budget), ord, budget).is_zero();
    }

    bool contains_ideal(const Ideal& other, Budget& budget = unlimited_budget()) const {
        for (const auto& g : other.gens_)
            if (!contains(g, budget)) return false;
        return true;
    }

private:
    struct Cache {
        std::mutex mu;
        std::map<std::string, std::vector<Poly<K>>> bases;
    };
    std::size_t nvars_ = 0;
    std::vector<Poly<K>> gens_;
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

using IdealQ = Ideal<Rational>;

// equality by mutual membership of generators
template <class K>
bool equal_ideals(const Ideal<K>& a, const Ideal<K>& b, Budget& budget = unlimited_budget()) {
    return a.contains_ideal(b, budget) && b.contains_ideal(a, budget);
}

template <class K>
Ideal<K> ideal_sum(const Ideal<K>& a, const Ideal<K>& b) {
    std::vector<Poly<K>> gens = a.gens();
    for (const auto& g : b.gens()) gens.push_back(g);
    return Ideal<K>(a.nvars(), std::move(gens));
}

template <class K>
Ideal<K> ideal_product(const Ideal<K>& a, const Ideal<K>& b) {
    std::vector<Poly<K>> gens;
    for (const auto& f : a.gens())
        for (const auto& g : b.gens()) gens.push_back(f * g);
    return Ideal<K>(a.nvars(), std::move(gens));
}

// I ∩ J via the auxiliary variable trick: eliminate w from w*I + (1-w)*J.
template <class K>
Ideal<K> intersect(const Ideal<K>& a, const Ideal<K>& b, Budget& budget = unlimited_budget()) {
    std::size_t n = a.nvars();
    std::vector<Poly<K>> gens;
    Poly<K> w = Poly<K>::variable(n + 1, 0);
    Poly<K> one_minus_w = Poly<K>::constant(n + 1, K(1)) - w;
    for (const auto& f : a.gens()) gens.push_back(w * insert_vars(f, 0, 1));
    for (const auto& g : b.gens()) gens.push_back(one_minus_w * insert_vars(g, 0, 1));
    TermOrder ord = TermOrder::block_elim(1);
    auto gb = groebner_basis(gens, ord, budget);
    std::vector<Poly<K>> kept;
    for (const auto& g : gb) {
        bool has_w = false;
        for (const auto& t : g.terms())
            if (t.m.e[0]) has_w = true;
        if (!has_w) kept.push_back(drop_front_vars(g, 1));
    }
    return Ideal<K>(n, std::move(kept));
}

// Exact division p / g (throws if not divisible).
template <class K>
Poly<K> divide_exact(const Poly<K>& p, const Poly<K>& g) {
    if (g.is_zero()) throw Error("division by zero polynomial");
    TermOrder ord = TermOrder::grevlex();
    Poly<K> cur = p, q(p.nvars());
    while (!cur.is_zero()) {
        const auto& lt = cur.leading_term(ord);
        const auto& lg = g.leading_term(ord);
        if (!lg.m.divides(lt.m)) throw Error("inexact polynomial division");
        Monomial m = lt.m / lg.m;
        K c = lt.c / lg.c;
        q = q + Poly<K>::monomial(m, c);
        cur = cur - g.mul_term(m, c);
    }
    return q;
}

// Colon ideal (I : g) for a single polynomial g, via (I ∩ (g)) / g.
template <class K>
Ideal<K> colon_ideal(const Ideal<K>& a, const Poly<K>& g, Budget& budget = unlimited_budget()) {
    if (g.is_zero()) throw Error("colon by zero");
    Ideal<K> gi(a.nvars(), {g});
    Ideal<K> inter = intersect(a, gi, budget);
    std::vector<Poly<K>> gens;
    for (const auto& f : inter.gens()) gens.push_back(divide_exact(f, g));
    return Ideal<K>(a.nvars(), std::move(gens));
}

// Saturation (I : g^∞); stabilization detected by colon-ideal equality.
template <class K>
Ideal<K> saturate(const Ideal<K>& a, const Poly<K>& g, Budget& budget = unlimited_budget()) {
    if (g.is_zero()) throw Error("saturation by zero");
    Ideal<K> cur = a;
    for (;;) {
        budget.charge(16);
        Ideal<K> next = colon_ideal(cur, g, budget);
        if (equal_ideals(cur, next, budget)) return cur;
        cur = std::move(next);
    }
}

// I ∩ K[x_{k}..x_{n-1}]: block elimination of the first k variables.  The
// returned ideal lives in the full ring (eliminated variables absent).
template <class K>
Ideal<K> eliminate_front(const Ideal<K>& a, std::size_t k, Budget& budget = unlimited_budget()) {
    TermOrder ord = TermOrder::block_elim(k);
    auto gb = a.groebner(ord, budget);
    std::vector<Poly<K>> kept;
    for (const auto& g : gb) {
        bool has = false;
        for (const auto& t : g.terms())
            for (std::size_t i = 0; i < k && !has; ++i)
                if (t.m.e[i]) has = true;
        if (!has) kept.push_back(g);
    }
    return Ideal<K>(a.nvars(), std::move(kept));
}

// Number of standard monomials under LT(I), or nullopt when the quotient is
// not finite-dimensional.  Exhaustive staircase enumeration.
template <class K>
std::optional<std::uint64_t> colength(const Ideal<K>& a, Budget& budget = unlimited_budget()) {
    TermOrder ord = TermOrder::grevlex();
    auto gb = a.groebner(ord, budget);
    if (gb.empty()) return std::nullopt; // zero ideal in K[x], infinite
    std::size_t n = a.nvars();
    std::vector<Monomial> lts;
    for (const auto& g : gb) lts.push_back(g.leading_term(ord).m);
    for (const auto& m : lts)
        if (m.is_one()) return 0; // unit ideal
    // zero-dimensional iff some pure power of every variable appears in LT(I)
    std::vector<std::uint64_t> bound(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        bool found = false;
        for (const auto& m : lts) {
            bool pure = m.e[i] > 0;
            for (std::size_t j = 0; j < n && pure; ++j)
                if (j != i && m.e[j]) pure = false;
            if (pure) {
                bound[i] = found ? std::min<std::uint64_t>(bound[i], m.e[i]) : m.e[i];
                found = true;
            }
        }
        if (!found) return std::nullopt;
    }
    // enumerate the staircase inside the box prod [0, bound_i)
    std::uint64_t count = 0;
    Monomial cur(n);
    std::function<void(std::size_t)> walk = [&](std::size_t i) {
        if (i == n) {
            for (const auto& m : lts)
                if (m.divides(cur)) return;
            ++count;
            return;
        }
        for (std::uint64_t e = 0; e < bound[i]; ++e) {
            budget.charge();
            cur.e[i] = static_cast<std::uint32_t>(e);
            walk(i + 1);
        }
        cur.e[i] = 0;
    };
    walk(0);
    return count;
}

// Drop generators contained in the ideal of the others; deterministic scan
// from the largest generator down, then canonical sort.
template <class K>
std::vector<Poly<K>> minimal_generators(std::vector<Poly<K>> gens, std::size_t nvars,
                                        Budget& budget = unlimited_budget()) {
    TermOrder ord = TermOrder::grevlex();
    std::vector<Poly<K>> cur;
    for (auto& g : gens)
        if (!g.is_zero()) cur.push_back(g.monic(ord));
    std::sort(cur.begin(), cur.end(), [&](const Poly<K>& x, const Poly<K>& y) {
        return ord.cmp(x.leading_term(ord).m, y.leading_term(ord).m) < 0;
    });
    cur.erase(std::unique(cur.begin(), cur.end(), [](const Poly<K>& x, const Poly<K>& y) { return x == y; }),
              cur.end());
    for (std::size_t i = cur.size(); i-- > 0;) {
        std::vector<Poly<K>> others;
        for (std::size_t j = 0; j < cur.size(); ++j)
            if (j != i) others.push_back(cur[j]);
        if (others.empty()) break;
        if (Ideal<K>(nvars, others).contains(cur[i], budget)) cur.erase(cur.begin() + i);
    }
    return cur;
}

} // namespace vf
