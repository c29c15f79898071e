#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"

namespace vf {

// Exponent vector over a fixed ambient variable list.
struct Monomial {
    std::vector<std::uint32_t> e;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : e(std::move(exps)) {}

    std::size_t nvars() const { return e.size(); }
    std::uint64_t degree() const { return std::accumulate(e.begin(), e.end(), std::uint64_t{0}); }
    bool is_one() const {
        for (auto x : e)
            if (x) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e != b.e; }

    bool divides(const Monomial& m) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }
    Monomial operator*(const Monomial& m) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += m.e[i];
        return r;
    }
    // exact quotient; caller guarantees divisibility
    Monomial operator/(const Monomial& m) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= m.e[i];
        return r;
    }
    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
        return r;
    }
    bool coprime(const Monomial& b) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] && b.e[i]) return false;
        return true;
    }

    std::size_t hash() const {
        std::size_t h = 0;
        for (auto x : e) h = h * 1000003u + x;
        return h;
    }
};

// grevlex: higher total degree wins; ties broken by the *smallest* exponent
// difference in the last position where they differ (reverse lexicographic).
inline int cmp_grevlex(const Monomial& a, const Monomial& b) {
    std::uint64_t da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = a.e.size(); i-- > 0;) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
    }
    return 0;
}

inline int cmp_lex(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    return 0;
}

// Total order on monomials of one ambient ring.  All kinds are multiplicative
// well-orders (weights are restricted to be nonnegative).
class TermOrder {
public:
    enum class Kind { Lex, Grevlex, WeightGrevlex, BlockElim };

    static TermOrder lex() { return TermOrder(Kind::Lex); }
    static TermOrder grevlex() { return TermOrder(Kind::Grevlex); }
    // weight first (componentwise >= 0), grevlex tiebreak
    static TermOrder weighted(std::vector<std::int64_t> w) {
        for (auto x : w)
            if (x < 0) throw Error("negative weight in commutative term order");
        TermOrder o(Kind::WeightGrevlex);
        o.weights_ = std::move(w);
        return o;
    }
    // eliminates the first `split` variables: grevlex block on them first
    static TermOrder block_elim(std::size_t split) {
        TermOrder o(Kind::BlockElim);
        o.split_ = split;
        return o;
    }

    Kind kind() const { return kind_; }
    std::size_t split() const { return split_; }

    // negative: a < b, zero: equal, positive: a > b
    int cmp(const Monomial& a, const Monomial& b) const {
        switch (kind_) {
        case Kind::Lex:
            return cmp_lex(a, b);
        case Kind::Grevlex:
            return cmp_grevlex(a, b);
        case Kind::WeightGrevlex: {
            std::int64_t wa = 0, wb = 0;
            for (std::size_t i = 0; i < a.e.size(); ++i) {
                wa += weights_[i] * a.e[i];
                wb += weights_[i] * b.e[i];
            }
            if (wa != wb) return wa < wb ? -1 : 1;
            return cmp_grevlex(a, b);
        }
        case Kind::BlockElim: {
            Monomial a1(std::vector<std::uint32_t>(a.e.begin(), a.e.begin() + split_));
            Monomial b1(std::vector<std::uint32_t>(b.e.begin(), b.e.begin() + split_));
            int c = cmp_grevlex(a1, b1);
            if (c) return c;
            Monomial a2(std::vector<std::uint32_t>(a.e.begin() + split_, a.e.end()));
            Monomial b2(std::vector<std::uint32_t>(b.e.begin() + split_, b.e.end()));
            return cmp_grevlex(a2, b2);
        }
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }

    // stable key for GB caches
    std::string signature() const {
        switch (kind_) {
        case Kind::Lex: return "lex";
        case Kind::Grevlex: return "grevlex";
        case Kind::BlockElim: return "elim:" + std::to_string(split_);
        case Kind::WeightGrevlex: {
            std::string s = "w:";
            for (auto x : weights_) s += std::to_string(x) + ",";
            return s;
        }
        }
        return "?";
    }

private:
    explicit TermOrder(Kind k) : kind_(k) {}
    Kind kind_;
    std::size_t split_ = 0;
    std::vector<std::int64_t> weights_;
};

} // namespace vf
