#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "monomial.hpp"
#include "rational.hpp"
#include "ratfunc.hpp"

namespace vf {

// Multivariate polynomial over an exact coefficient field K.  Terms are kept
// in canonical form: sorted descending by grevlex, no zero coefficients.
// Equality and hashing are therefore structural.
template <class K>
class Poly {
public:
    struct Term {
        Monomial m;
        K c;
    };

    Poly() = default;
    explicit Poly(std::size_t nvars) : nvars_(nvars) {}

    static Poly zero(std::size_t nvars) { return Poly(nvars); }
    static Poly constant(std::size_t nvars, K c) {
        Poly p(nvars);
        if (!c.is_zero()) p.terms_.push_back({Monomial(nvars), std::move(c)});
        return p;
    }
    static Poly variable(std::size_t nvars, std::size_t i, unsigned power = 1) {
        Poly p(nvars);
        Monomial m(nvars);
        m.e[i] = power;
        p.terms_.push_back({std::move(m), K(1)});
        return p;
    }
    static Poly from_terms(std::size_t nvars, std::vector<Term> ts) {
        Poly p(nvars);
        p.terms_ = std::move(ts);
        p.normalize();
        return p;
    }
    static Poly monomial(Monomial m, K c) {
        Poly p(m.nvars());
        if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
    std::size_t nterms() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    std::uint64_t total_degree() const {
        std::uint64_t d = 0;
        for (const auto& t : terms_) d = std::max(d, t.m.degree());
        return d;
    }
    std::uint64_t degree_in(std::size_t i) const {
        std::uint64_t d = 0;
        for (const auto& t : terms_) d = std::max<std::uint64_t>(d, t.m.e[i]);
        return d;
    }

    // Leading term with respect to an arbitrary order (linear scan; canonical
    // storage order is grevlex so this is O(nterms) worst case).
    const Term& leading_term(const TermOrder& ord) const {
        if (terms_.empty()) throw Error("leading term of zero polynomial");
        if (ord.kind() == TermOrder::Kind::Grevlex) return terms_.front();
        const Term* best = &terms_[0];
        for (const auto& t : terms_)
            if (ord.cmp(t.m, best->m) > 0) best = &t;
        return *best;
    }

    K coeff_of(const Monomial& m) const {
        for (const auto& t : terms_)
            if (t.m == m) return t.c;
        return K(0);
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r(a.nvars_ ? a.nvars_ : b.nvars_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() && j < b.terms_.size()) {
            int c = cmp_grevlex(a.terms_[i].m, b.terms_[j].m);
            if (c > 0) r.terms_.push_back(a.terms_[i++]);
            else if (c < 0) r.terms_.push_back(b.terms_[j++]);
            else {
                K s = a.terms_[i].c + b.terms_[j].c;
                if (!s.is_zero()) r.terms_.push_back({a.terms_[i].m, std::move(s)});
                ++i, ++j;
            }
        }
        for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
        for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    Poly operator-() const {
        Poly r(*this);
        for (auto& t : r.terms_) t.c = -t.c;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r(a.nvars_ ? a.nvars_ : b.nvars_);
        std::map<std::vector<std::uint32_t>, K> acc;
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_) {
                Monomial m = ta.m * tb.m;
                auto it = acc.find(m.e);
                if (it == acc.end()) acc.emplace(m.e, ta.c * tb.c);
                else it->second += ta.c * tb.c;
            }
        for (auto& [e, c] : acc)
            if (!c.is_zero()) r.terms_.push_back({Monomial(e), std::move(c)});
        std::sort(r.terms_.begin(), r.terms_.end(),
                  [](const Term& x, const Term& y) { return cmp_grevlex(x.m, y.m) > 0; });
        return r;
    }
    friend Poly operator*(const K& k, const Poly& a) {
        if (k.is_zero()) return Poly(a.nvars_);
        Poly r(a);
        for (auto& t : r.terms_) t.c = k * t.c;
        return r;
    }
    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (!(a.terms_[i].m == b.terms_[i].m) || a.terms_[i].c != b.terms_[i].c) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly mul_term(const Monomial& m, const K& c) const {
        Poly r(nvars_);
        if (c.is_zero()) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.m * m, t.c * c});
        return r; // order preserved: multiplication by a monomial is order-compatible
    }

    Poly derivative(std::size_t i) const {
        Poly r(nvars_);
        for (const auto& t : terms_) {
            if (t.m.e[i] == 0) continue;
            Term nt = t;
            nt.c = K(long(t.m.e[i])) * t.c;
            nt.m.e[i] -= 1;
            r.terms_.push_back(std::move(nt));
        }
        r.normalize();
        return r;
    }

    // substitute variable i := value (coefficient), dropping the variable's exponent
    Poly substitute(std::size_t i, const K& value) const {
        Poly r(nvars_);
        std::vector<Term> ts;
        for (const auto& t : terms_) {
            Term nt = t;
            unsigned e = nt.m.e[i];
            nt.m.e[i] = 0;
            K pw(1);
            for (unsigned k = 0; k < e; ++k) pw *= value;
            nt.c = nt.c * pw;
            ts.push_back(std::move(nt));
        }
        return from_terms(nvars_, std::move(ts));
    }

    template <class K2, class F>
    Poly<K2> map_coeffs(F&& f, std::size_t nvars_out) const {
        std::vector<typename Poly<K2>::Term> ts;
        for (const auto& t : terms_) {
            K2 c = f(t.c);
            if (!c.is_zero()) ts.push_back({t.m, std::move(c)});
        }
        return Poly<K2>::from_terms(nvars_out, std::move(ts));
    }

    Poly monic(const TermOrder& ord) const {
        if (is_zero()) return *this;
        K li = leading_term(ord).c.inv();
        return li * *this;
    }

    std::size_t hash() const {
        std::size_t h = nvars_;
        for (const auto& t : terms_) h = h * 131 + t.m.hash() * 31 + coeff_hash(t.c);
        return h;
    }

    std::string str(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& t : terms_) {
            std::string cs = coeff_str(t.c);
            bool neg = !cs.empty() && cs[0] == '-';
            std::string mag = neg ? cs.substr(1) : cs;
            if (out.empty()) out += neg ? "-" : "";
            else out += neg ? " - " : " + ";
            std::string mono = mono_str(t.m, names);
            if (mono.empty()) out += mag;
            else if (mag == "1") out += mono;
            else out += mag + "*" + mono;
        }
        return out;
    }

    static std::string mono_str(const Monomial& m, const std::vector<std::string>& names) {
        std::string out;
        for (std::size_t i = 0; i < m.e.size(); ++i) {
            if (!m.e[i]) continue;
            if (!out.empty()) out += "*";
            out += names[i];
            if (m.e[i] > 1) out += "^" + std::to_string(m.e[i]);
        }
        return out;
    }

private:
    static std::size_t coeff_hash(const Rational& c) { return c.hash(); }
    static std::size_t coeff_hash(const RatFunc& c) {
        std::size_t h = 7;
        for (const auto& x : c.num().coeffs()) h = h * 131 + x.hash();
        for (const auto& x : c.den().coeffs()) h = h * 137 + x.hash();
        return h;
    }

    static std::string coeff_str(const Rational& c) { return c.str(); }
    static std::string coeff_str(const RatFunc& c) {
        std::string s = c.str();
        // parenthesize anything that is not a plain rational
        if (!c.num().is_constant() || !c.den().is_constant()) return "(" + s + ")";
        return s;
    }

    void normalize() {
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& x, const Term& y) { return cmp_grevlex(x.m, y.m) > 0; });
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().m == t.m) out.back().c += t.c;
            else out.push_back(std::move(t));
        }
        out.erase(std::remove_if(out.begin(), out.end(), [](const Term& t) { return t.c.is_zero(); }),
                  out.end());
        terms_ = std::move(out);
        if (nvars_ == 0 && !terms_.empty()) nvars_ = terms_[0].m.nvars();
    }

    std::size_t nvars_ = 0;
    std::vector<Term> terms_;
};

using PolyQ = Poly<Rational>;
using PolyR = Poly<RatFunc>; // coefficients in Q(beta)

// --- variable re-indexing helpers used by the ideal operations -------------

// Insert `count` new variables at position `at` (exponent 0 everywhere).
template <class K>
Poly<K> insert_vars(const Poly<K>& p, std::size_t at, std::size_t count) {
    std::vector<typename Poly<K>::Term> ts;
    for (const auto& t : p.terms()) {
        Monomial m(p.nvars() + count);
        for (std::size_t i = 0; i < p.nvars(); ++i) m.e[i < at ? i : i + count] = t.m.e[i];
        ts.push_back({std::move(m), t.c});
    }
    return Poly<K>::from_terms(p.nvars() + count, std::move(ts));
}

// Drop the first `count` variables; caller guarantees they do not occur.
template <class K>
Poly<K> drop_front_vars(const Poly<K>& p, std::size_t count) {
    std::vector<typename Poly<K>::Term> ts;
    for (const auto& t : p.terms()) {
        for (std::size_t i = 0; i < count; ++i)
            if (t.m.e[i]) throw Error("drop_front_vars: variable still occurs");
        Monomial m(std::vector<std::uint32_t>(t.m.e.begin() + count, t.m.e.end()));
        ts.push_back({std::move(m), t.c});
    }
    return Poly<K>::from_terms(p.nvars() - count, std::move(ts));
}

} // namespace vf
