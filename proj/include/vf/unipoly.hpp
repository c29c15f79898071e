#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace vf {

// Dense univariate polynomial over Q, coefficients by ascending degree.
// Invariant: leading coefficient nonzero unless the polynomial is zero.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(Rational c) {
        if (!c.is_zero()) c_.push_back(std::move(c));
    }
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly one() { return UniPoly(Rational(1)); }
    // the variable itself
    static UniPoly var() { return UniPoly(std::vector<Rational>{Rational(0), Rational(1)}); }
    // s - root
    static UniPoly linear_root(const Rational& root) {
        return UniPoly(std::vector<Rational>{-root, Rational(1)});
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    Rational leading() const { return is_zero() ? Rational(0) : c_.back(); }
    bool is_constant() const { return c_.size() <= 1; }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
        return UniPoly(std::move(r));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
        return UniPoly(std::move(r));
    }
    UniPoly operator-() const {
        std::vector<Rational> r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
        return UniPoly(std::move(r));
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return UniPoly(std::move(r));
    }
    friend UniPoly operator*(const Rational& k, const UniPoly& a) {
        std::vector<Rational> r(a.c_.size());
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = k * a.c_[i];
        return UniPoly(std::move(r));
    }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    // Euclidean division: returns {quotient, remainder}.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
        if (d.is_zero()) throw Error("division by zero polynomial");
        UniPoly r = *this, q;
        std::vector<Rational> qc;
        if (degree() >= d.degree()) qc.resize(degree() - d.degree() + 1);
        Rational dl = d.leading().inv();
        while (!r.is_zero() && r.degree() >= d.degree()) {
            int k = r.degree() - d.degree();
            Rational c = r.leading() * dl;
            qc[k] = c;
            std::vector<Rational> rc = r.c_;
            for (std::size_t i = 0; i < d.c_.size(); ++i) rc[i + k] -= c * d.c_[i];
            r = UniPoly(std::move(rc));
            if (!r.is_zero() && r.degree() >= d.degree() + k) throw Error("divmod: no progress");
        }
        return {UniPoly(std::move(qc)), r};
    }

    UniPoly divexact(const UniPoly& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero()) throw Error("inexact univariate division");
        return q;
    }

    UniPoly monic() const {
        if (is_zero()) return *this;
        return leading().inv() * *this;
    }

    Rational eval(const Rational& x) const {
        Rational r(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return UniPoly();
        std::vector<Rational> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = Rational(long(i)) * c_[i];
        return UniPoly(std::move(r));
    }

    // p(a*s + b) for rational a, b (used for the theta <-> s change of variable).
    UniPoly compose_affine(const Rational& a, const Rational& b) const {
        UniPoly arg(std::vector<Rational>{b, a});
        UniPoly r;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * arg + UniPoly(*it);
        return r;
    }

    UniPoly pow(unsigned e) const {
        UniPoly r = one(), base = *this;
        for (; e; e >>= 1) {
            if (e & 1) r = r * base;
            base = base * base;
        }
        return r;
    }

    static UniPoly gcd(UniPoly a, UniPoly b) {
        while (!b.is_zero()) {
            UniPoly r = a.divmod(b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    // Rendering in the given variable name, descending powers: "s^2 - 1/3*s + 2".
    std::string str(const std::string& var = "s") const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            const Rational& c = c_[i];
            if (c.is_zero()) continue;
            bool first = out.empty();
            Rational a = c.abs();
            if (!first) out += (c.sign() > 0) ? " + " : " - ";
            else if (c.sign() < 0) out += "-";
            std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
            if (mono.empty()) out += a.str();
            else if (a.is_one()) out += mono;
            else out += a.str() + "*" + mono;
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

// Result of rational root extraction: roots with multiplicity plus the
// root-free cofactor, so that  input = lead * prod (s - r_i) * cofactor_monic.
struct RationalRoots {
    std::vector<Rational> roots;   // sorted decreasing, repeated by multiplicity
    UniPoly cofactor;              // monic, no rational roots (may be 1)
    Rational leading;              // leading coefficient of the input

    bool fully_split() const { return cofactor.is_constant(); }
};

// Enumerates candidate roots p/q from divisors of the cleared constant and
// leading coefficients, deflating as roots are found.
inline RationalRoots rational_roots(const UniPoly& p) {
    if (p.is_zero()) throw Error("rational_roots of the zero polynomial");
    RationalRoots out;
    out.leading = p.leading();
    UniPoly cur = p.monic();
    while (cur.degree() > 0) {
        if (cur.coeff(0).is_zero()) {
            out.roots.push_back(Rational(0));
            std::vector<Rational> shifted(cur.coeffs().begin() + 1, cur.coeffs().end());
            cur = UniPoly(std::move(shifted));
            continue;
        }
        // clear denominators: candidates p/q with p | const, q | lead
        mpz_class lcm_den = 1;
        for (const auto& c : cur.coeffs())
            lcm_den = lcm(lcm_den, c.denominator());
        mpz_class a0 = (Rational(lcm_den) * cur.coeff(0)).numerator();
        mpz_class ad = (Rational(lcm_den) * cur.leading()).numerator();
        bool found = false;
        for (const auto& q : positive_divisors(ad)) {
            for (const auto& pp : positive_divisors(a0)) {
                for (int sign : {+1, -1}) {
                    Rational cand(mpz_class(sign * pp));
                    cand /= Rational(q);
                    if (cur.eval(cand).is_zero()) {
                        out.roots.push_back(cand);
                        cur = cur.divexact(UniPoly::linear_root(cand));
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) break;
    }
    out.cofactor = cur.monic();
    std::sort(out.roots.begin(), out.roots.end(), [](const Rational& a, const Rational& b) { return b < a; });
    return out;
}

// "(s+1)(s+5/6)(s+7/6)" with roots sorted decreasing; multiplicities as powers.
inline std::string factored_str(const std::vector<Rational>& roots, const std::string& var = "s") {
    if (roots.empty()) return "1";
    std::string out;
    std::size_t i = 0;
    while (i < roots.size()) {
        std::size_t j = i;
        while (j < roots.size() && roots[j] == roots[i]) ++j;
        const Rational& r = roots[i];
        std::string fac = "(" + var;
        if (r.sign() < 0) fac += "+" + (-r).str();
        else if (r.sign() > 0) fac += "-" + r.str();
        fac += ")";
        out += fac;
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

} // namespace vf
