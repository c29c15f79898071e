#pragma once

#include <string>
#include <utility>

#include "unipoly.hpp"

namespace vf {

// Element of the fraction field Q(beta) of Q[beta].  Normal form: denominator
// monic, gcd(num, den) = 1.  Serves as a drop-in coefficient field for the
// generic polynomial and linear algebra templates.
class RatFunc {
public:
    RatFunc() = default;
    RatFunc(long n) : num_(Rational(n)) {}
    RatFunc(const Rational& r) : num_(r) {}
    explicit RatFunc(UniPoly n) : num_(std::move(n)) {}
    RatFunc(UniPoly n, UniPoly d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    static RatFunc param() { return RatFunc(UniPoly::var()); }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    int sign() const { return num_.is_zero() ? 0 : num_.leading().sign(); }

    RatFunc operator-() const {
        RatFunc r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw Error("division by zero in Q(beta)");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc inv() const {
        if (is_zero()) throw Error("inverse of zero in Q(beta)");
        return RatFunc(den_, num_);
    }

    // Evaluation at beta = b0; throws DenominatorVanishes if undefined there.
    Rational eval(const Rational& b0) const {
        Rational d = den_.eval(b0);
        if (d.is_zero()) throw DenominatorVanishes("denominator vanishes at beta = " + b0.str());
        return num_.eval(b0) / d;
    }

    bool defined_at(const Rational& b0) const { return !den_.eval(b0).is_zero(); }

    std::string str(const std::string& var = "beta") const {
        if (den_ == UniPoly::one()) return num_.str(var);
        std::string n = num_.is_constant() ? num_.str(var) : "(" + num_.str(var) + ")";
        std::string d = den_.is_constant() ? den_.str(var) : "(" + den_.str(var) + ")";
        return n + "/" + d;
    }

private:
    void normalize() {
        if (den_.is_zero()) throw Error("zero denominator in Q(beta)");
        if (num_.is_zero()) {
            den_ = UniPoly::one();
            return;
        }
        UniPoly g = UniPoly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.divexact(g);
            den_ = den_.divexact(g);
        }
        Rational lead = den_.leading();
        if (!lead.is_one()) {
            Rational li = lead.inv();
            num_ = li * num_;
            den_ = li * den_;
        }
    }

    UniPoly num_;
    UniPoly den_ = UniPoly::one();
};

} // namespace vf
