#pragma once

#include <map>
#include <string>

#include "errors.hpp"
#include "rational.hpp"

namespace sgc {

// Laurent polynomial in the coupling constant over the exact rationals.
// Canonical form: no zero coefficients; the empty map is the ring zero.
class Coupling {
  public:
    Coupling() = default;

    static Coupling zero() { return Coupling(); }
    static Coupling one() { return constant(Rat(1)); }

    static Coupling constant(const Rat& q) {
        Coupling c;
        if (q != 0) c.terms_[0] = q;
        return c;
    }

    // q * a^exponent
    static Coupling monomial(const Rat& q, int exponent) {
        Coupling c;
        if (q != 0) c.terms_[exponent] = q;
        return c;
    }

    bool is_zero() const { return terms_.empty(); }

    const std::map<int, Rat>& terms() const { return terms_; }

    Coupling& operator+=(const Coupling& o) {
        for (const auto& [e, q] : o.terms_) add_term(e, q);
        return *this;
    }

    Coupling& operator-=(const Coupling& o) {
        for (const auto& [e, q] : o.terms_) add_term(e, -q);
        return *this;
    }

    friend Coupling operator+(Coupling a, const Coupling& b) { return a += b; }
    friend Coupling operator-(Coupling a, const Coupling& b) { return a -= b; }

    friend Coupling operator*(const Coupling& a, const Coupling& b) {
        Coupling r;
        for (const auto& [ea, qa] : a.terms_)
            for (const auto& [eb, qb] : b.terms_) r.add_term(ea + eb, qa * qb);
        return r;
    }

    Coupling& operator*=(const Coupling& o) { return *this = *this * o; }

    Coupling operator-() const {
        Coupling r;
        for (const auto& [e, q] : terms_) r.terms_[e] = -q;
        return r;
    }

    Coupling scaled(const Rat& q) const {
        Coupling r;
        if (q == 0) return r;
        for (const auto& [e, c] : terms_) r.terms_[e] = c * q;
        return r;
    }

    // Multiply by a^shift.
    Coupling shifted(int shift) const {
        Coupling r;
        for (const auto& [e, c] : terms_) r.terms_[e + shift] = c;
        return r;
    }

    // Evaluate at a = value. The coupling appears with negative exponents, so
    // value must be nonzero.
    Rat evaluate(const Rat& value) const {
        if (value == 0) throw DomainError("coupling substitution at zero");
        Rat inv = 1 / value;
        Rat r(0);
        for (const auto& [e, q] : terms_) {
            if (e >= 0)
                r += q * rat_pow(value, static_cast<unsigned>(e));
            else
                r += q * rat_pow(inv, static_cast<unsigned>(-e));
        }
        return r;
    }

    bool operator==(const Coupling& o) const { return terms_ == o.terms_; }
    bool operator!=(const Coupling& o) const { return !(*this == o); }
    bool operator<(const Coupling& o) const { return terms_ < o.terms_; }

    void add_term(int exponent, const Rat& q) {
        if (q == 0) return;
        auto it = terms_.find(exponent);
        if (it == terms_.end()) {
            terms_.emplace(exponent, q);
        } else {
            it->second += q;
            if (it->second == 0) terms_.erase(it);
        }
    }

  private:
    std::map<int, Rat> terms_;  // a-exponent -> nonzero rational
};

}  // namespace sgc
