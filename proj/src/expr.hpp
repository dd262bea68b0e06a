#pragma once

#include <compare>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "coupling.hpp"
#include "errors.hpp"
#include "rational.hpp"

namespace sgc {

// Monomial in the jet variables of the configuration: key k is the order of
// the light-cone derivative (k = 0 is the field itself), value is a positive
// exponent. Canonical: sorted keys, no zero exponents.
using JetMonomial = std::map<unsigned, unsigned>;

inline long jet_degree(const JetMonomial& m) {
    long d = 0;
    for (const auto& [k, e] : m) d += static_cast<long>(k) * e;
    return d;
}

// Integer Fourier mode of the field: 1, sin(m a phi) or cos(m a phi).
// sin with mode 0 is the ring zero and never stored; cos with mode 0 is Unit.
struct TrigMode {
    enum class Kind { Unit = 0, Sin = 1, Cos = 2 };

    Kind kind = Kind::Unit;
    unsigned mode = 0;

    static TrigMode unit() { return {Kind::Unit, 0}; }
    static TrigMode sin(unsigned m) { return {Kind::Sin, m}; }
    static TrigMode cos(unsigned m) { return {Kind::Cos, m}; }

    bool is_unit() const { return kind == Kind::Unit; }

    auto operator<=>(const TrigMode&) const = default;
};

struct TermKey {
    JetMonomial jets;
    TrigMode trig;

    bool operator==(const TermKey& o) const { return jets == o.jets && trig == o.trig; }
    bool operator<(const TermKey& o) const {
        if (jets != o.jets) return jets < o.jets;
        return trig < o.trig;
    }
};

// Element of the exact algebra: finite sum of coupling-Laurent coefficients
// times jet monomial times trig mode. Closed under +, * and the free
// light-cone derivation; the on-shell tau derivation is partial.
class Expr {
  public:
    Expr() = default;

    static Expr zero() { return Expr(); }
    static Expr constant(const Rat& q) { return from_coupling(Coupling::constant(q)); }
    static Expr one() { return constant(Rat(1)); }

    static Expr from_coupling(const Coupling& c) {
        Expr e;
        e.add_term(TermKey{}, c);
        return e;
    }

    // a^exponent
    static Expr coupling_power(int exponent, const Rat& q = Rat(1)) {
        return from_coupling(Coupling::monomial(q, exponent));
    }

    // The jet variable of derivative order k (k = 0 is the field).
    static Expr jet(unsigned k) {
        Expr e;
        TermKey key;
        key.jets[k] = 1;
        e.add_term(key, Coupling::one());
        return e;
    }

    static Expr field() { return jet(0); }

    // sin(m a phi) / cos(m a phi); handles the mode normalization.
    static Expr sin_mode(unsigned m) {
        Expr e;
        if (m == 0) return e;  // sin(0) = 0
        TermKey key;
        key.trig = TrigMode::sin(m);
        e.add_term(key, Coupling::one());
        return e;
    }

    static Expr cos_mode(unsigned m) {
        Expr e;
        TermKey key;
        key.trig = m == 0 ? TrigMode::unit() : TrigMode::cos(m);
        e.add_term(key, Coupling::one());
        return e;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<TermKey, Coupling>& terms() const { return terms_; }

    bool operator==(const Expr& o) const { return terms_ == o.terms_; }
    bool operator!=(const Expr& o) const { return !(*this == o); }

    Expr& operator+=(const Expr& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }

    Expr& operator-=(const Expr& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }

    friend Expr operator+(Expr a, const Expr& b) { return a += b; }
    friend Expr operator-(Expr a, const Expr& b) { return a -= b; }

    Expr operator-() const {
        Expr r;
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
        return r;
    }

    friend Expr operator*(const Expr& a, const Expr& b);
    Expr& operator*=(const Expr& o) { return *this = *this * o; }

    Expr scaled(const Rat& q) const {
        Expr r;
        if (q == 0) return r;
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, c.scaled(q));
        return r;
    }

    Expr scaled(const Coupling& c) const;

    Expr pow(unsigned n) const;

    // Free derivation: d/dxi on jets, chain rule on trig modes.
    Expr d_xi() const;

    // On-shell tau derivation: rewrites the tau derivative of every jet via
    // the equation of motion. Only defined on trig-free input with all jet
    // orders >= 1; throws DomainError otherwise.
    Expr d_tau_onshell() const;

    // (homogeneous?, degree). Throws DomainError on the zero expr, whose
    // degree is undefined by convention.
    std::pair<bool, long> degree() const;

    // Evaluate the coupling at the given nonzero rational.
    Expr substitute_coupling(const Rat& value) const;

    bool is_trig_free() const;
    bool has_field_factor() const;  // any jet with k = 0
    unsigned max_jet_order() const;

    void add_term(const TermKey& key, const Coupling& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

  private:
    std::map<TermKey, Coupling> terms_;
};

}  // namespace sgc
