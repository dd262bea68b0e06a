#include "expr.hpp"

#include <algorithm>

namespace sgc {

namespace {

// One trig factor of a product, with a rational prefactor and a signed mode
// that still needs normalization.
struct TrigPart {
    TrigMode::Kind kind;
    long mode;
    Rat factor;
};

TrigMode normalize_trig(TrigMode::Kind kind, long mode, Rat& factor) {
    if (mode < 0) {
        mode = -mode;
        if (kind == TrigMode::Kind::Sin) factor = -factor;
    }
    if (mode == 0) {
        if (kind == TrigMode::Kind::Sin) {
            factor = 0;  // sin(0) = 0
            return TrigMode::unit();
        }
        return TrigMode::unit();  // cos(0) = 1
    }
    return {kind, static_cast<unsigned>(mode)};
}

// Product-to-sum resolution of two trig modes. Up to two result parts.
std::vector<TrigPart> trig_product(const TrigMode& x, const TrigMode& y) {
    using K = TrigMode::Kind;
    if (x.kind == K::Unit) return {{y.kind, static_cast<long>(y.mode), Rat(1)}};
    if (y.kind == K::Unit) return {{x.kind, static_cast<long>(x.mode), Rat(1)}};
    long m = static_cast<long>(x.mode);
    long n = static_cast<long>(y.mode);
    Rat half(1, 2);
    if (x.kind == K::Sin && y.kind == K::Sin)
        return {{K::Cos, m - n, half}, {K::Cos, m + n, -half}};
    if (x.kind == K::Cos && y.kind == K::Cos)
        return {{K::Cos, m - n, half}, {K::Cos, m + n, half}};
    if (x.kind == K::Sin && y.kind == K::Cos)
        return {{K::Sin, m + n, half}, {K::Sin, m - n, half}};
    // cos * sin
    return {{K::Sin, m + n, half}, {K::Sin, n - m, half}};
}

JetMonomial jet_product(const JetMonomial& a, const JetMonomial& b) {
    JetMonomial r = a;
    for (const auto& [k, e] : b) r[k] += e;
    return r;
}

}  // namespace

Expr operator*(const Expr& a, const Expr& b) {
    Expr r;
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            Coupling c = ca * cb;
            if (c.is_zero()) continue;
            JetMonomial jets = jet_product(ka.jets, kb.jets);
            for (const auto& part : trig_product(ka.trig, kb.trig)) {
                Rat factor = part.factor;
                TrigMode trig = normalize_trig(part.kind, part.mode, factor);
                if (factor == 0) continue;
                r.add_term(TermKey{jets, trig}, c.scaled(factor));
            }
        }
    }
    return r;
}

Expr Expr::scaled(const Coupling& c) const {
    Expr r;
    if (c.is_zero()) return r;
    for (const auto& [k, t] : terms_) r.add_term(k, t * c);
    return r;
}

Expr Expr::pow(unsigned n) const {
    Expr r = Expr::one();
    Expr b = *this;
    while (n) {
        if (n & 1u) r *= b;
        b *= b;
        n >>= 1u;
    }
    return r;
}

Expr Expr::d_xi() const {
    Expr r;
    for (const auto& [key, c] : terms_) {
        // Leibniz over the jet factors.
        for (const auto& [k, e] : key.jets) {
            TermKey t = key;
            if (e == 1)
                t.jets.erase(k);
            else
                t.jets[k] = e - 1;
            t.jets[k + 1] += 1;
            r.add_term(t, c.scaled(Rat(static_cast<long>(e))));
        }
        // Chain rule on the trig factor: d cos(m a phi) = -m a phi_x sin(...),
        // d sin(m a phi) = m a phi_x cos(...).
        if (key.trig.kind == TrigMode::Kind::Sin) {
            TermKey t = key;
            t.jets[1] += 1;
            t.trig = TrigMode::cos(key.trig.mode);
            r.add_term(t, c.shifted(1).scaled(Rat(static_cast<long>(key.trig.mode))));
        } else if (key.trig.kind == TrigMode::Kind::Cos) {
            TermKey t = key;
            t.jets[1] += 1;
            t.trig = TrigMode::sin(key.trig.mode);
            r.add_term(t, c.shifted(1).scaled(Rat(-static_cast<long>(key.trig.mode))));
        }
    }
    return r;
}

Expr Expr::d_tau_onshell() const {
    if (!is_trig_free())
        throw DomainError("on-shell tau derivative of an expr with a trig factor");
    if (has_field_factor())
        throw DomainError("on-shell tau derivative of an expr containing the bare field");

    // d_tau of the order-k jet is the (k-1)-th xi derivative of the equation
    // of motion a sin(a phi); cache these per derivative order.
    unsigned kmax = max_jet_order();
    std::vector<Expr> eom(kmax + 1);
    if (kmax >= 1) {
        eom[1] = Expr::sin_mode(1).scaled(Coupling::monomial(Rat(1), 1));
        for (unsigned k = 2; k <= kmax; ++k) eom[k] = eom[k - 1].d_xi();
    }

    Expr r;
    for (const auto& [key, c] : terms_) {
        for (const auto& [k, e] : key.jets) {
            TermKey rest = key;
            if (e == 1)
                rest.jets.erase(k);
            else
                rest.jets[k] = e - 1;
            Expr partial;
            partial.add_term(rest, c.scaled(Rat(static_cast<long>(e))));
            r += partial * eom[k];
        }
    }
    return r;
}

std::pair<bool, long> Expr::degree() const {
    if (is_zero()) throw DomainError("degree of the zero expr is undefined");
    bool first = true;
    long d = 0;
    for (const auto& [key, c] : terms_) {
        long dk = jet_degree(key.jets);  // trig carries degree 0
        if (first) {
            d = dk;
            first = false;
        } else if (dk != d) {
            return {false, 0};
        }
    }
    return {true, d};
}

Expr Expr::substitute_coupling(const Rat& value) const {
    if (value == 0) throw DomainError("coupling substitution at zero");
    Expr r;
    for (const auto& [key, c] : terms_) {
        Rat q = c.evaluate(value);
        r.add_term(key, Coupling::constant(q));
    }
    return r;
}

bool Expr::is_trig_free() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.first.trig.is_unit(); });
}

bool Expr::has_field_factor() const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.first.jets.count(0) != 0; });
}

unsigned Expr::max_jet_order() const {
    unsigned m = 0;
    for (const auto& [key, c] : terms_)
        if (!key.jets.empty()) m = std::max(m, key.jets.rbegin()->first);
    return m;
}

}  // namespace sgc
