#pragma once

#include <random>
#include <vector>

#include "coupling.hpp"
#include "expr.hpp"

namespace sgc::testing {

// Small random expressions for the property tests; deterministic under a
// fixed seed.
class ExprGen {
  public:
    explicit ExprGen(unsigned seed) : rng_(seed) {}

    Rat rational() {
        std::uniform_int_distribution<long> num(-4, 4);
        std::uniform_int_distribution<long> den(1, 4);
        long n = num(rng_);
        if (n == 0) n = 1;
        Rat q(n, den(rng_));
        q.canonicalize();
        return q;
    }

    Coupling coupling() {
        std::uniform_int_distribution<int> count(1, 2);
        std::uniform_int_distribution<int> expo(-2, 2);
        Coupling c;
        for (int i = count(rng_); i > 0; --i) c.add_term(expo(rng_), rational());
        if (c.is_zero()) c = Coupling::one();
        return c;
    }

    Expr term() {
        std::uniform_int_distribution<int> jet_count(0, 2);
        std::uniform_int_distribution<unsigned> jet_order(0, 3);
        std::uniform_int_distribution<unsigned> jet_exp(1, 2);
        std::uniform_int_distribution<int> trig_kind(0, 2);
        std::uniform_int_distribution<unsigned> trig_mode(1, 2);
        Expr e = Expr::from_coupling(coupling());
        for (int i = jet_count(rng_); i > 0; --i) {
            Expr j = Expr::jet(jet_order(rng_));
            if (jet_exp(rng_) == 2) j = j * j;
            e = e * j;
        }
        int kind = trig_kind(rng_);
        if (kind == 1) e = e * Expr::sin_mode(trig_mode(rng_));
        if (kind == 2) e = e * Expr::cos_mode(trig_mode(rng_));
        return e;
    }

    Expr expr(int max_terms = 3) {
        std::uniform_int_distribution<int> count(1, max_terms);
        Expr e;
        for (int i = count(rng_); i > 0; --i) e += term();
        return e;
    }

    // Homogeneous trig-free expression of the given jet degree, nonzero.
    Expr homogeneous(long degree) {
        Expr e;
        std::uniform_int_distribution<int> terms(1, 2);
        for (int t = terms(rng_); t > 0; --t) {
            Expr m = Expr::from_coupling(coupling());
            long left = degree;
            while (left > 0) {
                std::uniform_int_distribution<long> pick(1, std::min<long>(left, 3));
                long k = pick(rng_);
                m = m * Expr::jet(static_cast<unsigned>(k));
                left -= k;
            }
            e += m;
        }
        if (e.is_zero()) e = Expr::jet(static_cast<unsigned>(degree));
        return e;
    }

    std::mt19937& rng() { return rng_; }

  private:
    std::mt19937 rng_;
};

}  // namespace sgc::testing
