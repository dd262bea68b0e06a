#pragma once

#include <vector>

#include "expr.hpp"

namespace sgc {

// Truncated formal power series in the transformation parameter with Expr
// coefficients. Operations on order-V inputs yield order-V outputs correct
// through order V (mul takes the smaller order of its operands).
class AlphaSeries {
  public:
    AlphaSeries() : coeffs_(1) {}
    explicit AlphaSeries(int order) : coeffs_(static_cast<std::size_t>(order) + 1) {}
    explicit AlphaSeries(std::vector<Expr> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) coeffs_.resize(1);
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Expr& at(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    Expr& at(int k) { return coeffs_.at(static_cast<std::size_t>(k)); }

    bool is_zero() const;

    AlphaSeries truncated(int order) const;

    friend AlphaSeries operator+(const AlphaSeries& a, const AlphaSeries& b);
    friend AlphaSeries operator-(const AlphaSeries& a, const AlphaSeries& b);
    friend AlphaSeries operator*(const AlphaSeries& a, const AlphaSeries& b);

    AlphaSeries scaled(const Expr& e) const;
    AlphaSeries scaled(const Rat& q) const;

    // alpha -> -alpha
    AlphaSeries alternated() const;

    // Coefficient-wise free xi derivative.
    AlphaSeries d_xi() const;

    // Divide by alpha^k: the k lowest coefficients must all be the zero Expr,
    // otherwise ShiftError. The result has order reduced by k.
    AlphaSeries shifted_down(int k) const;

    // sin/cos composition via the Taylor series; the constant coefficient of
    // the argument must be the zero Expr.
    AlphaSeries compose_sin() const;
    AlphaSeries compose_cos() const;

  private:
    AlphaSeries compose_taylor(bool odd) const;

    std::vector<Expr> coeffs_;  // index = power of alpha
};

}  // namespace sgc
