#include "alpha_series.hpp"

#include <algorithm>

#include "errors.hpp"

namespace sgc {

bool AlphaSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Expr& e) { return e.is_zero(); });
}

AlphaSeries AlphaSeries::truncated(int order) const {
    if (order >= this->order()) return *this;
    std::vector<Expr> c(coeffs_.begin(), coeffs_.begin() + order + 1);
    return AlphaSeries(std::move(c));
}

AlphaSeries operator+(const AlphaSeries& a, const AlphaSeries& b) {
    int v = std::min(a.order(), b.order());
    AlphaSeries r(v);
    for (int k = 0; k <= v; ++k) r.at(k) = a.at(k) + b.at(k);
    return r;
}

AlphaSeries operator-(const AlphaSeries& a, const AlphaSeries& b) {
    int v = std::min(a.order(), b.order());
    AlphaSeries r(v);
    for (int k = 0; k <= v; ++k) r.at(k) = a.at(k) - b.at(k);
    return r;
}

AlphaSeries operator*(const AlphaSeries& a, const AlphaSeries& b) {
    int v = std::min(a.order(), b.order());
    AlphaSeries r(v);
    for (int i = 0; i <= v; ++i) {
        if (a.at(i).is_zero()) continue;
        for (int j = 0; i + j <= v; ++j) {
            if (b.at(j).is_zero()) continue;
            r.at(i + j) += a.at(i) * b.at(j);
        }
    }
    return r;
}

AlphaSeries AlphaSeries::scaled(const Expr& e) const {
    AlphaSeries r(order());
    for (int k = 0; k <= order(); ++k) r.at(k) = coeffs_[static_cast<std::size_t>(k)] * e;
    return r;
}

AlphaSeries AlphaSeries::scaled(const Rat& q) const {
    AlphaSeries r(order());
    for (int k = 0; k <= order(); ++k) r.at(k) = coeffs_[static_cast<std::size_t>(k)].scaled(q);
    return r;
}

AlphaSeries AlphaSeries::alternated() const {
    AlphaSeries r = *this;
    for (int k = 1; k <= order(); k += 2) r.at(k) = -r.at(k);
    return r;
}

AlphaSeries AlphaSeries::d_xi() const {
    AlphaSeries r(order());
    for (int k = 0; k <= order(); ++k) r.at(k) = coeffs_[static_cast<std::size_t>(k)].d_xi();
    return r;
}

AlphaSeries AlphaSeries::shifted_down(int k) const {
    for (int i = 0; i < k; ++i)
        if (!at(i).is_zero())
            throw ShiftError("series division: coefficient of alpha^" + std::to_string(i) +
                             " does not vanish");
    if (order() < k) throw TruncationError("series too short for the requested shift");
    std::vector<Expr> c(coeffs_.begin() + k, coeffs_.end());
    return AlphaSeries(std::move(c));
}

AlphaSeries AlphaSeries::compose_taylor(bool odd) const {
    if (!at(0).is_zero())
        throw DomainError("trig composition requires a vanishing constant coefficient");
    int v = order();
    AlphaSeries result(v);
    if (!odd) result.at(0) = Expr::one();

    // Powers of the argument truncate quickly: the argument has no constant
    // term, so x^m only contributes from alpha^m on.
    AlphaSeries power = *this;  // x^1
    int m = 1;
    while (m <= v) {
        bool use = odd ? (m % 2 == 1) : (m % 2 == 0);
        if (use && m >= 1) {
            // (-1)^{(m - (odd?1:0))/2} / m!
            int half = (odd ? m - 1 : m) / 2;
            Rat c(mpz_class(half % 2 == 0 ? 1 : -1), factorial(static_cast<unsigned>(m)));
            c.canonicalize();
            result = result + power.scaled(c);
        }
        ++m;
        if (m <= v) power = power * *this;
    }
    return result;
}

AlphaSeries AlphaSeries::compose_sin() const { return compose_taylor(true); }
AlphaSeries AlphaSeries::compose_cos() const { return compose_taylor(false); }

}  // namespace sgc
