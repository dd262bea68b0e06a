#include "backlund.hpp"

#include "errors.hpp"
#include "expr_io.hpp"

namespace sgc {

namespace {

// Next coefficient from the ones already known; valid for nu >= 2:
//   A_{nu+1} = (1/a) d_xi A_nu
//            + sum_{beta=0}^{floor(nu/2)-1} (-1)^beta (a/2)^{2(beta+1)}
//              sum_{partitions} A_1^{n_0} ... A_{nu-1-2beta}^{n_{nu-2-2beta}}
//                               / (n_0! ... n_{nu-2-2beta}!)
// with partition constraints sum n_i = 2 beta + 3 and weighted sum
// nu - 2 - 2 beta.
Expr next_coefficient(const std::vector<Expr>& a, int nu) {
    Expr result = a[static_cast<std::size_t>(nu)].d_xi().scaled(Coupling::monomial(Rat(1), -1));
    for (int beta = 0; 2 * beta <= nu - 2; ++beta) {
        int r = nu - 2 - 2 * beta;
        PartitionConstraint constraint{r, 2 * beta + 3, r};
        Rat prefactor = rat_pow(Rat(1, 2), static_cast<unsigned>(2 * (beta + 1)));
        if (beta % 2 == 1) prefactor = -prefactor;
        Coupling scale = Coupling::monomial(prefactor, 2 * (beta + 1));
        Expr sum;
        for (const auto& n : enumerate_partitions(constraint)) {
            Expr prod = Expr::one();
            for (int i = 0; i <= r; ++i) {
                int e = n[static_cast<std::size_t>(i)];
                if (e == 0) continue;
                prod *= a[static_cast<std::size_t>(i) + 1].pow(static_cast<unsigned>(e));
            }
            sum += prod.scaled(inverse_factorial_product(n));
        }
        result += sum.scaled(scale);
    }
    return result;
}

}  // namespace

BacklundTable BacklundTable::build(int max_nu) {
    BacklundTable t;
    t.extend(max_nu);
    return t;
}

BacklundTable::BacklundTable(std::vector<Expr> coefficients)
    : coefficients_(std::move(coefficients)) {
    if (coefficients_.empty()) throw DomainError("empty coefficient table");
}

const Expr& BacklundTable::at(int nu) const {
    if (nu < 0 || nu > max_nu())
        throw TruncationError("table holds coefficients up to order " + std::to_string(max_nu()) +
                              ", requested " + std::to_string(nu));
    return coefficients_[static_cast<std::size_t>(nu)];
}

void BacklundTable::extend(int max_nu) {
    if (max_nu < 0) throw DomainError("negative truncation order");
    if (coefficients_.empty()) coefficients_.push_back(Expr::field());  // A_0 = phi
    if (max_nu >= 1 && coefficients_.size() < 2)
        coefficients_.push_back(Expr::jet(1).scaled(Coupling::monomial(Rat(2), -1)));
    if (max_nu >= 2 && coefficients_.size() < 3)
        coefficients_.push_back(Expr::jet(2).scaled(Coupling::monomial(Rat(2), -2)));
    for (int nu = static_cast<int>(coefficients_.size()) - 1; nu < max_nu; ++nu)
        coefficients_.push_back(next_coefficient(coefficients_, nu));
}

BacklundTable BacklundTable::truncated(int max_nu) const {
    if (max_nu < 0 || max_nu > this->max_nu())
        throw TruncationError("cannot truncate a depth-" + std::to_string(this->max_nu()) +
                              " table to " + std::to_string(max_nu));
    std::vector<Expr> prefix(coefficients_.begin(), coefficients_.begin() + max_nu + 1);
    return BacklundTable(std::move(prefix));
}

BacklundTable BacklundTable::substituted_coupling(const Rat& value) const {
    std::vector<Expr> subst;
    subst.reserve(coefficients_.size());
    for (const auto& e : coefficients_) subst.push_back(e.substitute_coupling(value));
    return BacklundTable(std::move(subst));
}

HomogeneityReport verify_homogeneity(const BacklundTable& table) {
    HomogeneityReport report;
    for (int nu = 0; nu <= table.max_nu(); ++nu) {
        HomogeneityEntry entry;
        entry.nu = nu;
        const Expr& a = table.at(nu);
        auto [homogeneous, degree] = a.degree();
        entry.degree = degree;
        entry.ok = homogeneous && degree == nu;
        if (!entry.ok) {
            report.all_ok = false;
            entry.offending = expr_to_text(a);
        }
        report.entries.push_back(std::move(entry));
    }
    return report;
}

AlphaSeries verify_pde_series(const BacklundTable& table, int order) {
    if (order < 0) throw DomainError("negative residual order");
    if (table.max_nu() < order + 1)
        throw TruncationError("pde residual at order " + std::to_string(order) +
                              " needs table depth " + std::to_string(order + 1));

    int v = order + 1;
    AlphaSeries phi_prime(v);
    for (int nu = 0; nu <= v; ++nu) phi_prime.at(nu) = table.at(nu);

    // (a/2)(phi' - phi): the constant coefficient cancels because A_0 = phi.
    AlphaSeries argument(v);
    for (int nu = 0; nu <= v; ++nu) {
        Expr c = phi_prime.at(nu);
        if (nu == 0) c -= Expr::field();
        argument.at(nu) = c.scaled(Coupling::monomial(Rat(1, 2), 1));
    }

    AlphaSeries rhs = argument.compose_sin().shifted_down(1);

    AlphaSeries lhs(v);
    for (int nu = 0; nu <= v; ++nu) {
        Expr c = phi_prime.at(nu);
        if (nu == 0) c += Expr::field();
        lhs.at(nu) = c.d_xi().scaled(Rat(1, 2));
    }

    return (lhs.truncated(order)) - (rhs.truncated(order));
}

}  // namespace sgc
