#pragma once

#include <string>
#include <vector>

#include "alpha_series.hpp"
#include "expr.hpp"
#include "partitions.hpp"

namespace sgc {

// Memoized coefficients of the parametric transformation power series. The
// recursion reuses every lower coefficient, so the table is the natural
// shape; completed tables are immutable and shareable.
class BacklundTable {
  public:
    // Builds coefficients 0..max_nu by the recursion.
    static BacklundTable build(int max_nu);

    // Wraps externally produced coefficients (cache load, coupling-substituted
    // tables). No recomputation, only shape checks.
    explicit BacklundTable(std::vector<Expr> coefficients);

    int max_nu() const { return static_cast<int>(coefficients_.size()) - 1; }

    // Throws TruncationError when nu exceeds the table depth.
    const Expr& at(int nu) const;

    const std::vector<Expr>& coefficients() const { return coefficients_; }

    // Extend in place up to max_nu (no-op if already deep enough).
    void extend(int max_nu);

    BacklundTable truncated(int max_nu) const;

    BacklundTable substituted_coupling(const Rat& value) const;

  private:
    BacklundTable() = default;
    std::vector<Expr> coefficients_;
};

struct HomogeneityEntry {
    int nu = 0;
    bool ok = false;
    long degree = 0;          // meaningful when ok
    std::string offending;    // rendered monomial when not ok
};

struct HomogeneityReport {
    std::vector<HomogeneityEntry> entries;
    bool all_ok = true;
};

// Checks degree(A_nu) == nu for every nu in the table. Violations are report
// entries, not exceptions.
HomogeneityReport verify_homogeneity(const BacklundTable& table);

// Residual series of the defining parametric PDE, truncated at `order`:
//   (1/2) d_xi(phi' + phi) - (1/alpha) sin((a/2)(phi' - phi)).
// Built by independent series composition; the recursion is correct iff every
// coefficient is the zero Expr. Requires table depth >= order + 1.
AlphaSeries verify_pde_series(const BacklundTable& table, int order);

}  // namespace sgc
