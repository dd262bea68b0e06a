#pragma once

#include <vector>

namespace sgc {

// Exact linear feasibility over the rationals by Fourier-Motzkin elimination.
// Rows are integer-normalized (a common rational scaling of a constraint is
// irrelevant), so all arithmetic stays in 128-bit integers with gcd
// reduction; systems here are tiny.
struct LinearConstraint {
    enum class Relation { Eq, Ge };  // sum coeff[i] x_i + constant  (= | >=)  0

    std::vector<long long> coeff;
    long long constant = 0;
    Relation relation = Relation::Ge;
};

class LinearSystem {
  public:
    explicit LinearSystem(int variables) : variables_(variables) {}

    int variables() const { return variables_; }

    void add(const LinearConstraint& c);
    void add_eq(std::vector<long long> coeff, long long constant);
    void add_ge(std::vector<long long> coeff, long long constant);

    // Exact decision: does a rational point satisfy every constraint?
    bool feasible() const;

  private:
    int variables_;
    std::vector<LinearConstraint> rows_;
};

}  // namespace sgc
