#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "coupling.hpp"
#include "rational.hpp"

namespace sgc {

enum class CurrentComponent { S2, Q1, R1 };

// Bookkeeping record for one hbar-order term of a product expansion of
// vertex operators: propagator powers per argument pair, the exact
// multinomial weight (rational times an even coupling power), and the
// derivative orders carried by the propagators attached to the current's
// argument.
struct TermFamily {
    int hbar_order = 0;
    // ((i, j), p_ij) over pairs 1 <= i < j <= l, only nonzero powers, sorted.
    std::vector<std::pair<std::pair<int, int>, int>> pair_powers;
    Coupling weight;                 // (-1)^p prod (a_i a_j)^{p_ij} / prod p_ij!
    std::vector<int> coupling_signs; // one per argument, +1 or -1
    std::map<int, std::vector<int>> derivative_profile;  // argument -> orders >= 1
};

// All weak compositions of p over the C(l,2) argument pairs, with exact
// weights. For l < 2 there are no pairs: p = 0 yields the single empty
// family of weight 1, p > 0 yields nothing.
std::vector<TermFamily> hbar_coefficient_terms(int l, int p, const std::vector<int>& signs);

// All weak compositions of j into l slots with weights 1/(j_1! ... j_l!).
std::vector<std::pair<std::vector<int>, Rat>> functional_derivative_splits(int l, int j);

// Truncation order of the functional derivatives: 2(N+1) for the second
// component, 2N for either coefficient polynomial of the first.
int max_derivative_order(CurrentComponent component, int N);

// Subadditive scaling-degree estimate of a family: propagator powers carry
// degree 0, every derivative adds at most 1.
int scaling_degree_bound(const TermFamily& family);

// Extension ambiguity of a scaling degree: direct and unique below 2,
// otherwise delta derivatives up to order sd - 2.
struct Ambiguity {
    bool unique = true;
    int max_delta_order = 0;  // meaningful when !unique

    bool operator==(const Ambiguity&) const = default;
};

Ambiguity ambiguity_bound(int sd);

struct LedgerCell {
    int l = 0;
    int p = 0;
    std::uint64_t term_count = 0;  // pair-power families at this (l, p)
    int max_scaling_degree = 0;    // over the budget-consistent profiles
};

// Aggregated power-counting ledger for the retarded expansion of one
// component at order t. The ambiguity bound derives from the component's
// degree alone; the cells record that no enumerated family exceeds it.
struct LedgerReport {
    int N = 0;
    int t = 0;
    int p_max = 0;
    CurrentComponent component = CurrentComponent::S2;
    int degree = 0;                // 2(N+1) for s2, 2N for the s1 parts
    int derivative_budget = 0;     // == max_derivative_order
    Ambiguity ambiguity;           // from the budget; independent of t, l, p
    int realized_max_scaling_degree = 0;
    std::vector<LedgerCell> cells;
    std::uint64_t total_term_count = 0;
    bool budget_respected = true;  // no cell exceeded the budget

    nlohmann::ordered_json to_json() const;
};

// component: S2 uses C(l,2) vertex pairs; the s1 parts carry the current's
// argument as an extra vertex, C(l+1,2) pairs. p ranges 0..p_max per l.
LedgerReport build_ledger(int N, int t, CurrentComponent component, int p_max);

std::string component_name(CurrentComponent c);

}  // namespace sgc
