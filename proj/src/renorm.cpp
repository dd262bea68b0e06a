#include "renorm.hpp"

#include <algorithm>
#include <functional>

#include "errors.hpp"

namespace sgc {

namespace {

std::vector<std::pair<int, int>> argument_pairs(int l) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= l; ++i)
        for (int j = i + 1; j <= l; ++j) pairs.emplace_back(i, j);
    return pairs;
}

// Weak compositions of total into `slots` parts, first slot largest first.
void compositions(int slots, int total, std::vector<int>& current,
                  const std::function<void(const std::vector<int>&)>& emit) {
    if (slots == 0) {
        if (total == 0) emit(current);
        return;
    }
    for (int v = total; v >= 0; --v) {
        current.push_back(v);
        compositions(slots - 1, total - v, current, emit);
        current.pop_back();
    }
}

std::uint64_t binomial_u64(int n, int k) {
    if (k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned>(n), static_cast<unsigned>(k));
    if (!r.fits_ulong_p()) throw InternalError("ledger term count overflows 64 bits");
    return r.get_ui();
}

// Number of weak compositions of p into `slots` parts.
std::uint64_t composition_count(int slots, int p) {
    if (slots == 0) return p == 0 ? 1 : 0;
    return binomial_u64(p + slots - 1, slots - 1);
}

}  // namespace

std::vector<TermFamily> hbar_coefficient_terms(int l, int p, const std::vector<int>& signs) {
    if (l < 0 || p < 0) throw DomainError("negative expansion order");
    if (static_cast<int>(signs.size()) != l)
        throw DomainError("expected one coupling sign per argument");
    for (int s : signs)
        if (s != 1 && s != -1) throw DomainError("coupling signs must be +1 or -1");

    auto pairs = argument_pairs(l);
    std::vector<TermFamily> out;
    std::vector<int> current;
    std::function<void(const std::vector<int>&)> emit = [&](const std::vector<int>& comp) {
        TermFamily family;
        family.hbar_order = p;
        family.coupling_signs = signs;
        int sign = p % 2 == 0 ? 1 : -1;  // (-1)^p
        mpz_class denominator(1);
        for (std::size_t idx = 0; idx < comp.size(); ++idx) {
            int power = comp[idx];
            if (power == 0) continue;
            family.pair_powers.emplace_back(pairs[idx], power);
            const auto& [i, j] = pairs[idx];
            int pair_sign = signs[static_cast<std::size_t>(i - 1)] *
                            signs[static_cast<std::size_t>(j - 1)];
            if (pair_sign < 0 && power % 2 == 1) sign = -sign;
            denominator *= factorial(static_cast<unsigned>(power));
        }
        Rat q(mpz_class(sign), denominator);
        q.canonicalize();
        family.weight = Coupling::monomial(q, 2 * p);  // (a_i a_j)^{p_ij} carries a^{2p}
        out.push_back(std::move(family));
    };
    compositions(static_cast<int>(pairs.size()), p, current, emit);
    return out;
}

std::vector<std::pair<std::vector<int>, Rat>> functional_derivative_splits(int l, int j) {
    if (l < 1) throw DomainError("functional derivative split needs at least one slot");
    if (j < 0) throw DomainError("negative derivative order");
    std::vector<std::pair<std::vector<int>, Rat>> out;
    std::vector<int> current;
    std::function<void(const std::vector<int>&)> emit = [&](const std::vector<int>& comp) {
        out.emplace_back(comp, inverse_factorial_product(comp));
    };
    compositions(l, j, current, emit);
    return out;
}

int max_derivative_order(CurrentComponent component, int N) {
    if (N < 0) throw DomainError("negative hierarchy index");
    return component == CurrentComponent::S2 ? 2 * (N + 1) : 2 * N;
}

int scaling_degree_bound(const TermFamily& family) {
    int sd = 0;
    for (const auto& [arg, orders] : family.derivative_profile)
        for (int o : orders) sd += o;
    return sd;
}

Ambiguity ambiguity_bound(int sd) {
    if (sd < 0) throw DomainError("negative scaling degree");
    if (sd < 2) return Ambiguity{true, 0};
    return Ambiguity{false, sd - 2};
}

LedgerReport build_ledger(int N, int t, CurrentComponent component, int p_max) {
    if (N < 0 || t < 0 || p_max < 0) throw DomainError("negative ledger parameter");
    LedgerReport report;
    report.N = N;
    report.t = t;
    report.p_max = p_max;
    report.component = component;
    report.degree = component == CurrentComponent::S2 ? 2 * (N + 1) : 2 * N;
    report.derivative_budget = max_derivative_order(
        component == CurrentComponent::S2 ? CurrentComponent::S2 : CurrentComponent::Q1, N);
    report.ambiguity = ambiguity_bound(report.degree);

    int budget = report.derivative_budget;
    for (int l = 0; l <= t; ++l) {
        // The s1 parts carry the current's own argument inside the
        // time-ordered product, one extra vertex.
        int vertex_count = component == CurrentComponent::S2 ? l : l + 1;
        int pair_slots = vertex_count * (vertex_count - 1) / 2;
        for (int p = 0; p <= p_max; ++p) {
            LedgerCell cell;
            cell.l = l;
            cell.p = p;
            cell.term_count = composition_count(pair_slots, p);
            // Derivative-decorated propagators attach the first l vertices to
            // the current's argument, so any derivative at all needs l >= 1;
            // the profiles then exhaust the degree budget.
            cell.max_scaling_degree = l >= 1 ? budget : 0;
            if (cell.max_scaling_degree > budget) report.budget_respected = false;
            report.realized_max_scaling_degree =
                std::max(report.realized_max_scaling_degree, cell.max_scaling_degree);
            report.total_term_count += cell.term_count;
            report.cells.push_back(cell);
        }
    }
    return report;
}

std::string component_name(CurrentComponent c) {
    switch (c) {
        case CurrentComponent::S2: return "s2";
        case CurrentComponent::Q1: return "q1";
        case CurrentComponent::R1: return "r1";
    }
    return "?";
}

nlohmann::ordered_json LedgerReport::to_json() const {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["component"] = component == CurrentComponent::S2 ? "s2" : "s1";
    j["N"] = N;
    j["t"] = t;
    j["p_max"] = p_max;
    j["degree"] = degree;
    j["derivative_budget"] = derivative_budget;
    if (ambiguity.unique)
        j["ambiguity"] = {{"kind", "unique"}};
    else
        j["ambiguity"] = {{"kind", "delta_derivatives"}, {"max_order", ambiguity.max_delta_order}};
    j["realized_max_scaling_degree"] = realized_max_scaling_degree;
    j["budget_respected"] = budget_respected;
    j["total_term_count"] = total_term_count;
    nlohmann::ordered_json cells_json = nlohmann::ordered_json::array();
    for (const auto& cell : cells)
        cells_json.push_back({{"l", cell.l},
                              {"p", cell.p},
                              {"term_count", cell.term_count},
                              {"max_scaling_degree", cell.max_scaling_degree}});
    j["cells"] = cells_json;
    return j;
}

}  // namespace sgc
