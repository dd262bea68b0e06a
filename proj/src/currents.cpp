#include "currents.hpp"

#include "errors.hpp"
#include "partitions.hpp"

namespace sgc {

namespace {

// Product A_{base+0}^{n_0} ... A_{base+R}^{n_R} / (n_0! ... n_R!).
Expr partition_product(const PartitionSolution& n, int base, const BacklundTable& table) {
    Expr prod = Expr::one();
    for (std::size_t i = 0; i < n.size(); ++i) {
        int e = n[i];
        if (e == 0) continue;
        prod *= table.at(base + static_cast<int>(i)).pow(static_cast<unsigned>(e));
    }
    return prod.scaled(inverse_factorial_product(n));
}

// Shared shape of the two coefficient sums in the first component: indices
// run 1..2N (slot 0 is forced empty), count constraint given per beta.
Expr s1_sector_sum(int N, const BacklundTable& table, bool sin_sector) {
    Expr sum;
    int beta_max = sin_sector ? N - 1 : N;
    for (int beta = 0; beta <= beta_max; ++beta) {
        int count = sin_sector ? 2 * beta + 1 : 2 * beta;
        PartitionConstraint constraint{2 * N, count, 2 * N};
        Expr inner;
        for (const auto& n : enumerate_partitions(constraint)) {
            if (n[0] != 0) continue;  // the multi-index starts at 1
            PartitionSolution shifted(n.begin() + 1, n.end());
            if (shifted.empty()) shifted.push_back(0);  // N = 0: empty product term
            inner += partition_product(shifted, 1, table);
        }
        int apow = sin_sector ? 2 * beta + 1 : 2 * beta;
        Rat prefactor = rat_pow(Rat(1, 2), static_cast<unsigned>(apow)) * Rat(2);
        bool negative = sin_sector ? (beta % 2 == 0) : (beta % 2 == 1);
        if (negative) prefactor = -prefactor;
        sum += inner.scaled(Coupling::monomial(prefactor, apow));
    }
    return sum;
}

}  // namespace

Expr compute_s1(int N, const BacklundTable& table) {
    if (N < 0) throw DomainError("negative hierarchy index");
    if (table.max_nu() < 2 * N)
        throw TruncationError("component s1 at index " + std::to_string(N) +
                              " needs table depth " + std::to_string(2 * N));
    Expr q = s1_sector_sum(N, table, /*sin_sector=*/false);
    Expr s1 = Expr::cos_mode(1) * q;
    if (N >= 1) {
        Expr r = s1_sector_sum(N, table, /*sin_sector=*/true);
        s1 += Expr::sin_mode(1) * r;
    }
    return s1;
}

Expr compute_s2(int N, const BacklundTable& table) {
    if (N < 0) throw DomainError("negative hierarchy index");
    if (table.max_nu() < 2 * N + 1)
        throw TruncationError("component s2 at index " + std::to_string(N) +
                              " needs table depth " + std::to_string(2 * N + 1));
    Expr sum;
    for (int mu = 0; mu <= N; ++mu) {
        int r = 2 * (N - mu);
        PartitionConstraint constraint{r, 2 * (mu + 1), r};
        Expr inner;
        for (const auto& n : enumerate_partitions(constraint))
            inner += partition_product(n, 1, table);
        Rat prefactor = rat_pow(Rat(1, 2), static_cast<unsigned>(2 * (mu + 1))) * Rat(2);
        if (mu % 2 == 1) prefactor = -prefactor;
        sum += inner.scaled(Coupling::monomial(prefactor, 2 * (mu + 1)));
    }
    return sum;
}

CurrentPair compute_current_pair(int N, const BacklundTable& table) {
    CurrentPair pair;
    pair.N = N;
    pair.q1 = s1_sector_sum(N, table, /*sin_sector=*/false);
    pair.r1 = N >= 1 ? s1_sector_sum(N, table, /*sin_sector=*/true) : Expr::zero();
    pair.s1 = Expr::cos_mode(1) * pair.q1 + Expr::sin_mode(1) * pair.r1;
    pair.s2 = compute_s2(N, table);
    return pair;
}

std::pair<Expr, Expr> decompose_s1(const Expr& s1) {
    Expr q, r;
    for (const auto& [key, c] : s1.terms()) {
        if (key.trig.is_unit())
            throw DomainError("decomposition: unexpected unit term");
        if (key.trig.mode != 1)
            throw DomainError("decomposition: unexpected trig mode " +
                              std::to_string(key.trig.mode));
        TermKey bare;
        bare.jets = key.jets;
        if (key.trig.kind == TrigMode::Kind::Cos)
            q.add_term(bare, c);
        else
            r.add_term(bare, c);
    }
    return {q, r};
}

Expr divergence_onshell(const CurrentPair& pair) {
    return pair.s1.d_xi() + pair.s2.d_tau_onshell();
}

SeriesOracleResult series_oracle(int N, const BacklundTable& table) {
    if (N < 0) throw DomainError("negative hierarchy index");
    if (table.max_nu() < 2 * N + 1)
        throw TruncationError("series oracle at index " + std::to_string(N) +
                              " needs table depth " + std::to_string(2 * N + 1));

    SeriesOracleResult result;
    result.odd_coefficients_vanish = true;

    // First component: cos((a/2)(phi + B_alpha phi)) plus the same at
    // -alpha. The constant part of the argument is a*phi, split off as
    // explicit cos/sin mode factors; the tails for +alpha and -alpha are
    // composed independently so the evenness of the sum is a computed fact.
    {
        int v = 2 * N + 1;  // odd coefficient 2N+1 is part of the evenness check
        AlphaSeries tail(v);
        for (int nu = 1; nu <= v && nu <= table.max_nu(); ++nu)
            tail.at(nu) = table.at(nu).scaled(Coupling::monomial(Rat(1, 2), 1));
        auto branch = [](const AlphaSeries& t) {
            return t.compose_cos().scaled(Expr::cos_mode(1)) -
                   t.compose_sin().scaled(Expr::sin_mode(1));
        };
        AlphaSeries s1_series = branch(tail) + branch(tail.alternated());
        for (int k = 1; k <= v; k += 2)
            if (!s1_series.at(k).is_zero()) result.odd_coefficients_vanish = false;
        result.s1 = s1_series.at(2 * N);
    }

    // Second component: (1/alpha^2) (2 - cos(...) - cos(...(-alpha))) with the
    // argument (a/2)(phi - B_alpha phi) = -(a/2) sum_{nu>=1} A_nu alpha^nu.
    // Internally order 2N+2; the top slot never feeds the result because the
    // argument has no constant term and the cosine series has no linear term.
    {
        int v = 2 * N + 2;
        AlphaSeries tail(v);
        for (int nu = 1; nu <= v && nu <= table.max_nu(); ++nu)
            tail.at(nu) = table.at(nu).scaled(Coupling::monomial(Rat(-1, 2), 1));
        AlphaSeries twos(v);
        twos.at(0) = Expr::constant(Rat(2));
        AlphaSeries s2_series =
            twos - tail.compose_cos() - tail.alternated().compose_cos();
        for (int k = 1; k <= v; k += 2)
            if (!s2_series.at(k).is_zero()) result.odd_coefficients_vanish = false;
        result.s2 = s2_series.shifted_down(2).at(2 * N);
    }

    return result;
}

CurrentDegreeReport verify_current_degrees(const CurrentPair& pair) {
    CurrentDegreeReport report;
    report.N = pair.N;
    auto check = [](const Expr& e, long expected) {
        if (e.is_zero()) return false;
        auto [hom, deg] = e.degree();
        return hom && deg == expected;
    };
    report.q1_ok = check(pair.q1, 2 * pair.N);
    report.r1_ok = pair.N == 0 ? true : check(pair.r1, 2 * pair.N);
    report.s2_ok = check(pair.s2, 2 * (pair.N + 1));
    report.all_ok = report.q1_ok && report.r1_ok && report.s2_ok;
    return report;
}

}  // namespace sgc
