#pragma once

#include <utility>

#include "backlund.hpp"
#include "expr.hpp"

namespace sgc {

// One member of the hierarchy of conserved currents: the two components and
// the cos/sin coefficient polynomials of the first one.
//   s1 = cos(a phi) q1 + sin(a phi) r1   (r1 identically zero at N = 0)
//   d_xi s1 + d_tau s2 = 0 on shell.
struct CurrentPair {
    int N = 0;
    Expr s1;
    Expr s2;
    Expr q1;
    Expr r1;
};

// Closed-formula evaluation. compute_s1 needs table depth >= 2N, compute_s2
// and the series oracle need >= 2N + 1; TruncationError otherwise.
Expr compute_s1(int N, const BacklundTable& table);
Expr compute_s2(int N, const BacklundTable& table);
CurrentPair compute_current_pair(int N, const BacklundTable& table);

// Exact cos/sin coefficient split of a first component. Requires every term
// to carry mode-1 sin or cos; a unit term or a mode >= 2 signals the input is
// not a first component and raises DomainError.
std::pair<Expr, Expr> decompose_s1(const Expr& s1);

// d_xi s1 + d_tau s2, canonical. Zero is the conservation law.
Expr divergence_onshell(const CurrentPair& pair);

struct SeriesOracleResult {
    Expr s1;
    Expr s2;
    // The defining formulas are even in the parameter; the odd coefficients
    // of the composed series must vanish identically.
    bool odd_coefficients_vanish = false;
};

// Independent derivation of (s1, s2) by composing the cosine series with the
// two signed transformation series and extracting the alpha^{2N} coefficient
// (with the exact alpha^{-2} shift for s2).
SeriesOracleResult series_oracle(int N, const BacklundTable& table);

struct CurrentDegreeReport {
    int N = 0;
    bool q1_ok = false;
    bool r1_ok = false;  // vacuously true at N = 0
    bool s2_ok = false;
    bool all_ok = false;
};

// deg q1 = deg r1 = 2N (r1 skipped at N = 0), deg s2 = 2(N+1).
CurrentDegreeReport verify_current_degrees(const CurrentPair& pair);

}  // namespace sgc
