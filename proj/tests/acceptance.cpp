// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "backlund.hpp"
#include "cones.hpp"
#include "currents.hpp"
#include "digest.hpp"
#include "expr_io.hpp"
#include "renorm.hpp"
#include "wavefront.hpp"

using namespace sgc;

namespace {

namespace fs = std::filesystem;

int g_failures = 0;

void run_criterion(int number, const std::string& label, double budget_seconds,
                   const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_budget = seconds <= budget_seconds;
    if (!in_budget && ok) detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
    bool pass = ok && in_budget;
    if (!pass) ++g_failures;
    std::printf("[%s] criterion %2d: %s (%.2fs%s)%s%s\n", pass ? "PASS" : "FAIL", number,
                label.c_str(), seconds, in_budget ? "" : " OVER BUDGET",
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
}

Expr jet_scaled(unsigned k, long num, int a_exp, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return Expr::jet(k).scaled(Coupling::monomial(q, a_exp));
}

// ---- criterion bodies ------------------------------------------------------

bool backlund_exactness(std::string& detail) {
    BacklundTable table = BacklundTable::build(4);
    Expr a1 = jet_scaled(1, 2, -1);
    Expr a2 = jet_scaled(2, 2, -2);
    Expr a3 = jet_scaled(3, 2, -3) +
              Expr::jet(1).pow(3).scaled(Coupling::monomial(Rat(1, 3), -1));
    Expr a4 = jet_scaled(4, 2, -4) +
              (Expr::jet(1).pow(2) * Expr::jet(2)).scaled(Coupling::monomial(Rat(2), -2));
    bool ok = table.at(1) == a1 && table.at(2) == a2 && table.at(3) == a3 && table.at(4) == a4;
    if (!ok) detail = "coefficient mismatch against the closed forms";
    return ok;
}

bool homogeneity_to_12(std::string& detail) {
    BacklundTable table = BacklundTable::build(12);
    HomogeneityReport report = verify_homogeneity(table);
    if (!report.all_ok) {
        for (const auto& e : report.entries)
            if (!e.ok) detail += "nu=" + std::to_string(e.nu) + " ";
    }
    return report.all_ok;
}

bool pde_oracle_to_10(std::string& detail) {
    BacklundTable table = BacklundTable::build(11);
    AlphaSeries residual = verify_pde_series(table, 10);
    if (!residual.is_zero()) {
        for (int k = 0; k <= residual.order(); ++k)
            if (!residual.at(k).is_zero()) detail += "alpha^" + std::to_string(k) + " ";
        return false;
    }
    return true;
}

bool current_exactness(std::string& detail) {
    BacklundTable table = BacklundTable::build(13);
    Expr s1_0 = Expr::cos_mode(1).scaled(Rat(2));
    Expr s2_0 = Expr::jet(1).pow(2);
    Expr s1_1 = Expr::cos_mode(1) * Expr::jet(1).pow(2).scaled(Rat(-1)) +
                Expr::sin_mode(1) * jet_scaled(2, -2, -1);
    Expr s2_1 = Expr::jet(1).pow(4).scaled(Rat(1, 4)) +
                (Expr::jet(1) * Expr::jet(3)).scaled(Coupling::monomial(Rat(2), -2)) +
                Expr::jet(2).pow(2).scaled(Coupling::monomial(Rat(1), -2));
    if (compute_s1(0, table) != s1_0 || compute_s2(0, table) != s2_0 ||
        compute_s1(1, table) != s1_1 || compute_s2(1, table) != s2_1) {
        detail = "component mismatch against the displayed forms";
        return false;
    }
    for (int n = 0; n <= 6; ++n) {
        CurrentPair pair = compute_current_pair(n, table);
        CurrentDegreeReport degrees = verify_current_degrees(pair);
        if (!degrees.all_ok) {
            detail = "degree failure at N=" + std::to_string(n);
            return false;
        }
        if (n >= 1) {
            auto [hom, deg] = pair.s1.degree();
            if (!hom || deg != 2 * n) {
                detail = "s1 degree failure at N=" + std::to_string(n);
                return false;
            }
        }
    }
    return true;
}

bool conservation_to_4(std::string& detail) {
    BacklundTable table = BacklundTable::build(9);
    for (int n = 0; n <= 4; ++n) {
        CurrentPair pair = compute_current_pair(n, table);
        if (!divergence_onshell(pair).is_zero()) {
            detail = "nonzero divergence at N=" + std::to_string(n);
            return false;
        }
    }
    detail = "exact zero through N=4";
    return true;
}

bool oracle_to_3(std::string& detail) {
    BacklundTable table = BacklundTable::build(7);
    for (int n = 0; n <= 3; ++n) {
        SeriesOracleResult oracle = series_oracle(n, table);
        if (!oracle.odd_coefficients_vanish) {
            detail = "odd coefficient survived at N=" + std::to_string(n);
            return false;
        }
        if (oracle.s1 != compute_s1(n, table) || oracle.s2 != compute_s2(n, table)) {
            detail = "oracle disagreement at N=" + std::to_string(n);
            return false;
        }
    }
    return true;
}

bool unit_coupling_commutes(std::string& detail) {
    BacklundTable table = BacklundTable::build(5);
    BacklundTable unit = table.substituted_coupling(Rat(1));
    for (int n = 0; n <= 2; ++n) {
        bool ok1 = compute_s1(n, unit).substitute_coupling(Rat(1)) ==
                   compute_s1(n, table).substitute_coupling(Rat(1));
        bool ok2 = compute_s2(n, unit).substitute_coupling(Rat(1)) ==
                   compute_s2(n, table).substitute_coupling(Rat(1));
        bool ok3 = divergence_onshell(compute_current_pair(n, unit)).is_zero();
        if (!ok1 || !ok2 || !ok3) {
            detail = "specialization mismatch at N=" + std::to_string(n);
            return false;
        }
    }
    return true;
}

std::uint64_t brute_force_composition_count(int slots, int total) {
    if (slots == 0) return total == 0 ? 1 : 0;
    std::uint64_t count = 0;
    for (int v = 0; v <= total; ++v) count += brute_force_composition_count(slots - 1, total - v);
    return count;
}

bool power_counting(std::string& detail) {
    for (int n = 0; n <= 10; ++n) {
        for (int t = 0; t <= 8; ++t) {
            LedgerReport s2 = build_ledger(n, t, CurrentComponent::S2, 6);
            if (s2.ambiguity.unique || s2.ambiguity.max_delta_order != 2 * n ||
                !s2.budget_respected) {
                detail = "s2 bound failure at N=" + std::to_string(n) + ", t=" + std::to_string(t);
                return false;
            }
            LedgerReport s1 = build_ledger(n, t, CurrentComponent::Q1, 6);
            int expected = 2 * (n - 1);
            bool ok = expected < 0
                          ? s1.ambiguity.unique
                          : !s1.ambiguity.unique && s1.ambiguity.max_delta_order == expected;
            if (!ok || !s1.budget_respected) {
                detail = "s1 bound failure at N=" + std::to_string(n) + ", t=" + std::to_string(t);
                return false;
            }
            // Independence of the hbar cap.
            for (int p : {0, 3}) {
                if (build_ledger(n, t, CurrentComponent::S2, p).ambiguity != s2.ambiguity ||
                    build_ledger(n, t, CurrentComponent::Q1, p).ambiguity != s1.ambiguity) {
                    detail = "bound varies with the hbar cap";
                    return false;
                }
            }
        }
    }
    for (int l = 0; l <= 6; ++l) {
        std::vector<int> signs(static_cast<std::size_t>(l), 1);
        for (int p = 0; p <= 6; ++p) {
            std::uint64_t enumerated = hbar_coefficient_terms(l, p, signs).size();
            std::uint64_t brute = brute_force_composition_count(l * (l - 1) / 2, p);
            if (enumerated != brute) {
                detail = "term count mismatch at l=" + std::to_string(l) +
                         ", p=" + std::to_string(p);
                return false;
            }
        }
    }
    return true;
}

bool wavefront_sweeps(std::string& detail) {
    std::ostringstream note;
    for (EdgeRule rule : {EdgeRule::Feynman, EdgeRule::AntiFeynman}) {
        WavefrontReport report = enumerate_and_verify(5, 5, rule, 0);
        if (!report.counterexamples.empty()) {
            detail = rule_name(rule) + ": " + std::to_string(report.counterexamples.size()) +
                     " counterexamples, first " + report.counterexamples[0].to_json().dump();
            return false;
        }
        if (report.collapse_mismatches != 0) {
            detail = rule_name(rule) + ": collapse verdict not preserved";
            return false;
        }
        note << rule_name(rule) << ": " << report.configurations_checked << " configs, "
             << report.degenerate_coincident_checked << " fully coincident ("
             << report.degenerate_coincident_zero_feasible << " zero-feasible, excluded). ";
    }
    detail = note.str();
    return true;
}

bool hormander_composition(std::string& detail) {
    for (int t = 0; t <= 6; ++t) {
        for (int l = 0; l <= t; ++l) {
            if (!retarded_times_wightman_composes(l, t)) {
                detail = "composition failed at l=" + std::to_string(l) +
                         ", t=" + std::to_string(t);
                return false;
            }
        }
    }
    return true;
}

// ---- criterion 11: CLI determinism ------------------------------------------

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args, const fs::path& scratch) {
    static int counter = 0;
    fs::path out_file = scratch / ("out_" + std::to_string(counter++) + ".txt");
    std::string cmd = std::string(SGC_CLI_PATH) + " " + args + " > " + out_file.string() +
                      " 2> " + (scratch / "stderr.txt").string();
    int rc = std::system(cmd.c_str());
    RunResult result;
    result.exit_code = rc == -1 ? -1 : WEXITSTATUS(rc);
    std::ifstream in(out_file);
    std::stringstream ss;
    ss << in.rdbuf();
    result.output = ss.str();
    return result;
}

std::string file_contents(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool cli_determinism(std::string& detail) {
    fs::path scratch = fs::temp_directory_path() /
                       ("sgc_acceptance_" + std::to_string(::getpid()));
    fs::remove_all(scratch);
    fs::create_directories(scratch);
    fs::path cache_cold = scratch / "cache_cold";
    fs::path cache_other = scratch / "cache_other";

    struct Case {
        std::string args;
        bool uses_cache;
    };
    std::vector<Case> cases = {
        {"backlund --max-nu 6 --format json", true},
        {"backlund --max-nu 6 --format latex", true},
        {"currents --max-N 2 --check all --format json", true},
        {"powercount --N 1 --t 4 --component s2 --format json", false},
        {"powercount --N 2 --t 4 --component s1 --format text", false},
        {"wavefront --n-max 3 --window 3 --rule feynman --format json", false},
    };

    for (const auto& c : cases) {
        std::string cold_args = c.args;
        if (c.uses_cache) cold_args += " --cache-dir " + cache_cold.string();
        RunResult first = run_cli(cold_args, scratch);
        RunResult second = run_cli(cold_args, scratch);  // cache hit where applicable
        if (first.exit_code != 0 || second.exit_code != 0) {
            detail = "nonzero exit for '" + c.args + "'";
            return false;
        }
        if (first.output != second.output) {
            detail = "rerun differs for '" + c.args + "'";
            return false;
        }
        if (c.uses_cache) {
            std::string fresh_args = c.args + " --cache-dir " + cache_other.string();
            RunResult fresh = run_cli(fresh_args, scratch);
            if (fresh.exit_code != 0 || fresh.output != first.output) {
                detail = "cold and cached outputs differ for '" + c.args + "'";
                return false;
            }
        }
    }

    // Cold and cached table artifacts agree byte for byte and the manifest
    // digests match the actual file contents.
    std::string table_cold = file_contents(cache_cold / "backlund_table.json");
    std::string table_other = file_contents(cache_other / "backlund_table.json");
    if (table_cold.empty() || table_cold != table_other) {
        detail = "cache artifacts differ between directories";
        return false;
    }
    nlohmann::json manifest;
    try {
        manifest = nlohmann::json::parse(file_contents(cache_cold / "manifest.json"));
    } catch (...) {
        detail = "manifest unreadable";
        return false;
    }
    for (const auto& [name, digest] : manifest.at("artifacts").items()) {
        std::string actual = sha256_hex(file_contents(cache_cold / name));
        if (actual != digest.get<std::string>()) {
            detail = "digest mismatch for " + name;
            return false;
        }
    }

    fs::remove_all(scratch);
    return true;
}

}  // namespace

int main() {
    std::printf("acceptance suite\n");

    run_criterion(1, "transformation coefficients match their closed forms", 1.0,
                  backlund_exactness);
    run_criterion(2, "homogeneity of degree nu through nu = 12", 60.0, homogeneity_to_12);
    run_criterion(3, "defining-equation residual vanishes through order 10", 120.0,
                  pde_oracle_to_10);
    run_criterion(4, "current components and degrees through N = 6", 60.0, current_exactness);
    run_criterion(5, "on-shell conservation through N = 3 (and N = 4)", 300.0, conservation_to_4);
    run_criterion(6, "series oracle equals the closed formulas through N = 3", 300.0, oracle_to_3);
    run_criterion(7, "unit-coupling specialization commutes through N = 2", 60.0,
                  unit_coupling_commutes);
    run_criterion(8, "power-counting bounds and term counts", 120.0, power_counting);
    run_criterion(9, "wavefront sweeps on the 5x5 window, 5 vertices", 600.0, wavefront_sweeps);
    run_criterion(10, "composition criterion through t = 6", 10.0, hormander_composition);
    run_criterion(11, "byte-identical CLI runs and digest-verified cache", 300.0,
                  cli_determinism);

    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
