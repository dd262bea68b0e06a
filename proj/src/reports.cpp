#include "reports.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "cache.hpp"
#include "errors.hpp"
#include "expr_io.hpp"

namespace sgc {

using nlohmann::ordered_json;

namespace {

std::string latex_document(const std::string& body) {
    return "\\documentclass{article}\n\\usepackage{amsmath}\n\\begin{document}\n" + body +
           "\\end{document}\n";
}

}  // namespace

std::string render_table(const BacklundTable& table, ReportFormat format) {
    switch (format) {
        case ReportFormat::Json:
            return TableCache::table_payload(table);
        case ReportFormat::Text: {
            std::ostringstream os;
            for (int nu = 0; nu <= table.max_nu(); ++nu)
                os << "A_" << nu << " = " << expr_to_text(table.at(nu)) << "\n";
            return os.str();
        }
        case ReportFormat::Latex: {
            std::ostringstream body;
            body << "\\begin{align*}\n";
            for (int nu = 0; nu <= table.max_nu(); ++nu) {
                body << "A_{" << nu << "} &= " << expr_to_latex(table.at(nu));
                body << (nu < table.max_nu() ? " \\\\\n" : "\n");
            }
            body << "\\end{align*}\n";
            return latex_document(body.str());
        }
    }
    throw InternalError("unknown format");
}

RenderedReport currents_report(const BacklundTable& table, int max_n, unsigned checks,
                               ReportFormat format, const std::string& cache_dir) {
    if (max_n < 0) throw DomainError("negative hierarchy index");

    struct Entry {
        CurrentPair pair;
        CurrentDegreeReport degrees;
        bool conservation_ok = true;
        bool oracle_ok = true;
        bool odd_vanish = true;
        bool reassembly_ok = true;
    };

    RenderedReport out;
    std::vector<Entry> entries;
    for (int n = 0; n <= max_n; ++n) {
        Entry e;
        e.pair = compute_current_pair(n, table);
        e.reassembly_ok =
            (Expr::cos_mode(1) * e.pair.q1 + Expr::sin_mode(1) * e.pair.r1) == e.pair.s1;
        if (checks & kCheckDegrees) {
            e.degrees = verify_current_degrees(e.pair);
            if (!e.degrees.all_ok) out.pass = false;
        }
        if (checks & kCheckConservation) {
            e.conservation_ok = divergence_onshell(e.pair).is_zero();
            if (!e.conservation_ok) out.pass = false;
        }
        if (checks & kCheckOracle) {
            SeriesOracleResult oracle = series_oracle(n, table);
            e.odd_vanish = oracle.odd_coefficients_vanish;
            e.oracle_ok = oracle.s1 == e.pair.s1 && oracle.s2 == e.pair.s2 && e.odd_vanish;
            if (!e.oracle_ok) out.pass = false;
        }
        if (!e.reassembly_ok) out.pass = false;
        if (!cache_dir.empty()) TableCache(cache_dir).store_current(e.pair);
        entries.push_back(std::move(e));
    }

    switch (format) {
        case ReportFormat::Json: {
            ordered_json j;
            j["schema_version"] = 1;
            j["max_N"] = max_n;
            ordered_json selected = ordered_json::array();
            if (checks & kCheckDegrees) selected.push_back("degrees");
            if (checks & kCheckConservation) selected.push_back("conservation");
            if (checks & kCheckOracle) selected.push_back("oracle");
            j["checks"] = selected;
            ordered_json list = ordered_json::array();
            for (const auto& e : entries) {
                ordered_json entry;
                entry["N"] = e.pair.N;
                entry["s1"] = expr_to_json(e.pair.s1);
                entry["s2"] = expr_to_json(e.pair.s2);
                entry["q1"] = expr_to_json(e.pair.q1);
                entry["r1"] = expr_to_json(e.pair.r1);
                entry["s1_text"] = expr_to_text(e.pair.s1);
                entry["s2_text"] = expr_to_text(e.pair.s2);
                entry["reassembly_ok"] = e.reassembly_ok;
                if (checks & kCheckDegrees) entry["degrees_ok"] = e.degrees.all_ok;
                if (checks & kCheckConservation) entry["conservation_ok"] = e.conservation_ok;
                if (checks & kCheckOracle) {
                    entry["oracle_ok"] = e.oracle_ok;
                    entry["odd_coefficients_vanish"] = e.odd_vanish;
                }
                list.push_back(std::move(entry));
            }
            j["entries"] = list;
            j["pass"] = out.pass;
            out.text = j.dump(2) + "\n";
            return out;
        }
        case ReportFormat::Text: {
            std::ostringstream os;
            os << "conserved currents, N = 0.." << max_n << "\n";
            for (const auto& e : entries) {
                os << "\nN = " << e.pair.N << "\n";
                os << "  s1 = " << expr_to_text(e.pair.s1) << "\n";
                os << "  s2 = " << expr_to_text(e.pair.s2) << "\n";
                os << "  reassembly: " << (e.reassembly_ok ? "ok" : "FAIL") << "\n";
                if (checks & kCheckDegrees)
                    os << "  degrees: " << (e.degrees.all_ok ? "ok" : "FAIL") << "\n";
                if (checks & kCheckConservation)
                    os << "  conservation: " << (e.conservation_ok ? "ok" : "FAIL") << "\n";
                if (checks & kCheckOracle)
                    os << "  oracle: " << (e.oracle_ok ? "ok" : "FAIL") << "\n";
            }
            os << "\nsummary: " << (out.pass ? "pass" : "fail") << "\n";
            out.text = os.str();
            return out;
        }
        case ReportFormat::Latex: {
            std::ostringstream body;
            body << "\\begin{align*}\n";
            for (std::size_t i = 0; i < entries.size(); ++i) {
                const auto& e = entries[i];
                body << "s_1^{" << e.pair.N << "} &= " << expr_to_latex(e.pair.s1) << " \\\\\n";
                body << "s_2^{" << e.pair.N << "} &= " << expr_to_latex(e.pair.s2);
                body << (i + 1 < entries.size() ? " \\\\\n" : "\n");
            }
            body << "\\end{align*}\n";
            out.text = latex_document(body.str());
            return out;
        }
    }
    throw InternalError("unknown format");
}

RenderedReport powercount_report(int n, int t, CurrentComponent component, int p_max,
                                 ReportFormat format) {
    LedgerReport ledger = build_ledger(n, t, component, p_max);

    int expected = component == CurrentComponent::S2 ? 2 * n : 2 * (n - 1);
    bool bound_ok = expected < 0 ? ledger.ambiguity.unique
                                 : (!ledger.ambiguity.unique &&
                                    ledger.ambiguity.max_delta_order == expected);

    // The super-renormalizability statement at ledger level: the bound is
    // unchanged under every smaller expansion order and hbar cap.
    bool stable = true;
    for (int tt = 0; tt <= t && stable; ++tt)
        stable = build_ledger(n, tt, component, p_max).ambiguity == ledger.ambiguity;
    for (int pp = 0; pp <= p_max && stable; ++pp)
        stable = build_ledger(n, t, component, pp).ambiguity == ledger.ambiguity;

    RenderedReport out;
    out.pass = bound_ok && stable && ledger.budget_respected;

    switch (format) {
        case ReportFormat::Json: {
            ordered_json j = ledger.to_json();
            j["expected_ambiguity_order"] = expected;
            j["bound_matches"] = bound_ok;
            j["stable_in_t_and_p"] = stable;
            j["pass"] = out.pass;
            out.text = j.dump(2) + "\n";
            return out;
        }
        case ReportFormat::Text: {
            std::ostringstream os;
            os << "power counting ledger: component "
               << (component == CurrentComponent::S2 ? "s2" : "s1") << ", N = " << n
               << ", t = " << t << ", p <= " << p_max << "\n";
            os << "degree " << ledger.degree << ", derivative budget "
               << ledger.derivative_budget << "\n";
            if (ledger.ambiguity.unique)
                os << "ambiguity: unique extension\n";
            else
                os << "ambiguity: delta derivatives up to order "
                   << ledger.ambiguity.max_delta_order << "\n";
            os << "realized max scaling degree: " << ledger.realized_max_scaling_degree << "\n";
            os << "stable in t and p: " << (stable ? "yes" : "NO") << "\n\n";
            os << std::setw(4) << "l" << std::setw(4) << "p" << std::setw(14) << "terms"
               << std::setw(8) << "max sd" << "\n";
            for (const auto& cell : ledger.cells)
                os << std::setw(4) << cell.l << std::setw(4) << cell.p << std::setw(14)
                   << cell.term_count << std::setw(8) << cell.max_scaling_degree << "\n";
            os << "\ntotal term count: " << ledger.total_term_count << "\n";
            os << "summary: " << (out.pass ? "pass" : "fail") << "\n";
            out.text = os.str();
            return out;
        }
        case ReportFormat::Latex: {
            std::ostringstream body;
            body << "\\begin{tabular}{rrrr}\n";
            body << "$l$ & $p$ & terms & max sd \\\\\n\\hline\n";
            for (const auto& cell : ledger.cells)
                body << cell.l << " & " << cell.p << " & " << cell.term_count << " & "
                     << cell.max_scaling_degree << " \\\\\n";
            body << "\\end{tabular}\n";
            out.text = latex_document(body.str());
            return out;
        }
    }
    throw InternalError("unknown format");
}

RenderedReport wavefront_report(int n_max, int window, EdgeRule rule, int workers,
                                ReportFormat format) {
    WavefrontReport report = enumerate_and_verify(n_max, window, rule, workers);

    RenderedReport out;
    out.pass = report.counterexamples.empty();

    switch (format) {
        case ReportFormat::Json: {
            ordered_json j = report.to_json();
            j["pass"] = out.pass;
            out.text = j.dump(2) + "\n";
            return out;
        }
        case ReportFormat::Text: {
            std::ostringstream os;
            os << "wavefront sweep: rule " << rule_name(rule) << ", n <= " << n_max << ", "
               << window << "x" << window << " window\n";
            os << "configurations checked: " << report.configurations_checked << "\n";
            os << "infeasible: " << report.infeasible_count << "\n";
            os << "degenerate fully coincident: " << report.degenerate_coincident_checked
               << " (all-zero feasible: " << report.degenerate_coincident_zero_feasible << ")\n";
            os << "collapse mismatches: " << report.collapse_mismatches << "\n";
            os << "counterexamples: " << report.counterexamples.size() << "\n";
            for (const auto& c : report.counterexamples)
                os << "  " << c.to_json().dump() << "\n";
            os << "summary: " << (out.pass ? "pass" : "fail") << "\n";
            out.text = os.str();
            return out;
        }
        case ReportFormat::Latex: {
            std::ostringstream body;
            body << "\\begin{tabular}{lr}\n";
            body << "rule & " << rule_name(rule) << " \\\\\n";
            body << "configurations & " << report.configurations_checked << " \\\\\n";
            body << "infeasible & " << report.infeasible_count << " \\\\\n";
            body << "counterexamples & " << report.counterexamples.size() << " \\\\\n";
            body << "\\end{tabular}\n";
            out.text = latex_document(body.str());
            return out;
        }
    }
    throw InternalError("unknown format");
}

}  // namespace sgc
