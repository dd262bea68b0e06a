#pragma once

#include <string>

#include "backlund.hpp"
#include "cones.hpp"
#include "currents.hpp"
#include "renorm.hpp"
#include "wavefront.hpp"

namespace sgc {

enum class ReportFormat { Text, Json, Latex };

std::string render_table(const BacklundTable& table, ReportFormat format);

constexpr unsigned kCheckDegrees = 1u;
constexpr unsigned kCheckConservation = 2u;
constexpr unsigned kCheckOracle = 4u;
constexpr unsigned kCheckAll = 7u;

struct RenderedReport {
    std::string text;
    bool pass = true;
};

// Computes pairs 0..max_n, runs the selected checks, renders the report and
// (optionally) writes the per-index artifacts into cache_dir.
RenderedReport currents_report(const BacklundTable& table, int max_n, unsigned checks,
                               ReportFormat format, const std::string& cache_dir);

// Ledger report; pass means the ambiguity bound equals the component's
// degree minus two, every cell respects the budget, and rebuilding with any
// smaller t or p cap leaves the bound unchanged.
RenderedReport powercount_report(int n, int t, CurrentComponent component, int p_max,
                                 ReportFormat format);

RenderedReport wavefront_report(int n_max, int window, EdgeRule rule, int workers,
                                ReportFormat format);

}  // namespace sgc
