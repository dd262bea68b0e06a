// Command-line front end. Links the public C interface only.

#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "sgcurrents.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitEnvironment = 2;
constexpr int kExitInternal = 3;

struct TableHandle {
    sgc_table* ptr = nullptr;
    ~TableHandle() { sgc_table_destroy(ptr); }
};

struct StringHandle {
    char* ptr = nullptr;
    ~StringHandle() { sgc_string_free(ptr); }
};

int status_exit_code(sgc_status status) {
    switch (status) {
        case SGC_OK: return kExitOk;
        case SGC_ERROR_INTERNAL: return kExitInternal;
        case SGC_ERROR_CACHE_CORRUPT:
        case SGC_ERROR_IO: return kExitEnvironment;
        default: return kExitEnvironment;
    }
}

int report_failure(sgc_status status) {
    std::fprintf(stderr, "error: %s\n", sgc_last_error_message());
    return status_exit_code(status);
}

sgc_format parse_format(const std::string& name) {
    if (name == "json") return SGC_FORMAT_JSON;
    if (name == "latex") return SGC_FORMAT_LATEX;
    return SGC_FORMAT_TEXT;
}

// Reuse a cached table when it is valid and deep enough, otherwise compute
// and refresh the cache.
int obtain_table(const std::string& cache_dir, int min_nu, TableHandle& handle) {
    sgc_status status = sgc_table_load(cache_dir.c_str(), min_nu, &handle.ptr);
    if (status != SGC_OK) return report_failure(status);
    if (handle.ptr) return kExitOk;
    status = sgc_table_create(min_nu, &handle.ptr);
    if (status != SGC_OK) return report_failure(status);
    status = sgc_table_save(handle.ptr, cache_dir.c_str());
    if (status != SGC_OK) return report_failure(status);
    return kExitOk;
}

int run_backlund(int max_nu, const std::string& format, const std::string& cache_dir) {
    TableHandle table;
    if (int rc = obtain_table(cache_dir, max_nu, table)) return rc;

    int depth = 0;
    sgc_table_max_nu(table.ptr, &depth);
    sgc_table* rendered_table = table.ptr;
    TableHandle truncated;
    sgc_status status;
    if (depth > max_nu) {
        status = sgc_table_truncated(table.ptr, max_nu, &truncated.ptr);
        if (status != SGC_OK) return report_failure(status);
        rendered_table = truncated.ptr;
    }

    int homogeneous = 0;
    status = sgc_table_check_homogeneity(rendered_table, &homogeneous);
    if (status != SGC_OK) return report_failure(status);
    if (!homogeneous) {
        std::fprintf(stderr, "error: homogeneity violated in the coefficient table\n");
        return kExitInternal;
    }

    StringHandle out;
    status = sgc_table_render(rendered_table, parse_format(format), &out.ptr);
    if (status != SGC_OK) return report_failure(status);
    std::fputs(out.ptr, stdout);
    return kExitOk;
}

int run_currents(int max_n, const std::string& check, const std::string& format,
                 const std::string& cache_dir) {
    unsigned checks = SGC_CHECK_ALL;
    if (check == "degrees") checks = SGC_CHECK_DEGREES;
    else if (check == "conservation") checks = SGC_CHECK_CONSERVATION;
    else if (check == "oracle") checks = SGC_CHECK_ORACLE;

    TableHandle table;
    if (int rc = obtain_table(cache_dir, 2 * max_n + 1, table)) return rc;

    StringHandle report;
    int pass = 0;
    sgc_status status = sgc_currents_report(table.ptr, max_n, checks, parse_format(format),
                                            cache_dir.c_str(), &report.ptr, &pass);
    if (status != SGC_OK) return report_failure(status);
    std::fputs(report.ptr, stdout);
    return pass ? kExitOk : kExitCheckFailed;
}

int run_powercount(int n, int t, const std::string& component, int p_max,
                   const std::string& format) {
    sgc_component c = component == "s1" ? SGC_COMPONENT_S1 : SGC_COMPONENT_S2;
    StringHandle report;
    int pass = 0;
    sgc_status status =
        sgc_powercount_report(n, t, c, p_max, parse_format(format), &report.ptr, &pass);
    if (status != SGC_OK) return report_failure(status);
    std::fputs(report.ptr, stdout);
    return pass ? kExitOk : kExitCheckFailed;
}

int run_wavefront(int n_max, int window, const std::string& rule, int workers,
                  const std::string& format) {
    sgc_edge_rule r = rule == "antifeynman" ? SGC_RULE_ANTIFEYNMAN
                      : rule == "wightman"  ? SGC_RULE_WIGHTMAN
                                            : SGC_RULE_FEYNMAN;
    std::fprintf(stderr, "sweeping connected graphs, n <= %d, %dx%d window, rule %s\n", n_max,
                 window, window, rule.c_str());
    StringHandle report;
    int pass = 0;
    sgc_status status = sgc_wavefront_report(n_max, window, r, workers, parse_format(format),
                                             &report.ptr, &pass);
    if (status != SGC_OK) return report_failure(status);
    std::fputs(report.ptr, stdout);
    return pass ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact sine-Gordon hierarchy engine"};
    app.require_subcommand(1);

    std::string cache_dir = "./.sg-cache";
    const char* env_cache = std::getenv("SG_CACHE_DIR");
    if (env_cache && *env_cache) cache_dir = env_cache;

    // backlund
    auto* backlund = app.add_subcommand("backlund", "compute the transformation coefficients");
    int max_nu = 4;
    std::string b_format = "text";
    std::string b_cache = cache_dir;
    backlund->add_option("--max-nu", max_nu, "highest coefficient order")
        ->check(CLI::NonNegativeNumber);
    backlund->add_option("--format", b_format)->check(CLI::IsMember({"text", "json", "latex"}));
    backlund->add_option("--cache-dir", b_cache);

    // currents
    auto* currents = app.add_subcommand("currents", "compute and verify conserved currents");
    int max_n = 1;
    std::string c_check = "all";
    std::string c_format = "text";
    std::string c_cache = cache_dir;
    currents->add_option("--max-N", max_n, "highest hierarchy index")
        ->check(CLI::NonNegativeNumber);
    currents->add_option("--check", c_check)
        ->check(CLI::IsMember({"all", "degrees", "conservation", "oracle"}));
    currents->add_option("--format", c_format)->check(CLI::IsMember({"text", "json", "latex"}));
    currents->add_option("--cache-dir", c_cache);

    // powercount
    auto* powercount = app.add_subcommand("powercount", "renormalization power-counting ledger");
    int pc_n = 0, pc_t = 2, pc_pmax = 6;
    std::string pc_component = "s2";
    std::string pc_format = "text";
    powercount->add_option("--N", pc_n)->check(CLI::NonNegativeNumber);
    powercount->add_option("--t", pc_t)->check(CLI::NonNegativeNumber);
    powercount->add_option("--component", pc_component)->check(CLI::IsMember({"s1", "s2"}));
    powercount->add_option("--p-max", pc_pmax)->check(CLI::NonNegativeNumber);
    powercount->add_option("--format", pc_format)->check(CLI::IsMember({"text", "json", "latex"}));

    // wavefront
    auto* wavefront = app.add_subcommand("wavefront", "null-grid wavefront feasibility sweep");
    int wf_nmax = 3, wf_window = 3, wf_workers = 0;
    std::string wf_rule = "feynman";
    std::string wf_format = "text";
    wavefront->add_option("--n-max", wf_nmax)->check(CLI::Range(1, 6));
    wavefront->add_option("--window", wf_window)->check(CLI::Range(1, 6));
    wavefront->add_option("--rule", wf_rule)
        ->check(CLI::IsMember({"feynman", "antifeynman", "wightman"}));
    wavefront->add_option("--workers", wf_workers);
    wavefront->add_option("--format", wf_format)->check(CLI::IsMember({"text", "json", "latex"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitEnvironment;
    }

    if (backlund->parsed()) return run_backlund(max_nu, b_format, b_cache);
    if (currents->parsed()) return run_currents(max_n, c_check, c_format, c_cache);
    if (powercount->parsed()) return run_powercount(pc_n, pc_t, pc_component, pc_pmax, pc_format);
    if (wavefront->parsed())
        return run_wavefront(wf_nmax, wf_window, wf_rule, wf_workers, wf_format);
    return kExitEnvironment;
}
