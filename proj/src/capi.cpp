#include "sgcurrents.h"

#include <cstring>
#include <new>
#include <string>

#include "backlund.hpp"
#include "cache.hpp"
#include "cones.hpp"
#include "currents.hpp"
#include "errors.hpp"
#include "expr_io.hpp"
#include "reports.hpp"

using namespace sgc;

struct sgc_table {
    BacklundTable table;
};

struct sgc_expr {
    Expr expr;
};

namespace {

thread_local std::string g_last_error = "ok";

sgc_status fail(sgc_status status, const char* what) {
    g_last_error = what;
    return status;
}

// Maps the library exceptions onto the C status codes.
template <typename Fn>
sgc_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const DomainError& e) {
        return fail(SGC_ERROR_DOMAIN, e.what());
    } catch (const TruncationError& e) {
        return fail(SGC_ERROR_TRUNCATION, e.what());
    } catch (const ShiftError& e) {
        return fail(SGC_ERROR_SHIFT, e.what());
    } catch (const ParseError& e) {
        return fail(SGC_ERROR_PARSE, e.what());
    } catch (const CacheError& e) {
        return fail(SGC_ERROR_CACHE_CORRUPT, e.what());
    } catch (const InvalidImmersion& e) {
        return fail(SGC_ERROR_DOMAIN, e.what());
    } catch (const SlotMismatch& e) {
        return fail(SGC_ERROR_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc& e) {
        return fail(SGC_ERROR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(SGC_ERROR_INTERNAL, e.what());
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

ReportFormat to_format(sgc_format f) {
    switch (f) {
        case SGC_FORMAT_TEXT: return ReportFormat::Text;
        case SGC_FORMAT_JSON: return ReportFormat::Json;
        case SGC_FORMAT_LATEX: return ReportFormat::Latex;
    }
    throw DomainError("unknown format");
}

Rat rational_arg(long num, long den) {
    if (den == 0) throw DomainError("zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace

extern "C" {

const char* sgc_last_error_message(void) { return g_last_error.c_str(); }

void sgc_string_free(char* s) { delete[] s; }

sgc_status sgc_table_create(int max_nu, sgc_table** out) {
    if (!out || max_nu < 0) return fail(SGC_ERROR_INVALID_ARGUMENT, "bad argument");
    return guarded([&]() {
        *out = new sgc_table{BacklundTable::build(max_nu)};
        return SGC_OK;
    });
}

void sgc_table_destroy(sgc_table* table) { delete table; }

sgc_status sgc_table_max_nu(const sgc_table* table, int* out) {
    if (!table || !out) return fail(SGC_ERROR_INVALID_ARGUMENT, "bad argument");
    *out = table->table.max_nu();
    return SGC_OK;
}

sgc_status sgc_table_coefficient(const sgc_table* table, int nu, sgc_expr** out) {
    if (!table || !out) return fail(SGC_ERROR_INVALID_ARGUMENT, "bad argument");
    return guarded([&]() {
        *out = new sgc_expr{table->table.at(nu)};
        return SGC_OK;
    });
}

sgc_status sgc_table_substitute_coupling(const sgc_table* table, long num, long den,
                                         sgc_table** out) {
    if (!table || !out) return fail(SGC_ERROR_INVALID_ARGUMENT, "bad argument");
    return guarded([&]() {
        *out = new sgc_table{table->table.substituted_coupling(rational_arg(num, den))};
        return SGC_OK;
    });
}

sgc_status sgc_table_truncated(const sgc_table* table, int max_nu, sgc_table** out) {
    if (!table || !out) return fail(SGC_ERROR_INVALID_ARGUMENT, "bad argument");
    return guarded([&]() {
        *out = new sgc_table{table->table.truncated(max_nu)};
        return SGC_OK;
    });
}

sgc_status sgc_table_render(const sgc_table* table, sgc_format format, char** out) {
    if (!table || !out) return fail(SGC_ERROR_INVALID_ARGUMENT, "bad argument");
    return guarded([&]() {
        *out = dup_string(render_table(table->table, to_format(format)));
        return SGC_OK;
    });
}

sgc_status sgc_table_check_homogeneity(const sgc_table* table, int* pass) {
    if (!table || !pass) return fail(SGC_ERROR_INVALID_ARGUMENT, "bad argument");
    return guarded([&]() {
        *pass = verify_homogeneity(table->table).all_ok ? 1 : 0;
        return SGC_OK;
    });
}

sgc_status sgc_table_check_pde(const sgc_table* table, int order, int* pass) {
    if (!table || !pass) return fail(SGC_ERROR_INVALID_ARGUMENT, "bad argument");
    return guarded([&]() {
        *pass = verify_pde_series(table->table, order).is_zero() ? 1 : 0;
        return SGC_OK;
    });
}

sgc_status sgc_table_save(const sgc_table* table, const char* directory) {
    if (!table || !directory) return fail(SGC_ERROR_INVALID_ARGUMENT, "bad argument");
    return guarded([&]() {
        TableCache(directory).store(table->table);
        return SGC_OK;
    });
}

sgc_status sgc_table_load(const char* directory, int min_nu, sgc_table** out) {
    if (!directory || !out || min_nu < 0)
        return fail(SGC_ERROR_INVALID_ARGUMENT, "bad argument");
    return guarded([&]() {
        auto table = TableCache(directory).load(min_nu);
        *out = table ? new sgc_table{std::move(*table)} : nullptr;
        return SGC_OK;
    });
}

void sgc_expr_destroy(sgc_expr* expr) { delete expr; }

sgc_status sgc_expr_parse_json(const char* json_text, sgc_expr** out) {
    if (!json_text || !out) return fail(SGC_ERROR_INVALID_ARGUMENT, "bad argument");
    return guarded([&]() {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(json_text);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(e.what());
        }
        *out = new sgc_expr{expr_from_json(j)};
        return SGC_OK;
    });
}

sgc_status sgc_expr_render(const sgc_expr* expr, sgc_format format, char** out) {
    if (!expr || !out) return fail(SGC_ERROR_INVALID_ARGUMENT, "bad argument");
    return guarded([&]() {
        switch (to_format(format)) {
            case ReportFormat::Text: *out = dup_string(expr_to_text(expr->expr)); break;
            case ReportFormat::Json: *out = dup_string(expr_to_json(expr->expr).dump()); break;
            case ReportFormat::Latex: *out = dup_string(expr_to_latex(expr->expr)); break;
        }
        return SGC_OK;
    });
}

sgc_status sgc_expr_add(const sgc_expr* a, const sgc_expr* b, sgc_expr** out) {
    if (!a || !b || !out) return fail(SGC_ERROR_INVALID_ARGUMENT, "bad argument");
    return guarded([&]() {
        *out = new sgc_expr{a->expr + b->expr};
        return SGC_OK;
    });
}

sgc_status sgc_expr_mul(const sgc_expr* a, const sgc_expr* b, sgc_expr** out) {
    if (!a || !b || !out) return fail(SGC_ERROR_INVALID_ARGUMENT, "bad argument");
    return guarded([&]() {
        *out = new sgc_expr{a->expr * b->expr};
        return SGC_OK;
    });
}

sgc_status sgc_expr_d_xi(const sgc_expr* expr, sgc_expr** out) {
    if (!expr || !out) return fail(SGC_ERROR_INVALID_ARGUMENT, "bad argument");
    return guarded([&]() {
        *out = new sgc_expr{expr->expr.d_xi()};
        return SGC_OK;
    });
}

sgc_status sgc_expr_d_tau_onshell(const sgc_expr* expr, sgc_expr** out) {
    if (!expr || !out) return fail(SGC_ERROR_INVALID_ARGUMENT, "bad argument");
    return guarded([&]() {
        *out = new sgc_expr{expr->expr.d_tau_onshell()};
        return SGC_OK;
    });
}

sgc_status sgc_expr_degree(const sgc_expr* expr, int* homogeneous, long* degree) {
    if (!expr || !homogeneous || !degree)
        return fail(SGC_ERROR_INVALID_ARGUMENT, "bad argument");
    return guarded([&]() {
        auto [hom, deg] = expr->expr.degree();
        *homogeneous = hom ? 1 : 0;
        *degree = deg;
        return SGC_OK;
    });
}

sgc_status sgc_expr_substitute_coupling(const sgc_expr* expr, long num, long den,
                                        sgc_expr** out) {
    if (!expr || !out) return fail(SGC_ERROR_INVALID_ARGUMENT, "bad argument");
    return guarded([&]() {
        *out = new sgc_expr{expr->expr.substitute_coupling(rational_arg(num, den))};
        return SGC_OK;
    });
}

sgc_status sgc_expr_equals(const sgc_expr* a, const sgc_expr* b, int* out) {
    if (!a || !b || !out) return fail(SGC_ERROR_INVALID_ARGUMENT, "bad argument");
    *out = a->expr == b->expr ? 1 : 0;
    return SGC_OK;
}

sgc_status sgc_expr_is_zero(const sgc_expr* expr, int* out) {
    if (!expr || !out) return fail(SGC_ERROR_INVALID_ARGUMENT, "bad argument");
    *out = expr->expr.is_zero() ? 1 : 0;
    return SGC_OK;
}

sgc_status sgc_current_s1(const sgc_table* table, int n, sgc_expr** out) {
    if (!table || !out) return fail(SGC_ERROR_INVALID_ARGUMENT, "bad argument");
    return guarded([&]() {
        *out = new sgc_expr{compute_s1(n, table->table)};
        return SGC_OK;
    });
}

sgc_status sgc_current_s2(const sgc_table* table, int n, sgc_expr** out) {
    if (!table || !out) return fail(SGC_ERROR_INVALID_ARGUMENT, "bad argument");
    return guarded([&]() {
        *out = new sgc_expr{compute_s2(n, table->table)};
        return SGC_OK;
    });
}

sgc_status sgc_current_divergence(const sgc_table* table, int n, sgc_expr** out) {
    if (!table || !out) return fail(SGC_ERROR_INVALID_ARGUMENT, "bad argument");
    return guarded([&]() {
        CurrentPair pair = compute_current_pair(n, table->table);
        *out = new sgc_expr{divergence_onshell(pair)};
        return SGC_OK;
    });
}

sgc_status sgc_current_series_oracle(const sgc_table* table, int n, sgc_expr** s1,
                                     sgc_expr** s2, int* odd_vanish) {
    if (!table || !s1 || !s2 || !odd_vanish)
        return fail(SGC_ERROR_INVALID_ARGUMENT, "bad argument");
    return guarded([&]() {
        SeriesOracleResult r = series_oracle(n, table->table);
        *s1 = new sgc_expr{std::move(r.s1)};
        *s2 = new sgc_expr{std::move(r.s2)};
        *odd_vanish = r.odd_coefficients_vanish ? 1 : 0;
        return SGC_OK;
    });
}

sgc_status sgc_currents_report(const sgc_table* table, int max_n, unsigned checks,
                               sgc_format format, const char* cache_dir, char** report,
                               int* pass) {
    if (!table || !report || !pass) return fail(SGC_ERROR_INVALID_ARGUMENT, "bad argument");
    return guarded([&]() {
        RenderedReport r = currents_report(table->table, max_n, checks, to_format(format),
                                           cache_dir ? cache_dir : "");
        *report = dup_string(r.text);
        *pass = r.pass ? 1 : 0;
        return SGC_OK;
    });
}

sgc_status sgc_powercount_report(int n, int t, sgc_component component, int p_max,
                                 sgc_format format, char** report, int* pass) {
    if (!report || !pass) return fail(SGC_ERROR_INVALID_ARGUMENT, "bad argument");
    return guarded([&]() {
        CurrentComponent c =
            component == SGC_COMPONENT_S2 ? CurrentComponent::S2 : CurrentComponent::Q1;
        RenderedReport r = powercount_report(n, t, c, p_max, to_format(format));
        *report = dup_string(r.text);
        *pass = r.pass ? 1 : 0;
        return SGC_OK;
    });
}

sgc_status sgc_wavefront_report(int n_max, int window, sgc_edge_rule rule, int workers,
                                sgc_format format, char** report, int* pass) {
    if (!report || !pass) return fail(SGC_ERROR_INVALID_ARGUMENT, "bad argument");
    return guarded([&]() {
        EdgeRule r = rule == SGC_RULE_FEYNMAN       ? EdgeRule::Feynman
                     : rule == SGC_RULE_ANTIFEYNMAN ? EdgeRule::AntiFeynman
                                                    : EdgeRule::Wightman;
        RenderedReport rendered =
            wavefront_report(n_max, window, r, workers, to_format(format));
        *report = dup_string(rendered.text);
        *pass = rendered.pass ? 1 : 0;
        return SGC_OK;
    });
}

sgc_status sgc_hormander_check(int t_max, int* pass) {
    if (!pass || t_max < 0) return fail(SGC_ERROR_INVALID_ARGUMENT, "bad argument");
    return guarded([&]() {
        bool ok = true;
        for (int t = 0; t <= t_max && ok; ++t)
            for (int l = 0; l <= t && ok; ++l) ok = retarded_times_wightman_composes(l, t);
        *pass = ok ? 1 : 0;
        return SGC_OK;
    });
}

}  // extern "C"
