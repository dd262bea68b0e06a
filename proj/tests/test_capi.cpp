#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>

#include "sgcurrents.h"

namespace {

struct Table {
    sgc_table* ptr = nullptr;
    ~Table() { sgc_table_destroy(ptr); }
};

struct ExprH {
    sgc_expr* ptr = nullptr;
    ~ExprH() { sgc_expr_destroy(ptr); }
};

struct Str {
    char* ptr = nullptr;
    ~Str() { sgc_string_free(ptr); }
    std::string get() const { return ptr ? ptr : ""; }
};

std::filesystem::path fresh_dir(const char* tag) {
    auto dir = std::filesystem::temp_directory_path() /
               (std::string("sgc_capi_") + tag + "_" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("table lifecycle and coefficient access") {
    Table t;
    REQUIRE(sgc_table_create(4, &t.ptr) == SGC_OK);
    int depth = -1;
    CHECK(sgc_table_max_nu(t.ptr, &depth) == SGC_OK);
    CHECK(depth == 4);

    ExprH a3;
    REQUIRE(sgc_table_coefficient(t.ptr, 3, &a3.ptr) == SGC_OK);
    Str text;
    REQUIRE(sgc_expr_render(a3.ptr, SGC_FORMAT_TEXT, &text.ptr) == SGC_OK);
    CHECK(text.get() == "(1/(3*a))*phi_x^3 + (2/a^3)*phi_xxx");

    ExprH missing;
    CHECK(sgc_table_coefficient(t.ptr, 9, &missing.ptr) == SGC_ERROR_TRUNCATION);
    CHECK(std::string(sgc_last_error_message()).find("table") != std::string::npos);

    Table prefix;
    REQUIRE(sgc_table_truncated(t.ptr, 2, &prefix.ptr) == SGC_OK);
    sgc_table_max_nu(prefix.ptr, &depth);
    CHECK(depth == 2);
}

TEST_CASE("expression algebra through the C surface") {
    Table t;
    REQUIRE(sgc_table_create(2, &t.ptr) == SGC_OK);
    ExprH a1, a2;
    REQUIRE(sgc_table_coefficient(t.ptr, 1, &a1.ptr) == SGC_OK);
    REQUIRE(sgc_table_coefficient(t.ptr, 2, &a2.ptr) == SGC_OK);

    ExprH sum, product, derivative;
    REQUIRE(sgc_expr_add(a1.ptr, a2.ptr, &sum.ptr) == SGC_OK);
    REQUIRE(sgc_expr_mul(a1.ptr, a1.ptr, &product.ptr) == SGC_OK);
    REQUIRE(sgc_expr_d_xi(a1.ptr, &derivative.ptr) == SGC_OK);

    int homogeneous = 0;
    long degree = -1;
    REQUIRE(sgc_expr_degree(product.ptr, &homogeneous, &degree) == SGC_OK);
    CHECK(homogeneous == 1);
    CHECK(degree == 2);
    REQUIRE(sgc_expr_degree(sum.ptr, &homogeneous, &degree) == SGC_OK);
    CHECK(homogeneous == 0);

    // d_xi A_1 is (2/a) phi_xx, the same as a A_2.
    ExprH scaled;
    REQUIRE(sgc_expr_substitute_coupling(a2.ptr, 1, 1, &scaled.ptr) == SGC_OK);
    int eq = 0;
    ExprH d_sub;
    REQUIRE(sgc_expr_substitute_coupling(derivative.ptr, 1, 1, &d_sub.ptr) == SGC_OK);
    REQUIRE(sgc_expr_equals(d_sub.ptr, scaled.ptr, &eq) == SGC_OK);
    CHECK(eq == 1);

    // json round trip
    Str json;
    REQUIRE(sgc_expr_render(a1.ptr, SGC_FORMAT_JSON, &json.ptr) == SGC_OK);
    ExprH parsed;
    REQUIRE(sgc_expr_parse_json(json.ptr, &parsed.ptr) == SGC_OK);
    REQUIRE(sgc_expr_equals(parsed.ptr, a1.ptr, &eq) == SGC_OK);
    CHECK(eq == 1);

    ExprH bad;
    CHECK(sgc_expr_parse_json("{not json", &bad.ptr) == SGC_ERROR_PARSE);
}

TEST_CASE("domain errors surface as status codes") {
    Table t;
    REQUIRE(sgc_table_create(1, &t.ptr) == SGC_OK);
    ExprH field;
    REQUIRE(sgc_table_coefficient(t.ptr, 0, &field.ptr) == SGC_OK);
    ExprH dtau;
    CHECK(sgc_expr_d_tau_onshell(field.ptr, &dtau.ptr) == SGC_ERROR_DOMAIN);

    ExprH s2;
    CHECK(sgc_current_s2(t.ptr, 1, &s2.ptr) == SGC_ERROR_TRUNCATION);
    CHECK(sgc_table_create(-1, &t.ptr) == SGC_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("current checks and reports") {
    Table t;
    REQUIRE(sgc_table_create(5, &t.ptr) == SGC_OK);

    ExprH divergence;
    REQUIRE(sgc_current_divergence(t.ptr, 1, &divergence.ptr) == SGC_OK);
    int zero = 0;
    REQUIRE(sgc_expr_is_zero(divergence.ptr, &zero) == SGC_OK);
    CHECK(zero == 1);

    ExprH o1, o2;
    int odd = 0;
    REQUIRE(sgc_current_series_oracle(t.ptr, 1, &o1.ptr, &o2.ptr, &odd) == SGC_OK);
    CHECK(odd == 1);
    ExprH s1;
    REQUIRE(sgc_current_s1(t.ptr, 1, &s1.ptr) == SGC_OK);
    int eq = 0;
    REQUIRE(sgc_expr_equals(o1.ptr, s1.ptr, &eq) == SGC_OK);
    CHECK(eq == 1);

    Str report;
    int pass = 0;
    REQUIRE(sgc_currents_report(t.ptr, 2, SGC_CHECK_ALL, SGC_FORMAT_JSON, nullptr, &report.ptr,
                                &pass) == SGC_OK);
    CHECK(pass == 1);
    CHECK(report.get().find("\"pass\": true") != std::string::npos);

    int hom = 0;
    REQUIRE(sgc_table_check_homogeneity(t.ptr, &hom) == SGC_OK);
    CHECK(hom == 1);
    int pde = 0;
    REQUIRE(sgc_table_check_pde(t.ptr, 4, &pde) == SGC_OK);
    CHECK(pde == 1);
}

TEST_CASE("cache round trip and corruption detection") {
    auto dir = fresh_dir("cache");
    Table t;
    REQUIRE(sgc_table_create(5, &t.ptr) == SGC_OK);
    REQUIRE(sgc_table_save(t.ptr, dir.c_str()) == SGC_OK);

    Table loaded;
    REQUIRE(sgc_table_load(dir.c_str(), 5, &loaded.ptr) == SGC_OK);
    REQUIRE(loaded.ptr != nullptr);
    ExprH a, b;
    REQUIRE(sgc_table_coefficient(t.ptr, 5, &a.ptr) == SGC_OK);
    REQUIRE(sgc_table_coefficient(loaded.ptr, 5, &b.ptr) == SGC_OK);
    int eq = 0;
    REQUIRE(sgc_expr_equals(a.ptr, b.ptr, &eq) == SGC_OK);
    CHECK(eq == 1);

    // Too shallow for the request: treated as absent, not as an error.
    Table deeper;
    REQUIRE(sgc_table_load(dir.c_str(), 9, &deeper.ptr) == SGC_OK);
    CHECK(deeper.ptr == nullptr);

    // Valid json whose bytes no longer match the manifest digest.
    {
        auto path = dir / "backlund_table.json";
        std::ofstream out(path, std::ios::app);
        out << "\n";
    }
    Table corrupt;
    CHECK(sgc_table_load(dir.c_str(), 2, &corrupt.ptr) == SGC_ERROR_CACHE_CORRUPT);

    // Unparseable table file is corruption too.
    {
        auto path = dir / "backlund_table.json";
        std::ofstream out(path, std::ios::trunc);
        out << "{broken";
    }
    Table broken;
    CHECK(sgc_table_load(dir.c_str(), 2, &broken.ptr) == SGC_ERROR_CACHE_CORRUPT);

    std::filesystem::remove_all(dir);
}

TEST_CASE("power counting and wavefront entry points") {
    Str report;
    int pass = 0;
    REQUIRE(sgc_powercount_report(1, 4, SGC_COMPONENT_S2, 4, SGC_FORMAT_JSON, &report.ptr,
                                  &pass) == SGC_OK);
    CHECK(pass == 1);
    CHECK(report.get().find("\"max_order\": 2") != std::string::npos);

    Str report_s1;
    REQUIRE(sgc_powercount_report(2, 6, SGC_COMPONENT_S1, 4, SGC_FORMAT_TEXT, &report_s1.ptr,
                                  &pass) == SGC_OK);
    CHECK(pass == 1);

    Str sweep;
    REQUIRE(sgc_wavefront_report(2, 3, SGC_RULE_FEYNMAN, 2, SGC_FORMAT_JSON, &sweep.ptr,
                                 &pass) == SGC_OK);
    CHECK(pass == 1);

    REQUIRE(sgc_hormander_check(3, &pass) == SGC_OK);
    CHECK(pass == 1);
}
