#include "doctest.h"

#include <cstring>
#include <string>

#include "sforest.h"

namespace {
std::string data_path(const char* name) { return std::string(SFP_DATA_DIR) + "/" + name; }
}  // namespace

TEST_CASE("instance lifecycle through the C interface") {
    sf_instance* inst = nullptr;
    REQUIRE(sf_instance_load(data_path("instA.sfp").c_str(), &inst) == SF_OK);
    CHECK(sf_instance_nodes(inst) == 4);
    CHECK(sf_instance_edges(inst) == 4);
    CHECK(sf_instance_sets(inst) == 1);

    char* text = nullptr;
    REQUIRE(sf_instance_to_string(inst, &text) == SF_OK);
    sf_instance* again = nullptr;
    REQUIRE(sf_instance_parse(text, &again) == SF_OK);
    CHECK(sf_instance_edges(again) == 4);
    sf_string_free(text);
    sf_instance_free(again);
    sf_instance_free(inst);
}

TEST_CASE("errors set a message and a matching code") {
    sf_instance* inst = nullptr;
    CHECK(sf_instance_parse("edge 0 1 1\n", &inst) == SF_ERR_PARSE);
    CHECK(std::strlen(sf_last_error()) > 0);
    CHECK(sf_instance_load("/nonexistent/x.sfp", &inst) == SF_ERR_PARSE);
    CHECK(sf_instance_generate(10, 9, 0.5, 1.8, 1, &inst) == SF_ERR_INVALID_ARGUMENT);
    CHECK(sf_instance_load(nullptr, &inst) == SF_ERR_INVALID_ARGUMENT);

    int kind = -1;
    CHECK(sf_kind_parse("bogus", &kind) == SF_ERR_INVALID_ARGUMENT);
}

TEST_CASE("kind enumeration round-trips") {
    REQUIRE(sf_kind_count() == 11);
    for (int i = 0; i < sf_kind_count(); ++i) {
        int back = -1;
        REQUIRE(sf_kind_parse(sf_kind_name(i), &back) == SF_OK);
        CHECK(back == i);
    }
}

TEST_CASE("relaxation and exact solves through the C interface") {
    sf_instance* inst = nullptr;
    REQUIRE(sf_instance_load(data_path("instA.sfp").c_str(), &inst) == SF_OK);

    int uc = -1;
    REQUIRE(sf_kind_parse("uc", &uc) == SF_OK);
    sf_bound_report report;
    REQUIRE(sf_solve_relaxation(inst, uc, 0, 0, &report) == SF_OK);
    CHECK(report.status == SF_RUN_OPTIMAL);
    CHECK(report.bound == doctest::Approx(2.0));
    CHECK(std::string(sf_run_status_name(report.status)) == "optimal");

    sf_exact_result exact;
    REQUIRE(sf_integer_optimum(inst, 0, &exact) == SF_OK);
    CHECK(exact.found == 1);
    CHECK(exact.optimal == 1);
    CHECK(exact.value == doctest::Approx(3.0));

    char* lp = nullptr;
    REQUIRE(sf_export_lp(inst, uc, &lp) == SF_OK);
    CHECK(std::string(lp).find("minimize") != std::string::npos);
    sf_string_free(lp);
    sf_instance_free(inst);
}

TEST_CASE("comparison with audit through the C interface") {
    sf_instance* inst = nullptr;
    REQUIRE(sf_instance_load(data_path("instB.sfp").c_str(), &inst) == SF_OK);
    int kinds[2];
    REQUIRE(sf_kind_parse("uc", &kinds[0]) == SF_OK);
    REQUIRE(sf_kind_parse("dc", &kinds[1]) == SF_OK);
    sf_bound_report reports[2];
    sf_dominance_check audit[8];
    int audit_count = 0;
    int all_passed = 0;
    REQUIRE(sf_compare(inst, kinds, 2, 0, 0, reports, audit, 8, &audit_count, &all_passed) ==
            SF_OK);
    CHECK(all_passed == 1);
    CHECK(audit_count == 8);
    CHECK(reports[0].bound == doctest::Approx(2.0));
    CHECK(reports[1].bound == doctest::Approx(2.0));
    bool found_ucdc = false;
    for (int i = 0; i < audit_count; ++i) {
        if (audit[i].weaker == kinds[0] && audit[i].stronger == kinds[1]) {
            found_ucdc = true;
            CHECK(audit[i].applicable == 1);
            CHECK(audit[i].passed == 1);
        }
    }
    CHECK(found_ucdc);
    CHECK(sf_compare(inst, kinds, 1, 0, 0, reports, nullptr, 0, nullptr, nullptr) ==
          SF_ERR_INVALID_ARGUMENT);
    sf_instance_free(inst);
}

TEST_CASE("build refusal surfaces per entry point") {
    sf_instance* inst = nullptr;
    REQUIRE(sf_instance_parse("nodes 4\nedge 0 1 1\nedge 2 3 1\nset 0 2\nset 1 3\n", &inst) ==
            SF_OK);
    int klsvz = -1;
    REQUIRE(sf_kind_parse("klsvz", &klsvz) == SF_OK);

    sf_bound_report report;
    REQUIRE(sf_solve_relaxation(inst, klsvz, 0, 0, &report) == SF_OK);
    CHECK(report.status == SF_RUN_BUILD_REFUSED);
    CHECK(std::strlen(report.detail) > 0);

    char* lp = nullptr;
    CHECK(sf_export_lp(inst, klsvz, &lp) == SF_ERR_BUILD_REFUSED);
    sf_instance_free(inst);
}
