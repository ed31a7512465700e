// Acceptance suite: runs every reproduction criterion and prints one
// PASS/FAIL line per criterion.  ctest treats any failed criterion as a
// failed test via the doctest assertions.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <iostream>
#include <map>

#include "tycat/reproduce.hpp"

using namespace tycat;

TEST_CASE("acceptance criteria") {
    auto out_dir = std::filesystem::temp_directory_path() / "tycat_acceptance";
    std::filesystem::remove_all(out_dir);
    ReproduceOptions opts;
    opts.jobs = 1;
    opts.out_dir = out_dir.string();
    ReproduceResult res = run_reproduce_all(opts);

    REQUIRE(res.criteria.size() == 10);
    // stated per-criterion budgets, milliseconds
    std::map<int, std::int64_t> budget{{1, 1000},   {2, 1000},   {3, 610000}, {4, 30000},
                                       {5, 300000}, {6, 120000}, {7, 1000},   {8, 120000},
                                       {9, 610000}};
    for (const auto& c : res.criteria) {
        std::cout << (c.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " ("
                  << c.wall_ms << " ms)" << std::endl;
        CHECK_MESSAGE(c.pass, c.name);
        if (budget.count(c.id)) {
            CHECK_MESSAGE(c.wall_ms < budget.at(c.id), c.name, " exceeded its time budget");
        }
    }
    CHECK(res.all_pass);
    std::cout << "digest " << res.digest << std::endl;

    // headline numbers stay visible in the criterion payloads
    const json& details2 = res.criteria[1].details;
    CHECK(details2.at("k2_bicharacters").get<int>() == 4);
    const json& details9 = res.criteria[8].details;
    CHECK(details9.at("k2_symmetry_group_order").get<int>() == 72);

    // every emitted report validates against its shipped schema
    auto schema = [](const char* name) {
        return read_json_file(std::string(TYCAT_SCHEMA_DIR) + "/" + name);
    };
    std::string err;
    CHECK_MESSAGE(
        schema_check(read_json_file(opts.out_dir + "/summary.json"), schema("summary.schema.json"),
                     &err),
        err);
    CHECK_MESSAGE(
        schema_check(read_json_file(opts.out_dir + "/manifest.json"),
                     schema("manifest.schema.json"), &err),
        err);
    json crit_schema = schema("criterion.schema.json");
    int report_files = 0;
    for (const auto& entry : std::filesystem::directory_iterator(opts.out_dir + "/reports")) {
        ++report_files;
        CHECK_MESSAGE(schema_check(read_json_file(entry.path().string()), crit_schema, &err), err);
    }
    CHECK(report_files == 10);
    std::filesystem::remove_all(out_dir);
}
