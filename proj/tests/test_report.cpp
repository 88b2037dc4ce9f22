#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "delsarte/batch.hpp"
#include "delsarte/golden.hpp"
#include "delsarte/report.hpp"

using namespace delsarte;

TEST_CASE("Fermat degree three report") {
    InvariantReport r = analyze(QuotientSpec::fermat(3));
    CHECK(r.torsion.is_trivial());
    CHECK(r.rank_formula == 24);
    CHECK(r.fundamental_group.order == 1);
    CHECK(r.cls.is_fermat);
    CHECK_FALSE(r.generated_over_z);  // group order shares a factor with six
}

TEST_CASE("published matrix report") {
    InvariantReport r =
        analyze(QuotientSpec::matrix("diag(2,9,9)*[[-4,2,1],[-3,1,0],[1,0,1]]"));
    CHECK(r.fundamental_group.order == 3);
    std::vector<long> torsion;
    for (const Int& f : r.torsion.torsion_factors) torsion.push_back(to_long(f, "f"));
    CHECK(torsion == std::vector<long>{3, 3, 3, 3, 3, 3, 9});
}

TEST_CASE("diagonal 4,6,12 carries the maximal cyclic torsion") {
    InvariantReport r = analyze(QuotientSpec::diagonal({4, 6, 12}));
    CHECK(r.torsion.torsion_factors == std::vector<Int>{6});
    CHECK(diagonal_sbar(4, 6, 12) == 6);
}

TEST_CASE("generated-over-Z flag needs all four conjuncts") {
    CHECK(analyze(QuotientSpec::fermat(5)).generated_over_z);
    CHECK_FALSE(analyze(QuotientSpec::fermat(2)).generated_over_z);   // order not prime to 6
    CHECK_FALSE(analyze(QuotientSpec::matrix("diag(1,5,25)*[[2,0,-1],[4,1,-1],[1,0,0]]"))
                    .generated_over_z);  // nontrivial torsion
}

TEST_CASE("JSON report is deterministic and schema-stable") {
    std::string a = analyze(QuotientSpec::fermat(2)).to_json().dump();
    std::string b = analyze(QuotientSpec::fermat(2)).to_json().dump();
    CHECK(a == b);
    nlohmann::json j = nlohmann::json::parse(a);
    for (const char* key : {"bounds", "classification", "cyclic", "delta", "generated_over_z",
                            "group", "input", "pi1", "rank_k", "subgroup_orders", "torsion",
                            "torsion_tensored", "tensored_matches"})
        CHECK(j.contains(key));
    CHECK(j["cyclic"].is_null());  // not a cyclic quotient
    // vacuous bounds are still fully reported
    CHECK(j["bounds"]["best"]["layers"].size() == 3);

    nlohmann::json c = analyze(QuotientSpec::matrix("[[1,1,0],[3,0,3],[0,0,4]]")).to_json();
    CHECK(c["cyclic"].is_object());
    CHECK(c["cyclic"]["verification"]["factors_match"] == true);
}

TEST_CASE("permutation bounds appear only on request") {
    nlohmann::json base = analyze(QuotientSpec::fermat(2)).to_json();
    CHECK_FALSE(base["bounds"].contains("permutations"));
    nlohmann::json all = analyze(QuotientSpec::fermat(2), true).to_json();
    CHECK(all["bounds"]["permutations"].size() == 24);
}

TEST_CASE("batch output is deterministic and summarised") {
    BatchConfig config;
    config.seed = 1;
    config.count = 1;
    std::ostringstream first, second;
    batch_run(config, first);
    batch_run(config, second);
    CHECK(first.str() == second.str());
    std::istringstream lines(first.str());
    std::string report_line, summary_line;
    REQUIRE(std::getline(lines, report_line));
    REQUIRE(std::getline(lines, summary_line));
    nlohmann::json report = nlohmann::json::parse(report_line);
    CHECK(report["group"]["order"] == 1);
    CHECK(report["torsion"].empty());
    nlohmann::json summary = nlohmann::json::parse(summary_line);
    CHECK(summary["summary"]["count"] == 1);
}

TEST_CASE("batch with a nontrivial prefix stays consistent") {
    BatchConfig config;
    config.seed = 42;
    config.count = 5;
    config.diag = {1, 4, 4};
    std::ostringstream out;
    batch_run(config, out);
    std::istringstream lines(out.str());
    std::string line;
    int reports = 0;
    while (std::getline(lines, line)) {
        nlohmann::json j = nlohmann::json::parse(line);
        if (j.contains("summary")) break;
        CHECK(j["group"]["order"] == 16);
        CHECK(j["rank_k"]["formula"] == j["rank_k"]["snf"]);
        ++reports;
    }
    CHECK(reports == 5);
}

TEST_CASE("spec validation errors surface as such") {
    CHECK_THROWS_AS(analyze(QuotientSpec::matrix("[[1,0,0],[0,1,0],[0,0,0]]")), validation_error);
    CHECK_THROWS_AS(analyze(QuotientSpec::matrix("nonsense")), validation_error);
    CHECK_THROWS_AS(analyze(QuotientSpec::cyclic(6, {1, 1, 1, 1})), validation_error);
}

TEST_CASE("golden tables replay clean") {
    std::ostringstream out;
    CHECK(paper_examples(out) == 0);
    CHECK(out.str().find("FAIL") == std::string::npos);
}
