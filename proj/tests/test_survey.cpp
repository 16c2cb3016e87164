#include "doctest.h"
#include "nsg/report.hpp"
#include "nsg/survey.hpp"

#include <sstream>

using namespace nsg;

namespace {

std::string csv(const SurveyResult& r) {
    std::ostringstream os;
    write_survey(os, r.records, SurveyFormat::Csv);
    return os.str();
}

const SurveyRecord* find(const SurveyResult& r, std::initializer_list<std::int64_t> gens) {
    const auto g = GeneratorSet::make(gens);
    for (const auto& rec : r.records)
        if (rec.generators == g) return &rec;
    return nullptr;
}

}  // namespace

TEST_CASE("config validation") {
    CHECK_THROWS_AS(validate(SurveyConfig{.d_min = 1, .d_max = 5}), Error);
    CHECK_THROWS_AS(validate(SurveyConfig{.d_min = 9, .d_max = 5}), Error);
    CHECK_THROWS_AS(validate(SurveyConfig{.d_min = 5, .d_max = 300}), Error);
    CHECK_NOTHROW(validate(SurveyConfig{.d_min = 5, .d_max = 300, .force = true}));
    try {
        run_survey(SurveyConfig{.d_min = 1, .d_max = 5});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ConfigInvalid);
    }
}

TEST_CASE("survey over [5,10] finds <5,6,7,8>") {
    const auto r = run_survey({.d_min = 5, .d_max = 10});
    const auto* rec = find(r, {5, 6, 7, 8});
    REQUIRE(rec);
    REQUIRE(rec->cls);
    CHECK(std::holds_alternative<SymmetricNotCI>(*rec->cls));
    CHECK(rec->frobenius == 9);
    CHECK(rec->genus == 5);
    CHECK(rec->c == 35);
    REQUIRE(rec->tightness);
    CHECK(std::abs(*rec->tightness - 9.0 / 8.76) < 0.001);
    CHECK(survey_csv_row(*rec).rfind("5,6,7,8,9,5,symmetric_not_ci,35,8.760,", 0) == 0);
    // Only symmetric instances are emitted by default.
    for (const auto& x : r.records) CHECK_FALSE(std::holds_alternative<NonSymmetric>(*x.cls));
}

TEST_CASE("empty range") {
    const auto r = run_survey({.d_min = 5, .d_max = 6});
    CHECK(r.records.empty());
    CHECK(csv(r) == std::string(survey_csv_header()) + "\n");
}

TEST_CASE("emit_all and non-minimal handling") {
    const auto all = run_survey({.d_min = 5, .d_max = 12, .emit_all = true});
    const auto sym = run_survey({.d_min = 5, .d_max = 12});
    CHECK(all.records.size() == all.stats.non_symmetric + all.stats.symmetric_ci + all.stats.symmetric_not_ci);
    CHECK(sym.records.size() == sym.stats.symmetric_ci + sym.stats.symmetric_not_ci);
    CHECK(all.stats.skipped_non_minimal > 0);
    CHECK(find(all, {5, 7, 10, 12}) == nullptr);

    const auto loose = run_survey({.d_min = 5, .d_max = 12, .require_minimal = false, .emit_all = true});
    const auto* nm = find(loose, {5, 7, 10, 12});
    REQUIRE(nm);
    CHECK_FALSE(nm->cls);
    CHECK(record_tag(*nm) == "non_minimal");
}

TEST_CASE("survey laws hold over [5,20] and the count is stable") {
    const auto r = run_survey({.d_min = 5, .d_max = 20});
    std::size_t not_ci = 0;
    for (const auto& rec : r.records) {
        if (!std::holds_alternative<SymmetricNotCI>(*rec.cls)) continue;
        ++not_ci;
        CHECK(rec.identity_ok);
        CHECK(rec.maclaurin_ok);
        CHECK(rec.threshold_ok);
        CHECK(static_cast<double>(rec.frobenius) >= rec.bound_not_ci);
    }
    CHECK(not_ci == r.stats.symmetric_not_ci);
    // Frozen from an independent brute-force enumeration of the same range.
    CHECK(r.stats.symmetric_not_ci == 67);
    CHECK(r.stats.symmetric_ci == 42);
    CHECK(r.stats.non_symmetric == 677);
    CHECK(r.stats.skipped_non_minimal == 958);
    CHECK(r.stats.repeated_a_instances == 0);
}

TEST_CASE("determinism across worker counts") {
    const auto one = csv(run_survey({.d_min = 5, .d_max = 20, .jobs = 1}));
    const auto many = csv(run_survey({.d_min = 5, .d_max = 20, .jobs = 6}));
    CHECK(one == many);
}

TEST_CASE("summarize") {
    CHECK_THROWS_AS(summarize({}), Error);

    const auto single = survey_instance(GeneratorSet::make({5, 6, 7, 8}));
    const auto s = summarize(std::span(&single, 1));
    CHECK(s.symmetric_not_ci == 1);
    REQUIRE(s.min_tightness);
    CHECK(*s.min_tightness == *s.mean_tightness);
    CHECK(*s.mean_tightness == *s.max_tightness);
    CHECK(std::abs(*s.max_tightness - 1.027) < 0.001);

    std::vector<SurveyRecord> records{single, survey_instance(GeneratorSet::make({151, 154, 157, 158}))};
    const auto both = summarize(records);
    REQUIRE(both.max_tightness);
    CHECK(std::abs(*both.max_tightness - 2.004) < 0.001);
    CHECK(both.worst_instance == GeneratorSet::make({151, 154, 157, 158}));
}

TEST_CASE("explicit instance mode checks every law for the 151 example") {
    const auto rec = survey_instance(GeneratorSet::make({151, 154, 157, 158}));
    CHECK(rec.frobenius == 3635);
    CHECK(rec.c == 4255);
    CHECK(rec.identity_ok);
    CHECK(rec.maclaurin_ok);
    CHECK(rec.threshold_ok);
}
