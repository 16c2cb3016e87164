#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nsg/bounds.hpp"
#include "nsg/hilbert.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

struct SurveyConfig {
    std::int64_t d_min = 5;
    std::int64_t d_max = 10;
    bool require_minimal = true;
    bool emit_all = false;  // otherwise only symmetric instances are emitted
    unsigned jobs = 1;
    std::int64_t span_cap = 200;  // guard on d_max - d_min
    bool force = false;           // lifts span_cap
};

void validate(const SurveyConfig& cfg);

struct SurveyRecord {
    GeneratorSet generators;
    std::int64_t frobenius = 0;
    std::int64_t genus = 0;
    std::optional<SemigroupClass> cls;  // absent for non-minimal sets
    std::optional<std::int64_t> c;  // numerator degree, symmetric classes only
    double bound_not_ci = 0;
    double bound_ci = 0;
    double bound_ns = 0;
    std::optional<double> tightness;
    // Checked laws; meaningful for symmetric_not_ci records only.
    bool identity_ok = false;
    bool maclaurin_ok = false;
    bool threshold_ok = false;
};

struct SummaryStats {
    std::size_t non_symmetric = 0;
    std::size_t symmetric_ci = 0;
    std::size_t symmetric_not_ci = 0;
    std::size_t skipped_gcd = 0;          // quadruples with gcd > 1
    std::size_t skipped_non_minimal = 0;  // counted, never classified
    std::size_t repeated_a_instances = 0; // not-CI a-lists with a repeated entry
    std::optional<double> min_tightness;
    std::optional<double> mean_tightness;
    std::optional<double> max_tightness;
    std::optional<GeneratorSet> worst_instance;  // largest tightness ratio
};

struct SurveyResult {
    std::vector<SurveyRecord> records;
    SummaryStats stats;
};

/// Classifies one minimal 4-generator set and checks every law that applies
/// to its class. Any violation throws ErrorKind::DefectReport with a dump of
/// the instance.
SurveyRecord survey_instance(const GeneratorSet& g);

/// Class tag, or "non_minimal" for unclassified records.
std::string_view record_tag(const SurveyRecord& r) noexcept;

/// All d_min <= d1 < d2 < d3 < d4 <= d_max with gcd 1, in lexicographic order
/// whatever the worker count.
SurveyResult run_survey(const SurveyConfig& cfg);

/// Class counts and tightness statistics over symmetric_not_ci records.
SummaryStats summarize(std::span<const SurveyRecord> records);

}  // namespace nsg
