#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "json.hpp"

#include "nsg/bounds.hpp"
#include "nsg/hilbert.hpp"
#include "nsg/survey.hpp"

namespace nsg {

/// Fixed three-decimal rendering used for every real value in text and CSV.
std::string fixed3(double value);

/// d1,d2,d3,d4,F,genus,class,c,bound_notci,bound_ci,bound_ns,tightness,identity_ok
std::string_view survey_csv_header() noexcept;
std::string survey_csv_row(const SurveyRecord& r);

enum class SurveyFormat { Csv, Jsonl };
void write_survey(std::ostream& os, std::span<const SurveyRecord> records, SurveyFormat format);

std::string summary_line(const SummaryStats& s);

nlohmann::json to_json(const GeneratorSet& g);
nlohmann::json to_json(const NumeratorPoly& n);
nlohmann::json to_json(const SemigroupClass& cls);
nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const SurveyRecord& r);
nlohmann::json to_json(const SummaryStats& s);

/// Integer as a JSON number when it fits 64 bits, as a decimal string otherwise.
nlohmann::json to_json(i128 value);

}  // namespace nsg
