#include "nsg/report.hpp"

#include <cstdio>
#include <limits>
#include <ostream>

namespace nsg {

using nlohmann::json;

std::string fixed3(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", value);
    return buf;
}

std::string_view survey_csv_header() noexcept {
    return "d1,d2,d3,d4,F,genus,class,c,bound_notci,bound_ci,bound_ns,tightness,identity_ok";
}

std::string survey_csv_row(const SurveyRecord& r) {
    std::string row;
    for (auto d : r.generators.elements()) row += std::to_string(d) + ',';
    row += std::to_string(r.frobenius) + ',' + std::to_string(r.genus) + ',';
    row += std::string(record_tag(r)) + ',';
    row += (r.c ? std::to_string(*r.c) : "") + ',';
    row += fixed3(r.bound_not_ci) + ',' + fixed3(r.bound_ci) + ',' + fixed3(r.bound_ns) + ',';
    row += (r.tightness ? fixed3(*r.tightness) : "") + ',';
    if (r.cls && std::holds_alternative<SymmetricNotCI>(*r.cls)) row += r.identity_ok ? "true" : "false";
    return row;
}

void write_survey(std::ostream& os, std::span<const SurveyRecord> records, SurveyFormat format) {
    if (format == SurveyFormat::Csv) {
        os << survey_csv_header() << '\n';
        for (const auto& r : records) os << survey_csv_row(r) << '\n';
    } else {
        for (const auto& r : records) os << to_json(r).dump() << '\n';
    }
}

std::string summary_line(const SummaryStats& s) {
    std::string line = "summary non_symmetric=" + std::to_string(s.non_symmetric) +
                       " symmetric_ci=" + std::to_string(s.symmetric_ci) +
                       " symmetric_not_ci=" + std::to_string(s.symmetric_not_ci) +
                       " skipped_gcd=" + std::to_string(s.skipped_gcd) +
                       " skipped_non_minimal=" + std::to_string(s.skipped_non_minimal) +
                       " repeated_a=" + std::to_string(s.repeated_a_instances);
    if (s.min_tightness) {
        line += " tightness_min=" + fixed3(*s.min_tightness) + " tightness_mean=" + fixed3(*s.mean_tightness) +
                " tightness_max=" + fixed3(*s.max_tightness);
    }
    if (s.worst_instance) line += " worst=" + s.worst_instance->to_string();
    return line;
}

json to_json(i128 value) {
    if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(value);
    return to_string(value);
}

json to_json(const GeneratorSet& g) { return json(std::vector<std::int64_t>(g.elements().begin(), g.elements().end())); }

json to_json(const NumeratorPoly& n) {
    json terms = json::array();
    for (const auto& [e, c] : n.terms()) terms.push_back({e, c});
    return terms;
}

json to_json(const SemigroupClass& cls) {
    json out{{"class", std::string(class_tag(cls))}};
    if (const auto* ci = std::get_if<SymmetricCI>(&cls)) {
        out["degrees"] = ci->degrees;
    } else if (const auto* nci = std::get_if<SymmetricNotCI>(&cls)) {
        out["c"] = nci->form.c;
        out["a"] = nci->form.a;
    }
    return out;
}

json to_json(const BoundReport& r) {
    json out{{"generators", to_json(r.generators)},
             {"sigma", r.sigma},
             {"pi", to_json(r.pi)},
             {"bound_not_ci", r.bound_not_ci},
             {"bound_ci", r.bound_ci},
             {"bound_ns", r.bound_ns}};
    if (r.exact_f) out["frobenius"] = *r.exact_f;
    if (r.cls) out.update(to_json(*r.cls));
    if (r.tightness) out["tightness"] = *r.tightness;
    return out;
}

json to_json(const SurveyRecord& r) {
    json out{{"generators", to_json(r.generators)},
             {"frobenius", r.frobenius},
             {"genus", r.genus},
             {"class", std::string(record_tag(r))},
             {"bound_not_ci", r.bound_not_ci},
             {"bound_ci", r.bound_ci},
             {"bound_ns", r.bound_ns}};
    if (r.cls) out.update(to_json(*r.cls));
    if (r.c) out["c"] = *r.c;
    out["tightness"] = r.tightness ? json(*r.tightness) : json(nullptr);
    if (r.cls && std::holds_alternative<SymmetricNotCI>(*r.cls)) {
        out["identity_ok"] = r.identity_ok;
        out["maclaurin_ok"] = r.maclaurin_ok;
        out["threshold_ok"] = r.threshold_ok;
    }
    return out;
}

json to_json(const SummaryStats& s) {
    json out{{"non_symmetric", s.non_symmetric},
             {"symmetric_ci", s.symmetric_ci},
             {"symmetric_not_ci", s.symmetric_not_ci},
             {"skipped_gcd", s.skipped_gcd},
             {"skipped_non_minimal", s.skipped_non_minimal},
             {"repeated_a_instances", s.repeated_a_instances}};
    if (s.min_tightness) {
        out["tightness_min"] = *s.min_tightness;
        out["tightness_mean"] = *s.mean_tightness;
        out["tightness_max"] = *s.max_tightness;
    }
    if (s.worst_instance) out["worst_instance"] = to_json(*s.worst_instance);
    return out;
}

}  // namespace nsg
