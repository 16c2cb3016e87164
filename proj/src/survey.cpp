#include "nsg/survey.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <numeric>
#include <sstream>
#include <thread>

namespace nsg {

namespace {

[[noreturn]] void defect(const GeneratorSet& g, const std::string& law, const std::string& detail) {
    throw Error(ErrorKind::DefectReport, "law violated for " + g.to_string() + ": " + law + " [" + detail + "]");
}

std::string dump(const SurveyRecord& r) {
    std::ostringstream os;
    os << "F=" << r.frobenius << " genus=" << r.genus << " sigma=" << r.generators.sigma()
       << " pi=" << to_string(r.generators.pi()) << " class=" << record_tag(r);
    if (r.c) os << " c=" << *r.c;
    if (const auto* nci = r.cls ? std::get_if<SymmetricNotCI>(&*r.cls) : nullptr) {
        os << " a=";
        for (auto a : nci->form.a) os << a << ' ';
    }
    return os.str();
}

struct Partition {
    std::vector<SurveyRecord> records;
    std::size_t skipped_gcd = 0;
    std::size_t skipped_non_minimal = 0;
};

Partition survey_partition(const SurveyConfig& cfg, std::int64_t d1) {
    Partition out;
    for (std::int64_t d2 = d1 + 1; d2 <= cfg.d_max; ++d2)
        for (std::int64_t d3 = d2 + 1; d3 <= cfg.d_max; ++d3)
            for (std::int64_t d4 = d3 + 1; d4 <= cfg.d_max; ++d4) {
                if (std::gcd(std::gcd(d1, d2), std::gcd(d3, d4)) != 1) {
                    ++out.skipped_gcd;
                    continue;
                }
                const auto g = GeneratorSet::make({d1, d2, d3, d4});
                if (!is_minimal_generating_set(g)) {
                    ++out.skipped_non_minimal;
                    if (cfg.require_minimal) continue;
                    const auto apery = apery_set(g);
                    out.records.push_back(
                        SurveyRecord{.generators = g, .frobenius = frobenius(apery), .genus = genus(apery),
                                     .bound_not_ci = bound_symmetric_not_ci(g), .bound_ci = bound_ci(g),
                                     .bound_ns = bound_ns4(g)});
                    continue;
                }
                out.records.push_back(survey_instance(g));
            }
    return out;
}

}  // namespace

void validate(const SurveyConfig& cfg) {
    if (cfg.d_min < 2)
        throw Error(ErrorKind::ConfigInvalid, "minimum generator " + std::to_string(cfg.d_min) + " is below 2");
    if (cfg.d_max < cfg.d_min)
        throw Error(ErrorKind::ConfigInvalid, "maximum " + std::to_string(cfg.d_max) + " is below minimum " +
                                                  std::to_string(cfg.d_min));
    if (!cfg.force && cfg.d_max - cfg.d_min > cfg.span_cap)
        throw Error(ErrorKind::ConfigInvalid, "range width " + std::to_string(cfg.d_max - cfg.d_min) +
                                                  " exceeds the cap of " + std::to_string(cfg.span_cap) +
                                                  " (use --force to override)");
}

SurveyRecord survey_instance(const GeneratorSet& g) {
    const auto apery = apery_set(g);
    SurveyRecord r{.generators = g, .frobenius = frobenius(apery), .genus = genus(apery)};
    const auto cls = classify(g);
    r.cls = cls;
    r.bound_not_ci = bound_symmetric_not_ci(g);
    r.bound_ci = bound_ci(g);
    r.bound_ns = bound_ns4(g);

    const bool symmetric = !std::holds_alternative<NonSymmetric>(cls);
    const std::int64_t f = r.frobenius;

    // Core laws on every instance.
    if (2 * r.genus < f + 1) defect(g, "genus >= (F+1)/2", dump(r));
    if ((2 * r.genus == f + 1) != symmetric) defect(g, "genus == (F+1)/2 iff symmetric", dump(r));
    if (symmetric && f % 2 == 0) defect(g, "symmetric implies F odd", dump(r));

    const auto poly = numerator(g, apery);
    if (poly.coeff(0) != 1) defect(g, "numerator constant term is 1", dump(r));
    if (poly.coefficient_sum() != 0) defect(g, "numerator coefficients sum to 0", dump(r));
    if (poly.degree() != f + g.sigma()) defect(g, "numerator degree is F + sigma", dump(r));
    if (poly.is_antipalindromic() != symmetric) defect(g, "numerator antipalindromic iff symmetric", dump(r));

    if (symmetric) r.c = poly.degree();

    if (const auto* ci = std::get_if<SymmetricCI>(&cls)) {
        const auto& e = ci->degrees;
        if (e[0] + e[1] + e[2] - g.sigma() != f) defect(g, "sum of relation degrees - sigma == F", dump(r));
        if (binomial_product(e) != poly) defect(g, "binomial product reproduces the numerator", dump(r));
    }

    if (const auto* nci = std::get_if<SymmetricNotCI>(&cls)) {
        const auto& form = nci->form;
        const auto sum = std::accumulate(form.a.begin(), form.a.end(), std::int64_t{0});
        if (sum != 2 * form.c) defect(g, "sum of a_j == 2c", dump(r));
        if (form.c != f + g.sigma()) defect(g, "c == F + sigma", dump(r));
        if (expand_bresinsky(form) != poly) defect(g, "Bresinsky form reproduces the numerator", dump(r));

        r.identity_ok = verify_key_identity(form.a, form.c, g.pi());
        r.maclaurin_ok = maclaurin_chain(symmetric_data(form.a));
        r.threshold_ok = exact_threshold_check(form.c, g.pi());
        if (!r.identity_ok) defect(g, "8 I3 - 6 I2 I1 + I1^3 == 24 pi4 and I1 == 2c", dump(r));
        if (!r.maclaurin_ok) defect(g, "Maclaurin chain on the a-list", dump(r));
        if (!r.threshold_ok) defect(g, "c^3 >= 25 pi4", dump(r));
        if (!verify_intermediate_inequalities(form.a, form.c, g.pi()))
            defect(g, "intermediate inequalities on J2, J3", dump(r));
    }

    if (const double b = applicable_bound(cls, r.bound_not_ci, r.bound_ci, r.bound_ns); b > 0.0) r.tightness = static_cast<double>(f) / b;
    return r;
}

std::string_view record_tag(const SurveyRecord& r) noexcept { return r.cls ? class_tag(*r.cls) : "non_minimal"; }

SurveyResult run_survey(const SurveyConfig& cfg) {
    validate(cfg);

    const std::int64_t first = cfg.d_min;
    const std::int64_t last = cfg.d_max - 3;  // d1 leaves room for three larger generators
    const std::size_t n_parts = last >= first ? static_cast<std::size_t>(last - first + 1) : 0;
    std::vector<Partition> parts(n_parts);
    std::vector<std::exception_ptr> errors(n_parts);

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < n_parts; i = next++) {
            try {
                parts[i] = survey_partition(cfg, first + static_cast<std::int64_t>(i));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned jobs = std::max(1u, cfg.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    }
    // Report the first failing partition in enumeration order.
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    SurveyResult result;
    std::size_t skipped_gcd = 0;
    std::size_t skipped_non_minimal = 0;
    for (auto& p : parts) {
        skipped_gcd += p.skipped_gcd;
        skipped_non_minimal += p.skipped_non_minimal;
        std::move(p.records.begin(), p.records.end(), std::back_inserter(result.records));
    }
    if (!result.records.empty()) result.stats = summarize(result.records);
    result.stats.skipped_gcd = skipped_gcd;
    result.stats.skipped_non_minimal = skipped_non_minimal;

    if (!cfg.emit_all)
        std::erase_if(result.records, [](const SurveyRecord& r) {
            return !r.cls || std::holds_alternative<NonSymmetric>(*r.cls);
        });
    return result;
}

SummaryStats summarize(std::span<const SurveyRecord> records) {
    if (records.empty()) throw Error(ErrorKind::EmptyInput, "no survey records to summarize");
    SummaryStats s;
    double total = 0;
    std::size_t counted = 0;
    for (const auto& r : records) {
        if (!r.cls) {
            ++s.skipped_non_minimal;
        } else if (std::holds_alternative<NonSymmetric>(*r.cls)) {
            ++s.non_symmetric;
        } else if (std::holds_alternative<SymmetricCI>(*r.cls)) {
            ++s.symmetric_ci;
        } else {
            ++s.symmetric_not_ci;
            const auto& a = std::get<SymmetricNotCI>(*r.cls).form.a;
            if (std::adjacent_find(a.begin(), a.end()) != a.end()) ++s.repeated_a_instances;
            if (!r.tightness) continue;
            const double t = *r.tightness;
            total += t;
            ++counted;
            if (!s.min_tightness || t < *s.min_tightness) s.min_tightness = t;
            if (!s.max_tightness || t > *s.max_tightness) {
                s.max_tightness = t;
                s.worst_instance = r.generators;
            }
        }
    }
    if (counted) s.mean_tightness = total / static_cast<double>(counted);
    return s;
}

}  // namespace nsg
