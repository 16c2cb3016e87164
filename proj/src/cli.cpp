#include "nsg/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <vector>

#include "CLI11.hpp"
#include "nsg/bounds.hpp"
#include "nsg/hilbert.hpp"
#include "nsg/report.hpp"
#include "nsg/semigroup.hpp"
#include "nsg/survey.hpp"

namespace nsg::cli {

namespace {

using nlohmann::json;

enum class Format { Text, Json, Csv };

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

GeneratorSet parse_generators(const std::vector<std::string>& tokens) {
    std::vector<std::int64_t> values;
    for (const auto& tok : tokens) {
        std::int64_t v = 0;
        const auto* end = tok.data() + tok.size();
        auto [ptr, ec] = std::from_chars(tok.data(), end, v);
        if (ec != std::errc{} || ptr != end || v <= 0)
            throw InputError("invalid generator '" + tok + "': must be a positive integer");
        values.push_back(v);
    }
    return GeneratorSet::make(values);
}

std::string join(std::span<const std::int64_t> v, char sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? std::string(1, sep) : "") + std::to_string(v[i]);
    return out;
}

const std::map<std::string, Format> kFormats{{"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};

void cmd_frobenius(const GeneratorSet& g, Format fmt, std::ostream& out) {
    const auto apery = apery_set(g);
    const auto f = frobenius(apery);
    const auto gen = genus(apery);
    const bool sym = is_symmetric(apery);
    switch (fmt) {
        case Format::Text: out << f << '\n'; break;
        case Format::Json:
            out << json{{"generators", to_json(g)}, {"frobenius", f}, {"genus", gen}, {"symmetric", sym}}.dump() << '\n';
            break;
        case Format::Csv:
            out << "generators,frobenius,genus,symmetric\n"
                << join(g.elements(), ' ') << ',' << f << ',' << gen << ',' << (sym ? "true" : "false") << '\n';
            break;
    }
}

void cmd_classify(const GeneratorSet& g, Format fmt, std::ostream& out) {
    const auto cls = classify(g);
    const auto f = frobenius(g);
    std::optional<std::int64_t> c;
    if (!std::holds_alternative<NonSymmetric>(cls)) c = f + g.sigma();
    const auto* ci = std::get_if<SymmetricCI>(&cls);
    const auto* nci = std::get_if<SymmetricNotCI>(&cls);
    switch (fmt) {
        case Format::Text:
            out << class_tag(cls) << '\n';
            if (c) out << "c=" << *c << '\n';
            if (nci) out << "a=[" << join(nci->form.a, ',') << "]\n";
            if (ci) out << "degrees=[" << join(ci->degrees, ',') << "]\n";
            break;
        case Format::Json: {
            json j{{"generators", to_json(g)}, {"frobenius", f}};
            j.update(to_json(cls));
            if (c) j["c"] = *c;
            out << j.dump() << '\n';
            break;
        }
        case Format::Csv:
            out << "generators,class,c,a,degrees\n"
                << join(g.elements(), ' ') << ',' << class_tag(cls) << ',' << (c ? std::to_string(*c) : "") << ','
                << (nci ? join(nci->form.a, ' ') : "") << ',' << (ci ? join(ci->degrees, ' ') : "") << '\n';
            break;
    }
}

void cmd_numerator(const GeneratorSet& g, Format fmt, std::ostream& out) {
    const auto poly = numerator(g);
    switch (fmt) {
        case Format::Text:
            for (const auto& [e, c] : poly.terms()) out << e << ' ' << c << '\n';
            break;
        case Format::Json:
            out << json{{"generators", to_json(g)}, {"degree", poly.degree()}, {"terms", to_json(poly)}}.dump() << '\n';
            break;
        case Format::Csv:
            out << "exponent,coefficient\n";
            for (const auto& [e, c] : poly.terms()) out << e << ',' << c << '\n';
            break;
    }
}

constexpr std::string_view kNs3Scope = "lower bound for nonsymmetric 3-generated semigroups";

void cmd_bounds(const GeneratorSet& g, bool exact, Format fmt, std::ostream& out) {
    if (g.size() == 3) {
        const double b = bound_ns3(g);
        std::optional<std::int64_t> f;
        if (exact) f = frobenius(g);
        switch (fmt) {
            case Format::Text:
                out << "bound_ns3=" << fixed3(b) << " (" << kNs3Scope << ")\n";
                if (f) out << "F=" << *f << "\ntightness=" << fixed3(static_cast<double>(*f) / b) << '\n';
                break;
            case Format::Json: {
                json j{{"generators", to_json(g)}, {"bound_ns3", b}, {"scope", kNs3Scope}};
                if (f) j["frobenius"] = *f;
                out << j.dump() << '\n';
                break;
            }
            case Format::Csv:
                out << "generators,bound_ns3,F\n"
                    << join(g.elements(), ' ') << ',' << fixed3(b) << ',' << (f ? std::to_string(*f) : "") << '\n';
                break;
        }
        return;
    }
    if (g.size() != 4)
        throw Error(ErrorKind::NotFourGenerators, "bounds needs 3 or 4 generators, got " + std::to_string(g.size()));

    const auto r = bound_report(g, exact);
    switch (fmt) {
        case Format::Text:
            out << "sigma=" << r.sigma << "\npi=" << to_string(r.pi) << "\nbound_not_ci=" << fixed3(r.bound_not_ci)
                << "\nbound_ci=" << fixed3(r.bound_ci) << "\nbound_ns=" << fixed3(r.bound_ns) << '\n';
            if (r.exact_f) out << "F=" << *r.exact_f << "\nclass=" << class_tag(*r.cls) << '\n';
            if (r.tightness) out << "tightness=" << fixed3(*r.tightness) << '\n';
            break;
        case Format::Json: out << to_json(r).dump() << '\n'; break;
        case Format::Csv:
            out << "generators,sigma,pi,bound_not_ci,bound_ci,bound_ns,F,class,tightness\n"
                << join(g.elements(), ' ') << ',' << r.sigma << ',' << to_string(r.pi) << ',' << fixed3(r.bound_not_ci)
                << ',' << fixed3(r.bound_ci) << ',' << fixed3(r.bound_ns) << ','
                << (r.exact_f ? std::to_string(*r.exact_f) : "") << ',' << (r.cls ? class_tag(*r.cls) : "") << ','
                << (r.tightness ? fixed3(*r.tightness) : "") << '\n';
            break;
    }
}

void cmd_survey(const SurveyConfig& cfg, const std::string& out_path, SurveyFormat fmt, std::ostream& out,
                std::ostream& err) {
    const auto result = run_survey(cfg);
    if (out_path.empty()) {
        write_survey(out, result.records, fmt);
        err << summary_line(result.stats) << '\n';
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw InputError("cannot open output file '" + out_path + "'");
    write_survey(file, result.records, fmt);
    out << summary_line(result.stats) << '\n';
}

}  // namespace

int exit_code(ErrorKind kind) noexcept { return is_defect(kind) ? Defect : InvalidInput; }

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Frobenius numbers, Hilbert numerators and lower bounds for numerical semigroups", "nsg"};
    app.require_subcommand(1);

    std::vector<std::string> gens;
    Format fmt = Format::Text;
    bool json_flag = false;
    bool exact = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("generators", gens, "generators of the semigroup")->required();
        sub->add_option("--format", fmt, "output format")->transform(CLI::CheckedTransformer(kFormats));
        sub->add_flag("--json", json_flag, "shorthand for --format json");
    };
    auto* frob = app.add_subcommand("frobenius", "Frobenius number, genus and symmetry");
    add_common(frob);
    auto* cls = app.add_subcommand("classify", "classify a 4-generated semigroup");
    add_common(cls);
    auto* num = app.add_subcommand("numerator", "Hilbert-series numerator, one 'exponent coefficient' per line");
    add_common(num);
    auto* bnd = app.add_subcommand("bounds", "closed-form lower bounds for F");
    add_common(bnd);
    bnd->add_flag("--exact", exact, "also compute F, the class and the tightness ratio");

    SurveyConfig cfg;
    std::string out_path;
    SurveyFormat survey_fmt = SurveyFormat::Csv;
    bool allow_non_minimal = false;
    auto* srv = app.add_subcommand("survey", "enumerate and classify all quadruples in a range");
    srv->add_option("--min", cfg.d_min, "smallest generator")->required();
    srv->add_option("--max", cfg.d_max, "largest generator")->required();
    srv->add_option("--out", out_path, "record file (stdout when omitted)");
    srv->add_option("--format", survey_fmt, "record format")
        ->transform(CLI::CheckedTransformer(std::map<std::string, SurveyFormat>{{"csv", SurveyFormat::Csv},
                                                                                {"jsonl", SurveyFormat::Jsonl}}));
    srv->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
    srv->add_flag("--all", cfg.emit_all, "emit non-symmetric instances too");
    srv->add_flag("--allow-non-minimal", allow_non_minimal, "emit non-minimal quadruples unclassified");
    srv->add_option("--cap", cfg.span_cap, "largest allowed max - min");
    srv->add_flag("--force", cfg.force, "ignore the range cap");

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return InvalidInput;
    }
    if (json_flag) fmt = Format::Json;
    cfg.require_minimal = !allow_non_minimal;

    try {
        if (*srv) {
            cmd_survey(cfg, out_path, survey_fmt, out, err);
            return Ok;
        }
        const auto g = parse_generators(gens);
        if (*frob) cmd_frobenius(g, fmt, out);
        if (*cls) cmd_classify(g, fmt, out);
        if (*num) cmd_numerator(g, fmt, out);
        if (*bnd) cmd_bounds(g, exact, fmt, out);
        return Ok;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return InvalidInput;
    } catch (const Error& e) {
        err << (is_defect(e.kind()) ? "defect: " : "error: ") << to_string(e.kind()) << ": " << e.what() << '\n';
        return exit_code(e.kind());
    }
}

}  // namespace nsg::cli
