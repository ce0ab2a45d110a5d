#include "trivext/cli.hpp"

#include <ostream>
#include <set>
#include <sstream>
#include <utility>

#include <CLI11.hpp>

#include "trivext/criteria.hpp"
#include "trivext/literals.hpp"

namespace trivext::cli {
namespace {

/// Ordered key=value fields; text mode joins them on one line.
class Report {
public:
    Report& add(std::string key, std::string value) {
        fields_.emplace_back(std::move(key), std::move(value));
        return *this;
    }
    std::string structured() const {
        std::string out;
        for (const auto& [k, v] : fields_)
            out += k + "=" + v + "\n";
        return out;
    }
    std::string line(std::initializer_list<std::string_view> keys) const {
        std::string out;
        for (auto key : keys)
            for (const auto& [k, v] : fields_)
                if (k == key && !v.empty())
                    out += (out.empty() ? "" : " ") + k + "=" + v;
        return out + "\n";
    }

private:
    std::vector<std::pair<std::string, std::string>> fields_;
};

std::string boolean(bool b) { return b ? "true" : "false"; }

Report verdict_report(const Verdict& v) {
    Report r;
    r.add("verdict", verdict_name(v.kind))
        .add("domain", v.domain)
        .add("modulus", v.modulus)
        .add("certificate", certificate_string(v.certificate))
        .add("witness", v.witness)
        .add("witness_literal", v.witness_literal)
        .add("closure", v.closure)
        .add("gap", v.gap)
        .add("note", v.note)
        .add("seed", std::to_string(v.seed));
    return r;
}

std::string render_verdict(const Verdict& v, Format format) {
    const auto r = verdict_report(v);
    if (format == Format::Structured)
        return r.structured();
    if (v.kind == VerdictKind::InconclusiveRestricted)
        return r.line({"verdict", "note"});
    return r.line({"verdict", "certificate", "witness", "gap"});
}

const std::string& require(const std::optional<std::string>& value, const char* flag) {
    if (!value)
        throw CLI::RequiredError(flag);
    return *value;
}

template <FractionalDomain D>
typename D::Ideal modulus_of(const D& dom, const Request& req) {
    return req.modulus ? parse_ideal(dom, *req.modulus) : dom.unit_ideal();
}

/// Adds `key`, `key_kind` and `key_literal` (the ideal literal of the A or E part).
template <FractionalDomain D>
void add_normal_form(Report& r, const TrivialExtension<D>& R, const FgIdealNormalForm<D>& nf, const std::string& key) {
    const auto& dom = R.domain();
    std::string literal;
    if (const auto* ext = std::get_if<Extension<D>>(&nf))
        literal = dom.format_ideal(ext->ideal);
    else if (const auto* zp = std::get_if<ZeroPart<D>>(&nf))
        literal = dom.format_ideal(zp->submodule.carrier);
    r.add(key, R.format(nf)).add(key + "_kind", normal_form_kind<D>(nf)).add(key + "_literal", literal);
}

template <FractionalDomain D>
int run_on(const D& dom, const Request& req, std::ostream& out) {
    const bool text = req.format == Format::Text;
    switch (req.command) {
    case Command::Classify: {
        TrivialExtension<D> R(dom, modulus_of(dom, req));
        const auto gens = parse_generator_set(R, require(req.gens, "--gens"));
        const auto nf = R.classify(gens);
        if (text)
            out << R.format(nf) << "\n";
        else {
            Report r;
            add_normal_form(r, R, nf, "normal_form");
            out << r.structured();
        }
        return kExitOk;
    }
    case Command::Ann: {
        TrivialExtension<D> R(dom, modulus_of(dom, req));
        FgIdealNormalForm<D> target;
        if (req.gens) {
            const auto gens = parse_generator_set(R, *req.gens);
            target = R.classify(gens);
            const auto ann = gens.size() == 1 ? R.ann_of_element(gens.front()) : R.ann_of_ideal(target);
            if (text)
                out << R.format(ann) << "\n";
            else {
                Report r;
                add_normal_form(r, R, target, "target");
                add_normal_form(r, R, ann, "annihilator");
                out << r.structured();
            }
        } else {
            const auto K = parse_ideal(dom, require(req.ideal, "--ideal or --gens"));
            const auto sub = R.module().ann_of_ideal(K);
            if (text)
                out << dom.pretty(sub.carrier) << "/" << dom.pretty(sub.modulus) << "\n";
            else
                out << Report().add("ann_E", dom.format_ideal(sub.carrier)).structured();
        }
        return kExitOk;
    }
    case Command::Dac: {
        QuotientModule<D> E(dom, modulus_of(dom, req));
        const auto target = parse_ideal(dom, require(req.ideal, "--ideal"));
        const auto rep = req.submodule ? dac_check_submodule(E, target) : dac_check_ideal(E, target);
        Report r;
        r.add("condition", rep.condition == DacCondition::DAC1 ? "DAC1" : "DAC2")
            .add("holds", boolean(rep.holds))
            .add("input", text ? dom.pretty(rep.input) : dom.format_ideal(rep.input))
            .add("lhs", text ? dom.pretty(rep.lhs) : dom.format_ideal(rep.lhs))
            .add("identity_route", text ? dom.pretty(rep.identity_route) : dom.format_ideal(rep.identity_route))
            .add("routes_agree", boolean(rep.routes_agree))
            .add("unit_colon", boolean(rep.unit_colon));
        out << (text ? r.line({"condition", "holds", "input", "lhs", "identity_route", "routes_agree", "unit_colon"})
                     : r.structured());
        return kExitOk;
    }
    case Command::Divisorial: {
        const auto J = parse_ideal(dom, require(req.ideal, "--ideal"));
        const auto ref = req.ref ? parse_ideal(dom, *req.ref) : dom.unit_ideal();
        const auto res = is_divisorial(dom, J, ref);
        if (text) {
            out << boolean(res.divisorial);
            if (!res.divisorial)
                out << " closure=" << dom.pretty(res.closure) << " gap=" << format_gap(dom, res.gap);
            out << "\n";
        } else {
            out << Report()
                       .add("divisorial", boolean(res.divisorial))
                       .add("closure", dom.format_ideal(res.closure))
                       .add("gap", res.divisorial ? "" : format_gap(dom, res.gap))
                       .structured();
        }
        return kExitOk;
    }
    case Command::Semiregular: {
        const auto I = req.ideal ? parse_ideal(dom, *req.ideal) : modulus_of(dom, req);
        VerdictBudget budget;
        budget.samples = req.samples.value_or(budget.samples);
        budget.window = req.window;
        budget.seed = req.seed;
        const auto v = semiregular_verdict(dom, I, budget);
        out << render_verdict(v, req.format);
        return v.kind == VerdictKind::InconclusiveRestricted ? kExitInconclusive : kExitOk;
    }
    case Command::Coherence: {
        const auto cert = coherence_certificate(dom, modulus_of(dom, req), req.samples.value_or(100), req.seed);
        std::string counts;
        for (auto c : std::set<std::size_t>(cert.annihilator_generator_counts.begin(),
                                            cert.annihilator_generator_counts.end()))
            counts += (counts.empty() ? "" : ",") + std::to_string(c);
        Report r;
        r.add("coherent", boolean(cert.passed))
            .add("noetherian_assumption", boolean(cert.noetherian_assumption))
            .add("torsion_samples", std::to_string(cert.torsion_samples))
            .add("ann_generator_counts", counts)
            .add("intersection_samples", std::to_string(cert.intersection_samples))
            .add("failure", cert.failure)
            .add("seed", std::to_string(cert.seed));
        out << (text ? r.line({"coherent", "torsion_samples", "ann_generator_counts", "intersection_samples",
                               "failure", "seed"})
                     : r.structured());
        return kExitOk;
    }
    case Command::PaperExamples: break;
    }
    return kExitOk;
}

int run_field(const FieldBranch& field, const Request& req, std::ostream& out) {
    if (req.command == Command::Coherence)
        coherence_certificate(field);
    if (req.command != Command::Semiregular)
        throw Error(Errc::UnsupportedCombination, "the field branch supports only the semiregular command");
    out << render_verdict(semiregular_verdict(field), req.format);
    return kExitOk;
}

} // namespace

std::string paper_examples(Format format, std::uint64_t seed) {
    struct Row {
        std::string domain;
        std::string modulus;
    };
    const Row rows[] = {
        {"Z", "Z: 1"},         {"Q[t]", "Q[t]: 1"},   {"OK(-5)", "OK: gens(1,w)"}, {"NS(3,4,5)", "NS: {0}"},
        {"NS(2,3)", "NS: {0}"}, {"Field(1)", ""},       {"Field(2)", ""},
    };
    std::ostringstream out;
    if (format == Format::Text)
        out << "# semi-regularity of A ⋉ Q(A)/I, seed=" << seed << "\n";
    for (const auto& row : rows) {
        Request req;
        req.command = Command::Semiregular;
        req.domain = row.domain;
        if (!row.modulus.empty())
            req.ideal = row.modulus;
        req.seed = seed;
        req.format = Format::Structured;
        std::ostringstream body, err;
        run(req, body, err);
        if (format == Format::Structured) {
            out << body.str() << "\n";
            continue;
        }
        std::string verdict, certificate, witness, gap, note;
        std::istringstream lines(body.str());
        for (std::string l; std::getline(lines, l);) {
            const auto eq = l.find('=');
            const auto key = l.substr(0, eq), value = l.substr(eq + 1);
            if (key == "verdict")
                verdict = value;
            else if (key == "certificate")
                certificate = value;
            else if (key == "witness")
                witness = value;
            else if (key == "gap")
                gap = value;
            else if (key == "note")
                note = value;
        }
        std::string line = row.domain + " | I=" + (row.modulus.empty() ? "-" : row.modulus) + " | " + verdict;
        if (!certificate.empty())
            line += " | certificate=" + certificate;
        if (!witness.empty())
            line += " | witness=" + witness + " gap=" + gap;
        if (!note.empty())
            line += " | " + note;
        out << line << "\n";
    }
    return out.str();
}

int run(const Request& req, std::ostream& out, std::ostream& err) {
    try {
        if (req.command == Command::PaperExamples) {
            out << paper_examples(req.format, req.seed);
            return kExitOk;
        }
        const auto domain = parse_domain(req.domain);
        return std::visit(
            [&](const auto& dom) {
                using T = std::decay_t<decltype(dom)>;
                if constexpr (std::is_same_v<T, FieldBranch>)
                    return run_field(dom, req, out);
                else
                    return run_on(dom, req, out);
            },
            domain);
    } catch (const CLI::Error& e) {
        err << "error: missing " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Matlis semi-regularity of A ⋉ Q(A)/I over exact base domains"};
    app.require_subcommand(1);
    Request req;
    std::string format = "text";

    auto common = [&](CLI::App* sub, bool needs_domain) {
        auto* d = sub->add_option("--domain", req.domain, "Z, Q[t], OK(d), NS(g1,...), Field(n)");
        if (needs_domain)
            d->required();
        sub->add_option("--modulus", req.modulus, "the ideal I of E = Q(A)/I (default: A)");
        sub->add_option("--ideal", req.ideal, "ideal literal, e.g. \"Z: 6\" or \"NS: {3,4}\"");
        sub->add_option("--ref", req.ref, "reference ideal for divisoriality (default: A)");
        sub->add_option("--gens", req.gens, "generators of an ideal of R, e.g. \"(4,1/7);(6,0)\"");
        sub->add_option("--samples", req.samples, "random sample budget");
        sub->add_option("--window", req.window, "semigroup census window");
        sub->add_option("--seed", req.seed, "random seed");
        sub->add_option("--format", format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
    };
    const std::pair<const char*, Command> commands[] = {
        {"classify", Command::Classify},       {"ann", Command::Ann},
        {"dac", Command::Dac},                 {"divisorial", Command::Divisorial},
        {"semiregular", Command::Semiregular}, {"coherence", Command::Coherence},
        {"paper-examples", Command::PaperExamples},
    };
    const char* help[] = {
        "normal form of the ideal of R generated by --gens",
        "annihilator in R of --gens, or Ann_E of --ideal",
        "double annihilator condition at --ideal (DAC1) or at --ideal/I with --submodule (DAC2)",
        "whether --ideal equals (ref:(ref:ideal))",
        "semi-regularity verdict for I = --ideal (or --modulus)",
        "sampled coherence certificate for R",
        "fixed table of worked examples",
    };
    for (std::size_t i = 0; i < std::size(commands); ++i) {
        auto* sub = app.add_subcommand(commands[i].first, help[i]);
        common(sub, commands[i].second != Command::PaperExamples);
        if (commands[i].second == Command::Dac)
            sub->add_flag("--submodule", req.submodule, "treat --ideal as a carrier J containing I");
        const Command cmd = commands[i].second;
        sub->callback([&req, cmd] { req.command = cmd; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    req.format = format == "structured" ? Format::Structured : Format::Text;
    return run(req, out, err);
}

} // namespace trivext::cli
