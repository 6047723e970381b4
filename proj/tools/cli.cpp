#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "shirshov/error.hpp"
#include "shirshov/json_io.hpp"

namespace shirshov::cli {

namespace {

using nlohmann::json;

enum class Format { Json, Human };

struct RunConfig {
    std::string input_path;
    std::string inline_json;
    Format format = Format::Json;
    std::optional<std::size_t> h, d, D, n;
    bool graded = false;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    std::size_t steps = kDefaultStepBudget;
    unsigned threads = 0;
};

json load_input(const RunConfig& cfg) {
    std::string text;
    if (!cfg.inline_json.empty()) {
        text = cfg.inline_json;
    } else if (!cfg.input_path.empty() && cfg.input_path != "-") {
        std::ifstream in(cfg.input_path);
        if (!in) throw InputError("cannot open input file " + cfg.input_path);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    } else {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("input is not valid JSON: ") + e.what());
    }
}

std::size_t size_field(const json& j, const char* key, std::optional<std::size_t> override_value) {
    if (override_value) return *override_value;
    if (!j.contains(key)) throw InputError(std::string("missing \"") + key + "\"");
    const json& v = j.at(key);
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
        throw InputError(std::string("\"") + key + "\" must be a non-negative integer");
    return v.get<std::size_t>();
}

std::string span_text(const Interval& iv) {
    return "[" + std::to_string(iv.start) + "," + std::to_string(iv.end) + "]";
}

int cmd_decompose(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const json input = load_input(cfg);
    const GradeSequence seq = json_io::sequence(input);
    const Decomposition d = decompose_optimal(seq);
    const DecompositionReport report = verify_decomposition(seq, d);
    const std::size_t m = seq.group->order();

    std::ostringstream bound_line;
    bound_line << "coverage " << d.coverage << " ≥ n−|G|+1 = " << report.bound << ": "
               << (report.bound_holds ? "true" : "false");

    if (cfg.format == Format::Json) {
        json j = json_io::to_json(d);
        j["n"] = seq.size();
        j["group_order"] = m;
        j["lemma_bound"] = report.bound;
        j["bound_holds"] = report.bound_holds;
        out << j.dump() << '\n';
        err << bound_line.str() << '\n';
    } else {
        out << "n = " << seq.size() << ", |G| = " << m << '\n';
        out << "intervals:";
        for (const Interval& iv : d.intervals) out << ' ' << span_text(iv);
        out << "\nuncovered:";
        for (const std::size_t p : d.uncovered) out << ' ' << p;
        out << '\n' << bound_line.str() << '\n';
    }
    if (!report.clean() || !report.bound_holds) {
        for (const auto& v : report.violations) err << "invariant violated: " << v << '\n';
        return kInternal;
    }
    return kOk;
}

int cmd_factorize(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const json input = load_input(cfg);
    if (!input.is_object()) throw InputError("factorize input must be an object");
    if (!input.contains("alphabet")) throw InputError("missing \"alphabet\"");
    if (!input.contains("word")) throw InputError("missing \"word\"");
    const GradedAlphabet alphabet = json_io::alphabet(input.at("alphabet"));
    const Word w = json_io::word(alphabet, input.at("word"));
    std::optional<std::size_t> h = cfg.h;
    if (!h && input.contains("h")) h = size_field(input, "h", std::nullopt);
    if (h && *h < 1) throw InputError("h must be at least 1");

    const Factorization f = factorize(alphabet, w);
    const FactorizationReport report = verify_factorization(alphabet, w, f);
    const std::size_t m = alphabet.group().order();
    std::optional<std::size_t> count, bound;
    if (h) {
        count = power_count(f, *h);
        bound = height_bound(*h, m);
    }
    const bool within = !h || *count <= *bound;

    if (cfg.format == Format::Json) {
        json j = {{"segments", json_io::to_json(f)},
                  {"k", f.k},
                  {"leftover_length", f.leftover_length()},
                  {"leftover_count", f.leftover_count()},
                  {"group_order", m}};
        if (h) {
            j["h"] = *h;
            j["power_count"] = *count;
            j["height_bound"] = *bound;
            j["within_bound"] = within;
        }
        out << j.dump() << '\n';
    } else {
        for (const Segment& s : f.segments) {
            const Word part(w.begin() + static_cast<std::ptrdiff_t>(s.span.start - 1),
                            w.begin() + static_cast<std::ptrdiff_t>(s.span.end));
            out << (s.tag == SegmentTag::A ? 'A' : 'Y') << span_text(s.span) << " = "
                << alphabet.render(part) << '\n';
        }
        out << "k = " << f.k << ", Σ|y| = " << f.leftover_length() << '\n';
        if (h)
            out << "power_count " << *count << " ≤ height_bound " << *bound << ": "
                << (within ? "pass" : "fail") << '\n';
    }
    if (!report.clean() || !within) {
        for (const auto& v : report.violations) err << "invariant violated: " << v << '\n';
        if (!within) err << "invariant violated: power count exceeds height bound\n";
        return kInternal;
    }
    return kOk;
}

void print_span_human(const GradedAlphabet& alphabet, const SpanReport& r, std::ostream& out,
                      const std::string& indent) {
    out << indent << "verdict: " << to_string(r.verdict) << '\n'
        << indent << "h = " << r.height << ", d = " << r.degree_cap << ", D = " << r.expansion_cap
        << '\n'
        << indent << "words " << r.words_checked << ", products " << r.products_enumerated << '\n'
        << indent << "rank(words) = " << r.rank_words << ", rank(products) = " << r.rank_products
        << ", rank(joint) = " << r.rank_joint << '\n';
    if (!r.missing.empty()) {
        out << indent << "missing (" << r.missing.size() << "):\n";
        for (const LinComb& c : r.missing) {
            out << indent << "  ";
            bool first = true;
            for (const auto& [w, q] : c.terms()) {
                if (!first) out << " + ";
                first = false;
                if (q != 1) out << format_rational(q) << '*';
                out << alphabet.render(w);
            }
            out << '\n';
        }
    }
}

int verdict_code(Verdict v) {
    switch (v) {
        case Verdict::WitnessedSpanning: return kOk;
        case Verdict::NotWitnessed: return kNotWitnessed;
        case Verdict::ViolatedInvariant: return kInternal;
    }
    return kInternal;
}

int cmd_verify_base(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    const json input = load_input(cfg);
    if (!input.is_object()) throw InputError("verify-base input must be an object");
    if (!input.contains("algebra")) throw InputError("missing \"algebra\"");
    if (!input.contains("base")) throw InputError("missing \"base\"");
    const AlgebraSpec spec = json_io::algebra(input.at("algebra"));
    std::vector<Word> base;
    for (const auto& w : input.at("base")) base.push_back(json_io::word(spec.alphabet(), w));
    const std::size_t h = size_field(input, "h", cfg.h);
    const std::size_t d = size_field(input, "d", cfg.d);
    const std::size_t D =
        cfg.D ? *cfg.D : input.contains("D") ? size_field(input, "D", std::nullopt)
                                             : default_expansion_cap(d);
    const SpanOptions options{cfg.steps, cfg.threads};
    const bool graded = cfg.graded || input.value("graded", false);

    if (graded) {
        const GradedTheoremReport r = check_graded_theorem(spec, base, h, d, D, options);
        if (cfg.format == Format::Json) {
            out << json_io::to_json(spec.alphabet(), r).dump() << '\n';
        } else {
            out << "verdict: " << to_string(r.verdict) << '\n'
                << "height bound (h+1)|G|-1 = " << r.height_bound << '\n'
                << "neutral component:\n";
            print_span_human(spec.alphabet(), r.neutral, out, "  ");
            out << "whole algebra:\n";
            print_span_human(spec.alphabet(), r.whole, out, "  ");
            for (const auto& v : r.consistency_violations) out << "violation: " << v << '\n';
        }
        return verdict_code(r.verdict);
    }

    const SpanReport r = is_shirshov_base(spec, base, h, d, D, options);
    if (cfg.format == Format::Json)
        out << json_io::to_json(spec.alphabet(), r).dump() << '\n';
    else
        print_span_human(spec.alphabet(), r, out, "");
    return verdict_code(r.verdict);
}

int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    const json input = load_input(cfg);
    if (!input.is_object()) throw InputError("bench input must be an object");
    if (!input.contains("group")) throw InputError("missing \"group\"");
    const auto group =
        std::make_shared<const FiniteGroup>(build_group(json_io::group_spec(input.at("group"))));
    const std::size_t n = size_field(input, "n", cfg.n);
    const std::size_t trials =
        cfg.trials ? *cfg.trials : input.contains("trials") ? size_field(input, "trials", {}) : 1;
    const std::uint64_t seed =
        cfg.seed ? *cfg.seed : input.contains("seed") ? input.at("seed").get<std::uint64_t>() : 0;

    std::mt19937_64 rng(seed);
    const std::size_t bound = lemma_bound(n, group->order());
    json runs = json::array();
    std::vector<double> times;
    bool all_hold = true;
    for (std::size_t t = 0; t < trials; ++t) {
        GradeSequence seq{group, std::vector<Element>(n)};
        for (auto& e : seq.elems) e = Element{static_cast<std::uint32_t>(rng() % group->order())};

        const auto start = std::chrono::steady_clock::now();
        const Decomposition d = decompose_optimal(seq);
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

        const double seconds = elapsed.count();
        times.push_back(seconds);
        all_hold = all_hold && d.coverage >= bound;
        runs.push_back({{"trial", t},
                        {"seconds", seconds},
                        {"ns_per_element", n ? seconds * 1e9 / static_cast<double>(n) : 0.0},
                        {"coverage", d.coverage},
                        {"bound_holds", d.coverage >= bound}});
    }
    std::sort(times.begin(), times.end());
    const double min_seconds = times.empty() ? 0.0 : times.front();
    const double median_seconds = times.empty() ? 0.0 : times[times.size() / 2];

    if (cfg.format == Format::Json) {
        out << json{{"group_order", group->order()},
                    {"n", n},
                    {"seed", seed},
                    {"lemma_bound", bound},
                    {"trials", runs},
                    {"min_seconds", min_seconds},
                    {"median_seconds", median_seconds},
                    {"all_bounds_hold", all_hold}}
                   .dump()
            << '\n';
    } else {
        out << "|G| = " << group->order() << ", n = " << n << ", seed = " << seed << '\n';
        for (const auto& r : runs)
            out << "trial " << r["trial"].get<std::size_t>() << ": "
                << r["seconds"].get<double>() << " s, " << r["ns_per_element"].get<double>()
                << " ns/element, coverage " << r["coverage"].get<std::size_t>() << " ≥ "
                << bound << ": " << (r["bound_holds"].get<bool>() ? "true" : "false") << '\n';
    }
    return all_hold ? kOk : kInternal;
}

void add_io_options(CLI::App& sub, RunConfig& cfg) {
    auto* in = sub.add_option("--input", cfg.input_path, "Read JSON input from FILE ('-' for stdin)");
    auto* js = sub.add_option("--json", cfg.inline_json, "Inline JSON input");
    in->excludes(js);
    sub.add_option("--format", cfg.format, "Output format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Format>{{"json", Format::Json}, {"human", Format::Human}}));
}

template <class T>
void add_optional(CLI::App& sub, const std::string& name, std::optional<T>& slot,
                  const std::string& help) {
    sub.add_option_function<T>(name, [&slot](const T& v) { slot = v; }, help);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Interval decompositions, graded factorizations and Shirshov base checks"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);

    auto* decompose = app.add_subcommand("decompose", "Maximum identity-product interval decomposition");
    add_io_options(*decompose, cfg);

    auto* factor = app.add_subcommand("factorize", "Alternating y/a factorization of a graded word");
    add_io_options(*factor, cfg);
    add_optional(*factor, "--h", cfg.h, "Height of a Shirshov base of the neutral component");

    auto* verify = app.add_subcommand("verify-base", "Check a Shirshov base up to degree caps");
    add_io_options(*verify, cfg);
    add_optional(*verify, "--h", cfg.h, "Height");
    add_optional(*verify, "--d", cfg.d, "Degree cap for enumerated words");
    add_optional(*verify, "--D", cfg.D, "Expansion cap for powered products (default 2d)");
    verify->add_flag("--graded", cfg.graded, "Check the graded height theorem (base is S_e)");
    verify->add_option("--steps", cfg.steps, "Rewrite budget per word");
    verify->add_option("--threads", cfg.threads, "Normalization workers (0 = all cores)");

    auto* bench = app.add_subcommand("bench", "Time the linear-time decomposition");
    add_io_options(*bench, cfg);
    add_optional(*bench, "--seed", cfg.seed, "Seed for sequence generation");
    add_optional(*bench, "--trials", cfg.trials, "Number of trials");
    add_optional(*bench, "--n", cfg.n, "Sequence length");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kBadInput;
    }

    try {
        if (decompose->parsed()) return cmd_decompose(cfg, out, err);
        if (factor->parsed()) return cmd_factorize(cfg, out, err);
        if (verify->parsed()) return cmd_verify_base(cfg, out, err);
        if (bench->parsed()) return cmd_bench(cfg, out, err);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const LimitExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const StepBudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kStepBudget;
    } catch (const nlohmann::json::exception& e) {
        err << "error: malformed input: " << e.what() << '\n';
        return kBadInput;
    }
    return kBadInput;
}

}  // namespace shirshov::cli
