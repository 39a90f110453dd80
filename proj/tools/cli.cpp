#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "admzeta/admissible.hpp"
#include "admzeta/errors.hpp"
#include "admzeta/reference.hpp"
#include "admzeta/representations.hpp"
#include "admzeta/rootfind.hpp"

namespace admzeta::cli {

using nlohmann::ordered_json;

namespace {

constexpr const char* kSchemaVersion = "1";

double parse_real(std::string_view text) {
    double v = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || !std::isfinite(v)) {
        throw InputError("malformed number '" + std::string(text) + "'");
    }
    return v;
}

std::vector<double> parse_list(std::string_view text) {
    std::vector<double> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        out.push_back(parse_real(text.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

SearchRegion parse_region(std::string_view text) {
    const auto v = parse_list(text);
    if (v.size() != 4) throw InputError("region must be re_min,re_max,im_min,im_max");
    SearchRegion r;
    r.re_min = v[0];
    r.re_max = v[1];
    r.im_min = v[2];
    r.im_max = v[3];
    r.validate();
    return r;
}

// Echo of every option the user actually supplied, keyed by long name.
ordered_json parameter_echo(const CLI::App& cmd) {
    ordered_json params = ordered_json::object();
    for (const CLI::Option* opt : cmd.get_options()) {
        if (opt->count() == 0 || opt->get_lnames().empty()) continue;
        const auto& name = opt->get_lnames().front();
        if (name == "help") continue;
        const auto& raw = opt->results();
        if (opt->get_type_size() == 0) {
            params[name] = true;
        } else if (raw.size() == 1) {
            params[name] = raw.front();
        } else {
            params[name] = raw;
        }
    }
    return params;
}

ordered_json envelope(const CLI::App& cmd, ordered_json payload) {
    ordered_json env;
    env["schema_version"] = kSchemaVersion;
    env["command"] = cmd.get_name();
    env["parameters"] = parameter_echo(cmd);
    env["payload"] = std::move(payload);
    return env;
}

ordered_json nullable(const std::optional<double>& v) {
    return v ? ordered_json(*v) : ordered_json(nullptr);
}

std::string csv_field(const std::optional<double>& v) { return v ? format_double(*v) : ""; }

std::optional<Complex> try_reference(Complex z) {
    try {
        return reference_zeta(z);
    } catch (const Error&) {
        return std::nullopt;
    }
}

RepresentationKind require_representation(const std::string& name) {
    const auto kind = parse_representation(name);
    if (!kind) {
        throw InputError("unknown representation '" + name +
                         "' (expected direct, coth, alt, alt-coth, bernoulli)");
    }
    return *kind;
}

struct TermsArgs {
    std::uint64_t n = 0;
    bool json = false;
};

struct EvalArgs {
    std::string rep;
    std::string z;
    std::uint64_t n = 0;
    unsigned order = 40;
    bool json = false;
};

struct ConvergeArgs {
    std::string rep;
    std::string z;
    std::uint64_t n_max = 0;
    std::uint64_t step = 0;
    unsigned order = 40;
};

struct ZerosArgs {
    std::string preset;
    std::string rep = "direct";
    std::uint64_t n = 0;
    double constant = 1.0;
    std::string region;
    double tol = kDefaultRootTolerance;
    int grid = 40;
    unsigned threads = 0;
    int max_iter = kDefaultNewtonIterations;
    bool count = false;
};

struct SpecialArgs {
    std::string kind;
    unsigned m = 0;
    std::uint64_t n = 0;
    bool json = false;
};

void cmd_terms(const CLI::App& cmd, const TermsArgs& a, std::ostream& out) {
    const auto set = admissible_up_to(a.n);
    if (a.json) {
        ordered_json payload;
        payload["members"] = set.members;
        payload["term_count"] = set.term_count();
        out << envelope(cmd, std::move(payload)).dump(2) << '\n';
        return;
    }
    for (const auto r : set.members) out << r << '\n';
    out << "l=" << set.term_count() << '\n';
}

void cmd_eval(const CLI::App& cmd, const EvalArgs& a, std::ostream& out) {
    const auto kind = require_representation(a.rep);
    const Complex z = parse_complex(a.z);
    const auto result = evaluate(kind, z, admissible_up_to(a.n), a.order);
    const auto reference = try_reference(z);
    std::optional<double> abs_error;
    if (reference) abs_error = std::abs(result.value - *reference);

    if (a.json) {
        ordered_json payload;
        payload["representation"] = std::string(to_string(kind));
        payload["value_re"] = result.value.real();
        payload["value_im"] = result.value.imag();
        payload["truncation"] = result.truncation;
        payload["term_count"] = result.term_count;
        payload["tail_bound"] = nullable(result.tail_bound);
        payload["reference_re"] = reference ? ordered_json(reference->real()) : nullptr;
        payload["reference_im"] = reference ? ordered_json(reference->imag()) : nullptr;
        payload["abs_error"] = nullable(abs_error);
        out << envelope(cmd, std::move(payload)).dump(2) << '\n';
        return;
    }
    out << "representation=" << to_string(kind) << '\n'
        << "value_re=" << format_double(result.value.real()) << '\n'
        << "value_im=" << format_double(result.value.imag()) << '\n'
        << "truncation=" << result.truncation << '\n'
        << "term_count=" << result.term_count << '\n'
        << "tail_bound=" << csv_field(result.tail_bound) << '\n'
        << "abs_error=" << csv_field(abs_error) << '\n';
}

void cmd_converge(const ConvergeArgs& a, std::ostream& out) {
    const auto kind = require_representation(a.rep);
    const Complex z = parse_complex(a.z);
    if (a.step < 1) throw InputError("--step must be >= 1");
    const auto full = admissible_up_to(a.n_max);
    const auto reference = try_reference(z);

    out << "n,value_re,value_im,abs_error,tail_bound\n";
    for (std::uint64_t n = a.step; n <= a.n_max; n += a.step) {
        if (n < 2) continue;
        const auto result = evaluate(kind, z, full.truncated(n), a.order);
        std::optional<double> abs_error;
        if (reference) abs_error = std::abs(result.value - *reference);
        out << n << ',' << format_double(result.value.real()) << ','
            << format_double(result.value.imag()) << ',' << csv_field(abs_error) << ','
            << csv_field(result.tail_bound) << '\n';
    }
}

void cmd_zeros(const CLI::App& cmd, const ZerosArgs& a, std::ostream& out) {
    TargetSpec spec;
    if (!a.preset.empty()) {
        const auto preset = target_preset(a.preset);
        if (!preset) throw InputError("unknown preset '" + a.preset + "'");
        spec = *preset;
    } else {
        if (a.rep == "direct") {
            spec.kind = TargetKind::Direct;
        } else if (a.rep == "alt") {
            spec.kind = TargetKind::AlternatingNumerator;
        } else {
            throw InputError("zeros --rep must be direct or alt");
        }
        if (a.n < 2) throw InputError("zeros needs --preset or --n >= 2");
        spec.n = a.n;
        spec.constant = a.constant;
    }
    SearchRegion region = parse_region(a.region);
    region.grid_re = region.grid_im = a.grid;
    region.validate();

    const PartialSum f(spec);
    ZeroSearchOptions options;
    options.tol = a.tol;
    options.threads = a.threads;
    options.max_iter = a.max_iter;
    const auto roots = find_zeros(f, region, options);

    ordered_json payload;
    payload["target"] = {{"kind", std::string(to_string(spec.kind))},
                         {"n", spec.n},
                         {"constant", spec.constant},
                         {"term_count", f.term_count()}};
    payload["region"] = {region.re_min, region.re_max, region.im_min, region.im_max};
    ordered_json list = ordered_json::array();
    for (const auto& r : roots) {
        list.push_back({{"re", r.location.real()},
                        {"im", r.location.imag()},
                        {"residual", r.residual},
                        {"verified", r.verified},
                        {"winding", r.winding},
                        {"conjugate_of", r.conjugate_of ? ordered_json(*r.conjugate_of)
                                                        : ordered_json(nullptr)}});
    }
    payload["roots"] = std::move(list);
    if (a.count) {
        const auto count = region_zero_count(f, region);
        payload["zero_count"] = {{"zeros", count.zeros},
                                 {"winding", count.winding},
                                 {"poles", count.poles},
                                 {"contour",
                                  {count.contour.re_min, count.contour.re_max,
                                   count.contour.im_min, count.contour.im_max}}};
    }
    out << envelope(cmd, std::move(payload)).dump(2) << '\n';
}

void cmd_special(const CLI::App& cmd, const SpecialArgs& a, std::ostream& out) {
    const auto kind = parse_special_kind(a.kind);
    if (!kind) throw InputError("--kind must be any, even or odd");
    const auto sv = special_value(*kind, a.m, a.n);
    if (a.json) {
        ordered_json payload;
        payload["argument"] = sv.argument;
        payload["value"] = sv.eval.value.real();
        payload["term_count"] = sv.eval.term_count;
        payload["tail_bound"] = nullable(sv.eval.tail_bound);
        payload["euler"] = nullable(sv.euler_value);
        payload["deviation"] = nullable(sv.deviation);
        out << envelope(cmd, std::move(payload)).dump(2) << '\n';
        return;
    }
    out << "argument=" << sv.argument << '\n'
        << "value=" << format_double(sv.eval.value.real()) << '\n'
        << "term_count=" << sv.eval.term_count << '\n'
        << "tail_bound=" << csv_field(sv.eval.tail_bound) << '\n';
    if (sv.euler_value) {
        out << "euler=" << format_double(*sv.euler_value) << '\n'
            << "deviation=" << format_double(*sv.deviation) << '\n';
    }
}

}  // namespace

std::complex<double> parse_complex(std::string_view text) {
    const auto v = parse_list(text);
    if (v.size() == 1) return {v[0], 0.0};
    if (v.size() == 2) return {v[0], v[1]};
    throw InputError("complex value must be 're,im', got '" + std::string(text) + "'");
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Admissible-base partial sums of the Riemann zeta function", "admzeta"};
    app.require_subcommand(1);
    std::string out_path;
    app.add_option("--out", out_path, "Write data to FILE instead of stdout");

    TermsArgs terms;
    auto* terms_cmd = app.add_subcommand("terms", "List admissible bases r <= n");
    terms_cmd->add_option("--n", terms.n, "Truncation n >= 2")->required();
    terms_cmd->add_flag("--json", terms.json, "Emit a JSON envelope");

    EvalArgs eval;
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate one representation at z");
    eval_cmd->add_option("--rep", eval.rep, "direct | coth | alt | alt-coth | bernoulli")->required();
    eval_cmd->add_option("--z", eval.z, "Complex argument re,im")->required();
    eval_cmd->add_option("--n", eval.n, "Truncation n >= 2")->required();
    eval_cmd->add_option("--order", eval.order, "Bernoulli series order M");
    eval_cmd->add_flag("--json", eval.json, "Emit a JSON envelope");

    ConvergeArgs conv;
    auto* conv_cmd = app.add_subcommand("converge", "CSV of partial sums for n = step, 2 step, ...");
    conv_cmd->add_option("--rep", conv.rep, "Representation")->required();
    conv_cmd->add_option("--z", conv.z, "Complex argument re,im")->required();
    conv_cmd->add_option("--n-max", conv.n_max, "Largest truncation")->required();
    conv_cmd->add_option("--step", conv.step, "Truncation increment")->required();
    conv_cmd->add_option("--order", conv.order, "Bernoulli series order M");

    ZerosArgs zeros;
    auto* zeros_cmd = app.add_subcommand("zeros", "Locate zeros of a partial sum (JSON)");
    auto* preset_opt = zeros_cmd->add_option("--preset", zeros.preset,
                                             "paper-direct-{2,3,5,6} | paper-alt-{2,3,5,6}");
    zeros_cmd->add_option("--rep", zeros.rep, "direct | alt")->excludes(preset_opt);
    zeros_cmd->add_option("--n", zeros.n, "Truncation n >= 2")->excludes(preset_opt);
    zeros_cmd->add_option("--constant", zeros.constant, "Additive constant")->excludes(preset_opt);
    zeros_cmd->add_option("--region", zeros.region, "re_min,re_max,im_min,im_max")->required();
    zeros_cmd->add_option("--tol", zeros.tol, "Residual tolerance");
    zeros_cmd->add_option("--grid", zeros.grid, "Seeds per axis");
    zeros_cmd->add_option("--threads", zeros.threads, "Worker threads (0 = hardware)");
    zeros_cmd->add_option("--max-iter", zeros.max_iter, "Newton iteration cap");
    zeros_cmd->add_flag("--count", zeros.count, "Also count zeros by the argument principle");

    SpecialArgs special;
    auto* special_cmd = app.add_subcommand("special", "Partial sum at an integer argument");
    special_cmd->add_option("--kind", special.kind, "any (m) | even (2m) | odd (2m+1)")->required();
    special_cmd->add_option("--m", special.m, "m")->required();
    special_cmd->add_option("--n", special.n, "Truncation n >= 2")->required();
    special_cmd->add_flag("--json", special.json, "Emit a JSON envelope");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            err << "error: cannot open '" << out_path << "' for writing\n";
            return kExitUsage;
        }
        sink = &file;
    }

    try {
        std::ostringstream buffer;
        if (terms_cmd->parsed()) cmd_terms(*terms_cmd, terms, buffer);
        if (eval_cmd->parsed()) cmd_eval(*eval_cmd, eval, buffer);
        if (conv_cmd->parsed()) cmd_converge(conv, buffer);
        if (zeros_cmd->parsed()) cmd_zeros(*zeros_cmd, zeros, buffer);
        if (special_cmd->parsed()) cmd_special(*special_cmd, special, buffer);
        *sink << buffer.str();
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    }
    return kExitOk;
}

}  // namespace admzeta::cli
