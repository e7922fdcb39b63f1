// Command line front end: list/render the catalog, verify single instances,
// sweep parameter boxes, run the exact terminating identity checks, and
// benchmark evaluation strategies.
//
// Exit codes: 0 verified/pass, 1 failed, 2 constraint violation,
// 3 inconclusive, 4 usage error, 5 internal oracle failure.

#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "piforms/piforms.hpp"

namespace {

using nlohmann::ordered_json;
using namespace piforms;

constexpr const char* kSchema = "piformula.report.v1";
constexpr int kExitVerified = 0;
constexpr int kExitFailed = 1;
constexpr int kExitConstraint = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitUsage = 4;
constexpr int kExitOracle = 5;

struct Output {
    std::ofstream file;
    std::ostream* os = &std::cout;
    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw CLI::ValidationError("--out", "cannot open " + path);
        os = &file;
    }
    std::ostream& stream() { return *os; }
};

std::vector<long> parse_params(const std::string& csv) {
    std::vector<long> out;
    if (csv.empty()) return out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        long v = std::stol(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("bad integer: " + item);
        out.push_back(v);
    }
    return out;
}

std::string params_csv(const std::vector<long>& p) {
    std::string s;
    for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s;
}

// A representative small parameter tuple for listing/benchmarks: the first
// feasible tuple (growing the box as needed) that instantiates cleanly.
std::optional<hyperterm::ConcreteSeries> sample_instance(const catalog::FamilySpec& f) {
    for (long bound = 0; bound <= 3; ++bound)
        for (const auto& tup : engine::feasible_tuples(f, bound)) {
            try {
                return catalog::instantiate(f.id, tup);
            } catch (const hyperterm::pole_error&) {
            }
        }
    return std::nullopt;
}

std::string constraint_str(const catalog::FamilySpec& f, const catalog::LinearForm& form) {
    return catalog::form_to_string(form, f.param_names) + " >= 0";
}

ordered_json verify_record(const engine::VerifyReport& r) {
    ordered_json j;
    j["schema"] = kSchema;
    j["type"] = "verify";
    j["family"] = r.family_id;
    j["params"] = r.params;
    j["digits"] = r.requested_digits;
    j["verdict"] = engine::verdict_name(r.verdict);
    j["details"] = r.details;
    j["lhs"] = r.lhs_value ? r.lhs_value->to_string() : "";
    j["rhs"] = r.rhs_value ? r.rhs_value->to_string() : "";
    if (r.eval) {
        j["strategy"] = engine::strategy_name(r.eval->strategy);
        j["terms"] = r.eval->terms_used;
        j["rigorous"] = r.eval->rigorous;
        std::ostringstream eb;
        eb << r.eval->error_bound;
        j["error_bound"] = eb.str();
        j["crosscheck_digits"] = r.eval->crosscheck_digits;
    }
    return j;
}

void print_verify_text(std::ostream& os, const engine::VerifyReport& r) {
    os << r.family_id << "(" << params_csv(r.params) << ") digits=" << r.requested_digits
       << " -> " << engine::verdict_name(r.verdict);
    if (r.eval)
        os << " [" << engine::strategy_name(r.eval->strategy) << ", " << r.eval->terms_used
           << " terms" << (r.eval->rigorous ? ", rigorous" : ", cross-checked") << "]";
    os << "\n";
    if (r.lhs_value) os << "  lhs = " << r.lhs_value->to_string() << "\n";
    if (r.rhs_value) os << "  rhs = " << r.rhs_value->to_string() << "\n";
    if (!r.details.empty()) os << "  note: " << r.details << "\n";
}

int verdict_exit(engine::Verdict v) {
    switch (v) {
        case engine::Verdict::verified: return kExitVerified;
        case engine::Verdict::failed: return kExitFailed;
        default: return kExitInconclusive;
    }
}

int cmd_list(const std::string& format, Output& out) {
    std::ostream& os = out.stream();
    if (format == "structured") {
        for (const auto& f : catalog::list_families()) {
            ordered_json j;
            j["schema"] = kSchema;
            j["type"] = "family";
            j["id"] = f.id;
            j["params"] = f.param_names;
            std::vector<std::string> cons;
            for (const auto& form : f.constraints) cons.push_back(constraint_str(f, form));
            j["constraints"] = cons;
            if (auto s = sample_instance(f)) {
                j["pi_power"] = s->lhs.pi_power;
                j["sample_params"] = s->params;
                j["sample"] = catalog::render(*s, catalog::RenderFormat::text);
            }
            os << j.dump() << "\n";
        }
        for (const auto& g : catalog::golden_series()) {
            ordered_json j;
            j["schema"] = kSchema;
            j["type"] = "golden";
            j["label"] = g.label;
            j["text"] = g.text_display;
            j["latex"] = g.latex_display;
            os << j.dump() << "\n";
        }
        return kExitVerified;
    }
    if (format == "latex") {
        os << "\\documentclass{article}\n\\usepackage{amsmath}\n"
           << "\\allowdisplaybreaks\n\\begin{document}\n"
           << "\\section*{Series families}\n";
        for (const auto& f : catalog::list_families()) {
            os << "\\noindent\\texttt{" << f.id << "}";
            if (auto s = sample_instance(f)) {
                os << " at $(" << params_csv(s->params) << ")$:\n\\begin{equation*}\n"
                   << catalog::render(*s, catalog::RenderFormat::latex) << "\n\\end{equation*}\n";
            } else {
                os << "\n\n";
            }
        }
        os << "\\section*{Printed series}\n";
        for (const auto& g : catalog::golden_series())
            os << "\\noindent\\texttt{" << g.label << "}:\n\\begin{equation*}\n"
               << g.latex_display << "\n\\end{equation*}\n";
        os << "\\end{document}\n";
        return kExitVerified;
    }
    os << "families (" << catalog::list_families().size() << "):\n";
    for (const auto& f : catalog::list_families()) {
        os << "  " << f.id << "(";
        for (size_t i = 0; i < f.param_names.size(); ++i)
            os << (i ? "," : "") << f.param_names[i];
        os << ")";
        os << "  constraints:";
        for (const auto& form : f.constraints) os << " " << constraint_str(f, form);
        if (auto s = sample_instance(f))
            os << "\n    e.g. (" << params_csv(s->params) << "): "
               << catalog::render(*s, catalog::RenderFormat::text);
        os << "\n";
    }
    os << "printed series (" << catalog::golden_series().size() << "):\n";
    for (const auto& g : catalog::golden_series())
        os << "  " << g.label << ": " << g.text_display << "\n";
    return kExitVerified;
}

int cmd_render(const std::string& id, const std::string& params_arg,
               const std::string& format, Output& out) {
    std::ostream& os = out.stream();
    bool is_family = true;
    try {
        catalog::family(id);
    } catch (const catalog::unknown_family_error&) {
        is_family = false;
    }
    if (is_family) {
        auto s = catalog::instantiate(id, parse_params(params_arg));
        if (format == "structured") {
            ordered_json j;
            j["schema"] = kSchema;
            j["type"] = "render";
            j["family"] = s.family_id;
            j["params"] = s.params;
            j["text"] = catalog::render(s, catalog::RenderFormat::text);
            j["latex"] = catalog::render(s, catalog::RenderFormat::latex);
            os << j.dump() << "\n";
        } else {
            os << catalog::render(s, format == "latex" ? catalog::RenderFormat::latex
                                                       : catalog::RenderFormat::text)
               << "\n";
        }
        return kExitVerified;
    }
    const auto& g = catalog::golden(id);  // throws unknown_family_error on miss
    if (format == "structured") {
        ordered_json j;
        j["schema"] = kSchema;
        j["type"] = "render";
        j["label"] = g.label;
        j["text"] = g.text_display;
        j["latex"] = g.latex_display;
        os << j.dump() << "\n";
    } else {
        os << (format == "latex" ? g.latex_display : g.text_display) << "\n";
    }
    return kExitVerified;
}

int cmd_verify(const std::string& id, const std::string& params_arg, long digits,
               const std::string& format, Output& out) {
    engine::VerifyReport rep;
    bool is_family = true;
    try {
        catalog::family(id);
    } catch (const catalog::unknown_family_error&) {
        is_family = false;
    }
    if (is_family)
        rep = engine::verify(id, parse_params(params_arg), digits);
    else
        rep = engine::verify_golden(catalog::golden(id), digits);
    std::ostream& os = out.stream();
    if (format == "structured")
        os << verify_record(rep).dump() << "\n";
    else
        print_verify_text(os, rep);
    return verdict_exit(rep.verdict);
}

int cmd_sweep(const std::string& id, long bound, long digits, long jobs,
              const std::string& format, Output& out) {
    const auto& f = catalog::family(id);
    auto tuples = engine::feasible_tuples(f, bound);
    std::vector<engine::VerifyReport> reports(tuples.size());
    auto run_one = [&](size_t i) {
        try {
            reports[i] = engine::verify(id, tuples[i], digits);
        } catch (const hyperterm::pole_error& e) {
            reports[i].family_id = id;
            reports[i].params = tuples[i];
            reports[i].requested_digits = digits;
            reports[i].verdict = engine::Verdict::failed;
            reports[i].details = std::string("instantiation failure: ") + e.what();
        }
    };
    if (jobs <= 1) {
        for (size_t i = 0; i < tuples.size(); ++i) run_one(i);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (long j = 0; j < jobs; ++j)
            pool.emplace_back([&] {
                for (size_t i = next++; i < tuples.size(); i = next++) run_one(i);
            });
        for (auto& t : pool) t.join();
    }
    std::ostream& os = out.stream();
    long verified = 0, failed = 0, inconclusive = 0;
    for (const auto& r : reports) {
        switch (r.verdict) {
            case engine::Verdict::verified: ++verified; break;
            case engine::Verdict::failed: ++failed; break;
            default: ++inconclusive; break;
        }
        if (format == "structured")
            os << verify_record(r).dump() << "\n";
        else if (r.verdict != engine::Verdict::verified)
            print_verify_text(os, r);
    }
    if (format != "structured")
        os << id << " sweep bound=" << bound << ": " << verified << " verified, " << failed
           << " failed, " << inconclusive << " inconclusive (" << reports.size()
           << " tuples)\n";
    if (failed > 0) return kExitFailed;
    if (inconclusive > 0) return kExitInconclusive;
    return kExitVerified;
}

int cmd_identity_check(const std::string& which, long s_max, const std::string& format,
                       Output& out) {
    hyperterm::IdentityGridResult r =
        which == "dougall" ? hyperterm::dougall_grid(s_max) : hyperterm::chu7f6_grid(s_max);
    std::ostream& os = out.stream();
    if (format == "structured") {
        ordered_json j;
        j["schema"] = kSchema;
        j["type"] = "identity-check";
        j["identity"] = which;
        j["s_max"] = s_max;
        j["checked"] = r.checked;
        j["skipped"] = r.skipped;
        j["failed"] = r.failed;
        os << j.dump() << "\n";
    } else {
        os << which << " s=0.." << s_max << ": " << r.checked << " exact matches, "
           << r.skipped << " pole skips, " << r.failed << " failures\n";
    }
    return r.failed == 0 ? kExitVerified : kExitFailed;
}

int cmd_bench(const std::vector<std::string>& ids, long digits, const std::string& format,
              Output& out) {
    std::ostream& os = out.stream();
    int worst = kExitVerified;
    for (const auto& id : ids) {
        const auto& f = catalog::family(id);
        auto s = sample_instance(f);
        if (!s) continue;
        auto t0 = std::chrono::steady_clock::now();
        engine::VerifyReport rep = engine::verify_series(*s, digits);
        double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
        long terms = rep.eval ? rep.eval->terms_used : 0;
        if (format == "structured") {
            ordered_json j;
            j["schema"] = kSchema;
            j["type"] = "bench";
            j["family"] = id;
            j["params"] = s->params;
            j["digits"] = digits;
            j["verdict"] = engine::verdict_name(rep.verdict);
            j["strategy"] = rep.eval ? engine::strategy_name(rep.eval->strategy) : "";
            j["terms"] = terms;
            os << j.dump() << "\n";
        } else {
            os << id << "(" << params_csv(s->params) << ") digits=" << digits << ": "
               << (rep.eval ? engine::strategy_name(rep.eval->strategy) : "-") << ", "
               << terms << " terms";
            if (terms > 0) os << ", " << double(digits) / double(terms) << " digits/term";
            os << ", " << ms << " ms, " << engine::verdict_name(rep.verdict) << "\n";
        }
        worst = std::max(worst, verdict_exit(rep.verdict));
    }
    return worst;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"catalog of parameterized series for pi: list, render, verify, sweep"};
    app.require_subcommand(1);

    std::string id, params_arg, format = "text", out_path, identity;
    long digits = 20, bound = 1, s_max = 8, jobs = 1;
    std::vector<std::string> bench_ids;

    auto add_format = [&](CLI::App* c, bool with_latex) {
        auto names = with_latex ? std::vector<std::string>{"text", "latex", "structured"}
                                : std::vector<std::string>{"text", "structured"};
        c->add_option("--format", format, "output format")
            ->check(CLI::IsMember(names));
    };
    auto add_out = [&](CLI::App* c) { c->add_option("--out", out_path, "write report to file"); };
    auto add_digits = [&](CLI::App* c) {
        c->add_option("--digits", digits, "requested decimal digits")
            ->check(CLI::Range(1l, 1000l));
    };

    CLI::App* c_list = app.add_subcommand("list", "list families and printed series");
    add_format(c_list, true);
    add_out(c_list);

    CLI::App* c_render = app.add_subcommand("render", "render one family instance or printed series");
    c_render->add_option("id", id, "family id or printed-series label")->required();
    c_render->add_option("--params", params_arg, "comma separated integers");
    add_format(c_render, true);
    add_out(c_render);

    CLI::App* c_verify = app.add_subcommand("verify", "verify one instance numerically");
    c_verify->add_option("id", id, "family id or printed-series label")->required();
    c_verify->add_option("--params", params_arg, "comma separated integers");
    add_digits(c_verify);
    add_format(c_verify, false);
    add_out(c_verify);

    CLI::App* c_sweep = app.add_subcommand("sweep", "verify every feasible tuple in a box");
    c_sweep->add_option("id", id, "family id")->required();
    c_sweep->add_option("--bound", bound, "max |param|")->check(CLI::Range(0l, 100l));
    add_digits(c_sweep);
    c_sweep->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1l, 256l));
    add_format(c_sweep, false);
    add_out(c_sweep);

    CLI::App* c_id = app.add_subcommand("identity-check", "exact terminating identity grids");
    c_id->add_option("identity", identity, "dougall or chu7f6")
        ->required()
        ->check(CLI::IsMember({"dougall", "chu7f6"}));
    c_id->add_option("--s-max", s_max, "largest termination order")->check(CLI::Range(0l, 200l));
    add_format(c_id, false);
    add_out(c_id);

    CLI::App* c_bench = app.add_subcommand("bench", "terms/timing table for representative instances");
    c_bench->add_option("--families", bench_ids, "family ids")->delimiter(',');
    add_digits(c_bench);
    add_format(c_bench, false);
    add_out(c_bench);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        Output out;
        out.open(out_path);
        if (*c_list) return cmd_list(format, out);
        if (*c_render) return cmd_render(id, params_arg, format, out);
        if (*c_verify) return cmd_verify(id, params_arg, digits, format, out);
        if (*c_sweep) return cmd_sweep(id, bound, digits, jobs, format, out);
        if (*c_id) return cmd_identity_check(identity, s_max, format, out);
        if (*c_bench) return cmd_bench(bench_ids, digits, format, out);
        return kExitUsage;
    } catch (const catalog::constraint_error& e) {
        std::cerr << "constraint violation: " << e.what() << "\n";
        return kExitConstraint;
    } catch (const catalog::unknown_family_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const exactnum::oracle_error& e) {
        std::cerr << "oracle failure: " << e.what() << "\n";
        return kExitOracle;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailed;
    }
}
