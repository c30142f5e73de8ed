#include "tamelat/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <regex>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "tamelat/catalog.hpp"
#include "tamelat/gram_io.hpp"
#include "tamelat/oracle.hpp"
#include "tamelat/report.hpp"

namespace tamelat::cli {
namespace {

using nlohmann::json;

Integer parse_integer(const std::string& text, const std::string& what) {
    static const std::regex pattern("[+-]?[0-9]+");
    if (!std::regex_match(text, pattern)) {
        throw PreconditionError(what + " must be an integer (got '" + text + "')");
    }
    return Integer(text[0] == '+' ? text.substr(1) : text);
}

std::size_t parse_dimension(const std::string& text) {
    const Integer n = parse_integer(text, "--n");
    if (n < 0 || !n.fits_ulong_p()) {
        throw PreconditionError("--n out of range");
    }
    return n.get_ui();
}

struct GlobalOptions {
    bool json = false;
    bool oracle = false;
    std::string budget;
};

EnumerationLimits resolve_limits(const GlobalOptions& global) {
    std::string text = global.budget;
    if (text.empty()) {
        if (const char* env = std::getenv("TAMELAT_BUDGET")) {
            text = env;
        }
    }
    EnumerationLimits limits;
    if (!text.empty()) {
        const Integer budget = parse_integer(text, "budget");
        if (budget < 1 || !budget.fits_ulong_p()) {
            throw PreconditionError("budget must be a positive integer");
        }
        limits.max_nodes = budget.get_ui();
    }
    return limits;
}

struct FamilyOptions {
    std::string family = "tame";
    std::string n, h, p, cond, k;
};

void add_family_options(CLI::App* cmd, FamilyOptions& o, bool with_reference) {
    cmd->set_help_flag("--help", "print help and exit");
    std::string help = "tame | conner-perlis | prime-conductor | example3";
    if (with_reference) {
        help += " | cubic | root-a | root-d | wr-not-swr";
    }
    cmd->add_option("--family", o.family, help);
    cmd->add_option("--n", o.n, "dimension N");
    cmd->add_option("--h", o.h, "off-diagonal parameter h");
    cmd->add_option("--p", o.p, "prime degree (conner-perlis)");
    cmd->add_option("--cond", o.cond, "conductor");
    cmd->add_option("--k", o.k, "glue denominator (wr-not-swr)");
}

const std::string& required(const std::string& value, const std::string& flag, const std::string& family) {
    if (value.empty()) {
        throw PreconditionError(flag + " is required for family '" + family + "'");
    }
    return value;
}

std::optional<TameParams> resolve_tame(const FamilyOptions& o) {
    if (o.family == "tame") {
        return TameParams(parse_dimension(required(o.n, "--n", o.family)),
                          parse_integer(required(o.h, "--h", o.family), "--h"));
    }
    if (o.family == "conner-perlis") {
        return conner_perlis(parse_integer(required(o.p, "--p", o.family), "--p"),
                             parse_integer(required(o.cond, "--cond", o.family), "--cond"))
            .params();
    }
    if (o.family == "prime-conductor") {
        return prime_conductor_abelian(parse_dimension(required(o.n, "--n", o.family)),
                                       parse_integer(required(o.cond, "--cond", o.family), "--cond"))
            .params();
    }
    if (o.family == "example3") {
        return example3_entry().params();
    }
    return std::nullopt;
}

TameParams require_tame(const FamilyOptions& o) {
    auto params = resolve_tame(o);
    if (!params) {
        throw PreconditionError("unknown tame family '" + o.family + "'");
    }
    return *params;
}

void emit(const ReportDocument& report, const GlobalOptions& global, std::ostream& out) {
    if (global.json) {
        out << to_json(report).dump(2) << '\n';
    } else {
        out << to_text(report);
    }
}

// ---- build ------------------------------------------------------------------

struct BuildOptions {
    FamilyOptions family;
    std::string r, s, out;
};

int run_build(const BuildOptions& o, std::ostream& out) {
    std::optional<GramMatrix> gram;
    std::string comment;
    if (auto params = resolve_tame(o.family)) {
        if (o.r.empty() != o.s.empty()) {
            throw PreconditionError("--r and --s must be given together");
        }
        comment = "tame lattice N=" + std::to_string(params->dim()) + " a=" + params->a().get_str() +
                  " h=" + params->h().get_str();
        if (!o.r.empty()) {
            const RSPair rs(*params, parse_integer(o.r, "--r"), parse_integer(o.s, "--s"));
            gram = sublattice_gram(*params, rs);
            comment += " sublattice r=" + rs.r().get_str() + " s=" + rs.s().get_str() + " m=" + rs.m().get_str();
        } else {
            gram = params->gram();
        }
    } else if (o.family.family == "wr-not-swr") {
        const std::size_t n = parse_dimension(required(o.family.n, "--n", o.family.family));
        const Integer k = parse_integer(required(o.family.k, "--k", o.family.family), "--k");
        gram = wr_not_swr_gram(n, k);
        comment = "Z^" + std::to_string(n) + " with glue vector (1/" + k.get_str() + ", ...)";
    } else {
        const ReferenceLattice kind = parse_reference_lattice(o.family.family);
        gram = reference_gram(kind, parse_dimension(required(o.family.n, "--n", o.family.family)));
        comment = o.family.family + " lattice";
    }
    if (o.out.empty()) {
        write_gram(out, *gram, comment);
    } else {
        std::ofstream file(o.out);
        if (!file) {
            throw PreconditionError("cannot write " + o.out);
        }
        write_gram(file, *gram, comment);
    }
    return kExitOk;
}

// ---- svp --------------------------------------------------------------------

int run_svp(const std::string& path, const GlobalOptions& global, std::ostream& out) {
    const GramMatrix gram = read_gram_file(path);
    const ShortVectorReport svp = enumerate_short(gram, std::nullopt, resolve_limits(global));
    ReportDocument report = make_svp_report(gram, svp);
    report.inputs["gram"] = path;
    int code = kExitOk;
    if (global.oracle) {
        const oracle::BoxSpec box(gram.dim(), oracle::covering_bound(gram, svp.lambda1));
        const oracle::BoxMinimum naive = oracle::naive_svp(gram, box);
        std::vector<CoeffVector> both_signs;
        for (const auto& v : svp.minimal_vectors) {
            both_signs.push_back(v);
            CoeffVector neg = v;
            for (auto& c : neg) {
                c = -c;
            }
            both_signs.push_back(neg);
        }
        std::sort(both_signs.begin(), both_signs.end());
        const bool agrees = naive.minimum == svp.lambda1 && naive.argmins == both_signs;
        report.outputs["oracle_box_bound"] = std::to_string(box.bound);
        report.outputs["oracle_lambda1"] = naive.minimum.get_str();
        report.outputs["oracle_agrees"] = agrees ? "true" : "false";
        if (!agrees) {
            report.status = ReportStatus::fail;
            report.message = "box scan disagrees with enumeration";
            code = kExitFalsified;
        }
    }
    emit(report, global, out);
    return code;
}

// ---- verify / sweep -----------------------------------------------------------

struct VerifyOptions {
    FamilyOptions family;
    std::string r, s;
};

int run_verify(const VerifyOptions& o, const GlobalOptions& global, std::ostream& out) {
    const TameParams params = require_tame(o.family);
    const RSPair rs(params, parse_integer(required(o.r, "--r", "verify"), "--r"),
                    parse_integer(required(o.s, "--s", "verify"), "--s"));
    emit(make_verify_report(verify_main_theorem(params, rs, resolve_limits(global))), global, out);
    return kExitOk;
}

struct SweepItem {
    ReportDocument report;
    int code = kExitOk;
};

SweepItem sweep_one(const TameParams& params, const Integer& m, const Integer& r_abs, const EnumerationLimits& limits) {
    const Integer n = params.dim();
    const Integer r = (m % n == r_abs % n) ? r_abs : Integer(-r_abs);
    const Integer s = (m - r) / n;
    SweepItem item;
    try {
        item.report = make_verify_report(verify_main_theorem(params, RSPair(params, r, s), limits));
    } catch (const Error& e) {
        item.report.command = "verify";
        item.report.inputs = {{"N", n.get_str()}, {"h", params.h().get_str()}, {"r", r.get_str()},
                              {"s", s.get_str()}, {"m", m.get_str()}};
        item.report.message = e.what();
        if (dynamic_cast<const BudgetExceededError*>(&e)) {
            item.report.status = ReportStatus::budget_exceeded;
            item.code = kExitBudget;
        } else {
            item.report.status = ReportStatus::fail;
            item.code = kExitFalsified;
        }
    }
    return item;
}

int run_sweep(const FamilyOptions& family, const std::string& r_abs_text, const GlobalOptions& global,
              std::ostream& out) {
    const TameParams params = require_tame(family);
    const Integer r_abs = parse_integer(r_abs_text, "--r-abs");
    const EnumerationLimits limits = resolve_limits(global);
    const std::vector<Integer> ms = admissible_m_values(params, r_abs);

    // Each item is independent; run them in batches of the hardware width.
    std::vector<SweepItem> items;
    const std::size_t width = std::max(1u, std::thread::hardware_concurrency());
    for (std::size_t start = 0; start < ms.size(); start += width) {
        std::vector<std::future<SweepItem>> batch;
        for (std::size_t i = start; i < std::min(ms.size(), start + width); ++i) {
            batch.push_back(std::async(std::launch::async, sweep_one, std::cref(params), ms[i], r_abs, limits));
        }
        for (auto& f : batch) {
            items.push_back(f.get());
        }
    }

    std::size_t passed = 0;
    int code = kExitOk;
    for (const auto& item : items) {
        passed += item.report.status == ReportStatus::pass;
        if (item.code == kExitFalsified || (item.code == kExitBudget && code == kExitOk)) {
            code = item.code;
        }
    }
    ReportDocument summary;
    summary.command = "sweep";
    summary.inputs = {{"N", std::to_string(params.dim())}, {"h", params.h().get_str()},
                      {"a", params.a().get_str()}, {"r_abs", r_abs.get_str()}};
    summary.outputs = {{"admissible", std::to_string(ms.size())}, {"passed", std::to_string(passed)}};
    summary.vector_lists["m_values"] = {decimal_strings(ms)};
    summary.status = code == kExitOk ? ReportStatus::pass
                                     : (code == kExitBudget ? ReportStatus::budget_exceeded : ReportStatus::fail);

    if (global.json) {
        json doc = to_json(summary);
        doc["items"] = json::array();
        for (const auto& item : items) {
            doc["items"].push_back(to_json(item.report));
        }
        out << doc.dump(2) << '\n';
    } else {
        out << "sweep N=" << params.dim() << " h=" << params.h() << " a=" << params.a() << " |r|=" << r_abs << '\n';
        for (const auto& item : items) {
            const auto& rep = item.report;
            auto get = [&](const std::string& key) {
                auto it = rep.outputs.find(key);
                return it == rep.outputs.end() ? std::string("-") : it->second;
            };
            out << "  m=" << rep.inputs.at("m") << " r=" << rep.inputs.at("r") << " s=" << rep.inputs.at("s")
                << " lambda1=" << get("lambda1_enumerated") << " predicted=" << get("lambda1_predicted")
                << " index=" << get("index_computed") << " kissing=" << get("kissing_number") << " "
                << to_string(rep.status);
            if (!rep.message.empty()) {
                out << " (" << rep.message << ")";
            }
            out << '\n';
        }
        out << "  " << passed << "/" << items.size() << " pass\n";
    }
    return code;
}

// ---- catalog-list -------------------------------------------------------------

int run_catalog(const GlobalOptions& global, std::ostream& out) {
    const std::vector<FieldFamilyEntry> entries = {
        conner_perlis(5, 11),
        prime_conductor_abelian(6, 13),
        example3_entry(),
    };
    json doc = json::array();
    for (const auto& e : entries) {
        const std::vector<Integer> ms = admissible_m_values(e);
        if (global.json) {
            doc.push_back({{"label", e.label},
                           {"N", std::to_string(e.n)},
                           {"conductor", e.conductor.get_str()},
                           {"a", e.a.get_str()},
                           {"h", e.h.get_str()},
                           {"provenance", e.provenance},
                           {"admissible_m", decimal_strings(ms)}});
        } else {
            out << e.label << "\n  N=" << e.n << " a=" << e.a << " h=" << e.h << " (" << e.provenance
                << ")\n  admissible m:";
            for (const auto& m : ms) {
                out << ' ' << m;
            }
            out << '\n';
        }
    }
    if (global.json) {
        out << doc.dump(2) << '\n';
    }
    return kExitOk;
}

void emit_error(const std::string& command, ReportStatus status, const std::string& message,
                const GlobalOptions& global, std::ostream& out, std::ostream& err) {
    err << "error: " << message << '\n';
    if (global.json && !command.empty()) {
        ReportDocument report;
        report.command = command;
        report.status = status;
        report.message = message;
        out << to_json(report).dump(2) << '\n';
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact toolkit for tame lattices and their sublattices", "tamelat"};
    app.set_help_flag("--help", "print help and exit");  // -h would collide with --h
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions global;
    app.add_flag("--json", global.json, "machine-readable output");
    app.add_flag("--oracle", global.oracle, "cross-check with an exhaustive box scan");
    app.add_option("--budget", global.budget, "enumeration node budget (env TAMELAT_BUDGET)");

    BuildOptions build;
    auto* build_cmd = app.add_subcommand("build", "write a Gram matrix file");
    add_family_options(build_cmd, build.family, true);
    build_cmd->add_option("--r", build.r, "with --s: write the sublattice Gram instead");
    build_cmd->add_option("--s", build.s);
    build_cmd->add_option("--out", build.out, "output path (default stdout)");

    std::string gram_path;
    auto* svp_cmd = app.add_subcommand("svp", "shortest vectors of a Gram file");
    svp_cmd->set_help_flag("--help", "print help and exit");
    svp_cmd->add_option("--gram", gram_path, "Gram matrix file")->required();

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "check the minimal-basis theorem for one (r, s)");
    add_family_options(verify_cmd, verify.family, false);
    verify_cmd->add_option("--r", verify.r)->required();
    verify_cmd->add_option("--s", verify.s)->required();

    FamilyOptions sweep;
    std::string r_abs = "1";
    auto* sweep_cmd = app.add_subcommand("sweep", "verify every admissible m");
    add_family_options(sweep_cmd, sweep, false);
    sweep_cmd->add_option("--r-abs", r_abs, "|r| (default 1)");

    auto* catalog_cmd = app.add_subcommand("catalog-list", "list the built-in field entries");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    std::string command;
    for (auto* sub : app.get_subcommands()) {
        command = sub->get_name();
    }
    try {
        if (*build_cmd) {
            return run_build(build, out);
        }
        if (*svp_cmd) {
            return run_svp(gram_path, global, out);
        }
        if (*verify_cmd) {
            return run_verify(verify, global, out);
        }
        if (*sweep_cmd) {
            return run_sweep(sweep, r_abs, global, out);
        }
        if (*catalog_cmd) {
            return run_catalog(global, out);
        }
    } catch (const BudgetExceededError& e) {
        emit_error(command, ReportStatus::budget_exceeded, e.what(), global, out, err);
        return kExitBudget;
    } catch (const OracleCeilingError& e) {
        emit_error(command, ReportStatus::budget_exceeded, e.what(), global, out, err);
        return kExitBudget;
    } catch (const TheoremFalsifiedError& e) {
        emit_error(command, ReportStatus::fail, e.what(), global, out, err);
        return kExitFalsified;
    } catch (const OracleInconsistencyError& e) {
        emit_error(command, ReportStatus::fail, e.what(), global, out, err);
        return kExitFalsified;
    } catch (const Error& e) {
        emit_error(command, ReportStatus::fail, e.what(), global, out, err);
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace tamelat::cli
