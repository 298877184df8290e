#pragma once

#include "vest/error.hpp"
#include "vest/evaluate.hpp"
#include "vest/io.hpp"
#include "vest/reduction.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace vest::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_input = 2,
    exit_mismatch = 3,
    exit_budget = 4,
};

/// Bad invocation detected after flag parsing (k = 0, missing sidecar, ...).
class UsageError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

struct RunConfig {
    std::string graph_path;
    std::string format;
    std::string instance_path;
    std::string out_path;
    std::size_t k = 0;
    std::size_t upto = 0;
    std::string method = "dedup";
    std::optional<std::uint64_t> budget;
};

inline std::string read_file(std::string const& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        throw IoError("error reading '" + path + "'");
    }
    return buffer.str();
}

inline void write_file(std::string const& path, std::string const& contents)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << contents;
    out.close();
    if (!out) {
        throw IoError("cannot write '" + path + "'");
    }
}

inline std::string layout_path(std::string const& instance_path) { return instance_path + ".layout"; }

inline Graph load_graph(RunConfig const& cfg)
{
    std::string format = cfg.format;
    if (format.empty()) {
        format = std::filesystem::path(cfg.graph_path).extension() == ".col" ? "dimacs" : "edgelist";
    }
    std::string const text = read_file(cfg.graph_path);
    return format == "dimacs" ? parse_dimacs(text) : parse_edgelist(text);
}

inline Method method_of(RunConfig const& cfg)
{
    auto method = parse_method(cfg.method);
    if (!method) {
        throw UsageError("unknown method '" + cfg.method + "'");
    }
    return *method;
}

inline void require_k(RunConfig const& cfg)
{
    if (cfg.k < 1) {
        throw UsageError("--k must be at least 1");
    }
}

inline EvalConfig eval_config(RunConfig const& cfg, VestInstance const& instance)
{
    EvalConfig config{method_of(cfg), cfg.budget, std::nullopt};
    if (config.method == Method::distinct_fast) {
        std::string const sidecar = layout_path(cfg.instance_path);
        if (!std::filesystem::exists(sidecar)) {
            throw UsageError("distinct-fast needs the layout sidecar '" + sidecar
                             + "' written by 'reduce'; use another method for general instances");
        }
        config.witness = parse_layout(read_file(sidecar));
        config.witness->check_matches(instance);
    }
    return config;
}

inline int cmd_reduce(RunConfig const& cfg, std::ostream& out)
{
    require_k(cfg);
    Graph const graph = load_graph(cfg);
    auto const reduction = reduce_clique_to_vest(graph, cfg.k);
    write_file(cfg.out_path, serialize_instance(reduction.instance));
    write_file(layout_path(cfg.out_path), serialize_layout(reduction.layout));
    out << "d " << reduction.layout.d() << "\n"
        << "m " << reduction.layout.m() << "\n"
        << "h " << reduction.layout.h() << "\n"
        << "s " << reduction.layout.s() << "\n";
    return exit_ok;
}

inline int cmd_eval(RunConfig const& cfg, std::ostream& out)
{
    require_k(cfg);
    VestInstance const instance = parse_instance(read_file(cfg.instance_path));
    out << m_term(instance, cfg.k, eval_config(cfg, instance)).get_str() << "\n";
    return exit_ok;
}

inline int cmd_mseq(RunConfig const& cfg, std::ostream& out)
{
    if (cfg.upto < 1) {
        throw UsageError("--upto must be at least 1");
    }
    VestInstance const instance = parse_instance(read_file(cfg.instance_path));
    for (auto const& term : m_sequence(instance, cfg.upto, eval_config(cfg, instance))) {
        out << term.get_str() << "\n";
    }
    return exit_ok;
}

inline int cmd_cliques(RunConfig const& cfg, std::ostream& out)
{
    require_k(cfg);
    out << count_k_cliques(load_graph(cfg), cfg.k).get_str() << "\n";
    return exit_ok;
}

inline int cmd_verify(RunConfig const& cfg, std::ostream& out)
{
    require_k(cfg);
    Method const method = method_of(cfg);
    auto const report = verify_reduction(load_graph(cfg), cfg.k, method, cfg.budget);
    out << "k " << report.k << "\n"
        << "s " << report.s << "\n"
        << "C_k " << report.clique_count.get_str() << "\n"
        << "expected " << report.expected.get_str() << "\n"
        << "computed " << report.computed.get_str() << "\n"
        << "method " << to_string(report.method) << "\n"
        << "result " << (report.pass ? "PASS" : "FAIL") << "\n";
    return report.pass ? exit_ok : exit_mismatch;
}

/// Runs one command. `args` excludes the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Clique-to-VEST reduction and M-sequence evaluation", "vest"};
    app.require_subcommand(1);
    RunConfig cfg;

    std::vector<std::string> const methods{"naive", "dedup", "distinct-fast"};
    std::vector<std::string> const formats{"dimacs", "edgelist"};

    auto add_graph = [&](CLI::App* sub) {
        sub->add_option("--graph", cfg.graph_path, "Graph file")->required();
        sub->add_option("--format", cfg.format, "Graph format (default: .col is dimacs, else edgelist)")
            ->check(CLI::IsMember(formats));
    };
    auto add_method = [&](CLI::App* sub) {
        sub->add_option("--method", cfg.method, "Evaluator")->check(CLI::IsMember(methods));
        sub->add_option("--budget", cfg.budget,
                        "Work limit (naive: tuples, default 1e8; dedup: states per level, default 1e7)");
    };

    auto* reduce = app.add_subcommand("reduce", "Build the VEST instance for a graph and clique size");
    add_graph(reduce);
    reduce->add_option("--k", cfg.k, "Clique size")->required();
    reduce->add_option("--out", cfg.out_path, "Instance output path")->required();

    auto* eval = app.add_subcommand("eval", "Print M_k of an instance");
    eval->add_option("--instance", cfg.instance_path, "Instance document")->required();
    eval->add_option("--k", cfg.k, "Sequence length")->required();
    add_method(eval);

    auto* mseq = app.add_subcommand("mseq", "Print M_1..M_upto of an instance");
    mseq->add_option("--instance", cfg.instance_path, "Instance document")->required();
    mseq->add_option("--upto", cfg.upto, "Number of terms")->required();
    add_method(mseq);

    auto* cliques = app.add_subcommand("cliques", "Count k-cliques of a graph");
    add_graph(cliques);
    cliques->add_option("--k", cfg.k, "Clique size")->required();

    auto* verify = app.add_subcommand("verify", "Check M_s = s! C_k on the reduced instance");
    add_graph(verify);
    verify->add_option("--k", cfg.k, "Clique size")->required();
    add_method(verify);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (CLI::ParseError const& e) {
        return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*reduce) {
            return cmd_reduce(cfg, out);
        }
        if (*eval) {
            return cmd_eval(cfg, out);
        }
        if (*mseq) {
            return cmd_mseq(cfg, out);
        }
        if (*cliques) {
            return cmd_cliques(cfg, out);
        }
        return cmd_verify(cfg, out);
    } catch (UsageError const& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (InvalidArgument const& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (BudgetExceeded const& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return exit_budget;
    } catch (ParseError const& e) {
        err << "parse error: " << e.what() << "\n";
        return exit_input;
    } catch (Error const& e) {
        err << "error: " << e.what() << "\n";
        return exit_input;
    }
}

} // namespace vest::cli
