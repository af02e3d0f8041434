#include "dgre/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dgre/graph.hpp"
#include "dgre/metrics.hpp"
#include "dgre/model.hpp"
#include "dgre/oracle.hpp"
#include "dgre/verify.hpp"

namespace dgre::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string witness_text(const std::vector<Symbol>& cycle) {
    std::string out;
    for (const auto& v : cycle) out += (out.empty() ? "" : " -> ") + v.str();
    return out;
}

// Parses and validates the graph file; reports to err and returns nullopt
// on failure.
std::optional<Dg> load_graph(const std::string& path, std::ostream& err) {
    try {
        Dg g = parse_graph(read_file(path));
        if (auto cycle = validate_acyclic(g)) {
            err << path << ": graph has a cycle: " << witness_text(*cycle) << "\n";
            return std::nullopt;
        }
        return g;
    } catch (const Error& e) {
        err << path << ": " << e.what() << "\n";
        return std::nullopt;
    }
}

TermStyle style(OutputFormat f) { return f == OutputFormat::machine ? TermStyle::dotted : TermStyle::automatic; }

} // namespace

int run_convert(const Invocation& inv, std::ostream& out, std::ostream& err) {
    auto g = load_graph(inv.graph_path, err);
    if (!g) return kInputError;
    out << print_sopf(enumerate_paths(*g), style(inv.format)) << "\n";
    return kOk;
}

int run_mutate(const Invocation& inv, std::ostream& out, std::ostream& err) {
    if (inv.script_text.has_value() == inv.script_path.has_value()) {
        err << "mutate needs exactly one of --script and --script-file\n";
        return kInputError;
    }
    auto g = load_graph(inv.graph_path, err);
    if (!g) return kInputError;
    std::vector<MutationOp> ops;
    try {
        ops = parse_script(inv.script_text ? *inv.script_text : read_file(*inv.script_path));
    } catch (const Error& e) {
        err << "script: " << e.what() << "\n";
        return kInputError;
    }

    ScriptResult res;
    try {
        res = apply_script(model_from_graph(*g), ops);
    } catch (const MutationError& e) {
        err << "mutation failed at " << e.what() << "\n";
        return kInputError;
    }

    const bool machine = inv.format == OutputFormat::machine;
    out << print_sopf(res.state.re, style(inv.format)) << "\n";
    out << "# graph\n" << render_graph(res.state.dg);
    out << "# log\n";
    for (const auto& e : res.log) {
        if (machine)
            out << "op=" << format_op(e.op) << " added=" << e.terms_added << " removed=" << e.terms_removed << "\n";
        else
            out << format_op(e.op) << "  added " << e.terms_added << "  removed " << e.terms_removed << "\n";
        if (!e.diagnostic.empty()) err << "note: " << format_op(e.op) << ": " << e.diagnostic << "\n";
    }
    return kOk;
}

int run_verify(const Invocation& inv, std::ostream& out, std::ostream& err) {
    if (inv.max_nodes > oracle::kMaxNodes) {
        err << "--max-nodes is limited to " << oracle::kMaxNodes << "\n";
        return kInputError;
    }
    VerifyOptions opts;
    opts.trials = inv.trials;
    opts.seed = inv.seed;
    opts.max_nodes = inv.max_nodes;
    VerifyReport rep = dgre::run_verify(opts);

    if (inv.format == OutputFormat::machine) {
        for (const auto& t : rep.trials)
            out << "seed=" << t.seed << " steps=" << t.steps << " rejected=" << t.rejected_steps
                << " count_checks=" << t.count_checks << " verdict=" << (t.ok ? "pass" : "fail") << "\n";
    }
    out << rep.passed() << "/" << rep.trials.size() << " equivalent\n";
    if (const TrialOutcome* f = rep.first_failure()) {
        err << "mismatch: seed " << f->seed << ", step " << f->divergent_step << "\n"
            << "script: " << f->script << "\n"
            << "detail: " << f->detail << "\n"
            << "graph:\n" << f->graph;
        return kCheckFailed;
    }
    return kOk;
}

int run_bench(const Invocation& inv, std::ostream& out, std::ostream& err) {
    std::vector<TrendReport> reports;
    try {
        reports = dgre::run_bench(inv.sizes);
    } catch (const Error& e) {
        err << "bench: " << e.what() << "\n";
        return kInputError;
    }
    out << (inv.format == OutputFormat::machine ? format_machine(reports) : format_pretty(reports));
    for (const auto& r : reports)
        if (!r.pass) return kCheckFailed;
    return kOk;
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Acyclic directed graphs and their sum-of-products regular expressions"};
    app.require_subcommand(1);
    Invocation inv;
    std::string format = "pretty";
    std::string sizes;

    auto* convert = app.add_subcommand("convert", "Print the regular expression of a graph file");
    convert->add_option("graph", inv.graph_path, "Graph file")->required();

    auto* mutate = app.add_subcommand("mutate", "Apply a mutation script to a graph and its regular expression");
    mutate->add_option("graph", inv.graph_path, "Graph file")->required();
    auto* script = mutate->add_option("--script", inv.script_text, "Operators, e.g. \"(cd)o_a (df)i_a (n)o_n\"");
    auto* script_file = mutate->add_option("--script-file", inv.script_path, "File holding the operators");
    script->excludes(script_file);

    auto* verify = app.add_subcommand("verify", "Differential check against the brute-force oracle");
    verify->add_option("--trials", inv.trials, "Number of random trials");
    verify->add_option("--seed", inv.seed, "First trial seed");
    verify->add_option("--max-nodes", inv.max_nodes, "Largest random graph");

    auto* bench = app.add_subcommand("bench", "Fit growth exponents of the instrumented operations");
    bench->add_option("--sizes", sizes, "Comma-separated term-set sizes, at least 4");

    for (auto* sub : {convert, mutate, verify, bench})
        sub->add_option("--format", format, "pretty or machine")->check(CLI::IsMember({"pretty", "machine"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kInputError;
    }
    inv.format = format == "machine" ? OutputFormat::machine : OutputFormat::pretty;

    if (!sizes.empty()) {
        inv.sizes.clear();
        std::istringstream in(sizes);
        for (std::string item; std::getline(in, item, ',');) {
            try {
                std::size_t used = 0;
                unsigned long v = std::stoul(item, &used);
                if (used != item.size()) throw std::invalid_argument(item);
                inv.sizes.push_back(v);
            } catch (const std::exception&) {
                err << "bench: bad size '" << item << "'\n";
                return kInputError;
            }
        }
    }

    if (*convert) return run_convert(inv, out, err);
    if (*mutate) return run_mutate(inv, out, err);
    if (*verify) return run_verify(inv, out, err);
    return run_bench(inv, out, err);
}

} // namespace dgre::cli
