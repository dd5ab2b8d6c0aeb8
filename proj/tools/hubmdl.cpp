// hubmdl: hub classification and experiment harness.
//
//   hubmdl hubs <edge-list|->   classify hubs with ER, CM, Average and Loubar
//   hubmdl synth                degree-distribution sweeps
//   hubmdl price                h*(t) on Price-model growth
//   hubmdl transition           hub transition steps over an (m, alpha) grid
//   hubmdl verify               oracle and invariant checks
//
// Exit status: 0 success, 1 input or parameter error, 2 verification failure.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/core.h>

#include "hubmdl/commands.hpp"
#include "hubmdl/errors.hpp"
#include "hubmdl/parallel.hpp"
#include "hubmdl/version.hpp"

using namespace hubmdl;

namespace {

std::string command_line(int argc, char** argv) {
    std::string s = kToolName;
    for (int i = 1; i < argc; ++i) {
        s += ' ';
        s += argv[i];
    }
    return s;
}

// Output destination chosen by --out; "-" and "stdout" mean standard output.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (path.empty() || path == "-" || path == "stdout") return;
        file_ = std::make_unique<std::ofstream>(path);
        if (!*file_) throw ParameterError(fmt::format("cannot open '{}' for writing", path));
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

template <class T, class Parse>
std::vector<T> parse_list(const std::vector<std::string>& names, Parse parse) {
    std::vector<T> out;
    for (const auto& n : names) out.push_back(parse(n));
    return out;
}

struct Common {
    std::uint64_t seed = kDefaultSeed;
    std::string format = "csv";
    std::string out = "-";
    std::size_t workers = default_workers();
    bool quiet = false;
};

void add_output_flags(CLI::App* app, Common& c) {
    app->add_option("--format", c.format, "csv or structured")->capture_default_str();
    app->add_option("--out", c.out, "output path (default stdout)");
}

void add_run_flags(CLI::App* app, Common& c) {
    app->add_option("--seed", c.seed, "random seed")->capture_default_str();
    app->add_option("--workers", c.workers, "worker threads")->check(CLI::PositiveNumber);
    app->add_flag("--quiet", c.quiet, "no progress messages");
}

void emit(const Table& t, const Common& c, const std::string& cmd, std::optional<std::uint64_t> seed) {
    const OutputFormat fmt = parse_format(c.format);
    Sink sink(c.out);
    write_table(sink.stream(), t, RunHeader{cmd, seed}, fmt);
    sink.stream().flush();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hub identification in directed networks by minimum description length"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    Common common;

    // hubs
    std::string input;
    std::string direction = "in", encoding = "auto", family, delimiter = "auto";
    bool binarize = false, weighted = false, no_self_loops = false, timing = false;
    std::optional<std::size_t> n_nodes;
    auto* hubs = app.add_subcommand("hubs", "classify hubs in an edge list");
    hubs->add_option("input", input, "edge-list path, or - for stdin")->required();
    hubs->add_option("--direction", direction, "in or out")->capture_default_str();
    hubs->add_option("--encoding", encoding, "ers|cms|erm|cmm|auto")->capture_default_str();
    hubs->add_option("--family", family, "simple or multigraph (default: from the input)");
    hubs->add_option("--delimiter", delimiter, "auto|whitespace|comma|tab")->capture_default_str();
    hubs->add_flag("--binarize", binarize, "collapse to a simple graph");
    hubs->add_flag("--weighted", weighted, "read the third column as edge multiplicity");
    hubs->add_flag("--no-self-loops", no_self_loops, "drop self-loops");
    hubs->add_option("--n-nodes", n_nodes, "declared node count (adds isolated nodes)");
    hubs->add_flag("--timing", timing, "add a runtime_ms column");
    add_output_flags(hubs, common);

    // synth
    SynthConfig synth_cfg;
    std::vector<std::string> dist_names = {"poisson"};
    auto* synth = app.add_subcommand("synth", "degree-distribution sweep");
    synth->add_option("--dist", dist_names, "poisson,geometric,zipf")->delimiter(',')->capture_default_str();
    synth->add_option("--mean", synth_cfg.means, "mean degree grid")->delimiter(',')->capture_default_str();
    synth->add_option("--n", synth_cfg.sizes, "network size grid")->delimiter(',')->capture_default_str();
    synth->add_option("--trials", synth_cfg.trials, "trials per cell")->capture_default_str();
    synth->add_flag("--timing", synth_cfg.timing, "add a runtime_ms column");
    add_run_flags(synth, common);
    add_output_flags(synth, common);

    // price
    PriceConfig price_cfg;
    std::vector<std::string> price_encodings = {"erm", "cmm"};
    auto* price = app.add_subcommand("price", "hub counts along Price-model growth");
    price->add_option("--m", price_cfg.m, "links per arrival")->capture_default_str();
    price->add_option("--alpha", price_cfg.alpha, "attachment exponent")->capture_default_str();
    price->add_option("--steps", price_cfg.t_max, "number of arrivals T")->capture_default_str();
    price->add_option("--trials", price_cfg.trials, "growth runs")->capture_default_str();
    price->add_option("--encoding", price_encodings, "MDL encodings")->delimiter(',')->capture_default_str();
    price->add_flag("--distinct-targets", price_cfg.distinct_targets,
                    "each arrival links to m different nodes");
    add_run_flags(price, common);
    add_output_flags(price, common);

    // transition
    TransitionConfig tr_cfg;
    std::string tr_encoding = "cmm";
    auto* transition = app.add_subcommand("transition", "hub transition step over an (m, alpha) grid");
    transition->add_option("--m", tr_cfg.ms, "m grid")->delimiter(',')->capture_default_str();
    transition->add_option("--alpha", tr_cfg.alphas, "alpha grid")->delimiter(',')->capture_default_str();
    transition->add_option("--steps", tr_cfg.t_max, "number of arrivals T")->capture_default_str();
    transition->add_option("--trials", tr_cfg.trials, "growth runs per cell")->capture_default_str();
    transition->add_option("--encoding", tr_encoding, "ers|cms|erm|cmm")->capture_default_str();
    transition->add_flag("--distinct-targets", tr_cfg.distinct_targets,
                         "each arrival links to m different nodes");
    add_run_flags(transition, common);
    add_output_flags(transition, common);

    // verify
    VerifyConfig verify_cfg;
    std::string fault;
    auto* verify = app.add_subcommand("verify", "run oracle and invariant checks");
    verify->add_option("--trials", verify_cfg.trials, "random instances per check")->capture_default_str();
    verify->add_option("--seed", common.seed, "random seed")->capture_default_str();
    verify->add_option("--out", common.out, "report path (default stdout)");
    verify->add_option("--inject-fault", fault)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    const std::string cmd = command_line(argc, argv);
    auto progress = [&](const std::string& msg) {
        if (!common.quiet) std::cerr << msg << '\n';
    };

    try {
        if (*hubs) {
            HubsConfig cfg;
            cfg.direction = parse_direction(direction);
            if (!family.empty()) cfg.family = parse_family(family);
            if (encoding != "auto") cfg.encoding = parse_encoding(encoding);
            cfg.parse.delimiter = parse_delimiter(delimiter);
            cfg.parse.binarize = binarize;
            cfg.parse.weighted = weighted;
            cfg.parse.allow_self_loops = !no_self_loops;
            cfg.parse.n_nodes = n_nodes;
            cfg.timing = timing;
            parse_format(common.format);  // reject a bad format before reading input
            Table t;
            if (input == "-") {
                t = cmd_hubs(std::cin, cfg);
            } else {
                t = cmd_hubs(parse_edge_list_file(input, cfg.parse), cfg);
            }
            emit(t, common, cmd, std::nullopt);
        } else if (*synth) {
            synth_cfg.families = parse_list<DistFamily>(dist_names, parse_dist_family);
            synth_cfg.seed = common.seed;
            synth_cfg.workers = common.workers;
            parse_format(common.format);
            progress(fmt::format("synth: {} cells x {} trials",
                                 synth_cfg.families.size() * synth_cfg.means.size() * synth_cfg.sizes.size(),
                                 synth_cfg.trials));
            emit(cmd_synth(synth_cfg), common, cmd, common.seed);
        } else if (*price) {
            price_cfg.encodings = parse_list<EncodingKind>(price_encodings, parse_encoding);
            price_cfg.seed = common.seed;
            price_cfg.workers = common.workers;
            parse_format(common.format);
            progress(fmt::format("price: m={} alpha={} T={} x {} trials", price_cfg.m, price_cfg.alpha,
                                 price_cfg.t_max, price_cfg.trials));
            emit(cmd_price(price_cfg), common, cmd, common.seed);
        } else if (*transition) {
            tr_cfg.encoding = parse_encoding(tr_encoding);
            tr_cfg.seed = common.seed;
            tr_cfg.workers = common.workers;
            parse_format(common.format);
            progress(fmt::format("transition: {} cells x {} trials", tr_cfg.ms.size() * tr_cfg.alphas.size(),
                                 tr_cfg.trials));
            emit(cmd_transition(tr_cfg), common, cmd, common.seed);
        } else if (*verify) {
            verify_cfg.seed = common.seed;
            if (!fault.empty()) verify_cfg.inject_fault = fault;
            const VerifyReport report = run_verify(verify_cfg);
            Sink sink(common.out);
            write_report(sink.stream(), report, cmd);
            sink.stream().flush();
            return report.ok() ? 0 : 2;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::bad_alloc&) {
        std::cerr << "error: out of memory\n";
        return 1;
    }
    return 0;
}
