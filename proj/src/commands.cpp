#include "hubmdl/commands.hpp"

#include <chrono>
#include <istream>
#include <map>
#include <memory>

#include <fmt/core.h>

#include "hubmdl/baselines.hpp"
#include "hubmdl/errors.hpp"
#include "hubmdl/hubfinder.hpp"
#include "hubmdl/methods.hpp"
#include "hubmdl/parallel.hpp"

namespace hubmdl {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Cell int_cell(std::size_t v) { return static_cast<std::int64_t>(v); }

std::string join_labels(const DirectedGraph& g, const std::vector<std::size_t>& ids) {
    std::string out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) out += ';';
        out += g.label(ids[i]);
    }
    return out;
}

}  // namespace

// --- hubs -----------------------------------------------------------------------

Table cmd_hubs(const DirectedGraph& graph, const HubsConfig& config) {
    GraphFamily family = config.family.value_or(graph.family);
    if (config.encoding) {
        const GraphFamily enc_family = family_of(*config.encoding);
        if (config.family && *config.family != enc_family) {
            throw ParameterError(fmt::format("encoding {} does not belong to the {} family",
                                             to_string(*config.encoding), to_string(*config.family)));
        }
        family = enc_family;
    }
    if (family == GraphFamily::simple && graph.family == GraphFamily::multigraph) {
        throw ParameterError(
            "graph has repeated edges or self-loops; use a multigraph encoding or binarize");
    }

    const DegreeSequence deg = degree_sequence(graph, config.direction);
    const std::size_t n = deg.n_nodes();

    Table t;
    t.columns = {"method",  "encoding", "direction", "family", "n",     "m",
                 "h_star",  "h_star_over_n", "threshold_degree", "l_star", "l0_er", "l0_cm",
                 "eta",     "selected", "hub_ids"};
    if (config.timing) t.columns.push_back("runtime_ms");

    const EncodingKind er = er_encoding(family);
    const EncodingKind cm = cm_encoding(family);
    const Bits l0_er = baseline_dl(er, deg);
    const Bits l0_cm = baseline_dl(cm, deg);

    auto start = Clock::now();
    HubResult er_result = identify_hubs(deg, er);
    const double er_ms = elapsed_ms(start);
    start = Clock::now();
    HubResult cm_result = identify_hubs(deg, cm);
    const double cm_ms = elapsed_ms(start);

    EncodingKind selected = config.encoding.value_or(er);
    if (!config.encoding) {
        selected = cm_result.l_star < er_result.l_star - 1e-9 ? cm : er;
    }

    auto mdl_row = [&](const char* method, const HubResult& r, double ms) {
        std::vector<Cell> row = {
            std::string(method),
            std::string(to_string(r.encoding)),
            std::string(to_string(config.direction)),
            std::string(to_string(family)),
            int_cell(n),
            static_cast<std::int64_t>(deg.total()),
            int_cell(r.h_star),
            static_cast<double>(r.h_star) / static_cast<double>(n),
            r.threshold_degree ? Cell(static_cast<std::int64_t>(*r.threshold_degree)) : Cell{},
            r.l_star,
            l0_er,
            l0_cm,
            r.eta,
            r.encoding == selected,
            join_labels(graph, r.hub_ids)};
        if (config.timing) row.push_back(ms);
        t.rows.push_back(std::move(row));
    };
    mdl_row("ER", er_result, er_ms);
    mdl_row("CM", cm_result, cm_ms);

    auto baseline_row = [&](const BaselineResult& r, double ms) {
        std::optional<Degree> threshold;
        for (std::size_t i : r.hub_ids) {
            if (!threshold || deg[i] < *threshold) threshold = deg[i];
        }
        std::vector<Cell> row = {
            std::string(to_string(r.method)),
            Cell{},
            std::string(to_string(config.direction)),
            std::string(to_string(family)),
            int_cell(n),
            static_cast<std::int64_t>(deg.total()),
            int_cell(r.h),
            static_cast<double>(r.h) / static_cast<double>(n),
            threshold ? Cell(static_cast<std::int64_t>(*threshold)) : Cell{},
            Cell{},
            l0_er,
            l0_cm,
            Cell{},
            false,
            join_labels(graph, r.hub_ids)};
        if (config.timing) row.push_back(ms);
        t.rows.push_back(std::move(row));
    };
    start = Clock::now();
    const BaselineResult avg = average_hubs(deg);
    baseline_row(avg, elapsed_ms(start));
    start = Clock::now();
    const BaselineResult lb = loubar_hubs(deg);
    baseline_row(lb, elapsed_ms(start));
    return t;
}

Table cmd_hubs(std::istream& edge_list, const HubsConfig& config) {
    return cmd_hubs(parse_edge_list(edge_list, config.parse), config);
}

// --- synth ------------------------------------------------------------------------

namespace {

struct TrialOutcome {
    double h[4] = {0, 0, 0, 0};  // ERm, CMm, Average, Loubar
    double eta[2] = {0, 0};
    bool er_selected = false;
    double ms[4] = {0, 0, 0, 0};
};

}  // namespace

Table cmd_synth(const SynthConfig& config) {
    if (config.trials < 1) throw ParameterError("synth: trials must be at least 1");
    for (auto n : config.sizes) {
        if (n < 1) throw ParameterError("synth: N must be positive");
    }

    Table t;
    t.columns = {"family",         "mean",     "n",          "trials",
                 "method",         "h_star_mean", "h_star_2se", "h_star_over_n_mean",
                 "h_star_over_n_2se", "eta_mean", "eta_2se",  "selected_fraction"};
    if (config.timing) t.columns.push_back("runtime_ms");

    const char* names[4] = {"ERm", "CMm", "Average", "Loubar"};
    std::uint64_t cell = 0;
    for (DistFamily family : config.families) {
        for (double mean : config.means) {
            const DegreeSampler sampler(DegreeDistribution{family, mean});
            for (std::size_t n : config.sizes) {
                std::vector<TrialOutcome> out(config.trials);
                parallel_for(config.trials, config.workers, [&](std::size_t trial) {
                    Rng rng = make_rng(config.seed, {cell, trial});
                    const DegreeSequence deg = sampler.sample(n, rng);
                    TrialOutcome& o = out[trial];
                    auto start = Clock::now();
                    const HubResult er = identify_hubs(deg, EncodingKind::ERm);
                    o.ms[0] = elapsed_ms(start);
                    start = Clock::now();
                    const HubResult cm = identify_hubs(deg, EncodingKind::CMm);
                    o.ms[1] = elapsed_ms(start);
                    o.h[0] = static_cast<double>(er.h_star);
                    o.h[1] = static_cast<double>(cm.h_star);
                    o.eta[0] = er.eta;
                    o.eta[1] = cm.eta;
                    o.er_selected = !(cm.l_star < er.l_star - 1e-9);
                    start = Clock::now();
                    o.h[2] = static_cast<double>(average_hubs(deg).h);
                    o.ms[2] = elapsed_ms(start);
                    start = Clock::now();
                    o.h[3] = deg.total() == 0 ? 0.0 : static_cast<double>(loubar_hubs(deg).h);
                    o.ms[3] = elapsed_ms(start);
                });

                for (int mi = 0; mi < 4; ++mi) {
                    std::vector<double> h, frac, eta;
                    double ms = 0.0, selected = 0.0;
                    for (const auto& o : out) {
                        h.push_back(o.h[mi]);
                        frac.push_back(o.h[mi] / static_cast<double>(n));
                        if (mi < 2) eta.push_back(o.eta[mi]);
                        if (mi == 0 && o.er_selected) selected += 1;
                        if (mi == 1 && !o.er_selected) selected += 1;
                        ms += o.ms[mi];
                    }
                    const MeanSe hs = summarize(h);
                    const MeanSe fs = summarize(frac);
                    std::vector<Cell> row = {std::string(to_string(family)),
                                             mean,
                                             int_cell(n),
                                             int_cell(config.trials),
                                             std::string(names[mi]),
                                             hs.mean,
                                             hs.two_se,
                                             fs.mean,
                                             fs.two_se};
                    if (mi < 2) {
                        const MeanSe es = summarize(eta);
                        row.insert(row.end(), {es.mean, es.two_se,
                                               selected / static_cast<double>(config.trials)});
                    } else {
                        row.insert(row.end(), {Cell{}, Cell{}, Cell{}});
                    }
                    if (config.timing) row.push_back(ms / static_cast<double>(config.trials));
                    t.rows.push_back(std::move(row));
                }
                ++cell;
            }
        }
    }
    return t;
}

// --- price -------------------------------------------------------------------------

Table cmd_price(const PriceConfig& config) {
    PriceParams params{config.m,    config.alpha, config.t_max,
                       config.trials, config.seed, 0, config.distinct_targets};
    validate(params);

    std::vector<HubMethod> methods;
    for (EncodingKind enc : config.encodings) methods.push_back(HubMethod::mdl(enc));
    methods.push_back(HubMethod::average());
    methods.push_back(HubMethod::loubar());

    const HubCounts counts = price_hub_counts(params, methods, config.workers);

    Table t;
    t.columns = {"t", "method", "m", "alpha", "h_star_mean", "h_star_2se"};
    std::vector<double> xs(config.trials);
    for (std::size_t step = 0; step < config.t_max; ++step) {
        for (std::size_t mi = 0; mi < methods.size(); ++mi) {
            for (std::size_t trial = 0; trial < config.trials; ++trial) {
                xs[trial] = counts[trial][mi][step];
            }
            const MeanSe s = summarize(xs);
            t.rows.push_back({int_cell(step + 1), methods[mi].name(), int_cell(config.m),
                              config.alpha, s.mean, s.two_se});
        }
    }
    return t;
}

// --- transition -------------------------------------------------------------------

Table cmd_transition(const TransitionConfig& config) {
    Table t;
    t.columns = {"m", "alpha", "encoding", "t_max", "trials", "t_star"};
    std::uint64_t cell = 0;
    for (std::size_t m : config.ms) {
        for (double alpha : config.alphas) {
            PriceParams params{m,           alpha, config.t_max, config.trials,
                               config.seed, cell++, config.distinct_targets};
            const auto t_star = hub_transition(params, config.encoding, config.workers);
            t.rows.push_back({int_cell(m), alpha, std::string(to_string(config.encoding)),
                              int_cell(config.t_max), int_cell(config.trials),
                              t_star ? Cell(static_cast<std::int64_t>(*t_star))
                                     : Cell(std::string("none"))});
        }
    }
    return t;
}

}  // namespace hubmdl
