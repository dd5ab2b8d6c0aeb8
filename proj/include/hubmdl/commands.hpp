#pragma once

// Experiment drivers behind the CLI verbs. Each returns a Table; the caller
// chooses the output format and destination.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hubmdl/codelength.hpp"
#include "hubmdl/graphio.hpp"
#include "hubmdl/synth.hpp"
#include "hubmdl/table.hpp"

namespace hubmdl {

inline constexpr std::uint64_t kDefaultSeed = 20240101;

struct HubsConfig {
    Direction direction = Direction::in;
    /// Graph family for the ER/CM rows; defaults to the parsed graph's family.
    std::optional<GraphFamily> family;
    /// Encoding that marks the `selected` row; nullopt means model selection.
    std::optional<EncodingKind> encoding;
    ParseOptions parse;
    bool timing = false;
};

/// Classifies hubs with ER, CM, Average and Loubar on one graph.
Table cmd_hubs(const DirectedGraph& graph, const HubsConfig& config);
Table cmd_hubs(std::istream& edge_list, const HubsConfig& config);

struct SynthConfig {
    std::vector<DistFamily> families = {DistFamily::poisson};
    std::vector<double> means = {10.0, 100.0};
    std::vector<std::size_t> sizes = {1000};
    std::size_t trials = 50;
    std::uint64_t seed = kDefaultSeed;
    std::size_t workers = 1;
    bool timing = false;
};

/// Degree-distribution sweep: for every (family, mean, N) cell, trial means
/// and two standard errors of h*, h*/N and eta for ERm, CMm, Average and
/// Loubar, plus the fraction of trials in which each MDL encoding won model
/// selection. Trial t of cell c samples from the stream (seed, c, t).
Table cmd_synth(const SynthConfig& config);

struct PriceConfig {
    std::size_t m = 1;
    double alpha = 0.0;
    std::size_t t_max = 100;
    std::size_t trials = 50;
    std::uint64_t seed = kDefaultSeed;
    std::vector<EncodingKind> encodings = {EncodingKind::ERm, EncodingKind::CMm};
    std::size_t workers = 1;
    bool distinct_targets = false;
};

/// Mean h*(t) and two standard errors per method and timestep.
Table cmd_price(const PriceConfig& config);

struct TransitionConfig {
    std::vector<std::size_t> ms = {1, 4, 10, 18};
    std::vector<double> alphas = {0.0, 0.5, 1.0, 2.7};
    std::size_t t_max = 100;
    std::size_t trials = 50;
    std::uint64_t seed = kDefaultSeed;
    EncodingKind encoding = EncodingKind::CMm;
    std::size_t workers = 1;
    bool distinct_targets = false;
};

/// Hub transition step t* for each (m, alpha) cell; "none" when the trial
/// mean of h* never reaches 1.
Table cmd_transition(const TransitionConfig& config);

// --- verification ---------------------------------------------------------------

struct VerifyConfig {
    std::size_t trials = 200;
    std::uint64_t seed = kDefaultSeed;
    /// Test fixture: name of a check whose computed quantity is corrupted.
    std::optional<std::string> inject_fault;
};

struct CheckResult {
    std::string name;
    bool passed = true;
    std::size_t cases = 0;
    std::string detail;  ///< first failure, with the seed that reproduces it
};

struct VerifyReport {
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;

    bool ok() const;
};

/// Names of all checks run by run_verify, in order.
std::vector<std::string> verify_check_names();

/// Oracle comparisons and module invariants on randomized instances.
VerifyReport run_verify(const VerifyConfig& config);

void write_report(std::ostream& out, const VerifyReport& report, const std::string& command_line);

}  // namespace hubmdl
