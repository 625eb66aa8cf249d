#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "dbsim/config.hpp"

namespace dbsim {

/// An experiment: a base scenario plus the axes a command iterates over and
/// the directory artifacts land in.
struct ExperimentSpec {
    SimConfig base;
    std::vector<int> drone_counts;        ///< sweep axis (sweep only)
    std::vector<std::uint64_t> seeds;     ///< sweep axis (sweep only)
    std::vector<Policy> policies;         ///< sweep axis (sweep only)
    std::filesystem::path out_dir = ".";
};

/// Single run of spec.base. Writes timeseries.csv (t,drone_id,m), summary.csv
/// (per-drone statistics) and run_meta.txt to out_dir. run_meta.txt is itself
/// a parseable configuration carrying the fully resolved parameters, so the
/// run can be reproduced byte for byte from it alone.
void cmd_run(const ExperimentSpec& spec);

/// Runs every (n_d, seed, policy) cell of the grid. Writes sweep.csv with one
/// row per cell, aggregate.csv with per-(n_d, policy) mean/min/max across
/// seeds, and run_meta.txt. Rows are ordered by (n_d, seed, policy)
/// regardless of the order the axes were given in.
void cmd_sweep(const ExperimentSpec& spec);

/// Runs both policies on the identical config and seed. Writes compare.csv
/// (per-tick mean connectivity for each policy), verdict.txt and
/// run_meta.txt. Returns the verdict line.
std::string cmd_compare(const ExperimentSpec& spec);

}  // namespace dbsim
