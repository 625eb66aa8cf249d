#pragma once

#include <span>
#include <vector>

#include "dbsim/engine.hpp"

namespace dbsim {

/// Connectivity statistics for one drone over a run.
struct DroneStats {
    int drone_id = 0;
    double mean_m = 0.0;
    int min_m = 0;
    int max_m = 0;
    int final_m = 0;
};

/// Headline quantities of one run.
struct RunSummary {
    /// Time average of the per-tick sum of all drones' connectivity.
    double avg_connectivity = 0.0;
    std::vector<DroneStats> per_drone;
    /// Mean connectivity over drones, per tick.
    std::vector<double> mean_m_timeseries;
    /// OLS slope of mean_m_timeseries against tick index; 0 for runs too
    /// short to fit.
    double trend_slope = 0.0;
};

/// (1/T) * sum over ticks of the drone-sum of connectivity. Throws
/// EmptyTraces on empty input.
double average_connectivity(std::span<const TickTrace> traces);

/// Per-drone mean/min/max over all ticks plus the final tick's value.
std::vector<DroneStats> drone_stats(std::span<const TickTrace> traces);

/// Ordinary least-squares slope of value against index. Throws
/// InsufficientData for series shorter than 2.
double trend_slope(std::span<const double> series);

RunSummary summarize(const RunResult& result);

}  // namespace dbsim
