#pragma once

#include <stdexcept>

namespace dbsim {

/// A configuration or input violates one of its documented invariants.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed configuration text.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Configuration key outside the documented key set.
struct UnknownKeyError : ParseError {
    using ParseError::ParseError;
};

/// A file could not be read or written.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Pair separation requested for two effectively coincident positions.
struct DegenerateCoincidence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Centroid requested for an empty member set.
struct NoConnections : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Metric requested over an empty trace sequence.
struct EmptyTraces : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Trend fit requested on a series too short to fit.
struct InsufficientData : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace dbsim
