#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "mbeam/beam_spec.hpp"

namespace mbeam {

enum class Method { analytical, fem, both };
enum class Format { csv, json };

class usage_error : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class io_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Closed-interval sweep grid: count points from start to stop inclusive, both
// endpoints hit exactly.
struct SweepRange {
    double start = 0.0;
    double stop = 0.0;
    int count = 1;
};

struct RunConfig {
    BeamSpec beam;
    std::string case_id;         // "case1" | "case2" | "case3" | "elastic"
    SweepRange range;
    std::vector<double> N_list;  // axial forces (N), compression negative
    int n_elems = 30;
    Method method = Method::both;
    Format format = Format::csv;
    std::string out_path;        // empty or "-": stdout
};

struct SweepRecord {
    std::string case_id;
    std::string sweep_var;  // "e", "p", "A", "none"
    double sweep_value;
    double N;
    double omega;    // rad/s; 0 for a collapsed or flagged point
    double f_hz;
    double ratio;
    double x0;       // m
    std::string method;  // "analytical" | "fem"
    int iters;       // Newton iterations; 0 analytical; -1 flags a solver failure
    double residual;
};

// Evaluate the configured sweep. Records are ordered by (N ascending, sweep
// value, method), one per (sweep point x N x method). Per-point solver
// failures are flagged (iters = -1) and the run continues; configuration
// problems throw usage_error.
std::vector<SweepRecord> run_case(const RunConfig& config);

// Write records as CSV (fixed header) or JSON (same field names). Floats are
// serialized with 12 significant digits; identical inputs produce identical
// bytes. Refuses an empty record list.
void emit(const std::vector<SweepRecord>& records, Format format, std::ostream& out);

// Emit to a file path ("-" or empty: stdout). Throws io_error when the path
// cannot be written.
void emit_to_path(const std::vector<SweepRecord>& records, Format format,
                  const std::string& path);

}  // namespace mbeam
