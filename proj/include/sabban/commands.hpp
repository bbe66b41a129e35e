#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "sabban/curve.hpp"
#include "sabban/emit.hpp"
#include "sabban/smarandache.hpp"
#include "sabban/verify.hpp"

// Command implementations behind the `sabban` executable. Kept in the
// library so tests can drive the exact CLI code paths.
namespace sabban::cli {

enum class Command { Frame, Generate, Verify, Plot };
enum class Format { Csv, Json, Svg };

struct RunConfig {
    Command command{Command::Frame};
    std::optional<std::string> fixture;  // "great-circle" | "latitude[:r]" | "paper-example"
    std::optional<std::string> expr;     // "fx;fy;fz"
    std::optional<Interval> domain;
    int samples = 0;                     // 0 selects the per-command default
    std::optional<SmarandacheKind> kind;
    std::optional<Format> format;        // default depends on the command
    std::optional<std::string> out_path;
    std::optional<double> fd_step;
    std::optional<double> tol;           // overrides the verify gate tolerances
    io::Plane plane = io::Plane::XY;
};

// Curve named by the config (fixture or expression triple), with domain and
// finite-difference overrides applied. ConfigError on anything malformed.
CurveSource resolve_curve(const RunConfig& config);

// Executes the command, writing the artifact to `out`. Returns the process
// exit code: 0, or 3 when a verify gate fails. Throws ConfigError (exit 2)
// and numerical errors (exit 3).
int run(const RunConfig& config, std::ostream& out);

// As run(), but honoring config.out_path and mapping errors to the CLI
// exit-code contract (stderr gets the message).
int run_to_configured_output(const RunConfig& config, std::ostream& err);

}  // namespace sabban::cli
