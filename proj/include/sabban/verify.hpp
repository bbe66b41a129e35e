#pragma once

#include <span>
#include <string>
#include <vector>

#include "sabban/curve.hpp"
#include "sabban/smarandache.hpp"

namespace sabban {

// A definitional-vs-derived check: these gate the verification exit
// status. Printed-form verdicts never do.
struct GateCheck {
    std::string formula;
    double max_gap{0.0};
    double tolerance{0.0};
    bool pass{false};
};

struct KindVerification {
    SmarandacheKind kind{SmarandacheKind::GT};
    std::vector<GateCheck> gates;
    std::vector<FormulaVerdict> printed_verdicts;
    std::vector<ErratumSample> samples;

    bool gates_pass() const;
};

struct VerifyOptions {
    int samples = 64;
    // Laws validated numerically (speed ratio, tangent direction).
    double law_tol = 1e-5;
    // Re-derived closed forms vs the definitional pipeline.
    double derived_tol = 2e-5;
    DefinitionalOptions definitional;
};

struct VerifyReport {
    std::vector<KindVerification> kinds;
    VerifyOptions options;

    bool all_gates_pass() const;
};

// Runs every definitional-vs-derived gate and every printed-form verdict
// for the given kinds over an interior sample grid.
VerifyReport run_verification(const CurveSource& c,
                              std::span<const SmarandacheKind> kinds,
                              const VerifyOptions& options = {});

}  // namespace sabban
