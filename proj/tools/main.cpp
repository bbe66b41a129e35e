#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sabban/commands.hpp"

namespace {

using sabban::cli::Command;
using sabban::cli::Format;
using sabban::cli::RunConfig;

// "A:B" with either bound possibly negative.
sabban::Interval parse_domain(const std::string& text) {
    const std::size_t sep = text.find(':', 1);
    if (sep == std::string::npos || sep + 1 >= text.size()) {
        throw sabban::ConfigError("--domain expects A:B, got '" + text + "'");
    }
    try {
        const double lo = std::stod(text.substr(0, sep));
        const double hi = std::stod(text.substr(sep + 1));
        return {lo, hi};
    } catch (const std::exception&) {
        throw sabban::ConfigError("--domain expects numeric bounds, got '" + text + "'");
    }
}

Format parse_format(const std::string& text) {
    if (text == "csv") return Format::Csv;
    if (text == "json") return Format::Json;
    if (text == "svg") return Format::Svg;
    throw sabban::ConfigError("unknown format '" + text + "'");
}

sabban::io::Plane parse_plane(const std::string& text) {
    if (text == "xy") return sabban::io::Plane::XY;
    if (text == "xz") return sabban::io::Plane::XZ;
    if (text == "yz") return sabban::io::Plane::YZ;
    throw sabban::ConfigError("unknown plane '" + text + "' (expected xy, xz or yz)");
}

struct RawOptions {
    std::string fixture, expr, domain, kind, format, out, plane;
    int samples = 0;
    double fd_step = 0.0;
    double tol = 0.0;
    bool has_fd_step = false;
    bool has_tol = false;
};

void add_common_options(CLI::App* cmd, RawOptions& raw) {
    cmd->add_option("--fixture", raw.fixture,
                    "Built-in curve: great-circle, latitude[:r], paper-example");
    cmd->add_option("--expr", raw.expr,
                    "Parametric curve \"fx;fy;fz\" in the variable s");
    cmd->add_option("--domain", raw.domain, "Parameter interval A:B");
    cmd->add_option("--n", raw.samples, "Sample count");
    cmd->add_option("--kind", raw.kind, "Smarandache kind: gt, td or gtd");
    cmd->add_option("--format", raw.format, "Output format: csv, json or svg");
    cmd->add_option("--out", raw.out, "Output path (default: stdout)");
    cmd->add_option("--fd-step", raw.fd_step, "Finite-difference step override");
    cmd->add_option("--tol", raw.tol, "Verification tolerance override");
    cmd->add_option("--plane", raw.plane, "Projection plane: xy, xz or yz");
}

RunConfig build_config(Command command, const RawOptions& raw) {
    RunConfig config;
    config.command = command;
    if (!raw.fixture.empty()) config.fixture = raw.fixture;
    if (!raw.expr.empty()) config.expr = raw.expr;
    if (!raw.domain.empty()) config.domain = parse_domain(raw.domain);
    config.samples = raw.samples;
    if (!raw.kind.empty()) {
        const auto kind = sabban::parse_kind(raw.kind);
        if (!kind) {
            throw sabban::ConfigError("unknown kind '" + raw.kind +
                                      "' (expected gt, td or gtd)");
        }
        config.kind = *kind;
    }
    if (!raw.format.empty()) config.format = parse_format(raw.format);
    if (!raw.out.empty()) config.out_path = raw.out;
    if (raw.has_fd_step) config.fd_step = raw.fd_step;
    if (raw.has_tol) config.tol = raw.tol;
    if (!raw.plane.empty()) config.plane = parse_plane(raw.plane);
    return config;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sabban frames, geodesic curvature and Smarandache curves on the unit sphere"};
    app.require_subcommand(1);

    RawOptions raw;
    CLI::App* frame = app.add_subcommand(
        "frame", "Sample the Sabban frame and geodesic curvature of a curve");
    CLI::App* generate = app.add_subcommand(
        "generate", "Emit a Smarandache curve with its invariants");
    CLI::App* verify = app.add_subcommand(
        "verify", "Check closed-form invariants against the definitional oracle");
    CLI::App* plot = app.add_subcommand(
        "plot", "Render an orthographic SVG projection of a curve");
    for (CLI::App* cmd : {frame, generate, verify, plot}) {
        add_common_options(cmd, raw);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    Command command;
    CLI::App* active;
    if (frame->parsed()) { command = Command::Frame; active = frame; }
    else if (generate->parsed()) { command = Command::Generate; active = generate; }
    else if (verify->parsed()) { command = Command::Verify; active = verify; }
    else { command = Command::Plot; active = plot; }
    raw.has_fd_step = active->count("--fd-step") > 0;
    raw.has_tol = active->count("--tol") > 0;

    try {
        const RunConfig config = build_config(command, raw);
        return sabban::cli::run_to_configured_output(config, std::cerr);
    } catch (const sabban::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}
