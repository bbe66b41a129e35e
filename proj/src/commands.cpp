#include "sabban/commands.hpp"

#include "sabban/expression.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace sabban::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr double kDefaultLatitudeRadius = 0.7071067811865475244;  // 1/sqrt(2)

int default_samples(Command command) {
    switch (command) {
        case Command::Frame: return 101;
        case Command::Generate: return 101;
        case Command::Verify: return 64;
        case Command::Plot: return 401;
    }
    throw ConfigError("unknown command");
}

Format default_format(Command command) {
    switch (command) {
        case Command::Frame: return Format::Csv;
        case Command::Generate: return Format::Csv;
        case Command::Verify: return Format::Json;
        case Command::Plot: return Format::Svg;
    }
    throw ConfigError("unknown command");
}

const char* format_name(Format f) {
    switch (f) {
        case Format::Csv: return "csv";
        case Format::Json: return "json";
        case Format::Svg: return "svg";
    }
    throw ConfigError("unknown format");
}

const char* command_name(Command c) {
    switch (c) {
        case Command::Frame: return "frame";
        case Command::Generate: return "generate";
        case Command::Verify: return "verify";
        case Command::Plot: return "plot";
    }
    throw ConfigError("unknown command");
}

void check_format(Command command, Format format) {
    const bool ok = (command == Command::Plot && format == Format::Svg) ||
                    (command == Command::Verify && format == Format::Json) ||
                    ((command == Command::Frame || command == Command::Generate) &&
                     (format == Format::Csv || format == Format::Json));
    if (!ok) {
        throw ConfigError(std::string("format '") + format_name(format) +
                          "' is not valid for command '" + command_name(command) + "'");
    }
}

CurveSource fixture_by_name(const std::string& name) {
    if (name == "great-circle") return fixture_great_circle();
    if (name == "paper-example") return fixture_paper_example();
    if (name == "latitude") return fixture_latitude_circle(kDefaultLatitudeRadius);
    if (name.rfind("latitude:", 0) == 0) {
        const std::string arg = name.substr(9);
        char* end = nullptr;
        const double r = std::strtod(arg.c_str(), &end);
        if (end == arg.c_str() || *end != '\0') {
            throw ConfigError("bad latitude radius '" + arg + "'");
        }
        try {
            return fixture_latitude_circle(r);
        } catch (const InvalidRadius& e) {
            throw ConfigError(e.what());
        }
    }
    throw ConfigError("unknown fixture '" + name +
                      "' (expected great-circle, latitude[:r] or paper-example)");
}

std::string config_echo(const RunConfig& config, const CurveSource& curve,
                        int samples) {
    std::ostringstream os;
    os << "sabban " << command_name(config.command);
    if (config.fixture) os << " fixture=" << *config.fixture;
    if (config.expr) os << " expr=" << *config.expr;
    if (config.kind) os << " kind=" << kind_name(*config.kind);
    os << " domain=[" << io::format_double(curve.domain().lo) << ","
       << io::format_double(curve.domain().hi) << "]";
    os << " n=" << samples;
    if (config.command == Command::Plot) os << " plane=" << io::plane_name(config.plane);
    return os.str();
}

ordered_json meta_json(const RunConfig& config, const CurveSource& curve,
                       int samples) {
    ordered_json meta;
    meta["command"] = command_name(config.command);
    if (config.fixture) meta["fixture"] = *config.fixture;
    if (config.expr) meta["expr"] = *config.expr;
    if (config.kind) meta["kind"] = std::string(kind_name(*config.kind));
    meta["domain"] = {curve.domain().lo, curve.domain().hi};
    meta["n"] = samples;
    meta["format"] = format_name(config.format.value_or(default_format(config.command)));
    meta["fd_step"] = curve.fd_step();
    return meta;
}

// ---- frame ---------------------------------------------------------------

const char* kFrameHeader =
    "s,gx,gy,gz,tx,ty,tz,dx,dy,dz,kappa_g,kappa_g_prime";

void frame_row_values(const FrameSample& f, std::vector<double>& row) {
    row = {f.s,
           f.frame.gamma.x(),   f.frame.gamma.y(),   f.frame.gamma.z(),
           f.frame.tangent.x(), f.frame.tangent.y(), f.frame.tangent.z(),
           f.frame.normal.x(),  f.frame.normal.y(),  f.frame.normal.z(),
           f.kappa_g,           f.kappa_g_prime};
}

void cmd_frame(const RunConfig& config, const CurveSource& curve, int samples,
               Format format, std::ostream& out) {
    const std::vector<FrameSample> frames = sample_frames(curve, samples);
    std::vector<double> row;
    if (format == Format::Csv) {
        out << kFrameHeader << '\n';
        for (const FrameSample& f : frames) {
            frame_row_values(f, row);
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) out << ',';
                out << io::format_double(row[i]);
            }
            out << '\n';
        }
        return;
    }
    static const char* kFields[] = {"s",  "gx", "gy", "gz", "tx", "ty",
                                    "tz", "dx", "dy", "dz", "kappa_g",
                                    "kappa_g_prime"};
    ordered_json doc;
    doc["meta"] = meta_json(config, curve, samples);
    ordered_json rows = ordered_json::array();
    for (const FrameSample& f : frames) {
        frame_row_values(f, row);
        ordered_json r;
        for (std::size_t i = 0; i < row.size(); ++i) r[kFields[i]] = row[i];
        rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    out << doc.dump(2) << '\n';
}

// ---- generate ------------------------------------------------------------

const char* kGenerateHeader =
    "s,s_star,bx,by,bz,speed_ratio,kappa_beta_definitional,kappa_beta_paper";

void cmd_generate(const RunConfig& config, const CurveSource& curve, int samples,
                  Format format, std::ostream& out) {
    const SmarandacheKind kind = *config.kind;
    const DefinitionalPipeline pipeline(kind, curve);
    const std::vector<double> grid = erratum_sample_grid(curve, samples);

    struct Row {
        double s, s_star, bx, by, bz, ratio, kappa_def, kappa_printed;
    };
    std::vector<Row> rows;
    rows.reserve(grid.size());
    for (const double s : grid) {
        const SabbanFrame frame = sabban_frame(curve, s);
        const double k = geodesic_curvature(curve, s);
        const double kp = kappa_prime_guarded(curve, s);
        const UnitVec3 beta = smarandache_point(kind, frame);
        rows.push_back({s, pipeline.s_star(s), beta.x(), beta.y(), beta.z(),
                        speed_ratio(kind, k), pipeline.kappa_beta(s),
                        kappa_beta_printed(kind, k, kp)});
    }

    if (format == Format::Csv) {
        out << kGenerateHeader << '\n';
        for (const Row& r : rows) {
            out << io::format_double(r.s) << ',' << io::format_double(r.s_star)
                << ',' << io::format_double(r.bx) << ',' << io::format_double(r.by)
                << ',' << io::format_double(r.bz) << ','
                << io::format_double(r.ratio) << ','
                << io::format_double(r.kappa_def) << ','
                << io::format_double(r.kappa_printed) << '\n';
        }
        return;
    }
    ordered_json doc;
    doc["meta"] = meta_json(config, curve, samples);
    ordered_json jrows = ordered_json::array();
    for (const Row& r : rows) {
        ordered_json j;
        j["s"] = r.s;
        j["s_star"] = r.s_star;
        j["bx"] = r.bx;
        j["by"] = r.by;
        j["bz"] = r.bz;
        j["speed_ratio"] = r.ratio;
        j["kappa_beta_definitional"] = r.kappa_def;
        j["kappa_beta_paper"] = r.kappa_printed;
        jrows.push_back(std::move(j));
    }
    doc["rows"] = std::move(jrows);
    out << doc.dump(2) << '\n';
}

// ---- verify ----------------------------------------------------------------

ordered_json verdict_json(const FormulaVerdict& v) {
    ordered_json j;
    j["formula"] = v.formula;
    j["verdict"] = v.consistent ? "CONSISTENT" : "INCONSISTENT";
    j["max_gap"] = v.max_gap;
    j["tolerance"] = v.tolerance;
    return j;
}

int cmd_verify(const RunConfig& config, const CurveSource& curve, int samples,
               std::ostream& out) {
    std::vector<SmarandacheKind> kinds;
    if (config.kind) {
        kinds.push_back(*config.kind);
    } else {
        kinds.assign(std::begin(kAllKinds), std::end(kAllKinds));
    }

    VerifyOptions options;
    options.samples = samples;
    if (config.tol) {
        options.law_tol = *config.tol;
        options.derived_tol = *config.tol;
    }
    const VerifyReport report = run_verification(curve, kinds, options);

    ordered_json doc;
    ordered_json meta = meta_json(config, curve, samples);
    meta["tolerances"] = {{"law", options.law_tol},
                          {"derived", options.derived_tol},
                          {"printed_consistency", ErratumReport::kConsistencyTol}};
    doc["meta"] = std::move(meta);

    ordered_json jkinds = ordered_json::array();
    for (const KindVerification& kv : report.kinds) {
        ordered_json jk;
        jk["kind"] = std::string(kind_name(kv.kind));

        ordered_json gates = ordered_json::array();
        for (const GateCheck& g : kv.gates) {
            ordered_json jg;
            jg["formula"] = g.formula;
            jg["max_gap"] = g.max_gap;
            jg["tolerance"] = g.tolerance;
            jg["pass"] = g.pass;
            gates.push_back(std::move(jg));
        }
        jk["gates"] = std::move(gates);
        jk["gates_pass"] = kv.gates_pass();

        ordered_json verdicts = ordered_json::array();
        for (const FormulaVerdict& v : kv.printed_verdicts) {
            ordered_json jv = verdict_json(v);
            if (v.formula == "d_beta_printed") {
                double worst = 0.0;
                for (const ErratumSample& s : kv.samples) {
                    worst = std::max(worst, s.d_beta_printed_norm_defect);
                }
                jv["max_unit_norm_defect"] = worst;
            }
            verdicts.push_back(std::move(jv));
        }
        jk["printed_verdicts"] = std::move(verdicts);

        ordered_json jsamples = ordered_json::array();
        for (const ErratumSample& s : kv.samples) {
            ordered_json js;
            js["s"] = s.s;
            js["kappa_g"] = s.kappa_g;
            js["kappa_g_prime"] = s.kappa_g_prime;
            js["d_beta_printed"] = {s.d_beta_printed.x, s.d_beta_printed.y,
                                    s.d_beta_printed.z};
            js["d_beta_definitional"] = {s.d_beta_definitional.x,
                                         s.d_beta_definitional.y,
                                         s.d_beta_definitional.z};
            js["d_beta_gap"] = s.d_beta_gap;
            js["d_beta_printed_norm_defect"] = s.d_beta_printed_norm_defect;
            js["kappa_beta_printed"] = s.kappa_beta_printed;
            js["kappa_beta_definitional"] = s.kappa_beta_definitional;
            js["kappa_beta_gap"] = s.kappa_beta_gap;
            jsamples.push_back(std::move(js));
        }
        jk["samples"] = std::move(jsamples);
        jkinds.push_back(std::move(jk));
    }
    doc["report"] = std::move(jkinds);
    doc["all_gates_pass"] = report.all_gates_pass();
    out << doc.dump(2) << '\n';

    return report.all_gates_pass() ? 0 : 3;
}

// ---- plot ------------------------------------------------------------------

void cmd_plot(const RunConfig& config, const CurveSource& curve, int samples,
              std::ostream& out) {
    const CurveSource* target = &curve;
    std::optional<CurveSource> generated;
    if (config.kind) {
        generated.emplace(generate(*config.kind, curve));
        target = &*generated;
    }
    const SampledCurve sampled = sample_curve(*target, samples);
    io::render_curve_svg(out, sampled, config.plane,
                         config_echo(config, curve, samples));
}

}  // namespace

CurveSource resolve_curve(const RunConfig& config) {
    if (config.fixture.has_value() == config.expr.has_value()) {
        throw ConfigError("exactly one of --fixture and --expr is required");
    }
    std::optional<CurveSource> curve;
    if (config.fixture) {
        curve = fixture_by_name(*config.fixture);
        if (config.domain) curve = curve->with_domain(*config.domain);
    } else {
        if (!config.domain) throw ConfigError("--expr requires --domain A:B");
        curve = expr::curve_from_expression_triple(*config.expr, *config.domain);
    }
    if (config.fd_step) {
        if (!(*config.fd_step > 0.0)) throw ConfigError("--fd-step must be positive");
        curve = curve->with_fd_step(*config.fd_step);
    }
    return *curve;
}

int run(const RunConfig& config, std::ostream& out) {
    const Format format = config.format.value_or(default_format(config.command));
    check_format(config.command, format);

    const int samples = config.samples > 0 ? config.samples
                                           : default_samples(config.command);
    if (samples < 2) throw ConfigError("--n must be at least 2");
    if (config.tol && !(*config.tol > 0.0)) {
        throw ConfigError("--tol must be positive");
    }
    if (config.command == Command::Generate && !config.kind) {
        throw ConfigError("generate requires --kind gt|td|gtd");
    }

    const CurveSource curve = resolve_curve(config);

    switch (config.command) {
        case Command::Frame:
            cmd_frame(config, curve, samples, format, out);
            return 0;
        case Command::Generate:
            cmd_generate(config, curve, samples, format, out);
            return 0;
        case Command::Verify:
            return cmd_verify(config, curve, samples, out);
        case Command::Plot:
            cmd_plot(config, curve, samples, out);
            return 0;
    }
    throw ConfigError("unknown command");
}

int run_to_configured_output(const RunConfig& config, std::ostream& err) {
    try {
        if (config.out_path) {
            std::ofstream file(*config.out_path, std::ios::binary);
            if (!file) {
                err << "error: cannot open output file '" << *config.out_path
                    << "'\n";
                return 2;
            }
            return run(config, file);
        }
        return run(config, std::cout);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    }
}

}  // namespace sabban::cli
