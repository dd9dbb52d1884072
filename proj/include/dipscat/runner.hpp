#pragma once

// Command layer: parse run configurations, execute the table-producing
// commands and the verification suite, and hand back serializable results.
// Everything here is deterministic — fixed column orders, fixed grids for
// fixed configs — so emitted files are byte-identical across runs.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "checks.hpp"
#include "core.hpp"
#include "geometry.hpp"
#include "illumination.hpp"
#include "multipole.hpp"
#include "tables.hpp"
#include "transmittance.hpp"

namespace dipscat {

enum class Command { K0Curve, TMap, Spectrum, FocalProfile, ModeContent, Verify };
enum class OutputFormat { Csv, Json };

// A parameter that is either a single value or a uniform sweep; sweeps
// require at least two points.
struct Sweep {
    double start = 0.0;
    double stop = 0.0;
    int count = 1;

    [[nodiscard]] std::vector<double> values() const {
        std::vector<double> out;
        out.reserve(static_cast<std::size_t>(count));
        if (count == 1) {
            out.push_back(start);
            return out;
        }
        for (int i = 0; i < count; ++i) {
            out.push_back(start + (stop - start) * i / (count - 1));
        }
        return out;
    }
};

struct RunConfig {
    Command command = Command::Verify;
    Illumination mode = Illumination::PlaneWave;
    std::optional<Sweep> alpha;
    std::optional<Sweep> beta;
    std::optional<Sweep> detuning;
    std::optional<std::pair<int, int>> grid;
    double tolerance = 1e-10;
    OutputFormat format = OutputFormat::Csv;
    std::string output_path;  // empty = stdout
    bool with_oracle = false;
};

struct RunResult {
    bool has_table = false;
    Table table;
    std::string report;  // verify command: human-readable check report
    int exit_code = 0;
};

// --- config parsing ---------------------------------------------------------

inline double parse_angle(const std::string& text) {
    const std::string t = detail::trim(text);
    if (t.empty()) {
        throw std::invalid_argument("empty angle");
    }
    std::string head = t;
    double factor = 1.0;
    if (t.size() >= 2 && t.compare(t.size() - 2, 2, "pi") == 0) {
        factor = constants::pi;
        head = detail::trim(t.substr(0, t.size() - 2));
        if (head.empty()) {
            return constants::pi;
        }
    }
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(head, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad angle '" + text + "'");
    }
    if (used != head.size()) {
        throw std::invalid_argument("bad angle '" + text + "'");
    }
    return v * factor;
}

// "sweep(start, stop, n)" with angle-style endpoints, or a single value.
inline Sweep parse_sweep(const std::string& text) {
    const std::string t = detail::trim(text);
    if (t.rfind("sweep(", 0) != 0) {
        const double v = parse_angle(t);
        return {v, v, 1};
    }
    if (t.back() != ')') {
        throw std::invalid_argument("bad sweep '" + text + "'");
    }
    const std::vector<std::string> parts =
        detail::split(t.substr(6, t.size() - 7), ',');
    if (parts.size() != 3) {
        throw std::invalid_argument("sweep needs (start, stop, count): '" + text + "'");
    }
    Sweep s;
    s.start = parse_angle(parts[0]);
    s.stop = parse_angle(parts[1]);
    std::size_t used = 0;
    try {
        s.count = std::stoi(parts[2], &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad sweep count '" + parts[2] + "'");
    }
    if (used != parts[2].size() || s.count < 2) {
        throw std::invalid_argument("sweep count must be an integer >= 2");
    }
    return s;
}

inline Command parse_command(const std::string& name) {
    if (name == "k0-curve") return Command::K0Curve;
    if (name == "t-map") return Command::TMap;
    if (name == "spectrum") return Command::Spectrum;
    if (name == "focal-profile") return Command::FocalProfile;
    if (name == "mode-content") return Command::ModeContent;
    if (name == "verify") return Command::Verify;
    throw std::invalid_argument("unknown command '" + name + "'");
}

inline Illumination parse_mode(const std::string& name) {
    if (name == "pw" || name == "plane-wave") return Illumination::PlaneWave;
    if (name == "pm" || name == "p+m" || name == "dipole+magnetic")
        return Illumination::DipolePlusMagnetic;
    if (name == "px" || name == "dipole-x") return Illumination::DipoleX;
    if (name == "pz" || name == "dipole-z") return Illumination::DipoleZ;
    throw std::invalid_argument("unknown mode '" + name + "' (pw, pm, px, pz)");
}

inline const char* mode_name(Illumination kind) {
    switch (kind) {
        case Illumination::PlaneWave: return "pw";
        case Illumination::DipolePlusMagnetic: return "pm";
        case Illumination::DipoleX: return "px";
        case Illumination::DipoleZ: return "pz";
    }
    return "?";
}

inline OutputFormat parse_format(const std::string& name) {
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    throw std::invalid_argument("unknown format '" + name + "' (csv, json)");
}

// "NxM" for map grids, plain "N" for one-dimensional point counts.
inline std::pair<int, int> parse_grid(const std::string& text) {
    const std::string t = detail::trim(text);
    const std::size_t x = t.find('x');
    auto to_count = [&](const std::string& s) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad grid '" + text + "'");
        }
        if (used != s.size() || v < 1) {
            throw std::invalid_argument("bad grid '" + text + "'");
        }
        return v;
    };
    if (x == std::string::npos) {
        const int n = to_count(t);
        return {n, n};
    }
    return {to_count(t.substr(0, x)), to_count(t.substr(x + 1))};
}

inline void validate_config(const RunConfig& cfg) {
    if (!(cfg.tolerance >= 1e-14 && cfg.tolerance <= 1e-4)) {
        throw std::invalid_argument("tolerance must lie in [1e-14, 1e-4]");
    }
    for (const auto& sweep : {cfg.alpha, cfg.beta}) {
        if (!sweep) continue;
        for (double a : {sweep->start, sweep->stop}) {
            if (!(a >= min_half_angle && a <= 0.5 * constants::pi)) {
                throw std::invalid_argument("angles must lie in [1e-3, pi/2] radians");
            }
        }
    }
    if (cfg.detuning) {
        if (!std::isfinite(cfg.detuning->start) || !std::isfinite(cfg.detuning->stop)) {
            throw std::invalid_argument("detuning must be finite");
        }
    }
}

// --- execution ---------------------------------------------------------------

namespace detail {

inline std::string sweep_repr(const Sweep& s) {
    if (s.count == 1) {
        return format_number(s.start);
    }
    return "sweep(" + format_number(s.start) + ", " + format_number(s.stop) + ", " +
           std::to_string(s.count) + ")";
}

inline void record_config(Table& table, const RunConfig& cfg, const char* command_name,
                          const Sweep* alpha, const Sweep* beta, const Sweep* detuning) {
    table.config.emplace_back("command", command_name);
    if (alpha) table.config.emplace_back("alpha", sweep_repr(*alpha));
    if (beta) table.config.emplace_back("beta", sweep_repr(*beta));
    if (detuning) table.config.emplace_back("detuning", sweep_repr(*detuning));
    table.config.emplace_back("tolerance", format_number(cfg.tolerance));
}

// Ordered illumination set used by the multi-mode tables.
inline const std::vector<IlluminationMode>& table_modes() {
    static const std::vector<IlluminationMode> modes = {
        {Illumination::PlaneWave}, {Illumination::DipolePlusMagnetic},
        {Illumination::DipoleX},   {Illumination::DipoleZ}};
    return modes;
}

// Bisection for the aperture where the (monotone) scattering ratio crosses 1.
inline std::optional<double> k0_unity_crossing(Illumination kind, double lo, double hi) {
    double flo = k0_closed_form_value(kind, lo) - 1.0;
    const double fhi = k0_closed_form_value(kind, hi) - 1.0;
    if (flo > 0.0 || fhi < 0.0) {
        return std::nullopt;
    }
    for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = k0_closed_form_value(kind, mid) - 1.0;
        if (fmid <= 0.0) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace detail

inline Table run_k0_curve(const RunConfig& cfg) {
    const Sweep alpha = cfg.alpha.value_or(Sweep{0.01, 0.5 * constants::pi, 90});
    std::vector<double> alphas = alpha.values();

    Table table;
    detail::record_config(table, cfg, "k0-curve", &alpha, nullptr, nullptr);
    table.columns = {"alpha", "K0_pw", "K0_pm", "K0_px", "K0_pz",
                     "K0_oracle_pw", "K0_oracle_pm", "K0_oracle_px", "K0_oracle_pz"};

    // marker rows at the K0 = 1 crossings, plus footer entries
    const double a_lo = *std::min_element(alphas.begin(), alphas.end());
    const double a_hi = *std::max_element(alphas.begin(), alphas.end());
    for (const auto& mode : detail::table_modes()) {
        const auto crossing = detail::k0_unity_crossing(mode.kind, a_lo, a_hi);
        const std::string key = std::string("k0_crossing_") + mode_name(mode.kind);
        if (crossing) {
            alphas.push_back(*crossing);
            table.footer.emplace_back(key, detail::format_number(*crossing));
        } else {
            table.footer.emplace_back(key, "none");
        }
    }
    std::sort(alphas.begin(), alphas.end());

    for (double a : alphas) {
        std::vector<double> row = {a};
        for (const auto& mode : detail::table_modes()) {
            row.push_back(k0_closed_form(mode, a).K0);
        }
        const GeometryConfig geom(a);
        for (const auto& mode : detail::table_modes()) {
            row.push_back(k0_oracle(mode, geom).K0);
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

inline Table run_t_map(const RunConfig& cfg) {
    const auto grid = cfg.grid.value_or(std::pair<int, int>{50, 50});
    Sweep alpha = cfg.alpha.value_or(Sweep{0.02, 0.5 * constants::pi, grid.first});
    Sweep beta = cfg.beta.value_or(Sweep{0.02, 0.5 * constants::pi, grid.second});
    if (alpha.count < 2 || beta.count < 2) {
        throw std::invalid_argument("t-map needs at least a 2x2 grid");
    }
    const Sweep detuning = cfg.detuning.value_or(Sweep{0.0, 0.0, 1});
    if (detuning.count != 1) {
        throw std::invalid_argument("t-map takes a single detuning, not a sweep");
    }

    Table table;
    detail::record_config(table, cfg, "t-map", &alpha, &beta, &detuning);
    table.columns = {"alpha", "beta", "T"};
    for (double a : alpha.values()) {
        for (double b : beta.values()) {
            table.rows.push_back({a, b, transmittance_closed_form(a, b, detuning.start).T});
        }
    }
    const ShadowBoundaryMinimum m = shadow_boundary_minimum(1e-6, detuning.start);
    table.footer.emplace_back("t_min_shadow_boundary", detail::format_number(m.T));
    table.footer.emplace_back("alpha_at_min", detail::format_number(m.alpha));
    table.footer.emplace_back("alpha_at_min_over_pi",
                              detail::format_number(m.alpha / constants::pi));
    return table;
}

inline Table run_spectrum(const RunConfig& cfg) {
    Sweep detuning = cfg.detuning.value_or(Sweep{-5.0, 5.0, 201});
    if (cfg.grid) {
        detuning.count = std::max(2, cfg.grid->first);
    }
    if (detuning.count < 2) {
        throw std::invalid_argument("spectrum needs a detuning sweep of at least 2 points");
    }
    // plane-wave column defaults to the pi/3 collection geometry of the
    // reference curve; the dipole-wave column to the full aperture
    const Sweep a_pw = cfg.alpha.value_or(Sweep{constants::pi / 3.0, 0.0, 1});
    const Sweep b_pw = cfg.beta.value_or(Sweep{constants::pi / 3.0, 0.0, 1});
    const Sweep a_px = cfg.alpha.value_or(Sweep{0.5 * constants::pi, 0.0, 1});
    const Sweep b_px = cfg.beta.value_or(Sweep{0.5 * constants::pi, 0.0, 1});
    if (a_pw.count != 1 || b_pw.count != 1) {
        throw std::invalid_argument("spectrum takes single alpha/beta values, not sweeps");
    }
    const bool px_closed = a_px.start == 0.5 * constants::pi && b_px.start == 0.5 * constants::pi;

    Table table;
    detail::record_config(table, cfg, "spectrum", &a_pw, &b_pw, &detuning);
    table.columns = {"detuning_over_gamma", "T_pw", "T_px"};
    if (cfg.with_oracle) {
        table.columns.push_back("T_pw_oracle");
    }
    const GeometryConfig geom_pw(a_pw.start, b_pw.start);
    const GeometryConfig geom_px(a_px.start, b_px.start);
    const IlluminationMode px_mode(Illumination::DipoleX);
    for (double d : detuning.values()) {
        std::vector<double> row = {d, transmittance_closed_form(a_pw.start, b_pw.start, d).T};
        row.push_back(px_closed ? dipole_wave_transmittance(d)
                                : transmittance_oracle(px_mode, geom_px, {1.0, d}).T);
        if (cfg.with_oracle) {
            row.push_back(transmittance_oracle({}, geom_pw, {1.0, d}).T);
        }
        table.rows.push_back(std::move(row));
    }
    table.footer.emplace_back(
        "t_pw_at_resonance",
        detail::format_number(transmittance_closed_form(a_pw.start, b_pw.start, 0.0).T));
    table.footer.emplace_back(
        "t_px_at_resonance",
        detail::format_number(px_closed ? 0.0
                                        : transmittance_oracle(px_mode, geom_px, {1.0, 0.0}).T));
    return table;
}

inline Table run_focal_profile(const RunConfig& cfg) {
    const Sweep alpha = cfg.alpha.value_or(Sweep{0.5 * constants::pi, 0.0, 1});
    if (alpha.count != 1) {
        throw std::invalid_argument("focal-profile takes a single alpha, not a sweep");
    }
    const int points = cfg.grid ? std::max(2, cfg.grid->first) : 201;
    const Sweep xs{0.0, 2.0, points};

    Table table;
    detail::record_config(table, cfg, "focal-profile", &alpha, nullptr, nullptr);
    table.config.emplace_back("x_over_lambda", detail::sweep_repr(xs));
    table.columns = {"x_over_lambda", "I0", "I1", "I2", "S_z", "W_el"};
    const GeometryConfig geom(alpha.start);
    double s_min = 1.0;
    double s_min_x = 0.0;
    for (double x : xs.values()) {
        const DiffractionIntegrals d = diffraction_integrals(geom, x);
        const FocalFieldSample s = focal_plane_profile(geom, x);
        if (s.S_z < s_min) {
            s_min = s.S_z;
            s_min_x = x;
        }
        table.rows.push_back(
            {x, std::real(d.I0), std::real(d.I1), std::real(d.I2), s.S_z, s.W_el});
    }
    table.footer.emplace_back("s_z_min", detail::format_number(s_min));
    table.footer.emplace_back("s_z_min_x", detail::format_number(s_min_x));
    return table;
}

inline Table run_mode_content(const RunConfig& cfg) {
    const Sweep alpha = cfg.alpha.value_or(Sweep{0.05, 0.5 * constants::pi, 30});

    Table table;
    detail::record_config(table, cfg, "mode-content", &alpha, nullptr, nullptr);
    table.columns = {"alpha", "content_pw", "content_pm", "content_px", "content_pz",
                     "coeff_abs_pw", "coeff_abs_pm", "coeff_abs_px", "coeff_abs_pz"};
    double pure_error = 0.0;
    for (double a : alpha.values()) {
        const GeometryConfig geom(a);
        std::vector<double> row = {a};
        std::vector<double> coeffs;
        for (const auto& mode : detail::table_modes()) {
            const DipoleModeAmplitude amp = dipole_wave_component(mode, geom);
            row.push_back(amp.content_fraction);
            coeffs.push_back(std::abs(amp.coefficient));
            if (mode.kind == Illumination::DipoleX) {
                pure_error = std::max(pure_error, std::abs(amp.content_fraction - 1.0));
            }
        }
        row.insert(row.end(), coeffs.begin(), coeffs.end());
        table.rows.push_back(std::move(row));
    }
    table.footer.emplace_back("pure_mode_content_error", detail::format_number(pure_error));
    return table;
}

inline RunResult run_verify(const RunConfig& cfg) {
    const double tol_scale = cfg.tolerance / 1e-10;
    const std::vector<CheckResult> checks = run_all_checks(tol_scale);

    RunResult result;
    int failed = 0;
    std::string& report = result.report;
    char line[256];
    for (const auto& c : checks) {
        std::snprintf(line, sizeof(line), "%-38s %11.3e %11.3e  %s\n", c.name.c_str(),
                      c.residual, c.tolerance, c.pass ? "ok" : "FAIL");
        report += line;
        if (!c.pass) {
            ++failed;
            report += "    " + c.detail + "\n";
        }
    }
    std::snprintf(line, sizeof(line), "%d of %zu checks failed (tolerance scale %.3g)\n", failed,
                  checks.size(), tol_scale);
    report += line;
    result.exit_code = failed == 0 ? 0 : 1;
    return result;
}

inline RunResult run(const RunConfig& cfg) {
    validate_config(cfg);
    if (cfg.command == Command::Verify) {
        return run_verify(cfg);
    }
    RunResult result;
    result.has_table = true;
    switch (cfg.command) {
        case Command::K0Curve: result.table = run_k0_curve(cfg); break;
        case Command::TMap: result.table = run_t_map(cfg); break;
        case Command::Spectrum: result.table = run_spectrum(cfg); break;
        case Command::FocalProfile: result.table = run_focal_profile(cfg); break;
        case Command::ModeContent: result.table = run_mode_content(cfg); break;
        case Command::Verify: break;
    }
    return result;
}

}  // namespace dipscat
