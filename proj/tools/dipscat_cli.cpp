// Command-line front end: reproduce the library's headline curves and maps
// as CSV/JSON tables, or run the self-verification suite.
//
// Exit codes: 0 success, 1 invariant/verification failure, 2 configuration
// error, 3 numerical-accuracy failure.

#include <cstdio>
#include <exception>
#include <string>

#include "CLI11.hpp"
#include "dipscat/dipscat.hpp"

namespace {

void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::fputs(text.c_str(), stdout);
        return;
    }
    std::FILE* f = std::fopen(path.c_str(), "wb");
    if (!f) {
        throw std::invalid_argument("cannot open output file '" + path + "'");
    }
    const std::size_t n = std::fwrite(text.data(), 1, text.size(), f);
    const bool bad = n != text.size() || std::fclose(f) != 0;
    if (bad) {
        throw std::invalid_argument("cannot write output file '" + path + "'");
    }
}

int run_cli(int argc, char** argv) {
    CLI::App app{"Focused-light scattering tables: transmission, reflection and "
                 "focal-field observables of a point dipole in a focused beam"};
    app.set_config("--config", "", "plain key=value config file; flags take precedence");
    app.set_version_flag("--version", "dipscat 1.0.0");

    std::string command;
    std::string mode = "pw";
    std::string alpha;
    std::string beta;
    std::string detuning;
    std::string grid;
    std::string format = "csv";
    dipscat::RunConfig cfg;

    app.add_option("--command", command,
                   "k0-curve | t-map | spectrum | focal-profile | mode-content | verify")
        ->required();
    app.add_option("--mode", mode, "illumination: pw, pm, px, pz (default pw)");
    app.add_option("--alpha", alpha,
                   "focusing half-angle, radians or 'pi' multiples (e.g. 0.43pi), or "
                   "sweep(start, stop, n)");
    app.add_option("--beta", beta, "collection half-angle, same syntax as --alpha");
    app.add_option("--detuning", detuning, "detuning in linewidth units, value or sweep");
    app.add_option("--grid", grid, "grid size NxM (t-map) or point count N (1-d tables)");
    app.add_option("--tol", cfg.tolerance,
                   "quadrature/check tolerance in [1e-14, 1e-4] (default 1e-10)");
    app.add_option("--format", format, "output format: csv (default) or json");
    app.add_option("--out", cfg.output_path, "output path (default stdout)");
    app.add_flag("--with-oracle", cfg.with_oracle,
                 "add quadrature-oracle columns where available");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    cfg.command = dipscat::parse_command(command);
    cfg.mode = dipscat::parse_mode(mode);
    cfg.format = dipscat::parse_format(format);
    if (!alpha.empty()) cfg.alpha = dipscat::parse_sweep(alpha);
    if (!beta.empty()) cfg.beta = dipscat::parse_sweep(beta);
    if (!detuning.empty()) cfg.detuning = dipscat::parse_sweep(detuning);
    if (!grid.empty()) cfg.grid = dipscat::parse_grid(grid);

    const dipscat::RunResult result = dipscat::run(cfg);
    if (result.has_table) {
        write_text(cfg.output_path, cfg.format == dipscat::OutputFormat::Json
                                        ? dipscat::emit_json(result.table)
                                        : dipscat::emit_csv(result.table));
    } else {
        std::fputs(result.report.c_str(), stdout);
        if (!cfg.output_path.empty()) {
            write_text(cfg.output_path, result.report);
        }
    }
    return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const dipscat::accuracy_error& e) {
        std::fprintf(stderr, "accuracy error: %s\n", e.what());
        return 3;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
