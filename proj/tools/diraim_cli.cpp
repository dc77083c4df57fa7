// diraim: bound-state energies and wave functions from the command line.
//
// Exit codes: 0 success, 1 parse or validation error, 2 solver failure.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "diraim/config.hpp"
#include "diraim/error.hpp"
#include "diraim/runner.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kSolver = 2;

// DIRAC_AIM_THREADS caps concurrency; unset means one worker.
int thread_cap()
{
    const char* env = std::getenv("DIRAC_AIM_THREADS");
    if (!env || !*env)
        return 1;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1 || v > 1024)
        throw diraim::ParseError(std::string("DIRAC_AIM_THREADS must be a positive integer, got '") + env + "'", 0);
    return static_cast<int>(v);
}

void emit(const std::string& text, const std::string& path)
{
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw diraim::ParseError("cannot write '" + path + "'", 0);
    out << text;
}

diraim::RunConfig load(const std::string& path, int cap)
{
    diraim::RunConfig cfg = diraim::load_config(path);
    cfg.solver.threads = cfg.solver.threads == 0 ? cap : std::min(cfg.solver.threads, cap);
    return cfg;
}

std::vector<double> parse_values(const std::vector<std::string>& raw)
{
    std::vector<double> out;
    for (const auto& item : raw) {
        std::stringstream ss(item);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            if (cell.empty())
                continue;
            try {
                std::size_t used = 0;
                out.push_back(std::stod(cell, &used));
                if (used != cell.size())
                    throw std::invalid_argument(cell);
            } catch (const std::exception&) {
                throw diraim::ParseError("bad sweep value '" + cell + "'", 0);
            }
        }
    }
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Dirac bound states with q-deformed Rosen-Morse and Scarf potentials (asymptotic iteration)"};
    app.require_subcommand(1);

    std::string config_path, output, grid_text, param, report_path, reading = "corrected";
    std::string data_dir = diraim::default_data_dir();
    int table_id = 0, axis = 1;
    bool reduced = false;
    std::vector<std::string> values;

    auto* solve = app.add_subcommand("solve", "bound states of a configuration");
    solve->add_option("config", config_path, "configuration file")->required();
    solve->add_option("-o,--output", output, "output CSV (default: stdout)");

    auto* table = app.add_subcommand("table", "reproduce a reference table as CSV");
    table->add_option("id", table_id, "table id: 1, 2, 3, 6, 7 or 8")->required();
    table->add_option("--reading", reading, "separation chain reading: corrected or literal");
    table->add_option("--data-dir", data_dir, "directory holding tableN.csv");
    table->add_option("--report", report_path, "also write the reproduction report (markdown) here");
    table->add_option("-o,--output", output, "output CSV (default: stdout)");

    auto* wave = app.add_subcommand("wavefunction", "radial wave function samples r,F");
    wave->add_option("config", config_path, "configuration file")->required();
    wave->add_option("--grid", grid_text, "r_min,r_max,count");
    wave->add_option("-o,--output", output, "output CSV (default: stdout)");

    auto* ang = app.add_subcommand("angular", "polar wave function samples theta,P for one axis");
    ang->add_option("config", config_path, "configuration file")->required();
    ang->add_option("--axis", axis, "axis index 1..D-1")->required();
    ang->add_option("--grid", grid_text, "theta_min,theta_max,count");
    ang->add_flag("--reduced", reduced, "emit the reduced form without the sin factor");
    ang->add_option("-o,--output", output, "output CSV (default: stdout)");

    auto* sweep = app.add_subcommand("sweep", "lowest admissible energy over a parameter scan");
    sweep->add_option("config", config_path, "configuration file")->required();
    sweep->add_option("--param", param, "q, r_e, alpha, V0, V1, M, C_s or n")->required();
    sweep->add_option("--values", values, "values, space or comma separated")->required();
    sweep->add_option("-o,--output", output, "output CSV (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInvalid;
    }

    try {
        const int cap = thread_cap();
        if (*solve) {
            const auto cfg = load(config_path, cap);
            emit(diraim::solve_csv(cfg), output.empty() ? cfg.output_path : output);
        } else if (*table) {
            diraim::TableRunOptions opts;
            opts.data_dir = data_dir;
            opts.solve.threads = cap;
            if (reading == "literal")
                opts.reading = diraim::ChainReading::literal;
            else if (reading != "corrected")
                throw diraim::ParseError("--reading must be corrected or literal", 0);
            emit(diraim::table_csv(table_id, diraim::run_table(table_id, opts), opts), output);
            if (!report_path.empty()) {
                const double tol = 1e-2;
                emit(diraim::reproduction_report(diraim::reproduce({table_id}, opts, tol), opts, tol), report_path);
            }
        } else if (*wave) {
            const auto cfg = load(config_path, cap);
            diraim::GridSpec grid{0.01, 10.0, 200};
            if (!grid_text.empty())
                grid = diraim::parse_grid(grid_text);
            else if (cfg.r_grid)
                grid = *cfg.r_grid;
            emit(diraim::wavefunction_csv(cfg, grid), output.empty() ? cfg.output_path : output);
        } else if (*ang) {
            const auto cfg = load(config_path, cap);
            diraim::GridSpec grid{0.01, 3.13, 157};
            if (!grid_text.empty())
                grid = diraim::parse_grid(grid_text);
            else if (cfg.theta_grid)
                grid = *cfg.theta_grid;
            emit(diraim::angular_csv(cfg, axis, grid, reduced), output.empty() ? cfg.output_path : output);
        } else if (*sweep) {
            const auto cfg = load(config_path, cap);
            emit(diraim::sweep_csv(cfg, param, parse_values(values)), output.empty() ? cfg.output_path : output);
        }
    } catch (const diraim::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const diraim::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const diraim::Error& e) {
        std::cerr << "solver failure: " << e.what() << "\n";
        return kSolver;
    }
    return kOk;
}
