#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "diraim/spectrum.hpp"

namespace diraim {

struct GridSpec {
    double min = 0.0;
    double max = 0.0;
    int count = 0;
};

/// "a,b,count"; throws ParseError("empty grid") for count == 0.
[[nodiscard]] GridSpec parse_grid(std::string_view text);

struct SolverSettings {
    std::optional<double> E_min; // defaults to -M + 1e-6
    std::optional<double> E_max; // defaults to  M - 1e-6
    int steps = 20000;
    double z0 = 0.5;
    double tol_E = 1e-10;
    double residual_factor = 1e-9;
    int threads = 1;
    bool diagnostics = false;       // keep inadmissible roots in the output
    std::optional<double> E_target; // root selection: closest to this energy
};

struct RunConfig {
    ProblemConfig problem;
    SolverSettings solver;
    std::string output_path; // empty: stdout
    std::optional<int> table_id;
    std::optional<GridSpec> r_grid;
    std::optional<GridSpec> theta_grid;

    [[nodiscard]] ScanSpec scan() const;
    [[nodiscard]] SolveOptions solve_options() const;
    /// Stable text form of every field; hashing it identifies the run.
    [[nodiscard]] std::string canonical() const;
};

/// Parse the "[section]" / "key = value" / "# comment" format.
/// Sections: physics (D, M, V0, V1, alpha, q, r_e, n mandatory; C_s), angular (a, b, n_l or ell; reading),
/// solver, output. Throws ParseError carrying the line number, or naming the missing key.
[[nodiscard]] RunConfig parse_config(std::string_view text);

[[nodiscard]] RunConfig load_config(const std::string& path);

/// 64-bit FNV-1a.
[[nodiscard]] std::uint64_t fnv1a64(std::string_view text) noexcept;

} // namespace diraim
