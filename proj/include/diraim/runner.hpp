#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diraim/config.hpp"
#include "diraim/spectrum.hpp"

namespace diraim {

/// One row of a shipped reference table.
struct TableRow {
    int table = 0;
    int row = 0;
    int D = 5;
    double q = 1.0;
    double r_e = 0.0;
    double alpha = 0.0;
    double M = 0.0;
    double V0 = 0.0;
    double V1 = 0.0;
    int n = 0;
    std::optional<int> n_l; // common value of every n_li
    std::array<ScarfParams, 4> ab{};
    std::optional<int> ell;
    std::optional<int> K;
    double E_paper = 0.0;
};

[[nodiscard]] const std::vector<int>& supported_tables();

/// Compiled-in location of the reference tables.
[[nodiscard]] std::string default_data_dir();

[[nodiscard]] std::vector<TableRow> parse_table_csv(const std::string& text, int table);
/// Rows of tableN.csv; table 8 keeps every q column.
[[nodiscard]] std::vector<TableRow> load_table(int id, const std::string& data_dir);

[[nodiscard]] ProblemConfig row_problem(const TableRow& row, ChainReading reading);

struct TableRunOptions {
    std::string data_dir = default_data_dir();
    ChainReading reading = ChainReading::corrected;
    SolveOptions solve;
    int steps = 20000;
    double z0 = 0.5;
};

struct RowResult {
    TableRow row;
    std::optional<BoundState> state; ///< the admissible root closest to the reference energy
    int roots = 0;                   ///< admissible roots found in (-M, M)
    std::string note;
};

[[nodiscard]] RowResult solve_row(const TableRow& row, const TableRunOptions& opts);

/// Rows emitted by `table <id>`: every row, except table 8 which is limited to its q = 1 column.
[[nodiscard]] std::vector<RowResult> run_table(int id, const TableRunOptions& opts);

struct Provenance {
    std::uint64_t config_hash = 0;
    std::string reading = "corrected";
    double tol_E = 1e-10;
    double residual_factor = 1e-9;
    int steps = 20000;
    double z0 = 0.5;
    std::vector<std::string> notes;
};

[[nodiscard]] std::string provenance_footer(const Provenance& p);
[[nodiscard]] Provenance provenance_of(const RunConfig& cfg);

/// 6 significant digits; "nan" when absent.
[[nodiscard]] std::string format_energy(std::optional<double> E);
/// Scientific notation with 3 decimals; "nan" when absent.
[[nodiscard]] std::string format_residual(std::optional<double> r);

/// "row,q,r_e,n,n_l,E_computed,E_paper,residual,admissible" followed by one line per row and the footer.
[[nodiscard]] std::string table_csv(int id, const std::vector<RowResult>& rows, const TableRunOptions& opts);

/// The admissible state closest to `target`, or the lowest admissible state.
[[nodiscard]] std::optional<BoundState> select_state(const std::vector<BoundState>& states,
                                                     std::optional<double> target);

[[nodiscard]] std::string solve_csv(const RunConfig& cfg);
/// Samples of F_n(r); throws SolverError when no bound state exists.
[[nodiscard]] std::string wavefunction_csv(const RunConfig& cfg, const GridSpec& grid);
/// Samples of the polar factor of one axis (or the reduced form); throws SolverError when no bound state exists.
[[nodiscard]] std::string angular_csv(const RunConfig& cfg, int axis, const GridSpec& grid, bool reduced);
/// One line per value of the swept parameter (q, r_e, alpha, V0, V1, M, C_s, n).
[[nodiscard]] std::string sweep_csv(const RunConfig& cfg, const std::string& param, const std::vector<double>& values);

/// Markdown comparison of the computed energies against the reference tables under both chain readings,
/// with the per-row exclusion decision at tolerance `tol`.
struct ReproductionRow {
    int table = 0;
    int row = 0;
    double E_paper = 0.0;
    std::optional<double> E_corrected;
    std::optional<double> E_literal;
    bool matched = false;
    std::string diagnosis;
};

[[nodiscard]] std::vector<ReproductionRow> reproduce(const std::vector<int>& ids, const TableRunOptions& opts,
                                                     double tol);
[[nodiscard]] std::string reproduction_report(const std::vector<ReproductionRow>& rows,
                                              const TableRunOptions& opts, double tol);

} // namespace diraim
