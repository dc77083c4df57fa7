#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "diraim/angular.hpp"
#include "diraim/pekeris.hpp"
#include "diraim/radial.hpp"

namespace diraim {

/// Non-central potentials with their quantum numbers n_1 .. n_{D-1}.
struct AngularSpec {
    std::vector<ScarfParams> params;
    std::vector<int> n;
    ChainReading reading = ChainReading::corrected;
};

/// Orbital number given directly, bypassing the angular chain.
struct EllOverride {
    double ell = 0.0;
};

struct ProblemConfig {
    RadialConfig radial;
    double r_e = 1.0; // fm
    std::variant<AngularSpec, EllOverride> angular = EllOverride{};
};

/// Throws DomainError on an inconsistent configuration.
void validate(const ProblemConfig& cfg);

enum class PointStatus { ok, chain_inadmissible, quantization_domain, quantization_pole };

[[nodiscard]] const char* to_string(PointStatus s) noexcept;

struct ResidualPoint {
    double value = 0.0;
    PointStatus status = PointStatus::ok;
    double ell_prime = 0.0;
    [[nodiscard]] bool ok() const noexcept { return status == PointStatus::ok; }
};

/// Chain at M+E-C_s -> l' -> omega -> Pekeris -> energy residual, as a single function of E.
[[nodiscard]] ResidualPoint residual_at(const ProblemConfig& cfg, double E);

struct ScanSpec {
    double E_min = 0.0;
    double E_max = 0.0;
    int steps = 20000;
};

/// (-M + 1e-6, M - 1e-6) with 20000 points.
[[nodiscard]] ScanSpec default_scan(const ProblemConfig& cfg);

struct SolveOptions {
    double tol_E = 1e-10;          // fm^-1, bracket width
    double residual_factor = 1e-9; // accept |residual| <= factor * M^2
    int threads = 1;               // 0: hardware concurrency
    bool keep_inadmissible = false;
};

struct BoundState {
    double E = 0.0;
    int n = 0;
    std::vector<int> n_i;
    double ell_prime = 0.0;
    double residual = 0.0;
    RadialShape shape;
    std::optional<AngularChain> chain;
    bool admissible = false;
    std::string reason; ///< why the state is not admissible; empty otherwise
};

/// Scan residual_at on a uniform grid, bisect every sign change between evaluable neighbours,
/// and keep states passing the bound-state checks. An empty result is not an error.
[[nodiscard]] std::vector<BoundState> solve_bound_states(const ProblemConfig& cfg, const ScanSpec& scan,
                                                         const SolveOptions& opts = {});

/// K = -l-1 for j = l + 1/2 and K = l for j = l - 1/2; `two_j` is 2j.
[[nodiscard]] int kappa_of(int ell, int two_j);

/// Orbital number entering the centrifugal term for a given K: K(K+1) = l(l+1).
[[nodiscard]] int orbital_of_kappa(int kappa);

struct DoubletEnergies {
    int K_aligned = 0;     // j = l + 1/2
    int K_antialigned = 0; // j = l - 1/2
    std::optional<double> E_aligned;
    std::optional<double> E_antialigned;
};

/// Lowest admissible energies of the spin doublet (n, l, j = l -/+ 1/2).
/// `base` must use EllOverride (non-central potentials off); its ell is replaced.
[[nodiscard]] DoubletEnergies doublet_energies(int ell, int n, const ProblemConfig& base, const ScanSpec& scan,
                                               const SolveOptions& opts = {});

} // namespace diraim
