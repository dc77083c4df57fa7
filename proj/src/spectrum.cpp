#include "diraim/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include "diraim/error.hpp"

namespace diraim {

void validate(const ProblemConfig& cfg)
{
    validate(cfg.radial);
    if (!(cfg.r_e > 0.0) || !std::isfinite(cfg.r_e))
        throw DomainError("r_e must be positive");
    if (cfg.radial.D != 3 && cfg.radial.D != 5)
        throw DomainError("D must be 3 or 5");
    if (const auto* spec = std::get_if<AngularSpec>(&cfg.angular)) {
        const auto axes = static_cast<std::size_t>(cfg.radial.D - 1);
        if (spec->params.size() != axes || spec->n.size() != axes)
            throw DomainError("angular section needs " + std::to_string(axes) + " axes for D = "
                              + std::to_string(cfg.radial.D));
        for (int ni : spec->n)
            if (ni < 0)
                throw DomainError("angular quantum numbers must be >= 0");
    } else if (!(std::get<EllOverride>(cfg.angular).ell >= 0.0)) {
        throw DomainError("ell must be >= 0");
    }
}

const char* to_string(PointStatus s) noexcept
{
    switch (s) {
    case PointStatus::ok: return "ok";
    case PointStatus::chain_inadmissible: return "chain inadmissible";
    case PointStatus::quantization_domain: return "quantization domain";
    case PointStatus::quantization_pole: return "quantization pole";
    }
    return "unknown";
}

namespace {

struct Evaluated {
    ResidualPoint point;
    std::optional<AngularChain> chain;
};

Evaluated evaluate(const ProblemConfig& cfg, const PekerisCoeffs& coeffs, double E)
{
    Evaluated out;
    const RadialConfig& rc = cfg.radial;
    if (const auto* spec = std::get_if<AngularSpec>(&cfg.angular)) {
        try {
            out.chain = solve_angular_chain(spec->params, spec->n, rc.q, rc.coupling(E), rc.D, spec->reading);
        } catch (const NotBoundError&) {
            out.point.status = PointStatus::chain_inadmissible;
            out.point.value = std::nan("");
            return out;
        }
        out.point.ell_prime = out.chain->ell_prime;
    } else {
        out.point.ell_prime = std::get<EllOverride>(cfg.angular).ell;
    }

    const double omega = centrifugal_omega(out.point.ell_prime, rc.D, cfg.r_e).omega;
    const RadialTerms t = substituted_terms(rc, E, omega, coeffs);
    if (!(t.eps_n + 0.25 >= 0.0)) {
        out.point.status = PointStatus::quantization_domain;
        out.point.value = std::nan("");
        return out;
    }
    if (quantized_sum(t.eps_n, rc.n) == 0.0) {
        out.point.status = PointStatus::quantization_pole;
        out.point.value = std::nan("");
        return out;
    }
    out.point.value = energy_residual(rc, E, omega, coeffs);
    return out;
}

int resolve_threads(int requested)
{
    if (requested > 0)
        return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

std::vector<ResidualPoint> scan_grid(const ProblemConfig& cfg, const PekerisCoeffs& coeffs,
                                     const std::vector<double>& grid, int threads)
{
    std::vector<ResidualPoint> out(grid.size());
    const auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i)
            out[i] = evaluate(cfg, coeffs, grid[i]).point;
    };
    const auto count = static_cast<std::size_t>(std::max(1, std::min<int>(threads, static_cast<int>(grid.size()))));
    if (count == 1) {
        work(0, grid.size());
        return out;
    }
    std::vector<std::thread> pool;
    const std::size_t chunk = (grid.size() + count - 1) / count;
    for (std::size_t c = 0; c < count; ++c) {
        const std::size_t begin = c * chunk;
        const std::size_t end = std::min(grid.size(), begin + chunk);
        if (begin < end)
            pool.emplace_back(work, begin, end);
    }
    for (auto& t : pool)
        t.join();
    return out;
}

// Bisection to the bracket tolerance, then on until the residual target is met or the bracket is
// two adjacent doubles. Returns nullopt if an interior point is not evaluable.
std::optional<double> bisect(const ProblemConfig& cfg, const PekerisCoeffs& coeffs, double lo, double flo, double hi,
                             const SolveOptions& opts, double target)
{
    for (int it = 0; it < 2000; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break;
        const ResidualPoint p = evaluate(cfg, coeffs, mid).point;
        if (!p.ok())
            return std::nullopt;
        if (p.value == 0.0)
            return mid;
        if ((p.value < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = p.value;
        } else {
            hi = mid;
        }
        if (hi - lo <= opts.tol_E && std::abs(p.value) <= target)
            break;
    }
    return 0.5 * (lo + hi);
}

BoundState make_state(const ProblemConfig& cfg, const PekerisCoeffs& coeffs, double E, double target)
{
    BoundState st;
    st.E = E;
    st.n = cfg.radial.n;
    if (const auto* spec = std::get_if<AngularSpec>(&cfg.angular))
        st.n_i = spec->n;

    const Evaluated ev = evaluate(cfg, coeffs, E);
    st.chain = ev.chain;
    st.ell_prime = ev.point.ell_prime;
    st.residual = ev.point.value;
    if (!ev.point.ok()) {
        st.reason = to_string(ev.point.status);
        return st;
    }

    const RadialConfig& rc = cfg.radial;
    const double omega = centrifugal_omega(st.ell_prime, rc.D, cfg.r_e).omega;
    const RadialTerms t = substituted_terms(rc, E, omega, coeffs);
    st.shape = {t.E_prime, t.rho, t.nu_nu1, 0.0, 0.0, t.eps_n};

    if (!(std::abs(st.residual) <= target)) {
        st.reason = "residual above target";
        return st;
    }
    if (!(rc.coupling(E) > 0.0)) {
        st.reason = "M + E - C_s <= 0";
        return st;
    }
    try {
        st.shape = substituted_params(rc, E, omega, coeffs);
    } catch (const NotBoundError&) {
        st.reason = "complex delta or gamma";
        return st;
    }
    if (!(st.shape.delta > 0.0) || !(st.shape.gamma > 0.0)) {
        st.reason = "delta or gamma not positive";
        return st;
    }
    const double s = quantized_sum(t.eps_n, rc.n);
    if (!(s > 0.0)) {
        st.reason = "negative quantized sum";
        return st;
    }
    if (std::abs(st.shape.delta + st.shape.gamma - s) > 1e-6 * (1.0 + s)) {
        st.reason = "spurious branch: delta + gamma differs from quantized sum";
        return st;
    }
    st.admissible = true;
    return st;
}

} // namespace

ResidualPoint residual_at(const ProblemConfig& cfg, double E)
{
    validate(cfg);
    const PekerisCoeffs coeffs = pekeris_coeffs(cfg.radial.q, cfg.radial.alpha, cfg.r_e);
    return evaluate(cfg, coeffs, E).point;
}

ScanSpec default_scan(const ProblemConfig& cfg)
{
    return {-cfg.radial.M + 1e-6, cfg.radial.M - 1e-6, 20000};
}

std::vector<BoundState> solve_bound_states(const ProblemConfig& cfg, const ScanSpec& scan, const SolveOptions& opts)
{
    validate(cfg);
    if (!(scan.E_min < scan.E_max))
        throw DomainError("scan: E_min must be below E_max");
    if (scan.steps < 2)
        throw DomainError("scan: at least 2 grid points required");

    const PekerisCoeffs coeffs = pekeris_coeffs(cfg.radial.q, cfg.radial.alpha, cfg.r_e);
    const double target = opts.residual_factor * cfg.radial.M * cfg.radial.M;

    std::vector<double> grid(static_cast<std::size_t>(scan.steps));
    const double h = (scan.E_max - scan.E_min) / (scan.steps - 1);
    for (std::size_t i = 0; i < grid.size(); ++i)
        grid[i] = scan.E_min + h * static_cast<double>(i);
    grid.back() = scan.E_max;

    const std::vector<ResidualPoint> pts = scan_grid(cfg, coeffs, grid, resolve_threads(opts.threads));

    std::vector<BoundState> states;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!pts[i].ok())
            continue;
        std::optional<double> root;
        if (pts[i].value == 0.0) {
            root = grid[i];
        } else if (i + 1 < grid.size() && pts[i + 1].ok() && pts[i + 1].value != 0.0
                   && (pts[i].value < 0.0) != (pts[i + 1].value < 0.0)) {
            root = bisect(cfg, coeffs, grid[i], pts[i].value, grid[i + 1], opts, target);
        }
        if (!root)
            continue;
        BoundState st = make_state(cfg, coeffs, *root, target);
        if (st.admissible || opts.keep_inadmissible)
            states.push_back(std::move(st));
    }
    std::sort(states.begin(), states.end(), [](const BoundState& a, const BoundState& b) { return a.E < b.E; });
    return states;
}

int kappa_of(int ell, int two_j)
{
    if (ell < 0 || two_j <= 0)
        throw DomainError("kappa_of: need l >= 0 and j > 0");
    if (two_j == 2 * ell + 1)
        return -ell - 1;
    if (two_j == 2 * ell - 1)
        return ell;
    throw DomainError("kappa_of: j must equal l +/- 1/2");
}

int orbital_of_kappa(int kappa)
{
    if (kappa == 0)
        throw DomainError("orbital_of_kappa: K must be non-zero");
    return kappa < 0 ? -kappa - 1 : kappa;
}

DoubletEnergies doublet_energies(int ell, int n, const ProblemConfig& base, const ScanSpec& scan,
                                 const SolveOptions& opts)
{
    if (!std::holds_alternative<EllOverride>(base.angular))
        throw DomainError("doublet_energies: non-central potentials must be off");
    DoubletEnergies out;
    out.K_aligned = kappa_of(ell, 2 * ell + 1);
    out.K_antialigned = ell > 0 ? kappa_of(ell, 2 * ell - 1) : 0;

    const auto lowest = [&](int kappa) -> std::optional<double> {
        ProblemConfig cfg = base;
        cfg.radial.n = n;
        cfg.angular = EllOverride{static_cast<double>(orbital_of_kappa(kappa))};
        const auto states = solve_bound_states(cfg, scan, opts);
        if (states.empty())
            return std::nullopt;
        return states.front().E;
    };
    out.E_aligned = lowest(out.K_aligned);
    if (ell > 0)
        out.E_antialigned = lowest(out.K_antialigned);
    return out;
}

} // namespace diraim
