#include "diraim/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "diraim/error.hpp"

#ifndef DIRAIM_DATA_DIR
#define DIRAIM_DATA_DIR "data/tables"
#endif

namespace diraim {

namespace {

std::string fmt(const char* spec, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

std::string hex64(std::uint64_t v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

std::vector<std::string> split_csv(const std::string& line)
{
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ','))
        out.push_back(cell);
    if (!line.empty() && line.back() == ',')
        out.emplace_back();
    return out;
}

double cell_double(const std::string& s, int table, int line)
{
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size())
            throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError("table " + std::to_string(table) + ": bad number '" + s + "'", line);
    }
}

std::optional<int> cell_int(const std::string& s, int table, int line)
{
    if (s.empty())
        return std::nullopt;
    const double v = cell_double(s, table, line);
    if (v != std::floor(v))
        throw ParseError("table " + std::to_string(table) + ": expected integer, got '" + s + "'", line);
    return static_cast<int>(v);
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open '" + path + "'", 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<double> grid_points(const GridSpec& g)
{
    if (g.count <= 0)
        throw ParseError("empty grid", 0);
    std::vector<double> out(static_cast<std::size_t>(g.count));
    for (int k = 0; k < g.count; ++k)
        out[static_cast<std::size_t>(k)] = g.count == 1 ? g.min : g.min + (g.max - g.min) * k / (g.count - 1);
    return out;
}

const char* reading_name(ChainReading r) { return r == ChainReading::literal ? "literal" : "corrected"; }

ChainReading reading_of(const ProblemConfig& p)
{
    if (const auto* spec = std::get_if<AngularSpec>(&p.angular))
        return spec->reading;
    return ChainReading::corrected;
}

BoundState solved_state(const RunConfig& cfg)
{
    const auto states = solve_bound_states(cfg.problem, cfg.scan(), cfg.solve_options());
    auto st = select_state(states, cfg.solver.E_target);
    if (!st)
        throw SolverError("no bound state found");
    return *st;
}

} // namespace

const std::vector<int>& supported_tables()
{
    static const std::vector<int> ids{1, 2, 3, 6, 7, 8};
    return ids;
}

std::string default_data_dir() { return DIRAIM_DATA_DIR; }

std::vector<TableRow> parse_table_csv(const std::string& text, int table)
{
    std::vector<TableRow> rows;
    std::stringstream ss(text);
    std::string line;
    int line_no = 0;
    std::map<std::string, std::size_t> col;
    while (std::getline(ss, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line.front() == '#')
            continue;
        const auto cells = split_csv(line);
        if (col.empty()) {
            for (std::size_t i = 0; i < cells.size(); ++i)
                col[cells[i]] = i;
            for (const char* need : {"row", "D", "q", "r_e", "alpha", "M", "V0", "V1", "n", "n_l", "a1", "b1", "a2",
                                     "b2", "a3", "b3", "a4", "b4", "ell", "K", "E_paper"})
                if (!col.count(need))
                    throw ParseError("table " + std::to_string(table) + ": missing column '" + need + "'", line_no);
            continue;
        }
        if (cells.size() != col.size())
            throw ParseError("table " + std::to_string(table) + ": wrong number of cells", line_no);
        const auto at = [&](const char* name) -> const std::string& { return cells[col.at(name)]; };
        const auto num = [&](const char* name) { return cell_double(at(name), table, line_no); };
        TableRow r;
        r.table = table;
        r.row = cell_int(at("row"), table, line_no).value_or(0);
        r.D = cell_int(at("D"), table, line_no).value_or(5);
        r.q = num("q");
        r.r_e = num("r_e");
        r.alpha = num("alpha");
        r.M = num("M");
        r.V0 = num("V0");
        r.V1 = num("V1");
        r.n = cell_int(at("n"), table, line_no).value_or(0);
        r.n_l = cell_int(at("n_l"), table, line_no);
        const char* names[4][2] = {{"a1", "b1"}, {"a2", "b2"}, {"a3", "b3"}, {"a4", "b4"}};
        for (int i = 0; i < 4; ++i)
            r.ab[static_cast<std::size_t>(i)] = {num(names[i][0]), num(names[i][1])};
        r.ell = cell_int(at("ell"), table, line_no);
        r.K = cell_int(at("K"), table, line_no);
        r.E_paper = num("E_paper");
        if (!r.n_l && !r.ell)
            throw ParseError("table " + std::to_string(table) + ": row needs n_l or ell", line_no);
        rows.push_back(r);
    }
    return rows;
}

std::vector<TableRow> load_table(int id, const std::string& data_dir)
{
    const auto& ids = supported_tables();
    if (std::find(ids.begin(), ids.end(), id) == ids.end())
        throw ParseError("unsupported table id " + std::to_string(id) + " (expected 1, 2, 3, 6, 7 or 8)", 0);
    return parse_table_csv(read_file(data_dir + "/table" + std::to_string(id) + ".csv"), id);
}

ProblemConfig row_problem(const TableRow& row, ChainReading reading)
{
    ProblemConfig p;
    RadialConfig& rc = p.radial;
    rc.V0 = row.V0;
    rc.V1 = row.V1;
    rc.alpha = row.alpha;
    rc.q = Deformation(row.q);
    rc.M = row.M;
    rc.D = row.D;
    rc.n = row.n;
    p.r_e = row.r_e;
    if (row.ell) {
        const int ell = row.K ? orbital_of_kappa(*row.K) : *row.ell;
        p.angular = EllOverride{static_cast<double>(ell)};
    } else {
        AngularSpec spec;
        for (int i = 0; i < row.D - 1; ++i) {
            spec.params.push_back(row.ab[static_cast<std::size_t>(i)]);
            spec.n.push_back(*row.n_l);
        }
        spec.reading = reading;
        p.angular = std::move(spec);
    }
    return p;
}

RowResult solve_row(const TableRow& row, const TableRunOptions& opts)
{
    RowResult out;
    out.row = row;
    const ProblemConfig p = row_problem(row, opts.reading);
    ScanSpec scan = default_scan(p);
    scan.steps = opts.steps;
    SolveOptions so = opts.solve;
    so.keep_inadmissible = false;
    const auto states = solve_bound_states(p, scan, so);
    out.roots = static_cast<int>(states.size());
    out.state = select_state(states, row.E_paper);
    if (!out.state)
        out.note = "no admissible root in (-M, M)";
    return out;
}

std::vector<RowResult> run_table(int id, const TableRunOptions& opts)
{
    std::vector<RowResult> out;
    for (const TableRow& row : load_table(id, opts.data_dir)) {
        if (id == 8 && row.q != 1.0)
            continue;
        out.push_back(solve_row(row, opts));
    }
    return out;
}

std::string provenance_footer(const Provenance& p)
{
    std::string s;
    s += "# config_hash=fnv1a64:" + hex64(p.config_hash) + "\n";
    s += "# chain_reading=" + p.reading + "\n";
    s += "# tolerances: tol_E=" + fmt("%.3g", p.tol_E) + " residual_factor=" + fmt("%.3g", p.residual_factor)
       + " scan_steps=" + std::to_string(p.steps) + " z0=" + fmt("%.3g", p.z0) + "\n";
    for (const auto& n : p.notes)
        s += "# " + n + "\n";
    return s;
}

Provenance provenance_of(const RunConfig& cfg)
{
    Provenance p;
    p.config_hash = fnv1a64(cfg.canonical());
    p.reading = reading_name(reading_of(cfg.problem));
    p.tol_E = cfg.solver.tol_E;
    p.residual_factor = cfg.solver.residual_factor;
    p.steps = cfg.solver.steps;
    p.z0 = cfg.solver.z0;
    return p;
}

std::string format_energy(std::optional<double> E)
{
    if (!E || !std::isfinite(*E))
        return "nan";
    return fmt("%.6g", *E);
}

std::string format_residual(std::optional<double> r)
{
    if (!r || !std::isfinite(*r))
        return "nan";
    return fmt("%.3e", *r);
}

std::string table_csv(int id, const std::vector<RowResult>& rows, const TableRunOptions& opts)
{
    std::string s = "row,q,r_e,n,n_l,E_computed,E_paper,residual,admissible\n";
    std::string hashed = "table=" + std::to_string(id) + ";reading=" + reading_name(opts.reading);
    for (const RowResult& r : rows) {
        const std::string n_l = r.row.n_l ? std::to_string(*r.row.n_l) : std::to_string(r.row.ell.value_or(0));
        std::optional<double> E, res;
        if (r.state) {
            E = r.state->E;
            res = std::abs(r.state->residual);
        }
        const std::string line = std::to_string(r.row.row) + "," + fmt("%g", r.row.q) + "," + fmt("%g", r.row.r_e) + ","
                               + std::to_string(r.row.n) + "," + n_l + "," + format_energy(E) + ","
                               + fmt("%.4f", r.row.E_paper) + "," + format_residual(res) + ","
                               + (r.state && r.state->admissible ? "1" : "0") + "\n";
        s += line;
        hashed += ";" + line;
    }
    Provenance p;
    p.config_hash = fnv1a64(hashed);
    p.reading = reading_name(opts.reading);
    p.tol_E = opts.solve.tol_E;
    p.residual_factor = opts.solve.residual_factor;
    p.steps = opts.steps;
    p.z0 = opts.z0;
    p.notes.push_back("table " + std::to_string(id) + ": root closest to E_paper among admissible roots; nan when none");
    if (id == 8)
        p.notes.push_back("table 8: q = 1 column; the n_l column carries l and rows are solved through K(K+1)");
    return s + provenance_footer(p);
}

std::optional<BoundState> select_state(const std::vector<BoundState>& states, std::optional<double> target)
{
    std::optional<BoundState> best;
    for (const BoundState& st : states) {
        if (!st.admissible)
            continue;
        if (!best) {
            best = st;
            continue;
        }
        if (target ? std::abs(st.E - *target) < std::abs(best->E - *target) : st.E < best->E)
            best = st;
    }
    return best;
}

std::string solve_csv(const RunConfig& cfg)
{
    const auto states = solve_bound_states(cfg.problem, cfg.scan(), cfg.solve_options());
    std::string s = "E,residual,admissible,ell_prime,delta,gamma,eps_n,reason\n";
    for (const BoundState& st : states) {
        s += format_energy(st.E) + "," + format_residual(std::abs(st.residual)) + "," + (st.admissible ? "1" : "0")
           + "," + fmt("%.6g", st.ell_prime) + "," + fmt("%.6g", st.shape.delta) + "," + fmt("%.6g", st.shape.gamma)
           + "," + fmt("%.6g", st.shape.eps_n) + "," + st.reason + "\n";
    }
    Provenance p = provenance_of(cfg);
    p.notes.push_back("bound states found: " + std::to_string(states.size()));
    return s + provenance_footer(p);
}

std::string wavefunction_csv(const RunConfig& cfg, const GridSpec& grid)
{
    const auto rs = grid_points(grid);
    if (rs.front() <= 0.0)
        throw ParseError("wavefunction grid must start at r > 0", 0);
    const BoundState st = solved_state(cfg);
    const PekerisCoeffs coeffs = pekeris_coeffs(cfg.problem.radial.q, cfg.problem.radial.alpha, cfg.problem.r_e);
    const double omega = centrifugal_omega(st.ell_prime, cfg.problem.radial.D, cfg.problem.r_e).omega;
    const RadialShape shape = quantized_shape(cfg.problem.radial, st.E, omega, coeffs);
    std::string s = "r,F\n";
    for (double r : rs)
        s += fmt("%.6g", r) + "," + fmt("%.9e", radial_wavefunction(shape, cfg.problem.radial, cfg.problem.radial.n, r))
           + "\n";
    Provenance p = provenance_of(cfg);
    p.notes.push_back("E=" + format_energy(st.E) + " n=" + std::to_string(cfg.problem.radial.n));
    p.notes.push_back("grid=" + fmt("%g", grid.min) + "," + fmt("%g", grid.max) + "," + std::to_string(grid.count));
    return s + provenance_footer(p);
}

std::string angular_csv(const RunConfig& cfg, int axis, const GridSpec& grid, bool reduced)
{
    if (!std::holds_alternative<AngularSpec>(cfg.problem.angular))
        throw ParseError("angular output needs n_l in [angular]", 0);
    if (axis < 1 || axis > cfg.problem.radial.D - 1)
        throw ParseError("axis must lie in 1.." + std::to_string(cfg.problem.radial.D - 1), 0);
    const auto thetas = grid_points(grid);
    if (thetas.front() <= 0.0 || thetas.back() >= M_PI)
        throw ParseError("theta grid must lie inside (0, pi)", 0);
    const BoundState st = solved_state(cfg);
    const AxisSolution& sol = st.chain->axes[static_cast<std::size_t>(axis - 1)];
    std::string s = "theta,P\n";
    for (double t : thetas) {
        const double v = reduced ? angular_reduced_wavefunction(sol, t) : angular_wavefunction(sol, t);
        s += fmt("%.6g", t) + "," + fmt("%.9e", v) + "\n";
    }
    Provenance p = provenance_of(cfg);
    p.notes.push_back("E=" + format_energy(st.E) + " axis=" + std::to_string(axis)
                      + (reduced ? " form=reduced" : " form=polar"));
    p.notes.push_back("delta=" + fmt("%.6g", sol.delta_s) + " gamma=" + fmt("%.6g", sol.gamma_s)
                      + " lambda=" + fmt("%.6g", sol.lambda));
    return s + provenance_footer(p);
}

std::string sweep_csv(const RunConfig& cfg, const std::string& param, const std::vector<double>& values)
{
    static const std::vector<std::string> allowed{"q", "r_e", "alpha", "V0", "V1", "M", "C_s", "n"};
    if (std::find(allowed.begin(), allowed.end(), param) == allowed.end())
        throw ParseError("cannot sweep '" + param + "' (expected q, r_e, alpha, V0, V1, M, C_s or n)", 0);
    if (values.empty())
        throw ParseError("sweep needs at least one value", 0);
    std::string s = param + ",E,residual,admissible\n";
    for (double v : values) {
        RunConfig c = cfg;
        RadialConfig& rc = c.problem.radial;
        if (param == "q") {
            if (!(v > 0.0))
                throw ParseError("invalid value for 'q': must be > 0", 0);
            rc.q = Deformation(v);
        } else if (param == "r_e") {
            c.problem.r_e = v;
        } else if (param == "alpha") {
            rc.alpha = v;
        } else if (param == "V0") {
            rc.V0 = v;
        } else if (param == "V1") {
            rc.V1 = v;
        } else if (param == "M") {
            rc.M = v;
        } else if (param == "C_s") {
            rc.C_s = v;
        } else {
            if (v != std::floor(v))
                throw ParseError("invalid value for 'n': must be an integer", 0);
            rc.n = static_cast<int>(v);
        }
        try {
            validate(c.problem);
        } catch (const DomainError& e) {
            throw ParseError(e.what(), 0);
        }
        const auto states = solve_bound_states(c.problem, c.scan(), c.solve_options());
        const auto st = select_state(states, c.solver.E_target);
        std::optional<double> E, res;
        if (st) {
            E = st->E;
            res = std::abs(st->residual);
        }
        s += fmt("%g", v) + "," + format_energy(E) + "," + format_residual(res) + "," + (st ? "1" : "0") + "\n";
    }
    Provenance p = provenance_of(cfg);
    p.notes.push_back("sweep " + param + " over " + std::to_string(values.size()) + " values");
    return s + provenance_footer(p);
}

std::vector<ReproductionRow> reproduce(const std::vector<int>& ids, const TableRunOptions& opts, double tol)
{
    std::vector<ReproductionRow> out;
    for (int id : ids) {
        TableRunOptions corrected = opts;
        corrected.reading = ChainReading::corrected;
        TableRunOptions literal = opts;
        literal.reading = ChainReading::literal;
        for (const TableRow& row : load_table(id, opts.data_dir)) {
            if (id == 8 && row.q != 1.0)
                continue;
            ReproductionRow rr;
            rr.table = id;
            rr.row = row.row;
            rr.E_paper = row.E_paper;
            const RowResult a = solve_row(row, corrected);
            if (a.state)
                rr.E_corrected = a.state->E;
            if (!row.ell) {
                const RowResult b = solve_row(row, literal);
                if (b.state)
                    rr.E_literal = b.state->E;
            } else {
                rr.E_literal = rr.E_corrected; // no chain: both readings coincide
            }
            const auto close = [&](std::optional<double> E) { return E && std::abs(*E - row.E_paper) <= tol; };
            rr.matched = close(rr.E_corrected) || close(rr.E_literal);
            if (!rr.matched) {
                std::string why;
                if (!rr.E_corrected && !rr.E_literal)
                    why = "no admissible root in (-M, M) under either reading";
                else
                    why = "nearest admissible root differs by more than the tolerance";
                if (!(std::abs(row.E_paper) < row.M))
                    why += "; |E_paper| >= M lies outside the bound-state window";
                const ResidualPoint at = residual_at(row_problem(row, ChainReading::corrected), row.E_paper);
                if (at.ok())
                    why += "; residual at E_paper = " + fmt("%.3e", at.value);
                else
                    why += std::string("; residual at E_paper not evaluable (") + to_string(at.status) + ")";
                rr.diagnosis = why;
            }
            out.push_back(rr);
        }
    }
    return out;
}

std::string reproduction_report(const std::vector<ReproductionRow>& rows, const TableRunOptions& opts, double tol)
{
    std::string s = "# Reproduction report\n\n";
    s += "Computed energies against the reference tables. A row matches when either chain reading gives an "
         "admissible root within " + fmt("%g", tol) + " fm^-1 of the reference value. Rows that match under "
         "neither reading are excluded from the reproduction gate and listed with a diagnosis.\n\n";
    s += "Scan: " + std::to_string(opts.steps) + " points on (-M + 1e-6, M - 1e-6), tol_E = "
       + fmt("%g", opts.solve.tol_E) + ".\n\n";
    s += "| table | row | E_paper | E (corrected) | E (literal) | status | diagnosis |\n";
    s += "|---|---|---|---|---|---|---|\n";
    int matched = 0;
    for (const auto& r : rows) {
        matched += r.matched ? 1 : 0;
        s += "| " + std::to_string(r.table) + " | " + std::to_string(r.row) + " | " + fmt("%.4f", r.E_paper) + " | "
           + format_energy(r.E_corrected) + " | " + format_energy(r.E_literal) + " | "
           + (r.matched ? "matched" : "excluded") + " | " + r.diagnosis + " |\n";
    }
    s += "\nMatched " + std::to_string(matched) + " of " + std::to_string(rows.size()) + " rows.\n";

    // rows of different tables that share every input, and what separates near-duplicates
    std::vector<TableRow> all;
    for (int id : {1, 2, 3, 6, 7})
        for (const TableRow& r : load_table(id, opts.data_dir))
            all.push_back(r);
    s += "\n## Cross-table consistency of the reference values\n\n";
    s += "| rows | shared inputs | differing input | reference energies |\n|---|---|---|---|\n";
    const auto same_ab = [](const TableRow& a, const TableRow& b) {
        for (std::size_t i = 0; i < 4; ++i)
            if (a.ab[i].a != b.ab[i].a || a.ab[i].b != b.ab[i].b)
                return false;
        return true;
    };
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            const TableRow& a = all[i];
            const TableRow& b = all[j];
            if (a.D != b.D || a.q != b.q || a.r_e != b.r_e || !same_ab(a, b))
                continue;
            std::string diff;
            if (a.n == b.n && a.n_l == b.n_l)
                diff = "none";
            else if (a.n != b.n && a.n_l == b.n_l)
                diff = "n (" + std::to_string(a.n) + " vs " + std::to_string(b.n) + ")";
            else if (a.n == b.n && a.n_l != b.n_l)
                continue; // an intended n_l scan
            else
                diff = "n and n_l";
            if (a.table == b.table && diff != "none")
                continue;
            s += "| T" + std::to_string(a.table) + "r" + std::to_string(a.row) + ", T" + std::to_string(b.table) + "r"
               + std::to_string(b.row) + " | D=" + std::to_string(a.D) + " q=" + fmt("%g", a.q) + " n_l="
               + std::to_string(a.n_l.value_or(-1)) + " | " + diff + " | " + fmt("%.4f", a.E_paper) + ", "
               + fmt("%.4f", b.E_paper) + " |\n";
        }
    }
    return s;
}

} // namespace diraim
