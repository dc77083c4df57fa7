#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "diraim/config.hpp"
#include "diraim/error.hpp"
#include "diraim/runner.hpp"

using namespace diraim;

namespace {

const char* kMinimal = R"(
[physics]
D = 3
M = 5
V0 = 6
V1 = -1
alpha = 0.5
q = 1.0
r_e = 2.0
n = 0
[angular]
n_l = 0
)";

std::string read(const std::string& path)
{
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int error_line(const std::string& text)
{
    try {
        (void)parse_config(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return -1;
}

std::string error_text(const std::string& text)
{
    try {
        (void)parse_config(text);
    } catch (const ParseError& e) {
        return e.what();
    }
    return {};
}

} // namespace

TEST_CASE("minimal configuration and defaults")
{
    const RunConfig c = parse_config(kMinimal);
    CHECK(c.problem.radial.q.value() == 1.0);
    CHECK(c.problem.radial.C_s == 0.0);
    CHECK(c.solver.z0 == 0.5);
    CHECK(c.solver.steps == 20000);
    CHECK(c.scan().E_min == doctest::Approx(-5.0 + 1e-6));
    const auto& spec = std::get<AngularSpec>(c.problem.angular);
    CHECK(spec.params.size() == 2);
    CHECK(spec.reading == ChainReading::corrected);
}

TEST_CASE("shipped table configuration round-trips")
{
    const RunConfig c = load_config(std::string(DIRAIM_SOURCE_DIR) + "/configs/table1.cfg");
    const RadialConfig& r = c.problem.radial;
    CHECK(r.D == 5);
    CHECK(r.M == 5.0);
    CHECK(r.V0 == 6.0);
    CHECK(r.V1 == -1.0);
    CHECK(r.alpha == 0.5);
    CHECK(r.q.value() == 1.0);
    CHECK(c.problem.r_e == 0.1671);
    CHECK(r.n == 1);
    const auto& spec = std::get<AngularSpec>(c.problem.angular);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(spec.params[i].a == 2.0);
        CHECK(spec.params[i].b == 2.0);
        CHECK(spec.n[i] == 1);
    }
}

TEST_CASE("parse errors carry the line")
{
    std::string t = kMinimal;
    CHECK(error_line(t + "bogus = 1\n") == 13);
    CHECK(error_text(t + "bogus = 1\n").find("unknown key 'bogus'") != std::string::npos);
    CHECK(error_line(t + "[extra]\n") == 13);
    CHECK(error_line("x = 1\n") == 1);
    CHECK(error_line(t + "n_l = 1\n") == 13);                // duplicate
    CHECK(error_line(std::string("[physics]\nD = five\n")) == 2);
    CHECK(error_line(std::string("[physics\n")) == 1);
    CHECK(error_line(std::string("[physics]\njust words\n")) == 2);
}

TEST_CASE("missing and invalid keys are named")
{
    std::string t = kMinimal;
    const auto without = [&](const std::string& key) {
        std::string s = t;
        const auto pos = s.find("\n" + key + " =");
        s.erase(pos + 1, s.find('\n', pos + 1) - pos);
        return s;
    };
    CHECK(error_text(without("M")).find("'M'") != std::string::npos);
    CHECK(error_text(without("alpha")).find("'alpha'") != std::string::npos);
    std::string neg = t;
    neg.replace(neg.find("alpha = 0.5"), 11, "alpha = -1");
    CHECK(error_text(neg).find("'alpha'") != std::string::npos);
    CHECK(error_line(neg) == 7);
    CHECK(error_text(t + "reading = sideways\n").find("reading") != std::string::npos);
    CHECK(error_text(t + "ell = 1\n").find("excludes") != std::string::npos);
}

TEST_CASE("grids")
{
    const GridSpec g = parse_grid("0.1, 2, 5");
    CHECK(g.count == 5);
    CHECK_THROWS_WITH_AS((void)parse_grid("0,1,0"), "empty grid", ParseError);
    CHECK_THROWS_AS((void)parse_grid("1,0,3"), ParseError);
    CHECK_THROWS_AS((void)parse_grid("1,2"), ParseError);
}

TEST_CASE("hash is stable and sensitive")
{
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
    const RunConfig a = parse_config(kMinimal);
    RunConfig b = parse_config(std::string(kMinimal) + "# trailing comment\n");
    CHECK(fnv1a64(a.canonical()) == fnv1a64(b.canonical()));
    b.problem.radial.V0 = 6.5;
    CHECK(fnv1a64(a.canonical()) != fnv1a64(b.canonical()));
}

TEST_CASE("formatting")
{
    CHECK(format_energy(-6.47212345) == "-6.47212");
    CHECK(format_energy(std::nullopt) == "nan");
    CHECK(format_residual(1.5e-11) == "1.500e-11");
}

TEST_CASE("reference tables load")
{
    const std::string dir = default_data_dir();
    CHECK(load_table(1, dir).size() == 12);
    CHECK(load_table(2, dir).size() == 5);
    CHECK(load_table(3, dir).size() == 17);
    CHECK(load_table(6, dir).size() == 11);
    CHECK(load_table(7, dir).size() == 10);
    CHECK(load_table(8, dir).size() == 48);
    CHECK_THROWS_AS((void)load_table(4, dir), ParseError);
    CHECK(load_table(1, dir)[4].E_paper == -6.4721);
    CHECK(load_table(6, dir)[6].E_paper == -5.1394);
}

TEST_CASE("table output: header, row count and determinism")
{
    TableRunOptions opts;
    const auto rows = run_table(8, opts);
    CHECK(rows.size() == 16);
    const std::string csv = table_csv(8, rows, opts);
    CHECK(csv.rfind("row,q,r_e,n,n_l,E_computed,E_paper,residual,admissible\n", 0) == 0);
    CHECK(csv.find("# config_hash=fnv1a64:") != std::string::npos);
    CHECK(csv.find("# chain_reading=corrected") != std::string::npos);
    CHECK(csv.find("# tolerances:") != std::string::npos);
    CHECK(table_csv(8, run_table(8, opts), opts) == csv);
    const auto t2 = run_table(2, opts);
    CHECK(t2.size() == 5);
}

TEST_CASE("solve, wave function and sweep output")
{
    RunConfig c = parse_config(kMinimal);
    const std::string solve = solve_csv(c);
    CHECK(solve.rfind("E,residual,admissible", 0) == 0);
    CHECK(solve == solve_csv(c));

    const std::string wf = wavefunction_csv(c, {0.1, 10.0, 50});
    CHECK(wf.rfind("r,F\n", 0) == 0);
    CHECK(wf.find("# config_hash=") != std::string::npos);
    CHECK_THROWS_AS((void)wavefunction_csv(c, {0.0, 10.0, 50}), ParseError);
    CHECK_THROWS_AS((void)wavefunction_csv(c, {0.1, 10.0, 0}), ParseError);

    const std::string ang = angular_csv(c, 2, {0.1, 3.0, 10}, false);
    CHECK(ang.rfind("theta,P\n", 0) == 0);
    CHECK_THROWS_AS((void)angular_csv(c, 3, {0.1, 3.0, 10}, false), ParseError);

    const std::string sw = sweep_csv(c, "q", {0.8, 1.0});
    CHECK(sw.rfind("q,E,residual,admissible\n", 0) == 0);
    CHECK_THROWS_AS((void)sweep_csv(c, "colour", {1.0}), ParseError);
    CHECK_THROWS_AS((void)sweep_csv(c, "q", {-1.0}), ParseError);

    RunConfig none = parse_config(read(std::string(DIRAIM_SOURCE_DIR) + "/configs/table1.cfg"));
    CHECK_THROWS_AS((void)wavefunction_csv(none, {0.1, 1.0, 3}), SolverError);
}

TEST_CASE("reproduction report lists every row")
{
    TableRunOptions opts;
    opts.steps = 2000;
    const auto rows = reproduce({2}, opts, 1e-2);
    CHECK(rows.size() == 5);
    const std::string md = reproduction_report(rows, opts, 1e-2);
    CHECK(md.find("| 2 | 1 | -6.4725") != std::string::npos);
    CHECK(md.find("Cross-table consistency") != std::string::npos);
}
