#include "diraim/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "diraim/error.hpp"

namespace diraim {

namespace {

std::string_view trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos)
            return out;
        start = pos + 1;
    }
}

struct Entry {
    std::string value;
    int line = 0;
};

using Section = std::map<std::string, Entry, std::less<>>;

const std::map<std::string, std::set<std::string, std::less<>>, std::less<>>& schema()
{
    static const std::map<std::string, std::set<std::string, std::less<>>, std::less<>> s{
        {"physics", {"D", "M", "V0", "V1", "alpha", "q", "r_e", "C_s", "n"}},
        {"angular", {"a", "b", "n_l", "ell", "reading"}},
        {"solver", {"E_min", "E_max", "steps", "z0", "tol_E", "residual_factor", "threads", "diagnostics", "E_target"}},
        {"output", {"path", "table", "r_grid", "theta_grid"}},
    };
    return s;
}

double to_double(std::string_view text, const std::string& key, int line)
{
    double v = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (text.empty() || ec != std::errc{} || ptr != end || !std::isfinite(v))
        throw ParseError("invalid number for '" + key + "': '" + std::string(text) + "'", line);
    return v;
}

int to_int(std::string_view text, const std::string& key, int line)
{
    int v = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (text.empty() || ec != std::errc{} || ptr != end)
        throw ParseError("invalid integer for '" + key + "': '" + std::string(text) + "'", line);
    return v;
}

class Reader {
public:
    explicit Reader(std::map<std::string, Section, std::less<>> sections) : sections_(std::move(sections)) {}

    const Entry* find(std::string_view section, std::string_view key) const
    {
        const auto s = sections_.find(section);
        if (s == sections_.end())
            return nullptr;
        const auto e = s->second.find(key);
        return e == s->second.end() ? nullptr : &e->second;
    }

    const Entry& require(std::string_view section, std::string_view key) const
    {
        if (const Entry* e = find(section, key))
            return *e;
        throw ParseError("missing mandatory key '" + std::string(key) + "' in [" + std::string(section) + "]", 0);
    }

    double number(std::string_view section, const std::string& key) const
    {
        const Entry& e = require(section, key);
        return to_double(e.value, key, e.line);
    }

    std::optional<double> maybe_number(std::string_view section, const std::string& key) const
    {
        if (const Entry* e = find(section, key))
            return to_double(e->value, key, e->line);
        return std::nullopt;
    }

    int integer(std::string_view section, const std::string& key) const
    {
        const Entry& e = require(section, key);
        return to_int(e.value, key, e.line);
    }

    std::optional<int> maybe_integer(std::string_view section, const std::string& key) const
    {
        if (const Entry* e = find(section, key))
            return to_int(e->value, key, e->line);
        return std::nullopt;
    }

private:
    std::map<std::string, Section, std::less<>> sections_;
};

void check(bool ok, const std::string& key, const std::string& what, int line)
{
    if (!ok)
        throw ParseError("invalid value for '" + key + "': " + what, line);
}

// "2" broadcasts to every axis; "1, 2, 3, 4" gives one value per axis.
std::vector<double> axis_list(const Reader& r, const std::string& key, std::size_t axes, double fallback)
{
    const Entry* e = r.find("angular", key);
    if (!e)
        return std::vector<double>(axes, fallback);
    const auto parts = split(e->value, ',');
    std::vector<double> out;
    for (auto p : parts)
        out.push_back(to_double(p, key, e->line));
    if (out.size() == 1)
        out.assign(axes, out.front());
    check(out.size() == axes, key, "expected 1 or " + std::to_string(axes) + " values", e->line);
    return out;
}

bool to_bool(const Entry& e, const std::string& key)
{
    if (e.value == "true" || e.value == "1" || e.value == "yes")
        return true;
    if (e.value == "false" || e.value == "0" || e.value == "no")
        return false;
    throw ParseError("invalid boolean for '" + key + "': '" + e.value + "'", e.line);
}

std::string fmt(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

GridSpec parse_grid(std::string_view text)
{
    const auto parts = split(text, ',');
    if (parts.size() != 3)
        throw ParseError("grid must be 'min,max,count'", 0);
    GridSpec g{to_double(parts[0], "grid", 0), to_double(parts[1], "grid", 0), to_int(parts[2], "grid", 0)};
    if (g.count == 0)
        throw ParseError("empty grid", 0);
    if (g.count < 0)
        throw ParseError("grid count must be positive", 0);
    if (g.count > 1 && !(g.min < g.max))
        throw ParseError("grid min must be below max", 0);
    return g;
}

RunConfig parse_config(std::string_view text)
{
    std::map<std::string, Section, std::less<>> sections;
    Section* current = nullptr;
    std::string current_name;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        if (const auto hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);
        const std::string_view line = trim(raw);
        if (line.empty())
            continue;

        if (line.front() == '[') {
            if (line.back() != ']')
                throw ParseError("malformed section header", line_no);
            current_name = std::string(trim(line.substr(1, line.size() - 2)));
            if (!schema().count(current_name))
                throw ParseError("unknown section [" + current_name + "]", line_no);
            if (sections.count(current_name))
                throw ParseError("duplicate section [" + current_name + "]", line_no);
            current = &sections[current_name];
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ParseError("expected 'key = value'", line_no);
        if (!current)
            throw ParseError("key outside of any section", line_no);
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        if (key.empty())
            throw ParseError("empty key", line_no);
        if (!schema().at(current_name).count(key))
            throw ParseError("unknown key '" + key + "' in [" + current_name + "]", line_no);
        if (value.empty())
            throw ParseError("empty value for '" + key + "'", line_no);
        if (current->count(key))
            throw ParseError("duplicate key '" + key + "'", line_no);
        (*current)[key] = Entry{value, line_no};
    }

    const Reader r(std::move(sections));
    RunConfig cfg;
    RadialConfig& rc = cfg.problem.radial;

    rc.D = r.integer("physics", "D");
    check(rc.D == 3 || rc.D == 5, "D", "must be 3 or 5", r.require("physics", "D").line);
    rc.M = r.number("physics", "M");
    check(rc.M > 0.0, "M", "must be > 0", r.require("physics", "M").line);
    rc.V0 = r.number("physics", "V0");
    rc.V1 = r.number("physics", "V1");
    rc.alpha = r.number("physics", "alpha");
    check(rc.alpha > 0.0, "alpha", "must be > 0", r.require("physics", "alpha").line);
    const double q = r.number("physics", "q");
    check(q > 0.0, "q", "must be > 0", r.require("physics", "q").line);
    rc.q = Deformation(q);
    cfg.problem.r_e = r.number("physics", "r_e");
    check(cfg.problem.r_e > 0.0, "r_e", "must be > 0", r.require("physics", "r_e").line);
    rc.n = r.integer("physics", "n");
    check(rc.n >= 0, "n", "must be >= 0", r.require("physics", "n").line);
    rc.C_s = r.maybe_number("physics", "C_s").value_or(0.0);

    const auto axes = static_cast<std::size_t>(rc.D - 1);
    const Entry* ell = r.find("angular", "ell");
    const Entry* n_l = r.find("angular", "n_l");
    if (ell && (n_l || r.find("angular", "a") || r.find("angular", "b")))
        throw ParseError("'ell' excludes 'n_l', 'a' and 'b'", ell->line);
    if (ell) {
        const double v = to_double(ell->value, "ell", ell->line);
        check(v >= 0.0, "ell", "must be >= 0", ell->line);
        cfg.problem.angular = EllOverride{v};
    } else {
        if (!n_l)
            throw ParseError("missing mandatory key 'n_l' (or 'ell') in [angular]", 0);
        AngularSpec spec;
        const auto a = axis_list(r, "a", axes, 0.0);
        const auto b = axis_list(r, "b", axes, 0.0);
        for (std::size_t i = 0; i < axes; ++i)
            spec.params.push_back({a[i], b[i]});
        for (double v : axis_list(r, "n_l", axes, 0.0)) {
            check(v >= 0.0 && v == std::floor(v), "n_l", "must be non-negative integers", n_l->line);
            spec.n.push_back(static_cast<int>(v));
        }
        if (const Entry* e = r.find("angular", "reading")) {
            if (e->value == "corrected")
                spec.reading = ChainReading::corrected;
            else if (e->value == "literal")
                spec.reading = ChainReading::literal;
            else
                throw ParseError("invalid value for 'reading': expected corrected or literal", e->line);
        }
        cfg.problem.angular = std::move(spec);
    }

    SolverSettings& s = cfg.solver;
    s.E_min = r.maybe_number("solver", "E_min");
    s.E_max = r.maybe_number("solver", "E_max");
    s.steps = r.maybe_integer("solver", "steps").value_or(s.steps);
    s.z0 = r.maybe_number("solver", "z0").value_or(s.z0);
    s.tol_E = r.maybe_number("solver", "tol_E").value_or(s.tol_E);
    s.residual_factor = r.maybe_number("solver", "residual_factor").value_or(s.residual_factor);
    s.threads = r.maybe_integer("solver", "threads").value_or(s.threads);
    s.E_target = r.maybe_number("solver", "E_target");
    if (const Entry* e = r.find("solver", "diagnostics"))
        s.diagnostics = to_bool(*e, "diagnostics");
    const auto line_of = [&](const char* key) {
        const Entry* e = r.find("solver", key);
        return e ? e->line : 0;
    };
    check(s.steps >= 2, "steps", "must be >= 2", line_of("steps"));
    check(s.z0 > 0.0 && s.z0 < 1.0, "z0", "must lie in (0, 1)", line_of("z0"));
    check(s.tol_E > 0.0, "tol_E", "must be > 0", line_of("tol_E"));
    check(s.residual_factor > 0.0, "residual_factor", "must be > 0", line_of("residual_factor"));
    check(s.threads >= 0, "threads", "must be >= 0", line_of("threads"));
    const ScanSpec scan = cfg.scan();
    check(scan.E_min < scan.E_max, "E_min", "must be below E_max", line_of("E_min"));

    if (const Entry* e = r.find("output", "path"))
        cfg.output_path = e->value;
    cfg.table_id = r.maybe_integer("output", "table");
    try {
        if (const Entry* e = r.find("output", "r_grid"))
            cfg.r_grid = parse_grid(e->value);
        if (const Entry* e = r.find("output", "theta_grid"))
            cfg.theta_grid = parse_grid(e->value);
    } catch (const ParseError& err) {
        const Entry* e = r.find("output", "r_grid");
        throw ParseError(err.what(), e ? e->line : 0);
    }

    try {
        validate(cfg.problem);
    } catch (const DomainError& err) {
        throw ParseError(err.what(), 0);
    }
    return cfg;
}

RunConfig load_config(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open config '" + path + "'", 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

ScanSpec RunConfig::scan() const
{
    ScanSpec s = default_scan(problem);
    s.E_min = solver.E_min.value_or(s.E_min);
    s.E_max = solver.E_max.value_or(s.E_max);
    s.steps = solver.steps;
    return s;
}

SolveOptions RunConfig::solve_options() const
{
    SolveOptions o;
    o.tol_E = solver.tol_E;
    o.residual_factor = solver.residual_factor;
    o.threads = solver.threads;
    o.keep_inadmissible = solver.diagnostics;
    return o;
}

std::string RunConfig::canonical() const
{
    const RadialConfig& rc = problem.radial;
    std::ostringstream os;
    os << "D=" << rc.D << ";M=" << fmt(rc.M) << ";V0=" << fmt(rc.V0) << ";V1=" << fmt(rc.V1)
       << ";alpha=" << fmt(rc.alpha) << ";q=" << fmt(rc.q.value()) << ";r_e=" << fmt(problem.r_e)
       << ";C_s=" << fmt(rc.C_s) << ";n=" << rc.n;
    if (const auto* spec = std::get_if<AngularSpec>(&problem.angular)) {
        for (std::size_t i = 0; i < spec->params.size(); ++i)
            os << ";a" << i + 1 << "=" << fmt(spec->params[i].a) << ";b" << i + 1 << "=" << fmt(spec->params[i].b)
               << ";n" << i + 1 << "=" << spec->n[i];
        os << ";reading=" << (spec->reading == ChainReading::literal ? "literal" : "corrected");
    } else {
        os << ";ell=" << fmt(std::get<EllOverride>(problem.angular).ell);
    }
    const ScanSpec sc = scan();
    os << ";E_min=" << fmt(sc.E_min) << ";E_max=" << fmt(sc.E_max) << ";steps=" << sc.steps
       << ";z0=" << fmt(solver.z0) << ";tol_E=" << fmt(solver.tol_E)
       << ";residual_factor=" << fmt(solver.residual_factor) << ";diagnostics=" << solver.diagnostics;
    if (solver.E_target)
        os << ";E_target=" << fmt(*solver.E_target);
    return os.str();
}

std::uint64_t fnv1a64(std::string_view text) noexcept
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace diraim
