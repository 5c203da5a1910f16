#include "ilat/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace ilat {

std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    // normalize "-0" so equal values always print identically
    if (std::string(buf) == "-0") return "0";
    return buf;
}

namespace {

struct TsvReader {
    std::istream& in;
    int line_no = 0;
    std::string kind;
    std::map<std::string, std::string> meta;

    explicit TsvReader(std::istream& s) : in(s) {}

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::runtime_error("tsv line " + std::to_string(line_no) + ": " + msg);
    }

    void read_header(const std::string& expected_kind) {
        std::string line;
        if (!std::getline(in, line)) fail("empty input");
        ++line_no;
        if (line != "# ilat v1") fail("missing '# ilat v1' header");
        while (in.peek() == '#') {
            std::getline(in, line);
            ++line_no;
            std::istringstream ls(line.substr(1));
            std::string key;
            ls >> key;
            std::string rest;
            std::getline(ls, rest);
            if (!rest.empty() && rest.front() == ' ') rest.erase(0, 1);
            meta[key] = rest;
        }
        auto it = meta.find("kind");
        if (it == meta.end()) fail("missing '# kind' line");
        kind = it->second;
        if (kind != expected_kind)
            fail("expected kind '" + expected_kind + "', found '" + kind + "'");
    }

    // one whitespace-separated row; false at EOF
    bool next_row(std::vector<std::string>& fields) {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            if (line.empty()) continue;
            std::istringstream ls(line);
            fields.clear();
            std::string f;
            while (ls >> f) fields.push_back(f);
            return true;
        }
        return false;
    }

    int meta_int(const std::string& key, int pos = 0) const {
        auto it = meta.find(key);
        if (it == meta.end())
            throw std::runtime_error("tsv header: missing '# " + key + "'");
        std::istringstream ls(it->second);
        int v = 0;
        for (int i = 0; i <= pos; ++i)
            if (!(ls >> v))
                throw std::runtime_error("tsv header: malformed '# " + key + "'");
        return v;
    }

    std::uint64_t meta_hex(const std::string& key) const {
        auto it = meta.find(key);
        if (it == meta.end())
            throw std::runtime_error("tsv header: missing '# " + key + "'");
        return std::stoull(it->second, nullptr, 16);
    }
};

std::string hex64(std::uint64_t v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

double parse_double(const TsvReader& r, const std::string& s) {
    std::size_t pos = 0;
    double v;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        r.fail("malformed number '" + s + "'");
    }
    if (pos != s.size()) r.fail("trailing characters in number '" + s + "'");
    return v;
}

int parse_int(const TsvReader& r, const std::string& s) {
    std::size_t pos = 0;
    int v;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        r.fail("malformed integer '" + s + "'");
    }
    if (pos != s.size()) r.fail("trailing characters in integer '" + s + "'");
    return v;
}

std::string plan_to_string(const SubsystemPlan& plan) {
    switch (plan.kind) {
    case PlanKind::FullFamily:
        return "full";
    case PlanKind::Region:
        return "region " + std::to_string(plan.region.nx) + " " +
               std::to_string(plan.region.ny) + " " + std::to_string(plan.region.lx) +
               " " + std::to_string(plan.region.ly);
    case PlanKind::ColumnFamily:
        return "columns " + std::to_string(plan.region.nx) + " " +
               std::to_string(plan.region.ny) + " " + std::to_string(plan.region.lx) +
               " " + std::to_string(plan.region.ly) + " " +
               (plan.axis == Axis::X ? "x" : "y");
    }
    throw std::logic_error("unknown plan kind");
}

SubsystemPlan plan_from_string(const std::string& s) {
    std::istringstream ls(s);
    std::string kind;
    ls >> kind;
    if (kind == "full") return SubsystemPlan::full();
    SubsystemIndex r;
    if (!(ls >> r.nx >> r.ny >> r.lx >> r.ly))
        throw std::runtime_error("tsv header: malformed '# plan " + s + "'");
    if (kind == "region") return SubsystemPlan::in_region(r);
    if (kind == "columns") {
        std::string axis;
        ls >> axis;
        return SubsystemPlan::columns(r, axis == "y" ? Axis::Y : Axis::X);
    }
    throw std::runtime_error("tsv header: unknown plan kind '" + kind + "'");
}

} // namespace

void write_lattice_tsv(std::ostream& out, const InformationLattice& lattice) {
    out << "# ilat v1\n";
    out << "# kind lattice\n";
    out << "# grid " << lattice.grid_nx << " " << lattice.grid_ny << "\n";
    out << "# plan " << plan_to_string(lattice.plan) << "\n";
    out << "# fingerprint " << hex64(lattice.fingerprint) << "\n";
    out << "# columns nx ny lx ly i\n";
    for (const auto& [idx, v] : lattice.entries)
        out << idx.nx << "\t" << idx.ny << "\t" << idx.lx << "\t" << idx.ly << "\t"
            << format_value(v) << "\n";
}

InformationLattice read_lattice_tsv(std::istream& in) {
    TsvReader r(in);
    r.read_header("lattice");
    InformationLattice lat;
    lat.grid_nx = r.meta_int("grid", 0);
    lat.grid_ny = r.meta_int("grid", 1);
    lat.plan = plan_from_string(r.meta.at("plan"));
    lat.fingerprint = r.meta_hex("fingerprint");
    std::vector<std::string> f;
    while (r.next_row(f)) {
        if (f.size() != 5) r.fail("expected 5 columns, found " + std::to_string(f.size()));
        SubsystemIndex idx(parse_int(r, f[0]), parse_int(r, f[1]), parse_int(r, f[2]),
                           parse_int(r, f[3]));
        lat.entries[idx] = parse_double(r, f[4]);
    }
    return lat;
}

void write_table_tsv(std::ostream& out, const InformationTable& table,
                     int grid_nx, int grid_ny) {
    out << "# ilat v1\n";
    out << "# kind table\n";
    out << "# grid " << grid_nx << " " << grid_ny << "\n";
    out << "# fingerprint " << hex64(table.fingerprint()) << "\n";
    out << "# columns nx ny lx ly I\n";
    for (const auto& [idx, v] : table.entries())
        out << idx.nx << "\t" << idx.ny << "\t" << idx.lx << "\t" << idx.ly << "\t"
            << format_value(v) << "\n";
}

InformationTable read_table_tsv(std::istream& in, int& grid_nx, int& grid_ny) {
    TsvReader r(in);
    r.read_header("table");
    grid_nx = r.meta_int("grid", 0);
    grid_ny = r.meta_int("grid", 1);
    InformationTable table(r.meta_hex("fingerprint"));
    std::vector<std::string> f;
    while (r.next_row(f)) {
        if (f.size() != 5) r.fail("expected 5 columns, found " + std::to_string(f.size()));
        SubsystemIndex idx(parse_int(r, f[0]), parse_int(r, f[1]), parse_int(r, f[2]),
                           parse_int(r, f[3]));
        table.set(idx, parse_double(r, f[4]));
    }
    return table;
}

void write_multiscale_tsv(std::ostream& out, const MultiscaleMap& m) {
    out << "# ilat v1\n# kind multiscale\n# columns lx ly I\n";
    for (const auto& [l, v] : m)
        out << l.first << "\t" << l.second << "\t" << format_value(v) << "\n";
}

MultiscaleMap read_multiscale_tsv(std::istream& in) {
    TsvReader r(in);
    r.read_header("multiscale");
    MultiscaleMap m;
    std::vector<std::string> f;
    while (r.next_row(f)) {
        if (f.size() != 3) r.fail("expected 3 columns, found " + std::to_string(f.size()));
        m[{parse_int(r, f[0]), parse_int(r, f[1])}] = parse_double(r, f[2]);
    }
    return m;
}

void write_chain_tsv(std::ostream& out, const ChainMap& m) {
    out << "# ilat v1\n# kind quasi1d\n# columns n l i\n";
    for (const auto& [k, v] : m)
        out << k.first << "\t" << k.second << "\t" << format_value(v) << "\n";
}

ChainMap read_chain_tsv(std::istream& in) {
    TsvReader r(in);
    r.read_header("quasi1d");
    ChainMap m;
    std::vector<std::string> f;
    while (r.next_row(f)) {
        if (f.size() != 3) r.fail("expected 3 columns, found " + std::to_string(f.size()));
        m[{parse_int(r, f[0]), parse_int(r, f[1])}] = parse_double(r, f[2]);
    }
    return m;
}

void write_per_scale_tsv(std::ostream& out, const ScaleMap& m) {
    out << "# ilat v1\n# kind per_scale\n# columns l I\n";
    for (const auto& [l, v] : m) out << l << "\t" << format_value(v) << "\n";
}

ScaleMap read_per_scale_tsv(std::istream& in) {
    TsvReader r(in);
    r.read_header("per_scale");
    ScaleMap m;
    std::vector<std::string> f;
    while (r.next_row(f)) {
        if (f.size() != 2) r.fail("expected 2 columns, found " + std::to_string(f.size()));
        m[parse_int(r, f[0])] = parse_double(r, f[1]);
    }
    return m;
}

void write_fit_tsv(std::ostream& out, const std::string& fit_kind, const FitResult& fit) {
    out << "# ilat v1\n";
    out << "# kind fit\n";
    out << "# fit " << fit_kind << "\n";
    out << "# window " << fit.window_lo << " " << fit.window_hi << "\n";
    out << "# points " << fit.points_used << "\n";
    out << "# flagged " << (fit.flagged ? 1 : 0) << "\n";
    if (!fit.note.empty()) out << "# note " << fit.note << "\n";
    out << "# columns estimate companion residual\n";
    out << format_value(fit.estimate) << "\t" << format_value(fit.intercept) << "\t"
        << format_value(fit.residual) << "\n";
}

Config Config::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(path + ": cannot open");
    return parse(in, path);
}

Config Config::parse(std::istream& in, const std::string& name) {
    Config cfg;
    cfg.name_ = name;
    std::string line, section;
    int line_no = 0;
    auto fail = [&](const std::string& msg) -> void {
        throw ConfigError(name + ":" + std::to_string(line_no) + ": " + msg);
    };
    auto trim = [](std::string s) {
        const char* ws = " \t\r";
        s.erase(0, s.find_first_not_of(ws));
        auto last = s.find_last_not_of(ws);
        s.erase(last == std::string::npos ? 0 : last + 1);
        return s;
    };
    while (std::getline(in, line)) {
        ++line_no;
        // strip the first '#' outside quotes; a '#' inside a quoted value
        // is literal
        bool in_quote = false;
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (line[i] == '"') in_quote = !in_quote;
            if (line[i] == '#' && !in_quote) {
                line.erase(i);
                break;
            }
        }
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') fail("unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section.empty()) fail("empty section name");
            cfg.sections_[section];
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) fail("expected 'key = value'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) fail("empty key");
        if (section.empty()) fail("key '" + key + "' outside any [section]");
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
            value = value.substr(1, value.size() - 2);
        if (cfg.sections_[section].count(key))
            fail("duplicate key '" + section + "." + key + "'");
        cfg.sections_[section][key] = value;
    }
    return cfg;
}

bool Config::has(const std::string& section, const std::string& key) const {
    auto it = sections_.find(section);
    return it != sections_.end() && it->second.count(key);
}

std::string Config::get_string(const std::string& section, const std::string& key) const {
    auto it = sections_.find(section);
    if (it == sections_.end() || !it->second.count(key))
        throw ConfigError(name_ + ": missing required field " + section + "." + key);
    return it->second.at(key);
}

std::string Config::get_string(const std::string& section, const std::string& key,
                               const std::string& fallback) const {
    return has(section, key) ? sections_.at(section).at(key) : fallback;
}

long long Config::get_int(const std::string& section, const std::string& key) const {
    const std::string s = get_string(section, key);
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        pos = std::string::npos;
    }
    if (pos != s.size())
        throw ConfigError(name_ + ": field " + section + "." + key +
                          " is not an integer: '" + s + "'");
    return v;
}

long long Config::get_int(const std::string& section, const std::string& key,
                          long long fallback) const {
    return has(section, key) ? get_int(section, key) : fallback;
}

double Config::get_double(const std::string& section, const std::string& key) const {
    const std::string s = get_string(section, key);
    std::size_t pos = 0;
    double v = 0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        pos = std::string::npos;
    }
    if (pos != s.size())
        throw ConfigError(name_ + ": field " + section + "." + key +
                          " is not a number: '" + s + "'");
    return v;
}

double Config::get_double(const std::string& section, const std::string& key,
                          double fallback) const {
    return has(section, key) ? get_double(section, key) : fallback;
}

bool Config::get_bool(const std::string& section, const std::string& key,
                      bool fallback) const {
    if (!has(section, key)) return fallback;
    const std::string s = get_string(section, key);
    if (s == "true" || s == "1") return true;
    if (s == "false" || s == "0") return false;
    throw ConfigError(name_ + ": field " + section + "." + key +
                      " is not a boolean: '" + s + "'");
}

std::string Config::canonical_text() const {
    std::ostringstream out;
    for (const auto& [section, kv] : sections_)
        for (const auto& [key, value] : kv)
            out << section << "." << key << " = " << value << "\n";
    return out.str();
}

std::uint64_t Config::hash() const {
    Fnv fnv;
    fnv.add(canonical_text());
    return fnv.h;
}

void Config::set(const std::string& section, const std::string& key,
                 const std::string& value) {
    sections_[section][key] = value;
}

} // namespace ilat
