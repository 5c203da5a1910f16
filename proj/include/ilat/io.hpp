#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>

#include "ilat/analysis.hpp"
#include "ilat/lattice.hpp"

namespace ilat {

/// Canonical 12-significant-digit decimal; all TSV exports use it so that a
/// read/re-export round trip is byte-identical.
std::string format_value(double v);

// Tabular exports, all headed by "# ilat v1" and a "# kind ..." line.
void write_lattice_tsv(std::ostream& out, const InformationLattice& lattice);
InformationLattice read_lattice_tsv(std::istream& in);

void write_table_tsv(std::ostream& out, const InformationTable& table,
                     int grid_nx, int grid_ny);
InformationTable read_table_tsv(std::istream& in, int& grid_nx, int& grid_ny);

void write_multiscale_tsv(std::ostream& out, const MultiscaleMap& m);
MultiscaleMap read_multiscale_tsv(std::istream& in);
void write_chain_tsv(std::ostream& out, const ChainMap& m);
ChainMap read_chain_tsv(std::istream& in);
void write_per_scale_tsv(std::ostream& out, const ScaleMap& m);
ScaleMap read_per_scale_tsv(std::istream& in);

/// "# fit" block (kind, estimate, companion, window, residual, points, flag).
void write_fit_tsv(std::ostream& out, const std::string& fit_kind, const FitResult& fit);

/// Config file errors carry the file name and line (or section.key) in what().
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// TOML-style sections of key = value pairs; '#' comments; quoted or bare
/// values. No type coercion surprises: typed getters parse on demand.
class Config {
  public:
    static Config parse_file(const std::string& path);
    static Config parse(std::istream& in, const std::string& name);

    bool has(const std::string& section, const std::string& key) const;
    std::string get_string(const std::string& section, const std::string& key) const;
    std::string get_string(const std::string& section, const std::string& key,
                           const std::string& fallback) const;
    long long get_int(const std::string& section, const std::string& key) const;
    long long get_int(const std::string& section, const std::string& key,
                      long long fallback) const;
    double get_double(const std::string& section, const std::string& key) const;
    double get_double(const std::string& section, const std::string& key,
                      double fallback) const;
    bool get_bool(const std::string& section, const std::string& key,
                  bool fallback) const;

    /// Sorted section.key = value dump; hash() is the FNV-1a of this text,
    /// so the manifest hash changes iff some config field changes.
    std::string canonical_text() const;
    std::uint64_t hash() const;
    const std::string& name() const { return name_; }

    void set(const std::string& section, const std::string& key,
             const std::string& value);

  private:
    std::string name_;
    std::map<std::string, std::map<std::string, std::string>> sections_;
};

} // namespace ilat
