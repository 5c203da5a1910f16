#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ilat/backend.hpp"
#include "ilat/dense.hpp"
#include "ilat/subsystem.hpp"

namespace ilat {

/// Pauli operator on arbitrarily many qubits, kept as site lists so toric
/// patches with hundreds of qubits stay cheap. sign is +1 or -1; a site in
/// both lists carries Y on that qubit.
struct PauliTerm {
    SiteSet x_sites, z_sites;
    int sign = 1;

    static PauliTerm parse(const std::string& s);
    std::string to_string(int n_qubits) const;
    bool commutes_with(const PauliTerm& o) const;
    PauliString to_pauli_string(int n_qubits) const; // dense cross-checks, n <= 64
};

/// Row rank over GF(2) of bit-packed rows (each row `words` machine words).
int rank_gf2(std::vector<std::vector<std::uint64_t>> rows, int n_bits);

class StabilizerTableau {
  public:
    struct BuildReport {
        std::vector<int> dropped; // generator indices removed as GF(2)-dependent
    };

    /// Throws if any generator pair anticommutes or rows are dependent.
    static StabilizerTableau from_generators(int n_qubits,
                                             const std::vector<PauliTerm>& generators);
    /// Same, but drops dependent rows (last in input order) into `report`.
    static StabilizerTableau from_generators(int n_qubits,
                                             const std::vector<PauliTerm>& generators,
                                             BuildReport& report);

    int n_qubits() const { return n_qubits_; }
    int n_generators() const { return k_; }
    const std::vector<PauliTerm>& generators() const { return generators_; }
    std::uint64_t fingerprint() const { return fingerprint_; }

    /// |A| - S(A); equals the number of independent stabilizers supported
    /// entirely inside A. Integer-valued.
    double subsystem_information(const SiteSet& sites) const;

    void write(std::ostream& out) const; // one generator per line
    static StabilizerTableau read(std::istream& in, int n_qubits);

  private:
    int n_qubits_ = 0;
    int k_ = 0;
    int words_ = 0; // words per half-row (x or z part)
    std::vector<PauliTerm> generators_;
    std::vector<std::vector<std::uint64_t>> rows_; // 2*words_ each: x part | z part
    std::uint64_t fingerprint_ = 0;
};

class StabilizerBackend : public EntropyBackend {
  public:
    explicit StabilizerBackend(StabilizerTableau tab) : tab_(std::move(tab)) {}
    double information(const SiteSet& sites) const override {
        return tab_.subsystem_information(sites);
    }
    int total_sites() const override { return tab_.n_qubits(); }
    std::uint64_t fingerprint() const override { return tab_.fingerprint(); }
    std::string name() const override { return "stabilizer"; }
    const StabilizerTableau& tableau() const { return tab_; }

  private:
    StabilizerTableau tab_;
};

} // namespace ilat
