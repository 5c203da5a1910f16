#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ilat/backend.hpp"
#include "ilat/subsystem.hpp"

namespace ilat {

/// Memoized map SubsystemIndex -> von Neumann information I (bits), keyed
/// by the fingerprint of the state that produced it.
class InformationTable {
  public:
    InformationTable() = default;
    explicit InformationTable(std::uint64_t fp) : fingerprint_(fp) {}

    std::uint64_t fingerprint() const { return fingerprint_; }
    void set_fingerprint(std::uint64_t fp) { fingerprint_ = fp; }

    bool has(const SubsystemIndex& idx) const;
    void set(const SubsystemIndex& idx, double value);

    /// Empty (negative-scale) indices are 0 by convention; a missing
    /// nonnegative-scale entry is a lookup failure naming the index.
    double lookup(const SubsystemIndex& idx) const;

    const std::map<SubsystemIndex, double>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

  private:
    std::map<SubsystemIndex, double> entries_;
    std::uint64_t fingerprint_ = 0;
};

/// Fill options for the subsystem entropy sweep.
struct FillOptions {
    bool parallel = true; // OpenMP over site sets; results merged in canonical order
};

/// Evaluates backend information for every index (deduplicating identical
/// site sets) and merges into the table in canonical index order, so the
/// result is independent of the parallel schedule.
void fill_table(const EntropyBackend& backend, const RectGeometry& geometry,
                const std::vector<SubsystemIndex>& indices,
                InformationTable& table, const FillOptions& opts = {});

} // namespace ilat
