#pragma once

#include <map>
#include <vector>

#include "ilat/backend.hpp"
#include "ilat/subsystem.hpp"

namespace ilat {

/// An intersection-closed family of site sets; the empty set is implicitly
/// a member with information 0.
struct GenericFamily {
    std::vector<SiteSet> members;

    /// Throws naming a violating pair when the family has duplicates or is
    /// not closed under intersections.
    void validate() const;
};

using GenericTable = std::map<SiteSet, double>; // member -> I (bits)

GenericTable generic_information_table(const EntropyBackend& backend,
                                       const GenericFamily& family);

/// Moebius function of the containment poset (family plus the empty set),
/// memoized across calls for one family.
class MoebiusEngine {
  public:
    explicit MoebiusEngine(GenericFamily family);

    /// i(member) = sum over family members D contained in `member` of
    /// mu(D, member) * I(D). Throws when `member` is not in the family.
    double local_information(const GenericTable& table,
                             const SiteSet& member) const;

    /// mu between two family members (by index into the sorted family).
    long long mu(int sub, int super) const;

    const std::vector<SiteSet>& members() const { return members_; }
    int index_of(const SiteSet& s) const;

  private:
    std::vector<SiteSet> members_; // sorted, unique
    std::vector<std::vector<int>> subsets_of_; // indices of strict subsets
    mutable std::map<std::pair<int, int>, long long> mu_;
};

/// One-shot form of the engine, matching the spec operation.
double moebius_local_information(const GenericFamily& family,
                                 const GenericTable& table,
                                 const SiteSet& member);

} // namespace ilat
