#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ilat/backend.hpp"
#include "ilat/subsystem.hpp"
#include "ilat/table.hpp"

namespace ilat {

/// Inclusion-exclusion local information i (bits, may be negative) per
/// subsystem index, plus the geometry and plan it was computed for.
struct InformationLattice {
    std::map<SubsystemIndex, double> entries;
    int grid_nx = 0, grid_ny = 0;
    SubsystemPlan plan;
    std::uint64_t fingerprint = 0;

    double at(const SubsystemIndex& idx) const;
    double total() const;
};

/// 1D local-information stencil on a table of interval informations keyed
/// as (start, 0; len, 0). `start` is the left end; the half-integer center
/// convention is n = start + len/2.
double chain_local_information(const InformationTable& table, int start, int len);

/// 16-term rectangular inclusion-exclusion local information.
double ie_local_information_rect(const InformationTable& table,
                                 const SubsystemIndex& idx);

/// Same quantity as the composition of two 1D stencils (x then y). Kept
/// separate so the identity between the two routes can be checked.
double ie_local_information_rect_composed(const InformationTable& table,
                                          const SubsystemIndex& idx);

struct BuildOptions {
    bool parallel = true;
    double stencil_tol = 1e-10; // 16-term vs composed-stencil agreement
};

struct BuildResult {
    InformationLattice lattice;
    InformationTable table;
};

/// Fills the information table for every index needed by the plan (memoized,
/// deduplicated) and applies the rectangular stencil to every plan member.
/// Deterministic: reductions run in canonical index order.
BuildResult build_lattice(const EntropyBackend& backend,
                          const RectGeometry& geometry,
                          const SubsystemPlan& plan,
                          const BuildOptions& opts = {});

/// Same, but entries already present in `seed` (cache round trips) are
/// reused; the seed fingerprint must match the backend.
BuildResult build_lattice(const EntropyBackend& backend,
                          const RectGeometry& geometry,
                          const SubsystemPlan& plan,
                          const BuildOptions& opts,
                          InformationTable seed);

/// Max |I(C) - sum of i over plan subsystems contained in C| over all plan
/// subsystems C. Throws on fingerprint mismatch.
double decomposition_check(const InformationLattice& lattice,
                           const InformationTable& table);

using MultiscaleMap = std::map<std::pair<int, int>, double>; // (lx,ly) -> bits
using ChainMap = std::map<std::pair<int, int>, double>;      // (n,l) -> bits
using ScaleMap = std::map<int, double>;                      // l -> bits

/// Information per multiscale inside `region` (sum of i over positions).
MultiscaleMap info_per_multiscale(const InformationLattice& lattice,
                                  const SubsystemIndex& region);

/// Quasi-1D local information inside `region` along `axis`, computed by
/// summing the lattice over the orthogonal axis. Keyed by (start, scale).
ChainMap quasi1d_from_lattice(const InformationLattice& lattice,
                              const SubsystemIndex& region, Axis axis);

/// Same quantity from the 4-term stencil on coarse-grained column/row
/// informations (subsystems spanning the region's full transverse extent).
ChainMap quasi1d_from_table(const InformationTable& table,
                            const SubsystemIndex& region, Axis axis);

/// Dual-route quasi-1D local information: evaluates both Eq-by-sum and the
/// coarse-grained stencil and requires agreement within `tol`.
ChainMap quasi1d_local(const InformationLattice& lattice,
                       const InformationTable& table,
                       const SubsystemIndex& region, Axis axis,
                       double tol = 1e-10);

ScaleMap quasi1d_per_scale(const ChainMap& q);

/// Average per subsystem position at each scale; rejects scales with no
/// subsystem in the region.
ScaleMap avg_quasi1d_per_scale(const ChainMap& q, const SubsystemIndex& region,
                               Axis axis);

enum class ChainMode { CoarseGrainAxis, RadialRings };

/// Ordered 1D chain of coarse-grained sites: lattice columns/rows, or
/// concentric square rings around the system center (square systems only;
/// for even L the ring origin sits between the four central sites).
std::vector<SiteSet> chain_construction(int nx, int ny, ChainMode mode,
                                        Axis axis = Axis::X);

/// Interval informations of a set chain, keyed (start, 0; len, 0).
InformationTable chain_information_table(const EntropyBackend& backend,
                                         const std::vector<SiteSet>& chain,
                                         const FillOptions& opts = {});

} // namespace ilat
