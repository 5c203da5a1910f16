#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <tuple>
#include <vector>

namespace ilat {

/// Sorted set of site ids. Every backend addresses degrees of freedom
/// through these ids; geometries translate rectangle indices into them.
using SiteSet = std::vector<int>;

SiteSet intersect_sites(const SiteSet& a, const SiteSet& b);
bool is_subset(const SiteSet& a, const SiteSet& b); // a subset of b
std::string site_set_to_string(const SiteSet& s);   // sorted comma-joined ids
SiteSet site_set_from_string(const std::string& s);

/// Rectangular subsystem label: bottom-left corner (nx, ny) and multiscale
/// (lx, ly), covering lx+1 index units along x. A negative scale component
/// denotes the empty subsystem (information 0 by convention).
struct SubsystemIndex {
    int nx = 0, ny = 0, lx = -1, ly = -1;

    SubsystemIndex() = default;
    SubsystemIndex(int nx_, int ny_, int lx_, int ly_)
        : nx(nx_), ny(ny_), lx(lx_), ly(ly_) {}

    static SubsystemIndex empty() { return SubsystemIndex(0, 0, -1, -1); }
    bool is_empty() const { return lx < 0 || ly < 0; }

    /// Canonical form: all empty indices compare equal.
    SubsystemIndex normalized() const { return is_empty() ? empty() : *this; }

    friend bool operator==(const SubsystemIndex& a, const SubsystemIndex& b) {
        if (a.is_empty() || b.is_empty()) return a.is_empty() == b.is_empty();
        return a.nx == b.nx && a.ny == b.ny && a.lx == b.lx && a.ly == b.ly;
    }
    friend bool operator!=(const SubsystemIndex& a, const SubsystemIndex& b) {
        return !(a == b);
    }
    // lexicographic (nx, ny, lx, ly); empty sorts first
    friend bool operator<(const SubsystemIndex& a, const SubsystemIndex& b) {
        if (a.is_empty() || b.is_empty()) return a.is_empty() && !b.is_empty();
        return std::tie(a.nx, a.ny, a.lx, a.ly) < std::tie(b.nx, b.ny, b.lx, b.ly);
    }

    std::string to_string() const;
};

SubsystemIndex intersect(const SubsystemIndex& a, const SubsystemIndex& b);
/// true when inner is contained in outer (empty contained in everything)
bool contains(const SubsystemIndex& outer, const SubsystemIndex& inner);

enum class Axis { X, Y };

enum class PlanKind {
    FullFamily,     // every rectangle in the index grid
    Region,         // every rectangle contained in `region`
    ColumnFamily,   // rectangles spanning region's full extent transverse to `axis`
};

/// Declarative selection of the subsystem family to evaluate.
struct SubsystemPlan {
    PlanKind kind = PlanKind::FullFamily;
    SubsystemIndex region;  // used by Region / ColumnFamily
    Axis axis = Axis::X;    // used by ColumnFamily

    static SubsystemPlan full() { return {}; }
    static SubsystemPlan in_region(SubsystemIndex r) {
        return {PlanKind::Region, r, Axis::X};
    }
    static SubsystemPlan columns(SubsystemIndex r, Axis ax) {
        return {PlanKind::ColumnFamily, r, ax};
    }
};

/// All plan rectangles on a grid_nx x grid_ny index grid, in canonical
/// lexicographic order (nx, ny, lx, ly). Throws on plan regions that fall
/// outside the grid.
std::vector<SubsystemIndex> enumerate_rectangles(int grid_nx, int grid_ny,
                                                 const SubsystemPlan& plan);

/// Translates rectangle indices into backend site sets. grid_nx/grid_ny is
/// the position grid; valid rectangles have nx + lx <= grid_nx - 1.
struct RectGeometry {
    int grid_nx = 0, grid_ny = 0;
    std::function<SiteSet(const SubsystemIndex&)> sites;

    /// One site per grid point, id = y*nx + x.
    static RectGeometry site_lattice(int nx, int ny);
};

} // namespace ilat
