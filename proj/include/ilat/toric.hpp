#pragma once

#include <vector>

#include "ilat/dense.hpp"
#include "ilat/stabilizer.hpp"
#include "ilat/subsystem.hpp"

namespace ilat {

/// Planar toric-code patch of nx x ny plaquettes with plaquette-type open
/// boundaries. Qubits live on the edges of the corner grid:
///   horizontal edge (x, y): x in [0,nx), y in [0,ny], id = y*nx + x
///   vertical   edge (x, y): x in [0,nx], y in [0,ny), id = nx*(ny+1) + y*(nx+1) + x
/// Rectangles are indexed on the (nx+1) x (ny+1) corner grid: the rectangle
/// (n, l) covers every edge between its corners, so a single plaquette sits
/// at scale (1,1) and a full interior star at scale (2,2).
struct ToricGeometry {
    int nx = 0, ny = 0; // plaquettes per axis

    int n_qubits() const { return nx * (ny + 1) + (nx + 1) * ny; }
    int h_edge(int x, int y) const { return y * nx + x; }
    int v_edge(int x, int y) const { return nx * (ny + 1) + y * (nx + 1) + x; }

    /// Plaquette edges left, top, right, bottom (clockwise from the left).
    std::vector<int> plaquette_edges(int px, int py) const;
    /// Star edges around corner (vx, vy); boundary stars are truncated.
    std::vector<int> star_edges(int vx, int vy) const;

    PauliTerm plaquette(int px, int py) const; // Z on all edges
    PauliTerm star(int vx, int vy) const;      // X on all edges

    SiteSet rect_sites(const SubsystemIndex& idx) const;
    RectGeometry rect_geometry() const; // corner grid (nx+1) x (ny+1)
};

struct ToricPatchModel {
    ToricGeometry geometry;
    StabilizerTableau tableau;
    int dropped_dependencies = 0; // exactly 1 for the open patch
};

/// Open patch: all plaquettes plus all (truncated) stars; the product of
/// all stars is the identity, so exactly one dependent generator is
/// dropped. Throws if the dependency count differs from one.
ToricPatchModel toric_code_patch(int nx, int ny);

/// Pair of sign-flipped anyons: an e-pair (two star signs -1) or m-pair
/// (two plaquette signs -1) created by a string inside the patch. The
/// tableau signs change but no GF(2) row does.
ToricPatchModel toric_code_patch_excited(int nx, int ny,
                                         const std::vector<std::pair<int, int>>& e_stars,
                                         const std::vector<std::pair<int, int>>& m_plaquettes);

struct ToricBulkModel {
    ToricGeometry geometry;   // full patch including margin
    StabilizerTableau tableau;
    SubsystemIndex region;    // region A on the corner grid of the full patch
    int margin = 0;
};

/// Region of region_nx x region_ny plaquettes embedded in the deep bulk of
/// a larger patch (margin plaquettes on every side); all analysis takes
/// subsystems of the region only. Results must be margin-independent for
/// margin >= 2 (rejected below that).
ToricBulkModel toric_code_bulk_region(int region_nx, int region_ny, int margin);

struct ToricLineDefectModel {
    ToricGeometry geometry;
    DenseState state;                    // one ground state of the defect patch
    std::vector<PauliString> generators; // modified commuting generator set
    std::pair<int, int> twist_low;       // corner-grid vertices hosting the twists
    std::pair<int, int> twist_high;
};

/// 3x3-plaquette patch with a line defect at the central plaquette: the
/// plaquette becomes B = ZZXX (clockwise from the left edge) and each of
/// the four frustrated neighbours R (stars (1,1),(2,2); plaquettes
/// (1,0),(2,1)) is merged with it into the commuting weight-5 operator
/// i*R*B carrying a single Y. Ground-space dimension 2 is verified over
/// GF(2); the returned state is the projection of |0...0>.
ToricLineDefectModel toric_code_line_defect_dense(int nx = 3, int ny = 3,
                                                  std::pair<int, int> defect_plaquette = {1, 1});

} // namespace ilat
