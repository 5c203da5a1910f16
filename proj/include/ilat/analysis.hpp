#pragma once

#include <Eigen/Dense>
#include <string>

#include "ilat/lattice.hpp"

namespace ilat {

struct FitResult {
    double estimate = 0;  // decay length, exponent, or coefficient
    double intercept = 0; // companion parameter of the linear model
    int window_lo = 0, window_hi = 0;
    double residual = 0; // rms residual in the fitted (log) coordinates
    int points_used = 0;
    bool flagged = false; // model rejected (wrong-sign slope, no plateau)
    std::string note;
};

/// Least squares of ln I(l) = -l/lambda + c over l in [window_lo, window_hi];
/// nonpositive values are dropped, fewer than 3 usable points throw.
/// Flagged when the slope is nonnegative (growing data).
FitResult fit_decay_length(const ScaleMap& per_scale, int window_lo, int window_hi);

/// Least squares of ln I = p ln l + c; estimate is the exponent p.
FitResult fit_power_law(const ScaleMap& per_scale, int window_lo, int window_hi);

struct Direction {
    Eigen::Vector2d v;
    bool degenerate = false;
};

/// Principal axis of the uncentered second moment sum_l I(l) l l^T / sum I,
/// weights taken as-is (negatives included). Returns the unit eigenvector of
/// the larger eigenvalue with nonnegative x (tie: nonnegative y).
Direction propagation_direction(const MultiscaleMap& weights);

struct BulkEdgeMaps {
    MultiscaleMap bulk, edge;
};

/// Per-multiscale information restricted to subsystems inside `bulk_region`
/// vs the remainder. The region must not touch the lattice boundary. With
/// `renormalize`, the bulk map is scaled to sum to grid_nx * grid_ny bits.
BulkEdgeMaps bulk_edge_split(const InformationLattice& lattice,
                             const SubsystemIndex& bulk_region,
                             bool renormalize = false);

struct TeeResult {
    double gamma_top = 0; // i at the single top-scale index
    double gamma_sum = 0; // minus the sum of i over boundary-spanning scales
};

TeeResult tee_extract(const InformationLattice& lattice);

/// Fit of i(l) ~ alpha * l^{-2}: estimate is the least-squares constant for
/// i(l) l^2 on the window, intercept carries the effective power-law exponent
/// fitted on the same window; a missing l^{-2} plateau sets `flagged`.
FitResult edge_alpha(const ScaleMap& avg_per_scale, int window_lo, int window_hi);

/// Pipeline form: coarse-grained quasi-1D informations of the strip along x,
/// averaged per scale, then the alpha fit.
FitResult edge_alpha(const EntropyBackend& backend, const RectGeometry& geometry,
                     const SubsystemIndex& strip, int window_lo, int window_hi,
                     const FillOptions& opts = {});

} // namespace ilat
