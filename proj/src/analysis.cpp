#include "ilat/analysis.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace ilat {

namespace {

struct LinePoints {
    std::vector<double> x, y;
    std::vector<int> dropped;
};

LinePoints collect_log_points(const ScaleMap& per_scale, int lo, int hi,
                              bool log_x) {
    if (lo > hi) throw std::invalid_argument("fit window empty");
    LinePoints p;
    for (const auto& [l, v] : per_scale) {
        if (l < lo || l > hi) continue;
        if (v <= 0 || (log_x && l <= 0)) {
            p.dropped.push_back(l);
            continue;
        }
        p.x.push_back(log_x ? std::log(double(l)) : double(l));
        p.y.push_back(std::log(v));
    }
    if (p.x.size() < 3) {
        std::string msg = "fewer than 3 usable points in fit window [" +
                          std::to_string(lo) + "," + std::to_string(hi) + "]";
        if (!p.dropped.empty()) {
            msg += "; dropped scales:";
            for (int l : p.dropped) msg += " " + std::to_string(l);
        }
        throw std::invalid_argument(msg);
    }
    return p;
}

// least squares y = slope*x + intercept; returns rms residual via out-params
void line_fit(const std::vector<double>& x, const std::vector<double>& y,
              double& slope, double& intercept, double& rms) {
    const double n = double(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double det = n * sxx - sx * sx;
    if (std::abs(det) < 1e-14) throw std::invalid_argument("degenerate fit abscissae");
    slope = (n * sxy - sx * sy) / det;
    intercept = (sy - slope * sx) / n;
    double ss = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - slope * x[i] - intercept;
        ss += r * r;
    }
    rms = std::sqrt(ss / n);
}

} // namespace

FitResult fit_decay_length(const ScaleMap& per_scale, int window_lo, int window_hi) {
    LinePoints p = collect_log_points(per_scale, window_lo, window_hi, false);
    double slope, intercept, rms;
    line_fit(p.x, p.y, slope, intercept, rms);
    FitResult r;
    r.window_lo = window_lo;
    r.window_hi = window_hi;
    r.points_used = int(p.x.size());
    r.residual = rms;
    r.intercept = intercept;
    if (slope >= 0) {
        r.flagged = true;
        r.note = "nonnegative slope: data not decaying";
        r.estimate = std::numeric_limits<double>::infinity();
    } else {
        r.estimate = -1.0 / slope;
    }
    return r;
}

FitResult fit_power_law(const ScaleMap& per_scale, int window_lo, int window_hi) {
    LinePoints p = collect_log_points(per_scale, window_lo, window_hi, true);
    double slope, intercept, rms;
    line_fit(p.x, p.y, slope, intercept, rms);
    FitResult r;
    r.estimate = slope;
    r.intercept = intercept;
    r.window_lo = window_lo;
    r.window_hi = window_hi;
    r.points_used = int(p.x.size());
    r.residual = rms;
    return r;
}

Direction propagation_direction(const MultiscaleMap& weights) {
    double total = 0;
    Eigen::Matrix2d sigma = Eigen::Matrix2d::Zero();
    for (const auto& [l, w] : weights) {
        Eigen::Vector2d lv(double(l.first), double(l.second));
        sigma += w * lv * lv.transpose();
        total += w;
    }
    if (std::abs(total) < 1e-14)
        throw std::invalid_argument("propagation_direction: zero total weight");
    sigma /= total;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(sigma);
    Direction d;
    d.degenerate = std::abs(es.eigenvalues()(1) - es.eigenvalues()(0)) <= 1e-12;
    d.v = es.eigenvectors().col(1); // larger eigenvalue last in Eigen's order
    if (d.v(0) < 0 || (d.v(0) == 0 && d.v(1) < 0)) d.v = -d.v;
    return d;
}

BulkEdgeMaps bulk_edge_split(const InformationLattice& lattice,
                             const SubsystemIndex& bulk_region, bool renormalize) {
    const int gx = lattice.grid_nx, gy = lattice.grid_ny;
    if (bulk_region.is_empty() || bulk_region.nx < 1 || bulk_region.ny < 1 ||
        bulk_region.nx + bulk_region.lx > gx - 2 ||
        bulk_region.ny + bulk_region.ly > gy - 2)
        throw std::invalid_argument("bulk region must keep distance from every edge");
    BulkEdgeMaps maps;
    maps.bulk = info_per_multiscale(lattice, bulk_region);
    MultiscaleMap total =
        info_per_multiscale(lattice, SubsystemIndex(0, 0, gx - 1, gy - 1));
    maps.edge = total;
    for (const auto& [l, v] : maps.bulk) maps.edge[l] -= v;
    for (const auto& [l, v] : total)
        if (!maps.bulk.count(l)) maps.bulk[l] = 0.0;
    if (renormalize) {
        double sum = 0;
        for (const auto& [l, v] : maps.bulk) sum += v;
        if (std::abs(sum) < 1e-14)
            throw std::invalid_argument("bulk map sums to zero, cannot renormalize");
        const double target = double(gx) * double(gy);
        for (auto& [l, v] : maps.bulk) v *= target / sum;
    }
    return maps;
}

TeeResult tee_extract(const InformationLattice& lattice) {
    const int lx_top = lattice.grid_nx - 1, ly_top = lattice.grid_ny - 1;
    TeeResult r;
    r.gamma_top = lattice.at(SubsystemIndex(0, 0, lx_top, ly_top));
    double boundary = 0;
    for (const auto& [c, i] : lattice.entries)
        if (c.lx == lx_top || c.ly == ly_top) boundary += i;
    r.gamma_sum = -boundary;
    return r;
}

FitResult edge_alpha(const ScaleMap& avg_per_scale, int window_lo, int window_hi) {
    if (window_lo > window_hi) throw std::invalid_argument("fit window empty");
    FitResult r;
    r.window_lo = window_lo;
    r.window_hi = window_hi;
    double sum = 0;
    int n = 0;
    for (const auto& [l, v] : avg_per_scale) {
        if (l < window_lo || l > window_hi || l <= 0) continue;
        sum += v * double(l) * double(l);
        ++n;
    }
    if (n < 3) throw std::invalid_argument("fewer than 3 points for alpha fit");
    r.estimate = sum / n;
    r.points_used = n;
    try {
        FitResult power = fit_power_law(avg_per_scale, window_lo, window_hi);
        r.intercept = power.estimate; // effective exponent
        r.residual = power.residual;
        if (power.estimate < -3.0 || power.estimate > -1.0 || power.residual > 0.35) {
            r.flagged = true;
            r.note = "no l^-2 plateau (exponent " + std::to_string(power.estimate) +
                     ", rms " + std::to_string(power.residual) + ")";
        }
    } catch (const std::exception& e) {
        r.flagged = true;
        r.note = std::string("power-law check failed: ") + e.what();
    }
    return r;
}

FitResult edge_alpha(const EntropyBackend& backend, const RectGeometry& geometry,
                     const SubsystemIndex& strip, int window_lo, int window_hi,
                     const FillOptions& opts) {
    SubsystemPlan plan = SubsystemPlan::columns(strip, Axis::X);
    auto indices = enumerate_rectangles(geometry.grid_nx, geometry.grid_ny, plan);
    InformationTable table(backend.fingerprint());
    fill_table(backend, geometry, indices, table, opts);
    ChainMap q = quasi1d_from_table(table, strip, Axis::X);
    ScaleMap avg = avg_quasi1d_per_scale(q, strip, Axis::X);
    return edge_alpha(avg, window_lo, window_hi);
}

} // namespace ilat
