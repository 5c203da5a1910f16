#include "ilat/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace ilat {

double InformationLattice::at(const SubsystemIndex& idx) const {
    auto it = entries.find(idx.normalized());
    if (it == entries.end())
        throw std::out_of_range("lattice has no entry for " + idx.to_string());
    return it->second;
}

double InformationLattice::total() const {
    double s = 0;
    for (const auto& kv : entries) s += kv.second;
    return s;
}

double chain_local_information(const InformationTable& table, int start, int len) {
    auto I = [&](int s, int l) {
        if (l < 0) return 0.0;
        return table.lookup(SubsystemIndex(s, 0, l, 0));
    };
    return I(start, len) - I(start, len - 1) - I(start + 1, len - 1) +
           I(start + 1, len - 2);
}

namespace {

// One 1D stencil applied to one axis of a 2D index.
template <typename Lookup>
double delta_x(const Lookup& I, const SubsystemIndex& c) {
    return I(c.nx, c.ny, c.lx, c.ly) - I(c.nx, c.ny, c.lx - 1, c.ly) -
           I(c.nx + 1, c.ny, c.lx - 1, c.ly) + I(c.nx + 1, c.ny, c.lx - 2, c.ly);
}

} // namespace

double ie_local_information_rect(const InformationTable& table,
                                 const SubsystemIndex& idx) {
    auto I = [&](int nx, int ny, int lx, int ly) {
        if (lx < 0 || ly < 0) return 0.0;
        return table.lookup(SubsystemIndex(nx, ny, lx, ly));
    };
    const int nx = idx.nx, ny = idx.ny, lx = idx.lx, ly = idx.ly;
    double v = I(nx, ny, lx, ly);
    v -= I(nx, ny, lx - 1, ly) + I(nx + 1, ny, lx - 1, ly) +
         I(nx, ny, lx, ly - 1) + I(nx, ny + 1, lx, ly - 1);
    v += I(nx, ny, lx - 1, ly - 1) + I(nx + 1, ny, lx - 1, ly - 1) +
         I(nx, ny + 1, lx - 1, ly - 1) + I(nx + 1, ny + 1, lx - 1, ly - 1) +
         I(nx + 1, ny, lx - 2, ly) + I(nx, ny + 1, lx, ly - 2);
    v -= I(nx + 1, ny, lx - 2, ly - 1) + I(nx + 1, ny + 1, lx - 2, ly - 1) +
         I(nx, ny + 1, lx - 1, ly - 2) + I(nx + 1, ny + 1, lx - 1, ly - 2);
    v += I(nx + 1, ny + 1, lx - 2, ly - 2);
    return v;
}

double ie_local_information_rect_composed(const InformationTable& table,
                                          const SubsystemIndex& idx) {
    // Delta_y applied to (Delta_x I): expand the y stencil and apply the x
    // stencil at each of its four terms.
    auto Ix = [&](int nx, int ny, int lx, int ly) {
        if (ly < 0) return 0.0;
        auto I = [&](int ax, int ay, int bx, int by) {
            if (bx < 0 || by < 0) return 0.0;
            return table.lookup(SubsystemIndex(ax, ay, bx, by));
        };
        return delta_x(I, SubsystemIndex(nx, ny, lx, ly));
    };
    return Ix(idx.nx, idx.ny, idx.lx, idx.ly) -
           Ix(idx.nx, idx.ny, idx.lx, idx.ly - 1) -
           Ix(idx.nx, idx.ny + 1, idx.lx, idx.ly - 1) +
           Ix(idx.nx, idx.ny + 1, idx.lx, idx.ly - 2);
}

namespace {

// All nonempty constituents of the 16-term stencil at idx.
void append_constituents(const SubsystemIndex& c,
                         std::vector<SubsystemIndex>& out) {
    static const int d[16][4] = {
        {0, 0, 0, 0},  {0, 0, 1, 0},  {1, 0, 1, 0},  {0, 0, 0, 1},
        {0, 1, 0, 1},  {0, 0, 1, 1},  {1, 0, 1, 1},  {0, 1, 1, 1},
        {1, 1, 1, 1},  {1, 0, 2, 0},  {0, 1, 0, 2},  {1, 0, 2, 1},
        {1, 1, 2, 1},  {0, 1, 1, 2},  {1, 1, 1, 2},  {1, 1, 2, 2}};
    for (const auto& t : d) {
        SubsystemIndex s(c.nx + t[0], c.ny + t[1], c.lx - t[2], c.ly - t[3]);
        if (!s.is_empty()) out.push_back(s);
    }
}

} // namespace

BuildResult build_lattice(const EntropyBackend& backend,
                          const RectGeometry& geometry,
                          const SubsystemPlan& plan, const BuildOptions& opts) {
    return build_lattice(backend, geometry, plan, opts,
                         InformationTable(backend.fingerprint()));
}

BuildResult build_lattice(const EntropyBackend& backend,
                          const RectGeometry& geometry,
                          const SubsystemPlan& plan, const BuildOptions& opts,
                          InformationTable seed) {
    auto members = enumerate_rectangles(geometry.grid_nx, geometry.grid_ny, plan);

    std::vector<SubsystemIndex> needed;
    needed.reserve(members.size() * 4);
    for (const auto& m : members) append_constituents(m, needed);
    std::sort(needed.begin(), needed.end());
    needed.erase(std::unique(needed.begin(), needed.end()), needed.end());

    BuildResult r;
    r.table = std::move(seed);
    if (r.table.fingerprint() == 0) r.table.set_fingerprint(backend.fingerprint());
    try {
        fill_table(backend, geometry, needed, r.table, {opts.parallel});
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("backend evaluation failed: ") +
                                 e.what());
    }

    r.lattice.grid_nx = geometry.grid_nx;
    r.lattice.grid_ny = geometry.grid_ny;
    r.lattice.plan = plan;
    r.lattice.fingerprint = backend.fingerprint();
    for (const auto& m : members) {
        double v = ie_local_information_rect(r.table, m);
        double w = ie_local_information_rect_composed(r.table, m);
        if (std::abs(v - w) > opts.stencil_tol)
            throw std::runtime_error("stencil identity violated at " +
                                     m.to_string());
        r.lattice.entries[m] = v;
    }
    return r;
}

double decomposition_check(const InformationLattice& lattice,
                           const InformationTable& table) {
    if (lattice.fingerprint != table.fingerprint())
        throw std::invalid_argument(
            "lattice and table come from different states");
    double worst = 0;
    for (const auto& [c, unused] : lattice.entries) {
        (void)unused;
        double sum = 0;
        for (const auto& [cp, i] : lattice.entries)
            if (contains(c, cp)) sum += i;
        worst = std::max(worst, std::abs(table.lookup(c) - sum));
    }
    return worst;
}

MultiscaleMap info_per_multiscale(const InformationLattice& lattice,
                                  const SubsystemIndex& region) {
    MultiscaleMap out;
    for (const auto& [c, i] : lattice.entries)
        if (contains(region, c)) out[{c.lx, c.ly}] += i;
    return out;
}

ChainMap quasi1d_from_lattice(const InformationLattice& lattice,
                              const SubsystemIndex& region, Axis axis) {
    ChainMap out;
    // Seed every (position, scale) pair in the region so zero rows appear.
    int off = axis == Axis::X ? region.nx : region.ny;
    int ext = axis == Axis::X ? region.lx : region.ly;
    for (int n = off; n <= off + ext; ++n)
        for (int l = 0; n + l <= off + ext; ++l) out[{n, l}] = 0.0;
    for (const auto& [c, i] : lattice.entries) {
        if (!contains(region, c)) continue;
        if (axis == Axis::X)
            out[{c.nx, c.lx}] += i;
        else
            out[{c.ny, c.ly}] += i;
    }
    return out;
}

ChainMap quasi1d_from_table(const InformationTable& table,
                            const SubsystemIndex& region, Axis axis) {
    ChainMap out;
    auto I = [&](int n, int l) {
        if (l < 0) return 0.0;
        if (axis == Axis::X)
            return table.lookup(SubsystemIndex(n, region.ny, l, region.ly));
        return table.lookup(SubsystemIndex(region.nx, n, region.lx, l));
    };
    int off = axis == Axis::X ? region.nx : region.ny;
    int ext = axis == Axis::X ? region.lx : region.ly;
    for (int n = off; n <= off + ext; ++n)
        for (int l = 0; n + l <= off + ext; ++l)
            out[{n, l}] = I(n, l) - I(n, l - 1) - I(n + 1, l - 1) + I(n + 1, l - 2);
    return out;
}

ChainMap quasi1d_local(const InformationLattice& lattice,
                       const InformationTable& table,
                       const SubsystemIndex& region, Axis axis, double tol) {
    ChainMap a = quasi1d_from_lattice(lattice, region, axis);
    ChainMap b = quasi1d_from_table(table, region, axis);
    for (const auto& [key, v] : a) {
        double w = b.at(key);
        if (std::abs(v - w) > tol)
            throw std::runtime_error(
                "quasi-1D routes disagree at (n=" + std::to_string(key.first) +
                ", l=" + std::to_string(key.second) + "): " + std::to_string(v) +
                " vs " + std::to_string(w));
    }
    return a;
}

ScaleMap quasi1d_per_scale(const ChainMap& q) {
    ScaleMap out;
    for (const auto& [key, v] : q) out[key.second] += v;
    return out;
}

ScaleMap avg_quasi1d_per_scale(const ChainMap& q, const SubsystemIndex& region,
                               Axis axis) {
    ScaleMap sums = quasi1d_per_scale(q);
    int ext = axis == Axis::X ? region.lx : region.ly;
    ScaleMap out;
    for (const auto& [l, v] : sums) {
        int count = ext + 1 - l;
        if (count <= 0)
            throw std::invalid_argument("no subsystem at scale " +
                                        std::to_string(l) + " inside region");
        out[l] = v / count;
    }
    return out;
}

std::vector<SiteSet> chain_construction(int nx, int ny, ChainMode mode,
                                        Axis axis) {
    std::vector<SiteSet> chain;
    if (mode == ChainMode::CoarseGrainAxis) {
        int len = axis == Axis::X ? nx : ny;
        int other = axis == Axis::X ? ny : nx;
        for (int n = 0; n < len; ++n) {
            SiteSet s;
            for (int m = 0; m < other; ++m)
                s.push_back(axis == Axis::X ? m * nx + n : n * nx + m);
            std::sort(s.begin(), s.end());
            chain.push_back(std::move(s));
        }
        return chain;
    }
    if (nx != ny)
        throw std::invalid_argument("radial rings require a square system");
    // For even L the origin sits between the four central sites, so ring k
    // collects sites at Chebyshev distance k+1/2 from it; ring 0 is the
    // central 2x2 block. For odd L ring 0 is the central site.
    double c = (nx - 1) / 2.0;
    int rings = (nx + 1) / 2;
    chain.assign(rings, {});
    for (int y = 0; y < ny; ++y)
        for (int x = 0; x < nx; ++x) {
            double d = std::max(std::abs(x - c), std::abs(y - c));
            int k = static_cast<int>(std::lround(std::floor(d)));
            chain.at(k).push_back(y * nx + x);
        }
    for (auto& s : chain) std::sort(s.begin(), s.end());
    return chain;
}

InformationTable chain_information_table(const EntropyBackend& backend,
                                         const std::vector<SiteSet>& chain,
                                         const FillOptions& opts) {
    const int n = static_cast<int>(chain.size());
    RectGeometry g;
    g.grid_nx = n;
    g.grid_ny = 1;
    g.sites = [&chain](const SubsystemIndex& c) {
        SiteSet s;
        if (c.is_empty()) return s;
        for (int k = c.nx; k <= c.nx + c.lx; ++k)
            s.insert(s.end(), chain.at(k).begin(), chain.at(k).end());
        std::sort(s.begin(), s.end());
        return s;
    };
    std::vector<SubsystemIndex> idx;
    for (int s = 0; s < n; ++s)
        for (int l = 0; s + l < n; ++l) idx.emplace_back(s, 0, l, 0);
    InformationTable t(backend.fingerprint());
    fill_table(backend, g, idx, t, opts);
    return t;
}

} // namespace ilat
