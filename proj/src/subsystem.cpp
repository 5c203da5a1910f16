#include "ilat/subsystem.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ilat {

SiteSet intersect_sites(const SiteSet& a, const SiteSet& b) {
    SiteSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return out;
}

bool is_subset(const SiteSet& a, const SiteSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string site_set_to_string(const SiteSet& s) {
    std::ostringstream os;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) os << ',';
        os << s[i];
    }
    return os.str();
}

SiteSet site_set_from_string(const std::string& s) {
    SiteSet out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (!tok.empty()) out.push_back(std::stoi(tok));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string SubsystemIndex::to_string() const {
    if (is_empty()) return "(empty)";
    std::ostringstream os;
    os << "(" << nx << "," << ny << ";" << lx << "," << ly << ")";
    return os.str();
}

SubsystemIndex intersect(const SubsystemIndex& a, const SubsystemIndex& b) {
    if (a.is_empty() || b.is_empty()) return SubsystemIndex::empty();
    int x0 = std::max(a.nx, b.nx);
    int x1 = std::min(a.nx + a.lx, b.nx + b.lx);
    int y0 = std::max(a.ny, b.ny);
    int y1 = std::min(a.ny + a.ly, b.ny + b.ly);
    if (x1 < x0 || y1 < y0) return SubsystemIndex::empty();
    return SubsystemIndex(x0, y0, x1 - x0, y1 - y0);
}

bool contains(const SubsystemIndex& outer, const SubsystemIndex& inner) {
    if (inner.is_empty()) return true;
    if (outer.is_empty()) return false;
    return inner.nx >= outer.nx && inner.ny >= outer.ny &&
           inner.nx + inner.lx <= outer.nx + outer.lx &&
           inner.ny + inner.ly <= outer.ny + outer.ly;
}

static void check_region(int grid_nx, int grid_ny, const SubsystemIndex& r) {
    if (r.is_empty()) throw std::invalid_argument("plan region is empty");
    if (r.nx < 0 || r.ny < 0 || r.nx + r.lx > grid_nx - 1 ||
        r.ny + r.ly > grid_ny - 1) {
        throw std::invalid_argument("plan region " + r.to_string() +
                                    " outside grid " + std::to_string(grid_nx) +
                                    "x" + std::to_string(grid_ny));
    }
}

std::vector<SubsystemIndex> enumerate_rectangles(int grid_nx, int grid_ny,
                                                 const SubsystemPlan& plan) {
    if (grid_nx < 1 || grid_ny < 1)
        throw std::invalid_argument("grid dimensions must be >= 1");

    SubsystemIndex region(0, 0, grid_nx - 1, grid_ny - 1);
    if (plan.kind != PlanKind::FullFamily) {
        check_region(grid_nx, grid_ny, plan.region);
        region = plan.region;
    }

    std::vector<SubsystemIndex> out;
    for (int nx = region.nx; nx <= region.nx + region.lx; ++nx)
        for (int ny = region.ny; ny <= region.ny + region.ly; ++ny)
            for (int lx = 0; nx + lx <= region.nx + region.lx; ++lx)
                for (int ly = 0; ny + ly <= region.ny + region.ly; ++ly) {
                    if (plan.kind == PlanKind::ColumnFamily) {
                        if (plan.axis == Axis::X) {
                            if (ny != region.ny || ly != region.ly) continue;
                        } else {
                            if (nx != region.nx || lx != region.lx) continue;
                        }
                    }
                    out.emplace_back(nx, ny, lx, ly);
                }
    return out;
}

RectGeometry RectGeometry::site_lattice(int nx, int ny) {
    RectGeometry g;
    g.grid_nx = nx;
    g.grid_ny = ny;
    g.sites = [nx](const SubsystemIndex& c) {
        SiteSet s;
        if (c.is_empty()) return s;
        s.reserve(static_cast<std::size_t>(c.lx + 1) * (c.ly + 1));
        for (int y = c.ny; y <= c.ny + c.ly; ++y)
            for (int x = c.nx; x <= c.nx + c.lx; ++x)
                s.push_back(y * nx + x);
        std::sort(s.begin(), s.end());
        return s;
    };
    return g;
}

} // namespace ilat
