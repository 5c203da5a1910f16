#include "ilat/toric.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace ilat {

namespace {

void check_plaquette(const ToricGeometry& g, int px, int py) {
    if (px < 0 || px >= g.nx || py < 0 || py >= g.ny)
        throw std::invalid_argument("plaquette (" + std::to_string(px) + "," +
                                    std::to_string(py) + ") outside patch");
}

void check_vertex(const ToricGeometry& g, int vx, int vy) {
    if (vx < 0 || vx > g.nx || vy < 0 || vy > g.ny)
        throw std::invalid_argument("vertex (" + std::to_string(vx) + "," +
                                    std::to_string(vy) + ") outside patch");
}

} // namespace

std::vector<int> ToricGeometry::plaquette_edges(int px, int py) const {
    check_plaquette(*this, px, py);
    return {v_edge(px, py), h_edge(px, py + 1), v_edge(px + 1, py), h_edge(px, py)};
}

std::vector<int> ToricGeometry::star_edges(int vx, int vy) const {
    check_vertex(*this, vx, vy);
    std::vector<int> out;
    if (vx - 1 >= 0) out.push_back(h_edge(vx - 1, vy));
    if (vy < ny) out.push_back(v_edge(vx, vy));
    if (vx < nx) out.push_back(h_edge(vx, vy));
    if (vy - 1 >= 0) out.push_back(v_edge(vx, vy - 1));
    return out;
}

PauliTerm ToricGeometry::plaquette(int px, int py) const {
    PauliTerm t;
    t.z_sites = plaquette_edges(px, py);
    std::sort(t.z_sites.begin(), t.z_sites.end());
    return t;
}

PauliTerm ToricGeometry::star(int vx, int vy) const {
    PauliTerm t;
    t.x_sites = star_edges(vx, vy);
    std::sort(t.x_sites.begin(), t.x_sites.end());
    return t;
}

SiteSet ToricGeometry::rect_sites(const SubsystemIndex& idx) const {
    SiteSet out;
    if (idx.is_empty()) return out;
    if (idx.nx < 0 || idx.ny < 0 || idx.nx + idx.lx > nx || idx.ny + idx.ly > ny)
        throw std::invalid_argument("rectangle " + idx.to_string() +
                                    " outside the corner grid");
    for (int x = idx.nx; x < idx.nx + idx.lx; ++x)
        for (int y = idx.ny; y <= idx.ny + idx.ly; ++y) out.push_back(h_edge(x, y));
    for (int x = idx.nx; x <= idx.nx + idx.lx; ++x)
        for (int y = idx.ny; y < idx.ny + idx.ly; ++y) out.push_back(v_edge(x, y));
    std::sort(out.begin(), out.end());
    return out;
}

RectGeometry ToricGeometry::rect_geometry() const {
    RectGeometry g;
    g.grid_nx = nx + 1;
    g.grid_ny = ny + 1;
    ToricGeometry self = *this;
    g.sites = [self](const SubsystemIndex& idx) { return self.rect_sites(idx); };
    return g;
}

ToricPatchModel toric_code_patch(int nx, int ny) {
    return toric_code_patch_excited(nx, ny, {}, {});
}

ToricPatchModel toric_code_patch_excited(int nx, int ny,
                                         const std::vector<std::pair<int, int>>& e_stars,
                                         const std::vector<std::pair<int, int>>& m_plaquettes) {
    if (nx < 2 || ny < 2)
        throw std::invalid_argument("toric patch needs at least 2x2 plaquettes");
    ToricGeometry geo{nx, ny};
    std::vector<PauliTerm> gens;
    for (int px = 0; px < nx; ++px)
        for (int py = 0; py < ny; ++py) {
            PauliTerm t = geo.plaquette(px, py);
            if (std::count(m_plaquettes.begin(), m_plaquettes.end(),
                           std::make_pair(px, py)))
                t.sign = -1;
            gens.push_back(t);
        }
    for (int vx = 0; vx <= nx; ++vx)
        for (int vy = 0; vy <= ny; ++vy) {
            PauliTerm t = geo.star(vx, vy);
            if (std::count(e_stars.begin(), e_stars.end(), std::make_pair(vx, vy)))
                t.sign = -1;
            gens.push_back(t);
        }
    StabilizerTableau::BuildReport report;
    StabilizerTableau tab = StabilizerTableau::from_generators(geo.n_qubits(), gens, report);
    if (report.dropped.size() != 1)
        throw std::runtime_error("toric patch: expected exactly 1 dependent generator, got " +
                                 std::to_string(report.dropped.size()));
    if (tab.n_generators() != geo.n_qubits())
        throw std::runtime_error("toric patch: tableau not pure");
    return {geo, std::move(tab), static_cast<int>(report.dropped.size())};
}

ToricBulkModel toric_code_bulk_region(int region_nx, int region_ny, int margin) {
    if (margin < 2) throw std::invalid_argument("bulk margin must be >= 2 plaquettes");
    if (region_nx < 1 || region_ny < 1)
        throw std::invalid_argument("bulk region must be at least 1x1 plaquettes");
    ToricPatchModel patch =
        toric_code_patch(region_nx + 2 * margin, region_ny + 2 * margin);
    SubsystemIndex region(margin, margin, region_nx, region_ny);
    return {patch.geometry, std::move(patch.tableau), region, margin};
}

namespace {

PauliString pauli_from_masks(std::uint64_t x, std::uint64_t z, int phase, int n) {
    PauliString p;
    p.x = x;
    p.z = z;
    p.phase = ((phase % 4) + 4) % 4;
    p.n_qubits = n;
    return p;
}

// product of i^pa X^xa Z^za and i^pb X^xb Z^zb
PauliString pauli_mul(const PauliString& a, const PauliString& b) {
    int phase = a.phase + b.phase + 2 * std::popcount(a.z & b.x);
    return pauli_from_masks(a.x ^ b.x, a.z ^ b.z, phase, a.n_qubits);
}

// i^p X^x Z^z is Hermitian iff p = |x&z| mod 2 (mod arbitrary factors of -1);
// bump the phase by i when the product of two anticommuting factors needs it.
PauliString hermitized(PauliString p) {
    int y = std::popcount(p.x & p.z) & 1;
    if ((p.phase & 1) != y) p.phase = (p.phase + 1) % 4;
    return p;
}

int rank_gf2_masks(std::vector<std::pair<std::uint64_t, std::uint64_t>> rows) {
    auto leading = [](const std::pair<std::uint64_t, std::uint64_t>& r) {
        if (r.second) return 64 + std::bit_width(r.second) - 1;
        return std::bit_width(r.first) - 1;
    };
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pivots;
    for (auto row : rows) {
        while (row.first || row.second) {
            auto it = std::find_if(pivots.begin(), pivots.end(),
                                   [&](const auto& p) { return leading(p) == leading(row); });
            if (it == pivots.end()) break;
            row.first ^= it->first;
            row.second ^= it->second;
        }
        if (row.first || row.second) pivots.push_back(row);
    }
    return static_cast<int>(pivots.size());
}

} // namespace

ToricLineDefectModel toric_code_line_defect_dense(int nx, int ny,
                                                  std::pair<int, int> defect_plaquette) {
    ToricGeometry geo{nx, ny};
    const int n = geo.n_qubits();
    if (n > 26) throw std::invalid_argument("line-defect patch too large for dense backend");
    const int dx = defect_plaquette.first, dy = defect_plaquette.second;
    // both twist vertices (dx,dy) and (dx+1,dy+1) must be interior
    if (dx < 1 || dx > nx - 2 || dy < 1 || dy > ny - 2)
        throw std::invalid_argument("defect endpoints must lie in the bulk");

    auto mask_x = [&](const std::vector<int>& edges) {
        std::uint64_t m = 0;
        for (int e : edges) m |= 1ULL << e;
        return m;
    };

    // B = ZZXX clockwise from the left edge of the defect plaquette
    auto pe = geo.plaquette_edges(dx, dy); // left, top, right, bottom
    PauliString B = pauli_from_masks((1ULL << pe[2]) | (1ULL << pe[3]),
                                     (1ULL << pe[0]) | (1ULL << pe[1]), 0, n);

    auto plain_star = [&](int vx, int vy) {
        return pauli_from_masks(mask_x(geo.star_edges(vx, vy)), 0, 0, n);
    };
    auto plain_plaq = [&](int px, int py) {
        return pauli_from_masks(0, mask_x(geo.plaquette_edges(px, py)), 0, n);
    };

    // the four neighbours frustrated by B, each merged into i * R * B
    std::vector<PauliString> gens;
    std::pair<int, int> t_low{dx, dy}, t_high{dx + 1, dy + 1};
    gens.push_back(hermitized(pauli_mul(plain_star(dx, dy), B)));
    gens.push_back(hermitized(pauli_mul(plain_star(dx + 1, dy + 1), B)));
    gens.push_back(hermitized(pauli_mul(plain_plaq(dx, dy - 1), B)));
    gens.push_back(hermitized(pauli_mul(plain_plaq(dx + 1, dy), B)));
    for (int px = 0; px < nx; ++px)
        for (int py = 0; py < ny; ++py) {
            if ((px == dx && py == dy) || (px == dx && py == dy - 1) ||
                (px == dx + 1 && py == dy))
                continue;
            gens.push_back(plain_plaq(px, py));
        }
    for (int vx = 0; vx <= nx; ++vx)
        for (int vy = 0; vy <= ny; ++vy) {
            if ((vx == dx && vy == dy) || (vx == dx + 1 && vy == dy + 1)) continue;
            gens.push_back(plain_star(vx, vy));
        }

    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (!gens[i].commutes_with(gens[j]))
                throw std::runtime_error("line defect: generators " + std::to_string(i) +
                                         " and " + std::to_string(j) + " anticommute");

    std::vector<std::pair<std::uint64_t, std::uint64_t>> rows;
    rows.reserve(gens.size());
    for (const auto& g : gens) rows.emplace_back(g.x, g.z);
    int rank = rank_gf2_masks(rows);
    long long dim = 1LL << (n - rank);
    if (dim != 2)
        throw std::runtime_error("line defect: ground-space dimension " +
                                 std::to_string(dim) + ", expected 2");

    std::vector<int> signs(gens.size(), 1);
    DenseState seed = DenseState::computational_basis(n, 0);
    DenseState ground = prepare_stabilizer_projected(seed, gens, signs);
    return {geo, std::move(ground), std::move(gens), t_low, t_high};
}

} // namespace ilat
