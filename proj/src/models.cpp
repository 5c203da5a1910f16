#include "ilat/models.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "ilat/rng.hpp"

namespace ilat {

using cplx = std::complex<double>;

Eigen::MatrixXcd anderson_hamiltonian(const AndersonSpec& spec) {
    if (spec.nx < 1 || spec.ny < 1) throw std::invalid_argument("anderson: empty lattice");
    if (spec.w < 0) throw std::invalid_argument("anderson: negative disorder width");
    const int n = spec.nx * spec.ny;
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n, n);
    CounterRng rng(spec.seed);
    auto site = [&](int x, int y) { return y * spec.nx + x; };
    for (int y = 0; y < spec.ny; ++y)
        for (int x = 0; x < spec.nx; ++x) {
            h(site(x, y), site(x, y)) = rng.next_symmetric(spec.w);
            if (x + 1 < spec.nx) {
                h(site(x, y), site(x + 1, y)) = -spec.tx;
                h(site(x + 1, y), site(x, y)) = -spec.tx;
            }
            if (y + 1 < spec.ny) {
                h(site(x, y), site(x, y + 1)) = -spec.ty;
                h(site(x, y + 1), site(x, y)) = -spec.ty;
            }
        }
    return h;
}

Eigen::MatrixXcd bdg_pip_hamiltonian(const PipSpec& spec) {
    if (spec.nx < 1 || spec.ny < 1) throw std::invalid_argument("bdg: empty lattice");
    const int n = spec.nx * spec.ny;
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n, n);
    Eigen::MatrixXcd pair = Eigen::MatrixXcd::Zero(n, n); // antisymmetric block
    auto site = [&](int x, int y) { return y * spec.nx + x; };
    // pairing written as (1/2) sum_ij pair_ij c_i^dag c_j^dag + h.c.;
    // the x-bond term (D/2) c_i c_{i+x} + h.c. gives pair_{i+x,i} = D/2,
    // the y-bond term i(D/2)(c_i c_{i+y} - h.c.) gives pair_{i+y,i} = -iD/2.
    for (int y = 0; y < spec.ny; ++y)
        for (int x = 0; x < spec.nx; ++x) {
            const int i = site(x, y);
            h(i, i) = -spec.mu;
            if (x + 1 < spec.nx) {
                const int j = site(x + 1, y);
                h(i, j) -= spec.t;
                h(j, i) -= spec.t;
                pair(j, i) += spec.delta / 2.0;
                pair(i, j) -= spec.delta / 2.0;
            }
            if (y + 1 < spec.ny) {
                const int j = site(x, y + 1);
                h(i, j) -= spec.t;
                h(j, i) -= spec.t;
                pair(j, i) += cplx(0.0, -spec.delta / 2.0);
                pair(i, j) -= cplx(0.0, -spec.delta / 2.0);
            }
        }
    Eigen::MatrixXcd bdg(2 * n, 2 * n);
    bdg.topLeftCorner(n, n) = h;
    bdg.topRightCorner(n, n) = pair;
    bdg.bottomLeftCorner(n, n) = pair.adjoint();
    bdg.bottomRightCorner(n, n) = -h.transpose();
    return bdg;
}

namespace {

DenseState singlet_pair() {
    VectorXc psi = VectorXc::Zero(4);
    // qubit 0 is the first factor site; |0> = up. |01> - |10> over (site a, site b).
    psi(1) = 1.0 / std::sqrt(2.0);
    psi(2) = -1.0 / std::sqrt(2.0);
    return DenseState::from_vector(psi);
}

} // namespace

FactorizedDenseBackend singlet_reference_backend() {
    const int nx = 6, ny = 6;
    auto site = [&](int x, int y) { return y * nx + x; };
    std::vector<FactorizedDenseBackend::Factor> factors;
    factors.push_back({{site(0, 0), site(2, 2)}, singlet_pair()});
    factors.push_back({{site(0, 4), site(4, 3)}, singlet_pair()});
    for (int y = 0; y < ny; ++y)
        for (int x = 0; x < nx; ++x) {
            const int s = site(x, y);
            if (s == site(0, 0) || s == site(2, 2) || s == site(0, 4) || s == site(4, 3))
                continue;
            factors.push_back({{s}, DenseState::computational_basis(1, 0)});
        }
    return FactorizedDenseBackend(nx * ny, std::move(factors));
}

DenseState cat_state_dense(int n_qubits, double phi) {
    VectorXc psi = VectorXc::Zero(std::size_t(1) << n_qubits);
    psi(0) = 1.0 / std::sqrt(2.0);
    psi(psi.size() - 1) = std::polar(1.0 / std::sqrt(2.0), phi);
    return DenseState::from_vector(psi);
}

DenseState triangle_reference_state() {
    MatrixXc rho = MatrixXc::Zero(8, 8);
    rho(0, 0) = 0.5;
    rho(7, 7) = 0.5;
    return DenseState::from_density_matrix(rho);
}

Eigen::Vector2d fermi_direction(double tx, double ty, int samples) {
    if (tx <= 0 || ty <= 0) throw std::invalid_argument("fermi_direction: t_x, t_y > 0 required");
    if (samples < 100) throw std::invalid_argument("fermi_direction: samples >= 100 required");
    // quarter surface k_x in [k_lo, pi - k_lo] (where |cos k_y| <= 1), k_y >= 0;
    // the other quadrants contribute identically to (|v_x|, |v_y|).
    const double ratio = tx / ty;
    const double k_lo = ratio > 1.0 ? std::acos(1.0 / ratio) : 0.0;
    const double k_hi = M_PI - k_lo;
    auto point = [&](double kx) {
        double c = -ratio * std::cos(kx);
        c = std::clamp(c, -1.0, 1.0);
        return std::pair<double, double>(kx, std::acos(c));
    };
    Eigen::Vector2d acc = Eigen::Vector2d::Zero();
    auto prev = point(k_lo);
    for (int j = 1; j <= samples; ++j) {
        auto cur = point(k_lo + (k_hi - k_lo) * j / samples);
        const double mx = 0.5 * (prev.first + cur.first);
        const double my = 0.5 * (prev.second + cur.second);
        const double dl = std::hypot(cur.first - prev.first, cur.second - prev.second);
        Eigen::Vector2d v(tx * std::sin(mx), ty * std::sin(my));
        const double norm = v.norm();
        if (norm > 1e-14) acc += dl * Eigen::Vector2d(std::abs(v(0)), std::abs(v(1))) / norm;
        prev = cur;
    }
    if (acc.norm() < 1e-14) throw std::runtime_error("fermi_direction: degenerate surface");
    return acc / acc.norm();
}

} // namespace ilat
