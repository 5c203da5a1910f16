#include "ilat/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace ilat {

namespace {

constexpr double kNuClip = 1e-12;

double binary_entropy_bits(double nu) {
    if (nu < -1e-9 || nu > 1.0 + 1e-9)
        throw std::runtime_error("occupation " + std::to_string(nu) + " outside [0,1]");
    if (nu < kNuClip || nu > 1.0 - kNuClip) return 0.0;
    return -nu * std::log2(nu) - (1.0 - nu) * std::log2(1.0 - nu);
}

std::uint64_t matrix_fingerprint(const void* data, std::size_t bytes, const char* tag) {
    Fnv f;
    f.add(std::string(tag));
    f.add(data, bytes);
    return f.h;
}

void check_modes(const SiteSet& sites, int n) {
    for (std::size_t i = 0; i < sites.size(); ++i) {
        if (sites[i] < 0 || sites[i] >= n)
            throw std::invalid_argument("mode " + std::to_string(sites[i]) + " outside 0.." +
                                        std::to_string(n - 1));
        if (i > 0 && sites[i] <= sites[i - 1])
            throw std::invalid_argument("mode set not sorted/unique");
    }
}

} // namespace

CorrelationState CorrelationState::from_correlation_matrix(Eigen::MatrixXcd c) {
    if (c.rows() != c.cols()) throw std::invalid_argument("correlation matrix must be square");
    if ((c - c.adjoint()).cwiseAbs().maxCoeff() > 1e-9)
        throw std::invalid_argument("correlation matrix not Hermitian");
    CorrelationState s;
    s.n_modes_ = static_cast<int>(c.rows());
    s.bdg_ = false;
    s.c_ = std::move(c);
    s.fingerprint_ = matrix_fingerprint(s.c_.data(),
                                        sizeof(std::complex<double>) * s.c_.size(), "corr");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(s.c_, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-9 || es.eigenvalues().maxCoeff() > 1.0 + 1e-9)
        throw std::invalid_argument("correlation matrix eigenvalues leave [0,1]");
    return s;
}

CorrelationState CorrelationState::from_majorana_covariance(Eigen::MatrixXd m) {
    if (m.rows() != m.cols() || m.rows() % 2 != 0)
        throw std::invalid_argument("covariance must be square with even size");
    if ((m + m.transpose()).cwiseAbs().maxCoeff() > 1e-9)
        throw std::invalid_argument("covariance not antisymmetric");
    if (m.operatorNorm() > 1.0 + 1e-9)
        throw std::invalid_argument("covariance singular values exceed 1");
    CorrelationState s;
    s.n_modes_ = static_cast<int>(m.rows()) / 2;
    s.bdg_ = true;
    s.m_ = std::move(m);
    s.fingerprint_ = matrix_fingerprint(s.m_.data(), sizeof(double) * s.m_.size(), "majorana");
    return s;
}

const Eigen::MatrixXcd& CorrelationState::correlation() const {
    if (bdg_) throw std::logic_error("BdG state carries a Majorana covariance, not C");
    return c_;
}

const Eigen::MatrixXd& CorrelationState::covariance() const {
    if (!bdg_) throw std::logic_error("number-conserving state carries C, not M");
    return m_;
}

bool CorrelationState::is_pure(double tol) const {
    if (bdg_) {
        Eigen::MatrixXd r = m_.transpose() * m_;
        r.diagonal().array() -= 1.0;
        return r.cwiseAbs().maxCoeff() < tol;
    }
    return (c_ * c_ - c_).cwiseAbs().maxCoeff() < tol;
}

CorrelationState ground_state_number_conserving(const Eigen::MatrixXcd& h, int filling) {
    const int n = static_cast<int>(h.rows());
    if (h.cols() != n) throw std::invalid_argument("hamiltonian must be square");
    if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
        throw std::invalid_argument("hamiltonian not Hermitian");
    if (filling < 0 || filling > n)
        throw std::invalid_argument("filling " + std::to_string(filling) + " outside [0," +
                                    std::to_string(n) + "]");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    if (es.info() != Eigen::Success) throw std::runtime_error("eigensolve failed");
    const auto& e = es.eigenvalues();
    const auto& v = es.eigenvectors();

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    if (filling > 0 && filling < n) {
        // Reorder any degenerate block straddling the Fermi level so the
        // occupied subset is reproducible across eigensolver versions.
        const double deg_tol = 1e-9;
        double ef = e[filling - 1];
        int lo = filling - 1, hi = filling - 1;
        while (lo > 0 && std::abs(e[lo - 1] - ef) < deg_tol) --lo;
        while (hi + 1 < n && std::abs(e[hi + 1] - ef) < deg_tol) ++hi;
        if (hi > filling - 1 || lo < filling - 1) {
            std::stable_sort(order.begin() + lo, order.begin() + hi + 1, [&](int a, int b) {
                double oa = std::abs(v(0, a)), ob = std::abs(v(0, b));
                if (std::abs(oa - ob) > 1e-12) return oa > ob;
                return a < b;
            });
        }
    }

    Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(n, n);
    for (int k = 0; k < filling; ++k) {
        // C_ij = <c_i^dag c_j> = sum_occ v*_i v_j
        c += (v.col(order[k]).conjugate() * v.col(order[k]).transpose());
    }
    return CorrelationState::from_correlation_matrix(std::move(c));
}

CorrelationState ground_state_bdg(const Eigen::MatrixXcd& h_bdg, double zero_tol) {
    const int dim = static_cast<int>(h_bdg.rows());
    if (h_bdg.cols() != dim || dim % 2 != 0)
        throw std::invalid_argument("BdG matrix must be square with even size");
    const int n = dim / 2;
    if ((h_bdg - h_bdg.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
        throw std::invalid_argument("BdG matrix not Hermitian");
    // Particle-hole structure: tau_x H^* tau_x = -H.
    {
        Eigen::MatrixXcd ph(dim, dim);
        ph.topLeftCorner(n, n) = h_bdg.bottomRightCorner(n, n).conjugate();
        ph.topRightCorner(n, n) = h_bdg.bottomLeftCorner(n, n).conjugate();
        ph.bottomLeftCorner(n, n) = h_bdg.topRightCorner(n, n).conjugate();
        ph.bottomRightCorner(n, n) = h_bdg.topLeftCorner(n, n).conjugate();
        if ((ph + h_bdg).cwiseAbs().maxCoeff() > 1e-10)
            throw std::invalid_argument("BdG matrix violates particle-hole structure");
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h_bdg);
    if (es.info() != Eigen::Success) throw std::runtime_error("eigensolve failed");
    double min_abs = es.eigenvalues().cwiseAbs().minCoeff();
    if (min_abs < zero_tol)
        throw std::runtime_error("BdG spectrum has a zero mode (|E|min = " +
                                 std::to_string(min_abs) + "); ground state ambiguous");

    // Ground state = vacuum of positive-energy quasiparticles, so
    // <Psi Psi^dag> equals the projector onto the positive-energy subspace.
    Eigen::MatrixXcd p_plus = Eigen::MatrixXcd::Zero(dim, dim);
    for (int k = 0; k < dim; ++k)
        if (es.eigenvalues()[k] > 0)
            p_plus += es.eigenvectors().col(k) * es.eigenvectors().col(k).adjoint();

    // gamma = Omega Psi with gamma Hermitian, so <g g> = Omega P+ Omega^dag.
    Eigen::MatrixXcd omega = Eigen::MatrixXcd::Zero(dim, dim);
    const std::complex<double> im(0, 1);
    for (int j = 0; j < n; ++j) {
        omega(2 * j, j) = 1.0;
        omega(2 * j, n + j) = 1.0;
        omega(2 * j + 1, j) = -im;
        omega(2 * j + 1, n + j) = im;
    }
    Eigen::MatrixXcd gg = omega * p_plus * omega.adjoint();
    Eigen::MatrixXcd mc = im * (gg - Eigen::MatrixXcd::Identity(dim, dim));
    if (mc.imag().cwiseAbs().maxCoeff() > 1e-8)
        throw std::runtime_error("Majorana covariance came out complex");
    return CorrelationState::from_majorana_covariance(mc.real());
}

double subsystem_information(const CorrelationState& state, const SiteSet& sites) {
    SiteSet a = sites;
    std::sort(a.begin(), a.end());
    check_modes(a, state.n_modes());
    if (a.empty()) return 0.0;
    const int na = static_cast<int>(a.size());

    double s = 0.0;
    if (state.is_bdg()) {
        const auto& m = state.covariance();
        Eigen::MatrixXcd im_a(2 * na, 2 * na);
        const std::complex<double> im(0, 1);
        for (int r = 0; r < na; ++r)
            for (int c = 0; c < na; ++c)
                for (int dr = 0; dr < 2; ++dr)
                    for (int dc = 0; dc < 2; ++dc)
                        im_a(2 * r + dr, 2 * c + dc) = im * m(2 * a[r] + dr, 2 * a[c] + dc);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(im_a, Eigen::EigenvaluesOnly);
        // Eigenvalues come in +-nu pairs; summing h((1+l)/2) over all of them
        // counts each fermionic mode once since h(p) = h(1-p).
        for (double l : es.eigenvalues()) s += 0.5 * binary_entropy_bits((1.0 + l) / 2.0);
    } else {
        const auto& c = state.correlation();
        Eigen::MatrixXcd ca(na, na);
        for (int r = 0; r < na; ++r)
            for (int cc = 0; cc < na; ++cc) ca(r, cc) = c(a[r], a[cc]);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(ca, Eigen::EigenvaluesOnly);
        for (double nu : es.eigenvalues()) s += binary_entropy_bits(nu);
    }
    return na - s;
}

void write_matrix_text(std::ostream& out, const Eigen::MatrixXcd& m) {
    out.precision(17);
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (c) out << ' ';
            out << m(r, c).real() << ',' << m(r, c).imag();
        }
        out << '\n';
    }
}

Eigen::MatrixXcd read_matrix_text(std::istream& in) {
    std::vector<std::vector<std::complex<double>>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::vector<std::complex<double>> row;
        std::string tok;
        while (ls >> tok) {
            auto comma = tok.find(',');
            double re, imv = 0;
            try {
                if (comma == std::string::npos) {
                    re = std::stod(tok);
                } else {
                    re = std::stod(tok.substr(0, comma));
                    imv = std::stod(tok.substr(comma + 1));
                }
            } catch (const std::exception&) {
                throw std::runtime_error("bad matrix entry: " + tok);
            }
            row.emplace_back(re, imv);
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::runtime_error("empty matrix file");
    Eigen::MatrixXcd m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows[0].size())
            throw std::runtime_error("ragged matrix row " + std::to_string(r));
        for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
    }
    return m;
}

} // namespace ilat
