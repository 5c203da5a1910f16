#include "ilat/fock.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <vector>

namespace ilat {

namespace {

constexpr int kMaxModes = 20;

int parity(std::uint32_t bits) { return std::popcount(bits) & 1 ? -1 : 1; }

void check_modes(int n) {
    if (n < 1 || n > kMaxModes)
        throw std::invalid_argument("fock route limited to " +
                                    std::to_string(kMaxModes) + " modes");
}

// c_j then c_i^dag on basis state m; returns 0 amplitude via `ok`
std::uint32_t hop(std::uint32_t m, int i, int j, int& sign, bool& ok) {
    ok = false;
    sign = 1;
    if (!((m >> j) & 1)) return m;
    sign *= parity(m & ((1u << j) - 1));
    m ^= 1u << j;
    if ((m >> i) & 1) return m;
    sign *= parity(m & ((1u << i) - 1));
    m |= 1u << i;
    ok = true;
    return m;
}

std::uint32_t raise_pair(std::uint32_t m, int i, int j, int& sign, bool& ok) {
    ok = false;
    sign = 1;
    if ((m >> j) & 1) return m;
    sign *= parity(m & ((1u << j) - 1));
    m |= 1u << j;
    if ((m >> i) & 1) return m;
    sign *= parity(m & ((1u << i) - 1));
    m |= 1u << i;
    ok = true;
    return m;
}

DenseState lowest_eigvec(const MatrixXc& h_many, const std::vector<std::uint32_t>& basis,
                         int n_modes, double gap_tol) {
    Eigen::SelfAdjointEigenSolver<MatrixXc> es(h_many);
    if (es.info() != Eigen::Success) throw std::runtime_error("fock eigensolve failed");
    const auto& ev = es.eigenvalues();
    if (ev.size() > 1 && ev(1) - ev(0) < gap_tol)
        throw std::runtime_error("fock ground state degenerate (gap " +
                                 std::to_string(ev(1) - ev(0)) + ")");
    VectorXc psi = VectorXc::Zero(std::size_t(1) << n_modes);
    for (Eigen::Index k = 0; k < es.eigenvectors().rows(); ++k)
        psi(basis[k]) = es.eigenvectors()(k, 0);
    // fix the global phase for reproducibility
    Eigen::Index imax;
    psi.cwiseAbs().maxCoeff(&imax);
    psi *= std::conj(psi(imax)) / std::abs(psi(imax));
    return DenseState::from_vector(std::move(psi));
}

} // namespace

DenseState fock_ground_state_number(const Eigen::MatrixXcd& h, int filling,
                                    double gap_tol) {
    const int n = static_cast<int>(h.rows());
    check_modes(n);
    if (h.cols() != n) throw std::invalid_argument("h not square");
    if (filling < 0 || filling > n) throw std::invalid_argument("filling out of range");
    std::vector<std::uint32_t> basis;
    for (std::uint32_t m = 0; m < (1u << n); ++m)
        if (std::popcount(m) == filling) basis.push_back(m);
    std::vector<int> pos(std::size_t(1) << n, -1);
    for (std::size_t k = 0; k < basis.size(); ++k) pos[basis[k]] = int(k);
    MatrixXc hm = MatrixXc::Zero(basis.size(), basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (h(i, j) == 0.0) continue;
                int sign;
                bool ok;
                std::uint32_t m2 = hop(basis[k], i, j, sign, ok);
                if (ok) hm(pos[m2], k) += double(sign) * h(i, j);
            }
    return lowest_eigvec(hm, basis, n, gap_tol);
}

DenseState fock_ground_state_bdg(const Eigen::MatrixXcd& h_bdg, double gap_tol) {
    const int dim = static_cast<int>(h_bdg.rows());
    if (h_bdg.cols() != dim || dim % 2 != 0)
        throw std::invalid_argument("BdG matrix must be square with even dimension");
    const int n = dim / 2;
    check_modes(n);
    const Eigen::MatrixXcd h = h_bdg.topLeftCorner(n, n);
    const Eigen::MatrixXcd pair = h_bdg.topRightCorner(n, n);
    std::vector<std::uint32_t> basis(std::size_t(1) << n);
    for (std::uint32_t m = 0; m < (1u << n); ++m) basis[m] = m;
    MatrixXc hm = MatrixXc::Zero(basis.size(), basis.size());
    MatrixXc raise = MatrixXc::Zero(basis.size(), basis.size());
    for (std::uint32_t m = 0; m < (1u << n); ++m)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                int sign;
                bool ok;
                if (h(i, j) != 0.0) {
                    std::uint32_t m2 = hop(m, i, j, sign, ok);
                    if (ok) hm(m2, m) += double(sign) * h(i, j);
                }
                if (pair(i, j) != 0.0) {
                    std::uint32_t m2 = raise_pair(m, i, j, sign, ok);
                    if (ok) raise(m2, m) += 0.5 * double(sign) * pair(i, j);
                }
            }
    hm += raise + raise.adjoint();
    return lowest_eigvec(hm, basis, n, gap_tol);
}

FermionDenseBackend::FermionDenseBackend(DenseState state) : state_(std::move(state)) {
    if (!state_.is_pure())
        throw std::invalid_argument("fermion-dense backend needs a pure Fock state");
    check_modes(state_.n_qubits());
}

double FermionDenseBackend::information(const SiteSet& sites) const {
    SiteSet keep = sites;
    std::sort(keep.begin(), keep.end());
    if (keep.empty()) return 0.0;
    const int n = state_.n_qubits();
    // new mode order: `keep` first, then the complement
    std::vector<int> new_pos(n, -1);
    int next = 0;
    for (int s : keep) {
        if (s < 0 || s >= n || new_pos[s] != -1)
            throw std::invalid_argument("bad site set for fermion-dense backend");
        new_pos[s] = next++;
    }
    for (int s = 0; s < n; ++s)
        if (new_pos[s] == -1) new_pos[s] = next++;

    const VectorXc& psi = state_.vector();
    VectorXc perm = VectorXc::Zero(psi.size());
    std::vector<int> occ_new;
    for (std::uint32_t m = 0; m < psi.size(); ++m) {
        if (psi(m) == Complex(0, 0)) continue;
        occ_new.clear();
        std::uint32_t m2 = 0;
        for (int s = 0; s < n; ++s)
            if ((m >> s) & 1) {
                occ_new.push_back(new_pos[s]);
                m2 |= 1u << new_pos[s];
            }
        // reordering sign: parity of inversions in the new-position sequence
        int inv = 0;
        for (std::size_t a = 0; a < occ_new.size(); ++a)
            for (std::size_t b = a + 1; b < occ_new.size(); ++b)
                if (occ_new[a] > occ_new[b]) ++inv;
        perm(m2) += (inv & 1 ? -1.0 : 1.0) * psi(m);
    }
    DenseState p = DenseState::from_vector(std::move(perm));
    SiteSet prefix(keep.size());
    for (std::size_t k = 0; k < prefix.size(); ++k) prefix[k] = int(k);
    return subsystem_information(p, prefix);
}

} // namespace ilat
