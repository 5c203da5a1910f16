#pragma once

#include <Eigen/Dense>

#include "ilat/dense.hpp"

namespace ilat {

/// Exact-diagonalization route for small free-fermion systems, used as the
/// independent check of the correlation-matrix backend. Mode i maps to qubit
/// i with the Jordan-Wigner convention c_i^dag = (prod_{k<i} Z_k) sigma_i^-.

/// Lowest eigenvector of sum h_ij c_i^dag c_j in the fixed-filling sector.
/// Throws when the sector ground state is degenerate within `gap_tol`.
DenseState fock_ground_state_number(const Eigen::MatrixXcd& h, int filling,
                                    double gap_tol = 1e-9);

/// Global ground state of H = 1/2 Psi^dag h_bdg Psi (same basis convention
/// as ground_state_bdg). Throws on a degenerate ground state.
DenseState fock_ground_state_bdg(const Eigen::MatrixXcd& h_bdg,
                                 double gap_tol = 1e-9);

/// Entropy backend computing *fermionic* subsystem informations of a Fock
/// state: modes are reordered (with fermionic reordering signs) so the
/// requested set is contiguous before the qubit reduced density matrix is
/// taken, which removes the Jordan-Wigner strings across gaps.
class FermionDenseBackend : public EntropyBackend {
  public:
    explicit FermionDenseBackend(DenseState state);
    double information(const SiteSet& sites) const override;
    int total_sites() const override { return state_.n_qubits(); }
    std::uint64_t fingerprint() const override { return state_.fingerprint(); }
    std::string name() const override { return "fermion-dense"; }

  private:
    DenseState state_;
};

} // namespace ilat
