#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "ilat/dense.hpp"
#include "ilat/gaussian.hpp"

namespace ilat {

/// Site ordering for all square-lattice models: i = y*nx + x, open boundaries.

struct AndersonSpec {
    int nx = 1, ny = 1;
    double tx = 1.0, ty = 1.0;
    double w = 0.0; // disorder width, onsite ~ U[-w/2, w/2]
    std::uint64_t seed = 0;
};

Eigen::MatrixXcd anderson_hamiltonian(const AndersonSpec& spec);

struct PipSpec {
    int nx = 1, ny = 1;
    double mu = 0.0, t = 1.0, delta = 1.0;
};

/// H = 1/2 Psi^dag H_bdg Psi in the basis Psi = (c_1..c_N, c_1^dag..c_N^dag);
/// pass the result to ground_state_bdg.
Eigen::MatrixXcd bdg_pip_hamiltonian(const PipSpec& spec);

/// 6x6 product of up-spins with singlets at (0,0)-(2,2) and (0,4)-(4,3).
FactorizedDenseBackend singlet_reference_backend();

/// Dense cat state (|0..0> + e^{i phi}|1..1>)/sqrt(2); analytic entropies are
/// in CatStateBackend, this one feeds the dense cross-check.
DenseState cat_state_dense(int n_qubits, double phi);

/// 3-qubit mixture (|000><000| + |111><111|)/2.
DenseState triangle_reference_state();

/// Arc-length-weighted average of (|v_x|, |v_y|)/|v| over the Fermi surface
/// t_x cos k_x + t_y cos k_y = 0, normalized to a unit vector.
Eigen::Vector2d fermi_direction(double tx, double ty, int samples = 10000);

} // namespace ilat
