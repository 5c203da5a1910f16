#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "ilat/backend.hpp"
#include "ilat/subsystem.hpp"

namespace ilat {

/// Free-fermion state, one mode per site. Number-conserving states carry the
/// correlation matrix C_ij = <c_i^dag c_j>; paired (BdG) states carry the
/// Majorana covariance M_ab = (i/2) <[g_a, g_b]> with g_{2j} = c_j + c_j^dag,
/// g_{2j+1} = i(c_j^dag - c_j).
class CorrelationState {
  public:
    static CorrelationState from_correlation_matrix(Eigen::MatrixXcd c);
    static CorrelationState from_majorana_covariance(Eigen::MatrixXd m);

    int n_modes() const { return n_modes_; }
    bool is_bdg() const { return bdg_; }
    const Eigen::MatrixXcd& correlation() const;
    const Eigen::MatrixXd& covariance() const;
    std::uint64_t fingerprint() const { return fingerprint_; }

    /// True when C^2 = C (resp. M^T M = 1) within tol.
    bool is_pure(double tol = 1e-8) const;

  private:
    int n_modes_ = 0;
    bool bdg_ = false;
    Eigen::MatrixXcd c_;
    Eigen::MatrixXd m_;
    std::uint64_t fingerprint_ = 0;
};

/// Fill the `filling` lowest orbitals of a Hermitian single-particle h.
/// Degenerate orbitals crossing the Fermi level are ordered by descending
/// |amplitude on mode 0|, then eigenvalue index, so runs are reproducible.
CorrelationState ground_state_number_conserving(const Eigen::MatrixXcd& h, int filling);

/// Ground state of H = 1/2 Psi^dag H_bdg Psi, basis Psi = (c_1..c_N,
/// c_1^dag..c_N^dag). Rejects spectra with |E| < zero_tol (ambiguous vacuum).
CorrelationState ground_state_bdg(const Eigen::MatrixXcd& h_bdg, double zero_tol = 1e-9);

double subsystem_information(const CorrelationState& state, const SiteSet& sites);

class GaussianBackend : public EntropyBackend {
  public:
    explicit GaussianBackend(CorrelationState state) : state_(std::move(state)) {}
    double information(const SiteSet& sites) const override {
        return subsystem_information(state_, sites);
    }
    int total_sites() const override { return state_.n_modes(); }
    std::uint64_t fingerprint() const override { return state_.fingerprint(); }
    std::string name() const override { return state_.is_bdg() ? "gaussian-bdg" : "gaussian"; }
    const CorrelationState& state() const { return state_; }

  private:
    CorrelationState state_;
};

// Plain-text matrix exchange: one row per line, complex entries as "re,im".
void write_matrix_text(std::ostream& out, const Eigen::MatrixXcd& m);
Eigen::MatrixXcd read_matrix_text(std::istream& in);

} // namespace ilat
