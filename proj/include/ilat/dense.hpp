#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ilat/backend.hpp"
#include "ilat/subsystem.hpp"

namespace ilat {

using Complex = std::complex<double>;
using VectorXc = Eigen::VectorXcd;
using MatrixXc = Eigen::MatrixXcd;

/// Pauli string over n qubits as paired bit masks plus a quarter-turn
/// phase exponent: P = i^phase * prod_q X_q^{x bit} Z_q^{z bit}.
struct PauliString {
    std::uint64_t x = 0, z = 0;
    int phase = 0; // power of i, mod 4
    int n_qubits = 0;

    /// Parse e.g. "+XIZY" or "-ZZ"; leftmost character acts on qubit 0.
    static PauliString parse(const std::string& s);
    std::string to_string() const;

    bool commutes_with(const PauliString& o) const;
    void apply(VectorXc& psi) const; // psi <- P psi, in place
};

/// Exact state over n qubits: a state vector (pure) or a density matrix.
/// Qubit q maps to bit q of the computational-basis index.
class DenseState {
  public:
    static DenseState from_vector(VectorXc psi);
    static DenseState from_density_matrix(MatrixXc rho);
    static DenseState computational_basis(int n_qubits, std::uint64_t bits);
    static DenseState plus_state(int n_qubits); // |+>^n

    int n_qubits() const { return n_qubits_; }
    bool is_pure() const { return pure_; }
    const VectorXc& vector() const;
    const MatrixXc& density_matrix() const;
    std::uint64_t fingerprint() const { return fingerprint_; }

  private:
    int n_qubits_ = 0;
    bool pure_ = true;
    VectorXc psi_;
    MatrixXc rho_;
    std::uint64_t fingerprint_ = 0;
};

struct DenseLimits {
    int max_reduced_qubits = 14;
};

/// Trace out everything but `sites` (qubit ids).
MatrixXc reduced_density_matrix(const DenseState& state, const SiteSet& sites,
                                const DenseLimits& limits = {});

/// |sites| - S(rho_sites) in bits. For pure states the smaller of the two
/// complementary reduced matrices is diagonalized.
double subsystem_information(const DenseState& state, const SiteSet& sites,
                             const DenseLimits& limits = {});

/// Applies prod (1 + s_g g)/2 and renormalizes. Rejects non-commuting
/// generator sets and sign assignments that annihilate the state.
DenseState prepare_stabilizer_projected(const DenseState& state,
                                        const std::vector<PauliString>& generators,
                                        const std::vector<int>& signs);

/// Entropy in bits from a Hermitian matrix spectrum; eigenvalues below the
/// clip threshold contribute 0, negatives beyond -1e-10 are rejected.
double entropy_bits(const Eigen::VectorXd& eigenvalues, double clip = 1e-12);

/// Eigenvalues of a Hermitian matrix (LAPACK-backed when available).
Eigen::VectorXd hermitian_eigenvalues(const MatrixXc& m);

class DenseBackend : public EntropyBackend {
  public:
    explicit DenseBackend(DenseState state, DenseLimits limits = {})
        : state_(std::move(state)), limits_(limits) {}

    double information(const SiteSet& sites) const override {
        return subsystem_information(state_, sites, limits_);
    }
    int total_sites() const override { return state_.n_qubits(); }
    std::uint64_t fingerprint() const override { return state_.fingerprint(); }
    std::string name() const override { return "dense"; }

    const DenseState& state() const { return state_; }

  private:
    DenseState state_;
    DenseLimits limits_;
};

/// Tensor product of independent dense factors (e.g. singlet pairs on an
/// otherwise product state): reduced matrices factorize, so subsystem
/// informations are sums over per-factor informations.
class FactorizedDenseBackend : public EntropyBackend {
  public:
    struct Factor {
        SiteSet sites;      // global site ids, in qubit order of the factor
        DenseState state;
    };

    FactorizedDenseBackend(int total_sites, std::vector<Factor> factors);

    double information(const SiteSet& sites) const override;
    int total_sites() const override { return total_sites_; }
    std::uint64_t fingerprint() const override { return fingerprint_; }
    std::string name() const override { return "factorized-dense"; }

  private:
    int total_sites_;
    std::vector<Factor> factors_;
    std::uint64_t fingerprint_;
};

/// Analytic entropies of the cat state (|up..up> + e^{i phi}|dn..dn>)/sqrt(2):
/// every proper subsystem has S = 1 bit, the full system is pure, and the
/// relative phase is invisible to all reduced matrices.
class CatStateBackend : public EntropyBackend {
  public:
    CatStateBackend(int total_sites, double phi);
    double information(const SiteSet& sites) const override;
    int total_sites() const override { return total_sites_; }
    std::uint64_t fingerprint() const override { return fingerprint_; }
    std::string name() const override { return "cat-analytic"; }

  private:
    int total_sites_;
    double phi_;
    std::uint64_t fingerprint_;
};

/// Import format: lines of "index re im".
DenseState dense_state_from_amplitude_text(std::istream& in, int n_qubits);

} // namespace ilat
