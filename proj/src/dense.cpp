#include "ilat/dense.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <istream>
#include <sstream>
#include <stdexcept>

#ifdef ILAT_HAVE_LAPACKE
#include <cblas.h>
#include <lapacke.h>
#endif

namespace ilat {

namespace {

void check_sites(const SiteSet& sites, int n) {
    for (std::size_t i = 0; i < sites.size(); ++i) {
        if (sites[i] < 0 || sites[i] >= n)
            throw std::invalid_argument("site id " + std::to_string(sites[i]) +
                                        " outside 0.." + std::to_string(n - 1));
        if (i > 0 && sites[i] <= sites[i - 1])
            throw std::invalid_argument("site set not sorted/unique");
    }
}

SiteSet sorted_sites(SiteSet s) {
    std::sort(s.begin(), s.end());
    return s;
}

// Extract the bits of `index` at positions `sites` into a packed integer.
inline std::uint64_t gather_bits(std::uint64_t index, const SiteSet& sites) {
    std::uint64_t out = 0;
    for (std::size_t k = 0; k < sites.size(); ++k)
        out |= ((index >> sites[k]) & 1u) << k;
    return out;
}

std::uint64_t bytes_fingerprint(const void* data, std::size_t n) {
    Fnv f;
    f.add(data, n);
    return f.h;
}

} // namespace

PauliString PauliString::parse(const std::string& s) {
    PauliString p;
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        if (s[i] == '-') p.phase = 2;
        ++i;
    }
    int q = 0;
    for (; i < s.size(); ++i, ++q) {
        if (q >= 64) throw std::invalid_argument("pauli string longer than 64 qubits");
        switch (s[i]) {
            case 'I': break;
            case 'X': p.x |= 1ull << q; break;
            case 'Z': p.z |= 1ull << q; break;
            case 'Y':
                p.x |= 1ull << q;
                p.z |= 1ull << q;
                p.phase = (p.phase + 1) % 4; // Y = i XZ
                break;
            default:
                throw std::invalid_argument(std::string("bad pauli character '") + s[i] + "'");
        }
    }
    p.n_qubits = q;
    return p;
}

std::string PauliString::to_string() const {
    std::string out;
    int ph = phase;
    for (int q = 0; q < n_qubits; ++q) {
        bool bx = (x >> q) & 1, bz = (z >> q) & 1;
        if (bx && bz) {
            out += 'Y';
            ph = (ph + 3) % 4;
        } else if (bx)
            out += 'X';
        else if (bz)
            out += 'Z';
        else
            out += 'I';
    }
    static const char* pre[4] = {"+", "+i", "-", "-i"};
    return pre[ph % 4] + out;
}

bool PauliString::commutes_with(const PauliString& o) const {
    int anti = std::popcount(x & o.z) + std::popcount(z & o.x);
    return (anti & 1) == 0;
}

void PauliString::apply(VectorXc& psi) const {
    const std::uint64_t dim = static_cast<std::uint64_t>(psi.size());
    static const Complex iq[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    VectorXc out(psi.size());
    for (std::uint64_t b = 0; b < dim; ++b) {
        int ph = (phase + 2 * std::popcount(z & b)) % 4;
        out[b ^ x] = iq[ph] * psi[b];
    }
    psi.swap(out);
}

DenseState DenseState::from_vector(VectorXc psi) {
    auto dim = static_cast<std::uint64_t>(psi.size());
    if (dim == 0 || (dim & (dim - 1)) != 0)
        throw std::invalid_argument("state vector length must be a power of two");
    double nrm = psi.norm();
    if (std::abs(nrm - 1.0) > 1e-9) {
        if (nrm < 1e-12) throw std::invalid_argument("zero state vector");
        psi /= nrm;
    }
    DenseState s;
    s.n_qubits_ = std::countr_zero(dim);
    s.pure_ = true;
    s.psi_ = std::move(psi);
    s.fingerprint_ = bytes_fingerprint(s.psi_.data(), dim * sizeof(Complex));
    return s;
}

DenseState DenseState::from_density_matrix(MatrixXc rho) {
    auto dim = static_cast<std::uint64_t>(rho.rows());
    if (rho.cols() != rho.rows() || dim == 0 || (dim & (dim - 1)) != 0)
        throw std::invalid_argument("density matrix must be square with power-of-two size");
    if (std::abs(rho.trace().real() - 1.0) > 1e-9 || std::abs(rho.trace().imag()) > 1e-9)
        throw std::invalid_argument("density matrix trace != 1");
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-9)
        throw std::invalid_argument("density matrix not Hermitian");
    DenseState s;
    s.n_qubits_ = std::countr_zero(dim);
    s.pure_ = false;
    s.rho_ = std::move(rho);
    s.fingerprint_ = bytes_fingerprint(s.rho_.data(), dim * dim * sizeof(Complex));
    return s;
}

DenseState DenseState::computational_basis(int n_qubits, std::uint64_t bits) {
    VectorXc psi = VectorXc::Zero(1ll << n_qubits);
    psi[bits] = 1.0;
    return from_vector(std::move(psi));
}

DenseState DenseState::plus_state(int n_qubits) {
    std::uint64_t dim = 1ull << n_qubits;
    VectorXc psi = VectorXc::Constant(dim, Complex(1.0 / std::sqrt(double(dim)), 0));
    return from_vector(std::move(psi));
}

const VectorXc& DenseState::vector() const {
    if (!pure_) throw std::logic_error("state is a density matrix, not a vector");
    return psi_;
}

const MatrixXc& DenseState::density_matrix() const {
    if (pure_) throw std::logic_error("state is a vector; no density matrix stored");
    return rho_;
}

namespace {

// rho_A = M M^dag where M(a, b) = psi[interleave(a on A, b on complement)].
MatrixXc pure_reduced(const VectorXc& psi, int n, const SiteSet& keep) {
    SiteSet rest;
    rest.reserve(n - keep.size());
    for (int q = 0; q < n; ++q)
        if (!std::binary_search(keep.begin(), keep.end(), q)) rest.push_back(q);

    const std::uint64_t da = 1ull << keep.size(), db = 1ull << rest.size();
    MatrixXc m(da, db);
    const std::uint64_t dim = da * db;
    for (std::uint64_t i = 0; i < dim; ++i)
        m(gather_bits(i, keep), gather_bits(i, rest)) = psi[i];

#ifdef ILAT_HAVE_LAPACKE
    if (da >= 512) {
        MatrixXc rho = MatrixXc::Zero(da, da);
        cblas_zherk(CblasColMajor, CblasLower, CblasNoTrans, static_cast<int>(da),
                    static_cast<int>(db), 1.0, m.data(), static_cast<int>(da), 0.0,
                    rho.data(), static_cast<int>(da));
        MatrixXc full = rho.selfadjointView<Eigen::Lower>();
        return full;
    }
#endif
    return m * m.adjoint();
}

MatrixXc mixed_reduced(const MatrixXc& rho, int n, const SiteSet& keep) {
    SiteSet rest;
    for (int q = 0; q < n; ++q)
        if (!std::binary_search(keep.begin(), keep.end(), q)) rest.push_back(q);

    const std::uint64_t da = 1ull << keep.size(), db = 1ull << rest.size();
    // Scatter maps from packed subsystem indices back to full basis indices.
    auto scatter = [](std::uint64_t packed, const SiteSet& sites) {
        std::uint64_t out = 0;
        for (std::size_t k = 0; k < sites.size(); ++k)
            out |= ((packed >> k) & 1u) << sites[k];
        return out;
    };
    MatrixXc out = MatrixXc::Zero(da, da);
    for (std::uint64_t a = 0; a < da; ++a)
        for (std::uint64_t ap = 0; ap < da; ++ap) {
            Complex acc = 0;
            for (std::uint64_t b = 0; b < db; ++b) {
                std::uint64_t ib = scatter(b, rest);
                acc += rho(scatter(a, keep) | ib, scatter(ap, keep) | ib);
            }
            out(a, ap) = acc;
        }
    return out;
}

} // namespace

MatrixXc reduced_density_matrix(const DenseState& state, const SiteSet& sites,
                                const DenseLimits& limits) {
    SiteSet keep = sorted_sites(sites);
    check_sites(keep, state.n_qubits());
    if (static_cast<int>(keep.size()) > limits.max_reduced_qubits)
        throw std::runtime_error("reduced density matrix over " + std::to_string(keep.size()) +
                                 " qubits exceeds limit " +
                                 std::to_string(limits.max_reduced_qubits));
    if (state.is_pure()) return pure_reduced(state.vector(), state.n_qubits(), keep);
    return mixed_reduced(state.density_matrix(), state.n_qubits(), keep);
}

double entropy_bits(const Eigen::VectorXd& eigenvalues, double clip) {
    double s = 0;
    for (double v : eigenvalues) {
        if (v < -1e-10)
            throw std::runtime_error("negative eigenvalue " + std::to_string(v) +
                                     " in density matrix spectrum");
        if (v > clip) s -= v * std::log2(v);
    }
    return s;
}

Eigen::VectorXd hermitian_eigenvalues(const MatrixXc& m) {
#ifdef ILAT_HAVE_LAPACKE
    if (m.rows() >= 256) {
        MatrixXc a = m;
        Eigen::VectorXd w(m.rows());
        int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, 'N', 'L', static_cast<int>(a.rows()),
                                  reinterpret_cast<lapack_complex_double*>(a.data()),
                                  static_cast<int>(a.rows()), w.data());
        if (info != 0) throw std::runtime_error("zheevd failed, info=" + std::to_string(info));
        return w;
    }
#endif
    Eigen::SelfAdjointEigenSolver<MatrixXc> es(m, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw std::runtime_error("eigensolve failed");
    return es.eigenvalues();
}

double subsystem_information(const DenseState& state, const SiteSet& sites,
                             const DenseLimits& limits) {
    SiteSet keep = sorted_sites(sites);
    check_sites(keep, state.n_qubits());
    if (keep.empty()) return 0.0;
    const int n = state.n_qubits();
    const int na = static_cast<int>(keep.size());

    SiteSet trace_side = keep;
    if (state.is_pure() && 2 * na > n) {
        trace_side.clear();
        for (int q = 0; q < n; ++q)
            if (!std::binary_search(keep.begin(), keep.end(), q)) trace_side.push_back(q);
    }
    MatrixXc rho = reduced_density_matrix(state, trace_side, limits);
    return na - entropy_bits(hermitian_eigenvalues(rho));
}

DenseState prepare_stabilizer_projected(const DenseState& state,
                                        const std::vector<PauliString>& generators,
                                        const std::vector<int>& signs) {
    if (!state.is_pure())
        throw std::invalid_argument("stabilizer projection needs a pure seed state");
    if (signs.size() != generators.size())
        throw std::invalid_argument("sign count does not match generator count");
    for (std::size_t i = 0; i < generators.size(); ++i)
        for (std::size_t j = i + 1; j < generators.size(); ++j)
            if (!generators[i].commutes_with(generators[j]))
                throw std::invalid_argument("generators " + std::to_string(i) + " and " +
                                            std::to_string(j) + " anticommute");

    VectorXc psi = state.vector();
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (signs[i] != 1 && signs[i] != -1)
            throw std::invalid_argument("stabilizer sign must be +1 or -1");
        VectorXc gpsi = psi;
        generators[i].apply(gpsi);
        psi = 0.5 * (psi + double(signs[i]) * gpsi);
        if (psi.norm() < 1e-12)
            throw std::runtime_error("projection onto generator " + std::to_string(i) +
                                     " annihilates the state");
    }
    return DenseState::from_vector(std::move(psi));
}

FactorizedDenseBackend::FactorizedDenseBackend(int total_sites, std::vector<Factor> factors)
    : total_sites_(total_sites), factors_(std::move(factors)) {
    std::vector<char> seen(total_sites, 0);
    Fnv f;
    f.add_pod(total_sites);
    for (const auto& fac : factors_) {
        if (static_cast<int>(fac.sites.size()) != fac.state.n_qubits())
            throw std::invalid_argument("factor site count does not match its qubit count");
        for (int s : fac.sites) {
            if (s < 0 || s >= total_sites || seen[s])
                throw std::invalid_argument("factor sites overlap or leave the lattice");
            seen[s] = 1;
            f.add_pod(s);
        }
        f.add_pod(fac.state.fingerprint());
    }
    fingerprint_ = f.h;
}

double FactorizedDenseBackend::information(const SiteSet& sites) const {
    SiteSet a = sorted_sites(sites);
    check_sites(a, total_sites_);
    double info = static_cast<double>(a.size()); // free sites are product states
    for (const auto& fac : factors_) {
        SiteSet local;
        for (std::size_t k = 0; k < fac.sites.size(); ++k)
            if (std::binary_search(a.begin(), a.end(), fac.sites[k]))
                local.push_back(static_cast<int>(k));
        if (local.empty()) continue;
        info -= static_cast<double>(local.size());
        info += subsystem_information(fac.state, local);
    }
    return info;
}

CatStateBackend::CatStateBackend(int total_sites, double phi)
    : total_sites_(total_sites), phi_(phi) {
    Fnv f;
    f.add_pod(total_sites);
    f.add_pod(phi);
    f.add(std::string("cat"));
    fingerprint_ = f.h;
}

double CatStateBackend::information(const SiteSet& sites) const {
    SiteSet a = sorted_sites(sites);
    check_sites(a, total_sites_);
    if (a.empty()) return 0.0;
    if (static_cast<int>(a.size()) == total_sites_) return total_sites_;
    return static_cast<double>(a.size()) - 1.0; // S(A) = 1 bit, phase-independent
}

DenseState dense_state_from_amplitude_text(std::istream& in, int n_qubits) {
    VectorXc psi = VectorXc::Zero(1ll << n_qubits);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::uint64_t idx;
        double re, im;
        if (!(ls >> idx >> re >> im))
            throw std::runtime_error("bad amplitude line: " + line);
        if (idx >= static_cast<std::uint64_t>(psi.size()))
            throw std::runtime_error("amplitude index " + std::to_string(idx) +
                                     " out of range");
        psi[idx] = Complex(re, im);
    }
    return DenseState::from_vector(std::move(psi));
}

} // namespace ilat
