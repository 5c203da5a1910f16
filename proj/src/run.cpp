#include "ilat/run.hpp"

#include <sstream>

#include "ilat/dense.hpp"
#include "ilat/fock.hpp"
#include "ilat/gaussian.hpp"
#include "ilat/models.hpp"
#include "ilat/stabilizer.hpp"
#include "ilat/toric.hpp"

namespace ilat {

namespace {

AndersonSpec anderson_spec(const Config& cfg, std::optional<std::uint64_t> seed_override) {
    AndersonSpec spec;
    spec.nx = int(cfg.get_int("model", "nx"));
    spec.ny = int(cfg.get_int("model", "ny"));
    spec.tx = cfg.get_double("model", "tx");
    spec.ty = cfg.get_double("model", "ty");
    spec.w = cfg.get_double("model", "w");
    if (spec.w > 0 && !seed_override && !cfg.has("model", "seed"))
        throw ConfigError(cfg.name() + ": model.seed is required when w > 0");
    spec.seed =
        seed_override ? *seed_override : std::uint64_t(cfg.get_int("model", "seed", 0));
    return spec;
}

PipSpec pip_spec(const Config& cfg) {
    PipSpec spec;
    spec.nx = int(cfg.get_int("model", "nx"));
    spec.ny = int(cfg.get_int("model", "ny"));
    spec.mu = cfg.get_double("model", "mu");
    spec.t = cfg.get_double("model", "t");
    spec.delta = cfg.get_double("model", "delta");
    return spec;
}

int anderson_filling(const Config& cfg, const AndersonSpec& spec) {
    return int(cfg.get_int("model", "filling", spec.nx * spec.ny / 2));
}

} // namespace

SubsystemIndex parse_region(const std::string& s, const std::string& what) {
    std::istringstream ls(s);
    SubsystemIndex r;
    if (!(ls >> r.nx >> r.ny >> r.lx >> r.ly))
        throw ConfigError(what + ": expected 'nx ny lx ly', got '" + s + "'");
    std::string extra;
    if (ls >> extra) throw ConfigError(what + ": trailing '" + extra + "'");
    return r;
}

ModelBundle build_model(const Config& cfg, std::optional<std::uint64_t> seed_override) {
    ModelBundle b;
    b.kind = cfg.get_string("model", "kind");
    try {
        if (b.kind == "anderson") {
            AndersonSpec spec = anderson_spec(cfg, seed_override);
            b.backend = std::make_unique<GaussianBackend>(ground_state_number_conserving(
                anderson_hamiltonian(spec), anderson_filling(cfg, spec)));
            b.geometry = RectGeometry::site_lattice(spec.nx, spec.ny);
        } else if (b.kind == "pip") {
            PipSpec spec = pip_spec(cfg);
            b.backend = std::make_unique<GaussianBackend>(
                ground_state_bdg(bdg_pip_hamiltonian(spec)));
            b.geometry = RectGeometry::site_lattice(spec.nx, spec.ny);
        } else if (b.kind == "singlets") {
            b.backend =
                std::make_unique<FactorizedDenseBackend>(singlet_reference_backend());
            b.geometry = RectGeometry::site_lattice(6, 6);
        } else if (b.kind == "cat") {
            const int nx = int(cfg.get_int("model", "nx"));
            const int ny = int(cfg.get_int("model", "ny"));
            b.backend =
                std::make_unique<CatStateBackend>(nx * ny, cfg.get_double("model", "phi", 0.0));
            b.geometry = RectGeometry::site_lattice(nx, ny);
        } else if (b.kind == "toric_patch") {
            ToricPatchModel model = toric_code_patch(int(cfg.get_int("model", "nx")),
                                                     int(cfg.get_int("model", "ny")));
            b.geometry = model.geometry.rect_geometry();
            b.backend = std::make_unique<StabilizerBackend>(std::move(model.tableau));
        } else if (b.kind == "toric_bulk") {
            ToricBulkModel model = toric_code_bulk_region(
                int(cfg.get_int("model", "region_nx")),
                int(cfg.get_int("model", "region_ny")),
                int(cfg.get_int("model", "margin", 2)));
            b.geometry = model.geometry.rect_geometry();
            b.plan = SubsystemPlan::in_region(model.region);
            b.backend = std::make_unique<StabilizerBackend>(std::move(model.tableau));
        } else if (b.kind == "toric_defect") {
            ToricLineDefectModel model = toric_code_line_defect_dense(
                int(cfg.get_int("model", "nx", 3)), int(cfg.get_int("model", "ny", 3)),
                {int(cfg.get_int("model", "defect_x", 1)),
                 int(cfg.get_int("model", "defect_y", 1))});
            b.geometry = model.geometry.rect_geometry();
            b.backend = std::make_unique<DenseBackend>(std::move(model.state));
        } else {
            throw ConfigError(cfg.name() + ": unknown model.kind '" + b.kind + "'");
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(cfg.name() + ": " + e.what());
    }
    if (cfg.has("plan", "kind")) {
        const std::string kind = cfg.get_string("plan", "kind");
        if (kind == "full") {
            b.plan = SubsystemPlan::full();
        } else if (kind == "region") {
            b.plan = SubsystemPlan::in_region(
                parse_region(cfg.get_string("plan", "region"), "plan.region"));
        } else if (kind == "columns") {
            b.plan = SubsystemPlan::columns(
                parse_region(cfg.get_string("plan", "region"), "plan.region"),
                cfg.get_string("plan", "axis", "x") == "y" ? Axis::Y : Axis::X);
        } else {
            throw ConfigError(cfg.name() + ": unknown plan.kind '" + kind + "'");
        }
    }
    return b;
}

std::unique_ptr<EntropyBackend> build_dense_reference(const Config& cfg) {
    const std::string kind = cfg.get_string("model", "kind");
    if (kind == "anderson") {
        AndersonSpec spec = anderson_spec(cfg, std::nullopt);
        if (spec.nx * spec.ny > 16)
            throw ConfigError(
                "oracle: system too large for the dense route; use at most 16 sites");
        return std::make_unique<FermionDenseBackend>(fock_ground_state_number(
            anderson_hamiltonian(spec), anderson_filling(cfg, spec)));
    }
    if (kind == "pip") {
        PipSpec spec = pip_spec(cfg);
        if (spec.nx * spec.ny > 16)
            throw ConfigError(
                "oracle: system too large for the dense route; use at most 16 sites");
        return std::make_unique<FermionDenseBackend>(
            fock_ground_state_bdg(bdg_pip_hamiltonian(spec)));
    }
    if (kind == "toric_patch" || kind == "toric_bulk") {
        ModelBundle model = build_model(cfg);
        const auto& tab =
            dynamic_cast<const StabilizerBackend&>(*model.backend).tableau();
        if (tab.n_qubits() > 24)
            throw ConfigError("oracle: toric patch too large for the dense route");
        std::vector<PauliString> gens;
        std::vector<int> signs;
        for (const auto& g : tab.generators()) {
            gens.push_back(g.to_pauli_string(tab.n_qubits()));
            signs.push_back(g.sign);
        }
        return std::make_unique<DenseBackend>(prepare_stabilizer_projected(
            DenseState::computational_basis(tab.n_qubits(), 0), gens, signs));
    }
    if (kind == "cat") {
        const int n = int(cfg.get_int("model", "nx")) * int(cfg.get_int("model", "ny"));
        if (n > 20) throw ConfigError("oracle: cat state too large for the dense route");
        return std::make_unique<DenseBackend>(
            cat_state_dense(n, cfg.get_double("model", "phi", 0.0)));
    }
    throw ConfigError("oracle: no dense reference for model kind '" + kind + "'");
}

} // namespace ilat
