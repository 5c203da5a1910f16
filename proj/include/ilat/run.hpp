#pragma once

#include <memory>
#include <optional>
#include <string>

#include "ilat/backend.hpp"
#include "ilat/io.hpp"
#include "ilat/subsystem.hpp"

namespace ilat {

/// Backend + geometry + subsystem plan assembled from a run config.
struct ModelBundle {
    std::unique_ptr<EntropyBackend> backend;
    RectGeometry geometry;
    SubsystemPlan plan;
    std::string kind;
};

SubsystemIndex parse_region(const std::string& s, const std::string& what);

/// Builds the [model] section (and applies any [plan] section) of a config.
/// Invalid parameters raise ConfigError.
ModelBundle build_model(const Config& cfg,
                        std::optional<std::uint64_t> seed_override = std::nullopt);

/// Dense reference backend for `oracle` runs: exact diagonalization for the
/// free-fermion models, projector preparation for stabilizer models. Throws
/// ConfigError when the system is too large or the model has no dense route.
std::unique_ptr<EntropyBackend> build_dense_reference(const Config& cfg);

} // namespace ilat
