#include "ilat/table.hpp"

#include <map>
#include <stdexcept>

namespace ilat {

bool InformationTable::has(const SubsystemIndex& idx) const {
    if (idx.is_empty()) return true;
    return entries_.count(idx.normalized()) > 0;
}

void InformationTable::set(const SubsystemIndex& idx, double value) {
    if (idx.is_empty()) return;
    entries_[idx.normalized()] = value;
}

double InformationTable::lookup(const SubsystemIndex& idx) const {
    if (idx.is_empty()) return 0.0;
    auto it = entries_.find(idx.normalized());
    if (it == entries_.end())
        throw std::out_of_range("information table has no entry for " +
                                idx.to_string());
    return it->second;
}

void fill_table(const EntropyBackend& backend, const RectGeometry& geometry,
                const std::vector<SubsystemIndex>& indices,
                InformationTable& table, const FillOptions& opts) {
    if (table.fingerprint() == 0) table.set_fingerprint(backend.fingerprint());
    if (table.fingerprint() != backend.fingerprint())
        throw std::invalid_argument("table fingerprint does not match backend");

    // Collect the site sets that still need evaluation, deduplicated so
    // overlapping stencils never recompute an entropy.
    std::vector<SubsystemIndex> pending;
    std::map<SiteSet, double> values;
    for (const auto& idx : indices) {
        if (idx.is_empty() || table.has(idx)) continue;
        pending.push_back(idx);
        values.emplace(geometry.sites(idx), 0.0);
    }

    std::vector<std::pair<const SiteSet*, double*>> work;
    work.reserve(values.size());
    for (auto& kv : values) work.emplace_back(&kv.first, &kv.second);

    const long n = static_cast<long>(work.size());
    if (opts.parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < n; ++i)
            *work[i].second = backend.information(*work[i].first);
    } else {
        for (long i = 0; i < n; ++i)
            *work[i].second = backend.information(*work[i].first);
    }

    // Merge in canonical index order.
    for (const auto& idx : pending) table.set(idx, values.at(geometry.sites(idx)));
}

} // namespace ilat
