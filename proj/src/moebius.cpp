#include "ilat/moebius.hpp"

#include <algorithm>
#include <stdexcept>

namespace ilat {

void GenericFamily::validate() const {
    auto sorted = members;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("family contains duplicate members");
    for (std::size_t a = 0; a < sorted.size(); ++a)
        for (std::size_t b = a + 1; b < sorted.size(); ++b) {
            SiteSet cap = intersect_sites(sorted[a], sorted[b]);
            if (cap.empty()) continue;
            if (!std::binary_search(sorted.begin(), sorted.end(), cap))
                throw std::invalid_argument(
                    "family not intersection-closed: {" +
                    site_set_to_string(sorted[a]) + "} and {" +
                    site_set_to_string(sorted[b]) + "} meet in {" +
                    site_set_to_string(cap) + "} which is not a member");
        }
}

GenericTable generic_information_table(const EntropyBackend& backend,
                                       const GenericFamily& family) {
    GenericTable t;
    for (const auto& m : family.members) t[m] = backend.information(m);
    return t;
}

MoebiusEngine::MoebiusEngine(GenericFamily family)
    : members_(std::move(family.members)) {
    std::sort(members_.begin(), members_.end());
    GenericFamily f{members_};
    f.validate();
    subsets_of_.resize(members_.size());
    for (std::size_t i = 0; i < members_.size(); ++i)
        for (std::size_t j = 0; j < members_.size(); ++j)
            if (i != j && is_subset(members_[j], members_[i]))
                subsets_of_[i].push_back(static_cast<int>(j));
}

int MoebiusEngine::index_of(const SiteSet& s) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), s);
    if (it == members_.end() || *it != s) return -1;
    return static_cast<int>(it - members_.begin());
}

long long MoebiusEngine::mu(int sub, int super) const {
    if (sub == super) return 1;
    auto key = std::make_pair(sub, super);
    auto it = mu_.find(key);
    if (it != mu_.end()) return it->second;
    // mu(y, x) = -sum over y <= z < x of mu(y, z)
    long long acc = 1; // z = sub itself
    for (int z : subsets_of_[super])
        if (z == sub || (is_subset(members_[sub], members_[z])))
            if (z != sub) acc += mu(sub, z);
    long long v = -acc;
    mu_[key] = v;
    return v;
}

double MoebiusEngine::local_information(const GenericTable& table,
                                        const SiteSet& member) const {
    int m = index_of(member);
    if (m < 0)
        throw std::invalid_argument("{" + site_set_to_string(member) +
                                    "} is not a family member");
    auto lookup = [&](int i) {
        auto it = table.find(members_[i]);
        if (it == table.end())
            throw std::out_of_range("table has no entry for {" +
                                    site_set_to_string(members_[i]) + "}");
        return it->second;
    };
    double v = lookup(m);
    for (int d : subsets_of_[m]) v += static_cast<double>(mu(d, m)) * lookup(d);
    return v; // the empty set carries I = 0 and drops out
}

double moebius_local_information(const GenericFamily& family,
                                 const GenericTable& table,
                                 const SiteSet& member) {
    MoebiusEngine engine(family);
    return engine.local_information(table, member);
}

} // namespace ilat
