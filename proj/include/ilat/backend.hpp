#pragma once

#include <cstdint>
#include <string>

#include "ilat/subsystem.hpp"

namespace ilat {

// FNV-1a, used to fingerprint backend configurations.
struct Fnv {
    std::uint64_t h = 1469598103934665603ULL;
    void add(const void* data, std::size_t n) {
        auto* p = static_cast<const unsigned char*>(data);
        for (std::size_t i = 0; i < n; ++i) {
            h ^= p[i];
            h *= 1099511628211ULL;
        }
    }
    void add(const std::string& s) { add(s.data(), s.size()); }
    template <typename T> void add_pod(const T& v) { add(&v, sizeof(v)); }
};

/// A backend evaluates the von Neumann information (in bits) of an
/// arbitrary site set of an immutable state. Evaluations for distinct
/// site sets are pure functions and safe to run concurrently.
class EntropyBackend {
  public:
    virtual ~EntropyBackend() = default;
    virtual double information(const SiteSet& sites) const = 0;
    virtual int total_sites() const = 0;
    virtual std::uint64_t fingerprint() const = 0;
    virtual std::string name() const = 0;
};

} // namespace ilat
