#include "ilat/stabilizer.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace ilat {

namespace {

inline bool contains_site(const SiteSet& s, int q) {
    return std::binary_search(s.begin(), s.end(), q);
}

SiteSet sorted_unique(SiteSet s, const char* what) {
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw std::invalid_argument(std::string("duplicate site in ") + what);
    return s;
}

} // namespace

PauliTerm PauliTerm::parse(const std::string& s) {
    PauliTerm p;
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        if (s[i] == '-') p.sign = -1;
        ++i;
    }
    for (int q = 0; i < s.size(); ++i, ++q) {
        switch (s[i]) {
            case 'I': break;
            case 'X': p.x_sites.push_back(q); break;
            case 'Z': p.z_sites.push_back(q); break;
            case 'Y':
                p.x_sites.push_back(q);
                p.z_sites.push_back(q);
                break;
            default:
                throw std::invalid_argument(std::string("bad pauli character '") + s[i] + "'");
        }
    }
    return p;
}

std::string PauliTerm::to_string(int n_qubits) const {
    std::string out(sign < 0 ? "-" : "+");
    for (int q = 0; q < n_qubits; ++q) {
        bool bx = contains_site(x_sites, q), bz = contains_site(z_sites, q);
        out += bx && bz ? 'Y' : bx ? 'X' : bz ? 'Z' : 'I';
    }
    return out;
}

bool PauliTerm::commutes_with(const PauliTerm& o) const {
    auto overlap = [](const SiteSet& a, const SiteSet& b) {
        std::size_t i = 0, j = 0, n = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] < b[j])
                ++i;
            else if (a[i] > b[j])
                ++j;
            else
                ++n, ++i, ++j;
        }
        return n;
    };
    return ((overlap(x_sites, o.z_sites) + overlap(z_sites, o.x_sites)) & 1) == 0;
}

PauliString PauliTerm::to_pauli_string(int n_qubits) const {
    if (n_qubits > 64) throw std::invalid_argument("dense pauli limited to 64 qubits");
    PauliString p;
    p.n_qubits = n_qubits;
    p.phase = sign < 0 ? 2 : 0;
    for (int q : x_sites) p.x |= 1ull << q;
    for (int q : z_sites) p.z |= 1ull << q;
    // a Y site is X*Z here; fold in the i per Y so signs match to_string
    for (int q : x_sites)
        if (contains_site(z_sites, q)) p.phase = (p.phase + 1) % 4;
    return p;
}

int rank_gf2(std::vector<std::vector<std::uint64_t>> rows, int n_bits) {
    const int words = (n_bits + 63) / 64;
    int rank = 0;
    for (int bit = 0; bit < n_bits && rank < static_cast<int>(rows.size()); ++bit) {
        const int w = bit / 64;
        const std::uint64_t mask = 1ull << (bit % 64);
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[r].size() >= static_cast<std::size_t>(words) && (rows[r][w] & mask)) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r)
            if (r != rank && (rows[r][w] & mask))
                for (int k = 0; k < words; ++k) rows[r][k] ^= rows[rank][k];
        ++rank;
    }
    return rank;
}

StabilizerTableau StabilizerTableau::from_generators(int n_qubits,
                                                     const std::vector<PauliTerm>& generators) {
    BuildReport report;
    StabilizerTableau tab = from_generators(n_qubits, generators, report);
    if (!report.dropped.empty())
        throw std::invalid_argument("generator " + std::to_string(report.dropped.front()) +
                                    " is GF(2)-dependent on earlier generators");
    return tab;
}

StabilizerTableau StabilizerTableau::from_generators(int n_qubits,
                                                     const std::vector<PauliTerm>& generators,
                                                     BuildReport& report) {
    StabilizerTableau tab;
    tab.n_qubits_ = n_qubits;
    tab.words_ = (n_qubits + 63) / 64;
    report.dropped.clear();

    std::vector<PauliTerm> gens;
    for (const auto& g : generators) {
        PauliTerm p = g;
        p.x_sites = sorted_unique(std::move(p.x_sites), "x part");
        p.z_sites = sorted_unique(std::move(p.z_sites), "z part");
        for (int q : p.x_sites)
            if (q < 0 || q >= n_qubits)
                throw std::invalid_argument("generator site " + std::to_string(q) +
                                            " outside 0.." + std::to_string(n_qubits - 1));
        for (int q : p.z_sites)
            if (q < 0 || q >= n_qubits)
                throw std::invalid_argument("generator site " + std::to_string(q) +
                                            " outside 0.." + std::to_string(n_qubits - 1));
        gens.push_back(std::move(p));
    }
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (!gens[i].commutes_with(gens[j]))
                throw std::invalid_argument("generators " + std::to_string(i) + " and " +
                                            std::to_string(j) + " anticommute");

    auto pack = [&](const PauliTerm& p) {
        std::vector<std::uint64_t> row(2 * tab.words_, 0);
        for (int q : p.x_sites) row[q / 64] |= 1ull << (q % 64);
        for (int q : p.z_sites) row[tab.words_ + q / 64] |= 1ull << (q % 64);
        return row;
    };

    // Keep only rows that grow the GF(2) span; later dependent rows are
    // dropped in input order.
    std::vector<std::vector<std::uint64_t>> kept;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        auto row = pack(gens[i]);
        auto trial = kept;
        trial.push_back(row);
        if (rank_gf2(trial, 2 * 64 * tab.words_) == static_cast<int>(trial.size())) {
            kept.push_back(std::move(row));
            tab.generators_.push_back(gens[i]);
        } else {
            report.dropped.push_back(static_cast<int>(i));
        }
    }
    tab.rows_ = std::move(kept);
    tab.k_ = static_cast<int>(tab.rows_.size());

    Fnv f;
    f.add_pod(n_qubits);
    for (const auto& g : tab.generators_) {
        f.add_pod(g.sign);
        for (int q : g.x_sites) f.add_pod(q);
        f.add_pod(-1);
        for (int q : g.z_sites) f.add_pod(q);
        f.add_pod(-2);
    }
    tab.fingerprint_ = f.h;
    return tab;
}

double StabilizerTableau::subsystem_information(const SiteSet& sites) const {
    SiteSet a = sorted_unique(sites, "subsystem");
    for (int q : a)
        if (q < 0 || q >= n_qubits_)
            throw std::invalid_argument("site " + std::to_string(q) + " outside 0.." +
                                        std::to_string(n_qubits_ - 1));
    if (a.empty()) return 0.0;

    SiteSet comp;
    comp.reserve(n_qubits_ - a.size());
    for (int q = 0; q < n_qubits_; ++q)
        if (!contains_site(a, q)) comp.push_back(q);

    // Stabilizers supported inside A form the kernel of restriction to the
    // complement's columns: their count is k - rank(restricted rows).
    const int nb = static_cast<int>(comp.size());
    const int cw = (2 * nb + 63) / 64;
    std::vector<std::vector<std::uint64_t>> restricted(k_,
                                                       std::vector<std::uint64_t>(cw ? cw : 1, 0));
    for (int r = 0; r < k_; ++r) {
        for (int j = 0; j < nb; ++j) {
            int q = comp[j];
            if (rows_[r][q / 64] >> (q % 64) & 1) restricted[r][j / 64] |= 1ull << (j % 64);
            int zbit = nb + j;
            if (rows_[r][words_ + q / 64] >> (q % 64) & 1)
                restricted[r][zbit / 64] |= 1ull << (zbit % 64);
        }
    }
    int s_a = k_ - rank_gf2(std::move(restricted), 2 * nb);
    return static_cast<double>(s_a);
}

void StabilizerTableau::write(std::ostream& out) const {
    for (const auto& g : generators_) out << g.to_string(n_qubits_) << '\n';
}

StabilizerTableau StabilizerTableau::read(std::istream& in, int n_qubits) {
    std::vector<PauliTerm> gens;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        gens.push_back(PauliTerm::parse(line));
    }
    return from_generators(n_qubits, gens);
}

} // namespace ilat
