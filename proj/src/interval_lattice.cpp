#include "gjcluster/interval_lattice.hpp"

#include <algorithm>
#include <unordered_map>

#include "gjcluster/clusters.hpp"
#include "gjcluster/words.hpp"

namespace gjc {

namespace {

constexpr std::int64_t kMaxBridgeWordLen = 4096;

std::vector<std::pair<std::int64_t, std::int64_t>> distinct_intervals(
    const IntervalFamily& fam) {
    auto sorted = fam.intervals;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    return sorted;
}

}  // namespace

IntervalFamily IntervalFamily::from_intervals(
    std::vector<std::pair<std::int64_t, std::int64_t>> intervals) {
    if (intervals.empty())
        throw std::invalid_argument("interval family must be nonempty");
    std::int64_t min_lo = intervals.front().first;
    for (const auto& [lo, hi] : intervals) {
        if (hi < lo)
            throw std::invalid_argument("interval [" + std::to_string(lo) + ", " +
                                        std::to_string(hi) + "] is empty");
        min_lo = std::min(min_lo, lo);
    }
    const std::int64_t shift = 1 - min_lo;
    for (auto& [lo, hi] : intervals) {
        lo += shift;
        hi += shift;
    }
    return IntervalFamily{std::move(intervals)};
}

UnionLattice UnionLattice::build(const IntervalFamily& fam, std::size_t max_intervals) {
    const auto intervals = distinct_intervals(fam);
    const std::size_t m = intervals.size();
    if (m > max_intervals)
        throw LimitError("family has " + std::to_string(m) +
                         " distinct intervals; the lattice guard allows " +
                         std::to_string(max_intervals));

    UnionLattice lat;
    // Elementary segments: maximal integer runs with a constant membership
    // signature. At most 2m-1 of them, so subset unions fit in 64-bit masks.
    std::vector<std::int64_t> bounds;
    for (const auto& [lo, hi] : intervals) {
        bounds.push_back(lo);
        bounds.push_back(hi + 1);
    }
    std::sort(bounds.begin(), bounds.end());
    bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());
    std::vector<std::uint64_t> interval_masks(m, 0);
    for (std::size_t b = 0; b + 1 < bounds.size(); ++b) {
        const std::int64_t lo = bounds[b];
        const std::int64_t hi = bounds[b + 1] - 1;
        bool covered = false;
        for (std::size_t i = 0; i < m; ++i)
            if (intervals[i].first <= lo && hi <= intervals[i].second) covered = true;
        if (!covered) continue;
        const auto seg = lat.seg_lo_.size();
        lat.seg_lo_.push_back(lo);
        lat.seg_hi_.push_back(hi);
        for (std::size_t i = 0; i < m; ++i)
            if (intervals[i].first <= lo && hi <= intervals[i].second)
                interval_masks[i] |= std::uint64_t{1} << seg;
    }

    std::vector<std::uint64_t> masks;
    masks.reserve(std::size_t{1} << m);
    for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << m); ++subset) {
        std::uint64_t u = 0;
        for (std::size_t i = 0; i < m; ++i)
            if (subset & (std::uint64_t{1} << i)) u |= interval_masks[i];
        masks.push_back(u);
    }
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    // canonical order: by set size, then by segment content
    std::vector<std::pair<std::int64_t, std::uint64_t>> keyed;
    keyed.reserve(masks.size());
    for (std::uint64_t mask : masks) {
        std::int64_t w = 0;
        for (std::size_t s = 0; s < lat.seg_lo_.size(); ++s)
            if (mask & (std::uint64_t{1} << s)) w += lat.seg_hi_[s] - lat.seg_lo_[s] + 1;
        keyed.emplace_back(w, mask);
    }
    std::sort(keyed.begin(), keyed.end());
    lat.masks_.reserve(keyed.size());
    for (const auto& [w, mask] : keyed) lat.masks_.push_back(mask);

    std::uint64_t top_mask = 0;
    for (auto im : interval_masks) top_mask |= im;
    for (std::size_t i = 0; i < lat.masks_.size(); ++i)
        if (lat.masks_[i] == top_mask) lat.top_ = i;

    for (std::size_t i = 1; i < lat.masks_.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 1; j < i && minimal; ++j)
            if (lat.leq(j, i)) minimal = false;
        if (minimal) lat.atoms_.push_back(i);
    }
    return lat;
}

std::vector<std::int64_t> UnionLattice::element(std::size_t idx) const {
    std::vector<std::int64_t> out;
    for (std::size_t s = 0; s < seg_lo_.size(); ++s)
        if (masks_[idx] & (std::uint64_t{1} << s))
            for (std::int64_t v = seg_lo_[s]; v <= seg_hi_[s]; ++v) out.push_back(v);
    return out;
}

std::optional<std::size_t> UnionLattice::find_element(
    const std::vector<std::int64_t>& set) const {
    auto sorted = set;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::size_t i = 0; i < masks_.size(); ++i)
        if (element(i) == sorted) return i;
    return std::nullopt;
}

std::vector<long long> mobius_row(const UnionLattice& lat, std::size_t x) {
    const std::size_t n = lat.size();
    std::vector<long long> mu(n, 0);
    mu[x] = 1;
    // Elements are sorted by size, which refines the inclusion order.
    for (std::size_t y = x + 1; y < n; ++y) {
        if (!lat.leq(x, y)) continue;
        long long sum = 0;
        for (std::size_t z = x; z < y; ++z)
            if (mu[z] != 0 && lat.leq(z, y)) sum += mu[z];
        mu[y] = -sum;
    }
    return mu;
}

long long mobius_recursive(const UnionLattice& lat, std::size_t x, std::size_t y) {
    if (x >= lat.size() || y >= lat.size())
        throw std::invalid_argument("lattice element index out of range");
    if (!lat.leq(x, y))
        throw std::invalid_argument("mobius function is defined only for comparable pairs");
    return mobius_row(lat, x)[y];
}

std::vector<long long> mobius_crosscut_all(const UnionLattice& lat) {
    std::unordered_map<std::uint64_t, std::size_t> index;
    index.reserve(lat.masks_.size());
    for (std::size_t i = 0; i < lat.masks_.size(); ++i) index.emplace(lat.masks_[i], i);

    std::vector<long long> mu(lat.size(), 0);
    const std::size_t a = lat.atoms_.size();
    for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << a); ++subset) {
        std::uint64_t join = 0;
        int bits = 0;
        for (std::size_t i = 0; i < a; ++i)
            if (subset & (std::uint64_t{1} << i)) {
                join |= lat.masks_[lat.atoms_[i]];
                ++bits;
            }
        mu[index.at(join)] += (bits % 2 == 0) ? 1 : -1;
    }
    return mu;
}

long long mobius_crosscut(const UnionLattice& lat, std::size_t x) {
    if (x >= lat.size())
        throw std::invalid_argument("lattice element index out of range");
    return mobius_crosscut_all(lat)[x];
}

ClusterBridgeResult mobius_via_cluster(const IntervalFamily& fam) {
    const auto intervals = distinct_intervals(fam);

    std::vector<std::pair<std::int64_t, std::int64_t>> atoms;
    for (const auto& cand : intervals) {
        bool contains_smaller = false;
        for (const auto& other : intervals)
            if (other != cand && cand.first <= other.first && other.second <= cand.second)
                contains_smaller = true;
        if (!contains_smaller) atoms.push_back(cand);
    }

    // Mark the union and the atom union over the normalized ground set.
    const std::int64_t ground = std::max_element(intervals.begin(), intervals.end(),
                                                 [](const auto& a, const auto& b) {
                                                     return a.second < b.second;
                                                 })
                                    ->second;
    if (ground > kMaxBridgeWordLen) {
        ClusterBridgeResult result;
        result.applicable = false;
        result.note = "the union spans more than " + std::to_string(kMaxBridgeWordLen) +
                      " integers; the host-word construction is skipped";
        return result;
    }
    std::vector<bool> in_union(static_cast<std::size_t>(ground) + 1, false);
    std::vector<bool> in_atoms(static_cast<std::size_t>(ground) + 1, false);
    for (const auto& [lo, hi] : intervals)
        for (std::int64_t v = lo; v <= hi; ++v) in_union[static_cast<std::size_t>(v)] = true;
    for (const auto& [lo, hi] : atoms)
        for (std::int64_t v = lo; v <= hi; ++v) in_atoms[static_cast<std::size_t>(v)] = true;

    ClusterBridgeResult result;
    if (in_union != in_atoms) {
        result.applicable = true;
        result.value = 0;
        result.note = "atoms do not cover the union, so no atom subset joins to the top";
        return result;
    }
    for (std::int64_t v = 1; v <= ground; ++v)
        if (!in_union[static_cast<std::size_t>(v)]) {
            result.applicable = false;
            result.note = "the union is not a single integer interval";
            return result;
        }

    // Host word of ground+1 distinct letters; each atom {lo..hi} marks the
    // subword on letters lo..hi+1, so its blocked cuts are exactly {lo..hi}.
    const auto n = static_cast<std::size_t>(ground) + 1;
    std::vector<std::string> tokens;
    tokens.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) tokens.push_back("x" + std::to_string(i));
    AlphabetPtr alpha = Alphabet::make(std::move(tokens));
    std::vector<Letter> all_letters(n);
    for (std::size_t i = 0; i < n; ++i) all_letters[i] = static_cast<Letter>(i);
    const Word host(alpha, all_letters);

    std::vector<Word> patterns;
    patterns.reserve(atoms.size());
    for (const auto& [lo, hi] : atoms) {
        const Span span = span_from_cut_range(lo, hi + 1);
        patterns.push_back(host.subword(span.start - 1, span.pattern_len));
    }
    const ForbiddenSet forbidden(alpha, std::move(patterns));

    const BigInt value =
        cluster_polynomial(host, forbidden, ClusterPolyMethod::recurrence).eval(BigInt(-1));
    result.applicable = true;
    result.value = static_cast<long long>(value);
    result.note = "evaluated the cluster polynomial of a distinct-letter host word";
    return result;
}

GreeneReport greene_check(const IntervalFamily& fam, bool all_pairs) {
    const UnionLattice lat = UnionLattice::build(fam);
    GreeneReport report;
    report.element_count = lat.size();

    const auto check_row = [&](std::size_t x, const std::vector<long long>& row) {
        for (std::size_t y = x; y < lat.size(); ++y) {
            if (!lat.leq(x, y)) continue;
            ++report.pairs_checked;
            if (row[y] < -1 || row[y] > 1) {
                report.range_ok = false;
                if (report.detail.empty())
                    report.detail = "mu out of range at pair (" + std::to_string(x) + ", " +
                                    std::to_string(y) + ")";
            }
        }
    };

    const auto bottom_row = mobius_row(lat, lat.bottom());
    check_row(lat.bottom(), bottom_row);
    if (all_pairs)
        for (std::size_t x = 1; x < lat.size(); ++x) check_row(x, mobius_row(lat, x));

    const auto crosscut = mobius_crosscut_all(lat);
    for (std::size_t y = 0; y < lat.size(); ++y)
        if (crosscut[y] != bottom_row[y]) {
            report.crosscut_ok = false;
            if (report.detail.empty())
                report.detail = "cross-cut disagrees with the recursion at element " +
                                std::to_string(y);
        }

    report.mu_top_recursive = bottom_row[lat.top()];
    report.mu_top_crosscut = crosscut[lat.top()];
    report.bridge = mobius_via_cluster(fam);
    if (report.bridge.applicable && report.bridge.value != report.mu_top_recursive) {
        report.bridge_ok = false;
        if (report.detail.empty())
            report.detail = "cluster bridge disagrees on (bottom, top)";
    }
    return report;
}

}  // namespace gjc
