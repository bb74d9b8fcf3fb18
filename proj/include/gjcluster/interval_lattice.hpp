#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gjcluster/base.hpp"

namespace gjc {

// A nonempty list of nonempty integer intervals, each (lo, hi) standing for
// {lo, ..., hi}. Construction validates and shifts the family so that the
// minimum of the union is 1.
struct IntervalFamily {
    std::vector<std::pair<std::int64_t, std::int64_t>> intervals;

    static IntervalFamily from_intervals(
        std::vector<std::pair<std::int64_t, std::int64_t>> intervals);
};

// The lattice of all unions of subfamilies (including the empty union),
// ordered by inclusion. Elements are stored canonically: ascending by set
// size, deterministic within a size. Internally each element is a bitmask
// over the elementary segments of the family, so the element count is capped
// at 2^(number of distinct intervals).
class UnionLattice {
public:
    static constexpr std::size_t kDefaultMaxIntervals = 16;

    // Throws LimitError when the family has more distinct intervals than
    // max_intervals.
    static UnionLattice build(const IntervalFamily& fam,
                              std::size_t max_intervals = kDefaultMaxIntervals);

    std::size_t size() const noexcept { return masks_.size(); }
    std::size_t bottom() const noexcept { return 0; }  // the empty set
    std::size_t top() const noexcept { return top_; }
    bool leq(std::size_t x, std::size_t y) const {
        return (masks_[x] & ~masks_[y]) == 0;
    }
    const std::vector<std::size_t>& atoms() const noexcept { return atoms_; }
    // The element as an explicit sorted set of integers.
    std::vector<std::int64_t> element(std::size_t idx) const;
    std::optional<std::size_t> find_element(const std::vector<std::int64_t>& set) const;

    // mu(x, y) for a comparable pair; throws std::invalid_argument otherwise.
    friend long long mobius_recursive(const UnionLattice& lat, std::size_t x, std::size_t y);
    // mu(x, y) for every y, by the interval recursion; entries with
    // leq(x, y) false are 0.
    friend std::vector<long long> mobius_row(const UnionLattice& lat, std::size_t x);
    // mu(bottom, y) for every y via the atom cross-cut: the signed count of
    // atom subsets whose join is y.
    friend std::vector<long long> mobius_crosscut_all(const UnionLattice& lat);
    friend long long mobius_crosscut(const UnionLattice& lat, std::size_t x);

private:
    std::vector<std::uint64_t> masks_;        // canonical order, masks_[0] == 0
    std::vector<std::int64_t> seg_lo_;        // elementary segment bounds
    std::vector<std::int64_t> seg_hi_;
    std::vector<std::size_t> atoms_;
    std::size_t top_ = 0;
};

// Evaluates mu(bottom, top) through the cluster machinery: the atoms become
// forbidden subwords of a word with all-distinct letters, and the cluster
// polynomial at t = -1 gives the answer. `applicable` is false when the
// union of the family is not a single integer interval (the construction
// needs one host word). When the atoms fail to cover the union the value is
// 0 directly (no atom subset can join to the top).
struct ClusterBridgeResult {
    bool applicable = false;
    long long value = 0;
    std::string note;
};

ClusterBridgeResult mobius_via_cluster(const IntervalFamily& fam);

// Range/consistency report across the Mobius methods.
struct GreeneReport {
    std::size_t element_count = 0;
    std::size_t pairs_checked = 0;
    bool range_ok = true;       // every checked mu(X, Y) lies in {-1, 0, 1}
    bool crosscut_ok = true;    // recursion agrees with the cross-cut on every element
    bool bridge_ok = true;      // bridge (when applicable) agrees on (bottom, top)
    long long mu_top_recursive = 0;
    long long mu_top_crosscut = 0;
    ClusterBridgeResult bridge;
    std::string detail;

    bool pass() const { return range_ok && crosscut_ok && bridge_ok; }
};

// all_pairs=false checks only the rows from the bottom element.
GreeneReport greene_check(const IntervalFamily& fam, bool all_pairs);

}  // namespace gjc
