#pragma once

#include "tropdisc/exact.hpp"

#include <cstdint>
#include <mutex>
#include <unordered_map>
#include <vector>

namespace tropdisc {

// A flat with its rank; members sorted ascending, 0-based.
struct Flat {
    std::vector<int> members;
    int rank = 0;
    bool operator==(const Flat& o) const = default;
};

// Strictly increasing chain of proper flats, rank k at position k-1.
struct Flag {
    std::vector<Flat> chain;
};

// Linear matroid on the rows of an integer matrix. Ground set elements are
// row indices 0..rows-1; all enumeration output is sorted and deterministic.
class LinearMatroid {
public:
    // size_guard caps the ground set for the exponential enumerations
    // (circuits, flats, flags); rank and closure queries are always allowed.
    explicit LinearMatroid(IntMatrix rows_matrix, int size_guard = 24);

    int size() const { return size_; }
    int rank() const { return rank_total_; }
    const IntMatrix& matrix() const { return mat_; }

    int rank_of(const std::vector<int>& subset) const;
    std::vector<int> closure(const std::vector<int>& subset) const;

    // All minimal dependent subsets, each sorted, list lexicographic.
    std::vector<std::vector<int>> circuits() const;

    // All flats of rank 1..rank()-1, sorted by (rank, members).
    std::vector<Flat> proper_flats() const;

    // All complete flags F_1 < ... < F_{r-1} with rank(F_k) = k,
    // lexicographic by the member lists of the chain.
    std::vector<Flag> maximal_flags() const;

private:
    int rank_of_mask(std::uint32_t mask) const;
    std::uint32_t closure_mask(std::uint32_t mask) const;
    void check_enumerable() const;

    IntMatrix mat_;
    int size_ = 0;
    int rank_total_ = 0;
    int guard_ = 24;
    mutable std::unordered_map<std::uint32_t, int> rank_cache_;
    mutable std::mutex cache_mutex_;
};

// Label in the ground-set numbering of reports: 1-based indices
// concatenated when every index fits in one digit, else dot-separated.
std::string subset_label(const std::vector<int>& members);
std::string flag_label(const Flag& flag);

}  // namespace tropdisc
