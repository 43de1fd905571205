#include "tropdisc/matroid.hpp"

#include "tropdisc/errors.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <string>

namespace tropdisc {

namespace {

std::vector<int> mask_to_members(std::uint32_t mask) {
    std::vector<int> m;
    for (int i = 0; mask >> i; ++i)
        if (mask >> i & 1) m.push_back(i);
    return m;
}

}  // namespace

LinearMatroid::LinearMatroid(IntMatrix rows_matrix, int size_guard)
    : mat_(std::move(rows_matrix)), size_(mat_.rows()), guard_(size_guard) {
    if (size_ > 32)
        throw GroundSetTooLarge("matroid: ground set of size " + std::to_string(size_) +
                                " exceeds the 32-element representation limit");
    rank_total_ = tropdisc::rank(mat_);
}

void LinearMatroid::check_enumerable() const {
    if (size_ > guard_)
        throw GroundSetTooLarge("matroid: ground set of size " + std::to_string(size_) +
                                " exceeds the enumeration guard of " + std::to_string(guard_));
}

int LinearMatroid::rank_of_mask(std::uint32_t mask) const {
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = rank_cache_.find(mask);
        if (it != rank_cache_.end()) return it->second;
    }
    std::vector<int> rows = mask_to_members(mask);
    std::vector<int> cols(mat_.cols());
    for (int j = 0; j < mat_.cols(); ++j) cols[j] = j;
    int r = tropdisc::rank(mat_.submatrix(rows, cols));
    std::lock_guard<std::mutex> lock(cache_mutex_);
    rank_cache_.emplace(mask, r);
    return r;
}

int LinearMatroid::rank_of(const std::vector<int>& subset) const {
    std::uint32_t mask = 0;
    for (int e : subset) {
        if (e < 0 || e >= size_) throw std::out_of_range("rank_of: element out of range");
        mask |= std::uint32_t(1) << e;
    }
    return rank_of_mask(mask);
}

std::uint32_t LinearMatroid::closure_mask(std::uint32_t mask) const {
    int r = rank_of_mask(mask);
    std::uint32_t cl = mask;
    for (int e = 0; e < size_; ++e) {
        std::uint32_t bit = std::uint32_t(1) << e;
        if (mask & bit) continue;
        if (rank_of_mask(mask | bit) == r) cl |= bit;
    }
    return cl;
}

std::vector<int> LinearMatroid::closure(const std::vector<int>& subset) const {
    std::uint32_t mask = 0;
    for (int e : subset) {
        if (e < 0 || e >= size_) throw std::out_of_range("closure: element out of range");
        mask |= std::uint32_t(1) << e;
    }
    return mask_to_members(closure_mask(mask));
}

std::vector<std::vector<int>> LinearMatroid::circuits() const {
    check_enumerable();
    std::vector<std::vector<int>> out;
    // A circuit has at most rank+1 elements; enumerate small subsets and keep
    // the dependent ones whose one-element deletions are all independent.
    const std::uint64_t full = (std::uint64_t(1) << size_) - 1;
    for (std::uint64_t m = 1; m <= full; ++m) {
        std::uint32_t mask = std::uint32_t(m);
        int k = std::popcount(mask);
        if (k > rank_total_ + 1) continue;
        if (rank_of_mask(mask) == k) continue;
        bool minimal = true;
        for (int e = 0; e < size_ && minimal; ++e) {
            std::uint32_t bit = std::uint32_t(1) << e;
            if (!(mask & bit)) continue;
            if (rank_of_mask(mask & ~bit) != k - 1) minimal = false;
        }
        if (minimal) out.push_back(mask_to_members(mask));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Flat> LinearMatroid::proper_flats() const {
    check_enumerable();
    // Every flat is the closure of an independent subset; walk the
    // independent sets depth-first and close each.
    std::map<std::uint32_t, int> flats;  // mask -> rank
    auto extend = [&](auto&& self, std::uint32_t mask, int next, int r) -> void {
        std::uint32_t cl = closure_mask(mask);
        flats.emplace(cl, r);
        if (r == rank_total_) return;
        for (int e = next; e < size_; ++e) {
            std::uint32_t bit = std::uint32_t(1) << e;
            if (rank_of_mask(mask | bit) == r + 1) self(self, mask | bit, e + 1, r + 1);
        }
    };
    extend(extend, 0, 0, 0);

    std::vector<Flat> out;
    for (auto& [mask, r] : flats)
        if (r >= 1 && r <= rank_total_ - 1) out.push_back({mask_to_members(mask), r});
    std::sort(out.begin(), out.end(), [](const Flat& a, const Flat& b) {
        return std::tie(a.rank, a.members) < std::tie(b.rank, b.members);
    });
    return out;
}

std::vector<Flag> LinearMatroid::maximal_flags() const {
    std::vector<Flat> flats = proper_flats();
    std::vector<std::vector<Flat>> by_rank(std::max(rank_total_, 1));
    for (Flat& f : flats) by_rank[f.rank].push_back(f);

    std::vector<Flag> out;
    if (rank_total_ < 2) return out;
    auto is_subset = [](const std::vector<int>& a, const std::vector<int>& b) {
        return std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    Flag current;
    auto grow = [&](auto&& self, int r) -> void {
        if (r == rank_total_) {
            out.push_back(current);
            return;
        }
        for (const Flat& f : by_rank[r]) {
            if (!current.chain.empty() && !is_subset(current.chain.back().members, f.members)) continue;
            current.chain.push_back(f);
            self(self, r + 1);
            current.chain.pop_back();
        }
    };
    grow(grow, 1);
    return out;
}

std::string subset_label(const std::vector<int>& members) {
    bool digits = std::all_of(members.begin(), members.end(), [](int e) { return e + 1 <= 9; });
    std::string s;
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i && !digits) s += '.';
        s += std::to_string(members[i] + 1);
    }
    return s;
}

std::string flag_label(const Flag& flag) {
    std::string s;
    for (std::size_t i = 0; i < flag.chain.size(); ++i) {
        if (i) s += '<';
        s += subset_label(flag.chain[i].members);
    }
    return s;
}

}  // namespace tropdisc
