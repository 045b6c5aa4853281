#pragma once

#include <vector>

#include "meshopt/core/crowding.hpp"
#include "meshopt/core/dominance.hpp"
#include "meshopt/core/types.hpp"

namespace meshopt {

// Bounded elitist store of mutually non-dominated solutions (the MB).
class MemoryArchive {
public:
    explicit MemoryArchive(std::size_t capacity) : capacity_(capacity) {}

    const std::vector<Solution>& solutions() const { return solutions_; }
    std::size_t capacity() const { return capacity_; }
    bool empty() const { return solutions_.empty(); }
    std::size_t size() const { return solutions_.size(); }

    // Merge the incoming front, drop dominated members, truncate by crowding.
    void update(const std::vector<Solution>& front) {
        std::vector<Solution> merged = solutions_;
        merged.insert(merged.end(), front.begin(), front.end());
        if (merged.empty()) return;
        FrontPartition partition = non_dominated_sort(merged);
        std::vector<Solution> first;
        first.reserve(partition.fronts[0].size());
        for (std::size_t i : partition.fronts[0]) first.push_back(merged[i]);
        solutions_ = truncate_by_crowding(first, capacity_);
    }

private:
    std::size_t capacity_;
    std::vector<Solution> solutions_;
};

}  // namespace meshopt
