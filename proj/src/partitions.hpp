#pragma once

#include <vector>

namespace sgc {

// Tuples (n_0, ..., n_R) of nonnegative integers subject to the two linear
// constraints sum n_i = count_sum and sum i * n_i = weight_sum. These index
// sets drive every closed formula of the hierarchy.
struct PartitionConstraint {
    int max_index = 0;  // R: indices run 0..R
    int count_sum = 0;
    int weight_sum = 0;
};

using PartitionSolution = std::vector<int>;

// Complete enumeration by depth-first search over indices R down to 0 with
// pruning on both constraints, trying larger counts first. The order is
// deterministic so reports are diffable.
std::vector<PartitionSolution> enumerate_partitions(const PartitionConstraint& c);

// Test oracle: enumerate weak compositions of count_sum and filter on the
// weighted constraint. Returns the same set (sorted ascending).
std::vector<PartitionSolution> enumerate_partitions_brute_force(const PartitionConstraint& c);

}  // namespace sgc
