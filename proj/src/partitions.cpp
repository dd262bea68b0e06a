#include "partitions.hpp"

#include <algorithm>

namespace sgc {

namespace {

void search(int index, int count_left, int weight_left, PartitionSolution& current,
            std::vector<PartitionSolution>& out) {
    if (index == 0) {
        if (weight_left != 0) return;
        current[0] = count_left;
        out.push_back(current);
        return;
    }
    int vmax = std::min(count_left, weight_left / index);
    for (int v = vmax; v >= 0; --v) {
        current[static_cast<std::size_t>(index)] = v;
        search(index - 1, count_left - v, weight_left - v * index, current, out);
    }
}

}  // namespace

std::vector<PartitionSolution> enumerate_partitions(const PartitionConstraint& c) {
    std::vector<PartitionSolution> out;
    if (c.max_index < 0 || c.count_sum < 0 || c.weight_sum < 0) return out;
    PartitionSolution current(static_cast<std::size_t>(c.max_index) + 1, 0);
    search(c.max_index, c.count_sum, c.weight_sum, current, out);
    return out;
}

std::vector<PartitionSolution> enumerate_partitions_brute_force(const PartitionConstraint& c) {
    std::vector<PartitionSolution> out;
    if (c.max_index < 0 || c.count_sum < 0 || c.weight_sum < 0) return out;
    PartitionSolution current(static_cast<std::size_t>(c.max_index) + 1, 0);
    // Compositions of count_sum into R+1 parts, filtered on the weight.
    auto rec = [&](auto&& self, int index, int count_left) -> void {
        if (index == c.max_index) {
            current[static_cast<std::size_t>(index)] = count_left;
            long w = 0;
            for (int i = 0; i <= c.max_index; ++i)
                w += static_cast<long>(i) * current[static_cast<std::size_t>(i)];
            if (w == c.weight_sum) out.push_back(current);
            return;
        }
        for (int v = 0; v <= count_left; ++v) {
            current[static_cast<std::size_t>(index)] = v;
            self(self, index + 1, count_left - v);
        }
    };
    rec(rec, 0, c.count_sum);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace sgc
