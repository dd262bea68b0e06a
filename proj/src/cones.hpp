#pragma once

#include <vector>

#include "errors.hpp"

namespace sgc {

// Per-slot covector constraint over a product of cotangent slots, plus
// not-everywhere constraints. Forward / Backward are the closed cones in the
// null components ({u >= 0, v <= 0} and its negative), Zero pins the slot.
enum class SlotCone { Forward, Backward, Free, Zero };

struct BlockConstraint {
    enum class Kind { NotAllZero, NotAllForward, NotAllBackward };
    Kind kind = Kind::NotAllZero;
    std::vector<int> slots;
};

struct ConeEstimate {
    std::vector<SlotCone> slots;
    std::vector<BlockConstraint> constraints;

    int slot_count() const { return static_cast<int>(slots.size()); }

    // Convenience for the common global flag.
    ConeEstimate& require_not_all_zero();
};

// Estimate for a product of two-point functions whose first l+1 arguments
// only receive and whose remaining t-l only emit: slots 0..l backward,
// l+1..t forward, not all zero.
ConeEstimate wightman_bipartite_estimate(int l, int t);

// Wavefront bound of the tensor product of the renormalized chronological
// block (slots 0..l) and anti-chronological block (slots l+1..t): the union
// of three branches (both blocks singular, only the first, only the second),
// each block excluding its all-forward and all-backward configurations.
std::vector<ConeEstimate> retarded_product_estimate(int l, int t);

// True iff no slot-wise sum of an element of a and an element of b vanishes
// identically while honoring all constraints; this is the sufficient
// criterion for the product of the two distributions. Exact decision by case
// analysis over the sign classes of the two-dimensional covector plane.
bool hormander_compose(const ConeEstimate& a, const ConeEstimate& b);

// The composition criterion for the whole union against the bipartite
// estimate at the given split.
bool retarded_times_wightman_composes(int l, int t);

}  // namespace sgc
