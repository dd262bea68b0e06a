#include "cones.hpp"

#include <array>

namespace sgc {

namespace {

// Representatives of the nine sign classes of the (u, v) covector plane.
// Cone membership is constant on each class, so a satisfying real assignment
// exists iff one over the palette does.
struct Rep {
    int u;
    int v;
};

constexpr std::array<Rep, 9> kPalette = {{{0, 0},
                                          {1, 0},
                                          {-1, 0},
                                          {0, 1},
                                          {0, -1},
                                          {1, 1},
                                          {1, -1},
                                          {-1, 1},
                                          {-1, -1}}};

bool in_forward(const Rep& r) { return r.u >= 0 && r.v <= 0; }
bool in_backward(const Rep& r) { return r.u <= 0 && r.v >= 0; }
bool is_zero(const Rep& r) { return r.u == 0 && r.v == 0; }

bool in_cone(const Rep& r, SlotCone cone) {
    switch (cone) {
        case SlotCone::Forward: return in_forward(r);
        case SlotCone::Backward: return in_backward(r);
        case SlotCone::Free: return true;
        case SlotCone::Zero: return is_zero(r);
    }
    return false;
}

Rep negated(const Rep& r) { return Rep{-r.u, -r.v}; }

bool constraint_satisfied(const BlockConstraint& c, const std::vector<Rep>& assignment,
                          bool negate) {
    for (int slot : c.slots) {
        Rep r = assignment[static_cast<std::size_t>(slot)];
        if (negate) r = negated(r);
        switch (c.kind) {
            case BlockConstraint::Kind::NotAllZero:
                if (!is_zero(r)) return true;
                break;
            case BlockConstraint::Kind::NotAllForward:
                if (!in_forward(r)) return true;
                break;
            case BlockConstraint::Kind::NotAllBackward:
                if (!in_backward(r)) return true;
                break;
        }
    }
    return false;
}

}  // namespace

ConeEstimate& ConeEstimate::require_not_all_zero() {
    BlockConstraint c;
    c.kind = BlockConstraint::Kind::NotAllZero;
    for (int i = 0; i < slot_count(); ++i) c.slots.push_back(i);
    constraints.push_back(std::move(c));
    return *this;
}

ConeEstimate wightman_bipartite_estimate(int l, int t) {
    if (l < 0 || t < l) throw DomainError("bipartite estimate requires 0 <= l <= t");
    ConeEstimate e;
    for (int i = 0; i <= t; ++i)
        e.slots.push_back(i <= l ? SlotCone::Backward : SlotCone::Forward);
    e.require_not_all_zero();
    return e;
}

std::vector<ConeEstimate> retarded_product_estimate(int l, int t) {
    if (l < 0 || t < l) throw DomainError("estimate requires 0 <= l <= t");
    std::vector<int> first_block, second_block;
    for (int i = 0; i <= l; ++i) first_block.push_back(i);
    for (int i = l + 1; i <= t; ++i) second_block.push_back(i);

    auto microlocal = [](const std::vector<int>& block) {
        std::vector<BlockConstraint> cs;
        cs.push_back({BlockConstraint::Kind::NotAllZero, block});
        cs.push_back({BlockConstraint::Kind::NotAllForward, block});
        cs.push_back({BlockConstraint::Kind::NotAllBackward, block});
        return cs;
    };

    std::vector<ConeEstimate> branches;

    // Both blocks singular.
    if (!second_block.empty()) {
        ConeEstimate both;
        both.slots.assign(static_cast<std::size_t>(t) + 1, SlotCone::Free);
        for (auto& c : microlocal(first_block)) both.constraints.push_back(c);
        for (auto& c : microlocal(second_block)) both.constraints.push_back(c);
        branches.push_back(std::move(both));
    }

    // Only the chronological block singular, the other smooth (zero covectors).
    {
        ConeEstimate first_only;
        first_only.slots.assign(static_cast<std::size_t>(t) + 1, SlotCone::Free);
        for (int i : second_block) first_only.slots[static_cast<std::size_t>(i)] = SlotCone::Zero;
        for (auto& c : microlocal(first_block)) first_only.constraints.push_back(c);
        branches.push_back(std::move(first_only));
    }

    // Only the anti-chronological block singular.
    if (!second_block.empty()) {
        ConeEstimate second_only;
        second_only.slots.assign(static_cast<std::size_t>(t) + 1, SlotCone::Free);
        for (int i : first_block) second_only.slots[static_cast<std::size_t>(i)] = SlotCone::Zero;
        for (auto& c : microlocal(second_block)) second_only.constraints.push_back(c);
        branches.push_back(std::move(second_only));
    }

    return branches;
}

bool hormander_compose(const ConeEstimate& a, const ConeEstimate& b) {
    if (a.slot_count() != b.slot_count())
        throw SlotMismatch("cone estimates over different slot counts");
    int m = a.slot_count();

    // Slot-wise admissible classes for k in a with -k in b.
    std::vector<std::vector<Rep>> admissible(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        for (const Rep& r : kPalette)
            if (in_cone(r, a.slots[static_cast<std::size_t>(i)]) &&
                in_cone(negated(r), b.slots[static_cast<std::size_t>(i)]))
                admissible[static_cast<std::size_t>(i)].push_back(r);
        if (admissible[static_cast<std::size_t>(i)].empty()) return true;  // no cancellation
    }

    // Search for an assignment meeting every block constraint of both sides;
    // finding one means a joint zero sum exists and the criterion fails.
    std::vector<Rep> assignment(static_cast<std::size_t>(m), Rep{0, 0});
    auto rec = [&](auto&& self, int slot) -> bool {
        if (slot == m) {
            for (const auto& c : a.constraints)
                if (!constraint_satisfied(c, assignment, false)) return false;
            for (const auto& c : b.constraints)
                if (!constraint_satisfied(c, assignment, true)) return false;
            return true;
        }
        for (const Rep& r : admissible[static_cast<std::size_t>(slot)]) {
            assignment[static_cast<std::size_t>(slot)] = r;
            if (self(self, slot + 1)) return true;
        }
        return false;
    };
    return !rec(rec, 0);
}

bool retarded_times_wightman_composes(int l, int t) {
    ConeEstimate bipartite = wightman_bipartite_estimate(l, t);
    for (const auto& branch : retarded_product_estimate(l, t))
        if (!hormander_compose(branch, bipartite)) return false;
    return true;
}

}  // namespace sgc
