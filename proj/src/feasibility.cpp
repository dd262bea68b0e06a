#include "feasibility.hpp"

#include <algorithm>
#include <numeric>

#include "errors.hpp"

namespace sgc {

namespace {

using Int = __int128;

struct Row {
    std::vector<Int> coeff;  // one entry per variable
    Int constant = 0;
    bool equality = false;

    bool operator==(const Row& o) const = default;
};

Int int_abs(Int v) { return v < 0 ? -v : v; }

Int int_gcd(Int a, Int b) {
    a = int_abs(a);
    b = int_abs(b);
    while (b) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

void normalize(Row& r) {
    Int g = int_abs(r.constant);
    for (Int c : r.coeff) g = int_gcd(g, c);
    if (g > 1) {
        for (Int& c : r.coeff) c /= g;
        r.constant /= g;
    }
}

bool all_zero(const Row& r) {
    return std::all_of(r.coeff.begin(), r.coeff.end(), [](Int c) { return c == 0; });
}

// r := a * x + b * y (coefficient-wise), normalized.
Row combine(const Row& x, Int a, const Row& y, Int b, bool equality) {
    Row r;
    r.equality = equality;
    r.coeff.resize(x.coeff.size());
    for (std::size_t i = 0; i < x.coeff.size(); ++i) r.coeff[i] = a * x.coeff[i] + b * y.coeff[i];
    r.constant = a * x.constant + b * y.constant;
    normalize(r);
    return r;
}

// Substitute variable v out of `row` using the equality `pivot` (pivot
// coefficient on v nonzero). Inequalities may only be scaled positively.
Row eliminate_with_equality(const Row& row, const Row& pivot, int v) {
    Int pc = pivot.coeff[static_cast<std::size_t>(v)];
    Int rc = row.coeff[static_cast<std::size_t>(v)];
    Int scale = int_abs(pc);
    Int factor = pc > 0 ? -rc : rc;
    return combine(row, scale, pivot, factor, row.equality);
}

}  // namespace

void LinearSystem::add(const LinearConstraint& c) {
    if (static_cast<int>(c.coeff.size()) != variables_)
        throw InternalError("constraint arity mismatch");
    rows_.push_back(c);
}

void LinearSystem::add_eq(std::vector<long long> coeff, long long constant) {
    add(LinearConstraint{std::move(coeff), constant, LinearConstraint::Relation::Eq});
}

void LinearSystem::add_ge(std::vector<long long> coeff, long long constant) {
    add(LinearConstraint{std::move(coeff), constant, LinearConstraint::Relation::Ge});
}

bool LinearSystem::feasible() const {
    std::vector<Row> rows;
    rows.reserve(rows_.size());
    for (const auto& c : rows_) {
        Row r;
        r.coeff.assign(c.coeff.begin(), c.coeff.end());
        r.constant = c.constant;
        r.equality = c.relation == LinearConstraint::Relation::Eq;
        normalize(r);
        rows.push_back(std::move(r));
    }

    std::vector<bool> eliminated(static_cast<std::size_t>(variables_), false);

    // Gaussian pass on the equalities.
    for (int v = 0; v < variables_; ++v) {
        int pivot = -1;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].equality && rows[i].coeff[static_cast<std::size_t>(v)] != 0) {
                pivot = static_cast<int>(i);
                break;
            }
        }
        if (pivot < 0) continue;
        Row pivot_row = rows[static_cast<std::size_t>(pivot)];
        std::vector<Row> next;
        next.reserve(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(i) == pivot) continue;
            if (rows[i].coeff[static_cast<std::size_t>(v)] == 0)
                next.push_back(rows[i]);
            else
                next.push_back(eliminate_with_equality(rows[i], pivot_row, v));
        }
        rows = std::move(next);
        eliminated[static_cast<std::size_t>(v)] = true;
    }

    // Remaining equalities with no pivot left must be trivial; keep them as a
    // pair of inequalities otherwise (cannot happen after the pass above, but
    // keep the check cheap and local).
    {
        std::vector<Row> next;
        for (auto& r : rows) {
            if (r.equality) {
                if (all_zero(r)) {
                    if (r.constant != 0) return false;
                    continue;
                }
                Row ge = r;
                ge.equality = false;
                Row le = r;
                le.equality = false;
                for (Int& c : le.coeff) c = -c;
                le.constant = -le.constant;
                next.push_back(std::move(ge));
                next.push_back(std::move(le));
            } else {
                next.push_back(std::move(r));
            }
        }
        rows = std::move(next);
    }

    // Fourier-Motzkin on the inequalities.
    for (int v = 0; v < variables_; ++v) {
        if (eliminated[static_cast<std::size_t>(v)]) continue;
        std::vector<Row> zero, pos, neg;
        for (auto& r : rows) {
            Int c = r.coeff[static_cast<std::size_t>(v)];
            if (c == 0)
                zero.push_back(std::move(r));
            else if (c > 0)
                pos.push_back(std::move(r));
            else
                neg.push_back(std::move(r));
        }
        std::vector<Row> next = std::move(zero);
        for (const auto& p : pos) {
            for (const auto& n : neg) {
                Int pc = p.coeff[static_cast<std::size_t>(v)];
                Int nc = n.coeff[static_cast<std::size_t>(v)];
                next.push_back(combine(p, -nc, n, pc, false));
            }
        }
        std::sort(next.begin(), next.end(), [](const Row& a, const Row& b) {
            if (a.coeff != b.coeff) return a.coeff < b.coeff;
            return a.constant < b.constant;
        });
        next.erase(std::unique(next.begin(), next.end()), next.end());
        rows = std::move(next);
    }

    for (const auto& r : rows) {
        if (!all_zero(r)) throw InternalError("variable survived elimination");
        if (r.constant < 0) return false;
    }
    return true;
}

}  // namespace sgc
