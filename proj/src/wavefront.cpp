#include "wavefront.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>
#include <thread>
#include <tuple>
#include <unordered_map>

#include "errors.hpp"

namespace sgc {

namespace {

// Covector components are taken in the null basis: the closed forward cone
// is {k_u >= 0, k_v <= 0}, the backward cone its negative, and the metric
// isomorphism swaps the components of a displacement (up to positive scale).
struct Covector {
    long long u = 0;
    long long v = 0;
};

Covector eta_flat(const GridPoint& from, const GridPoint& to) {
    return Covector{static_cast<long long>(from.v - to.v), static_cast<long long>(from.u - to.u)};
}

// Forward null boundary ray parallel to the given null covector direction.
Covector forward_boundary_ray(const Covector& d) {
    if (d.u == 0 && d.v != 0) return Covector{0, -1};
    if (d.v == 0 && d.u != 0) return Covector{1, 0};
    throw InternalError("boundary ray of a non-null direction");
}

// One linear-variable layout for a graph (within one Wightman ray branch).
struct CovectorSystem {
    int nvars = 0;
    std::vector<int> unit_lower_bound_vars;        // lambda / mu scalars, >= 1
    std::vector<std::pair<int, int>> free_pairs;   // coincident propagator edges
    // k_u[i], k_v[i] as coefficient rows over the variables
    std::vector<std::vector<long long>> ku;
    std::vector<std::vector<long long>> kv;

    void resize_rows() {
        for (auto& r : ku) r.resize(static_cast<std::size_t>(nvars), 0);
        for (auto& r : kv) r.resize(static_cast<std::size_t>(nvars), 0);
    }
};

CovectorSystem build_system(const ImmersedGraph& g, const std::vector<int>& wightman_rays) {
    CovectorSystem sys;
    sys.ku.assign(static_cast<std::size_t>(g.vertex_count), {});
    sys.kv.assign(static_cast<std::size_t>(g.vertex_count), {});

    // First pass: assign variables.
    struct EdgeVars {
        int first = -1;
        bool free_pair = false;
    };
    std::vector<EdgeVars> vars(g.edges.size());
    std::size_t wightman_index = 0;
    std::vector<int> ray_choice(g.edges.size(), 0);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const auto& edge = g.edges[e];
        bool coinc = coincident(g.placement[static_cast<std::size_t>(edge.a)],
                                g.placement[static_cast<std::size_t>(edge.b)]);
        if (edge.rule == EdgeRule::Wightman) {
            vars[e].first = sys.nvars++;
            sys.unit_lower_bound_vars.push_back(vars[e].first);
            if (coinc) ray_choice[e] = wightman_rays.at(wightman_index++);
        } else if (coinc) {
            vars[e].first = sys.nvars;
            vars[e].free_pair = true;
            sys.free_pairs.emplace_back(sys.nvars, sys.nvars + 1);
            sys.nvars += 2;
        } else {
            vars[e].first = sys.nvars++;
            sys.unit_lower_bound_vars.push_back(vars[e].first);
        }
    }
    sys.resize_rows();

    // Second pass: accumulate contributions, + at the source, - at the target.
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const auto& edge = g.edges[e];
        const GridPoint& pa = g.placement[static_cast<std::size_t>(edge.a)];
        const GridPoint& pb = g.placement[static_cast<std::size_t>(edge.b)];
        bool coinc = coincident(pa, pb);
        int source = edge.a;
        int target = edge.b;
        Covector du{0, 0}, dv{0, 0};  // contribution of each variable of the edge
        int v0 = vars[e].first;
        if (edge.rule == EdgeRule::Wightman) {
            // Orientation reversed: the higher-index vertex is the source.
            source = edge.b;
            target = edge.a;
            Covector ray = coinc ? (ray_choice[e] == 0 ? Covector{1, 0} : Covector{0, -1})
                                 : forward_boundary_ray(eta_flat(pb, pa));
            du = ray;
        } else if (coinc) {
            // Free covector, one variable per component.
            du = Covector{1, 0};
            dv = Covector{0, 1};
        } else {
            Covector d = eta_flat(pa, pb);
            if (edge.rule == EdgeRule::AntiFeynman) d = Covector{-d.u, -d.v};
            du = d;
        }
        auto add = [&](int vertex, long long sign) {
            sys.ku[static_cast<std::size_t>(vertex)][static_cast<std::size_t>(v0)] += sign * du.u;
            sys.kv[static_cast<std::size_t>(vertex)][static_cast<std::size_t>(v0)] += sign * du.v;
            if (vars[e].free_pair) {
                sys.ku[static_cast<std::size_t>(vertex)][static_cast<std::size_t>(v0) + 1] +=
                    sign * dv.u;
                sys.kv[static_cast<std::size_t>(vertex)][static_cast<std::size_t>(v0) + 1] +=
                    sign * dv.v;
            }
        };
        add(source, 1);
        add(target, -1);
    }
    return sys;
}

std::size_t count_coincident_wightman(const ImmersedGraph& g) {
    std::size_t n = 0;
    for (const auto& e : g.edges)
        if (e.rule == EdgeRule::Wightman &&
            coincident(g.placement[static_cast<std::size_t>(e.a)],
                       g.placement[static_cast<std::size_t>(e.b)]))
            ++n;
    return n;
}

LinearSystem base_system(const CovectorSystem& sys, FeasibilityTarget target, int vertex_count) {
    LinearSystem ls(sys.nvars);
    std::vector<long long> unit(static_cast<std::size_t>(sys.nvars), 0);
    for (int v : sys.unit_lower_bound_vars) {
        std::vector<long long> row(static_cast<std::size_t>(sys.nvars), 0);
        row[static_cast<std::size_t>(v)] = 1;
        ls.add_ge(std::move(row), -1);  // var - 1 >= 0
    }
    for (int i = 0; i < vertex_count; ++i) {
        const auto& ku = sys.ku[static_cast<std::size_t>(i)];
        const auto& kv = sys.kv[static_cast<std::size_t>(i)];
        switch (target) {
            case FeasibilityTarget::AllZero:
                ls.add_eq(ku, 0);
                ls.add_eq(kv, 0);
                break;
            case FeasibilityTarget::AllForward: {
                ls.add_ge(ku, 0);
                std::vector<long long> neg(kv);
                for (auto& c : neg) c = -c;
                ls.add_ge(std::move(neg), 0);
                break;
            }
            case FeasibilityTarget::AllBackward: {
                std::vector<long long> neg(ku);
                for (auto& c : neg) c = -c;
                ls.add_ge(std::move(neg), 0);
                ls.add_ge(kv, 0);
                break;
            }
        }
    }
    return ls;
}

bool with_witness_row(const LinearSystem& base, const std::vector<long long>& functional,
                      bool positive) {
    LinearSystem ls = base;
    std::vector<long long> row = functional;
    if (!positive)
        for (auto& c : row) c = -c;
    ls.add_ge(std::move(row), -1);  // +-functional >= 1
    return ls.feasible();
}

// Nonzero witnesses live in the same convex relaxation, so the conjunction
// of all "this functional is somewhere nonzero" conditions reduces to the
// per-functional checks.
bool branch_feasible(const CovectorSystem& sys, FeasibilityTarget target, int vertex_count) {
    LinearSystem base = base_system(sys, target, vertex_count);
    if (!base.feasible()) return false;

    for (const auto& [var_u, var_v] : sys.free_pairs) {
        bool witness = false;
        for (int var : {var_u, var_v}) {
            std::vector<long long> f(static_cast<std::size_t>(sys.nvars), 0);
            f[static_cast<std::size_t>(var)] = 1;
            if (with_witness_row(base, f, true) || with_witness_row(base, f, false)) {
                witness = true;
                break;
            }
        }
        if (!witness) return false;
    }

    if (target != FeasibilityTarget::AllZero) {
        bool some_vertex_nonzero = false;
        for (int i = 0; i < vertex_count && !some_vertex_nonzero; ++i) {
            const auto& ku = sys.ku[static_cast<std::size_t>(i)];
            const auto& kv = sys.kv[static_cast<std::size_t>(i)];
            bool forward = target == FeasibilityTarget::AllForward;
            // Inside the cone, nonzero means strictly positive u (forward) /
            // strictly negative v, or the mirror image.
            if (with_witness_row(base, ku, forward) || with_witness_row(base, kv, !forward))
                some_vertex_nonzero = true;
        }
        if (!some_vertex_nonzero) return false;
    }
    return true;
}

}  // namespace

void ImmersedGraph::validate() const {
    if (static_cast<int>(placement.size()) != vertex_count)
        throw InvalidImmersion("placement size does not match the vertex count");
    for (const auto& e : edges) {
        if (e.a < 0 || e.b < 0 || e.a >= vertex_count || e.b >= vertex_count || e.a == e.b)
            throw InvalidImmersion("edge endpoints out of range");
        const GridPoint& pa = placement[static_cast<std::size_t>(e.a)];
        const GridPoint& pb = placement[static_cast<std::size_t>(e.b)];
        if (!coincident(pa, pb) && !null_separated(pa, pb))
            throw InvalidImmersion("edge joins points that are neither coincident nor null");
    }
}

bool ImmersedGraph::has_distinct_edge() const {
    return std::any_of(edges.begin(), edges.end(), [&](const ImmersedEdge& e) {
        return !coincident(placement[static_cast<std::size_t>(e.a)],
                           placement[static_cast<std::size_t>(e.b)]);
    });
}

bool ImmersedGraph::all_coincident_component() const { return !edges.empty() && !has_distinct_edge(); }

std::string describe_covector_system(const ImmersedGraph& g) {
    g.validate();
    std::size_t w = count_coincident_wightman(g);
    std::vector<int> rays(w, 0);
    CovectorSystem sys = build_system(g, rays);
    std::ostringstream os;
    os << "variables: " << sys.nvars << " (" << sys.unit_lower_bound_vars.size()
       << " positive scalars, " << sys.free_pairs.size() << " free nonzero covectors)\n";
    for (int i = 0; i < g.vertex_count; ++i) {
        os << "k_" << i + 1 << " = (";
        auto row = [&](const std::vector<long long>& r) {
            std::string s;
            for (std::size_t v = 0; v < r.size(); ++v) {
                if (r[v] == 0) continue;
                if (!s.empty()) s += r[v] > 0 ? " + " : " - ";
                else if (r[v] < 0)
                    s += "-";
                long long m = r[v] > 0 ? r[v] : -r[v];
                if (m != 1) s += std::to_string(m) + "*";
                s += "x" + std::to_string(v);
            }
            return s.empty() ? std::string("0") : s;
        };
        os << row(sys.ku[static_cast<std::size_t>(i)]) << ", "
           << row(sys.kv[static_cast<std::size_t>(i)]) << ")\n";
    }
    return os.str();
}

bool feasible(const ImmersedGraph& g, FeasibilityTarget target) {
    g.validate();
    // An edge-free graph carries no covectors and contributes nothing to the
    // wavefront estimate.
    if (g.edges.empty()) return false;
    std::size_t w = count_coincident_wightman(g);
    std::vector<int> rays(w, 0);
    // Every coincident Wightman edge may sit on either forward boundary ray.
    for (std::size_t branch = 0; branch < (std::size_t{1} << w); ++branch) {
        for (std::size_t i = 0; i < w; ++i) rays[i] = (branch >> i) & 1u ? 1 : 0;
        CovectorSystem sys = build_system(g, rays);
        if (branch_feasible(sys, target, g.vertex_count)) return true;
    }
    return false;
}

ImmersedGraph collapse_coincident(const ImmersedGraph& g) {
    g.validate();
    ImmersedGraph out;
    std::map<std::pair<int, int>, int> class_of_point;
    std::vector<int> vertex_class(static_cast<std::size_t>(g.vertex_count));
    for (int i = 0; i < g.vertex_count; ++i) {
        const GridPoint& p = g.placement[static_cast<std::size_t>(i)];
        auto key = std::make_pair(p.u, p.v);
        auto it = class_of_point.find(key);
        if (it == class_of_point.end()) {
            it = class_of_point.emplace(key, out.vertex_count++).first;
            out.placement.push_back(p);
        }
        vertex_class[static_cast<std::size_t>(i)] = it->second;
    }
    for (const auto& e : g.edges) {
        int ca = vertex_class[static_cast<std::size_t>(e.a)];
        int cb = vertex_class[static_cast<std::size_t>(e.b)];
        if (ca == cb) continue;  // internal covectors cancel pairwise
        ImmersedEdge edge;
        edge.a = std::min(ca, cb);
        edge.b = std::max(ca, cb);
        edge.rule = e.rule;
        out.edges.push_back(edge);
    }
    return out;
}

bool WavefrontCounterexample::operator<(const WavefrontCounterexample& o) const {
    return std::tie(n, edges, placement, target) < std::tie(o.n, o.edges, o.placement, o.target);
}

nlohmann::ordered_json WavefrontCounterexample::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["edges"] = edges;
    j["placement"] = placement;
    j["target"] = target;
    return j;
}

nlohmann::ordered_json WavefrontReport::to_json() const {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["n_max"] = n_max;
    j["window"] = window;
    j["rule"] = rule_name(rule);
    j["configurations_checked"] = configurations_checked;
    j["infeasible_count"] = infeasible_count;
    nlohmann::ordered_json cx = nlohmann::ordered_json::array();
    for (const auto& c : counterexamples) cx.push_back(c.to_json());
    j["counterexamples"] = cx;
    j["degenerate_coincident"] = {{"checked", degenerate_coincident_checked},
                                  {"all_zero_feasible", degenerate_coincident_zero_feasible}};
    j["collapse_mismatches"] = collapse_mismatches;
    return j;
}

std::string rule_name(EdgeRule rule) {
    switch (rule) {
        case EdgeRule::Feynman: return "feynman";
        case EdgeRule::AntiFeynman: return "antifeynman";
        case EdgeRule::Wightman: return "wightman";
    }
    return "?";
}

namespace {

struct GraphShape {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> order;  // placement order, each vertex adjacent to an earlier one
};

std::vector<GraphShape> connected_graphs(int n_max) {
    std::vector<GraphShape> graphs;
    for (int n = 1; n <= n_max; ++n) {
        std::vector<std::pair<int, int>> all_pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) all_pairs.emplace_back(i, j);
        std::size_t pair_count = all_pairs.size();
        for (std::size_t mask = 0; mask < (std::size_t{1} << pair_count); ++mask) {
            GraphShape shape;
            shape.n = n;
            std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
            for (std::size_t p = 0; p < pair_count; ++p) {
                if (!((mask >> p) & 1u)) continue;
                shape.edges.push_back(all_pairs[p]);
                adj[static_cast<std::size_t>(all_pairs[p].first)].push_back(all_pairs[p].second);
                adj[static_cast<std::size_t>(all_pairs[p].second)].push_back(all_pairs[p].first);
            }
            // BFS connectivity and placement order in one pass.
            std::vector<bool> seen(static_cast<std::size_t>(n), false);
            shape.order.push_back(0);
            seen[0] = true;
            for (std::size_t head = 0; head < shape.order.size(); ++head) {
                for (int next : adj[static_cast<std::size_t>(shape.order[head])]) {
                    if (!seen[static_cast<std::size_t>(next)]) {
                        seen[static_cast<std::size_t>(next)] = true;
                        shape.order.push_back(next);
                    }
                }
            }
            if (static_cast<int>(shape.order.size()) == n) graphs.push_back(std::move(shape));
        }
    }
    return graphs;
}

struct SweepTally {
    std::uint64_t checked = 0;
    std::uint64_t infeasible = 0;
    std::uint64_t degenerate_checked = 0;
    std::uint64_t degenerate_zero_feasible = 0;
    std::uint64_t collapse_mismatches = 0;
    std::vector<WavefrontCounterexample> counterexamples;

    void merge(const SweepTally& o) {
        checked += o.checked;
        infeasible += o.infeasible;
        degenerate_checked += o.degenerate_checked;
        degenerate_zero_feasible += o.degenerate_zero_feasible;
        collapse_mismatches += o.collapse_mismatches;
        counterexamples.insert(counterexamples.end(), o.counterexamples.begin(),
                               o.counterexamples.end());
    }
};

struct InstanceVerdicts {
    bool zero = false;
    bool fwd = false;
    bool bwd = false;
    bool collapse_mismatch = false;
    bool has_distinct_edge = false;
};

// All verdicts are invariant under positive rescaling of the edge
// displacements, so an instance is characterized by its vertex coincidence
// partition plus the axis and orientation of every edge. Placements sharing
// that signature share their verdicts.
std::string instance_signature(const GraphShape& shape, const std::vector<GridPoint>& placement) {
    std::string sig;
    sig.reserve(static_cast<std::size_t>(shape.n) + shape.edges.size() + 1);
    std::vector<std::pair<GridPoint, char>> classes;
    for (const auto& p : placement) {
        char id = -1;
        for (const auto& [q, c] : classes)
            if (q == p) {
                id = c;
                break;
            }
        if (id < 0) {
            id = static_cast<char>('0' + classes.size());
            classes.emplace_back(p, id);
        }
        sig.push_back(id);
    }
    sig.push_back('|');
    for (const auto& [a, b] : shape.edges) {
        const GridPoint& pa = placement[static_cast<std::size_t>(a)];
        const GridPoint& pb = placement[static_cast<std::size_t>(b)];
        if (pa == pb)
            sig.push_back('c');
        else if (pa.v == pb.v)
            sig.push_back(pa.u > pb.u ? 'U' : 'u');
        else
            sig.push_back(pa.v > pb.v ? 'V' : 'v');
    }
    return sig;
}

void process_instance(const GraphShape& shape, const std::vector<GridPoint>& placement,
                      EdgeRule rule, SweepTally& tally,
                      std::unordered_map<std::string, InstanceVerdicts>& cache) {
    tally.checked += 1;

    std::string sig = instance_signature(shape, placement);
    auto it = cache.find(sig);
    if (it == cache.end()) {
        ImmersedGraph g;
        g.vertex_count = shape.n;
        g.placement = placement;
        for (const auto& [a, b] : shape.edges) g.edges.push_back(ImmersedEdge{a, b, rule});

        InstanceVerdicts v;
        v.zero = feasible(g, FeasibilityTarget::AllZero);
        v.fwd = feasible(g, FeasibilityTarget::AllForward);
        v.bwd = feasible(g, FeasibilityTarget::AllBackward);
        v.has_distinct_edge = g.has_distinct_edge();
        if (rule != EdgeRule::Wightman && v.has_distinct_edge) {
            bool zero_collapsed = feasible(collapse_coincident(g), FeasibilityTarget::AllZero);
            v.collapse_mismatch = zero_collapsed != v.zero;
        }
        it = cache.emplace(std::move(sig), v).first;
    }
    const InstanceVerdicts& v = it->second;

    auto record = [&](const char* target) {
        WavefrontCounterexample c;
        c.n = shape.n;
        c.edges = shape.edges;
        for (const auto& p : placement) c.placement.emplace_back(p.u, p.v);
        c.target = target;
        tally.counterexamples.push_back(std::move(c));
    };

    if (rule == EdgeRule::Wightman) {
        if (!v.zero && !v.fwd && !v.bwd) tally.infeasible += 1;
        return;
    }

    bool bad = false;
    if (v.fwd) {
        record("all_forward");
        bad = true;
    }
    if (v.bwd) {
        record("all_backward");
        bad = true;
    }
    if (v.has_distinct_edge) {
        if (v.zero) {
            record("all_zero");
            bad = true;
        }
        if (v.collapse_mismatch) {
            record("collapse_mismatch");
            tally.collapse_mismatches += 1;
            bad = true;
        }
    } else if (!shape.edges.empty()) {
        tally.degenerate_checked += 1;
        if (v.zero) tally.degenerate_zero_feasible += 1;
    }
    if (!bad) tally.infeasible += 1;
}

void sweep_graph(const GraphShape& shape, int window, EdgeRule rule, SweepTally& tally) {
    std::unordered_map<std::string, InstanceVerdicts> cache;
    std::vector<GridPoint> placement(static_cast<std::size_t>(shape.n));
    std::vector<std::vector<int>> placed_neighbors(static_cast<std::size_t>(shape.n));
    std::vector<bool> placed(static_cast<std::size_t>(shape.n), false);
    // Neighbors of each vertex that come earlier in the placement order.
    {
        std::vector<std::vector<int>> adj(static_cast<std::size_t>(shape.n));
        for (const auto& [a, b] : shape.edges) {
            adj[static_cast<std::size_t>(a)].push_back(b);
            adj[static_cast<std::size_t>(b)].push_back(a);
        }
        std::vector<int> rank(static_cast<std::size_t>(shape.n));
        for (std::size_t i = 0; i < shape.order.size(); ++i)
            rank[static_cast<std::size_t>(shape.order[i])] = static_cast<int>(i);
        for (int v = 0; v < shape.n; ++v)
            for (int u : adj[static_cast<std::size_t>(v)])
                if (rank[static_cast<std::size_t>(u)] < rank[static_cast<std::size_t>(v)])
                    placed_neighbors[static_cast<std::size_t>(v)].push_back(u);
    }

    auto rec = [&](auto&& self, std::size_t depth) -> void {
        if (depth == shape.order.size()) {
            int min_u = placement[0].u, min_v = placement[0].v;
            for (const auto& p : placement) {
                min_u = std::min(min_u, p.u);
                min_v = std::min(min_v, p.v);
            }
            if (min_u != 0 || min_v != 0) return;  // one representative per translation class
            process_instance(shape, placement, rule, tally, cache);
            return;
        }
        int v = shape.order[depth];
        for (int u = 0; u < window; ++u) {
            for (int w = 0; w < window; ++w) {
                GridPoint p{u, w};
                bool ok = true;
                for (int nb : placed_neighbors[static_cast<std::size_t>(v)]) {
                    const GridPoint& q = placement[static_cast<std::size_t>(nb)];
                    if (!coincident(p, q) && !null_separated(p, q)) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                placement[static_cast<std::size_t>(v)] = p;
                self(self, depth + 1);
            }
        }
    };
    rec(rec, 0);
}

}  // namespace

WavefrontReport enumerate_and_verify(int n_max, int window, EdgeRule rule, int workers) {
    if (n_max < 1 || n_max > 6 || window < 1 || window > 6)
        throw DomainError("sweep limits: 1 <= n_max <= 6, 1 <= window <= 6");

    std::vector<GraphShape> graphs = connected_graphs(n_max);
    if (workers <= 0)
        workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    workers = std::min<int>(workers, static_cast<int>(graphs.size()));

    std::vector<SweepTally> tallies(static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            for (;;) {
                std::size_t idx = next.fetch_add(1);
                if (idx >= graphs.size()) break;
                sweep_graph(graphs[idx], window, rule, tallies[static_cast<std::size_t>(w)]);
            }
        });
    }
    for (auto& t : pool) t.join();

    SweepTally total;
    for (const auto& t : tallies) total.merge(t);
    std::sort(total.counterexamples.begin(), total.counterexamples.end());

    WavefrontReport report;
    report.n_max = n_max;
    report.window = window;
    report.rule = rule;
    report.configurations_checked = total.checked;
    report.infeasible_count = total.infeasible;
    report.counterexamples = std::move(total.counterexamples);
    report.degenerate_coincident_checked = total.degenerate_checked;
    report.degenerate_coincident_zero_feasible = total.degenerate_zero_feasible;
    report.collapse_mismatches = total.collapse_mismatches;
    return report;
}

}  // namespace sgc
