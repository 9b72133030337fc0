#include "shiftcurves/shift_graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace shiftcurves {

bool ShiftGraph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

long lex_rank(int i, int j, int m) {
    if (m < 2) throw std::invalid_argument("lex_rank: m must be >= 2");
    if (i < 1 || i >= j || j > m) throw std::invalid_argument("lex_rank: need 1 <= i < j <= m");
    return static_cast<long>(i - 1) * m - static_cast<long>(i) * (i - 1) / 2 + (j - i);
}

PairVertex lex_unrank(long r, int m) {
    if (m < 2) throw std::invalid_argument("lex_unrank: m must be >= 2");
    const long n = static_cast<long>(m) * (m - 1) / 2;
    if (r < 1 || r > n) throw std::invalid_argument("lex_unrank: rank out of range");
    long rest = r;
    for (int i = 1; i < m; ++i) {
        const long block = m - i;  // pairs (i, i+1..m)
        if (rest <= block) return {i, static_cast<int>(i + rest)};
        rest -= block;
    }
    throw std::logic_error("lex_unrank: unreachable");
}

void finalize_edges(ShiftGraph& g) {
    for (auto& e : g.edges)
        if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    g.adjacency.assign(g.vertices.size(), {});
    for (const auto& [u, v] : g.edges) {
        g.adjacency[u].push_back(v);
        g.adjacency[v].push_back(u);
    }
    for (auto& nbrs : g.adjacency) std::sort(nbrs.begin(), nbrs.end());
}

ShiftGraph build_shift_graph(int m) {
    if (m < 2) throw std::invalid_argument("build_shift_graph: m must be >= 2");
    ShiftGraph g;
    g.m = m;
    for (int i = 1; i < m; ++i)
        for (int j = i + 1; j <= m; ++j) g.vertices.push_back({i, j});
    const int n = static_cast<int>(g.vertices.size());
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const PairVertex& a = g.vertices[u];
            const PairVertex& b = g.vertices[v];
            if (a.j == b.i || b.j == a.i) g.edges.emplace_back(u, v);
        }
    }
    finalize_edges(g);
    return g;
}

bool is_triangle_free(const std::vector<std::vector<int>>& adjacency) {
    const int n = static_cast<int>(adjacency.size());
    for (int u = 0; u < n; ++u) {
        for (int v : adjacency[u]) {
            if (v <= u) continue;
            // Common neighbor of u and v closes a triangle.
            std::vector<int> common;
            std::set_intersection(adjacency[u].begin(), adjacency[u].end(),
                                  adjacency[v].begin(), adjacency[v].end(),
                                  std::back_inserter(common));
            if (!common.empty()) return false;
        }
    }
    return true;
}

bool is_triangle_free(const ShiftGraph& g) {
    return is_triangle_free(g.adjacency);
}

namespace {

void max_clique_rec(const std::vector<std::vector<int>>& adj, std::vector<int>& candidates,
                    int current, int& best) {
    if (current > best) best = current;
    while (!candidates.empty()) {
        if (current + static_cast<int>(candidates.size()) <= best) return;
        const int v = candidates.back();
        candidates.pop_back();
        std::vector<int> next;
        for (int u : candidates)
            if (std::binary_search(adj[v].begin(), adj[v].end(), u)) next.push_back(u);
        max_clique_rec(adj, next, current + 1, best);
    }
}

}  // namespace

int clique_number(const std::vector<std::vector<int>>& adjacency) {
    const int n = static_cast<int>(adjacency.size());
    if (n == 0) return 0;
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    int best = 0;
    max_clique_rec(adjacency, all, 0, best);
    return best;
}

int clique_number(const ShiftGraph& g) {
    return clique_number(g.adjacency);
}

int Coloring::count_colors() const {
    std::set<int> used(colors.begin(), colors.end());
    return static_cast<int>(used.size());
}

bool is_proper(const std::vector<std::vector<int>>& adjacency, const Coloring& c) {
    if (c.colors.size() != adjacency.size()) return false;
    for (size_t u = 0; u < adjacency.size(); ++u)
        for (int v : adjacency[u])
            if (c.colors[u] == c.colors[v]) return false;
    return true;
}

int ceil_log2(int m) {
    if (m < 1) throw std::invalid_argument("ceil_log2: m must be >= 1");
    int bits = 0;
    int v = m - 1;
    while (v > 0) {
        ++bits;
        v >>= 1;
    }
    return bits;  // ceil(log2 m) for m >= 1
}

Coloring formula_coloring(int m) {
    if (m < 2) throw std::invalid_argument("formula_coloring: m must be >= 2");
    Coloring c;
    for (int i = 1; i < m; ++i) {
        for (int j = i + 1; j <= m; ++j) {
            int diff = (i - 1) ^ (j - 1);
            int bit = 0;
            while (diff > 1) {
                diff >>= 1;
                ++bit;
            }
            c.colors.push_back(bit);
        }
    }
    return c;
}

namespace {

enum class SearchStatus { Sat, Unsat, Budget };

// DSATUR-ordered backtracking on an induced core. Colors are introduced in
// order (at most one fresh color per branch point), which kills color
// permutation symmetry.
struct DsaturSearch {
    const std::vector<std::vector<int>>& adj;
    int k;
    long long budget;
    long long& nodes;
    std::vector<int> color;
    std::vector<uint64_t> neighbor_colors;  // bitmask per vertex, k <= 64
    int uncolored;

    DsaturSearch(const std::vector<std::vector<int>>& a, int k_, long long budget_,
                 long long& nodes_)
        : adj(a),
          k(k_),
          budget(budget_),
          nodes(nodes_),
          color(a.size(), -1),
          neighbor_colors(a.size(), 0),
          uncolored(static_cast<int>(a.size())) {}

    SearchStatus run(int used) {
        if (uncolored == 0) return SearchStatus::Sat;
        if (nodes >= budget) return SearchStatus::Budget;
        // Pick the uncolored vertex with maximum saturation, then degree.
        int pick = -1, pick_sat = -1;
        for (int v = 0; v < static_cast<int>(adj.size()); ++v) {
            if (color[v] != -1) continue;
            const int sat = __builtin_popcountll(neighbor_colors[v]);
            if (sat > pick_sat ||
                (sat == pick_sat && adj[v].size() > adj[pick].size())) {
                pick = v;
                pick_sat = sat;
            }
        }
        const int limit = std::min(k - 1, used);  // at most one fresh color
        for (int c = 0; c <= limit; ++c) {
            if (neighbor_colors[pick] & (1ull << c)) continue;
            ++nodes;
            color[pick] = c;
            --uncolored;
            std::vector<int> bumped;
            for (int u : adj[pick]) {
                if (color[u] == -1 && !(neighbor_colors[u] & (1ull << c))) {
                    neighbor_colors[u] |= 1ull << c;
                    bumped.push_back(u);
                }
            }
            const SearchStatus st = run(std::max(used, c + 1));
            if (st != SearchStatus::Unsat) return st;
            for (int u : bumped) neighbor_colors[u] &= ~(1ull << c);
            color[pick] = -1;
            ++uncolored;
        }
        return SearchStatus::Unsat;
    }
};

SearchStatus two_colorable(const std::vector<std::vector<int>>& adj, std::vector<int>& out) {
    const int n = static_cast<int>(adj.size());
    out.assign(n, -1);
    for (int s = 0; s < n; ++s) {
        if (out[s] != -1) continue;
        out[s] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            for (int u : adj[v]) {
                if (out[u] == -1) {
                    out[u] = 1 - out[v];
                    queue.push_back(u);
                } else if (out[u] == out[v]) {
                    return SearchStatus::Unsat;
                }
            }
        }
    }
    return SearchStatus::Sat;
}

// Vertices of degree < k are always extendable, so k-colorability only
// depends on the iterated k-core.
SearchStatus k_colorable(const std::vector<std::vector<int>>& adj, int k, long long budget,
                         long long& nodes, std::vector<int>& out) {
    const int n = static_cast<int>(adj.size());
    out.assign(n, -1);
    if (n == 0) return SearchStatus::Sat;
    if (k <= 0) return SearchStatus::Unsat;
    if (k == 1) {
        for (int v = 0; v < n; ++v)
            if (!adj[v].empty()) return SearchStatus::Unsat;
        out.assign(n, 0);
        return SearchStatus::Sat;
    }
    if (k > 64) throw std::invalid_argument("chromatic search supports k <= 64");

    std::vector<int> degree(n);
    std::vector<bool> stripped(n, false);
    for (int v = 0; v < n; ++v) degree[v] = static_cast<int>(adj[v].size());
    std::vector<int> strip_order;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < n; ++v) {
            if (!stripped[v] && degree[v] < k) {
                stripped[v] = true;
                strip_order.push_back(v);
                for (int u : adj[v]) --degree[u];
                changed = true;
            }
        }
    }

    std::vector<int> core;
    std::vector<int> core_index(n, -1);
    for (int v = 0; v < n; ++v) {
        if (!stripped[v]) {
            core_index[v] = static_cast<int>(core.size());
            core.push_back(v);
        }
    }

    if (!core.empty()) {
        std::vector<std::vector<int>> core_adj(core.size());
        for (size_t ci = 0; ci < core.size(); ++ci)
            for (int u : adj[core[ci]])
                if (core_index[u] != -1) core_adj[ci].push_back(core_index[u]);

        std::vector<int> core_colors;
        SearchStatus st;
        if (k == 2) {
            st = two_colorable(core_adj, core_colors);
        } else {
            DsaturSearch search(core_adj, k, budget, nodes);
            st = search.run(0);
            core_colors = search.color;
        }
        if (st != SearchStatus::Sat) return st;
        for (size_t ci = 0; ci < core.size(); ++ci) out[core[ci]] = core_colors[ci];
    }

    // Reinsert stripped vertices in reverse order; each sees < k colors.
    for (auto it = strip_order.rbegin(); it != strip_order.rend(); ++it) {
        uint64_t used = 0;
        for (int u : adj[*it])
            if (out[u] != -1) used |= 1ull << out[u];
        int c = 0;
        while (used & (1ull << c)) ++c;
        out[*it] = c;
    }
    return SearchStatus::Sat;
}

}  // namespace

ChromaticResult chromatic_number_exact(const std::vector<std::vector<int>>& adjacency,
                                       long long budget) {
    ChromaticResult result;
    const int n = static_cast<int>(adjacency.size());
    if (n == 0) {
        result.conclusive = true;
        result.chi = 0;
        result.lower_bound_certified = true;
        return result;
    }
    for (int k = 1; k <= n; ++k) {
        std::vector<int> colors;
        const SearchStatus st = k_colorable(adjacency, k, budget, result.nodes_expanded, colors);
        if (st == SearchStatus::Budget) return result;  // inconclusive
        if (st == SearchStatus::Sat) {
            result.conclusive = true;
            result.chi = k;
            result.witness.colors = std::move(colors);
            // k-1 was either exhausted by the previous iteration or is 0.
            result.lower_bound_certified = true;
            return result;
        }
    }
    return result;  // unreachable: n colors always suffice
}

ChromaticResult chromatic_number_exact(const ShiftGraph& g, long long budget) {
    return chromatic_number_exact(g.adjacency, budget);
}

}  // namespace shiftcurves
