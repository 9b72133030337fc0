#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace shiftcurves {

struct PairVertex {
    int i = 0;
    int j = 0;

    bool operator==(const PairVertex& o) const { return i == o.i && j == o.j; }
    // Lexicographic order: the paper's "prec".
    bool operator<(const PairVertex& o) const { return i < o.i || (i == o.i && j < o.j); }
};

// H_m: vertices are pairs (i,j), 1 <= i < j <= m, in lex order; edge between
// (i,j) and (k,l) iff j == k or l == i. Also reused as the container for
// disjointness graphs on the same vertex set.
struct ShiftGraph {
    int m = 0;
    std::vector<PairVertex> vertices;
    std::vector<std::pair<int, int>> edges;  // 0-based vertex indices, a < b, sorted
    std::vector<std::vector<int>> adjacency;

    bool has_edge(int u, int v) const;
};

// 1-based rank of (i,j) in lex order: r = (i-1)m - i(i-1)/2 + (j-i).
long lex_rank(int i, int j, int m);
PairVertex lex_unrank(long r, int m);

ShiftGraph build_shift_graph(int m);

// Rebuilds edges/adjacency of a graph whose `edges` field has been filled
// by hand (sorting, dedup, adjacency lists).
void finalize_edges(ShiftGraph& g);

bool is_triangle_free(const std::vector<std::vector<int>>& adjacency);
bool is_triangle_free(const ShiftGraph& g);

int clique_number(const std::vector<std::vector<int>>& adjacency);
int clique_number(const ShiftGraph& g);

struct Coloring {
    std::vector<int> colors;

    int count_colors() const;
};

bool is_proper(const std::vector<std::vector<int>>& adjacency, const Coloring& c);

// Colors (i,j) by the highest bit in which i-1 and j-1 differ; proper and
// uses exactly ceil(log2 m) colors.
Coloring formula_coloring(int m);

int ceil_log2(int m);

struct ChromaticResult {
    bool conclusive = false;        // false iff the node budget ran out
    int chi = 0;                    // valid when conclusive
    Coloring witness;               // proper chi-coloring
    bool lower_bound_certified = false;  // search at chi-1 was exhausted
    long long nodes_expanded = 0;
};

// Exact chromatic number by iterative deepening with DSATUR-ordered
// backtracking (plus low-degree-vertex stripping and a bipartiteness
// short-circuit at k = 2). Never guesses: returns inconclusive when the
// budget is exhausted.
ChromaticResult chromatic_number_exact(const std::vector<std::vector<int>>& adjacency,
                                       long long budget = 50'000'000);
ChromaticResult chromatic_number_exact(const ShiftGraph& g, long long budget = 50'000'000);

}  // namespace shiftcurves
