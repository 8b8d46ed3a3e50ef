#pragma once

#include <array>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "gtq/tableau.hpp"

namespace gtq {

struct QVertex {
    GTIdeal ideal;
    Tableau rep;                     // first-discovered shift; positions refer to it
    std::vector<ScalarPoly> alphas;  // alphas[k] for k = 0..n, alphas[0] = 1
};

// One arrow of the quiver. kind 'b' raises entry (m, i) of the source
// representative, kind 'c' lowers it; point is the spectral value -l_mi.
struct QEdge {
    char kind;
    int m;
    int i;
    Rat point;
    int source;
    int target;
};

// A step whose endpoint is not a window vertex: either the shifted tableau is
// critical or its ideal lies outside the radius.
struct QBoundary {
    char kind;
    int m;
    int i;
    Rat point;
    int source;
    std::string reason;  // "critical" or "outside"
};

class QuiverWindow {
public:
    // Vertices: canonical ideals of all shifts of root with |shift|_1 <= radius
    // that stay non-critical and on root's side of every integer-pair wall,
    // deduplicated, in (norm, lex) enumeration order. Edges join window vertices.
    QuiverWindow(const Tableau& root, int radius);

    int rank() const { return root_.rank(); }
    int radius() const { return radius_; }
    const Tableau& root() const { return root_; }
    const std::vector<QVertex>& vertices() const { return vertices_; }
    const std::vector<QEdge>& edges() const { return edges_; }
    const std::vector<QBoundary>& boundary() const { return boundary_; }

    int vertex_index(const GTIdeal& ideal) const;  // -1 if absent
    int edge_at(int source, char kind, int m, int i) const;  // -1 if absent
    // looks the position up by entry value in the source representative
    int edge_by_value(int source, char kind, int m, const Rat& entry_value) const;
    const std::vector<int>& out_edges(int v) const;

private:
    Tableau root_;
    int radius_;
    std::vector<QVertex> vertices_;
    std::vector<QEdge> edges_;
    std::vector<QBoundary> boundary_;
    std::map<GTIdeal, int> index_;
    std::map<std::tuple<int, char, int, int>, int> edge_index_;
    std::vector<std::vector<int>> out_;
};

// Two-arrow cycle pinned to a scalar: scalars(b_edge) * scalars(c_edge) = value.
// item 'v' fixes the c-after-b cycle at the b-edge's source; item 'i' is the
// b-after-c form of the same pair, stated at the c-edge's source.
struct ProductConstraint {
    int b_edge;
    int c_edge;
    int vertex;
    int m;
    int i;
    char item;  // 'v' or 'i'
    Rat value;
};

// Commuting square: the two-edge paths a and b (applied first then second)
// start and end at the same vertices and must carry equal scalar products.
struct SquareConstraint {
    std::array<int, 2> path_a;
    std::array<int, 2> path_b;
};

// Loop a_k at a spectral point of the vertex acts by this scalar.
struct LoopConstraint {
    int vertex;
    int k;
    Rat point;
    Rat value;
};

struct Constraints {
    std::vector<ProductConstraint> products;
    std::vector<SquareConstraint> squares;
    std::vector<LoopConstraint> loops;
};

inline QuiverWindow build_window(const Tableau& root, int radius) {
    return QuiverWindow(root, radius);
}

Constraints relation_instances(const QuiverWindow& w);

// One-dimensional-per-vertex module over the windowed quiver: a scalar per edge.
struct ModuleRep {
    std::vector<Rat> edge_scalar;  // indexed like QuiverWindow::edges()
    std::vector<int> tree_c_edges;  // c-edges normalized to 1 by the gauge choice
};

// Gauge-fixes c-edges along a BFS spanning tree to 1 and propagates the product
// and square constraints. tree_seed != 0 shuffles the BFS neighbor order, which
// selects a different spanning tree. Throws NonGenericWindow if any product
// scalar vanishes, InconsistentConstraints if the final check fails.
ModuleRep solve_module(const QuiverWindow& w, unsigned long tree_seed = 0);

// Edges listed in application order: edges[0] acts first.
struct PathWord {
    std::vector<int> edges;
};

// Rewrites the cycle to the empty word with the commutation items, multiplying
// in a scalar for every cancelled b/c pair; never consults solved modules.
// Intermediate rearrangements may pass through valid quiver vertices outside
// the window radius. Throws IrreducibleWord if no cancellation can be reached.
Rat reduce_cycle(const QuiverWindow& w, const PathWord& word);

// Product of solved edge scalars along a path (cycles included).
Rat path_scalar(const ModuleRep& rep, const PathWord& word);

struct ProbeReport {
    unsigned long seed;
    int samples;
    int max_len;
    bool pass;
    struct Item {
        int length;
        bool reduced;
        Rat scalar;
    };
    std::vector<Item> items;
};

// Samples seeded random cycles at the given vertex and checks each one reduces
// to a scalar. The seed is recorded in the report.
ProbeReport cyclic_dimension_probe(const QuiverWindow& w, int vertex, int samples, int max_len,
                                   unsigned long seed);

}  // namespace gtq
