#include "gtq/quiver.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "gtq/error.hpp"

namespace gtq {

namespace {

std::vector<std::pair<int, int>> shift_positions(int n) {
    std::vector<std::pair<int, int>> pos;
    for (int m = 1; m <= n - 1; ++m)
        for (int i = 1; i <= m; ++i) pos.emplace_back(m, i);
    return pos;
}

// integer vectors with L1 norm exactly `budget`, in lex order
void exact_norm_shifts(int dim, int at, int budget, std::vector<int>& cur,
                       std::vector<std::vector<int>>& out) {
    if (at == dim) {
        if (budget == 0) out.push_back(cur);
        return;
    }
    for (int t = -budget; t <= budget; ++t) {
        cur[at] = t;
        exact_norm_shifts(dim, at + 1, budget - std::abs(t), cur, out);
    }
    cur[at] = 0;
}

}  // namespace

QuiverWindow::QuiverWindow(const Tableau& root, int radius) : root_(root), radius_(radius) {
    if (radius < 0) throw InputError("window radius must be nonnegative");
    if (is_critical(root)) throw InputError("window root must be non-critical");
    const int n = root.rank();
    const auto pos = shift_positions(n);
    const int dim = static_cast<int>(pos.size());

    for (int s = 0; s <= radius; ++s) {
        std::vector<int> cur(dim, 0);
        std::vector<std::vector<int>> shifts;
        exact_norm_shifts(dim, 0, s, cur, shifts);
        for (const auto& d : shifts) {
            auto rows = root.rows();
            for (int t = 0; t < dim; ++t) rows[pos[t].first - 1][pos[t].second - 1] += d[t];
            Tableau cand(rows);
            if (is_critical(cand)) continue;
            if (!same_nc_component(root_, cand)) continue;
            GTIdeal ideal = canonical_ideal(cand);
            if (index_.count(ideal)) continue;
            index_.emplace(ideal, static_cast<int>(vertices_.size()));
            std::vector<ScalarPoly> alphas;
            alphas.reserve(n + 1);
            for (int k = 0; k <= n; ++k) alphas.push_back(alpha_polynomial(cand, k));
            vertices_.push_back({std::move(ideal), std::move(cand), std::move(alphas)});
        }
    }

    out_.resize(vertices_.size());
    for (int v = 0; v < static_cast<int>(vertices_.size()); ++v) {
        const Tableau& rep = vertices_[v].rep;
        for (int m = 1; m <= n - 1; ++m)
            for (int i = 1; i <= m; ++i)
                for (char kind : {'b', 'c'}) {
                    Tableau tgt = rep.shifted(m, i, kind == 'b' ? 1 : -1);
                    Rat point = -rep.entry(m, i);
                    if (is_critical(tgt)) {
                        boundary_.push_back({kind, m, i, point, v, "critical"});
                        continue;
                    }
                    auto it = index_.find(canonical_ideal(tgt));
                    if (it == index_.end()) {
                        boundary_.push_back({kind, m, i, point, v, "outside"});
                        continue;
                    }
                    int id = static_cast<int>(edges_.size());
                    edge_index_.emplace(std::make_tuple(v, kind, m, i), id);
                    out_[v].push_back(id);
                    edges_.push_back({kind, m, i, point, v, it->second});
                }
    }
}

int QuiverWindow::vertex_index(const GTIdeal& ideal) const {
    auto it = index_.find(ideal);
    return it == index_.end() ? -1 : it->second;
}

int QuiverWindow::edge_at(int source, char kind, int m, int i) const {
    auto it = edge_index_.find(std::make_tuple(source, kind, m, i));
    return it == edge_index_.end() ? -1 : it->second;
}

int QuiverWindow::edge_by_value(int source, char kind, int m, const Rat& entry_value) const {
    if (source < 0 || source >= static_cast<int>(vertices_.size()))
        throw InputError("edge_by_value: vertex out of range");
    const Tableau& rep = vertices_[source].rep;
    for (int i = 1; i <= m; ++i)
        if (rep.entry(m, i) == entry_value) return edge_at(source, kind, m, i);
    return -1;
}

const std::vector<int>& QuiverWindow::out_edges(int v) const {
    if (v < 0 || v >= static_cast<int>(out_.size()))
        throw InputError("out_edges: vertex out of range");
    return out_[v];
}

Constraints relation_instances(const QuiverWindow& w) {
    Constraints cs;
    const int n = w.rank();
    const auto& edges = w.edges();
    const auto& verts = w.vertices();

    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        const QEdge& E = edges[e];
        const Rat x = -E.point;  // entry value at the source
        const auto& al = verts[E.source].alphas;
        if (E.kind == 'b') {
            int back = w.edge_by_value(E.target, 'c', E.m, x + 1);
            if (back < 0) throw InconsistentConstraints("b-edge with no returning c-edge");
            Rat value = -al[E.m + 1].eval(-x) * al[E.m - 1].eval(-x - 1);
            cs.products.push_back({e, back, E.source, E.m, E.i, 'v', value});
        } else {
            int back = w.edge_by_value(E.target, 'b', E.m, x - 1);
            if (back < 0) throw InconsistentConstraints("c-edge with no returning b-edge");
            Rat value = -al[E.m + 1].eval(-x + 1) * al[E.m - 1].eval(-x);
            cs.products.push_back({back, e, E.source, E.m, E.i, 'i', value});
        }
    }

    for (int v = 0; v < static_cast<int>(verts.size()); ++v) {
        const auto& outs = w.out_edges(v);
        for (std::size_t a = 0; a < outs.size(); ++a)
            for (std::size_t b = a + 1; b < outs.size(); ++b) {
                const QEdge& e1 = edges[outs[a]];
                const QEdge& e2 = edges[outs[b]];
                bool commute;
                if (e1.kind == e2.kind)
                    commute = std::abs(e1.m - e2.m) != 1;
                else
                    commute = e1.m != e2.m || e1.point != e2.point;
                if (!commute) continue;
                int s1 = w.edge_by_value(e1.target, e2.kind, e2.m, -e2.point);
                int s2 = w.edge_by_value(e2.target, e1.kind, e1.m, -e1.point);
                if (s1 < 0 || s2 < 0) continue;
                if (edges[s1].target != edges[s2].target)
                    throw InconsistentConstraints("square closes on different vertices");
                cs.squares.push_back({{outs[a], s1}, {outs[b], s2}});
            }
    }

    for (int v = 0; v < static_cast<int>(verts.size()); ++v) {
        const Tableau& rep = verts[v].rep;
        for (int m = 1; m <= n - 1; ++m)
            for (int i = 1; i <= m; ++i) {
                Rat point = -rep.entry(m, i);
                for (int k = 1; k <= n; ++k)
                    cs.loops.push_back({v, k, point, verts[v].alphas[k].eval(point)});
            }
    }
    return cs;
}

ModuleRep solve_module(const QuiverWindow& w, unsigned long tree_seed) {
    Constraints cs = relation_instances(w);
    const auto& edges = w.edges();

    std::vector<NonGenericWindow::Site> sites;
    for (const auto& p : cs.products) {
        if (p.item != 'v') continue;
        if (p.value == 0) sites.push_back({p.vertex, p.m, p.i, rat_str(edges[p.b_edge].point)});
    }
    if (!sites.empty())
        throw NonGenericWindow("window is not strongly generic: " +
                                   std::to_string(sites.size()) + " vanishing product scalar(s)",
                               sites);

    const int V = static_cast<int>(w.vertices().size());
    const int E = static_cast<int>(edges.size());

    // undirected adjacency through the b/c pairs; one entry per item-'v' product
    std::vector<std::vector<std::pair<int, int>>> nbr(V);
    for (int pi = 0; pi < static_cast<int>(cs.products.size()); ++pi) {
        const auto& p = cs.products[pi];
        if (p.item != 'v') continue;
        int a = edges[p.b_edge].source;
        int b = edges[p.b_edge].target;
        nbr[a].emplace_back(b, pi);
        nbr[b].emplace_back(a, pi);
    }
    if (tree_seed != 0) {
        std::mt19937_64 rng(tree_seed);
        for (auto& list : nbr) std::shuffle(list.begin(), list.end(), rng);
    }

    std::vector<std::optional<Rat>> val(E);
    std::vector<int> tree_c;
    std::vector<char> seen(V, 0);
    for (int r = 0; r < V; ++r) {
        if (seen[r]) continue;
        std::deque<int> q{r};
        seen[r] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (auto [u, pi] : nbr[v]) {
                if (seen[u]) continue;
                seen[u] = 1;
                const auto& p = cs.products[pi];
                val[p.c_edge] = Rat(1);
                val[p.b_edge] = p.value;
                tree_c.push_back(p.c_edge);
                q.push_back(u);
            }
        }
    }

    bool progress = true;
    while (progress) {
        progress = false;
        for (const auto& p : cs.products) {
            bool hb = val[p.b_edge].has_value();
            bool hc = val[p.c_edge].has_value();
            if (hb == hc) continue;
            if (hb)
                val[p.c_edge] = p.value / *val[p.b_edge];
            else
                val[p.b_edge] = p.value / *val[p.c_edge];
            progress = true;
        }
        for (const auto& s : cs.squares) {
            const std::array<int, 4> e{s.path_a[0], s.path_a[1], s.path_b[0], s.path_b[1]};
            int unknown = -1, count = 0;
            for (int t = 0; t < 4; ++t)
                if (!val[e[t]].has_value()) {
                    unknown = t;
                    ++count;
                }
            if (count != 1) continue;
            int mate = unknown ^ 1;        // the known edge on the same path
            int o1 = (unknown ^ 2) & ~1;   // the other path
            Rat rhs = *val[e[o1]] * *val[e[o1 + 1]];
            if (*val[e[mate]] == 0) throw InconsistentConstraints("zero edge scalar in square");
            val[e[unknown]] = rhs / *val[e[mate]];
            progress = true;
        }
    }

    for (int e = 0; e < E; ++e)
        if (!val[e].has_value())
            throw Error("solve_module: propagation left edge " + std::to_string(e) +
                        " undetermined");

    for (const auto& p : cs.products)
        if (*val[p.b_edge] * *val[p.c_edge] != p.value)
            throw InconsistentConstraints("product constraint violated after propagation");
    for (const auto& s : cs.squares)
        if (*val[s.path_a[0]] * *val[s.path_a[1]] != *val[s.path_b[0]] * *val[s.path_b[1]])
            throw InconsistentConstraints("square constraint violated after propagation");

    ModuleRep rep;
    rep.edge_scalar.reserve(E);
    for (int e = 0; e < E; ++e) rep.edge_scalar.push_back(*val[e]);
    rep.tree_c_edges = std::move(tree_c);
    return rep;
}

namespace {

// A path step identified by row and entry value; the acting position is
// recovered from whichever tableau the step is applied to.
struct RStep {
    char kind;
    int m;
    Rat entry;
};

std::optional<Tableau> apply_step(const Tableau& root, const Tableau& t, const RStep& s) {
    int at = 0;
    for (int i = 1; i <= s.m; ++i)
        if (t.entry(s.m, i) == s.entry) {
            at = i;
            break;
        }
    if (at == 0) return std::nullopt;
    Tableau out = t.shifted(s.m, at, s.kind == 'b' ? 1 : -1);
    if (is_critical(out)) return std::nullopt;
    if (!same_nc_component(root, out)) return std::nullopt;
    return out;
}

// a applied first, then b; the two b/c cancellation patterns never commute
bool steps_commute(const RStep& a, const RStep& b) {
    if (a.kind == b.kind) return std::abs(a.m - b.m) != 1;
    if (a.m != b.m) return true;
    if (a.kind == 'b') return b.entry != a.entry + 1;
    return b.entry != a.entry - 1;
}

bool steps_cancel(const RStep& a, const RStep& b) {
    if (a.kind == b.kind || a.m != b.m) return false;
    if (a.kind == 'b') return b.entry == a.entry + 1;
    return b.entry == a.entry - 1;
}

Rat cancel_scalar(const Tableau& before, const RStep& a) {
    const Rat& x = a.entry;
    if (a.kind == 'b')
        return -alpha_polynomial(before, a.m + 1).eval(-x) *
               alpha_polynomial(before, a.m - 1).eval(-x - 1);
    return -alpha_polynomial(before, a.m + 1).eval(-x + 1) *
           alpha_polynomial(before, a.m - 1).eval(-x);
}

std::string word_key(const std::vector<RStep>& word) {
    std::ostringstream os;
    for (const auto& s : word) os << s.kind << s.m << ':' << rat_str(s.entry) << ';';
    return os.str();
}

}  // namespace

Rat reduce_cycle(const QuiverWindow& w, const PathWord& word) {
    const auto& edges = w.edges();
    if (word.edges.empty()) return Rat(1);
    for (int id : word.edges)
        if (id < 0 || id >= static_cast<int>(edges.size()))
            throw InputError("reduce_cycle: edge index out of range");
    for (std::size_t t = 0; t + 1 < word.edges.size(); ++t)
        if (edges[word.edges[t]].target != edges[word.edges[t + 1]].source)
            throw InputError("reduce_cycle: word is not composable");
    if (edges[word.edges.back()].target != edges[word.edges.front()].source)
        throw InputError("reduce_cycle: word is not a cycle");

    const Tableau start = w.vertices()[edges[word.edges.front()].source].rep;
    std::vector<RStep> current;
    current.reserve(word.edges.size());
    for (int id : word.edges)
        current.push_back({edges[id].kind, edges[id].m, -edges[id].point});

    Rat acc(1);
    while (!current.empty()) {
        // search words reachable by admissible swaps for an adjacent b/c pair
        std::set<std::string> visited{word_key(current)};
        std::deque<std::vector<RStep>> queue{current};
        bool cancelled = false;
        while (!queue.empty() && !cancelled) {
            std::vector<RStep> cand = queue.front();
            queue.pop_front();

            std::vector<Tableau> along{start};
            for (const auto& s : cand) {
                auto nx = apply_step(w.root(), along.back(), s);
                if (!nx) throw Error("reduce_cycle: invalid intermediate word");
                along.push_back(*nx);
            }

            for (std::size_t t = 0; t + 1 < cand.size(); ++t)
                if (steps_cancel(cand[t], cand[t + 1])) {
                    acc *= cancel_scalar(along[t], cand[t]);
                    cand.erase(cand.begin() + t, cand.begin() + t + 2);
                    current = std::move(cand);
                    cancelled = true;
                    break;
                }
            if (cancelled) break;

            for (std::size_t t = 0; t + 1 < cand.size(); ++t) {
                if (!steps_commute(cand[t], cand[t + 1])) continue;
                auto mid = apply_step(w.root(), along[t], cand[t + 1]);
                if (!mid) continue;
                auto fin = apply_step(w.root(), *mid, cand[t]);
                if (!fin || !(*fin == along[t + 2])) continue;
                std::vector<RStep> next = cand;
                std::swap(next[t], next[t + 1]);
                if (visited.insert(word_key(next)).second) queue.push_back(next);
            }
        }
        if (!cancelled)
            throw IrreducibleWord("reduce_cycle: no cancellation reachable for a word of length " +
                                  std::to_string(current.size()));
    }
    return acc;
}

Rat path_scalar(const ModuleRep& rep, const PathWord& word) {
    Rat acc(1);
    for (int id : word.edges) {
        if (id < 0 || id >= static_cast<int>(rep.edge_scalar.size()))
            throw InputError("path_scalar: edge index out of range");
        acc *= rep.edge_scalar[id];
    }
    return acc;
}

ProbeReport cyclic_dimension_probe(const QuiverWindow& w, int vertex, int samples, int max_len,
                                   unsigned long seed) {
    if (vertex < 0 || vertex >= static_cast<int>(w.vertices().size()))
        throw InputError("probe vertex out of range");
    if (samples < 0 || max_len < 2) throw InputError("probe needs samples >= 0 and max_len >= 2");

    ProbeReport report{seed, samples, max_len, true, {}};
    std::mt19937_64 rng(seed);
    const auto& edges = w.edges();

    for (int s = 0; s < samples; ++s) {
        std::vector<int> cycle;
        for (int attempt = 0; attempt < 500 && cycle.empty(); ++attempt) {
            int half = 1 + static_cast<int>(rng() % static_cast<unsigned long>(max_len / 2));
            int len = 2 * half;
            std::vector<int> path;
            int cur = vertex;
            for (int t = 0; t < len; ++t) {
                const auto& outs = w.out_edges(cur);
                if (outs.empty()) break;
                int pick = outs[static_cast<std::size_t>(rng() % outs.size())];
                path.push_back(pick);
                cur = edges[pick].target;
            }
            if (static_cast<int>(path.size()) == len && cur == vertex) cycle = path;
        }
        if (cycle.empty()) {
            const auto& outs = w.out_edges(vertex);
            if (outs.empty()) break;  // isolated vertex: no cycles to test
            const QEdge& e = edges[outs[0]];
            Rat back_entry = -e.point + (e.kind == 'b' ? 1 : -1);
            int back = w.edge_by_value(e.target, e.kind == 'b' ? 'c' : 'b', e.m, back_entry);
            if (back < 0) break;
            cycle = {outs[0], back};
        }

        ProbeReport::Item item{static_cast<int>(cycle.size()), false, Rat(0)};
        try {
            item.scalar = reduce_cycle(w, PathWord{cycle});
            item.reduced = true;
        } catch (const IrreducibleWord&) {
            report.pass = false;
        }
        report.items.push_back(item);
    }
    return report;
}

}  // namespace gtq
