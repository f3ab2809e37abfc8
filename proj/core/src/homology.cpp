#include "intnorm/homology.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "intnorm/errors.hpp"

namespace intnorm {

namespace {

using Matrix = std::vector<std::vector<std::int64_t>>;

Matrix identity(int n) {
    Matrix m(n, std::vector<std::int64_t>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

// Smith normal form by row and column operations.  Only the row transform
// is tracked: on exit, u * input * (column ops) is diagonal with invariant
// factors d_0 | d_1 | ..., and u_inv is the inverse of u.  Pivot selection
// is by smallest nonzero absolute value with lexicographic tie-break, so
// the reduction is deterministic.
struct SmithResult {
    std::vector<std::int64_t> diag;
    Matrix u, u_inv;
    int rank = 0;
};

SmithResult smith_normal_form(Matrix a) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
    SmithResult res;
    res.u = identity(rows);
    res.u_inv = identity(rows);

    auto row_add = [&](int dst, int src, std::int64_t q) {  // row dst += q * row src
        for (int j = 0; j < cols; ++j) a[dst][j] += q * a[src][j];
        for (int j = 0; j < rows; ++j) res.u[dst][j] += q * res.u[src][j];
        for (int i = 0; i < rows; ++i) res.u_inv[i][src] -= q * res.u_inv[i][dst];
    };
    auto row_swap = [&](int i, int k) {
        std::swap(a[i], a[k]);
        std::swap(res.u[i], res.u[k]);
        for (int r = 0; r < rows; ++r) std::swap(res.u_inv[r][i], res.u_inv[r][k]);
    };
    auto row_negate = [&](int i) {
        for (int j = 0; j < cols; ++j) a[i][j] = -a[i][j];
        for (int j = 0; j < rows; ++j) res.u[i][j] = -res.u[i][j];
        for (int r = 0; r < rows; ++r) res.u_inv[r][i] = -res.u_inv[r][i];
    };
    auto col_add = [&](int dst, int src, std::int64_t q) {
        for (int i = 0; i < rows; ++i) a[i][dst] += q * a[i][src];
    };
    auto col_swap = [&](int i, int k) {
        for (int r = 0; r < rows; ++r) std::swap(a[r][i], a[r][k]);
    };

    int k = 0;
    while (k < rows && k < cols) {
        // locate pivot
        int pi = -1, pj = -1;
        for (int i = k; i < rows; ++i)
            for (int j = k; j < cols; ++j)
                if (a[i][j] != 0 &&
                    (pi < 0 || std::abs(a[i][j]) < std::abs(a[pi][pj])))
                    pi = i, pj = j;
        if (pi < 0) break;
        if (pi != k) row_swap(pi, k);
        if (pj != k) col_swap(pj, k);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = k + 1; i < rows; ++i) {
                if (a[i][k] == 0) continue;
                row_add(i, k, -(a[i][k] / a[k][k]));
                if (a[i][k] != 0) {  // remainder smaller than pivot: promote
                    row_swap(i, k);
                    clean = false;
                }
            }
            for (int j = k + 1; j < cols; ++j) {
                if (a[k][j] == 0) continue;
                col_add(j, k, -(a[k][j] / a[k][k]));
                if (a[k][j] != 0) {
                    col_swap(j, k);
                    clean = false;
                }
            }
            if (clean) {
                // enforce divisibility of the remaining block
                for (int i = k + 1; i < rows && clean; ++i)
                    for (int j = k + 1; j < cols && clean; ++j)
                        if (a[i][j] % a[k][k] != 0) {
                            row_add(k, i, 1);
                            clean = false;
                        }
            }
        }
        if (a[k][k] < 0) row_negate(k);
        res.diag.push_back(a[k][k]);
        ++k;
    }
    res.rank = k;
    return res;
}

}  // namespace

HomologyModel HomologyModel::build(const RibbonGraph& g) {
    HomologyModel m(g);
    const int n_edges = g.edge_count();
    const int n_faces = g.face_count();

    // 2-cell boundaries: circling a crossing counterclockwise crosses each
    // incident edge once, positively at the end holding the smaller
    // half-edge.
    m.relations_.assign(g.vertex_count(), Chain(n_edges, 0));
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int s = 4 * v; s < 4 * v + 4; ++s)
            m.relations_[v][g.edge_of(s)] += (s < g.mate(s)) ? 1 : -1;

    // spanning tree of the dual graph, arcs scanned in edge order
    std::vector<int> parent_node(n_faces, -1), parent_arc(n_faces, -1);
    std::vector<char> in_tree_arc(n_edges, 0), reached(n_faces, 0);
    reached[0] = 1;
    for (bool grew = true; grew;) {
        grew = false;
        for (int e = 0; e < n_edges; ++e) {
            const auto& arc = g.dual_arcs()[e];
            if (reached[arc.from] != reached[arc.to]) {
                const int child = reached[arc.from] ? arc.to : arc.from;
                const int par = reached[arc.from] ? arc.from : arc.to;
                reached[child] = 1;
                parent_node[child] = par;
                parent_arc[child] = e;
                in_tree_arc[e] = 1;
                grew = true;
            }
        }
    }

    // chain of the tree path node -> root
    auto path_to_root = [&](int node, Chain& acc, std::int64_t w) {
        while (parent_node[node] >= 0) {
            const int e = parent_arc[node];
            const auto& arc = g.dual_arcs()[e];
            acc[e] += (arc.from == node) ? w : -w;  // traversed node -> parent
            node = parent_node[node];
        }
    };

    for (int e = 0; e < n_edges; ++e) {
        if (in_tree_arc[e]) continue;
        m.nontree_edges_.push_back(e);
        Chain z(n_edges, 0);
        const auto& arc = g.dual_arcs()[e];
        z[e] += 1;
        path_to_root(arc.to, z, 1);
        path_to_root(arc.from, z, -1);
        m.fundamental_cycles_.push_back(std::move(z));
    }

    const int n_cycles = static_cast<int>(m.nontree_edges_.size());

    // relations in fundamental coordinates (a cycle is determined by its
    // values on non-tree arcs)
    Matrix rel(n_cycles, std::vector<std::int64_t>(g.vertex_count(), 0));
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int j = 0; j < n_cycles; ++j)
            rel[j][v] = m.relations_[v][m.nontree_edges_[j]];

    SmithResult snf = smith_normal_form(std::move(rel));
    for (std::int64_t d : snf.diag)
        if (d != 1)
            throw std::logic_error("homology has torsion: invariant factor " + std::to_string(d));
    if (snf.rank != g.vertex_count() - 1)
        throw std::logic_error("unexpected relation rank");
    m.rank_ = n_cycles - snf.rank;
    if (m.rank_ != 2 * g.genus())
        throw std::logic_error("basis rank does not match the genus");

    // quotient coordinates = last rows of u; basis cycles = last columns
    // of u_inv expanded through the fundamental cycles
    for (int j = snf.rank; j < n_cycles; ++j)
        m.quotient_rows_.push_back(snf.u[j]);
    for (int j = snf.rank; j < n_cycles; ++j) {
        Chain delta(n_edges, 0);
        for (int i = 0; i < n_cycles; ++i) {
            const std::int64_t coef = snf.u_inv[i][j];
            if (coef == 0) continue;
            for (int e = 0; e < n_edges; ++e)
                delta[e] += coef * m.fundamental_cycles_[i][e];
        }
        m.basis_.push_back(std::move(delta));
    }

    // the construction must send each basis cycle to a unit vector and
    // every 2-cell boundary to zero
    for (int j = 0; j < m.rank_; ++j) {
        ClassVector cls = m.class_of_cycle(m.basis_[j]);
        for (int i = 0; i < m.rank_; ++i)
            if (cls[i] != (i == j ? 1 : 0))
                throw std::logic_error("basis cycle does not reduce to a unit class");
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        ClassVector cls = m.class_of_cycle(m.relations_[v]);
        for (std::int64_t x : cls)
            if (x != 0) throw std::logic_error("2-cell boundary has nonzero class");
    }
    return m;
}

bool HomologyModel::is_cycle(const Chain& f) const {
    if (f.size() != static_cast<size_t>(graph_.edge_count())) return false;
    std::vector<std::int64_t> net(graph_.face_count(), 0);
    for (int e = 0; e < graph_.edge_count(); ++e) {
        const auto& arc = graph_.dual_arcs()[e];
        net[arc.from] -= f[e];
        net[arc.to] += f[e];
    }
    return std::all_of(net.begin(), net.end(), [](std::int64_t x) { return x == 0; });
}

ClassVector HomologyModel::class_of_cycle(const Chain& f) const {
    if (f.size() != static_cast<size_t>(graph_.edge_count()))
        throw DimensionMismatch("chain has wrong length");
    if (!is_cycle(f))
        throw ValidationError("chain has nonzero boundary");
    const int n_cycles = static_cast<int>(nontree_edges_.size());
    std::vector<std::int64_t> y(n_cycles);
    for (int j = 0; j < n_cycles; ++j) y[j] = f[nontree_edges_[j]];
    ClassVector out(rank_, 0);
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < n_cycles; ++j)
            out[i] += quotient_rows_[i][j] * y[j];
    return out;
}

Chain HomologyModel::representative_chain(const ClassVector& a) const {
    if (a.size() != static_cast<size_t>(rank_))
        throw DimensionMismatch("class vector has length " + std::to_string(a.size()) +
                                ", expected " + std::to_string(rank_));
    Chain f(graph_.edge_count(), 0);
    for (int j = 0; j < rank_; ++j)
        for (int e = 0; e < graph_.edge_count(); ++e)
            f[e] += a[j] * basis_[j][e];
    return f;
}

Chain HomologyModel::pushoff_chain(const Component& c, int sign) const {
    Chain f(graph_.edge_count(), 0);
    auto passage = [&](int arrival) {
        const int depart = graph_.opposite_slot(arrival);
        const int left = graph_.rotation_next(depart);
        f[graph_.edge_of(left)] += (left < graph_.mate(left)) ? -1 : 1;
    };
    for (int h : c.steps)
        passage(sign == 1 ? graph_.mate(h) : h);
    if (!is_cycle(f))
        throw std::logic_error("push-off chain is not closed");
    return f;
}

ClassVector HomologyModel::component_class(const Component& c, int sign) const {
    return class_of_cycle(pushoff_chain(c, sign));
}

ClassVector HomologyModel::intersection_with_basis(const Component& c, int sign) const {
    ClassVector out(rank_, 0);
    for (int h : c.steps) {
        const std::int64_t s = sign * ((h < graph_.mate(h)) ? 1 : -1);
        const int e = graph_.edge_of(h);
        for (int j = 0; j < rank_; ++j) out[j] += s * basis_[j][e];
    }
    return out;
}

std::optional<std::vector<int>> HomologyModel::nontriviality_certificate() const {
    const auto& comps = graph_.components();
    std::vector<ClassVector> classes;
    classes.reserve(comps.size());
    for (const auto& c : comps) classes.push_back(component_class(c, 1));

    auto nonzero = [](const ClassVector& v) {
        return std::any_of(v.begin(), v.end(), [](std::int64_t x) { return x != 0; });
    };
    int first_nonzero = -1;
    for (size_t i = 0; i < classes.size(); ++i)
        if (nonzero(classes[i])) { first_nonzero = static_cast<int>(i); break; }
    if (first_nonzero < 0) return std::nullopt;

    std::vector<int> eps(comps.size(), 1);
    ClassVector total(rank_, 0);
    for (const auto& cls : classes)
        for (int j = 0; j < rank_; ++j) total[j] += cls[j];
    if (!nonzero(total)) eps[first_nonzero] = -1;  // total becomes -2 * class
    return eps;
}

std::int64_t pairing_with_chain(const RibbonGraph& g, const Component& c, int sign,
                                const Chain& f) {
    std::int64_t total = 0;
    for (int h : c.steps) {
        const std::int64_t s = sign * ((h < g.mate(h)) ? 1 : -1);
        total += s * f[g.edge_of(h)];
    }
    return total;
}

Chain transport_chain(const AttachResult& res, const Chain& f) {
    if (f.size() != res.edge_map.size())
        throw DimensionMismatch("chain does not match the smoothed graph's source");
    Chain out(res.graph.edge_count(), 0);
    for (size_t e = 0; e < f.size(); ++e)
        out[res.edge_map[e].edge] += res.edge_map[e].sign * f[e];
    return out;
}

std::int64_t crossing_sign_sum(const RibbonGraph& g, const Component& a, int sign_a,
                               const Component& b, int sign_b) {
    // arrival slot per passage, under the chosen direction
    auto arrivals = [&](const Component& c, int sign) {
        std::vector<int> slots;
        for (int h : c.steps) slots.push_back(sign == 1 ? g.mate(h) : h);
        return slots;
    };
    std::int64_t total = 0;
    for (int sa : arrivals(a, sign_a))
        for (int sb : arrivals(b, sign_b)) {
            if (g.vertex_of(sa) != g.vertex_of(sb)) continue;
            total += (sb == g.rotation_next(sa)) ? 1 : -1;
        }
    return total;
}

}  // namespace intnorm
