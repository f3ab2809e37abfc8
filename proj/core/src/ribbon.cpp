#include "intnorm/ribbon.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "intnorm/errors.hpp"

namespace intnorm {

namespace {

// Strips a '#' comment and surrounding whitespace; empty result means the
// line is skipped.
std::string clean_line(const std::string& raw) {
    std::string s = raw.substr(0, raw.find('#'));
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

int parse_int(const std::string& tok, const std::string& what) {
    size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &used);
    } catch (const std::exception&) {
        throw ParseError("expected integer for " + what + ", got '" + tok + "'");
    }
    if (used != tok.size())
        throw ParseError("expected integer for " + what + ", got '" + tok + "'");
    return value;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

RibbonGraph RibbonGraph::from_rotations(int n_vertices,
                                        std::vector<int> rotation_next,
                                        std::vector<int> mate) {
    const int nh = 4 * n_vertices;
    if (n_vertices <= 0)
        throw ValidationError("graph must have at least one vertex");
    if (static_cast<int>(rotation_next.size()) != nh || static_cast<int>(mate.size()) != nh)
        throw ValidationError("rotation/involution tables must cover all half-edges");

    // rotation_next must be a 4-cycle inside each vertex's slot range
    for (int h = 0; h < nh; ++h) {
        const int r = rotation_next[h];
        if (r < 0 || r >= nh || r / 4 != h / 4)
            throw ValidationError("rotation leaves its vertex at half-edge " + std::to_string(h));
    }
    for (int v = 0; v < n_vertices; ++v) {
        int h = 4 * v;
        std::vector<char> seen(4, 0);
        for (int k = 0; k < 4; ++k) {
            if (seen[h - 4 * v]) throw ValidationError("rotation at vertex " + std::to_string(v) + " is not a 4-cycle");
            seen[h - 4 * v] = 1;
            h = rotation_next[h];
        }
        if (h != 4 * v) throw ValidationError("rotation at vertex " + std::to_string(v) + " is not a 4-cycle");
    }
    for (int h = 0; h < nh; ++h) {
        const int m = mate[h];
        if (m < 0 || m >= nh)
            throw ValidationError("half-edge " + std::to_string(h) + " paired out of range");
        if (m == h)
            throw ValidationError("half-edge " + std::to_string(h) + " is paired with itself");
        if (mate[m] != h)
            throw ValidationError("edge pairing is not an involution at half-edge " + std::to_string(h));
    }

    RibbonGraph g;
    g.n_vertices_ = n_vertices;
    g.rot_next_ = std::move(rotation_next);
    g.mate_ = std::move(mate);
    g.finish_construction();
    return g;
}

void RibbonGraph::finish_construction() {
    const int nh = 4 * n_vertices_;

    // edges, ordered by their smaller half-edge
    edge_of_.assign(nh, -1);
    edges_.clear();
    for (int h = 0; h < nh; ++h) {
        if (h < mate_[h]) {
            edge_of_[h] = edge_of_[mate_[h]] = static_cast<int>(edges_.size());
            edges_.emplace_back(h, mate_[h]);
        }
    }

    // connectivity over vertices
    UnionFind uf(n_vertices_);
    for (const auto& [a, b] : edges_) uf.unite(a / 4, b / 4);
    for (int v = 0; v < n_vertices_; ++v)
        if (uf.find(v) != uf.find(0))
            throw ValidationError("graph is disconnected");

    // faces: orbits of h -> rotation_next(mate(h)), labeled by smallest member
    face_of_.assign(nh, -1);
    faces_.clear();
    for (int h = 0; h < nh; ++h) {
        if (face_of_[h] >= 0) continue;
        const int id = static_cast<int>(faces_.size());
        std::vector<int> orbit;
        for (int x = h; face_of_[x] < 0; x = rot_next_[mate_[x]]) {
            face_of_[x] = id;
            orbit.push_back(x);
        }
        faces_.push_back(std::move(orbit));
    }

    const int chi = n_vertices_ - edge_count() + face_count();
    if ((2 - chi) % 2 != 0 || chi > 2)
        throw ValidationError("inconsistent Euler characteristic");
    genus_ = (2 - chi) / 2;

    // straight-ahead components: orbits of h -> opposite(mate(h)); each
    // undirected curve is a pair of mutually reversed orbits, and the one
    // containing the smaller half-edge is the +1 direction.
    comp_of_.assign(nh, -1);
    canonical_step_.assign(nh, 0);
    components_.clear();
    std::vector<int> orbit_of(nh, -1);
    std::vector<std::vector<int>> orbits;
    for (int h = 0; h < nh; ++h) {
        if (orbit_of[h] >= 0) continue;
        const int id = static_cast<int>(orbits.size());
        std::vector<int> walk;
        for (int x = h; orbit_of[x] < 0; x = opposite_slot(mate_[x])) {
            orbit_of[x] = id;
            walk.push_back(x);
        }
        orbits.push_back(std::move(walk));
    }
    std::vector<int> comp_of_orbit(orbits.size(), -1);
    for (size_t i = 0; i < orbits.size(); ++i) {
        if (comp_of_orbit[i] >= 0) continue;
        const int rev = orbit_of[mate_[orbits[i][0]]];
        if (rev == static_cast<int>(i))
            throw ValidationError("straight-ahead walk traverses an edge twice");
        const int id = static_cast<int>(components_.size());
        comp_of_orbit[i] = comp_of_orbit[rev] = id;
        // i was reached first, so it holds the smaller half-edge
        Component c;
        c.steps = orbits[i];
        for (int s : c.steps) canonical_step_[s] = 1;
        components_.push_back(std::move(c));
    }
    for (int h = 0; h < nh; ++h) comp_of_[h] = comp_of_orbit[orbit_of[h]];

    // dual graph: arc e runs from the face of the smaller half-edge to the
    // face of its mate (the framing-positive crossing direction).
    dual_arcs_.clear();
    dual_arcs_.reserve(edges_.size());
    for (const auto& [a, b] : edges_)
        dual_arcs_.push_back(DualArc{face_of_[a], face_of_[b]});
}

RibbonGraph RibbonGraph::parse(const std::string& text) {
    std::vector<std::string> lines;
    {
        std::istringstream in(text);
        std::string raw;
        while (std::getline(in, raw)) {
            std::string s = clean_line(raw);
            if (!s.empty()) lines.push_back(std::move(s));
        }
    }
    size_t at = 0;
    auto next_line = [&]() -> const std::string& {
        if (at >= lines.size()) throw ParseError("unexpected end of file");
        return lines[at++];
    };

    auto header = tokens_of(next_line());
    if (header.size() != 2 || header[0] != "vertices")
        throw ParseError("expected 'vertices <n>'");
    const int n = parse_int(header[1], "vertex count");
    if (n <= 0) throw ParseError("vertex count must be positive");
    const int nh = 4 * n;

    std::vector<int> rot_next(nh, -1);
    std::vector<char> vertex_seen(n, 0);
    for (int k = 0; k < n; ++k) {
        auto toks = tokens_of(next_line());
        // allow both "vertex 0:" and "vertex 0 :"
        if (!toks.empty() && toks[0] == "vertex") toks.erase(toks.begin());
        if (toks.size() >= 2 && toks[1] == ":") toks.erase(toks.begin() + 1);
        if (!toks.empty() && !toks[0].empty() && toks[0].back() == ':') toks[0].pop_back();
        if (toks.size() != 5)
            throw ParseError("expected 'vertex <i>: <h0> <h1> <h2> <h3>'");
        const int i = parse_int(toks[0], "vertex index");
        if (i < 0 || i >= n) throw ParseError("vertex index " + std::to_string(i) + " out of range");
        if (vertex_seen[i]) throw ParseError("vertex " + std::to_string(i) + " listed twice");
        vertex_seen[i] = 1;
        int slots[4];
        std::vector<char> used(4, 0);
        for (int j = 0; j < 4; ++j) {
            const int h = parse_int(toks[1 + j], "half-edge");
            if (h < 4 * i || h >= 4 * i + 4)
                throw ParseError("half-edge " + std::to_string(h) + " does not belong to vertex " + std::to_string(i));
            if (used[h - 4 * i])
                throw ParseError("duplicate half-edge " + std::to_string(h) + " at vertex " + std::to_string(i));
            used[h - 4 * i] = 1;
            slots[j] = h;
        }
        for (int j = 0; j < 4; ++j) rot_next[slots[j]] = slots[(j + 1) % 4];
    }

    if (next_line() != "edges") throw ParseError("expected 'edges'");

    std::vector<int> mate(nh, -1);
    for (int k = 0; k < 2 * n; ++k) {
        auto toks = tokens_of(next_line());
        if (toks.size() != 2) throw ParseError("expected '<ha> <hb>' edge line");
        const int a = parse_int(toks[0], "half-edge");
        const int b = parse_int(toks[1], "half-edge");
        for (int h : {a, b})
            if (h < 0 || h >= nh) throw ParseError("half-edge " + std::to_string(h) + " out of range");
        if (a == b) throw ValidationError("edge pairs half-edge " + std::to_string(a) + " with itself");
        if (mate[a] >= 0) throw ParseError("duplicate half-edge " + std::to_string(a) + " in edges");
        if (mate[b] >= 0) throw ParseError("duplicate half-edge " + std::to_string(b) + " in edges");
        mate[a] = b;
        mate[b] = a;
    }

    if (next_line() != "end") throw ParseError("expected 'end'");
    if (at != lines.size()) throw ParseError("trailing content after 'end'");

    return from_rotations(n, std::move(rot_next), std::move(mate));
}

std::string RibbonGraph::to_text() const {
    std::ostringstream out;
    out << "vertices " << n_vertices_ << "\n";
    for (int v = 0; v < n_vertices_; ++v) {
        out << "vertex " << v << ":";
        int h = 4 * v;
        for (int k = 0; k < 4; ++k, h = rot_next_[h]) out << " " << h;
        out << "\n";
    }
    out << "edges\n";
    for (const auto& [a, b] : edges_) out << a << " " << b << "\n";
    out << "end\n";
    return out.str();
}

AttachResult RibbonGraph::attach(const std::vector<int>& orientations, int vertex) const {
    if (vertex < 0 || vertex >= n_vertices_)
        throw ValidationError("vertex " + std::to_string(vertex) + " does not exist");
    if (orientations.size() != components_.size())
        throw ValidationError("need one orientation per component");
    for (int s : orientations)
        if (s != 1 && s != -1) throw ValidationError("orientations must be +1 or -1");
    if (n_vertices_ == 1)
        throw DegenerateSmoothing("smoothing the only crossing leaves a vertex-free loop");

    // Arrival slots of the two strands under the requested orientations.
    // The step arriving at slot s departs from mate(s); exactly one of the
    // arrivals at {s, opposite(s)} lies on the +1 walk of its component.
    auto arrival_slot = [&](int s) {
        const int comp = comp_of_[mate_[s]];
        const bool canonical_arrives_here = canonical_step_[mate_[s]];
        const bool forward = orientations[comp] == 1;
        return (canonical_arrives_here == forward) ? s : opposite_slot(s);
    };
    const int in_a = arrival_slot(4 * vertex);
    const int in_b = arrival_slot(rot_next_[4 * vertex]);
    const int out_a = opposite_slot(in_a);
    const int out_b = opposite_slot(in_b);

    // The smoothing fuses each arrival with the departure of the other
    // strand; that is the only reconnection compatible with the directions.
    std::vector<int> fuse(4 * n_vertices_, -1);
    fuse[in_a] = out_b;
    fuse[out_b] = in_a;
    fuse[in_b] = out_a;
    fuse[out_a] = in_b;

    // Renumber the surviving half-edges, keeping each rotation aligned to
    // the vertex's first slot.
    const int nh_new = 4 * (n_vertices_ - 1);
    std::vector<int> rename(4 * n_vertices_, -1);
    std::vector<int> rot_new(nh_new, -1);
    for (int v = 0; v < n_vertices_; ++v) {
        if (v == vertex) continue;
        const int nv = v - (v > vertex ? 1 : 0);
        int h = 4 * v;
        for (int k = 0; k < 4; ++k, h = rot_next_[h]) rename[h] = 4 * nv + k;
        for (int k = 0; k < 4; ++k) rot_new[4 * nv + k] = 4 * nv + (k + 1) % 4;
    }

    std::vector<int> mate_new(nh_new, -1);
    std::vector<EdgeImage> edge_map(edge_count());
    std::vector<int> walk_dir_canonical(edge_count(), 0);  // valid for fused edges

    // Edges untouched by the smoothing.
    for (int e = 0; e < edge_count(); ++e) {
        const auto& [a, b] = edges_[e];
        if (a / 4 == vertex || b / 4 == vertex) continue;
        mate_new[rename[a]] = rename[b];
        mate_new[rename[b]] = rename[a];
    }

    // Chains through the deleted vertex.  Starting from a surviving end
    // whose mate sits at the vertex, follow fusions until another
    // surviving end is reached; the intermediate edges merge into one.
    std::vector<char> slot_done(4, 0);
    std::vector<std::vector<std::pair<int, bool>>> chains;  // (old edge, walked canonically)
    std::vector<std::pair<int, int>> chain_ends;            // surviving old half-edges
    for (int s0 = 4 * vertex; s0 < 4 * vertex + 4; ++s0) {
        const int u = mate_[s0];
        if (u / 4 == vertex) continue;   // loop at the vertex, handled inside chains
        if (slot_done[s0 - 4 * vertex]) continue;
        std::vector<std::pair<int, bool>> chain;
        chain.emplace_back(edge_of_[u], u < s0);  // walked u -> s0
        int s = s0;
        int terminal = -1;
        while (true) {
            slot_done[s - 4 * vertex] = 1;
            const int t = fuse[s];
            slot_done[t - 4 * vertex] = 1;
            const int w = mate_[t];
            chain.emplace_back(edge_of_[t], t < w);  // walked t -> w
            if (w / 4 != vertex) {
                terminal = w;
                break;
            }
            s = w;
        }
        chains.push_back(std::move(chain));
        chain_ends.emplace_back(u, terminal);
    }
    if (!slot_done[0] || !slot_done[1] || !slot_done[2] || !slot_done[3])
        throw DegenerateSmoothing("smoothing closes a strand into a vertex-free loop");

    for (size_t i = 0; i < chains.size(); ++i) {
        const int na = rename[chain_ends[i].first];
        const int nb = rename[chain_ends[i].second];
        mate_new[na] = nb;
        mate_new[nb] = na;
        // the walk ran from chain_ends.first to chain_ends.second
        const bool walk_is_canonical = na < nb;
        for (const auto& [e, walked_canonically] : chains[i])
            walk_dir_canonical[e] = walked_canonically == walk_is_canonical ? 1 : -1;
    }

    RibbonGraph smoothed;
    try {
        smoothed = from_rotations(n_vertices_ - 1, std::move(rot_new), std::move(mate_new));
    } catch (const ValidationError&) {
        throw ValidationError("smoothing disconnects the graph");
    }
    if (smoothed.genus() != genus_)
        throw ValidationError("smoothing does not preserve the surface");

    for (int e = 0; e < edge_count(); ++e) {
        const auto& [a, b] = edges_[e];
        if (a / 4 != vertex && b / 4 != vertex) {
            const int na = rename[a], nb = rename[b];
            edge_map[e] = EdgeImage{smoothed.edge_of(na), na < nb ? 1 : -1};
        } else {
            // fused: locate via the walk bookkeeping
            edge_map[e].edge = -1;
        }
    }
    for (size_t i = 0; i < chains.size(); ++i) {
        const int ne = smoothed.edge_of(rename[chain_ends[i].first]);
        for (const auto& [e, walked_canonically] : chains[i]) {
            (void)walked_canonically;
            edge_map[e] = EdgeImage{ne, walk_dir_canonical[e]};
        }
    }

    return AttachResult{std::move(smoothed), std::move(edge_map)};
}

}  // namespace intnorm
