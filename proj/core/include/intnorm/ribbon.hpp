#pragma once

#include <string>
#include <utility>
#include <vector>

namespace intnorm {

/// One closed curve of the collection, as a directed straight-ahead walk.
/// `steps[k]` is the half-edge the walk departs from at step k; the walk
/// traverses the edge {steps[k], mate(steps[k])}, arrives at the mate slot
/// and continues from the opposite slot of the same vertex.  The stored
/// direction (+1) is the one whose step set contains the smallest
/// half-edge of the orbit pair.
struct Component {
    std::vector<int> steps;
};

/// Arc of the dual graph, one per edge.  `from` is the face containing the
/// smaller half-edge of the edge, `to` the face containing its mate.  The
/// arc's direction is the framing-positive crossing direction over the
/// edge: it completes the edge's canonical traversal (smaller half-edge
/// toward its mate) to a positively oriented frame.
struct DualArc {
    int from = 0;
    int to = 0;
};

class RibbonGraph;

/// Where an edge of the original graph lands after a smoothing.  `sign` is
/// +1 when the canonical direction of the old edge agrees with the
/// canonical direction of its image.
struct EdgeImage {
    int edge = -1;
    int sign = 0;
};

struct AttachResult;

/// A collection of closed curves in generic position on the closed
/// oriented surface it fills, encoded as a 4-valent fat graph: vertex i
/// owns half-edges 4i..4i+3; `rotation_next` is the counterclockwise
/// cyclic successor at the vertex; `mate` is the fixed-point-free edge
/// involution.  Faces are the orbits of h -> rotation_next(mate(h)); with
/// counterclockwise rotations, the face of h lies to the right when
/// traveling from h toward mate(h).
class RibbonGraph {
public:
    static RibbonGraph parse(const std::string& text);
    static RibbonGraph from_rotations(int n_vertices,
                                      std::vector<int> rotation_next,
                                      std::vector<int> mate);

    int vertex_count() const { return n_vertices_; }
    int half_edge_count() const { return 4 * n_vertices_; }
    int edge_count() const { return 2 * n_vertices_; }
    int face_count() const { return static_cast<int>(faces_.size()); }
    int genus() const { return genus_; }

    int rotation_next(int h) const { return rot_next_[h]; }
    int mate(int h) const { return mate_[h]; }
    int opposite_slot(int h) const { return rot_next_[rot_next_[h]]; }
    int vertex_of(int h) const { return h / 4; }

    int edge_of(int h) const { return edge_of_[h]; }
    /// Half-edge pair of edge e, smaller first; the canonical direction of
    /// the edge runs from the smaller half-edge to its mate.
    std::pair<int, int> edge_ends(int e) const { return edges_[e]; }

    int face_of(int h) const { return face_of_[h]; }
    const std::vector<std::vector<int>>& faces() const { return faces_; }

    const std::vector<Component>& components() const { return components_; }
    int component_of_step(int h) const { return comp_of_[h]; }
    /// True when the directed step h belongs to the +1 walk of its component.
    bool step_is_canonical(int h) const { return canonical_step_[h]; }

    /// Dual graph: one node per face, dual_arcs()[e] for edge e.
    const std::vector<DualArc>& dual_arcs() const { return dual_arcs_; }

    /// Orientation-respecting smoothing of the crossing at `vertex`.  The
    /// two strands through the vertex, directed by the per-component
    /// orientations (+1/-1, one per component), are reconnected so the
    /// directions match and the crossing disappears.
    AttachResult attach(const std::vector<int>& orientations, int vertex) const;

    /// Serialization in the ribbon-graph file format.
    std::string to_text() const;

private:
    RibbonGraph() = default;
    void finish_construction();

    int n_vertices_ = 0;
    int genus_ = 0;
    std::vector<int> rot_next_;
    std::vector<int> mate_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> edge_of_;
    std::vector<std::vector<int>> faces_;
    std::vector<int> face_of_;
    std::vector<Component> components_;
    std::vector<int> comp_of_;
    std::vector<char> canonical_step_;
    std::vector<DualArc> dual_arcs_;
};

struct AttachResult {
    RibbonGraph graph;
    std::vector<EdgeImage> edge_map;
};

}  // namespace intnorm
