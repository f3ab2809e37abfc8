#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "intnorm/ribbon.hpp"

namespace intnorm {

/// Integer multiplicities per dual arc (indexed by edge).  Positive means
/// framing-positive crossings of the underlying edge.
using Chain = std::vector<std::int64_t>;

/// Coordinates of a first-homology class in the model's basis.
using ClassVector = std::vector<std::int64_t>;

/// Integer homology of the surface filled by a curve collection, computed
/// from the dual cell structure (nodes = faces, arcs = edges, one 2-cell
/// around each crossing).
///
/// The basis consists of 2g cycles in the dual graph whose classes freely
/// generate H_1.  A class is reported by its expansion coefficients in
/// this basis; the coefficients of a dual cycle are recovered exactly from
/// a spanning-tree decomposition followed by a Smith-normal-form reduction
/// of the 2-cell relations, so the zero vector is equivalent to the zero
/// class.
class HomologyModel {
public:
    static HomologyModel build(const RibbonGraph& g);

    const RibbonGraph& graph() const { return graph_; }
    /// Rank of H_1, i.e. twice the genus.
    int rank() const { return rank_; }

    /// Basis cycle j as a dual chain; entry e is the signed crossing count
    /// of the cycle over edge e in the framing-positive direction.
    const Chain& basis_chain(int j) const { return basis_[j]; }
    std::int64_t crossing(int edge, int j) const { return basis_[j][edge]; }

    /// Boundary of the dual 2-cell around `vertex`; adding it to any chain
    /// does not change the class.
    const Chain& vertex_relation(int vertex) const { return relations_[vertex]; }

    bool is_cycle(const Chain& f) const;
    /// Expansion coefficients of a boundary-free dual chain in the basis.
    ClassVector class_of_cycle(const Chain& f) const;
    /// The distinguished representative of a class: the same coefficients
    /// applied to the basis cycles.
    Chain representative_chain(const ClassVector& a) const;

    /// Transverse push-off of the component slightly to its left (for the
    /// +1 walk direction when sign is +1), as a dual chain homologous to
    /// the component.
    Chain pushoff_chain(const Component& c, int sign) const;
    ClassVector component_class(const Component& c, int sign) const;
    /// Signed intersection numbers of the oriented component with each
    /// basis cycle, accumulated over shared edges.
    ClassVector intersection_with_basis(const Component& c, int sign) const;

    /// Some orientation of the components whose total class is nonzero,
    /// when one exists.  Equivalent to: some single component class is
    /// nonzero.
    std::optional<std::vector<int>> nontriviality_certificate() const;

private:
    HomologyModel(const RibbonGraph& g) : graph_(g) {}

    RibbonGraph graph_;
    int rank_ = 0;
    std::vector<Chain> basis_;
    std::vector<Chain> relations_;
    std::vector<int> nontree_edges_;              // fundamental-cycle generators
    std::vector<Chain> fundamental_cycles_;       // one per non-tree edge
    std::vector<std::vector<std::int64_t>> quotient_rows_;  // rows of U picking the free part
};

/// Signed count of the oriented component's crossings with a transverse
/// chain, summed over the edges the component traverses.
std::int64_t pairing_with_chain(const RibbonGraph& g, const Component& c, int sign,
                                const Chain& f);

/// Image of a dual chain under the edge identifications of a smoothing.
Chain transport_chain(const AttachResult& res, const Chain& f);

/// Algebraic intersection number of two distinct oriented components,
/// summed over their shared crossings.
std::int64_t crossing_sign_sum(const RibbonGraph& g, const Component& a, int sign_a,
                               const Component& b, int sign_b);

}  // namespace intnorm
