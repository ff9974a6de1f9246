#pragma once

#include <span>
#include <vector>

#include "cycshift/coxeter.hpp"
#include "cycshift/element_set.hpp"

namespace cycshift {

/// w --s--> w' with w' = s w delta(s) and l(w') <= l(w).
struct ShiftEdge {
  Element from;
  Element to;
  Generator label = 0;

  bool operator==(const ShiftEdge&) const = default;
};

/// The (J, delta)-conjugacy graph on all of W, in compressed adjacency form.
/// Out-edges of a vertex are ordered by label.
class ShiftGraph {
 public:
  ShiftGraph(const CoxeterGroup& group, DiagramAutomorphism delta, SimpleSubset labels,
             std::vector<std::uint32_t> offsets, std::vector<ShiftEdge> edges);

  const CoxeterGroup& group() const { return *group_; }
  const DiagramAutomorphism& delta() const { return delta_; }
  SimpleSubset labels() const { return labels_; }
  std::size_t vertex_count() const { return offsets_.size() - 1; }
  std::size_t edge_count() const { return edges_.size(); }

  std::span<const ShiftEdge> out_edges(Element w) const {
    return {edges_.data() + offsets_[w.id], edges_.data() + offsets_[w.id + 1]};
  }
  const std::vector<ShiftEdge>& edges() const { return edges_; }

  bool operator==(const ShiftGraph& o) const {
    return delta_ == o.delta_ && labels_ == o.labels_ && offsets_ == o.offsets_ &&
           edges_ == o.edges_;
  }

 private:
  const CoxeterGroup* group_;
  DiagramAutomorphism delta_;
  SimpleSubset labels_;
  std::vector<std::uint32_t> offsets_;
  std::vector<ShiftEdge> edges_;
};

/// OpenMP kernel: edges are computed per vertex in parallel and assembled in
/// vertex order.
ShiftGraph build_shift_graph(const CoxeterGroup& g, const DiagramAutomorphism& delta,
                             SimpleSubset J);
/// Serial reference for build_shift_graph.
ShiftGraph build_shift_graph_serial(const CoxeterGroup& g, const DiagramAutomorphism& delta,
                                    SimpleSubset J);

/// Directed reachability (the pre-order ->_{J,delta}).
bool reaches(const ShiftGraph& graph, Element from, Element to);

/// Strongly connected components. component[w] is numbered in order of the
/// least vertex of each component.
struct ComponentLabels {
  std::vector<std::uint32_t> component;
  std::size_t count = 0;
};
ComponentLabels strongly_connected_components(const ShiftGraph& graph);

/// Vertices of the weakly connected component containing w.
ElementSet connected_component(const ShiftGraph& graph, Element w);

/// Cyc_delta(w) restricted to labels in J: the strongly connected component of w.
ElementSet cyclic_shift_class(const CoxeterGroup& g, Element w, const DiagramAutomorphism& delta,
                              SimpleSubset J);
ElementSet cyclic_shift_class(const ShiftGraph& graph, Element w);

/// {x w delta(x)^-1 : x in W_J}
ElementSet orbit(const CoxeterGroup& g, Element w, SimpleSubset J,
                 const DiagramAutomorphism& delta);
int min_length_in_orbit(const CoxeterGroup& g, Element w, SimpleSubset J,
                        const DiagramAutomorphism& delta);
bool is_min_length_in_orbit(const CoxeterGroup& g, Element w, SimpleSubset J,
                            const DiagramAutomorphism& delta);

/// A ->_{J,delta} path from w to u w' with w' in ^J W and u in W_{I(J,w',delta)}.
struct Reduction {
  std::vector<ShiftEdge> path;
  Element endpoint;
  Element w_prime;
  Element u;
};

/// Strictly length-decreasing steps (least label first), using length-equal
/// moves to escape plateaus, until w is minimal in its W_J-orbit; then the
/// generator-level expansion of the canonical cyclic shift chain.
Reduction reduce_to_min(const CoxeterGroup& g, Element w, SimpleSubset J,
                        const DiagramAutomorphism& delta);

/// w ≈_delta w' decided by Broué–Michel moves w = xy |-> y delta(x) with
/// lengths adding, searching prefixes x in the weak order.
bool broue_michel_equiv(const CoxeterGroup& g, Element w, Element w_prime,
                        const DiagramAutomorphism& delta);

}  // namespace cycshift
