#pragma once

#include <vector>

#include "cycshift/coxeter.hpp"
#include "cycshift/element_set.hpp"
#include "cycshift/pieces.hpp"

namespace cycshift {

/// A computed result failed one of its own consistency checks.
class CheckFailure : public CoxeterError {
 public:
  using CoxeterError::CoxeterError;
};

// ---------------------------------------------------------------------------
// Partition of W into W_J-orbits of delta-conjugation

struct DecompositionBlock {
  Element representative;  ///< w' in ^J W
  SimpleSubset I;          ///< I(J, w', delta)
  ElementSet orbit;        ///< W_J ._delta (W_I w')

  bool operator==(const DecompositionBlock&) const = default;
};

struct PartialDecomposition {
  SimpleSubset J;
  DiagramAutomorphism delta;
  std::vector<DecompositionBlock> blocks;  ///< ordered by representative

  bool operator==(const PartialDecomposition&) const = default;
};

/// OpenMP kernel: one block per w' in ^J W, computed in parallel.
PartialDecomposition decompose(const CoxeterGroup& g, SimpleSubset J,
                               const DiagramAutomorphism& delta);
/// Serial reference for decompose.
PartialDecomposition decompose_serial(const CoxeterGroup& g, SimpleSubset J,
                                      const DiagramAutomorphism& delta);

/// True iff the blocks are pairwise disjoint and cover W.
bool is_partition(const CoxeterGroup& g, const PartialDecomposition& d);

/// For all a in W_J and b in W_I w' with a b delta(a)^-1 in W_I w': a in W_I.
bool stabilizer_check(const CoxeterGroup& g, SimpleSubset J, const DiagramAutomorphism& delta,
                      Element w_prime);

// ---------------------------------------------------------------------------
// The order <=_{J,delta} on ^J W

/// Exists u in W_J with u w' delta(u)^-1 <= w. Throws if w' is not in ^J W.
bool partial_leq(const CoxeterGroup& g, SimpleSubset J, const DiagramAutomorphism& delta,
                 Element w_prime, Element w);

/// Relation matrix of <=_{J,delta} on ^J W (row-major, vertices in handle order).
struct OrderRelation {
  std::vector<Element> vertices;
  std::vector<char> leq;

  bool at(std::size_t i, std::size_t j) const { return leq[i * vertices.size() + j] != 0; }
  bool operator==(const OrderRelation&) const = default;
};

/// OpenMP kernel: rows are computed in parallel.
OrderRelation partial_order(const CoxeterGroup& g, SimpleSubset J,
                            const DiagramAutomorphism& delta);
/// Serial reference for partial_order.
OrderRelation partial_order_serial(const CoxeterGroup& g, SimpleSubset J,
                                   const DiagramAutomorphism& delta);

struct CoverEdge {
  Element lower;
  Element upper;
  bool bruhat = true;  ///< false when lower is not Bruhat-below upper

  auto operator<=>(const CoverEdge&) const = default;
};

struct HasseDiagram {
  std::vector<Element> vertices;
  std::vector<CoverEdge> covers;  ///< sorted by (lower, upper)
};

/// Transitive reduction of a relation given as a reflexive partial order.
/// Throws CheckFailure if the relation is not reflexive and antisymmetric.
std::vector<std::pair<std::size_t, std::size_t>> transitive_reduction(const OrderRelation& rel);

HasseDiagram hasse(const CoxeterGroup& g, SimpleSubset J, const DiagramAutomorphism& delta);

/// The Bruhat order restricted to ^J W, as a Hasse diagram.
HasseDiagram bruhat_hasse(const CoxeterGroup& g, SimpleSubset J);

/// The unique <=_{J,delta}-maximal element of {w' in ^J W : w' <=_{J,delta} w}.
Element max_below(const CoxeterGroup& g, Element w, SimpleSubset J,
                  const DiagramAutomorphism& delta);

// ---------------------------------------------------------------------------
// Cyclic shift certificates

/// One round of the quadruple construction.
struct QuadrupleStep {
  SimpleSubset J_n;
  Element w_n;        ///< min of w''_n W_{delta(J_n)}
  Element x_n;        ///< in W_{J_n} ∩ W^{J_{n+1}}
  Element y_n;        ///< in W_{J_{n+1}}
  Element conjugate;  ///< w'_n = (x_0...x_{n-1})^-1 w delta(x_0...x_{n-1})

  bool operator==(const QuadrupleStep&) const = default;
};

struct CycCertificate {
  SimpleSubset J;
  DiagramAutomorphism delta;
  CombinatorialPiece input;

  Element w_prime;         ///< in ^J W
  Element x;               ///< in W_J ∩ W^{I}
  Element u;               ///< in W_I
  SimpleSubset I;          ///< I(J, w', delta)
  SimpleSubset K_prime;    ///< Ad(x)^-1(K)
  std::vector<ShiftStep> chain;  ///< non-trivial steps x_n, in order
  std::vector<QuadrupleStep> quadruples;
  bool length_constant = true;

  bool operator==(const CycCertificate&) const = default;
};

/// Runs the quadruple construction on (w, K). Requires K ⊆ J, (w, K) a
/// piece, and w of minimal length in W_J ._delta w; throws CoxeterError
/// otherwise. Every claimed property of the output is checked before return.
CycCertificate theorem_cyc(const CoxeterGroup& g, SimpleSubset J,
                           const DiagramAutomorphism& delta, const CombinatorialPiece& piece);

struct IotaResult {
  Element w;
  Element image;
  CycCertificate certificate;
};

/// The left-right symmetry W^{delta(J)} -> ^J W.
IotaResult iota(const CoxeterGroup& g, SimpleSubset J, const DiagramAutomorphism& delta,
                Element w);

struct InductionDatum {
  SimpleSubset J;
  SimpleSubset J_prime;
  Element w;
  Element w_prime;
  Element x;
  Element u;
  SimpleSubset K;        ///< I(J, w, delta)
  SimpleSubset K1;       ///< Ad(x)^-1(K)
  SimpleSubset K_prime;  ///< I(J', w', delta)
  /// False when w is not minimal in its W_{J'}-orbit; the quadruple data are
  /// still exact, but the steps need not preserve length.
  bool length_constant = true;
  CycCertificate certificate;

  bool operator==(const InductionDatum&) const = default;
};

/// Requires J ⊆ J', w in ^J W, and w minimal in W_J ._delta w.
InductionDatum induction_datum(const CoxeterGroup& g, SimpleSubset J, SimpleSubset J_prime,
                               const DiagramAutomorphism& delta, Element w);

}  // namespace cycshift
