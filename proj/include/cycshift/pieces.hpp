#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cycshift/coxeter.hpp"
#include "cycshift/element_set.hpp"

namespace cycshift {

/// A pair (w, K) with w in ^K W and Ad(w) delta(K) = K. The automorphism is
/// context supplied by the caller.
struct CombinatorialPiece {
  Element w;
  SimpleSubset K;

  auto operator<=>(const CombinatorialPiece&) const = default;
};

enum class PieceViolation {
  NotMinimal,     ///< w has a left descent in K
  NotNormalized,  ///< Ad(w) delta(K) != K
};

const char* describe(PieceViolation v);

class PieceError : public CoxeterError {
 public:
  using CoxeterError::CoxeterError;
};

std::optional<PieceViolation> piece_violation(const CoxeterGroup& g, Element w, SimpleSubset K,
                                              const DiagramAutomorphism& delta);

/// Throws PieceError naming the violated condition.
CombinatorialPiece make_piece(const CoxeterGroup& g, Element w, SimpleSubset K,
                              const DiagramAutomorphism& delta);

/// (x^-1 w delta(x), Ad(x)^-1(K)), or nullopt if x does not act on the piece
/// or the result is not a piece.
std::optional<CombinatorialPiece> try_conjugate_piece(const CoxeterGroup& g, Element x,
                                                      const CombinatorialPiece& piece,
                                                      const DiagramAutomorphism& delta);

/// As try_conjugate_piece, but throws PieceError on failure.
CombinatorialPiece conjugate_piece(const CoxeterGroup& g, Element x,
                                   const CombinatorialPiece& piece,
                                   const DiagramAutomorphism& delta);

/// W_K w
ElementSet piece_set(const CoxeterGroup& g, const CombinatorialPiece& piece);

struct ShiftStep {
  Element x;
  CombinatorialPiece from;
  CombinatorialPiece to;

  bool operator==(const ShiftStep&) const = default;
};

/// The step (w,K) --x--> (w',K') if x acts and l(w) = l(x) + l(x^-1 w) = l(w').
std::optional<ShiftStep> shift_step(const CoxeterGroup& g, const CombinatorialPiece& from,
                                    Element x, const DiagramAutomorphism& delta);

bool is_valid_shift_step(const CoxeterGroup& g, const ShiftStep& step,
                         const DiagramAutomorphism& delta);

/// One link of a witness chain. `forward` is false when the step was used
/// against its direction, i.e. the chain moves from step.to to step.from.
struct ChainLink {
  ShiftStep step;
  bool forward = true;

  const CombinatorialPiece& source() const { return forward ? step.from : step.to; }
  const CombinatorialPiece& target() const { return forward ? step.to : step.from; }
};

struct ShiftWitness {
  bool equivalent = false;
  std::vector<ChainLink> chain;
};

/// Decides p ≈_{J,delta} q: reachability in the equivalence generated by
/// shift steps with x in W_J. Breadth-first; x is scanned in ShortLex order,
/// forward steps before reversed ones, so witnesses are deterministic.
/// Throws PieceError if p or q is not a piece.
ShiftWitness shift_equivalent(const CoxeterGroup& g, const CombinatorialPiece& p,
                              const CombinatorialPiece& q, SimpleSubset J,
                              const DiagramAutomorphism& delta);

/// The full ≈_{J,delta} class of p, sorted.
std::vector<CombinatorialPiece> piece_shift_class(const CoxeterGroup& g,
                                                  const CombinatorialPiece& p, SimpleSubset J,
                                                  const DiagramAutomorphism& delta);

}  // namespace cycshift
