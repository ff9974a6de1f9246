#pragma once

#include <optional>
#include <vector>

#include "cycshift/coxeter.hpp"
#include "cycshift/element_set.hpp"

namespace cycshift {

/// Minimal representative of a parabolic coset.
///
/// side == Right: the coset W_J w; the result has no left descent in J.
/// side == Left:  the coset w W_J; the result has no right descent in J.
Element min_rep(const CoxeterGroup& g, Element w, SimpleSubset J, Side side);

/// Minimal representative of the double coset W_J w W_K.
Element min_double_rep(const CoxeterGroup& g, Element w, SimpleSubset J, SimpleSubset K);

/// True iff w has no left descent in J, i.e. w lies in ^J W.
bool in_left_reduced(const CoxeterGroup& g, Element w, SimpleSubset J);
/// True iff w has no right descent in K, i.e. w lies in W^K.
bool in_right_reduced(const CoxeterGroup& g, Element w, SimpleSubset K);

enum class RepKind {
  RightCosets,   ///< ^J W
  LeftCosets,    ///< W^{delta(J)}
  DoubleCosets,  ///< ^J W^{delta(J)}
};

/// Complete list of minimal representatives, sorted by (length, ShortLex).
std::vector<Element> minimal_reps(const CoxeterGroup& g, SimpleSubset J,
                                  const DiagramAutomorphism& delta, RepKind kind);

/// ^J W ∩ W^K for arbitrary J, K.
std::vector<Element> double_coset_reps(const CoxeterGroup& g, SimpleSubset J, SimpleSubset K);

/// The standard parabolic subgroup W_J.
ElementSet parabolic_elements(const CoxeterGroup& g, SimpleSubset J);

/// Result of applying Ad(w) o delta to a set of simple reflections.
struct AdImage {
  std::optional<SimpleSubset> image;
  /// First s in K whose image w delta(s) w^-1 is not simple (0 on success).
  Generator offending = 0;

  bool ok() const { return image.has_value(); }
};

/// {w delta(s) w^-1 : s in K}, or failure if some image is not simple.
AdImage ad_on_simples(const CoxeterGroup& g, Element w, const DiagramAutomorphism& delta,
                      SimpleSubset K);

/// {x^-1 s x : s in K}, or failure; this is Ad(x)^-1(K).
AdImage ad_inverse_on_simples(const CoxeterGroup& g, Element x, SimpleSubset K);

/// I(J, w, delta): the largest K in J with Ad(w) delta(K) = K.
SimpleSubset i_subset(const CoxeterGroup& g, SimpleSubset J, Element w,
                      const DiagramAutomorphism& delta);

struct BedardStep {
  SimpleSubset subset;
  Element element;

  bool operator==(const BedardStep&) const = default;
};

/// The sequence (J_n, w_n) attached to w in ^J W, listed up to and including
/// the first index at which it becomes constant.
struct BedardTrace {
  std::vector<BedardStep> steps;
  std::size_t stabilized_at = 0;

  const BedardStep& limit() const { return steps[stabilized_at]; }
};

/// Throws CoxeterError if w is not in ^J W.
BedardTrace bedard_sequence(const CoxeterGroup& g, SimpleSubset J, Element w,
                            const DiagramAutomorphism& delta);

/// The intersection over all integers n of (Ad(w) o delta)^n (W_J), computed
/// directly on subsets of W. Independent of i_subset.
ElementSet j_infinity_oracle(const CoxeterGroup& g, SimpleSubset J, Element w,
                             const DiagramAutomorphism& delta);

}  // namespace cycshift
