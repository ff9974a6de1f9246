#pragma once

#include <chrono>
#include <vector>

#include "cycshift/coxeter.hpp"
#include "cycshift/element_set.hpp"

// Brute-force reference implementations. These use only the group
// arithmetic of CoxeterGroup and deliberately none of the algorithms in the
// other modules.
namespace cycshift::oracle {

class OracleTimeout : public CoxeterError {
 public:
  using CoxeterError::CoxeterError;
};

inline constexpr std::chrono::milliseconds kDefaultBudget{30'000};

/// Wall-clock budget for one oracle call.
class Budget {
 public:
  explicit Budget(std::chrono::milliseconds limit = kDefaultBudget)
      : deadline_(std::chrono::steady_clock::now() + limit) {}
  /// Throws OracleTimeout once the deadline has passed.
  void check(const char* oracle) const;

 private:
  std::chrono::steady_clock::time_point deadline_;
};

/// W_J as the elements whose canonical reduced word uses only letters in J.
ElementSet parabolic(const CoxeterGroup& g, SimpleSubset J);

/// Maximum over all subsets K of J with {w delta(s) w^-1 : s in K} = K.
SimpleSubset i_subset(const CoxeterGroup& g, SimpleSubset J, Element w,
                      const DiagramAutomorphism& delta, Budget budget = Budget());

/// Orbits of delta-conjugation by W_J, via union-find over all pairs.
/// Blocks are sorted by their least element.
std::vector<ElementSet> orbits(const CoxeterGroup& g, SimpleSubset J,
                               const DiagramAutomorphism& delta, Budget budget = Budget());

/// Closure of w under w = xy |-> y delta(x), l(x) + l(y) = l(w) = l(y delta(x)),
/// scanning every x in W.
ElementSet shift_class(const CoxeterGroup& g, Element w, const DiagramAutomorphism& delta,
                       Budget budget = Budget());

/// Products of all subwords of the canonical reduced word of b.
ElementSet bruhat_lower_set(const CoxeterGroup& g, Element b, Budget budget = Budget());

bool bruhat_leq(const CoxeterGroup& g, Element a, Element b, Budget budget = Budget());

/// Exists u in W_J with u w' delta(u)^-1 below w (subword criterion).
bool partial_leq(const CoxeterGroup& g, Element w_prime, Element w, SimpleSubset J,
                 const DiagramAutomorphism& delta, Budget budget = Budget());

struct CycSolution {
  Element w_prime;
  Element x;
  Element u;

  bool operator==(const CycSolution&) const = default;
};

/// Every (w', x, u) with w' in ^J W, x in W_J ∩ W^I, u in W_I, I = I(J,w',delta),
/// and x^-1 w delta(x) = u w'.
std::vector<CycSolution> cyc_solutions(const CoxeterGroup& g, SimpleSubset J,
                                       const DiagramAutomorphism& delta, Element w,
                                       Budget budget = Budget());

}  // namespace cycshift::oracle
