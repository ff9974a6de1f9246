#include "cycshift/parabolic.hpp"

namespace cycshift {

Element min_rep(const CoxeterGroup& g, Element w, SimpleSubset J, Side side) {
  const auto gens = J.members();
  bool reduced = true;
  while (reduced) {
    reduced = false;
    for (Generator s : gens) {
      if (g.is_descent(w, s, side == Side::Right ? Side::Left : Side::Right)) {
        w = side == Side::Right ? g.lmul(s, w) : g.rmul(w, s);
        reduced = true;
        break;
      }
    }
  }
  return w;
}

Element min_double_rep(const CoxeterGroup& g, Element w, SimpleSubset J, SimpleSubset K) {
  const Element r = min_rep(g, min_rep(g, w, J, Side::Right), K, Side::Left);
  if (!in_left_reduced(g, r, J) || !in_right_reduced(g, r, K)) {
    throw CoxeterError("double coset reduction did not reach a minimal representative");
  }
  return r;
}

bool in_left_reduced(const CoxeterGroup& g, Element w, SimpleSubset J) {
  return (g.descents(w, Side::Left) & J).empty();
}

bool in_right_reduced(const CoxeterGroup& g, Element w, SimpleSubset K) {
  return (g.descents(w, Side::Right) & K).empty();
}

std::vector<Element> double_coset_reps(const CoxeterGroup& g, SimpleSubset J, SimpleSubset K) {
  std::vector<Element> out;
  for (std::size_t i = 0; i < g.order(); ++i) {
    const Element w = g.element(i);
    if (in_left_reduced(g, w, J) && in_right_reduced(g, w, K)) out.push_back(w);
  }
  return out;
}

std::vector<Element> minimal_reps(const CoxeterGroup& g, SimpleSubset J,
                                  const DiagramAutomorphism& delta, RepKind kind) {
  switch (kind) {
    case RepKind::RightCosets: return double_coset_reps(g, J, SimpleSubset{});
    case RepKind::LeftCosets: return double_coset_reps(g, SimpleSubset{}, delta(J));
    case RepKind::DoubleCosets: return double_coset_reps(g, J, delta(J));
  }
  return {};
}

ElementSet parabolic_elements(const CoxeterGroup& g, SimpleSubset J) {
  std::vector<Element> out{g.identity()};
  std::vector<char> seen(g.order(), 0);
  seen[0] = 1;
  const auto gens = J.members();
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (Generator s : gens) {
      const Element next = g.rmul(out[head], s);
      if (!seen[next.id]) {
        seen[next.id] = 1;
        out.push_back(next);
      }
    }
  }
  return ElementSet(std::move(out));
}

AdImage ad_on_simples(const CoxeterGroup& g, Element w, const DiagramAutomorphism& delta,
                      SimpleSubset K) {
  SimpleSubset image;
  for (Generator s : K.members()) {
    const auto t = g.as_generator(g.conjugate_generator(w, delta(s)));
    if (!t) return AdImage{std::nullopt, s};
    image.insert(*t);
  }
  return AdImage{image, 0};
}

AdImage ad_inverse_on_simples(const CoxeterGroup& g, Element x, SimpleSubset K) {
  return ad_on_simples(g, g.inverse(x), DiagramAutomorphism::identity(g.rank()), K);
}

namespace {

// {s in A : s = w delta(t) w^-1 for some t in B}
SimpleSubset ad_image_within(const CoxeterGroup& g, Element w, const DiagramAutomorphism& delta,
                             SimpleSubset B, SimpleSubset A) {
  SimpleSubset out;
  for (Generator t : B.members()) {
    const auto s = g.as_generator(g.conjugate_generator(w, delta(t)));
    if (s && A.contains(*s)) out.insert(*s);
  }
  return out;
}

}  // namespace

SimpleSubset i_subset(const CoxeterGroup& g, SimpleSubset J, Element w,
                      const DiagramAutomorphism& delta) {
  // Shrinking K -> {s in K : w delta(s) w^-1 in K} keeps every K' with
  // Ad(w) delta(K') = K', so its fixed point is the maximum.
  SimpleSubset K = J;
  while (true) {
    SimpleSubset next;
    for (Generator s : K.members()) {
      const auto t = g.as_generator(g.conjugate_generator(w, delta(s)));
      if (t && K.contains(*t)) next.insert(s);
    }
    if (next == K) return K;
    K = next;
  }
}

BedardTrace bedard_sequence(const CoxeterGroup& g, SimpleSubset J, Element w,
                            const DiagramAutomorphism& delta) {
  if (!in_left_reduced(g, w, J)) {
    throw CoxeterError("bedard_sequence: element is not a minimal right coset representative");
  }
  BedardTrace trace;
  SimpleSubset Jn = J;
  while (true) {
    const Element wn = min_rep(g, w, delta(Jn), Side::Left);
    trace.steps.push_back({Jn, wn});
    const SimpleSubset next = Jn & ad_image_within(g, wn, delta, Jn, Jn);
    if (next == Jn) break;
    Jn = next;
  }
  trace.stabilized_at = trace.steps.size() - 1;
  return trace;
}

ElementSet j_infinity_oracle(const CoxeterGroup& g, SimpleSubset J, Element w,
                             const DiagramAutomorphism& delta) {
  const std::size_t n = g.order();
  const Element w_inv = g.inverse(w);
  const DiagramAutomorphism delta_inv = delta.inverse();
  // phi(x) = w delta(x) w^-1 is a bijection of W; tabulate it and its inverse.
  std::vector<std::uint32_t> phi(n);
  std::vector<std::uint32_t> phi_inv(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Element x = g.element(i);
    const Element y = g.multiply(g.multiply(w, g.apply(delta, x)), w_inv);
    phi[i] = y.id;
    phi_inv[y.id] = static_cast<std::uint32_t>(i);
  }
  std::vector<char> member(n, 0);
  for (Element x : parabolic_elements(g, J)) member[x.id] = 1;

  for (std::size_t iter = 0; iter <= n; ++iter) {
    std::vector<char> next(n, 0);
    bool changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      // X ∩ phi(X) ∩ phi^-1(X)
      next[i] = member[i] && member[phi_inv[i]] && member[phi[i]];
      changed = changed || next[i] != member[i];
    }
    member.swap(next);
    if (!changed) break;
  }
  std::vector<Element> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (member[i]) out.push_back(g.element(i));
  }
  return ElementSet(std::move(out));
}

}  // namespace cycshift
