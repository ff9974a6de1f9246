#include "cycshift/oracle.hpp"

#include <map>
#include <numeric>

namespace cycshift::oracle {

void Budget::check(const char* oracle) const {
  if (std::chrono::steady_clock::now() > deadline_) {
    throw OracleTimeout(std::string("oracle ") + oracle + " exceeded its time budget");
  }
}

ElementSet parabolic(const CoxeterGroup& g, SimpleSubset J) {
  std::vector<Element> out;
  for (std::size_t i = 0; i < g.order(); ++i) {
    const Element w = g.element(i);
    bool inside = true;
    for (Generator s : g.word_of(w)) inside = inside && J.contains(s);
    if (inside) out.push_back(w);
  }
  return ElementSet(std::move(out));
}

namespace {

bool left_descent_free(const CoxeterGroup& g, Element w, SimpleSubset J) {
  for (Generator s : J.members()) {
    if (g.length(g.multiply(g.generator(s), w)) < g.length(w)) return false;
  }
  return true;
}

bool right_descent_free(const CoxeterGroup& g, Element w, SimpleSubset J) {
  for (Generator s : J.members()) {
    if (g.length(g.multiply(w, g.generator(s))) < g.length(w)) return false;
  }
  return true;
}

}  // namespace

SimpleSubset i_subset(const CoxeterGroup& g, SimpleSubset J, Element w,
                      const DiagramAutomorphism& delta, Budget budget) {
  SimpleSubset best;
  const Element w_inv = g.inverse(w);
  for (std::uint32_t mask = 0; mask < (1u << g.rank()); ++mask) {
    const SimpleSubset K(mask);
    if (!K.subset_of(J)) continue;
    budget.check("i_subset");
    std::vector<Element> image;
    std::vector<Element> target;
    for (Generator s : K.members()) {
      image.push_back(g.multiply(g.multiply(w, g.generator(delta(s))), w_inv));
      target.push_back(g.generator(s));
    }
    if (ElementSet(image) == ElementSet(target) && K.size() > best.size()) best = K;
  }
  return best;
}

std::vector<ElementSet> orbits(const CoxeterGroup& g, SimpleSubset J,
                               const DiagramAutomorphism& delta, Budget budget) {
  const std::size_t n = g.order();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (Element x : parabolic(g, J)) {
    budget.check("orbits");
    const Element dx_inv = g.inverse(g.apply(delta, x));
    for (std::size_t i = 0; i < n; ++i) {
      const Element w = g.element(i);
      const Element v = g.multiply(g.multiply(x, w), dx_inv);
      const std::size_t a = find(i);
      const std::size_t b = find(v.id);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::map<std::size_t, std::vector<Element>> groups;
  for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(g.element(i));
  std::vector<ElementSet> out;
  for (auto& [root, members] : groups) out.emplace_back(std::move(members));
  return out;
}

ElementSet shift_class(const CoxeterGroup& g, Element w, const DiagramAutomorphism& delta,
                       Budget budget) {
  const int len = g.length(w);
  std::vector<char> seen(g.order(), 0);
  std::vector<Element> out{w};
  seen[w.id] = 1;
  for (std::size_t head = 0; head < out.size(); ++head) {
    budget.check("shift_class");
    const Element v = out[head];
    for (std::size_t i = 0; i < g.order(); ++i) {
      const Element x = g.element(i);
      const Element y = g.multiply(g.inverse(x), v);
      if (g.length(x) + g.length(y) != len) continue;
      const Element next = g.multiply(y, g.apply(delta, x));
      if (g.length(next) == len && !seen[next.id]) {
        seen[next.id] = 1;
        out.push_back(next);
      }
    }
  }
  return ElementSet(std::move(out));
}

ElementSet bruhat_lower_set(const CoxeterGroup& g, Element b, Budget budget) {
  const Word word = g.word_of(b);
  const std::size_t k = word.size();
  std::vector<Element> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    if ((mask & 0xfff) == 0) budget.check("bruhat_lower_set");
    Element cur = g.identity();
    for (std::size_t i = 0; i < k; ++i) {
      if ((mask >> i) & 1u) cur = g.multiply(cur, g.generator(word[i]));
    }
    out.push_back(cur);
  }
  return ElementSet(std::move(out));
}

bool bruhat_leq(const CoxeterGroup& g, Element a, Element b, Budget budget) {
  return bruhat_lower_set(g, b, budget).contains(a);
}

bool partial_leq(const CoxeterGroup& g, Element w_prime, Element w, SimpleSubset J,
                 const DiagramAutomorphism& delta, Budget budget) {
  const ElementSet below = bruhat_lower_set(g, w, budget);
  for (Element u : parabolic(g, J)) {
    budget.check("partial_leq");
    const Element v =
        g.multiply(g.multiply(u, w_prime), g.inverse(g.apply(delta, u)));
    if (below.contains(v)) return true;
  }
  return false;
}

std::vector<CycSolution> cyc_solutions(const CoxeterGroup& g, SimpleSubset J,
                                       const DiagramAutomorphism& delta, Element w,
                                       Budget budget) {
  std::vector<CycSolution> out;
  const ElementSet WJ = parabolic(g, J);
  for (std::size_t i = 0; i < g.order(); ++i) {
    const Element wp = g.element(i);
    if (!left_descent_free(g, wp, J)) continue;
    budget.check("cyc_solutions");
    const SimpleSubset I = i_subset(g, J, wp, delta, budget);
    const ElementSet WI = parabolic(g, I);
    for (Element x : WJ) {
      if (!right_descent_free(g, x, I)) continue;
      const Element c = g.multiply(g.multiply(g.inverse(x), w), g.apply(delta, x));
      const Element u = g.multiply(c, g.inverse(wp));
      if (WI.contains(u)) out.push_back({wp, x, u});
    }
  }
  return out;
}

}  // namespace cycshift::oracle
