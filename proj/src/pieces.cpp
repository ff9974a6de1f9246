#include "cycshift/pieces.hpp"

#include <map>

#include "cycshift/parabolic.hpp"

namespace cycshift {

const char* describe(PieceViolation v) {
  switch (v) {
    case PieceViolation::NotMinimal: return "not minimal in ^K W";
    case PieceViolation::NotNormalized: return "K not normalized";
  }
  return "unknown";
}

std::optional<PieceViolation> piece_violation(const CoxeterGroup& g, Element w, SimpleSubset K,
                                              const DiagramAutomorphism& delta) {
  if (!in_left_reduced(g, w, K)) return PieceViolation::NotMinimal;
  const AdImage img = ad_on_simples(g, w, delta, K);
  if (!img.ok() || *img.image != K) return PieceViolation::NotNormalized;
  return std::nullopt;
}

CombinatorialPiece make_piece(const CoxeterGroup& g, Element w, SimpleSubset K,
                              const DiagramAutomorphism& delta) {
  g.check_subset(K);
  if (auto v = piece_violation(g, w, K, delta)) throw PieceError(describe(*v));
  return {w, K};
}

std::optional<CombinatorialPiece> try_conjugate_piece(const CoxeterGroup& g, Element x,
                                                      const CombinatorialPiece& piece,
                                                      const DiagramAutomorphism& delta) {
  const AdImage k = ad_inverse_on_simples(g, x, piece.K);
  if (!k.ok()) return std::nullopt;
  const Element w = g.multiply(g.multiply(g.inverse(x), piece.w), g.apply(delta, x));
  if (piece_violation(g, w, *k.image, delta)) return std::nullopt;
  return CombinatorialPiece{w, *k.image};
}

CombinatorialPiece conjugate_piece(const CoxeterGroup& g, Element x,
                                   const CombinatorialPiece& piece,
                                   const DiagramAutomorphism& delta) {
  const AdImage k = ad_inverse_on_simples(g, x, piece.K);
  if (!k.ok()) {
    throw PieceError("x does not act: x^-1 s" + std::to_string(k.offending) +
                     " x is not simple");
  }
  const Element w = g.multiply(g.multiply(g.inverse(x), piece.w), g.apply(delta, x));
  if (auto v = piece_violation(g, w, *k.image, delta)) {
    throw PieceError(std::string("conjugate is not a piece: ") + describe(*v));
  }
  return {w, *k.image};
}

ElementSet piece_set(const CoxeterGroup& g, const CombinatorialPiece& piece) {
  std::vector<Element> out;
  for (Element u : parabolic_elements(g, piece.K)) out.push_back(g.multiply(u, piece.w));
  return ElementSet(std::move(out));
}

std::optional<ShiftStep> shift_step(const CoxeterGroup& g, const CombinatorialPiece& from,
                                    Element x, const DiagramAutomorphism& delta) {
  const int lw = g.length(from.w);
  if (g.length(x) + g.length(g.multiply(g.inverse(x), from.w)) != lw) return std::nullopt;
  auto to = try_conjugate_piece(g, x, from, delta);
  if (!to || g.length(to->w) != lw) return std::nullopt;
  return ShiftStep{x, from, *to};
}

bool is_valid_shift_step(const CoxeterGroup& g, const ShiftStep& step,
                         const DiagramAutomorphism& delta) {
  if (piece_violation(g, step.from.w, step.from.K, delta)) return false;
  auto expected = shift_step(g, step.from, step.x, delta);
  return expected && expected->to == step.to;
}

namespace {

struct Search {
  std::vector<CombinatorialPiece> nodes;
  std::vector<std::optional<ChainLink>> via;  // link that discovered each node
  std::vector<std::size_t> parent;
  std::map<CombinatorialPiece, std::size_t> index;
};

// Breadth-first search over the undirected step graph. Stops early once
// `target` is found, if given.
Search explore(const CoxeterGroup& g, const CombinatorialPiece& start, SimpleSubset J,
               const DiagramAutomorphism& delta, const CombinatorialPiece* target) {
  const ElementSet WJ = parabolic_elements(g, J);
  const DiagramAutomorphism id = DiagramAutomorphism::identity(g.rank());
  Search s;
  s.nodes.push_back(start);
  s.via.emplace_back();
  s.parent.push_back(0);
  s.index.emplace(start, 0);

  auto visit = [&](std::size_t from, const CombinatorialPiece& next, ChainLink link) {
    if (s.index.contains(next)) return false;
    s.index.emplace(next, s.nodes.size());
    s.nodes.push_back(next);
    s.via.emplace_back(link);
    s.parent.push_back(from);
    return target && next == *target;
  };

  for (std::size_t head = 0; head < s.nodes.size(); ++head) {
    if (target && s.nodes[head] == *target) break;
    const CombinatorialPiece cur = s.nodes[head];
    for (Element x : WJ) {
      if (auto step = shift_step(g, cur, x, delta)) {
        if (visit(head, step->to, ChainLink{*step, true})) return s;
      }
    }
    for (Element x : WJ) {
      // Pieces (w,K) with (w,K) --x--> cur: w = x w' delta(x)^-1, K = Ad(x)K'.
      const AdImage k = ad_on_simples(g, x, id, cur.K);
      if (!k.ok()) continue;
      const Element w = g.twisted_conjugate(x, cur.w, delta);
      if (piece_violation(g, w, *k.image, delta)) continue;
      const CombinatorialPiece prev{w, *k.image};
      auto step = shift_step(g, prev, x, delta);
      if (step && step->to == cur) {
        if (visit(head, prev, ChainLink{*step, false})) return s;
      }
    }
  }
  return s;
}

}  // namespace

ShiftWitness shift_equivalent(const CoxeterGroup& g, const CombinatorialPiece& p,
                              const CombinatorialPiece& q, SimpleSubset J,
                              const DiagramAutomorphism& delta) {
  for (const auto* piece : {&p, &q}) {
    if (auto v = piece_violation(g, piece->w, piece->K, delta)) throw PieceError(describe(*v));
  }
  ShiftWitness result;
  if (p == q) {
    result.equivalent = true;
    return result;
  }
  if (g.length(p.w) != g.length(q.w) || p.K.size() != q.K.size()) return result;

  const Search s = explore(g, p, J, delta, &q);
  auto it = s.index.find(q);
  if (it == s.index.end()) return result;
  result.equivalent = true;
  for (std::size_t node = it->second; node != 0; node = s.parent[node]) {
    result.chain.push_back(*s.via[node]);
  }
  std::reverse(result.chain.begin(), result.chain.end());
  return result;
}

std::vector<CombinatorialPiece> piece_shift_class(const CoxeterGroup& g,
                                                  const CombinatorialPiece& p, SimpleSubset J,
                                                  const DiagramAutomorphism& delta) {
  if (auto v = piece_violation(g, p.w, p.K, delta)) throw PieceError(describe(*v));
  Search s = explore(g, p, J, delta, nullptr);
  std::sort(s.nodes.begin(), s.nodes.end());
  return s.nodes;
}

}  // namespace cycshift
