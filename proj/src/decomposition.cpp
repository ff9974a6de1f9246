#include "cycshift/decomposition.hpp"

#include <algorithm>

#include "cycshift/parabolic.hpp"
#include "cycshift/shift_graph.hpp"

namespace cycshift {

namespace {

DecompositionBlock make_block(const CoxeterGroup& g, SimpleSubset J,
                              const DiagramAutomorphism& delta, Element rep) {
  DecompositionBlock block;
  block.representative = rep;
  block.I = i_subset(g, J, rep, delta);
  // Close W_I w' under delta-conjugation by the generators of W_J.
  const auto labels = J.members();
  std::vector<char> seen(g.order(), 0);
  std::vector<Element> members;
  for (Element u : parabolic_elements(g, block.I)) {
    const Element v = g.multiply(u, rep);
    if (!seen[v.id]) {
      seen[v.id] = 1;
      members.push_back(v);
    }
  }
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (Generator s : labels) {
      const Element v = g.lmul(s, g.rmul(members[head], delta(s)));
      if (!seen[v.id]) {
        seen[v.id] = 1;
        members.push_back(v);
      }
    }
  }
  block.orbit = ElementSet(std::move(members));
  return block;
}

}  // namespace

PartialDecomposition decompose_serial(const CoxeterGroup& g, SimpleSubset J,
                                      const DiagramAutomorphism& delta) {
  g.check_subset(J);
  PartialDecomposition d{J, delta, {}};
  for (Element rep : minimal_reps(g, J, delta, RepKind::RightCosets)) {
    d.blocks.push_back(make_block(g, J, delta, rep));
  }
  return d;
}

PartialDecomposition decompose(const CoxeterGroup& g, SimpleSubset J,
                               const DiagramAutomorphism& delta) {
  g.check_subset(J);
  const auto reps = minimal_reps(g, J, delta, RepKind::RightCosets);
  PartialDecomposition d{J, delta, std::vector<DecompositionBlock>(reps.size())};
  const auto n = static_cast<std::int64_t>(reps.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    d.blocks[static_cast<std::size_t>(i)] =
        make_block(g, J, delta, reps[static_cast<std::size_t>(i)]);
  }
  return d;
}

bool is_partition(const CoxeterGroup& g, const PartialDecomposition& d) {
  std::vector<char> hit(g.order(), 0);
  std::size_t total = 0;
  for (const auto& block : d.blocks) {
    for (Element w : block.orbit) {
      if (hit[w.id]) return false;
      hit[w.id] = 1;
      ++total;
    }
  }
  return total == g.order();
}

bool stabilizer_check(const CoxeterGroup& g, SimpleSubset J, const DiagramAutomorphism& delta,
                      Element w_prime) {
  const SimpleSubset I = i_subset(g, J, w_prime, delta);
  const ElementSet WI = parabolic_elements(g, I);
  std::vector<char> in_coset(g.order(), 0);
  std::vector<Element> coset;
  for (Element u : WI) {
    const Element b = g.multiply(u, w_prime);
    in_coset[b.id] = 1;
    coset.push_back(b);
  }
  for (Element a : parabolic_elements(g, J)) {
    if (WI.contains(a)) continue;
    for (Element b : coset) {
      if (in_coset[g.twisted_conjugate(a, b, delta).id]) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

bool partial_leq(const CoxeterGroup& g, SimpleSubset J, const DiagramAutomorphism& delta,
                 Element w_prime, Element w) {
  if (!in_left_reduced(g, w_prime, J)) {
    throw CoxeterError("partial_leq: first argument is not in ^J W");
  }
  for (Element v : orbit(g, w_prime, J, delta)) {
    if (g.bruhat_leq(v, w)) return true;
  }
  return false;
}

namespace {

void fill_row(const CoxeterGroup& g, SimpleSubset J, const DiagramAutomorphism& delta,
              OrderRelation& rel, std::size_t i) {
  const std::size_t n = rel.vertices.size();
  const ElementSet conj = orbit(g, rel.vertices[i], J, delta);
  for (std::size_t j = 0; j < n; ++j) {
    char leq = 0;
    for (Element v : conj) {
      if (g.bruhat_leq(v, rel.vertices[j])) {
        leq = 1;
        break;
      }
    }
    rel.leq[i * n + j] = leq;
  }
}

}  // namespace

OrderRelation partial_order_serial(const CoxeterGroup& g, SimpleSubset J,
                                   const DiagramAutomorphism& delta) {
  OrderRelation rel;
  rel.vertices = minimal_reps(g, J, delta, RepKind::RightCosets);
  rel.leq.assign(rel.vertices.size() * rel.vertices.size(), 0);
  for (std::size_t i = 0; i < rel.vertices.size(); ++i) fill_row(g, J, delta, rel, i);
  return rel;
}

OrderRelation partial_order(const CoxeterGroup& g, SimpleSubset J,
                            const DiagramAutomorphism& delta) {
  OrderRelation rel;
  rel.vertices = minimal_reps(g, J, delta, RepKind::RightCosets);
  rel.leq.assign(rel.vertices.size() * rel.vertices.size(), 0);
  const auto n = static_cast<std::int64_t>(rel.vertices.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) fill_row(g, J, delta, rel, static_cast<std::size_t>(i));
  return rel;
}

std::vector<std::pair<std::size_t, std::size_t>> transitive_reduction(const OrderRelation& rel) {
  const std::size_t n = rel.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!rel.at(i, i)) throw CheckFailure("relation is not reflexive");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rel.at(i, j) && rel.at(j, i)) throw CheckFailure("relation is not antisymmetric");
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !rel.at(i, j)) continue;
      bool cover = true;
      for (std::size_t k = 0; k < n && cover; ++k) {
        if (k != i && k != j && rel.at(i, k) && rel.at(k, j)) cover = false;
      }
      if (cover) covers.emplace_back(i, j);
    }
  }
  return covers;
}

HasseDiagram hasse(const CoxeterGroup& g, SimpleSubset J, const DiagramAutomorphism& delta) {
  g.check_subset(J);
  const OrderRelation rel = partial_order(g, J, delta);
  HasseDiagram h;
  h.vertices = rel.vertices;
  for (auto [i, j] : transitive_reduction(rel)) {
    const Element lo = rel.vertices[i];
    const Element hi = rel.vertices[j];
    h.covers.push_back({lo, hi, g.bruhat_leq(lo, hi)});
  }
  std::sort(h.covers.begin(), h.covers.end());
  return h;
}

HasseDiagram bruhat_hasse(const CoxeterGroup& g, SimpleSubset J) {
  g.check_subset(J);
  OrderRelation rel;
  rel.vertices = double_coset_reps(g, J, SimpleSubset{});
  const std::size_t n = rel.vertices.size();
  rel.leq.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      rel.leq[i * n + j] = g.bruhat_leq(rel.vertices[i], rel.vertices[j]) ? 1 : 0;
    }
  }
  HasseDiagram h;
  h.vertices = rel.vertices;
  for (auto [i, j] : transitive_reduction(rel)) {
    h.covers.push_back({rel.vertices[i], rel.vertices[j], true});
  }
  std::sort(h.covers.begin(), h.covers.end());
  return h;
}

Element max_below(const CoxeterGroup& g, Element w, SimpleSubset J,
                  const DiagramAutomorphism& delta) {
  std::vector<Element> below;
  for (Element v : minimal_reps(g, J, delta, RepKind::RightCosets)) {
    if (partial_leq(g, J, delta, v, w)) below.push_back(v);
  }
  std::vector<Element> maximal;
  for (Element v : below) {
    const bool dominated = std::any_of(below.begin(), below.end(), [&](Element o) {
      return o != v && partial_leq(g, J, delta, v, o);
    });
    if (!dominated) maximal.push_back(v);
  }
  if (maximal.size() != 1) {
    throw CheckFailure("max_below: expected a unique maximal element, found " +
                       std::to_string(maximal.size()));
  }
  return maximal.front();
}

// ---------------------------------------------------------------------------

namespace {

bool word_within(const CoxeterGroup& g, Element w, SimpleSubset I) {
  for (Generator s : g.word_of(w)) {
    if (!I.contains(s)) return false;
  }
  return true;
}

void require(bool condition, const char* what) {
  if (!condition) throw CheckFailure(std::string("certificate check failed: ") + what);
}

// The quadruple construction. With `require_length` the chain must be a
// sequence of length-preserving shift steps; otherwise only the algebraic
// conclusions are checked.
CycCertificate quadruples(const CoxeterGroup& g, SimpleSubset J, const DiagramAutomorphism& delta,
                          const CombinatorialPiece& piece, bool require_length) {
  CycCertificate cert;
  cert.J = J;
  cert.delta = delta;
  cert.input = piece;

  Element X = g.identity();
  CombinatorialPiece cur = piece;
  SimpleSubset Jn = J;
  const int len = g.length(piece.w);

  // J_n strictly shrinks until it stabilizes.
  for (int round = 0; round <= g.rank() + 1; ++round) {
    const Element reduced = min_rep(g, cur.w, Jn, Side::Right);  // w''_n
    const Element z = g.multiply(cur.w, g.inverse(reduced));
    const Element wn = min_rep(g, reduced, delta(Jn), Side::Left);
    SimpleSubset next;
    for (Generator t : Jn.members()) {
      const auto s = g.as_generator(g.conjugate_generator(wn, delta(t)));
      if (s && Jn.contains(*s)) next.insert(*s);
    }
    const Element xn = min_rep(g, z, next, Side::Left);
    const Element yn = g.multiply(g.inverse(xn), z);
    cert.quadruples.push_back({Jn, wn, xn, yn, cur.w});

    if (next == Jn) {
      require(xn == g.identity(), "x_m = 1 at stabilization");
      require(reduced == wn, "w''_m = w_m at stabilization");
      cert.w_prime = wn;
      cert.u = z;
      cert.x = X;
      cert.K_prime = cur.K;
      cert.I = Jn;
      break;
    }

    const AdImage k = ad_inverse_on_simples(g, xn, cur.K);
    require(k.ok(), "x_n acts on the piece");
    require(k.image->subset_of(next), "Ad(x_0...x_n)^-1(K) inside J_{n+1}");
    const CombinatorialPiece to{
        g.multiply(g.multiply(g.inverse(xn), cur.w), g.apply(delta, xn)), *k.image};
    const bool step_ok = g.length(xn) + g.length(g.multiply(g.inverse(xn), cur.w)) == len &&
                         g.length(to.w) == len;
    cert.length_constant = cert.length_constant && step_ok;
    if (require_length) {
      require(step_ok, "length is constant along the chain");
      require(!piece_violation(g, to.w, to.K, delta), "chain pieces are valid");
    }
    if (xn != g.identity()) cert.chain.push_back({xn, cur, to});
    X = g.multiply(X, xn);
    cur = to;
    Jn = next;
    if (round == g.rank() + 1) throw CheckFailure("quadruple construction did not stabilize");
  }

  require(in_left_reduced(g, cert.w_prime, J), "w' in ^J W");
  require(i_subset(g, J, cert.w_prime, delta) == cert.I, "J_m = I(J, w', delta)");
  require(word_within(g, cert.x, J) && in_right_reduced(g, cert.x, cert.I),
          "x in W_J ∩ W^I");
  require(word_within(g, cert.u, cert.I), "u in W_I");
  require(g.multiply(g.multiply(g.inverse(cert.x), piece.w), g.apply(delta, cert.x)) ==
              g.multiply(cert.u, cert.w_prime),
          "x^-1 w delta(x) = u w'");
  const AdImage kp = ad_inverse_on_simples(g, cert.x, piece.K);
  require(kp.ok() && *kp.image == cert.K_prime, "K' = Ad(x)^-1(K)");
  require(cert.K_prime.subset_of(cert.I), "K' inside I(J, w', delta)");
  if (require_length) {
    require(!piece_violation(g, g.multiply(cert.u, cert.w_prime), cert.K_prime, delta),
            "(u w', K') is a piece");
  }
  return cert;
}

}  // namespace

CycCertificate theorem_cyc(const CoxeterGroup& g, SimpleSubset J,
                           const DiagramAutomorphism& delta, const CombinatorialPiece& piece) {
  g.check_subset(J);
  if (!piece.K.subset_of(J)) throw CoxeterError("theorem_cyc: K is not contained in J");
  if (auto v = piece_violation(g, piece.w, piece.K, delta)) {
    throw PieceError(std::string("theorem_cyc: piece invalid: ") + describe(*v));
  }
  if (!is_min_length_in_orbit(g, piece.w, J, delta)) {
    throw CoxeterError("theorem_cyc: w not minimal in its W_J-orbit");
  }
  return quadruples(g, J, delta, piece, true);
}

IotaResult iota(const CoxeterGroup& g, SimpleSubset J, const DiagramAutomorphism& delta,
                Element w) {
  g.check_subset(J);
  if (!in_right_reduced(g, w, delta(J))) {
    throw CoxeterError("iota: element is not in W^{delta(J)}");
  }
  const SimpleSubset K = i_subset(g, J, w, delta);
  IotaResult r{w, w, theorem_cyc(g, J, delta, CombinatorialPiece{w, K})};
  if (r.certificate.u != g.identity()) throw CheckFailure("iota: u != 1");
  if (r.certificate.K_prime != r.certificate.I) {
    throw CheckFailure("iota: K' differs from I(J, iota(w), delta)");
  }
  r.image = r.certificate.w_prime;
  return r;
}

InductionDatum induction_datum(const CoxeterGroup& g, SimpleSubset J, SimpleSubset J_prime,
                               const DiagramAutomorphism& delta, Element w) {
  g.check_subset(J_prime);
  if (!J.subset_of(J_prime)) throw CoxeterError("induction_datum: J is not contained in J'");
  if (!in_left_reduced(g, w, J)) throw CoxeterError("induction_datum: w is not in ^J W");
  if (!is_min_length_in_orbit(g, w, J, delta)) {
    throw CoxeterError("induction_datum: w not minimal in its W_J-orbit");
  }
  InductionDatum d;
  d.J = J;
  d.J_prime = J_prime;
  d.w = w;
  d.K = i_subset(g, J, w, delta);
  const bool minimal = is_min_length_in_orbit(g, w, J_prime, delta);
  d.certificate = quadruples(g, J_prime, delta, CombinatorialPiece{w, d.K}, minimal);
  d.length_constant = d.certificate.length_constant;
  d.w_prime = d.certificate.w_prime;
  d.x = d.certificate.x;
  d.u = d.certificate.u;
  d.K1 = d.certificate.K_prime;
  d.K_prime = d.certificate.I;
  require(d.K1.subset_of(d.K_prime), "K1 inside K'");
  const AdImage img = ad_on_simples(g, g.multiply(d.u, d.w_prime), delta, d.K1);
  require(img.ok() && *img.image == d.K1, "Ad(u w') delta(K1) = K1");
  return d;
}

}  // namespace cycshift
