#include "cycshift/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>

#include "cycshift/decomposition.hpp"
#include "cycshift/io.hpp"
#include "cycshift/oracle.hpp"
#include "cycshift/parabolic.hpp"
#include "cycshift/pieces.hpp"
#include "cycshift/shift_graph.hpp"

namespace cycshift {

namespace {

using Failures = std::vector<std::string>;
using Case = std::function<void(Failures&)>;

std::string context(const DiagramAutomorphism& delta, SimpleSubset J) {
  return "delta " + io::format_automorphism(delta) + " J {" + io::format_subset(J) + "}";
}

std::string context(const CoxeterGroup& g, const DiagramAutomorphism& delta, SimpleSubset J,
                    Element w) {
  return context(delta, J) + " w " + io::subscript_label(g, w);
}

void expect(Failures& out, bool ok, const std::string& where, const char* what) {
  if (!ok) out.push_back(where + ": " + what);
}

bool word_within(const CoxeterGroup& g, Element w, SimpleSubset I) {
  for (Generator s : g.word_of(w)) {
    if (!I.contains(s)) return false;
  }
  return true;
}

// W_J ._delta (W_I w)
ElementSet block_of(const CoxeterGroup& g, SimpleSubset J, SimpleSubset I,
                    const DiagramAutomorphism& delta, Element w) {
  std::vector<Element> out;
  for (Element u : parabolic_elements(g, I)) {
    const ElementSet o = orbit(g, g.multiply(u, w), J, delta);
    out.insert(out.end(), o.begin(), o.end());
  }
  return ElementSet(std::move(out));
}

// One case per (delta, J).
std::vector<Case> per_subset(const CoxeterGroup& g,
                             std::function<void(const DiagramAutomorphism&, SimpleSubset,
                                                Failures&)> body) {
  std::vector<Case> cases;
  for (const auto& delta : g.automorphisms()) {
    for (SimpleSubset J : all_subsets(g.rank())) {
      cases.push_back([body, delta, J](Failures& out) { body(delta, J, out); });
    }
  }
  return cases;
}

// ---------------------------------------------------------------------------

std::vector<Case> bruhat_cases(const CoxeterGroup& g) {
  std::vector<Case> cases;
  for (std::size_t i = 0; i < g.order(); ++i) {
    cases.push_back([&g, i](Failures& out) {
      const Element b = g.element(i);
      const ElementSet below = oracle::bruhat_lower_set(g, b);
      for (std::size_t j = 0; j < g.order(); ++j) {
        const Element a = g.element(j);
        if (g.bruhat_leq(a, b) != below.contains(a)) {
          out.push_back(io::subscript_label(g, a) + " <= " + io::subscript_label(g, b) +
                        ": disagrees with the subword oracle");
        }
      }
    });
  }
  return cases;
}

std::vector<Case> j_inf_cases(const CoxeterGroup& g) {
  return per_subset(g, [&g](const DiagramAutomorphism& delta, SimpleSubset J, Failures& out) {
    for (Element w : minimal_reps(g, J, delta, RepKind::RightCosets)) {
      const std::string where = context(g, delta, J, w);
      const SimpleSubset I = i_subset(g, J, w, delta);
      expect(out, I == oracle::i_subset(g, J, w, delta), where,
             "i_subset disagrees with the subset-search oracle");
      expect(out, parabolic_elements(g, I) == j_infinity_oracle(g, J, w, delta), where,
             "W_I differs from the intersection of the iterates of W_J");
      if (ad_on_simples(g, w, delta, J).image == J) {
        expect(out, in_right_reduced(g, w, delta(J)), where,
               "Ad(w)delta(J) = J but w is not in W^{delta(J)}");
      }
    }
  });
}

std::vector<Case> bedard_cases(const CoxeterGroup& g) {
  return per_subset(g, [&g](const DiagramAutomorphism& delta, SimpleSubset J, Failures& out) {
    std::set<std::vector<std::pair<std::uint32_t, std::uint32_t>>> traces;
    const auto reps = minimal_reps(g, J, delta, RepKind::RightCosets);
    for (Element w : reps) {
      const std::string where = context(g, delta, J, w);
      const BedardTrace t = bedard_sequence(g, J, w, delta);
      expect(out, t.steps.front().subset == J, where, "J_0 differs from J");
      expect(out, t.limit().subset == i_subset(g, J, w, delta), where,
             "limit subset differs from I(J, w, delta)");
      expect(out, t.limit().element == w, where, "limit element differs from w");
      for (std::size_t n = 0; n < t.steps.size(); ++n) {
        const BedardStep& s = t.steps[n];
        expect(out, min_rep(g, w, delta(s.subset), Side::Left) ==
                        min_rep(g, s.element, delta(s.subset), Side::Left),
               where, "w_n not in w W_{delta(J_n)}");
        if (n > 0) {
          expect(out, s.subset.subset_of(t.steps[n - 1].subset), where, "J_n does not descend");
        }
      }
      std::vector<std::pair<std::uint32_t, std::uint32_t>> key;
      for (const BedardStep& s : t.steps) key.emplace_back(s.subset.mask(), s.element.id);
      traces.insert(std::move(key));
    }
    expect(out, traces.size() == reps.size(), context(delta, J),
           "traces of distinct elements coincide");
  });
}

std::vector<Case> prop_w_cases(const CoxeterGroup& g) {
  return per_subset(g, [&g](const DiagramAutomorphism& delta, SimpleSubset J, Failures& out) {
    const std::string where = context(delta, J);
    const PartialDecomposition d = decompose(g, J, delta);
    expect(out, d == decompose_serial(g, J, delta), where,
           "parallel and serial decompositions differ");
    expect(out, is_partition(g, d), where, "blocks do not partition W");
    // Each block must be the union of the oracle orbits meeting W_I w'.
    const auto orbits = oracle::orbits(g, J, delta);
    std::vector<std::size_t> orbit_of(g.order());
    for (std::size_t i = 0; i < orbits.size(); ++i) {
      for (Element v : orbits[i]) orbit_of[v.id] = i;
    }
    for (const auto& b : d.blocks) {
      const std::string at = context(g, delta, J, b.representative);
      std::vector<Element> expected;
      for (Element u : oracle::parabolic(g, b.I)) {
        const auto& o = orbits[orbit_of[g.multiply(u, b.representative).id]];
        expected.insert(expected.end(), o.begin(), o.end());
      }
      expect(out, b.orbit == ElementSet(std::move(expected)), at,
             "block differs from the union of oracle orbits through W_I w'");
      expect(out, stabilizer_check(g, J, delta, b.representative), at,
             "stabilizer not inside W_I");
    }
  });
}

std::vector<Case> thm_cyc_cases(const CoxeterGroup& g) {
  std::vector<Case> cases;
  for (const auto& delta : g.automorphisms()) {
    for (SimpleSubset J : all_subsets(g.rank())) {
      for (std::size_t i = 0; i < g.order(); ++i) {
        cases.push_back([&g, delta, J, i](Failures& out) {
          const Element w = g.element(i);
          if (!is_min_length_in_orbit(g, w, J, delta)) return;
          const std::string where = context(g, delta, J, w);
          const auto solutions = oracle::cyc_solutions(g, J, delta, w);
          for (SimpleSubset K : all_subsets(g.rank())) {
            if (!K.subset_of(J) || piece_violation(g, w, K, delta)) continue;
            const std::string at = where + " K {" + io::format_subset(K) + "}";
            try {
              const CycCertificate c = theorem_cyc(g, J, delta, {w, K});
              CombinatorialPiece cur{w, K};
              bool chain_ok = true;
              for (const ShiftStep& s : c.chain) {
                chain_ok = chain_ok && s.from == cur && is_valid_shift_step(g, s, delta) &&
                           word_within(g, s.x, J) && g.length(s.to.w) == g.length(w);
                cur = s.to;
              }
              expect(out, chain_ok, at, "chain is not a length-constant sequence of steps");
              expect(out, cur == CombinatorialPiece{g.multiply(c.u, c.w_prime), c.K_prime}, at,
                     "chain does not end at (u w', K')");
              expect(out, c.K_prime.subset_of(i_subset(g, J, c.w_prime, delta)), at,
                     "K' not inside I(J, w', delta)");
              expect(out, solutions.size() == 1 &&
                              solutions.front() == oracle::CycSolution{c.w_prime, c.x, c.u},
                     at, "(w', x, u) is not the unique exhaustive solution");
            } catch (const CoxeterError& e) {
              out.push_back(at + ": " + e.what());
            }
          }
        });
      }
    }
  }
  return cases;
}

std::vector<Case> reduce_cases(const CoxeterGroup& g) {
  return per_subset(g, [&g](const DiagramAutomorphism& delta, SimpleSubset J, Failures& out) {
    for (std::size_t i = 0; i < g.order(); ++i) {
      const Element w = g.element(i);
      const std::string where = context(g, delta, J, w);
      const bool minimal = is_min_length_in_orbit(g, w, J, delta);
      const Reduction r = reduce_to_min(g, w, J, delta);
      Element cur = w;
      bool path_ok = true;
      for (const ShiftEdge& e : r.path) {
        path_ok = path_ok && e.from == cur && J.contains(e.label) &&
                  e.to == g.lmul(e.label, g.rmul(cur, delta(e.label))) &&
                  g.length(e.to) <= g.length(cur) &&
                  (!minimal || g.length(e.to) == g.length(cur));
        cur = e.to;
      }
      expect(out, path_ok && cur == r.endpoint, where, "reduction path is not a graph path");
      expect(out, in_left_reduced(g, r.w_prime, J) &&
                      word_within(g, r.u, i_subset(g, J, r.w_prime, delta)) &&
                      r.endpoint == g.multiply(r.u, r.w_prime),
             where, "endpoint is not u w' with u in W_I");
      expect(out, g.length(r.endpoint) == min_length_in_orbit(g, w, J, delta), where,
             "endpoint is not of minimal length");
      expect(out, orbit(g, w, J, delta).contains(r.endpoint), where,
             "endpoint left the W_J-orbit");
    }
  });
}

std::vector<Case> pieces_cases(const CoxeterGroup& g) {
  return per_subset(g, [&g](const DiagramAutomorphism& delta, SimpleSubset K, Failures& out) {
    std::vector<Element> all;
    for (std::size_t i = 0; i < g.order(); ++i) all.push_back(g.element(i));
    for (Element w : all) {
      if (piece_violation(g, w, K, delta)) continue;
      const std::string where = context(g, delta, K, w);
      for (Element x : all) {
        const AdImage k = ad_inverse_on_simples(g, x, K);
        if (!k.ok()) continue;
        const Element v = g.multiply(g.multiply(g.inverse(x), w), g.apply(delta, x));
        if (g.length(x) + g.length(g.multiply(g.inverse(x), w)) != g.length(w) ||
            g.length(v) != g.length(w)) {
          continue;
        }
        expect(out, !piece_violation(g, v, *k.image, delta),
               where + " x " + io::subscript_label(g, x),
               "length-preserving conjugate is not a piece");
        expect(out, k.image->size() == K.size(), where, "|K| changed");
      }
    }
  });
}

std::vector<Case> broue_michel_cases(const CoxeterGroup& g) {
  std::vector<Case> cases;
  for (const auto& delta : g.automorphisms()) {
    cases.push_back([&g, delta](Failures& out) {
      const ShiftGraph graph = build_shift_graph(g, delta, g.all_generators());
      expect(out, graph == build_shift_graph_serial(g, delta, g.all_generators()),
             context(delta, g.all_generators()), "parallel and serial graphs differ");
      const ComponentLabels scc = strongly_connected_components(graph);
      const auto classes = oracle::orbits(g, g.all_generators(), delta);
      for (std::size_t i = 0; i < g.order(); ++i) {
        const Element w = g.element(i);
        const std::string where = "delta " + io::format_automorphism(delta) + " w " +
                                  io::subscript_label(g, w);
        const ElementSet cls = cyclic_shift_class(graph, w);
        const ElementSet swaps = oracle::shift_class(g, w, delta);
        // The swap closure always contains the SCC. It can be strictly larger
        // when w is not of minimal length in its delta-conjugacy class, since
        // the swap with y = 1 relates w to delta(w).
        expect(out, std::all_of(cls.begin(), cls.end(), [&](Element v) { return swaps.contains(v); }),
               where, "SCC not inside the length-additive swap closure");
        if (is_min_length_in_orbit(g, w, g.all_generators(), delta)) {
          expect(out, cls == swaps, where,
                 "SCC differs from the swap closure at a minimal length element");
        }
        expect(out, cls == cyclic_shift_class(g, w, delta, g.all_generators()), where,
               "SCC differs from forward-backward reachability");
        bool same_length = true;
        for (Element v : cls) {
          same_length = same_length && g.length(v) == g.length(w) &&
                        scc.component[v.id] == scc.component[w.id];
        }
        expect(out, same_length, where, "SCC members differ in length or label");
        const bool inside = std::any_of(classes.begin(), classes.end(), [&](const ElementSet& c) {
          return std::all_of(cls.begin(), cls.end(), [&](Element v) { return c.contains(v); });
        });
        expect(out, inside, where, "shift class meets two conjugacy classes");
        for (std::size_t j = 0; j < g.order(); ++j) {
          const Element v = g.element(j);
          if (g.length(v) != g.length(w)) continue;
          expect(out, broue_michel_equiv(g, w, v, delta) == swaps.contains(v),
                 where + " vs " + io::subscript_label(g, v),
                 "prefix search disagrees with the swap closure");
        }
        std::vector<Element> pieces;
        for (const auto& p : piece_shift_class(g, {w, {}}, g.all_generators(), delta)) {
          pieces.push_back(p.w);
        }
        expect(out, ElementSet(std::move(pieces)) == swaps, where,
               "piece relation with K empty differs from the swap closure");
      }
    });
  }
  return cases;
}

std::vector<Case> iota_cases(const CoxeterGroup& g) {
  std::vector<Case> cases = per_subset(
      g, [&g](const DiagramAutomorphism& delta, SimpleSubset J, Failures& out) {
        const std::string where = context(delta, J);
        const auto domain = minimal_reps(g, J, delta, RepKind::LeftCosets);
        const auto target = minimal_reps(g, J, delta, RepKind::RightCosets);
        std::vector<Element> images;
        for (Element w : domain) {
          const std::string at = context(g, delta, J, w);
          try {
            const IotaResult r = iota(g, J, delta, w);
            images.push_back(r.image);
            const SimpleSubset I = i_subset(g, J, w, delta);
            const SimpleSubset I2 = i_subset(g, J, r.image, delta);
            expect(out, block_of(g, J, I, delta, w) == block_of(g, J, I2, delta, r.image), at,
                   "blocks through w and iota(w) differ");
            expect(out, shift_equivalent(g, {w, I}, {r.image, I2}, J, delta).equivalent, at,
                   "(w, I) and (iota(w), I') are not shift equivalent");
          } catch (const CoxeterError& e) {
            out.push_back(at + ": " + e.what());
          }
        }
        std::vector<Element> sorted = images;
        std::sort(sorted.begin(), sorted.end());
        expect(out, std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), where,
               "iota is not injective");
        expect(out, sorted == target, where, "image of iota is not ^J W");
      });
  // Induction data for every pair J ⊆ J'.
  for (const auto& delta : g.automorphisms()) {
    for (SimpleSubset Jp : all_subsets(g.rank())) {
      cases.push_back([&g, delta, Jp](Failures& out) {
        for (SimpleSubset J : all_subsets(g.rank())) {
          if (!J.subset_of(Jp)) continue;
          for (Element w : minimal_reps(g, J, delta, RepKind::RightCosets)) {
            if (!is_min_length_in_orbit(g, w, J, delta)) continue;
            const std::string at =
                context(g, delta, J, w) + " J' {" + io::format_subset(Jp) + "}";
            try {
              const InductionDatum d = induction_datum(g, J, Jp, delta, w);
              expect(out, word_within(g, d.x, Jp) && in_right_reduced(g, d.x, d.K_prime), at,
                     "x not in W_{J'} ∩ W^{K'}");
              expect(out, word_within(g, d.u, d.K_prime), at, "u not in W_{K'}");
              if (g.length(w) == g.length(d.w_prime) &&
                  orbit(g, d.w_prime, Jp, delta).contains(w)) {
                expect(out, d.u == g.identity(), at, "l(w) = l(w') but u != 1");
              }
            } catch (const CoxeterError& e) {
              out.push_back(at + ": " + e.what());
            }
          }
        }
      });
    }
  }
  return cases;
}

std::vector<Case> partial_order_cases(const CoxeterGroup& g) {
  return per_subset(g, [&g](const DiagramAutomorphism& delta, SimpleSubset J, Failures& out) {
    const std::string where = context(delta, J);
    const OrderRelation rel = partial_order(g, J, delta);
    expect(out, rel == partial_order_serial(g, J, delta), where,
           "parallel and serial relations differ");
    const std::size_t n = rel.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Element a = rel.vertices[i];
      expect(out, rel.at(i, i), where, "not reflexive");
      for (std::size_t j = 0; j < n; ++j) {
        const Element b = rel.vertices[j];
        const std::string at = where + " " + io::subscript_label(g, a) + " <= " + io::subscript_label(g, b);
        expect(out, rel.at(i, j) == oracle::partial_leq(g, a, b, J, delta), at,
               "disagrees with the literal quantifier oracle");
        if (i != j) expect(out, !(rel.at(i, j) && rel.at(j, i)), at, "not antisymmetric");
        if (rel.at(i, j)) {
          expect(out, g.length(a) <= g.length(b), at, "length decreases");
          for (std::size_t k = 0; k < n; ++k) {
            if (rel.at(j, k)) expect(out, rel.at(i, k), at, "not transitive");
          }
        }
        if (g.bruhat_leq(a, b)) expect(out, rel.at(i, j), at, "Bruhat order not contained");
      }
    }
    if (J.empty()) {
      const HasseDiagram h = hasse(g, J, delta);
      const HasseDiagram b = bruhat_hasse(g, J);
      expect(out, h.vertices == b.vertices && h.covers == b.covers, where,
             "J empty but the diagram differs from the Bruhat diagram");
    }
    for (std::size_t i = 0; i < g.order(); ++i) {
      const Element w = g.element(i);
      try {
        const Element m = max_below(g, w, J, delta);
        if (in_left_reduced(g, w, J)) {
          expect(out, m == w, context(g, delta, J, w), "max_below(w) != w on ^J W");
        }
      } catch (const CoxeterError& e) {
        out.push_back(context(g, delta, J, w) + ": " + e.what());
      }
    }
  });
}

using Builder = std::vector<Case> (*)(const CoxeterGroup&);

const std::map<std::string, Builder, std::less<>>& builders() {
  static const std::map<std::string, Builder, std::less<>> table{
      {"bruhat", bruhat_cases},          {"lemma-j-inf", j_inf_cases},
      {"bedard", bedard_cases},          {"prop-w", prop_w_cases},
      {"thm-cyc", thm_cyc_cases},        {"reduce", reduce_cases},
      {"pieces", pieces_cases},          {"broue-michel", broue_michel_cases},
      {"iota", iota_cases},              {"partial-order", partial_order_cases},
  };
  return table;
}

Failures run_one(const Case& c) {
  Failures f;
  try {
    c(f);
  } catch (const std::exception& e) {
    f.push_back(std::string("exception: ") + e.what());
  }
  return f;
}

SuiteReport run(const CoxeterGroup& g, std::string_view suite, bool parallel) {
  const auto& table = builders();
  auto it = table.find(suite);
  if (it == table.end()) throw CoxeterError("unknown suite '" + std::string(suite) + "'");
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Case> cases = it->second(g);
  std::vector<Failures> results(cases.size());
  const auto n = static_cast<std::int64_t>(cases.size());
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) {
      results[static_cast<std::size_t>(i)] = run_one(cases[static_cast<std::size_t>(i)]);
    }
  } else {
    for (std::int64_t i = 0; i < n; ++i) {
      results[static_cast<std::size_t>(i)] = run_one(cases[static_cast<std::size_t>(i)]);
    }
  }
  SuiteReport report;
  report.suite = std::string(suite);
  report.type = g.datum().cartan_type.to_string();
  report.cases = cases.size();
  for (auto& f : results) {
    report.failures.insert(report.failures.end(), f.begin(), f.end());
  }
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "bruhat", "lemma-j-inf", "bedard",       "prop-w", "thm-cyc",
      "reduce", "pieces",      "broue-michel", "iota",   "partial-order",
  };
  return names;
}

SuiteReport run_suite(const CoxeterGroup& g, std::string_view suite) {
  return run(g, suite, true);
}

SuiteReport run_suite_serial(const CoxeterGroup& g, std::string_view suite) {
  return run(g, suite, false);
}

}  // namespace cycshift
