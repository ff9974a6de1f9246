#include "cycshift/shift_graph.hpp"

#include <algorithm>
#include <deque>

#include "cycshift/decomposition.hpp"
#include "cycshift/parabolic.hpp"
#include "cycshift/pieces.hpp"

namespace cycshift {

ShiftGraph::ShiftGraph(const CoxeterGroup& group, DiagramAutomorphism delta, SimpleSubset labels,
                       std::vector<std::uint32_t> offsets, std::vector<ShiftEdge> edges)
    : group_(&group),
      delta_(std::move(delta)),
      labels_(labels),
      offsets_(std::move(offsets)),
      edges_(std::move(edges)) {}

namespace {

Element shift(const CoxeterGroup& g, Element w, Generator s, const DiagramAutomorphism& delta) {
  return g.lmul(s, g.rmul(w, delta(s)));
}

}  // namespace

ShiftGraph build_shift_graph_serial(const CoxeterGroup& g, const DiagramAutomorphism& delta,
                                    SimpleSubset J) {
  g.check_subset(J);
  const auto labels = J.members();
  std::vector<std::uint32_t> offsets{0};
  std::vector<ShiftEdge> edges;
  for (std::size_t i = 0; i < g.order(); ++i) {
    const Element w = g.element(i);
    for (Generator s : labels) {
      const Element v = shift(g, w, s, delta);
      if (g.length(v) <= g.length(w)) edges.push_back({w, v, s});
    }
    offsets.push_back(static_cast<std::uint32_t>(edges.size()));
  }
  return ShiftGraph(g, delta, J, std::move(offsets), std::move(edges));
}

ShiftGraph build_shift_graph(const CoxeterGroup& g, const DiagramAutomorphism& delta,
                             SimpleSubset J) {
  g.check_subset(J);
  const auto labels = J.members();
  const std::size_t width = labels.size();
  const auto n = static_cast<std::int64_t>(g.order());
  // Fixed-width scratch: slot (w, k) holds the candidate edge for labels[k].
  std::vector<ShiftEdge> slots(g.order() * width);
  std::vector<char> keep(g.order() * width, 0);
  std::vector<std::uint32_t> counts(g.order() + 1, 0);

#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    const Element w = g.element(static_cast<std::size_t>(i));
    std::uint32_t c = 0;
    for (std::size_t k = 0; k < width; ++k) {
      const Element v = shift(g, w, labels[k], delta);
      const std::size_t slot = static_cast<std::size_t>(i) * width + k;
      if (g.length(v) <= g.length(w)) {
        slots[slot] = {w, v, labels[k]};
        keep[slot] = 1;
        ++c;
      }
    }
    counts[static_cast<std::size_t>(i) + 1] = c;
  }

  std::vector<std::uint32_t> offsets(g.order() + 1, 0);
  for (std::size_t i = 0; i < g.order(); ++i) offsets[i + 1] = offsets[i] + counts[i + 1];
  std::vector<ShiftEdge> edges(offsets.back());

#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    std::size_t out = offsets[static_cast<std::size_t>(i)];
    for (std::size_t k = 0; k < width; ++k) {
      const std::size_t slot = static_cast<std::size_t>(i) * width + k;
      if (keep[slot]) edges[out++] = slots[slot];
    }
  }
  return ShiftGraph(g, delta, J, std::move(offsets), std::move(edges));
}

bool reaches(const ShiftGraph& graph, Element from, Element to) {
  std::vector<char> seen(graph.vertex_count(), 0);
  std::vector<Element> stack{from};
  seen[from.id] = 1;
  while (!stack.empty()) {
    const Element v = stack.back();
    stack.pop_back();
    if (v == to) return true;
    for (const ShiftEdge& e : graph.out_edges(v)) {
      if (!seen[e.to.id]) {
        seen[e.to.id] = 1;
        stack.push_back(e.to);
      }
    }
  }
  return false;
}

ComponentLabels strongly_connected_components(const ShiftGraph& graph) {
  // Iterative Tarjan.
  const std::size_t n = graph.vertex_count();
  constexpr std::uint32_t kUnvisited = ~0u;
  std::vector<std::uint32_t> index(n, kUnvisited);
  std::vector<std::uint32_t> low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<std::uint32_t> stack;
  std::vector<std::uint32_t> raw(n, 0);
  std::uint32_t next_index = 0;
  std::uint32_t raw_count = 0;

  struct Frame {
    std::uint32_t v;
    std::size_t edge;
  };
  std::vector<Frame> call;

  for (std::uint32_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call.push_back({root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      const auto edges = graph.out_edges(Element{f.v});
      if (f.edge < edges.size()) {
        const std::uint32_t w = edges[f.edge++].to.id;
        if (index[w] == kUnvisited) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const std::uint32_t v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        std::uint32_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          raw[w] = raw_count;
        } while (w != v);
        ++raw_count;
      }
    }
  }

  ComponentLabels out;
  out.component.assign(n, 0);
  std::vector<std::uint32_t> renumber(raw_count, kUnvisited);
  for (std::size_t v = 0; v < n; ++v) {
    auto& id = renumber[raw[v]];
    if (id == kUnvisited) id = static_cast<std::uint32_t>(out.count++);
    out.component[v] = id;
  }
  return out;
}

ElementSet connected_component(const ShiftGraph& graph, Element w) {
  // Undirected closure; reverse edges are recovered from the edge list.
  const std::size_t n = graph.vertex_count();
  std::vector<std::vector<std::uint32_t>> adjacent(n);
  for (const ShiftEdge& e : graph.edges()) {
    adjacent[e.from.id].push_back(e.to.id);
    adjacent[e.to.id].push_back(e.from.id);
  }
  std::vector<char> seen(n, 0);
  std::vector<Element> out{w};
  seen[w.id] = 1;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (std::uint32_t v : adjacent[out[head].id]) {
      if (!seen[v]) {
        seen[v] = 1;
        out.push_back(Element{v});
      }
    }
  }
  return ElementSet(std::move(out));
}

namespace {

// Vertices reachable from w; with `backward` set, vertices reaching w.
std::vector<char> reach_set(const CoxeterGroup& g, Element w, const DiagramAutomorphism& delta,
                            SimpleSubset J, bool backward) {
  const auto labels = J.members();
  std::vector<char> seen(g.order(), 0);
  std::vector<Element> stack{w};
  seen[w.id] = 1;
  while (!stack.empty()) {
    const Element v = stack.back();
    stack.pop_back();
    for (Generator s : labels) {
      // s v delta(s) is its own inverse operation.
      const Element u = shift(g, v, s, delta);
      const bool edge = backward ? g.length(v) <= g.length(u) : g.length(u) <= g.length(v);
      if (edge && !seen[u.id]) {
        seen[u.id] = 1;
        stack.push_back(u);
      }
    }
  }
  return seen;
}

}  // namespace

ElementSet cyclic_shift_class(const CoxeterGroup& g, Element w, const DiagramAutomorphism& delta,
                              SimpleSubset J) {
  const auto fwd = reach_set(g, w, delta, J, false);
  const auto bwd = reach_set(g, w, delta, J, true);
  std::vector<Element> out;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (fwd[i] && bwd[i]) out.push_back(g.element(i));
  }
  return ElementSet(std::move(out));
}

ElementSet cyclic_shift_class(const ShiftGraph& graph, Element w) {
  const auto labels = strongly_connected_components(graph);
  std::vector<Element> out;
  for (std::size_t i = 0; i < graph.vertex_count(); ++i) {
    if (labels.component[i] == labels.component[w.id]) out.push_back(Element{static_cast<std::uint32_t>(i)});
  }
  return ElementSet(std::move(out));
}

ElementSet orbit(const CoxeterGroup& g, Element w, SimpleSubset J,
                 const DiagramAutomorphism& delta) {
  const auto labels = J.members();
  std::vector<char> seen(g.order(), 0);
  std::vector<Element> out{w};
  seen[w.id] = 1;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (Generator s : labels) {
      const Element u = shift(g, out[head], s, delta);
      if (!seen[u.id]) {
        seen[u.id] = 1;
        out.push_back(u);
      }
    }
  }
  return ElementSet(std::move(out));
}

int min_length_in_orbit(const CoxeterGroup& g, Element w, SimpleSubset J,
                        const DiagramAutomorphism& delta) {
  int best = g.length(w);
  for (Element v : orbit(g, w, J, delta)) best = std::min(best, g.length(v));
  return best;
}

bool is_min_length_in_orbit(const CoxeterGroup& g, Element w, SimpleSubset J,
                            const DiagramAutomorphism& delta) {
  return g.length(w) == min_length_in_orbit(g, w, J, delta);
}

namespace {

// Path (within length-equal edges from `start`) ending in a strictly
// decreasing edge, found breadth-first; empty if no such path exists.
std::vector<ShiftEdge> find_descent(const CoxeterGroup& g, Element start,
                                    const std::vector<Generator>& labels,
                                    const DiagramAutomorphism& delta) {
  const int len = g.length(start);
  std::vector<Element> queue{start};
  std::vector<ShiftEdge> via{ShiftEdge{}};
  std::vector<std::size_t> parent{0};
  std::vector<char> seen(g.order(), 0);
  seen[start.id] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Element v = queue[head];
    for (Generator s : labels) {
      const Element u = shift(g, v, s, delta);
      if (g.length(u) < len) {
        std::vector<ShiftEdge> path{ShiftEdge{v, u, s}};
        for (std::size_t node = head; node != 0; node = parent[node]) path.push_back(via[node]);
        std::reverse(path.begin(), path.end());
        return path;
      }
    }
    for (Generator s : labels) {
      const Element u = shift(g, v, s, delta);
      if (g.length(u) == len && !seen[u.id]) {
        seen[u.id] = 1;
        queue.push_back(u);
        via.push_back({v, u, s});
        parent.push_back(head);
      }
    }
  }
  return {};
}

}  // namespace

Reduction reduce_to_min(const CoxeterGroup& g, Element w, SimpleSubset J,
                        const DiagramAutomorphism& delta) {
  g.check_subset(J);
  const auto labels = J.members();
  const int target = min_length_in_orbit(g, w, J, delta);
  Reduction r;
  Element cur = w;
  while (g.length(cur) > target) {
    auto path = find_descent(g, cur, labels, delta);
    if (path.empty()) {
      throw CoxeterError("reduce_to_min: no length-decreasing path from a non-minimal element");
    }
    r.path.insert(r.path.end(), path.begin(), path.end());
    cur = path.back().to;
  }

  const CycCertificate cert = theorem_cyc(g, J, delta, CombinatorialPiece{cur, SimpleSubset{}});
  for (const ShiftStep& step : cert.chain) {
    // x^-1 v delta(x) with x = s_1 ... s_k is reached by shifting s_1, ..., s_k.
    for (Generator s : g.word_of(step.x)) {
      const Element next = shift(g, cur, s, delta);
      if (g.length(next) != g.length(cur)) {
        throw CoxeterError("reduce_to_min: expanded chain is not length-preserving");
      }
      r.path.push_back({cur, next, s});
      cur = next;
    }
  }
  r.endpoint = cur;
  r.w_prime = cert.w_prime;
  r.u = cert.u;
  if (g.multiply(r.u, r.w_prime) != r.endpoint) {
    throw CoxeterError("reduce_to_min: endpoint is not u w'");
  }
  return r;
}

bool broue_michel_equiv(const CoxeterGroup& g, Element w, Element w_prime,
                        const DiagramAutomorphism& delta) {
  if (w == w_prime) return true;
  if (g.length(w) != g.length(w_prime)) return false;
  const int len = g.length(w);
  std::vector<char> seen(g.order(), 0);
  std::deque<Element> queue{w};
  seen[w.id] = 1;
  std::vector<char> prefix_seen(g.order(), 0);
  while (!queue.empty()) {
    const Element v = queue.front();
    queue.pop_front();
    // Enumerate x with v = x y, l(x) + l(y) = l(v), by growing x one letter
    // at a time while the letter is a left descent of y.
    std::fill(prefix_seen.begin(), prefix_seen.end(), 0);
    std::vector<std::pair<Element, Element>> stack{{g.identity(), v}};
    prefix_seen[0] = 1;
    while (!stack.empty()) {
      const auto [x, y] = stack.back();
      stack.pop_back();
      const Element next = g.multiply(y, g.apply(delta, x));
      if (g.length(next) == len && !seen[next.id]) {
        if (next == w_prime) return true;
        seen[next.id] = 1;
        queue.push_back(next);
      }
      for (Generator s = 1; s <= g.rank(); ++s) {
        if (!g.is_descent(y, s, Side::Left)) continue;
        const Element xs = g.rmul(x, s);
        if (prefix_seen[xs.id]) continue;
        prefix_seen[xs.id] = 1;
        stack.push_back({xs, g.lmul(s, y)});
      }
    }
  }
  return false;
}

}  // namespace cycshift
