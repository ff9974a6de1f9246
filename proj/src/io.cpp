#include "cycshift/io.hpp"

#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace cycshift::io {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Comma-separated positive integers; error messages carry the character
// offset of the offending token.
std::vector<int> parse_int_list(std::string_view text, const char* what) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    const std::string_view token = trim(text.substr(pos, end - pos));
    if (token.empty()) {
      throw ParseError(std::string("empty entry in ") + what + " at position " +
                       std::to_string(pos));
    }
    int value = 0;
    for (char c : token) {
      if (!std::isdigit(static_cast<unsigned char>(c)) || value > 100000) {
        throw ParseError(std::string("bad ") + what + " entry '" + std::string(token) +
                         "' at position " + std::to_string(pos));
      }
      value = value * 10 + (c - '0');
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

Word parse_word(std::string_view text) {
  text = trim(text);
  if (text.empty() || text == "e") return {};
  const auto letters = parse_int_list(text, "word");
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (letters[i] < 1) {
      throw ParseError("word letter at index " + std::to_string(i) + " must be at least 1");
    }
  }
  return letters;
}

std::string format_word(const Word& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(word[i]);
  }
  return out;
}

SimpleSubset parse_subset(std::string_view text, int rank) {
  text = trim(text);
  if (text.empty() || text == "∅" || text == "empty" || text == "none" || text == "{}") {
    return {};
  }
  if (text == "S" || text == "all") return SimpleSubset::full(rank);
  SimpleSubset out;
  for (int s : parse_int_list(text, "subset")) {
    if (s < 1 || s > rank) {
      throw ParseError("subset label " + std::to_string(s) + " is outside 1.." +
                       std::to_string(rank));
    }
    out.insert(s);
  }
  return out;
}

std::string format_subset(SimpleSubset subset) { return format_word(subset.members()); }

DiagramAutomorphism parse_automorphism(std::string_view text, const CoxeterGroup& g) {
  text = trim(text);
  if (text.empty() || text == "id") return DiagramAutomorphism::identity(g.rank());
  std::vector<Generator> image(static_cast<std::size_t>(g.rank()), 0);
  std::iota(image.begin(), image.end(), 1);
  std::vector<bool> assigned(static_cast<std::size_t>(g.rank()) + 1, false);
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    const std::string_view token = trim(text.substr(pos, end - pos));
    const std::size_t colon = token.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError("automorphism entry '" + std::string(token) +
                       "' lacks ':' at position " + std::to_string(pos));
    }
    const auto from = parse_int_list(token.substr(0, colon), "automorphism");
    const auto to = parse_int_list(token.substr(colon + 1), "automorphism");
    if (from.size() != 1 || to.size() != 1 || from[0] < 1 || from[0] > g.rank() || to[0] < 1 ||
        to[0] > g.rank()) {
      throw ParseError("automorphism entry '" + std::string(token) + "' at position " +
                       std::to_string(pos) + " is out of range");
    }
    if (assigned[static_cast<std::size_t>(from[0])]) {
      throw ParseError("automorphism assigns " + std::to_string(from[0]) + " twice");
    }
    assigned[static_cast<std::size_t>(from[0])] = true;
    image[static_cast<std::size_t>(from[0] - 1)] = to[0];
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  DiagramAutomorphism delta(std::move(image));
  if (!g.is_automorphism(delta)) {
    throw ParseError("'" + std::string(text) + "' does not preserve the Coxeter matrix");
  }
  return delta;
}

std::string format_automorphism(const DiagramAutomorphism& delta) {
  if (delta.is_identity()) return "id";
  std::string out;
  for (Generator s = 1; s <= delta.rank(); ++s) {
    if (s > 1) out += ',';
    out += std::to_string(s) + ":" + std::to_string(delta(s));
  }
  return out;
}

Element parse_element(std::string_view text, const CoxeterGroup& g) {
  return g.element_of(parse_word(text));
}

std::string format_element(const CoxeterGroup& g, Element w) {
  return format_word(g.word_of(w));
}

std::string subscript_label(const CoxeterGroup& g, Element w) {
  if (w == g.identity()) return "1";
  const Word word = g.word_of(w);
  std::string out = "s_{";
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i && g.rank() >= 10) out += ',';
    out += std::to_string(word[i]);
  }
  return out + "}";
}

// ---------------------------------------------------------------------------

Json subset_json(SimpleSubset subset) {
  Json arr = Json::array();
  for (Generator s : subset.members()) arr.push_back(s);
  return arr;
}

SimpleSubset subset_from_json(const Json& j, int rank) {
  SimpleSubset out;
  for (const auto& v : j) {
    const int s = v.get<int>();
    if (s < 1 || s > rank) throw ParseError("subset label out of range in JSON");
    out.insert(s);
  }
  return out;
}

namespace {

Element element_from_json(const Json& j, const CoxeterGroup& g) {
  return parse_element(j.get<std::string>(), g);
}

Json quadruple_json(const CoxeterGroup& g, const QuadrupleStep& q) {
  Json j;
  j["J_n"] = subset_json(q.J_n);
  j["w_n"] = format_element(g, q.w_n);
  j["x_n"] = format_element(g, q.x_n);
  j["y_n"] = format_element(g, q.y_n);
  j["conjugate"] = format_element(g, q.conjugate);
  return j;
}

QuadrupleStep quadruple_from_json(const Json& j, const CoxeterGroup& g) {
  return {subset_from_json(j.at("J_n"), g.rank()), element_from_json(j.at("w_n"), g),
          element_from_json(j.at("x_n"), g), element_from_json(j.at("y_n"), g),
          element_from_json(j.at("conjugate"), g)};
}

}  // namespace

Json to_json(const CoxeterGroup& g, const CombinatorialPiece& piece) {
  Json j;
  j["w"] = format_element(g, piece.w);
  j["K"] = subset_json(piece.K);
  return j;
}

CombinatorialPiece piece_from_json(const Json& j, const CoxeterGroup& g) {
  return {element_from_json(j.at("w"), g), subset_from_json(j.at("K"), g.rank())};
}

Json to_json(const CoxeterGroup& g, const ShiftStep& step) {
  Json j;
  j["x"] = format_element(g, step.x);
  j["from"] = to_json(g, step.from);
  j["to"] = to_json(g, step.to);
  return j;
}

ShiftStep step_from_json(const Json& j, const CoxeterGroup& g) {
  return {element_from_json(j.at("x"), g), piece_from_json(j.at("from"), g),
          piece_from_json(j.at("to"), g)};
}

Json to_json(const CoxeterGroup& g, const PartialDecomposition& d) {
  Json j;
  j["type"] = g.datum().cartan_type.to_string();
  j["J"] = subset_json(d.J);
  j["delta"] = format_automorphism(d.delta);
  Json blocks = Json::array();
  for (const auto& b : d.blocks) {
    Json jb;
    jb["w_prime"] = format_element(g, b.representative);
    jb["I"] = subset_json(b.I);
    Json orbit = Json::array();
    for (Element w : b.orbit) orbit.push_back(format_element(g, w));
    jb["orbit"] = std::move(orbit);
    blocks.push_back(std::move(jb));
  }
  j["blocks"] = std::move(blocks);
  return j;
}

PartialDecomposition decomposition_from_json(const Json& j, const CoxeterGroup& g) {
  PartialDecomposition d;
  d.J = subset_from_json(j.at("J"), g.rank());
  d.delta = parse_automorphism(j.at("delta").get<std::string>(), g);
  for (const auto& jb : j.at("blocks")) {
    DecompositionBlock b;
    b.representative = element_from_json(jb.at("w_prime"), g);
    b.I = subset_from_json(jb.at("I"), g.rank());
    std::vector<Element> orbit;
    for (const auto& v : jb.at("orbit")) orbit.push_back(element_from_json(v, g));
    b.orbit = ElementSet(std::move(orbit));
    d.blocks.push_back(std::move(b));
  }
  return d;
}

Json to_json(const CoxeterGroup& g, const CycCertificate& cert) {
  Json j;
  j["J"] = subset_json(cert.J);
  j["delta"] = format_automorphism(cert.delta);
  j["piece"] = to_json(g, cert.input);
  j["w_prime"] = format_element(g, cert.w_prime);
  j["x"] = format_element(g, cert.x);
  j["u"] = format_element(g, cert.u);
  j["I"] = subset_json(cert.I);
  j["K_prime"] = subset_json(cert.K_prime);
  j["length_constant"] = cert.length_constant;
  Json chain = Json::array();
  for (const auto& step : cert.chain) chain.push_back(to_json(g, step));
  j["chain"] = std::move(chain);
  Json quads = Json::array();
  for (const auto& q : cert.quadruples) quads.push_back(quadruple_json(g, q));
  j["quadruples"] = std::move(quads);
  return j;
}

CycCertificate certificate_from_json(const Json& j, const CoxeterGroup& g) {
  CycCertificate c;
  c.J = subset_from_json(j.at("J"), g.rank());
  c.delta = parse_automorphism(j.at("delta").get<std::string>(), g);
  c.input = piece_from_json(j.at("piece"), g);
  c.w_prime = element_from_json(j.at("w_prime"), g);
  c.x = element_from_json(j.at("x"), g);
  c.u = element_from_json(j.at("u"), g);
  c.I = subset_from_json(j.at("I"), g.rank());
  c.K_prime = subset_from_json(j.at("K_prime"), g.rank());
  c.length_constant = j.at("length_constant").get<bool>();
  for (const auto& s : j.at("chain")) c.chain.push_back(step_from_json(s, g));
  for (const auto& q : j.at("quadruples")) c.quadruples.push_back(quadruple_from_json(q, g));
  return c;
}

Json to_json(const CoxeterGroup& g, const InductionDatum& d) {
  Json j;
  j["J"] = subset_json(d.J);
  j["J_prime"] = subset_json(d.J_prime);
  j["w"] = format_element(g, d.w);
  j["w_prime"] = format_element(g, d.w_prime);
  j["x"] = format_element(g, d.x);
  j["u"] = format_element(g, d.u);
  j["K"] = subset_json(d.K);
  j["K1"] = subset_json(d.K1);
  j["K_prime"] = subset_json(d.K_prime);
  j["length_constant"] = d.length_constant;
  j["certificate"] = to_json(g, d.certificate);
  return j;
}

InductionDatum datum_from_json(const Json& j, const CoxeterGroup& g) {
  InductionDatum d;
  d.J = subset_from_json(j.at("J"), g.rank());
  d.J_prime = subset_from_json(j.at("J_prime"), g.rank());
  d.w = element_from_json(j.at("w"), g);
  d.w_prime = element_from_json(j.at("w_prime"), g);
  d.x = element_from_json(j.at("x"), g);
  d.u = element_from_json(j.at("u"), g);
  d.K = subset_from_json(j.at("K"), g.rank());
  d.K1 = subset_from_json(j.at("K1"), g.rank());
  d.K_prime = subset_from_json(j.at("K_prime"), g.rank());
  d.length_constant = j.at("length_constant").get<bool>();
  d.certificate = certificate_from_json(j.at("certificate"), g);
  return d;
}

Json to_json(const CoxeterGroup& g, const HasseDiagram& h) {
  Json j;
  Json vertices = Json::array();
  for (Element v : h.vertices) vertices.push_back(format_element(g, v));
  j["vertices"] = std::move(vertices);
  Json covers = Json::array();
  for (const auto& c : h.covers) {
    Json jc;
    jc["lower"] = format_element(g, c.lower);
    jc["upper"] = format_element(g, c.upper);
    jc["bruhat"] = c.bruhat;
    covers.push_back(std::move(jc));
  }
  j["covers"] = std::move(covers);
  return j;
}

Json graph_json(const ShiftGraph& graph, const ElementSet& vertices) {
  const CoxeterGroup& g = graph.group();
  Json j;
  j["type"] = g.datum().cartan_type.to_string();
  j["delta"] = format_automorphism(graph.delta());
  j["J"] = subset_json(graph.labels());
  Json vs = Json::array();
  for (Element v : vertices) {
    Json jv;
    jv["w"] = format_element(g, v);
    jv["length"] = g.length(v);
    vs.push_back(std::move(jv));
  }
  j["vertices"] = std::move(vs);
  Json es = Json::array();
  for (Element v : vertices) {
    for (const ShiftEdge& e : graph.out_edges(v)) {
      if (!vertices.contains(e.to)) continue;
      Json je;
      je["from"] = format_element(g, e.from);
      je["to"] = format_element(g, e.to);
      je["label"] = e.label;
      es.push_back(std::move(je));
    }
  }
  j["edges"] = std::move(es);
  return j;
}

// ---------------------------------------------------------------------------

namespace {

std::string node_id(Element w) { return "v" + std::to_string(w.id); }

}  // namespace

std::string graph_dot(const ShiftGraph& graph, const ElementSet& vertices) {
  const CoxeterGroup& g = graph.group();
  std::ostringstream out;
  out << "digraph conjugacy {\n";
  out << "  // type " << g.datum().cartan_type.to_string() << ", delta "
      << format_automorphism(graph.delta()) << ", J {" << format_subset(graph.labels())
      << "}\n";
  out << "  rankdir=TB;\n";
  for (Element v : vertices) {
    out << "  " << node_id(v) << " [label=\"" << subscript_label(g, v) << "\"];\n";
  }
  for (Element v : vertices) {
    for (const ShiftEdge& e : graph.out_edges(v)) {
      if (!vertices.contains(e.to)) continue;
      out << "  " << node_id(e.from) << " -> " << node_id(e.to) << " [label=\"" << e.label
          << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string hasse_dot(const CoxeterGroup& g, const HasseDiagram& h) {
  std::ostringstream out;
  out << "graph hasse {\n";
  out << "  rankdir=BT;\n";
  for (Element v : h.vertices) {
    out << "  " << node_id(v) << " [label=\"" << subscript_label(g, v) << "\"];\n";
  }
  for (const auto& c : h.covers) {
    out << "  " << node_id(c.lower) << " -- " << node_id(c.upper);
    if (!c.bruhat) out << " [style=dashed]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace cycshift::io
