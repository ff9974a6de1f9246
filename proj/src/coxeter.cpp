#include "cycshift/coxeter.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace cycshift {

std::vector<Generator> SimpleSubset::members() const {
  std::vector<Generator> out;
  for (std::uint32_t m = mask_; m != 0; m &= m - 1) {
    out.push_back(__builtin_ctz(m) + 1);
  }
  return out;
}

std::vector<SimpleSubset> all_subsets(int rank) {
  std::vector<SimpleSubset> out;
  const std::uint32_t n = 1u << rank;
  out.reserve(n);
  for (std::uint32_t m = 0; m < n; ++m) out.emplace_back(m);
  return out;
}

// ---------------------------------------------------------------------------
// Cartan types

namespace {

bool supported(const CartanComponent& c) {
  switch (c.series) {
    case 'A': return c.rank >= 1;
    case 'B':
    case 'C': return c.rank >= 2;
    case 'D': return c.rank >= 4;
    case 'F': return c.rank == 4;
    case 'G': return c.rank == 2;
    default: return false;
  }
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace

CartanType::CartanType(std::vector<CartanComponent> components)
    : components_(std::move(components)) {
  if (components_.empty()) throw CoxeterError("empty Cartan type");
  for (const auto& c : components_) {
    if (!supported(c)) {
      throw CoxeterError("unsupported Cartan type " + std::string(1, c.series) +
                         std::to_string(c.rank));
    }
  }
  if (rank() > kMaxRank) throw CoxeterError("rank exceeds " + std::to_string(kMaxRank));
}

CartanType CartanType::parse(std::string_view text) {
  std::vector<CartanComponent> parts;
  std::size_t pos = 0;
  while (pos < text.size()) {
    char series = static_cast<char>(std::toupper(static_cast<unsigned char>(text[pos])));
    if (series < 'A' || series > 'Z') {
      throw CoxeterError("bad Cartan type '" + std::string(text) + "' at position " +
                         std::to_string(pos));
    }
    ++pos;
    const std::size_t start = pos;
    int rank = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      rank = rank * 10 + (text[pos] - '0');
      if (rank > 1000) break;
      ++pos;
    }
    if (pos == start) {
      throw CoxeterError("missing rank in Cartan type '" + std::string(text) + "' at position " +
                         std::to_string(pos));
    }
    parts.push_back({series, rank});
    if (pos < text.size()) {
      if (text[pos] != 'x' && text[pos] != 'X') {
        throw CoxeterError("expected 'x' between factors in '" + std::string(text) +
                           "' at position " + std::to_string(pos));
      }
      ++pos;
      if (pos == text.size()) throw CoxeterError("trailing 'x' in Cartan type");
    }
  }
  return CartanType(std::move(parts));
}

int CartanType::rank() const {
  int r = 0;
  for (const auto& c : components_) r += c.rank;
  return r;
}

std::string CartanType::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) out += 'x';
    out += components_[i].series;
    out += std::to_string(components_[i].rank);
  }
  return out;
}

std::vector<int> CartanType::cartan_matrix() const {
  const int n = rank();
  std::vector<int> a(static_cast<std::size_t>(n * n), 0);
  auto at = [&](int i, int j) -> int& { return a[static_cast<std::size_t>(i * n + j)]; };
  auto bond = [&](int i, int j) { at(i, j) = -1; at(j, i) = -1; };
  int off = 0;
  for (const auto& c : components_) {
    const int r = c.rank;
    for (int i = 0; i < r; ++i) at(off + i, off + i) = 2;
    switch (c.series) {
      case 'A':
        for (int i = 0; i + 1 < r; ++i) bond(off + i, off + i + 1);
        break;
      case 'B':
      case 'C':
        for (int i = 0; i + 2 < r; ++i) bond(off + i, off + i + 1);
        at(off + r - 2, off + r - 1) = c.series == 'B' ? -2 : -1;
        at(off + r - 1, off + r - 2) = c.series == 'B' ? -1 : -2;
        break;
      case 'D':
        for (int i = 0; i + 3 < r; ++i) bond(off + i, off + i + 1);
        bond(off + r - 3, off + r - 2);
        bond(off + r - 3, off + r - 1);
        break;
      case 'F':
        bond(off, off + 1);
        at(off + 1, off + 2) = -2;
        at(off + 2, off + 1) = -1;
        bond(off + 2, off + 3);
        break;
      case 'G':
        at(off, off + 1) = -1;
        at(off + 1, off) = -3;
        break;
    }
    off += r;
  }
  return a;
}

std::uint64_t CartanType::expected_order() const {
  std::uint64_t order = 1;
  for (const auto& c : components_) {
    switch (c.series) {
      case 'A': order *= factorial(c.rank + 1); break;
      case 'B':
      case 'C': order *= (std::uint64_t{1} << c.rank) * factorial(c.rank); break;
      case 'D': order *= (std::uint64_t{1} << (c.rank - 1)) * factorial(c.rank); break;
      case 'F': order *= 1152; break;
      case 'G': order *= 12; break;
    }
  }
  return order;
}

// ---------------------------------------------------------------------------
// Coxeter matrices and automorphisms

CoxeterMatrix::CoxeterMatrix(int rank, std::vector<int> entries)
    : rank_(rank), entries_(std::move(entries)) {
  if (rank_ < 1 || rank_ > kMaxRank) throw CoxeterError("Coxeter matrix rank out of range");
  if (entries_.size() != static_cast<std::size_t>(rank_ * rank_)) {
    throw CoxeterError("Coxeter matrix has wrong number of entries");
  }
}

CoxeterMatrix CoxeterMatrix::from_cartan(int rank, const std::vector<int>& cartan) {
  std::vector<int> m(static_cast<std::size_t>(rank * rank), 1);
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < rank; ++j) {
      if (i == j) continue;
      const int p = cartan[static_cast<std::size_t>(i * rank + j)] *
                    cartan[static_cast<std::size_t>(j * rank + i)];
      static constexpr std::array<int, 4> kOrder{2, 3, 4, 6};
      if (p < 0 || p > 3) throw CoxeterError("Cartan matrix is not of finite type");
      m[static_cast<std::size_t>(i * rank + j)] = kOrder[static_cast<std::size_t>(p)];
    }
  }
  return CoxeterMatrix(rank, std::move(m));
}

void CoxeterMatrix::validate() const {
  for (Generator s = 1; s <= rank_; ++s) {
    if ((*this)(s, s) != 1) throw CoxeterError("Coxeter matrix: m(s,s) must be 1");
    for (Generator t = 1; t <= rank_; ++t) {
      if (s == t) continue;
      const int m = (*this)(s, t);
      if (m != (*this)(t, s)) throw CoxeterError("Coxeter matrix is not symmetric");
      if (m != 2 && m != 3 && m != 4 && m != 6) {
        throw CoxeterError("Coxeter matrix entry m(" + std::to_string(s) + "," +
                           std::to_string(t) + ")=" + std::to_string(m) +
                           " is not crystallographic");
      }
    }
  }
}

DiagramAutomorphism::DiagramAutomorphism(std::vector<Generator> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size() + 1, false);
  for (Generator s : image_) {
    if (s < 1 || s > static_cast<int>(image_.size()) || seen[static_cast<std::size_t>(s)]) {
      throw CoxeterError("automorphism is not a permutation of the generators");
    }
    seen[static_cast<std::size_t>(s)] = true;
  }
}

DiagramAutomorphism DiagramAutomorphism::identity(int rank) {
  std::vector<Generator> img(static_cast<std::size_t>(rank));
  std::iota(img.begin(), img.end(), 1);
  return DiagramAutomorphism(std::move(img));
}

SimpleSubset DiagramAutomorphism::operator()(SimpleSubset subset) const {
  SimpleSubset out;
  for (Generator s : subset.members()) out.insert((*this)(s));
  return out;
}

bool DiagramAutomorphism::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != static_cast<Generator>(i + 1)) return false;
  }
  return true;
}

DiagramAutomorphism DiagramAutomorphism::inverse() const {
  std::vector<Generator> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) {
    inv[static_cast<std::size_t>(image_[i] - 1)] = static_cast<Generator>(i + 1);
  }
  return DiagramAutomorphism(std::move(inv));
}

CoxeterDatum CoxeterDatum::from_type(const CartanType& type) {
  CoxeterDatum d;
  d.cartan_type = type;
  d.cartan = type.cartan_matrix();
  d.coxeter_matrix = CoxeterMatrix::from_cartan(type.rank(), d.cartan);
  return d;
}

CoxeterDatum CoxeterDatum::from_coxeter_matrix(const CoxeterMatrix& m) {
  m.validate();
  const int n = m.rank();
  CoxeterDatum d;
  d.coxeter_matrix = m;
  d.cartan.assign(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i) {
    d.cartan[static_cast<std::size_t>(i * n + i)] = 2;
    for (int j = i + 1; j < n; ++j) {
      int a = 0;
      int b = 0;
      switch (m(i + 1, j + 1)) {
        case 3: a = -1; b = -1; break;
        case 4: a = -2; b = -1; break;
        case 6: a = -3; b = -1; break;
        default: break;
      }
      d.cartan[static_cast<std::size_t>(i * n + j)] = a;
      d.cartan[static_cast<std::size_t>(j * n + i)] = b;
    }
  }
  return d;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

using Vec = std::array<std::int32_t, kMaxRank>;

struct VecHash {
  std::size_t operator()(const Vec& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (std::int32_t x : v) {
      h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(x));
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

CoxeterGroup::CoxeterGroup(CoxeterDatum datum, std::size_t cap)
    : datum_(std::move(datum)), rank_(datum_.rank()) {
  datum_.coxeter_matrix.validate();
  const int n = rank_;
  const auto& a = datum_.cartan;

  // The group acts faithfully on weight coordinates, and the stabilizer of
  // rho = (1,...,1) is trivial. We key an element w by w^-1(rho), so that
  // appending a letter s acts by the reflection s on the key.
  auto reflect = [&](const Vec& v, int i) {
    Vec out = v;
    const std::int32_t c = v[static_cast<std::size_t>(i)];
    for (int k = 0; k < n; ++k) {
      out[static_cast<std::size_t>(k)] -= c * a[static_cast<std::size_t>(k * n + i)];
    }
    return out;
  };

  Vec rho{};
  for (int k = 0; k < n; ++k) rho[static_cast<std::size_t>(k)] = 1;

  std::unordered_map<Vec, std::uint32_t, VecHash> seen;
  std::vector<Vec> keys{rho};
  seen.emplace(rho, 0);
  parent_.push_back(0);
  last_.push_back(0);
  length_.push_back(0);

  for (std::size_t head = 0; head < keys.size(); ++head) {
    for (int s = 0; s < n; ++s) {
      const Vec next = reflect(keys[head], s);
      std::uint32_t id;
      auto it = seen.find(next);
      if (it == seen.end()) {
        if (keys.size() >= cap) {
          throw CoxeterError("group too large: more than " + std::to_string(cap) + " elements");
        }
        id = static_cast<std::uint32_t>(keys.size());
        seen.emplace(next, id);
        keys.push_back(next);
        parent_.push_back(static_cast<std::uint32_t>(head));
        last_.push_back(static_cast<std::uint8_t>(s + 1));
        if (length_[head] == 255) throw CoxeterError("element length exceeds 255");
        length_.push_back(static_cast<std::uint8_t>(length_[head] + 1));
      } else {
        id = it->second;
      }
      rmul_.push_back(id);
    }
  }

  const std::size_t size = keys.size();
  // s * w = s * p * t where w = p * t; parents precede children.
  lmul_.assign(size * static_cast<std::size_t>(n), 0);
  for (int s = 1; s <= n; ++s) lmul_[index(identity(), s)] = static_cast<std::uint32_t>(s);
  for (std::size_t w = 1; w < size; ++w) {
    for (int s = 1; s <= n; ++s) {
      const Element sp = lmul(s, Element{parent_[w]});
      lmul_[index(Element{static_cast<std::uint32_t>(w)}, s)] = rmul_[index(sp, last_[w])];
    }
  }

  inverse_.assign(size, 0);
  for (std::size_t w = 1; w < size; ++w) {
    inverse_[w] = lmul_[index(Element{inverse_[parent_[w]]}, last_[w])];
  }

  if (!datum_.cartan_type.components().empty() &&
      datum_.cartan_type.expected_order() != size) {
    throw CoxeterError("enumerated order " + std::to_string(size) +
                       " disagrees with the order formula for " +
                       datum_.cartan_type.to_string());
  }
}

std::optional<Generator> CoxeterGroup::as_generator(Element w) const {
  if (w.id >= 1 && w.id <= static_cast<std::uint32_t>(rank_)) {
    return static_cast<Generator>(w.id);
  }
  return std::nullopt;
}

Element CoxeterGroup::multiply(Element a, Element b) const {
  // a = q * t  =>  a * b = q * (t * b)
  Element cur = b;
  for (Element x = a; x.id != 0; x = prefix(x)) cur = lmul(last_[x.id], cur);
  return cur;
}

void CoxeterGroup::check_word(const Word& word) const {
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] < 1 || word[i] > rank_) {
      throw CoxeterError("letter " + std::to_string(word[i]) + " at position " +
                         std::to_string(i) + " is outside 1.." + std::to_string(rank_));
    }
  }
}

void CoxeterGroup::check_subset(SimpleSubset subset) const {
  if (!subset.subset_of(all_generators())) {
    throw CoxeterError("subset contains labels outside 1.." + std::to_string(rank_));
  }
}

Element CoxeterGroup::element_of(const Word& word) const {
  check_word(word);
  Element cur = identity();
  for (Generator s : word) cur = rmul(cur, s);
  return cur;
}

Word CoxeterGroup::word_of(Element w) const {
  Word out(static_cast<std::size_t>(length(w)));
  std::size_t pos = out.size();
  for (Element x = w; x.id != 0; x = prefix(x)) out[--pos] = last_[x.id];
  return out;
}

SimpleSubset CoxeterGroup::descents(Element w, Side side) const {
  SimpleSubset out;
  for (Generator s = 1; s <= rank_; ++s) {
    if (is_descent(w, s, side)) out.insert(s);
  }
  return out;
}

bool CoxeterGroup::bruhat_leq(Element a, Element b) const {
  while (true) {
    if (a.id == 0) return true;
    if (length(a) > length(b)) return false;
    if (length(a) == length(b)) return a == b;
    // b != e here, so it has a left descent.
    Generator s = 1;
    while (!is_descent(b, s, Side::Left)) ++s;
    if (is_descent(a, s, Side::Left)) a = lmul(s, a);
    b = lmul(s, b);
  }
}

Element CoxeterGroup::apply(const DiagramAutomorphism& delta, Element w) const {
  Element cur = identity();
  for (Element x = w; x.id != 0; x = prefix(x)) cur = lmul(delta(last_[x.id]), cur);
  return cur;
}

Element CoxeterGroup::twisted_conjugate(Element x, Element w,
                                        const DiagramAutomorphism& delta) const {
  return multiply(multiply(x, w), inverse(apply(delta, x)));
}

Element CoxeterGroup::conjugate_generator(Element w, Generator s) const {
  return multiply(rmul(w, s), inverse(w));
}

bool CoxeterGroup::is_automorphism(const DiagramAutomorphism& delta) const {
  if (delta.rank() != rank_) return false;
  const auto& m = coxeter_matrix();
  for (Generator s = 1; s <= rank_; ++s) {
    for (Generator t = 1; t <= rank_; ++t) {
      if (m(delta(s), delta(t)) != m(s, t)) return false;
    }
  }
  return true;
}

std::vector<DiagramAutomorphism> CoxeterGroup::automorphisms() const {
  std::vector<DiagramAutomorphism> out;
  const auto& m = coxeter_matrix();
  std::vector<Generator> image(static_cast<std::size_t>(rank_), 0);
  std::vector<bool> used(static_cast<std::size_t>(rank_) + 1, false);
  // Backtracking keeps only partial maps that preserve m on assigned pairs.
  auto extend = [&](auto&& self, int s) -> void {
    if (s > rank_) {
      out.emplace_back(image);
      return;
    }
    for (Generator t = 1; t <= rank_; ++t) {
      if (used[static_cast<std::size_t>(t)]) continue;
      bool ok = true;
      for (Generator r = 1; r < s && ok; ++r) {
        ok = m(image[static_cast<std::size_t>(r - 1)], t) == m(r, s);
      }
      if (!ok) continue;
      used[static_cast<std::size_t>(t)] = true;
      image[static_cast<std::size_t>(s - 1)] = t;
      self(self, s + 1);
      used[static_cast<std::size_t>(t)] = false;
    }
  };
  extend(extend, 1);
  return out;
}

}  // namespace cycshift
