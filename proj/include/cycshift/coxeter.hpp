#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cycshift {

/// Simple reflection label, 1-based as in s_1, s_2, ...
using Generator = int;

/// A word in the simple reflections: [1,2,1] means s_1 s_2 s_1.
using Word = std::vector<Generator>;

inline constexpr int kMaxRank = 16;

class CoxeterError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Handle of an element in an enumerated group. Handles are assigned in
/// (length, ShortLex) order, so comparing handles compares canonical words.
struct Element {
  std::uint32_t id = 0;

  constexpr auto operator<=>(const Element&) const = default;
};

/// Subset of simple reflections, stored as a bit mask (bit s-1 for s).
class SimpleSubset {
 public:
  constexpr SimpleSubset() = default;
  constexpr explicit SimpleSubset(std::uint32_t mask) : mask_(mask) {}
  SimpleSubset(std::initializer_list<Generator> gens) {
    for (Generator s : gens) insert(s);
  }

  static constexpr SimpleSubset full(int rank) {
    return SimpleSubset(rank >= 32 ? ~0u : ((1u << rank) - 1u));
  }

  constexpr bool contains(Generator s) const { return (mask_ >> (s - 1)) & 1u; }
  constexpr void insert(Generator s) { mask_ |= 1u << (s - 1); }
  constexpr void erase(Generator s) { mask_ &= ~(1u << (s - 1)); }
  constexpr bool empty() const { return mask_ == 0; }
  int size() const { return __builtin_popcount(mask_); }
  constexpr std::uint32_t mask() const { return mask_; }

  constexpr bool subset_of(SimpleSubset other) const {
    return (mask_ & ~other.mask_) == 0;
  }
  constexpr SimpleSubset operator&(SimpleSubset o) const {
    return SimpleSubset(mask_ & o.mask_);
  }
  constexpr SimpleSubset operator|(SimpleSubset o) const {
    return SimpleSubset(mask_ | o.mask_);
  }

  /// Members in increasing label order.
  std::vector<Generator> members() const;

  constexpr auto operator<=>(const SimpleSubset&) const = default;

 private:
  std::uint32_t mask_ = 0;
};

/// Every subset of {1..rank}, ordered by mask value.
std::vector<SimpleSubset> all_subsets(int rank);

/// One irreducible factor of a Cartan type, e.g. {'B', 3}.
struct CartanComponent {
  char series = 'A';
  int rank = 1;

  bool operator==(const CartanComponent&) const = default;
};

/// A finite Cartan type, possibly reducible ("A2xB2"). Generator labels of
/// successive factors are numbered consecutively.
class CartanType {
 public:
  CartanType() = default;
  explicit CartanType(std::vector<CartanComponent> components);

  /// Parses "A3", "G2", "A1xA2". Throws CoxeterError on bad input.
  static CartanType parse(std::string_view text);

  const std::vector<CartanComponent>& components() const { return components_; }
  int rank() const;
  std::string to_string() const;

  /// Generalized Cartan matrix a(i,j) = <alpha_i^vee, alpha_j>, row major.
  std::vector<int> cartan_matrix() const;

  /// Order of the Weyl group from the classical product formulas.
  std::uint64_t expected_order() const;

  bool operator==(const CartanType&) const = default;

 private:
  std::vector<CartanComponent> components_;
};

/// Symmetric matrix m(s,t) with m(s,s) = 1.
class CoxeterMatrix {
 public:
  CoxeterMatrix() = default;
  CoxeterMatrix(int rank, std::vector<int> entries);

  static CoxeterMatrix from_cartan(int rank, const std::vector<int>& cartan);

  int rank() const { return rank_; }
  int operator()(Generator s, Generator t) const {
    return entries_[static_cast<std::size_t>((s - 1) * rank_ + (t - 1))];
  }

  /// Throws CoxeterError unless symmetric, unit diagonal, and off-diagonal
  /// entries in {2,3,4,6}.
  void validate() const;

  bool operator==(const CoxeterMatrix&) const = default;

 private:
  int rank_ = 0;
  std::vector<int> entries_;
};

/// A permutation of the simple reflections preserving the Coxeter matrix.
class DiagramAutomorphism {
 public:
  DiagramAutomorphism() = default;
  /// image[s-1] = delta(s).
  explicit DiagramAutomorphism(std::vector<Generator> image);

  static DiagramAutomorphism identity(int rank);

  int rank() const { return static_cast<int>(image_.size()); }
  Generator operator()(Generator s) const { return image_[static_cast<std::size_t>(s - 1)]; }
  SimpleSubset operator()(SimpleSubset subset) const;
  bool is_identity() const;
  DiagramAutomorphism inverse() const;
  const std::vector<Generator>& image() const { return image_; }

  bool operator==(const DiagramAutomorphism&) const = default;
  auto operator<=>(const DiagramAutomorphism&) const = default;

 private:
  std::vector<Generator> image_;
};

enum class Side { Left, Right };

struct CoxeterDatum {
  CartanType cartan_type;
  CoxeterMatrix coxeter_matrix;
  std::vector<int> cartan;  // row-major generalized Cartan matrix

  static CoxeterDatum from_type(const CartanType& type);
  /// Crystallographic realization of a Coxeter matrix with entries in {2,3,4,6}.
  static CoxeterDatum from_coxeter_matrix(const CoxeterMatrix& m);

  int rank() const { return coxeter_matrix.rank(); }
};

inline constexpr std::size_t kDefaultOrderCap = 1'000'000;

/// A finite Weyl group enumerated by breadth-first search of its Cayley graph.
/// Immutable after construction; every query is a read.
class CoxeterGroup {
 public:
  /// Throws CoxeterError if the matrix is invalid or the group exceeds `cap`.
  explicit CoxeterGroup(CoxeterDatum datum, std::size_t cap = kDefaultOrderCap);

  static CoxeterGroup of_type(std::string_view type, std::size_t cap = kDefaultOrderCap) {
    return CoxeterGroup(CoxeterDatum::from_type(CartanType::parse(type)), cap);
  }

  const CoxeterDatum& datum() const { return datum_; }
  const CoxeterMatrix& coxeter_matrix() const { return datum_.coxeter_matrix; }
  int rank() const { return rank_; }
  std::size_t order() const { return length_.size(); }
  SimpleSubset all_generators() const { return SimpleSubset::full(rank_); }

  Element identity() const { return Element{0}; }
  Element generator(Generator s) const { return Element{static_cast<std::uint32_t>(s)}; }
  Element element(std::size_t index) const { return Element{static_cast<std::uint32_t>(index)}; }
  /// The simple reflection equal to w, if any.
  std::optional<Generator> as_generator(Element w) const;

  int length(Element w) const { return length_[w.id]; }
  /// w * s
  Element rmul(Element w, Generator s) const { return Element{rmul_[index(w, s)]}; }
  /// s * w
  Element lmul(Generator s, Element w) const { return Element{lmul_[index(w, s)]}; }
  Element multiply(Element a, Element b) const;
  Element inverse(Element w) const { return Element{inverse_[w.id]}; }

  Element element_of(const Word& word) const;
  /// ShortLex-least reduced word.
  Word word_of(Element w) const;
  /// Last letter of the canonical word; undefined for the identity.
  Generator last_letter(Element w) const { return last_[w.id]; }
  /// w with its last canonical letter removed.
  Element prefix(Element w) const { return Element{parent_[w.id]}; }

  bool is_descent(Element w, Generator s, Side side) const {
    Element sw = side == Side::Left ? lmul(s, w) : rmul(w, s);
    return length_[sw.id] < length_[w.id];
  }
  SimpleSubset descents(Element w, Side side) const;

  /// Bruhat order via the lifting property.
  bool bruhat_leq(Element a, Element b) const;

  Element longest_element() const { return Element{static_cast<std::uint32_t>(order() - 1)}; }

  Element apply(const DiagramAutomorphism& delta, Element w) const;
  /// x * w * delta(x)^-1
  Element twisted_conjugate(Element x, Element w, const DiagramAutomorphism& delta) const;
  /// w * s * w^-1 for a generator s; a reflection.
  Element conjugate_generator(Element w, Generator s) const;

  bool is_automorphism(const DiagramAutomorphism& delta) const;
  /// All diagram automorphisms, identity first, then lexicographic.
  std::vector<DiagramAutomorphism> automorphisms() const;

  /// Throws CoxeterError when a letter is outside 1..rank.
  void check_word(const Word& word) const;
  void check_subset(SimpleSubset subset) const;

 private:
  std::size_t index(Element w, Generator s) const {
    return static_cast<std::size_t>(w.id) * static_cast<std::size_t>(rank_) +
           static_cast<std::size_t>(s - 1);
  }

  CoxeterDatum datum_;
  int rank_ = 0;
  std::vector<std::uint32_t> rmul_;
  std::vector<std::uint32_t> lmul_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint8_t> last_;
  std::vector<std::uint8_t> length_;
};

}  // namespace cycshift
