#pragma once

#include <algorithm>
#include <vector>

#include "cycshift/coxeter.hpp"

namespace cycshift {

/// Sorted, duplicate-free set of group elements. Sorting by handle is sorting
/// by (length, ShortLex word).
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::vector<Element> elements) : elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  }

  bool contains(Element w) const {
    return std::binary_search(elements_.begin(), elements_.end(), w);
  }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }
  Element front() const { return elements_.front(); }
  const std::vector<Element>& elements() const { return elements_; }

  bool operator==(const ElementSet&) const = default;

 private:
  std::vector<Element> elements_;
};

}  // namespace cycshift
