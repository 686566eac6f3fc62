#include "eqlat/relation.hpp"

#include <bit>

#include "eqlat/error.hpp"

namespace eqlat {

BinaryRelation::BinaryRelation(std::size_t n)
    : n_(n), words_((n + 63) / 64), rows_(n * ((n + 63) / 64), 0) {}

BinaryRelation BinaryRelation::identity(std::size_t n) {
  BinaryRelation r(n);
  for (Element x = 0; x < n; ++x) r.insert(x, x);
  return r;
}

BinaryRelation BinaryRelation::full(std::size_t n) {
  BinaryRelation r(n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) r.insert(x, y);
  return r;
}

std::size_t BinaryRelation::count() const noexcept {
  std::size_t total = 0;
  for (auto w : rows_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

BinaryRelation BinaryRelation::converse() const {
  BinaryRelation r(n_);
  for (Element x = 0; x < n_; ++x)
    for (Element y = 0; y < n_; ++y)
      if (contains(x, y)) r.insert(y, x);
  return r;
}

BinaryRelation BinaryRelation::operator&(const BinaryRelation& other) const {
  require_same_size(n_, other.n_, "intersection");
  BinaryRelation r = *this;
  for (std::size_t i = 0; i < rows_.size(); ++i) r.rows_[i] &= other.rows_[i];
  return r;
}

BinaryRelation BinaryRelation::operator|(const BinaryRelation& other) const {
  require_same_size(n_, other.n_, "union");
  BinaryRelation r = *this;
  for (std::size_t i = 0; i < rows_.size(); ++i) r.rows_[i] |= other.rows_[i];
  return r;
}

bool BinaryRelation::subset_of(const BinaryRelation& other) const {
  require_same_size(n_, other.n_, "inclusion");
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (rows_[i] & ~other.rows_[i]) return false;
  return true;
}

bool BinaryRelation::is_reflexive() const noexcept {
  for (Element x = 0; x < n_; ++x)
    if (!contains(x, x)) return false;
  return true;
}

bool BinaryRelation::is_symmetric() const noexcept {
  for (Element x = 0; x < n_; ++x)
    for (Element y = x + 1; y < n_; ++y)
      if (contains(x, y) != contains(y, x)) return false;
  return true;
}

bool BinaryRelation::is_transitive() const { return compose(*this, *this).subset_of(*this); }

std::optional<ElementPair> BinaryRelation::first_difference(const BinaryRelation& other) const {
  require_same_size(n_, other.n_, "comparison");
  for (Element x = 0; x < n_; ++x)
    for (Element y = 0; y < n_; ++y)
      if (contains(x, y) != other.contains(x, y)) return ElementPair{x, y};
  return std::nullopt;
}

std::optional<ElementPair> BinaryRelation::first_excess(const BinaryRelation& other) const {
  require_same_size(n_, other.n_, "inclusion");
  for (Element x = 0; x < n_; ++x)
    for (Element y = 0; y < n_; ++y)
      if (contains(x, y) && !other.contains(x, y)) return ElementPair{x, y};
  return std::nullopt;
}

std::string BinaryRelation::to_string() const {
  std::string out;
  out.reserve(n_ * (n_ + 1));
  for (Element x = 0; x < n_; ++x) {
    if (x != 0) out += '/';
    for (Element y = 0; y < n_; ++y) out += contains(x, y) ? '1' : '0';
  }
  return out;
}

BinaryRelation compose(const BinaryRelation& a, const BinaryRelation& b) {
  require_same_size(a.n_, b.n_, "compose");
  BinaryRelation r(a.n_);
  const std::size_t words = a.words_;
  for (Element x = 0; x < a.n_; ++x) {
    std::uint64_t* out = &r.rows_[x * words];
    for (Element c = 0; c < a.n_; ++c) {
      if (!a.contains(x, c)) continue;
      const std::uint64_t* row = &b.rows_[c * words];
      for (std::size_t w = 0; w < words; ++w) out[w] |= row[w];
    }
  }
  return r;
}

}  // namespace eqlat
