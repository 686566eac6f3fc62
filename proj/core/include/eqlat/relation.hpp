#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace eqlat {

using Element = std::uint32_t;
using ElementPair = std::pair<Element, Element>;

/// Boolean incidence matrix of a binary relation on {0,...,n-1}, stored as
/// one bit row per element. Compositions of equivalence relations live here
/// because they need not be transitive.
class BinaryRelation {
 public:
  BinaryRelation() = default;
  explicit BinaryRelation(std::size_t n);

  static BinaryRelation identity(std::size_t n);
  static BinaryRelation full(std::size_t n);

  std::size_t size() const noexcept { return n_; }

  bool contains(Element x, Element y) const noexcept {
    return (rows_[x * words_ + y / 64] >> (y % 64)) & 1u;
  }
  void insert(Element x, Element y) noexcept {
    rows_[x * words_ + y / 64] |= std::uint64_t{1} << (y % 64);
  }

  /// Number of related pairs.
  std::size_t count() const noexcept;

  BinaryRelation converse() const;
  BinaryRelation operator&(const BinaryRelation& other) const;
  BinaryRelation operator|(const BinaryRelation& other) const;

  bool subset_of(const BinaryRelation& other) const;

  bool is_reflexive() const noexcept;
  bool is_symmetric() const noexcept;
  bool is_transitive() const;

  /// First pair in row-major order that lies in exactly one of the relations.
  std::optional<ElementPair> first_difference(const BinaryRelation& other) const;
  /// First pair in row-major order that lies in this relation but not in `other`.
  std::optional<ElementPair> first_excess(const BinaryRelation& other) const;

  /// Rows rendered as '0'/'1' strings joined by '/'.
  std::string to_string() const;

  friend bool operator==(const BinaryRelation&, const BinaryRelation&) = default;

 private:
  friend BinaryRelation compose(const BinaryRelation& a, const BinaryRelation& b);

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
};

/// Relational product: (x,y) iff x a c and c b y for some c.
BinaryRelation compose(const BinaryRelation& a, const BinaryRelation& b);

}  // namespace eqlat
