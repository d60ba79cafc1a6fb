#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace arbor {

/// Rooted tree whose vertices carry positive multiplicities.
///
/// Children are kept sorted by their text encoding, so two arbors are
/// isomorphic exactly when their encodings are equal.
class Arbor {
 public:
  /// Throws std::invalid_argument if root_multiplicity < 1.
  Arbor(int root_multiplicity, std::vector<Arbor> children = {});

  int root_multiplicity() const { return root_; }
  const std::vector<Arbor>& children() const { return children_; }
  int size() const { return size_; }
  int vertex_count() const;
  /// Every vertex has at most one child.
  bool is_linear() const;
  /// "(r child child ...)".
  const std::string& encode() const { return encoding_; }

  friend bool operator==(const Arbor& a, const Arbor& b) { return a.encoding_ == b.encoding_; }
  friend bool operator<(const Arbor& a, const Arbor& b) { return a.encoding_ < b.encoding_; }

 private:
  int root_;
  std::vector<Arbor> children_;
  int size_;
  std::string encoding_;
};

/// Child indices from the root.
struct VertexAddress {
  std::vector<int> path;
  friend bool operator==(const VertexAddress&, const VertexAddress&) = default;
};

/// Grammar: arbor := "(" UINT arbor* ")", whitespace separated.
/// Throws std::invalid_argument on syntax errors or multiplicity < 1.
Arbor parse_arbor(std::string_view text);

/// Rebuilds t with children recursively sorted. Every Arbor is already
/// canonical, so this is the identity on values.
Arbor canonicalize(const Arbor& t);

/// All isomorphism classes of arbors of size n, sorted by encoding.
std::vector<Arbor> enumerate_arbors(int n);

/// Multiplicities of a linear arbor from the root down.
std::vector<int> linear_multiplicities(const Arbor& t);
Arbor linear_from_multiplicities(const std::vector<int>& mults);
/// Throws std::invalid_argument on non-linear input.
Arbor reverse_linear(const Arbor& t);

Arbor type_a(int n);
Arbor type_b(int n);
Arbor halo(int n);
Arbor halo_rev(int n);
Arbor hochschild(int n);

/// Addresses of every vertex in preorder (root first, then children in order).
std::vector<VertexAddress> vertex_addresses(const Arbor& t);
/// Throws std::out_of_range on an invalid path.
const Arbor& subtree_at(const Arbor& t, const VertexAddress& v);

}  // namespace arbor
