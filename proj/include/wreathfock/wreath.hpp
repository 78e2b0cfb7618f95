#pragma once

#include <compare>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "wreathfock/group.hpp"
#include "wreathfock/permutation.hpp"
#include "wreathfock/rational.hpp"

namespace wreathfock {

/// (g_1..g_n; sigma) in G^n x| S_n. Parts are element indices of the base.
struct WreathElement {
  std::vector<Index> parts;
  Permutation perm;

  std::size_t degree() const { return parts.size(); }
  friend auto operator<=>(const WreathElement&, const WreathElement&) = default;
};

struct TypeEntry {
  std::size_t cycle_length;
  std::size_t class_index;
  std::size_t multiplicity;
  friend auto operator<=>(const TypeEntry&, const TypeEntry&) = default;
};

/// The conjugacy invariant m(r, c): how many r-cycles have cycle product in
/// class c. Only nonzero entries are stored, sorted by (r, c).
class TypeMatrix {
 public:
  TypeMatrix() = default;
  /// Merges duplicate (r, c) keys, drops zero multiplicities and checks
  /// sum r * m = n. Throws InputError.
  TypeMatrix(std::size_t n, std::vector<TypeEntry> entries);

  std::size_t n() const { return n_; }
  const std::vector<TypeEntry>& entries() const { return entries_; }
  std::size_t multiplicity(std::size_t r, std::size_t c) const;
  /// Cycle type of the permutation part: m(r) = sum_c m(r, c).
  std::map<std::size_t, std::size_t> partition() const;
  /// True when the type is one n-cycle (n >= 1).
  bool is_single_cycle() const { return entries_.size() == 1 && entries_[0].cycle_length == n_; }
  std::string to_string() const;

  friend auto operator<=>(const TypeMatrix&, const TypeMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<TypeEntry> entries_;
};

TypeMatrix identity_type(std::size_t n, std::size_t identity_class = 0);
TypeMatrix single_cycle_type(std::size_t n, std::size_t class_index);

/// G wr S_n with (a, s)(b, t) = (a * (s . b), s t), (s . b)_i = b_{s^-1(i)}.
class WreathGroup {
 public:
  WreathGroup(GroupPtr base, std::size_t n);

  const GroupPtr& base() const { return base_; }
  std::size_t n() const { return n_; }
  Integer order() const;
  std::string label() const;

  WreathElement identity() const;
  WreathElement multiply(const WreathElement& x, const WreathElement& y) const;
  WreathElement inverse(const WreathElement& x) const;
  /// Deterministic generating set: base generators in slot 0, then the
  /// transposition (0 1) and the n-cycle.
  std::vector<WreathElement> generators() const;

  Descriptor encode(const WreathElement& x) const;
  WreathElement decode(const Descriptor& d) const;

  /// Full enumeration as a FiniteGroup whose descriptors are `encode`d.
  /// Throws ResourceError when the order exceeds `max_order`.
  GroupPtr enumerate(std::size_t max_order = default_max_order()) const;

 private:
  void check(const WreathElement& x) const;

  GroupPtr base_;
  std::size_t n_;
};

/// Product g_{i_r} ... g_{i_1} along the cycle (i_1 .. i_r), where
/// perm(i_k) = i_{k+1}. Throws InputError if it is not a cycle of x.perm.
Index cycle_product(const FiniteGroup& base, const WreathElement& x, const std::vector<std::int32_t>& cycle);

TypeMatrix type_of(const FiniteGroup& base, const WreathElement& x);
bool are_conjugate(const FiniteGroup& base, const WreathElement& x, const WreathElement& y);

struct WreathClass {
  TypeMatrix type;
  WreathElement representative;
};

/// Every type of G wr S_n, sorted, each with the canonical representative:
/// blocks in (r, c) order on consecutive letters, the class representative
/// of c in the first slot of each block.
std::vector<WreathClass> classes_by_type(const FiniteGroup& base, std::size_t n);

/// Number of types of size n without building them (colored partition count).
Integer count_types(std::size_t num_base_classes, std::size_t n);

/// prod over (r, c) of (r |C_G(g_c)|)^m m!.
Integer centralizer_order(const FiniteGroup& base, const TypeMatrix& t);

/// ((a, s), (b, t)) -> (a ++ b, s on the first n letters, t on the last m).
WreathElement embed_pair(const WreathElement& x, const WreathElement& y);
/// Entrywise sum: the G_{n+m}-type of any embedded pair with these types.
TypeMatrix fuse_class(const TypeMatrix& left, const TypeMatrix& right);

/// Enumerated G_n x G_m with its verified embedding into enumerated G_{n+m}.
struct EmbeddedProduct {
  GroupPtr left;
  GroupPtr right;
  DirectProduct product;
  GroupPtr total;
  Homomorphism embedding;
};
EmbeddedProduct embed_product(const GroupPtr& base, std::size_t n, std::size_t m,
                              std::size_t max_order = default_max_order());

/// Type-indexed class list of G wr S_n; the class space of Fock level n.
class WreathClassTable final : public ClassSpace {
 public:
  WreathClassTable(GroupPtr base, std::size_t n);

  const GroupPtr& base() const { return base_; }
  std::size_t n() const { return n_; }
  const std::vector<WreathClass>& classes() const { return classes_; }
  const TypeMatrix& type(std::size_t c) const { return classes_[c].type; }
  const Integer& centralizer(std::size_t c) const { return centralizers_[c]; }
  /// Class index of a type, or throws InputError.
  std::size_t index_of(const TypeMatrix& t) const;
  std::optional<std::size_t> find(const TypeMatrix& t) const;

  std::size_t num_classes() const override { return classes_.size(); }
  Integer class_size(std::size_t c) const override { return order_ / centralizers_[c]; }
  Integer order() const override { return order_; }
  const std::string& label() const override { return label_; }

 private:
  GroupPtr base_;
  std::size_t n_;
  std::string label_;
  Integer order_;
  std::vector<WreathClass> classes_;
  std::vector<Integer> centralizers_;
  std::map<TypeMatrix, std::size_t> index_;
};

}  // namespace wreathfock
