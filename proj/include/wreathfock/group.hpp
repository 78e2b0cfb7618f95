#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "wreathfock/permutation.hpp"
#include "wreathfock/rational.hpp"

namespace wreathfock {

using Index = std::uint32_t;
/// Opaque per-element payload: permutation images, wreath tuples, index pairs.
using Descriptor = std::vector<std::int32_t>;

struct DescriptorHash {
  std::size_t operator()(const Descriptor& d) const noexcept;
};

inline constexpr std::size_t kDefaultMaxOrder = 200000;
inline constexpr std::size_t kCayleyTableMaxOrder = 4096;

/// Element cap used when none is passed explicitly. Reads
/// WREATHFOCK_MAX_ORDER once; falls back to kDefaultMaxOrder.
std::size_t default_max_order();

/// Anything that carries a finite list of conjugacy classes with sizes:
/// enumerated groups and type-indexed wreath class tables.
class ClassSpace {
 public:
  virtual ~ClassSpace() = default;
  virtual std::size_t num_classes() const = 0;
  virtual Integer class_size(std::size_t c) const = 0;
  virtual Integer order() const = 0;
  virtual const std::string& label() const = 0;
};

struct ConjugacyClasses {
  std::vector<Index> class_of;   // element -> class
  std::vector<Index> reps;       // least element index of each class
  std::vector<std::size_t> sizes;
  std::size_t count() const { return reps.size(); }
};

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A finite group given by a full element enumeration. Immutable; element
/// indices are fixed at construction and index 0 is always the identity.
class FiniteGroup final : public ClassSpace {
 public:
  using IndexMul = std::function<Index(const FiniteGroup&, Index, Index)>;

  /// Low-level constructor; prefer the factory functions below.
  /// `descriptors[0]` must be the identity.
  static GroupPtr make(std::string label, std::vector<Descriptor> descriptors, IndexMul mul,
                       std::vector<Index> generators);

  FiniteGroup(const FiniteGroup&) = delete;
  FiniteGroup& operator=(const FiniteGroup&) = delete;

  std::size_t size() const { return descriptors_.size(); }
  Index identity() const { return 0; }
  Index multiply(Index x, Index y) const {
    return table_.empty() ? mul_(*this, x, y) : table_[static_cast<std::size_t>(x) * size() + y];
  }
  Index inverse(Index x) const { return inverse_[x]; }
  Index conjugate(Index s, Index x) const { return multiply(multiply(s, x), inverse(s)); }
  Index power(Index x, std::size_t k) const;
  std::size_t element_order(Index x) const;

  const Descriptor& descriptor(Index x) const { return descriptors_[x]; }
  std::optional<Index> find(const Descriptor& d) const;
  const std::vector<Index>& generators() const { return generators_; }
  bool has_cayley_table() const { return !table_.empty(); }

  const ConjugacyClasses& classes() const { return classes_; }
  Index class_of(Index x) const { return classes_.class_of[x]; }
  std::size_t centralizer_order(Index x) const { return size() / classes_.sizes[classes_.class_of[x]]; }

  // ClassSpace
  std::size_t num_classes() const override { return classes_.count(); }
  Integer class_size(std::size_t c) const override { return Integer(static_cast<unsigned long>(classes_.sizes.at(c))); }
  Integer order() const override { return Integer(static_cast<unsigned long>(size())); }
  const std::string& label() const override { return label_; }

 private:
  FiniteGroup() = default;
  void finish();

  std::string label_;
  std::vector<Descriptor> descriptors_;
  std::unordered_map<Descriptor, Index, DescriptorHash> index_;
  IndexMul mul_;
  std::vector<Index> table_;
  std::vector<Index> inverse_;
  std::vector<Index> generators_;
  ConjugacyClasses classes_;
};

/// Orbit closure of `generators` under `mul`, enumerated breadth-first from
/// `identity` by right multiplication in generator order.
GroupPtr enumerate_closure(std::string label, Descriptor identity, const std::vector<Descriptor>& generators,
                           std::function<Descriptor(const Descriptor&, const Descriptor&)> mul,
                           std::size_t max_order = default_max_order());

GroupPtr group_from_permutation_generators(std::size_t degree, const std::vector<Permutation>& generators,
                                           std::string label = "perm",
                                           std::size_t max_order = default_max_order());

/// Conjugation orbits computed by closing each element under conjugation by
/// the generators; representatives are least indices.
ConjugacyClasses compute_conjugacy_classes(const FiniteGroup& g);

/// {s : s x = x s}, ascending.
std::vector<Index> centralizer(const FiniteGroup& g, Index x);

/// Checks identity, inverses and (xy)s = x(ys) for all x, y and every
/// generator s, which forces associativity on the whole group.
bool verify_group_axioms(const FiniteGroup& g);

/// A total map between enumerated groups, verified multiplicative.
struct Homomorphism {
  GroupPtr dom;
  GroupPtr cod;
  std::vector<Index> image;

  Index operator()(Index x) const { return image[x]; }
};

/// Throws InputError("not a homomorphism") when multiplicativity fails.
/// Exhaustive over all pairs when |dom| <= 5000, otherwise over
/// (element, generator) pairs, which is equivalent.
void verify_homomorphism(const Homomorphism& f);
Homomorphism make_homomorphism(GroupPtr dom, GroupPtr cod, std::vector<Index> image);
Homomorphism identity_homomorphism(const GroupPtr& g);
/// g after f.
Homomorphism compose(const Homomorphism& g, const Homomorphism& f);

Homomorphism hom_from_generator_images(const GroupPtr& dom, const std::vector<Index>& dom_gens, const GroupPtr& cod,
                                       const std::vector<Index>& images);

bool is_surjective(const Homomorphism& f);
bool is_injective(const Homomorphism& f);
std::vector<Index> kernel(const Homomorphism& f);
/// For each codomain element its preimage under an injective map, or -1.
std::vector<std::int64_t> preimage_table(const Homomorphism& f);

struct DirectProduct {
  GroupPtr group;
  Homomorphism proj_first;
  Homomorphism proj_second;
  Homomorphism incl_first;
  Homomorphism incl_second;
  /// Index of (g, h); elements are ordered lexicographically.
  Index pair(Index g, Index h) const;
};

DirectProduct direct_product(const GroupPtr& g, const GroupPtr& h, std::size_t max_order = default_max_order());

struct Subgroup {
  GroupPtr group;
  Homomorphism inclusion;
};

/// Members must contain the identity and be closed under products and
/// inverses, else InputError("not a subgroup"). Elements keep the ambient
/// ascending order and the ambient descriptors.
Subgroup subgroup(const GroupPtr& ambient, std::vector<Index> members, std::string label = {});

/// The image of an injective homomorphism as a subgroup of its codomain.
Subgroup image_subgroup(const Homomorphism& f, std::string label = {});

}  // namespace wreathfock
