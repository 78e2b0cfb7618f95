#pragma once

#include <memory>
#include <vector>

#include "wreathfock/group.hpp"
#include "wreathfock/linalg.hpp"
#include "wreathfock/rational.hpp"

namespace wreathfock {

/// A rational-valued function constant on conjugacy classes, stored as one
/// value per class of its space (in the space's class order).
class ClassFunction {
 public:
  ClassFunction(std::shared_ptr<const ClassSpace> space, std::vector<Rational> values);

  static ClassFunction zero(std::shared_ptr<const ClassSpace> space);
  static ClassFunction constant(std::shared_ptr<const ClassSpace> space, const Rational& value);

  const ClassSpace& space() const { return *space_; }
  const std::shared_ptr<const ClassSpace>& space_ptr() const { return space_; }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& operator[](std::size_t c) const { return values_[c]; }
  std::size_t size() const { return values_.size(); }

  /// Value at an element; the space must be an enumerated group.
  const Rational& at_element(Index x) const;
  bool is_zero() const;

  ClassFunction& operator+=(const ClassFunction& other);
  ClassFunction& operator-=(const ClassFunction& other);
  ClassFunction& operator*=(const Rational& scalar);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(const Rational& s, ClassFunction a) { return a *= s; }
  /// Same space object and identical values.
  friend bool operator==(const ClassFunction& a, const ClassFunction& b);

 private:
  void require_same_space(const ClassFunction& other) const;

  std::shared_ptr<const ClassSpace> space_;
  std::vector<Rational> values_;
};

ClassFunction indicator(std::shared_ptr<const ClassSpace> space, std::size_t class_index);
ClassFunction pointwise_mul(const ClassFunction& f, const ClassFunction& g);
/// (1/|G|) sum_x f(x) g(x) computed classwise; values are real so no
/// conjugation is needed.
Rational inner_product(const ClassFunction& f, const ClassFunction& g);

/// (res f)(h) = f(incl(h)); `f` lives on incl.cod, result on incl.dom.
ClassFunction restrict(const ClassFunction& f, const Homomorphism& incl);

enum class InductionStrategy {
  /// (Ind f)(g) = (1/|H|) sum over r in G with r^-1 g r in H of f(r^-1 g r).
  kElementSum,
  /// (Ind f)(g) = |C_G(g)| sum over H-classes [h] fusing into [g] of f(h)/|C_H(h)|.
  kClassFusion,
};

/// Frobenius induction along an injective homomorphism H -> G.
ClassFunction induce(const ClassFunction& f, const Homomorphism& incl,
                     InductionStrategy strategy = InductionStrategy::kClassFusion);

/// (h^* f)(g) = f(h(g)); `f` lives on h.cod.
ClassFunction pullback_along(const ClassFunction& f, const Homomorphism& h);

/// (f x g)(a, b) = f(a) g(b) on the direct product.
ClassFunction external_product(const ClassFunction& f, const ClassFunction& g, const DirectProduct& prod);

/// For each class of incl.dom, the class of incl.cod containing it.
std::vector<std::size_t> class_fusion(const Homomorphism& incl);

/// Rank of a family of class functions on a common space, with the greedy
/// basis selection.
SpanInfo linear_span_and_rank(const std::vector<ClassFunction>& functions);

}  // namespace wreathfock
