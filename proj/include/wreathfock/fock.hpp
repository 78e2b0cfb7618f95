#pragma once

#include <map>
#include <memory>
#include <vector>

#include "wreathfock/class_function.hpp"
#include "wreathfock/wreath.hpp"

namespace wreathfock {

inline constexpr std::size_t kDefaultMaxLevel = 4;

/// The graded algebra sum_n q^n Class(G wr S_n) for a point. Level n is
/// the type-indexed class space of G wr S_n; the product is induction from
/// G_n x G_m to G_{n+m} computed through class fusion.
class FockAlgebra {
 public:
  explicit FockAlgebra(GroupPtr base, std::size_t max_level = kDefaultMaxLevel);

  const GroupPtr& base() const { return base_; }
  std::size_t max_level() const { return levels_.size() - 1; }
  /// Throws ResourceError beyond max_level.
  const std::shared_ptr<const WreathClassTable>& level(std::size_t n) const;
  /// Level of a class function built on this algebra; InputError otherwise.
  std::size_t level_of(const ClassFunction& f) const;

  ClassFunction unit() const;
  ClassFunction product(const ClassFunction& f, const ClassFunction& g) const;
  /// Indicator of the single n-cycle class with cycle product in class c.
  ClassFunction delta(std::size_t n, std::size_t c) const;
  /// Product of Delta_{r,c}^{m(r,c)} over the entries of `mu`.
  ClassFunction monomial_value(const TypeMatrix& mu) const;
  /// Row i: the monomial indexed by the i-th type of level n, expanded in
  /// the indicator basis (columns in the same type order).
  RationalMatrix change_of_basis(std::size_t n) const;

 private:
  GroupPtr base_;
  std::vector<std::shared_ptr<const WreathClassTable>> levels_;
};

/// Same product computed by the literal element sum on enumerated
/// G_n x G_m inside G_{n+m}. Used as the oracle for `product`.
ClassFunction fock_product_by_element_sum(const FockAlgebra& algebra, const ClassFunction& f, const ClassFunction& g,
                                          std::size_t max_order = default_max_order());

/// Class(S_n)-module structure: pull f back along G_n -> S_n (types map to
/// their cycle partitions) and multiply pointwise. `sym` has trivial base.
ClassFunction module_action_over_sym(const FockAlgebra& sym, const ClassFunction& f, const FockAlgebra& algebra,
                                     const ClassFunction& x);

/// Delta_{G,n,c} x Delta_{H,n,d} restricted to (G x H) wr S_n through
/// ((a, b); s) -> ((a; s), (b; s)), as a function on level n of `product_algebra`.
ClassFunction restricted_external_delta(const FockAlgebra& g_algebra, const FockAlgebra& h_algebra,
                                        const FockAlgebra& product_algebra, const DirectProduct& gh, std::size_t n,
                                        std::size_t c, std::size_t d);

/// restricted_external_delta(...) == Delta_{G x H, n, c x d}.
bool kunneth_generator_identity(const GroupPtr& g, const GroupPtr& h, std::size_t n, std::size_t c, std::size_t d);

struct KunnethSweep {
  struct Check {
    std::size_t n, c, d;
    bool equal;
  };
  std::vector<Check> checks;
  bool all_equal = true;
};
KunnethSweep kunneth_sweep(const GroupPtr& g, const GroupPtr& h, std::size_t max_level);

struct DimensionSeries {
  std::vector<Integer> by_types;           // |(G_n)_*| by enumerating types
  std::vector<Integer> by_product_formula; // coefficients of prod_r (1 - q^r)^{-colors}
  bool agree = false;
};

/// Coefficients through q^N of prod_{r>=1} (1 - q^r)^{-colors}, via the
/// divisor-sum recurrence n a_n = colors * sum_j sigma(j) a_{n-j}.
std::vector<Integer> colored_partition_series(std::size_t colors, std::size_t max_n);
DimensionSeries graded_dimension_series(const FiniteGroup& g, std::size_t max_n);

/// Finitely supported family of level class functions.
struct FockElement {
  GroupPtr base;
  std::map<std::size_t, ClassFunction> levels;
};

}  // namespace wreathfock
