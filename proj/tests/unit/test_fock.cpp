#include <doctest.h>

#include <random>

#include "../support/oracles.hpp"
#include "wreathfock/catalog.hpp"
#include "wreathfock/errors.hpp"
#include "wreathfock/fock.hpp"

using namespace wreathfock;

namespace {

ClassFunction random_level(const FockAlgebra& f, std::size_t n, std::mt19937& rng) {
  return ClassFunction(f.level(n), oracle::random_values(rng, f.level(n)->num_classes()));
}

}  // namespace

TEST_CASE("product equals the element-sum oracle") {
  std::mt19937 rng(5);
  for (const char* name : {"trivial", "C2", "C3", "S3"}) {
    CAPTURE(name);
    const FockAlgebra f(catalog_group(name), 3);
    for (std::size_t n = 0; n <= 3; ++n)
      for (std::size_t m = 0; n + m <= 3; ++m) {
        const ClassFunction x = random_level(f, n, rng);
        const ClassFunction y = random_level(f, m, rng);
        CHECK(f.product(x, y) == fock_product_by_element_sum(f, x, y));
      }
  }
}

TEST_CASE("product is commutative, associative and unital") {
  std::mt19937 rng(6);
  const FockAlgebra f(catalog_group("S3"), 4);
  for (int trial = 0; trial < 10; ++trial) {
    const ClassFunction x = random_level(f, 1, rng);
    const ClassFunction y = random_level(f, 2, rng);
    const ClassFunction z = random_level(f, 1, rng);
    CHECK(f.product(x, y) == f.product(y, x));
    CHECK(f.product(f.product(x, y), z) == f.product(x, f.product(y, z)));
    CHECK(f.product(f.unit(), y) == y);
  }
}

TEST_CASE("change of basis is diagonal with entries prod m!") {
  for (const char* name : {"trivial", "C2", "C3", "S3"}) {
    const FockAlgebra f(catalog_group(name), 4);
    for (std::size_t n = 0; n <= 4; ++n) {
      const RationalMatrix m = f.change_of_basis(n);
      const auto& table = *f.level(n);
      REQUIRE(m.rows() == table.num_classes());
      REQUIRE(m.cols() == table.num_classes());
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
          Integer expected = 0;
          if (r == c) {
            expected = 1;
            for (const auto& e : table.type(r).entries()) expected *= factorial(e.multiplicity);
          }
          CHECK(m(r, c) == Rational(expected));
        }
      CHECK(determinant(m) != 0);
      if (m.rows() <= 7) CHECK(determinant(m) == oracle::leibniz_determinant(m));
    }
  }
}

TEST_CASE("deltas and monomials") {
  const FockAlgebra f(catalog_group("C2"), 3);
  const ClassFunction d = f.delta(2, 1);
  CHECK(d[f.level(2)->index_of(single_cycle_type(2, 1))] == 1);
  CHECK(inner_product(d, ClassFunction::constant(f.level(2), 1)) == Rational(1, 4));
  const TypeMatrix mu(3, {{1, 0, 1}, {2, 1, 1}});
  CHECK(f.monomial_value(mu) == f.product(f.delta(1, 0), f.delta(2, 1)));
  CHECK(f.monomial_value(identity_type(0)) == f.unit());
  CHECK_THROWS_AS(f.delta(2, 2), InputError);
  CHECK_THROWS_AS(f.delta(4, 0), ResourceError);
  CHECK_THROWS_AS(f.product(f.delta(2, 0), f.delta(2, 0)), ResourceError);
  const FockAlgebra other(catalog_group("C2"), 3);
  CHECK_THROWS_AS(f.product(f.delta(1, 0), other.delta(1, 0)), InputError);
}

TEST_CASE("module structure over Class(S_n)") {
  const FockAlgebra sym(catalog_group("trivial"), 3);
  const FockAlgebra f(catalog_group("S3"), 3);
  const auto& sym_table = *sym.level(3);
  const auto& table = *f.level(3);
  for (std::size_t p = 0; p < sym_table.num_classes(); ++p) {
    const ClassFunction y = module_action_over_sym(sym, indicator(sym.level(3), p), f, ClassFunction::constant(f.level(3), 1));
    for (std::size_t c = 0; c < table.num_classes(); ++c)
      CHECK(y[c] == (table.type(c).partition() == sym_table.type(p).partition() ? 1 : 0));
  }
}

TEST_CASE("Kunneth generator identity") {
  for (const auto& [a, b] : std::vector<std::pair<const char*, const char*>>{{"C2", "C3"}, {"C2", "C2"}, {"S3", "C2"}}) {
    const KunnethSweep sweep = kunneth_sweep(catalog_group(a), catalog_group(b), 3);
    CHECK(sweep.all_equal);
    CHECK(sweep.checks.size() == 3 * catalog_group(a)->num_classes() * catalog_group(b)->num_classes());
  }
  CHECK(kunneth_generator_identity(catalog_group("C3"), catalog_group("C3"), 2, 1, 2));
}

TEST_CASE("graded class counts") {
  const std::vector<Integer> trivial{1, 1, 2, 3, 5, 7, 11};
  const std::vector<Integer> c2{1, 2, 5, 10, 20, 36, 65};
  const std::vector<Integer> s3{1, 3, 9, 22, 51, 108, 221};
  CHECK(graded_dimension_series(*catalog_group("trivial"), 6).by_types == trivial);
  CHECK(graded_dimension_series(*catalog_group("C2"), 6).by_types == c2);
  CHECK(graded_dimension_series(*catalog_group("S3"), 6).by_types == s3);
  for (std::size_t colors = 1; colors <= 4; ++colors) {
    const auto series = colored_partition_series(colors, 8);
    for (std::size_t n = 0; n <= 8; ++n) CHECK(series[n] == oracle::colored_partitions(n, colors));
  }
  const DirectProduct gh = direct_product(catalog_group("C2"), catalog_group("C3"));
  const DimensionSeries s = graded_dimension_series(*gh.group, 6);
  CHECK(s.agree);
  CHECK(s.by_product_formula == colored_partition_series(6, 6));
}
