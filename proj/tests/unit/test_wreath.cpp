#include <doctest.h>

#include <random>

#include "../support/oracles.hpp"
#include "wreathfock/catalog.hpp"
#include "wreathfock/errors.hpp"
#include "wreathfock/wreath.hpp"

using namespace wreathfock;

namespace {

std::vector<TypeMatrix> element_types(const FiniteGroup& base, const WreathGroup& w, const FiniteGroup& enumerated) {
  std::vector<TypeMatrix> out;
  for (Index x = 0; x < enumerated.size(); ++x) out.push_back(type_of(base, w.decode(enumerated.descriptor(x))));
  return out;
}

}  // namespace

TEST_CASE("the C4 type table example") {
  const GroupPtr c4 = catalog_group("C4");
  // enumeration order puts g^k at index k
  CHECK(c4->element_order(1) == 4);
  CHECK(c4->multiply(1, 1) == 2);
  const WreathElement x{{1, 1, 1, 1, 1}, Permutation::from_cycles(5, {{0, 1}, {2, 3, 4}})};
  const TypeMatrix t = type_of(*c4, x);
  CHECK(t.multiplicity(2, 2) == 1);
  CHECK(t.multiplicity(3, 3) == 1);
  CHECK(t.entries().size() == 2);
  CHECK(t.to_string() == "[[2,2,1],[3,3,1]]");
  CHECK(cycle_product(*c4, x, {0, 1}) == 2);
  CHECK(cycle_product(*c4, x, {2, 3, 4}) == 3);
  CHECK_THROWS_AS(cycle_product(*c4, x, {0, 2}), InputError);
}

TEST_CASE("cycle product order follows the cycle") {
  const GroupPtr s3 = catalog_group("S3");
  const Index a = *s3->find({1, 0, 2});
  const Index b = *s3->find({0, 2, 1});
  // perm(0) = 1, perm(1) = 0: cycle (0 1) gives g_1 g_0
  const WreathElement x{{a, b}, Permutation::from_cycles(2, {{0, 1}})};
  CHECK(cycle_product(*s3, x, {0, 1}) == s3->multiply(b, a));
  CHECK(cycle_product(*s3, x, {1, 0}) == s3->multiply(a, b));
}

TEST_CASE("type matrices") {
  const TypeMatrix t(4, {{1, 0, 1}, {3, 1, 1}, {1, 0, 0}});
  CHECK(t.entries().size() == 2);
  CHECK(t.partition() == std::map<std::size_t, std::size_t>{{1, 1}, {3, 1}});
  CHECK(TypeMatrix(2, {{1, 0, 1}, {1, 0, 1}}).multiplicity(1, 0) == 2);
  CHECK_THROWS_AS(TypeMatrix(3, {{1, 0, 1}}), InputError);
  CHECK(single_cycle_type(3, 1).is_single_cycle());
  CHECK_FALSE(identity_type(3).is_single_cycle());
  CHECK(identity_type(0).to_string() == "[]");
  CHECK(fuse_class(single_cycle_type(2, 1), identity_type(1)) == TypeMatrix(3, {{1, 0, 1}, {2, 1, 1}}));
}

TEST_CASE("wreath multiplication is a group law") {
  for (const auto& [name, n] : std::vector<std::pair<const char*, std::size_t>>{{"C2", 3}, {"S3", 2}, {"C3", 2}, {"trivial", 4}}) {
    const WreathGroup w(catalog_group(name), n);
    const GroupPtr g = w.enumerate();
    CAPTURE(name);
    CHECK(Integer(static_cast<unsigned long>(g->size())) == w.order());
    CHECK(verify_group_axioms(*g));
    if (g->size() <= 72) CHECK(oracle::associative(*g));
  }
  const WreathGroup w(catalog_group("S3"), 3);
  std::mt19937 rng(3);
  const GroupPtr g = w.enumerate();
  for (int trial = 0; trial < 200; ++trial) {
    const WreathElement x = w.decode(g->descriptor(rng() % g->size()));
    const WreathElement y = w.decode(g->descriptor(rng() % g->size()));
    const WreathElement z = w.decode(g->descriptor(rng() % g->size()));
    CHECK(w.multiply(w.multiply(x, y), z) == w.multiply(x, w.multiply(y, z)));
    CHECK(w.multiply(x, w.inverse(x)) == w.identity());
  }
  CHECK(w.label() == "S3wrS3");
}

TEST_CASE("conjugacy is decided by type") {
  for (const auto& [name, n] : std::vector<std::pair<const char*, std::size_t>>{
           {"C2", 2}, {"C2", 3}, {"C3", 2}, {"S3", 2}, {"C4", 2}, {"trivial", 4}, {"C3", 3}}) {
    CAPTURE(name);
    CAPTURE(n);
    const GroupPtr base = catalog_group(name);
    const WreathGroup w(base, n);
    const GroupPtr g = w.enumerate();
    const auto types = element_types(*base, w, *g);
    CHECK(oracle::same_partition(oracle::conjugation_orbits(*g), types));
    CHECK(classes_by_type(*base, n).size() == g->num_classes());
    CHECK(count_types(base->num_classes(), n) == g->num_classes());
  }
}

TEST_CASE("are_conjugate matches brute force on random pairs") {
  const GroupPtr base = catalog_group("S3");
  const WreathGroup w(base, 2);
  const GroupPtr g = w.enumerate();
  const auto orbits = oracle::conjugation_orbits(*g);
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Index x = rng() % g->size(), y = rng() % g->size();
    CHECK(are_conjugate(*base, w.decode(g->descriptor(x)), w.decode(g->descriptor(y))) == (orbits[x] == orbits[y]));
  }
}

TEST_CASE("class representatives have their types") {
  for (const char* name : {"C2", "S3", "Dic3"}) {
    const GroupPtr base = catalog_group(name);
    for (std::size_t n = 0; n <= 3; ++n) {
      const auto classes = classes_by_type(*base, n);
      for (std::size_t i = 0; i < classes.size(); ++i) {
        CHECK(type_of(*base, classes[i].representative) == classes[i].type);
        if (i) CHECK(classes[i - 1].type < classes[i].type);
      }
    }
  }
  CHECK(classes_by_type(*catalog_group("C2"), 3).size() == 10);
  CHECK(classes_by_type(*catalog_group("trivial"), 4).size() == 5);
}

TEST_CASE("centralizer orders match brute force") {
  for (const char* name : {"C2", "C3", "S3"}) {
    const GroupPtr base = catalog_group(name);
    for (std::size_t n = 1; n <= 3; ++n) {
      const WreathGroup w(base, n);
      const GroupPtr g = w.enumerate();
      for (const auto& cls : classes_by_type(*base, n)) {
        const Index x = *g->find(w.encode(cls.representative));
        CAPTURE(cls.type.to_string());
        CHECK(centralizer_order(*base, cls.type) == oracle::centralizer_size(*g, x));
      }
      for (std::size_t c = 0; c < base->num_classes(); ++c) {
        const Integer expected(static_cast<unsigned long>(n * base->centralizer_order(base->classes().reps[c])));
        CHECK(centralizer_order(*base, single_cycle_type(n, c)) == expected);
      }
    }
  }
}

TEST_CASE("class table") {
  const WreathClassTable table(catalog_group("C2"), 3);
  CHECK(table.num_classes() == 10);
  CHECK(table.order() == 48);
  Integer total = 0;
  for (std::size_t c = 0; c < table.num_classes(); ++c) total += table.class_size(c);
  CHECK(total == 48);
  CHECK(table.centralizer(table.index_of(TypeMatrix(3, {{3, 1, 1}}))) == 6);
  CHECK_FALSE(table.find(TypeMatrix(3, {{3, 2, 1}})).has_value());
  CHECK_THROWS_AS(table.index_of(TypeMatrix(2, {{2, 0, 1}})), InputError);
}

TEST_CASE("embedding G_n x G_m into G_{n+m}") {
  const EmbeddedProduct e = embed_product(catalog_group("C2"), 1, 2);
  CHECK(e.product.group->size() == 16);
  CHECK(e.total->size() == 48);
  CHECK(is_injective(e.embedding));
  const WreathGroup w(catalog_group("C2"), 3);
  const GroupPtr base = catalog_group("C2");
  const WreathGroup wl(base, 1), wr(base, 2);
  for (Index x = 0; x < e.product.group->size(); ++x) {
    const auto left = wl.decode(e.left->descriptor(e.product.proj_first(x)));
    const auto right = wr.decode(e.right->descriptor(e.product.proj_second(x)));
    const auto image = w.decode(e.total->descriptor(e.embedding(x)));
    CHECK(image == embed_pair(left, right));
    CHECK(type_of(*base, image) == fuse_class(type_of(*base, left), type_of(*base, right)));
  }
}

TEST_CASE("wreath errors") {
  const WreathGroup w(catalog_group("C2"), 2);
  CHECK_THROWS_AS(w.multiply(w.identity(), WreathElement{{0}, Permutation::identity(1)}), InputError);
  CHECK_THROWS_AS(WreathGroup(catalog_group("S3"), 5).enumerate(1000), ResourceError);
}
