// Runs every acceptance criterion at its stated budget and prints one
// PASS/FAIL line per criterion. Exit status is nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "../support/oracles.hpp"
#include "wreathfock/catalog.hpp"
#include "wreathfock/fock.hpp"
#include "wreathfock/pullback.hpp"
#include "wreathfock/reports.hpp"

using namespace wreathfock;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream notes;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes << " [failed: " << what << "]";
    }
  }
};

using Criterion = std::function<void(Outcome&)>;

bool run(int id, const char* title, double budget_seconds, const Criterion& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.ok = false;
    out.notes << " [exception: " << e.what() << "]";
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.expect(seconds < budget_seconds, "over time budget");
  std::printf("%s criterion %d: %s (%.3fs of %.0fs)%s\n", out.ok ? "PASS" : "FAIL", id, title, seconds,
              budget_seconds, out.notes.str().c_str());
  return out.ok;
}

void c1_s3s3(Outcome& o) {
  const PullbackGroup pb = s3_sign_pullback();
  o.expect(pb.group()->num_classes() == 6, "|Gamma_*| = 6");
  o.expect(pb.product.group->num_classes() == 9, "|(S3 x S3)_*| = 9");
  const ClosednessReport closed = is_conjugacy_closed(pb.carrier.inclusion);
  o.expect(!closed.closed, "not conjugacy closed");
  bool three_cycles = closed.witness.has_value();
  if (closed.witness)
    for (Index x : {closed.witness->first, closed.witness->second})
      three_cycles = three_cycles && pb.g()->element_order(pb.proj_g(x)) == 3 &&
                     pb.h()->element_order(pb.proj_h(x)) == 3;
  o.expect(three_cycles, "witness components are 3-cycles");
  const CharacterRestriction cr = character_restriction_pattern(pb.carrier.inclusion);
  o.expect(cr.two_to_one_fusions == 4, "four 2->1 fusions");
  o.expect(cr.one_to_two_splittings == 1, "one 1->2 splitting");
  o.expect(cr.image_rank == 5, "image rank 5");
  const RestrictionSummary rs = summarize_restriction(restriction_map_matrix(pb.carrier.inclusion));
  o.expect(rs.rank == 5 && !rs.surjective, "restriction not surjective");
  const DecompositionReport r = verify_class_ring_decomposition(pb);
  o.expect(!r.is_isomorphism && r.map_rank == 5, "decomposition fails with rank 5");
}

void c2_d12(Outcome& o) {
  const PullbackGroup pb = d12_dic3_pullback();  // throws if a generator map is not a homomorphism
  verify_homomorphism(pb.alpha);
  verify_homomorphism(pb.beta);
  o.expect(pb.group()->size() == 24, "|Gamma| = 24");
  o.expect(is_conjugacy_closed(pb.carrier.inclusion).closed, "conjugacy closed");
  const DecompositionReport r = verify_class_ring_decomposition(pb);
  o.expect(r.conj_closed && r.is_isomorphism, "is_isomorphism");
}

void c3_type_table(Outcome& o) {
  const GroupPtr c4 = catalog_group("C4");
  const WreathElement x{{1, 1, 1, 1, 1}, Permutation::from_cycles(5, {{0, 1}, {2, 3, 4}})};
  const TypeMatrix t = type_of(*c4, x);
  o.expect(c4->power(1, 2) == 2 && c4->power(1, 3) == 3, "class c of C4 is g^c");
  o.expect(t == TypeMatrix(5, {{2, 2, 1}, {3, 3, 1}}), "m(2,[g^2]) = 1, m(3,[g^3]) = 1, zero elsewhere");
}

void c4_conjugacy_by_type(Outcome& o) {
  const std::vector<std::pair<const char*, std::size_t>> cases{
      {"C2", 3}, {"C3", 2}, {"S3", 2}, {"C2", 2}, {"C4", 2}, {"C3", 3}, {"C2", 4}, {"trivial", 5},
      {"D8", 2}, {"S3", 3}, {"C2", 5}};
  for (const auto& [name, n] : cases) {
    const GroupPtr base = catalog_group(name);
    const WreathGroup w(base, n);
    const GroupPtr g = w.enumerate();
    if (g->size() > 5000) continue;
    std::vector<TypeMatrix> types;
    for (Index x = 0; x < g->size(); ++x) types.push_back(type_of(*base, w.decode(g->descriptor(x))));
    const std::string label = std::string(name) + " wr S" + std::to_string(n);
    o.expect(oracle::same_partition(oracle::conjugation_orbits(*g), types), label + " orbits = types");
    o.expect(classes_by_type(*base, n).size() == g->num_classes(), label + " class count");
  }
}

void c5_centralizers(Outcome& o) {
  for (const char* name : {"C2", "C3", "S3"}) {
    const GroupPtr base = catalog_group(name);
    for (std::size_t n = 1; n <= 3; ++n) {
      const WreathGroup w(base, n);
      const GroupPtr g = w.enumerate();
      for (std::size_t c = 0; c < base->num_classes(); ++c) {
        const WreathClassTable table(base, n);
        const WreathElement rep = table.classes()[table.index_of(single_cycle_type(n, c))].representative;
        const std::size_t brute = oracle::centralizer_size(*g, *g->find(w.encode(rep)));
        o.expect(brute == n * base->centralizer_order(base->classes().reps[c]), "n |C_G(g)|");
      }
      for (const auto& cls : classes_by_type(*base, n))
        o.expect(centralizer_order(*base, cls.type) ==
                     oracle::centralizer_size(*g, *g->find(w.encode(cls.representative))),
                 "product formula");
    }
  }
}

void c6_reciprocity(Outcome& o) {
  const GroupPtr s3 = catalog_group("S3"), s4 = catalog_group("S4"), c2 = catalog_group("C2");
  auto sub = [](const GroupPtr& g, const std::vector<std::vector<std::int32_t>>& perms) {
    std::vector<Index> gens;
    for (const auto& p : perms) gens.push_back(*g->find(Descriptor(p.begin(), p.end())));
    return subgroup(g, oracle::generated(*g, gens)).inclusion;
  };
  const std::vector<std::pair<std::string, Homomorphism>> pairs{
      {"C3 in S3", sub(s3, {{1, 2, 0}})},
      {"S2 in S3", sub(s3, {{1, 0, 2}})},
      {"D8 in S4", sub(s4, {{1, 2, 3, 0}, {0, 3, 2, 1}})},
      {"C2_1 x C2_2 in C2_3", embed_product(c2, 1, 2).embedding},
      {"S3_1 x S3_1 in S3_2", embed_product(s3, 1, 1).embedding},
      {"C2_2 x C2_2 in C2_4", embed_product(c2, 2, 2).embedding},
      {"Gamma in S3 x S3", s3_sign_pullback().carrier.inclusion},
  };
  for (const auto& [label, incl] : pairs)
    for (std::size_t i = 0; i < incl.dom->num_classes(); ++i) {
      const ClassFunction f = indicator(incl.dom, i);
      const ClassFunction up = induce(f, incl);
      for (std::size_t j = 0; j < incl.cod->num_classes(); ++j) {
        const ClassFunction g = indicator(incl.cod, j);
        o.expect(inner_product(up, g) == inner_product(f, restrict(g, incl)), label);
      }
    }
}

void c7_symmetric(Outcome& o) {
  for (const char* name : {"trivial", "C2", "C3", "S3"}) {
    const FockAlgebra f(catalog_group(name), 4);
    for (std::size_t n = 0; n <= 4; ++n) {
      const RationalMatrix m = f.change_of_basis(n);
      const std::string label = std::string(name) + " level " + std::to_string(n);
      o.expect(m.rows() == m.cols() && m.rows() == f.level(n)->num_classes(), label + " square");
      o.expect(determinant(m) != 0, label + " invertible");
    }
    for (std::size_t n = 1; n <= 3; ++n)
      for (std::size_t m = 1; n + m <= 3; ++m)
        for (std::size_t i = 0; i < f.level(n)->num_classes(); ++i)
          for (std::size_t j = 0; j < f.level(m)->num_classes(); ++j) {
            const ClassFunction x = indicator(f.level(n), i), y = indicator(f.level(m), j);
            o.expect(f.product(x, y) == fock_product_by_element_sum(f, x, y), std::string(name) + " product oracle");
          }
  }
}

void c8_kunneth(Outcome& o) {
  for (const auto& [a, b] : std::vector<std::pair<const char*, const char*>>{{"C2", "C3"}, {"C2", "C2"}}) {
    const GroupPtr g = catalog_group(a), h = catalog_group(b);
    const KunnethSweep sweep = kunneth_sweep(g, h, 3);
    o.expect(sweep.all_equal && sweep.checks.size() == 3 * g->num_classes() * h->num_classes(),
             std::string(a) + " x " + b + " generator identity");
    const DirectProduct gh = direct_product(g, h);
    const DimensionSeries s = graded_dimension_series(*gh.group, 6);
    o.expect(s.agree && s.by_product_formula == colored_partition_series(g->num_classes() * h->num_classes(), 6),
             std::string(a) + " x " + b + " class-count series");
  }
}

void c9_semidirect(Outcome& o) {
  for (const auto& [a, b, n] : std::vector<std::tuple<const char*, const char*, std::size_t>>{
           {"C2", "C2", 2}, {"C2", "C3", 2}, {"C2", "C2", 3}}) {
    const std::string label = std::string(a) + " x " + b + " n=" + std::to_string(n);
    const WreathProductIso iso = semidirect_product_iso(catalog_group(a), catalog_group(b), n);
    verify_homomorphism(iso.phi);
    o.expect(iso.bijective && is_injective(iso.phi) && is_surjective(iso.phi), label + " bijective");
    const NCycleClosure nc = n_cycle_classes_closed(catalog_group(a), catalog_group(b), n);
    bool brute = true;
    for (const auto& e : nc.n_cycle_classes) brute = brute && e.brute_force.value_or(false);
    o.expect(nc.all_closed && brute && nc.brute_force_agrees, label + " n-cycle classes closed");
  }
}

void c10_series(Outcome& o) {
  const std::vector<Integer> trivial{1, 1, 2, 3, 5, 7, 11};
  const std::vector<Integer> c2{1, 2, 5, 10, 20, 36, 65};
  for (const char* name : {"trivial", "C2", "S3"}) {
    const DimensionSeries s = graded_dimension_series(*catalog_group(name), 6);
    o.expect(s.agree, std::string(name) + " methods agree");
    if (name == std::string("trivial")) o.expect(s.by_types == trivial, "trivial sequence");
    if (name == std::string("C2")) o.expect(s.by_types == c2, "C2 sequence");
  }
}

}  // namespace

int main() {
  bool all = true;
  all &= run(1, "S3 x_C2 S3 golden test", 5, c1_s3s3);
  all &= run(2, "D12 x_S3 Dic3 golden test", 30, c2_d12);
  all &= run(3, "C4 type table", 1, c3_type_table);
  all &= run(4, "conjugacy by type", 60, c4_conjugacy_by_type);
  all &= run(5, "centralizer orders", 60, c5_centralizers);
  all &= run(6, "Frobenius reciprocity", 60, c6_reciprocity);
  all &= run(7, "Delta monomials form a basis", 300, c7_symmetric);
  all &= run(8, "Kunneth generator identity", 120, c8_kunneth);
  all &= run(9, "semidirect/wreath isomorphism", 60, c9_semidirect);
  all &= run(10, "class-count series", 5, c10_series);
  std::printf("%s\n", all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return all ? 0 : 1;
}
