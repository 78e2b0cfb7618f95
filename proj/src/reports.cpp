#include "wreathfock/reports.hpp"

#include <algorithm>
#include <sstream>

#include "wreathfock/catalog.hpp"
#include "wreathfock/characters.hpp"
#include "wreathfock/errors.hpp"

namespace wreathfock {

namespace {

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Json generator_strings(const FiniteGroup& g) {
  Json out = Json::array();
  for (Index s : g.generators()) out.push_back(element_string(g, s));
  return out;
}

Json pair_json(const PullbackGroup& pb, Index x) {
  return Json{{"G", element_string(*pb.g(), pb.proj_g(x))}, {"H", element_string(*pb.h(), pb.proj_h(x))}};
}

Json witness_json(const PullbackGroup& pb, const std::optional<std::pair<Index, Index>>& w) {
  if (!w) return nullptr;
  return Json::array({pair_json(pb, w->first), pair_json(pb, w->second)});
}

Json restriction_json(const RestrictionSummary& s) {
  return Json{{"rank", s.rank},
              {"surjective", s.surjective},
              {"vanishing", s.vanishing},
              {"one_to_one", s.one_to_one},
              {"splitting", s.splitting}};
}

std::string sum_string(const std::vector<Rational>& coeffs, const char* symbol) {
  std::string out;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] == 0) continue;
    if (!out.empty()) out += " + ";
    if (coeffs[j] != 1) out += coeffs[j].get_str() + "*";
    out += std::string(symbol) + "_" + std::to_string(j + 1);
  }
  return out.empty() ? "0" : out;
}

Json character_json(const CharacterRestriction& cr) {
  Json images = Json::array();
  for (std::size_t i = 0; i < cr.decompositions.size(); ++i)
    images.push_back("chi_" + std::to_string(i + 1) + " -> " + sum_string(cr.decompositions[i], "gamma"));
  return Json{{"ambient_irreducibles", cr.ambient_characters.size()},
              {"sub_irreducibles", cr.sub_characters.size()},
              {"image_rank", cr.image_rank},
              {"two_to_one_fusions", cr.two_to_one_fusions},
              {"one_to_two_splittings", cr.one_to_two_splittings},
              {"images", images}};
}

Json check(const std::string& name, const Json& expected, const Json& observed) {
  return Json{{"check", name}, {"expected", expected}, {"observed", observed}, {"pass", expected == observed}};
}

}  // namespace

Json group_info_report(const FiniteGroup& g) {
  return Json{{"group", g.label()},
              {"order", g.size()},
              {"num_classes", g.num_classes()},
              {"generators", generator_strings(g)}};
}

Json group_classes_report(const FiniteGroup& g) {
  Json classes = Json::array();
  const auto& cc = g.classes();
  for (std::size_t c = 0; c < cc.count(); ++c)
    classes.push_back(Json{{"class", c},
                           {"representative", element_string(g, cc.reps[c])},
                           {"element_order", g.element_order(cc.reps[c])},
                           {"size", cc.sizes[c]},
                           {"centralizer_order", g.centralizer_order(cc.reps[c])}});
  return Json{{"group", g.label()}, {"order", g.size()}, {"num_classes", cc.count()}, {"classes", classes}};
}

Json wreath_classes_report(const GroupPtr& base, std::size_t n) {
  const WreathClassTable table(base, n);
  Json classes = Json::array();
  for (std::size_t c = 0; c < table.num_classes(); ++c)
    classes.push_back(Json{{"class", c},
                           {"type", to_json(table.type(c))["entries"]},
                           {"size", integer_json(table.class_size(c))},
                           {"centralizer_order", integer_json(table.centralizer(c))}});
  return Json{{"group", table.label()},
              {"order", integer_json(table.order())},
              {"num_classes", table.num_classes()},
              {"classes", classes}};
}

Json wreath_centralizer_report(const GroupPtr& base, std::size_t n, const TypeMatrix& t) {
  if (t.n() != n) throw InputError("type has size " + std::to_string(t.n()) + ", expected " + std::to_string(n));
  const WreathClassTable table(base, n);
  const std::size_t c = table.index_of(t);
  return Json{{"group", table.label()},
              {"type", to_json(t)["entries"]},
              {"class", c},
              {"centralizer_order", integer_json(table.centralizer(c))}};
}

Json pullback_build_report(const PullbackGroup& pb) {
  return Json{{"G", pb.g()->label()},
              {"H", pb.h()->label()},
              {"K", pb.k()->label()},
              {"order", pb.group()->size()},
              {"num_classes", pb.group()->num_classes()},
              {"ambient_order", pb.product.group->size()},
              {"ambient_classes", pb.product.group->num_classes()}};
}

Report closedness_report(const PullbackGroup& pb) {
  const ClosednessReport closed = is_conjugacy_closed(pb.carrier.inclusion);
  Json j = pullback_build_report(pb);
  j["conj_closed"] = closed.closed;
  j["witness"] = witness_json(pb, closed.witness);
  j["restriction"] = restriction_json(summarize_restriction(restriction_map_matrix(pb.carrier.inclusion)));
  try {
    j["characters"] = character_json(character_restriction_pattern(pb.carrier.inclusion));
  } catch (const InputError&) {
    j["characters"] = nullptr;  // some character is irrational
  }
  return {j, closed.closed};
}

Report decomposition_json(const PullbackGroup& pb) {
  const DecompositionReport r = verify_class_ring_decomposition(pb);
  Json j{{"G", pb.g()->label()},
         {"H", pb.h()->label()},
         {"K", pb.k()->label()},
         {"gamma_order", pb.group()->size()},
         {"conj_closed", r.conj_closed},
         {"gamma_classes", r.gamma_classes},
         {"ambient_classes", pb.product.group->num_classes()},
         {"quotient_dim", r.quotient_dim},
         {"map_rank", r.map_rank},
         {"relations_in_kernel", r.relations_in_kernel},
         {"is_isomorphism", r.is_isomorphism},
         {"witness", witness_json(pb, r.witness)}};
  return {j, r.is_isomorphism};
}

Report fock_basis_report(const FockAlgebra& algebra, std::size_t n) {
  const auto& table = *algebra.level(n);
  const RationalMatrix m = algebra.change_of_basis(n);
  const Rational det = determinant(m);
  Json types = Json::array(), rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    types.push_back(to_json(table.type(r))["entries"]);
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_fraction_string(m(r, c)));
    rows.push_back(row);
  }
  const bool square = m.rows() == m.cols() && m.rows() == table.num_classes();
  const bool invertible = square && det != 0;
  Json j{{"group", table.label()},
         {"level", n},
         {"dimension", table.num_classes()},
         {"square", square},
         {"invertible", invertible},
         {"determinant", to_fraction_string(det)},
         {"types", types},
         {"matrix", rows}};
  return {j, invertible};
}

FockElement fock_product(const FockAlgebra& algebra, const FockElement& x, const FockElement& y) {
  if (x.base != algebra.base() || y.base != algebra.base()) throw InputError("base mismatch in Fock product");
  FockElement out{algebra.base(), {}};
  for (const auto& [n, f] : x.levels)
    for (const auto& [m, g] : y.levels) {
      ClassFunction p = algebra.product(f, g);
      auto it = out.levels.find(n + m);
      if (it == out.levels.end()) out.levels.emplace(n + m, std::move(p));
      else it->second += p;
    }
  return out;
}

Report kunneth_report(const GroupPtr& g, const GroupPtr& h, std::size_t max_level) {
  const KunnethSweep sweep = kunneth_sweep(g, h, max_level);
  Json checks = Json::array();
  for (const auto& c : sweep.checks)
    checks.push_back(Json{{"n", c.n}, {"c", c.c}, {"d", c.d}, {"equal", c.equal}});
  Json j{{"G", g->label()},
         {"H", h->label()},
         {"max_level", max_level},
         {"pairs", sweep.checks.size()},
         {"all_equal", sweep.all_equal},
         {"checks", checks}};
  return {j, sweep.all_equal};
}

Report series_report(const FiniteGroup& g, std::size_t max_n) {
  const DimensionSeries s = graded_dimension_series(g, max_n);
  Json by_types = Json::array(), by_formula = Json::array();
  for (const auto& v : s.by_types) by_types.push_back(integer_json(v));
  for (const auto& v : s.by_product_formula) by_formula.push_back(integer_json(v));
  Json j{{"group", g.label()},
         {"colors", g.num_classes()},
         {"max", max_n},
         {"by_types", by_types},
         {"by_product_formula", by_formula},
         {"agree", s.agree}};
  return {j, s.agree};
}

PullbackGroup s3_sign_pullback() {
  const GroupPtr s3 = catalog_group("S3");
  const GroupPtr c2 = catalog_group("C2");
  // generators of S3 are the 3-cycle then (0 1); of C2 the single generator
  const Homomorphism sgn = hom_from_generator_images(s3, s3->generators(), c2, {c2->identity(), c2->generators()[0]});
  return build_pullback(sgn, sgn);
}

PullbackGroup d12_dic3_pullback() {
  const GroupPtr s3 = catalog_group("S3");
  const GroupPtr d12 = presented_d12();
  const GroupPtr dic3 = catalog_group("Dic3");
  const Index t = *s3->find({0, 2, 1});
  const Index r = *s3->find({1, 2, 0});
  const Homomorphism psi1 = hom_from_generator_images(d12, d12->generators(), s3, {t, s3->identity(), r});
  const Homomorphism psi2 = hom_from_generator_images(dic3, dic3->generators(), s3, {t, s3->identity(), r});
  return build_pullback(psi1, psi2);
}

Report golden_examples_report() {
  Json checks = Json::array();

  const PullbackGroup s3s3 = s3_sign_pullback();
  const DecompositionReport r1 = verify_class_ring_decomposition(s3s3);
  const CharacterRestriction cr = character_restriction_pattern(s3s3.carrier.inclusion);
  const RestrictionSummary rs = summarize_restriction(restriction_map_matrix(s3s3.carrier.inclusion));
  checks.push_back(check("S3xC2S3 gamma classes", 6, r1.gamma_classes));
  checks.push_back(check("S3xC2S3 ambient classes", 9, s3s3.product.group->num_classes()));
  checks.push_back(check("S3xC2S3 conjugacy closed", false, r1.conj_closed));
  bool three_cycles = false;
  if (r1.witness) {
    three_cycles = true;
    for (Index x : {r1.witness->first, r1.witness->second})
      three_cycles = three_cycles && s3s3.g()->element_order(s3s3.proj_g(x)) == 3 &&
                     s3s3.h()->element_order(s3s3.proj_h(x)) == 3;
  }
  checks.push_back(check("S3xC2S3 witness components are 3-cycles", true, three_cycles));
  checks.push_back(check("S3xC2S3 two-to-one fusions", 4, cr.two_to_one_fusions));
  checks.push_back(check("S3xC2S3 one-to-two splittings", 1, cr.one_to_two_splittings));
  checks.push_back(check("S3xC2S3 restriction image rank", 5, cr.image_rank));
  checks.push_back(check("S3xC2S3 restriction surjective", false, rs.surjective));
  checks.push_back(check("S3xC2S3 is isomorphism", false, r1.is_isomorphism));

  const PullbackGroup d12 = d12_dic3_pullback();
  const DecompositionReport r2 = verify_class_ring_decomposition(d12);
  checks.push_back(check("D12xS3Dic3 generator orders of D12", Json::array({2, 2, 3}),
                         Json::array({d12.g()->element_order(d12.g()->generators()[0]),
                                      d12.g()->element_order(d12.g()->generators()[1]),
                                      d12.g()->element_order(d12.g()->generators()[2])})));
  checks.push_back(check("D12xS3Dic3 generator orders of Dic3", Json::array({4, 2, 3}),
                         Json::array({d12.h()->element_order(d12.h()->generators()[0]),
                                      d12.h()->element_order(d12.h()->generators()[1]),
                                      d12.h()->element_order(d12.h()->generators()[2])})));
  checks.push_back(check("D12xS3Dic3 gamma order", 24, d12.group()->size()));
  checks.push_back(check("D12xS3Dic3 conjugacy closed", true, r2.conj_closed));
  checks.push_back(check("D12xS3Dic3 is isomorphism", true, r2.is_isomorphism));

  const GroupPtr c4 = catalog_group("C4");
  const WreathElement x{{1, 1, 1, 1, 1}, Permutation::from_cycles(5, {{0, 1}, {2, 3, 4}})};
  const TypeMatrix t = type_of(*c4, x);
  checks.push_back(check("C4 type of ((g,g,g,g,g),(1 2)(3 4 5))", "[[2,2,1],[3,3,1]]", t.to_string()));
  Json table = Json::array();
  for (std::size_t r = 1; r <= 5; ++r) {
    Json row{{"r", r}};
    // C4 is enumerated as g^0, g^1, ... so class c is {g^c}
    for (std::size_t c = 0; c < c4->num_classes(); ++c) row["g^" + std::to_string(c)] = t.multiplicity(r, c);
    table.push_back(row);
  }

  bool all = true;
  for (const auto& c : checks) all = all && c["pass"].get<bool>();
  Json j{{"checks", checks},
         {"c4_type_table", table},
         {"s3s3_character_restriction", character_json(cr)},
         {"all_pass", all}};
  return {j, all};
}

namespace {

std::string scalar_string(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

bool is_scalar(const Json& v) { return !v.is_object() && !v.is_array(); }

void render(const Json& j, std::ostringstream& out, const std::string& indent);

void render_rows(const Json& rows, std::ostringstream& out, const std::string& indent) {
  std::vector<std::string> keys;
  for (const auto& row : rows)
    for (const auto& [k, v] : row.items())
      if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
  std::vector<std::vector<std::string>> cells;
  cells.push_back(keys);
  for (const auto& row : rows) {
    std::vector<std::string> line;
    for (const auto& k : keys) line.push_back(row.contains(k) ? scalar_string(row.at(k)) : "");
    cells.push_back(line);
  }
  std::vector<std::size_t> width(keys.size());
  for (const auto& line : cells)
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  for (const auto& line : cells) {
    out << indent;
    for (std::size_t i = 0; i < line.size(); ++i) {
      out << line[i];
      if (i + 1 < line.size()) out << std::string(width[i] - line[i].size() + 2, ' ');
    }
    out << '\n';
  }
}

void render(const Json& j, std::ostringstream& out, const std::string& indent) {
  for (const auto& [key, v] : j.items()) {
    if (is_scalar(v)) {
      out << indent << key << ": " << scalar_string(v) << '\n';
    } else if (v.is_array() && std::all_of(v.begin(), v.end(), is_scalar)) {
      out << indent << key << ": ";
      for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar_string(v[i]);
      out << '\n';
    } else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_object(); })) {
      out << indent << key << ":\n";
      render_rows(v, out, indent + "  ");
    } else if (v.is_array()) {
      out << indent << key << ":\n";
      for (const auto& e : v) out << indent << "  " << e.dump() << '\n';
    } else {
      out << indent << key << ":\n";
      render(v, out, indent + "  ");
    }
  }
}

}  // namespace

std::string render_table(const Json& j) {
  std::ostringstream out;
  if (j.is_object()) render(j, out, "");
  else out << j.dump(2) << '\n';
  return out.str();
}

}  // namespace wreathfock
