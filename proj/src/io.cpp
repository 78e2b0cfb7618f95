#include "wreathfock/io.hpp"

#include <fstream>

#include "wreathfock/catalog.hpp"
#include "wreathfock/errors.hpp"

namespace wreathfock {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::vector<std::int32_t> int_list(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array of integers");
  std::vector<std::int32_t> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw InputError(std::string(what) + " must be an array of integers");
    out.push_back(v.get<std::int32_t>());
  }
  return out;
}

std::size_t non_negative(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0)
    throw InputError(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

}  // namespace

GroupDefinition parse_group_definition(const Json& j) {
  GroupDefinition def;
  const Json& name = field(j, "name");
  if (!name.is_string()) throw InputError("group name must be a string");
  def.name = name.get<std::string>();
  def.degree = non_negative(field(j, "degree"), "degree");
  const Json& gens = field(j, "generators");
  if (!gens.is_array()) throw InputError("generators must be an array");
  for (const auto& g : gens) {
    auto images = int_list(g, "generator");
    if (images.size() != def.degree)
      throw InputError("generator of length " + std::to_string(images.size()) + " for degree " +
                       std::to_string(def.degree));
    def.generators.emplace_back(std::move(images));
  }
  return def;
}

Json to_json(const GroupDefinition& def) {
  Json gens = Json::array();
  for (const auto& p : def.generators) gens.push_back(p.images());
  return Json{{"name", def.name}, {"degree", def.degree}, {"generators", gens}};
}

GroupPtr build_group(const GroupDefinition& def, std::size_t max_order) {
  return group_from_permutation_generators(def.degree, def.generators, def.name, max_order);
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("invalid JSON in " + path.string() + ": " + e.what());
  }
}

GroupResolver::GroupResolver(std::filesystem::path base_dir, std::size_t max_order)
    : base_dir_(std::move(base_dir)), max_order_(max_order) {}

GroupPtr GroupResolver::resolve(const Json& ref) {
  if (ref.is_object()) {
    GroupPtr g = build_group(parse_group_definition(ref), max_order_);
    known_[g->label()] = g;
    return g;
  }
  if (!ref.is_string()) throw InputError("group reference must be a name, a path or an object");
  const std::string text = ref.get<std::string>();
  if (auto it = known_.find(text); it != known_.end()) return it->second;
  if (is_catalog_name(text)) {
    GroupPtr g = catalog_group(text, max_order_);
    known_[text] = g;
    return g;
  }
  std::filesystem::path path(text);
  if (path.is_relative()) path = base_dir_ / path;
  if (!std::filesystem::exists(path)) throw InputError("unknown group '" + text + "'");
  GroupPtr g = build_group(parse_group_definition(read_json_file(path)), max_order_);
  known_[text] = g;
  known_[g->label()] = g;
  return g;
}

Homomorphism parse_homomorphism(const Json& j, const GroupPtr& dom, const GroupPtr& cod) {
  for (const auto& [key, group] : {std::pair<const char*, const GroupPtr&>{"from", dom}, {"to", cod}}) {
    if (!j.contains(key)) continue;
    const Json& name = j.at(key);
    if (!name.is_string() || name.get<std::string>() != group->label())
      throw InputError(std::string("homomorphism '") + key + "' does not name " + group->label());
  }
  const Json& images = field(j, "generator_images");
  if (!images.is_array() || images.size() != dom->generators().size())
    throw InputError("expected " + std::to_string(dom->generators().size()) + " generator images");
  std::vector<Index> targets;
  for (const auto& im : images) {
    if (im.is_number_integer()) {
      const auto k = im.get<std::int64_t>();
      if (k < 0 || static_cast<std::size_t>(k) >= cod->size())
        throw InputError("element index " + std::to_string(k) + " out of range for " + cod->label());
      targets.push_back(static_cast<Index>(k));
      continue;
    }
    const auto perm = int_list(im, "generator image");
    const auto x = cod->find(Descriptor(perm.begin(), perm.end()));
    if (!x) throw InputError("generator image is not an element of " + cod->label());
    targets.push_back(*x);
  }
  return hom_from_generator_images(dom, dom->generators(), cod, targets);
}

Scenario parse_scenario(const Json& j, GroupResolver& resolver) {
  Scenario s;
  s.g = resolver.resolve(field(j, "G"));
  s.h = resolver.resolve(field(j, "H"));
  s.k = resolver.resolve(field(j, "K"));
  auto hom = [&](const char* key, const GroupPtr& dom) {
    const Json& ref = field(j, key);
    if (ref.is_string()) {
      std::filesystem::path path(ref.get<std::string>());
      if (path.is_relative()) path = resolver.base_dir() / path;
      return parse_homomorphism(read_json_file(path), dom, s.k);
    }
    return parse_homomorphism(ref, dom, s.k);
  };
  s.alpha = hom("alpha", s.g);
  s.beta = hom("beta", s.h);
  return s;
}

Scenario load_scenario(const std::filesystem::path& path, std::size_t max_order) {
  GroupResolver resolver(path.parent_path().empty() ? std::filesystem::path(".") : path.parent_path(), max_order);
  return parse_scenario(read_json_file(path), resolver);
}

Json to_json(const ClassFunction& f) {
  Json values = Json::array();
  for (const auto& v : f.values()) values.push_back(to_fraction_string(v));
  return Json{{"group", f.space().label()}, {"values", values}};
}

ClassFunction class_function_from_json(const Json& j, std::shared_ptr<const ClassSpace> space) {
  const Json& group = field(j, "group");
  if (!group.is_string() || group.get<std::string>() != space->label())
    throw InputError("class function is not on " + space->label());
  const Json& values = field(j, "values");
  if (!values.is_array() || values.size() != space->num_classes())
    throw InputError("expected " + std::to_string(space->num_classes()) + " class values");
  std::vector<Rational> out;
  for (const auto& v : values) {
    if (v.is_string()) out.push_back(parse_rational(v.get<std::string>()));
    else if (v.is_number_integer()) out.emplace_back(static_cast<long>(v.get<std::int64_t>()));
    else throw InputError("class values must be \"p/q\" strings");
  }
  return ClassFunction(std::move(space), std::move(out));
}

Json to_json(const TypeMatrix& t) {
  Json entries = Json::array();
  for (const auto& e : t.entries()) entries.push_back({e.cycle_length, e.class_index, e.multiplicity});
  return Json{{"n", t.n()}, {"entries", entries}};
}

TypeMatrix type_matrix_from_json(const Json& j) {
  const Json& entries = j.is_array() ? j : field(j, "entries");
  if (!entries.is_array()) throw InputError("type entries must be an array");
  std::vector<TypeEntry> out;
  std::size_t total = 0;
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != 3) throw InputError("type entries are [r, class_index, multiplicity]");
    TypeEntry entry{non_negative(e[0], "r"), non_negative(e[1], "class_index"), non_negative(e[2], "multiplicity")};
    if (entry.cycle_length == 0) throw InputError("cycle length must be positive");
    total += entry.cycle_length * entry.multiplicity;
    out.push_back(entry);
  }
  const std::size_t n = j.is_array() ? total : non_negative(field(j, "n"), "n");
  return TypeMatrix(n, std::move(out));
}

TypeMatrix parse_type_matrix(const std::string& text) {
  try {
    return type_matrix_from_json(Json::parse(text));
  } catch (const nlohmann::json::parse_error&) {
    throw InputError("type must be JSON such as [[3,1,1]]");
  }
}

Json to_json(const FockElement& x) {
  Json levels = Json::object();
  for (const auto& [n, f] : x.levels) levels[std::to_string(n)] = to_json(f);
  return Json{{"group", x.base->label()}, {"levels", levels}};
}

FockElement fock_element_from_json(const Json& j, const FockAlgebra& algebra) {
  const Json& group = field(j, "group");
  if (!group.is_string() || group.get<std::string>() != algebra.base()->label())
    throw InputError("Fock element is not over " + algebra.base()->label());
  const Json& levels = field(j, "levels");
  if (!levels.is_object()) throw InputError("levels must be an object keyed by level");
  FockElement x{algebra.base(), {}};
  for (const auto& [key, value] : levels.items()) {
    std::size_t n = 0;
    try {
      std::size_t used = 0;
      n = std::stoul(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::logic_error&) {
      throw InputError("level key '" + key + "' is not an integer");
    }
    x.levels.emplace(n, class_function_from_json(value, algebra.level(n)));
  }
  return x;
}

std::string element_string(const FiniteGroup& g, Index x) {
  const Descriptor& d = g.descriptor(x);
  try {
    return Permutation(std::vector<std::int32_t>(d.begin(), d.end())).to_cycle_string();
  } catch (const InputError&) {
    return "#" + std::to_string(x);
  }
}

}  // namespace wreathfock
