#pragma once

#include <filesystem>
#include <map>
#include <string>

#include <json.hpp>

#include "wreathfock/class_function.hpp"
#include "wreathfock/fock.hpp"
#include "wreathfock/group.hpp"
#include "wreathfock/wreath.hpp"

namespace wreathfock {

using Json = nlohmann::ordered_json;

/// Permutation group given by generator images of 0..degree-1.
struct GroupDefinition {
  std::string name;
  std::size_t degree = 0;
  std::vector<Permutation> generators;
};

GroupDefinition parse_group_definition(const Json& j);
Json to_json(const GroupDefinition& def);
GroupPtr build_group(const GroupDefinition& def, std::size_t max_order = default_max_order());

/// Throws InputError when the file is missing or not valid JSON.
Json read_json_file(const std::filesystem::path& path);

/// Resolves group references: a catalog name, a path to a definition file
/// (relative to `base_dir`), or an inline definition object. Groups read
/// from files are also known afterwards by their "name".
class GroupResolver {
 public:
  explicit GroupResolver(std::filesystem::path base_dir = ".", std::size_t max_order = default_max_order());

  GroupPtr resolve(const Json& ref);
  GroupPtr resolve_name(const std::string& ref) { return resolve(Json(ref)); }
  const std::filesystem::path& base_dir() const { return base_dir_; }
  std::size_t max_order() const { return max_order_; }

 private:
  std::filesystem::path base_dir_;
  std::size_t max_order_;
  std::map<std::string, GroupPtr> known_;
};

/// { "from", "to", "generator_images" } with each image either the images
/// of a permutation of the codomain's points or a codomain element index.
/// "from"/"to", when present, must name `dom` and `cod`.
Homomorphism parse_homomorphism(const Json& j, const GroupPtr& dom, const GroupPtr& cod);

struct Scenario {
  GroupPtr g, h, k;
  Homomorphism alpha, beta;
};

/// { "G", "H", "K", "alpha", "beta" }; homomorphisms inline or as paths.
/// All references resolve before anything is computed.
Scenario parse_scenario(const Json& j, GroupResolver& resolver);
Scenario load_scenario(const std::filesystem::path& path, std::size_t max_order = default_max_order());

Json to_json(const ClassFunction& f);
/// `j["group"]` must equal the space label and the value count must match.
ClassFunction class_function_from_json(const Json& j, std::shared_ptr<const ClassSpace> space);

Json to_json(const TypeMatrix& t);
/// Accepts { "n", "entries" } or a bare entry list (then n is inferred).
TypeMatrix type_matrix_from_json(const Json& j);
TypeMatrix parse_type_matrix(const std::string& text);

Json to_json(const FockElement& x);
FockElement fock_element_from_json(const Json& j, const FockAlgebra& algebra);

/// Cycle notation when the descriptor is a permutation, "#index" otherwise.
std::string element_string(const FiniteGroup& g, Index x);

}  // namespace wreathfock
