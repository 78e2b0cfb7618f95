#include "commands.hpp"

#include <CLI11.hpp>
#include <functional>
#include <iostream>

#include "wreathfock/catalog.hpp"
#include "wreathfock/errors.hpp"
#include "wreathfock/reports.hpp"

namespace wreathfock::cli {

namespace {

struct Options {
  std::string format = "json";
  std::size_t max_order = default_max_order();
  std::size_t max_level = kDefaultMaxLevel;
};

struct PullbackArgs {
  std::string scenario;
  std::string g, h, k, alpha, beta;
};

void emit(std::ostream& out, const Options& opt, const Json& j) {
  if (opt.format == "table") out << render_table(j);
  else out << j.dump(2) << '\n';
}

int emit_report(std::ostream& out, const Options& opt, const Report& r) {
  emit(out, opt, r.json);
  return r.passed ? kOk : kCheckFailed;
}

// Inline JSON when the text looks like an object or array, a file otherwise.
Json json_argument(const std::string& text) {
  if (!text.empty() && (text.front() == '{' || text.front() == '[')) {
    try {
      return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError(std::string("invalid JSON argument: ") + e.what());
    }
  }
  return read_json_file(text);
}

GroupPtr group_argument(const std::string& name, const std::string& file, const Options& opt) {
  GroupResolver resolver(".", opt.max_order);
  if (!file.empty()) return resolver.resolve(read_json_file(file));
  if (name.empty()) throw InputError("give a group name or --file");
  return resolver.resolve_name(name);
}

PullbackGroup pullback_argument(const PullbackArgs& a, const Options& opt) {
  Scenario s;
  if (!a.scenario.empty()) {
    s = load_scenario(a.scenario, opt.max_order);
  } else {
    if (a.g.empty() || a.h.empty() || a.k.empty()) throw InputError("give --scenario or all of --G, --H and --K");
    GroupResolver resolver(".", opt.max_order);
    Json j{{"G", a.g}, {"H", a.h}, {"K", a.k}};
    s.g = resolver.resolve(j["G"]);
    s.h = resolver.resolve(j["H"]);
    s.k = resolver.resolve(j["K"]);
    auto hom = [&](const std::string& text, const GroupPtr& dom) {
      if (!text.empty()) return parse_homomorphism(json_argument(text), dom, s.k);
      if (s.k->size() != 1) throw InputError("--alpha and --beta are required unless K is trivial");
      return make_homomorphism(dom, s.k, std::vector<Index>(dom->size(), s.k->identity()));
    };
    s.alpha = hom(a.alpha, s.g);
    s.beta = hom(a.beta, s.h);
  }
  return build_pullback(s.alpha, s.beta, opt.max_order);
}

void add_pullback_options(CLI::App* cmd, PullbackArgs& a) {
  cmd->add_option("--scenario", a.scenario, "Scenario file {G, H, K, alpha, beta}");
  cmd->add_option("--G", a.g, "Group reference for G");
  cmd->add_option("--H", a.h, "Group reference for H");
  cmd->add_option("--K", a.k, "Group reference for K");
  cmd->add_option("--alpha", a.alpha, "Homomorphism G -> K (file or inline JSON)");
  cmd->add_option("--beta", a.beta, "Homomorphism H -> K (file or inline JSON)");
}

// Fock inputs: a TypeMatrix names the Delta monomial; an object with
// "levels" is a full Fock element.
FockElement fock_argument(const std::string& text, const FockAlgebra& algebra) {
  const Json j = json_argument(text);
  if (j.is_object() && j.contains("levels")) return fock_element_from_json(j, algebra);
  const TypeMatrix mu = type_matrix_from_json(j);
  FockElement x{algebra.base(), {}};
  x.levels.emplace(mu.n(), algebra.monomial_value(mu));
  return x;
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Class functions on wreath products, pullbacks and the Fock algebra"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--max-order", opt.max_order, "Element cap for enumerated groups")->check(CLI::PositiveNumber);
  app.add_option("--max-level", opt.max_level, "Highest Fock level");

  std::function<int()> action;

  // group
  auto* group = app.add_subcommand("group", "Catalog and file groups")->require_subcommand(1);
  std::string group_name, group_file;
  for (const char* name : {"info", "classes"}) {
    auto* sub = group->add_subcommand(name, name == std::string("info") ? "Order and generators" : "Class list");
    sub->add_option("name", group_name, "Catalog name or definition file");
    sub->add_option("--file", group_file, "Group definition file");
    const bool info = name == std::string("info");
    sub->callback([&, info] {
      action = [&, info] {
        const GroupPtr g = group_argument(group_name, group_file, opt);
        emit(out, opt, info ? group_info_report(*g) : group_classes_report(*g));
        return int(kOk);
      };
    });
  }

  // wreath
  auto* wreath = app.add_subcommand("wreath", "Type-indexed classes of G wr S_n")->require_subcommand(1);
  std::string wreath_group, wreath_type;
  std::size_t wreath_n = 0;
  auto* wclasses = wreath->add_subcommand("classes", "Class table by type");
  wclasses->add_option("G", wreath_group)->required();
  wclasses->add_option("n", wreath_n)->required();
  wclasses->callback([&] {
    action = [&] {
      emit(out, opt, wreath_classes_report(group_argument(wreath_group, "", opt), wreath_n));
      return int(kOk);
    };
  });
  auto* wcent = wreath->add_subcommand("centralizer", "Centralizer order of a type");
  wcent->add_option("G", wreath_group)->required();
  wcent->add_option("n", wreath_n)->required();
  wcent->add_option("--type", wreath_type, "Type entries, e.g. [[3,1,1]]")->required();
  wcent->callback([&] {
    action = [&] {
      const TypeMatrix t = parse_type_matrix(wreath_type);
      emit(out, opt, wreath_centralizer_report(group_argument(wreath_group, "", opt), wreath_n, t));
      return int(kOk);
    };
  });

  // pullback
  auto* pullback = app.add_subcommand("pullback", "Fibered products of groups")->require_subcommand(1);
  PullbackArgs pb_args;
  auto* pbuild = pullback->add_subcommand("build", "Order and classes of the pullback");
  auto* pclosed = pullback->add_subcommand("check-closed", "Conjugacy closedness and restriction pattern");
  auto* piso = pullback->add_subcommand("verify-iso", "Class ring decomposition check");
  for (auto* sub : {pbuild, pclosed, piso}) add_pullback_options(sub, pb_args);
  pbuild->callback([&] {
    action = [&] {
      emit(out, opt, pullback_build_report(pullback_argument(pb_args, opt)));
      return int(kOk);
    };
  });
  pclosed->callback([&] { action = [&] { return emit_report(out, opt, closedness_report(pullback_argument(pb_args, opt))); }; });
  piso->callback([&] { action = [&] { return emit_report(out, opt, decomposition_json(pullback_argument(pb_args, opt))); }; });

  // fock
  auto* fock = app.add_subcommand("fock", "Graded class function algebra")->require_subcommand(1);
  std::string fock_group, fock_other, fock_left, fock_right;
  std::size_t fock_level = 0, series_max = 6;
  auto* fbasis = fock->add_subcommand("basis", "Delta monomials against class indicators");
  fbasis->add_option("G", fock_group)->required();
  fbasis->add_option("--level", fock_level)->required();
  fbasis->callback([&] {
    action = [&] {
      const FockAlgebra algebra(group_argument(fock_group, "", opt), std::max(opt.max_level, fock_level));
      return emit_report(out, opt, fock_basis_report(algebra, fock_level));
    };
  });
  auto* fprod = fock->add_subcommand("product", "Product of two Fock elements or Delta monomials");
  fprod->add_option("G", fock_group)->required();
  fprod->add_option("--left", fock_left, "TypeMatrix monomial or Fock element")->required();
  fprod->add_option("--right", fock_right, "TypeMatrix monomial or Fock element")->required();
  fprod->callback([&] {
    action = [&] {
      const FockAlgebra algebra(group_argument(fock_group, "", opt), opt.max_level);
      const FockElement x = fock_argument(fock_left, algebra);
      const FockElement y = fock_argument(fock_right, algebra);
      emit(out, opt, to_json(fock_product(algebra, x, y)));
      return int(kOk);
    };
  });
  auto* fkun = fock->add_subcommand("kunneth", "Delta identity for (G x H) wr S_n");
  fkun->add_option("G", fock_group)->required();
  fkun->add_option("H", fock_other)->required();
  fkun->callback([&] {
    action = [&] {
      return emit_report(out, opt,
                         kunneth_report(group_argument(fock_group, "", opt), group_argument(fock_other, "", opt),
                                        opt.max_level));
    };
  });
  auto* fseries = fock->add_subcommand("series", "Class counts against the product formula");
  fseries->add_option("G", fock_group)->required();
  fseries->add_option("--max", series_max, "Highest degree");
  fseries->callback([&] {
    action = [&] { return emit_report(out, opt, series_report(*group_argument(fock_group, "", opt), series_max)); };
  });

  // golden checks
  auto* golden = app.add_subcommand("paper", "Golden checks")->require_subcommand(1);
  golden->add_subcommand("examples", "Run every golden check")->callback([&] {
    action = [&] { return emit_report(out, opt, golden_examples_report()); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? int(kOk) : int(kUsageError);
  }
  try {
    return action ? action() : int(kUsageError);
  } catch (const ResourceError& e) {
    err << "resource cap: " << e.what() << '\n';
    return kResourceCap;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace wreathfock::cli
