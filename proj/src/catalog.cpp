#include "wreathfock/catalog.hpp"

#include <charconv>

#include "wreathfock/errors.hpp"

namespace wreathfock {

namespace {

bool parse_suffix(std::string_view name, std::string_view prefix, std::size_t& value) {
  if (!name.starts_with(prefix) || name.size() == prefix.size()) return false;
  const auto digits = name.substr(prefix.size());
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  return ec == std::errc{} && ptr == digits.data() + digits.size() && value > 0;
}

Permutation cycle_perm(std::size_t degree) {
  std::vector<std::int32_t> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<std::int32_t>((i + 1) % degree);
  return Permutation(std::move(images));
}

}  // namespace

bool is_catalog_name(std::string_view name) {
  std::size_t n = 0;
  return name == "trivial" || name == "Dic3" || parse_suffix(name, "C", n) || parse_suffix(name, "S", n) ||
         (parse_suffix(name, "D", n) && n % 2 == 0);
}

GroupPtr catalog_group(std::string_view name, std::size_t max_order) {
  const std::string label(name);
  std::size_t n = 0;
  if (name == "trivial") return group_from_permutation_generators(1, {}, label, max_order);
  if (name == "Dic3") {
    const auto g1 = Permutation::from_cycles(7, {{1, 2}, {3, 4, 5, 6}});
    const auto g3 = Permutation::from_cycles(7, {{0, 1, 2}});
    return group_from_permutation_generators(7, {g1, g1 * g1, g3}, label, max_order);
  }
  if (parse_suffix(name, "C", n)) {
    if (n == 1) return group_from_permutation_generators(1, {}, label, max_order);
    return group_from_permutation_generators(n, {cycle_perm(n)}, label, max_order);
  }
  if (parse_suffix(name, "S", n)) {
    if (n == 1) return group_from_permutation_generators(1, {}, label, max_order);
    return group_from_permutation_generators(n, {cycle_perm(n), Permutation::from_cycles(n, {{0, 1}})}, label,
                                             max_order);
  }
  if (parse_suffix(name, "D", n) && n % 2 == 0) {
    const std::size_t k = n / 2;
    if (k == 1) return group_from_permutation_generators(2, {Permutation::from_cycles(2, {{0, 1}})}, label, max_order);
    if (k == 2)
      return group_from_permutation_generators(
          4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}}), Permutation::from_cycles(4, {{0, 2}, {1, 3}})}, label,
          max_order);
    std::vector<std::int32_t> reflect(k);
    for (std::size_t i = 0; i < k; ++i) reflect[i] = static_cast<std::int32_t>((k - i) % k);
    return group_from_permutation_generators(k, {cycle_perm(k), Permutation(std::move(reflect))}, label, max_order);
  }
  throw InputError("unknown group '" + label + "'");
}

std::vector<Permutation> regular_representation(const FiniteGroup& g) {
  std::vector<Permutation> out;
  for (Index s : g.generators()) {
    std::vector<std::int32_t> images(g.size());
    for (std::size_t x = 0; x < g.size(); ++x) images[x] = static_cast<std::int32_t>(g.multiply(s, static_cast<Index>(x)));
    out.emplace_back(std::move(images));
  }
  return out;
}

GroupPtr presented_d12() {
  const auto d1 = Permutation::from_cycles(5, {{1, 2}});
  const auto d2 = Permutation::from_cycles(5, {{3, 4}});
  const auto d3 = Permutation::from_cycles(5, {{0, 1, 2}});
  const GroupPtr small = group_from_permutation_generators(5, {d1, d2, d3}, "D12");
  return group_from_permutation_generators(12, regular_representation(*small), "D12");
}

}  // namespace wreathfock
