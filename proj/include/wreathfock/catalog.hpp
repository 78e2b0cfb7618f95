#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wreathfock/group.hpp"

namespace wreathfock {

/// Built-in groups: "trivial", "C<n>", "S<n>", "D<2n>" (dihedral of order
/// 2n) and "Dic3" (C3 semidirect C4 with generators of orders 4, 2, 3).
/// Throws InputError for unknown names.
GroupPtr catalog_group(std::string_view name, std::size_t max_order = default_max_order());
bool is_catalog_name(std::string_view name);

/// Left-regular permutation images of each generator of `g`.
std::vector<Permutation> regular_representation(const FiniteGroup& g);

/// D12 as S3 x C2 on 12 points with generators d1, d2, d3 of orders 2, 2, 3:
/// d1 a reflection, d2 the central involution, d3 a rotation of order 3.
GroupPtr presented_d12();

}  // namespace wreathfock
