#pragma once

#include <vector>

#include "wreathfock/class_function.hpp"

namespace wreathfock {

/// Irreducible characters of a group all of whose characters are rational
/// (symmetric groups, their products, generalized dihedral groups...).
/// Found as common eigenvectors of the class multiplication matrices, whose
/// eigenvalues are then integers. Sorted by degree, then by values.
/// Throws InputError when some character is not rational.
std::vector<ClassFunction> rational_irreducible_characters(const GroupPtr& g);

}  // namespace wreathfock
