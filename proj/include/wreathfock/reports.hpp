#pragma once

#include <string>

#include "wreathfock/fock.hpp"
#include "wreathfock/io.hpp"
#include "wreathfock/pullback.hpp"

namespace wreathfock {

/// JSON payload plus whether every check it carries passed.
struct Report {
  Json json;
  bool passed = true;
};

Json group_info_report(const FiniteGroup& g);
Json group_classes_report(const FiniteGroup& g);

Json wreath_classes_report(const GroupPtr& base, std::size_t n);
Json wreath_centralizer_report(const GroupPtr& base, std::size_t n, const TypeMatrix& t);

Json pullback_build_report(const PullbackGroup& pb);
/// passed = conjugacy closed.
Report closedness_report(const PullbackGroup& pb);
/// passed = is_isomorphism.
Report decomposition_json(const PullbackGroup& pb);

/// passed = square and invertible.
Report fock_basis_report(const FockAlgebra& algebra, std::size_t n);
FockElement fock_product(const FockAlgebra& algebra, const FockElement& x, const FockElement& y);
Report kunneth_report(const GroupPtr& g, const GroupPtr& h, std::size_t max_level);
/// passed = both counting methods agree.
Report series_report(const FiniteGroup& g, std::size_t max_n);

/// S3 x_{C2} S3 along the sign map on both sides.
PullbackGroup s3_sign_pullback();
/// D12 x_{S3} Dic3 with d1, g1 -> (1 2), d2, g2 -> (), d3, g3 -> (0 1 2).
PullbackGroup d12_dic3_pullback();

/// Golden checks for the two pullback examples and the C4 type table.
Report golden_examples_report();

/// Plain-text rendering used by --format table.
std::string render_table(const Json& j);

}  // namespace wreathfock
