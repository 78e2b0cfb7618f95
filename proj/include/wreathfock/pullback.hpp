#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "wreathfock/class_function.hpp"
#include "wreathfock/group.hpp"
#include "wreathfock/linalg.hpp"
#include "wreathfock/wreath.hpp"

namespace wreathfock {

/// Gamma = {(g, h) in G x H : alpha(g) = beta(h)} for surjections
/// alpha: G -> K and beta: H -> K.
struct PullbackGroup {
  Homomorphism alpha;
  Homomorphism beta;
  DirectProduct product;
  Subgroup carrier;  // inclusion into product.group
  Homomorphism proj_g;
  Homomorphism proj_h;

  const GroupPtr& group() const { return carrier.group; }
  const GroupPtr& g() const { return alpha.dom; }
  const GroupPtr& h() const { return beta.dom; }
  const GroupPtr& k() const { return alpha.cod; }
};

/// Throws InputError when alpha and beta have different codomains or either
/// is not surjective.
PullbackGroup build_pullback(const Homomorphism& alpha, const Homomorphism& beta,
                             std::size_t max_order = default_max_order());

struct ClosednessReport {
  bool closed = true;
  /// Per class of the subgroup: is it the full intersection of its ambient class?
  std::vector<bool> class_closed;
  /// Subgroup elements conjugate in the ambient group but not in the subgroup.
  std::optional<std::pair<Index, Index>> witness;
};

ClosednessReport is_conjugacy_closed(const Homomorphism& incl);

/// Matrix of the restriction Class(amb) -> Class(sub) in indicator bases:
/// entry (j, i) is 1 iff sub-class j lies in ambient class i.
RationalMatrix restriction_map_matrix(const Homomorphism& incl);

struct RestrictionSummary {
  std::size_t rank = 0;
  bool surjective = false;
  std::size_t vanishing = 0;   // ambient classes missing the subgroup
  std::size_t one_to_one = 0;  // ambient classes meeting one sub-class
  std::size_t splitting = 0;   // ambient classes meeting several sub-classes
};
RestrictionSummary summarize_restriction(const RationalMatrix& m);

/// Restriction of irreducible characters, for pairs where both groups have
/// rational characters. Row i holds the multiplicities of the sub
/// irreducibles in the restriction of the i-th ambient irreducible.
struct CharacterRestriction {
  std::vector<ClassFunction> ambient_characters;
  std::vector<ClassFunction> sub_characters;
  std::vector<std::vector<Rational>> decompositions;
  std::size_t image_rank = 0;
  /// Number of sub irreducibles that are the restriction of exactly two
  /// ambient irreducibles (and no other restriction is that irreducible).
  std::size_t two_to_one_fusions = 0;
  /// Ambient irreducibles restricting to a sum of two distinct irreducibles.
  std::size_t one_to_two_splittings = 0;
};
CharacterRestriction character_restriction_pattern(const Homomorphism& incl);

/// Class(G) (x) Class(H) in the basis rho_i (x) gamma_j (index i * |H_*| + j)
/// with the relations defining the tensor product over Class(K), and the
/// multiplication map m(rho (x) gamma) = proj_g^* rho . proj_h^* gamma.
struct TensorPresentation {
  std::size_t ambient_dim = 0;
  std::vector<std::vector<Rational>> relations;
  std::size_t relation_rank = 0;
  std::size_t quotient_dim = 0;
  RationalMatrix multiplication;  // |Gamma_*| x ambient_dim
  bool relations_in_kernel = false;
};
TensorPresentation tensor_over_class_k(const PullbackGroup& pb);

struct DecompositionReport {
  bool conj_closed = false;
  std::size_t gamma_classes = 0;
  std::size_t quotient_dim = 0;
  std::size_t map_rank = 0;
  bool relations_in_kernel = false;
  bool is_isomorphism = false;
  std::optional<std::pair<Index, Index>> witness;  // Gamma element indices
};
DecompositionReport verify_class_ring_decomposition(const PullbackGroup& pb);

/// phi((a, b); s) = ((a; s), (b; s)) from (A x B) wr S_n onto the pullback of
/// A wr S_n -> S_n <- B wr S_n.
struct WreathProductIso {
  WreathGroup source_wreath;
  GroupPtr source;
  WreathGroup left_wreath;
  WreathGroup right_wreath;
  PullbackGroup target;
  Homomorphism phi;
  bool bijective = false;
};
WreathProductIso semidirect_product_iso(const GroupPtr& a, const GroupPtr& b, std::size_t n,
                                        std::size_t max_order = default_max_order());

struct NCycleClosure {
  struct Entry {
    TypeMatrix type;  // (A x B) wr S_n type of a single n-cycle class
    bool closed = false;
    std::optional<bool> brute_force;  // present when the oracle ran
  };
  std::vector<Entry> n_cycle_classes;
  bool all_closed = true;
  /// Classes (any cycle shape) that are not closed, by type arithmetic.
  std::size_t non_closed_classes = 0;
  bool brute_force_agrees = true;
};

/// Decides closedness of (A x B) wr S_n classes inside A wr S_n x B wr S_n by
/// projecting types. Runs the brute-force oracle as well when
/// |A wr S_n| |B wr S_n| <= brute_force_max_order.
NCycleClosure n_cycle_classes_closed(const GroupPtr& a, const GroupPtr& b, std::size_t n,
                                     std::size_t brute_force_max_order = 10000);

/// Colors of (A x B) projected to the A and B factors.
std::pair<TypeMatrix, TypeMatrix> project_type(const DirectProduct& ab, const TypeMatrix& t);

}  // namespace wreathfock
