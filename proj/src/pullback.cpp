#include "wreathfock/pullback.hpp"

#include <map>

#include "wreathfock/catalog.hpp"
#include "wreathfock/characters.hpp"
#include "wreathfock/errors.hpp"

namespace wreathfock {

PullbackGroup build_pullback(const Homomorphism& alpha, const Homomorphism& beta, std::size_t max_order) {
  if (alpha.cod != beta.cod) throw InputError("pullback maps must share their codomain");
  if (!is_surjective(alpha) || !is_surjective(beta)) throw InputError("pullback maps must be surjective");
  DirectProduct product = direct_product(alpha.dom, beta.dom, max_order);
  std::vector<Index> members;
  for (std::size_t g = 0; g < alpha.dom->size(); ++g)
    for (std::size_t h = 0; h < beta.dom->size(); ++h)
      if (alpha(static_cast<Index>(g)) == beta(static_cast<Index>(h)))
        members.push_back(product.pair(static_cast<Index>(g), static_cast<Index>(h)));
  const std::string label = alpha.dom->label() + "x_" + alpha.cod->label() + "_" + beta.dom->label();
  Subgroup carrier = subgroup(product.group, std::move(members), label);
  Homomorphism proj_g = compose(product.proj_first, carrier.inclusion);
  Homomorphism proj_h = compose(product.proj_second, carrier.inclusion);
  return PullbackGroup{alpha, beta, std::move(product), std::move(carrier), std::move(proj_g), std::move(proj_h)};
}

ClosednessReport is_conjugacy_closed(const Homomorphism& incl) {
  if (!is_injective(incl)) throw InputError("conjugacy-closedness needs an injective map");
  const FiniteGroup& sub = *incl.dom;
  const FiniteGroup& amb = *incl.cod;
  ClosednessReport report;
  report.class_closed.assign(sub.num_classes(), true);
  // Group subgroup elements by ambient class; a closed ambient class meets
  // exactly one subgroup class.
  std::map<std::size_t, std::size_t> first_sub_class;
  std::map<std::size_t, Index> first_element;
  for (std::size_t x = 0; x < sub.size(); ++x) {
    const auto xi = static_cast<Index>(x);
    const std::size_t a = amb.class_of(incl(xi));
    const std::size_t s = sub.class_of(xi);
    auto [it, inserted] = first_sub_class.emplace(a, s);
    if (inserted) {
      first_element.emplace(a, xi);
      continue;
    }
    if (it->second != s) {
      report.closed = false;
      report.class_closed[s] = false;
      report.class_closed[it->second] = false;
      if (!report.witness) report.witness = std::make_pair(first_element.at(a), xi);
    }
  }
  return report;
}

RationalMatrix restriction_map_matrix(const Homomorphism& incl) {
  if (!is_injective(incl)) throw InputError("restriction matrix needs an injective map");
  const auto fusion = class_fusion(incl);
  RationalMatrix m(incl.dom->num_classes(), incl.cod->num_classes());
  for (std::size_t j = 0; j < fusion.size(); ++j) m(j, fusion[j]) = 1;
  return m;
}

RestrictionSummary summarize_restriction(const RationalMatrix& m) {
  RestrictionSummary s;
  s.rank = rank(m);
  s.surjective = s.rank == m.rows();
  for (std::size_t i = 0; i < m.cols(); ++i) {
    std::size_t hits = 0;
    for (std::size_t j = 0; j < m.rows(); ++j)
      if (m(j, i) != 0) ++hits;
    if (hits == 0) ++s.vanishing;
    else if (hits == 1) ++s.one_to_one;
    else ++s.splitting;
  }
  return s;
}

CharacterRestriction character_restriction_pattern(const Homomorphism& incl) {
  CharacterRestriction out;
  out.ambient_characters = rational_irreducible_characters(incl.cod);
  out.sub_characters = rational_irreducible_characters(incl.dom);
  std::map<std::vector<Rational>, std::size_t> hits;
  for (const auto& chi : out.ambient_characters) {
    const ClassFunction res = restrict(chi, incl);
    std::vector<Rational> row;
    for (const auto& psi : out.sub_characters) row.push_back(inner_product(res, psi));
    ++hits[row];
    out.decompositions.push_back(std::move(row));
  }
  out.image_rank = span_of(out.decompositions).rank;
  for (const auto& [row, count] : hits) {
    std::size_t constituents = 0;
    bool multiplicity_free = true;
    for (const auto& v : row) {
      if (v != 0) ++constituents;
      if (v != 0 && v != 1) multiplicity_free = false;
    }
    if (!multiplicity_free) continue;
    if (constituents == 1 && count == 2) ++out.two_to_one_fusions;
    if (constituents == 2 && count == 1) ++out.one_to_two_splittings;
  }
  return out;
}

TensorPresentation tensor_over_class_k(const PullbackGroup& pb) {
  const GroupPtr& g = pb.g();
  const GroupPtr& h = pb.h();
  const GroupPtr& k = pb.k();
  const std::size_t ng = g->num_classes();
  const std::size_t nh = h->num_classes();
  TensorPresentation t;
  t.ambient_dim = ng * nh;

  auto tensor = [&](const ClassFunction& rho, const ClassFunction& gamma) {
    std::vector<Rational> v(ng * nh);
    for (std::size_t i = 0; i < ng; ++i)
      if (rho[i] != 0)
        for (std::size_t j = 0; j < nh; ++j) v[i * nh + j] = rho[i] * gamma[j];
    return v;
  };
  for (std::size_t c = 0; c < k->num_classes(); ++c) {
    const ClassFunction xi = indicator(k, c);
    const ClassFunction on_g = pullback_along(xi, pb.alpha);
    const ClassFunction on_h = pullback_along(xi, pb.beta);
    for (std::size_t i = 0; i < ng; ++i) {
      const ClassFunction rho = indicator(g, i);
      for (std::size_t j = 0; j < nh; ++j) {
        const ClassFunction gamma = indicator(h, j);
        std::vector<Rational> lhs = tensor(pointwise_mul(on_g, rho), gamma);
        const std::vector<Rational> rhs = tensor(rho, pointwise_mul(on_h, gamma));
        bool nonzero = false;
        for (std::size_t p = 0; p < lhs.size(); ++p) {
          lhs[p] -= rhs[p];
          if (lhs[p] != 0) nonzero = true;
        }
        if (nonzero) t.relations.push_back(std::move(lhs));
      }
    }
  }
  t.relation_rank = span_of(t.relations).rank;
  t.quotient_dim = t.ambient_dim - t.relation_rank;

  const GroupPtr& gamma_group = pb.group();
  t.multiplication = RationalMatrix(gamma_group->num_classes(), t.ambient_dim);
  for (std::size_t i = 0; i < ng; ++i) {
    const ClassFunction a = pullback_along(indicator(g, i), pb.proj_g);
    for (std::size_t j = 0; j < nh; ++j) {
      const ClassFunction prod = pointwise_mul(a, pullback_along(indicator(h, j), pb.proj_h));
      for (std::size_t r = 0; r < prod.size(); ++r) t.multiplication(r, i * nh + j) = prod[r];
    }
  }
  t.relations_in_kernel = true;
  for (const auto& rel : t.relations) {
    for (const auto& v : t.multiplication.apply(rel))
      if (v != 0) t.relations_in_kernel = false;
  }
  return t;
}

DecompositionReport verify_class_ring_decomposition(const PullbackGroup& pb) {
  DecompositionReport r;
  const ClosednessReport closed = is_conjugacy_closed(pb.carrier.inclusion);
  r.conj_closed = closed.closed;
  r.witness = closed.witness;
  const TensorPresentation t = tensor_over_class_k(pb);
  r.gamma_classes = pb.group()->num_classes();
  r.quotient_dim = t.quotient_dim;
  r.map_rank = rank(t.multiplication);
  r.relations_in_kernel = t.relations_in_kernel;
  // With relations in ker(m), the induced map on the quotient is injective
  // iff rank m = quotient dim, and surjective iff rank m = |Gamma_*|.
  r.is_isomorphism = r.relations_in_kernel && r.map_rank == r.quotient_dim && r.map_rank == r.gamma_classes;
  return r;
}

namespace {

Homomorphism wreath_to_symmetric(const WreathGroup& w, const GroupPtr& enumerated, const WreathGroup& sym,
                                 const GroupPtr& sym_enumerated) {
  std::vector<Index> image(enumerated->size());
  for (std::size_t x = 0; x < enumerated->size(); ++x) {
    WreathElement e = w.decode(enumerated->descriptor(static_cast<Index>(x)));
    WreathElement s{std::vector<Index>(w.n(), 0), e.perm};
    image[x] = *sym_enumerated->find(sym.encode(s));
  }
  return make_homomorphism(enumerated, sym_enumerated, std::move(image));
}

}  // namespace

WreathProductIso semidirect_product_iso(const GroupPtr& a, const GroupPtr& b, std::size_t n, std::size_t max_order) {
  const DirectProduct ab = direct_product(a, b, max_order);
  const WreathGroup wab(ab.group, n), wa(a, n), wb(b, n), ws(catalog_group("trivial"), n);
  const GroupPtr source = wab.enumerate(max_order);
  const GroupPtr an = wa.enumerate(max_order);
  const GroupPtr bn = wb.enumerate(max_order);
  const GroupPtr sn = ws.enumerate(max_order);
  PullbackGroup target =
      build_pullback(wreath_to_symmetric(wa, an, ws, sn), wreath_to_symmetric(wb, bn, ws, sn), max_order);
  const auto pre = preimage_table(target.carrier.inclusion);

  std::vector<Index> image(source->size());
  for (std::size_t x = 0; x < source->size(); ++x) {
    const WreathElement e = wab.decode(source->descriptor(static_cast<Index>(x)));
    WreathElement ea{std::vector<Index>(n), e.perm}, eb{std::vector<Index>(n), e.perm};
    for (std::size_t i = 0; i < n; ++i) {
      ea.parts[i] = ab.proj_first(e.parts[i]);
      eb.parts[i] = ab.proj_second(e.parts[i]);
    }
    const Index in_product = target.product.pair(*an->find(wa.encode(ea)), *bn->find(wb.encode(eb)));
    if (pre[in_product] < 0) throw Error("phi leaves the pullback");
    image[x] = static_cast<Index>(pre[in_product]);
  }
  Homomorphism phi = make_homomorphism(source, target.group(), std::move(image));
  const bool bijective = is_injective(phi) && is_surjective(phi);
  return WreathProductIso{wab, source, wa, wb, std::move(target), std::move(phi), bijective};
}

std::pair<TypeMatrix, TypeMatrix> project_type(const DirectProduct& ab, const TypeMatrix& t) {
  const FiniteGroup& p = *ab.group;
  std::vector<TypeEntry> left, right;
  for (const auto& e : t.entries()) {
    const Index rep = p.classes().reps[e.class_index];
    left.push_back({e.cycle_length, ab.incl_first.dom->class_of(ab.proj_first(rep)), e.multiplicity});
    right.push_back({e.cycle_length, ab.incl_second.dom->class_of(ab.proj_second(rep)), e.multiplicity});
  }
  return {TypeMatrix(t.n(), std::move(left)), TypeMatrix(t.n(), std::move(right))};
}

NCycleClosure n_cycle_classes_closed(const GroupPtr& a, const GroupPtr& b, std::size_t n,
                                     std::size_t brute_force_max_order) {
  const DirectProduct ab = direct_product(a, b);
  const auto classes = classes_by_type(*ab.group, n);
  std::map<std::pair<TypeMatrix, TypeMatrix>, std::size_t> preimages;
  std::vector<std::pair<TypeMatrix, TypeMatrix>> projected;
  for (const auto& c : classes) {
    projected.push_back(project_type(ab, c.type));
    ++preimages[projected.back()];
  }
  NCycleClosure out;
  std::map<TypeMatrix, bool> closed_by_type;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const bool closed = preimages.at(projected[c]) == 1;
    closed_by_type.emplace(classes[c].type, closed);
    if (!closed) ++out.non_closed_classes;
    if (classes[c].type.is_single_cycle()) {
      out.n_cycle_classes.push_back({classes[c].type, closed, std::nullopt});
      out.all_closed = out.all_closed && closed;
    }
  }

  const Integer amb_order = WreathGroup(a, n).order() * WreathGroup(b, n).order();
  if (amb_order <= Integer(static_cast<unsigned long>(brute_force_max_order))) {
    const WreathProductIso iso = semidirect_product_iso(a, b, n, brute_force_max_order);
    const Homomorphism into_product = compose(iso.target.carrier.inclusion, iso.phi);
    const ClosednessReport brute = is_conjugacy_closed(into_product);
    const FiniteGroup& w = *iso.source;
    for (std::size_t c = 0; c < w.num_classes(); ++c) {
      const TypeMatrix t = type_of(*ab.group, iso.source_wreath.decode(w.descriptor(w.classes().reps[c])));
      const bool closed = brute.class_closed[c];
      if (closed_by_type.at(t) != closed) out.brute_force_agrees = false;
      for (auto& entry : out.n_cycle_classes)
        if (entry.type == t) entry.brute_force = closed;
    }
  }
  return out;
}

}  // namespace wreathfock
