#include "wreathfock/class_function.hpp"

#include <string>

#include "wreathfock/errors.hpp"

namespace wreathfock {

namespace {

const FiniteGroup& as_group(const ClassSpace& space) {
  const auto* g = dynamic_cast<const FiniteGroup*>(&space);
  if (!g) throw InputError("class function space '" + space.label() + "' is not an enumerated group");
  return *g;
}

void require_on(const ClassFunction& f, const GroupPtr& g, const char* what) {
  if (f.space_ptr().get() != static_cast<const ClassSpace*>(g.get()))
    throw InputError(std::string(what) + ": class function lives on '" + f.space().label() + "', expected '" +
                     g->label() + "'");
}

}  // namespace

ClassFunction::ClassFunction(std::shared_ptr<const ClassSpace> space, std::vector<Rational> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (!space_) throw InputError("class function without a space");
  if (values_.size() != space_->num_classes()) throw InputError("class function length differs from class count");
}

ClassFunction ClassFunction::zero(std::shared_ptr<const ClassSpace> space) {
  const std::size_t n = space->num_classes();
  return ClassFunction(std::move(space), std::vector<Rational>(n));
}

ClassFunction ClassFunction::constant(std::shared_ptr<const ClassSpace> space, const Rational& value) {
  const std::size_t n = space->num_classes();
  return ClassFunction(std::move(space), std::vector<Rational>(n, value));
}

const Rational& ClassFunction::at_element(Index x) const {
  return values_[as_group(*space_).class_of(x)];
}

bool ClassFunction::is_zero() const {
  for (const auto& v : values_)
    if (v != 0) return false;
  return true;
}

void ClassFunction::require_same_space(const ClassFunction& other) const {
  if (space_ != other.space_)
    throw InputError("group mismatch: '" + space_->label() + "' vs '" + other.space_->label() + "'");
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& other) {
  require_same_space(other);
  for (std::size_t c = 0; c < values_.size(); ++c) values_[c] += other.values_[c];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& other) {
  require_same_space(other);
  for (std::size_t c = 0; c < values_.size(); ++c) values_[c] -= other.values_[c];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const Rational& scalar) {
  for (auto& v : values_) v *= scalar;
  return *this;
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
  return a.space_ == b.space_ && a.values_ == b.values_;
}

ClassFunction indicator(std::shared_ptr<const ClassSpace> space, std::size_t class_index) {
  if (class_index >= space->num_classes())
    throw InputError("class index " + std::to_string(class_index) + " out of range for '" + space->label() + "'");
  ClassFunction f = ClassFunction::zero(std::move(space));
  std::vector<Rational> values = f.values();
  values[class_index] = 1;
  return ClassFunction(f.space_ptr(), std::move(values));
}

ClassFunction pointwise_mul(const ClassFunction& f, const ClassFunction& g) {
  if (f.space_ptr() != g.space_ptr()) throw InputError("group mismatch in pointwise product");
  std::vector<Rational> values(f.size());
  for (std::size_t c = 0; c < f.size(); ++c) values[c] = f[c] * g[c];
  return ClassFunction(f.space_ptr(), std::move(values));
}

Rational inner_product(const ClassFunction& f, const ClassFunction& g) {
  if (f.space_ptr() != g.space_ptr()) throw InputError("group mismatch in inner product");
  Rational sum = 0;
  for (std::size_t c = 0; c < f.size(); ++c) {
    if (f[c] == 0 || g[c] == 0) continue;
    sum += Rational(f.space().class_size(c)) * f[c] * g[c];
  }
  return sum / Rational(f.space().order());
}

ClassFunction restrict(const ClassFunction& f, const Homomorphism& incl) {
  require_on(f, incl.cod, "restrict");
  if (!is_injective(incl)) throw InputError("restrict needs an injective map");
  const FiniteGroup& h = *incl.dom;
  std::vector<Rational> values(h.num_classes());
  for (std::size_t c = 0; c < values.size(); ++c) values[c] = f.at_element(incl(h.classes().reps[c]));
  return ClassFunction(incl.dom, std::move(values));
}

std::vector<std::size_t> class_fusion(const Homomorphism& incl) {
  const FiniteGroup& h = *incl.dom;
  std::vector<std::size_t> fusion(h.num_classes());
  for (std::size_t c = 0; c < fusion.size(); ++c) fusion[c] = incl.cod->class_of(incl(h.classes().reps[c]));
  return fusion;
}

ClassFunction induce(const ClassFunction& f, const Homomorphism& incl, InductionStrategy strategy) {
  require_on(f, incl.dom, "induce");
  if (!is_injective(incl)) throw InputError("induce needs an injective map");
  const FiniteGroup& h = *incl.dom;
  const FiniteGroup& g = *incl.cod;
  std::vector<Rational> values(g.num_classes());
  if (strategy == InductionStrategy::kClassFusion) {
    const auto fusion = class_fusion(incl);
    for (std::size_t c = 0; c < h.num_classes(); ++c) {
      if (f[c] == 0) continue;
      values[fusion[c]] += f[c] / Rational(static_cast<unsigned long>(h.centralizer_order(h.classes().reps[c])));
    }
    for (std::size_t c = 0; c < g.num_classes(); ++c)
      values[c] *= Rational(static_cast<unsigned long>(g.centralizer_order(g.classes().reps[c])));
  } else {
    const auto pre = preimage_table(incl);
    for (std::size_t c = 0; c < g.num_classes(); ++c) {
      const Index x = g.classes().reps[c];
      Rational sum = 0;
      for (std::size_t r = 0; r < g.size(); ++r) {
        const auto ri = static_cast<Index>(r);
        const Index y = g.multiply(g.multiply(g.inverse(ri), x), ri);
        if (pre[y] >= 0) sum += f.at_element(static_cast<Index>(pre[y]));
      }
      values[c] = sum / Rational(static_cast<unsigned long>(h.size()));
    }
  }
  return ClassFunction(incl.cod, std::move(values));
}

ClassFunction pullback_along(const ClassFunction& f, const Homomorphism& hom) {
  require_on(f, hom.cod, "pullback_along");
  const FiniteGroup& d = *hom.dom;
  std::vector<Rational> values(d.num_classes());
  for (std::size_t c = 0; c < values.size(); ++c) values[c] = f.at_element(hom(d.classes().reps[c]));
  return ClassFunction(hom.dom, std::move(values));
}

ClassFunction external_product(const ClassFunction& f, const ClassFunction& g, const DirectProduct& prod) {
  require_on(f, prod.incl_first.dom, "external_product");
  require_on(g, prod.incl_second.dom, "external_product");
  const FiniteGroup& p = *prod.group;
  std::vector<Rational> values(p.num_classes());
  for (std::size_t c = 0; c < values.size(); ++c) {
    const Index x = p.classes().reps[c];
    values[c] = f.at_element(prod.proj_first(x)) * g.at_element(prod.proj_second(x));
  }
  return ClassFunction(prod.group, std::move(values));
}

SpanInfo linear_span_and_rank(const std::vector<ClassFunction>& functions) {
  std::vector<std::vector<Rational>> vectors;
  vectors.reserve(functions.size());
  for (const auto& f : functions) {
    if (f.space_ptr() != functions.front().space_ptr()) throw InputError("group mismatch in span computation");
    vectors.push_back(f.values());
  }
  return span_of(vectors);
}

}  // namespace wreathfock
