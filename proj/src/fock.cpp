#include "wreathfock/fock.hpp"

#include "wreathfock/errors.hpp"

namespace wreathfock {

FockAlgebra::FockAlgebra(GroupPtr base, std::size_t max_level) : base_(std::move(base)) {
  if (!base_) throw InputError("Fock algebra without a base group");
  levels_.reserve(max_level + 1);
  for (std::size_t n = 0; n <= max_level; ++n) levels_.push_back(std::make_shared<const WreathClassTable>(base_, n));
}

const std::shared_ptr<const WreathClassTable>& FockAlgebra::level(std::size_t n) const {
  if (n >= levels_.size())
    throw ResourceError("level " + std::to_string(n) + " exceeds the level bound " + std::to_string(max_level()));
  return levels_[n];
}

std::size_t FockAlgebra::level_of(const ClassFunction& f) const {
  for (std::size_t n = 0; n < levels_.size(); ++n)
    if (f.space_ptr() == levels_[n]) return n;
  throw InputError("base mismatch: '" + f.space().label() + "' is not a level of the Fock algebra of " +
                   base_->label());
}

ClassFunction FockAlgebra::unit() const { return ClassFunction::constant(levels_[0], 1); }

ClassFunction FockAlgebra::product(const ClassFunction& f, const ClassFunction& g) const {
  const std::size_t n = level_of(f);
  const std::size_t m = level_of(g);
  const WreathClassTable& left = *levels_[n];
  const WreathClassTable& right = *levels_[m];
  const auto& total = level(n + m);
  std::vector<Rational> values(total->num_classes());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    const Rational fi = f[i] / Rational(left.centralizer(i));
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (g[j] == 0) continue;
      const std::size_t t = total->index_of(fuse_class(left.type(i), right.type(j)));
      values[t] += fi * g[j] / Rational(right.centralizer(j));
    }
  }
  for (std::size_t t = 0; t < values.size(); ++t)
    if (values[t] != 0) values[t] *= Rational(total->centralizer(t));
  return ClassFunction(total, std::move(values));
}

ClassFunction FockAlgebra::delta(std::size_t n, std::size_t c) const {
  if (c >= base_->num_classes()) throw InputError("invalid class " + std::to_string(c) + " of " + base_->label());
  const auto& table = level(n);
  return indicator(table, table->index_of(single_cycle_type(n, c)));
}

ClassFunction FockAlgebra::monomial_value(const TypeMatrix& mu) const {
  level(mu.n());
  ClassFunction acc = unit();
  for (const auto& e : mu.entries()) {
    const ClassFunction d = delta(e.cycle_length, e.class_index);
    for (std::size_t k = 0; k < e.multiplicity; ++k) acc = product(acc, d);
  }
  return acc;
}

RationalMatrix FockAlgebra::change_of_basis(std::size_t n) const {
  const auto& table = level(n);
  RationalMatrix m(table->num_classes(), table->num_classes());
  for (std::size_t row = 0; row < table->num_classes(); ++row) {
    const ClassFunction v = monomial_value(table->type(row));
    for (std::size_t col = 0; col < v.size(); ++col) m(row, col) = v[col];
  }
  return m;
}

ClassFunction fock_product_by_element_sum(const FockAlgebra& algebra, const ClassFunction& f, const ClassFunction& g,
                                          std::size_t max_order) {
  const std::size_t n = algebra.level_of(f);
  const std::size_t m = algebra.level_of(g);
  const auto& total_table = algebra.level(n + m);
  const FiniteGroup& base = *algebra.base();
  const EmbeddedProduct emb = embed_product(algebra.base(), n, m, max_order);
  const WreathGroup wl(algebra.base(), n), wr(algebra.base(), m), wt(algebra.base(), n + m);

  // f x g on the enumerated G_n x G_m, read through element types.
  auto lift = [&](const ClassFunction& h, const GroupPtr& group, const WreathGroup& w, std::size_t level) {
    const auto& table = algebra.level(level);
    std::vector<Rational> values(group->num_classes());
    for (std::size_t c = 0; c < values.size(); ++c)
      values[c] = h[table->index_of(type_of(base, w.decode(group->descriptor(group->classes().reps[c]))))];
    return ClassFunction(group, std::move(values));
  };
  const ClassFunction outer = external_product(lift(f, emb.left, wl, n), lift(g, emb.right, wr, m), emb.product);
  const ClassFunction induced = induce(outer, emb.embedding, InductionStrategy::kElementSum);

  std::vector<Rational> values(total_table->num_classes());
  for (std::size_t c = 0; c < values.size(); ++c) {
    const auto x = emb.total->find(wt.encode(total_table->classes()[c].representative));
    if (!x) throw Error("class representative missing from the enumerated group");
    values[c] = induced.at_element(*x);
  }
  return ClassFunction(total_table, std::move(values));
}

ClassFunction module_action_over_sym(const FockAlgebra& sym, const ClassFunction& f, const FockAlgebra& algebra,
                                     const ClassFunction& x) {
  if (sym.base()->size() != 1) throw InputError("module action needs the Fock algebra of the trivial group");
  const std::size_t n = sym.level_of(f);
  if (algebra.level_of(x) != n) throw InputError("level mismatch in module action");
  const auto& sym_table = *sym.level(n);
  const auto& table = *algebra.level(n);
  std::vector<Rational> values(x.size());
  for (std::size_t c = 0; c < x.size(); ++c) {
    std::vector<TypeEntry> shape;
    for (const auto& [r, m] : table.type(c).partition()) shape.push_back({r, 0, m});
    values[c] = f[sym_table.index_of(TypeMatrix(n, std::move(shape)))] * x[c];
  }
  return ClassFunction(algebra.level(n), std::move(values));
}

ClassFunction restricted_external_delta(const FockAlgebra& g_algebra, const FockAlgebra& h_algebra,
                                        const FockAlgebra& product_algebra, const DirectProduct& gh, std::size_t n,
                                        std::size_t c, std::size_t d) {
  const ClassFunction dg = g_algebra.delta(n, c);
  const ClassFunction dh = h_algebra.delta(n, d);
  const auto& g_table = *g_algebra.level(n);
  const auto& h_table = *h_algebra.level(n);
  const auto& table = product_algebra.level(n);
  const FiniteGroup& g = *g_algebra.base();
  const FiniteGroup& h = *h_algebra.base();
  std::vector<Rational> values(table->num_classes());
  for (std::size_t k = 0; k < values.size(); ++k) {
    const WreathElement& x = table->classes()[k].representative;
    WreathElement xg{std::vector<Index>(n), x.perm}, xh{std::vector<Index>(n), x.perm};
    for (std::size_t i = 0; i < n; ++i) {
      xg.parts[i] = gh.proj_first(x.parts[i]);
      xh.parts[i] = gh.proj_second(x.parts[i]);
    }
    values[k] = dg[g_table.index_of(type_of(g, xg))] * dh[h_table.index_of(type_of(h, xh))];
  }
  return ClassFunction(table, std::move(values));
}

namespace {

std::size_t product_class(const DirectProduct& gh, std::size_t c, std::size_t d) {
  const Index rep = gh.pair(gh.incl_first.dom->classes().reps[c], gh.incl_second.dom->classes().reps[d]);
  return gh.group->class_of(rep);
}

}  // namespace

bool kunneth_generator_identity(const GroupPtr& g, const GroupPtr& h, std::size_t n, std::size_t c, std::size_t d) {
  const DirectProduct gh = direct_product(g, h);
  const FockAlgebra fg(g, n), fh(h, n), fgh(gh.group, n);
  return restricted_external_delta(fg, fh, fgh, gh, n, c, d) == fgh.delta(n, product_class(gh, c, d));
}

KunnethSweep kunneth_sweep(const GroupPtr& g, const GroupPtr& h, std::size_t max_level) {
  const DirectProduct gh = direct_product(g, h);
  const FockAlgebra fg(g, max_level), fh(h, max_level), fgh(gh.group, max_level);
  KunnethSweep sweep;
  for (std::size_t n = 1; n <= max_level; ++n)
    for (std::size_t c = 0; c < g->num_classes(); ++c)
      for (std::size_t d = 0; d < h->num_classes(); ++d) {
        const bool equal =
            restricted_external_delta(fg, fh, fgh, gh, n, c, d) == fgh.delta(n, product_class(gh, c, d));
        sweep.checks.push_back({n, c, d, equal});
        sweep.all_equal = sweep.all_equal && equal;
      }
  return sweep;
}

std::vector<Integer> colored_partition_series(std::size_t colors, std::size_t max_n) {
  std::vector<Integer> sigma(max_n + 1);
  for (std::size_t j = 1; j <= max_n; ++j)
    for (std::size_t multiple = j; multiple <= max_n; multiple += j) sigma[multiple] += static_cast<unsigned long>(j);
  std::vector<Integer> a(max_n + 1);
  a[0] = 1;
  for (std::size_t n = 1; n <= max_n; ++n) {
    Integer acc = 0;
    for (std::size_t j = 1; j <= n; ++j) acc += sigma[j] * a[n - j];
    acc *= static_cast<unsigned long>(colors);
    a[n] = acc / static_cast<unsigned long>(n);
  }
  return a;
}

DimensionSeries graded_dimension_series(const FiniteGroup& g, std::size_t max_n) {
  DimensionSeries s;
  for (std::size_t n = 0; n <= max_n; ++n)
    s.by_types.emplace_back(static_cast<unsigned long>(classes_by_type(g, n).size()));
  s.by_product_formula = colored_partition_series(g.num_classes(), max_n);
  s.agree = s.by_types == s.by_product_formula;
  return s;
}

}  // namespace wreathfock
