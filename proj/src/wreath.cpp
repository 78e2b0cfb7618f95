#include "wreathfock/wreath.hpp"

#include <algorithm>
#include <functional>

#include "wreathfock/errors.hpp"

namespace wreathfock {

TypeMatrix::TypeMatrix(std::size_t n, std::vector<TypeEntry> entries) : n_(n) {
  std::sort(entries.begin(), entries.end());
  std::size_t total = 0;
  for (const auto& e : entries) {
    if (e.cycle_length == 0) throw InputError("type entry with cycle length 0");
    total += e.cycle_length * e.multiplicity;
    if (e.multiplicity == 0) continue;
    if (!entries_.empty() && entries_.back().cycle_length == e.cycle_length &&
        entries_.back().class_index == e.class_index) {
      entries_.back().multiplicity += e.multiplicity;
    } else {
      entries_.push_back(e);
    }
  }
  if (total != n) throw InputError("type entries sum to " + std::to_string(total) + ", expected " + std::to_string(n));
}

std::size_t TypeMatrix::multiplicity(std::size_t r, std::size_t c) const {
  for (const auto& e : entries_)
    if (e.cycle_length == r && e.class_index == c) return e.multiplicity;
  return 0;
}

std::map<std::size_t, std::size_t> TypeMatrix::partition() const {
  std::map<std::size_t, std::size_t> out;
  for (const auto& e : entries_) out[e.cycle_length] += e.multiplicity;
  return out;
}

std::string TypeMatrix::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ",";
    s += "[" + std::to_string(entries_[i].cycle_length) + "," + std::to_string(entries_[i].class_index) + "," +
         std::to_string(entries_[i].multiplicity) + "]";
  }
  return s + "]";
}

TypeMatrix identity_type(std::size_t n, std::size_t identity_class) {
  if (n == 0) return TypeMatrix(0, {});
  return TypeMatrix(n, {{1, identity_class, n}});
}

TypeMatrix single_cycle_type(std::size_t n, std::size_t class_index) {
  if (n == 0) throw InputError("a single cycle needs n >= 1");
  return TypeMatrix(n, {{n, class_index, 1}});
}

WreathGroup::WreathGroup(GroupPtr base, std::size_t n) : base_(std::move(base)), n_(n) {
  if (!base_) throw InputError("wreath product without a base group");
}

Integer WreathGroup::order() const {
  Integer o;
  mpz_pow_ui(o.get_mpz_t(), Integer(static_cast<unsigned long>(base_->size())).get_mpz_t(), n_);
  return o * factorial(n_);
}

std::string WreathGroup::label() const { return base_->label() + "wrS" + std::to_string(n_); }

WreathElement WreathGroup::identity() const {
  return {std::vector<Index>(n_, base_->identity()), Permutation::identity(n_)};
}

void WreathGroup::check(const WreathElement& x) const {
  if (x.parts.size() != n_ || x.perm.degree() != n_) throw InputError("wreath element has the wrong degree");
  for (Index p : x.parts)
    if (p >= base_->size()) throw InputError("wreath element part out of range");
}

WreathElement WreathGroup::multiply(const WreathElement& x, const WreathElement& y) const {
  WreathElement out{std::vector<Index>(n_), x.perm * y.perm};
  const Permutation sinv = x.perm.inverse();
  for (std::size_t i = 0; i < n_; ++i)
    out.parts[i] = base_->multiply(x.parts[i], y.parts[static_cast<std::size_t>(sinv(i))]);
  return out;
}

WreathElement WreathGroup::inverse(const WreathElement& x) const {
  // (a, s)^-1 = (s^-1 . a^-1, s^-1), and (s^-1 . b)_i = b_{s(i)}.
  WreathElement out{std::vector<Index>(n_), x.perm.inverse()};
  for (std::size_t i = 0; i < n_; ++i) out.parts[i] = base_->inverse(x.parts[static_cast<std::size_t>(x.perm(i))]);
  return out;
}

std::vector<WreathElement> WreathGroup::generators() const {
  std::vector<WreathElement> gens;
  if (n_ == 0) return gens;
  for (Index s : base_->generators()) {
    WreathElement g = identity();
    g.parts[0] = s;
    gens.push_back(std::move(g));
  }
  if (n_ >= 2) {
    WreathElement t = identity();
    t.perm = Permutation::from_cycles(n_, {{0, 1}});
    gens.push_back(std::move(t));
  }
  if (n_ >= 3) {
    std::vector<std::int32_t> cycle(n_);
    for (std::size_t i = 0; i < n_; ++i) cycle[i] = static_cast<std::int32_t>(i);
    WreathElement c = identity();
    c.perm = Permutation::from_cycles(n_, {cycle});
    gens.push_back(std::move(c));
  }
  return gens;
}

Descriptor WreathGroup::encode(const WreathElement& x) const {
  Descriptor d;
  d.reserve(2 * n_);
  for (Index p : x.parts) d.push_back(static_cast<std::int32_t>(p));
  for (auto v : x.perm.images()) d.push_back(v);
  return d;
}

WreathElement WreathGroup::decode(const Descriptor& d) const {
  if (d.size() != 2 * n_) throw InputError("wreath descriptor has the wrong length");
  WreathElement x;
  x.parts.assign(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(n_));
  x.perm = Permutation(std::vector<std::int32_t>(d.begin() + static_cast<std::ptrdiff_t>(n_), d.end()));
  return x;
}

GroupPtr WreathGroup::enumerate(std::size_t max_order) const {
  if (order() > Integer(static_cast<unsigned long>(max_order)))
    throw ResourceError(label() + " has order " + order().get_str() + ", above the element cap of " +
                        std::to_string(max_order));
  std::vector<Descriptor> gens;
  for (const auto& g : generators()) gens.push_back(encode(g));
  const WreathGroup self = *this;
  return enumerate_closure(
      label(), encode(identity()), gens,
      [self](const Descriptor& a, const Descriptor& b) {
        const std::size_t n = self.n();
        const FiniteGroup& base = *self.base();
        Descriptor r(2 * n);
        // perm part: (s t)(i) = s(t(i)); parts: a_i * b_{s^-1(i)}.
        for (std::size_t i = 0; i < n; ++i) {
          const auto ti = static_cast<std::size_t>(b[n + i]);
          r[n + i] = a[n + ti];
          const auto si = static_cast<std::size_t>(a[n + i]);
          r[si] = static_cast<std::int32_t>(
              base.multiply(static_cast<Index>(a[si]), static_cast<Index>(b[i])));
        }
        return r;
      },
      max_order);
}

Index cycle_product(const FiniteGroup& base, const WreathElement& x, const std::vector<std::int32_t>& cycle) {
  const std::size_t n = x.degree();
  if (cycle.empty()) throw InputError("empty cycle");
  std::vector<bool> seen(n, false);
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    const auto i = cycle[k];
    if (i < 0 || static_cast<std::size_t>(i) >= n || seen[static_cast<std::size_t>(i)])
      throw InputError("cycle points are out of range or repeated");
    seen[static_cast<std::size_t>(i)] = true;
    if (x.perm(static_cast<std::size_t>(i)) != cycle[(k + 1) % cycle.size()])
      throw InputError("not a cycle of the permutation part");
  }
  Index acc = x.parts[static_cast<std::size_t>(cycle[0])];
  for (std::size_t k = 1; k < cycle.size(); ++k) acc = base.multiply(x.parts[static_cast<std::size_t>(cycle[k])], acc);
  return acc;
}

TypeMatrix type_of(const FiniteGroup& base, const WreathElement& x) {
  std::vector<TypeEntry> entries;
  for (const auto& cycle : x.perm.cycles())
    entries.push_back({cycle.size(), base.class_of(cycle_product(base, x, cycle)), 1});
  return TypeMatrix(x.degree(), std::move(entries));
}

bool are_conjugate(const FiniteGroup& base, const WreathElement& x, const WreathElement& y) {
  if (x.degree() != y.degree()) throw InputError("group mismatch: wreath elements of different degree");
  return type_of(base, x) == type_of(base, y);
}

namespace {

void enumerate_types(std::size_t k, std::size_t n, std::size_t part, std::size_t remaining,
                     std::vector<TypeEntry>& current, std::vector<std::vector<TypeEntry>>& out) {
  // parts are (r, c) flattened as r * k + c, consumed in increasing order.
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (std::size_t p = part; p < n * k; ++p) {
    const std::size_t r = p / k + 1;
    if (r > remaining) break;
    for (std::size_t m = 1; m * r <= remaining; ++m) {
      current.push_back({r, p % k, m});
      enumerate_types(k, n, p + 1, remaining - m * r, current, out);
      current.pop_back();
    }
  }
}

}  // namespace

std::vector<WreathClass> classes_by_type(const FiniteGroup& base, std::size_t n) {
  const std::size_t k = base.num_classes();
  std::vector<std::vector<TypeEntry>> raw;
  std::vector<TypeEntry> current;
  enumerate_types(k, n, 0, n, current, raw);
  std::vector<TypeMatrix> types;
  types.reserve(raw.size());
  for (auto& e : raw) types.emplace_back(n, std::move(e));
  std::sort(types.begin(), types.end());

  std::vector<WreathClass> out;
  out.reserve(types.size());
  for (auto& t : types) {
    WreathElement rep{std::vector<Index>(n, base.identity()), Permutation::identity(n)};
    std::vector<std::vector<std::int32_t>> cycles;
    std::size_t next = 0;
    for (const auto& e : t.entries()) {
      for (std::size_t copy = 0; copy < e.multiplicity; ++copy) {
        std::vector<std::int32_t> cycle(e.cycle_length);
        for (std::size_t j = 0; j < e.cycle_length; ++j) cycle[j] = static_cast<std::int32_t>(next + j);
        rep.parts[next] = base.classes().reps[e.class_index];
        cycles.push_back(std::move(cycle));
        next += e.cycle_length;
      }
    }
    rep.perm = Permutation::from_cycles(n, cycles);
    out.push_back({std::move(t), std::move(rep)});
  }
  return out;
}

Integer count_types(std::size_t num_base_classes, std::size_t n) {
  // Knapsack over colored parts (r, c), each usable any number of times.
  std::vector<Integer> ways(n + 1);
  ways[0] = 1;
  for (std::size_t r = 1; r <= n; ++r)
    for (std::size_t c = 0; c < num_base_classes; ++c)
      for (std::size_t s = r; s <= n; ++s) ways[s] += ways[s - r];
  return ways[n];
}

Integer centralizer_order(const FiniteGroup& base, const TypeMatrix& t) {
  Integer z = 1;
  for (const auto& e : t.entries()) {
    if (e.class_index >= base.num_classes()) throw InputError("type refers to a class outside the base group");
    const Integer block(static_cast<unsigned long>(e.cycle_length * base.centralizer_order(base.classes().reps[e.class_index])));
    Integer p;
    mpz_pow_ui(p.get_mpz_t(), block.get_mpz_t(), e.multiplicity);
    z *= p * factorial(e.multiplicity);
  }
  return z;
}

WreathElement embed_pair(const WreathElement& x, const WreathElement& y) {
  const std::size_t n = x.degree();
  const std::size_t m = y.degree();
  WreathElement out;
  out.parts = x.parts;
  out.parts.insert(out.parts.end(), y.parts.begin(), y.parts.end());
  std::vector<std::int32_t> images(n + m);
  for (std::size_t i = 0; i < n; ++i) images[i] = x.perm(i);
  for (std::size_t j = 0; j < m; ++j) images[n + j] = static_cast<std::int32_t>(n) + y.perm(j);
  out.perm = Permutation(std::move(images));
  return out;
}

TypeMatrix fuse_class(const TypeMatrix& left, const TypeMatrix& right) {
  std::vector<TypeEntry> entries = left.entries();
  entries.insert(entries.end(), right.entries().begin(), right.entries().end());
  return TypeMatrix(left.n() + right.n(), std::move(entries));
}

EmbeddedProduct embed_product(const GroupPtr& base, std::size_t n, std::size_t m, std::size_t max_order) {
  const WreathGroup wl(base, n), wr(base, m), wt(base, n + m);
  EmbeddedProduct out;
  out.left = wl.enumerate(max_order);
  out.right = wr.enumerate(max_order);
  out.product = direct_product(out.left, out.right, max_order);
  out.total = wt.enumerate(max_order);
  std::vector<Index> image(out.product.group->size());
  for (std::size_t i = 0; i < out.left->size(); ++i) {
    const WreathElement x = wl.decode(out.left->descriptor(static_cast<Index>(i)));
    for (std::size_t j = 0; j < out.right->size(); ++j) {
      const WreathElement y = wr.decode(out.right->descriptor(static_cast<Index>(j)));
      image[out.product.pair(static_cast<Index>(i), static_cast<Index>(j))] = *out.total->find(wt.encode(embed_pair(x, y)));
    }
  }
  out.embedding = make_homomorphism(out.product.group, out.total, std::move(image));
  if (!is_injective(out.embedding)) throw Error("block embedding is not injective");
  return out;
}

WreathClassTable::WreathClassTable(GroupPtr base, std::size_t n) : base_(std::move(base)), n_(n) {
  const WreathGroup w(base_, n_);
  label_ = w.label();
  order_ = w.order();
  classes_ = classes_by_type(*base_, n_);
  centralizers_.reserve(classes_.size());
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    centralizers_.push_back(centralizer_order(*base_, classes_[c].type));
    index_.emplace(classes_[c].type, c);
  }
}

std::size_t WreathClassTable::index_of(const TypeMatrix& t) const {
  auto c = find(t);
  if (!c) throw InputError("type " + t.to_string() + " is not a class of " + label_);
  return *c;
}

std::optional<std::size_t> WreathClassTable::find(const TypeMatrix& t) const {
  auto it = index_.find(t);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace wreathfock
