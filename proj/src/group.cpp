#include "wreathfock/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>
#include <string>

#include "wreathfock/errors.hpp"

namespace wreathfock {

namespace {

constexpr Index kUnset = std::numeric_limits<Index>::max();
constexpr std::size_t kExhaustivePairCheckMaxOrder = 5000;

std::vector<Index> closure_of(const FiniteGroup& g, const std::vector<Index>& gens) {
  std::vector<bool> seen(g.size(), false);
  std::vector<Index> out{g.identity()};
  seen[g.identity()] = true;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (Index s : gens) {
      const Index y = g.multiply(out[head], s);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  }
  return out;
}

}  // namespace

std::size_t DescriptorHash::operator()(const Descriptor& d) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto v : d) {
    h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(v));
    h *= 1099511628211ull;
  }
  return h;
}

std::size_t default_max_order() {
  static const std::size_t cap = [] {
    if (const char* env = std::getenv("WREATHFOCK_MAX_ORDER")) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return kDefaultMaxOrder;
  }();
  return cap;
}

GroupPtr FiniteGroup::make(std::string label, std::vector<Descriptor> descriptors, IndexMul mul,
                           std::vector<Index> generators) {
  if (descriptors.empty()) throw InputError("a group needs at least the identity");
  std::shared_ptr<FiniteGroup> g(new FiniteGroup());
  g->label_ = std::move(label);
  g->descriptors_ = std::move(descriptors);
  g->mul_ = std::move(mul);
  g->generators_ = std::move(generators);
  g->finish();
  return g;
}

void FiniteGroup::finish() {
  const std::size_t n = descriptors_.size();
  index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!index_.emplace(descriptors_[i], static_cast<Index>(i)).second)
      throw InputError("duplicate element descriptor in group '" + label_ + "'");
  }
  if (n <= kCayleyTableMaxOrder) {
    std::vector<Index> table(n * n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) table[x * n + y] = mul_(*this, static_cast<Index>(x), static_cast<Index>(y));
    table_ = std::move(table);
  }
  inverse_.assign(n, identity());
  for (std::size_t x = 1; x < n; ++x) {
    const auto xi = static_cast<Index>(x);
    Index prev = identity();
    Index p = xi;
    std::size_t steps = 0;
    while (p != identity()) {
      prev = p;
      p = multiply(p, xi);
      if (++steps > n) throw InputError("element of infinite order in '" + label_ + "'");
    }
    inverse_[x] = prev;
  }
  classes_ = compute_conjugacy_classes(*this);
}

Index FiniteGroup::power(Index x, std::size_t k) const {
  Index acc = identity();
  Index base = x;
  while (k) {
    if (k & 1U) acc = multiply(acc, base);
    base = multiply(base, base);
    k >>= 1U;
  }
  return acc;
}

std::size_t FiniteGroup::element_order(Index x) const {
  std::size_t k = 1;
  for (Index p = x; p != identity(); p = multiply(p, x)) ++k;
  return k;
}

std::optional<Index> FiniteGroup::find(const Descriptor& d) const {
  auto it = index_.find(d);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

GroupPtr enumerate_closure(std::string label, Descriptor identity, const std::vector<Descriptor>& generators,
                           std::function<Descriptor(const Descriptor&, const Descriptor&)> mul,
                           std::size_t max_order) {
  std::vector<Descriptor> elements{identity};
  std::unordered_map<Descriptor, Index, DescriptorHash> seen{{std::move(identity), 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& s : generators) {
      Descriptor y = mul(elements[head], s);
      if (seen.contains(y)) continue;
      if (elements.size() >= max_order)
        throw ResourceError("group '" + label + "' exceeds the element cap of " + std::to_string(max_order));
      seen.emplace(y, static_cast<Index>(elements.size()));
      elements.push_back(std::move(y));
    }
  }
  std::vector<Index> gen_indices;
  gen_indices.reserve(generators.size());
  for (const auto& s : generators) gen_indices.push_back(seen.at(s));

  auto index_mul = [mul = std::move(mul)](const FiniteGroup& self, Index x, Index y) {
    auto r = self.find(mul(self.descriptor(x), self.descriptor(y)));
    if (!r) throw Error("closure is not closed under multiplication");
    return *r;
  };
  return FiniteGroup::make(std::move(label), std::move(elements), std::move(index_mul), std::move(gen_indices));
}

GroupPtr group_from_permutation_generators(std::size_t degree, const std::vector<Permutation>& generators,
                                           std::string label, std::size_t max_order) {
  std::vector<Descriptor> gens;
  for (const auto& p : generators) {
    if (p.degree() != degree) throw InputError("generator degree differs from the group degree");
    gens.push_back(p.images());
  }
  return enumerate_closure(
      std::move(label), Permutation::identity(degree).images(), gens,
      [](const Descriptor& a, const Descriptor& b) {
        Descriptor r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[static_cast<std::size_t>(b[i])];
        return r;
      },
      max_order);
}

ConjugacyClasses compute_conjugacy_classes(const FiniteGroup& g) {
  ConjugacyClasses cc;
  cc.class_of.assign(g.size(), kUnset);
  std::vector<Index> orbit;
  for (std::size_t start = 0; start < g.size(); ++start) {
    if (cc.class_of[start] != kUnset) continue;
    const auto id = static_cast<Index>(cc.reps.size());
    orbit.assign(1, static_cast<Index>(start));
    cc.class_of[start] = id;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (Index s : g.generators()) {
        const Index z = g.conjugate(s, orbit[head]);
        if (cc.class_of[z] == kUnset) {
          cc.class_of[z] = id;
          orbit.push_back(z);
        }
      }
    }
    cc.reps.push_back(static_cast<Index>(start));
    cc.sizes.push_back(orbit.size());
  }
  return cc;
}

std::vector<Index> centralizer(const FiniteGroup& g, Index x) {
  std::vector<Index> out;
  for (std::size_t s = 0; s < g.size(); ++s) {
    const auto si = static_cast<Index>(s);
    if (g.multiply(si, x) == g.multiply(x, si)) out.push_back(si);
  }
  return out;
}

bool verify_group_axioms(const FiniteGroup& g) {
  const Index e = g.identity();
  for (std::size_t x = 0; x < g.size(); ++x) {
    const auto xi = static_cast<Index>(x);
    if (g.multiply(e, xi) != xi || g.multiply(xi, e) != xi) return false;
    if (g.multiply(xi, g.inverse(xi)) != e || g.multiply(g.inverse(xi), xi) != e) return false;
  }
  if (closure_of(g, g.generators()).size() != g.size()) return false;
  for (std::size_t x = 0; x < g.size(); ++x)
    for (std::size_t y = 0; y < g.size(); ++y) {
      const Index xy = g.multiply(static_cast<Index>(x), static_cast<Index>(y));
      for (Index s : g.generators())
        if (g.multiply(xy, s) != g.multiply(static_cast<Index>(x), g.multiply(static_cast<Index>(y), s))) return false;
    }
  return true;
}

void verify_homomorphism(const Homomorphism& f) {
  const FiniteGroup& d = *f.dom;
  const FiniteGroup& c = *f.cod;
  if (f.image.size() != d.size()) throw InputError("homomorphism map is not total");
  for (Index v : f.image)
    if (v >= c.size()) throw InputError("homomorphism image out of range");
  if (f.image[d.identity()] != c.identity()) throw InputError("not a homomorphism: identity not preserved");
  auto check = [&](Index x, Index y) {
    if (f.image[d.multiply(x, y)] != c.multiply(f.image[x], f.image[y]))
      throw InputError("not a homomorphism: " + d.label() + " -> " + c.label());
  };
  if (d.size() <= kExhaustivePairCheckMaxOrder) {
    for (std::size_t x = 0; x < d.size(); ++x)
      for (std::size_t y = 0; y < d.size(); ++y) check(static_cast<Index>(x), static_cast<Index>(y));
  } else {
    for (std::size_t x = 0; x < d.size(); ++x)
      for (Index s : d.generators()) check(static_cast<Index>(x), s);
  }
}

Homomorphism make_homomorphism(GroupPtr dom, GroupPtr cod, std::vector<Index> image) {
  Homomorphism f{std::move(dom), std::move(cod), std::move(image)};
  verify_homomorphism(f);
  return f;
}

Homomorphism identity_homomorphism(const GroupPtr& g) {
  std::vector<Index> image(g->size());
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = static_cast<Index>(i);
  return Homomorphism{g, g, std::move(image)};
}

Homomorphism compose(const Homomorphism& g, const Homomorphism& f) {
  if (f.cod != g.dom) throw InputError("composing homomorphisms with mismatched groups");
  std::vector<Index> image(f.dom->size());
  for (std::size_t x = 0; x < image.size(); ++x) image[x] = g.image[f.image[x]];
  return Homomorphism{f.dom, g.cod, std::move(image)};
}

Homomorphism hom_from_generator_images(const GroupPtr& dom, const std::vector<Index>& dom_gens, const GroupPtr& cod,
                                       const std::vector<Index>& images) {
  if (dom_gens.size() != images.size()) throw InputError("generator and image lists differ in length");
  for (Index s : dom_gens)
    if (s >= dom->size()) throw InputError("generator index out of range");
  for (Index v : images)
    if (v >= cod->size()) throw InputError("generator image out of range");
  std::vector<Index> image(dom->size(), kUnset);
  image[dom->identity()] = cod->identity();
  std::vector<Index> queue{dom->identity()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Index x = queue[head];
    for (std::size_t k = 0; k < dom_gens.size(); ++k) {
      const Index y = dom->multiply(x, dom_gens[k]);
      const Index v = cod->multiply(image[x], images[k]);
      if (image[y] == kUnset) {
        image[y] = v;
        queue.push_back(y);
      } else if (image[y] != v) {
        throw InputError("not a homomorphism: generator images are inconsistent");
      }
    }
  }
  if (queue.size() != dom->size()) throw InputError("generators do not generate " + dom->label());
  return make_homomorphism(dom, cod, std::move(image));
}

bool is_surjective(const Homomorphism& f) {
  std::vector<bool> hit(f.cod->size(), false);
  std::size_t count = 0;
  for (Index v : f.image)
    if (!hit[v]) {
      hit[v] = true;
      ++count;
    }
  return count == f.cod->size();
}

bool is_injective(const Homomorphism& f) {
  return kernel(f).size() == 1;
}

std::vector<Index> kernel(const Homomorphism& f) {
  std::vector<Index> out;
  for (std::size_t x = 0; x < f.image.size(); ++x)
    if (f.image[x] == f.cod->identity()) out.push_back(static_cast<Index>(x));
  return out;
}

std::vector<std::int64_t> preimage_table(const Homomorphism& f) {
  std::vector<std::int64_t> pre(f.cod->size(), -1);
  for (std::size_t x = 0; x < f.image.size(); ++x) {
    if (pre[f.image[x]] != -1) throw InputError("map is not injective");
    pre[f.image[x]] = static_cast<std::int64_t>(x);
  }
  return pre;
}

Index DirectProduct::pair(Index g, Index h) const {
  return static_cast<Index>(static_cast<std::size_t>(g) * incl_second.dom->size() + h);
}

DirectProduct direct_product(const GroupPtr& g, const GroupPtr& h, std::size_t max_order) {
  const std::size_t ng = g->size();
  const std::size_t nh = h->size();
  if (ng * nh > max_order)
    throw ResourceError("direct product " + g->label() + "x" + h->label() + " exceeds the element cap of " +
                        std::to_string(max_order));
  std::vector<Descriptor> elements;
  elements.reserve(ng * nh);
  for (std::size_t a = 0; a < ng; ++a)
    for (std::size_t b = 0; b < nh; ++b)
      elements.push_back({static_cast<std::int32_t>(a), static_cast<std::int32_t>(b)});
  std::vector<Index> gens;
  for (Index s : g->generators()) gens.push_back(static_cast<Index>(static_cast<std::size_t>(s) * nh));
  for (Index s : h->generators()) gens.push_back(s);
  auto mul = [g, h, nh](const FiniteGroup&, Index x, Index y) {
    const Index a = g->multiply(static_cast<Index>(x / nh), static_cast<Index>(y / nh));
    const Index b = h->multiply(static_cast<Index>(x % nh), static_cast<Index>(y % nh));
    return static_cast<Index>(static_cast<std::size_t>(a) * nh + b);
  };
  GroupPtr prod = FiniteGroup::make(g->label() + "x" + h->label(), std::move(elements), mul, std::move(gens));

  std::vector<Index> pg(ng * nh), ph(ng * nh), ig(ng), ih(nh);
  for (std::size_t x = 0; x < ng * nh; ++x) {
    pg[x] = static_cast<Index>(x / nh);
    ph[x] = static_cast<Index>(x % nh);
  }
  for (std::size_t a = 0; a < ng; ++a) ig[a] = static_cast<Index>(a * nh);
  for (std::size_t b = 0; b < nh; ++b) ih[b] = static_cast<Index>(b);
  return DirectProduct{prod, Homomorphism{prod, g, std::move(pg)}, Homomorphism{prod, h, std::move(ph)},
                       Homomorphism{g, prod, std::move(ig)}, Homomorphism{h, prod, std::move(ih)}};
}

Subgroup subgroup(const GroupPtr& ambient, std::vector<Index> members, std::string label) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty() || members.front() != ambient->identity()) throw InputError("not a subgroup: identity missing");
  if (members.back() >= ambient->size()) throw InputError("subgroup member out of range");
  std::vector<std::int64_t> local(ambient->size(), -1);
  for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<std::int64_t>(i);
  for (Index x : members) {
    if (local[ambient->inverse(x)] < 0) throw InputError("not a subgroup: not closed under inverses");
    for (Index y : members)
      if (local[ambient->multiply(x, y)] < 0) throw InputError("not a subgroup: not closed under products");
  }

  // Greedy generating set in ascending ambient order.
  std::vector<Index> gens;
  std::vector<bool> covered(ambient->size(), false);
  covered[ambient->identity()] = true;
  for (Index x : members) {
    if (covered[x]) continue;
    gens.push_back(x);
    for (Index y : closure_of(*ambient, gens)) covered[y] = true;
  }

  std::vector<Descriptor> elements;
  elements.reserve(members.size());
  for (Index x : members) elements.push_back(ambient->descriptor(x));
  std::vector<Index> local_gens;
  for (Index x : gens) local_gens.push_back(static_cast<Index>(local[x]));

  auto shared_members = std::make_shared<const std::vector<Index>>(members);
  auto shared_local = std::make_shared<const std::vector<std::int64_t>>(std::move(local));
  auto mul = [ambient, shared_members, shared_local](const FiniteGroup&, Index x, Index y) {
    return static_cast<Index>((*shared_local)[ambient->multiply((*shared_members)[x], (*shared_members)[y])]);
  };
  if (label.empty()) label = "sub(" + ambient->label() + ")";
  GroupPtr sub = FiniteGroup::make(std::move(label), std::move(elements), mul, std::move(local_gens));
  return Subgroup{sub, Homomorphism{sub, ambient, std::move(members)}};
}

Subgroup image_subgroup(const Homomorphism& f, std::string label) {
  if (!is_injective(f)) throw InputError("image_subgroup needs an injective map");
  return subgroup(f.cod, f.image, std::move(label));
}

}  // namespace wreathfock
