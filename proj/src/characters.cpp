#include "wreathfock/characters.hpp"

#include <algorithm>

#include "wreathfock/errors.hpp"
#include "wreathfock/linalg.hpp"

namespace wreathfock {

namespace {

using Basis = std::vector<std::vector<Rational>>;

// Vectors of span(basis) that lie in ker(a - lambda).
Basis eigen_subspace(const RationalMatrix& a, const Rational& lambda, const Basis& basis) {
  const std::size_t k = a.rows();
  RationalMatrix restricted(k, basis.size());
  for (std::size_t b = 0; b < basis.size(); ++b) {
    std::vector<Rational> v = a.apply(basis[b]);
    for (std::size_t i = 0; i < k; ++i) restricted(i, b) = v[i] - lambda * basis[b][i];
  }
  Basis out;
  for (const auto& coeffs : kernel_basis(restricted)) {
    std::vector<Rational> v(k);
    for (std::size_t b = 0; b < basis.size(); ++b)
      if (coeffs[b] != 0)
        for (std::size_t i = 0; i < k; ++i) v[i] += coeffs[b] * basis[b][i];
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::vector<ClassFunction> rational_irreducible_characters(const GroupPtr& g) {
  const auto& cc = g->classes();
  const std::size_t k = cc.count();

  // a[i][j][l] = #{x in C_i : x^-1 g_l in C_j}; A_i w = w_i w for central characters w.
  std::vector<RationalMatrix> mult(k, RationalMatrix(k, k));
  for (std::size_t x = 0; x < g->size(); ++x) {
    const auto xi = static_cast<Index>(x);
    const std::size_t i = cc.class_of[x];
    for (std::size_t l = 0; l < k; ++l) {
      const std::size_t j = g->class_of(g->multiply(g->inverse(xi), cc.reps[l]));
      mult[i](j, l) += 1;
    }
  }

  std::vector<Basis> spaces;
  {
    Basis full;
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<Rational> e(k);
      e[i] = 1;
      full.push_back(std::move(e));
    }
    spaces.push_back(std::move(full));
  }
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Basis> next;
    const long bound = static_cast<long>(cc.sizes[i]);
    for (auto& space : spaces) {
      if (space.size() == 1) {
        next.push_back(std::move(space));
        continue;
      }
      std::size_t found = 0;
      for (long lambda = -bound; lambda <= bound && found < space.size(); ++lambda) {
        Basis sub = eigen_subspace(mult[i], Rational(lambda), space);
        if (sub.empty()) continue;
        found += sub.size();
        next.push_back(std::move(sub));
      }
      if (found != space.size()) throw InputError(g->label() + " has characters that are not rational");
    }
    spaces = std::move(next);
  }

  std::vector<ClassFunction> chars;
  for (const auto& space : spaces) {
    if (space.size() != 1) throw InputError("class multiplication matrices do not separate characters");
    std::vector<Rational> w = space.front();
    const std::size_t id_class = g->class_of(g->identity());
    if (w[id_class] == 0) throw Error("central character vanishes at the identity");
    const Rational scale = 1 / w[id_class];
    for (auto& v : w) v *= scale;
    Rational norm = 0;
    for (std::size_t j = 0; j < k; ++j) norm += w[j] * w[j] / Rational(static_cast<unsigned long>(cc.sizes[j]));
    const Rational degree_sq = Rational(static_cast<unsigned long>(g->size())) / norm;
    if (degree_sq.get_den() != 1 || !mpz_perfect_square_p(degree_sq.get_num().get_mpz_t()))
      throw InputError(g->label() + " has characters that are not rational");
    Integer degree;
    mpz_sqrt(degree.get_mpz_t(), degree_sq.get_num().get_mpz_t());
    std::vector<Rational> values(k);
    for (std::size_t j = 0; j < k; ++j) values[j] = Rational(degree) * w[j] / Rational(static_cast<unsigned long>(cc.sizes[j]));
    for (const auto& v : values)
      if (v.get_den() != 1) throw InputError(g->label() + " has characters that are not rational");
    chars.emplace_back(g, std::move(values));
  }
  const std::size_t id_class = g->class_of(g->identity());
  std::sort(chars.begin(), chars.end(), [id_class](const ClassFunction& a, const ClassFunction& b) {
    if (a[id_class] != b[id_class]) return a[id_class] < b[id_class];
    return std::lexicographical_compare(a.values().begin(), a.values().end(), b.values().begin(), b.values().end(),
                                        [](const Rational& x, const Rational& y) { return x > y; });
  });
  return chars;
}

}  // namespace wreathfock
