#include "wreathfock/permutation.hpp"

#include <numeric>

#include "wreathfock/errors.hpp"

namespace wreathfock {

Permutation::Permutation(std::vector<std::int32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto v : images_) {
    if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[static_cast<std::size_t>(v)])
      throw InputError("permutation images are not a bijection");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::int32_t> images(degree);
  std::iota(images.begin(), images.end(), 0);
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree, const std::vector<std::vector<std::int32_t>>& cycles) {
  std::vector<std::int32_t> images(degree);
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const auto a = cycle[k];
      if (a < 0 || static_cast<std::size_t>(a) >= degree || used[static_cast<std::size_t>(a)])
        throw InputError("cycles are not disjoint or leave the point range");
      used[static_cast<std::size_t>(a)] = true;
      images[static_cast<std::size_t>(a)] = cycle[(k + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<std::int32_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i])] = static_cast<std::int32_t>(i);
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<std::int32_t>(i)) return false;
  return true;
}

std::vector<std::vector<std::int32_t>> Permutation::cycles() const {
  std::vector<std::vector<std::int32_t>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::vector<std::int32_t> cycle;
    for (auto i = static_cast<std::int32_t>(start); !seen[static_cast<std::size_t>(i)]; i = images_[static_cast<std::size_t>(i)]) {
      seen[static_cast<std::size_t>(i)] = true;
      cycle.push_back(i);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_cycle_string() const {
  std::string s;
  for (const auto& cycle : cycles()) {
    if (cycle.size() == 1) continue;
    s += '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k) s += ' ';
      s += std::to_string(cycle[k]);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw InputError("composing permutations of different degree");
  Permutation r;
  r.images_.resize(p.degree());
  for (std::size_t i = 0; i < p.degree(); ++i) r.images_[i] = p.images_[static_cast<std::size_t>(q.images_[i])];
  return r;
}

}  // namespace wreathfock
