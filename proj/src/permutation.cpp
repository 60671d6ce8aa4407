#include "critmin/permutation.hpp"

#include <algorithm>
#include <functional>

namespace critmin {

Permutation Permutation::identity(std::size_t degree) {
  Permutation p;
  p.images_.resize(degree);
  for (std::size_t i = 0; i < degree; ++i) p.images_[i] = static_cast<int>(i);
  return p;
}

Permutation::Permutation(std::vector<int> images)
    : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  std::vector<bool> seen(images_.size(), false);
  for (int image : images_) {
    if (image < 0 || image >= n || seen[static_cast<std::size_t>(image)])
      raise(errc::malformed_permutation,
            "image array is not a bijection of {0, ..., d-1}");
    seen[static_cast<std::size_t>(image)] = true;
  }
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    p.images_[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

std::vector<long long> Permutation::cycle_lengths() const {
  std::vector<long long> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    long long length = 0;
    std::size_t i = start;
    while (!seen[i]) {
      seen[i] = true;
      ++length;
      i = static_cast<std::size_t>(images_[i]);
    }
    lengths.push_back(length);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<long long>());
  return lengths;
}

std::size_t Permutation::cycle_count() const noexcept {
  std::size_t count = 0;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    ++count;
    std::size_t i = start;
    while (!seen[i]) {
      seen[i] = true;
      i = static_cast<std::size_t>(images_[i]);
    }
  }
  return count;
}

long long Permutation::single_cycle_order() const noexcept {
  long long order = 0;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    long long length = 0;
    std::size_t i = start;
    while (!seen[i]) {
      seen[i] = true;
      ++length;
      i = static_cast<std::size_t>(images_[i]);
    }
    if (length >= 2) {
      if (order != 0) return 0;  // second nontrivial cycle
      order = length;
    }
  }
  return order;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  Permutation r;
  r.images_.resize(p.images_.size());
  for (std::size_t i = 0; i < p.images_.size(); ++i)
    r.images_[i] = q.images_[static_cast<std::size_t>(p.images_[i])];
  return r;
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return a * b * a.inverse() * b.inverse();
}

Permutation conjugate(const Permutation& p, const Permutation& c) {
  return c.inverse() * p * c;
}

bool transitive(std::span<const Permutation> generators, std::size_t degree) {
  if (degree <= 1) return true;
  if (generators.empty()) return false;
  std::vector<bool> reached(degree, false);
  std::vector<int> stack{0};
  reached[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (const Permutation& g : generators) {
      int j = g(i);
      if (!reached[static_cast<std::size_t>(j)]) {
        reached[static_cast<std::size_t>(j)] = true;
        ++count;
        stack.push_back(j);
      }
    }
  }
  return count == degree;
}

}  // namespace critmin
