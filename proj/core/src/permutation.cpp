#include "rnlab/permutation.hpp"

#include <sstream>
#include <stdexcept>

#include "rnlab/errors.hpp"

namespace rnlab {

Permutation Permutation::identity(int degree) {
  if (degree < 1) throw std::invalid_argument("permutation degree must be positive");
  std::vector<int> images(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) images[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<int> images) {
  const auto d = images.size();
  if (d == 0) throw std::invalid_argument("permutation degree must be positive");
  std::vector<bool> seen(d, false);
  for (int x : images) {
    if (x < 1 || static_cast<std::size_t>(x) > d || seen[static_cast<std::size_t>(x - 1)]) {
      throw std::invalid_argument("image list is not a bijection of {1,...," + std::to_string(d) + "}");
    }
    seen[static_cast<std::size_t>(x - 1)] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(int degree, std::initializer_list<std::vector<int>> cycles) {
  return from_cycles(degree, std::vector<std::vector<int>>(cycles));
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Permutation result = identity(degree);
  for (const auto& cycle : cycles) {
    std::vector<int> images = identity(degree).images_;
    std::vector<bool> used(static_cast<std::size_t>(degree), false);
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int x = cycle[k];
      if (x < 1 || x > degree) throw LetterError("cycle letter " + std::to_string(x) + " out of range");
      if (used[static_cast<std::size_t>(x - 1)]) throw std::invalid_argument("repeated letter in cycle");
      used[static_cast<std::size_t>(x - 1)] = true;
      images[static_cast<std::size_t>(x - 1)] = cycle[(k + 1) % cycle.size()];
    }
    result = compose(result, Permutation(std::move(images)));
  }
  return result;
}

int Permutation::operator()(int letter) const {
  if (letter < 1 || letter > degree()) {
    throw LetterError("letter " + std::to_string(letter) + " outside {1,...," + std::to_string(degree()) + "}");
  }
  return images_[static_cast<std::size_t>(letter - 1)];
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
  }
  return Permutation(std::move(inv));
}

Permutation Permutation::extended(int new_degree) const {
  if (new_degree < degree()) throw DegreeError("cannot shrink a permutation");
  std::vector<int> images = images_;
  for (int i = degree(); i < new_degree; ++i) images.push_back(i + 1);
  return Permutation(std::move(images));
}

Permutation Permutation::pow(long long k) const {
  Permutation base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1 : static_cast<unsigned long long>(k);
  Permutation result = identity(degree());
  while (e != 0) {
    if (e & 1U) result = compose(result, base);
    base = compose(base, base);
    e >>= 1U;
  }
  return result;
}

std::string Permutation::cycle_string() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == static_cast<int>(start) + 1) continue;
    any = true;
    out << '(';
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out << ' ';
      out << x + 1;
      first = false;
      x = static_cast<std::size_t>(images_[x] - 1);
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw DegreeError("cannot compose permutations of degree " + std::to_string(p.degree()) + " and " +
                      std::to_string(q.degree()));
  }
  std::vector<int> images(q.images().size());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = p.images()[static_cast<std::size_t>(q.images()[i] - 1)];
  return Permutation::from_images(std::move(images));
}

}  // namespace rnlab
