#pragma once

#include <algorithm>
#include <cctype>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "csudoku/error.hpp"

namespace csudoku {

/// Permutations act on points 0..degree-1 and compose left to right:
/// (g * h) sends i to h(g(i)). Text I/O uses 1-based cycle notation.
class Permutation {
public:
  static constexpr int max_degree = 64;

  /// Identity permutation on `degree` points.
  explicit Permutation(int degree) : images_(check_degree(degree)) {
    std::iota(images_.begin(), images_.end(), 0);
  }

  /// Wraps an image vector; must be a bijection of 0..n-1.
  static Permutation from_images(std::vector<int> images) {
    check_degree(static_cast<int>(images.size()));
    std::vector<char> seen(images.size(), 0);
    for (int v : images) {
      if (v < 0 || v >= static_cast<int>(images.size()) || seen[v])
        throw validation_error("image vector is not a bijection");
      seen[v] = 1;
    }
    return Permutation(std::move(images), 0);
  }

  int degree() const { return static_cast<int>(images_.size()); }
  int apply(int point) const { return images_[point]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  /// this applied first, then h.
  Permutation then(const Permutation& h) const {
    if (degree() != h.degree())
      throw validation_error("degree mismatch: " + std::to_string(degree()) +
                             " vs " + std::to_string(h.degree()));
    std::vector<int> r(images_.size());
    for (int i = 0; i < degree(); ++i) r[i] = h.images_[images_[i]];
    return Permutation(std::move(r), 0);
  }

  Permutation inverse() const {
    std::vector<int> r(images_.size());
    for (int i = 0; i < degree(); ++i) r[images_[i]] = i;
    return Permutation(std::move(r), 0);
  }

  bool is_even() const {
    // parity = (moved points - cycles over moved points) mod 2
    std::vector<char> seen(images_.size(), 0);
    int swaps = 0;
    for (int i = 0; i < degree(); ++i) {
      if (seen[i] || images_[i] == i) continue;
      int len = 0;
      for (int j = i; !seen[j]; j = images_[j]) {
        seen[j] = 1;
        ++len;
      }
      swaps += len - 1;
    }
    return swaps % 2 == 0;
  }

  /// Canonical cycle notation, 1-based, fixed points omitted, identity "(1)".
  /// Degrees above 9 separate points with commas.
  std::string cycle_string() const {
    const bool commas = degree() > 9;
    std::string out;
    std::vector<char> seen(images_.size(), 0);
    for (int i = 0; i < degree(); ++i) {
      if (seen[i] || images_[i] == i) continue;
      out += '(';
      bool first = true;
      for (int j = i; !seen[j]; j = images_[j]) {
        seen[j] = 1;
        if (!first && commas) out += ',';
        first = false;
        out += std::to_string(j + 1);
      }
      out += ')';
    }
    if (out.empty()) out = "(1)";
    return out;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.images_ == b.images_;
  }
  friend bool operator!=(const Permutation& a, const Permutation& b) {
    return !(a == b);
  }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.images_ < b.images_;
  }

private:
  Permutation(std::vector<int> images, int) : images_(std::move(images)) {}

  static int check_degree(int degree) {
    if (degree < 1)
      throw validation_error("permutation degree must be at least 1");
    if (degree > max_degree)
      throw validation_error("permutation degree " + std::to_string(degree) +
                             " exceeds the supported maximum " +
                             std::to_string(max_degree));
    return degree;
  }

  std::vector<int> images_;
};

/// Left-to-right composition: apply g first, then h.
inline Permutation compose(const Permutation& g, const Permutation& h) {
  return g.then(h);
}

/// Parses whitespace-insensitive cycle notation with 1-based points,
/// e.g. "(1,4)(2,5,3,6)" or "(14)(2536)". "()" and "(1)" denote the identity.
/// Cycles without commas are read one digit per point.
inline Permutation parse_cycles(std::string_view text, int degree) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  if (degree < 1 || degree > Permutation::max_degree)
    throw validation_error("unsupported degree " + std::to_string(degree));

  std::vector<char> used(static_cast<std::size_t>(degree), 0);
  std::size_t i = 0;
  const auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };

  const auto take_point = [&](int value, std::size_t at) {
    if (value < 1 || value > degree)
      throw parse_error("point " + std::to_string(value) +
                            " outside 1.." + std::to_string(degree),
                        at);
    if (used[value - 1])
      throw parse_error("point " + std::to_string(value) + " repeated", at);
    used[value - 1] = 1;
    return value - 1;
  };

  skip_ws();
  if (i == text.size()) throw parse_error("empty cycle expression", i);

  bool saw_cycle = false;
  while (i < text.size()) {
    if (text[i] != '(')
      throw parse_error(std::string("expected '(' but found '") + text[i] + "'", i);
    const std::size_t open = i++;
    skip_ws();

    std::vector<int> cycle;
    bool comma_form = text.find(',', i) != std::string_view::npos &&
                      text.find(',', i) < text.find(')', i);
    while (i < text.size() && text[i] != ')') {
      if (comma_form) {
        if (!cycle.empty()) {
          if (text[i] != ',')
            throw parse_error("expected ',' between points", i);
          ++i;
          skip_ws();
        }
        std::size_t start = i;
        int value = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
          value = value * 10 + (text[i++] - '0');
        if (i == start) throw parse_error("expected a point", i);
        cycle.push_back(take_point(value, start));
      } else {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
          throw parse_error(std::string("unexpected character '") + text[i] + "'", i);
        cycle.push_back(take_point(text[i] - '0', i));
        ++i;
      }
      skip_ws();
    }
    if (i == text.size()) throw parse_error("unclosed '('", open);
    ++i; // ')'

    for (std::size_t k = 0; k < cycle.size(); ++k)
      images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    saw_cycle = true;
    skip_ws();
  }
  if (!saw_cycle) throw parse_error("no cycles found", 0);

  return Permutation::from_images(std::move(images));
}

/// The subgroup generated by `generators`, as an explicit sorted element set.
/// Breadth-first closure under composition and inversion; aborts with a
/// resource error once more than `cap` elements have been found.
inline std::vector<Permutation>
generate_closure(const std::vector<Permutation>& generators,
                 std::size_t cap = 1'000'000) {
  if (generators.empty())
    throw validation_error("closure requires at least one generator");
  const int degree = generators.front().degree();
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw validation_error("generators have mixed degrees");

  std::vector<Permutation> gens = generators;
  for (const auto& g : generators) gens.push_back(g.inverse());

  std::vector<Permutation> elements{Permutation(degree)};
  std::vector<std::vector<int>> seen_sorted{elements.front().images()};
  std::sort(seen_sorted.begin(), seen_sorted.end());

  const auto known = [&](const std::vector<int>& imgs) {
    return std::binary_search(seen_sorted.begin(), seen_sorted.end(), imgs);
  };

  std::size_t frontier_begin = 0;
  while (frontier_begin < elements.size()) {
    const std::size_t frontier_end = elements.size();
    for (std::size_t e = frontier_begin; e < frontier_end; ++e) {
      for (const auto& g : gens) {
        Permutation next = elements[e].then(g);
        if (known(next.images())) continue;
        seen_sorted.insert(std::lower_bound(seen_sorted.begin(),
                                            seen_sorted.end(), next.images()),
                           next.images());
        elements.push_back(std::move(next));
        if (elements.size() > cap)
          throw resource_error("closure exceeded the cap of " +
                               std::to_string(cap) + " elements");
      }
    }
    frontier_begin = frontier_end;
  }

  std::sort(elements.begin(), elements.end());
  return elements;
}

} // namespace csudoku
