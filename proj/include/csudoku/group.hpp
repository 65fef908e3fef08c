#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "csudoku/error.hpp"
#include "csudoku/perm.hpp"

namespace csudoku {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

enum class Side { left, right };

inline const char* side_name(Side s) { return s == Side::left ? "left" : "right"; }

/// Largest group order the library materializes. Everything here stores the
/// full operation table, so this bound keeps memory at desk scale.
inline constexpr int max_group_order = 10'000;

/// A finite group over canonical element indices 0..order-1 with an explicit
/// operation table. Immutable once created and safe to share.
///
/// When the group is concretely a permutation group, `perm(i)` gives the
/// element's permutation and the table mirrors left-to-right composition.
class FiniteGroup : public std::enable_shared_from_this<FiniteGroup> {
public:
  /// Validates and wraps an operation table. Checks: label uniqueness, the
  /// Latin-square property of rows and columns, existence of a two-sided
  /// identity and two-sided inverses, and associativity (all triples for
  /// order <= 128 or with `strict`, a deterministic 10^4 sample above).
  static GroupPtr create(std::vector<std::string> labels, std::vector<int> op,
                         std::optional<std::vector<Permutation>> perms = std::nullopt,
                         bool strict = false) {
    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->labels_ = std::move(labels);
    g->op_ = std::move(op);
    g->perms_ = std::move(perms);
    g->validate(strict);
    return g;
  }

  int order() const { return static_cast<int>(labels_.size()); }
  int op(int a, int b) const { return op_[static_cast<std::size_t>(a) * labels_.size() + b]; }
  int identity() const { return identity_; }
  int inverse(int a) const { return inverse_[a]; }
  const std::string& label(int a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool has_perms() const { return perms_.has_value(); }
  const Permutation& perm(int a) const {
    require_perms();
    return (*perms_)[a];
  }
  int degree() const {
    require_perms();
    return perms_->front().degree();
  }

  std::optional<int> index_of_label(const std::string& label) const {
    auto it = label_index_.find(label);
    if (it == label_index_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<int> index_of_perm(const Permutation& p) const {
    require_perms();
    auto it = perm_index_.find(p.images());
    if (it == perm_index_.end()) return std::nullopt;
    return it->second;
  }

  int element_order(int a) const {
    int x = a, n = 1;
    while (x != identity_) {
      x = op(x, a);
      ++n;
    }
    return n;
  }

  int power(int a, int e) const {
    int r = identity_;
    for (int i = 0; i < e; ++i) r = op(r, a);
    return r;
  }

  /// a^g = g^-1 a g
  int conjugate(int a, int g) const { return op(op(inverse(g), a), g); }

private:
  FiniteGroup() = default;

  void require_perms() const {
    if (!perms_)
      throw validation_error("group is not represented by permutations");
  }

  void validate(bool strict) {
    const int n = order();
    if (n < 1) throw validation_error("group must have at least one element");
    if (n > max_group_order)
      throw resource_error("group order " + std::to_string(n) +
                           " exceeds the supported maximum " +
                           std::to_string(max_group_order));
    if (op_.size() != static_cast<std::size_t>(n) * n)
      throw validation_error("operation table has the wrong shape");

    for (int i = 0; i < n; ++i) {
      if (!label_index_.emplace(labels_[i], i).second)
        throw validation_error("duplicate element label \"" + labels_[i] + "\"");
    }

    for (int v : op_)
      if (v < 0 || v >= n)
        throw validation_error("operation table entry out of range");

    // Latin square: every row and column is a bijection.
    std::vector<char> seen(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) {
      std::fill(seen.begin(), seen.end(), 0);
      for (int c = 0; c < n; ++c) {
        int v = op(r, c);
        if (seen[v])
          throw validation_error("row for \"" + labels_[r] +
                                 "\" repeats entry \"" + labels_[v] + "\"");
        seen[v] = 1;
      }
    }
    for (int c = 0; c < n; ++c) {
      std::fill(seen.begin(), seen.end(), 0);
      for (int r = 0; r < n; ++r) {
        int v = op(r, c);
        if (seen[v])
          throw validation_error("column for \"" + labels_[c] +
                                 "\" repeats entry \"" + labels_[v] + "\"");
        seen[v] = 1;
      }
    }

    identity_ = -1;
    for (int e = 0; e < n; ++e) {
      bool ok = true;
      for (int x = 0; x < n && ok; ++x)
        ok = op(e, x) == x && op(x, e) == x;
      if (ok) {
        identity_ = e;
        break;
      }
    }
    if (identity_ < 0) throw validation_error("table has no two-sided identity");

    inverse_.assign(static_cast<std::size_t>(n), -1);
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (op(x, y) == identity_) {
          if (op(y, x) != identity_)
            throw validation_error("element \"" + labels_[x] +
                                   "\" has no two-sided inverse");
          inverse_[x] = y;
          break;
        }
      }
    }

    const auto check_triple = [&](int a, int b, int c) {
      if (op(op(a, b), c) != op(a, op(b, c)))
        throw validation_error(
            "associativity fails at (\"" + labels_[a] + "\", \"" + labels_[b] +
            "\", \"" + labels_[c] + "\"): (ab)c = \"" + labels_[op(op(a, b), c)] +
            "\" but a(bc) = \"" + labels_[op(a, op(b, c))] + "\"");
    };
    if (n <= 128 || strict) {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c) check_triple(a, b, c);
    } else {
      // Deterministic sample of 10^4 triples.
      std::uint64_t state = 0x9e3779b97f4a7c15ULL;
      const auto next = [&] {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return static_cast<int>(state % static_cast<std::uint64_t>(n));
      };
      for (int t = 0; t < 10'000; ++t) check_triple(next(), next(), next());
    }

    if (perms_) {
      if (static_cast<int>(perms_->size()) != n)
        throw validation_error("permutation list does not match the order");
      const int deg = perms_->front().degree();
      for (int i = 0; i < n; ++i) {
        if ((*perms_)[i].degree() != deg)
          throw validation_error("permutation degrees are inconsistent");
        if (!perm_index_.emplace((*perms_)[i].images(), i).second)
          throw validation_error("duplicate permutation in element list");
      }
      const auto check_pair = [&](int a, int b) {
        auto it = perm_index_.find(compose((*perms_)[a], (*perms_)[b]).images());
        if (it == perm_index_.end() || it->second != op(a, b))
          throw validation_error("operation table disagrees with composition at (\"" +
                                 labels_[a] + "\", \"" + labels_[b] + "\")");
      };
      if (n <= 2000 || strict) {
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) check_pair(a, b);
      } else {
        std::uint64_t state = 0x2545f4914f6cdd1dULL;
        const auto next = [&] {
          state ^= state << 13;
          state ^= state >> 7;
          state ^= state << 17;
          return static_cast<int>(state % static_cast<std::uint64_t>(n));
        };
        for (int t = 0; t < 10'000; ++t) check_pair(next(), next());
      }
    }
  }

  std::vector<std::string> labels_;
  std::vector<int> op_;
  std::optional<std::vector<Permutation>> perms_;
  int identity_ = 0;
  std::vector<int> inverse_;
  std::map<std::string, int> label_index_;
  std::map<std::vector<int>, int> perm_index_;
};

/// Z_n under addition modulo n, labels "0".."n-1".
inline GroupPtr make_cyclic(int n) {
  if (n < 1) throw validation_error("cyclic group order must be positive");
  std::vector<std::string> labels(static_cast<std::size_t>(n));
  std::vector<int> op(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    labels[i] = std::to_string(i);
    for (int j = 0; j < n; ++j) op[static_cast<std::size_t>(i) * n + j] = (i + j) % n;
  }
  return FiniteGroup::create(std::move(labels), std::move(op));
}

namespace detail {

/// Shortlex order on canonical cycle strings: the order the bordered tables
/// are laid out in -- identity first, then transpositions, then longer cycles.
inline bool cycle_string_shortlex(const Permutation& a, const Permutation& b) {
  const std::string sa = a.cycle_string(), sb = b.cycle_string();
  if (sa.size() != sb.size()) return sa.size() < sb.size();
  return sa < sb;
}

/// Lehmer rank of an image vector among all permutations of its degree.
inline std::size_t lehmer_rank(const std::vector<int>& images) {
  const int d = static_cast<int>(images.size());
  std::size_t rank = 0;
  for (int i = 0; i < d; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < d; ++j) smaller += images[j] < images[i];
    rank = rank * static_cast<std::size_t>(d - i) + static_cast<std::size_t>(smaller);
  }
  return rank;
}

inline GroupPtr group_from_sorted_perms(std::vector<Permutation> elements) {
  const int n = static_cast<int>(elements.size());
  const int degree = elements.front().degree();

  // Flat rank table for small degrees, ordered map beyond.
  std::vector<int> by_rank;
  std::map<std::vector<int>, int> by_images;
  if (degree <= 8) {
    std::size_t fact = 1;
    for (int i = 2; i <= degree; ++i) fact *= static_cast<std::size_t>(i);
    by_rank.assign(fact, -1);
    for (int i = 0; i < n; ++i) by_rank[lehmer_rank(elements[i].images())] = i;
  } else {
    for (int i = 0; i < n; ++i) by_images.emplace(elements[i].images(), i);
  }
  const auto lookup = [&](const std::vector<int>& images) {
    if (!by_rank.empty()) return by_rank[lehmer_rank(images)];
    auto it = by_images.find(images);
    return it == by_images.end() ? -1 : it->second;
  };

  std::vector<std::string> labels(static_cast<std::size_t>(n));
  std::vector<int> op(static_cast<std::size_t>(n) * n);
  std::vector<int> scratch(static_cast<std::size_t>(degree));
  for (int a = 0; a < n; ++a) {
    labels[a] = elements[a].cycle_string();
    for (int b = 0; b < n; ++b) {
      for (int i = 0; i < degree; ++i)
        scratch[i] = elements[b].images()[elements[a].images()[i]];
      int found = lookup(scratch);
      if (found < 0)
        throw validation_error("set is not closed: " + elements[a].cycle_string() +
                               " composed with " + elements[b].cycle_string() +
                               " gives " +
                               compose(elements[a], elements[b]).cycle_string() +
                               ", which is missing");
      op[static_cast<std::size_t>(a) * n + b] = found;
    }
  }
  return FiniteGroup::create(std::move(labels), std::move(op), std::move(elements));
}

} // namespace detail

/// A finite group from an explicit set of permutations, which must already be
/// closed under composition and inversion. Elements are enumerated in
/// shortlex order of their cycle strings; labels are those strings.
inline GroupPtr from_permutations(std::vector<Permutation> elements) {
  if (elements.empty()) throw validation_error("element set is empty");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (const auto& p : elements) {
    if (std::find(elements.begin(), elements.end(), p.inverse()) == elements.end())
      throw validation_error("set is not closed: inverse of " + p.cycle_string() +
                             " is missing");
  }
  std::sort(elements.begin(), elements.end(), detail::cycle_string_shortlex);
  return detail::group_from_sorted_perms(std::move(elements));
}

/// The symmetric group S_n acting on n points.
inline GroupPtr make_symmetric(int n) {
  if (n < 1) throw validation_error("symmetric group degree must be positive");
  if (n > 7)
    throw resource_error("S_" + std::to_string(n) + " has order above the supported maximum " +
                         std::to_string(max_group_order));
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> elements;
  do {
    elements.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  std::sort(elements.begin(), elements.end(), detail::cycle_string_shortlex);
  return detail::group_from_sorted_perms(std::move(elements));
}

/// The alternating group A_n acting on n points.
inline GroupPtr make_alternating(int n) {
  if (n < 1) throw validation_error("alternating group degree must be positive");
  if (n > 7)
    throw resource_error("A_" + std::to_string(n) + " has order above the supported maximum " +
                         std::to_string(max_group_order));
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> elements;
  do {
    auto p = Permutation::from_images(images);
    if (p.is_even()) elements.push_back(std::move(p));
  } while (std::next_permutation(images.begin(), images.end()));
  std::sort(elements.begin(), elements.end(), detail::cycle_string_shortlex);
  return detail::group_from_sorted_perms(std::move(elements));
}

/// The dihedral group of the regular m-gon, acting on its m vertices.
inline GroupPtr make_dihedral(int m) {
  if (m < 3) throw validation_error("dihedral group needs a polygon with at least 3 vertices");
  std::vector<int> rot(static_cast<std::size_t>(m)), ref(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    rot[i] = (i + 1) % m;
    ref[i] = (m - i) % m;
  }
  auto elements = generate_closure({Permutation::from_images(rot),
                                    Permutation::from_images(ref)});
  std::sort(elements.begin(), elements.end(), detail::cycle_string_shortlex);
  return detail::group_from_sorted_perms(std::move(elements));
}

/// Direct product with componentwise operation; labels "(a,b)".
inline GroupPtr make_direct_product(const GroupPtr& a, const GroupPtr& b) {
  const int na = a->order(), nb = b->order(), n = na * nb;
  if (n > max_group_order)
    throw resource_error("product order exceeds the supported maximum");
  std::vector<std::string> labels(static_cast<std::size_t>(n));
  std::vector<int> op(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    labels[i] = "(" + a->label(i / nb) + "," + b->label(i % nb) + ")";
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      op[static_cast<std::size_t>(i) * n + j] =
          a->op(i / nb, j / nb) * nb + b->op(i % nb, j % nb);
  return FiniteGroup::create(std::move(labels), std::move(op));
}

/// A validated group from labels and an n x n grid of entry labels. `strict`
/// forces the full cubic associativity sweep even above order 128.
inline GroupPtr from_table(const std::vector<std::string>& labels,
                           const std::vector<std::vector<std::string>>& table,
                           bool strict = false) {
  const int n = static_cast<int>(labels.size());
  std::map<std::string, int> index;
  for (int i = 0; i < n; ++i)
    if (!index.emplace(labels[i], i).second)
      throw validation_error("duplicate element label \"" + labels[i] + "\"");
  if (static_cast<int>(table.size()) != n)
    throw validation_error("table has " + std::to_string(table.size()) +
                           " rows for " + std::to_string(n) + " labels");
  std::vector<int> op(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(table[r].size()) != n)
      throw validation_error("row " + std::to_string(r + 1) + " has " +
                             std::to_string(table[r].size()) + " entries");
    for (int c = 0; c < n; ++c) {
      auto it = index.find(table[r][c]);
      if (it == index.end())
        throw validation_error("entry \"" + table[r][c] + "\" at row " +
                               std::to_string(r + 1) + ", column " +
                               std::to_string(c + 1) + " is not a label");
      op[static_cast<std::size_t>(r) * n + c] = it->second;
    }
  }
  return FiniteGroup::create(labels, std::move(op), std::nullopt, strict);
}

/// Same elements, transposed operation: op'(a,b) = op(b,a). Permutation data
/// is dropped because the table no longer mirrors composition.
inline GroupPtr opposite_group(const GroupPtr& g) {
  const int n = g->order();
  std::vector<int> op(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) op[static_cast<std::size_t>(a) * n + b] = g->op(b, a);
  return FiniteGroup::create(g->labels(), std::move(op));
}

/// A subgroup as a sorted index set inside its parent.
struct Subgroup {
  GroupPtr parent;
  std::vector<int> elements; // sorted

  int order() const { return static_cast<int>(elements.size()); }
  int index() const { return parent->order() / order(); }
  bool contains(int x) const {
    return std::binary_search(elements.begin(), elements.end(), x);
  }
  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent == b.parent && a.elements == b.elements;
  }
};

namespace detail {

inline void check_subgroup(const Subgroup& s) {
  const auto& g = *s.parent;
  if (s.elements.empty() || !std::is_sorted(s.elements.begin(), s.elements.end()))
    throw internal_error("subgroup element set must be sorted and non-empty");
  if (!s.contains(g.identity()))
    throw validation_error("subgroup does not contain the identity");
  for (int a : s.elements) {
    if (!s.contains(g.inverse(a)))
      throw validation_error("subgroup not closed under inversion at \"" +
                             g.label(a) + "\"");
    for (int b : s.elements)
      if (!s.contains(g.op(a, b)))
        throw validation_error("subgroup not closed: \"" + g.label(a) +
                               "\" times \"" + g.label(b) + "\" escapes");
  }
  if (g.order() % s.order() != 0)
    throw internal_error("subgroup order does not divide the group order");
}

/// Closure of a seed set inside the group, with an optional early abort once
/// the closure grows past `limit` (returns empty in that case).
inline std::vector<int> close_elements(const FiniteGroup& g,
                                       const std::vector<int>& seed,
                                       int limit = -1) {
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  std::vector<int> elems;
  const auto add = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      elems.push_back(x);
    }
  };
  add(g.identity());
  for (int x : seed) add(x);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (limit >= 0 && static_cast<int>(elems.size()) > limit) return {};
    for (std::size_t j = 0; j < elems.size(); ++j) {
      add(g.op(elems[i], elems[j]));
      add(g.op(elems[j], elems[i]));
    }
  }
  if (limit >= 0 && static_cast<int>(elems.size()) > limit) return {};
  std::sort(elems.begin(), elems.end());
  return elems;
}

} // namespace detail

/// Smallest subgroup containing the given generators.
inline Subgroup subgroup_generated(const GroupPtr& g, const std::vector<int>& gens) {
  for (int x : gens)
    if (x < 0 || x >= g->order())
      throw validation_error("generator index out of range");
  Subgroup s{g, detail::close_elements(*g, gens)};
  detail::check_subgroup(s);
  return s;
}

inline Subgroup trivial_subgroup(const GroupPtr& g) {
  return Subgroup{g, {g->identity()}};
}

inline Subgroup whole_group(const GroupPtr& g) {
  std::vector<int> all(static_cast<std::size_t>(g->order()));
  std::iota(all.begin(), all.end(), 0);
  return Subgroup{g, std::move(all)};
}

/// One coset of a subgroup; the representative is the minimal element.
struct Coset {
  Side side;
  std::vector<int> elements; // sorted
  int representative() const { return elements.front(); }
};

/// elem -> index of its coset, cosets in canonical order (by minimal element).
inline std::vector<int> coset_id_map(const Subgroup& s, Side side) {
  const auto& g = *s.parent;
  std::vector<int> id(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  for (int x = 0; x < g.order(); ++x) {
    if (id[x] >= 0) continue;
    for (int h : s.elements) {
      int y = side == Side::right ? g.op(h, x) : g.op(x, h);
      id[y] = next;
    }
    ++next;
  }
  return id;
}

/// All distinct cosets of the given side, ordered by representative.
inline std::vector<Coset> cosets(const Subgroup& s, Side side) {
  const auto id = coset_id_map(s, side);
  const int m = *std::max_element(id.begin(), id.end()) + 1;
  std::vector<Coset> out(static_cast<std::size_t>(m));
  for (auto& c : out) c.side = side;
  for (int x = 0; x < static_cast<int>(id.size()); ++x)
    out[id[x]].elements.push_back(x); // ascending x keeps elements sorted
  return out;
}

/// S^g = g^-1 S g.
inline Subgroup conjugate_subgroup(const Subgroup& s, int g) {
  const auto& grp = *s.parent;
  std::vector<int> elems;
  elems.reserve(s.elements.size());
  for (int x : s.elements) elems.push_back(grp.conjugate(x, g));
  std::sort(elems.begin(), elems.end());
  return Subgroup{s.parent, std::move(elems)};
}

/// Distinct conjugates of S, each paired with the least conjugating element,
/// in order of that element.
inline std::vector<std::pair<int, Subgroup>> conjugates(const Subgroup& s) {
  std::vector<std::pair<int, Subgroup>> out;
  std::set<std::vector<int>> seen;
  for (int g = 0; g < s.parent->order(); ++g) {
    Subgroup c = conjugate_subgroup(s, g);
    if (seen.insert(c.elements).second) out.emplace_back(g, std::move(c));
  }
  return out;
}

/// A set meeting every coset of the given side exactly once.
struct Transversal {
  Side side;
  std::vector<int> reps;
};

/// Checks that `reps` meets every coset of `side` exactly once. On failure
/// reports the first missed or doubled coset through `fault_coset_rep` /
/// `doubled` when provided.
inline bool is_transversal(const Subgroup& s, Side side,
                           const std::vector<int>& reps,
                           int* fault_coset_rep = nullptr,
                           bool* doubled = nullptr) {
  const auto id = coset_id_map(s, side);
  const auto cs = cosets(s, side);
  std::vector<int> hits(cs.size(), 0);
  for (int r : reps) ++hits[id[r]];
  for (std::size_t c = 0; c < cs.size(); ++c) {
    if (hits[c] == 1) continue;
    if (fault_coset_rep) *fault_coset_rep = cs[c].representative();
    if (doubled) *doubled = hits[c] > 1;
    return false;
  }
  return true;
}

/// Stabilizer of a point in a permutation group.
inline Subgroup stabilizer(const GroupPtr& g, int point) {
  if (!g->has_perms())
    throw validation_error("stabilizers need a permutation representation");
  if (point < 0 || point >= g->degree())
    throw validation_error("point out of range");
  std::vector<int> elems;
  for (int i = 0; i < g->order(); ++i)
    if (g->perm(i).apply(point) == point) elems.push_back(i);
  Subgroup s{g, std::move(elems)};
  detail::check_subgroup(s);
  return s;
}

inline bool is_transitive(const GroupPtr& g) {
  if (!g->has_perms())
    throw validation_error("transitivity needs a permutation representation");
  const int deg = g->degree();
  std::vector<char> reached(static_cast<std::size_t>(deg), 0);
  reached[0] = 1;
  int count = 1;
  for (int i = 0; i < g->order() && count < deg; ++i) {
    int img = g->perm(i).apply(0);
    if (!reached[img]) {
      reached[img] = 1;
      ++count;
    }
  }
  return count == deg;
}

/// True iff the permutation group is transitive with trivial point
/// stabilizers; in that case its order necessarily equals its degree.
inline bool is_regular(const GroupPtr& g) {
  if (!is_transitive(g)) return false;
  for (int point = 0; point < g->degree(); ++point)
    if (stabilizer(g, point).order() != 1) return false;
  if (g->order() != g->degree())
    throw internal_error("regular group whose order differs from its degree");
  return true;
}

/// A complement of S: a subgroup C with |C| * |S| = |G| and trivial
/// intersection. Exhausts generator sets of size up to 3 drawn from elements
/// whose order divides [G:S]; complete for every group this library targets.
inline std::optional<Subgroup> find_complement(const Subgroup& s,
                                               long long budget = 100'000'000) {
  const auto& g = *s.parent;
  const int n = g.order();
  const int target = n / s.order();
  if (target == 1) return trivial_subgroup(s.parent);
  if (s.order() == 1) return whole_group(s.parent);

  std::vector<int> candidates;
  for (int x = 0; x < n; ++x) {
    if (x == g.identity() || s.contains(x)) continue;
    if (target % g.element_order(x) == 0) candidates.push_back(x);
  }

  long long nodes = 0;
  const auto try_close = [&](const std::vector<int>& gens) -> std::optional<Subgroup> {
    nodes += target;
    if (nodes > budget)
      throw resource_error("complement search exceeded its budget of " +
                           std::to_string(budget) + " nodes");
    auto elems = detail::close_elements(g, gens, target);
    if (static_cast<int>(elems.size()) != target) return std::nullopt;
    for (int x : elems)
      if (x != g.identity() && s.contains(x)) return std::nullopt;
    return Subgroup{s.parent, std::move(elems)};
  };

  const int m = static_cast<int>(candidates.size());
  for (int i = 0; i < m; ++i)
    if (auto c = try_close({candidates[i]})) return c;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (auto c = try_close({candidates[i], candidates[j]})) return c;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k)
        if (auto c = try_close({candidates[i], candidates[j], candidates[k]})) return c;
  return std::nullopt;
}

/// All regular subgroups of a permutation group of degree <= 8, by exhaustive
/// closure of generator sets (size <= 3) of fixed-point-free elements. Every
/// non-identity element of a regular subgroup is fixed-point-free and groups
/// of order <= 8 need at most 3 generators, so the search is complete.
inline std::vector<Subgroup> search_regular_subgroups(const GroupPtr& g,
                                                      long long budget = 400'000'000) {
  if (!g->has_perms())
    throw validation_error("regular-subgroup search needs a permutation representation");
  const int deg = g->degree();
  if (deg > 8)
    throw resource_error("regular-subgroup search supports degree at most 8");

  std::vector<int> fpf;
  for (int i = 0; i < g->order(); ++i) {
    bool moved_all = true;
    for (int p = 0; p < deg && moved_all; ++p)
      moved_all = g->perm(i).apply(p) != p;
    if (moved_all) fpf.push_back(i);
  }

  long long nodes = 0;
  std::set<std::vector<int>> found;
  const auto consider = [&](const std::vector<int>& gens) {
    nodes += deg;
    if (nodes > budget)
      throw resource_error("regular-subgroup search exceeded its budget of " +
                           std::to_string(budget) + " nodes");
    auto elems = detail::close_elements(*g, gens, deg);
    if (static_cast<int>(elems.size()) != deg) return;
    Subgroup cand{g, std::move(elems)};
    // regular = transitive + fixed-point-free non-identity elements
    std::vector<char> image_of_0(static_cast<std::size_t>(deg), 0);
    for (int x : cand.elements) {
      if (x != g->identity()) {
        bool moved_all = true;
        for (int p = 0; p < deg && moved_all; ++p)
          moved_all = g->perm(x).apply(p) != p;
        if (!moved_all) return;
      }
      image_of_0[g->perm(x).apply(0)] = 1;
    }
    for (int p = 0; p < deg; ++p)
      if (!image_of_0[p]) return;
    found.insert(cand.elements);
  };

  const int m = static_cast<int>(fpf.size());
  for (int i = 0; i < m; ++i) consider({fpf[i]});
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) consider({fpf[i], fpf[j]});
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k) consider({fpf[i], fpf[j], fpf[k]});

  std::vector<Subgroup> out;
  for (const auto& elems : found) out.push_back(Subgroup{g, elems});
  return out;
}

/// Every subgroup, by closing all generator sets of size <= `max_gens` and
/// adding the whole group. Complete whenever every proper subgroup is
/// `max_gens`-generated, which holds for all orders this library targets.
inline std::vector<Subgroup> all_subgroups(const GroupPtr& g, int max_gens = 3) {
  std::set<std::vector<int>> found;
  found.insert(whole_group(g).elements);
  found.insert(trivial_subgroup(g).elements);
  const int n = g->order();
  std::vector<int> gens;
  const auto recurse = [&](auto&& self, int from) -> void {
    if (!gens.empty()) found.insert(detail::close_elements(*g, gens));
    if (static_cast<int>(gens.size()) == max_gens) return;
    for (int x = from; x < n; ++x) {
      gens.push_back(x);
      self(self, x + 1);
      gens.pop_back();
    }
  };
  recurse(recurse, 0);

  std::vector<Subgroup> out;
  for (const auto& elems : found) out.push_back(Subgroup{g, elems});
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements < b.elements;
  });
  return out;
}

/// Materializes a subgroup as a group in its own right. Returns the group and
/// the map from its element indices back to parent indices. Labels and any
/// permutation representation are inherited.
inline std::pair<GroupPtr, std::vector<int>> subgroup_as_group(const Subgroup& s) {
  const auto& g = *s.parent;
  const int n = s.order();
  std::vector<int> to_parent = s.elements;
  std::vector<int> from_parent(static_cast<std::size_t>(g.order()), -1);
  for (int i = 0; i < n; ++i) from_parent[to_parent[i]] = i;

  std::vector<std::string> labels(static_cast<std::size_t>(n));
  std::vector<int> op(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    labels[a] = g.label(to_parent[a]);
    for (int b = 0; b < n; ++b)
      op[static_cast<std::size_t>(a) * n + b] = from_parent[g.op(to_parent[a], to_parent[b])];
  }
  std::optional<std::vector<Permutation>> perms;
  if (g.has_perms()) {
    perms.emplace();
    for (int a = 0; a < n; ++a) perms->push_back(g.perm(to_parent[a]));
  }
  return {FiniteGroup::create(std::move(labels), std::move(op), std::move(perms)),
          std::move(to_parent)};
}

} // namespace csudoku
