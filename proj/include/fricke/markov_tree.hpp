#pragma once

// Breadth-first enumeration of integral points of F and F^2 under the Vieta
// moves, and the bounded Frobenius uniqueness scan.

#include <cstddef>
#include <map>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "fricke/rational.hpp"

namespace fricke {

enum class SurfaceTag { fricke, double_fricke };
std::string_view to_string(SurfaceTag s);

/// An integral point with coordinates sorted ascending (signs kept).
struct CanonicalTriple {
  IntTriple values;
  SurfaceTag surface;

  /// Sorts; throws Errc::off_surface when the triple is not on the surface.
  static CanonicalTriple make(IntTriple values, SurfaceTag surface);

  const Integer& largest() const { return values[2]; }
  /// max(|a|, |b|, |c|)
  Integer max_abs() const;
  /// (m0, n0, k0) with n0 the largest entry, ready to be a section base point.
  Triple as_section_base() const;

  friend bool operator==(const CanonicalTriple&, const CanonicalTriple&) = default;
};

/// Which coordinate of the sorted parent was replaced by the other root:
/// R replaces the first (x -> 3yz - x), L the last (z -> 3xy - z), and P the
/// middle one, i.e. a generator conjugated by a permutation.
enum class TreeMove { root, L, R, P };
std::string_view to_string(TreeMove m);

struct TreeNode {
  CanonicalTriple triple;
  std::optional<std::size_t> parent;  // index into the generated list
  TreeMove move = TreeMove::root;
  unsigned depth = 0;

  friend bool operator==(const TreeNode&, const TreeNode&) = default;
};

struct DepthLimit {
  unsigned depth;
};
/// Keep triples whose largest absolute entry is at most the bound.
struct ComponentLimit {
  Integer max_component;
};
using TreeLimit = std::variant<DepthLimit, ComponentLimit>;

/// The other root in the given slot: 3bc - a on F, 9bc - 2b - 2c - a on F^2.
IntTriple vieta_move(const IntTriple& t, std::size_t slot, SurfaceTag surface);

/// Deduplicated breadth-first closure of the root under the three Vieta
/// moves. Ordered by depth, then lexicographically; parents always precede
/// children. Throws Errc::root_off_surface.
std::vector<TreeNode> generate(SurfaceTag surface, const IntTriple& root, const TreeLimit& limit);

struct FrobeniusReport {
  Integer bound;
  std::size_t triple_count = 0;
  /// largest component -> every positive Markov triple having it
  std::map<Integer, std::vector<IntTriple>> by_largest;
  /// keys with more than one triple; a counterexample to Frobenius
  std::vector<Integer> duplicated;
};

/// All positive Markov triples with largest component <= bound, grouped by
/// largest component. Evidence only. Throws Errc::index_out_of_range for
/// bound < 1.
FrobeniusReport frobenius_scan(const Integer& bound);

struct FundamentalPoint {
  CanonicalTriple triple;
  /// how many positive triples have this largest component
  std::size_t count = 0;
};

/// A positive Markov triple whose largest entry is n0. Throws
/// Errc::not_a_markov_number.
FundamentalPoint fundamental_point(const Integer& n0);

}  // namespace fricke
