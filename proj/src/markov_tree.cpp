#include "fricke/markov_tree.hpp"

#include <algorithm>
#include <set>

#include "fricke/error.hpp"
#include "fricke/line_oracle.hpp"

namespace fricke {

std::string_view to_string(SurfaceTag s) { return s == SurfaceTag::fricke ? "fricke" : "double"; }

std::string_view to_string(TreeMove m) {
  switch (m) {
    case TreeMove::root: return "root";
    case TreeMove::L: return "L";
    case TreeMove::R: return "R";
    case TreeMove::P: return "P";
  }
  return "?";
}

namespace {

Surface surface_of(SurfaceTag tag) { return tag == SurfaceTag::fricke ? Surface::fricke() : Surface::double_fricke(); }

IntTriple sorted(IntTriple t) {
  std::sort(t.begin(), t.end());
  return t;
}

Integer max_abs_of(const IntTriple& t) {
  Integer m = abs(t[0]);
  for (std::size_t i = 1; i < 3; ++i)
    if (abs(t[i]) > m) m = abs(t[i]);
  return m;
}

constexpr TreeMove move_for_slot[3] = {TreeMove::R, TreeMove::P, TreeMove::L};

}  // namespace

CanonicalTriple CanonicalTriple::make(IntTriple values, SurfaceTag surface) {
  if (!surface_of(surface).contains(to_rational(values)))
    throw Error(Errc::off_surface, to_string(values) + " is not on the " + std::string(to_string(surface)) + " surface");
  return {sorted(std::move(values)), surface};
}

Integer CanonicalTriple::max_abs() const { return max_abs_of(values); }

Triple CanonicalTriple::as_section_base() const {
  return {Rational(values[0]), Rational(values[2]), Rational(values[1])};
}

IntTriple vieta_move(const IntTriple& t, std::size_t slot, SurfaceTag surface) {
  IntTriple out = t;
  const Integer& b = t[(slot + 1) % 3];
  const Integer& c = t[(slot + 2) % 3];
  if (surface == SurfaceTag::fricke)
    out[slot] = 3 * b * c - t[slot];
  else
    out[slot] = 9 * b * c - 2 * b - 2 * c - t[slot];
  return out;
}

std::vector<TreeNode> generate(SurfaceTag surface, const IntTriple& root, const TreeLimit& limit) {
  if (!surface_of(surface).contains(to_rational(root)))
    throw Error(Errc::root_off_surface, "tree root " + to_string(root) + " is not on the surface");

  const auto* depth_limit = std::get_if<DepthLimit>(&limit);
  const auto* bound = std::get_if<ComponentLimit>(&limit);
  auto within_bound = [&](const IntTriple& t) { return !bound || max_abs_of(t) <= bound->max_component; };

  std::vector<TreeNode> nodes;
  const CanonicalTriple start{sorted(root), surface};
  if (!within_bound(start.values)) return nodes;
  nodes.push_back({start, std::nullopt, TreeMove::root, 0});
  std::set<IntTriple> seen{start.values};

  std::size_t level_begin = 0;
  for (unsigned depth = 1; !depth_limit || depth <= depth_limit->depth; ++depth) {
    const std::size_t level_end = nodes.size();
    // Lexicographic order of the new level; first parent (in node order) wins.
    std::map<IntTriple, std::pair<std::size_t, TreeMove>> next;
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (std::size_t slot = 0; slot < 3; ++slot) {
        IntTriple child = sorted(vieta_move(nodes[i].triple.values, slot, surface));
        if (seen.count(child) || next.count(child) || !within_bound(child)) continue;
        next.emplace(std::move(child), std::make_pair(i, move_for_slot[slot]));
      }
    }
    if (next.empty()) break;
    for (auto& [values, origin] : next) {
      seen.insert(values);
      nodes.push_back({CanonicalTriple{values, surface}, origin.first, origin.second, depth});
    }
    level_begin = level_end;
  }
  return nodes;
}

FrobeniusReport frobenius_scan(const Integer& bound) {
  if (bound < 1) throw Error(Errc::index_out_of_range, "scan bound must be at least 1");
  FrobeniusReport report;
  report.bound = bound;
  for (const auto& node : generate(SurfaceTag::fricke, {Integer(1), Integer(1), Integer(1)}, ComponentLimit{bound})) {
    report.by_largest[node.triple.largest()].push_back(node.triple.values);
    ++report.triple_count;
  }
  for (auto& [largest, triples] : report.by_largest) {
    std::sort(triples.begin(), triples.end());
    if (triples.size() > 1) report.duplicated.push_back(largest);
  }
  return report;
}

FundamentalPoint fundamental_point(const Integer& n0) {
  if (n0 < 1) throw Error(Errc::not_a_markov_number, to_string(n0) + " is not a Markov number");
  const FrobeniusReport report = frobenius_scan(n0);
  const auto it = report.by_largest.find(n0);
  if (it == report.by_largest.end())
    throw Error(Errc::not_a_markov_number, to_string(n0) + " is not the largest entry of any Markov triple");
  return {CanonicalTriple{it->second.front(), SurfaceTag::fricke}, it->second.size()};
}

}  // namespace fricke
