#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdint>
#include <functional>
#include <json.hpp>
#include <optional>
#include <random>
#include <stdexcept>

#include "fricke/double_fricke.hpp"
#include "fricke/error.hpp"
#include "fricke/fricke.hpp"
#include "fricke/line_oracle.hpp"
#include "fricke/markov_tree.hpp"
#include "fricke/sampling.hpp"
#include "fricke/sections.hpp"

namespace fricke::cli {

namespace {

using json = nlohmann::ordered_json;

/// Bad arguments: reported with the offending flag, exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  json payload;
  std::string plain;
  std::optional<std::string> dot;  // trees only
};

json to_json(const Triple& t) {
  json a = json::array();
  for (const auto& c : t) a.push_back(to_string(c));
  return a;
}

json to_json(const IntTriple& t) {
  json a = json::array();
  for (const auto& c : t) a.push_back(to_string(c));
  return a;
}

json to_json(const SectionPoint& p) { return json::array({to_string(p.x), to_string(p.z)}); }

Output result(json value, std::string plain) {
  json payload;
  payload["result"] = std::move(value);
  return {std::move(payload), std::move(plain), std::nullopt};
}

/// Drops spaces and one pair of enclosing brackets, so printed values can be
/// fed back in: "(15/4, -3/4, -6)", "[1:2:5]" and "15/4,-3/4,-6" all work.
std::string strip_decoration(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  if (s.size() >= 2 && ((s.front() == '(' && s.back() == ')') || (s.front() == '[' && s.back() == ']'))) {
    const bool projective = s.front() == '[';
    s = s.substr(1, s.size() - 2);
    if (projective)
      for (char& c : s)
        if (c == ':') c = ',';
  }
  return s;
}

template <std::size_t N>
std::array<Rational, N> list_arg(const std::string& name, const std::string& text) {
  try {
    return parse_rational_list<N>(strip_decoration(text));
  } catch (const Error& e) {
    throw UsageError(name + ": " + e.what());
  }
}

Rational rational_arg(const std::string& name, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const Error& e) {
    throw UsageError(name + ": " + e.what());
  }
}

Integer integer_arg(const std::string& name, const std::string& text) {
  try {
    return parse_integer(text);
  } catch (const Error& e) {
    throw UsageError(name + ": " + e.what());
  }
}

IntTriple int_triple_arg(const std::string& name, const std::string& text) {
  const Triple t = list_arg<3>(name, text);
  IntTriple out;
  for (std::size_t i = 0; i < 3; ++i) {
    if (!is_integral(t[i])) throw UsageError(name + ": expected integers, got " + text);
    out[i] = t[i].get_num();
  }
  return out;
}

template <std::size_t Dim>
ProjectivePoint<Dim> projective_arg(const std::string& name, const std::string& text) {
  const auto coords = list_arg<Dim + 1>(name, text);
  try {
    return ProjectivePoint<Dim>::from_rationals(coords);
  } catch (const Error& e) {
    throw UsageError(name + ": " + e.what());
  }
}

SectionPoint section_point_arg(const std::string& name, const std::string& text) {
  const auto xz = list_arg<2>(name, text);
  return {xz[0], xz[1]};
}

template <class Point>
Output compose_output(const ComposeResult<Point>& r) {
  if (const auto* u = std::get_if<Undefined>(&r)) {
    json payload;
    payload["result"] = "undefined";
    payload["reason"] = std::string(to_string(u->reason));
    return {std::move(payload), "undefined: " + std::string(to_string(u->reason)), std::nullopt};
  }
  if (const auto* p = std::get_if<ProjectivePoint3>(&r)) return result(to_string(*p), to_string(*p));
  const Triple& t = std::get<Point>(r).coords();
  return result(to_json(t), to_string(t));
}

Output section_output(const SectionPoint& p) { return result(to_json(p), to_string(p)); }

Output roots_output(const QuadraticRoots& roots) {
  json a = json::array();
  std::string plain;
  auto add = [&](const std::string& s) {
    a.push_back(s);
    plain += (plain.empty() ? "" : " ") + s;
  };
  for (const auto& q : roots.irrational) add(to_string(q));
  for (const auto& q : roots.rational) add(to_string(q));
  return result(std::move(a), plain);
}

Output tree_output(const std::vector<TreeNode>& nodes) {
  Output o{json::parse(tree_json(nodes), nullptr, true, false), tree_plain(nodes), tree_dot(nodes)};
  return o;
}

VieteGenerator generator_arg(const std::string& text) {
  if (text == "L") return VieteGenerator::L;
  if (text == "R") return VieteGenerator::R;
  throw UsageError("GENERATOR: expected L or R, got " + text);
}

/// Closed-form composition against the line/cubic oracle on random chart
/// points. Pairs whose third point is at infinity are skipped.
struct OracleTally {
  std::size_t agree = 0, skipped = 0, mismatch = 0;
  json to_json() const { return json{{"agree", agree}, {"skipped", skipped}, {"mismatch", mismatch}}; }
};

template <class Point, class Sample, class Compose>
OracleTally oracle_check(std::mt19937_64& rng, std::size_t pairs, unsigned height, const Surface& surface,
                         Sample sample, Compose compose_fn) {
  OracleTally tally;
  for (std::size_t i = 0; i < pairs; ++i) {
    const Point p = sample(rng, height);
    const Point q = sample(rng, height);
    const ComposeResult<Point> r = compose_fn(p, q);
    const auto* finite = std::get_if<Point>(&r);
    if (!finite) {
      ++tally.skipped;
      continue;
    }
    try {
      const LineParameter t = line_third_intersection(p.coords(), q.coords(), surface);
      if (point_on_line(p.coords(), q.coords(), t) == finite->coords())
        ++tally.agree;
      else
        ++tally.mismatch;
    } catch (const Error&) {
      ++tally.mismatch;
    }
  }
  return tally;
}

}  // namespace

std::string tree_json(const std::vector<TreeNode>& nodes) {
  json list = json::array();
  for (const auto& n : nodes) {
    json node;
    node["triple"] = to_json(n.triple.values);
    node["depth"] = n.depth;
    node["parent"] = n.parent ? json(*n.parent) : json(nullptr);
    node["move"] = std::string(to_string(n.move));
    list.push_back(std::move(node));
  }
  json payload;
  payload["result"] = std::move(list);
  return payload.dump();
}

std::string tree_dot(const std::vector<TreeNode>& nodes) {
  std::string out = "digraph tree {\n";
  for (std::size_t i = 0; i < nodes.size(); ++i)
    out += "  n" + std::to_string(i) + " [label=\"" + to_string(nodes[i].triple.values) + "\"];\n";
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].parent)
      out += "  n" + std::to_string(*nodes[i].parent) + " -> n" + std::to_string(i) + " [label=\"" +
             std::string(to_string(nodes[i].move)) + "\"];\n";
  return out + "}";
}

std::string tree_plain(const std::vector<TreeNode>& nodes) {
  std::string out;
  for (const auto& n : nodes) {
    if (!out.empty()) out += '\n';
    out += std::to_string(n.depth) + ' ' + to_string(n.triple.values);
  }
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact arithmetic on the Fricke surface x^2+y^2+z^2 = 3xyz and its double"};
  app.name("fricke");
  app.require_subcommand(1);
  app.fallthrough();

  std::string surface_name = "fricke";
  std::string sigma_text = "0";
  std::string format = "json";
  app.add_option("--surface", surface_name, "fricke or double")->check(CLI::IsMember({"fricke", "double"}));
  app.add_option("--sigma", sigma_text, "constant term of the Fricke family (fricke only)");
  app.add_option("--format", format, "json, dot or plain")->check(CLI::IsMember({"json", "dot", "plain"}));

  std::function<Output()> action;
  auto is_double = [&] { return surface_name == "double"; };
  auto sigma = [&] {
    Rational s = rational_arg("--sigma", sigma_text);
    if (s != 0 && is_double()) throw UsageError("--sigma: only the fricke surface has a sigma family");
    return s;
  };
  auto surface_tag = [&] { return is_double() ? SurfaceTag::double_fricke : SurfaceTag::fricke; };

  // Positional and per-command option storage.
  std::string a1, a2, a3, base_text, root_text = "1,1,1", n0_text, family = "TA";
  std::optional<unsigned> depth;
  std::optional<std::string> max_component;
  std::string n_text = "1";
  std::uint64_t seed = 1;
  std::size_t pairs = 500;
  unsigned height = 50;

  auto frame = [&] { return SectionFrame(list_arg<3>("--base", base_text)); };
  auto f2_frame = [&] { return F2SectionFrame(list_arg<3>("--base", base_text)); };

  // tree
  auto* tree = app.add_subcommand("tree", "Vieta tree of integral points");
  tree->add_option("--root", root_text, "root triple (default 1,1,1)");
  auto* depth_opt = tree->add_option("--depth", depth, "breadth-first depth");
  auto* bound_opt = tree->add_option("--max-component", max_component, "largest absolute entry kept");
  depth_opt->excludes(bound_opt);
  tree->callback([&] {
    action = [&] {
      if (!depth && !max_component) throw UsageError("tree: one of --depth or --max-component is required");
      const IntTriple root = int_triple_arg("--root", root_text);
      TreeLimit limit = depth ? TreeLimit(DepthLimit{*depth})
                              : TreeLimit(ComponentLimit{integer_arg("--max-component", *max_component)});
      return tree_output(generate(surface_tag(), root, limit));
    };
  });

  // negative-tree
  auto* neg = app.add_subcommand("negative-tree", "Integral points of the double surface grown from (-n, 0, n)");
  neg->add_option("--n", n_text, "positive integer n (default 1)");
  neg->add_option("--depth", depth, "breadth-first depth")->required();
  neg->callback([&] {
    action = [&] {
      const Integer n = integer_arg("--n", n_text);
      if (n <= 0) throw UsageError("--n: must be positive");
      return tree_output(generate(SurfaceTag::double_fricke, {Integer(-n), Integer(0), n}, DepthLimit{*depth}));
    };
  });

  // frobenius
  std::string frob_bound;
  auto* frob = app.add_subcommand("frobenius", "Positive Markov triples grouped by largest component");
  frob->add_option("--max-component", frob_bound, "largest component bound")->required();
  frob->callback([&] {
    action = [&] {
      const FrobeniusReport report = frobenius_scan(integer_arg("--max-component", frob_bound));
      json by_largest = json::object();
      for (const auto& [largest, triples] : report.by_largest) {
        json list = json::array();
        for (const auto& t : triples) list.push_back(to_json(t));
        by_largest[to_string(largest)] = std::move(list);
      }
      json dup = json::array();
      for (const auto& d : report.duplicated) dup.push_back(to_string(d));
      json r;
      r["bound"] = to_string(report.bound);
      r["triples"] = report.triple_count;
      r["distinct_largest"] = report.by_largest.size();
      r["duplicates"] = dup;
      r["by_largest"] = std::move(by_largest);
      std::string plain = std::to_string(report.triple_count) + " triples, " +
                          std::to_string(report.by_largest.size()) + " distinct largest components, " +
                          (report.duplicated.empty() ? "no duplicates" : std::to_string(report.duplicated.size()) + " duplicated");
      return result(std::move(r), plain);
    };
  });

  // fundamental
  auto* fund = app.add_subcommand("fundamental", "Positive Markov triple with largest entry n0");
  fund->add_option("N0", n0_text)->required();
  fund->callback([&] {
    action = [&] {
      const FundamentalPoint f = fundamental_point(integer_arg("N0", n0_text));
      json r;
      r["triple"] = to_json(f.triple.values);
      r["base"] = to_json(f.triple.as_section_base());
      r["count"] = f.count;
      return result(std::move(r), to_string(f.triple.values) + (f.count == 1 ? "" : " (not unique)"));
    };
  });

  // compose / star
  auto* compose_cmd = app.add_subcommand("compose", "Third intersection of the line PQ with the surface");
  compose_cmd->add_option("P", a1)->required();
  compose_cmd->add_option("Q", a2)->required();
  compose_cmd->callback([&] {
    action = [&] {
      const Triple p = list_arg<3>("P", a1), q = list_arg<3>("Q", a2);
      if (is_double()) {
        sigma();
        return compose_output(f2_compose(F2Point(p), F2Point(q)));
      }
      const FrickeSurface s(sigma());
      return compose_output(compose(FrickePoint(p, s), FrickePoint(q, s)));
    };
  });
  auto* star_cmd = app.add_subcommand("star", "(1,1,1) o (P o Q) on the Fricke surface");
  star_cmd->add_option("P", a1)->required();
  star_cmd->add_option("Q", a2)->required();
  star_cmd->callback([&] {
    action = [&] {
      if (is_double()) throw UsageError("--surface: star is defined on the fricke surface only");
      const FrickeSurface s(sigma());
      return compose_output(star(FrickePoint(list_arg<3>("P", a1), s), FrickePoint(list_arg<3>("Q", a2), s)));
    };
  });

  // sections
  auto* sadd = app.add_subcommand("section-add", "P1 + P2 on the section through --base");
  sadd->add_option("--base", base_text, "base point m0,n0,k0")->required();
  sadd->add_option("P1", a1)->required();
  sadd->add_option("P2", a2)->required();
  sadd->callback([&] {
    action = [&] {
      const SectionPoint p = section_point_arg("P1", a1), q = section_point_arg("P2", a2);
      return section_output(is_double() ? f2_quadric_add(f2_frame(), p, q) : quadric_add(frame(), p, q));
    };
  });
  auto* sdouble = app.add_subcommand("section-double", "P + P on the section through --base");
  sdouble->add_option("--base", base_text, "base point m0,n0,k0")->required();
  sdouble->add_option("P", a1)->required();
  sdouble->callback([&] {
    action = [&] {
      const SectionPoint p = section_point_arg("P", a1);
      return section_output(is_double() ? f2_quadric_double(f2_frame(), p) : quadric_double(frame(), p));
    };
  });
  auto* sinv = app.add_subcommand("section-inverse", "-P on the section through --base");
  sinv->add_option("--base", base_text, "base point m0,n0,k0")->required();
  sinv->add_option("P", a1)->required();
  sinv->callback([&] {
    action = [&] {
      const SectionPoint p = section_point_arg("P", a1);
      return section_output(is_double() ? f2_quadric_inverse(f2_frame(), p) : quadric_inverse(frame(), p));
    };
  });

  auto* dih = app.add_subcommand("dihedral", "Apply A, TA, C, TC, B or T to a section point");
  dih->add_option("--base", base_text, "base point m0,n0,k0")->required();
  dih->add_option("MAP", a1)->required()->check(CLI::IsMember({"A", "TA", "C", "TC", "B", "T"}));
  dih->add_option("P", a2)->required();
  dih->callback([&] {
    action = [&] {
      if (is_double()) throw UsageError("--surface: dihedral maps are implemented for the fricke surface");
      const SectionFrame f = frame();
      const SectionPoint p = section_point_arg("P", a2);
      f.require(p);
      return section_output(dihedral(f, p, parse_dihedral_map(a1)));
    };
  });

  long power = 0;
  auto* tap = app.add_subcommand("ta-power", "r-th power of TA or TC in closed form");
  tap->add_option("--base", base_text, "base point m0,n0,k0")->required();
  tap->add_option("--family", family, "TA or TC (default TA)")->check(CLI::IsMember({"TA", "TC"}));
  tap->add_option("P", a1)->required();
  tap->add_option("R", power)->required()->check(CLI::NonNegativeNumber);
  tap->callback([&] {
    action = [&] {
      if (is_double()) throw UsageError("--surface: ta-power is implemented for the fricke surface");
      const SectionFrame f = frame();
      const SectionPoint p = section_point_arg("P", a1);
      f.require(p);
      return section_output(ta_power(f, p, power, family == "TA" ? TranslationFamily::TA : TranslationFamily::TC));
    };
  });

  auto* cheb = app.add_subcommand("chebyshev", "b_r(n0)");
  cheb->add_option("--n0", n0_text)->required();
  cheb->add_option("R", power)->required()->check(CLI::Range(-2L, 1000000L));
  cheb->callback([&] {
    action = [&] {
      const Rational b = chebyshev_b(power, rational_arg("--n0", n0_text));
      return result(to_string(b), to_string(b));
    };
  });

  auto* conv = app.add_subcommand("convergent", "b_r(n0) / b_{r-1}(n0)");
  conv->add_option("--n0", n0_text)->required();
  conv->add_option("R", power)->required();
  conv->callback([&] {
    action = [&] {
      const Rational c = cf_convergent(rational_arg("--n0", n0_text), power);
      return result(to_string(c), to_string(c));
    };
  });

  auto* inf = app.add_subcommand("infinity", "Directions x/z of the two points at infinity of a section");
  inf->add_option("--n0", n0_text)->required();
  inf->callback([&] {
    action = [&] {
      const Rational n0 = rational_arg("--n0", n0_text);
      return roots_output(is_double() ? f2_infinity_points(n0) : infinity_points(n0));
    };
  });

  auto* param = app.add_subcommand("param", "Affine chart (P, Q) -> surface point");
  param->add_option("P", a1)->required();
  param->add_option("Q", a2)->required();
  param->callback([&] {
    action = [&] {
      const Rational P = rational_arg("P", a1), Q = rational_arg("Q", a2);
      const Triple t = is_double() ? f2_param_affine(P, Q).coords() : param_affine(P, Q).coords();
      return result(to_json(t), to_string(t));
    };
  });

  auto* phi_cmd = app.add_subcommand("phi", "P^2 -> closure of the surface");
  phi_cmd->add_option("POINT", a1)->required();
  phi_cmd->callback([&] {
    action = [&] {
      const ProjectivePoint2 p = projective_arg<2>("POINT", a1);
      const ProjectivePoint3 r = is_double() ? f2_phi(p) : phi(p);
      return result(to_string(r), to_string(r));
    };
  });

  auto* psi_cmd = app.add_subcommand("psi", "Closure of the surface -> P^2");
  psi_cmd->add_option("POINT", a1)->required();
  psi_cmd->callback([&] {
    action = [&] {
      const ProjectivePoint3 p = projective_arg<3>("POINT", a1);
      const Surface s = is_double() ? Surface::double_fricke() : Surface::fricke();
      if (!s.contains(p)) throw Error(Errc::off_surface, to_string(p) + " is not on the surface");
      const ProjectivePoint2 r = psi(p);
      return result(to_string(r), to_string(r));
    };
  });

  auto* p2v = app.add_subcommand("p2-viete", "Viete generator transported to P^2");
  p2v->add_option("GENERATOR", a1)->required();
  p2v->add_option("POINT", a2)->required();
  p2v->callback([&] {
    action = [&] {
      const VieteGenerator g = generator_arg(a1);
      const ProjectivePoint2 p = projective_arg<2>("POINT", a2);
      const ProjectivePoint2 r = is_double() ? f2_p2_viete(p, g) : p2_viete(p, g);
      return result(to_string(r), to_string(r));
    };
  });

  int which = 1;
  auto* p2i = app.add_subcommand("p2-involution", "Coordinate involution transported to P^2");
  p2i->add_option("WHICH", which)->required()->check(CLI::Range(1, 3));
  p2i->add_option("POINT", a2)->required();
  p2i->callback([&] {
    action = [&] {
      const ProjectivePoint2 p = projective_arg<2>("POINT", a2);
      const ProjectivePoint2 r = is_double() ? f2_p2_involution(p, which) : p2_involution(p, which);
      return result(to_string(r), to_string(r));
    };
  });

  auto* p2c = app.add_subcommand("p2-compose", "Composition transported to P^2");
  p2c->add_option("A", a1)->required();
  p2c->add_option("B", a2)->required();
  p2c->callback([&] {
    action = [&] {
      const ProjectivePoint2 a = projective_arg<2>("A", a1), b = projective_arg<2>("B", a2);
      const ProjectivePoint2 r = is_double() ? f2_p2_compose(a, b) : p2_compose(a, b);
      return result(to_string(r), to_string(r));
    };
  });

  auto* check = app.add_subcommand("check", "Seeded comparison of the closed-form composition with the line oracle");
  check->add_option("--seed", seed, "random seed (default 1)");
  check->add_option("--pairs", pairs, "pairs per surface (default 500)");
  check->add_option("--height", height, "bound on chart numerators and denominators (default 50)")
      ->check(CLI::Range(1u, 1000000u));
  check->callback([&] {
    action = [&] {
      std::mt19937_64 rng(seed);
      const OracleTally f = oracle_check<FrickePoint>(
          rng, pairs, height, Surface::fricke(), random_fricke_point,
          [](const FrickePoint& p, const FrickePoint& q) { return compose(p, q); });
      const OracleTally d = oracle_check<F2Point>(rng, pairs, height, Surface::double_fricke(), random_f2_point,
                                                  f2_compose);
      json r;
      r["seed"] = std::to_string(seed);
      r["pairs"] = pairs;
      r["fricke"] = f.to_json();
      r["double"] = d.to_json();
      std::string plain = "fricke: " + std::to_string(f.agree) + " agree, " + std::to_string(f.mismatch) +
                          " mismatch; double: " + std::to_string(d.agree) + " agree, " +
                          std::to_string(d.mismatch) + " mismatch";
      if (f.mismatch || d.mismatch) throw Error(Errc::undefined_image, "oracle mismatch: " + plain);
      return result(std::move(r), plain);
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return ok;
    }
    err << "usage error: " << e.what() << "\n";
    return usage_error;
  }

  try {
    const Output o = action();
    if (format == "dot") {
      if (!o.dot) throw UsageError("--format: dot output is only available for trees");
      out << *o.dot << "\n";
    } else if (format == "plain") {
      out << o.plain << "\n";
    } else {
      out << o.payload.dump() << "\n";
    }
    return ok;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return usage_error;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return e.code() == Errc::parse_error ? usage_error : domain_error;
  }
}

}  // namespace fricke::cli
