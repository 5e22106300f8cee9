// Command-line front end: parse posets, run the twinned-polytope
// constructions and formulas, cross-check them against the geometry
// oracle, and emit text or JSON reports.
//
// Exit codes: 0 success, 1 parse/validation error, 2 capacity error,
// 3 internal oracle mismatch (never expected).

#include "twinpoly/io.hpp"
#include "twinpoly/twinned.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace twinpoly;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitCapacity = 2;
constexpr int kExitMismatch = 3;

// CLI-side bound for anything that needs the hull oracle.
constexpr int kMaxHullCliSize = 5;

struct Options {
  std::string p_file, q_file, w_list, out_file;
  std::string kind = "cc";
  std::string method = "formula";
  bool json_mode = false;
  bool count_only = false;
};

struct Mismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Poset load_poset(const std::string& path) {
  try {
    return parse_poset(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  } catch (const CapacityError& e) {
    throw CapacityError(path + ": " + e.what());
  }
}

void require_hull_range(const Poset& p, const std::string& what) {
  if (p.size() > kMaxHullCliSize)
    throw CapacityError(what +
                        " uses the hull oracle, which is limited to d <= " +
                        std::to_string(kMaxHullCliSize) + " (got d = " +
                        std::to_string(p.size()) + ")");
}

std::uint32_t parse_w_list(const std::string& list, int d) {
  if (list == "-" || list.empty()) return 0;
  std::uint32_t mask = 0;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int label = 0;
    try {
      label = std::stoi(item);
    } catch (...) {
      throw DomainError("bad label '" + item + "' in --w");
    }
    if (label < 1 || label > d)
      throw DomainError("--w label " + item + " out of range 1.." +
                        std::to_string(d));
    mask |= 1u << (label - 1);
  }
  return mask;
}

json subset_list_to_json(const SubsetList& list) {
  json out = json::array();
  for (std::uint32_t mask : list.members) out.push_back(subset_labels(mask));
  return out;
}

std::string format_vector(const IntVector& v) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i > 0) s += ", ";
    s += v[i].str();
  }
  return s + ")";
}

std::string format_point(const RationalVector& v) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i > 0) s += ", ";
    s += v[i].str();
  }
  return s + ")";
}

// Sends the report to stdout and, when requested, to --out.
void emit(const Options& opt, const std::string& text, const json& j) {
  const std::string payload = opt.json_mode ? j.dump() + "\n" : text;
  std::cout << payload;
  if (!opt.out_file.empty()) {
    std::ofstream out(opt.out_file);
    if (!out) throw DomainError("cannot write file '" + opt.out_file + "'");
    out << payload;
  }
}

int run_validate(const Options& opt) {
  const Poset p = load_poset(opt.p_file);
  std::ostringstream text;
  text << "valid poset: d = " << p.size()
       << ", strict relations (closure) = " << p.relation_size() << "\n";
  emit(opt, text.str(),
       json{{"valid", true},
            {"d", p.size()},
            {"relations", p.relation_size()}});
  return kExitOk;
}

int run_enumerate(const Options& opt) {
  const Poset p = load_poset(opt.p_file);
  const SubsetList ids = ideals(p);
  const SubsetList antis = antichains(p);
  const SubsetList chains = maximal_chains(p);
  const Int extensions = count_linear_extensions(p);
  std::ostringstream text;
  text << "d = " << p.size() << "\n";
  text << "linear extensions = " << extensions.str() << "\n";
  auto section = [&](const char* name, const SubsetList& list) {
    text << name << " (" << list.size() << "):";
    for (std::uint32_t mask : list.members)
      text << " " << subset_to_string(mask);
    text << "\n";
  };
  section("ideals", ids);
  section("antichains", antis);
  section("maximal chains", chains);
  emit(opt, text.str(),
       json{{"d", p.size()},
            {"linear_extensions", extensions.str()},
            {"ideals", subset_list_to_json(ids)},
            {"antichains", subset_list_to_json(antis)},
            {"maximal_chains", subset_list_to_json(chains)}});
  return kExitOk;
}

int run_volume(const Options& opt) {
  const Poset p = load_poset(opt.p_file);
  const Poset q = load_poset(opt.q_file);
  const GammaKind kind = gamma_kind_from_string(opt.kind);
  const bool want_formula = opt.method == "formula" || opt.method == "both";
  const bool want_hull = opt.method == "hull" || opt.method == "both";

  json j{{"kind", opt.kind}, {"method", opt.method}};
  std::ostringstream text;
  Rational formula, hull;
  if (want_formula) {
    if (kind == GammaKind::OO && !has_common_linear_extension(p, q))
      throw DomainError(
          "the volume formula applies to kind oo only when the posets share "
          "a linear extension; use --method hull");
    formula = volume_formula(p, q);
    j["volume"] = rational_to_string(formula);
  }
  if (want_hull) {
    require_hull_range(p, "--method " + opt.method);
    hull = hull_volume(gamma_vertices(kind, p, q));
    j[want_formula ? "volume_hull" : "volume"] = rational_to_string(hull);
  }
  if (opt.method == "both") {
    const bool agree = formula == hull;
    j["agree"] = agree;
    text << "formula = " << formula.str() << ", hull = " << hull.str() << ", "
         << (agree ? "agree" : "MISMATCH") << "\n";
    emit(opt, text.str(), j);
    if (!agree) throw Mismatch("volume formula and hull oracle disagree");
  } else {
    text << opt.method << " = " << (want_formula ? formula : hull).str()
         << "\n";
    emit(opt, text.str(), j);
  }
  return kExitOk;
}

int run_facets(const Options& opt) {
  const Poset p = load_poset(opt.p_file);
  const Poset q = load_poset(opt.q_file);
  if (gamma_kind_from_string(opt.kind) != GammaKind::CC)
    throw DomainError("the facet characterization applies to --kind cc");
  const bool want_hull = opt.method == "hull" || opt.method == "both";
  const FacetNormalSet normals = facet_normals(p, q);

  json j{{"facet_count", normals.size()}};
  std::ostringstream text;
  if (opt.count_only && !want_hull) {
    text << normals.size() << "\n";
  } else {
    text << "facet count = " << normals.size() << "\n";
  }
  if (!opt.count_only) {
    // every supporting hyperplane of the cc polytope sits at rhs 1
    HRep pred;
    pred.dim = normals.dim;
    for (const auto& a : normals.normals) {
      text << format_vector(a) << "\n";
      pred.rows.push_back(HalfSpace{a, Rational(1)});
    }
    j["hrep"] = hrep_to_json(pred);
  }
  bool agree = true;
  if (want_hull) {
    require_hull_range(p, "--method " + opt.method);
    const HRep h = hull_facets(gamma_vertices(GammaKind::CC, p, q));
    agree = h.rows.size() == normals.size();
    for (const auto& row : h.rows)
      if (row.rhs != 1 || !normals.contains(row.normal)) agree = false;
    j["facet_count_hull"] = h.rows.size();
    j["agree"] = agree;
    text << "hull count = " << h.rows.size() << ", "
         << (agree ? "agree" : "MISMATCH") << "\n";
  }
  emit(opt, text.str(), j);
  if (!agree) throw Mismatch("facet normals and hull oracle disagree");
  return kExitOk;
}

int run_dual(const Options& opt) {
  const Poset p = load_poset(opt.p_file);
  const Poset q = load_poset(opt.q_file);
  if (gamma_kind_from_string(opt.kind) != GammaKind::CC)
    throw DomainError("the dual vertex description applies to --kind cc");
  const bool want_hull = opt.method == "hull" || opt.method == "both";
  const VRep dual = dual_vertices(p, q);

  json j{{"dual_vertex_count", dual.vertices.size()},
         {"dual", vrep_to_json(dual)}};
  std::ostringstream text;
  text << "dual vertex count = " << dual.vertices.size() << "\n";
  if (!opt.count_only)
    for (const auto& v : dual.vertices) text << format_point(v) << "\n";
  bool agree = true;
  if (want_hull) {
    require_hull_range(p, "--method " + opt.method);
    const VRep oracle =
        polar_dual(hull_facets(gamma_vertices(GammaKind::CC, p, q)));
    agree = oracle == dual;
    j["agree"] = agree;
    text << "polar-dual oracle: " << (agree ? "agree" : "MISMATCH") << "\n";
  }
  emit(opt, text.str(), j);
  if (!agree) throw Mismatch("dual vertices and polar-dual oracle disagree");
  return kExitOk;
}

int run_reflexive(const Options& opt) {
  const Poset p = load_poset(opt.p_file);
  const Poset q = load_poset(opt.q_file);
  require_hull_range(p, "reflexive");
  const GammaKind kind = gamma_kind_from_string(opt.kind);
  const PolytopeReport report = analyze(kind, p, q);
  std::ostringstream text;
  text << "kind = " << to_string(report.kind) << "\n"
       << "volume = " << report.volume.str() << "\n"
       << "facet count = " << report.facet_count << "\n"
       << "reflexive = " << (report.reflexive ? "yes" : "no") << "\n"
       << "centrally symmetric = "
       << (report.centrally_symmetric ? "yes" : "no") << "\n";
  if (report.common_linear_extension.has_value())
    text << "common linear extension = "
         << (*report.common_linear_extension ? "yes" : "no") << "\n";
  emit(opt, text.str(), report_to_json(report));
  return kExitOk;
}

int run_region_check(const Options& opt, bool w_given) {
  const Poset p = load_poset(opt.p_file);
  const Poset q = load_poset(opt.q_file);
  require_hull_range(p, "region-check");
  std::ostringstream text;
  json checks = json::array();
  bool all_ok = true;
  auto record = [&](std::uint32_t w, bool ok) {
    all_ok = all_ok && ok;
    text << "W=" << subset_to_string(w) << ": " << (ok ? "ok" : "MISMATCH")
         << "\n";
    checks.push_back(json{{"w", subset_labels(w)}, {"ok", ok}});
  };
  if (w_given) {
    const std::uint32_t w = parse_w_list(opt.w_list, p.size());
    record(w, check_region_decomposition(p, q, w));
  } else {
    const std::vector<bool> table = region_decomposition_table(p, q);
    for (std::uint32_t w = 0; w < table.size(); ++w) record(w, table[w]);
  }
  text << (all_ok ? "all regions match" : "REGION MISMATCH") << "\n";
  emit(opt, text.str(),
       json{{"checks", std::move(checks)}, {"all_ok", all_ok}});
  if (!all_ok) throw Mismatch("orthant decomposition mismatch");
  return kExitOk;
}

// Exhaustive d <= 3 oracle sweep plus the worked examples; used by CI.
int run_selftest(const Options& opt) {
  std::size_t checks = 0;
  auto require = [&](bool ok, const std::string& what) {
    ++checks;
    if (!ok) throw Mismatch("selftest: " + what);
    if (!opt.json_mode) std::cout << "ok: " << what << "\n";
  };

  // the two Lambda-shaped 3-element posets
  const Poset lp = Poset::from_relations(3, {{2, 1}, {3, 1}});
  require(volume_formula(lp, lp) == 2, "Lambda pair volume formula = 2");
  const std::vector<Int> terms = orthant_extension_counts(lp, lp);
  std::size_t ones = 0, twos = 0;
  for (const Int& e : terms) {
    if (e == 1) ++ones;
    if (e == 2) ++twos;
  }
  require(ones == 4 && twos == 4, "Lambda pair orthant terms 4x1 + 4x2");
  require(dual_vertices(lp, lp).vertices.size() == 12,
          "Lambda pair dual has 12 vertices");

  // antichain (+) chain family
  for (int d = 1; d <= 5; ++d) {
    const Poset a = Poset::antichain(d), c = Poset::chain(d);
    Rational expect = 0;
    Int kfact = 1;
    for (int k = 0; k <= d; ++k) {
      if (k > 0) kfact *= k;
      expect += Rational(1) / Rational(kfact);
    }
    require(volume_formula(a, c) == expect,
            "antichain/chain volume d=" + std::to_string(d));
    require(facet_normals(a, c).size() ==
                std::size_t(d) * (std::size_t(1) << (d - 1)) + 1,
            "antichain/chain facet count d=" + std::to_string(d));
  }

  // negative controls
  require(no_poset_with_k_antichains(3, 7), "no 3-poset with 7 antichains");
  {
    const Poset a3 = Poset::antichain(3);
    require(facet_normals(a3, a3).size() < maximal_chain_total(a3, a3),
            "chain dedup is strict for 3-antichains");
    const Poset c2 = Poset::chain(2);
    const VRep cut =
        restrict_to_orthant(gamma_vertices(GammaKind::OO, c2, c2), 1u);
    bool nonintegral = false;
    for (const auto& v : cut.vertices)
      if (!is_lattice_point(v)) nonintegral = true;
    require(nonintegral, "OO orthant cut has a non-integral vertex");
  }

  // exhaustive oracle sweep at d <= 3
  for (int d = 1; d <= 3; ++d) {
    const std::vector<Poset> all = enumerate_posets(d);
    for (const Poset& p : all)
      for (const Poset& q : all) {
        const VRep gamma = gamma_vertices(GammaKind::CC, p, q);
        const HRep hull = hull_facets(gamma);
        if (!(volume_formula(p, q) == hull_volume(gamma)))
          throw Mismatch("selftest: volume mismatch at d=" +
                         std::to_string(d));
        const FacetNormalSet normals = facet_normals(p, q);
        if (normals.size() != hull.rows.size())
          throw Mismatch("selftest: facet count mismatch");
        for (const auto& row : hull.rows)
          if (row.rhs != 1 || !normals.contains(row.normal))
            throw Mismatch("selftest: facet normal mismatch");
        if (!(dual_vertices(p, q) == polar_dual(hull)))
          throw Mismatch("selftest: dual mismatch");
        if (!is_reflexive(gamma, hull))
          throw Mismatch("selftest: cc not reflexive");
        if (!is_reflexive(gamma_vertices(GammaKind::OC, p, q)))
          throw Mismatch("selftest: oc not reflexive");
        for (bool ok : region_decomposition_table(p, q))
          if (!ok) throw Mismatch("selftest: region mismatch");
        ++checks;
      }
    if (!opt.json_mode)
      std::cout << "ok: exhaustive oracle sweep at d = " << d << " ("
                << all.size() * all.size() << " pairs)\n";
  }

  emit(opt, "selftest passed (" + std::to_string(checks) + " checks)\n",
       json{{"passed", checks}, {"failed", 0}});
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"twinned chain polytopes of finite posets"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd, bool two_posets) {
    cmd->add_option("--p", opt.p_file, "poset file for P")->required();
    if (two_posets)
      cmd->add_option("--q", opt.q_file, "poset file for Q")->required();
    cmd->add_flag("--json", opt.json_mode, "emit a JSON report");
    cmd->add_option("--out", opt.out_file, "also write the report to FILE");
  };

  CLI::App* validate =
      app.add_subcommand("validate", "parse and validate a poset file");
  add_common(validate, false);

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "ideals, antichains, maximal chains, extension count");
  add_common(enumerate, false);

  CLI::App* volume = app.add_subcommand(
      "volume", "volume of the twinned polytope (formula and/or hull oracle)");
  add_common(volume, true);
  volume->add_option("--kind", opt.kind, "polytope kind: cc|oc|oo")
      ->check(CLI::IsMember({"cc", "oc", "oo"}));
  volume->add_option("--method", opt.method, "formula|hull|both")
      ->check(CLI::IsMember({"formula", "hull", "both"}));

  CLI::App* facets = app.add_subcommand(
      "facets", "facet normals of the twinned chain polytope");
  add_common(facets, true);
  facets->add_option("--kind", opt.kind, "polytope kind (cc)")
      ->check(CLI::IsMember({"cc", "oc", "oo"}));
  facets->add_option("--method", opt.method, "formula|hull|both")
      ->check(CLI::IsMember({"formula", "hull", "both"}));
  facets->add_flag("--count-only", opt.count_only, "print only the count");

  CLI::App* dual = app.add_subcommand(
      "dual", "vertices of the dual of the twinned chain polytope");
  add_common(dual, true);
  dual->add_option("--kind", opt.kind, "polytope kind (cc)")
      ->check(CLI::IsMember({"cc", "oc", "oo"}));
  dual->add_option("--method", opt.method, "formula|hull|both")
      ->check(CLI::IsMember({"formula", "hull", "both"}));
  dual->add_flag("--count-only", opt.count_only, "print only the count");

  CLI::App* reflexive = app.add_subcommand(
      "reflexive", "geometry-verified report for the twinned polytope");
  add_common(reflexive, true);
  reflexive->add_option("--kind", opt.kind, "polytope kind: cc|oc|oo")
      ->check(CLI::IsMember({"cc", "oc", "oo"}));

  CLI::App* region =
      app.add_subcommand("region-check", "orthant decomposition certificate");
  add_common(region, true);
  CLI::Option* w_opt = region->add_option(
      "--w", opt.w_list,
      "comma-separated labels of W ('-' for the empty set)");

  CLI::App* selftest = app.add_subcommand(
      "selftest", "exhaustive d<=3 oracle suite and worked examples");
  selftest->add_flag("--json", opt.json_mode, "emit a JSON report");
  selftest->add_option("--out", opt.out_file, "also write the report to FILE");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (validate->parsed()) return run_validate(opt);
    if (enumerate->parsed()) return run_enumerate(opt);
    if (volume->parsed()) return run_volume(opt);
    if (facets->parsed()) return run_facets(opt);
    if (dual->parsed()) return run_dual(opt);
    if (reflexive->parsed()) return run_reflexive(opt);
    if (region->parsed()) return run_region_check(opt, w_opt->count() > 0);
    if (selftest->parsed()) return run_selftest(opt);
  } catch (const Mismatch& e) {
    std::cerr << "oracle mismatch: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitOk;
}
