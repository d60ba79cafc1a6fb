#include "arbor/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "arbor/families.hpp"
#include "arbor/harness.hpp"
#include "arbor/invariants.hpp"
#include "arbor/json_io.hpp"
#include "arbor/polytope.hpp"
#include "arbor/poset.hpp"
#include "arbor/volume.hpp"

namespace arbor {

namespace {

struct Report {
  json body = json::object();
  bool pass = true;
};

json poly_entry(const UniPoly& p, const std::string& var) {
  json j = unipoly_json(p, var);
  j["text"] = to_string(p, var);
  return j;
}

json bipoly_entry(const BiPoly& p, const std::string& a, const std::string& b) {
  json j = bipoly_json(p, a, b);
  j["text"] = to_string(p, a, b);
  return j;
}

json triangle_entry(const Triangle& t) {
  return {{"size", t.size}, {"matrix", triangle_matrix_json(t.poly)}, {"text", pretty_triangle(t.poly)}};
}

json check_entry(const CheckReport& r) { return {{"pass", r.pass}, {"checked", r.checked}, {"detail", r.detail}}; }

json verdicts_json(const std::vector<Verdict>& vs) {
  json arr = json::array();
  for (const auto& v : vs) arr.push_back({{"subject", v.subject}, {"pass", v.pass}, {"detail", v.detail}});
  return arr;
}

// Text rendering of the same report.

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void render(const json& j, std::ostream& os, const std::string& indent) {
  for (const auto& [key, v] : j.items()) {
    if (v.is_object() && v.contains("text")) {
      const std::string t = v["text"].get<std::string>();
      if (t.find('\n') == std::string::npos) {
        os << indent << key << ": " << t << "\n";
      } else {
        os << indent << key << ":\n";
        std::istringstream lines(t);
        for (std::string line; std::getline(lines, line);) os << indent << "  " << line << "\n";
      }
    } else if (v.is_object()) {
      os << indent << key << ":\n";
      render(v, os, indent + "  ");
    } else if (v.is_array() && !v.empty() && v.front().is_object() && v.front().contains("subject")) {
      os << indent << key << ":\n";
      for (const auto& e : v)
        os << indent << "  " << (e["pass"].get<bool>() ? "PASS " : "FAIL ") << scalar_text(e["subject"]) << ": "
           << scalar_text(e["detail"]) << "\n";
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      os << indent << key << ":\n";
      for (const auto& e : v) {
        os << indent << "  -";
        for (const auto& [k2, v2] : e.items()) os << " " << k2 << "=" << (v2.is_object() && v2.contains("text") ? scalar_text(v2["text"]) : scalar_text(v2));
        os << "\n";
      }
    } else {
      os << indent << key << ": " << scalar_text(v) << "\n";
    }
  }
}

void emit(const Report& r, const SweepConfig& cfg, std::ostream& out) {
  json j = r.body;
  j["pass"] = r.pass;
  if (cfg.format == "json") {
    out << j.dump(2) << "\n";
  } else {
    render(j, out, "");
  }
}

// Commands.

Report cmd_enumerate(int n) {
  if (n < 1) throw std::invalid_argument("size must be positive");
  Report r;
  json list = json::array();
  for (const auto& t : enumerate_arbors(n)) list.push_back(t.encode());
  r.body["size"] = n;
  r.body["count"] = list.size();
  r.body["arbors"] = list;
  return r;
}

const std::vector<std::string> kWhich = {"all", "ehrhart", "zeta", "refined-zeta", "k", "m", "transmute", "f", "h", "laplace"};

Report cmd_invariants(const Arbor& t, const std::string& which) {
  Report r;
  r.body["arbor"] = t.encode();
  r.body["size"] = t.size();
  auto want = [&](const char* name) { return which == "all" || which == name; };
  if (want("ehrhart")) r.body["ehrhart"] = poly_entry(ehrhart(t), "u");
  if (want("zeta")) r.body["zeta"] = poly_entry(zeta(t), "u");
  if (want("refined-zeta")) r.body["refined-zeta"] = bipoly_entry(zeta_refined(t), "u", "X");
  if (want("k")) r.body["k"] = bipoly_entry(k_poly(t), "X", "Y");
  if (want("m") || want("transmute")) {
    const Triangle m = m_triangle(t);
    if (want("m")) r.body["m"] = triangle_entry(m);
    if (want("transmute")) r.body["transmute"] = triangle_entry(transmute(m));
  }
  if (want("f")) r.body["f"] = poly_entry(f_vector(t), "X");
  if (want("h")) r.body["h"] = poly_entry(h_vector(t), "X");
  if (want("laplace")) r.body["laplace"] = bipoly_entry(laplace_poly(t), "E", "V");
  return r;
}

Report cmd_polytope(const Arbor& t, const SweepConfig& cfg, bool with_points) {
  Report r;
  const auto pts = lattice_points(t, 1, cfg.guard_elements);
  const auto verts = vertices(t);
  const auto mink = check_minkowski(t, cfg.guard_elements * 10);
  const auto newton = newton_check(t, cfg.guard_elements);
  r.body["arbor"] = t.encode();
  r.body["dimension"] = t.size();
  r.body["lattice_points"] = pts.size();
  r.body["vertex_count"] = verts.size();
  r.body["vertices"] = points_json(verts);
  if (with_points) r.body["points"] = points_json(pts);
  r.body["minkowski"] = check_entry(mink);
  r.body["newton"] = check_entry(newton);
  r.pass = mink.pass && newton.pass;
  return r;
}

Report cmd_poset(const Arbor& t, const SweepConfig& cfg) {
  Report r;
  const FinitePoset p = build_poset(t, cfg.guard_elements);
  const UniPoly z = zeta(t);
  r.body["arbor"] = t.encode();
  r.body["elements"] = p.size();
  r.body["max_rank"] = p.max_rank();
  r.body["rank_generating_function"] = poly_entry(rank_generating_function(p), "X");
  r.body["cubical_f_vector"] = poly_entry(cubical_f_vector(p), "X");
  r.body["maximal_chains"] = integer_json(maximal_chain_count(p));
  json chains = json::object();
  bool zeta_ok = true;
  for (int q = 2; q <= 4; ++q) {
    const Integer c = chain_count(p, q);
    chains[std::to_string(q)] = integer_json(c);
    zeta_ok = zeta_ok && z(Rational(q)) == Rational(c);
  }
  r.body["chain_counts"] = chains;
  r.body["zeta_matches_chain_counts"] = zeta_ok;
  r.pass = zeta_ok;
  if (p.size() <= 5000) {
    const bool ok = mobius_triangle(p) == m_triangle(t).poly;
    r.body["mobius_matches_m_triangle"] = ok;
    r.pass = r.pass && ok;
  } else {
    r.body["mobius_matches_m_triangle"] = "skipped: more than 5000 elements";
  }
  return r;
}

Report cmd_volume(const Arbor& t) {
  Report r;
  const BiPoly l = laplace_poly(t);
  const PiecewisePoly f = volume_function(t);
  const Rational v = volume(t);
  json pieces = json::array();
  for (std::size_t i = 0; i < f.pieces.size(); ++i)
    pieces.push_back({{"from", i}, {"to", i + 1}, {"poly", poly_entry(f.pieces[i], "h")}});
  r.body["arbor"] = t.encode();
  r.body["laplace"] = bipoly_entry(l, "E", "V");
  r.body["volume"] = v.get_str();
  r.body["volume_function"] = pieces;
  r.body["continuous"] = f.continuous();
  r.pass = f.continuous() && f.integral() == v;
  return r;
}

Report cmd_fuss(const FussParams& fp, const SweepConfig& cfg) {
  validate(fp);
  Report r;
  const FinitePoset p = fuss_elements(fp, cfg.guard_elements);
  const UniPoly z = fuss_zeta(fp);
  const Triangle m = fuss_m_triangle(fp);
  bool zeta_ok = true;
  for (int q = 2; q <= 4; ++q) zeta_ok = zeta_ok && z(Rational(q)) == Rational(chain_count(p, q));
  const bool rec_ok = fuss_m_recursive(fp) == m;
  r.body["params"] = {{"m", fp.m}, {"x", fp.x}, {"y", fp.y}};
  r.body["elements"] = p.size();
  r.body["zeta"] = poly_entry(z, "u");
  r.body["m"] = triangle_entry(m);
  r.body["zeta_matches_chain_counts"] = zeta_ok;
  r.body["recursion_matches"] = rec_ok;
  r.pass = zeta_ok && rec_ok;
  if (p.size() <= 5000) {
    const bool ok = mobius_triangle(p) == m.poly;
    r.body["mobius_matches"] = ok;
    r.pass = r.pass && ok;
  }
  return r;
}

Report cmd_typeb(const TypeBParams& bp, const SweepConfig& cfg) {
  if (bp.n < 1 || bp.k < 0) throw std::invalid_argument("typeb needs n >= 1 and k >= 0");
  Report r;
  const FinitePoset p = typeb_elements(bp, cfg.guard_elements);
  const UniPoly z = typeb_zeta(bp);
  const Triangle m = typeb_m_triangle(bp);
  bool zeta_ok = true;
  for (int q = 2; q <= 4; ++q) zeta_ok = zeta_ok && z(Rational(q)) == Rational(chain_count(p, q));
  const bool rec_ok = typeb_m_recursive(bp) == m;
  const bool ideals_ok = typeb_upper_ideals_ok(bp);
  r.body["params"] = {{"n", bp.n}, {"k", bp.k}};
  r.body["elements"] = p.size();
  r.body["zeta"] = poly_entry(z, "u");
  r.body["m"] = triangle_entry(m);
  r.body["zeta_matches_chain_counts"] = zeta_ok;
  r.body["recursion_matches"] = rec_ok;
  r.body["upper_ideals_match"] = ideals_ok;
  r.pass = zeta_ok && rec_ok && ideals_ok;
  if (p.size() <= 5000) {
    const bool ok = mobius_triangle(p) == m.poly;
    r.body["mobius_matches"] = ok;
    r.pass = r.pass && ok;
  }
  return r;
}

Report cmd_nc(const std::string& type, int n) {
  if (n < 1) throw std::invalid_argument("nc needs n >= 1");
  const CoxeterType ct = type == "A" ? CoxeterType::A : CoxeterType::B;
  Report r;
  const Triangle nc = nc_m_triangle(ct, n);
  const Arbor t = ct == CoxeterType::A ? type_a(n) : type_b(n);
  const bool partner = transmute(m_triangle(t)) == nc;
  const bool dual = is_self_dual(nc);
  r.body["type"] = type;
  r.body["n"] = n;
  r.body["f"] = bipoly_entry(cluster_f_triangle(ct, n), "X", "Y");
  r.body["m"] = triangle_entry(nc);
  r.body["self_dual"] = dual;
  r.body["transmuted_partner"] = {{"arbor", t.encode()}, {"matches", partner}};
  r.pass = partner && dual;
  return r;
}

Report family_report(const FamilyReport& fr) {
  Report r;
  json lines = json::array();
  for (const auto& l : fr.lines) lines.push_back({{"subject", "n=" + std::to_string(l.n)}, {"pass", l.pass}, {"detail", l.detail}});
  json findings = json::array();
  for (const auto& [name, ok] : fr.findings) findings.push_back({{"subject", name}, {"pass", ok}, {"detail", ok ? "ok" : "mismatch"}});
  r.body["lines"] = lines;
  r.body["findings"] = findings;
  r.pass = fr.pass;
  return r;
}

std::vector<Verdict> lemma_verdicts() {
  std::vector<Verdict> out;
  using Side = Rational (*)(int, int, int);
  const std::vector<std::tuple<std::string, Side, Side>> lemmas = {{"summing_1", summing_1_lhs, summing_1_rhs},
                                                                   {"summing_2", summing_2_lhs, summing_2_rhs}};
  for (const auto& [name, lhs, rhs] : lemmas) {
    Verdict v{name, true, ""};
    int checked = 0;
    for (int k = 1; k <= 6; ++k)
      for (int l = 1; l <= 6; ++l)
        for (int x = 2; x <= 8; ++x) {
          ++checked;
          if (lhs(k, l, x) != rhs(k, l, x)) {
            if (v.pass) v.detail = "first failure at k=" + std::to_string(k) + " l=" + std::to_string(l) + " x=" + std::to_string(x);
            v.pass = false;
          }
        }
    if (v.pass) v.detail = std::to_string(checked) + " grid points";
    out.push_back(std::move(v));
  }
  return out;
}

const std::vector<std::string> kChecks = {"ez", "roots", "involution", "golden", "halo", "hochschild", "lemmas"};

Report cmd_check(const std::string& which, const SweepConfig& cfg) {
  Report r;
  r.body["check"] = which;
  auto verdicts = [&](const std::vector<Verdict>& vs, bool conjecture) {
    r.body["max_size"] = cfg.max_size;
    r.body["conjecture"] = conjecture;
    r.body["verdicts"] = verdicts_json(vs);
    r.pass = all_pass(vs);
  };
  if (which == "ez") {
    verdicts(ez_sweep(cfg), true);
  } else if (which == "roots") {
    verdicts(roots_sweep(cfg), true);
  } else if (which == "involution") {
    verdicts(involution_sweep(cfg), true);
  } else if (which == "golden") {
    const auto vs = golden_suite();
    r.body["verdicts"] = verdicts_json(vs);
    r.pass = all_pass(vs);
  } else if (which == "lemmas") {
    const auto vs = lemma_verdicts();
    r.body["verdicts"] = verdicts_json(vs);
    r.pass = all_pass(vs);
  } else {
    const FamilyReport fr = which == "halo" ? halo_checks(cfg.max_size, cfg.series_order) : hochschild_checks(cfg.max_size);
    Report fam = family_report(fr);
    r.body["max_size"] = cfg.max_size;
    for (auto& [k, v] : fam.body.items()) r.body[k] = v;
    r.pass = fam.pass;
  }
  return r;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Posets and polytopes attached to arbors", "arbor"};
  app.require_subcommand(1);
  app.fallthrough();

  SweepConfig defaults;
  std::string format = defaults.format, config_path;
  int max_size = defaults.max_size, series_order = defaults.series_order, jobs = defaults.jobs;
  std::size_t guard = defaults.guard_elements;
  auto* o_format = app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  auto* o_max = app.add_option("--max-size,--max", max_size, "Largest arbor size or family index for sweeps");
  auto* o_guard = app.add_option("--guard-elements", guard, "Ceiling on enumerated points and poset elements");
  auto* o_order = app.add_option("--series-order", series_order, "Truncation order for series checks");
  auto* o_jobs = app.add_option("--jobs", jobs, "Worker threads, 0 for hardware concurrency");
  app.add_option("--config", config_path, "JSON file with the same keys (flags override it)");

  int enum_n = 0;
  auto* enumerate = app.add_subcommand("enumerate", "Canonical encodings of all arbors of a size");
  enumerate->add_option("n", enum_n, "Size")->required();

  std::string arbor_text, which = "all";
  auto* invariants = app.add_subcommand("invariants", "Ehrhart, Zeta, K, M-triangle, f, h and Laplace of an arbor");
  invariants->add_option("arbor", arbor_text, "Arbor, e.g. \"(2 (2) (1) (1))\"")->required();
  invariants->add_option("--which", which, "Which invariant")->check(CLI::IsMember(kWhich));

  bool with_points = false;
  auto* polytope = app.add_subcommand("polytope", "Lattice points, vertices, Minkowski and Newton checks");
  polytope->add_option("arbor", arbor_text, "Arbor")->required();
  polytope->add_flag("--points", with_points, "List every lattice point");

  auto* poset = app.add_subcommand("poset", "Poset statistics with chain and Moebius cross-checks");
  poset->add_option("arbor", arbor_text, "Arbor")->required();

  auto* volume_cmd = app.add_subcommand("volume", "Laplace polynomial, volume and volume function");
  volume_cmd->add_option("arbor", arbor_text, "Arbor")->required();

  auto* families = app.add_subcommand("families", "Fuss, type B and noncrossing partition families");
  families->require_subcommand(1);
  FussParams fp;
  auto* fuss = families->add_subcommand("fuss", "Fuss posets for slope m and endpoint (x, y)");
  fuss->add_option("m", fp.m)->required();
  fuss->add_option("x", fp.x)->required();
  fuss->add_option("y", fp.y)->required();
  TypeBParams bp;
  auto* typeb = families->add_subcommand("typeb", "Type B posets: n-tuples with sum at most k");
  typeb->add_option("n", bp.n)->required();
  typeb->add_option("k", bp.k)->required();
  std::string nc_type;
  int nc_n = 0;
  auto* nc = families->add_subcommand("nc", "Noncrossing partition M-triangles of type A or B");
  nc->add_option("type", nc_type)->required()->check(CLI::IsMember({"A", "B"}));
  nc->add_option("n", nc_n)->required();

  std::string check_name;
  auto* check = app.add_subcommand("check", "Conjecture sweeps, family checks, lemmas and the golden suite");
  check->add_option("which", check_name, "Check to run")->required()->check(CLI::IsMember(kChecks));

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  SweepConfig cfg;
  try {
    if (!config_path.empty()) cfg = load_config(config_path, cfg);
    if (o_format->count()) cfg.format = format;
    if (o_max->count()) cfg.max_size = max_size;
    if (o_guard->count()) cfg.guard_elements = guard;
    if (o_order->count()) cfg.series_order = series_order;
    if (o_jobs->count()) cfg.jobs = jobs;
    validate(cfg);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    Report r;
    if (*enumerate) {
      r = cmd_enumerate(enum_n);
    } else if (*invariants) {
      r = cmd_invariants(parse_arbor(arbor_text), which);
    } else if (*polytope) {
      r = cmd_polytope(parse_arbor(arbor_text), cfg, with_points);
    } else if (*poset) {
      r = cmd_poset(parse_arbor(arbor_text), cfg);
    } else if (*volume_cmd) {
      r = cmd_volume(parse_arbor(arbor_text));
    } else if (*fuss) {
      r = cmd_fuss(fp, cfg);
    } else if (*typeb) {
      r = cmd_typeb(bp, cfg);
    } else if (*nc) {
      r = cmd_nc(nc_type, nc_n);
    } else {
      r = cmd_check(check_name, cfg);
    }
    emit(r, cfg, out);
    return r.pass ? kOk : kCheckFailed;
  } catch (const GuardError& e) {
    err << "refused: " << e.what() << " (raise --guard-elements)\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kCheckFailed;
  }
}

}  // namespace arbor
