#include "arbor/harness.hpp"

#include <fstream>
#include <stdexcept>

#include "arbor/invariants.hpp"
#include "arbor/json_io.hpp"
#include "arbor/unipoly.hpp"

namespace arbor {

int SweepConfig::worker_count() const {
  if (jobs > 0) return jobs;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void validate(const SweepConfig& cfg) {
  if (cfg.max_size < 1) throw std::invalid_argument("max_size must be positive");
  if (cfg.guard_elements == 0) throw std::invalid_argument("guard_elements must be positive");
  if (cfg.series_order < 1) throw std::invalid_argument("series_order must be positive");
  if (cfg.jobs < 0) throw std::invalid_argument("jobs must be nonnegative");
  if (cfg.format != "json" && cfg.format != "text") throw std::invalid_argument("format must be json or text");
}

SweepConfig load_config(const std::string& path, SweepConfig base) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config " + path);
  json j;
  try {
    j = json::parse(in);
    if (j.contains("max_size")) base.max_size = j.at("max_size").get<int>();
    if (j.contains("guard_elements")) base.guard_elements = j.at("guard_elements").get<std::size_t>();
    if (j.contains("series_order")) base.series_order = j.at("series_order").get<int>();
    if (j.contains("jobs")) base.jobs = j.at("jobs").get<int>();
    if (j.contains("format")) base.format = j.at("format").get<std::string>();
  } catch (const json::exception& e) {
    throw std::runtime_error("bad config " + path + ": " + e.what());
  }
  validate(base);
  return base;
}

std::vector<Arbor> arbors_up_to(int max_size) {
  std::vector<Arbor> out;
  for (int n = 1; n <= max_size; ++n) {
    auto a = enumerate_arbors(n);
    out.insert(out.end(), a.begin(), a.end());
  }
  return out;
}

std::vector<Verdict> ez_sweep(const SweepConfig& cfg) {
  std::vector<Arbor> linear;
  for (auto& t : arbors_up_to(cfg.max_size))
    if (t.is_linear()) linear.push_back(t);
  return parallel_map(linear, cfg.worker_count(), [](const Arbor& t) {
    const Arbor rev = reverse_linear(t);
    const bool ez1 = ehrhart(t) == zeta(rev).shifted(1);
    const bool ez2 = h_vector(t) == h_vector(rev);
    Verdict v{t.encode(), ez1 && ez2, ""};
    v.detail = std::string("E_t(u) = Z_rev(u+1): ") + (ez1 ? "yes" : "NO") + "; equal h-vectors: " + (ez2 ? "yes" : "NO");
    if (!ez1) v.detail += "; E_t = " + to_string(ehrhart(t), "u") + "; Z_rev(u+1) = " + to_string(zeta(rev).shifted(1), "u");
    return v;
  });
}

std::vector<Verdict> roots_sweep(const SweepConfig& cfg) {
  return parallel_map(arbors_up_to(cfg.max_size), cfg.worker_count(), [](const Arbor& t) {
    const auto r = ehrhart_root_check(t);
    Verdict v{t.encode(), r.pass, ""};
    v.detail = "distinct roots in [-1,0): " + std::to_string(r.roots_in_interval) + " of " +
               std::to_string(r.squarefree_degree) + "; positive coefficients: " +
               (r.coefficients_positive ? "yes" : "NO");
    return v;
  });
}

std::vector<Verdict> involution_sweep(const SweepConfig& cfg) {
  return parallel_map(arbors_up_to(cfg.max_size), cfg.worker_count(), [](const Arbor& t) {
    const Triangle m = m_triangle(t);
    const Triangle tm = transmute(m);
    const bool invol = transmute(tm) == m;
    const bool routes = tm == transmuted_m_triangle(t);
    const bool diag = diagonal(tm.poly) == h_vector(t);
    Verdict v{t.encode(), invol && routes && diag, ""};
    v.detail = std::string("involution: ") + (invol ? "yes" : "NO") + "; K route agrees: " + (routes ? "yes" : "NO") +
               "; diagonal is h: " + (diag ? "yes" : "NO");
    return v;
  });
}

bool all_pass(const std::vector<Verdict>& v) {
  return std::all_of(v.begin(), v.end(), [](const Verdict& x) { return x.pass; });
}

}  // namespace arbor
