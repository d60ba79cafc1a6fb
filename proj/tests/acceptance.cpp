// Prints one PASS/FAIL line per acceptance criterion. Conjecture sweeps
// (criterion 6 and the guessed series of 9) are reported but never make
// the binary fail.

#include <chrono>
#include <iostream>
#include <sstream>

#include "arbor/families.hpp"
#include "arbor/harness.hpp"
#include "arbor/invariants.hpp"
#include "arbor/poset.hpp"
#include "oracles.hpp"

using namespace arbor;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
};

Outcome golden_group(const std::string& prefix) {
  Outcome o;
  int n = 0;
  for (const auto& v : golden_suite()) {
    if (v.subject.rfind(prefix, 0) != 0) continue;
    ++n;
    if (!v.pass) {
      o.pass = false;
      o.note += " [" + v.subject + ": " + v.detail + "]";
    }
  }
  if (n == 0) o = {false, " no golden cases"};
  if (o.pass) o.note = std::to_string(n) + " exact comparisons";
  return o;
}

Outcome oracle_sweep() {
  Outcome o;
  int arbors = 0;
  for (const auto& t : arbors_up_to(6)) {
    ++arbors;
    const auto pts = oracle::points(t);
    bool ok = true;
    for (int m = 1; m <= 3; ++m) ok = ok && f_height_poly(t, m) == oracle::height_histogram(t, m);
    const UniPoly z = zeta(t);
    for (int q = 2; q <= 4; ++q) ok = ok && z(Rational(q)) == Rational(oracle::multichains(pts, q));
    ok = ok && k_poly(t) == oracle::nz_height_histogram(t);
    const BiPoly m = m_triangle(t).poly;
    ok = ok && mobius_triangle(build_poset(t)) == m;
    if (pts.size() <= 200) ok = ok && oracle::mobius(pts) == m;
    if (!ok) {
      o.pass = false;
      o.note += " " + t.encode();
    }
  }
  if (o.pass) o.note = std::to_string(arbors) + " arbors";
  return o;
}

Outcome conjectures() {
  SweepConfig c;
  c.max_size = 8;
  Outcome o;
  const std::pair<std::string, std::vector<Verdict>> sweeps[] = {
      {"roots", roots_sweep(c)}, {"ez", ez_sweep(c)}, {"involution", involution_sweep(c)}};
  for (const auto& [name, vs] : sweeps) {
    std::size_t bad = 0;
    for (const auto& v : vs) bad += v.pass ? 0 : 1;
    o.note += (o.note.empty() ? "" : "; ") + name + " " + std::to_string(vs.size() - bad) + "/" + std::to_string(vs.size());
    o.pass = o.pass && bad == 0;
  }
  return o;
}

Outcome families() {
  Outcome o;
  auto fail = [&](const std::string& what) {
    o.pass = false;
    o.note += " " + what;
  };
  int fuss = 0;
  for (int m = 1; m <= 3; ++m)
    for (int x = 1; x <= 8; ++x)
      for (int y = 0; m * y < x; ++y) {
        ++fuss;
        const FussParams p{m, x, y};
        const FinitePoset P = fuss_elements(p);
        const UniPoly z = fuss_zeta(p);
        const Triangle mt = fuss_m_triangle(p);
        std::ostringstream tag;
        tag << "fuss(" << m << "," << x << "," << y << ")";
        for (int q = 2; q <= 4; ++q)
          if (z(Rational(q)) != Rational(chain_count(P, q))) fail(tag.str() + " zeta");
        if (mobius_triangle(P) != mt.poly) fail(tag.str() + " M");
        if (fuss_m_recursive(p) != mt) fail(tag.str() + " M recursion");
        if (x == m * y + 1 && y >= 1) {
          if (z != fuss_zeta({m, x, y - 1})) fail(tag.str() + " iso recursion");
        } else if (x >= 2) {
          UniPoly rhs;
          for (int j = 0; j <= y; ++j)
            if (m * (y - j) < x - 1)
              rhs += fuss_zeta({m, x - 1, y - j}) * binom_poly(UniPoly{-1, 1}, static_cast<unsigned>(j));
          if (z != rhs) fail(tag.str() + " zeta recursion");
        }
      }
  int typeb = 0;
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k <= 6 && oracle::binomial(n + k, k) <= 924; ++k) {
      ++typeb;
      const TypeBParams p{n, k};
      const FinitePoset P = typeb_elements(p);
      const std::string tag = "typeb(" + std::to_string(n) + "," + std::to_string(k) + ")";
      for (int q = 2; q <= 4; ++q)
        if (typeb_zeta(p)(Rational(q)) != Rational(chain_count(P, q))) fail(tag + " zeta");
      if (mobius_triangle(P) != typeb_m_triangle(p).poly) fail(tag + " M");
      if (typeb_m_recursive(p) != typeb_m_triangle(p)) fail(tag + " M recursion");
      if (!typeb_upper_ideals_ok(p)) fail(tag + " upper ideals");
    }
  for (int n = 1; n <= 6; ++n) {
    if (nc_m_triangle(CoxeterType::A, n) != transmute(m_triangle(type_a(n)))) fail("NC(A) partner n=" + std::to_string(n));
    if (nc_m_triangle(CoxeterType::B, n) != transmute(m_triangle(type_b(n)))) fail("NC(B) partner n=" + std::to_string(n));
    if (zeta(type_a(n)) != fuss_zeta({1, n + 2, n})) fail("type A zeta n=" + std::to_string(n));
  }
  if (o.pass) o.note = std::to_string(fuss) + " Fuss and " + std::to_string(typeb) + " type B parameter sets, NC partners n <= 6";
  return o;
}

Outcome from_family(const FamilyReport& r, bool assert_findings) {
  Outcome o{r.pass, std::to_string(r.lines.size()) + " values of n;"};
  for (const auto& l : r.lines)
    if (!l.pass) o.note += " n=" + std::to_string(l.n) + ": " + l.detail;
  for (const auto& [name, ok] : r.findings) {
    o.note += " " + name + (ok ? ";" : " (finding);");
    if (assert_findings) o.pass = o.pass && ok;
  }
  return o;
}

Outcome lemmas() {
  Outcome o{true, "252 grid points each"};
  for (int k = 1; k <= 6; ++k)
    for (int l = 1; l <= 6; ++l)
      for (int x = 2; x <= 8; ++x)
        if (summing_1_lhs(k, l, x) != summing_1_rhs(k, l, x) || summing_2_lhs(k, l, x) != summing_2_rhs(k, l, x)) {
          o.pass = false;
          o.note = "fails at k=" + std::to_string(k) + " l=" + std::to_string(l) + " x=" + std::to_string(x);
        }
  return o;
}

}  // namespace

int main() {
  bool ok = true;
  auto report = [&](int id, const std::string& title, auto&& fn, bool conjecture = false) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << id << " " << title << (conjecture ? " (verdicts)" : "") << ": "
              << o.note << " (" << static_cast<int>(secs * 1000) << " ms)\n";
    if (!conjecture) ok = ok && o.pass;
  };
  report(1, "running example", [] { return golden_group("running example"); });
  report(2, "linear pair and reverse", [] { return golden_group("linear pair"); });
  report(3, "type A, n = 3", [] { return golden_group("type A(3)"); });
  report(4, "F-triangle example", [] { return golden_group("F-triangle"); });
  report(5, "oracle equivalence, size <= 6", oracle_sweep);
  report(6, "conjecture sweeps, size <= 8", conjectures, true);
  report(7, "Fuss, type B and NC families", families);
  report(8, "halohedra, n <= 8", [] { return from_family(halo_checks(8, 10), true); });
  report(9, "Hochschild, n <= 8", [] { return from_family(hochschild_checks(8), false); });
  report(10, "summation lemmas", lemmas);
  return ok ? 0 : 1;
}
