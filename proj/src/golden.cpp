#include <functional>
#include <string>
#include <vector>

#include "arbor/families.hpp"
#include "arbor/harness.hpp"
#include "arbor/invariants.hpp"
#include "arbor/parse.hpp"
#include "arbor/polytope.hpp"
#include "arbor/poset.hpp"
#include "arbor/volume.hpp"

namespace arbor {

namespace {

// rows[0] is the top Y-degree, entries run X^0, X^1, ...
BiPoly from_rows(const std::vector<std::vector<long>>& rows) {
  BiPoly p;
  const int top = static_cast<int>(rows.size()) - 1;
  for (int r = 0; r <= top; ++r)
    for (std::size_t i = 0; i < rows[static_cast<std::size_t>(r)].size(); ++i)
      p.add_term(Rational(rows[static_cast<std::size_t>(r)][i]), static_cast<int>(i), top - r);
  return p;
}

struct Case {
  std::string name;
  std::function<std::pair<std::string, std::string>()> run;  // expected, got
};

std::string x_str(const UniPoly& p) { return to_string(p, "X"); }
std::string tri_str(const BiPoly& p) { return pretty_triangle(p); }

std::pair<std::string, std::string> uni(const std::string& text, char var, const UniPoly& got) {
  const std::string v(1, var);
  return {to_string(parse_unipoly(text, var), v), to_string(got, v)};
}

std::pair<std::string, std::string> num(const std::string& want, const std::string& got) { return {want, got}; }

const char* kRunning = "(2 (2) (1) (1))";
const char* kLinear = "(2 (2 (1 (1))))";

std::vector<Case> cases() {
  std::vector<Case> cs;
  auto add = [&](std::string n, std::function<std::pair<std::string, std::string>()> f) {
    cs.push_back({std::move(n), std::move(f)});
  };

  add("running example: element count", [] { return num("330", std::to_string(lattice_points(parse_arbor(kRunning)).size())); });
  add("running example: vertex count", [] { return num("36", std::to_string(vertices(parse_arbor(kRunning)).size())); });
  add("running example: Ehrhart", [] { return uni("(1/12)(2u+1)(u+1)^3(83u^2+70u+12)", 'u', ehrhart(parse_arbor(kRunning))); });
  add("running example: volume", [] { return num("83/6", volume(parse_arbor(kRunning)).get_str()); });
  add("running example: Zeta", [] {
    return uni("(1/90)u(2u-1)(802u^4-1369u^3+893u^2-266u+30)", 'u', zeta(parse_arbor(kRunning)));
  });
  add("running example: refined Zeta", [] {
    const BiPoly want = parse_bipoly(
        "(1/90)((802u^4-1839u^3+1598u^2-621u+90)(2u-1)(u-1)X^6"
        " + 6(53u^2-77u+30)(4u-3)(2u-1)(u-1)X^5 + 45(68u^3-156u^2+119u-30)(u-1)X^4"
        " + 60(11u-10)(4u-3)(u-1)X^3 + 90(17u-15)(u-1)X^2 + 540(u-1)X + 90)",
        'u', 'X');
    return std::pair{to_string(want, "u", "X"), to_string(zeta_refined(parse_arbor(kRunning)), "u", "X")};
  });
  add("running example: M-triangle", [] {
    const BiPoly want = from_rows({{1, -18, 113, -334, 506, -380, 112},
                                   {-6, 58, -208, 352, -284, 88},
                                   {15, -92, 201, -188, 64},
                                   {-20, 78, -98, 40},
                                   {15, -34, 19},
                                   {-6, 6},
                                   {1}});
    return std::pair{tri_str(want), tri_str(m_triangle(parse_arbor(kRunning)).poly)};
  });
  add("running example: f-vector", [] {
    return uni("X^6+24X^5+186X^4+654X^3+1152X^2+990X+330", 'X', f_vector(parse_arbor(kRunning)));
  });
  add("running example: h-vector", [] {
    return uni("X^6+18X^5+81X^4+130X^3+81X^2+18X+1", 'X', h_vector(parse_arbor(kRunning)));
  });
  add("running example: cubical f-vector", [] {
    return uni("X^6+24X^5+186X^4+654X^3+1152X^2+990X+330", 'X', cubical_f_vector(build_poset(parse_arbor(kRunning))));
  });
  add("running example: Laplace polynomial", [] {
    const BiPoly want = parse_bipoly(
        "-V^6E^4+2V^6E^3-2V^5E^4+4V^5E^3-2V^2E^6-2V^6E-2V^5E^2-(22/3)VE^6+V^6", 'E', 'V');
    return std::pair{to_string(want, "E", "V"), to_string(laplace_poly(parse_arbor(kRunning)), "E", "V")};
  });
  add("running example: volume function on [0,1] and [4,6]", [] {
    const auto vf = volume_function(parse_arbor(kRunning));
    const std::string want = "1/120*h^5 | 2*h - 14/3 | 2*h - 14/3";
    if (vf.pieces.size() != 6) return num(want, "pieces: " + std::to_string(vf.pieces.size()));
    return num(want, to_string(vf.pieces[0], "h") + " | " + to_string(vf.pieces[4], "h") + " | " +
                         to_string(vf.pieces[5], "h"));
  });

  add("linear pair: element counts", [] {
    const Arbor t = parse_arbor(kLinear);
    return num("501 501", std::to_string(lattice_points(t).size()) + " " +
                              std::to_string(lattice_points(reverse_linear(t)).size()));
  });
  add("linear pair: Ehrhart of t", [] {
    return uni("(u+1)/720(20167u^5+57230u^4+62225u^3+32170u^2+7848u+720)", 'u', ehrhart(parse_arbor(kLinear)));
  });
  add("linear pair: Zeta of t", [] {
    return uni("u/60(2u-1)(898u^4-1611u^3+1002u^2-249u+20)", 'u', zeta(parse_arbor(kLinear)));
  });
  add("linear pair: Ehrhart of reverse", [] {
    return uni("(u+1)/60(2u+1)(898u^4+1981u^3+1557u^2+514u+60)", 'u', ehrhart(reverse_linear(parse_arbor(kLinear))));
  });
  add("linear pair: Zeta of reverse", [] {
    return uni("u/720(20167u^5-43605u^4+34975u^3-12795u^2+2098u-120)", 'u', zeta(reverse_linear(parse_arbor(kLinear))));
  });
  add("linear pair: volumes", [] {
    const Arbor t = parse_arbor(kLinear);
    return num("20167/720 449/15", volume(t).get_str() + " " + volume(reverse_linear(t)).get_str());
  });
  add("linear pair: maximal chains", [] {
    const Arbor t = parse_arbor(kLinear);
    return num("21552 20167", maximal_chain_count(build_poset(t)).get_str() + " " +
                                  maximal_chain_count(build_poset(reverse_linear(t))).get_str());
  });
  add("linear pair: common h-vector", [] {
    const Arbor t = parse_arbor(kLinear);
    const auto want = x_str(parse_unipoly("X^6+23X^5+122X^4+209X^3+122X^2+23X+1", 'X'));
    return num(want + " | " + want, x_str(h_vector(t)) + " | " + x_str(h_vector(reverse_linear(t))));
  });

  add("two-vertex arbor: K", [] {
    const BiPoly want = parse_bipoly("1+2XY+XY^2+X^2Y^2", 'X', 'Y');
    return std::pair{to_string(want), to_string(k_poly(parse_arbor("(1 (1))")))};
  });
  add("two-vertex arbor: volume and volume function", [] {
    const Arbor t = parse_arbor("(1 (1))");
    const auto vf = volume_function(t);
    std::string got = volume(t).get_str();
    for (const auto& p : vf.pieces) got += " | " + to_string(p, "h");
    return num("3/2 | h | 1", got);
  });
  add("two-vertex arbor: vertex count", [] { return num("4", std::to_string(vertices(parse_arbor("(1 (1))")).size())); });
  add("binom_poly(2(u-1), 2) at u = 2", [] {
    return num("3", binom_poly(UniPoly{-2, 2}, 2)(Rational(2)).get_str());
  });

  add("type A(3): M-triangle", [] {
    return std::pair{tri_str(from_rows({{-1, 6, -10, 5}, {3, -8, 5}, {-3, 3}, {1}})), tri_str(m_triangle(type_a(3)).poly)};
  });
  add("type A(3): element count", [] { return num("14", std::to_string(lattice_points(type_a(3)).size())); });
  add("type A(3): transmuted M-triangle is NC(A_3)", [] {
    return std::pair{tri_str(nc_m_triangle(CoxeterType::A, 3).poly), tri_str(transmute(m_triangle(type_a(3))).poly)};
  });
  add("type A(3): transmuted M-triangle", [] {
    return std::pair{tri_str(from_rows({{-5, 10, -6, 1}, {10, -16, 6}, {-6, 6}, {1}})),
                     tri_str(transmute(m_triangle(type_a(3))).poly)};
  });
  add("F-triangle of (1 (1) (1 (1)))", [] {
    const Arbor t = parse_arbor("(1 (1) (1 (1)))");
    const BiPoly want = from_rows({{1}, {4, 4}, {6, 14, 8}, {4, 17, 23, 10}, {1, 8, 22, 25, 10}});
    return std::pair{tri_str(want) + "elements 33",
                     tri_str(f_from_m(transmute(m_triangle(t))).poly) + "elements " +
                         std::to_string(lattice_points(t).size())};
  });
  add("Hochschild arbor of size 4: element count", [] {
    return num("28", std::to_string(lattice_points(hochschild(4)).size()));
  });
  add("halo arbor of size 2: element count", [] { return num("5", std::to_string(lattice_points(halo(2)).size())); });
  return cs;
}

}  // namespace

std::vector<Verdict> golden_suite() {
  std::vector<Verdict> out;
  for (const auto& c : cases()) {
    Verdict v{c.name, false, ""};
    try {
      const auto [want, got] = c.run();
      v.pass = want == got;
      v.detail = v.pass ? "ok" : "expected " + want + " got " + got;
    } catch (const std::exception& e) {
      v.detail = std::string("threw: ") + e.what();
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace arbor
