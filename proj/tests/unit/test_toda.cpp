#include <doctest.h>

#include "support/lattices.hpp"
#include "toda_rpp/algebra/parse.hpp"
#include "toda_rpp/lattice/paths.hpp"
#include "toda_rpp/toda/toda.hpp"

using namespace toda_rpp;

namespace {

SampleFunction grid(GridWindow w, std::vector<long> values) {
  std::vector<Scalar> v(values.begin(), values.end());
  return SampleFunction(w, v);
}

IndexedFamily random_rational_family(SeededRng& rng) {
  std::map<int, Scalar> memo;
  for (int l = -8; l <= 10; ++l) memo[l] = Scalar::rational(rng.uniform_int(1, 9) * (rng.uniform_int(0, 1) ? 1 : -1), rng.uniform_int(1, 9));
  return [memo](int l) { return memo.at(l); };
}

}  // namespace

TEST_CASE("seeded rng") {
  SeededRng a(42), b(42);
  for (int k = 0; k < 100; ++k) CHECK(a.uniform_int(1, 9) == b.uniform_int(1, 9));
  SeededRng c(1);
  std::vector<int> hits(10, 0);
  for (int k = 0; k < 9000; ++k) {
    int v = c.uniform_int(1, 9);
    REQUIRE(v >= 1);
    REQUIRE(v <= 9);
    ++hits[v];
  }
  for (int v = 1; v <= 9; ++v) CHECK(hits[v] > 800);
  SeededRng d(7);
  CHECK(d.next() == std::mt19937_64(7)());
}

TEST_CASE("tau") {
  SampleFunction f = grid({0, 1, 0, 1}, {1, 1, 1, 2});
  CHECK(f.tau(0, 0, 0) == Scalar(1));
  CHECK(f.tau(1, 0, 1) == Scalar(1));
  CHECK(f.tau(1, 1, 1) == Scalar(2));
  CHECK(f.tau(0, 0, 2) == Scalar(1));
  CHECK_THROWS_AS(f.tau(1, 1, 2), WindowError);
  CHECK_THROWS_AS(f.at(2, 0), WindowError);
}

TEST_CASE("sample function json roundtrip") {
  SeededRng rng(3);
  SampleFunction f = SampleFunction::random({-1, 1, 0, 2}, rng);
  SampleFunction g = SampleFunction::from_json(f.to_json());
  CHECK(g.window() == f.window());
  for (int i = -1; i <= 1; ++i)
    for (int j = 0; j <= 2; ++j) CHECK(g.at(i, j) == f.at(i, j));
  CHECK(f.to_json()["window"].dump() == R"({"cols":[0,2],"rows":[-1,1]})");
}

TEST_CASE("solution from a sample function") {
  SampleFunction geo = SampleFunction::from_function({0, 2, 0, 2}, [](int i, int j) { return Scalar(2).pow(i * j); });
  TodaSolution sol = ab_from_f(geo);
  CHECK(sol.a(0, 0, 0) == Scalar(1));
  CHECK(sol.a(0, 1, 0) == Scalar(2));
  CHECK(sol.b(0, 0, 0).is_zero());
  CHECK(sol.b(1, 1, 0).is_zero());
  SampleFunction ones = SampleFunction::from_function({0, 3, 0, 3}, [](int, int) { return Scalar(1); });
  CHECK_THROWS_AS(ab_from_f(ones).a(0, 0, 1), SingularMinor);
  CHECK_THROWS_AS(ab_from_f(ones).a(0, 0, 1), DegenerateSolution);
  CHECK_THROWS_AS(sol.a(0, 0, -1), DomainError);
}

TEST_CASE("evolution holds for determinant solutions") {
  SeededRng rng(5);
  const SiteWindow w{0, 2, 0, 2, 0, 2};
  for (int trial = 0; trial < 5; ++trial) {
    Report report = with_resample(rng, [&](SeededRng& r) {
      SampleFunction f = SampleFunction::random({0, 6, 0, 6}, r);
      return verify_evolution(ab_from_f(f), w);
    });
    CHECK(report.empty());
  }
}

TEST_CASE("closed form") {
  const Scalar a = parse_scalar("a");
  TodaSolution sol = closed_form_apq(a, variable_family("p"), variable_family("q"));
  for (int s = -2; s <= 2; ++s) {
    for (int t = -2; t <= 2; ++t) {
      CHECK(sol.b(s, t, 0).is_zero());
      CHECK(sol.a(s, t, 0) == Scalar(1) - a * bracket(variable_family("p"), 1, s, BracketConvention::Telescoping) *
                                                 bracket(variable_family("q"), 1, t, BracketConvention::Telescoping));
    }
  }
  CHECK(sol.a(1, 1, 1) == parse_scalar("p[2]*(1-a*p[1]*q[1]*q[2])"));
  CHECK(sol.b(1, 1, 1) == parse_scalar("a*p[1]*q[1]*(1-q[2])"));
  CHECK(sol.a(-1, 0, 0) == parse_scalar("1-a/p[0]"));
  TodaSolution degenerate = closed_form_apq(Scalar(1), [](int) { return Scalar(1); }, [](int) { return Scalar(1); });
  CHECK_THROWS_AS(degenerate.a(0, 0, 0), NonvanishingViolation);
}

TEST_CASE("closed form satisfies the evolution equations with rational parameters") {
  SeededRng rng(6);
  for (int trial = 0; trial < 3; ++trial) {
    Report report = with_resample(rng, [&](SeededRng& r) {
      Scalar a = Scalar::rational(r.uniform_int(1, 9), r.uniform_int(1, 9));
      TodaSolution sol = closed_form_apq(a, random_rational_family(r), random_rational_family(r));
      return verify_evolution(sol, {-3, 3, -3, 3, 0, 3});
    });
    CHECK(report.empty());
  }
}

TEST_CASE("closed form with the inclusive bracket breaks the evolution equations") {
  TodaSolution sol = closed_form_apq(parse_scalar("a"), variable_family("p"), variable_family("q"), BracketConvention::Inclusive);
  CHECK_FALSE(verify_evolution(sol, {-2, 0, -2, 0, 0, 1}).empty());
}

TEST_CASE("perturbed solution is reported") {
  TodaSolution base = closed_form_apq(parse_scalar("a"), variable_family("p"), variable_family("q"));
  TodaSolution bad([base](int s, int t, int n) { return s == 1 && t == 1 && n == 1 ? base.a(s, t, n) + 1 : base.a(s, t, n); },
                   [base](int s, int t, int n) { return base.b(s, t, n); });
  Report report = verify_evolution(bad, {0, 1, 0, 1, 0, 1});
  REQUIRE_FALSE(report.empty());
  bool named = false;
  for (const auto& v : report) named = named || v.site == "sum(1,1,1)" || v.site == "product(1,1,0)";
  CHECK(named);
  CHECK(to_json(report)[0].contains("lhs"));
}

TEST_CASE("bilinear identity") {
  SeededRng rng(8);
  for (int trial = 0; trial < 5; ++trial) {
    SampleFunction f = SampleFunction::random({0, 6, 0, 6}, rng);
    CHECK(verify_bilinear(f, {0, 3, 0, 3, 1, 2}).empty());
  }
  SampleFunction ones = SampleFunction::from_function({0, 6, 0, 6}, [](int, int) { return Scalar(1); });
  CHECK(verify_bilinear(ones, {0, 3, 0, 3, 1, 2}).empty());
  SampleFunction sym = SampleFunction::from_function({0, 3, 0, 3}, [](int i, int j) { return Scalar(Variable("f", 10 * i + j)); });
  CHECK(verify_bilinear(sym, {0, 1, 0, 1, 1, 1}).empty());
  // n = 1 written out.
  Scalar lhs = sym.tau(1, 1, 0) * sym.tau(0, 0, 2) - sym.at(1, 1) * sym.at(0, 0) + sym.at(1, 0) * sym.at(0, 1);
  CHECK(lhs.is_zero());
}

TEST_CASE("gauge invariance") {
  SeededRng rng(9);
  SampleFunction f = with_resample(rng, [&](SeededRng& r) {
    SampleFunction g = SampleFunction::random({0, 5, 0, 5}, r);
    TodaSolution sol = ab_from_f(g);
    for (int s = 0; s <= 2; ++s)
      for (int t = 0; t <= 2; ++t)
        for (int n = 0; n <= 2; ++n) {
          sol.a(s, t, n);
          sol.b(s, t, n);
        }
    return g;
  });
  SampleFunction same = gauge(f, [](int) { return Scalar(1); });
  for (int i = 0; i <= 5; ++i)
    for (int j = 0; j <= 5; ++j) CHECK(same.at(i, j) == f.at(i, j));
  IndexedFamily phi = [](int j) { return Scalar::rational(j + 2, 3); };
  TodaSolution s1 = ab_from_f(f), s2 = ab_from_f(gauge(f, phi));
  for (int s = 0; s <= 2; ++s)
    for (int t = 0; t <= 2; ++t)
      for (int n = 0; n <= 2; ++n) {
        CHECK(s1.a(s, t, n) == s2.a(s, t, n));
        CHECK(s1.b(s, t, n) == s2.b(s, t, n));
      }
  SampleFunction rows = SampleFunction::from_function(f.window(), [&](int i, int j) { return Scalar(i + 1) * f.at(i, j); });
  CHECK_FALSE(ab_from_f(rows).a(0, 0, 0) == s1.a(0, 0, 0));
  CHECK_THROWS_AS(gauge(f, [](int j) { return Scalar(j - 3); }), GaugeError);
}

TEST_CASE("fundamental theorem on small lattices") {
  RegularLattice Q = testgen::quarter_plane(3, 3);
  SeededRng rng(10);
  SampleFunction f = SampleFunction::random(sample_window_for(Q), rng);
  CHECK(f.at(1, 0) / f.at(0, 0) == ab_from_f(f).a(0, 0, 0));
  CHECK(fundamental_check(f, Q, {1, 0}).empty());
  CHECK(fundamental_check(f, Q, {0, 2}).empty());

  testgen::Gen g(11);
  for (int trial = 0; trial < 10; ++trial) {
    RegularLattice L = testgen::random_lattice(g, 5, 4);
    auto pts = testgen::lattice_points(L);
    Report report = with_resample(rng, [&](SeededRng& r) {
      SampleFunction h = SampleFunction::random(sample_window_for(L), r);
      Report all;
      for (int k = 0; k < 5; ++k) {
        Report one = fundamental_check(h, L, pts[g.uniform(0, static_cast<int>(pts.size()) - 1)]);
        all.insert(all.end(), one.begin(), one.end());
      }
      return all;
    });
    CHECK(report.empty());
  }
}

TEST_CASE("non-intersecting sums") {
  SeededRng rng(12);
  RegularLattice L = lattice_from_partition(Partition({2, 1}), 2);
  SampleFunction f = SampleFunction::random(sample_window_for(L), rng);
  NiSums zero = ni_sums(f, L, 2, 2, 0);
  CHECK(zero.det_ratio == Scalar(1));
  CHECK(zero.path_sum == Scalar(1));
  CHECK(zero.product == Scalar(1));
  NiSums border = ni_sums(f, L, 0, 2, 1);
  CHECK(border.det_ratio == Scalar(1));
  CHECK(border.path_sum == Scalar(1));
  for (const auto& shape : {Partition({2, 1}), Partition({2, 2}), Partition({3, 1, 1})}) {
    for (int n = 1; n <= 3; ++n) {
      RegularLattice M = lattice_from_partition(shape, n);
      Report report = with_resample(rng, [&](SeededRng& r) {
        return ni_sum_check(SampleFunction::random(sample_window_for(M), r), M, shape.r(), shape.c(), n);
      });
      CHECK(report.empty());
    }
  }
}

TEST_CASE("resampling gives up") {
  SeededRng rng(13);
  int calls = 0;
  CHECK_THROWS_AS(with_resample(rng, [&](SeededRng&) -> int {
                    ++calls;
                    throw SingularMinor("always");
                  }),
                  ResampleExhausted);
  CHECK(calls == max_resample() + 1);
}

TEST_CASE("path sums on a partition lattice") {
  const RegularLattice L = lattice_from_partition(Partition({5, 4, 4, 2, 1}), 4);
  SeededRng rng(19);
  NiSums sums = with_resample(rng, [&](SeededRng& g) {
    return ni_sums(SampleFunction::random(sample_window_for(L), g), L, 5, 4, 4);
  });
  CHECK(sums.det_ratio == sums.path_sum);
  CHECK(sums.path_sum == sums.product);
}

TEST_CASE("corner deletion keeps path sums") {
  SeededRng rng(23);
  int checked = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const RegularLattice L = random_lattice(rng, 5, 4);
    const auto corners = convex_corners(L);
    REQUIRE_FALSE(corners.empty());
    const Point corner = corners[rng.uniform_int(0, static_cast<int>(corners.size()) - 1)];
    const RegularLattice reduced = delete_corner(L, corner);
    std::vector<Point> pts;
    for (Point p : testgen::lattice_points(reduced))
      if (p.i - p.j != corner.i - corner.j) pts.push_back(p);
    const SampleFunction f = SampleFunction::random(sample_window_for(L), rng);
    const TodaSolution sol = ab_from_f(f);
    for (int k = 0; k < 10; ++k) {
      const Point from = pts[rng.uniform_int(0, static_cast<int>(pts.size()) - 1)];
      const Point to = pts[rng.uniform_int(0, static_cast<int>(pts.size()) - 1)];
      try {
        CHECK(corner_deletion_check(sol, L, corner, from, to).empty());
        ++checked;
      } catch (const SingularMinor&) {
      }
    }
  }
  CHECK(checked > 150);
  const RegularLattice Q = testgen::quarter_plane(3, 3);
  CHECK_THROWS_AS(corner_deletion_check(ab_from_f(SampleFunction::random(sample_window_for(Q), rng)), Q, {0, 0}, {1, 1}, {0, 2}),
                  DomainError);
}

TEST_CASE("corners of a lattice") {
  CHECK(convex_corners(testgen::quarter_plane(3, 3)) == std::vector<Point>{{0, 0}});
  const auto corners = convex_corners(RegularLattice(-1, {4, 4, 3, 1, 1, 0, 0}, 5));
  CHECK(corners == std::vector<Point>{{-1, 4}, {1, 3}, {2, 1}, {4, 0}});
}
