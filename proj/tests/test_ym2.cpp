#include "doctest.h"

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "hc/hurwitz.hpp"
#include "hc/numbers.hpp"
#include "hc/partition.hpp"
#include "hc/series.hpp"
#include "hc/ym2.hpp"

using namespace hc;

namespace {

SeriesKey key_of(int z, int t, int u, int v, int hbar, std::vector<Partition> slots) {
  SeriesKey k;
  k.z = z;
  k.t = t;
  k.u = u;
  k.v = v;
  k.hbar = hbar;
  k.marker = Marker(std::move(slots));
  return k;
}

Rational frac(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

void each_class_tuple(int d, int m,
                      const std::function<void(const std::vector<Partition>&)>& f) {
  std::vector<Partition> tuple;
  std::function<void()> rec = [&] {
    if (static_cast<int>(tuple.size()) == m) {
      f(tuple);
      return;
    }
    for (const Partition& alpha : partitions_of(d)) {
      tuple.push_back(alpha);
      rec();
      tuple.pop_back();
    }
  };
  rec();
}

void each_level_tuple(int d, int count,
                      const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> tuple;
  std::function<void()> rec = [&] {
    if (static_cast<int>(tuple.size()) == count) {
      f(tuple);
      return;
    }
    for (int a = 0; a < d; ++a) {
      tuple.push_back(a);
      rec();
      tuple.pop_back();
    }
  };
  rec();
}

// The free energy rebuilt one term at a time from transitive tuple counts.
FormalSeries connected_series(const GeometryTemplate& geom, const ChiralOrders& orders,
                              const Truncation& tr) {
  FormalSeries f(tr);
  const int s_max = geom.monotone_tail ? orders.s_order : 0;
  for (int d = 1; d <= orders.max_d; ++d) {
    const Rational d_factorial{Rational(factorial(d))};
    each_class_tuple(d, geom.class_boundaries, [&](const std::vector<Partition>& cls) {
      each_level_tuple(d, geom.level_boundaries, [&](const std::vector<int>& lv) {
        for (int r = 0; r <= orders.t_order; ++r)
          for (int s = 0; s <= s_max; ++s) {
            const Integer value = connected_count(geometry_word(geom, d, cls, lv, r, s));
            if (value == 0) continue;
            Rational c = Rational(value) / (Rational(factorial(r)) * d_factorial);
            if ((r + s) % 2 == 1) c = -c;
            f.add(geometry_key(geom, d, cls, lv, r, s), c);
          }
      });
    });
  }
  return f;
}

int slot_length_sum(const Marker& marker) {
  int total = 0;
  for (const Partition& p : marker.slots) total += p.length();
  return total;
}

}  // namespace

TEST_CASE("microchiral direct matches closed forms at low degree") {
  const GeometryTemplate sphere = geometry_by_name("sphere");
  const GeometryTemplate torus = geometry_by_name("torus");
  const GeometryTemplate cylinder = geometry_by_name("cylinder");

  SUBCASE("sphere degree 1 contributes N^2 with no area dependence") {
    for (int N : {1, 2, 5}) {
      MicroResult res = microchiral_direct(sphere, 1, N, 3);
      REQUIRE(res.coefficients.size() == 1);
      const std::vector<Rational>& c = res.coefficients.at(Marker{});
      CHECK(c[0] == Rational(Integer(N) * Integer(N)));
      CHECK(c[1] == 0);
      CHECK(c[2] == 0);
      CHECK(c[3] == 0);
    }
  }

  SUBCASE("torus degree 2 gives 2 cosh(t/N)") {
    const int N = 4;
    MicroResult res = microchiral_direct(torus, 2, N, 5);
    const std::vector<Rational>& c = res.coefficients.at(Marker{});
    for (int r = 0; r <= 5; ++r) {
      if (r % 2 == 0) {
        Rational want(2, factorial(r) * int_pow(Integer(N), r));
        want.canonicalize();
        CHECK(c[r] == want);
      } else {
        CHECK(c[r] == 0);
      }
    }
  }

  SUBCASE("cylinder degree 2 boundary pairs") {
    const int N = 3;
    MicroResult res = microchiral_direct(cylinder, 2, N, 2);
    const std::vector<Rational>& same =
        res.coefficients.at(Marker({Partition({2}), Partition({2})}));
    CHECK(same[0] == frac(1, 2));
    CHECK(same[1] == 0);
    CHECK(same[2] == frac(1, 4 * N * N));
    const std::vector<Rational>& mixed =
        res.coefficients.at(Marker({Partition({2}), Partition({1, 1})}));
    CHECK(mixed[0] == 0);
    CHECK(mixed[1] == frac(-1, 2 * N));
  }

  SUBCASE("degree 0 stratum is the constant 1") {
    MicroResult res = microchiral_direct(cylinder, 0, 3, 1);
    const std::vector<Rational>& c =
        res.coefficients.at(Marker({Partition{}, Partition{}}));
    CHECK(c[0] == 1);
    CHECK(c[1] == 0);
  }

  SUBCASE("argument validation") {
    CHECK_THROWS_AS(microchiral_direct(torus, -1, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(microchiral_direct(torus, 2, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(microchiral_direct(torus, 2, 3, -1), std::invalid_argument);
  }
}

TEST_CASE("direct stratum equals the prefactored spectral expectation in stable range") {
  const int N = 3;
  for (const GeometryTemplate& geom : geometry_templates()) {
    const int chi = 2 - 2 * geom.handles - geom.holes;
    for (int d = 1; d <= 3; ++d) {
      MicroResult res = microchiral_direct(geom, d, N, 2);
      const Rational prefactor =
          rat_pow(Rational(Integer(N)), chi * d) / Rational(factorial(d));
      for (const auto& [marker, coeffs] : res.coefficients) {
        const std::vector<Rational> raw =
            gross_taylor_expectation(geom, marker.slots, d, N, 2);
        REQUIRE(raw.size() == coeffs.size());
        for (std::size_t k = 0; k < raw.size(); ++k) {
          Rational expected = raw[k] * prefactor;
          expected.canonicalize();
          CHECK(coeffs[k] == expected);
        }
      }
    }
  }
  CHECK_THROWS_AS(
      gross_taylor_expectation(geometry_by_name("cylinder"), {Partition({2})}, 2, 3, 1),
      std::invalid_argument);
}

TEST_CASE("direct stratum drops long diagrams below the stable range") {
  // Degree 3 torus at N = 2: the three-row diagram is excluded, leaving 2
  // of the stable-range value p(3) = 3.
  MicroResult narrow = microchiral_direct(geometry_by_name("torus"), 3, 2, 0);
  CHECK(narrow.coefficients.at(Marker{})[0] == 2);
  MicroResult wide = microchiral_direct(geometry_by_name("torus"), 3, 3, 0);
  CHECK(wide.coefficients.at(Marker{})[0] == 3);

  // Degree 2 sphere at N = 1: only the single-row diagram survives.
  MicroResult sphere = microchiral_direct(geometry_by_name("sphere"), 2, 1, 1);
  CHECK(sphere.coefficients.at(Marker{})[0] == 1);
  CHECK(sphere.coefficients.at(Marker{})[1] == -1);
}

TEST_CASE("expansion rows carry refined Hurwitz data") {
  SUBCASE("cylinder rows match double Hurwitz numbers") {
    bool saw_three_cycles = false;
    bool saw_identity_pair = false;
    for (const ExpansionRow& row : microchiral_expansion(geometry_by_name("cylinder"),
                                                         3, 3, 2, 0)) {
      REQUIRE(row.classes.size() == 2);
      CHECK(row.levels.empty());
      CHECK(row.s == 0);
      CHECK(row.value == double_hurwitz(row.classes[0], row.classes[1], row.r));
      CHECK(row.n_power == -row.r);
      if (row.classes[0] == Partition({3}) && row.classes[1] == Partition({3}) &&
          row.r == 0) {
        saw_three_cycles = true;
        CHECK(row.value == 2);
      }
      if (row.classes[0] == Partition({1, 1, 1}) && row.classes[1] == Partition({3}) &&
          row.r == 2) {
        saw_identity_pair = true;
        CHECK(row.value == 6);
      }
    }
    CHECK(saw_three_cycles);
    CHECK(saw_identity_pair);
  }

  SUBCASE("sphere degree 1 reduces to a single untwisted row") {
    const std::vector<ExpansionRow> rows =
        microchiral_expansion(geometry_by_name("sphere"), 1, 4, 3, 0);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].levels == std::vector<int>({0, 0}));
    CHECK(rows[0].r == 0);
    CHECK(rows[0].value == 1);
    CHECK(rows[0].n_power == 2);
  }

  SUBCASE("sphere rows match coarse double Hurwitz numbers") {
    for (const ExpansionRow& row : microchiral_expansion(geometry_by_name("sphere"),
                                                         2, 2, 2, 0)) {
      REQUIRE(row.levels.size() == 2);
      CHECK(row.value ==
            coarse_double_hurwitz(2, row.levels[0], row.levels[1], row.r));
      CHECK(row.n_power == -(-4 + row.levels[0] + row.levels[1] + row.r));
    }
  }

  SUBCASE("stable range is enforced") {
    CHECK_THROWS_AS(microchiral_expansion(geometry_by_name("torus"), 3, 2, 1, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(microchiral_expansion(geometry_by_name("torus"), 0, 2, 1, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(microchiral_expansion(geometry_by_name("torus"), 2, 2, -1, 0),
                    std::invalid_argument);
  }
}

TEST_CASE("assembled expansion reproduces the direct stratum exactly") {
  // Exact for the four templates without a monotone tail.
  const int N = 3;
  for (const char* name : {"cylinder", "torus", "sphere", "disc"}) {
    const GeometryTemplate geom = geometry_by_name(name);
    for (int d = 1; d <= 3; ++d) {
      const auto assembled = assemble_expansion(geom, d, N, 3, 0);
      const auto direct = microchiral_direct(geom, d, N, 3).coefficients;
      CHECK(assembled == direct);
    }
  }
}

TEST_CASE("chiral series round trip and low strata") {
  SUBCASE("cylinder degree 1") {
    ChiralPair pair = chiral_series(geometry_by_name("cylinder"), {1, 2, 0});
    REQUIRE(pair.partition_function.terms().size() == 2);
    CHECK(pair.partition_function.coeff(
              key_of(0, 0, 0, 0, 0, {Partition{}, Partition{}})) == 1);
    CHECK(pair.partition_function.coeff(
              key_of(1, 0, 0, 0, 0, {Partition({1}), Partition({1})})) == 1);
    REQUIRE(pair.free_energy.terms().size() == 1);
    CHECK(pair.free_energy.coeff(
              key_of(1, 0, 0, 0, 0, {Partition({1}), Partition({1})})) == 1);
  }

  SUBCASE("exponentiating the free energy recovers the partition function") {
    const std::map<std::string, ChiralOrders> plans = {
        {"cylinder", {3, 1, 0}}, {"torus", {3, 2, 0}},          {"sphere", {3, 1, 0}},
        {"disc", {3, 1, 0}},     {"pair-of-pants", {2, 1, 2}},  {"one-holed-torus", {2, 1, 2}},
    };
    for (const auto& [name, orders] : plans) {
      ChiralPair pair = chiral_series(geometry_by_name(name), orders);
      CHECK(series_exp(pair.free_energy) == pair.partition_function);
    }
  }
}

TEST_CASE("free energy counts only connected covers") {
  const std::map<std::string, ChiralOrders> plans = {
      {"cylinder", {3, 1, 0}}, {"torus", {3, 2, 0}},          {"sphere", {3, 1, 0}},
      {"disc", {3, 1, 0}},     {"pair-of-pants", {2, 1, 2}},  {"one-holed-torus", {2, 1, 2}},
  };
  for (const auto& [name, orders] : plans) {
    const GeometryTemplate geom = geometry_by_name(name);
    ChiralPair pair = chiral_series(geom, orders);
    FormalSeries conn =
        connected_series(geom, orders, pair.partition_function.truncation());
    CHECK(pair.free_energy == conn);
  }
}

TEST_CASE("genus free energies") {
  SUBCASE("torus layers count transitive tuples with commutator base") {
    FormalSeries f1 = genus_free_energy(geometry_by_name("torus"), 1, 2);
    CHECK(f1.coeff(key_of(1, 0, 0, 0, 0, {})) == 1);
    CHECK(f1.coeff(key_of(2, 0, 0, 0, 0, {})) == frac(3, 2));
    for (const auto& [key, c] : f1.terms()) CHECK(key.hbar == 0);

    FormalSeries f2 = genus_free_energy(geometry_by_name("torus"), 2, 2);
    CHECK(f2.coeff(key_of(2, 2, 0, 0, 0, {})) == 1);
    for (const auto& [key, c] : f2.terms()) CHECK(key.z == 2);
  }

  SUBCASE("cylinder genus zero keeps the boundary-length grading") {
    FormalSeries f0 = genus_free_energy(geometry_by_name("cylinder"), 0, 2);
    CHECK(f0.coeff(key_of(1, 0, 0, 0, 2, {Partition({1}), Partition({1})})) == 1);
    CHECK(f0.coeff(key_of(2, 0, 0, 0, 2, {Partition({2}), Partition({2})})) == frac(1, 2));
    CHECK(f0.coeff(key_of(2, 1, 0, 0, 3, {Partition({2}), Partition({1, 1})})) ==
          frac(-1, 2));
    CHECK(f0.coeff(key_of(2, 2, 0, 0, 4, {Partition({1, 1}), Partition({1, 1})})) ==
          frac(1, 4));
    for (const auto& [key, c] : f0.terms())
      CHECK(key.hbar == slot_length_sum(key.marker));
  }

  SUBCASE("sphere layers are area-graded but hbar-free") {
    FormalSeries f0 = genus_free_energy(geometry_by_name("sphere"), 0, 3);
    CHECK(f0.coeff(key_of(1, 0, 0, 0, 0, {})) == 1);
    CHECK(f0.coeff(key_of(2, 0, 0, 0, 0, {})) == frac(1, 2));
    // Both level orderings (1,0) and (0,1) fold onto the same t^1 term.
    CHECK(f0.coeff(key_of(2, 1, 0, 0, 0, {})) == -1);
    CHECK(f0.coeff(key_of(2, 2, 0, 0, 0, {})) == frac(1, 4));
    for (const auto& [key, c] : f0.terms()) {
      CHECK(key.hbar == 0);
      CHECK(key.u == 0);
      CHECK(key.v == 0);
    }
  }

  SUBCASE("monotone templates keep their boundary grading") {
    FormalSeries pants = genus_free_energy(geometry_by_name("pair-of-pants"), 0, 2);
    CHECK(pants.coeff(key_of(1, 0, 0, 0, 3, {Partition({1}), Partition({1}), Partition({1})})) ==
          1);
    for (const auto& [key, c] : pants.terms())
      CHECK(key.hbar == slot_length_sum(key.marker));

    FormalSeries oht = genus_free_energy(geometry_by_name("one-holed-torus"), 1, 2);
    for (const auto& [key, c] : oht.terms())
      CHECK(key.hbar == slot_length_sum(key.marker));
  }

  SUBCASE("validation") {
    CHECK_THROWS_AS(genus_free_energy(geometry_by_name("disc"), 0, 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(genus_free_energy(geometry_by_name("one-holed-torus"), 0, 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(genus_free_energy(geometry_by_name("torus"), 1, 0),
                    std::invalid_argument);
  }
}

TEST_CASE("genus layers reassemble the connected series") {
  SUBCASE("cylinder") {
    ChiralPair pair = chiral_series(geometry_by_name("cylinder"), {2, 4, 0});
    std::map<int, FormalSeries> layers;
    for (int g = 0; g <= 3; ++g)
      layers.emplace(g, genus_free_energy(geometry_by_name("cylinder"), g, 2));
    for (const auto& [key, c] : pair.free_energy.terms()) {
      const int residual = slot_length_sum(key.marker);
      const int tg2 = key.hbar - residual;
      REQUIRE(tg2 % 2 == 0);
      const int g = (tg2 + 2) / 2;
      REQUIRE(g >= 0);
      SeriesKey shifted = key;
      shifted.hbar = residual;
      CHECK(layers.at(g).coeff(shifted) == c);
    }
  }

  SUBCASE("torus") {
    ChiralPair pair = chiral_series(geometry_by_name("torus"), {2, 4, 0});
    std::map<int, FormalSeries> layers;
    for (int g = 1; g <= 3; ++g)
      layers.emplace(g, genus_free_energy(geometry_by_name("torus"), g, 2));
    for (const auto& [key, c] : pair.free_energy.terms()) {
      REQUIRE(key.hbar % 2 == 0);
      const int g = (key.hbar + 2) / 2;
      REQUIRE(g >= 1);
      SeriesKey shifted = key;
      shifted.hbar = 0;
      CHECK(layers.at(g).coeff(shifted) == c);
    }
  }

  SUBCASE("sphere, with level markers folded to 1") {
    ChiralPair pair = chiral_series(geometry_by_name("sphere"), {2, 3, 0});
    std::map<SeriesKey, Rational> folded;
    for (const auto& [key, c] : pair.free_energy.terms()) {
      SeriesKey flat = key;
      flat.u = flat.v = 0;
      folded[flat] += c;
    }
    std::map<int, FormalSeries> layers;
    for (int g = 0; g <= 1; ++g)
      layers.emplace(g, genus_free_energy(geometry_by_name("sphere"), g, 2));
    for (const auto& [key, c] : folded) {
      if (c == 0) continue;
      REQUIRE(key.hbar % 2 == 0);
      const int g = (key.hbar + 2) / 2;
      REQUIRE(g >= 0);
      SeriesKey shifted = key;
      shifted.hbar = 0;
      CHECK(layers.at(g).coeff(shifted) == c);
    }
  }

  SUBCASE("monotone tails") {
    for (const char* name : {"pair-of-pants", "one-holed-torus"}) {
      const GeometryTemplate geom = geometry_by_name(name);
      ChiralPair pair = chiral_series(geom, {2, 2, 2});
      std::map<int, FormalSeries> layers;
      for (int g = geom.handles; g <= 3; ++g)
        layers.emplace(g, genus_free_energy(geom, g, 2));
      for (const auto& [key, c] : pair.free_energy.terms()) {
        const int residual = slot_length_sum(key.marker);
        const int tg2 = key.hbar - residual;
        REQUIRE(tg2 % 2 == 0);
        const int g = (tg2 + 2) / 2;
        REQUIRE(g >= geom.handles);
        SeriesKey shifted = key;
        shifted.hbar = residual;
        CHECK(layers.at(g).coeff(shifted) == c);
      }
    }
  }
}

TEST_CASE("area zero specializations") {
  SUBCASE("cylinder is the Cauchy kernel") {
    FormalSeries w = area_zero(geometry_by_name("cylinder"), 4);

    // exp(sum_d z^d/d p_d (x) p_d)
    FormalSeries gen(w.truncation());
    for (int d = 1; d <= 4; ++d)
      gen.add(key_of(d, 0, 0, 0, 0, {Partition({d}), Partition({d})}), frac(1, d));
    CHECK(series_exp(gen) == w);

    // Schur diagonal: 1 + sum_d z^d sum_lambda s_lambda (x) s_lambda.
    for (int d = 1; d <= 4; ++d) {
      std::map<std::pair<Partition, Partition>, Rational> expected;
      for (const Partition& lambda : partitions_of(d)) {
        const auto in_powersums = schur_in_powersums(lambda);
        for (const auto& [alpha, ca] : in_powersums)
          for (const auto& [beta, cb] : in_powersums)
            expected[{alpha, beta}] += ca * cb;
      }
      each_class_tuple(d, 2, [&](const std::vector<Partition>& pair) {
        Rational want = 0;
        auto it = expected.find({pair[0], pair[1]});
        if (it != expected.end()) want = it->second;
        want.canonicalize();
        CHECK(w.coeff(key_of(d, 0, 0, 0, 0, pair)) == want);
      });
    }
  }

  SUBCASE("torus counts diagrams") {
    FormalSeries w = area_zero(geometry_by_name("torus"), 5);
    for (int d = 0; d <= 5; ++d)
      CHECK(w.coeff(key_of(d, 0, 0, 0, 0, {})) ==
            Rational(Integer(partitions_of(d).size())));
  }

  SUBCASE("sphere is diagonal with Stirling weights") {
    FormalSeries w = area_zero(geometry_by_name("sphere"), 4);
    int per_degree[5] = {0, 0, 0, 0, 0};
    for (const auto& [key, c] : w.terms())
      if (key.z >= 1) ++per_degree[key.z];
    for (int d = 1; d <= 4; ++d) {
      CHECK(per_degree[d] == d);  // only u = v survives
      for (int a = 0; a < d; ++a) {
        Rational want(stirling_cycle(d, d - a), factorial(d));
        want.canonicalize();
        CHECK(w.coeff(key_of(d, 0, a, a, -2 * (d - a), {})) == want);
      }
    }
    // Spot value quoted in the module notes: z^3 u v hbar^{-4}.
    CHECK(w.coeff(key_of(3, 0, 1, 1, -4, {})) == frac(1, 2));
  }

  SUBCASE("disc pairs one class with one level") {
    FormalSeries w = area_zero(geometry_by_name("disc"), 2);
    CHECK(w.coeff(key_of(1, 0, 0, 0, -1, {Partition({1})})) == 1);
    CHECK(w.coeff(key_of(2, 0, 0, 0, -2, {Partition({1, 1})})) == frac(1, 2));
    CHECK(w.coeff(key_of(2, 0, 0, 1, -1, {Partition({2})})) == frac(1, 2));
    CHECK(w.terms().size() == 4);  // the three above plus the constant term
  }

  SUBCASE("pair of pants keeps a truncated monotone tail") {
    FormalSeries w = area_zero(geometry_by_name("pair-of-pants"), 2, 3);
    CHECK(w.coeff(key_of(1, 0, 0, 0, 1,
                         {Partition({1}), Partition({1}), Partition({1})})) == 1);
    CHECK(w.coeff(key_of(2, 0, 1, 0, 3,
                         {Partition({2}), Partition({2}), Partition({2})})) == frac(-1, 2));
    CHECK(w.coeff(key_of(2, 0, 3, 0, 5,
                         {Partition({2}), Partition({2}), Partition({2})})) == frac(-1, 2));
  }
}

TEST_CASE("geometry keys track the length-deficit grading") {
  const GeometryTemplate sphere = geometry_by_name("sphere");
  SeriesKey k = geometry_key(sphere, 3, {}, {1, 2}, 2, 0);
  CHECK(k.z == 3);
  CHECK(k.t == 2);
  CHECK(k.u == 1);
  CHECK(k.v == 2);
  CHECK(k.hbar == -6 + 1 + 2 + 2);

  const GeometryTemplate disc = geometry_by_name("disc");
  SeriesKey dk = geometry_key(disc, 2, {Partition({2})}, {1}, 1, 0);
  CHECK(dk.u == 0);
  CHECK(dk.v == 1);
  CHECK(dk.hbar == -2 + 1 + 1);
  CHECK(dk.marker.slots.size() == 1);

  const GeometryTemplate pants = geometry_by_name("pair-of-pants");
  SeriesKey pk = geometry_key(pants, 2, {Partition({2}), Partition({2}), Partition({1, 1})},
                              {}, 1, 2);
  CHECK(pk.u == 2);
  CHECK(pk.v == 0);
  CHECK(pk.hbar == 2 + 1 + 2);

  for (const GeometryTemplate& geom : geometry_templates())
    CHECK(geom.z_hbar == geom.holes + 2 * geom.handles - 2);

  CHECK_THROWS_AS(geometry_word(sphere, 2, {Partition({2})}, {0, 0}, 0, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(geometry_word(sphere, 2, {}, {0}, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(geometry_word(sphere, 2, {}, {0, 0}, 0, 1), std::invalid_argument);
}
