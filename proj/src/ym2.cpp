#include "hc/ym2.hpp"

#include <functional>
#include <stdexcept>

namespace hc {

namespace {

int euler_characteristic(const GeometryTemplate& geom) {
  return 2 - 2 * geom.handles - geom.holes;
}

// Base spectral weight of one diagram: (dim^2/d!) H^n Omega_{1/N}^{chi}.
Rational spectral_weight(const GeometryTemplate& geom, const Eigenpacket& pack,
                         int d, const Rational& q) {
  Rational w(pack.dim * pack.dim, factorial(d));
  w.canonicalize();
  for (int i = 0; i < geom.handles; ++i) w *= pack.h_hat;
  const int chi = euler_characteristic(geom);
  if (chi != 0) {
    const Rational omega = pack.omega(q);
    if (omega == 0)
      throw SingularMatrixError("microchiral: omega eigenvalue vanishes in range");
    w *= rat_pow(omega, chi);
  }
  return w;
}

// All m-tuples of partitions of d, in lexicographic slot order.
void for_each_class_tuple(int d, int m,
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

// All level tuples in [0, d-1]^count.
void for_each_level_tuple(int d, int count,
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

Rational factorial_rational(int n) { return Rational(factorial(n)); }

}  // namespace

MicroResult microchiral_direct(const GeometryTemplate& geom, int d, int N, int t_order) {
  if (d < 0 || N < 1 || t_order < 0)
    throw std::invalid_argument("microchiral_direct: need d >= 0, N >= 1, t_order >= 0");
  MicroResult out;
  out.d = d;
  out.N = N;
  const int chi = euler_characteristic(geom);
  const Rational q(1, N);

  std::vector<Eigenpacket> packets;
  for (const Partition& lambda : partitions_of(d))
    if (lambda.length() <= N) packets.push_back(eigenpacket(lambda));

  const Rational prefactor =
      rat_pow(Rational(Integer(N)), chi * d) / factorial_rational(d);

  for_each_class_tuple(d, geom.holes, [&](const std::vector<Partition>& markers) {
    std::vector<Rational> coeffs(t_order + 1, Rational(0));
    for (const Eigenpacket& pack : packets) {
      Rational w = spectral_weight(geom, pack, d, q);
      for (const Partition& alpha : markers)
        w *= central_character(alpha, pack.lambda);
      // Expand e^{-t K/N}: the t^k coefficient is (-K/N)^k / k!.
      const Rational step = Rational(-pack.k_hat, N);
      Rational power = w;
      for (int k = 0; k <= t_order; ++k) {
        coeffs[k] += power / factorial_rational(k);
        power *= step;
      }
    }
    for (Rational& c : coeffs) {
      c *= prefactor;
      c.canonicalize();
    }
    out.coefficients.emplace(Marker(markers), std::move(coeffs));
  });
  return out;
}

std::vector<Rational> gross_taylor_expectation(const GeometryTemplate& geom,
                                               const std::vector<Partition>& markers,
                                               int d, int N, int t_order) {
  if (static_cast<int>(markers.size()) != geom.holes)
    throw std::invalid_argument("gross_taylor_expectation: one marker per hole");
  if (d < 0 || N < 1 || t_order < 0)
    throw std::invalid_argument("gross_taylor_expectation: bad arguments");
  const Rational q(1, N);
  std::vector<Rational> coeffs(t_order + 1, Rational(0));
  for (const Partition& lambda : partitions_of(d)) {
    const Eigenpacket pack = eigenpacket(lambda);
    Rational w = spectral_weight(geom, pack, d, q);
    for (const Partition& alpha : markers) w *= central_character(alpha, lambda);
    const Rational step = Rational(-pack.k_hat, N);
    Rational power = w;
    for (int k = 0; k <= t_order; ++k) {
      coeffs[k] += power / factorial_rational(k);
      power *= step;
    }
  }
  for (Rational& c : coeffs) c.canonicalize();
  return coeffs;
}

ExpectationWord geometry_word(const GeometryTemplate& geom, int d,
                              const std::vector<Partition>& classes,
                              const std::vector<int>& levels, int r, int s) {
  if (static_cast<int>(classes.size()) != geom.class_boundaries)
    throw std::invalid_argument("geometry_word: class boundary count mismatch");
  if (static_cast<int>(levels.size()) != geom.level_boundaries)
    throw std::invalid_argument("geometry_word: level boundary count mismatch");
  if (s > 0 && !geom.monotone_tail)
    throw std::invalid_argument("geometry_word: template has no monotone tail");
  auto w = ExpectationWord::in_degree(d);
  w.with_handles(geom.handles);
  for (const Partition& alpha : classes) w.with_class(alpha);
  w.with_steps(r).with_monotone(s);
  for (int a : levels) w.with_level(a);
  return w;
}

SeriesKey geometry_key(const GeometryTemplate& geom, int d,
                       const std::vector<Partition>& classes,
                       const std::vector<int>& levels, int r, int s) {
  SeriesKey key;
  key.z = d;
  key.t = r;
  key.hbar = geom.z_hbar * d + r + s;
  for (int a : levels) key.hbar += a;
  // Level gradings occupy u then v; monotone steps occupy u. No template has
  // both a monotone tail and level boundaries.
  if (!levels.empty()) {
    key.u = levels[0];
    if (levels.size() > 1) key.v = levels[1];
    if (geom.class_boundaries > 0) {  // disc: the single level sits over v
      key.v = levels[0];
      key.u = 0;
    }
  }
  key.u += s;
  key.marker.slots = classes;
  return key;
}

std::vector<ExpansionRow> microchiral_expansion(const GeometryTemplate& geom, int d,
                                                int N, int t_order, int s_order) {
  if (d < 1 || d > N)
    throw std::invalid_argument(
        "microchiral_expansion: stable range 1 <= d <= N required");
  if (t_order < 0 || s_order < 0)
    throw std::invalid_argument("microchiral_expansion: negative order");
  std::vector<ExpansionRow> rows;
  const int s_max = geom.monotone_tail ? s_order : 0;
  for_each_class_tuple(d, geom.class_boundaries, [&](const std::vector<Partition>& cls) {
    for_each_level_tuple(d, geom.level_boundaries, [&](const std::vector<int>& lv) {
      for (int r = 0; r <= t_order; ++r)
        for (int s = 0; s <= s_max; ++s) {
          const Integer value = mixed_expectation(geometry_word(geom, d, cls, lv, r, s));
          if (value == 0) continue;
          ExpansionRow row;
          row.classes = cls;
          row.levels = lv;
          row.r = r;
          row.s = s;
          row.n_power = -geometry_key(geom, d, cls, lv, r, s).hbar;
          row.value = value;
          rows.push_back(std::move(row));
        }
    });
  });
  return rows;
}

std::map<Marker, std::vector<Rational>> assemble_expansion(const GeometryTemplate& geom,
                                                           int d, int N, int t_order,
                                                           int s_order) {
  std::map<Marker, std::vector<Rational>> out;
  const Rational d_factorial = factorial_rational(d);
  for (const ExpansionRow& row : microchiral_expansion(geom, d, N, t_order, s_order)) {
    auto it =
        out.emplace(Marker(row.classes), std::vector<Rational>(t_order + 1, Rational(0)))
            .first;
    Rational contribution =
        Rational(row.value) * rat_pow(Rational(Integer(N)), row.n_power);
    contribution /= factorial_rational(row.r) * d_factorial;
    if ((row.r + row.s) % 2 == 1) contribution = -contribution;
    contribution.canonicalize();
    it->second[row.r] += contribution;
  }
  // Marker tuples whose every expectation vanishes still appear, as zeros.
  for_each_class_tuple(d, geom.class_boundaries, [&](const std::vector<Partition>& cls) {
    out.emplace(Marker(cls), std::vector<Rational>(t_order + 1, Rational(0)));
  });
  return out;
}

ChiralPair chiral_series(const GeometryTemplate& geom, const ChiralOrders& orders) {
  if (orders.max_d < 0 || orders.t_order < 0 || orders.s_order < 0)
    throw std::invalid_argument("chiral_series: negative order");
  Truncation tr;
  tr.z_max = orders.max_d;
  tr.t_max = orders.t_order;
  tr.u_max = geom.monotone_tail ? orders.s_order : (geom.level_boundaries > 0 ? orders.max_d : 0);
  tr.v_max = (geom.level_boundaries > 1 || geom.class_boundaries * geom.level_boundaries > 0)
                 ? orders.max_d
                 : 0;
  const int spread = 2 * orders.max_d + orders.t_order + orders.s_order + 2;
  tr.hbar_min = -spread;
  tr.hbar_max = spread;
  tr.slots = geom.holes;

  FormalSeries z = FormalSeries::one(tr);
  const int s_max = geom.monotone_tail ? orders.s_order : 0;
  for (int d = 1; d <= orders.max_d; ++d) {
    const Rational d_factorial = factorial_rational(d);
    for_each_class_tuple(d, geom.class_boundaries, [&](const std::vector<Partition>& cls) {
      for_each_level_tuple(d, geom.level_boundaries, [&](const std::vector<int>& lv) {
        for (int r = 0; r <= orders.t_order; ++r)
          for (int s = 0; s <= s_max; ++s) {
            const Integer value =
                mixed_expectation(geometry_word(geom, d, cls, lv, r, s));
            if (value == 0) continue;
            Rational c = Rational(value) / (factorial_rational(r) * d_factorial);
            if ((r + s) % 2 == 1) c = -c;
            z.add(geometry_key(geom, d, cls, lv, r, s), c);
          }
      });
    });
  }
  ChiralPair pair{z, series_log(z)};
  return pair;
}

FormalSeries genus_free_energy(const GeometryTemplate& geom, int g, int max_d) {
  if (!geom.genus_labelled)
    throw std::invalid_argument("genus_free_energy: template carries no genus label");
  if (g < geom.handles)
    throw std::invalid_argument("genus_free_energy: genus below template minimum");
  if (max_d < 1) throw std::invalid_argument("genus_free_energy: need max_d >= 1");

  const int spread = 2 * g + 4 * max_d + 4;
  Truncation tr;
  tr.z_max = max_d;
  tr.t_max = spread;
  tr.u_max = geom.monotone_tail ? spread : (geom.level_boundaries > 0 ? max_d : 0);
  tr.v_max = geom.level_boundaries > 1 ? max_d : 0;
  tr.hbar_min = -spread;
  tr.hbar_max = spread;
  tr.slots = geom.holes;
  if (geom.level_boundaries == 2) tr.u_max = tr.v_max = 0;  // sphere: u = v = 1

  FormalSeries f(tr);
  for (int d = 1; d <= max_d; ++d) {
    const Rational d_factorial = factorial_rational(d);
    for_each_class_tuple(d, geom.class_boundaries, [&](const std::vector<Partition>& cls) {
      for_each_level_tuple(d, geom.level_boundaries, [&](const std::vector<int>& lv) {
        // Total steps fixed by the defect relation.
        long defect = 0;
        for (const Partition& alpha : cls) defect += d - alpha.length();
        for (int a : lv) defect += a;
        const long total = 2L * g - 2 - static_cast<long>(d) * (2 * geom.handles - 2) - defect;
        if (total < 0) return;
        const int s_hi = geom.monotone_tail ? static_cast<int>(total) : 0;
        for (int s = 0; s <= s_hi; ++s) {
          const int r = static_cast<int>(total) - s;
          const Integer value = connected_count(geometry_word(geom, d, cls, lv, r, s));
          if (value == 0) continue;
          Rational c = Rational(value) / (factorial_rational(r) * d_factorial);
          if ((r + s) % 2 == 1) c = -c;
          SeriesKey key = geometry_key(geom, d, cls, lv, r, s);
          key.hbar -= 2 * g - 2;
          if (geom.level_boundaries == 2) key.u = key.v = 0;
          f.add(key, c);
        }
      });
    });
  }
  return f;
}

FormalSeries area_zero(const GeometryTemplate& geom, int max_d, int s_order) {
  if (max_d < 0 || s_order < 0)
    throw std::invalid_argument("area_zero: negative order");
  Truncation tr;
  tr.z_max = max_d;
  tr.t_max = 0;
  tr.u_max = geom.monotone_tail ? s_order : (geom.level_boundaries > 0 ? max_d : 0);
  tr.v_max = (geom.level_boundaries > 1 || geom.class_boundaries * geom.level_boundaries > 0)
                 ? max_d
                 : 0;
  const int spread = 2 * max_d + s_order + 2;
  tr.hbar_min = -spread;
  tr.hbar_max = spread;
  tr.slots = geom.holes;

  FormalSeries w = FormalSeries::one(tr);
  const int s_max = geom.monotone_tail ? s_order : 0;
  for (int d = 1; d <= max_d; ++d) {
    const Rational d_factorial = factorial_rational(d);
    for_each_class_tuple(d, geom.class_boundaries, [&](const std::vector<Partition>& cls) {
      for_each_level_tuple(d, geom.level_boundaries, [&](const std::vector<int>& lv) {
        for (int s = 0; s <= s_max; ++s) {
          const Integer value = mixed_expectation(geometry_word(geom, d, cls, lv, 0, s));
          if (value == 0) continue;
          Rational c = Rational(value) / d_factorial;
          if (s % 2 == 1) c = -c;
          w.add(geometry_key(geom, d, cls, lv, 0, s), c);
        }
      });
    });
  }
  return w;
}

}  // namespace hc
