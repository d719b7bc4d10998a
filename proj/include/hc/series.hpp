#pragma once

#include <map>

#include "hc/partition.hpp"

namespace hc {

// Boundary-profile marker: one partition per hole slot. Multiplication merges
// slotwise (disjoint-cover union of profiles).
struct Marker {
  std::vector<Partition> slots;

  Marker() = default;
  explicit Marker(std::vector<Partition> s) : slots(std::move(s)) {}

  bool operator==(const Marker& o) const { return slots == o.slots; }
  bool operator<(const Marker& o) const;
  Marker merged(const Marker& o) const;
};

struct SeriesKey {
  int z = 0;
  int t = 0;
  int u = 0;
  int v = 0;
  int hbar = 0;  // may be negative
  Marker marker;

  bool operator==(const SeriesKey& o) const;
  bool operator<(const SeriesKey& o) const;
};

// Truncation orders, declared at construction; the hbar window behaves like
// the other bounds (keys outside are dropped, never silently kept).
struct Truncation {
  int z_max = 0;
  int t_max = 0;
  int u_max = 0;
  int v_max = 0;
  int hbar_min = 0;
  int hbar_max = 0;
  int slots = 0;

  bool admits(const SeriesKey& k) const;
  // Componentwise weakest common truncation of two operands.
  static Truncation meet(const Truncation& a, const Truncation& b);
};

// Multivariate truncated series over exact rationals in z, t, u, v, hbar and
// power-sum markers. Deterministic term order; zero coefficients are erased.
class FormalSeries {
 public:
  explicit FormalSeries(Truncation t) : trunc_(t) {}
  static FormalSeries one(Truncation t);

  const Truncation& truncation() const { return trunc_; }
  const std::map<SeriesKey, Rational>& terms() const { return terms_; }
  Rational coeff(const SeriesKey& k) const;
  void add(const SeriesKey& k, const Rational& c);
  bool is_zero() const { return terms_.empty(); }

  FormalSeries operator+(const FormalSeries& o) const;
  FormalSeries operator-(const FormalSeries& o) const;
  FormalSeries operator*(const FormalSeries& o) const;
  FormalSeries operator*(const Rational& s) const;
  bool operator==(const FormalSeries& o) const { return terms_ == o.terms_; }

 private:
  Truncation trunc_;
  std::map<SeriesKey, Rational> terms_;
};

// exp of a series whose every monomial carries z-degree >= 1 (the power
// iteration then terminates at the z truncation order).
FormalSeries series_exp(const FormalSeries& f);
// log of 1 + (positive z-degree part); requires constant coefficient 1.
FormalSeries series_log(const FormalSeries& z);

// Schur polynomial in the power-sum basis: s_lambda = sum_alpha chi^lambda(alpha) p_alpha / z_alpha.
std::map<Partition, Rational> schur_in_powersums(const Partition& lambda);

}  // namespace hc
