#include "hc/series.hpp"

#include <algorithm>

#include "hc/characters.hpp"

namespace hc {

bool Marker::operator<(const Marker& o) const {
  return std::lexicographical_compare(slots.begin(), slots.end(), o.slots.begin(),
                                      o.slots.end());
}

Marker Marker::merged(const Marker& o) const {
  if (slots.size() != o.slots.size())
    throw std::invalid_argument("Marker: slot count mismatch");
  std::vector<Partition> out;
  out.reserve(slots.size());
  for (size_t i = 0; i < slots.size(); ++i) {
    std::vector<int> parts = slots[i].parts();
    const auto& more = o.slots[i].parts();
    parts.insert(parts.end(), more.begin(), more.end());
    out.push_back(Partition::from_unsorted(std::move(parts)));
  }
  return Marker(std::move(out));
}

bool SeriesKey::operator==(const SeriesKey& o) const {
  return z == o.z && t == o.t && u == o.u && v == o.v && hbar == o.hbar && marker == o.marker;
}

bool SeriesKey::operator<(const SeriesKey& o) const {
  if (z != o.z) return z < o.z;
  if (t != o.t) return t < o.t;
  if (u != o.u) return u < o.u;
  if (v != o.v) return v < o.v;
  if (hbar != o.hbar) return hbar < o.hbar;
  return marker < o.marker;
}

bool Truncation::admits(const SeriesKey& k) const {
  return k.z >= 0 && k.z <= z_max && k.t >= 0 && k.t <= t_max && k.u >= 0 && k.u <= u_max &&
         k.v >= 0 && k.v <= v_max && k.hbar >= hbar_min && k.hbar <= hbar_max;
}

Truncation Truncation::meet(const Truncation& a, const Truncation& b) {
  if (a.slots != b.slots) throw std::invalid_argument("Truncation: marker slot mismatch");
  Truncation t;
  t.z_max = std::min(a.z_max, b.z_max);
  t.t_max = std::min(a.t_max, b.t_max);
  t.u_max = std::min(a.u_max, b.u_max);
  t.v_max = std::min(a.v_max, b.v_max);
  t.hbar_min = std::max(a.hbar_min, b.hbar_min);
  t.hbar_max = std::min(a.hbar_max, b.hbar_max);
  t.slots = a.slots;
  return t;
}

FormalSeries FormalSeries::one(Truncation t) {
  FormalSeries s(t);
  SeriesKey unit;
  unit.marker.slots.assign(t.slots, Partition());
  s.add(unit, 1);
  return s;
}

Rational FormalSeries::coeff(const SeriesKey& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

void FormalSeries::add(const SeriesKey& k, const Rational& c) {
  if (static_cast<int>(k.marker.slots.size()) != trunc_.slots)
    throw std::invalid_argument("FormalSeries: marker slot count mismatch");
  if (c == 0 || !trunc_.admits(k)) return;
  Rational canon = c;
  canon.canonicalize();  // raw mpq_class(a, b) may arrive non-reduced
  auto [it, fresh] = terms_.emplace(k, canon);
  if (!fresh) {
    it->second += canon;
    if (it->second == 0) terms_.erase(it);
  }
}

FormalSeries FormalSeries::operator+(const FormalSeries& o) const {
  FormalSeries out(Truncation::meet(trunc_, o.trunc_));
  for (const auto& [k, c] : terms_) out.add(k, c);
  for (const auto& [k, c] : o.terms_) out.add(k, c);
  return out;
}

FormalSeries FormalSeries::operator-(const FormalSeries& o) const {
  FormalSeries out(Truncation::meet(trunc_, o.trunc_));
  for (const auto& [k, c] : terms_) out.add(k, c);
  for (const auto& [k, c] : o.terms_) out.add(k, -c);
  return out;
}

FormalSeries FormalSeries::operator*(const FormalSeries& o) const {
  FormalSeries out(Truncation::meet(trunc_, o.trunc_));
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_) {
      SeriesKey k;
      k.z = ka.z + kb.z;
      k.t = ka.t + kb.t;
      k.u = ka.u + kb.u;
      k.v = ka.v + kb.v;
      k.hbar = ka.hbar + kb.hbar;
      if (!out.trunc_.admits(k)) continue;  // skip merge work for dropped keys
      k.marker = ka.marker.merged(kb.marker);
      out.add(k, ca * cb);
    }
  return out;
}

FormalSeries FormalSeries::operator*(const Rational& s) const {
  FormalSeries out(trunc_);
  if (s == 0) return out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, c * s);
  return out;
}

namespace {

void require_positive_z(const FormalSeries& f, const char* where) {
  for (const auto& [k, c] : f.terms()) {
    (void)c;
    if (k.z < 1)
      throw std::invalid_argument(std::string(where) +
                                  ": every monomial must carry z-degree >= 1");
  }
}

}  // namespace

FormalSeries series_exp(const FormalSeries& f) {
  require_positive_z(f, "series_exp");
  FormalSeries out = FormalSeries::one(f.truncation());
  FormalSeries power = FormalSeries::one(f.truncation());
  Integer kfact = 1;
  for (int k = 1; k <= f.truncation().z_max; ++k) {
    power = power * f;
    if (power.is_zero()) break;
    kfact *= k;
    out = out + power * Rational(1, kfact);
  }
  return out;
}

FormalSeries series_log(const FormalSeries& z) {
  SeriesKey unit;
  unit.marker.slots.assign(z.truncation().slots, Partition());
  if (z.coeff(unit) != 1)
    throw std::invalid_argument("series_log: constant coefficient must be 1");
  FormalSeries a = z;
  a.add(unit, Rational(-1));
  require_positive_z(a, "series_log");
  FormalSeries out(z.truncation());
  FormalSeries power = FormalSeries::one(z.truncation());
  for (int k = 1; k <= z.truncation().z_max; ++k) {
    power = power * a;
    if (power.is_zero()) break;
    Rational c(k % 2 == 1 ? 1 : -1, k);
    out = out + power * c;
  }
  return out;
}

std::map<Partition, Rational> schur_in_powersums(const Partition& lambda) {
  std::map<Partition, Rational> out;
  for (const auto& alpha : partitions_of(lambda.size())) {
    Rational c(character(lambda, alpha), z_order(alpha));
    c.canonicalize();
    if (c != 0) out.emplace(alpha, c);
  }
  return out;
}

}  // namespace hc
