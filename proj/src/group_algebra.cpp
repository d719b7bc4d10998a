#include "hc/group_algebra.hpp"

#include <map>
#include <mutex>

namespace hc {

const DegreeTables& degree_tables(int d) {
  check_degree_guard(d, 8, "degree_tables");
  static std::map<int, DegreeTables> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;

  DegreeTables t;
  t.d = d;
  t.order = factorial(d).get_ui();
  t.class_index.resize(t.order);
  t.norm.resize(t.order);
  t.inverse_rank.resize(t.order);
  auto ts = all_transpositions(d);
  t.right_action.assign(ts.size(), std::vector<std::uint64_t>(t.order));
  std::uint64_t rank = 0;
  for_each_permutation(d, [&](const Permutation& p) {
    t.class_index[rank] = partition_index(cycle_type(p));
    t.norm[rank] = static_cast<std::uint8_t>(word_norm(p));
    t.inverse_rank[rank] = lehmer_rank(inverse(p));
    for (size_t k = 0; k < ts.size(); ++k)
      t.right_action[k][rank] = lehmer_rank(compose(p, transposition_perm(d, ts[k].i, ts[k].j)));
    ++rank;
  });
  return cache.emplace(d, std::move(t)).first->second;
}

AlgebraElement::AlgebraElement(int d) : d_(d) {
  check_degree_guard(d, 8, "AlgebraElement");
  c_.assign(factorial(d).get_ui(), Rational(0));
}

AlgebraElement AlgebraElement::delta(int d, const Permutation& p) {
  AlgebraElement e(d);
  e.c_[lehmer_rank(p)] = 1;
  return e;
}

AlgebraElement AlgebraElement::unit(int d) { return delta(d, identity(d)); }

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  if (d_ != o.d_) throw std::invalid_argument("AlgebraElement: degree mismatch");
  for (std::uint64_t i = 0; i < order(); ++i) c_[i] += o.c_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  if (d_ != o.d_) throw std::invalid_argument("AlgebraElement: degree mismatch");
  for (std::uint64_t i = 0; i < order(); ++i) c_[i] -= o.c_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& s) {
  for (auto& v : c_) v *= s;
  return *this;
}

AlgebraElement AlgebraElement::right_mul_transposition(int t_index) const {
  const auto& tables = degree_tables(d_);
  AlgebraElement out(d_);
  const auto& act = tables.right_action[t_index];
  for (std::uint64_t r = 0; r < order(); ++r)
    if (c_[r] != 0) out.c_[act[r]] += c_[r];
  return out;
}

AlgebraElement convolve(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("convolve: degree mismatch");
  int d = a.degree();
  check_degree_guard(d, 6, "convolve");
  AlgebraElement out(d);
  std::uint64_t ra = 0;
  for_each_permutation(d, [&](const Permutation& pa) {
    if (a[ra] != 0) {
      std::uint64_t rb = 0;
      for_each_permutation(d, [&](const Permutation& pb) {
        if (b[rb] != 0) out[lehmer_rank(compose(pa, pb))] += a[ra] * b[rb];
        ++rb;
      });
    }
    ++ra;
  });
  return out;
}

Rational identity_coefficient(const AlgebraElement& a) {
  return a[lehmer_rank(identity(a.degree()))];
}

Rational pair_expectation(const AlgebraElement& a, const AlgebraElement& b) {
  const auto& tables = degree_tables(a.degree());
  if (a.degree() != b.degree()) throw std::invalid_argument("pair_expectation: degree mismatch");
  Rational s = 0;
  for (std::uint64_t r = 0; r < a.order(); ++r)
    if (a[r] != 0) s += a[r] * b[tables.inverse_rank[r]];
  return s;
}

AlgebraElement class_sum_element(int d, const Partition& alpha) {
  if (alpha.size() != d) throw std::invalid_argument("class_sum_element: alpha must partition d");
  const auto& tables = degree_tables(d);
  int target = partition_index(alpha);
  AlgebraElement e(d);
  for (std::uint64_t r = 0; r < tables.order; ++r)
    if (tables.class_index[r] == target) e[r] = 1;
  return e;
}

AlgebraElement adjacency_element(int d) {
  AlgebraElement e(d);
  for (const auto& t : all_transpositions(d))
    e[lehmer_rank(transposition_perm(d, t.i, t.j))] = 1;
  return e;
}

AlgebraElement level_element(int d, int r) {
  const auto& tables = degree_tables(d);
  AlgebraElement e(d);
  for (std::uint64_t k = 0; k < tables.order; ++k)
    if (tables.norm[k] == r) e[k] = 1;
  return e;
}

AlgebraElement monotone_element(int d, int s) {
  if (s < 0) throw std::invalid_argument("monotone_element: negative length");
  const auto& tables = degree_tables(d);
  auto ts = all_transpositions(d);
  // layer[j] = walks whose last label is exactly j (labels 2..d); prefix sums
  // give "last label <= j", and appending any (i, j') with j' >= j keeps the
  // sequence weakly monotone.
  std::vector<AlgebraElement> layer(static_cast<size_t>(d) + 1, AlgebraElement(d));
  AlgebraElement result = AlgebraElement::unit(d);
  if (s == 0) return result;
  if (d < 2) {
    result *= Rational(0);
    return result;
  }
  layer[0] = AlgebraElement::unit(d);  // empty walk, "last label" below every j
  for (int step = 1; step <= s; ++step) {
    std::vector<AlgebraElement> next(static_cast<size_t>(d) + 1, AlgebraElement(d));
    AlgebraElement prefix(d);
    for (int j = 0; j <= d; ++j) {
      prefix += layer[j];
      if (j < 2) continue;
      // append any transposition with label j to every walk with last label <= j
      for (size_t k = 0; k < ts.size(); ++k) {
        if (ts[k].label() != j) continue;
        const auto& act = tables.right_action[k];
        for (std::uint64_t r = 0; r < tables.order; ++r)
          if (prefix[r] != 0) next[j][act[r]] += prefix[r];
      }
    }
    layer = std::move(next);
  }
  AlgebraElement total(d);
  for (int j = 2; j <= d; ++j) total += layer[j];
  return total;
}

AlgebraElement commutator_element(int d) {
  check_degree_guard(d, 6, "commutator_element");
  AlgebraElement e(d);
  std::vector<Permutation> all;
  for_each_permutation(d, [&](const Permutation& p) { all.push_back(p); });
  for (const auto& rho : all) {
    Permutation rho_inv = inverse(rho);
    for (const auto& sigma : all) {
      Permutation c = compose(compose(rho_inv, inverse(sigma)), compose(rho, sigma));
      e[lehmer_rank(c)] += 1;
    }
  }
  return e;
}

AlgebraElement omega_element(int d, const Rational& q) {
  const auto& tables = degree_tables(d);
  AlgebraElement e(d);
  for (std::uint64_t r = 0; r < tables.order; ++r) e[r] = rat_pow(q, tables.norm[r]);
  return e;
}

AlgebraElement jm_element(int d, int k) {
  if (k < 1 || k > d) throw std::invalid_argument("jm_element: k out of range 1..d");
  AlgebraElement e(d);
  for (int i = 1; i < k; ++i) e[lehmer_rank(transposition_perm(d, i, k))] = 1;
  return e;
}

namespace {

// Indices into all_transpositions(d) of the transpositions (i, j), i < j.
std::vector<int> label_indices(int j) {
  std::vector<int> out;
  int base = (j - 1) * (j - 2) / 2;
  for (int i = 1; i < j; ++i) out.push_back(base + i - 1);
  return out;
}

AlgebraElement apply_jm(const AlgebraElement& a, int d, int j) {
  const auto& tables = degree_tables(d);
  AlgebraElement out(d);
  for (int idx : label_indices(j)) {
    const auto& act = tables.right_action[idx];
    for (std::uint64_t r = 0; r < a.order(); ++r)
      if (a[r] != 0) out[act[r]] += a[r];
  }
  return out;
}

}  // namespace

AlgebraElement elementary_jm_element(int d, int r) {
  if (r < 0) throw std::invalid_argument("elementary_jm_element: negative r");
  std::vector<AlgebraElement> grade(static_cast<size_t>(r) + 1, AlgebraElement(d));
  grade[0] = AlgebraElement::unit(d);
  for (int j = 2; j <= d; ++j)
    for (int k = r; k >= 1; --k) {
      AlgebraElement add = apply_jm(grade[k - 1], d, j);
      grade[k] += add;
    }
  return grade[r];
}

AlgebraElement complete_jm_element(int d, int r) {
  if (r < 0) throw std::invalid_argument("complete_jm_element: negative r");
  std::vector<AlgebraElement> grade(static_cast<size_t>(r) + 1, AlgebraElement(d));
  grade[0] = AlgebraElement::unit(d);
  for (int j = 2; j <= d; ++j)
    for (int k = 1; k <= r; ++k) {
      AlgebraElement add = apply_jm(grade[k - 1], d, j);
      grade[k] += add;
    }
  return grade[r];
}

}  // namespace hc
