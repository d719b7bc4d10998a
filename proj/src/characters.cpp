#include "hc/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace hc {

namespace {

std::mutex memo_mutex;

Integer mn_recurse(std::vector<int> lambda, std::vector<int> alpha,
                   std::map<std::pair<std::vector<int>, std::vector<int>>, Integer>& memo) {
  if (lambda.empty()) return 1;
  auto key = std::make_pair(lambda, alpha);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  int a = alpha.front();
  std::vector<int> rest(alpha.begin() + 1, alpha.end());
  const int L = static_cast<int>(lambda.size());
  std::vector<int> beta(L);
  for (int i = 0; i < L; ++i) beta[i] = lambda[i] + (L - 1 - i);  // strictly decreasing

  Integer total = 0;
  for (int i = 0; i < L; ++i) {
    int b = beta[i];
    int t = b - a;
    if (t < 0) continue;
    bool occupied = false;
    int height = 0;
    for (int j = 0; j < L; ++j) {
      if (beta[j] == t) occupied = true;
      if (beta[j] > t && beta[j] < b) ++height;
    }
    if (occupied) continue;
    std::vector<int> nb = beta;
    nb[i] = t;
    std::sort(nb.begin(), nb.end(), std::greater<int>());
    std::vector<int> nl;
    for (int j = 0; j < L; ++j) {
      int part = nb[j] - (L - 1 - j);
      if (part > 0) nl.push_back(part);
    }
    Integer sub = mn_recurse(std::move(nl), rest, memo);
    total += (height % 2 == 0) ? sub : -sub;
  }
  memo.emplace(std::move(key), total);
  return total;
}

Integer character_uncached(const Partition& lambda, const Partition& alpha) {
  static std::map<std::pair<std::vector<int>, std::vector<int>>, Integer> memo;
  std::lock_guard<std::mutex> lock(memo_mutex);
  return mn_recurse(lambda.parts(), alpha.parts(), memo);
}

}  // namespace

CharacterTable::CharacterTable(int d) : d_(d), labels_(partitions_of(d)) {
  size_t n = labels_.size();
  chi_.assign(n, std::vector<Integer>(n));
  for (size_t li = 0; li < n; ++li)
    for (size_t ai = 0; ai < n; ++ai)
      chi_[li][ai] = character_uncached(labels_[li], labels_[ai]);
}

const CharacterTable& CharacterTable::of(int d) {
  static std::map<int, CharacterTable> cache;
  static std::mutex table_mutex;
  std::lock_guard<std::mutex> lock(table_mutex);
  auto it = cache.find(d);
  if (it == cache.end()) it = cache.emplace(d, CharacterTable(d)).first;
  return it->second;
}

Integer CharacterTable::value(const Partition& lambda, const Partition& alpha) const {
  return chi_[partition_index(lambda)][partition_index(alpha)];
}

Integer character(const Partition& lambda, const Partition& alpha) {
  if (lambda.size() != alpha.size())
    throw std::invalid_argument("character: lambda and alpha must partition the same d");
  if (lambda.size() <= kEagerTableLimit)
    return CharacterTable::of(lambda.size()).value(lambda, alpha);
  return character_uncached(lambda, alpha);
}

Rational central_character(const Partition& alpha, const Partition& lambda) {
  Rational v(class_size(alpha) * character(lambda, alpha), dimension(lambda));
  v.canonicalize();
  return v;
}

Integer level_eigenvalue(const Partition& lambda, int r) {
  if (r < 0) throw std::invalid_argument("level_eigenvalue: negative r");
  std::vector<Integer> e(r + 1, 0);
  e[0] = 1;
  for (int c : contents(lambda))
    for (int k = r; k >= 1; --k) e[k] += Integer(c) * e[k - 1];
  return e[r];
}

Integer monotone_eigenvalue(const Partition& lambda, int r) {
  if (r < 0) throw std::invalid_argument("monotone_eigenvalue: negative r");
  std::vector<Integer> h(r + 1, 0);
  h[0] = 1;
  for (int c : contents(lambda))
    for (int k = 1; k <= r; ++k) h[k] += Integer(c) * h[k - 1];
  return h[r];
}

Rational omega_hat(const Partition& lambda, const Rational& q) {
  Rational prod = 1;
  for (int c : contents(lambda)) prod *= Rational(1) + q * c;
  return prod;
}

Rational omega_hat_inverse(const Partition& lambda, const Rational& q) {
  Rational v = omega_hat(lambda, q);
  if (v == 0)
    throw SingularMatrixError("omega_hat_inverse: 1 + q c vanishes on a cell of lambda");
  return Rational(1) / v;
}

Rational omega_inverse_tail(const Partition& lambda, const Rational& q, int S) {
  if (S < 0) throw std::invalid_argument("omega_inverse_tail: negative order");
  const int d = lambda.size();
  // Multiplying the partial sum P_S by omega_hat leaves 1 minus a window of
  // e-h convolutions: omega_hat * P_S = 1 - sum_{k=S+1}^{S+d} q^k R_k with
  // R_k = sum_a (-1)^{k-a} e_a h_{k-a} over S+1 <= k-a, a <= d. Hence the
  // remainder equals omega_hat_inverse times that window.
  Rational window = 0;
  for (int k = S + 1; k <= S + d; ++k) {
    Rational r_k = 0;
    for (int a = 0; a <= std::min(d, k - S - 1); ++a) {
      Rational term = Rational(level_eigenvalue(lambda, a)) *
                      Rational(monotone_eigenvalue(lambda, k - a));
      if ((k - a) % 2 == 1) term = -term;
      r_k += term;
    }
    window += r_k * rat_pow(q, k);
  }
  Rational tail = omega_hat_inverse(lambda, q) * window;
  tail.canonicalize();
  return tail;
}

Rational h_hat(const Partition& lambda) {
  Rational r(factorial(lambda.size()), dimension(lambda));
  r.canonicalize();
  return r * r;
}

Integer casimir(const Partition& lambda, int N) {
  return Integer(lambda.size()) * N + 2 * content_sum(lambda);
}

Integer casimir_row_form(const Partition& lambda, int N) {
  Integer s = 0;
  for (int i = 1; i <= lambda.length(); ++i) {
    Integer li = lambda.parts()[i - 1];
    s += li * (li + N + 1 - 2 * i);
  }
  return s;
}

Integer Eigenpacket::level(int r) const { return level_eigenvalue(lambda, r); }
Integer Eigenpacket::monotone(int r) const { return monotone_eigenvalue(lambda, r); }
Rational Eigenpacket::omega(const Rational& q) const { return omega_hat(lambda, q); }
Integer Eigenpacket::casimir(int N) const { return hc::casimir(lambda, N); }

Eigenpacket eigenpacket(const Partition& lambda) {
  Eigenpacket e;
  e.lambda = lambda;
  e.dim = dimension(lambda);
  e.contents = contents(lambda);
  e.k_hat = content_sum(lambda);
  e.h_hat = hc::h_hat(lambda);
  return e;
}

Rational det_omega(int d, const Rational& q) {
  Rational det = 1;
  for (const Partition& lambda : partitions_of(d)) {
    Integer dim = dimension(lambda);
    det *= rat_pow(omega_hat(lambda, q), static_cast<int>(dim.get_si()));
  }
  return det;
}

bool omega_invertible(int d, const Rational& q) {
  if (d <= 1 || q == 0) return true;
  Rational aq = abs(q);
  // Singular exactly when |q| is a unit fraction 1/k with k <= d-1.
  return !(aq.get_num() == 1 && aq.get_den() <= d - 1);
}

}  // namespace hc
