#pragma once

#include <vector>

#include "hc/partition.hpp"

namespace hc {

// chi^lambda(alpha): Murnaghan-Nakayama border-strip recursion over beta
// numbers (first-column hooks), sign (-1)^{rows spanned - 1}, memoized.
Integer character(const Partition& lambda, const Partition& alpha);

// Full table for S_d, rows and columns in canonical partition order.
class CharacterTable {
 public:
  explicit CharacterTable(int d);
  static const CharacterTable& of(int d);  // process-wide cache

  int d() const { return d_; }
  const std::vector<Partition>& labels() const { return labels_; }
  const Integer& value(int lambda_idx, int alpha_idx) const {
    return chi_[lambda_idx][alpha_idx];
  }
  Integer value(const Partition& lambda, const Partition& alpha) const;

 private:
  int d_;
  std::vector<Partition> labels_;
  std::vector<std::vector<Integer>> chi_;
};

// Degrees up to this bound get an eagerly built table behind character().
inline constexpr int kEagerTableLimit = 9;

// |K_alpha| chi^lambda(alpha) / dim(lambda); an integer for every input.
Rational central_character(const Partition& alpha, const Partition& lambda);

// e_r and h_r evaluated on the content multiset of lambda.
Integer level_eigenvalue(const Partition& lambda, int r);
Integer monotone_eigenvalue(const Partition& lambda, int r);

// prod over cells (1 + q c); the inverse form throws SingularMatrixError when
// some cell gives 1 + q c == 0 (q an inverse integer of magnitude <= d-1).
Rational omega_hat(const Partition& lambda, const Rational& q);
Rational omega_hat_inverse(const Partition& lambda, const Rational& q);

// Remainder of the inverse factor past the order-S alternating partial sum:
// omega_hat_inverse(lambda, q) - sum_{s<=S} (-q)^s monotone_eigenvalue(lambda, s),
// computed through the e-h convolution identity instead of by subtraction.
Rational omega_inverse_tail(const Partition& lambda, const Rational& q, int S);

// (d!/dim)^2: heat-kernel handle weight.
Rational h_hat(const Partition& lambda);

// d N + 2 (content sum); equals the row form sum_i lambda_i (lambda_i + N + 1 - 2i).
Integer casimir(const Partition& lambda, int N);
Integer casimir_row_form(const Partition& lambda, int N);

// Everything the spectral side needs about one irreducible, gathered once.
struct Eigenpacket {
  Partition lambda;
  Integer dim;
  std::vector<int> contents;
  Integer k_hat;    // content sum
  Rational h_hat;   // (d!/dim)^2

  Integer level(int r) const;
  Integer monotone(int r) const;
  Rational omega(const Rational& q) const;
  Integer casimir(int N) const;
};
Eigenpacket eigenpacket(const Partition& lambda);

// det of Omega_q on a multiplicity-free sum of the irreducibles:
// prod_lambda omega_hat^{dim}. (On the full d! x d! regular representation
// each eigenvalue instead enters with multiplicity dim^2.)
Rational det_omega(int d, const Rational& q);
// Invertibility test: fails exactly at q = +-1/k, 1 <= k <= d-1 (d >= 2).
bool omega_invertible(int d, const Rational& q);

}  // namespace hc
