#pragma once

#include <cstdint>
#include <vector>

#include "hc/numbers.hpp"
#include "hc/permutation.hpp"

namespace hc {

// Per-degree lookup tables for dense group-algebra work (rank-indexed).
// Guarded at d <= 8 by default (HC_MAX_DEGREE raises it).
struct DegreeTables {
  int d = 0;
  std::uint64_t order = 1;
  std::vector<int> class_index;                         // rank -> partition index of cycle type
  std::vector<std::uint8_t> norm;                       // rank -> word norm
  std::vector<std::uint64_t> inverse_rank;              // rank -> rank of inverse
  std::vector<std::vector<std::uint64_t>> right_action; // [transposition][rank] -> rank of p*(i j)
};
const DegreeTables& degree_tables(int d);

// Dense element of Q[S_d], coefficients indexed by Lehmer rank.
class AlgebraElement {
 public:
  explicit AlgebraElement(int d);
  static AlgebraElement delta(int d, const Permutation& p);
  static AlgebraElement unit(int d);  // delta at the identity

  int degree() const { return d_; }
  std::uint64_t order() const { return static_cast<std::uint64_t>(c_.size()); }
  Rational& operator[](std::uint64_t rank) { return c_[rank]; }
  const Rational& operator[](std::uint64_t rank) const { return c_[rank]; }
  Rational coeff(const Permutation& p) const { return c_[lehmer_rank(p)]; }

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const Rational& s);
  bool operator==(const AlgebraElement& o) const { return d_ == o.d_ && c_ == o.c_; }

  // Right-multiply by the transposition with the given index in all_transpositions(d).
  AlgebraElement right_mul_transposition(int t_index) const;

 private:
  int d_;
  std::vector<Rational> c_;
};

// Convolution product (group multiplication extended linearly); O((d!)^2).
AlgebraElement convolve(const AlgebraElement& a, const AlgebraElement& b);

// Coefficient of the identity = normalized trace <A> = (1/d!) Tr A.
Rational identity_coefficient(const AlgebraElement& a);
// <AB> computed without forming the product: sum_pi a(pi) b(pi^{-1}).
Rational pair_expectation(const AlgebraElement& a, const AlgebraElement& b);

// Builders. All counts are exact; coefficients are rational.
AlgebraElement class_sum_element(int d, const Partition& alpha);
AlgebraElement adjacency_element(int d);                    // K: all transpositions
AlgebraElement level_element(int d, int r);                 // indicator of word norm r
AlgebraElement monotone_element(int d, int s);              // weakly monotone s-step walk counts
AlgebraElement commutator_element(int d);                   // H = sum rho^-1 sigma^-1 rho sigma
AlgebraElement omega_element(int d, const Rational& q);     // sum q^{|pi|} pi
AlgebraElement jm_element(int d, int k);                    // J_k = sum_{i<k} (i k)
AlgebraElement elementary_jm_element(int d, int r);         // e_r(J_1..J_d)
AlgebraElement complete_jm_element(int d, int r);           // h_r(J_1..J_d)

}  // namespace hc
