#pragma once

#include <optional>
#include <vector>

#include "hc/group_algebra.hpp"
#include "hc/matrix.hpp"
#include "hc/permutation.hpp"

namespace hc {

enum class WalkMode {
  unrestricted,
  strict_increasing,
  weak_increasing,
  strict_decreasing,
  weak_decreasing
};

// Number of r-step transposition walks from `from` to `to` whose edge labels
// (larger moved point) obey the mode. Pure depth-first enumeration, no
// memoization; guards d <= 8 (HC_MAX_DEGREE overrides) and r <= 10.
Integer walk_count(const Permutation& from, const Permutation& to, int r, WalkMode mode);

// Bulk form: counts[rank][k] = number of k-step mode walks from `from` ending
// at the permutation with that rank, for all k <= max_r, from one traversal.
std::vector<std::vector<Integer>> walk_count_table(const Permutation& from, int max_r,
                                                   WalkMode mode);

// Minimal-length unrestricted walk count (geodesics) and its closed forms.
Integer geodesic_count(const Permutation& from, const Permutation& to);
Integer hurwitz_cayley_formula(const Partition& alpha);   // multinomial * prod cayley(a_i - 1)
Integer monotone_geodesic_count(const Permutation& from, const Permutation& to);
Integer catalan_geodesic_formula(const Partition& alpha); // prod catalan(a_i - 1)

// A product word of central elements.
struct CentralFactor {
  enum class Kind {
    class_sum,    // K_alpha
    adjacency,    // K
    level,        // L_r
    monotone,     // M_r
    commutator,   // H
    omega,        // Omega_q
    omega_inverse // Omega_q^{-1} (solved exactly; d <= 5 by default)
  };
  Kind kind;
  Partition alpha;
  int r = 0;
  Rational q;

  static CentralFactor class_sum(Partition a);
  static CentralFactor adjacency();
  static CentralFactor level(int r);
  static CentralFactor monotone(int r);
  static CentralFactor commutator();
  static CentralFactor omega(Rational q);
  static CentralFactor omega_inverse(Rational q);
};

AlgebraElement central_element(int d, const std::vector<CentralFactor>& word);

// Regular-representation matrix: entry (sigma, rho) = coefficient of rho^{-1} sigma.
// Rows/columns indexed by Lehmer rank; guard d <= 6.
ExactMatrix operator_matrix(const AlgebraElement& a);
ExactMatrix operator_matrix(int d, const std::vector<CentralFactor>& word);

// Checks e_r(J) == L_r and h_r(J) == M_r at degree d as algebra elements.
bool jm_identity_check(int d, int r);

// One factor slot of a monodromy tuple.
struct TupleFactor {
  enum class Kind {
    class_member,    // one permutation ranging over K_alpha
    level_member,    // one permutation with word norm equal to `level`
    adjacency_step,  // one transposition
    monotone_block,  // block_len transpositions with weakly increasing labels
    commutator_pair  // a pair (rho, sigma) contributing rho^-1 sigma^-1 rho sigma
  };
  Kind kind;
  Partition alpha;
  int level = 0;
  int block_len = 0;

  static TupleFactor class_member(Partition a);
  static TupleFactor level_member(int level);
  static TupleFactor adjacency_step();
  static TupleFactor monotone_block(int len);
  static TupleFactor commutator_pair();
};

// Counts tuples whose left-to-right product is the identity (or lies in
// target_class), and - when require_transitive - whose entries generate a
// transitive subgroup of S_d. Union-find with rollback along the DFS. d <= 6.
Integer transitive_tuple_count(int d, const std::vector<TupleFactor>& factors,
                               const std::optional<Partition>& target_class = std::nullopt,
                               bool require_transitive = true);

}  // namespace hc
