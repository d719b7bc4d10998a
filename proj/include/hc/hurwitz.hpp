#pragma once

#include <map>
#include <optional>
#include <string>

#include "hc/characters.hpp"
#include "hc/oracle.hpp"

namespace hc {

// An expectation word <H^n  prod_i K_{alpha_i}  K^r  M_s  prod_j L_{a_j}>
// in the center of Q[S_d]. All factors commute, so only multiplicities matter.
struct ExpectationWord {
  int d = 0;
  int handles = 0;                 // commutator-sum factors H
  std::vector<Partition> classes;  // class sums K_alpha
  int steps = 0;                   // adjacency factors K
  int monotone = 0;                // one weakly-monotone factor M_s
  std::vector<int> levels;         // level projections L_a

  static ExpectationWord in_degree(int d);
  ExpectationWord& with_handles(int n);
  ExpectationWord& with_class(Partition alpha);
  ExpectationWord& with_steps(int r);
  ExpectationWord& with_monotone(int s);
  ExpectationWord& with_level(int a);
};

// Spectral evaluation: sum over lambda (at most `rows` rows when rows >= 0)
// of (dim^2/d!) times the product of the word's eigenvalues at lambda.
Rational plancherel(const ExpectationWord& w, int rows = -1);

// Same expectation evaluated by convolution in the group algebra; character-free.
Rational expectation_by_convolution(const ExpectationWord& w);

// Named families; every value is an integer count.
Integer double_hurwitz(const Partition& alpha, const Partition& beta, int r);
Integer coarse_double_hurwitz(int d, int a, int b, int r);
Integer mixed_expectation(const ExpectationWord& w);

// Transitive (connected) count of the same monodromy data via the tuple oracle.
Integer connected_count(const ExpectationWord& w);

// Class-algebra structure constants K_beta K_gamma = sum_eta c^eta K_eta.
std::map<Partition, Integer> connection_coefficients(const Partition& beta,
                                                     const Partition& gamma);

// Unitary Weingarten function: sum over lambda with at most N rows of
// (dim^2/d!) central-character(alpha) / omega_hat(1/N).
Rational weingarten(const Partition& alpha, int d, int N);

// Surface-geometry templates assembling expectation words into partition
// functions. `z_hbar` is the hbar power carried by each z; class and level
// boundaries carry one hbar each; every step carries (-t hbar).
struct GeometryTemplate {
  std::string name;
  int holes = 0;              // m
  int handles = 0;            // n
  int class_boundaries = 0;   // boundaries with partition markers
  int level_boundaries = 0;   // boundaries graded by level
  bool monotone_tail = false; // carries an M_s sum (negative omega power)
  bool genus_labelled = true; // participates in genus_label
  int z_hbar = 0;
};

const std::vector<GeometryTemplate>& geometry_templates();
const GeometryTemplate& geometry_by_name(const std::string& name);

// Riemann-Hurwitz genus of a word matching one of the five labelled
// templates: 2g - 2 = d(2n - 2) + sum(defects) + r + s, defect d - l(alpha)
// per class boundary and a per level boundary. nullopt when g is not an
// integer >= n; throws when the word shape matches no labelled template.
std::optional<int> genus_label(const ExpectationWord& w);

}  // namespace hc
