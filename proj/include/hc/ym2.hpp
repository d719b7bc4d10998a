#pragma once

#include <map>
#include <vector>

#include "hc/hurwitz.hpp"
#include "hc/series.hpp"

namespace hc {

// Degree-d stratum of a geometry's partition function, evaluated exactly at
// numeric N: for each boundary-marker tuple, the coefficients of t^0..t_order
// with the N-power prefactor and 1/d! folded in (the overall z^d is implicit).
struct MicroResult {
  int d = 0;
  int N = 0;
  std::map<Marker, std::vector<Rational>> coefficients;
};

// Spectral sum over diagrams with at most N rows; valid for every d >= 0.
MicroResult microchiral_direct(const GeometryTemplate& geom, int d, int N, int t_order);

// The expectation <H^n K_markers Psi_{t/N} Omega_{1/N}^{2-2n-m}> as exact
// t-coefficients of orders 0..t_order, summed over all diagrams of size d.
// Agrees with the internal sum of microchiral_direct when d <= N.
std::vector<Rational> gross_taylor_expectation(const GeometryTemplate& geom,
                                               const std::vector<Partition>& markers,
                                               int d, int N, int t_order);

// One term of the 1/N expansion of a degree-d stratum: the integer expectation
// of an operator word together with the net N-power it carries.
struct ExpansionRow {
  std::vector<Partition> classes;  // boundary class markers, slot order
  std::vector<int> levels;         // level gradings (sphere: a, b; disc: b)
  int r = 0;                       // adjacency steps
  int s = 0;                       // weakly monotone steps
  int n_power = 0;                 // net power of N in the z^d stratum
  Integer value;                   // expectation of the word
};

// Expansion rows with r <= t_order and s <= s_order, in deterministic order;
// zero expectations are omitted. Requires the stable range 1 <= d <= N.
std::vector<ExpansionRow> microchiral_expansion(const GeometryTemplate& geom, int d,
                                                int N, int t_order, int s_order);

// Partial sums of the expansion at numeric N in the same shape as
// microchiral_direct. Exact for templates without a monotone tail; otherwise
// truncated at s_order.
std::map<Marker, std::vector<Rational>> assemble_expansion(const GeometryTemplate& geom,
                                                           int d, int N, int t_order,
                                                           int s_order);

// The expectation word and series key of one geometry term. The key's hbar
// power is (m + 2n - 2) d + sum(levels) + r + s; class markers occupy the
// marker slots, levels map to u (first) and v (second), monotone steps to u.
ExpectationWord geometry_word(const GeometryTemplate& geom, int d,
                              const std::vector<Partition>& classes,
                              const std::vector<int>& levels, int r, int s);
SeriesKey geometry_key(const GeometryTemplate& geom, int d,
                       const std::vector<Partition>& classes,
                       const std::vector<int>& levels, int r, int s);

struct ChiralOrders {
  int max_d = 0;
  int t_order = 0;
  int s_order = 0;
};

// The chiral series Z (constant term 1) and its formal logarithm F.
struct ChiralPair {
  FormalSeries partition_function;
  FormalSeries free_energy;
};

ChiralPair chiral_series(const GeometryTemplate& geom, const ChiralOrders& orders);

// Genus-g part of the connected series, with the overall hbar^{2g-2} factored
// out; for the sphere the level markers u, v are specialized to 1. Steps are
// fixed by the defect relation, so no t truncation is needed. Uses the
// transitive tuple oracle: max_d <= 6. Labelled templates only; g >= handles.
FormalSeries genus_free_energy(const GeometryTemplate& geom, int g, int max_d);

// t = 0 specialization of the chiral series (monotone tails kept to s_order).
FormalSeries area_zero(const GeometryTemplate& geom, int max_d, int s_order = 4);

}  // namespace hc
