#include "hc/hurwitz.hpp"

#include <algorithm>
#include <stdexcept>

#include "hc/group_algebra.hpp"

namespace hc {

ExpectationWord ExpectationWord::in_degree(int d) {
  if (d < 0) throw std::invalid_argument("expectation word: degree must be >= 0");
  ExpectationWord w;
  w.d = d;
  return w;
}

ExpectationWord& ExpectationWord::with_handles(int n) {
  if (n < 0) throw std::invalid_argument("expectation word: handles must be >= 0");
  handles = n;
  return *this;
}

ExpectationWord& ExpectationWord::with_class(Partition alpha) {
  if (alpha.size() != d)
    throw std::invalid_argument("expectation word: class partition must have size d");
  classes.push_back(std::move(alpha));
  return *this;
}

ExpectationWord& ExpectationWord::with_steps(int r) {
  if (r < 0) throw std::invalid_argument("expectation word: steps must be >= 0");
  steps = r;
  return *this;
}

ExpectationWord& ExpectationWord::with_monotone(int s) {
  if (s < 0) throw std::invalid_argument("expectation word: monotone steps must be >= 0");
  monotone = s;
  return *this;
}

ExpectationWord& ExpectationWord::with_level(int a) {
  if (a < 0 || a > d)
    throw std::invalid_argument("expectation word: level must be in [0, d]");
  levels.push_back(a);
  return *this;
}

Rational plancherel(const ExpectationWord& w, int rows) {
  const Integer order = factorial(w.d);
  Rational total = 0;
  for (const Partition& lambda : partitions_of(w.d)) {
    if (rows >= 0 && lambda.length() > rows) continue;
    const Integer dim = dimension(lambda);
    Rational weight(dim * dim, order);
    weight.canonicalize();
    if (w.handles > 0) weight *= rat_pow(h_hat(lambda), w.handles);
    for (const Partition& alpha : w.classes)
      weight *= central_character(alpha, lambda);
    if (w.steps > 0) weight *= rat_pow(Rational(content_sum(lambda)), w.steps);
    if (w.monotone > 0) weight *= monotone_eigenvalue(lambda, w.monotone);
    for (int a : w.levels) weight *= level_eigenvalue(lambda, a);
    total += weight;
  }
  total.canonicalize();
  return total;
}

Rational expectation_by_convolution(const ExpectationWord& w) {
  std::vector<CentralFactor> factors;
  for (int i = 0; i < w.handles; ++i) factors.push_back(CentralFactor::commutator());
  for (const Partition& alpha : w.classes)
    factors.push_back(CentralFactor::class_sum(alpha));
  for (int i = 0; i < w.steps; ++i) factors.push_back(CentralFactor::adjacency());
  if (w.monotone > 0) factors.push_back(CentralFactor::monotone(w.monotone));
  for (int a : w.levels) factors.push_back(CentralFactor::level(a));
  return identity_coefficient(central_element(w.d, factors));
}

namespace {

Integer require_integer(const Rational& value, const char* what) {
  Rational v = value;
  v.canonicalize();
  if (v.get_den() != 1)
    throw std::logic_error(std::string(what) + ": expected an integer value");
  return v.get_num();
}

}  // namespace

Integer double_hurwitz(const Partition& alpha, const Partition& beta, int r) {
  if (alpha.size() != beta.size())
    throw std::invalid_argument("double Hurwitz: partitions must share a size");
  auto w = ExpectationWord::in_degree(static_cast<int>(alpha.size()));
  w.with_class(alpha).with_class(beta).with_steps(r);
  return require_integer(plancherel(w), "double Hurwitz");
}

Integer coarse_double_hurwitz(int d, int a, int b, int r) {
  auto w = ExpectationWord::in_degree(d);
  w.with_level(a).with_level(b).with_steps(r);
  return require_integer(plancherel(w), "coarse double Hurwitz");
}

Integer mixed_expectation(const ExpectationWord& w) {
  return require_integer(plancherel(w), "mixed expectation");
}

Integer connected_count(const ExpectationWord& w) {
  std::vector<TupleFactor> factors;
  for (int i = 0; i < w.handles; ++i) factors.push_back(TupleFactor::commutator_pair());
  for (const Partition& alpha : w.classes)
    factors.push_back(TupleFactor::class_member(alpha));
  for (int i = 0; i < w.steps; ++i) factors.push_back(TupleFactor::adjacency_step());
  if (w.monotone > 0) factors.push_back(TupleFactor::monotone_block(w.monotone));
  for (int a : w.levels) factors.push_back(TupleFactor::level_member(a));
  return transitive_tuple_count(w.d, factors, std::nullopt, true);
}

std::map<Partition, Integer> connection_coefficients(const Partition& beta,
                                                     const Partition& gamma) {
  if (beta.size() != gamma.size())
    throw std::invalid_argument("connection coefficients: partitions must share a size");
  const int d = static_cast<int>(beta.size());
  check_degree_guard(d, 8, "connection coefficients");
  std::map<Partition, Integer> out;
  // c^eta is the number of ways a fixed representative of K_eta factors as
  // b * c with b in K_beta, c in K_gamma; c is determined as b^{-1} * rep.
  for (const Partition& eta : partitions_of(d)) {
    const Permutation rep = class_representative(d, eta);
    Integer count = 0;
    for_each_in_class(d, beta, [&](const Permutation& b) {
      if (cycle_type(compose(inverse(b), rep)) == gamma) ++count;
    });
    if (count != 0) out.emplace(eta, count);
  }
  return out;
}

Rational weingarten(const Partition& alpha, int d, int N) {
  if (static_cast<int>(alpha.size()) != d)
    throw std::invalid_argument("weingarten: partition size must equal d");
  if (N < 1) throw std::invalid_argument("weingarten: N must be >= 1");
  const Rational q(1, N);
  if (!omega_invertible(d, q))
    throw SingularMatrixError("weingarten: omega(1/N) is singular for this degree");
  const Integer order = factorial(d);
  Rational total = 0;
  for (const Partition& lambda : partitions_of(d)) {
    if (lambda.length() > N) continue;
    const Integer dim = dimension(lambda);
    Rational weight(dim * dim, order);
    weight.canonicalize();
    weight *= central_character(alpha, lambda);
    weight *= omega_hat_inverse(lambda, q);
    total += weight;
  }
  total.canonicalize();
  return total;
}

const std::vector<GeometryTemplate>& geometry_templates() {
  static const std::vector<GeometryTemplate> kTemplates = {
      // name, holes, handles, class bnd, level bnd, monotone, labelled, z_hbar
      {"cylinder", 2, 0, 2, 0, false, true, 0},
      {"torus", 0, 1, 0, 0, false, true, 0},
      {"sphere", 0, 0, 0, 2, false, true, -2},
      {"disc", 1, 0, 1, 1, false, false, -1},
      {"pair-of-pants", 3, 0, 3, 0, true, true, 1},
      {"one-holed-torus", 1, 1, 1, 0, true, true, 1},
  };
  return kTemplates;
}

const GeometryTemplate& geometry_by_name(const std::string& name) {
  for (const GeometryTemplate& g : geometry_templates())
    if (g.name == name) return g;
  throw std::invalid_argument("unknown geometry: " + name);
}

std::optional<int> genus_label(const ExpectationWord& w) {
  const GeometryTemplate* match = nullptr;
  for (const GeometryTemplate& g : geometry_templates()) {
    if (!g.genus_labelled) continue;
    if (g.handles != w.handles) continue;
    if (g.class_boundaries != static_cast<int>(w.classes.size())) continue;
    if (g.level_boundaries != static_cast<int>(w.levels.size())) continue;
    if (!g.monotone_tail && w.monotone > 0) continue;
    match = &g;
    break;
  }
  if (match == nullptr)
    throw std::invalid_argument("genus label: word matches no labelled geometry");
  long defect = 0;
  for (const Partition& alpha : w.classes)
    defect += static_cast<long>(w.d) - static_cast<long>(alpha.length());
  for (int a : w.levels) defect += a;
  const long twice_g_minus_2 =
      static_cast<long>(w.d) * (2L * w.handles - 2) + defect + w.steps + w.monotone;
  if ((twice_g_minus_2 + 2) % 2 != 0) return std::nullopt;
  const long g = (twice_g_minus_2 + 2) / 2;
  if (g < w.handles) return std::nullopt;
  return static_cast<int>(g);
}

}  // namespace hc
