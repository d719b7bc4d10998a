#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace hc {

using Integer = mpz_class;
using Rational = mpq_class;

// Thrown when a computation exceeds a documented size guard.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

class SingularMatrixError : public std::runtime_error {
 public:
  explicit SingularMatrixError(const std::string& what) : std::runtime_error(what) {}
};

inline Integer factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

inline Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// (n; k_1, ..., k_m) with sum k_i == n.
inline Integer multinomial(int n, const std::vector<int>& ks) {
  int total = 0;
  Integer r = 1;
  for (int k : ks) {
    if (k < 0) throw std::invalid_argument("multinomial: negative part");
    total += k;
    r *= binomial(total, k);
  }
  if (total != n) throw std::invalid_argument("multinomial: parts do not sum to n");
  return r;
}

// Catalan number C(2n, n) / (n + 1).
inline Integer catalan(int n) {
  if (n < 0) throw std::invalid_argument("catalan: negative argument");
  return binomial(2 * n, n) / (n + 1);
}

// Cayley count (n+1)^(n-1): trees on n+1 labeled vertices; cayley(0) == 1.
inline Integer cayley(int n) {
  if (n < 0) throw std::invalid_argument("cayley: negative argument");
  if (n == 0) return 1;
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(n + 1),
                static_cast<unsigned long>(n - 1));
  return r;
}

inline Integer int_pow(const Integer& base, int e) {
  if (e < 0) throw std::invalid_argument("int_pow: negative exponent");
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

inline Rational rat_pow(const Rational& base, int e) {
  if (e >= 0) {
    Rational r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()),
               static_cast<unsigned long>(e));
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()),
               static_cast<unsigned long>(e));
    r.canonicalize();
    return r;
  }
  if (base == 0) throw std::invalid_argument("rat_pow: zero to negative power");
  return rat_pow(Rational(1) / base, -e);
}

// Canonical "num/den" (or plain integer) text form.
inline std::string rational_to_string(const Rational& q) { return q.get_str(); }

// Parses "a", "-a", "a/b"; validates canonical input.
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
  for (char c : s)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/'))
      throw std::invalid_argument("parse_rational: bad character in '" + s + "'");
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("parse_rational: cannot parse '" + s + "'");
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
    throw std::invalid_argument("parse_rational: zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

// Degree guards honor the HC_MAX_DEGREE environment override.
inline int max_degree_guard(int default_limit) {
  if (const char* env = std::getenv("HC_MAX_DEGREE")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return default_limit;
}

inline void check_degree_guard(int d, int default_limit, const char* where) {
  int lim = max_degree_guard(default_limit);
  if (d > lim)
    throw ResourceLimitError(std::string(where) + ": degree " + std::to_string(d) +
                             " exceeds guard " + std::to_string(lim) +
                             " (set HC_MAX_DEGREE to raise)");
}

}  // namespace hc
