#pragma once

#include <string>
#include <vector>

#include "hc/numbers.hpp"

namespace hc {

// Integer partition with weakly decreasing positive parts; the empty partition has size 0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  static Partition from_unsorted(std::vector<int> parts);

  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  // Canonical order: by size, then descending lexicographic on parts, so that
  // for fixed d the order is (d), (d-1,1), ..., (1^d).
  bool operator<(const Partition& o) const {
    if (size_ != o.size_) return size_ < o.size_;
    return parts_ > o.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// All partitions of d in canonical order; max_rows limits the number of parts.
const std::vector<Partition>& partitions_of(int d);
std::vector<Partition> partitions_of(int d, int max_rows);

// Index of alpha within partitions_of(alpha.size()).
int partition_index(const Partition& alpha);

Partition conjugate(const Partition& p);

// Cell contents j - i in row-major reading order.
std::vector<int> contents(const Partition& p);
Integer content_sum(const Partition& p);

Integer hook_product(const Partition& p);
// Irreducible S_d dimension, d!/hook_product.
Integer dimension(const Partition& p);

// Centralizer order z_alpha = prod k^{m_k} m_k!.
Integer z_order(const Partition& p);
// Conjugacy class size d!/z_alpha.
Integer class_size(const Partition& p);

// prod over cells (x + content).
Rational pochhammer(const Partition& p, const Rational& x);

// U(N) Weyl dimension: dimension(p) * pochhammer(p, N) / d!; zero when p has more than N rows.
Integer dim_unitary(const Partition& p, int N);

// Unsigned Stirling number of the first kind: permutations of n with k cycles.
Integer stirling_cycle(int n, int k);

std::string to_string(const Partition& p);  // "[3,1,1]", "[]"
// Accepts "[3,1,1]", "3,1,1", or "[]"; parts are sorted into canonical form.
Partition parse_partition(const std::string& s);

}  // namespace hc
