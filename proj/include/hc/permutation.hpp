#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hc/partition.hpp"

namespace hc {

// Permutation of {1..d} in one-line form. Products multiply left to right:
// compose(p, q) applies p first, then q.
class Permutation {
 public:
  Permutation() = default;  // degree 0
  explicit Permutation(int d);  // identity
  explicit Permutation(std::vector<int> images);

  int degree() const { return static_cast<int>(img_.size()); }
  int image(int x) const { return img_[x - 1]; }
  const std::vector<int>& images() const { return img_; }
  bool is_identity() const;

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

 private:
  std::vector<int> img_;
};

struct Transposition {
  int i, j;  // i < j; the Jucys-Murphy edge label is j
  Transposition(int i_, int j_);
  int label() const { return j; }
};

Permutation identity(int d);
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
Permutation transposition_perm(int d, int i, int j);
std::vector<Transposition> all_transpositions(int d);

int cycle_count(const Permutation& p);
Partition cycle_type(const Permutation& p);
// Word norm |p| = d - (number of cycles): minimal transposition word length.
int word_norm(const Permutation& p);
// Graph distance d(a, b) = |a^{-1} b| on the all-transpositions Cayley graph.
int distance(const Permutation& a, const Permutation& b);

// Factorial-number-system rank in [0, d!); rank order equals lexicographic
// order of one-line forms. Requires d <= 20.
std::uint64_t lehmer_rank(const Permutation& p);
Permutation lehmer_unrank(int d, std::uint64_t rank);

// Visits all d! permutations in rank (lexicographic) order.
void for_each_permutation(int d, const std::function<void(const Permutation&)>& fn);

// Streams the conjugacy class of the given cycle type in S_d without filtering
// the full group; each member is produced exactly once.
void for_each_in_class(int d, const Partition& type,
                       const std::function<void(const Permutation&)>& fn);
std::vector<Permutation> conjugacy_class(int d, const Partition& type);
// Canonical member: cycles laid out left to right, e.g. (1 2 3)(4 5) for [3,2].
Permutation class_representative(int d, const Partition& type);

std::string to_cycle_string(const Permutation& p);     // "(1 2 3)(4 5)"; identity is "()"
std::string to_one_line_string(const Permutation& p);  // "[2,3,1]"
// Accepts cycle form "(1 2 3)(4 5)", one-line form "[2,3,1]", "id", or "()".
Permutation parse_permutation(const std::string& s, int d);

}  // namespace hc
