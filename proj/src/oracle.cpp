#include "hc/oracle.hpp"

#include <algorithm>
#include <future>
#include <numeric>

namespace hc {

namespace {

constexpr int kMaxWalkSteps = 10;

// Mutable one-line + inverse arrays for O(1) right-multiplication by (i j).
struct WalkState {
  int d;
  std::vector<int> img;  // img[x-1] = image of x
  std::vector<int> pos;  // pos[v] = x with img[x-1] == v

  explicit WalkState(const Permutation& p) : d(p.degree()), img(p.images()), pos(d + 1) {
    for (int x = 1; x <= d; ++x) pos[img[x - 1]] = x;
  }
  // right-multiply by (i j): values i and j swap places
  void apply(int i, int j) {
    int xi = pos[i], xj = pos[j];
    img[xi - 1] = j;
    img[xj - 1] = i;
    std::swap(pos[i], pos[j]);
  }
};

struct ModeWindow {
  bool increasing;  // labels run upward (or downward)
  bool strict;
  bool unrestricted;
};

ModeWindow window_of(WalkMode mode) {
  switch (mode) {
    case WalkMode::unrestricted: return {true, false, true};
    case WalkMode::strict_increasing: return {true, true, false};
    case WalkMode::weak_increasing: return {true, false, false};
    case WalkMode::strict_decreasing: return {false, true, false};
    case WalkMode::weak_decreasing: return {false, false, false};
  }
  throw std::logic_error("window_of: bad mode");
}

void dfs_count(WalkState& st, const std::vector<int>& target, int remaining, int last,
               const ModeWindow& w, Integer& count) {
  if (remaining == 0) {
    if (st.img == target) ++count;
    return;
  }
  int lo = 2, hi = st.d;
  if (!w.unrestricted) {
    if (w.increasing)
      lo = w.strict ? last + 1 : last;
    else
      hi = w.strict ? last - 1 : last;
    lo = std::max(lo, 2);
  }
  for (int j = lo; j <= hi; ++j)
    for (int i = 1; i < j; ++i) {
      st.apply(i, j);
      dfs_count(st, target, remaining - 1, j, w, count);
      st.apply(i, j);
    }
}

void dfs_table(WalkState& st, int depth, int max_r, int last, const ModeWindow& w,
               std::vector<std::vector<Integer>>& counts) {
  ++counts[lehmer_rank(Permutation(st.img))][depth];
  if (depth == max_r) return;
  int lo = 2, hi = st.d;
  if (!w.unrestricted) {
    if (w.increasing)
      lo = w.strict ? last + 1 : last;
    else
      hi = w.strict ? last - 1 : last;
    lo = std::max(lo, 2);
  }
  for (int j = lo; j <= hi; ++j)
    for (int i = 1; i < j; ++i) {
      st.apply(i, j);
      dfs_table(st, depth + 1, max_r, j, w, counts);
      st.apply(i, j);
    }
}

}  // namespace

Integer walk_count(const Permutation& from, const Permutation& to, int r, WalkMode mode) {
  if (from.degree() != to.degree()) throw std::invalid_argument("walk_count: degree mismatch");
  int d = from.degree();
  check_degree_guard(d, 8, "walk_count");
  if (r < 0 || r > kMaxWalkSteps)
    throw ResourceLimitError("walk_count: step count out of [0, 10]");
  ModeWindow w = window_of(mode);
  int last0 = w.increasing ? (w.strict ? 1 : 2) : (w.strict ? d + 1 : d);

  // Parallelize over the first step when the search tree is deep enough to
  // pay for it; partial counts are reduced in first-step order.
  if (r >= 5 && d >= 5) {
    struct First {
      int i, j;
    };
    std::vector<First> firsts;
    int lo = 2, hi = d;
    if (!w.unrestricted) {
      if (w.increasing)
        lo = w.strict ? last0 + 1 : last0;
      else
        hi = w.strict ? last0 - 1 : last0;
      lo = std::max(lo, 2);
    }
    for (int j = lo; j <= hi; ++j)
      for (int i = 1; i < j; ++i) firsts.push_back({i, j});
    std::vector<std::future<Integer>> futs;
    futs.reserve(firsts.size());
    for (const auto& f : firsts)
      futs.push_back(std::async(std::launch::async, [&, f] {
        WalkState st(from);
        st.apply(f.i, f.j);
        Integer c = 0;
        dfs_count(st, to.images(), r - 1, f.j, w, c);
        return c;
      }));
    Integer total = 0;
    for (auto& fu : futs) total += fu.get();
    return total;
  }

  WalkState st(from);
  Integer count = 0;
  dfs_count(st, to.images(), r, last0, w, count);
  return count;
}

std::vector<std::vector<Integer>> walk_count_table(const Permutation& from, int max_r,
                                                   WalkMode mode) {
  int d = from.degree();
  check_degree_guard(d, 8, "walk_count_table");
  if (max_r < 0 || max_r > kMaxWalkSteps)
    throw ResourceLimitError("walk_count_table: step count out of [0, 10]");
  std::vector<std::vector<Integer>> counts(factorial(d).get_ui(),
                                           std::vector<Integer>(max_r + 1, Integer(0)));
  ModeWindow w = window_of(mode);
  WalkState st(from);
  int last0 = w.increasing ? (w.strict ? 1 : 2) : (w.strict ? d + 1 : d);
  dfs_table(st, 0, max_r, last0, w, counts);
  return counts;
}

Integer geodesic_count(const Permutation& from, const Permutation& to) {
  return walk_count(from, to, distance(from, to), WalkMode::unrestricted);
}

Integer hurwitz_cayley_formula(const Partition& alpha) {
  std::vector<int> ks;
  Integer prod = 1;
  for (int a : alpha.parts()) {
    ks.push_back(a - 1);
    prod *= cayley(a - 1);
  }
  return multinomial(alpha.size() - alpha.length(), ks) * prod;
}

Integer monotone_geodesic_count(const Permutation& from, const Permutation& to) {
  return walk_count(from, to, distance(from, to), WalkMode::weak_increasing);
}

Integer catalan_geodesic_formula(const Partition& alpha) {
  Integer prod = 1;
  for (int a : alpha.parts()) prod *= catalan(a - 1);
  return prod;
}

CentralFactor CentralFactor::class_sum(Partition a) {
  return {Kind::class_sum, std::move(a), 0, Rational(0)};
}
CentralFactor CentralFactor::adjacency() { return {Kind::adjacency, Partition(), 0, Rational(0)}; }
CentralFactor CentralFactor::level(int r) { return {Kind::level, Partition(), r, Rational(0)}; }
CentralFactor CentralFactor::monotone(int r) {
  return {Kind::monotone, Partition(), r, Rational(0)};
}
CentralFactor CentralFactor::commutator() {
  return {Kind::commutator, Partition(), 0, Rational(0)};
}
CentralFactor CentralFactor::omega(Rational q) {
  return {Kind::omega, Partition(), 0, std::move(q)};
}
CentralFactor CentralFactor::omega_inverse(Rational q) {
  return {Kind::omega_inverse, Partition(), 0, std::move(q)};
}

namespace {

// Exact solve A x = rhs by Gauss-Jordan; used for Omega^{-1} as an element.
ExactVector exact_solve(ExactMatrix a, ExactVector rhs) {
  const long n = a.rows();
  for (long col = 0; col < n; ++col) {
    long pivot = -1;
    for (long i = col; i < n; ++i)
      if (a(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) throw SingularMatrixError("exact_solve: singular matrix");
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      std::swap(rhs(pivot), rhs(col));
    }
    Rational p = a(col, col);
    for (long j = col; j < n; ++j) a(col, j) /= p;
    rhs(col) /= p;
    for (long i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      Rational f = a(i, col);
      for (long j = col; j < n; ++j) a(i, j) -= f * a(col, j);
      rhs(i) -= f * rhs(col);
    }
  }
  return rhs;
}

AlgebraElement factor_element(int d, const CentralFactor& f) {
  using K = CentralFactor::Kind;
  switch (f.kind) {
    case K::class_sum: return class_sum_element(d, f.alpha);
    case K::adjacency: return adjacency_element(d);
    case K::level: return level_element(d, f.r);
    case K::monotone: return monotone_element(d, f.r);
    case K::commutator: return commutator_element(d);
    case K::omega: return omega_element(d, f.q);
    case K::omega_inverse: {
      check_degree_guard(d, 5, "central_element(omega_inverse)");
      ExactMatrix m = operator_matrix(omega_element(d, f.q));
      ExactVector rhs = ExactVector::Zero(m.rows());
      rhs(static_cast<long>(lehmer_rank(identity(d)))) = 1;
      ExactVector x = exact_solve(std::move(m), std::move(rhs));
      AlgebraElement e(d);
      for (long i = 0; i < x.rows(); ++i) e[static_cast<std::uint64_t>(i)] = x(i);
      return e;
    }
  }
  throw std::logic_error("factor_element: bad kind");
}

}  // namespace

AlgebraElement central_element(int d, const std::vector<CentralFactor>& word) {
  AlgebraElement acc = AlgebraElement::unit(d);
  for (const auto& f : word) acc = convolve(acc, factor_element(d, f));
  return acc;
}

ExactMatrix operator_matrix(const AlgebraElement& a) {
  int d = a.degree();
  check_degree_guard(d, 6, "operator_matrix");
  std::uint64_t n = a.order();
  ExactMatrix m = ExactMatrix::Zero(static_cast<long>(n), static_cast<long>(n));
  std::uint64_t rho_rank = 0;
  for_each_permutation(d, [&](const Permutation& rho) {
    std::uint64_t pi_rank = 0;
    for_each_permutation(d, [&](const Permutation& pi) {
      if (a[pi_rank] != 0) {
        std::uint64_t sigma_rank = lehmer_rank(compose(rho, pi));
        m(static_cast<long>(sigma_rank), static_cast<long>(rho_rank)) += a[pi_rank];
      }
      ++pi_rank;
    });
    ++rho_rank;
  });
  return m;
}

ExactMatrix operator_matrix(int d, const std::vector<CentralFactor>& word) {
  return operator_matrix(central_element(d, word));
}

bool jm_identity_check(int d, int r) {
  return elementary_jm_element(d, r) == level_element(d, r) &&
         complete_jm_element(d, r) == monotone_element(d, r);
}

TupleFactor TupleFactor::class_member(Partition a) {
  return {Kind::class_member, std::move(a), 0, 0};
}
TupleFactor TupleFactor::level_member(int level) {
  return {Kind::level_member, Partition(), level, 0};
}
TupleFactor TupleFactor::adjacency_step() { return {Kind::adjacency_step, Partition(), 0, 0}; }
TupleFactor TupleFactor::monotone_block(int len) {
  return {Kind::monotone_block, Partition(), 0, len};
}
TupleFactor TupleFactor::commutator_pair() {
  return {Kind::commutator_pair, Partition(), 0, 0};
}

namespace {

// Union-find over {1..d} with an undo stack shared along the DFS.
struct RollbackDSU {
  std::vector<int> parent, size;
  std::vector<std::pair<int, int>> undo;  // (child root, old parent size)
  int components;

  explicit RollbackDSU(int d) : parent(d + 1), size(d + 1, 1), components(d) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) const {
    while (parent[x] != x) x = parent[x];
    return x;
  }
  // returns number of undo records pushed
  int unite(int a, int b) {
    int ra = find(a), rb = find(b);
    if (ra == rb) return 0;
    if (size[ra] < size[rb]) std::swap(ra, rb);
    parent[rb] = ra;
    undo.emplace_back(rb, size[ra]);
    size[ra] += size[rb];
    --components;
    return 1;
  }
  int unite_cycles(const Permutation& p) {
    int pushed = 0;
    for (int x = 1; x <= p.degree(); ++x)
      if (p.image(x) != x) pushed += unite(x, p.image(x));
    return pushed;
  }
  void rollback(int n) {
    while (n-- > 0) {
      auto [child, old_size] = undo.back();
      undo.pop_back();
      size[parent[child]] = old_size;
      parent[child] = child;
      ++components;
    }
  }
};

struct TupleSearch {
  int d;
  const std::vector<TupleFactor>& factors;
  std::optional<int> target_class_index;
  bool require_transitive;
  RollbackDSU dsu;
  std::vector<Permutation> product_stack;
  Integer count = 0;
  std::vector<std::vector<Permutation>> class_pool;  // per factor, where applicable
  std::vector<Transposition> transpositions;

  TupleSearch(int d_, const std::vector<TupleFactor>& fs) : d(d_), factors(fs), dsu(d_) {
    product_stack.push_back(identity(d));
    transpositions = all_transpositions(d);
    for (const auto& f : factors) {
      std::vector<Permutation> pool;
      if (f.kind == TupleFactor::Kind::class_member) {
        pool = conjugacy_class(d, f.alpha);
      } else if (f.kind == TupleFactor::Kind::level_member) {
        for_each_permutation(d, [&](const Permutation& p) {
          if (word_norm(p) == f.level) pool.push_back(p);
        });
      } else if (f.kind == TupleFactor::Kind::commutator_pair) {
        for_each_permutation(d, [&](const Permutation& p) { pool.push_back(p); });
      }
      class_pool.push_back(std::move(pool));
    }
  }

  void push_entry(const Permutation& entry, const Permutation& contribution, int& undos) {
    undos += dsu.unite_cycles(entry);
    product_stack.push_back(compose(product_stack.back(), contribution));
  }
  void pop_entry(int undos) {
    product_stack.pop_back();
    dsu.rollback(undos);
  }

  void leaf() {
    const Permutation& prod = product_stack.back();
    if (target_class_index) {
      if (partition_index(cycle_type(prod)) != *target_class_index) return;
    } else if (!prod.is_identity()) {
      return;
    }
    if (require_transitive && d > 0 && dsu.components != 1) return;
    ++count;
  }

  void block_rec(size_t fi, int remaining, int last_label) {
    if (remaining == 0) {
      rec(fi + 1);
      return;
    }
    for (const auto& t : transpositions) {
      if (t.label() < last_label) continue;
      Permutation step = transposition_perm(d, t.i, t.j);
      int undos = 0;
      push_entry(step, step, undos);
      block_rec(fi, remaining - 1, t.label());
      pop_entry(undos);
    }
  }

  void rec(size_t fi) {
    if (fi == factors.size()) {
      leaf();
      return;
    }
    const TupleFactor& f = factors[fi];
    using K = TupleFactor::Kind;
    switch (f.kind) {
      case K::class_member:
      case K::level_member:
        for (const auto& p : class_pool[fi]) {
          int undos = 0;
          push_entry(p, p, undos);
          rec(fi + 1);
          pop_entry(undos);
        }
        break;
      case K::adjacency_step:
        for (const auto& t : transpositions) {
          Permutation step = transposition_perm(d, t.i, t.j);
          int undos = 0;
          push_entry(step, step, undos);
          rec(fi + 1);
          pop_entry(undos);
        }
        break;
      case K::monotone_block:
        block_rec(fi, f.block_len, 0);
        break;
      case K::commutator_pair:
        for (const auto& rho : class_pool[fi]) {
          int undos_rho = dsu.unite_cycles(rho);
          for (const auto& sigma : class_pool[fi]) {
            int undos = dsu.unite_cycles(sigma);
            Permutation contribution =
                compose(compose(inverse(rho), inverse(sigma)), compose(rho, sigma));
            product_stack.push_back(compose(product_stack.back(), contribution));
            rec(fi + 1);
            product_stack.pop_back();
            dsu.rollback(undos);
          }
          dsu.rollback(undos_rho);
        }
        break;
    }
  }
};

}  // namespace

Integer transitive_tuple_count(int d, const std::vector<TupleFactor>& factors,
                               const std::optional<Partition>& target_class,
                               bool require_transitive) {
  check_degree_guard(d, 6, "transitive_tuple_count");
  TupleSearch search(d, factors);
  if (target_class) {
    if (target_class->size() != d)
      throw std::invalid_argument("transitive_tuple_count: target class must partition d");
    search.target_class_index = partition_index(*target_class);
  }
  search.require_transitive = require_transitive;
  search.rec(0);
  return search.count;
}

}  // namespace hc
