#include "hc/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace hc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return Partition(std::move(parts));
}

namespace {

void emit_partitions(int remaining, int max_part, int rows_left, std::vector<int>& acc,
                     std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(acc));
    return;
  }
  if (rows_left == 0) return;
  for (int a = std::min(remaining, max_part); a >= 1; --a) {
    acc.push_back(a);
    emit_partitions(remaining - a, a, rows_left - 1, acc, out);
    acc.pop_back();
  }
}

std::mutex cache_mutex;

}  // namespace

const std::vector<Partition>& partitions_of(int d) {
  if (d < 0) throw std::invalid_argument("partitions_of: negative d");
  static std::map<int, std::vector<Partition>> cache;
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = cache.find(d);
  if (it == cache.end()) {
    std::vector<Partition> out;
    std::vector<int> acc;
    emit_partitions(d, d, d, acc, out);
    if (d == 0) out = {Partition()};
    it = cache.emplace(d, std::move(out)).first;
  }
  return it->second;
}

std::vector<Partition> partitions_of(int d, int max_rows) {
  std::vector<Partition> out;
  std::vector<int> acc;
  if (d == 0) {
    out.push_back(Partition());
    return out;
  }
  emit_partitions(d, d, std::min(d, max_rows), acc, out);
  return out;
}

int partition_index(const Partition& alpha) {
  const auto& all = partitions_of(alpha.size());
  for (size_t i = 0; i < all.size(); ++i)
    if (all[i] == alpha) return static_cast<int>(i);
  throw std::logic_error("partition_index: not found");
}

Partition conjugate(const Partition& p) {
  std::vector<int> cols;
  if (p.length() > 0) cols.assign(p.parts()[0], 0);
  for (int part : p.parts())
    for (int j = 0; j < part; ++j) ++cols[j];
  return Partition(std::move(cols));
}

std::vector<int> contents(const Partition& p) {
  std::vector<int> cs;
  cs.reserve(p.size());
  for (int i = 0; i < p.length(); ++i)
    for (int j = 0; j < p.parts()[i]; ++j) cs.push_back(j - i);
  return cs;
}

Integer content_sum(const Partition& p) {
  Integer s = 0;
  for (int c : contents(p)) s += c;
  return s;
}

Integer hook_product(const Partition& p) {
  Partition conj = conjugate(p);
  Integer prod = 1;
  for (int i = 0; i < p.length(); ++i)
    for (int j = 0; j < p.parts()[i]; ++j) {
      int arm = p.parts()[i] - (j + 1);
      int leg = conj.parts()[j] - (i + 1);
      prod *= arm + leg + 1;
    }
  return prod;
}

Integer dimension(const Partition& p) { return factorial(p.size()) / hook_product(p); }

Integer z_order(const Partition& p) {
  Integer z = 1;
  int run = 0, prev = 0;
  for (int part : p.parts()) {
    if (part == prev) {
      ++run;
    } else {
      prev = part;
      run = 1;
    }
    z *= Integer(part) * run;  // accumulates k^{m_k} * m_k! across the run
  }
  return z;
}

Integer class_size(const Partition& p) { return factorial(p.size()) / z_order(p); }

Rational pochhammer(const Partition& p, const Rational& x) {
  Rational prod = 1;
  for (int c : contents(p)) prod *= x + c;
  return prod;
}

Integer dim_unitary(const Partition& p, int N) {
  if (N < 0) throw std::invalid_argument("dim_unitary: negative N");
  Rational v = dimension(p) * pochhammer(p, Rational(N)) / Rational(factorial(p.size()));
  if (v.get_den() != 1) throw std::logic_error("dim_unitary: non-integral value");
  return v.get_num();
}

Integer stirling_cycle(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("stirling_cycle: negative argument");
  if (k > n) return 0;
  std::vector<Integer> row(static_cast<size_t>(n) + 1, 0);
  row[0] = 1;  // c(0,0)
  for (int m = 1; m <= n; ++m) {
    for (int j = m; j >= 1; --j) row[j] = row[j - 1] + Integer(m - 1) * row[j];
    row[0] = 0;  // c(m,0) = 0 once m >= 1
  }
  return row[k];
}

std::string to_string(const Partition& p) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < p.length(); ++i) {
    if (i) os << ',';
    os << p.parts()[i];
  }
  os << ']';
  return os.str();
}

Partition parse_partition(const std::string& s) {
  std::string body = s;
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw std::invalid_argument("parse_partition: unbalanced brackets");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<int> parts;
  std::istringstream is(body);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    size_t a = tok.find_first_not_of(" \t");
    if (a == std::string::npos) continue;
    size_t b = tok.find_last_not_of(" \t");
    tok = tok.substr(a, b - a + 1);
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("parse_partition: bad part '" + tok + "'");
    if (v <= 0) throw std::invalid_argument("parse_partition: parts must be positive");
    parts.push_back(v);
  }
  return Partition::from_unsorted(std::move(parts));
}

}  // namespace hc
