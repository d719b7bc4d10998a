#include "hc/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hc {

Permutation::Permutation(int d) : img_(d) {
  if (d < 0) throw std::invalid_argument("Permutation: negative degree");
  std::iota(img_.begin(), img_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  int d = degree();
  std::vector<char> seen(d, 0);
  for (int v : img_) {
    if (v < 1 || v > d || seen[v - 1])
      throw std::invalid_argument("Permutation: not a permutation of 1..d");
    seen[v - 1] = 1;
  }
}

bool Permutation::is_identity() const {
  for (int x = 1; x <= degree(); ++x)
    if (img_[x - 1] != x) return false;
  return true;
}

Transposition::Transposition(int i_, int j_) : i(i_), j(j_) {
  if (!(1 <= i && i < j)) throw std::invalid_argument("Transposition: need 1 <= i < j");
}

Permutation identity(int d) { return Permutation(d); }

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> img(p.degree());
  for (int x = 1; x <= p.degree(); ++x) img[x - 1] = q.image(p.image(x));
  return Permutation(std::move(img));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> img(p.degree());
  for (int x = 1; x <= p.degree(); ++x) img[p.image(x) - 1] = x;
  return Permutation(std::move(img));
}

Permutation transposition_perm(int d, int i, int j) {
  Transposition t(std::min(i, j), std::max(i, j));
  if (t.j > d) throw std::invalid_argument("transposition_perm: point out of range");
  std::vector<int> img(d);
  std::iota(img.begin(), img.end(), 1);
  std::swap(img[t.i - 1], img[t.j - 1]);
  return Permutation(std::move(img));
}

std::vector<Transposition> all_transpositions(int d) {
  std::vector<Transposition> ts;
  ts.reserve(d * (d - 1) / 2);
  for (int j = 2; j <= d; ++j)
    for (int i = 1; i < j; ++i) ts.emplace_back(i, j);
  return ts;
}

int cycle_count(const Permutation& p) {
  int d = p.degree(), count = 0;
  std::vector<char> seen(d, 0);
  for (int x = 1; x <= d; ++x) {
    if (seen[x - 1]) continue;
    ++count;
    for (int y = x; !seen[y - 1]; y = p.image(y)) seen[y - 1] = 1;
  }
  return count;
}

Partition cycle_type(const Permutation& p) {
  int d = p.degree();
  std::vector<char> seen(d, 0);
  std::vector<int> lens;
  for (int x = 1; x <= d; ++x) {
    if (seen[x - 1]) continue;
    int len = 0;
    for (int y = x; !seen[y - 1]; y = p.image(y)) {
      seen[y - 1] = 1;
      ++len;
    }
    lens.push_back(len);
  }
  return Partition::from_unsorted(std::move(lens));
}

int word_norm(const Permutation& p) { return p.degree() - cycle_count(p); }

int distance(const Permutation& a, const Permutation& b) {
  return word_norm(compose(inverse(a), b));
}

std::uint64_t lehmer_rank(const Permutation& p) {
  int d = p.degree();
  if (d > 20) throw std::invalid_argument("lehmer_rank: degree too large for 64-bit rank");
  std::uint64_t rank = 0;
  for (int i = 0; i < d; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < d; ++j)
      if (p.images()[j] < p.images()[i]) ++smaller;
    std::uint64_t f = 1;
    for (int k = 2; k <= d - 1 - i; ++k) f *= k;
    rank += smaller * f;
  }
  return rank;
}

Permutation lehmer_unrank(int d, std::uint64_t rank) {
  if (d > 20) throw std::invalid_argument("lehmer_unrank: degree too large");
  std::vector<int> avail(d);
  std::iota(avail.begin(), avail.end(), 1);
  std::vector<std::uint64_t> fact(d + 1, 1);
  for (int k = 1; k <= d; ++k) fact[k] = fact[k - 1] * k;
  if (d > 0 && rank >= fact[d]) throw std::invalid_argument("lehmer_unrank: rank out of range");
  std::vector<int> img;
  img.reserve(d);
  for (int i = d - 1; i >= 0; --i) {
    std::uint64_t q = rank / fact[i];
    rank %= fact[i];
    img.push_back(avail[q]);
    avail.erase(avail.begin() + static_cast<long>(q));
  }
  return Permutation(std::move(img));
}

void for_each_permutation(int d, const std::function<void(const Permutation&)>& fn) {
  std::vector<int> img(d);
  std::iota(img.begin(), img.end(), 1);
  do {
    fn(Permutation(img));
  } while (std::next_permutation(img.begin(), img.end()));
}

namespace {

// Leader-canonical class enumeration: the smallest unused point leads its
// cycle, killing the k rotations and the orderings of equal-length cycles.
void class_rec(int d, std::vector<int>& remaining_lens, std::vector<int>& img,
               std::vector<char>& used, int placed,
               const std::function<void(const Permutation&)>& fn) {
  if (placed == d) {
    fn(Permutation(img));
    return;
  }
  int leader = 0;
  for (int x = 1; x <= d; ++x)
    if (!used[x - 1]) {
      leader = x;
      break;
    }
  used[leader - 1] = 1;
  int prev_len = 0;
  for (size_t li = 0; li < remaining_lens.size(); ++li) {
    int len = remaining_lens[li];
    if (len == prev_len) continue;  // each distinct length once
    prev_len = len;
    remaining_lens.erase(remaining_lens.begin() + static_cast<long>(li));
    // choose the ordered tail of the cycle among unused points
    std::vector<int> tail;
    std::function<void(int, int)> build = [&](int from, int depth) {
      if (depth == len - 1) {
        int cur = leader;
        for (int t : tail) {
          img[cur - 1] = t;
          cur = t;
        }
        img[cur - 1] = leader;
        class_rec(d, remaining_lens, img, used, placed + len, fn);
        return;
      }
      (void)from;
      for (int x = 1; x <= d; ++x) {
        if (used[x - 1]) continue;
        used[x - 1] = 1;
        tail.push_back(x);
        build(x, depth + 1);
        tail.pop_back();
        used[x - 1] = 0;
      }
    };
    build(leader, 0);
    remaining_lens.insert(remaining_lens.begin() + static_cast<long>(li), len);
    prev_len = len;
  }
  used[leader - 1] = 0;
}

}  // namespace

void for_each_in_class(int d, const Partition& type,
                       const std::function<void(const Permutation&)>& fn) {
  if (type.size() != d) throw std::invalid_argument("for_each_in_class: type must partition d");
  std::vector<int> lens = type.parts();  // descending
  std::vector<int> img(d, 0);
  std::vector<char> used(d, 0);
  class_rec(d, lens, img, used, 0, fn);
}

std::vector<Permutation> conjugacy_class(int d, const Partition& type) {
  std::vector<Permutation> out;
  for_each_in_class(d, type, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

Permutation class_representative(int d, const Partition& type) {
  if (type.size() != d) throw std::invalid_argument("class_representative: type must partition d");
  std::vector<int> img(d);
  std::iota(img.begin(), img.end(), 1);
  int start = 1;
  for (int len : type.parts()) {
    for (int x = start; x < start + len - 1; ++x) img[x - 1] = x + 1;
    img[start + len - 2] = start;
    start += len;
  }
  return Permutation(std::move(img));
}

std::string to_cycle_string(const Permutation& p) {
  int d = p.degree();
  std::vector<char> seen(d, 0);
  std::ostringstream os;
  bool any = false;
  for (int x = 1; x <= d; ++x) {
    if (seen[x - 1] || p.image(x) == x) {
      seen[x - 1] = 1;
      continue;
    }
    any = true;
    os << '(';
    bool first = true;
    for (int y = x; !seen[y - 1]; y = p.image(y)) {
      seen[y - 1] = 1;
      if (!first) os << ' ';
      os << y;
      first = false;
    }
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

std::string to_one_line_string(const Permutation& p) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < p.degree(); ++i) {
    if (i) os << ',';
    os << p.images()[i];
  }
  os << ']';
  return os.str();
}

namespace {

Permutation parse_cycles(const std::string& s, int d) {
  std::vector<int> img(d);
  std::iota(img.begin(), img.end(), 1);
  std::vector<char> moved(d, 0);
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  };
  skip_ws();
  while (pos < s.size()) {
    if (s[pos] != '(') throw std::invalid_argument("parse_permutation: expected '('");
    ++pos;
    std::vector<int> cyc;
    skip_ws();
    while (pos < s.size() && s[pos] != ')') {
      size_t end = pos;
      while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
      if (end == pos) throw std::invalid_argument("parse_permutation: expected point number");
      int v = std::stoi(s.substr(pos, end - pos));
      if (v < 1 || v > d)
        throw std::invalid_argument("parse_permutation: point out of range 1..d");
      if (moved[v - 1]) throw std::invalid_argument("parse_permutation: repeated point");
      moved[v - 1] = 1;
      cyc.push_back(v);
      pos = end;
      skip_ws();
      if (pos < s.size() && s[pos] == ',') {
        ++pos;
        skip_ws();
      }
    }
    if (pos >= s.size()) throw std::invalid_argument("parse_permutation: unbalanced '('");
    ++pos;  // ')'
    for (size_t k = 0; k < cyc.size(); ++k) img[cyc[k] - 1] = cyc[(k + 1) % cyc.size()];
    skip_ws();
  }
  return Permutation(std::move(img));
}

}  // namespace

Permutation parse_permutation(const std::string& s, int d) {
  std::string t = s;
  size_t a = t.find_first_not_of(" \t");
  if (a == std::string::npos) throw std::invalid_argument("parse_permutation: empty string");
  size_t b = t.find_last_not_of(" \t");
  t = t.substr(a, b - a + 1);
  if (t == "id" || t == "()") return identity(d);
  if (t.front() == '[') {
    if (t.back() != ']') throw std::invalid_argument("parse_permutation: unbalanced brackets");
    std::vector<int> img;
    std::istringstream is(t.substr(1, t.size() - 2));
    std::string tok;
    while (std::getline(is, tok, ',')) img.push_back(std::stoi(tok));
    if (static_cast<int>(img.size()) != d)
      throw std::invalid_argument("parse_permutation: one-line length must equal d");
    return Permutation(std::move(img));
  }
  if (t.front() == '(') return parse_cycles(t, d);
  throw std::invalid_argument("parse_permutation: unrecognized format '" + s + "'");
}

}  // namespace hc
