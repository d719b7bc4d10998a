// Command-line front end: exact walk counts, character data, spectral
// eigenvalues, Hurwitz expectations, and the 2D Yang-Mills series, with JSON
// (default), CSV, and DOT emission. All exact values print as integers or
// "num/den" strings; numeric display is an explicit opt-in mode.

#include <cstdio>  // before mpfr.h so the mpfr_snprintf family is declared

#include <mpfr.h>

#include <exception>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hc/characters.hpp"
#include "hc/hurwitz.hpp"
#include "hc/numbers.hpp"
#include "hc/oracle.hpp"
#include "hc/partition.hpp"
#include "hc/permutation.hpp"
#include "hc/series.hpp"
#include "hc/ym2.hpp"
#include "json.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace hc;

constexpr int kExitParse = 1;
constexpr int kExitResource = 2;
constexpr int kExitVerifyFailed = 3;

json partition_json(const Partition& p) {
  json arr = json::array();
  for (int part : p.parts()) arr.push_back(part);
  return arr;
}

std::string partition_text(const Partition& p) {
  std::string out = "[";
  bool first = true;
  for (int part : p.parts()) {
    if (!first) out += ",";
    out += std::to_string(part);
    first = false;
  }
  return out + "]";
}

// Accepts "[3,1,1]", "3,1,1", or "[]" for the empty partition.
Partition parse_partition(const std::string& text) {
  std::string body;
  for (char c : text)
    if (c != ' ' && c != '\t') body += c;
  if (body.size() >= 2 && body.front() == '[' && body.back() == ']')
    body = body.substr(1, body.size() - 2);
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t comma = body.find(',', pos);
    if (comma == std::string::npos) comma = body.size();
    const std::string piece = body.substr(pos, comma - pos);
    if (piece.empty())
      throw std::invalid_argument("partition: empty entry in '" + text + "'");
    std::size_t used = 0;
    int value = std::stoi(piece, &used);
    if (used != piece.size())
      throw std::invalid_argument("partition: bad entry '" + piece + "'");
    parts.push_back(value);
    pos = comma + 1;
  }
  return Partition::from_unsorted(parts);
}

Partition parse_class(const std::string& text, int d, const char* what) {
  Partition p = parse_partition(text);
  if (p.size() != d)
    throw std::invalid_argument(std::string(what) + ": partition " + partition_text(p) +
                                " does not partition d = " + std::to_string(d));
  return p;
}

json series_terms_json(const FormalSeries& f) {
  json arr = json::array();
  for (const auto& [key, value] : f.terms()) {
    json term;
    term["d"] = key.z;
    term["t_pow"] = key.t;
    term["u_pow"] = key.u;
    term["v_pow"] = key.v;
    term["hbar_pow"] = key.hbar;
    json markers = json::array();
    for (const Partition& p : key.marker.slots) markers.push_back(partition_json(p));
    term["markers"] = markers;
    term["value"] = rational_to_string(value);
    arr.push_back(term);
  }
  return arr;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

WalkMode parse_mode(const std::string& name) {
  static const std::map<std::string, WalkMode> kModes = {
      {"unrestricted", WalkMode::unrestricted},
      {"strict", WalkMode::strict_increasing},
      {"strict-increasing", WalkMode::strict_increasing},
      {"weak", WalkMode::weak_increasing},
      {"weak-increasing", WalkMode::weak_increasing},
      {"strict-decreasing", WalkMode::strict_decreasing},
      {"weak-decreasing", WalkMode::weak_decreasing},
  };
  auto it = kModes.find(name);
  if (it == kModes.end()) throw std::invalid_argument("unknown walk mode: " + name);
  return it->second;
}

// ----- subcommand states -------------------------------------------------

struct WalksArgs {
  int d = 0;
  std::string from = "id";
  std::string to = "id";
  int r = 0;
  std::string mode = "unrestricted";
};

int run_walks(const WalksArgs& a) {
  const Permutation from = parse_permutation(a.from, a.d);
  const Permutation to = parse_permutation(a.to, a.d);
  const Integer count = walk_count(from, to, a.r, parse_mode(a.mode));
  json out;
  out["d"] = a.d;
  out["from"] = to_cycle_string(from);
  out["to"] = to_cycle_string(to);
  out["r"] = a.r;
  out["mode"] = a.mode;
  out["count"] = count.get_str();
  emit(out);
  return 0;
}

struct GeodesicsArgs {
  int d = 0;
  std::string alpha;
  std::string from;
  std::string to;
};

int run_geodesics(const GeodesicsArgs& a) {
  Permutation from, to;
  if (!a.alpha.empty()) {
    if (!a.from.empty() || !a.to.empty())
      throw std::invalid_argument("geodesics: give either --alpha or --from/--to");
    const Partition alpha = parse_class(a.alpha, a.d, "geodesics");
    from = identity(a.d);
    to = class_representative(a.d, alpha);
  } else {
    from = parse_permutation(a.from.empty() ? "id" : a.from, a.d);
    to = parse_permutation(a.to.empty() ? "id" : a.to, a.d);
  }
  const Partition alpha = cycle_type(compose(inverse(from), to));
  json out;
  out["d"] = a.d;
  out["alpha"] = partition_json(alpha);
  out["distance"] = distance(from, to);
  out["count"] = geodesic_count(from, to).get_str();
  out["closed_form"] = hurwitz_cayley_formula(alpha).get_str();
  out["monotone_count"] = monotone_geodesic_count(from, to).get_str();
  out["catalan_form"] = catalan_geodesic_formula(alpha).get_str();
  emit(out);
  return 0;
}

struct CharTableArgs {
  int d = 0;
  std::string format = "json";
};

int run_char_table(const CharTableArgs& a) {
  check_degree_guard(a.d, 9, "char-table");
  const CharacterTable& table = CharacterTable::of(a.d);
  const std::vector<Partition>& labels = table.labels();
  if (a.format == "csv") {
    std::cout << "\"lambda\"";
    for (const Partition& alpha : labels) std::cout << ",\"" << partition_text(alpha) << "\"";
    std::cout << "\n";
    for (std::size_t i = 0; i < labels.size(); ++i) {
      std::cout << "\"" << partition_text(labels[i]) << "\"";
      for (std::size_t j = 0; j < labels.size(); ++j)
        std::cout << "," << table.value(static_cast<int>(i), static_cast<int>(j)).get_str();
      std::cout << "\n";
    }
    return 0;
  }
  if (a.format != "json")
    throw std::invalid_argument("char-table: format must be json or csv");
  json out;
  out["d"] = a.d;
  json classes = json::array();
  for (const Partition& alpha : labels) classes.push_back(partition_json(alpha));
  out["classes"] = classes;
  json rows = json::array();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    json row;
    row["lambda"] = partition_json(labels[i]);
    json values = json::array();
    for (std::size_t j = 0; j < labels.size(); ++j)
      values.push_back(table.value(static_cast<int>(i), static_cast<int>(j)).get_str());
    row["values"] = values;
    rows.push_back(row);
  }
  out["rows"] = rows;
  emit(out);
  return 0;
}

struct EigenArgs {
  int d = 0;
  std::string lambda;
  std::string q;
  int N = 0;
};

int run_eigen(const EigenArgs& a) {
  const Partition lambda = parse_class(a.lambda, a.d, "eigen");
  const Eigenpacket pack = eigenpacket(lambda);
  json out;
  out["d"] = a.d;
  out["lambda"] = partition_json(lambda);
  if (!a.q.empty()) {
    const Rational q = parse_rational(a.q);
    out["omega_hat"] = rational_to_string(pack.omega(q));
  }
  out["k_hat"] = pack.k_hat.get_str();
  out["dim"] = pack.dim.get_str();
  out["h_hat"] = rational_to_string(pack.h_hat);
  if (a.N > 0) out["casimir"] = pack.casimir(a.N).get_str();
  emit(out);
  return 0;
}

struct PlancherelArgs {
  int d = 0;
  std::vector<std::string> classes;
  int handles = 0;
  int r = 0;
  int s = 0;
  std::vector<int> levels;
  int rows = -1;
};

int run_plancherel(const PlancherelArgs& a) {
  auto word = ExpectationWord::in_degree(a.d);
  word.with_handles(a.handles).with_steps(a.r).with_monotone(a.s);
  json class_echo = json::array();
  for (const std::string& text : a.classes) {
    const Partition alpha = parse_class(text, a.d, "plancherel");
    word.with_class(alpha);
    class_echo.push_back(partition_json(alpha));
  }
  for (int level : a.levels) word.with_level(level);
  const Rational value = plancherel(word, a.rows);
  json out;
  out["d"] = a.d;
  out["handles"] = a.handles;
  out["classes"] = class_echo;
  out["r"] = a.r;
  out["s"] = a.s;
  out["levels"] = a.levels;
  if (a.rows >= 0) out["rows"] = a.rows;
  out["value"] = rational_to_string(value);
  emit(out);
  return 0;
}

struct HurwitzArgs {
  std::string geometry;
  int d = 0;
  std::string alpha;
  std::string beta;
  std::string gamma;
  std::optional<int> a;
  std::optional<int> b;
  int r = 0;
  int s = 0;
  bool connected = false;
};

int run_hurwitz(const HurwitzArgs& args) {
  const GeometryTemplate& geom = geometry_by_name(args.geometry);
  std::vector<Partition> classes;
  for (const std::string* text : {&args.alpha, &args.beta, &args.gamma})
    if (!text->empty()) classes.push_back(parse_class(*text, args.d, "hurwitz"));
  if (static_cast<int>(classes.size()) != geom.class_boundaries)
    throw std::invalid_argument("hurwitz: geometry " + geom.name + " needs " +
                                std::to_string(geom.class_boundaries) +
                                " class partition(s) via --alpha/--beta/--gamma");
  std::vector<int> levels;
  if (geom.level_boundaries == 2) {
    if (!args.a || !args.b)
      throw std::invalid_argument("hurwitz: geometry " + geom.name +
                                  " needs levels --a and --b");
    levels = {*args.a, *args.b};
  } else if (geom.level_boundaries == 1) {
    if (!args.b || args.a)
      throw std::invalid_argument("hurwitz: geometry " + geom.name +
                                  " takes exactly the level --b");
    levels = {*args.b};
  } else if (args.a || args.b) {
    throw std::invalid_argument("hurwitz: geometry " + geom.name + " has no levels");
  }
  const ExpectationWord word = geometry_word(geom, args.d, classes, levels, args.r, args.s);
  const Integer value = args.connected ? connected_count(word) : mixed_expectation(word);
  Rational normalized = Rational(value) / Rational(factorial(args.d));
  normalized.canonicalize();
  json out;
  out["geometry"] = geom.name;
  out["d"] = args.d;
  out["r"] = args.r;
  out["s"] = args.s;
  out["connected"] = args.connected;
  out["value"] = value.get_str();
  if (geom.genus_labelled) {
    const std::optional<int> g = genus_label(word);
    out["genus"] = g ? json(*g) : json(nullptr);
  } else {
    out["genus"] = nullptr;
  }
  out["normalized"] = rational_to_string(normalized);
  emit(out);
  return 0;
}

// ----- ym2 ---------------------------------------------------------------

struct Ym2CommonArgs {
  std::string geometry;
  std::optional<int> m;
  std::optional<int> n;
};

GeometryTemplate resolve_geometry(const Ym2CommonArgs& a) {
  if (!a.geometry.empty()) {
    if (a.m || a.n)
      throw std::invalid_argument("ym2: give either --geometry or --m/--n, not both");
    return geometry_by_name(a.geometry);
  }
  if (!a.m || !a.n)
    throw std::invalid_argument("ym2: need --geometry or both --m and --n");
  if (*a.m < 0 || *a.n < 0)
    throw std::invalid_argument("ym2: --m and --n must be nonnegative");
  GeometryTemplate custom;
  custom.name = "surface(m=" + std::to_string(*a.m) + ",n=" + std::to_string(*a.n) + ")";
  custom.holes = *a.m;
  custom.handles = *a.n;
  custom.class_boundaries = *a.m;
  custom.level_boundaries = 0;
  custom.monotone_tail = false;
  custom.genus_labelled = false;
  custom.z_hbar = *a.m + 2 * *a.n - 2;
  return custom;
}

struct Ym2MicroArgs {
  Ym2CommonArgs common;
  int d = 0;
  int N = 0;
  int t_order = 4;
  bool numeric = false;
  std::string t;
  unsigned prec = 128;
  int digits = 30;
};

std::string mpfr_text(mpfr_t x, int digits) {
  char buffer[512];
  mpfr_snprintf(buffer, sizeof(buffer), "%.*Re", digits, x);
  return std::string(buffer);
}

int run_ym2_micro(const Ym2MicroArgs& a) {
  const GeometryTemplate geom = resolve_geometry(a.common);
  const MicroResult res = microchiral_direct(geom, a.d, a.N, a.t_order);
  json out;
  out["geometry"] = geom.name;
  out["holes"] = geom.holes;
  out["handles"] = geom.handles;
  out["d"] = a.d;
  out["N"] = a.N;
  out["t_order"] = a.t_order;
  json coeffs = json::array();
  for (const auto& [marker, values] : res.coefficients) {
    json entry;
    json slots = json::array();
    for (const Partition& p : marker.slots) slots.push_back(partition_json(p));
    entry["markers"] = slots;
    json t_coeffs = json::array();
    for (const Rational& c : values) t_coeffs.push_back(rational_to_string(c));
    entry["t"] = t_coeffs;
    coeffs.push_back(entry);
  }
  out["coefficients"] = coeffs;

  if (a.numeric) {
    if (a.t.empty())
      throw std::invalid_argument("ym2 micro: numeric mode needs an area --t");
    const Rational t = parse_rational(a.t);
    const int chi = 2 - 2 * geom.handles - geom.holes;
    // z = e^{-t/2}; the degree-d stratum weight is z^d N^{chi d} / d! times
    // the spectral sum with e^{-t K_hat / N} per diagram.
    Rational z_exponent = -t * Rational(a.d, 2);
    z_exponent.canonicalize();
    mpfr_t acc, term, expo;
    mpfr_init2(acc, a.prec);
    mpfr_init2(term, a.prec);
    mpfr_init2(expo, a.prec);

    json numeric_out;
    numeric_out["t"] = rational_to_string(t);
    mpfr_set_q(expo, z_exponent.get_mpq_t(), MPFR_RNDN);
    mpfr_exp(expo, expo, MPFR_RNDN);
    numeric_out["z"] = mpfr_text(expo, a.digits);
    numeric_out["precision_bits"] = a.prec;

    Rational prefactor = rat_pow(Rational(Integer(a.N)), chi * a.d) /
                         Rational(factorial(a.d));
    prefactor.canonicalize();

    std::vector<Eigenpacket> packets;
    for (const Partition& lambda : partitions_of(a.d))
      if (lambda.length() <= a.N) packets.push_back(eigenpacket(lambda));

    json values = json::array();
    for (const auto& [marker, unused] : res.coefficients) {
      (void)unused;
      mpfr_set_zero(acc, 1);
      for (const Eigenpacket& pack : packets) {
        Rational w(pack.dim * pack.dim, factorial(a.d));
        w.canonicalize();
        for (int i = 0; i < geom.handles; ++i) w *= pack.h_hat;
        if (chi != 0) w *= rat_pow(pack.omega(Rational(1, a.N)), chi);
        for (const Partition& alpha : marker.slots)
          w *= central_character(alpha, pack.lambda);
        if (w == 0) continue;
        // exp(-t d/2 - t k_hat / N), folding z^d into the same exponential.
        Rational e = z_exponent - t * Rational(pack.k_hat, Integer(a.N));
        e.canonicalize();
        mpfr_set_q(expo, e.get_mpq_t(), MPFR_RNDN);
        mpfr_exp(expo, expo, MPFR_RNDN);
        Rational wp = w * prefactor;
        wp.canonicalize();
        mpfr_set_q(term, wp.get_mpq_t(), MPFR_RNDN);
        mpfr_mul(term, term, expo, MPFR_RNDN);
        mpfr_add(acc, acc, term, MPFR_RNDN);
      }
      json entry;
      json slots = json::array();
      for (const Partition& p : marker.slots) slots.push_back(partition_json(p));
      entry["markers"] = slots;
      entry["value"] = mpfr_text(acc, a.digits);
      values.push_back(entry);
    }
    numeric_out["values"] = values;
    out["numeric"] = numeric_out;
    mpfr_clear(acc);
    mpfr_clear(term);
    mpfr_clear(expo);
    mpfr_free_cache();
  }
  emit(out);
  return 0;
}

struct Ym2SeriesArgs {
  std::string geometry;
  int max_d = 0;
  int t_order = 4;
  int s_order = 4;
  bool connected = false;
};

int run_ym2_series(const Ym2SeriesArgs& a) {
  const GeometryTemplate& geom = geometry_by_name(a.geometry);
  check_degree_guard(a.max_d, 6, "ym2 series");
  const ChiralPair pair = chiral_series(geom, {a.max_d, a.t_order, a.s_order});
  json out;
  out["geometry"] = geom.name;
  out["max_d"] = a.max_d;
  out["t_order"] = a.t_order;
  out["s_order"] = a.s_order;
  out["series"] = a.connected ? "free_energy" : "partition_function";
  out["terms"] =
      series_terms_json(a.connected ? pair.free_energy : pair.partition_function);
  emit(out);
  return 0;
}

struct Ym2GenusArgs {
  std::string geometry;
  int g = 0;
  int max_d = 0;
};

int run_ym2_genus(const Ym2GenusArgs& a) {
  const GeometryTemplate& geom = geometry_by_name(a.geometry);
  check_degree_guard(a.max_d, 6, "ym2 genus");
  const FormalSeries f = genus_free_energy(geom, a.g, a.max_d);
  json out;
  out["geometry"] = geom.name;
  out["genus"] = a.g;
  out["max_d"] = a.max_d;
  out["terms"] = series_terms_json(f);
  emit(out);
  return 0;
}

struct Ym2AreaZeroArgs {
  std::string geometry;
  int max_d = 0;
  int s_order = 4;
};

int run_ym2_area_zero(const Ym2AreaZeroArgs& a) {
  const GeometryTemplate& geom = geometry_by_name(a.geometry);
  check_degree_guard(a.max_d, 6, "ym2 area-zero");
  const FormalSeries w = area_zero(geom, a.max_d, a.s_order);
  json out;
  out["geometry"] = geom.name;
  out["max_d"] = a.max_d;
  out["s_order"] = a.s_order;
  out["terms"] = series_terms_json(w);
  emit(out);
  return 0;
}

// ----- verify ------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  int d = 4;
  int max_r = 5;
};

int run_verify(const VerifyArgs& a) {
  int checks = 0;
  int failures = 0;
  auto record = [&](bool ok) {
    ++checks;
    if (!ok) ++failures;
  };

  if (a.suite == "jm") {
    for (int r = 0; r <= a.max_r; ++r) record(jm_identity_check(a.d, r));
  } else if (a.suite == "geodesics") {
    check_degree_guard(a.d, 6, "verify geodesics");
    for (const Partition& alpha : partitions_of(a.d)) {
      const Permutation rep = class_representative(a.d, alpha);
      record(geodesic_count(identity(a.d), rep) == hurwitz_cayley_formula(alpha));
      record(monotone_geodesic_count(identity(a.d), rep) ==
             catalan_geodesic_formula(alpha));
    }
  } else if (a.suite == "characters") {
    check_degree_guard(a.d, 8, "verify characters");
    const CharacterTable& table = CharacterTable::of(a.d);
    const auto& labels = table.labels();
    const Integer order = factorial(a.d);
    for (std::size_t i = 0; i < labels.size(); ++i)
      for (std::size_t j = i; j < labels.size(); ++j) {
        Integer sum = 0;
        for (std::size_t k = 0; k < labels.size(); ++k)
          sum += class_size(labels[k]) * table.value(static_cast<int>(i), static_cast<int>(k)) *
                 table.value(static_cast<int>(j), static_cast<int>(k));
        record(sum == (i == j ? order : Integer(0)));
      }
  } else if (a.suite == "newton") {
    for (const Partition& lambda : partitions_of(a.d))
      for (int k = 1; k <= 2 * a.d; ++k) {
        Integer sum = 0;
        for (int r = 0; r <= k; ++r) {
          Integer term = level_eigenvalue(lambda, k - r) * monotone_eigenvalue(lambda, r);
          sum += (r % 2 == 0) ? term : -term;
        }
        record(sum == 0);
      }
  } else if (a.suite == "expectations") {
    check_degree_guard(a.d, 5, "verify expectations");
    std::vector<std::vector<Partition>> class_lists = {{}};
    for (const Partition& alpha : partitions_of(a.d)) {
      class_lists.push_back({alpha});
      for (const Partition& beta : partitions_of(a.d))
        class_lists.push_back({alpha, beta});
    }
    for (const auto& classes : class_lists)
      for (int handles = 0; handles <= 1; ++handles)
        for (int r = 0; r <= 2; ++r)
          for (int s = 0; s <= 1; ++s) {
            auto word = ExpectationWord::in_degree(a.d);
            word.with_handles(handles).with_steps(r).with_monotone(s);
            for (const Partition& alpha : classes) word.with_class(alpha);
            record(plancherel(word) == expectation_by_convolution(word));
          }
  } else {
    throw std::invalid_argument("verify: unknown suite '" + a.suite +
                                "' (jm, geodesics, characters, newton, expectations)");
  }

  json out;
  out["suite"] = a.suite;
  out["d"] = a.d;
  out["checks"] = checks;
  out["failures"] = failures;
  out["status"] = failures == 0 ? "pass" : "fail";
  emit(out);
  return failures == 0 ? 0 : kExitVerifyFailed;
}

// ----- export-graph ------------------------------------------------------

struct ExportGraphArgs {
  int d = 0;
  std::string format = "dot";
};

int run_export_graph(const ExportGraphArgs& a) {
  check_degree_guard(a.d, 6, "export-graph");
  std::vector<Permutation> nodes;
  for_each_permutation(a.d, [&](const Permutation& p) { nodes.push_back(p); });
  struct Edge {
    std::uint64_t from, to;
    int label;
  };
  std::vector<Edge> edges;
  for (const Permutation& p : nodes) {
    const std::uint64_t pr = lehmer_rank(p);
    for (const Transposition& t : all_transpositions(a.d)) {
      const Permutation q = compose(p, transposition_perm(a.d, t.i, t.j));
      const std::uint64_t qr = lehmer_rank(q);
      if (qr > pr) edges.push_back({pr, qr, t.label()});
    }
  }
  if (a.format == "dot") {
    std::cout << "graph \"hurwitz-cayley-" << a.d << "\" {\n";
    for (const Permutation& p : nodes)
      std::cout << "  \"" << to_one_line_string(p) << "\";\n";
    for (const Edge& e : edges)
      std::cout << "  \"" << to_one_line_string(lehmer_unrank(a.d, e.from)) << "\" -- \""
                << to_one_line_string(lehmer_unrank(a.d, e.to)) << "\" [label=" << e.label
                << "];\n";
    std::cout << "}\n";
    return 0;
  }
  if (a.format != "json")
    throw std::invalid_argument("export-graph: format must be dot or json");
  json out;
  out["d"] = a.d;
  json node_arr = json::array();
  for (const Permutation& p : nodes) node_arr.push_back(to_one_line_string(p));
  out["nodes"] = node_arr;
  json edge_arr = json::array();
  for (const Edge& e : edges) {
    json edge;
    edge["from"] = to_one_line_string(lehmer_unrank(a.d, e.from));
    edge["to"] = to_one_line_string(lehmer_unrank(a.d, e.to));
    edge["label"] = e.label;
    edge_arr.push_back(edge);
  }
  out["edges"] = edge_arr;
  emit(out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact walk counts, spectra, and 2D Yang-Mills series on the "
               "transposition Cayley graph of the symmetric group"};
  app.require_subcommand(1);

  WalksArgs walks_args;
  CLI::App* walks = app.add_subcommand("walks", "Count label-constrained transposition walks");
  walks->add_option("--d", walks_args.d, "Degree of the symmetric group")->required();
  walks->add_option("--from", walks_args.from, "Start permutation (one-line, cycles, or id)");
  walks->add_option("--to", walks_args.to, "End permutation");
  walks->add_option("--r", walks_args.r, "Number of steps")->required();
  walks->add_option("--mode", walks_args.mode,
                    "unrestricted | strict | weak | strict-decreasing | weak-decreasing");

  GeodesicsArgs geodesics_args;
  CLI::App* geodesics = app.add_subcommand("geodesics", "Count minimal walks and closed forms");
  geodesics->add_option("--d", geodesics_args.d, "Degree")->required();
  geodesics->add_option("--alpha", geodesics_args.alpha, "Cycle type, e.g. [3,1]");
  geodesics->add_option("--from", geodesics_args.from, "Start permutation");
  geodesics->add_option("--to", geodesics_args.to, "End permutation");

  CharTableArgs char_args;
  CLI::App* char_table = app.add_subcommand("char-table", "Emit the character table of S_d");
  char_table->add_option("--d", char_args.d, "Degree")->required();
  char_table->add_option("--format", char_args.format, "json | csv");

  EigenArgs eigen_args;
  CLI::App* eigen = app.add_subcommand("eigen", "Spectral data of one irreducible");
  eigen->add_option("--d", eigen_args.d, "Degree")->required();
  eigen->add_option("--lambda", eigen_args.lambda, "Diagram, e.g. [2,1]")->required();
  eigen->add_option("--q", eigen_args.q, "Evaluate the distance-operator eigenvalue at q");
  eigen->add_option("--N", eigen_args.N, "Also report the U(N) Casimir");

  PlancherelArgs plancherel_args;
  CLI::App* plancherel_cmd =
      app.add_subcommand("plancherel", "Expectation of a word of commuting class operators");
  plancherel_cmd->add_option("--d", plancherel_args.d, "Degree")->required();
  plancherel_cmd->add_option("--class", plancherel_args.classes,
                             "Boundary class partition (repeatable)");
  plancherel_cmd->add_option("--handles", plancherel_args.handles, "Power of the commutator sum");
  plancherel_cmd->add_option("--r", plancherel_args.r, "Adjacency steps");
  plancherel_cmd->add_option("--s", plancherel_args.s, "Weakly monotone steps");
  plancherel_cmd->add_option("--level", plancherel_args.levels, "Level factor (repeatable)");
  plancherel_cmd->add_option("--rows", plancherel_args.rows,
                             "Row bound on diagrams (default: unbounded)");

  HurwitzArgs hurwitz_args;
  CLI::App* hurwitz = app.add_subcommand("hurwitz", "Named Hurwitz numbers by geometry");
  hurwitz->add_option("--geometry", hurwitz_args.geometry,
                      "cylinder | torus | sphere | disc | pair-of-pants | one-holed-torus")
      ->required();
  hurwitz->add_option("--d", hurwitz_args.d, "Degree")->required();
  hurwitz->add_option("--alpha", hurwitz_args.alpha, "First boundary class");
  hurwitz->add_option("--beta", hurwitz_args.beta, "Second boundary class");
  hurwitz->add_option("--gamma", hurwitz_args.gamma, "Third boundary class");
  hurwitz->add_option("--a", hurwitz_args.a, "First level");
  hurwitz->add_option("--b", hurwitz_args.b, "Second level");
  hurwitz->add_option("--r", hurwitz_args.r, "Adjacency steps");
  hurwitz->add_option("--s", hurwitz_args.s, "Weakly monotone steps");
  hurwitz->add_flag("--connected", hurwitz_args.connected, "Count transitive tuples only");

  CLI::App* ym2 = app.add_subcommand("ym2", "2D Yang-Mills partition functions");
  ym2->require_subcommand(1);

  Ym2MicroArgs micro_args;
  CLI::App* micro = ym2->add_subcommand("micro", "Degree-d stratum at numeric N");
  micro->add_option("--geometry", micro_args.common.geometry, "Named surface template");
  micro->add_option("--m", micro_args.common.m, "Number of boundary circles");
  micro->add_option("--n", micro_args.common.n, "Number of handles");
  micro->add_option("--d", micro_args.d, "Degree")->required();
  micro->add_option("--N", micro_args.N, "Rank of the gauge group")->required();
  micro->add_option("--t-order", micro_args.t_order, "Truncation order in the area t");
  micro->add_flag("--numeric", micro_args.numeric, "Also evaluate at a numeric area");
  micro->add_option("--t", micro_args.t, "Area (rational) for numeric mode; z = e^{-t/2}");
  micro->add_option("--prec", micro_args.prec, "Float precision in bits");
  micro->add_option("--digits", micro_args.digits, "Printed significant digits");

  Ym2SeriesArgs series_args;
  CLI::App* series = ym2->add_subcommand("series", "Chiral series Z and F = log Z");
  series->add_option("--geometry", series_args.geometry, "Named surface template")->required();
  series->add_option("--max-d", series_args.max_d, "Degree truncation")->required();
  series->add_option("--t-order", series_args.t_order, "Step truncation");
  series->add_option("--s-order", series_args.s_order, "Monotone-tail truncation");
  series->add_flag("--connected", series_args.connected, "Emit F = log Z instead of Z");

  Ym2GenusArgs genus_args;
  CLI::App* genus = ym2->add_subcommand("genus", "Genus-g connected series");
  genus->add_option("--geometry", genus_args.geometry, "Named surface template")->required();
  genus->add_option("--g", genus_args.g, "Genus")->required();
  genus->add_option("--max-d", genus_args.max_d, "Degree truncation")->required();

  Ym2AreaZeroArgs area_args;
  CLI::App* area_zero_cmd = ym2->add_subcommand("area-zero", "t = 0 specialization");
  area_zero_cmd->add_option("--geometry", area_args.geometry, "Named surface template")
      ->required();
  area_zero_cmd->add_option("--max-d", area_args.max_d, "Degree truncation")->required();
  area_zero_cmd->add_option("--s-order", area_args.s_order, "Monotone-tail truncation");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "Run a named invariant suite");
  verify->add_option("suite", verify_args.suite,
                     "jm | geodesics | characters | newton | expectations")
      ->required();
  verify->add_option("--d", verify_args.d, "Degree");
  verify->add_option("--max-r", verify_args.max_r, "Largest operator degree (jm suite)");

  ExportGraphArgs export_args;
  CLI::App* export_graph =
      app.add_subcommand("export-graph", "Emit the labeled transposition Cayley graph");
  export_graph->add_option("--d", export_args.d, "Degree")->required();
  export_graph->add_option("--format", export_args.format, "dot | json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitParse;
  }

  try {
    if (app.got_subcommand(walks)) return run_walks(walks_args);
    if (app.got_subcommand(geodesics)) return run_geodesics(geodesics_args);
    if (app.got_subcommand(char_table)) return run_char_table(char_args);
    if (app.got_subcommand(eigen)) return run_eigen(eigen_args);
    if (app.got_subcommand(plancherel_cmd)) return run_plancherel(plancherel_args);
    if (app.got_subcommand(hurwitz)) return run_hurwitz(hurwitz_args);
    if (app.got_subcommand(ym2)) {
      if (ym2->got_subcommand(micro)) return run_ym2_micro(micro_args);
      if (ym2->got_subcommand(series)) return run_ym2_series(series_args);
      if (ym2->got_subcommand(genus)) return run_ym2_genus(genus_args);
      if (ym2->got_subcommand(area_zero_cmd)) return run_ym2_area_zero(area_args);
    }
    if (app.got_subcommand(verify)) return run_verify(verify_args);
    if (app.got_subcommand(export_graph)) return run_export_graph(export_args);
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return kExitResource;
  } catch (const SingularMatrixError& e) {
    std::cerr << "singular operator: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  std::cerr << "no subcommand\n";
  return kExitParse;
}
