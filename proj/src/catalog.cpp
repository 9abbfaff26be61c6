#include "grouptool/catalog.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "grouptool/errors.hpp"
#include "grouptool/numeric.hpp"

namespace grouptool {
namespace catalog {

namespace {

GroupPtr from_perm_gens(std::vector<Perm> gens, const std::string& name) {
  return Group::from_generators(gens, name, "catalog:" + name);
}

Perm rotation(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = (i + 1) % n;
  return p;
}

}  // namespace

GroupPtr cyclic(int n) {
  if (n < 1) fail(ErrorCode::InvalidParams, "cyclic order must be >= 1");
  std::string name = "C" + std::to_string(n);
  if (n == 1) return from_perm_gens({}, name);
  if (n <= 64) return from_perm_gens({rotation(n)}, name);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = "g^" + std::to_string(i);
  return Group::from_mult(
      n, [n](int a, int b) { return (a + b) % n; }, name, std::move(labels),
      "catalog:" + name);
}

GroupPtr dihedral(int order) {
  if (order < 2 || order % 2 != 0)
    fail(ErrorCode::InvalidParams, "dihedral order must be even and >= 2");
  int n = order / 2;
  std::string name = "D" + std::to_string(order);
  if (n == 1) return from_perm_gens({{1, 0}}, name);
  if (n == 2) return from_perm_gens({{1, 0, 2, 3}, {0, 1, 3, 2}}, name);
  if (n > 64) fail(ErrorCode::InvalidParams, "dihedral recipe capped at 128 points");
  Perm refl(n);
  for (int i = 0; i < n; ++i) refl[i] = n - 1 - i;
  return from_perm_gens({rotation(n), refl}, name);
}

GroupPtr symmetric(int k) {
  if (k < 1 || k > 6)
    fail(ErrorCode::InvalidParams, "symmetric recipe supports 1 <= k <= 6");
  std::string name = "S" + std::to_string(k);
  if (k == 1) return from_perm_gens({}, name);
  Perm swap = perm_identity(k);
  swap[0] = 1;
  swap[1] = 0;
  if (k == 2) return from_perm_gens({swap}, name);
  return from_perm_gens({rotation(k), swap}, name);
}

GroupPtr alternating(int k) {
  if (k < 1 || k > 6)
    fail(ErrorCode::InvalidParams, "alternating recipe supports 1 <= k <= 6");
  std::string name = "A" + std::to_string(k);
  if (k <= 2) return from_perm_gens({}, name);
  // Consecutive 3-cycles generate A_k.
  std::vector<Perm> gens;
  for (int i = 0; i + 2 < k; ++i) {
    Perm p = perm_identity(k);
    p[i] = i + 1;
    p[i + 1] = i + 2;
    p[i + 2] = i;
    gens.push_back(std::move(p));
  }
  return from_perm_gens(gens, name);
}

GroupPtr generalized_quaternion(int order) {
  int t = 0, v = order;
  while (v > 1 && v % 2 == 0) {
    v /= 2;
    ++t;
  }
  if (v != 1 || t < 3)
    fail(ErrorCode::InvalidParams,
         "generalized quaternion order must be 2^t with t >= 3");
  // a^(h) = 1, b^2 = a^(h/2), b a b^-1 = a^-1, elements a^i b^j with h = order/2.
  const int h = order / 2;
  std::vector<std::string> labels(order);
  for (int i = 0; i < h; ++i) {
    std::string ai = i == 0 ? "" : (i == 1 ? "a" : "a^" + std::to_string(i));
    labels[i] = ai.empty() ? "1" : ai;
    labels[i + h] = ai.empty() ? "b" : ai + "*b";
  }
  auto mult = [h](int x, int y) {
    int i = x % h, j = x / h, k = y % h, l = y / h;
    if (j == 0) return ((i + k) % h) + h * l;
    if (l == 0) return ((i - k + h) % h) + h;
    return (i - k + h / 2 + 2 * h) % h;  // b^2 = a^(h/2)
  };
  std::string name = "Q" + std::to_string(order);
  return Group::from_mult(order, mult, name, std::move(labels), "catalog:" + name);
}

GroupPtr klein() {
  return from_perm_gens({{1, 0, 2, 3}, {0, 1, 3, 2}}, "V4");
}

GroupPtr frobenius_metacyclic(int p, int q) {
  if (p < 2 || !is_prime_power(p) || factorize(p)[0].second != 1)
    fail(ErrorCode::InvalidParams, "p must be prime");
  if (q < 2 || (p - 1) % q != 0)
    fail(ErrorCode::InvalidParams, "q must divide p-1 and be >= 2");
  int u = 0;
  for (int c = 2; c < p; ++c) {
    int t = c % p, o = 1;
    while (t != 1) {
      t = static_cast<int>((static_cast<long long>(t) * c) % p);
      ++o;
    }
    if (o == q) {
      u = c;
      break;
    }
  }
  if (u == 0) fail(ErrorCode::InternalInconsistency, "no element of order q mod p");
  // Elements are affine maps x -> u^j x + b on Z_p, id = j*p + b.
  const int n = p * q;
  std::vector<int> uj(q);
  uj[0] = 1;
  for (int j = 1; j < q; ++j)
    uj[j] = static_cast<int>((static_cast<long long>(uj[j - 1]) * u) % p);
  std::vector<int> jof(p, -1);
  for (int j = 0; j < q; ++j) jof[uj[j]] = j;
  std::vector<std::string> labels(n);
  for (int j = 0; j < q; ++j)
    for (int b = 0; b < p; ++b) {
      std::ostringstream os;
      os << "x->";
      if (uj[j] != 1) os << uj[j];
      os << "x";
      if (b != 0) os << "+" << b;
      labels[j * p + b] = os.str();
    }
  auto mult = [p, uj, jof](int a, int b) {
    int j1 = a / p, b1 = a % p, j2 = b / p, b2 = b % p;
    // apply (u1,b1) then (u2,b2): x -> u2(u1 x + b1) + b2
    int uu = static_cast<int>((static_cast<long long>(uj[j1]) * uj[j2]) % p);
    int bb = static_cast<int>((static_cast<long long>(uj[j2]) * b1 + b2) % p);
    return jof[uu] * p + bb;
  };
  std::string name = "F" + std::to_string(n);
  return Group::from_mult(n, mult, name, std::move(labels), "catalog:" + name);
}

GroupPtr from_cycles(const std::string& text, const std::string& name) {
  ParsedGenerators pg = parse_cycle_notation(text);
  std::string nm = name.empty() ? "<gens>" : name;
  return Group::from_generators(pg.generators, nm, "gens:" + text);
}

namespace {

GroupPtr build_term(const std::string& term) {
  if (term == "V4" || term == "klein") return klein();
  if (term.size() < 2) fail(ErrorCode::UnknownName, "unknown group name: " + term);
  char kind = term[0];
  int num = 0;
  for (std::size_t i = 1; i < term.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(term[i])))
      fail(ErrorCode::UnknownName, "unknown group name: " + term);
    num = num * 10 + (term[i] - '0');
  }
  switch (kind) {
    case 'C': return cyclic(num);
    case 'D': return dihedral(num);
    case 'S': return symmetric(num);
    case 'A': return alternating(num);
    case 'Q': return generalized_quaternion(num);
    case 'F': {
      // F<pq>: take the largest prime factor as p.
      auto f = factorize(num);
      int p = f.empty() ? 0 : f.back().first;
      if (p < 3 || num % p != 0 || (p - 1) % (num / p) != 0 || num / p < 2)
        fail(ErrorCode::UnknownName,
             "no metacyclic Frobenius recipe of order " + std::to_string(num));
      return frobenius_metacyclic(p, num / p);
    }
    default: fail(ErrorCode::UnknownName, "unknown group name: " + term);
  }
}

}  // namespace

GroupPtr build(const std::string& name) {
  if (name.empty()) fail(ErrorCode::UnknownName, "empty group name");
  std::vector<std::string> terms;
  std::string cur;
  for (char c : name) {
    if (c == 'x') {
      terms.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  terms.push_back(cur);
  GroupPtr g = build_term(terms[0]);
  for (std::size_t i = 1; i < terms.size(); ++i)
    g = Group::direct_product(g, build_term(terms[i]));
  return g;
}

GroupPtr load_cayley_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::IoError, "cannot open " + path);
  std::vector<std::vector<int>> table;
  std::string line;
  int row = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<int> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      std::size_t b = cell.find_first_not_of(" \t");
      std::size_t e = cell.find_last_not_of(" \t");
      if (b == std::string::npos)
        fail(ErrorCode::ParseError, "row " + std::to_string(row) + ": empty cell");
      try {
        std::size_t used = 0;
        int v = std::stoi(cell.substr(b, e - b + 1), &used);
        if (used != e - b + 1) throw std::invalid_argument("trailing");
        cells.push_back(v);
      } catch (const std::exception&) {
        fail(ErrorCode::ParseError,
             "row " + std::to_string(row) + ": not an integer: " + cell);
      }
    }
    table.push_back(std::move(cells));
    ++row;
  }
  if (table.empty()) fail(ErrorCode::ParseError, "empty table file");
  std::string name = path;
  std::size_t slash = name.find_last_of("/\\");
  if (slash != std::string::npos) name = name.substr(slash + 1);
  std::size_t dot = name.find_last_of('.');
  if (dot != std::string::npos && dot > 0) name = name.substr(0, dot);
  return Group::from_cayley_table(table, name, {}, "cayley:" + path);
}

const std::vector<CatalogEntry>& entries() {
  static const std::vector<CatalogEntry> kEntries = {
      {"C1", 1},      {"C2", 2},      {"C3", 3},      {"C4", 4},
      {"V4", 4},      {"C5", 5},      {"C6", 6},      {"S3", 6},
      {"C7", 7},      {"C8", 8},      {"Q8", 8},      {"D8", 8},
      {"C9", 9},      {"C3xC3", 9},   {"C10", 10},    {"D10", 10},
      {"C12", 12},    {"A4", 12},     {"D12", 12},    {"C14", 14},
      {"D14", 14},    {"C15", 15},    {"C16", 16},    {"Q16", 16},
      {"D16", 16},    {"C18", 18},    {"D18", 18},    {"C3xS3", 18},
      {"C20", 20},    {"F20", 20},    {"D20", 20},    {"C21", 21},
      {"F21", 21},    {"C24", 24},    {"S4", 24},     {"C2xA4", 24},
      {"D24", 24},    {"C30", 30},    {"C5xS3", 30},  {"Q32", 32},
      {"S3xS3", 36},  {"F42", 42},    {"C2xS4", 48},  {"F55", 55},
      {"A5", 60, true}, {"S5", 120},  {"A6", 360, true}, {"S6", 720},
  };
  return kEntries;
}

std::vector<CatalogEntry> standard_corpus(int max_order) {
  std::vector<CatalogEntry> out;
  for (const auto& e : entries())
    if (e.order <= max_order) out.push_back(e);
  return out;
}

}  // namespace catalog
}  // namespace grouptool
