#include "grouptool/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "grouptool/errors.hpp"

namespace grouptool {

Perm perm_identity(int degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm perm_compose(const Perm& first, const Perm& then) {
  Perm out(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) out[i] = then[first[i]];
  return out;
}

Perm perm_inverse(const Perm& p) {
  Perm out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = static_cast<int>(i);
  return out;
}

bool perm_is_valid(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

int perm_order(const Perm& p) {
  std::vector<char> done(p.size(), 0);
  long long ord = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (done[i]) continue;
    int len = 0;
    for (int j = static_cast<int>(i); !done[j]; j = p[j]) {
      done[j] = 1;
      ++len;
    }
    ord = std::lcm(ord, static_cast<long long>(len));
  }
  return static_cast<int>(ord);
}

Perm perm_extend(const Perm& p, int degree) {
  Perm out = p;
  for (int i = static_cast<int>(p.size()); i < degree; ++i) out.push_back(i);
  return out;
}

std::string cycle_notation(const Perm& p) {
  std::vector<char> done(p.size(), 0);
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (done[i] || p[i] == static_cast<int>(i)) continue;
    any = true;
    os << '(';
    bool first = true;
    for (int j = static_cast<int>(i); !done[j]; j = p[j]) {
      done[j] = 1;
      if (!first) os << ' ';
      os << (j + 1);
      first = false;
    }
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

namespace {

struct Scanner {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  [[noreturn]] void error(const std::string& what) {
    fail(ErrorCode::SyntaxError,
         "cycle notation: " + what + " at position " + std::to_string(pos));
  }
  int read_int() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) error("expected integer");
    long v = std::stol(text.substr(start, pos - start));
    if (v < 1 || v > 64) {
      pos = start;
      error("point out of range 1..64");
    }
    return static_cast<int>(v);
  }
};

}  // namespace

ParsedGenerators parse_cycle_notation(const std::string& text) {
  Scanner sc{text};
  std::vector<std::vector<std::vector<int>>> gens;  // generator -> cycles -> 1-based points
  int degree = 1;

  while (true) {
    // one generator: '(' ... ')' one or more times
    std::vector<std::vector<int>> cycles;
    std::set<int> used;
    if (sc.peek() != '(') sc.error("expected '('");
    while (sc.peek() == '(') {
      ++sc.pos;
      std::vector<int> cyc;
      while (sc.peek() != ')') {
        if (sc.at_end()) sc.error("unterminated cycle");
        int pt = sc.read_int();
        if (used.count(pt))
          fail(ErrorCode::RepeatedPointInCycle,
               "cycle notation: point " + std::to_string(pt) +
                   " appears twice in one generator");
        used.insert(pt);
        degree = std::max(degree, pt);
        cyc.push_back(pt);
      }
      ++sc.pos;  // ')'
      if (!cyc.empty()) cycles.push_back(std::move(cyc));
    }
    gens.push_back(std::move(cycles));
    if (sc.at_end()) break;
    if (sc.peek() != ',') sc.error("expected ',' or end of input");
    ++sc.pos;
    if (sc.at_end()) sc.error("trailing ','");
  }

  ParsedGenerators out;
  out.degree = degree;
  for (const auto& cycles : gens) {
    Perm p = perm_identity(degree);
    for (const auto& cyc : cycles) {
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        p[cyc[i] - 1] = cyc[(i + 1) % cyc.size()] - 1;
      }
    }
    out.generators.push_back(std::move(p));
  }
  return out;
}

}  // namespace grouptool
