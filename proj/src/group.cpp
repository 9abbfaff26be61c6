#include "grouptool/group.hpp"

#include <algorithm>
#include <random>

#include "grouptool/errors.hpp"
#include "grouptool/numeric.hpp"

namespace grouptool {

namespace {

// Deterministic triple sampling keeps big-group validation affordable.
void check_assoc_sampled(const Group& g, long long samples) {
  std::mt19937 rng(0xC0FFEE);
  std::uniform_int_distribution<int> pick(0, g.order() - 1);
  for (long long i = 0; i < samples; ++i) {
    int a = pick(rng), b = pick(rng), c = pick(rng);
    if (g.mult(g.mult(a, b), c) != g.mult(a, g.mult(b, c)))
      fail(ErrorCode::NotAssociative,
           "associativity fails at (" + std::to_string(a) + "," +
               std::to_string(b) + "," + std::to_string(c) + ")");
  }
}

}  // namespace

int Group::power(int a, long long k) const {
  int o = orders_[a];
  k %= o;
  if (k < 0) k += o;
  int acc = identity_;
  int base = a;
  while (k > 0) {
    if (k & 1) acc = mult(acc, base);
    base = mult(base, base);
    k >>= 1;
  }
  return acc;
}

void Group::compute_inverses() {
  inv_.assign(order_, -1);
  if (!perms_.empty()) {
    for (int a = 0; a < order_; ++a) inv_[a] = index_.at(perm_inverse(perms_[a]));
    return;
  }
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) {
      if (mult(a, b) == identity_) {
        if (mult(b, a) != identity_)
          fail(ErrorCode::MissingInverse,
               "element " + std::to_string(a) + " has no two-sided inverse");
        inv_[a] = b;
        break;
      }
    }
    if (inv_[a] < 0)
      fail(ErrorCode::MissingInverse,
           "element " + std::to_string(a) + " has no inverse");
  }
}

void Group::compute_orders() {
  orders_.assign(order_, 1);
  if (!perms_.empty()) {
    for (int a = 0; a < order_; ++a) orders_[a] = perm_order(perms_[a]);
  } else {
    for (int a = 0; a < order_; ++a) {
      int t = a, o = 1;
      while (t != identity_) {
        t = mult(t, a);
        ++o;
      }
      orders_[a] = o;
    }
  }
  long long e = 1;
  for (int o : orders_) e = std::lcm(e, static_cast<long long>(o));
  exponent_ = static_cast<int>(e);
}

// Latin-square and identity checks must run before compute_orders: with a
// repeated column the order loop t -> t*a can cycle without ever reaching the
// identity.
void Group::validate_shape() const {
  const int n = order_;
  if (table_.empty()) return;
  std::vector<char> seen(n);
  for (int a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n; ++b) {
      int v = table_[static_cast<std::size_t>(a) * n + b];
      if (v < 0 || v >= n || seen[v])
        fail(ErrorCode::NotLatinSquare, "row " + std::to_string(a) + " is not a permutation");
      seen[v] = 1;
    }
  }
  for (int b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int a = 0; a < n; ++a) {
      int v = table_[static_cast<std::size_t>(a) * n + b];
      if (seen[v])
        fail(ErrorCode::NotLatinSquare, "column " + std::to_string(b) + " is not a permutation");
      seen[v] = 1;
    }
  }
  for (int a = 0; a < n; ++a) {
    if (mult(identity_, a) != a || mult(a, identity_) != a)
      fail(ErrorCode::NoIdentity, "no two-sided identity element");
  }
}

void Group::validate_assoc(bool trusted) const {
  const int n = order_;
  if (table_.empty()) {
    // Permutation backing: closure gave a latin square by construction;
    // just sample associativity as a cross-check on the index.
    check_assoc_sampled(*this, std::min<long long>(10000, 10LL * n * n));
    return;
  }
  if (!trusted && n <= limits::kExhaustiveAssocMax) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int ab = mult(a, b);
        for (int c = 0; c < n; ++c) {
          if (mult(ab, c) != mult(a, mult(b, c)))
            fail(ErrorCode::NotAssociative,
                 "associativity fails at (" + std::to_string(a) + "," +
                     std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
  } else {
    long long budget = trusted ? std::min<long long>(10000, 10LL * n * n)
                               : 10LL * n * n;
    check_assoc_sampled(*this, budget);
  }
}

void Group::finish(bool trusted) {
  if (!trusted) validate_shape();
  compute_inverses();
  compute_orders();
  validate_assoc(trusted);
  if (labels_.empty()) {
    labels_.resize(order_);
    if (!perms_.empty()) {
      for (int a = 0; a < order_; ++a) labels_[a] = cycle_notation(perms_[a]);
    } else {
      for (int a = 0; a < order_; ++a) labels_[a] = std::to_string(a);
    }
  }
}

GroupPtr Group::from_cayley_table(const std::vector<std::vector<int>>& table,
                                  std::string name,
                                  std::vector<std::string> labels,
                                  std::string source) {
  const int n = static_cast<int>(table.size());
  if (n == 0) fail(ErrorCode::ParseError, "empty table");
  if (n > limits::kDenseTableMax)
    fail(ErrorCode::CapExceeded, "table order " + std::to_string(n) +
                                     " exceeds dense bound " +
                                     std::to_string(limits::kDenseTableMax));
  auto g = std::shared_ptr<Group>(new Group());
  g->order_ = n;
  g->table_.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      fail(ErrorCode::ParseError, "row " + std::to_string(i) + " has " +
                                      std::to_string(table[i].size()) +
                                      " entries, expected " + std::to_string(n));
    for (int j = 0; j < n; ++j) {
      int v = table[i][j];
      if (v < 0 || v >= n)
        fail(ErrorCode::NotLatinSquare,
             "entry out of range at row " + std::to_string(i));
      g->table_[static_cast<std::size_t>(i) * n + j] = v;
    }
  }
  // Locate the identity before finish() needs it.
  int id = -1;
  for (int e = 0; e < n && id < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      ok = g->table_[static_cast<std::size_t>(e) * n + a] == a &&
           g->table_[static_cast<std::size_t>(a) * n + e] == a;
    if (ok) id = e;
  }
  if (id < 0) fail(ErrorCode::NoIdentity, "no two-sided identity element");
  g->identity_ = id;
  g->name_ = std::move(name);
  g->source_ = source.empty() ? "table:" + g->name_ : std::move(source);
  g->labels_ = std::move(labels);
  if (!g->labels_.empty() && static_cast<int>(g->labels_.size()) != n)
    fail(ErrorCode::InvalidParams, "label count does not match order");
  g->finish(/*trusted=*/false);
  return g;
}

GroupPtr Group::from_mult(int order, const std::function<int(int, int)>& mult,
                          std::string name, std::vector<std::string> labels,
                          std::string source) {
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) table[i][j] = mult(i, j);
  return from_cayley_table(table, std::move(name), std::move(labels),
                           std::move(source));
}

GroupPtr Group::from_generators(const std::vector<Perm>& gens, std::string name,
                                std::string source, int cap) {
  int degree = 1;
  for (const auto& p : gens) degree = std::max(degree, static_cast<int>(p.size()));
  if (degree > 64)
    fail(ErrorCode::InvalidPermutation,
         "degree " + std::to_string(degree) + " exceeds 64");
  std::vector<Perm> norm;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    Perm p = perm_extend(gens[i], degree);
    if (!perm_is_valid(p))
      fail(ErrorCode::InvalidPermutation,
           "generator " + std::to_string(i) + " is not a bijection");
    norm.push_back(std::move(p));
  }

  auto g = std::shared_ptr<Group>(new Group());
  g->perms_.push_back(perm_identity(degree));
  g->index_.emplace(g->perms_[0], 0);
  for (std::size_t i = 0; i < g->perms_.size(); ++i) {
    Perm cur = g->perms_[i];  // copy: vector may reallocate
    for (const auto& gen : norm) {
      Perm nxt = perm_compose(cur, gen);
      if (g->index_.emplace(nxt, static_cast<int>(g->perms_.size())).second) {
        g->perms_.push_back(std::move(nxt));
        if (static_cast<int>(g->perms_.size()) > cap)
          fail(ErrorCode::CapExceeded,
               "closure exceeds cap " + std::to_string(cap));
      }
    }
  }
  g->order_ = static_cast<int>(g->perms_.size());
  g->identity_ = 0;
  if (g->order_ <= limits::kDenseTableMax) {
    g->table_.resize(static_cast<std::size_t>(g->order_) * g->order_);
    for (int a = 0; a < g->order_; ++a)
      for (int b = 0; b < g->order_; ++b)
        g->table_[static_cast<std::size_t>(a) * g->order_ + b] =
            g->index_.at(perm_compose(g->perms_[a], g->perms_[b]));
  }
  g->name_ = std::move(name);
  g->source_ = source.empty() ? "gens:" + g->name_ : std::move(source);
  g->finish(/*trusted=*/true);
  return g;
}

GroupPtr Group::direct_product(const GroupPtr& a, const GroupPtr& b) {
  long long n = static_cast<long long>(a->order()) * b->order();
  if (n > limits::kEnumerationCap)
    fail(ErrorCode::CapExceeded, "product order " + std::to_string(n) +
                                     " exceeds cap " +
                                     std::to_string(limits::kEnumerationCap));
  std::string name = a->name() + "x" + b->name();
  std::string source = "product:" + a->source() + "|" + b->source();
  if (n <= limits::kDenseTableMax) {
    const int nb = b->order();
    std::vector<int> flat(static_cast<std::size_t>(n) * n);
    std::vector<std::string> labels(n);
    for (int i = 0; i < a->order(); ++i)
      for (int j = 0; j < nb; ++j)
        labels[i * nb + j] = "(" + a->label(i) + "," + b->label(j) + ")";
    for (int i1 = 0; i1 < a->order(); ++i1)
      for (int j1 = 0; j1 < nb; ++j1) {
        std::size_t row = static_cast<std::size_t>(i1 * nb + j1) * n;
        for (int i2 = 0; i2 < a->order(); ++i2)
          for (int j2 = 0; j2 < nb; ++j2)
            flat[row + i2 * nb + j2] = a->mult(i1, i2) * nb + b->mult(j1, j2);
      }
    auto g = from_trusted_table(std::move(flat), static_cast<int>(n),
                                std::move(name), std::move(labels),
                                std::move(source));
    // identity position: table identity search already done in trusted path
    return g;
  }
  if (!a->has_permutations() || !b->has_permutations())
    fail(ErrorCode::CapExceeded,
         "product order " + std::to_string(n) +
             " exceeds the dense bound and the factors carry no permutations");
  int da = static_cast<int>(a->permutation(0).size());
  int db = static_cast<int>(b->permutation(0).size());
  if (da + db > 64)
    fail(ErrorCode::InvalidPermutation, "combined degree exceeds 64");
  std::vector<Perm> perms;
  perms.reserve(n);
  for (int i = 0; i < a->order(); ++i)
    for (int j = 0; j < b->order(); ++j) {
      Perm p(da + db);
      const Perm& pa = a->permutation(i);
      const Perm& pb = b->permutation(j);
      for (int t = 0; t < da; ++t) p[t] = pa[t];
      for (int t = 0; t < db; ++t) p[da + t] = da + pb[t];
      perms.push_back(std::move(p));
    }
  return from_trusted_perms(std::move(perms), std::move(name), std::move(source));
}

GroupPtr Group::from_trusted_table(std::vector<int> flat_table, int order,
                                   std::string name,
                                   std::vector<std::string> labels,
                                   std::string source) {
  auto g = std::shared_ptr<Group>(new Group());
  g->order_ = order;
  g->table_ = std::move(flat_table);
  int id = -1;
  for (int e = 0; e < order && id < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < order && ok; ++x)
      ok = g->table_[static_cast<std::size_t>(e) * order + x] == x &&
           g->table_[static_cast<std::size_t>(x) * order + e] == x;
    if (ok) id = e;
  }
  if (id < 0) fail(ErrorCode::NoIdentity, "no two-sided identity element");
  g->identity_ = id;
  g->name_ = std::move(name);
  g->source_ = std::move(source);
  g->labels_ = std::move(labels);
  g->finish(/*trusted=*/true);
  return g;
}

GroupPtr Group::from_trusted_perms(std::vector<Perm> perms, std::string name,
                                   std::string source) {
  auto g = std::shared_ptr<Group>(new Group());
  g->order_ = static_cast<int>(perms.size());
  g->perms_ = std::move(perms);
  g->index_.reserve(g->perms_.size());
  for (int i = 0; i < g->order_; ++i) g->index_.emplace(g->perms_[i], i);
  auto it = g->index_.find(perm_identity(static_cast<int>(g->perms_[0].size())));
  if (it == g->index_.end()) fail(ErrorCode::NoIdentity, "identity permutation missing");
  g->identity_ = it->second;
  g->name_ = std::move(name);
  g->source_ = std::move(source);
  g->finish(/*trusted=*/true);
  return g;
}

bool Subgroup::contains(int x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

std::vector<int> QuotientMap::preimage(const std::vector<int>& target_members) const {
  std::vector<char> in(target->order(), 0);
  for (int t : target_members) in[t] = 1;
  std::vector<int> out;
  for (int x = 0; x < source->order(); ++x)
    if (in[projection[x]]) out.push_back(x);
  return out;
}

std::vector<int> QuotientMap::image(const std::vector<int>& source_members) const {
  std::vector<char> in(target->order(), 0);
  std::vector<int> out;
  for (int x : source_members) {
    int t = projection[x];
    if (!in[t]) {
      in[t] = 1;
      out.push_back(t);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace grouptool
