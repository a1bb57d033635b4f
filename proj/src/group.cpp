#include "cgt/group.hpp"

#include "cgt/numtheory.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace cgt {

struct Group::Data {
  std::size_t n = 1;
  std::vector<Elem> table{0};
  std::vector<Elem> inv{0};
  std::vector<std::uint32_t> ord{1};
  std::vector<Elem> gens;
  std::vector<std::uint64_t> primes;
  bool abelian = true;
  std::string label;
};

namespace {

[[noreturn]] void axiom_failure(std::string axiom, std::vector<std::uint64_t> idx, const std::string& msg) {
  throw AxiomError(axiom, std::move(idx), axiom + " axiom violated: " + msg);
}

// Greedy generators of the magma: right-multiplication closure from the identity.
std::vector<Elem> greedy_generators(std::size_t n, const std::vector<Elem>& t) {
  std::vector<Elem> gens;
  std::vector<char> seen(n, 0);
  std::vector<Elem> reached{0};
  seen[0] = 1;
  std::size_t count = 1;
  for (Elem cand = 0; count < n; ++cand) {
    if (seen[cand]) continue;
    gens.push_back(cand);
    // Re-run the closure from everything reached so far with the enlarged set.
    std::vector<Elem> frontier = reached;
    while (!frontier.empty()) {
      std::vector<Elem> next;
      for (Elem r : frontier)
        for (Elem g : gens) {
          Elem y = t[static_cast<std::size_t>(r) * n + g];
          if (!seen[y]) {
            seen[y] = 1;
            ++count;
            next.push_back(y);
            reached.push_back(y);
          }
        }
      frontier = std::move(next);
    }
  }
  return gens;
}

}  // namespace

Group::Group() : Group(std::make_shared<const Data>()) {}

Group::Group(std::shared_ptr<const Data> data)
    : data_(std::move(data)),
      n_(data_->n),
      table_(data_->table.data()),
      inv_(data_->inv.data()),
      ord_(data_->ord.data()) {}

Group Group::from_table(std::size_t n, std::vector<Elem> t, std::string label) {
  if (n == 0) axiom_failure("shape", {0}, "a group has at least one element");
  if (t.size() != n * n) {
    std::ostringstream msg;
    msg << "expected " << n * n << " entries, got " << t.size();
    axiom_failure("shape", {n, t.size()}, msg.str());
  }
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i] >= n) {
      std::ostringstream msg;
      msg << "table[" << i / n << "][" << i % n << "] = " << t[i] << " is outside [0, " << n << ")";
      axiom_failure("closure", {i / n, i % n}, msg.str());
    }
  auto at = [&](std::size_t a, std::size_t b) { return t[a * n + b]; };

  std::size_t e = n;
  for (std::size_t cand = 0; cand < n && e == n; ++cand) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = at(cand, x) == x && at(x, cand) == x;
    if (ok) e = cand;
  }
  if (e == n) axiom_failure("identity", {}, "no two-sided identity element");

  if (e != 0) {
    // Swap labels 0 and e.
    auto relabel = [e](Elem x) -> Elem { return x == 0 ? static_cast<Elem>(e) : (x == e ? 0 : x); };
    std::vector<Elem> r(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) r[relabel(a) * n + relabel(b)] = relabel(t[a * n + b]);
    t = std::move(r);
  }

  auto d = std::make_shared<Data>();
  d->n = n;
  d->inv.assign(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t hits = 0;
    for (std::size_t y = 0; y < n; ++y)
      if (at(x, y) == 0) {
        ++hits;
        d->inv[x] = static_cast<Elem>(y);
      }
    if (hits != 1) {
      std::ostringstream msg;
      msg << "element " << x << " has " << hits << " right inverses";
      axiom_failure("inverses", {x}, msg.str());
    }
  }

  d->gens = greedy_generators(n, t);

  // Light's test: the set of g with (xg)y = x(gy) for all x, y is closed under the
  // product, so checking it on a generating set settles associativity.
  for (Elem g : d->gens) {
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t xg = at(x, g);
      for (std::size_t y = 0; y < n; ++y) {
        if (at(xg, y) == at(x, at(g, y))) continue;
        std::uint64_t a = x, b = g, c = y;
        if (n <= kBruteForceWitnessLimit) {
          bool found = false;
          for (std::size_t i = 0; i < n && !found; ++i)
            for (std::size_t j = 0; j < n && !found; ++j)
              for (std::size_t k = 0; k < n && !found; ++k)
                if (at(at(i, j), k) != at(i, at(j, k))) {
                  a = i, b = j, c = k;
                  found = true;
                }
        }
        std::ostringstream msg;
        msg << "(a*b)*c != a*(b*c) at (a,b,c) = (" << a << "," << b << "," << c << ")";
        axiom_failure("associativity", {a, b, c}, msg.str());
      }
    }
  }

  d->ord.assign(n, 1);
  for (std::size_t x = 1; x < n; ++x) {
    std::uint32_t k = 1;
    for (Elem y = static_cast<Elem>(x); y != 0; y = at(y, x)) ++k;
    d->ord[x] = k;
  }
  d->abelian = true;
  for (std::size_t i = 0; i < d->gens.size() && d->abelian; ++i)
    for (std::size_t j = i + 1; j < d->gens.size() && d->abelian; ++j)
      d->abelian = at(d->gens[i], d->gens[j]) == at(d->gens[j], d->gens[i]);
  d->primes = prime_divisors(n);
  d->table = std::move(t);
  d->label = std::move(label);
  return Group(std::move(d));
}

const std::string& Group::label() const noexcept { return data_->label; }

Elem Group::pow(Elem a, std::int64_t k) const noexcept {
  const std::int64_t o = ord_[a];
  k %= o;
  if (k < 0) k += o;
  Elem r = kIdentity;
  Elem base = a;
  auto e = static_cast<std::uint64_t>(k);
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

std::span<const Elem> Group::generators() const noexcept { return data_->gens; }
std::span<const std::uint64_t> Group::primes() const noexcept { return data_->primes; }
bool Group::is_abelian() const noexcept { return data_->abelian; }

bool operator==(const Group& a, const Group& b) {
  return a.data_ == b.data_ || a.data_->table == b.data_->table;
}

Group Group::relabelled(std::string label) const {
  auto d = std::make_shared<Data>(*data_);
  d->label = std::move(label);
  return Group(std::move(d));
}

// ---------------------------------------------------------------------------

Subgroup::Subgroup(Group parent, const ElementSet& mask) : parent_(std::move(parent)), mask_(mask) {
  const std::size_t n = parent_.order();
  if (mask_.size() != n) throw PreconditionError("subgroup mask size does not match the parent order");
  if (!mask_.test(kIdentity)) throw PreconditionError("subgroup does not contain the identity");
  members_.reserve(mask_.count());
  for (auto i = mask_.find_first(); i != ElementSet::npos; i = mask_.find_next(i))
    members_.push_back(static_cast<Elem>(i));

  // Closure check: grow the generated set greedily and make sure it never leaves the mask.
  ElementSet reached(n);
  reached.set(kIdentity);
  std::vector<Elem> reached_list{kIdentity};
  for (Elem m : members_) {
    if (reached.test(m)) continue;
    gens_.push_back(m);
    std::vector<Elem> frontier = reached_list;
    while (!frontier.empty()) {
      std::vector<Elem> next;
      for (Elem r : frontier)
        for (Elem g : gens_) {
          Elem y = parent_.mul(r, g);
          if (reached.test(y)) continue;
          if (!mask_.test(y)) {
            std::ostringstream msg;
            msg << "set is not closed: " << r << "*" << g << " = " << y << " is not a member";
            throw PreconditionError(msg.str());
          }
          reached.set(y);
          reached_list.push_back(y);
          next.push_back(y);
        }
      frontier = std::move(next);
    }
  }
  if (n % members_.size() != 0) throw Error("Lagrange violated: subgroup order does not divide group order");

  normal_ = true;
  for (Elem g : parent_.generators()) {
    for (Elem h : gens_)
      if (!mask_.test(parent_.conj(h, g))) {
        normal_ = false;
        break;
      }
    if (!normal_) break;
  }
  abelian_ = true;
  for (std::size_t i = 0; i < gens_.size() && abelian_; ++i)
    for (std::size_t j = i + 1; j < gens_.size() && abelian_; ++j)
      abelian_ = parent_.commute(gens_[i], gens_[j]);
}

namespace {
ElementSet mask_from(const Group& g, std::span<const Elem> members) {
  ElementSet m(g.order());
  for (Elem x : members) {
    if (!g.valid(x)) throw InputError("subgroup member " + std::to_string(x) + " is out of range");
    m.set(x);
  }
  return m;
}
}  // namespace

Subgroup::Subgroup(Group parent, std::span<const Elem> members)
    : Subgroup(parent, mask_from(parent, members)) {}

Subgroup Subgroup::trivial(const Group& g) {
  const Elem e = kIdentity;
  return Subgroup(g, std::span<const Elem>(&e, 1));
}

Subgroup Subgroup::whole(const Group& g) {
  ElementSet m(g.order());
  m.set();
  return Subgroup(g, m);
}

bool Subgroup::operator<(const Subgroup& other) const {
  if (members_.size() != other.members_.size()) return members_.size() < other.members_.size();
  return members_ < other.members_;
}

std::string Subgroup::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < members_.size(); ++i) out << (i ? "," : "") << members_[i];
  out << '}';
  return out.str();
}

}  // namespace cgt
