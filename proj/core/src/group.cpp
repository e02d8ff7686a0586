#include "kneser/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "kneser/errors.hpp"

namespace kneser {

FiniteAbelianGroup::FiniteAbelianGroup() : FiniteAbelianGroup(std::vector<std::uint32_t>{1}) {}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::uint32_t> moduli) : moduli_(std::move(moduli)) {
  if (moduli_.empty()) moduli_.push_back(1);
  std::uint64_t order = 1;
  for (auto m : moduli_) {
    if (m < 1) fail(ErrorKind::InvalidArgument, "cyclic factor of order 0");
    order *= m;
    if (order > 0xFFFFFFFFull) fail(ErrorKind::BoundExceeded, "group order does not fit in 32 bits");
  }
  order_ = static_cast<std::uint32_t>(order);
  stride_.assign(moduli_.size(), 1);
  for (std::size_t i = moduli_.size(); i-- > 1;) stride_[i - 1] = stride_[i] * moduli_[i];
}

ElementId FiniteAbelianGroup::add(ElementId a, ElementId b) const {
  if (moduli_.size() == 1) {
    std::uint32_t s = a + b;
    return s >= order_ ? s - order_ : s;
  }
  ElementId out = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    std::uint32_t x = (a / stride_[i]) % moduli_[i];
    std::uint32_t y = (b / stride_[i]) % moduli_[i];
    std::uint32_t s = x + y;
    if (s >= moduli_[i]) s -= moduli_[i];
    out += s * stride_[i];
  }
  return out;
}

ElementId FiniteAbelianGroup::neg(ElementId a) const {
  if (moduli_.size() == 1) return a == 0 ? 0 : order_ - a;
  ElementId out = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    std::uint32_t x = (a / stride_[i]) % moduli_[i];
    out += (x == 0 ? 0 : moduli_[i] - x) * stride_[i];
  }
  return out;
}

ElementId FiniteAbelianGroup::sub(ElementId a, ElementId b) const { return add(a, neg(b)); }

ElementId FiniteAbelianGroup::mul(std::uint64_t k, ElementId a) const {
  ElementId out = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    std::uint64_t x = (a / stride_[i]) % moduli_[i];
    out += static_cast<std::uint32_t>((x * (k % moduli_[i])) % moduli_[i]) * stride_[i];
  }
  return out;
}

std::uint32_t FiniteAbelianGroup::element_order(ElementId a) const {
  std::uint64_t ord = 1;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    std::uint64_t x = (a / stride_[i]) % moduli_[i];
    std::uint64_t oi = moduli_[i] / std::gcd<std::uint64_t>(x, moduli_[i]);
    ord = std::lcm(ord, oi);
  }
  return static_cast<std::uint32_t>(ord);
}

std::vector<std::uint32_t> FiniteAbelianGroup::coords(ElementId a) const {
  std::vector<std::uint32_t> c(moduli_.size());
  for (std::size_t i = 0; i < moduli_.size(); ++i) c[i] = (a / stride_[i]) % moduli_[i];
  return c;
}

ElementId FiniteAbelianGroup::from_coords(const std::vector<std::uint32_t>& c) const {
  if (c.size() != moduli_.size()) fail(ErrorKind::InvalidArgument, "coordinate count mismatch");
  ElementId out = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] >= moduli_[i]) fail(ErrorKind::InvalidArgument, "coordinate out of range");
    out += c[i] * stride_[i];
  }
  return out;
}

ElementId FiniteAbelianGroup::from_integers(const std::vector<long long>& c) const {
  if (c.size() != moduli_.size()) fail(ErrorKind::InvalidArgument, "coordinate count mismatch");
  std::vector<std::uint32_t> r(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    long long m = moduli_[i];
    r[i] = static_cast<std::uint32_t>(((c[i] % m) + m) % m);
  }
  return from_coords(r);
}

std::string FiniteAbelianGroup::format(ElementId a) const {
  auto c = coords(a);
  if (c.size() == 1) return std::to_string(c[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + ")";
}

std::string FiniteAbelianGroup::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (i) s += " x ";
    s += "Z/" + std::to_string(moduli_[i]);
  }
  return s;
}

Subgroup::Subgroup(const FiniteAbelianGroup& g, std::vector<ElementId> members)
    : Subgroup(g, std::move(members), true) {}

Subgroup Subgroup::from_closed(const FiniteAbelianGroup& g, std::vector<ElementId> members) {
  return Subgroup(g, std::move(members), false);
}

Subgroup::Subgroup(const FiniteAbelianGroup& g, std::vector<ElementId> members, bool validate)
    : group_(g), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  const std::uint32_t n = g.order();
  if (members_.empty() || members_.front() != 0) {
    fail(ErrorKind::InvalidArgument, "subgroup must contain the identity");
  }
  if (members_.back() >= n) fail(ErrorKind::InvalidArgument, "subgroup member outside the group");
  if (n % members_.size() != 0) fail(ErrorKind::InvalidArgument, "subgroup size must divide the order");
  if (validate) {
    std::vector<char> in(n, 0);
    for (auto m : members_) in[m] = 1;
    for (auto a : members_)
      for (auto b : members_)
        if (!in[g.add(a, b)]) fail(ErrorKind::InvalidArgument, "member list is not closed under addition");
  }
  constexpr std::uint32_t unset = 0xFFFFFFFFu;
  coset_of_.assign(n, unset);
  pos_.assign(n, unset);
  for (std::uint32_t i = 0; i < members_.size(); ++i) pos_[members_[i]] = i;
  for (ElementId e = 0; e < n; ++e) {
    if (coset_of_[e] != unset) continue;
    auto c = static_cast<std::uint32_t>(reps_.size());
    reps_.push_back(e);
    for (auto m : members_) coset_of_[g.add(e, m)] = c;
  }
}

Subgroup Subgroup::trivial(const FiniteAbelianGroup& g) { return from_closed(g, {0}); }

Subgroup Subgroup::whole(const FiniteAbelianGroup& g) {
  std::vector<ElementId> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return from_closed(g, std::move(all));
}

namespace {

// members(S) + <g>, S a subgroup given as a membership mask.
std::vector<ElementId> extend(const FiniteAbelianGroup& g, const std::vector<ElementId>& s, ElementId x) {
  std::vector<char> in(g.order(), 0);
  std::vector<ElementId> out;
  ElementId step = 0;
  do {
    for (auto m : s) {
      ElementId y = g.add(m, step);
      if (!in[y]) {
        in[y] = 1;
        out.push_back(y);
      }
    }
    step = g.add(step, x);
  } while (step != 0 && !in[step]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Subgroup Subgroup::generated_by(const FiniteAbelianGroup& g, const std::vector<ElementId>& gens) {
  std::vector<ElementId> s{0};
  for (auto x : gens) {
    if (x >= g.order()) fail(ErrorKind::InvalidArgument, "generator outside the group");
    s = extend(g, s, x);
  }
  return from_closed(g, std::move(s));
}

std::vector<Coset> Subgroup::cosets() const {
  std::vector<Coset> out(reps_.size());
  for (std::uint32_t c = 0; c < reps_.size(); ++c) out[c].representative = reps_[c];
  for (ElementId e = 0; e < group_.order(); ++e) out[coset_of_[e]].members.push_back(e);
  return out;
}

std::string Subgroup::to_string() const {
  if (members_.size() == group_.order()) return group_.to_string();
  std::string s = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) s += ",";
    s += group_.format(members_[i]);
  }
  return s + "}";
}

std::vector<Coset> cosets_of(const Subgroup& k) { return k.cosets(); }

std::vector<Subgroup> enumerate_subgroups(const FiniteAbelianGroup& g, std::uint64_t bound) {
  if (g.order() > bound) {
    fail(ErrorKind::BoundExceeded,
         "group order " + std::to_string(g.order()) + " exceeds bound " + std::to_string(bound));
  }
  constexpr std::size_t max_subgroups = 200000;
  std::set<std::vector<ElementId>> seen;
  std::vector<std::vector<ElementId>> queue{{0}};
  seen.insert(queue.front());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::vector<ElementId> s = queue[head];
    Subgroup sg = Subgroup::from_closed(g, s);
    for (std::uint32_t c = 1; c < sg.index(); ++c) {
      auto t = extend(g, s, sg.coset_rep(c));
      if (seen.insert(t).second) {
        if (seen.size() > max_subgroups) {
          fail(ErrorKind::BoundExceeded, "subgroup lattice of " + g.to_string() + " is too large");
        }
        queue.push_back(std::move(t));
      }
    }
  }
  std::sort(queue.begin(), queue.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  std::vector<Subgroup> out;
  out.reserve(queue.size());
  for (auto& m : queue) out.push_back(Subgroup::from_closed(g, std::move(m)));
  return out;
}

Character::Character(std::shared_ptr<const Subgroup> domain, std::uint64_t denominator,
                     std::vector<std::uint64_t> numerators)
    : domain_(std::move(domain)), den_(denominator), num_(std::move(numerators)) {
  if (!domain_ || num_.size() != domain_->size() || den_ == 0) {
    fail(ErrorKind::InvalidArgument, "character values do not match its domain");
  }
}

Rational Character::value(ElementId k) const {
  if (!domain_->contains(k)) fail(ErrorKind::InvalidArgument, "character evaluated outside its domain");
  Rational r(static_cast<unsigned long>(num_[domain_->position(k)]), static_cast<unsigned long>(den_));
  r.canonicalize();
  return r;
}

bool Character::is_zero() const {
  return std::all_of(num_.begin(), num_.end(), [](std::uint64_t v) { return v == 0; });
}

std::string Character::to_string() const {
  std::string s = "{";
  const auto& m = domain_->members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) s += ", ";
    s += domain_->group().format(m[i]) + ": " + kneser::to_string(value(m[i]));
  }
  return s + "}";
}

std::vector<Character> dual(const Subgroup& k) {
  const auto& g = k.group();
  std::uint64_t e = 1;
  for (auto m : g.moduli()) e = std::lcm<std::uint64_t>(e, m);
  auto domain = std::make_shared<const Subgroup>(k);
  std::vector<std::vector<std::uint32_t>> member_coords;
  member_coords.reserve(k.size());
  for (auto m : k.members()) member_coords.push_back(g.coords(m));
  std::set<std::vector<std::uint64_t>> seen;
  std::vector<Character> out;
  for (ElementId c = 0; c < g.order(); ++c) {
    auto cc = g.coords(c);
    std::vector<std::uint64_t> vals(k.size());
    for (std::size_t j = 0; j < member_coords.size(); ++j) {
      std::uint64_t v = 0;
      for (std::size_t i = 0; i < cc.size(); ++i) {
        v += static_cast<std::uint64_t>(cc[i]) * member_coords[j][i] % g.moduli()[i] * (e / g.moduli()[i]);
      }
      vals[j] = v % e;
    }
    if (seen.insert(vals).second) out.emplace_back(domain, e, std::move(vals));
  }
  return out;
}

std::vector<CharacterRep> characters_onto(const Subgroup& k, std::uint64_t q, long long n_lo,
                                          long long n_hi) {
  if (q == 0) fail(ErrorKind::InvalidArgument, "denominator bound must be positive");
  std::vector<CharacterRep> out;
  for (auto& psi : dual(k)) {
    bool ok = true;
    for (auto v : psi.numerators())
      if ((v * q) % psi.denominator() != 0) ok = false;
    if (!ok) continue;
    for (long long n = n_lo; n <= n_hi; ++n)
      if (n != 0) out.push_back({psi, n});
  }
  return out;
}

}  // namespace kneser
