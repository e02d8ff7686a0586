#include "kneser/profinite.hpp"

#include <map>

#include "kneser/errors.hpp"
#include "kneser/rational.hpp"

namespace kneser {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t checked_power(std::uint64_t p, std::uint32_t n) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    r *= p;
    if (r > (1ull << 32)) fail(ErrorKind::BoundExceeded, "p^n exceeds 2^32");
  }
  return r;
}

void RecursiveSetDef::validate() const {
  if (!is_prime(p)) fail(ErrorKind::InvalidArgument, "rset base " + std::to_string(p) + " is not prime");
  if (offset >= p) fail(ErrorKind::InvalidArgument, "rset offset must be reduced mod p");
  for (const auto& c : base) {
    if (c.level < 1) fail(ErrorKind::InvalidArgument, "residue class level must be >= 1");
    if (c.residue >= checked_power(p, c.level)) fail(ErrorKind::InvalidArgument, "residue class not reduced");
  }
}

std::string RecursiveSetDef::to_string(const std::string& name) const {
  std::string s = "rset " + name + " over p=" + std::to_string(p) + " = ";
  std::map<std::uint32_t, std::vector<std::uint64_t>> by_level;
  std::vector<std::uint32_t> levels;
  for (const auto& c : base) {
    if (!by_level.count(c.level)) levels.push_back(c.level);
    by_level[c.level].push_back(c.residue);
  }
  for (auto lv : levels) {
    s += "({";
    const auto& rs = by_level[lv];
    for (std::size_t i = 0; i < rs.size(); ++i) s += (i ? "," : "") + std::to_string(rs[i]);
    s += "}+" + std::to_string(checked_power(p, lv)) + "Z) | ";
  }
  return s + "(" + std::to_string(offset) + " + " + std::to_string(p) + "*" + name + ")";
}

namespace {

struct Masks {
  std::vector<char> inner, outer;
};

Masks unroll(const RecursiveSetDef& def, std::uint32_t n) {
  const std::uint64_t size = checked_power(def.p, n);
  Masks m{std::vector<char>(size, 0), std::vector<char>(size, 0)};
  if (n == 0) {
    m.outer[0] = 1;
    return m;
  }
  for (const auto& c : def.base) {
    if (c.level <= n) {
      const std::uint64_t mod = checked_power(def.p, c.level);
      for (std::uint64_t x = c.residue; x < size; x += mod) m.inner[x] = m.outer[x] = 1;
    } else {
      m.outer[c.residue % size] = 1;
    }
  }
  Masks sub = unroll(def, n - 1);
  for (std::uint64_t y = 0; y < sub.inner.size(); ++y) {
    std::uint64_t x = def.offset + def.p * y;
    if (sub.inner[y]) m.inner[x] = 1;
    if (sub.outer[y]) m.outer[x] = 1;
  }
  return m;
}

HybridSet from_mask(const HybridGroup& g, const std::vector<char>& mask) {
  std::vector<ElementId> e;
  for (std::size_t x = 0; x < mask.size(); ++x)
    if (mask[x]) e.push_back(static_cast<ElementId>(x));
  return HybridSet(g, std::move(e), {});
}

std::vector<char> mask_sum(const std::vector<char>& a, const std::vector<char>& b) {
  const std::size_t n = a.size();
  std::vector<char> out(n, 0);
  std::vector<std::size_t> bs;
  for (std::size_t y = 0; y < n; ++y)
    if (b[y]) bs.push_back(y);
  for (std::size_t x = 0; x < n; ++x) {
    if (!a[x]) continue;
    for (auto y : bs) out[(x + y) % n] = 1;
  }
  return out;
}

Rational mask_measure(const std::vector<char>& m) {
  std::uint64_t c = 0;
  for (char v : m) c += v != 0;
  Rational r(static_cast<unsigned long>(c), static_cast<unsigned long>(m.size()));
  r.canonicalize();
  return r;
}

// Subgroups of Z/p^n are p^j Z/p^nZ; the stabilizer is the largest one fixing the set.
std::uint64_t cyclic_stabilizer_order(const std::vector<char>& mask, std::uint64_t p) {
  const std::size_t n = mask.size();
  std::uint64_t order = n;
  for (std::uint64_t step = 1; step <= n; step *= p, order /= p) {
    if (step == n) return 1;
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      if (mask[x] && !mask[(x + step) % n]) ok = false;
    if (ok) return order;
  }
  return 1;
}

}  // namespace

TruncationPair truncate(const RecursiveSetDef& def, std::uint32_t n) {
  def.validate();
  if (n < 1) fail(ErrorKind::InvalidArgument, "truncation depth must be >= 1");
  Masks m = unroll(def, n);
  HybridGroup g(FiniteAbelianGroup({static_cast<std::uint32_t>(checked_power(def.p, n))}), 0);
  TruncationPair t{n, g, from_mask(g, m.inner), from_mask(g, m.outer), mask_measure(m.inner), mask_measure(m.outer)};
  ensure(subset(t.inner, t.outer), "inner truncation escaped the outer one");
  return t;
}

TruncatedSumReport sum_truncations(const RecursiveSetDef& a, const RecursiveSetDef& b, std::uint32_t n) {
  if (a.p != b.p) {
    fail(ErrorKind::PrimeMismatch, "rset primes differ: " + std::to_string(a.p) + " and " + std::to_string(b.p));
  }
  a.validate();
  b.validate();
  if (n < 1) fail(ErrorKind::InvalidArgument, "truncation depth must be >= 1");
  Masks ma = unroll(a, n), mb = unroll(b, n);
  auto oo = mask_sum(ma.outer, mb.outer);
  auto io = mask_sum(ma.inner, mb.outer);
  auto oi = mask_sum(ma.outer, mb.inner);
  for (std::size_t x = 0; x < io.size(); ++x) io[x] = io[x] || oi[x];
  HybridGroup g(FiniteAbelianGroup({static_cast<std::uint32_t>(ma.inner.size())}), 0);
  TruncatedSumReport r;
  r.depth = n;
  r.outer_sum = from_mask(g, oo);
  r.upper = mask_measure(oo);
  r.lower = mask_measure(io);
  r.inner_sum_measure = mask_measure(mask_sum(ma.inner, mb.inner));
  r.stabilizer_order = cyclic_stabilizer_order(oo, a.p);
  r.sur_critical_outer = r.upper == mask_measure(ma.outer) + mask_measure(mb.outer);
  return r;
}

RecursiveSetDef seven_adic_example() { return RecursiveSetDef{7, {{0, 1}, {1, 1}}, 2}; }

}  // namespace kneser
