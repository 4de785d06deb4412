#include "lojex/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>

// Zassenhaus: factor modulo a small prime (distinct-degree, then
// Cantor-Zassenhaus equal-degree splitting), Hensel-lift to beyond the
// Mignotte bound, recombine by trial division.

namespace lojex {

namespace {

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;
using ZPoly = std::vector<Integer>;

struct Zp {
  u64 p;

  [[nodiscard]] u64 mul(u64 a, u64 b) const { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }
  [[nodiscard]] u64 add(u64 a, u64 b) const { return (a + b) % p; }
  [[nodiscard]] u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  [[nodiscard]] u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    while (e > 0) {
      if (e & 1U) {
        r = mul(r, a);
      }
      a = mul(a, a);
      e >>= 1U;
    }
    return r;
  }
  [[nodiscard]] u64 inv(u64 a) const { return pow(a, p - 2); }

  static void trim(ModPoly &a) {
    while (!a.empty() && a.back() == 0) {
      a.pop_back();
    }
  }

  [[nodiscard]] ModPoly add(const ModPoly &a, const ModPoly &b) const {
    ModPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
      r[i] = add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    }
    trim(r);
    return r;
  }
  [[nodiscard]] ModPoly sub(const ModPoly &a, const ModPoly &b) const {
    ModPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
      r[i] = sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    }
    trim(r);
    return r;
  }
  [[nodiscard]] ModPoly mul(const ModPoly &a, const ModPoly &b) const {
    if (a.empty() || b.empty()) {
      return {};
    }
    ModPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) {
        continue;
      }
      for (std::size_t j = 0; j < b.size(); ++j) {
        r[i + j] = add(r[i + j], mul(a[i], b[j]));
      }
    }
    trim(r);
    return r;
  }
  // Quotient and remainder; b nonzero.
  std::pair<ModPoly, ModPoly> divmod(ModPoly a, const ModPoly &b) const {
    if (a.size() < b.size()) {
      return {{}, a};
    }
    const u64 li = inv(b.back());
    ModPoly q(a.size() - b.size() + 1, 0);
    for (std::size_t k = q.size(); k-- > 0;) {
      const u64 c = mul(a[k + b.size() - 1], li);
      q[k] = c;
      if (c == 0) {
        continue;
      }
      for (std::size_t j = 0; j < b.size(); ++j) {
        a[k + j] = sub(a[k + j], mul(c, b[j]));
      }
    }
    trim(a);
    trim(q);
    return {q, a};
  }
  [[nodiscard]] ModPoly rem(const ModPoly &a, const ModPoly &b) const { return divmod(a, b).second; }
  [[nodiscard]] ModPoly monic(ModPoly a) const {
    if (a.empty()) {
      return a;
    }
    const u64 li = inv(a.back());
    for (auto &c : a) {
      c = mul(c, li);
    }
    return a;
  }
  [[nodiscard]] ModPoly gcd(ModPoly a, ModPoly b) const {
    while (!b.empty()) {
      ModPoly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  [[nodiscard]] ModPoly derivative(const ModPoly &a) const {
    ModPoly r;
    for (std::size_t i = 1; i < a.size(); ++i) {
      r.push_back(mul(a[i], i % p));
    }
    trim(r);
    return r;
  }
  [[nodiscard]] ModPoly powmod(ModPoly base, const Integer &e, const ModPoly &m) const {
    ModPoly r{1};
    base = rem(base, m);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      r = rem(mul(r, r), m);
      if (mpz_tstbit(e.get_mpz_t(), i) != 0) {
        r = rem(mul(r, base), m);
      }
    }
    return r;
  }
  // s, t with s a + t b = 1 (a, b coprime).
  [[nodiscard]] std::pair<ModPoly, ModPoly> bezout(const ModPoly &a, const ModPoly &b) const {
    ModPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
      auto [q, r] = divmod(r0, r1);
      r0 = std::move(r1);
      r1 = std::move(r);
      ModPoly s2 = sub(s0, mul(q, s1));
      ModPoly t2 = sub(t0, mul(q, t1));
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    const u64 li = inv(r0.at(0));
    for (auto &c : s0) {
      c = mul(c, li);
    }
    for (auto &c : t0) {
      c = mul(c, li);
    }
    return {s0, t0};
  }
};

ModPoly reduce(const ZPoly &a, u64 p) {
  ModPoly r;
  r.reserve(a.size());
  for (const auto &c : a) {
    Integer m;
    mpz_fdiv_r_ui(m.get_mpz_t(), c.get_mpz_t(), p);
    r.push_back(m.get_ui());
  }
  Zp::trim(r);
  return r;
}

ZPoly lift_int(const ModPoly &a) {
  ZPoly r;
  for (u64 c : a) {
    r.emplace_back(static_cast<unsigned long>(c));
  }
  return r;
}

void ztrim(ZPoly &a) {
  while (!a.empty() && a.back() == 0) {
    a.pop_back();
  }
}

ZPoly zmul(const ZPoly &a, const ZPoly &b) {
  if (a.empty() || b.empty()) {
    return {};
  }
  ZPoly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] += a[i] * b[j];
    }
  }
  ztrim(r);
  return r;
}

void zmod(ZPoly &a, const Integer &m, bool symmetric) {
  const Integer half = m / 2;
  for (auto &c : a) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (symmetric && c > half) {
      c -= m;
    }
  }
  ztrim(a);
}

// Exact division of a by monic b over Z; false if inexact.
bool zdivide_monic(const ZPoly &a, const ZPoly &b, ZPoly &quot) {
  if (a.size() < b.size()) {
    return false;
  }
  ZPoly r = a;
  quot.assign(a.size() - b.size() + 1, Integer(0));
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Integer c = r[k + b.size() - 1];
    quot[k] = c;
    if (c == 0) {
      continue;
    }
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[k + j] -= c * b[j];
    }
  }
  ztrim(r);
  ztrim(quot);
  return r.empty();
}

std::vector<ModPoly> equal_degree_split(const Zp &F, const ModPoly &g, std::size_t d, std::mt19937_64 &rng) {
  const std::size_t n = g.size() - 1;
  if (n == d) {
    return {g};
  }
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), F.p, d);
  e = (e - 1) / 2;
  std::uniform_int_distribution<u64> coef(0, F.p - 1);
  for (;;) {
    ModPoly a(n, 0);
    for (auto &c : a) {
      c = coef(rng);
    }
    Zp::trim(a);
    if (a.size() < 2) {
      continue;
    }
    ModPoly b = F.powmod(a, e, g);
    b = F.sub(b, ModPoly{1});
    const ModPoly h = F.gcd(g, b);
    if (h.size() > 1 && h.size() < g.size()) {
      auto left = equal_degree_split(F, h, d, rng);
      auto right = equal_degree_split(F, F.divmod(g, h).first, d, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

// Irreducible monic factors of a monic squarefree polynomial mod p.
std::vector<ModPoly> factor_mod_p(const Zp &F, ModPoly f) {
  std::vector<ModPoly> out;
  std::mt19937_64 rng(0x5eed);
  ModPoly h{0, 1};
  const ModPoly x{0, 1};
  for (std::size_t d = 1; 2 * d <= f.size() - 1; ++d) {
    h = F.powmod(h, Integer(static_cast<unsigned long>(F.p)), f);
    const ModPoly g = F.gcd(f, F.sub(h, x));
    if (g.size() > 1) {
      auto parts = equal_degree_split(F, g, d, rng);
      out.insert(out.end(), parts.begin(), parts.end());
      f = F.divmod(f, g).first;
      h = F.rem(h, f);
    }
  }
  if (f.size() > 1) {
    out.push_back(F.monic(f));
  }
  return out;
}

// Lifts f = g h (mod p), g and h monic and coprime, to mod p^k.
std::pair<ZPoly, ZPoly> hensel_lift(const Zp &F, const ZPoly &f, const ModPoly &g0, const ModPoly &h0, int k) {
  const auto [s, t] = F.bezout(g0, h0);
  ZPoly g = lift_int(g0);
  ZPoly h = lift_int(h0);
  Integer q = static_cast<unsigned long>(F.p);
  for (int j = 1; j < k; ++j) {
    ZPoly diff = f;
    const ZPoly gh = zmul(g, h);
    diff.resize(std::max(diff.size(), gh.size()), Integer(0));
    for (std::size_t i = 0; i < gh.size(); ++i) {
      diff[i] -= gh[i];
    }
    for (auto &c : diff) {
      c /= q; // exact
    }
    ztrim(diff);
    const ModPoly e = reduce(diff, F.p);
    const ModPoly dg = F.rem(F.mul(t, e), g0);
    const ModPoly dh = F.divmod(F.sub(e, F.mul(dg, h0)), g0).first;
    const ZPoly dgi = lift_int(dg);
    const ZPoly dhi = lift_int(dh);
    for (std::size_t i = 0; i < dgi.size(); ++i) {
      g[i] += q * dgi[i];
    }
    for (std::size_t i = 0; i < dhi.size(); ++i) {
      h[i] += q * dhi[i];
    }
    q *= static_cast<unsigned long>(F.p);
  }
  return {g, h};
}

bool is_prime(u64 n) {
  if (n < 2) {
    return false;
  }
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      return false;
    }
  }
  return true;
}

// Irreducible monic factors of a monic squarefree integer polynomial.
std::vector<ZPoly> factor_monic(const ZPoly &f) {
  const std::size_t n = f.size() - 1;
  if (n <= 1) {
    return {f};
  }
  // Pick the prime with fewest modular factors among a handful.
  std::vector<ModPoly> best;
  u64 best_p = 0;
  int tried = 0;
  for (u64 p = 10007; tried < 5; p += 2) {
    if (!is_prime(p)) {
      continue;
    }
    const Zp F{p};
    const ModPoly fp = reduce(f, p);
    if (fp.size() != f.size() || F.gcd(fp, F.derivative(fp)).size() != 1) {
      continue;
    }
    ++tried;
    auto facs = factor_mod_p(F, fp);
    if (best_p == 0 || facs.size() < best.size()) {
      best = std::move(facs);
      best_p = p;
    }
    if (best.size() == 1) {
      return {f};
    }
  }
  const Zp F{best_p};

  // Mignotte-type bound on factor coefficients: 2^n * ||f||_2.
  Integer norm2 = 0;
  for (const auto &c : f) {
    norm2 += c * c;
  }
  Integer root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  root += 1;
  Integer bound = root << static_cast<mp_bitcnt_t>(n);
  bound *= 2;
  int k = 1;
  Integer M = static_cast<unsigned long>(best_p);
  while (M <= bound) {
    M *= static_cast<unsigned long>(best_p);
    ++k;
  }

  // Lift one factor at a time off the remaining cofactor.
  std::vector<ZPoly> lifted;
  ZPoly rest = f;
  for (std::size_t i = 0; i + 1 < best.size(); ++i) {
    ModPoly cof{1};
    for (std::size_t j = i + 1; j < best.size(); ++j) {
      cof = F.mul(cof, best[j]);
    }
    auto [g, h] = hensel_lift(F, rest, best[i], cof, k);
    zmod(g, M, false);
    zmod(h, M, false);
    lifted.push_back(std::move(g));
    rest = std::move(h);
  }
  lifted.push_back(rest);

  std::vector<ZPoly> out;
  ZPoly current = f;
  std::vector<std::size_t> remaining(lifted.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) {
    remaining[i] = i;
  }
  for (std::size_t size = 1; 2 * size <= remaining.size();) {
    bool found = false;
    std::vector<bool> pick(remaining.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      ZPoly cand{Integer(1)};
      for (std::size_t j = 0; j < remaining.size(); ++j) {
        if (pick[j]) {
          cand = zmul(cand, lifted[remaining[j]]);
          zmod(cand, M, false);
        }
      }
      zmod(cand, M, true);
      if (cand.back() != 1) {
        continue;
      }
      if (cand[0] != 0 && current[0] % cand[0] != 0) {
        continue;
      }
      ZPoly quot;
      if (zdivide_monic(current, cand, quot)) {
        out.push_back(cand);
        current = quot;
        std::vector<std::size_t> keep;
        for (std::size_t j = 0; j < remaining.size(); ++j) {
          if (!pick[j]) {
            keep.push_back(remaining[j]);
          }
        }
        remaining = std::move(keep);
        found = true;
        break;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
    if (!found) {
      ++size;
    }
  }
  if (current.size() > 1) {
    out.push_back(current);
  }
  return out;
}

} // namespace

std::vector<QPoly> irreducible_factors(const QPoly &p) {
  if (p.degree() < 1) {
    throw std::domain_error("irreducible_factors of a constant");
  }
  const QPoly sq = squarefree_part(p).primitive();
  const int n = sq.degree();
  std::vector<QPoly> out;
  if (n == 1) {
    out.push_back(sq);
    return out;
  }
  // Monic transform: lc^(n-1) f(x / lc).
  const std::vector<Integer> c = sq.integer_coeffs();
  const Integer lc = c.back();
  ZPoly monic(c.size());
  Integer pw = 1;
  for (int i = n - 1; i >= 0; --i) {
    monic[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)] * pw;
    pw *= lc;
  }
  monic[static_cast<std::size_t>(n)] = 1;
  for (const ZPoly &g : factor_monic(monic)) {
    // Undo the transform: g(lc x), then take the primitive part.
    std::vector<Rat> v;
    Integer pw = 1;
    for (const auto &gc : g) {
      v.emplace_back(Integer(gc * pw));
      pw *= lc;
    }
    out.push_back(QPoly(std::move(v)).primitive());
  }
  std::sort(out.begin(), out.end(), [](const QPoly &a, const QPoly &b) {
    if (a.degree() != b.degree()) {
      return a.degree() < b.degree();
    }
    for (int i = a.degree(); i >= 0; --i) {
      if (a.coeff(i) != b.coeff(i)) {
        return a.coeff(i) < b.coeff(i);
      }
    }
    return false;
  });
  return out;
}

} // namespace lojex
