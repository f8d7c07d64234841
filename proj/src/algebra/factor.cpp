#include "pencil/algebra/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

#include "pencil/errors.hpp"

namespace pencil::algebra {

namespace {

using ZPoly = std::vector<Integer>;   // low-to-high, trimmed
using ModPoly = std::vector<std::uint64_t>;  // low-to-high, trimmed, entries in [0, p)

// ---------------------------------------------------------------------------
// Arithmetic in F_p[t], p < 2^31.

class ModArith {
 public:
  explicit ModArith(std::uint64_t p) : p_(p) {}

  std::uint64_t p() const { return p_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p_ - b) % p_; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p_; }
  std::uint64_t inv(std::uint64_t a) const { return pow(a, p_ - 2); }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    a %= p_;
    while (e > 0) {
      if (e & 1U) r = mul(r, a);
      a = mul(a, a);
      e >>= 1U;
    }
    return r;
  }

  static void trim(ModPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
  }
  static int deg(const ModPoly& f) { return static_cast<int>(f.size()) - 1; }

  ModPoly from_z(const ZPoly& f) const {
    ModPoly out(f.size());
    const Integer pz(static_cast<unsigned long>(p_));
    for (std::size_t i = 0; i < f.size(); ++i) {
      Integer r = f[i] % pz;
      if (r < 0) r += pz;
      out[i] = r.get_ui();
    }
    trim(out);
    return out;
  }

  ModPoly add(const ModPoly& a, const ModPoly& b) const {
    ModPoly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = add(out[i], b[i]);
    trim(out);
    return out;
  }

  ModPoly sub(const ModPoly& a, const ModPoly& b) const {
    ModPoly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = sub(out[i], b[i]);
    trim(out);
    return out;
  }

  ModPoly mul(const ModPoly& a, const ModPoly& b) const {
    if (a.empty() || b.empty()) return {};
    ModPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p_;
    }
    trim(out);
    return out;
  }

  void divmod(const ModPoly& a, const ModPoly& b, ModPoly& q, ModPoly& r) const {
    r = a;
    trim(r);
    q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, 0);
    const std::uint64_t lead_inv = inv(b.back());
    while (!r.empty() && r.size() >= b.size()) {
      const std::size_t shift = r.size() - b.size();
      const std::uint64_t c = mul(r.back(), lead_inv);
      q[shift] = c;
      for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] = sub(r[shift + i], mul(c, b[i]));
      r.pop_back();
      trim(r);
    }
    trim(q);
  }

  ModPoly rem(const ModPoly& a, const ModPoly& b) const {
    ModPoly q, r;
    divmod(a, b, q, r);
    return r;
  }

  ModPoly monic(const ModPoly& f) const {
    if (f.empty()) return f;
    const std::uint64_t c = inv(f.back());
    ModPoly out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = mul(f[i], c);
    return out;
  }

  ModPoly gcd(ModPoly a, ModPoly b) const {
    while (!b.empty()) {
      ModPoly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }

  // s*a + t*b = 1 for coprime a, b.
  void bezout(const ModPoly& a, const ModPoly& b, ModPoly& s, ModPoly& t) const {
    ModPoly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
    while (!r1.empty()) {
      ModPoly q, r;
      divmod(r0, r1, q, r);
      ModPoly sn = sub(s0, mul(q, s1));
      ModPoly tn = sub(t0, mul(q, t1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(sn);
      t0 = std::move(t1);
      t1 = std::move(tn);
    }
    // r0 is a nonzero constant.
    const std::uint64_t c = inv(r0[0]);
    s = mul(s0, ModPoly{c});
    t = mul(t0, ModPoly{c});
  }

  ModPoly derivative(const ModPoly& f) const {
    ModPoly out;
    for (std::size_t i = 1; i < f.size(); ++i) out.push_back(mul(f[i], i % p_));
    trim(out);
    return out;
  }

  ModPoly powmod(ModPoly base, const Integer& e, const ModPoly& m) const {
    ModPoly result{1};
    base = rem(base, m);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      result = rem(mul(result, result), m);
      if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, base), m);
    }
    return result;
  }

 private:
  std::uint64_t p_;
};

// Distinct-degree factorization of a monic squarefree polynomial.
std::vector<std::pair<ModPoly, int>> distinct_degree(const ModArith& ar, ModPoly f) {
  std::vector<std::pair<ModPoly, int>> out;
  const ModPoly x{0, 1};
  ModPoly h = x;
  const Integer p(static_cast<unsigned long>(ar.p()));
  for (int i = 1; 2 * i <= ModArith::deg(f); ++i) {
    h = ar.powmod(h, p, f);
    ModPoly g = ar.gcd(ar.sub(h, x), f);
    if (ModArith::deg(g) > 0) {
      out.emplace_back(g, i);
      ModPoly q, r;
      ar.divmod(f, g, q, r);
      f = q;
      h = ar.rem(h, f);
    }
  }
  if (ModArith::deg(f) > 0) out.emplace_back(f, ModArith::deg(f));
  return out;
}

// Cantor-Zassenhaus splitting of a product of irreducibles of degree `d`.
void equal_degree(const ModArith& ar, const ModPoly& f, int d, std::mt19937_64& rng, std::vector<ModPoly>& out) {
  const int n = ModArith::deg(f);
  if (n == d) {
    out.push_back(f);
    return;
  }
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), ar.p(), static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  while (true) {
    ModPoly a(static_cast<std::size_t>(n));
    for (auto& c : a) c = rng() % ar.p();
    ModArith::trim(a);
    if (ModArith::deg(a) < 1) continue;
    ModPoly b = ar.sub(ar.powmod(a, e, f), ModPoly{1});
    ModPoly g = ar.gcd(b, f);
    const int dg = ModArith::deg(g);
    if (dg > 0 && dg < n) {
      ModPoly q, r;
      ar.divmod(f, g, q, r);
      equal_degree(ar, g, d, rng, out);
      equal_degree(ar, ar.monic(q), d, rng, out);
      return;
    }
  }
}

std::vector<ModPoly> factor_mod_p(const ModArith& ar, const ModPoly& monic_f) {
  std::mt19937_64 rng(0x5eed);
  std::vector<ModPoly> out;
  for (const auto& [g, d] : distinct_degree(ar, monic_f)) equal_degree(ar, g, d, rng, out);
  return out;
}

// ---------------------------------------------------------------------------
// Integer polynomials.

void trim_z(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Integer content(const ZPoly& f) {
  Integer g = 0;
  for (const auto& c : f) g = gcd(g, c);
  return g;
}

ZPoly primitive(ZPoly f) {
  Integer c = content(f);
  if (!f.empty() && f.back() < 0) c = -c;
  for (auto& x : f) x /= c;
  return f;
}

ZPoly mul_mod(const ZPoly& a, const ZPoly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  for (auto& c : out) {
    c %= m;
    if (c < 0) c += m;
  }
  trim_z(out);
  return out;
}

ZPoly symmetric(ZPoly f, const Integer& m) {
  const Integer half = m / 2;
  for (auto& c : f) {
    c %= m;
    if (c < 0) c += m;
    if (c > half) c -= m;
  }
  trim_z(f);
  return f;
}

ZPoly to_z(const ModPoly& f) {
  ZPoly out;
  out.reserve(f.size());
  for (auto c : f) out.emplace_back(static_cast<unsigned long>(c));
  return out;
}

// Exact division over Z; returns false when b does not divide a.
bool divide_z(const ZPoly& a, const ZPoly& b, ZPoly& quotient) {
  ZPoly r = a;
  quotient.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Integer(0));
  while (!r.empty() && r.size() >= b.size()) {
    const std::size_t shift = r.size() - b.size();
    if (!mpz_divisible_p(r.back().get_mpz_t(), b.back().get_mpz_t())) return false;
    const Integer c = r.back() / b.back();
    quotient[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
    trim_z(r);
  }
  trim_z(quotient);
  return r.empty();
}

// Lifts g*h == target (mod p), both monic, to modulus p^k = `modulus`.
std::pair<ZPoly, ZPoly> hensel_pair(const ModArith& ar, const ZPoly& target, const ModPoly& g, const ModPoly& h,
                                    const Integer& modulus) {
  ModPoly s, t;
  ar.bezout(g, h, s, t);
  const Integer p(static_cast<unsigned long>(ar.p()));
  ZPoly big_g = to_z(g), big_h = to_z(h);
  Integer pk = p;
  while (pk < modulus) {
    const Integer next = pk * p;
    ZPoly err = target;
    const ZPoly prod = mul_mod(big_g, big_h, next);
    err.resize(std::max(err.size(), prod.size()), Integer(0));
    for (std::size_t i = 0; i < prod.size(); ++i) err[i] -= prod[i];
    for (auto& c : err) {
      c %= next;
      if (c < 0) c += next;
      c /= pk;
    }
    trim_z(err);
    const ModPoly e = ar.from_z(err);
    ModPoly q, dg;
    ar.divmod(ar.mul(t, e), g, q, dg);
    const ModPoly dh = ar.add(ar.mul(s, e), ar.mul(q, h));
    const ZPoly zdg = to_z(dg), zdh = to_z(dh);
    for (std::size_t i = 0; i < zdg.size(); ++i) big_g[i] += pk * zdg[i];
    big_h.resize(std::max(big_h.size(), zdh.size()), Integer(0));
    for (std::size_t i = 0; i < zdh.size(); ++i) big_h[i] += pk * zdh[i];
    trim_z(big_h);
    pk = next;
  }
  return {big_g, big_h};
}

std::vector<ZPoly> hensel_all(const ModArith& ar, const ZPoly& target, const std::vector<ModPoly>& factors,
                              const Integer& modulus) {
  if (factors.size() == 1) return {symmetric(target, modulus)};
  ModPoly rest{1};
  for (std::size_t i = 1; i < factors.size(); ++i) rest = ar.mul(rest, factors[i]);
  auto [g, h] = hensel_pair(ar, target, factors[0], rest, modulus);
  std::vector<ModPoly> tail(factors.begin() + 1, factors.end());
  std::vector<ZPoly> out{g};
  for (auto& f : hensel_all(ar, h, tail, modulus)) out.push_back(std::move(f));
  return out;
}

std::vector<std::uint64_t> small_primes() {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 3; out.size() < 400; n += 2) {
    bool prime = true;
    for (auto q : out) {
      if (q * q > n) break;
      if (n % q == 0) {
        prime = false;
        break;
      }
    }
    if (prime) out.push_back(n);
  }
  return out;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Irreducible factors of a primitive squarefree integer polynomial of degree >= 1
// with positive leading coefficient.
std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n <= 1) return {f};
  if (f[0] == 0) {
    ZPoly rest(f.begin() + 1, f.end());
    auto out = zassenhaus(rest);
    out.push_back(ZPoly{Integer(0), Integer(1)});
    return out;
  }

  const Integer& lc = f.back();
  std::uint64_t best_p = 0;
  std::vector<ModPoly> best;
  int good = 0;
  for (auto p : small_primes()) {
    if (lc % Integer(static_cast<unsigned long>(p)) == 0) continue;
    ModArith ar(p);
    const ModPoly fp = ar.monic(ar.from_z(f));
    if (ModArith::deg(fp) != n) continue;
    if (ModArith::deg(ar.gcd(fp, ar.derivative(fp))) != 0) continue;
    auto facs = factor_mod_p(ar, fp);
    if (best_p == 0 || facs.size() < best.size()) {
      best_p = p;
      best = std::move(facs);
    }
    if (best.size() == 1 || ++good >= 5) break;
  }
  if (best_p == 0) throw AlgebraError("no suitable prime for modular factorization");
  if (best.size() == 1) return {f};

  // Coefficients of lc * (monic factor) are bounded by |lc| 2^n ||f||_2.
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer bound = sqrt(norm2) + 1;
  bound *= abs(lc);
  bound <<= static_cast<unsigned long>(n + 1);
  const ModArith ar(best_p);
  const Integer p(static_cast<unsigned long>(best_p));
  Integer modulus = p;
  while (modulus <= bound) modulus *= p;

  Integer lc_inv;
  mpz_invert(lc_inv.get_mpz_t(), lc.get_mpz_t(), modulus.get_mpz_t());
  ZPoly target = f;
  for (auto& c : target) {
    c = (c * lc_inv) % modulus;
    if (c < 0) c += modulus;
  }
  std::vector<ZPoly> lifted = hensel_all(ar, target, best, modulus);

  std::vector<ZPoly> found;
  ZPoly rest = f;
  std::size_t subset = 1;
  while (2 * subset <= lifted.size()) {
    bool split = false;
    std::vector<std::size_t> idx(subset);
    for (std::size_t i = 0; i < subset; ++i) idx[i] = i;
    do {
      ZPoly cand{rest.back()};
      for (auto i : idx) cand = mul_mod(cand, lifted[i], modulus);
      cand = primitive(symmetric(cand, modulus));
      ZPoly quotient;
      if (cand.size() > 1 && divide_z(rest, cand, quotient)) {
        found.push_back(cand);
        rest = quotient;
        for (std::size_t k = idx.size(); k-- > 0;) lifted.erase(lifted.begin() + static_cast<long>(idx[k]));
        split = true;
        break;
      }
    } while (next_combination(idx, lifted.size()));
    if (!split) ++subset;
  }
  if (rest.size() > 1) found.push_back(primitive(rest));
  return found;
}

UniPoly monic_rational(const ZPoly& f) {
  std::vector<Rational> c;
  c.reserve(f.size());
  for (const auto& x : f) c.push_back(make_rational(x, f.back()));
  return UniPoly::from_rationals(c);
}

bool coeff_less(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const Rational ca = a.coeff(i).rational_value(), cb = b.coeff(i).rational_value();
    if (ca != cb) return ca < cb;
  }
  return false;
}

}  // namespace

UniPoly UniFactorization::expand() const {
  UniPoly out = UniPoly::from_rationals({unit});
  for (const auto& f : factors) {
    for (int i = 0; i < f.multiplicity; ++i) out *= f.poly.with_variable(out.variable());
  }
  return out;
}

UniFactorization factor_over_Q(const UniPoly& f, int max_degree) {
  if (!f.field()->is_rationals()) throw AlgebraError("factor_over_Q requires rational coefficients");
  if (f.is_zero()) throw AlgebraError("cannot factor the zero polynomial");
  if (f.degree() > max_degree) {
    throw LimitExceeded("degree bound exceeded: degree " + std::to_string(f.degree()) + " > " +
                        std::to_string(max_degree));
  }
  UniFactorization result;
  result.unit = f.leading().rational_value();
  const auto parts = squarefree_decomposition(f);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const UniPoly& a = parts[i];
    if (a.degree() < 1) continue;
    Integer den = 1;
    for (const auto& c : a.coeffs()) den = lcm(den, c.rational_value().get_den());
    ZPoly z;
    for (const auto& c : a.coeffs()) {
      Rational scaled = c.rational_value() * den;
      z.push_back(scaled.get_num());
    }
    for (const auto& g : zassenhaus(primitive(z))) {
      result.factors.push_back({monic_rational(g).with_variable(f.variable()), static_cast<int>(i + 1)});
    }
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const UniFactor& a, const UniFactor& b) { return coeff_less(a.poly, b.poly); });
  return result;
}

bool is_irreducible_over_Q(const UniPoly& f, int max_degree) {
  if (f.degree() < 1) return false;
  const auto fac = factor_over_Q(f, max_degree);
  return fac.factors.size() == 1 && fac.factors[0].multiplicity == 1;
}

RootField adjoin_root(const UniPoly& m, std::string generator, int max_degree) {
  if (!m.field()->is_rationals()) throw AlgebraError("adjoin_root requires a polynomial over Q");
  if (m.degree() < 1) throw AlgebraError("adjoin_root requires a nonconstant polynomial");
  if (m.degree() > max_degree) {
    throw LimitExceeded("extension degree " + std::to_string(m.degree()) + " exceeds bound " +
                        std::to_string(max_degree));
  }
  const UniPoly monic = m.monic();
  if (monic.degree() == 1) {
    const auto q = NumberField::rationals();
    return {q, FieldElement(q, -monic.coeff(0).rational_value())};
  }
  std::vector<Rational> coeffs;
  for (const auto& c : monic.coeffs()) coeffs.push_back(c.rational_value());
  auto field = NumberField::create(std::move(generator), std::move(coeffs), max_degree);
  return {field, FieldElement::generator(field)};
}

}  // namespace pencil::algebra
