#include "qnum.hpp"

namespace hyc {

Z qfloor(const Q& q) {
  Z n = num(q), d = den(q);
  Z quo = n / d;
  if (n < 0 && quo * d != n) --quo;
  return quo;
}

Z qceil(const Q& q) { return -qfloor(-q); }

bool is_integer(const Q& q) { return den(q) == 1; }

bool is_half_integer(const Q& q) { return den(q) == 1 || den(q) == 2; }

bool is_even_integer(const Q& q) { return den(q) == 1 && num(q) % 2 == 0; }

Z val_int(Z n, const Z& p) {
  if (n == 0) throw std::invalid_argument("valuation of zero");
  if (n < 0) n = -n;
  Z v = 0;
  while (n % p == 0) { n /= p; ++v; }
  return v;
}

Z val_rational(const Q& q, const Z& p) {
  if (q == 0) throw std::invalid_argument("valuation of zero");
  return val_int(num(q), p) - val_int(den(q), p);
}

int ord2_denominator(const Q& q) {
  if (q == 0) return 0;
  Z d = den(q);
  int v = 0;
  while (d % 2 == 0) { d /= 2; ++v; }
  return v;
}

Z mod_pow(Z b, Z e, const Z& m) {
  b %= m; if (b < 0) b += m;
  Z r = 1;
  while (e > 0) {
    if (e % 2 == 1) r = r * b % m;
    b = b * b % m;
    e /= 2;
  }
  return r;
}

Z mod_inv(const Z& a, const Z& m) {
  Z old_r = a % m, r = m, old_s = 1, s = 0;
  if (old_r < 0) old_r += m;
  while (r != 0) {
    Z qt = old_r / r;
    Z t = old_r - qt * r; old_r = r; r = t;
    t = old_s - qt * s; old_s = s; s = t;
  }
  if (old_r != 1) throw std::invalid_argument("mod_inv: not invertible");
  old_s %= m; if (old_s < 0) old_s += m;
  return old_s;
}

int legendre(Z a, const Z& p) {
  a %= p; if (a < 0) a += p;
  if (a == 0) return 0;
  Z r = mod_pow(a, (p - 1) / 2, p);
  return r == 1 ? 1 : -1;
}

std::optional<Z> sqrt_mod_p(Z a, const Z& p) {
  a %= p; if (a < 0) a += p;
  if (a == 0) return Z(0);
  if (legendre(a, p) != 1) return std::nullopt;
  if (p % 4 == 3) return mod_pow(a, (p + 1) / 4, p);
  // Tonelli-Shanks
  Z q = p - 1, s = 0;
  while (q % 2 == 0) { q /= 2; ++s; }
  Z zc = 2;
  while (legendre(zc, p) != -1) ++zc;
  Z m = s;
  Z c = mod_pow(zc, q, p);
  Z t = mod_pow(a, q, p);
  Z r = mod_pow(a, (q + 1) / 2, p);
  while (t != 1) {
    Z i = 0, tt = t;
    while (tt != 1) { tt = tt * tt % p; ++i; }
    Z b = c;
    for (Z j = 0; j < m - i - 1; ++j) b = b * b % p;
    m = i;
    c = b * b % p;
    t = t * c % p;
    r = r * b % p;
  }
  return r;
}

Z lift_sqrt(const Z& a, const Z& p, unsigned k, const Z& r0) {
  Z mod = p, r = r0 % p;
  for (unsigned i = 1; i < k; ++i) {
    Z next = mod * p;
    // Newton step: r <- r - (r^2 - a) / (2r) mod next
    Z f = (r * r - a) % next;
    Z corr = f * mod_inv(2 * r % next, next) % next;
    r = (r - corr) % next;
    if (r < 0) r += next;
    mod = next;
  }
  return r;
}

Q parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Q(Z(s));
  Z n(s.substr(0, slash)), d(s.substr(slash + 1));
  if (d == 0) throw std::invalid_argument("rational with zero denominator");
  return Q(n, d);
}

std::string show_rational(const Q& q) {
  std::string out = num(q).str();
  if (den(q) != 1) out += "/" + den(q).str();
  return out;
}

}  // namespace hyc
