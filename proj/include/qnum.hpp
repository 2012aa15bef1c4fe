#pragma once

// Exact arithmetic primitives: big integers/rationals, p-adic valuations of
// rationals and quadratic surds, Legendre symbols, modular square roots.

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace hyc {

using Z = boost::multiprecision::cpp_int;
using Q = boost::multiprecision::cpp_rational;

inline Z num(const Q& q) { return boost::multiprecision::numerator(q); }
inline Z den(const Q& q) { return boost::multiprecision::denominator(q); }

// floor of a rational
Z qfloor(const Q& q);
Z qceil(const Q& q);
bool is_integer(const Q& q);
bool is_half_integer(const Q& q);   // element of (1/2)Z
bool is_even_integer(const Q& q);

// exponent of p in a nonzero integer
Z val_int(Z n, const Z& p);

// exponent of p in a nonzero rational (normalised valuation of K = Q_p)
Z val_rational(const Q& q, const Z& p);

// 2-adic order of the denominator of q (the xi function's core), xi(0) = 0
int ord2_denominator(const Q& q);

// Legendre symbol (a|p) for odd prime p; 0 when p | a
int legendre(Z a, const Z& p);

Z mod_pow(Z b, Z e, const Z& m);
Z mod_inv(const Z& a, const Z& m);  // inverse mod m, gcd(a,m)=1

// Tonelli-Shanks square root mod odd prime p; nullopt for non-residues
std::optional<Z> sqrt_mod_p(Z a, const Z& p);

// Hensel-lift a square root of a mod p^k (p odd, p does not divide a,
// a a residue mod p); returns the lift congruent to r0 mod p.
Z lift_sqrt(const Z& a, const Z& p, unsigned k, const Z& r0);

// parse "a/b" or "a" into an exact rational
Q parse_rational(const std::string& s);
std::string show_rational(const Q& q);

}  // namespace hyc
