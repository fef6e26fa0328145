#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace jla {

/// Exact rational scalar, always canonical: lowest terms, positive
/// denominator. All core arithmetic in this project is over Rational;
/// there is no floating point anywhere.
using Rational = mpq_class;

/// Coordinate vector of Rationals.
using Vec = std::vector<Rational>;

inline bool is_zero(const Rational& r) { return mpq_sgn(r.get_mpq_t()) == 0; }

/// Parses "p/q" or "p" (q > 0 after canonicalization). Throws InputError on
/// malformed text or zero denominator.
Rational rational_from_string(std::string_view s);

/// Serializes as "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

bool is_integer(const Rational& r);

/// The integer value of an integral Rational (throws if not integral or out
/// of range).
long to_long(const Rational& r);

bool is_zero_vec(const Vec& v);
Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rational& s, const Vec& v);
Vec& add_scaled(Vec& acc, const Rational& s, const Vec& v);

}  // namespace jla
