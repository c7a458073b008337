#pragma once

#include <gmpxx.h>

#include <string>

namespace sl2voa {

// Exact rational coefficient used everywhere.
using Scalar = mpq_class;

inline Scalar make_scalar(long num, long den = 1) {
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

// "p/q", or "p" when the denominator is one.
std::string to_string(const Scalar& q);

bool is_integer(const Scalar& q);
bool is_half_odd(const Scalar& q);  // q in 1/2 + Z

// Exact floor for rationals.
long floor_to_long(const Scalar& q);
long to_long(const Scalar& q);  // requires is_integer

// Generalized binomial q(q-1)...(q-n+1)/n! for any rational q.
Scalar binomial(const Scalar& q, int n);

}  // namespace sl2voa
