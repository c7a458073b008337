#include "sl2voa/scalar.hpp"

#include "sl2voa/errors.hpp"

namespace sl2voa {

std::string to_string(const Scalar& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_integer(const Scalar& q) { return q.get_den() == 1; }

bool is_half_odd(const Scalar& q) { return q.get_den() == 2; }

long floor_to_long(const Scalar& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  if (!f.fits_slong_p()) throw OutOfRange("rational out of machine range");
  return f.get_si();
}

long to_long(const Scalar& q) {
  if (!is_integer(q)) throw Error("expected an integer, got " + to_string(q));
  return floor_to_long(q);
}

Scalar binomial(const Scalar& q, int n) {
  if (n < 0) return 0;
  Scalar result = 1;
  for (int t = 0; t < n; ++t) {
    result *= (q - t);
    result /= (t + 1);
  }
  return result;
}

}  // namespace sl2voa
