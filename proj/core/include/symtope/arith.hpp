#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace symtope {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

// Thrown when an enumeration would exceed a configured size guard.
class GuardExceeded : public std::runtime_error {
public:
  GuardExceeded(std::string guard, const std::string &what)
      : std::runtime_error(what), guard_(std::move(guard)) {}
  const std::string &guard() const { return guard_; }

private:
  std::string guard_;
};

inline Integer gcd(const Integer &a, const Integer &b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm(const Integer &a, const Integer &b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline Integer floor_div(const Integer &a, const Integer &b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline bool is_integral(const Rational &q) { return q.get_den() == 1; }

inline bool all_integral(const RatVector &v) {
  for (const auto &x : v)
    if (!is_integral(x))
      return false;
  return true;
}

// Fractional part in [0, 1).
inline Rational frac(const Rational &q) {
  Rational r(q.get_num() - floor_div(q.get_num(), q.get_den()) * q.get_den(), q.get_den());
  r.canonicalize();
  return r;
}

inline Integer gcd_of(const IntVector &v) {
  Integer g = 0;
  for (const auto &x : v)
    g = gcd(g, x);
  return g;
}

// Divide by the gcd of the entries; the zero vector is returned unchanged.
inline IntVector primitive(IntVector v) {
  Integer g = gcd_of(v);
  if (g > 1)
    for (auto &x : v)
      x /= g;
  return v;
}

// Scale a rational vector to the primitive integer vector with the same direction.
inline IntVector clear_denominators(const RatVector &v) {
  Integer l = 1;
  for (const auto &x : v)
    l = lcm(l, x.get_den());
  IntVector out;
  out.reserve(v.size());
  for (const auto &x : v)
    out.push_back(x.get_num() * (l / x.get_den()));
  return primitive(std::move(out));
}

inline std::string to_string(const Rational &q) {
  if (q.get_den() == 1)
    return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::string to_string(const Integer &z) { return z.get_str(); }

inline std::int64_t to_int64(const Integer &z) {
  if (!z.fits_slong_p())
    throw std::overflow_error("integer does not fit in 64 bits: " + z.get_str());
  return z.get_si();
}

inline IntVector to_integers(const std::vector<long> &v) {
  IntVector out;
  out.reserve(v.size());
  for (long x : v)
    out.emplace_back(x);
  return out;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

} // namespace symtope
