#include "spv/rational.hpp"

#include <cctype>

namespace spv {

Rational make_rational(Int num, Int den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  // The two-argument constructor canonicalizes a positive-denominator pair.
  return Rational(std::move(num), std::move(den));
}

Int binomial(long long n, long long k) {
  if (n < 0 || k < 0) throw DomainError("binomial requires non-negative arguments");
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Int result = 1;
  // Each partial product is C(n-k+i, i), so the division is exact.
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

Int factorial(long long n) {
  if (n < 0) throw DomainError("factorial requires a non-negative argument");
  Int result = 1;
  for (long long i = 2; i <= n; ++i) result *= i;
  return result;
}

Rational rational_pow(const Rational& base, long long exp) {
  if (exp == 0) return Rational(1);
  if (base == 0) {
    if (exp < 0) throw ZeroToNegativePowerError();
    return Rational(0);
  }
  const auto mag = static_cast<unsigned long long>(exp < 0 ? -(exp + 1) + 1ULL : exp);
  Int num = pow(numerator(base), static_cast<unsigned>(mag));
  Int den = pow(denominator(base), static_cast<unsigned>(mag));
  if (exp < 0) std::swap(num, den);
  return make_rational(std::move(num), std::move(den));
}

Rational parse_rational(std::string_view text) {
  auto fail = [&] { throw DomainError("malformed rational: '" + std::string(text) + "'"); };
  std::string_view rest = text;
  bool negative = false;
  if (!rest.empty() && (rest.front() == '-' || rest.front() == '+')) {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }
  auto take_digits = [&]() -> Int {
    if (rest.empty() || !std::isdigit(static_cast<unsigned char>(rest.front()))) fail();
    Int value = 0;
    while (!rest.empty() && std::isdigit(static_cast<unsigned char>(rest.front()))) {
      value = value * 10 + (rest.front() - '0');
      rest.remove_prefix(1);
    }
    return value;
  };
  Int num = take_digits();
  Int den = 1;
  if (!rest.empty() && rest.front() == '/') {
    rest.remove_prefix(1);
    den = take_digits();
  }
  if (!rest.empty()) fail();
  if (negative) num = -num;
  return make_rational(std::move(num), std::move(den));
}

std::string to_fraction_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

} // namespace spv
