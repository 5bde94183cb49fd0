#include "hilbound/field.hpp"

namespace hilbound {

namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

FieldTag FieldTag::parse(const std::string& s) {
  if (s == "Q") return rationals();
  if (s.size() >= 2 && s[0] == 'F') {
    std::uint64_t p = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9')
        throw input_error("bad field tag: " + s);
      p = p * 10 + (s[i] - '0');
      if (p > 0xFFFFFFFFull) throw input_error("field modulus too large: " + s);
    }
    return prime(static_cast<std::uint32_t>(p));
  }
  throw input_error("bad field tag (expected \"Q\" or \"F<p>\"): " + s);
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p == 0) throw input_error("zero modulus");
  if (!is_prime(p)) throw input_error("modulus " + std::to_string(p) + " is not prime");
}

PrimeField::Elem PrimeField::from_int(const Int& n) const {
  return static_cast<Elem>(mpz_fdiv_ui(n.get_mpz_t(), p_));
}

PrimeField::Elem PrimeField::from_long(long long n) const {
  long long r = n % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw internal_error("division by zero in F_p");
  // extended Euclid on (a, p)
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<Elem>(t);
}

}  // namespace hilbound
