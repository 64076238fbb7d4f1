#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <limits>
#include <string>

#include "errors.hpp"

namespace recnum {

// Arbitrary precision natural number. All values that may outgrow a machine
// word travel as `natural`; search kernels drop to uint64_t only after a
// ceiling check.
using natural = mpz_class;

template <typename T>
concept machine_natural = std::unsigned_integral<T> && !std::same_as<T, bool>;

template <typename T>
concept natural_like = machine_natural<T> || std::same_as<T, natural>;

// Positional radix, always >= 2.
class Base {
public:
  explicit Base(std::uint64_t value) : value_(static_cast<std::uint32_t>(value)) {
    if (value < 2 || value > std::numeric_limits<std::uint32_t>::max())
      throw config_error("invalid base " + std::to_string(value) + " (need 2 <= b < 2^32)");
  }

  std::uint32_t value() const noexcept { return value_; }
  friend bool operator==(Base, Base) = default;

private:
  std::uint32_t value_;
};

inline natural pow_nat(const natural& base, unsigned long exponent) {
  natural out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

inline natural pow_nat(unsigned long base, unsigned long exponent) {
  natural out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exponent);
  return out;
}

inline bool fits_u64(const natural& n) {
  return sgn(n) >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const natural& n) {
  if (!fits_u64(n))
    throw config_error("value " + n.get_str() + " does not fit in 64 bits");
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof out, 0, 0, n.get_mpz_t());
  return out;
}

inline natural from_u64(std::uint64_t v) {
  natural out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
  return out;
}

// Checked unsigned long extraction for exponents and factorial arguments.
inline unsigned long to_ulong_checked(const natural& n, const char* what) {
  if (sgn(n) < 0 || !n.fits_ulong_p())
    throw domain_error(std::string(what) + " argument " + n.get_str() + " is out of range");
  return n.get_ui();
}

inline natural parse_natural(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw malformed_input("not a natural number: '" + text + "'");
  return natural(text, 10);
}

}  // namespace recnum
