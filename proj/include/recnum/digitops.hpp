#pragma once

// Base-b digit manipulation over machine words and arbitrary precision
// naturals. Digit and block sequences are least-significant first; zero is
// represented by the single digit [0].

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "natural.hpp"

namespace recnum {

struct DigitVector {
  std::vector<std::uint32_t> digits;
  Base base;

  friend bool operator==(const DigitVector&, const DigitVector&) = default;
};

struct BlockVector {
  std::vector<natural> blocks;
  Base base;
  unsigned width = 1;

  natural radix() const { return pow_nat(base.value(), width); }

  friend bool operator==(const BlockVector& a, const BlockVector& b) {
    return a.base == b.base && a.width == b.width && a.blocks == b.blocks;
  }
};

namespace detail {

inline std::uint32_t char_digit(char c) {
  if (c >= '0' && c <= '9') return static_cast<std::uint32_t>(c - '0');
  if (c >= 'a' && c <= 'z') return static_cast<std::uint32_t>(c - 'a' + 10);
  if (c >= 'A' && c <= 'Z') return static_cast<std::uint32_t>(c - 'A' + 36);
  throw invariant_violation("unexpected digit character from GMP");
}

// mpz_get_str handles bases up to 62; only 2..36 use a case-insensitive
// alphabet, 37..62 use 0-9A-Za-z.
inline std::uint32_t gmp_char_digit(char c, std::uint32_t base) {
  if (base <= 36) {
    if (c >= 'A' && c <= 'Z') return static_cast<std::uint32_t>(c - 'A' + 10);
    return char_digit(c);
  }
  if (c >= '0' && c <= '9') return static_cast<std::uint32_t>(c - '0');
  if (c >= 'A' && c <= 'Z') return static_cast<std::uint32_t>(c - 'A' + 10);
  if (c >= 'a' && c <= 'z') return static_cast<std::uint32_t>(c - 'a' + 36);
  throw invariant_violation("unexpected digit character from GMP");
}

}  // namespace detail

template <natural_like N>
DigitVector to_digits(const N& n, Base b) {
  DigitVector out{{}, b};
  const std::uint32_t base = b.value();
  if constexpr (std::same_as<N, natural>) {
    if (sgn(n) < 0) throw domain_error("negative value has no digit expansion");
    if (base <= 62) {
      const std::string s = n.get_str(static_cast<int>(base));
      out.digits.reserve(s.size());
      for (auto it = s.rbegin(); it != s.rend(); ++it)
        out.digits.push_back(detail::gmp_char_digit(*it, base));
      return out;
    }
    natural q = n;
    do {
      out.digits.push_back(static_cast<std::uint32_t>(mpz_tdiv_q_ui(q.get_mpz_t(), q.get_mpz_t(), base)));
    } while (sgn(q) != 0);
  } else {
    N q = n;
    do {
      out.digits.push_back(static_cast<std::uint32_t>(q % base));
      q /= base;
    } while (q != 0);
  }
  return out;
}

inline natural from_digits(const DigitVector& d) {
  const std::uint32_t base = d.base.value();
  natural out = 0;
  for (auto it = d.digits.rbegin(); it != d.digits.rend(); ++it) {
    if (*it >= base)
      throw malformed_input("digit " + std::to_string(*it) + " is not below base " + std::to_string(base));
    out *= base;
    out += *it;
  }
  return out;
}

template <natural_like N>
N digit_sum(const N& n, Base b) {
  const std::uint32_t base = b.value();
  if constexpr (std::same_as<N, natural>) {
    if (fits_u64(n)) return from_u64(digit_sum(to_u64(n), b));
    std::uint64_t sum = 0;
    for (std::uint32_t d : to_digits(n, b).digits) sum += d;
    return from_u64(sum);
  } else {
    N sum = 0;
    N q = n;
    while (q != 0) {
      sum += q % base;
      q /= base;
    }
    return sum;
  }
}

// Number of base-b digits, with digit_count(0) = 1. Exact integer arithmetic
// only; never a floating point logarithm.
template <natural_like N>
std::size_t digit_count(const N& n, Base b) {
  const std::uint32_t base = b.value();
  if constexpr (std::same_as<N, natural>) {
    if (sgn(n) < 0) throw domain_error("negative value has no digit count");
    if (sgn(n) == 0) return 1;
    if (base <= 62) {
      // mpz_sizeinbase is exact or one too large.
      std::size_t m = mpz_sizeinbase(n.get_mpz_t(), static_cast<int>(base));
      if (m > 1 && n < pow_nat(base, m - 1)) --m;
      return m;
    }
    return to_digits(n, b).digits.size();
  } else {
    std::size_t m = 1;
    N q = n / base;
    while (q != 0) {
      ++m;
      q /= base;
    }
    return m;
  }
}

inline BlockVector group_blocks(const natural& n, Base b, unsigned width) {
  if (width < 1) throw config_error("block width must be >= 1");
  if (sgn(n) < 0) throw domain_error("negative value has no block expansion");
  BlockVector out{{}, b, width};
  if (width == 1) {
    for (std::uint32_t d : to_digits(n, b).digits) out.blocks.emplace_back(d);
    return out;
  }
  const natural radix = out.radix();
  natural q = n;
  do {
    natural r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), q.get_mpz_t(), radix.get_mpz_t());
    out.blocks.push_back(std::move(r));
  } while (sgn(q) != 0);
  return out;
}

inline natural from_blocks(const BlockVector& v) {
  const natural radix = v.radix();
  natural out = 0;
  for (auto it = v.blocks.rbegin(); it != v.blocks.rend(); ++it) {
    if (sgn(*it) < 0 || *it >= radix) throw malformed_input("block " + it->get_str() + " out of range");
    out = out * radix + *it;
  }
  return out;
}

template <natural_like N>
N reverse_digits(const N& n, Base b) {
  const std::uint32_t base = b.value();
  if constexpr (std::same_as<N, natural>) {
    DigitVector d = to_digits(n, b);
    std::reverse(d.digits.begin(), d.digits.end());
    return from_digits(d);
  } else {
    N out = 0;
    N q = n;
    while (q != 0) {
      out = out * base + q % base;
      q /= base;
    }
    return out;
  }
}

}  // namespace recnum
