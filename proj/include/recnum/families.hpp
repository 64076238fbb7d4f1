#pragma once

// Constructive infinite families with exact verification:
//  - concatenated squares  x || y = x^2 + y^2  from the Fermat primes 17, 257, 65537;
//  - the cube family seeded by 153: 1 6..6 || 5 0..0 || 3 3..3.

#include <cstdint>
#include <string>
#include <utility>

#include "digitops.hpp"

namespace recnum {

// Family for the Fermat prime fe = 2^(2^i) + 1, i in {2, 3, 4}, at step t:
// a = 2^(2^(i-1)), l = (fe - 1) / 4, u = 4t + 3, B = 10^(l*u),
// x = a(aB - 1) / fe, y = a(a + B) / fe.
struct PiezasParams {
  unsigned fermat_index;
  std::uint64_t t;

  PiezasParams(unsigned i, std::uint64_t step) : fermat_index(i), t(step) {
    if (i < 2 || i > 4) throw config_error("fermat index must be 2, 3 or 4 (primes 17, 257, 65537)");
  }

  natural fe() const { return pow_nat(2, 1UL << fermat_index) + 1; }
  natural a() const { return pow_nat(2, 1UL << (fermat_index - 1)); }
  std::uint64_t l() const { return ((std::uint64_t{1} << (1U << fermat_index))) / 4; }
  std::uint64_t u() const { return 4 * t + 3; }
  std::uint64_t block_length() const { return l() * u(); }
};

struct ConcatSquarePair {
  natural x;
  natural y;
  std::uint64_t block_length = 0;
};

// x * 10^L + y == x^2 + y^2 with both sides below 10^L.
inline bool verify_concat_square(const natural& x, const natural& y, std::uint64_t block_length) {
  const natural radix = pow_nat(10, block_length);
  if (sgn(x) < 0 || sgn(y) < 0 || x >= radix || y >= radix) return false;
  return x * radix + y == x * x + y * y;
}

inline ConcatSquarePair piezas_generate(const PiezasParams& params) {
  const natural fe = params.fe();
  const natural a = params.a();
  const std::uint64_t len = params.block_length();
  const natural big = pow_nat(10, len);
  natural xn = a * (a * big - 1), yn = a * (a + big);
  ConcatSquarePair pair;
  pair.block_length = len;
  natural rx, ry;
  mpz_tdiv_qr(pair.x.get_mpz_t(), rx.get_mpz_t(), xn.get_mpz_t(), fe.get_mpz_t());
  mpz_tdiv_qr(pair.y.get_mpz_t(), ry.get_mpz_t(), yn.get_mpz_t(), fe.get_mpz_t());
  if (sgn(rx) != 0 || sgn(ry) != 0)
    throw invariant_violation("inexact division by Fermat prime " + fe.get_str());
  return pair;
}

inline ConcatSquarePair piezas_generate(unsigned fermat_index, std::uint64_t t) {
  return piezas_generate(PiezasParams(fermat_index, t));
}

// 10^k - x, the x-reflection of a concatenated-square pair.
inline natural reflect_pair(const natural& x, std::uint64_t block_length) {
  const natural radix = pow_nat(10, block_length);
  if (x < 1 || x >= radix) throw config_error("reflect_pair needs 1 <= x < 10^k");
  return radix - x;
}

struct CubeTriple {
  natural x, y, z, n;
};

inline CubeTriple vitalis_generate(std::uint64_t l) {
  const std::string xs = "1" + std::string(l, '6');
  const std::string ys = "5" + std::string(l, '0');
  const std::string zs = "3" + std::string(l, '3');
  CubeTriple out{natural(xs, 10), natural(ys, 10), natural(zs, 10), natural(xs + ys + zs, 10)};
  if (out.x * out.x * out.x + out.y * out.y * out.y + out.z * out.z * out.z != out.n)
    throw invariant_violation("cube family identity fails at l=" + std::to_string(l));
  return out;
}

}  // namespace recnum
