#pragma once

// Catalog of digit/argument functions F with exact evaluation, a stable text
// form and growth-class metadata for the bounds module.
//
// Text grammar (total; anything else is rejected):
//   pow:<e>          x^e, e >= 1
//   selfpow          x^x, 0^0 per ZeroPowZero
//   expbase:<c>      c^x, c >= 2
//   factorial        x!
//   subfactorial     !x (derangements)
//   fib              Fibonacci(x), F(1) = F(2) = 1, undefined at 0
//   poly:<q>,...     polynomial, coefficients highest degree first,
//                    each an integer or p/q rational

#include <gmpxx.h>

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "natural.hpp"

namespace recnum {

enum class ZeroPowZero { one, zero };

namespace fn {
struct Power {
  unsigned long exponent;
  friend bool operator==(const Power&, const Power&) = default;
};
struct SelfPower {
  friend bool operator==(const SelfPower&, const SelfPower&) = default;
};
struct ExpBase {
  unsigned long base;
  friend bool operator==(const ExpBase&, const ExpBase&) = default;
};
struct Factorial {
  friend bool operator==(const Factorial&, const Factorial&) = default;
};
struct Subfactorial {
  friend bool operator==(const Subfactorial&, const Subfactorial&) = default;
};
struct Fibonacci {
  friend bool operator==(const Fibonacci&, const Fibonacci&) = default;
};
struct Polynomial {
  std::vector<mpq_class> coeffs;  // highest degree first, no leading zero unless constant
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs == b.coeffs; }
};
}  // namespace fn

using FunctionKind =
    std::variant<fn::Power, fn::SelfPower, fn::ExpBase, fn::Factorial, fn::Subfactorial, fn::Fibonacci, fn::Polynomial>;

struct GrowthClass {
  enum class Kind { polynomial, factorial_like, exponential, self_exponential };
  Kind kind;
  unsigned long degree = 0;  // polynomial only
  unsigned long ratio = 0;   // exponential only; 0 stands for the golden ratio

  friend bool operator==(const GrowthClass&, const GrowthClass&) = default;
};

inline natural factorial(unsigned long x) {
  natural out;
  mpz_fac_ui(out.get_mpz_t(), x);
  return out;
}

// !0 = 1, !1 = 0, !x = (x-1)(!(x-1) + !(x-2)).
inline natural subfactorial(unsigned long x) {
  if (x == 0) return 1;
  natural prev2 = 1, prev1 = 0;
  for (unsigned long i = 2; i <= x; ++i) {
    natural next = (i - 1) * (prev1 + prev2);
    prev2 = std::move(prev1);
    prev1 = std::move(next);
  }
  return prev1;
}

// Fast doubling: F(2j) = F(j)(2F(j+1) - F(j)), F(2j+1) = F(j)^2 + F(j+1)^2.
inline natural fibonacci(unsigned long x) {
  if (x == 0) throw domain_error("fibonacci is indexed from 1");
  natural a = 0, b = 1;  // F(j), F(j+1) with j = 0
  for (int bit = 63; bit >= 0; --bit) {
    natural c = a * (2 * b - a);
    natural d = a * a + b * b;
    if ((x >> bit) & 1UL) {
      a = std::move(d);
      b = c + a;
    } else {
      a = std::move(c);
      b = std::move(d);
    }
  }
  return a;
}

class FunctionSpec {
public:
  explicit FunctionSpec(FunctionKind kind, ZeroPowZero zpz = ZeroPowZero::one) : kind_(std::move(kind)), zpz_(zpz) {
    validate();
  }

  static FunctionSpec parse(std::string_view text, ZeroPowZero zpz = ZeroPowZero::one);

  const FunctionKind& kind() const noexcept { return kind_; }
  ZeroPowZero zero_pow_zero() const noexcept { return zpz_; }

  FunctionSpec with_zero_pow_zero(ZeroPowZero zpz) const { return FunctionSpec(kind_, zpz); }

  std::string to_string() const;
  GrowthClass growth() const;

  // True when F is non-decreasing on x >= 1, so max F over 0..top is
  // max(F(0), F(top)).
  bool nondecreasing_from_one() const { return !std::holds_alternative<fn::Polynomial>(kind_); }

  natural eval(const natural& x) const;
  natural eval(std::uint64_t x) const { return eval(from_u64(x)); }

  friend bool operator==(const FunctionSpec& a, const FunctionSpec& b) {
    return a.kind_ == b.kind_ && a.zpz_ == b.zpz_;
  }

private:
  void validate();

  FunctionKind kind_;
  ZeroPowZero zpz_;
};

namespace detail {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Strict unsigned decimal: no sign, no leading zeros, no whitespace.
inline bool parse_plain_ulong(std::string_view s, unsigned long& out) {
  if (s.empty() || (s.size() > 1 && s[0] == '0')) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

inline bool parse_plain_integer(std::string_view s, mpz_class& out) {
  bool neg = false;
  if (!s.empty() && s[0] == '-') {
    neg = true;
    s.remove_prefix(1);
  }
  if (s.empty() || (s.size() > 1 && s[0] == '0')) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  if (neg && s == "0") return false;
  out = mpz_class(std::string(s), 10);
  if (neg) out = -out;
  return true;
}

inline bool parse_rational(std::string_view s, mpq_class& out) {
  const auto slash = s.find('/');
  mpz_class num, den = 1;
  if (!parse_plain_integer(s.substr(0, slash), num)) return false;
  if (slash != std::string_view::npos) {
    if (!parse_plain_integer(s.substr(slash + 1), den) || sgn(den) <= 0) return false;
  }
  out = mpq_class(num, den);
  out.canonicalize();
  return true;
}

}  // namespace detail

inline void FunctionSpec::validate() {
  std::visit(detail::overloaded{
                 [](const fn::Power& p) {
                   if (p.exponent < 1) throw config_error("power exponent must be >= 1");
                 },
                 [](const fn::ExpBase& e) {
                   if (e.base < 2) throw config_error("exponential base must be >= 2");
                 },
                 [](fn::Polynomial& p) {
                   if (p.coeffs.empty()) throw config_error("polynomial needs at least one coefficient");
                   std::size_t lead = 0;
                   while (lead + 1 < p.coeffs.size() && sgn(p.coeffs[lead]) == 0) ++lead;
                   p.coeffs.erase(p.coeffs.begin(), p.coeffs.begin() + static_cast<std::ptrdiff_t>(lead));
                   for (auto& c : p.coeffs) c.canonicalize();
                 },
                 [](const auto&) {},
             },
             kind_);
}

inline FunctionSpec FunctionSpec::parse(std::string_view text, ZeroPowZero zpz) {
  auto fail = [&]() -> FunctionSpec { throw malformed_input("unrecognised function spec '" + std::string(text) + "'"); };
  if (text == "selfpow") return FunctionSpec(fn::SelfPower{}, zpz);
  if (text == "factorial") return FunctionSpec(fn::Factorial{}, zpz);
  if (text == "subfactorial") return FunctionSpec(fn::Subfactorial{}, zpz);
  if (text == "fib") return FunctionSpec(fn::Fibonacci{}, zpz);
  unsigned long v = 0;
  if (text.starts_with("pow:")) {
    if (!detail::parse_plain_ulong(text.substr(4), v) || v < 1) return fail();
    return FunctionSpec(fn::Power{v}, zpz);
  }
  if (text.starts_with("expbase:")) {
    if (!detail::parse_plain_ulong(text.substr(8), v) || v < 2) return fail();
    return FunctionSpec(fn::ExpBase{v}, zpz);
  }
  if (text.starts_with("poly:")) {
    std::string_view rest = text.substr(5);
    fn::Polynomial poly;
    while (true) {
      const auto comma = rest.find(',');
      mpq_class q;
      if (!detail::parse_rational(rest.substr(0, comma), q)) return fail();
      poly.coeffs.push_back(q);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    return FunctionSpec(std::move(poly), zpz);
  }
  return fail();
}

inline std::string FunctionSpec::to_string() const {
  return std::visit(detail::overloaded{
                        [](const fn::Power& p) { return "pow:" + std::to_string(p.exponent); },
                        [](const fn::SelfPower&) { return std::string("selfpow"); },
                        [](const fn::ExpBase& e) { return "expbase:" + std::to_string(e.base); },
                        [](const fn::Factorial&) { return std::string("factorial"); },
                        [](const fn::Subfactorial&) { return std::string("subfactorial"); },
                        [](const fn::Fibonacci&) { return std::string("fib"); },
                        [](const fn::Polynomial& p) {
                          std::string out = "poly:";
                          for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
                            if (i) out += ',';
                            out += p.coeffs[i].get_str();
                          }
                          return out;
                        },
                    },
                    kind_);
}

inline GrowthClass FunctionSpec::growth() const {
  using K = GrowthClass::Kind;
  return std::visit(detail::overloaded{
                        [](const fn::Power& p) { return GrowthClass{K::polynomial, p.exponent, 0}; },
                        [](const fn::Polynomial& p) { return GrowthClass{K::polynomial, p.coeffs.size() - 1, 0}; },
                        [](const fn::Factorial&) { return GrowthClass{K::factorial_like}; },
                        [](const fn::Subfactorial&) { return GrowthClass{K::factorial_like}; },
                        [](const fn::ExpBase& e) { return GrowthClass{K::exponential, 0, e.base}; },
                        [](const fn::Fibonacci&) { return GrowthClass{K::exponential, 0, 0}; },
                        [](const fn::SelfPower&) { return GrowthClass{K::self_exponential}; },
                    },
                    kind_);
}

inline natural FunctionSpec::eval(const natural& x) const {
  if (sgn(x) < 0) throw domain_error("negative argument");
  return std::visit(detail::overloaded{
                        [&](const fn::Power& p) { return pow_nat(x, p.exponent); },
                        [&](const fn::SelfPower&) {
                          if (sgn(x) == 0) return natural(zpz_ == ZeroPowZero::one ? 1 : 0);
                          return pow_nat(x, to_ulong_checked(x, "self-power"));
                        },
                        [&](const fn::ExpBase& e) { return pow_nat(e.base, to_ulong_checked(x, "exponential")); },
                        [&](const fn::Factorial&) { return factorial(to_ulong_checked(x, "factorial")); },
                        [&](const fn::Subfactorial&) { return subfactorial(to_ulong_checked(x, "subfactorial")); },
                        [&](const fn::Fibonacci&) { return fibonacci(to_ulong_checked(x, "fibonacci")); },
                        [&](const fn::Polynomial& p) {
                          const mpq_class xq(x);
                          mpq_class acc = 0;
                          for (const auto& c : p.coeffs) acc = acc * xq + c;
                          acc.canonicalize();
                          if (acc.get_den() != 1 || sgn(acc) < 0)
                            throw domain_error("polynomial " + to_string() + " at " + x.get_str() + " gives " +
                                               acc.get_str() + ", not a natural number");
                          return natural(acc.get_num());
                        },
                    },
                    kind_);
}

}  // namespace recnum
