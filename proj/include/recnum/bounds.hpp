#pragma once

// Explicit search cutoffs derived from finiteness arguments. Every decision
// is an exact integer comparison; reports carry the checks that justify them.

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "digitops.hpp"
#include "funcatalog.hpp"

namespace recnum {

struct BoundReport {
  natural s_k;         // max F over one block
  std::uint64_t M = 0; // least block count with b^{k(M-1)} > M * s_k
  natural n_max;       // (M - 1) * s_k, inclusive search ceiling
  std::vector<std::string> justification;
};

struct CutoffWitness {
  natural n;
  natural lhs;
  natural rhs;
  std::string relation;  // the comparison lhs <relation> rhs that was checked
  bool holds = false;

  friend bool operator==(const CutoffWitness&, const CutoffWitness&) = default;
};

struct CutoffReport {
  enum class Method { analytic, predicate_scan, caller_cap };
  natural cutoff;  // no solution at or above this value
  Method method = Method::analytic;
  std::string rule;
  std::vector<CutoffWitness> witnesses;
};

inline const char* to_string(CutoffReport::Method m) {
  switch (m) {
    case CutoffReport::Method::analytic: return "analytic";
    case CutoffReport::Method::predicate_scan: return "predicate_scan";
    case CutoffReport::Method::caller_cap: return "caller_cap";
  }
  return "?";
}

struct ScanOptions {
  std::uint64_t window = 50;        // consecutive confirmations before a scan cutoff is declared
  std::uint64_t max_scan = 1000000; // give up (unsupported_function) beyond this
};

// Largest block radix for which s_k is found by enumerating every block.
inline constexpr std::uint64_t kEnumerableRadix = std::uint64_t{1} << 20;
inline constexpr std::uint64_t kMaxEvalBits = std::uint64_t{1} << 26;

inline natural block_max(const FunctionSpec& spec, Base b, unsigned k) {
  if (k < 1) throw config_error("block width must be >= 1");
  const natural radix = pow_nat(b.value(), k);
  if (radix <= kEnumerableRadix) {
    const std::uint64_t r = to_u64(radix);
    natural best = spec.eval(std::uint64_t{0});
    for (std::uint64_t v = 1; v < r; ++v) {
      natural f = spec.eval(v);
      if (f > best) best = std::move(f);
    }
    return best;
  }
  if (!spec.nondecreasing_from_one())
    throw unsupported_function("cannot maximise " + spec.to_string() + " over " + radix.get_str() + " block values");
  // Refuse to materialise an astronomically large s_k.
  const natural top_arg = radix - 1;
  const std::size_t arg_bits = mpz_sizeinbase(top_arg.get_mpz_t(), 2);
  const GrowthClass g = spec.growth();
  natural est_bits;
  switch (g.kind) {
    case GrowthClass::Kind::polynomial: est_bits = natural(g.degree) * arg_bits; break;
    case GrowthClass::Kind::exponential: est_bits = top_arg * (g.ratio == 0 ? 1 : 64 - std::countl_zero(g.ratio)); break;
    default: est_bits = top_arg * arg_bits; break;
  }
  if (est_bits > kMaxEvalBits)
    throw unsupported_function("max of " + spec.to_string() + " over " + radix.get_str() +
                               " block values is too large to evaluate");
  natural best = spec.eval(std::uint64_t{0});
  natural top = spec.eval(radix - 1);
  return top > best ? top : best;
}

inline BoundReport hardy_bound(const FunctionSpec& spec, Base b, unsigned k) {
  BoundReport rep;
  rep.s_k = block_max(spec, b, k);
  const std::string bs = std::to_string(b.value());
  rep.justification.push_back("s_k = max F(v) for 0 <= v < " + bs + "^" + std::to_string(k) + " = " +
                              rep.s_k.get_str());
  for (std::uint64_t m = 1;; ++m) {
    const natural lhs = pow_nat(b.value(), k * (m - 1));
    const natural rhs = m * rep.s_k;
    const bool holds = lhs > rhs;
    rep.justification.push_back("m=" + std::to_string(m) + ": " + bs + "^" + std::to_string(k * (m - 1)) + " = " +
                                lhs.get_str() + (holds ? " > " : " <= ") + std::to_string(m) + "*s_k = " +
                                rhs.get_str());
    if (holds) {
      rep.M = m;
      break;
    }
  }
  rep.n_max = (rep.M - 1) * rep.s_k;
  rep.justification.push_back("an m-block solution has b^{k(m-1)} <= n <= m*s_k; b^k >= 2 keeps the inequality for all m >= M");
  rep.justification.push_back("n_max = (M-1)*s_k = " + rep.n_max.get_str());
  return rep;
}

// Least order m with b^{m-1} > m (b-1)^m. No Armstrong number has this many digits.
inline std::uint64_t armstrong_order_ceiling(Base b) {
  const natural top = b.value() - 1;
  for (std::uint64_t m = 1;; ++m)
    if (pow_nat(b.value(), m - 1) > m * pow_nat(top, m)) return m;
}

namespace detail {

inline CutoffWitness witness(const natural& n, natural lhs, natural rhs, const char* rel) {
  CutoffWitness w{n, std::move(lhs), std::move(rhs), rel, false};
  const std::string r = rel;
  if (r == ">=") w.holds = w.lhs >= w.rhs;
  else if (r == "<") w.holds = w.lhs < w.rhs;
  else if (r == ">") w.holds = w.lhs > w.rhs;
  else if (r == "<=") w.holds = w.lhs <= w.rhs;
  return w;
}

inline void require_witnesses(const CutoffReport& rep) {
  for (const auto& w : rep.witnesses)
    if (!w.holds)
      throw invariant_violation("cutoff witness failed at n=" + w.n.get_str() + ": " + w.lhs.get_str() + " " +
                                w.relation + " " + w.rhs.get_str());
}

// Sum of |coefficients|, rounded up: |F(n)| <= C n^d for n >= 1.
inline natural coefficient_mass(const fn::Polynomial& p) {
  mpq_class total = 0;
  for (const auto& c : p.coeffs) total += abs(c);
  natural out;
  mpz_cdiv_q(out.get_mpz_t(), total.get_num_mpz_t(), total.get_den_mpz_t());
  return out;
}

}  // namespace detail

// N such that no n >= N is a base-b F-Wells number (b^{n-1} <= F(n) < b^n).
inline CutoffReport wells_cutoff(const FunctionSpec& spec, Base b, const ScanOptions& opts = {}) {
  using detail::witness;
  CutoffReport rep;
  rep.method = CutoffReport::Method::analytic;
  const std::uint32_t base = b.value();
  const natural bn = base;

  auto above = [&](std::uint64_t n) {  // F(n) >= b^n
    return witness(n, spec.eval(n), pow_nat(base, n), ">=");
  };
  auto below = [&](std::uint64_t n) {  // F(n) < b^{n-1}
    return witness(n, spec.eval(n), pow_nat(base, n - 1), "<");
  };
  auto scan_for = [&](std::uint64_t from, auto&& pred) -> std::uint64_t {
    for (std::uint64_t n = from; n <= opts.max_scan; ++n)
      if (pred(n)) return n;
    throw unsupported_function("no Wells cutoff for " + spec.to_string() + " below " + std::to_string(opts.max_scan));
  };

  std::visit(detail::overloaded{
                 [&](const fn::Factorial&) {
                   // n! >= e (n/e)^n >= b^n once n >= e*b; 27183/10000 > e.
                   const std::uint64_t n = (std::uint64_t{base} * 27183 + 9999) / 10000;
                   rep.cutoff = n;
                   rep.rule = "n! >= e(n/e)^n >= b^n for n >= ceil(2.7183*b)";
                   rep.witnesses = {above(n), above(n + 1)};
                 },
                 [&](const fn::SelfPower&) {
                   rep.cutoff = bn;
                   rep.rule = "n^n >= b^n for n >= b";
                   rep.witnesses = {above(base), above(std::uint64_t{base} + 1)};
                 },
                 [&](const fn::Subfactorial&) {
                   // For n >= b: !(n+1) >= (n+1)!n - 1 >= b*!n, so !N >= b^N persists.
                   const std::uint64_t n = scan_for(base, [&](std::uint64_t v) { return above(v).holds; });
                   rep.cutoff = n;
                   rep.rule = "!N >= b^N with N >= b, and !(n+1) >= b*!n for n >= b";
                   rep.witnesses = {above(n), above(n + 1)};
                 },
                 [&](const fn::ExpBase& e) {
                   if (e.base >= base) {
                     rep.cutoff = 1;
                     rep.rule = "c >= b gives c^n >= b^n for every n";
                     rep.witnesses = {above(1), above(2)};
                     return;
                   }
                   const std::uint64_t n = scan_for(1, [&](std::uint64_t v) { return below(v).holds; });
                   rep.cutoff = n;
                   rep.rule = "c < b: c^N < b^{N-1} persists since c^{n+1} < c*b^{n-1} < b^n";
                   rep.witnesses = {below(n), below(n + 1)};
                 },
                 [&](const fn::Fibonacci&) {
                   const std::uint64_t n = scan_for(2, [&](std::uint64_t v) { return below(v).holds; });
                   rep.cutoff = n;
                   rep.rule = "F(N) < b^{N-1} with N >= 2, and F(n+1) <= 2F(n) <= b*F(n)";
                   rep.witnesses = {below(n), below(n + 1)};
                 },
                 [&](const auto&) {
                   // Polynomial growth: |F(n)| <= C n^d. Find N with C N^d < b^{N-1} and
                   // (N+1)^d <= b N^d; both persist for all n >= N.
                   const GrowthClass g = spec.growth();
                   natural mass = 1;
                   if (const auto* p = std::get_if<fn::Polynomial>(&spec.kind())) mass = detail::coefficient_mass(*p);
                   const unsigned long d = g.degree;
                   const std::uint64_t n = scan_for(1, [&](std::uint64_t v) {
                     const natural nd = pow_nat(from_u64(v), d);
                     return mass * nd < pow_nat(base, v - 1) && pow_nat(from_u64(v + 1), d) <= bn * nd;
                   });
                   rep.cutoff = n;
                   rep.rule = "C n^d < b^{n-1} with (n+1)^d <= b n^d persists; C = " + mass.get_str() +
                              ", d = " + std::to_string(d);
                   for (std::uint64_t v : {n, n + 1})
                     rep.witnesses.push_back(
                         witness(v, mass * pow_nat(from_u64(v), d), pow_nat(base, v - 1), "<"));
                 },
             },
             spec.kind());
  detail::require_witnesses(rep);
  return rep;
}

namespace detail {

// Least N after which pred(n) holds for `window` consecutive n with a margin
// that grew across the window. pred returns the signed margin (> 0 = holds).
template <class MarginFn>
std::uint64_t scan_persistent(MarginFn&& margin, std::uint64_t from, const ScanOptions& opts, const std::string& what,
                              std::vector<CutoffWitness>& witnesses, auto&& make_witness) {
  std::uint64_t start = from;
  mpz_class start_margin;
  bool in_run = false;
  for (std::uint64_t n = from; n <= opts.max_scan; ++n) {
    const mpz_class m = margin(n);
    if (sgn(m) <= 0) {
      in_run = false;
      continue;
    }
    if (!in_run) {
      in_run = true;
      start = n;
      start_margin = m;
    }
    if (n - start + 1 >= opts.window && m > start_margin) {
      if (start > from) witnesses.push_back(make_witness(start - 1));
      witnesses.push_back(make_witness(start));
      witnesses.push_back(make_witness(n));
      return start;
    }
  }
  throw unsupported_function("no persistent cutoff for " + what + " below " + std::to_string(opts.max_scan));
}

}  // namespace detail

// N such that n > (b-1) * digit_count(F(n)) for all n >= N, which rules out
// F-Dudeney numbers (n = digit_sum(F(n))) at or above N.
inline CutoffReport dudeney_cutoff(const FunctionSpec& spec, Base b, std::optional<natural> cap = std::nullopt,
                                   const ScanOptions& opts = {}) {
  CutoffReport rep;
  if (cap) {
    if (*cap < 1) throw config_error("cap must be >= 1");
    rep.method = CutoffReport::Method::caller_cap;
    rep.cutoff = *cap + 1;
    rep.rule = "caller-supplied cap " + cap->get_str();
    return rep;
  }
  if (spec.growth().kind != GrowthClass::Kind::polynomial)
    throw unsupported_function("no Dudeney finiteness argument for " + spec.to_string() +
                               " (needs polynomial growth); supply a cap");
  const std::uint64_t top = b.value() - 1;
  auto margin = [&](std::uint64_t n) -> mpz_class {
    return from_u64(n) - from_u64(top * digit_count(spec.eval(n), b));
  };
  auto make = [&](std::uint64_t n) {
    return detail::witness(from_u64(n), from_u64(n), from_u64(top * digit_count(spec.eval(n), b)), ">");
  };
  const std::uint64_t n = detail::scan_persistent(margin, 1, opts, spec.to_string(), rep.witnesses, make);
  rep.cutoff = n;
  rep.method = CutoffReport::Method::predicate_scan;
  rep.rule = "n > (b-1)*D_b(F(n)) for " + std::to_string(opts.window) + " consecutive n with growing margin";
  return rep;
}

struct PowersumBound {
  natural coarse;  // b^{p^2}
  natural s_max;   // min(s_scan, b^p)
  natural s_scan;  // largest s with s <= (b-1) * D_b(s^p), found by scan
};

inline PowersumBound powersum_bound(unsigned long p, Base b, const ScanOptions& opts = {}) {
  if (p < 2) throw config_error("powersum exponent must be >= 2");
  PowersumBound out;
  out.coarse = pow_nat(b.value(), p * p);
  const std::uint64_t top = b.value() - 1;
  std::uint64_t last = 0, misses = 0;
  for (std::uint64_t s = 1;; ++s) {
    if (s > opts.max_scan) throw unsupported_function("powersum scan did not settle");
    if (s <= top * digit_count(pow_nat(from_u64(s), p), b)) {
      last = s;
      misses = 0;
    } else if (++misses >= opts.window) {
      break;
    }
  }
  out.s_scan = last;
  const natural root = pow_nat(b.value(), p);
  out.s_max = out.s_scan < root ? out.s_scan : root;
  return out;
}

}  // namespace recnum
