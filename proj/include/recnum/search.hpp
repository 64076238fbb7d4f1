#pragma once

// Bound-pruned exhaustive searches for digit-defined fixed points. Every hit
// is rebuilt from raw digits and re-verified before it is returned, and all
// result sequences are sorted ascending independent of the worker count.

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "digitops.hpp"
#include "engines.hpp"
#include "funcatalog.hpp"
#include "parallel.hpp"

namespace recnum {

enum class Family { hardy, armstrong, wells, wells_reverse, dudeney, powersum };

inline const char* to_string(Family f) {
  switch (f) {
    case Family::hardy: return "hardy";
    case Family::armstrong: return "armstrong";
    case Family::wells: return "wells";
    case Family::wells_reverse: return "wells-reverse";
    case Family::dudeney: return "dudeney";
    case Family::powersum: return "powersum";
  }
  return "?";
}

enum class Engine { automatic, scan, multiset, preimage };

inline const char* to_string(Engine e) {
  switch (e) {
    case Engine::automatic: return "auto";
    case Engine::scan: return "scan";
    case Engine::multiset: return "multiset";
    case Engine::preimage: return "preimage";
  }
  return "?";
}

struct SearchConfig {
  Base base{10};
  unsigned k = 1;
  FunctionSpec fn{fn::Power{3}};
  Engine engine = Engine::automatic;
  std::optional<natural> cap;
  bool include_zero = false;
  unsigned jobs = 1;
};

// A found number with its decomposition. For hardy/armstrong `images` holds
// F of each block; for wells and dudeney it holds the single value F(n); for
// wells-reverse F(D_b(n)); for powersum the digit sum.
struct SearchHit {
  natural value;
  BlockVector blocks;
  std::vector<natural> images;
  Family family;
};

struct ReversalHit {
  natural value;
  std::uint64_t multiplier = 0;
  natural reversal;
};

inline std::vector<natural> values_of(const std::vector<SearchHit>& hits) {
  std::vector<natural> out;
  out.reserve(hits.size());
  for (const auto& h : hits) out.push_back(h.value);
  return out;
}

// Hit construction: each factory recomputes the defining equation from the
// raw digits and throws invariant_violation when it does not hold.

inline SearchHit make_hardy_hit(const natural& n, const FunctionSpec& spec, Base b, unsigned k,
                                Family family = Family::hardy) {
  SearchHit hit{n, group_blocks(n, b, k), {}, family};
  natural total = 0;
  for (const auto& blk : hit.blocks.blocks) {
    hit.images.push_back(spec.eval(blk));
    total += hit.images.back();
  }
  if (total != n) throw invariant_violation("hardy hit " + n.get_str() + " does not re-verify");
  return hit;
}

inline SearchHit make_armstrong_hit(const natural& n, Base b) {
  const std::size_t order = digit_count(n, b);
  SearchHit hit = make_hardy_hit(n, FunctionSpec(fn::Power{order}), b, 1, Family::armstrong);
  return hit;
}

inline SearchHit make_wells_hit(const natural& n, const FunctionSpec& spec, Base b) {
  SearchHit hit{n, group_blocks(n, b, 1), {spec.eval(n)}, Family::wells};
  if (n != digit_count(hit.images[0], b)) throw invariant_violation("wells hit " + n.get_str() + " does not re-verify");
  return hit;
}

inline SearchHit make_wells_reverse_hit(const natural& n, const FunctionSpec& spec, Base b) {
  // 0 is read as the empty digit string, so its candidate image is F(0).
  const natural image = sgn(n) == 0 ? spec.eval(n) : spec.eval(from_u64(digit_count(n, b)));
  SearchHit hit{n, group_blocks(n, b, 1), {image}, Family::wells_reverse};
  if (image != n) throw invariant_violation("wells-reverse hit " + n.get_str() + " does not re-verify");
  return hit;
}

inline SearchHit make_dudeney_hit(const natural& n, const FunctionSpec& spec, Base b) {
  SearchHit hit{n, group_blocks(n, b, 1), {spec.eval(n)}, Family::dudeney};
  if (digit_sum(hit.images[0], b) != n) throw invariant_violation("dudeney hit " + n.get_str() + " does not re-verify");
  return hit;
}

inline SearchHit make_powersum_hit(const natural& n, unsigned long p, Base b) {
  SearchHit hit{n, group_blocks(n, b, 1), {digit_sum(n, b)}, Family::powersum};
  if (pow_nat(hit.images[0], p) != n) throw invariant_violation("powersum hit " + n.get_str() + " does not re-verify");
  return hit;
}

inline ReversalHit make_reversal_hit(const natural& n, Base b) {
  ReversalHit hit{n, 0, reverse_digits(n, b)};
  if (sgn(hit.reversal) == 0 || digit_count(hit.reversal, b) != digit_count(n, b) || n % hit.reversal != 0)
    throw invariant_violation("reversal hit " + n.get_str() + " does not re-verify");
  const natural q = n / hit.reversal;
  if (q < 2) throw invariant_violation("reversal hit " + n.get_str() + " has multiplier < 2");
  hit.multiplier = to_u64(q);
  return hit;
}

namespace detail {

inline void require_search_base(Base b) {
  if (b.value() > 36) throw config_error("searches support bases 2..36");
}

inline bool fits_sum(const natural& a) { return fits_u64(a); }

// Splits [lo, hi] into contiguous slices, scans them on `jobs` workers and
// concatenates the per-slice results in slice order.
template <class PerSlice>
std::vector<std::uint64_t> sliced_scan(std::uint64_t lo, std::uint64_t hi, unsigned jobs, PerSlice&& per_slice) {
  if (lo > hi) return {};
  const std::uint64_t span = hi - lo;
  const std::uint64_t slices = std::min<std::uint64_t>(std::max(1u, jobs) * 4ULL, span + 1);
  const std::uint64_t width = span / slices + 1;
  std::vector<std::vector<std::uint64_t>> parts(slices);
  parallel_for(jobs, slices, [&](std::size_t i) {
    const std::uint64_t a = lo + i * width;
    if (a > hi || a < lo) return;
    const std::uint64_t b = (hi - a < width - 1) ? hi : a + width - 1;
    per_slice(a, b, parts[i]);
  });
  std::vector<std::uint64_t> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

// Multiset engine over lengths [first_len, last_len]; fvals[d] = F(d). Returns
// every total t in [0, ceiling] whose digit multiset is the one it was built from.
inline std::vector<natural> multiset_lengths(const std::vector<natural>& fvals, Base b, std::size_t first_len,
                                             std::size_t last_len, const natural& ceiling, unsigned jobs) {
  const std::uint32_t base = b.value();
  natural maxf = 0;
  for (const auto& v : fvals) maxf = std::max(maxf, v);
  struct Task {
    unsigned length;
    unsigned top;
  };
  std::vector<Task> tasks;
  for (std::size_t m = first_len; m <= last_len; ++m)
    for (unsigned c = 0; c <= m; ++c) tasks.push_back({static_cast<unsigned>(m), c});
  std::vector<std::vector<natural>> found(tasks.size());

  parallel_for(jobs, tasks.size(), [&](std::size_t i) {
    const unsigned m = tasks[i].length;
    const natural lower = m == 1 ? natural(0) : pow_nat(base, m - 1);
    natural upper = pow_nat(base, m);
    if (upper > ceiling + 1) upper = ceiling + 1;
    if (lower >= upper) return;
    if (fits_sum(upper + m * maxf)) {
      std::vector<std::uint64_t> f64;
      for (const auto& v : fvals) f64.push_back(to_u64(v));
      engine::MultisetSearch<std::uint64_t> ms(f64, m, to_u64(lower), to_u64(upper));
      for (std::uint64_t t : ms.run(tasks[i].top)) found[i].push_back(from_u64(t));
    } else {
      engine::MultisetSearch<natural> ms(fvals, m, lower, upper);
      found[i] = ms.run(tasks[i].top);
    }
  });
  std::vector<natural> out;
  for (auto& f : found) out.insert(out.end(), f.begin(), f.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace detail

// Inclusive ceiling used by search_hardy: the caller's cap, else the derived bound.
inline natural hardy_ceiling(const SearchConfig& cfg) {
  if (cfg.cap) {
    if (*cfg.cap < 1) throw config_error("cap must be >= 1");
    return *cfg.cap;
  }
  return hardy_bound(cfg.fn, cfg.base, cfg.k).n_max;
}

inline Engine resolve_hardy_engine(const SearchConfig& cfg) {
  if (cfg.k < 1) throw config_error("block width must be >= 1");
  switch (cfg.engine) {
    case Engine::automatic: return cfg.k == 1 ? Engine::multiset : Engine::scan;
    case Engine::multiset:
      if (cfg.k != 1) throw config_error("the multiset engine requires block width 1");
      return Engine::multiset;
    case Engine::preimage: throw config_error("the preimage engine applies to dudeney/powersum searches only");
    case Engine::scan: return Engine::scan;
  }
  return Engine::scan;
}

// All n in [1, ceiling] (or [0, ceiling] with include_zero) equal to the sum of
// F over their width-k blocks.
inline std::vector<SearchHit> search_hardy(const SearchConfig& cfg) {
  detail::require_search_base(cfg.base);
  const Engine engine = resolve_hardy_engine(cfg);
  const std::uint32_t base = cfg.base.value();
  const natural radix = pow_nat(base, cfg.k);
  if (engine == Engine::scan && radix > kEnumerableRadix)
    throw config_error("block radix " + radix.get_str() + " too large for the scan engine");
  const natural ceiling = hardy_ceiling(cfg);
  std::vector<natural> values;

  if (engine == Engine::scan) {
    const std::uint64_t r = to_u64(radix);
    std::vector<std::uint64_t> table(r);
    natural s_k = 0;
    std::vector<natural> big(r);
    for (std::uint64_t v = 0; v < r; ++v) {
      big[v] = cfg.fn.eval(v);
      s_k = std::max(s_k, big[v]);
    }
    const natural blocks = (digit_count(ceiling, cfg.base) + cfg.k - 1) / cfg.k;
    if (!fits_u64(ceiling) || !fits_u64(blocks * s_k + ceiling))
      throw config_error("search ceiling " + ceiling.get_str() + " is too large for the scan engine; supply --cap");
    for (std::uint64_t v = 0; v < r; ++v) table[v] = to_u64(big[v]);
    const engine::BlockSumTable sums(std::move(table));
    const std::uint64_t lo = cfg.include_zero ? 0 : 1;
    for (std::uint64_t n : detail::sliced_scan(lo, to_u64(ceiling), cfg.jobs,
                                               [&](std::uint64_t a, std::uint64_t b, std::vector<std::uint64_t>& out) {
                                                 sums.scan(a, b, [&](std::uint64_t n, std::uint64_t s) {
                                                   if (s == n) out.push_back(n);
                                                 });
                                               }))
      values.push_back(from_u64(n));
  } else {
    std::vector<natural> fvals(base);
    for (std::uint32_t d = 0; d < base; ++d) fvals[d] = cfg.fn.eval(std::uint64_t{d});
    values = detail::multiset_lengths(fvals, cfg.base, 1, digit_count(ceiling, cfg.base), ceiling, cfg.jobs);
    if (!cfg.include_zero) std::erase_if(values, [](const natural& v) { return sgn(v) == 0; });
  }

  std::vector<SearchHit> hits;
  for (const auto& v : values) hits.push_back(make_hardy_hit(v, cfg.fn, cfg.base, cfg.k));
  return hits;
}

struct ArmstrongOptions {
  std::optional<std::uint64_t> max_order;
  std::uint64_t min_order = 2;
  unsigned jobs = 1;
};

// All m-digit n with n = sum of the m-th powers of its digits, for orders
// min_order..min(max_order, ceiling-1). Single-digit numbers are trivially
// Armstrong and excluded by the default min_order of 2.
inline std::vector<SearchHit> search_armstrong(Base b, const ArmstrongOptions& opts = {}) {
  detail::require_search_base(b);
  std::uint64_t last = armstrong_order_ceiling(b) - 1;
  if (opts.max_order) last = std::min(last, *opts.max_order);
  std::vector<SearchHit> hits;
  for (std::uint64_t m = std::max<std::uint64_t>(1, opts.min_order); m <= last; ++m) {
    std::vector<natural> fvals(b.value());
    for (std::uint32_t d = 0; d < b.value(); ++d) fvals[d] = pow_nat(d, m);
    const natural ceiling = pow_nat(b.value(), m) - 1;
    for (const auto& v : detail::multiset_lengths(fvals, b, m, m, ceiling, opts.jobs))
      if (sgn(v) != 0) hits.push_back(make_armstrong_hit(v, b));
  }
  return hits;
}

// All n with b^{n-1} <= F(n) < b^n below the Wells cutoff (or up to cap).
inline std::vector<SearchHit> search_wells(const FunctionSpec& spec, Base b, std::optional<natural> cap = std::nullopt) {
  natural stop;  // exclusive
  if (cap) {
    if (*cap < 1) throw config_error("cap must be >= 1");
    stop = *cap + 1;
  } else {
    stop = wells_cutoff(spec, b).cutoff;
  }
  std::vector<SearchHit> hits;
  natural lo = 1, hi = b.value();  // b^{n-1}, b^n
  for (std::uint64_t n = 1; from_u64(n) < stop; ++n) {
    const natural f = spec.eval(n);
    if (lo <= f && f < hi) hits.push_back(make_wells_hit(from_u64(n), spec, b));
    lo = hi;
    hi *= b.value();
  }
  return hits;
}

// All n <= cap with n = F(D_b(n)): at most one candidate per digit length.
inline std::vector<SearchHit> search_wells_reverse(const FunctionSpec& spec, Base b, const natural& cap,
                                                   bool include_zero = false) {
  if (cap < 1) throw config_error("cap must be >= 1");
  std::vector<SearchHit> hits;
  if (include_zero) {
    try {
      if (sgn(spec.eval(std::uint64_t{0})) == 0) hits.push_back(make_wells_reverse_hit(0, spec, b));
    } catch (const domain_error&) {
    }
  }
  const std::size_t lengths = digit_count(cap, b);
  for (std::size_t len = 1; len <= lengths; ++len) {
    const natural v = spec.eval(std::uint64_t{len});
    if (v <= cap && sgn(v) > 0 && digit_count(v, b) == len) hits.push_back(make_wells_reverse_hit(v, spec, b));
  }
  return hits;
}

// All n below the Dudeney cutoff (or up to cap) with digit_sum(F(n)) = n.
inline std::vector<SearchHit> search_dudeney(const FunctionSpec& spec, Base b, std::optional<natural> cap = std::nullopt,
                                             bool include_zero = false) {
  const natural stop = dudeney_cutoff(spec, b, cap).cutoff;
  std::vector<SearchHit> hits;
  if (include_zero) {
    try {
      if (sgn(digit_sum(spec.eval(std::uint64_t{0}), b)) == 0) hits.push_back(make_dudeney_hit(0, spec, b));
    } catch (const domain_error&) {
    }
  }
  for (std::uint64_t n = 1; from_u64(n) < stop; ++n)
    if (digit_sum(spec.eval(n), b) == n) hits.push_back(make_dudeney_hit(from_u64(n), spec, b));
  return hits;
}

struct PowersumOptions {
  Engine engine = Engine::automatic;  // automatic = preimage
  std::optional<natural> cap;
  bool include_zero = false;
  bool congruence_filter = true;  // scan engine only
  unsigned jobs = 1;
};

// Residues r mod (b-1) that can hold digit_sum(n) of a fixed point: since
// digit_sum(n) = n (mod b-1), r must satisfy r^p = r (mod b-1).
inline std::vector<bool> powersum_admissible_residues(unsigned long p, Base b) {
  const std::uint64_t mod = b.value() - 1;
  std::vector<bool> ok(mod, true);
  if (mod < 2) return ok;
  for (std::uint64_t r = 0; r < mod; ++r) {
    natural rp;
    const natural rr = from_u64(r), mm = from_u64(mod);
    mpz_powm_ui(rp.get_mpz_t(), rr.get_mpz_t(), p, mm.get_mpz_t());
    ok[r] = rp == rr;
  }
  return ok;
}

// All n with digit_sum(n)^p = n.
inline std::vector<SearchHit> search_powersum(unsigned long p, Base b, const PowersumOptions& opts = {}) {
  detail::require_search_base(b);
  const PowersumBound bound = powersum_bound(p, b);
  std::vector<natural> values;
  if (opts.include_zero) values.push_back(0);

  switch (opts.engine) {
    case Engine::automatic:
    case Engine::preimage: {
      for (natural s = 1; s <= bound.s_scan; ++s) {
        const natural n = pow_nat(s, p);
        if (opts.cap && n > *opts.cap) break;
        if (digit_sum(n, b) == s) values.push_back(n);
      }
      break;
    }
    case Engine::scan: {
      natural ceiling = pow_nat(bound.s_scan, p);
      if (opts.cap && *opts.cap < ceiling) ceiling = *opts.cap;
      if (!fits_u64(ceiling)) throw config_error("powersum scan ceiling " + ceiling.get_str() + " too large; supply --cap");
      std::vector<std::uint64_t> ident(b.value());
      for (std::uint32_t d = 0; d < b.value(); ++d) ident[d] = d;
      const engine::BlockSumTable sums(std::move(ident));
      const std::vector<bool> admissible = powersum_admissible_residues(p, b);
      const std::uint64_t mod = b.value() - 1;
      const bool filter = opts.congruence_filter && mod >= 2;
      const std::uint64_t top = to_u64(ceiling);
      auto power_equals = [p](std::uint64_t s, std::uint64_t n) {
        unsigned __int128 acc = 1;
        for (unsigned long i = 0; i < p; ++i) {
          acc *= s;
          if (acc > n) return false;
        }
        return acc == n;
      };
      for (std::uint64_t n : detail::sliced_scan(1, top, opts.jobs,
                                                 [&](std::uint64_t a, std::uint64_t z, std::vector<std::uint64_t>& out) {
                                                   sums.scan(a, z, [&](std::uint64_t n, std::uint64_t s) {
                                                     if (filter && !admissible[n % mod]) return;
                                                     if (power_equals(s, n)) out.push_back(n);
                                                   });
                                                 }))
        values.push_back(from_u64(n));
      break;
    }
    case Engine::multiset: throw config_error("the multiset engine applies to hardy searches only");
  }

  std::sort(values.begin(), values.end());
  std::vector<SearchHit> hits;
  for (const auto& v : values) hits.push_back(make_powersum_hit(v, p, b));
  return hits;
}

// All m-digit base-b n (last digit nonzero, not a palindrome) with
// n = lambda * reverse(n) for an integer lambda >= 2.
inline std::vector<ReversalHit> search_reversal(Base b, unsigned digits, unsigned jobs = 1) {
  if (digits < 2) throw config_error("reversal search needs at least 2 digits");
  detail::require_search_base(b);
  const natural lo_n = pow_nat(b.value(), digits - 1), hi_n = pow_nat(b.value(), digits) - 1;
  if (!fits_u64(hi_n)) throw config_error("reversal search range exceeds 64 bits");
  const std::uint32_t base = b.value();
  const auto found = detail::sliced_scan(to_u64(lo_n), to_u64(hi_n), jobs,
                                         [&](std::uint64_t a, std::uint64_t z, std::vector<std::uint64_t>& out) {
                                           for (std::uint64_t n = a; n <= z; ++n) {
                                             if (n % base == 0) continue;
                                             const std::uint64_t r = reverse_digits(n, b);
                                             if (r != n && n % r == 0) out.push_back(n);
                                           }
                                         });
  std::vector<ReversalHit> hits;
  for (std::uint64_t n : found) hits.push_back(make_reversal_hit(from_u64(n), b));
  return hits;
}

}  // namespace recnum
