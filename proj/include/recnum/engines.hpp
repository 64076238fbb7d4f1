#pragma once

// Search kernels. The scan kernel walks a contiguous range of machine words
// using precomputed per-chunk block sums; the multiset kernel enumerates digit
// multisets of a fixed length and keeps sums whose own digits reproduce the
// multiset.

#include <cstdint>
#include <limits>
#include <vector>

#include "natural.hpp"

namespace recnum::engine {

// Sum of F over the base-r blocks of n, r = table size, served from two
// lookup tables over [0, chunk): one over exactly `chunk_blocks` zero-padded
// blocks, one over the canonical (unpadded) expansion.
class BlockSumTable {
public:
  explicit BlockSumTable(std::vector<std::uint64_t> block_values) : f_(std::move(block_values)) {
    radix_ = f_.size();
    chunk_ = radix_;
    unsigned blocks = 1;
    while (chunk_ <= (std::uint64_t{1} << 16) / radix_) {
      chunk_ *= radix_;
      ++blocks;
    }
    padded_.resize(chunk_);
    unpadded_.resize(chunk_);
    for (std::uint64_t v = 0; v < chunk_; ++v) {
      std::uint64_t s = 0, x = v;
      for (unsigned i = 0; i < blocks; ++i) {
        s += f_[x % radix_];
        x /= radix_;
      }
      padded_[v] = s;
      s = 0;
      x = v;
      do {
        s += f_[x % radix_];
        x /= radix_;
      } while (x != 0);
      unpadded_[v] = s;
    }
  }

  std::uint64_t chunk() const noexcept { return chunk_; }

  std::uint64_t sum(std::uint64_t n) const noexcept {
    std::uint64_t s = 0;
    while (n >= chunk_) {
      s += padded_[n % chunk_];
      n /= chunk_;
    }
    return s + unpadded_[n];
  }

  // accept(n, block_sum) for every n in [lo, hi].
  template <class Accept>
  void scan(std::uint64_t lo, std::uint64_t hi, Accept&& accept) const {
    if (lo > hi) return;
    std::uint64_t h = lo / chunk_;
    std::uint64_t x = lo % chunk_;
    for (;;) {
      const std::uint64_t origin = h * chunk_;
      const std::uint64_t last = (hi - origin >= chunk_ - 1) ? chunk_ - 1 : hi - origin;
      if (h == 0) {
        for (; x <= last; ++x) accept(origin + x, unpadded_[x]);
      } else {
        const std::uint64_t head = sum(h);
        for (; x <= last; ++x) accept(origin + x, head + padded_[x]);
      }
      if (hi - origin < chunk_) break;
      ++h;
      x = 0;
    }
  }

private:
  std::vector<std::uint64_t> f_;
  std::uint64_t radix_ = 0;
  std::uint64_t chunk_ = 0;
  std::vector<std::uint64_t> padded_;
  std::vector<std::uint64_t> unpadded_;
};

// Enumerates multisets of `length` base-b digits (combinations with
// repetition) and reports every total t = sum F(d) in [lower, upper) whose own
// digit multiset equals the candidate. Acc is uint64_t or natural; the caller
// guarantees upper + length * max F fits in Acc.
template <class Acc>
class MultisetSearch {
public:
  MultisetSearch(const std::vector<Acc>& f, unsigned length, Acc lower, Acc upper)
      : f_(f), base_(static_cast<std::uint32_t>(f.size())), length_(length), lower_(std::move(lower)),
        upper_(std::move(upper)), prefix_max_(f.size()), counts_(f.size(), 0), scratch_(f.size(), 0) {
    for (std::size_t d = 0; d < f_.size(); ++d)
      prefix_max_[d] = (d == 0 || f_[d] > prefix_max_[d - 1]) ? f_[d] : prefix_max_[d - 1];
  }

  // Runs the subtree where the top digit (b-1) occurs exactly `top_count` times.
  std::vector<Acc> run(unsigned top_count) {
    found_.clear();
    if (top_count > length_) return found_;
    const int top = static_cast<int>(base_) - 1;
    Acc s = Acc(top_count) * f_[top];
    if (!(s < upper_)) return found_;
    counts_.assign(base_, 0);
    counts_[top] = top_count;
    recurse(top - 1, length_ - top_count, s);
    return found_;
  }

private:
  void recurse(int d, unsigned remaining, const Acc& sum) {
    if (d == 0) {
      counts_[0] = remaining;
      leaf(sum + Acc(remaining) * f_[0]);
      return;
    }
    for (unsigned c = 0; c <= remaining; ++c) {
      Acc s = sum + Acc(c) * f_[d];
      if (!(s < upper_)) break;
      if (s + Acc(remaining - c) * prefix_max_[d - 1] < lower_) continue;
      counts_[d] = c;
      recurse(d - 1, remaining - c, s);
    }
    counts_[d] = 0;
  }

  void leaf(const Acc& total) {
    if (total < lower_ || !(total < upper_)) return;
    std::fill(scratch_.begin(), scratch_.end(), 0u);
    unsigned digits = 0;
    if constexpr (std::same_as<Acc, natural>) {
      const std::string s = total.get_str(static_cast<int>(base_));
      for (char ch : s) {
        unsigned v = (ch >= '0' && ch <= '9') ? unsigned(ch - '0') : (ch >= 'a' ? unsigned(ch - 'a' + 10) : unsigned(ch - 'A' + 10));
        ++scratch_[v];
        ++digits;
      }
    } else {
      Acc x = total;
      do {
        ++scratch_[x % base_];
        x /= base_;
        ++digits;
      } while (x != 0);
    }
    if (digits == length_ && scratch_ == counts_) found_.push_back(total);
  }

  const std::vector<Acc>& f_;
  std::uint32_t base_;
  unsigned length_;
  Acc lower_, upper_;
  std::vector<Acc> prefix_max_;
  std::vector<unsigned> counts_;
  std::vector<unsigned> scratch_;
  std::vector<Acc> found_;
};

}  // namespace recnum::engine
