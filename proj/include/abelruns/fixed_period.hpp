#pragma once

#include <cstdint>
#include <limits>
#include <string_view>
#include <vector>

#include "abelruns/core.hpp"

namespace abelruns {

enum class ScanMode {
  anchored,  // report every maximal fragment per anchor
  abelian,   // report only fragments maximal over all anchors
};

struct ScannerOptions {
  // Keep window counters in a hash table sized by distinct symbols seen
  // instead of dense per-letter arrays.
  bool sparse_counters = false;
};

/// Read-only snapshot of the scanner state (debug / trace hook).
struct TraceSnapshot {
  std::size_t cursor = 0;                  // k
  std::vector<std::size_t> suffix_start;   // B, kNoSuffix for "infinity"
  std::vector<std::size_t> anchor_order;   // anchors of L, front to back
};

/// Online detector of the maximal fragments having a fixed abelian period.
///
/// Feeding the word symbol by symbol costs O(1) amortized per symbol and
/// O(sigma + p) space, where p is the period norm. Every run ending at
/// position i-1 is returned by the push of symbol i (or by finish()), never
/// later.
///
/// State per anchor class m in 0..p-1: B[m] is the start of the longest
/// suffix of the consumed prefix that has the period anchored at m, or
/// "no suffix". A doubly-linked list L holds the anchors with a suffix,
/// ordered consistently with increasing B value, so the minimum of B is read
/// off the list head in O(1).
class Scanner {
 public:
  static constexpr std::size_t kNoSuffix =
      std::numeric_limits<std::size_t>::max();

  /// Throws std::invalid_argument on a zero-norm period or a
  /// period/alphabet dimension mismatch.
  Scanner(ParikhVector period, Alphabet alphabet, ScanMode mode,
          ScannerOptions options = {});

  /// Consumes one symbol; returns the runs ending at position() - 1.
  /// Any byte is accepted: symbols outside the period's support simply force
  /// the containment window past them.
  std::vector<Run> push(unsigned char symbol);

  /// Drains the pending anchors; returns the runs ending at the last
  /// position. Throws std::logic_error when called twice.
  std::vector<Run> finish();

  bool finished() const { return finished_; }
  std::size_t position() const { return next_pos_; }  // symbols consumed
  std::size_t cursor() const { return cursor_; }      // k
  const ParikhVector& period() const { return period_; }
  ScanMode mode() const { return mode_; }

  TraceSnapshot trace() const;

  /// Total cursor increments so far (work-bound instrumentation).
  std::uint64_t cursor_increments() const { return increments_; }

  /// How many times anchor class `anchor` has been evicted so far.
  std::uint64_t kills_of(std::size_t anchor) const {
    return kill_counts_[anchor];
  }

  /// Current B entry of `anchor` (kNoSuffix when evicted).
  std::size_t suffix_start_of(std::size_t anchor) const {
    return suffix_start_[anchor];
  }

 private:
  void sweep(bool final_pass, std::vector<Run>& out);
  void list_append(std::size_t anchor);
  void list_unlink(std::size_t anchor);

  ParikhVector period_;
  Alphabet alphabet_;
  ScanMode mode_;
  std::size_t p_;
  std::size_t next_pos_ = 0;  // i
  std::size_t cursor_ = 0;    // k
  WindowTracker tracker_;     // Parikh vector of w[k..i] while scanning
  std::vector<unsigned char> ring_;  // last p+1 symbols, indexed by position
  std::vector<std::size_t> suffix_start_;  // B
  std::vector<std::size_t> next_, prev_;   // links of L (kNil when detached)
  std::size_t head_, tail_;
  std::vector<std::uint64_t> kill_counts_;
  std::uint64_t increments_ = 0;
  bool finished_ = false;
};

/// Runs Scanner in anchored mode over the whole word; output ordered by end
/// position.
std::vector<Run> anchored_runs(std::string_view word,
                               const ParikhVector& period,
                               const Alphabet& alphabet,
                               ScannerOptions options = {});

/// Runs Scanner in abelian mode over the whole word; output ordered by end
/// position.
std::vector<Run> abelian_runs(std::string_view word,
                              const ParikhVector& period,
                              const Alphabet& alphabet,
                              ScannerOptions options = {});

}  // namespace abelruns
