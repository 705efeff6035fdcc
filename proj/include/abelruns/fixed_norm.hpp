#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "abelruns/core.hpp"
#include "abelruns/fixed_period.hpp"

namespace abelruns {

struct NormScannerOptions {
  bool sparse_counters = false;
};

/// Online detector of the maximal fragments whose abelian period has a given
/// norm p, over all period vectors of that norm, in O(n p) time and
/// O(p (sigma + p)) space.
///
/// One lane per anchor class k watches the blocks w[i..i+p-1] with
/// i = k (mod p). When a lane completes a block and has no phase running, it
/// opens a phase with the block's Parikh vector as candidate period:
///   - anchored mode keeps a lightweight chain state (head scan backwards,
///     then extend right, absorbing abelian-equivalent blocks as cores);
///   - abelian mode embeds a fixed-period Scanner started p positions before
///     the block, fast-forwarded over buffered symbols, then fed live; only
///     the run whose eviction belongs to this lane's anchor is kept.
/// Lanes advance in lockstep; runs ending at position i-1 are pooled after
/// every lane has processed position i and emitted once, shortest tail first
/// among identical (start, end, period) candidates.
class NormScanner {
 public:
  /// Throws std::invalid_argument when norm is zero.
  NormScanner(std::size_t norm, Alphabet alphabet, ScanMode mode,
              NormScannerOptions options = {});

  /// Consumes one symbol; returns the runs ending at position() - 1.
  std::vector<Run> push(unsigned char symbol);

  /// Reports the runs ending at the last position. Throws std::logic_error
  /// when called twice.
  std::vector<Run> finish();

  bool finished() const { return finished_; }
  std::size_t position() const { return pos_; }
  std::size_t norm() const { return p_; }

 private:
  struct Lane {
    std::size_t anchor = 0;
    // current in-progress block of this lane
    std::vector<std::uint32_t> block_counts;
    bool block_unknown = false;
    // anchored-mode phase
    bool chain_active = false;
    ParikhVector vec;
    std::size_t run_start = 0;
    std::size_t first_core_start = 0;
    std::size_t last_core_end = 0;
    std::size_t cores = 0;
    std::optional<WindowTracker> partial;
    // abelian-mode phase
    std::optional<Scanner> sim;
    std::size_t sim_offset = 0;
    std::size_t watch_anchor = 0;
    std::uint64_t kill_baseline = 0;
  };

  void lane_push(Lane& lane, unsigned char symbol, std::vector<Run>& out);
  void start_anchored_phase(Lane& lane);
  void start_abelian_phase(Lane& lane);
  unsigned char buffered(std::size_t pos) const {
    return ring_[pos % ring_.size()];
  }
  std::vector<Run> pool(std::vector<Run> candidates) const;

  std::size_t p_;
  Alphabet alphabet_;
  ScanMode mode_;
  NormScannerOptions options_;
  std::size_t pos_ = 0;
  std::vector<unsigned char> ring_;  // last 2p+2 symbols
  std::vector<Lane> lanes_;
  bool finished_ = false;
};

/// Whole-word wrappers; outputs sorted by (end, start).
std::vector<Run> anchored_runs_norm(std::string_view word, std::size_t norm,
                                    const Alphabet& alphabet,
                                    NormScannerOptions options = {});
std::vector<Run> abelian_runs_norm(std::string_view word, std::size_t norm,
                                   const Alphabet& alphabet,
                                   NormScannerOptions options = {});

}  // namespace abelruns
