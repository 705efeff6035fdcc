#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "abelruns/core.hpp"

namespace abelruns {

/// Occurrence of an abelian square: two abelian-equivalent halves of length
/// `half` starting at `start`.
struct SquareOcc {
  std::size_t start = 0;
  std::size_t half = 0;

  bool operator==(const SquareOcc&) const = default;
  auto operator<=>(const SquareOcc&) const = default;
};

/// Maximal chain of abelian-equivalent consecutive blocks: `blocks` >= 2
/// blocks of length `half` covering w[start..end], not extendable by a full
/// block on either side.
struct MaxPower {
  std::size_t start = 0;
  std::size_t end = 0;
  std::size_t half = 0;
  std::size_t blocks = 0;

  std::size_t anchor() const { return start % half; }
  bool operator==(const MaxPower&) const = default;
};

/// Opaque fragment identifier: two fragments get equal ids iff they are
/// abelian-equivalent (deterministic mode unconditionally; randomized mode
/// up to fingerprint collisions, probability <= compared pairs / 2^61).
using PeriodId = std::uint64_t;

enum class NamingMode { randomized, deterministic };

/// Assigns PeriodIds to fragments, one length at a time, answering
/// id(start, length) in O(1) after the length's table is built.
///
/// Randomized mode fingerprints the count vector with per-letter random
/// weights modulo the prime 2^61 - 1, sliding in O(1) per start position;
/// the id is the fingerprint mixed with the fragment length (Monte Carlo).
/// Deterministic mode ranks the fragments of each length by sorting them
/// with full count-vector comparison.
class Namer {
 public:
  static Namer randomized(std::string_view word, const Alphabet& alphabet,
                          std::uint64_t seed);
  static Namer deterministic(std::string_view word, const Alphabet& alphabet);

  /// Id of fragment word[start..start+length-1]; length >= 1,
  /// start + length <= word size.
  PeriodId id(std::size_t start, std::size_t length);

  NamingMode mode() const { return mode_; }

 private:
  Namer(std::string_view word, const Alphabet& alphabet, NamingMode mode,
        std::uint64_t seed);
  const std::vector<PeriodId>& table_for(std::size_t length);
  std::vector<PeriodId> build_randomized(std::size_t length);
  std::vector<PeriodId> build_deterministic(std::size_t length);

  std::string word_;
  Alphabet alphabet_;
  NamingMode mode_;
  std::vector<std::uint64_t> weights_;  // randomized mode, one per letter
  std::uint64_t next_id_ = 0;           // deterministic dense ranks
  std::unordered_map<std::size_t, std::vector<PeriodId>> tables_;
};

/// Anchored run labeled with its period's id.
struct AnchoredRunRec {
  Run run;
  PeriodId period_id = 0;

  bool operator==(const AnchoredRunRec&) const = default;
};

/// All abelian squares of the word, sorted by (half, start). One sliding
/// difference counter per half-length; O(n) per length, O(n^2) total.
std::vector<SquareOcc> abelian_squares(std::string_view word,
                                       bool parallel = false);

/// Merges overlapping squares of each (half, anchor) class into maximal
/// powers. Expects the output of abelian_squares.
std::vector<MaxPower> maximal_powers(std::string_view word,
                                     std::span<const SquareOcc> squares);

/// Extends each power left and right by the longest fragment contained in
/// its block vector, yielding the complete set of anchored runs with at
/// least two cores, labeled with period ids.
std::vector<AnchoredRunRec> extend_to_anchored_runs(
    std::string_view word, const Alphabet& alphabet,
    std::span<const MaxPower> powers, Namer& namer);

struct AllRunsOptions {
  NamingMode mode = NamingMode::randomized;
  std::optional<std::uint64_t> seed;  // randomized mode; fresh when absent
  bool parallel = false;              // per-length parallelism
};

/// Offline computation of every abelian run of the word:
/// squares -> maximal powers -> anchored runs -> per-period containment
/// filter. Output sorted by (period norm, start); identical spans with the
/// same period keep the shortest-tail representation.
std::vector<Run> all_abelian_runs(std::string_view word,
                                  const AllRunsOptions& options = {});
std::vector<Run> all_abelian_runs(std::string_view word,
                                  const Alphabet& alphabet,
                                  const AllRunsOptions& options = {});

/// The pipeline's intermediate anchored-run list (debug surface).
std::vector<AnchoredRunRec> all_anchored_runs(
    std::string_view word, const Alphabet& alphabet,
    const AllRunsOptions& options = {});

}  // namespace abelruns
