#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace abelruns {

/// Indexed byte alphabet. Symbols get indices 0..size()-1; lookups in both
/// directions are constant time.
class Alphabet {
 public:
  Alphabet() { index_.fill(-1); }

  /// Alphabet of the distinct symbols of `word`, in first-occurrence order.
  static Alphabet from_word(std::string_view word);

  /// Alphabet with an explicitly declared symbol order.
  /// Throws std::invalid_argument on duplicate symbols.
  static Alphabet from_symbols(std::string_view symbols);

  std::size_t size() const { return symbols_.size(); }

  /// Index of `symbol`, or -1 if the symbol is not in the alphabet.
  int index_of(unsigned char symbol) const { return index_[symbol]; }

  unsigned char symbol_at(std::size_t index) const;

  /// Symbols in index order.
  const std::string& symbols() const { return symbols_; }

  bool operator==(const Alphabet& other) const {
    return symbols_ == other.symbols_;
  }

 private:
  std::array<std::int16_t, 256> index_{};
  std::string symbols_;
};

/// Per-letter occurrence counts of a fragment, with the norm (sum of counts)
/// kept in sync by every mutation.
class ParikhVector {
 public:
  ParikhVector() = default;
  explicit ParikhVector(std::size_t dimension) : counts_(dimension, 0) {}
  explicit ParikhVector(std::vector<std::uint32_t> counts);

  /// Parses comma-separated counts, e.g. "2,2".
  /// Throws std::invalid_argument on malformed input.
  static ParikhVector parse(std::string_view text);

  /// Comma-separated counts in alphabet order, e.g. "2,2".
  std::string to_string() const;

  std::size_t dimension() const { return counts_.size(); }
  std::uint32_t operator[](std::size_t index) const { return counts_[index]; }
  const std::vector<std::uint32_t>& counts() const { return counts_; }
  std::size_t norm() const { return norm_; }

  void add(std::size_t index) {
    ++counts_[index];
    ++norm_;
  }
  void remove(std::size_t index) {
    --counts_[index];
    --norm_;
  }

  bool operator==(const ParikhVector&) const = default;

 private:
  std::vector<std::uint32_t> counts_;
  std::size_t norm_ = 0;
};

/// Parikh vector of `fragment` over `alphabet`.
/// Throws std::invalid_argument naming the offending symbol and position if a
/// symbol is not in the alphabet.
ParikhVector parikh_of(std::string_view fragment, const Alphabet& alphabet);

/// The first `dimension` distinct symbols of `word` in first-occurrence
/// order; throws std::invalid_argument when the word has fewer.
Alphabet alphabet_with_dimension(std::string_view word,
                                 std::size_t dimension);

/// inner[c] <= outer[c] for every c. Throws std::invalid_argument on
/// dimension mismatch.
bool contains(const ParikhVector& outer, const ParikhVector& inner);

/// contains(outer, inner) and inner != outer.
bool strictly_contains(const ParikhVector& outer, const ParikhVector& inner);

/// A maximal periodic fragment w[start..end] reported as (start, head, tail,
/// end) plus the period it was found for.
struct Run {
  std::size_t start = 0;
  std::size_t head = 0;
  std::size_t tail = 0;
  std::size_t end = 0;
  ParikhVector period;

  std::size_t anchor() const { return (start + head) % period.norm(); }
  std::size_t cores() const {
    return (end - start - head - tail + 1) / period.norm();
  }
  std::size_t length() const { return end - start + 1; }

  bool operator==(const Run&) const = default;
};

/// Sliding-window Parikh vector with a violation counter, so that testing
/// "window contained in bound" is O(1) after each O(1) update.
///
/// Symbols outside the bound's alphabet count as violations while present in
/// the window. With `sparse` set, window counters live in a hash table whose
/// size is proportional to the number of distinct symbols seen instead of the
/// alphabet size.
class WindowTracker {
 public:
  WindowTracker(ParikhVector bound, Alphabet alphabet, bool sparse = false);

  void extend_right(unsigned char symbol);

  /// Removes the leftmost window symbol; the caller passes the actual
  /// leftmost symbol. Throws std::logic_error on an empty window.
  void shrink_left(unsigned char symbol);

  bool is_contained() const { return violations_ == 0 && unknown_ == 0; }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  std::size_t violations() const { return violations_ + unknown_; }

  /// Counts of in-alphabet window symbols (for cross-checks in tests).
  ParikhVector window() const;

  void clear();

  const ParikhVector& bound() const { return bound_; }

 private:
  std::uint32_t count_of(std::size_t index) const;
  void set_count(std::size_t index, std::uint32_t value);

  Alphabet alphabet_;
  ParikhVector bound_;
  std::vector<std::uint32_t> window_;
  std::unordered_map<std::size_t, std::uint32_t> sparse_window_;
  std::size_t violations_ = 0;  // indices c with window[c] > bound[c]
  std::size_t unknown_ = 0;     // window symbols outside the alphabet
  std::size_t size_ = 0;
  bool sparse_ = false;
};

}  // namespace abelruns
