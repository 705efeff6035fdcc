#include "abelruns/fixed_period.hpp"

#include <stdexcept>
#include <utility>

namespace abelruns {

namespace {
constexpr std::size_t kNil = std::numeric_limits<std::size_t>::max();
}

Scanner::Scanner(ParikhVector period, Alphabet alphabet, ScanMode mode,
                 ScannerOptions options)
    : period_(std::move(period)),
      alphabet_(std::move(alphabet)),
      mode_(mode),
      p_(period_.norm()),
      tracker_(period_, alphabet_, options.sparse_counters) {
  if (p_ == 0) {
    throw std::invalid_argument("period norm must be at least 1");
  }
  ring_.assign(p_ + 1, 0);
  suffix_start_.assign(p_, kNoSuffix);
  next_.assign(p_, kNil);
  prev_.assign(p_, kNil);
  head_ = tail_ = kNil;
  kill_counts_.assign(p_, 0);
  // The empty suffix of the empty prefix is anchored at 0.
  suffix_start_[0] = 0;
  list_append(0);
}

void Scanner::list_append(std::size_t anchor) {
  prev_[anchor] = tail_;
  next_[anchor] = kNil;
  if (tail_ == kNil) {
    head_ = anchor;
  } else {
    next_[tail_] = anchor;
  }
  tail_ = anchor;
}

void Scanner::list_unlink(std::size_t anchor) {
  std::size_t before = prev_[anchor];
  std::size_t after = next_[anchor];
  if (before == kNil) {
    head_ = after;
  } else {
    next_[before] = after;
  }
  if (after == kNil) {
    tail_ = before;
  } else {
    prev_[after] = before;
  }
  prev_[anchor] = next_[anchor] = kNil;
}

// Advances the cursor while w[cursor..i] is not contained in the period
// (condition forced in the final pass), evicting each passed anchor class
// and reporting the runs its eviction certifies.
void Scanner::sweep(bool final_pass, std::vector<Run>& out) {
  const std::size_t i = next_pos_;
  // Minimum of B at the start of the step, read off the list head.
  const std::size_t step_min =
      head_ == kNil ? kNoSuffix : suffix_start_[head_];
  while (final_pass ? cursor_ <= i : !tracker_.is_contained()) {
    if (cursor_ + p_ > i) {  // anchors at k <= i-p stay alive for k+p
      const std::size_t anchor = cursor_ % p_;
      const std::size_t b = suffix_start_[anchor];
      if (b != kNoSuffix) {
        suffix_start_[anchor] = kNoSuffix;
        list_unlink(anchor);
        ++kill_counts_[anchor];
        if (b + 2 * p_ <= cursor_) {  // at least two cores
          bool report = true;
          if (mode_ == ScanMode::abelian) {
            const std::size_t new_min =
                head_ == kNil ? kNoSuffix : suffix_start_[head_];
            report = b == step_min && new_min > b;
          }
          if (report) {
            out.push_back(Run{.start = b,
                              .head = (cursor_ - b) % p_,
                              .tail = i - cursor_,
                              .end = i - 1,
                              .period = period_});
          }
        }
      }
    }
    ++cursor_;
    ++increments_;
    if (!final_pass) {
      tracker_.shrink_left(ring_[(cursor_ - 1) % ring_.size()]);
    }
  }
}

std::vector<Run> Scanner::push(unsigned char symbol) {
  if (finished_) {
    throw std::logic_error("push after finish");
  }
  ring_[next_pos_ % ring_.size()] = symbol;
  tracker_.extend_right(symbol);
  std::vector<Run> out;
  sweep(false, out);
  if (cursor_ + p_ > next_pos_ + 1) {
    // The longest suffix with an empty-tail factorization now starts at the
    // cursor; anchor (i+1) mod p takes it over. The slot is free: either it
    // was never occupied or the sweep just evicted it.
    const std::size_t anchor = (next_pos_ + 1) % p_;
    if (suffix_start_[anchor] != kNoSuffix) {
      throw std::logic_error("anchor slot occupied at takeover");
    }
    suffix_start_[anchor] = cursor_;
    list_append(anchor);
  }
  ++next_pos_;
  return out;
}

std::vector<Run> Scanner::finish() {
  if (finished_) {
    throw std::logic_error("finish called twice");
  }
  std::vector<Run> out;
  sweep(true, out);
  finished_ = true;
  return out;
}

TraceSnapshot Scanner::trace() const {
  TraceSnapshot snap;
  snap.cursor = cursor_;
  snap.suffix_start = suffix_start_;
  for (std::size_t a = head_; a != kNil; a = next_[a]) {
    snap.anchor_order.push_back(a);
  }
  return snap;
}

namespace {

std::vector<Run> scan_word(std::string_view word, const ParikhVector& period,
                           const Alphabet& alphabet, ScanMode mode,
                           ScannerOptions options) {
  Scanner scanner(period, alphabet, mode, options);
  std::vector<Run> out;
  for (char ch : word) {
    auto runs = scanner.push(static_cast<unsigned char>(ch));
    out.insert(out.end(), runs.begin(), runs.end());
  }
  auto runs = scanner.finish();
  out.insert(out.end(), runs.begin(), runs.end());
  return out;
}

}  // namespace

std::vector<Run> anchored_runs(std::string_view word,
                               const ParikhVector& period,
                               const Alphabet& alphabet,
                               ScannerOptions options) {
  return scan_word(word, period, alphabet, ScanMode::anchored, options);
}

std::vector<Run> abelian_runs(std::string_view word,
                              const ParikhVector& period,
                              const Alphabet& alphabet,
                              ScannerOptions options) {
  return scan_word(word, period, alphabet, ScanMode::abelian, options);
}

}  // namespace abelruns
