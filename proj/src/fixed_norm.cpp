#include "abelruns/fixed_norm.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace abelruns {

NormScanner::NormScanner(std::size_t norm, Alphabet alphabet, ScanMode mode,
                         NormScannerOptions options)
    : p_(norm),
      alphabet_(std::move(alphabet)),
      mode_(mode),
      options_(options) {
  if (p_ == 0) {
    throw std::invalid_argument("period norm must be at least 1");
  }
  ring_.assign(2 * p_ + 2, 0);
  lanes_.resize(p_);
  for (std::size_t k = 0; k < p_; ++k) {
    lanes_[k].anchor = k;
    lanes_[k].block_counts.assign(alphabet_.size(), 0);
  }
}

void NormScanner::start_anchored_phase(Lane& lane) {
  const std::size_t j = pos_;
  const std::size_t s = j + 1 - p_;  // block start
  lane.vec = ParikhVector(lane.block_counts);
  // Head: longest suffix of w[0..s-1] contained in the block vector. It is
  // shorter than p whenever a phase legitimately starts (the preceding
  // aligned block cannot equal the block vector, or the lane would still be
  // extending the previous phase).
  std::vector<std::uint32_t> counts(alphabet_.size(), 0);
  std::size_t h = 0;
  while (s > h) {
    const unsigned char symbol = buffered(s - 1 - h);
    const int index = alphabet_.index_of(symbol);
    if (index < 0) break;
    const auto c = static_cast<std::size_t>(index);
    if (counts[c] + 1 > lane.vec[c]) break;
    ++counts[c];
    ++h;
    if (h == p_) {
      throw std::logic_error("phase started one block late");
    }
  }
  lane.run_start = s - h;
  lane.first_core_start = s;
  lane.last_core_end = j;
  lane.cores = 1;
  lane.partial.emplace(lane.vec, alphabet_, options_.sparse_counters);
  lane.chain_active = true;
}

void NormScanner::start_abelian_phase(Lane& lane) {
  const std::size_t j = pos_;
  const std::size_t s = j + 1 - p_;
  lane.vec = ParikhVector(lane.block_counts);
  lane.sim_offset = s >= p_ ? s - p_ : 0;
  lane.watch_anchor = (s - lane.sim_offset) % p_;
  lane.sim.emplace(lane.vec, alphabet_, ScanMode::abelian,
                   ScannerOptions{options_.sparse_counters});
  for (std::size_t x = lane.sim_offset; x <= j; ++x) {
    auto replayed = lane.sim->push(buffered(x));
    for (const Run& r : replayed) {
      // A run with this lane's anchor needs two cores plus the head, which
      // does not fit strictly inside the replay window.
      if ((r.start + r.head) % p_ == lane.watch_anchor) {
        throw std::logic_error("watched run completed during fast-forward");
      }
    }
  }
  if (lane.sim->suffix_start_of(lane.watch_anchor) == Scanner::kNoSuffix) {
    throw std::logic_error("freshly read block is not a live suffix");
  }
  lane.kill_baseline = lane.sim->kills_of(lane.watch_anchor);
}

void NormScanner::lane_push(Lane& lane, unsigned char symbol,
                            std::vector<Run>& out) {
  const std::size_t j = pos_;

  bool at_block_end = false;
  if (j >= lane.anchor) {
    const std::size_t in_block = (j - lane.anchor) % p_;
    if (in_block == 0) {
      std::fill(lane.block_counts.begin(), lane.block_counts.end(), 0);
      lane.block_unknown = false;
    }
    const int index = alphabet_.index_of(symbol);
    if (index < 0) {
      lane.block_unknown = true;
    } else {
      ++lane.block_counts[static_cast<std::size_t>(index)];
    }
    at_block_end = in_block == p_ - 1;
  }

  if (mode_ == ScanMode::anchored) {
    if (lane.chain_active) {
      lane.partial->extend_right(symbol);
      if (!lane.partial->is_contained()) {
        if (lane.cores >= 2) {
          out.push_back(Run{.start = lane.run_start,
                            .head = lane.first_core_start - lane.run_start,
                            .tail = (j - 1) - lane.last_core_end,
                            .end = j - 1,
                            .period = lane.vec});
        }
        lane.chain_active = false;
        lane.partial.reset();
      } else if (j - lane.last_core_end == p_) {
        // full block contained in the vector and of the same norm: a core
        ++lane.cores;
        lane.last_core_end = j;
        lane.partial->clear();
      }
    }
  } else {
    if (lane.sim) {
      auto runs = lane.sim->push(symbol);
      for (Run& r : runs) {
        if ((r.start + r.head) % p_ == lane.watch_anchor) {
          r.start += lane.sim_offset;
          r.end += lane.sim_offset;
          out.push_back(std::move(r));
        }
      }
      if (lane.sim->kills_of(lane.watch_anchor) > lane.kill_baseline) {
        lane.sim.reset();  // maximal extension of this lane's block found
      }
    }
  }

  if (at_block_end && !lane.block_unknown) {
    if (mode_ == ScanMode::anchored ? !lane.chain_active : !lane.sim) {
      mode_ == ScanMode::anchored ? start_anchored_phase(lane)
                                  : start_abelian_phase(lane);
    }
  }
}

std::vector<Run> NormScanner::push(unsigned char symbol) {
  if (finished_) {
    throw std::logic_error("push after finish");
  }
  ring_[pos_ % ring_.size()] = symbol;
  std::vector<Run> candidates;
  for (Lane& lane : lanes_) {
    lane_push(lane, symbol, candidates);
  }
  ++pos_;
  return pool(std::move(candidates));
}

std::vector<Run> NormScanner::finish() {
  if (finished_) {
    throw std::logic_error("finish called twice");
  }
  finished_ = true;
  std::vector<Run> candidates;
  for (Lane& lane : lanes_) {
    if (mode_ == ScanMode::anchored) {
      if (lane.chain_active) {
        if (lane.cores >= 2) {
          candidates.push_back(
              Run{.start = lane.run_start,
                  .head = lane.first_core_start - lane.run_start,
                  .tail = (pos_ - 1) - lane.last_core_end,
                  .end = pos_ - 1,
                  .period = lane.vec});
        }
        lane.chain_active = false;
        lane.partial.reset();
      }
    } else if (lane.sim) {
      auto runs = lane.sim->finish();
      for (Run& r : runs) {
        if ((r.start + r.head) % p_ == lane.watch_anchor) {
          r.start += lane.sim_offset;
          r.end += lane.sim_offset;
          candidates.push_back(std::move(r));
        }
      }
      lane.sim.reset();
    }
  }
  return pool(std::move(candidates));
}

// All candidates of one position boundary. In abelian mode identical
// (start, end, period) reports collapse to the shortest-tail representative.
std::vector<Run> NormScanner::pool(std::vector<Run> candidates) const {
  if (candidates.size() > 1 && mode_ == ScanMode::abelian) {
    std::map<std::tuple<std::size_t, std::size_t, std::vector<std::uint32_t>>,
             Run>
        best;
    for (Run& r : candidates) {
      auto key = std::make_tuple(r.start, r.end, r.period.counts());
      auto it = best.find(key);
      if (it == best.end()) {
        best.emplace(std::move(key), std::move(r));
      } else if (r.tail < it->second.tail) {
        it->second = std::move(r);
      }
    }
    candidates.clear();
    for (auto& [key, run] : best) candidates.push_back(std::move(run));
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Run& a, const Run& b) {
              if (a.start != b.start) return a.start < b.start;
              if (a.period.counts() != b.period.counts()) {
                return a.period.counts() < b.period.counts();
              }
              return a.head < b.head;
            });
  return candidates;
}

namespace {

std::vector<Run> scan_word_norm(std::string_view word, std::size_t norm,
                                const Alphabet& alphabet, ScanMode mode,
                                NormScannerOptions options) {
  NormScanner scanner(norm, alphabet, mode, options);
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

std::vector<Run> anchored_runs_norm(std::string_view word, std::size_t norm,
                                    const Alphabet& alphabet,
                                    NormScannerOptions options) {
  return scan_word_norm(word, norm, alphabet, ScanMode::anchored, options);
}

std::vector<Run> abelian_runs_norm(std::string_view word, std::size_t norm,
                                   const Alphabet& alphabet,
                                   NormScannerOptions options) {
  return scan_word_norm(word, norm, alphabet, ScanMode::abelian, options);
}

}  // namespace abelruns
