#include "abelruns/all_runs.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

namespace abelruns {

namespace {

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s >= kPrime ? s - kPrime : s;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b) {
  return add_mod(a, kPrime - b);
}

// Mixes the fragment length into the fingerprint so fragments of different
// lengths get different ids (up to the Monte Carlo collision probability).
std::uint64_t mix_id(std::size_t length, std::uint64_t fingerprint) {
  std::uint64_t x = fingerprint ^ (static_cast<std::uint64_t>(length) *
                                   0x9e3779b97f4a7c15ULL);
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

std::vector<std::size_t> letter_indices(std::string_view word,
                                        const Alphabet& alphabet) {
  std::vector<std::size_t> idx(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) {
    int c = alphabet.index_of(static_cast<unsigned char>(word[i]));
    if (c < 0) {
      throw std::invalid_argument("symbol '" + std::string(1, word[i]) +
                                  "' at position " + std::to_string(i) +
                                  " is not in the alphabet");
    }
    idx[i] = static_cast<std::size_t>(c);
  }
  return idx;
}

// Sliding difference counter between the halves w[i..i+half) and
// w[i+half..i+2*half): O(1) per slide once primed.
void squares_for_half(const std::vector<std::size_t>& idx, std::size_t dim,
                      std::size_t half, std::vector<SquareOcc>& out) {
  const std::size_t n = idx.size();
  std::vector<std::int64_t> diff(dim, 0);
  std::size_t mismatched = 0;
  auto bump = [&](std::size_t c, std::int64_t delta) {
    if (diff[c] != 0) --mismatched;
    diff[c] += delta;
    if (diff[c] != 0) ++mismatched;
  };
  for (std::size_t x = 0; x < half; ++x) {
    bump(idx[x], 1);
    bump(idx[half + x], -1);
  }
  for (std::size_t i = 0;; ++i) {
    if (mismatched == 0) out.push_back(SquareOcc{i, half});
    if (i + 2 * half >= n) break;
    bump(idx[i], -1);
    bump(idx[i + half], 2);
    bump(idx[i + 2 * half], -1);
  }
}

}  // namespace

std::vector<SquareOcc> abelian_squares(std::string_view word, bool parallel) {
  const std::size_t n = word.size();
  if (n < 2) return {};
  const Alphabet alphabet = Alphabet::from_word(word);
  const auto idx = letter_indices(word, alphabet);
  const std::size_t max_half = n / 2;

  std::vector<std::vector<SquareOcc>> per_half(max_half + 1);
  auto work = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t half = lo; half < hi; ++half) {
      squares_for_half(idx, alphabet.size(), half, per_half[half]);
    }
  };

  std::size_t threads =
      parallel ? std::max<std::size_t>(1, std::thread::hardware_concurrency())
               : 1;
  threads = std::min(threads, max_half);
  if (threads <= 1) {
    work(1, max_half + 1);
  } else {
    std::vector<std::thread> pool;
    const std::size_t span = (max_half + threads - 1) / threads;
    for (std::size_t t = 0; t < threads; ++t) {
      std::size_t lo = 1 + t * span;
      std::size_t hi = std::min(max_half + 1, lo + span);
      if (lo < hi) pool.emplace_back(work, lo, hi);
    }
    for (auto& th : pool) th.join();
  }

  std::vector<SquareOcc> out;
  for (std::size_t half = 1; half <= max_half; ++half) {
    out.insert(out.end(), per_half[half].begin(), per_half[half].end());
  }
  return out;
}

std::vector<MaxPower> maximal_powers(std::string_view word,
                                     std::span<const SquareOcc> squares) {
  const std::size_t n = word.size();
  std::vector<MaxPower> out;
  std::vector<char> is_square(n, 0);
  std::size_t group = 0;
  while (group < squares.size()) {
    const std::size_t half = squares[group].half;
    std::size_t group_end = group;
    while (group_end < squares.size() && squares[group_end].half == half) {
      ++group_end;
    }
    for (std::size_t s = group; s < group_end; ++s) {
      is_square[squares[s].start] = 1;
    }
    for (std::size_t s = group; s < group_end; ++s) {
      const std::size_t start = squares[s].start;
      if (start >= half && is_square[start - half]) continue;  // not chain head
      std::size_t blocks = 1;
      std::size_t cursor = start;
      while (cursor < n && is_square[cursor]) {
        ++blocks;
        cursor += half;
      }
      out.push_back(MaxPower{.start = start,
                             .end = cursor + half - 1,
                             .half = half,
                             .blocks = blocks});
    }
    for (std::size_t s = group; s < group_end; ++s) {
      is_square[squares[s].start] = 0;
    }
    group = group_end;
  }
  return out;
}

std::vector<AnchoredRunRec> extend_to_anchored_runs(
    std::string_view word, const Alphabet& alphabet,
    std::span<const MaxPower> powers, Namer& namer) {
  const std::size_t n = word.size();
  const auto idx = letter_indices(word, alphabet);
  std::vector<AnchoredRunRec> out;
  out.reserve(powers.size());
  std::vector<std::uint32_t> scratch(alphabet.size(), 0);
  for (const MaxPower& power : powers) {
    ParikhVector vec(alphabet.size());
    for (std::size_t x = power.start; x < power.start + power.half; ++x) {
      vec.add(idx[x]);
    }
    std::fill(scratch.begin(), scratch.end(), 0);
    std::size_t head = 0;
    while (power.start > head) {
      const std::size_t c = idx[power.start - 1 - head];
      if (scratch[c] + 1 > vec[c]) break;
      ++scratch[c];
      ++head;
    }
    std::fill(scratch.begin(), scratch.end(), 0);
    std::size_t tail = 0;
    while (power.end + 1 + tail < n) {
      const std::size_t c = idx[power.end + 1 + tail];
      if (scratch[c] + 1 > vec[c]) break;
      ++scratch[c];
      ++tail;
    }
    if (head >= power.half || tail >= power.half) {
      throw std::logic_error("head or tail extension swallowed a full block");
    }
    out.push_back(
        AnchoredRunRec{.run = Run{.start = power.start - head,
                                  .head = head,
                                  .tail = tail,
                                  .end = power.end + tail,
                                  .period = std::move(vec)},
                       .period_id = namer.id(power.start, power.half)});
  }
  return out;
}

Namer Namer::randomized(std::string_view word, const Alphabet& alphabet,
                        std::uint64_t seed) {
  return Namer(word, alphabet, NamingMode::randomized, seed);
}

Namer Namer::deterministic(std::string_view word, const Alphabet& alphabet) {
  return Namer(word, alphabet, NamingMode::deterministic, 0);
}

Namer::Namer(std::string_view word, const Alphabet& alphabet, NamingMode mode,
             std::uint64_t seed)
    : word_(word), alphabet_(alphabet), mode_(mode) {
  if (mode_ == NamingMode::randomized) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> dist(0, kPrime - 1);
    weights_.resize(alphabet_.size());
    for (auto& w : weights_) w = dist(rng);
  }
}

PeriodId Namer::id(std::size_t start, std::size_t length) {
  if (length == 0 || start + length > word_.size()) {
    throw std::invalid_argument("fragment out of range");
  }
  return table_for(length)[start];
}

const std::vector<PeriodId>& Namer::table_for(std::size_t length) {
  auto it = tables_.find(length);
  if (it != tables_.end()) return it->second;
  auto table = mode_ == NamingMode::randomized ? build_randomized(length)
                                               : build_deterministic(length);
  return tables_.emplace(length, std::move(table)).first->second;
}

std::vector<PeriodId> Namer::build_randomized(std::size_t length) {
  const auto idx = letter_indices(word_, alphabet_);
  const std::size_t n = word_.size();
  const std::size_t rows = n - length + 1;
  std::vector<PeriodId> ids(rows);
  std::uint64_t fp = 0;
  for (std::size_t x = 0; x < length; ++x) fp = add_mod(fp, weights_[idx[x]]);
  for (std::size_t start = 0;; ++start) {
    ids[start] = mix_id(length, fp);
    if (start + 1 >= rows) break;
    fp = sub_mod(fp, weights_[idx[start]]);
    fp = add_mod(fp, weights_[idx[start + length]]);
  }
  return ids;
}

std::vector<PeriodId> Namer::build_deterministic(std::size_t length) {
  const auto idx = letter_indices(word_, alphabet_);
  const std::size_t n = word_.size();
  const std::size_t rows = n - length + 1;
  const std::size_t dim = alphabet_.size();
  std::vector<std::uint32_t> counts(rows * dim, 0);
  for (std::size_t x = 0; x < length; ++x) ++counts[idx[x]];
  for (std::size_t start = 1; start < rows; ++start) {
    std::copy(counts.begin() + (start - 1) * dim,
              counts.begin() + start * dim, counts.begin() + start * dim);
    --counts[start * dim + idx[start - 1]];
    ++counts[start * dim + idx[start + length - 1]];
  }
  std::vector<std::size_t> order(rows);
  std::iota(order.begin(), order.end(), 0);
  auto row_less = [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(
        counts.begin() + a * dim, counts.begin() + (a + 1) * dim,
        counts.begin() + b * dim, counts.begin() + (b + 1) * dim);
  };
  std::sort(order.begin(), order.end(), row_less);
  std::vector<PeriodId> ids(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    if (r == 0 || row_less(order[r - 1], order[r])) ++next_id_;
    ids[order[r]] = next_id_ - 1;
  }
  return ids;
}

namespace {

std::uint64_t fresh_seed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

void sort_final(std::vector<Run>& runs) {
  std::sort(runs.begin(), runs.end(), [](const Run& a, const Run& b) {
    if (a.period.norm() != b.period.norm()) {
      return a.period.norm() < b.period.norm();
    }
    if (a.start != b.start) return a.start < b.start;
    if (a.end != b.end) return a.end < b.end;
    return a.period.counts() < b.period.counts();
  });
}

}  // namespace

std::vector<AnchoredRunRec> all_anchored_runs(std::string_view word,
                                              const Alphabet& alphabet,
                                              const AllRunsOptions& options) {
  auto squares = abelian_squares(word, options.parallel);
  auto powers = maximal_powers(word, squares);
  Namer namer =
      options.mode == NamingMode::deterministic
          ? Namer::deterministic(word, alphabet)
          : Namer::randomized(word, alphabet,
                              options.seed.value_or(fresh_seed()));
  auto recs = extend_to_anchored_runs(word, alphabet, powers, namer);
  std::sort(recs.begin(), recs.end(),
            [](const AnchoredRunRec& a, const AnchoredRunRec& b) {
              if (a.run.period.norm() != b.run.period.norm()) {
                return a.run.period.norm() < b.run.period.norm();
              }
              if (a.run.start != b.run.start) return a.run.start < b.run.start;
              if (a.run.end != b.run.end) return a.run.end < b.run.end;
              return a.run.head < b.run.head;
            });
  return recs;
}

std::vector<Run> all_abelian_runs(std::string_view word,
                                  const AllRunsOptions& options) {
  return all_abelian_runs(word, Alphabet::from_word(word), options);
}

std::vector<Run> all_abelian_runs(std::string_view word,
                                  const Alphabet& alphabet,
                                  const AllRunsOptions& options) {
  auto recs = all_anchored_runs(word, alphabet, options);

  std::unordered_map<PeriodId, std::vector<const AnchoredRunRec*>> buckets;
  for (const auto& rec : recs) buckets[rec.period_id].push_back(&rec);

  std::vector<Run> out;
  for (auto& [id, bucket] : buckets) {
    std::sort(bucket.begin(), bucket.end(),
              [](const AnchoredRunRec* a, const AnchoredRunRec* b) {
                if (a->run.start != b->run.start) {
                  return a->run.start < b->run.start;
                }
                if (a->run.end != b->run.end) return a->run.end > b->run.end;
                return a->run.tail < b->run.tail;
              });
    // One left-to-right scan: anything whose end does not extend past every
    // earlier span is contained in one of them (or duplicates one; the sort
    // put the shortest tail first).
    bool have_max = false;
    std::size_t max_end = 0;
    for (const AnchoredRunRec* rec : bucket) {
      if (!have_max || rec->run.end > max_end) {
        out.push_back(rec->run);
        max_end = rec->run.end;
        have_max = true;
      }
    }
  }
  sort_final(out);
  return out;
}

}  // namespace abelruns
