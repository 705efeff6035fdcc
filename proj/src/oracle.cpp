#include "abelruns/oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

// Reference implementations, deliberately independent of the scanner and
// pipeline code paths: counting is done with plain prefix sums and every
// candidate factorization is tried per the definitions.

namespace abelruns::oracle {

namespace {

// prefix[i][c] = occurrences of letter c in w[0..i-1], flattened.
class CountTable {
 public:
  CountTable(std::string_view word, const Alphabet& alphabet)
      : dim_(alphabet.size()), data_((word.size() + 1) * dim_, 0) {
    for (std::size_t i = 0; i < word.size(); ++i) {
      int c = alphabet.index_of(static_cast<unsigned char>(word[i]));
      if (c < 0) {
        throw std::invalid_argument("symbol '" + std::string(1, word[i]) +
                                    "' at position " + std::to_string(i) +
                                    " is not in the alphabet");
      }
      for (std::size_t d = 0; d < dim_; ++d) {
        data_[(i + 1) * dim_ + d] = data_[i * dim_ + d];
      }
      ++data_[(i + 1) * dim_ + static_cast<std::size_t>(c)];
    }
  }

  std::size_t dim() const { return dim_; }

  // count of letter c in w[from..to) (half-open)
  std::uint32_t count(std::size_t from, std::size_t to, std::size_t c) const {
    return data_[to * dim_ + c] - data_[from * dim_ + c];
  }

  // Parikh(w[from..to)) componentwise <= bound
  bool contained(std::size_t from, std::size_t to,
                 const ParikhVector& bound) const {
    for (std::size_t c = 0; c < dim_; ++c) {
      if (count(from, to, c) > bound[c]) return false;
    }
    return true;
  }

  // Parikh(w[from..from+len)) == bound
  bool equals(std::size_t from, std::size_t len,
              const ParikhVector& bound) const {
    for (std::size_t c = 0; c < dim_; ++c) {
      if (count(from, from + len, c) != bound[c]) return false;
    }
    return true;
  }

  std::vector<std::uint32_t> vector_of(std::size_t from, std::size_t to) const {
    std::vector<std::uint32_t> v(dim_);
    for (std::size_t c = 0; c < dim_; ++c) v[c] = count(from, to, c);
    return v;
  }

 private:
  std::size_t dim_;
  std::vector<std::uint32_t> data_;
};

// Everything a batch query needs about one (word, period) pair.
struct Context {
  const CountTable& table;
  const ParikhVector& period;
  std::size_t n;
  std::size_t p;
  // chain[x] = number of consecutive blocks equal to the period starting at x
  std::vector<std::size_t> chain;

  Context(const CountTable& t, const ParikhVector& period_in, std::size_t n_in)
      : table(t), period(period_in), n(n_in), p(period_in.norm()),
        chain(n + 1, 0) {
    if (p == 0) {
      throw std::invalid_argument("period norm must be at least 1");
    }
    for (std::size_t x = n >= p ? n - p + 1 : 0; x-- > 0;) {
      if (table.equals(x, p, period)) {
        chain[x] = 1 + (x + p + p <= n ? chain[x + p] : 0);
      }
    }
  }

  // Fragment w[i..j] factors with head length h, cores equal to the period,
  // and strictly contained head/tail, with at least two cores.
  bool factors_with_head(std::size_t i, std::size_t j, std::size_t h) const {
    const std::size_t c0 = i + h;
    if (c0 > j + 1) return false;
    const std::size_t rem = j + 1 - c0;
    const std::size_t cores = rem / p;
    const std::size_t t = rem % p;
    if (cores < 2) return false;
    if (!table.contained(i, c0, period)) return false;
    if (chain[c0] < cores) return false;
    return table.contained(j + 1 - t, j + 1, period);
  }

  bool periodic(std::size_t i, std::size_t j) const {
    for (std::size_t h = 0; h < p; ++h) {
      if (factors_with_head(i, j, h)) return true;
    }
    return false;
  }

  bool periodic_anchored(std::size_t i, std::size_t j,
                         std::size_t anchor) const {
    const std::size_t h = (anchor + p - i % p) % p;
    return factors_with_head(i, j, h);
  }

  // Max-core, shortest-tail witness among all valid head lengths.
  std::optional<FactorizationWitness> best_witness(std::size_t i,
                                                   std::size_t j) const {
    std::optional<FactorizationWitness> best;
    for (std::size_t h = 0; h < p; ++h) {
      if (!factors_with_head(i, j, h)) continue;
      const std::size_t rem = j + 1 - i - h;
      FactorizationWitness w{.head = h,
                             .tail = rem % p,
                             .cores = rem / p,
                             .anchor = (i + h) % p};
      if (!best || w.cores > best->cores ||
          (w.cores == best->cores && w.tail < best->tail)) {
        best = w;
      }
    }
    return best;
  }
};

void sort_runs(std::vector<Run>& runs) {
  std::sort(runs.begin(), runs.end(), [](const Run& a, const Run& b) {
    if (a.end != b.end) return a.end < b.end;
    if (a.start != b.start) return a.start < b.start;
    if (a.period.counts() != b.period.counts()) {
      return a.period.counts() < b.period.counts();
    }
    return a.head < b.head;
  });
}

std::vector<Run> abelian_runs_in_context(std::string_view word,
                                         const Context& ctx) {
  std::vector<Run> out;
  const std::size_t n = word.size();
  std::vector<char> periodic(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      periodic[i * n + j] = ctx.periodic(i, j);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (!periodic[i * n + j]) continue;
      if (i > 0 && periodic[(i - 1) * n + j]) continue;
      if (j + 1 < n && periodic[i * n + j + 1]) continue;
      auto w = ctx.best_witness(i, j);
      out.push_back(Run{.start = i,
                        .head = w->head,
                        .tail = w->tail,
                        .end = j,
                        .period = ctx.period});
    }
  }
  sort_runs(out);
  return out;
}

std::vector<Run> anchored_runs_in_context(std::string_view word,
                                          const Context& ctx) {
  std::vector<Run> out;
  const std::size_t n = word.size();
  std::vector<char> periodic(n * n);
  for (std::size_t anchor = 0; anchor < ctx.p; ++anchor) {
    std::fill(periodic.begin(), periodic.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        periodic[i * n + j] = ctx.periodic_anchored(i, j, anchor);
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        if (!periodic[i * n + j]) continue;
        if (i > 0 && periodic[(i - 1) * n + j]) continue;
        if (j + 1 < n && periodic[i * n + j + 1]) continue;
        const std::size_t h = (anchor + ctx.p - i % ctx.p) % ctx.p;
        out.push_back(Run{.start = i,
                          .head = h,
                          .tail = (j + 1 - i - h) % ctx.p,
                          .end = j,
                          .period = ctx.period});
      }
    }
  }
  sort_runs(out);
  return out;
}

// Distinct Parikh vectors of the length-`len` fragments (all lengths when
// len == 0).
std::vector<ParikhVector> candidate_periods(const CountTable& table,
                                            std::size_t n, std::size_t len) {
  std::set<std::vector<std::uint32_t>> seen;
  const std::size_t lo = len == 0 ? 1 : len;
  const std::size_t hi = len == 0 ? n : len;
  for (std::size_t l = lo; l <= hi && l <= n; ++l) {
    for (std::size_t x = 0; x + l <= n; ++x) {
      seen.insert(table.vector_of(x, x + l));
    }
  }
  std::vector<ParikhVector> out;
  for (const auto& v : seen) out.push_back(ParikhVector(v));
  return out;
}

void sort_all_runs(std::vector<Run>& runs) {
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

std::optional<FactorizationWitness> is_periodic(std::string_view word,
                                                std::size_t i, std::size_t j,
                                                const ParikhVector& period,
                                                const Alphabet& alphabet) {
  if (i > j || j >= word.size()) {
    throw std::invalid_argument("fragment indices out of range");
  }
  CountTable table(word, alphabet);
  Context ctx(table, period, word.size());
  return ctx.best_witness(i, j);
}

std::vector<Run> abelian_runs(std::string_view word,
                              const ParikhVector& period,
                              const Alphabet& alphabet) {
  if (word.empty()) return {};
  CountTable table(word, alphabet);
  Context ctx(table, period, word.size());
  return abelian_runs_in_context(word, ctx);
}

std::vector<Run> anchored_runs(std::string_view word,
                               const ParikhVector& period,
                               const Alphabet& alphabet) {
  if (word.empty()) return {};
  CountTable table(word, alphabet);
  Context ctx(table, period, word.size());
  return anchored_runs_in_context(word, ctx);
}

std::vector<Run> all_runs(std::string_view word) {
  return all_runs(word, Alphabet::from_word(word));
}

std::vector<Run> all_runs(std::string_view word, const Alphabet& alphabet) {
  if (word.empty()) return {};
  CountTable table(word, alphabet);
  std::vector<Run> out;
  for (const auto& period : candidate_periods(table, word.size(), 0)) {
    Context ctx(table, period, word.size());
    auto runs = abelian_runs_in_context(word, ctx);
    out.insert(out.end(), runs.begin(), runs.end());
  }
  sort_all_runs(out);
  return out;
}

std::vector<Run> abelian_runs_norm(std::string_view word, std::size_t norm,
                                   const Alphabet& alphabet) {
  if (norm == 0) {
    throw std::invalid_argument("period norm must be at least 1");
  }
  if (word.size() < norm) return {};
  CountTable table(word, alphabet);
  std::vector<Run> out;
  for (const auto& period : candidate_periods(table, word.size(), norm)) {
    Context ctx(table, period, word.size());
    auto runs = abelian_runs_in_context(word, ctx);
    out.insert(out.end(), runs.begin(), runs.end());
  }
  sort_runs(out);
  return out;
}

std::vector<Run> anchored_runs_norm(std::string_view word, std::size_t norm,
                                    const Alphabet& alphabet) {
  if (norm == 0) {
    throw std::invalid_argument("period norm must be at least 1");
  }
  if (word.size() < norm) return {};
  CountTable table(word, alphabet);
  std::vector<Run> out;
  for (const auto& period : candidate_periods(table, word.size(), norm)) {
    Context ctx(table, period, word.size());
    auto runs = anchored_runs_in_context(word, ctx);
    out.insert(out.end(), runs.begin(), runs.end());
  }
  sort_runs(out);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> squares(
    std::string_view word) {
  const std::size_t n = word.size();
  Alphabet alphabet = Alphabet::from_word(word);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::vector<std::uint32_t> left(alphabet.size()), right(alphabet.size());
  for (std::size_t p = 1; 2 * p <= n; ++p) {
    for (std::size_t i = 0; i + 2 * p <= n; ++i) {
      std::fill(left.begin(), left.end(), 0);
      std::fill(right.begin(), right.end(), 0);
      for (std::size_t x = 0; x < p; ++x) {
        ++left[alphabet.index_of(static_cast<unsigned char>(word[i + x]))];
        ++right[alphabet.index_of(
            static_cast<unsigned char>(word[i + p + x]))];
      }
      if (left == right) out.emplace_back(i, p);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) {
              return a.second != b.second ? a.second < b.second
                                          : a.first < b.first;
            });
  return out;
}

}  // namespace abelruns::oracle
