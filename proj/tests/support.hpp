#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "abelruns/core.hpp"

namespace testsupport {

inline std::uint64_t int_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

inline std::string word_from_code(std::uint64_t code, std::size_t len,
                                  std::string_view alphabet) {
  std::string w(len, alphabet[0]);
  for (std::size_t i = len; i-- > 0;) {
    w[i] = alphabet[code % alphabet.size()];
    code /= alphabet.size();
  }
  return w;
}

// Every word over `alphabet` with length in [min_len, max_len].
template <class F>
void for_each_word(std::string_view alphabet, std::size_t min_len,
                   std::size_t max_len, F&& f) {
  for (std::size_t len = min_len; len <= max_len; ++len) {
    const std::uint64_t total = int_pow(alphabet.size(), len);
    for (std::uint64_t code = 0; code < total; ++code) {
      f(word_from_code(code, len, alphabet));
    }
  }
}

// Same enumeration split over worker threads; f must be thread-safe.
template <class F>
void parallel_for_each_word(std::string_view alphabet, std::size_t min_len,
                            std::size_t max_len, F&& f) {
  std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  for (std::size_t len = min_len; len <= max_len; ++len) {
    const std::uint64_t total = int_pow(alphabet.size(), len);
    const std::uint64_t chunk = (total + workers - 1) / workers;
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < workers; ++t) {
      const std::uint64_t lo = t * chunk;
      const std::uint64_t hi = std::min(total, lo + chunk);
      if (lo >= hi) continue;
      pool.emplace_back([&, lo, hi, len] {
        for (std::uint64_t code = lo; code < hi; ++code) {
          f(word_from_code(code, len, alphabet));
        }
      });
    }
    for (auto& th : pool) th.join();
  }
}

// All Parikh vectors of the given dimension and norm.
inline std::vector<abelruns::ParikhVector> vectors_of_norm(std::size_t dim,
                                                           std::size_t norm) {
  std::vector<abelruns::ParikhVector> out;
  std::vector<std::uint32_t> current(dim, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos,
                                                          std::size_t left) {
    if (pos + 1 == dim) {
      current[pos] = static_cast<std::uint32_t>(left);
      out.push_back(abelruns::ParikhVector(current));
      return;
    }
    for (std::size_t take = 0; take <= left; ++take) {
      current[pos] = static_cast<std::uint32_t>(take);
      rec(pos + 1, left - take);
    }
  };
  if (dim > 0) rec(0, norm);
  return out;
}

inline std::string run_to_string(const abelruns::Run& r) {
  return std::to_string(r.start) + "," + std::to_string(r.head) + "," +
         std::to_string(r.tail) + "," + std::to_string(r.end) + ":" +
         r.period.to_string();
}

// Canonical order-independent rendering for whole result sets.
inline std::vector<std::string> normalized(
    const std::vector<abelruns::Run>& runs) {
  std::vector<std::string> out;
  out.reserve(runs.size());
  for (const auto& r : runs) out.push_back(run_to_string(r));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::string random_word(std::mt19937_64& rng, std::size_t len,
                               std::string_view alphabet) {
  std::uniform_int_distribution<std::size_t> dist(0, alphabet.size() - 1);
  std::string w(len, alphabet[0]);
  for (auto& ch : w) ch = alphabet[dist(rng)];
  return w;
}

}  // namespace testsupport
