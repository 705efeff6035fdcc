#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "abelruns/core.hpp"

namespace abelruns::oracle {

/// Certificate that a fragment factors as head, cores, tail for some period:
/// every core has the period's Parikh vector exactly and head/tail are
/// strictly contained in it.
struct FactorizationWitness {
  std::size_t head = 0;
  std::size_t tail = 0;
  std::size_t cores = 0;
  std::size_t anchor = 0;

  bool operator==(const FactorizationWitness&) const = default;
};

/// Tries every head length; returns a witness with at least two cores,
/// preferring the maximal core count and then the shortest tail, or nothing.
/// Throws std::invalid_argument on out-of-range indices.
std::optional<FactorizationWitness> is_periodic(std::string_view word,
                                                std::size_t i, std::size_t j,
                                                const ParikhVector& period,
                                                const Alphabet& alphabet);

/// All fragments periodic with `period` whose one-letter extensions are not;
/// each represented by its max-core, shortest-tail witness.
std::vector<Run> abelian_runs(std::string_view word,
                              const ParikhVector& period,
                              const Alphabet& alphabet);

/// All fragments maximal under extension preserving both the period and the
/// anchor, for every anchor class.
std::vector<Run> anchored_runs(std::string_view word,
                               const ParikhVector& period,
                               const Alphabet& alphabet);

/// Union of abelian_runs over every Parikh vector realized by a fragment.
std::vector<Run> all_runs(std::string_view word);
std::vector<Run> all_runs(std::string_view word, const Alphabet& alphabet);

/// Union of abelian_runs over every Parikh vector of norm `norm` realized by
/// a length-`norm` fragment.
std::vector<Run> abelian_runs_norm(std::string_view word, std::size_t norm,
                                   const Alphabet& alphabet);
std::vector<Run> anchored_runs_norm(std::string_view word, std::size_t norm,
                                    const Alphabet& alphabet);

/// All (start, half) with the two halves abelian-equivalent, by exhaustive
/// recount; sorted by (half, start).
std::vector<std::pair<std::size_t, std::size_t>> squares(
    std::string_view word);

}  // namespace abelruns::oracle
