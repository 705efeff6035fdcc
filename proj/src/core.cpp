#include "abelruns/core.hpp"

#include <charconv>
#include <stdexcept>

namespace abelruns {

Alphabet Alphabet::from_word(std::string_view word) {
  Alphabet a;
  for (char ch : word) {
    auto symbol = static_cast<unsigned char>(ch);
    if (a.index_[symbol] < 0) {
      a.index_[symbol] = static_cast<std::int16_t>(a.symbols_.size());
      a.symbols_.push_back(ch);
    }
  }
  return a;
}

Alphabet Alphabet::from_symbols(std::string_view symbols) {
  Alphabet a;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    auto symbol = static_cast<unsigned char>(symbols[i]);
    if (a.index_[symbol] >= 0) {
      throw std::invalid_argument("duplicate symbol '" +
                                  std::string(1, symbols[i]) +
                                  "' in alphabet declaration");
    }
    a.index_[symbol] = static_cast<std::int16_t>(i);
    a.symbols_.push_back(symbols[i]);
  }
  return a;
}

unsigned char Alphabet::symbol_at(std::size_t index) const {
  if (index >= symbols_.size()) {
    throw std::out_of_range("alphabet index out of range");
  }
  return static_cast<unsigned char>(symbols_[index]);
}

ParikhVector::ParikhVector(std::vector<std::uint32_t> counts)
    : counts_(std::move(counts)) {
  for (std::uint32_t c : counts_) norm_ += c;
}

ParikhVector ParikhVector::parse(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("empty period vector");
  }
  std::vector<std::uint32_t> counts;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view field = text.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos
                                             : comma - pos);
    std::uint32_t value = 0;
    auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
      throw std::invalid_argument("bad period vector component '" +
                                  std::string(field) + "'");
    }
    counts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return ParikhVector(std::move(counts));
}

std::string ParikhVector::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += std::to_string(counts_[i]);
  }
  return out;
}

ParikhVector parikh_of(std::string_view fragment, const Alphabet& alphabet) {
  ParikhVector v(alphabet.size());
  for (std::size_t i = 0; i < fragment.size(); ++i) {
    int index = alphabet.index_of(static_cast<unsigned char>(fragment[i]));
    if (index < 0) {
      throw std::invalid_argument("symbol '" + std::string(1, fragment[i]) +
                                  "' at position " + std::to_string(i) +
                                  " is not in the alphabet");
    }
    v.add(static_cast<std::size_t>(index));
  }
  return v;
}

Alphabet alphabet_with_dimension(std::string_view word,
                                 std::size_t dimension) {
  std::string symbols;
  std::array<bool, 256> seen{};
  for (char ch : word) {
    auto symbol = static_cast<unsigned char>(ch);
    if (!seen[symbol]) {
      seen[symbol] = true;
      symbols.push_back(ch);
      if (symbols.size() == dimension) break;
    }
  }
  if (symbols.size() < dimension) {
    throw std::invalid_argument(
        "input has fewer distinct symbols (" + std::to_string(symbols.size()) +
        ") than the period has components (" + std::to_string(dimension) +
        "); declare the alphabet explicitly");
  }
  return Alphabet::from_symbols(symbols);
}

bool contains(const ParikhVector& outer, const ParikhVector& inner) {
  if (outer.dimension() != inner.dimension()) {
    throw std::invalid_argument("Parikh vector dimension mismatch: " +
                                std::to_string(outer.dimension()) + " vs " +
                                std::to_string(inner.dimension()));
  }
  for (std::size_t c = 0; c < outer.dimension(); ++c) {
    if (inner[c] > outer[c]) return false;
  }
  return true;
}

bool strictly_contains(const ParikhVector& outer, const ParikhVector& inner) {
  return contains(outer, inner) && inner != outer;
}

WindowTracker::WindowTracker(ParikhVector bound, Alphabet alphabet,
                             bool sparse)
    : alphabet_(std::move(alphabet)),
      bound_(std::move(bound)),
      sparse_(sparse) {
  if (bound_.dimension() != alphabet_.size()) {
    throw std::invalid_argument(
        "bound dimension does not match alphabet size");
  }
  if (!sparse_) window_.assign(bound_.dimension(), 0);
}

std::uint32_t WindowTracker::count_of(std::size_t index) const {
  if (!sparse_) return window_[index];
  auto it = sparse_window_.find(index);
  return it == sparse_window_.end() ? 0 : it->second;
}

void WindowTracker::set_count(std::size_t index, std::uint32_t value) {
  if (!sparse_) {
    window_[index] = value;
  } else if (value == 0) {
    sparse_window_.erase(index);
  } else {
    sparse_window_[index] = value;
  }
}

void WindowTracker::extend_right(unsigned char symbol) {
  ++size_;
  int index = alphabet_.index_of(symbol);
  if (index < 0) {
    ++unknown_;
    return;
  }
  auto c = static_cast<std::size_t>(index);
  std::uint32_t count = count_of(c) + 1;
  if (count == bound_[c] + 1) ++violations_;
  set_count(c, count);
}

void WindowTracker::shrink_left(unsigned char symbol) {
  if (size_ == 0) {
    throw std::logic_error("shrink_left on an empty window");
  }
  --size_;
  int index = alphabet_.index_of(symbol);
  if (index < 0) {
    --unknown_;
    return;
  }
  auto c = static_cast<std::size_t>(index);
  std::uint32_t count = count_of(c);
  if (count == bound_[c] + 1) --violations_;
  set_count(c, count - 1);
}

ParikhVector WindowTracker::window() const {
  ParikhVector v(bound_.dimension());
  for (std::size_t c = 0; c < bound_.dimension(); ++c) {
    for (std::uint32_t k = 0; k < count_of(c); ++k) v.add(c);
  }
  return v;
}

void WindowTracker::clear() {
  if (!sparse_) {
    window_.assign(bound_.dimension(), 0);
  } else {
    sparse_window_.clear();
  }
  violations_ = 0;
  unknown_ = 0;
  size_ = 0;
}

}  // namespace abelruns
