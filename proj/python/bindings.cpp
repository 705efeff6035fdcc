#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "abelruns/all_runs.hpp"
#include "abelruns/core.hpp"
#include "abelruns/fixed_norm.hpp"
#include "abelruns/fixed_period.hpp"
#include "abelruns/oracle.hpp"

namespace py = pybind11;
using namespace abelruns;

namespace {

Alphabet resolve_alphabet(const std::string& word,
                          const std::optional<std::string>& alphabet,
                          std::optional<std::size_t> dimension = {}) {
  if (alphabet) return Alphabet::from_symbols(*alphabet);
  if (dimension) return alphabet_with_dimension(word, *dimension);
  return Alphabet::from_word(word);
}

ParikhVector vector_from(const std::vector<std::uint32_t>& counts) {
  return ParikhVector(counts);
}

ScanMode mode_from(const std::string& mode) {
  if (mode == "anchored") return ScanMode::anchored;
  if (mode == "abelian") return ScanMode::abelian;
  throw std::invalid_argument("mode must be 'anchored' or 'abelian'");
}

AllRunsOptions all_runs_options(const std::string& mode,
                                std::optional<std::uint64_t> seed,
                                bool parallel) {
  AllRunsOptions options;
  if (mode == "deterministic") {
    options.mode = NamingMode::deterministic;
  } else if (mode == "randomized") {
    options.mode = NamingMode::randomized;
  } else {
    throw std::invalid_argument(
        "mode must be 'randomized' or 'deterministic'");
  }
  options.seed = seed;
  options.parallel = parallel;
  return options;
}

std::string run_repr(const Run& r) {
  std::ostringstream out;
  out << "Run(start=" << r.start << ", head=" << r.head << ", tail=" << r.tail
      << ", end=" << r.end << ", period=[";
  for (std::size_t i = 0; i < r.period.dimension(); ++i) {
    if (i) out << ", ";
    out << r.period[i];
  }
  out << "])";
  return out.str();
}

}  // namespace

PYBIND11_MODULE(_abelruns, m) {
  m.doc() = "Detection of abelian runs: maximal fragments of a word having a "
            "given abelian period, a period of a given norm, or any period.";

  py::class_<Run>(m, "Run")
      .def_readonly("start", &Run::start)
      .def_readonly("head", &Run::head)
      .def_readonly("tail", &Run::tail)
      .def_readonly("end", &Run::end)
      .def_property_readonly(
          "period", [](const Run& r) { return r.period.counts(); })
      .def_property_readonly("anchor", &Run::anchor)
      .def_property_readonly("cores", &Run::cores)
      .def_property_readonly("norm",
                             [](const Run& r) { return r.period.norm(); })
      .def("as_tuple",
           [](const Run& r) {
             return py::make_tuple(r.start, r.head, r.tail, r.end);
           })
      .def("__eq__", [](const Run& a, const Run& b) { return a == b; })
      .def("__repr__", &run_repr);

  m.def(
      "parikh",
      [](const std::string& word, std::optional<std::string> alphabet) {
        return parikh_of(word, resolve_alphabet(word, alphabet)).counts();
      },
      py::arg("word"), py::arg("alphabet") = py::none(),
      "Letter counts of the word in alphabet order (first occurrence by "
      "default).");

  m.def(
      "abelian_runs",
      [](const std::string& word, const std::vector<std::uint32_t>& period,
         std::optional<std::string> alphabet) {
        return abelian_runs(
            word, vector_from(period),
            resolve_alphabet(word, alphabet, period.size()));
      },
      py::arg("word"), py::arg("period"), py::arg("alphabet") = py::none(),
      "All abelian runs with the given period vector.");

  m.def(
      "anchored_runs",
      [](const std::string& word, const std::vector<std::uint32_t>& period,
         std::optional<std::string> alphabet) {
        return anchored_runs(
            word, vector_from(period),
            resolve_alphabet(word, alphabet, period.size()));
      },
      py::arg("word"), py::arg("period"), py::arg("alphabet") = py::none(),
      "All anchored runs with the given period vector.");

  m.def(
      "abelian_runs_norm",
      [](const std::string& word, std::size_t norm,
         std::optional<std::string> alphabet) {
        return abelian_runs_norm(word, norm,
                                 resolve_alphabet(word, alphabet));
      },
      py::arg("word"), py::arg("norm"), py::arg("alphabet") = py::none(),
      "All abelian runs whose period has the given norm.");

  m.def(
      "anchored_runs_norm",
      [](const std::string& word, std::size_t norm,
         std::optional<std::string> alphabet) {
        return anchored_runs_norm(word, norm,
                                  resolve_alphabet(word, alphabet));
      },
      py::arg("word"), py::arg("norm"), py::arg("alphabet") = py::none(),
      "All anchored runs whose period has the given norm.");

  m.def(
      "all_abelian_runs",
      [](const std::string& word, const std::string& mode,
         std::optional<std::uint64_t> seed, bool parallel,
         std::optional<std::string> alphabet) {
        return all_abelian_runs(word, resolve_alphabet(word, alphabet),
                                all_runs_options(mode, seed, parallel));
      },
      py::arg("word"), py::arg("mode") = "randomized",
      py::arg("seed") = py::none(), py::arg("parallel") = false,
      py::arg("alphabet") = py::none(),
      "Every abelian run of the word, sorted by (period norm, start).");

  m.def(
      "abelian_squares",
      [](const std::string& word) {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (const auto& s : abelian_squares(word)) {
          out.emplace_back(s.start, s.half);
        }
        return out;
      },
      py::arg("word"),
      "All (start, half) pairs with abelian-equivalent halves.");

  m.def(
      "oracle_abelian_runs",
      [](const std::string& word, const std::vector<std::uint32_t>& period,
         std::optional<std::string> alphabet) {
        return oracle::abelian_runs(
            word, vector_from(period),
            resolve_alphabet(word, alphabet, period.size()));
      },
      py::arg("word"), py::arg("period"), py::arg("alphabet") = py::none(),
      "Brute-force reference for abelian_runs (small inputs).");

  m.def(
      "oracle_all_runs",
      [](const std::string& word) { return oracle::all_runs(word); },
      py::arg("word"),
      "Brute-force reference for all_abelian_runs (small inputs).");

  py::class_<Scanner>(m, "Scanner")
      .def(py::init([](const std::vector<std::uint32_t>& period,
                       const std::string& alphabet, const std::string& mode,
                       bool sparse) {
             return Scanner(vector_from(period),
                            Alphabet::from_symbols(alphabet), mode_from(mode),
                            ScannerOptions{sparse});
           }),
           py::arg("period"), py::arg("alphabet"),
           py::arg("mode") = "abelian", py::arg("sparse") = false)
      .def(
          "push",
          [](Scanner& s, const std::string& symbol) {
            if (symbol.size() != 1) {
              throw std::invalid_argument("push expects a single symbol");
            }
            return s.push(static_cast<unsigned char>(symbol[0]));
          },
          py::arg("symbol"),
          "Consume one symbol; returns the runs ending one position back.")
      .def("finish", &Scanner::finish)
      .def_property_readonly("position", &Scanner::position)
      .def_property_readonly("cursor", &Scanner::cursor)
      .def_property_readonly("finished", &Scanner::finished);

  py::class_<NormScanner>(m, "NormScanner")
      .def(py::init([](std::size_t norm, const std::string& alphabet,
                       const std::string& mode, bool sparse) {
             return NormScanner(norm, Alphabet::from_symbols(alphabet),
                                mode_from(mode), NormScannerOptions{sparse});
           }),
           py::arg("norm"), py::arg("alphabet"), py::arg("mode") = "abelian",
           py::arg("sparse") = false)
      .def(
          "push",
          [](NormScanner& s, const std::string& symbol) {
            if (symbol.size() != 1) {
              throw std::invalid_argument("push expects a single symbol");
            }
            return s.push(static_cast<unsigned char>(symbol[0]));
          },
          py::arg("symbol"))
      .def("finish", &NormScanner::finish)
      .def_property_readonly("position", &NormScanner::position)
      .def_property_readonly("finished", &NormScanner::finished);
}
