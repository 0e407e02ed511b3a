#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <climits>
#include <sstream>

#include "rscore/analysis.hpp"
#include "rscore/cli.hpp"
#include "rscore/corpus.hpp"
#include "rscore/counts.hpp"
#include "rscore/error.hpp"
#include "rscore/markov.hpp"
#include "rscore/report.hpp"
#include "rscore/reputation.hpp"
#include "rscore/scoring.hpp"

namespace py = pybind11;

namespace {

py::object fraction(const rscore::Rational& value) {
  static py::object fraction_type = py::module_::import("fractions").attr("Fraction");
  return fraction_type(rscore::format_exact(value));
}

std::vector<std::vector<double>> to_rows(const rscore::Matrix& m) {
  std::vector<std::vector<double>> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) rows.emplace_back(m.row(r).begin(), m.row(r).end());
  return rows;
}

rscore::Matrix from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  rscore::Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::optional<rscore::YearWindow> window_of(std::optional<int> from, std::optional<int> to) {
  if (!from && !to) return std::nullopt;
  return rscore::YearWindow{from.value_or(INT_MIN), to.value_or(INT_MAX)};
}

std::vector<std::string> program_ids(const std::vector<rscore::ProgramRoster>& rosters) {
  std::vector<std::string> ids;
  for (const auto& roster : rosters) ids.push_back(roster.program_id);
  return ids;
}

std::vector<std::string> venue_names(const std::vector<rscore::VenueId>& venues) {
  std::vector<std::string> names;
  for (const auto& venue : venues) names.push_back(venue.value());
  return names;
}

}  // namespace

PYBIND11_MODULE(_rscore, m) {
  m.doc() = "Reputation-based scoring of research programs from publication listings";

  py::register_exception<rscore::DataError>(m, "DataError", PyExc_ValueError);

  py::class_<rscore::Corpus>(m, "Corpus")
      .def_property_readonly("publication_count",
                             [](const rscore::Corpus& c) { return c.publications().size(); })
      .def_property_readonly("reference_programs",
                             [](const rscore::Corpus& c) { return program_ids(c.reference_programs()); })
      .def_property_readonly("candidate_programs",
                             [](const rscore::Corpus& c) { return program_ids(c.candidate_programs()); })
      .def_property_readonly("dropped_outside_window", &rscore::Corpus::dropped_outside_window)
      .def_property_readonly("warnings", &rscore::Corpus::warnings)
      .def("reference_venues",
           [](const rscore::Corpus& c) { return venue_names(rscore::reference_venue_set(c)); })
      .def("serialize_publications", &rscore::serialize_publications)
      .def("serialize_rosters", &rscore::serialize_rosters);

  m.def(
      "parse_corpus",
      [](const std::string& publications, const std::string& rosters, std::optional<int> year_from,
         std::optional<int> year_to) {
        std::istringstream pubs(publications);
        std::istringstream roster_doc(rosters);
        return rscore::parse_corpus(pubs, roster_doc, window_of(year_from, year_to));
      },
      py::arg("publications"), py::arg("rosters"), py::arg("year_from") = py::none(),
      py::arg("year_to") = py::none(), "Parse publication lines and a roster document.");
  m.def(
      "load_corpus",
      [](const std::string& publications_path, const std::string& rosters_path,
         std::optional<int> year_from, std::optional<int> year_to) {
        return rscore::load_corpus(publications_path, rosters_path, window_of(year_from, year_to));
      },
      py::arg("publications_path"), py::arg("rosters_path"), py::arg("year_from") = py::none(),
      py::arg("year_to") = py::none());

  py::class_<rscore::CountsTable>(m, "CountsTable")
      .def_property_readonly("venues",
                             [](const rscore::CountsTable& t) { return venue_names(t.venues); })
      .def_readonly("reference_programs", &rscore::CountsTable::reference_programs)
      .def_readonly("candidate_programs", &rscore::CountsTable::candidate_programs)
      .def_property_readonly("venue_mode",
                             [](const rscore::CountsTable& t) {
                               return std::string(rscore::to_string(t.venue_mode));
                             })
      .def("faculty_venue",
           [](const rscore::CountsTable& t, const std::string& program, const std::string& author,
              const std::string& venue) {
             return fraction(t.faculty_venue(program, rscore::AuthorId(author), rscore::VenueId(venue)));
           })
      .def("program_venue",
           [](const rscore::CountsTable& t, const std::string& program, const std::string& venue) {
             return fraction(t.program_venue(program, rscore::VenueId(venue)));
           })
      .def("venue_total",
           [](const rscore::CountsTable& t, const std::string& venue) {
             return fraction(rscore::venue_total(t, rscore::VenueId(venue)));
           })
      .def("program_total", [](const rscore::CountsTable& t, const std::string& program) {
        return fraction(rscore::program_total(t, program));
      });

  m.def(
      "build_counts",
      [](const rscore::Corpus& corpus, const std::string& venue_mode) {
        return rscore::build_counts(corpus, rscore::parse_venue_mode(venue_mode));
      },
      py::arg("corpus"), py::arg("venue_mode") = "per-program");
  m.def(
      "weighted_faculty_count",
      [](const rscore::Corpus& corpus, const std::string& program, const std::string& faculty,
         const std::string& venue) {
        return fraction(rscore::weighted_faculty_count(corpus, program, rscore::AuthorId(faculty),
                                                       rscore::VenueId(venue)));
      },
      py::arg("corpus"), py::arg("program"), py::arg("faculty"), py::arg("venue"));

  py::class_<rscore::ReputationModel>(m, "ReputationModel")
      .def_property_readonly("programs",
                             [](const rscore::ReputationModel& r) { return r.structure.program_index; })
      .def_property_readonly("venues",
                             [](const rscore::ReputationModel& r) {
                               return venue_names(r.structure.venue_index);
                             })
      .def_property_readonly("alpha",
                             [](const rscore::ReputationModel& r) { return to_rows(r.structure.alpha); })
      .def_property_readonly("beta",
                             [](const rscore::ReputationModel& r) { return to_rows(r.structure.beta); })
      .def_property_readonly("p_prime",
                             [](const rscore::ReputationModel& r) { return to_rows(r.p_prime); })
      .def_readonly("gamma", &rscore::ReputationModel::gamma)
      .def_readonly("nu", &rscore::ReputationModel::nu)
      .def_property_readonly("notices",
                             [](const rscore::ReputationModel& r) { return r.structure.notices; })
      .def("digest", &rscore::model_digest)
      .def("dump_matrices", &rscore::dump_matrices);

  m.def(
      "build_reputation_model",
      [](const rscore::CountsTable& counts) { return rscore::build_reputation_model(counts); },
      py::arg("counts"));
  m.def(
      "stationary_gth",
      [](const std::vector<std::vector<double>>& p) { return rscore::stationary_gth(from_rows(p)); },
      py::arg("p"), "Stationary distribution of an irreducible row-stochastic matrix.");

  py::class_<rscore::ScoreRow>(m, "ScoreRow")
      .def_readonly("program_id", &rscore::ScoreRow::program_id)
      .def_readonly("faculty_count", &rscore::ScoreRow::faculty_count)
      .def_readonly("raw_score", &rscore::ScoreRow::raw_score)
      .def_readonly("r_score", &rscore::ScoreRow::r_score)
      .def_readonly("r_score_per_faculty", &rscore::ScoreRow::r_score_per_faculty)
      .def_readonly("rank_total", &rscore::ScoreRow::rank_total)
      .def_readonly("rank_per_faculty", &rscore::ScoreRow::rank_per_faculty);

  py::class_<rscore::ScoreReport>(m, "ScoreReport")
      .def_readonly("rows", &rscore::ScoreReport::rows)
      .def_readonly("model_digest", &rscore::ScoreReport::model_digest)
      .def_readonly("all_zero", &rscore::ScoreReport::all_zero)
      .def_readonly("warnings", &rscore::ScoreReport::warnings)
      .def("to_tsv", &rscore::format_rank_tsv)
      .def("to_json", &rscore::format_rank_json);

  m.def(
      "raw_score",
      [](const rscore::ReputationModel& model, const rscore::CountsTable& counts,
         const std::string& program) { return rscore::raw_score(model, counts, program); },
      py::arg("model"), py::arg("counts"), py::arg("program"));
  m.def(
      "score_programs",
      [](const rscore::ReputationModel& model, const rscore::CountsTable& counts,
         std::optional<std::vector<std::string>> programs) {
        return programs ? rscore::score_programs(model, counts, *programs)
                        : rscore::score_programs(model, counts);
      },
      py::arg("model"), py::arg("counts"), py::arg("programs") = py::none());

  m.def(
      "spearman",
      [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
        return rscore::spearman(a, b);
      },
      py::arg("ranking_a"), py::arg("ranking_b"));

  py::class_<rscore::StabilityReport>(m, "StabilityReport")
      .def_readonly("sizes", &rscore::StabilityReport::sizes)
      .def_readonly("rankings", &rscore::StabilityReport::rankings)
      .def_property_readonly("adjacent",
                             [](const rscore::StabilityReport& s) {
                               std::vector<std::tuple<std::size_t, std::size_t, std::optional<double>>> out;
                               for (const auto& c : s.adjacent) out.emplace_back(c.size_a, c.size_b, c.rho);
                               return out;
                             })
      .def_property_readonly("first_vs_last",
                             [](const rscore::StabilityReport& s) {
                               const auto& c = s.first_vs_last;
                               return std::make_tuple(c.size_a, c.size_b, c.rho);
                             })
      .def("to_tsv", &rscore::format_stability_tsv);

  m.def(
      "stability_sweep",
      [](const rscore::Corpus& corpus, std::size_t k, const std::string& venue_mode) {
        py::gil_scoped_release release;
        return rscore::stability_sweep(corpus, k, rscore::parse_venue_mode(venue_mode));
      },
      py::arg("corpus"), py::arg("k"), py::arg("venue_mode") = "per-program");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int status = rscore::cli::run(args, out, err);
        return std::make_tuple(status, out.str(), err.str());
      },
      py::arg("args"), "Run one CLI subcommand in-process; returns (status, stdout, stderr).");
}
