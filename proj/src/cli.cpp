#include "rscore/cli.hpp"

#include <algorithm>
#include <climits>
#include <fstream>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "rscore/analysis.hpp"
#include "rscore/corpus.hpp"
#include "rscore/counts.hpp"
#include "rscore/error.hpp"
#include "rscore/report.hpp"
#include "rscore/reputation.hpp"
#include "rscore/scoring.hpp"

namespace rscore::cli {
namespace {

struct RunConfig {
  std::string publications_path;
  std::string rosters_path;
  std::optional<int> year_from;
  std::optional<int> year_to;
  std::string venue_mode = "per-program";
  bool json = false;
  std::size_t k = 10;
  std::string grades_path;
  bool dump_matrices = false;
};

void add_common_options(CLI::App& sub, RunConfig& config) {
  sub.add_option("--pubs", config.publications_path, "Publications file (one JSON record per line)")
      ->required();
  sub.add_option("--rosters", config.rosters_path, "Program rosters (JSON document)")->required();
  sub.add_option("--from", config.year_from, "First year of the window (inclusive)");
  sub.add_option("--to", config.year_to, "Last year of the window (inclusive)");
  sub.add_option("--venue-mode", config.venue_mode, "How venue totals count shared papers")
      ->check(CLI::IsMember({"per-program", "distinct"}));
  sub.add_flag("--json", config.json, "Emit a JSON document instead of TSV");
}

std::optional<YearWindow> window_of(const RunConfig& config) {
  if (!config.year_from && !config.year_to) return std::nullopt;
  return YearWindow{config.year_from.value_or(INT_MIN), config.year_to.value_or(INT_MAX)};
}

void print_warnings(std::ostream& err, const std::vector<std::string>& warnings) {
  for (const std::string& warning : warnings) err << "rscore: warning: " << warning << '\n';
}

std::string execute(const std::string& command, const RunConfig& config, std::ostream& err) {
  const Corpus corpus =
      load_corpus(config.publications_path, config.rosters_path, window_of(config));
  print_warnings(err, corpus.warnings());

  if (command == "validate") {
    const std::size_t venues = reference_venue_set(corpus).size();
    return config.json ? format_validate_json(corpus, venues) : format_validate(corpus, venues);
  }

  const VenueMode mode = parse_venue_mode(config.venue_mode);
  if (command == "stability") {
    const StabilityReport report = stability_sweep(corpus, config.k, mode);
    return config.json ? format_stability_json(report) : format_stability_tsv(report);
  }

  const CountsTable counts = build_counts(corpus, mode);
  if (command == "counts") {
    return config.json ? format_counts_json(counts) : format_counts_tsv(counts);
  }

  const ReputationModel model = build_reputation_model(counts);
  print_warnings(err, model.structure.notices);
  if (command == "venues") {
    if (config.dump_matrices) return dump_matrices(model);
    return config.json ? format_venues_json(model) : format_venues_tsv(model);
  }

  const ScoreReport report = score_programs(model, counts);
  print_warnings(err, report.warnings);
  if (command == "rank") {
    return config.json ? format_rank_json(report) : format_rank_tsv(report);
  }

  // compare
  std::ifstream grades_file(config.grades_path);
  if (!grades_file) throw DataError("cannot open grades file '" + config.grades_path + "'");
  const std::vector<ExternalGrade> grades = parse_grades(grades_file);
  const ComparisonTable table = compare_rankings(report, grades);
  if (!table.unmatched_report.empty() || !table.unmatched_external.empty()) {
    err << "rscore: warning: " << table.unmatched_report.size()
        << " scored program(s) without a grade, " << table.unmatched_external.size()
        << " graded program(s) not scored\n";
  }
  return config.json ? format_compare_json(table) : format_compare_tsv(table);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reputation-based scoring of research programs from publication listings",
               "rscore"};
  app.require_subcommand(1, 1);

  RunConfig config;
  CLI::App* validate = app.add_subcommand("validate", "Parse inputs and check invariants");
  CLI::App* counts = app.add_subcommand("counts", "Publication counts table");
  CLI::App* venues = app.add_subcommand("venues", "Venue reputation");
  CLI::App* rank = app.add_subcommand("rank", "Score and rank candidate programs");
  CLI::App* stability = app.add_subcommand("stability", "Nested reference-set stability sweep");
  CLI::App* compare = app.add_subcommand("compare", "Compare the ranking with external grades");
  for (CLI::App* sub : {validate, counts, venues, rank, stability, compare}) {
    add_common_options(*sub, config);
  }
  venues->add_flag("--dump-matrices", config.dump_matrices,
                   "Emit alpha, beta, P' and gamma as a JSON audit document");
  stability->add_option("--k", config.k, "Largest reference prefix size")
      ->check(CLI::PositiveNumber);
  compare->add_option("--grades", config.grades_path, "Lines of program_id<TAB>grade")
      ->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (config.year_from && config.year_to && *config.year_from > *config.year_to) {
      throw CLI::ValidationError("--from/--to", "--from must not be after --to");
    }
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    app.exit(e, err, err);
    return kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    out << execute(command, config, err);
    return kExitOk;
  } catch (const DataError& e) {
    err << "rscore: error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "rscore: internal error: " << e.what() << '\n';
  }
  return kExitDataError;
}

}  // namespace rscore::cli
