#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rscore/corpus.hpp"
#include "rscore/counts.hpp"
#include "rscore/scoring.hpp"

namespace rscore {

// A program together with the score its ranking was derived from.
// Larger scores rank first.
struct ScoredProgram {
  std::string program_id;
  double score = 0.0;
};

// Spearman correlation of two tie-free orderings of the same set (n >= 2).
// Throws std::invalid_argument on mismatched sets, duplicates or n < 2.
double spearman(std::span<const std::string> ranking_a,
                std::span<const std::string> ranking_b);

// Tie-aware Spearman: equal scores receive their average rank and the
// coefficient is the Pearson correlation of the rank vectors. Returns
// nullopt when either side has zero rank variance (every score tied).
std::optional<double> spearman_scored(std::span<const ScoredProgram> a,
                                      std::span<const ScoredProgram> b);

// Average (fractional) ranks, 1-based, larger score first.
std::vector<double> average_ranks(std::span<const double> scores);

std::vector<ScoredProgram> scored_programs(const ScoreReport& report);

struct RankCorrelation {
  std::size_t size_a = 0;
  std::size_t size_b = 0;
  std::optional<double> rho;  // nullopt: degenerate (zero variance)
};

struct StabilityReport {
  std::vector<std::size_t> sizes;
  std::vector<RankCorrelation> adjacent;  // (i, i+1) for i = 1..k-1
  RankCorrelation first_vs_last;          // (1, k)
  std::map<std::size_t, std::vector<std::string>> rankings;
};

// Builds one reputation model per reference prefix of size 1..k, ranks all
// candidates with each, and correlates the rankings. Errors name the prefix
// size that could not be modelled.
StabilityReport stability_sweep(const Corpus& corpus, std::size_t k,
                                VenueMode mode = VenueMode::kPerProgram);

using ExternalGrade = std::pair<std::string, double>;

// Lines of "program_id<TAB>grade"; blank lines and lines starting with '#'
// are ignored. Larger grades are better.
std::vector<ExternalGrade> parse_grades(std::istream& in);

struct ComparisonRow {
  std::string program_id;
  double r_score = 0.0;
  int rank_total = 0;
  double grade = 0.0;
  double grade_rank = 0.0;  // average rank among the matched programs
};

struct ComparisonTable {
  std::vector<ComparisonRow> rows;  // report order
  std::optional<double> rho;        // nullopt: degenerate
  std::vector<std::string> unmatched_report;
  std::vector<std::string> unmatched_external;
};

// Pairs report rows with external grades on the common programs. Throws
// DataError when the intersection is empty.
ComparisonTable compare_rankings(const ScoreReport& report,
                                 std::span<const ExternalGrade> external);

}  // namespace rscore
