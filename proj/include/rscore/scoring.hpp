#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rscore/counts.hpp"
#include "rscore/reputation.hpp"

namespace rscore {

struct ScoreRow {
  std::string program_id;
  std::size_t faculty_count = 0;
  double raw_score = 0.0;
  double r_score = 0.0;
  double r_score_per_faculty = 0.0;
  int rank_total = 0;
  int rank_per_faculty = 0;

  bool operator==(const ScoreRow&) const = default;
};

// Rows are ordered by descending r_score, ties by program id.
struct ScoreReport {
  std::vector<ScoreRow> rows;
  std::string model_digest;
  bool all_zero = false;  // every raw score is 0; r_score columns are all 0
  std::vector<std::string> warnings;

  bool operator==(const ScoreReport&) const = default;
};

// Dot product of the venue reputation with the program's venue counts.
// Any program present in `counts` may be scored. Throws DataError otherwise.
double raw_score(const ReputationModel& model, const CountsTable& counts,
                 std::string_view program);

// Scores and ranks `programs`; the normalization maximum is taken over
// exactly this list. Throws DataError when the list is empty.
ScoreReport score_programs(const ReputationModel& model, const CountsTable& counts,
                           std::span<const std::string> programs);
// All candidate programs of `counts`.
ScoreReport score_programs(const ReputationModel& model, const CountsTable& counts);

// Recomputes r_score_per_faculty and rank_per_faculty from raw_score and
// faculty_count, leaving the total-score columns alone.
ScoreReport per_faculty_view(ScoreReport report);

// Competition ranking (1, 2, 2, 4) of `values`, larger is better.
std::vector<int> competition_ranks(std::span<const double> values);

// 64-bit FNV-1a fingerprint of the model's indices and vectors, as hex.
std::string model_digest(const ReputationModel& model);

}  // namespace rscore
