#include "rscore/scoring.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <set>
#include <stdexcept>

#include "rscore/error.hpp"

namespace rscore {
namespace {

std::string squote(std::string_view text) { return "'" + std::string(text) + "'"; }

// Divides by the maximum; all zeros when the maximum is not positive.
std::vector<double> max_normalized(std::span<const double> values, bool* all_zero) {
  const double top = values.empty() ? 0.0 : *std::max_element(values.begin(), values.end());
  *all_zero = !(top > 0.0);
  std::vector<double> out(values.size(), 0.0);
  if (*all_zero) return out;
  for (std::size_t i = 0; i < values.size(); ++i) out[i] = values[i] / top;
  return out;
}

void apply_per_faculty(ScoreReport& report) {
  std::vector<double> per_faculty;
  per_faculty.reserve(report.rows.size());
  for (const ScoreRow& row : report.rows) {
    per_faculty.push_back(row.raw_score / static_cast<double>(row.faculty_count));
  }
  bool all_zero = false;
  const std::vector<double> normalized = max_normalized(per_faculty, &all_zero);
  const std::vector<int> ranks = competition_ranks(per_faculty);
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    report.rows[i].r_score_per_faculty = normalized[i];
    report.rows[i].rank_per_faculty = ranks[i];
  }
}

void fnv1a(std::uint64_t& hash, std::string_view text) {
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  hash ^= 0xff;  // field separator
  hash *= 0x100000001b3ULL;
}

void fnv1a(std::uint64_t& hash, double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  fnv1a(hash, buffer);
}

}  // namespace

std::vector<int> competition_ranks(std::span<const double> values) {
  std::vector<int> ranks(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    int better = 0;
    for (double other : values) better += other > values[i] ? 1 : 0;
    ranks[i] = better + 1;
  }
  return ranks;
}

double raw_score(const ReputationModel& model, const CountsTable& counts,
                 std::string_view program) {
  if (!counts.has_program(program)) throw DataError("unknown program " + squote(program));
  const auto& venues = model.structure.venue_index;
  if (venues != counts.venues) {
    throw std::invalid_argument("counts table and reputation model use different venue sets");
  }
  double score = 0.0;
  for (std::size_t j = 0; j < venues.size(); ++j) {
    const Rational count = counts.program_venue(program, venues[j]);
    if (count != 0) score += model.nu[j] * to_double(count);
  }
  return score;
}

ScoreReport score_programs(const ReputationModel& model, const CountsTable& counts,
                           std::span<const std::string> programs) {
  if (programs.empty()) throw DataError("empty candidate list");
  if (std::set<std::string>(programs.begin(), programs.end()).size() != programs.size()) {
    throw DataError("candidate list contains duplicates");
  }

  ScoreReport report;
  report.model_digest = model_digest(model);
  for (const std::string& program : programs) {
    ScoreRow row;
    row.program_id = program;
    row.raw_score = raw_score(model, counts, program);
    row.faculty_count = counts.faculty_count.at(program);
    report.rows.push_back(std::move(row));
  }
  std::sort(report.rows.begin(), report.rows.end(), [](const ScoreRow& a, const ScoreRow& b) {
    if (a.raw_score != b.raw_score) return a.raw_score > b.raw_score;
    return a.program_id < b.program_id;
  });

  std::vector<double> raw;
  for (const ScoreRow& row : report.rows) raw.push_back(row.raw_score);
  const std::vector<double> normalized = max_normalized(raw, &report.all_zero);
  const std::vector<int> ranks = competition_ranks(raw);
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    report.rows[i].r_score = normalized[i];
    report.rows[i].rank_total = ranks[i];
  }
  if (report.all_zero) {
    report.warnings.push_back(
        "all_zero: no candidate publishes in the reference venue set; every R-Score is 0");
  }
  apply_per_faculty(report);
  return report;
}

ScoreReport score_programs(const ReputationModel& model, const CountsTable& counts) {
  return score_programs(model, counts, counts.candidate_programs);
}

ScoreReport per_faculty_view(ScoreReport report) {
  apply_per_faculty(report);
  return report;
}

std::string model_digest(const ReputationModel& model) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (const std::string& program : model.structure.program_index) fnv1a(hash, program);
  for (const VenueId& venue : model.structure.venue_index) fnv1a(hash, venue.value());
  for (double v : model.gamma) fnv1a(hash, v);
  for (double v : model.nu) fnv1a(hash, v);
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(hash));
  return buffer;
}

}  // namespace rscore
