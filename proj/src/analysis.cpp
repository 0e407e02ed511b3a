#include "rscore/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <istream>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "rscore/error.hpp"
#include "rscore/reputation.hpp"

namespace rscore {
namespace {

std::string squote(std::string_view text) { return "'" + std::string(text) + "'"; }

std::optional<double> pearson(std::span<const double> x, std::span<const double> y) {
  const double n = static_cast<double>(x.size());
  const double mean_x = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double mean_y = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mean_x;
    const double dy = y[i] - mean_y;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx <= 0.0 || syy <= 0.0) return std::nullopt;
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

struct ModelledRanking {
  std::vector<std::string> order;
  std::vector<ScoredProgram> scored;
};

ModelledRanking rank_with_prefix(const Corpus& corpus, std::size_t size, VenueMode mode) {
  try {
    const Corpus prefix = corpus.with_reference_prefix(size);
    const CountsTable counts = build_counts(prefix, mode);
    const ReputationModel model = build_reputation_model(counts);
    const ScoreReport report = score_programs(model, counts);
    ModelledRanking out;
    for (const ScoreRow& row : report.rows) out.order.push_back(row.program_id);
    out.scored = scored_programs(report);
    return out;
  } catch (const DataError& e) {
    throw DataError("reference prefix of size " + std::to_string(size) + ": " + e.what());
  }
}

RankCorrelation correlate(const std::map<std::size_t, ModelledRanking>& rankings,
                          std::size_t a, std::size_t b) {
  RankCorrelation out{a, b, std::nullopt};
  if (a == b) {
    out.rho = 1.0;
  } else {
    out.rho = spearman_scored(rankings.at(a).scored, rankings.at(b).scored);
  }
  return out;
}

}  // namespace

double spearman(std::span<const std::string> ranking_a,
                std::span<const std::string> ranking_b) {
  const std::size_t n = ranking_a.size();
  if (n < 2) throw std::invalid_argument("spearman needs at least 2 items");
  if (ranking_b.size() != n) throw std::invalid_argument("spearman: rankings differ in size");

  std::map<std::string_view, std::size_t> position_a;
  for (std::size_t i = 0; i < n; ++i) {
    if (!position_a.emplace(ranking_a[i], i).second) {
      throw std::invalid_argument("spearman: duplicate item " + squote(ranking_a[i]));
    }
  }
  std::set<std::string_view> seen_b;
  double squared = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    auto it = position_a.find(ranking_b[i]);
    if (it == position_a.end() || !seen_b.insert(ranking_b[i]).second) {
      throw std::invalid_argument("spearman: rankings are not permutations of the same set");
    }
    const double d = static_cast<double>(it->second) - static_cast<double>(i);
    squared += d * d;
  }
  const double size = static_cast<double>(n);
  return 1.0 - 6.0 * squared / (size * (size * size - 1.0));
}

std::vector<double> average_ranks(std::span<const double> scores) {
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  std::vector<double> ranks(scores.size());
  for (std::size_t start = 0; start < order.size();) {
    std::size_t end = start;
    while (end < order.size() && scores[order[end]] == scores[order[start]]) ++end;
    // positions start..end-1 are 1-based ranks start+1..end
    const double shared = (static_cast<double>(start + 1) + static_cast<double>(end)) / 2.0;
    for (std::size_t i = start; i < end; ++i) ranks[order[i]] = shared;
    start = end;
  }
  return ranks;
}

std::optional<double> spearman_scored(std::span<const ScoredProgram> a,
                                      std::span<const ScoredProgram> b) {
  if (a.size() != b.size()) throw std::invalid_argument("spearman: rankings differ in size");
  std::map<std::string, std::pair<double, double>> joined;
  for (const ScoredProgram& entry : a) {
    if (!joined.emplace(entry.program_id, std::pair{entry.score, 0.0}).second) {
      throw std::invalid_argument("spearman: duplicate item " + squote(entry.program_id));
    }
  }
  std::set<std::string> seen_b;
  for (const ScoredProgram& entry : b) {
    auto it = joined.find(entry.program_id);
    if (it == joined.end() || !seen_b.insert(entry.program_id).second) {
      throw std::invalid_argument("spearman: rankings are not permutations of the same set");
    }
    it->second.second = entry.score;
  }
  if (joined.size() < 2) return std::nullopt;

  std::vector<double> scores_a, scores_b;
  for (const auto& [id, scores] : joined) {
    scores_a.push_back(scores.first);
    scores_b.push_back(scores.second);
  }
  return pearson(average_ranks(scores_a), average_ranks(scores_b));
}

std::vector<ScoredProgram> scored_programs(const ScoreReport& report) {
  std::vector<ScoredProgram> out;
  out.reserve(report.rows.size());
  for (const ScoreRow& row : report.rows) out.push_back({row.program_id, row.raw_score});
  return out;
}

StabilityReport stability_sweep(const Corpus& corpus, std::size_t k, VenueMode mode) {
  if (k < 1) throw DataError("stability sweep needs k >= 1");
  const std::size_t available = corpus.reference_programs().size();
  if (available < k) {
    throw DataError("need " + std::to_string(k) + " reference programs, found " +
                    std::to_string(available));
  }
  if (corpus.candidate_programs().empty()) {
    throw DataError("stability sweep needs at least one candidate program");
  }

  // Each prefix model is independent; results are collected in size order.
  std::vector<std::future<ModelledRanking>> pending;
  for (std::size_t size = 1; size <= k; ++size) {
    pending.push_back(std::async(std::launch::async, rank_with_prefix, std::cref(corpus),
                                 size, mode));
  }
  std::map<std::size_t, ModelledRanking> rankings;
  for (std::size_t size = 1; size <= k; ++size) rankings[size] = pending[size - 1].get();

  StabilityReport report;
  for (std::size_t size = 1; size <= k; ++size) {
    report.sizes.push_back(size);
    report.rankings[size] = rankings[size].order;
  }
  for (std::size_t size = 1; size < k; ++size) {
    report.adjacent.push_back(correlate(rankings, size, size + 1));
  }
  report.first_vs_last = correlate(rankings, 1, k);
  return report;
}

std::vector<ExternalGrade> parse_grades(std::istream& in) {
  std::vector<ExternalGrade> grades;
  std::set<std::string> seen;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    const std::string where = "grades line " + std::to_string(line) + ": ";
    if (trim(text).empty() || trim(text).front() == '#') continue;
    const auto tab = text.find('\t');
    if (tab == std::string::npos) throw DataError(where + "expected program_id<TAB>grade");
    const std::string program = trim(text.substr(0, tab));
    const std::string grade_text = trim(text.substr(tab + 1));
    if (program.empty()) throw DataError(where + "empty program id");
    double grade = 0.0;
    std::size_t consumed = 0;
    try {
      grade = std::stod(grade_text, &consumed);
    } catch (const std::exception&) {
      consumed = 0;
    }
    if (grade_text.empty() || consumed != grade_text.size() || !std::isfinite(grade)) {
      throw DataError(where + "grade " + squote(grade_text) + " is not a number");
    }
    if (!seen.insert(program).second) {
      throw DataError(where + "duplicate program " + squote(program));
    }
    grades.emplace_back(program, grade);
  }
  return grades;
}

ComparisonTable compare_rankings(const ScoreReport& report,
                                 std::span<const ExternalGrade> external) {
  std::map<std::string, double> grade_of(external.begin(), external.end());
  ComparisonTable table;
  std::set<std::string> matched;
  for (const ScoreRow& row : report.rows) {
    auto it = grade_of.find(row.program_id);
    if (it == grade_of.end()) {
      table.unmatched_report.push_back(row.program_id);
      continue;
    }
    matched.insert(row.program_id);
    table.rows.push_back({row.program_id, row.r_score, row.rank_total, it->second, 0.0});
  }
  for (const auto& [program, grade] : external) {
    if (!matched.contains(program)) table.unmatched_external.push_back(program);
  }
  if (table.rows.empty()) {
    throw DataError("no program appears in both the score report and the external grades");
  }

  std::vector<double> grades;
  std::vector<ScoredProgram> by_score, by_grade;
  for (const ComparisonRow& row : table.rows) {
    grades.push_back(row.grade);
    by_score.push_back({row.program_id, row.r_score});
    by_grade.push_back({row.program_id, row.grade});
  }
  const std::vector<double> grade_ranks = average_ranks(grades);
  for (std::size_t i = 0; i < table.rows.size(); ++i) table.rows[i].grade_rank = grade_ranks[i];
  table.rho = spearman_scored(by_score, by_grade);
  return table;
}

}  // namespace rscore
