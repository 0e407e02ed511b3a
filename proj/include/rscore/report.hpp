#pragma once

#include <string>

#include "rscore/analysis.hpp"
#include "rscore/corpus.hpp"
#include "rscore/counts.hpp"
#include "rscore/reputation.hpp"
#include "rscore/scoring.hpp"

// Text renderings shared by the CLI and the Python bindings. TSV output never
// carries timestamps or digests, so identical inputs give identical bytes.
namespace rscore {

std::string format_validate(const Corpus& corpus, std::size_t reference_venues);
std::string format_validate_json(const Corpus& corpus, std::size_t reference_venues);

std::string format_counts_tsv(const CountsTable& counts);
std::string format_counts_json(const CountsTable& counts);

// Sorted by descending nu, then venue id.
std::string format_venues_tsv(const ReputationModel& model);
std::string format_venues_json(const ReputationModel& model);

std::string format_rank_tsv(const ScoreReport& report);
std::string format_rank_json(const ScoreReport& report);

std::string format_stability_tsv(const StabilityReport& report);
std::string format_stability_json(const StabilityReport& report);

std::string format_compare_tsv(const ComparisonTable& table);
std::string format_compare_json(const ComparisonTable& table);

// "R_Top(i) vs R_Top(j)"
std::string comparison_label(std::size_t a, std::size_t b);
// rho as 100 * rho with two decimals and a percent sign, e.g. "97.46%".
std::string format_agreement(double rho);

}  // namespace rscore
