#pragma once

#include <span>
#include <string>
#include <vector>

#include "rscore/counts.hpp"
#include "rscore/matrix.hpp"

namespace rscore {

inline constexpr double kBuildTolerance = 1e-12;
inline constexpr double kSolverTolerance = 1e-10;

// The two off-diagonal blocks of the bipartite program/venue chain.
//   alpha (V x T): alpha(j, w) = N(w, v_j) / N(v_j), venue -> program
//   beta  (T x V): beta(w, j)  = N(w, v_j) / N(w),   program -> venue
struct TransitionStructure {
  Matrix alpha;
  Matrix beta;
  std::vector<std::string> program_index;
  std::vector<VenueId> venue_index;
  std::vector<std::string> notices;
};

struct ReputationModel {
  TransitionStructure structure;
  Matrix p_prime;                      // beta * alpha, T x T
  std::vector<double> gamma;           // stationary vector of p_prime
  std::vector<double> nu;              // venue reputation, max entry 1
  std::vector<double> nu_unnormalized;  // gamma * beta, sums to 1
};

// `reference_programs` must name exactly the reference programs of `counts`,
// in any order; that order becomes program_index. Throws DataError for a
// reference program without publications in the venue set.
TransitionStructure build_transitions(const CountsTable& counts,
                                      std::span<const std::string> reference_programs);

// P' = beta * alpha. Rows sum to 1.
Matrix aggregate(const TransitionStructure& structure);

// gamma * beta before max normalization.
std::vector<double> propagate_to_venues(const TransitionStructure& structure,
                                        std::span<const double> gamma);

// gamma * beta scaled so the largest entry is exactly 1.
std::vector<double> venue_reputation(const TransitionStructure& structure,
                                     std::span<const double> gamma);

ReputationModel build_reputation_model(const CountsTable& counts,
                                       std::span<const std::string> reference_programs);
ReputationModel build_reputation_model(const CountsTable& counts);

// The full (T+V) x (T+V) periodic chain. Debug output only; never solved.
Matrix full_chain(const TransitionStructure& structure);

// Audit document (JSON) with indices, alpha, beta, p_prime, gamma and nu.
std::string dump_matrices(const ReputationModel& model);

}  // namespace rscore
