#include "rscore/reputation.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "json.hpp"
#include "rscore/error.hpp"
#include "rscore/markov.hpp"

namespace rscore {
namespace {

std::string squote(std::string_view text) { return "'" + std::string(text) + "'"; }

void check_reference_set(const CountsTable& counts,
                         std::span<const std::string> reference_programs) {
  const std::set<std::string> given(reference_programs.begin(), reference_programs.end());
  const std::set<std::string> known(counts.reference_programs.begin(),
                                    counts.reference_programs.end());
  if (given.size() != reference_programs.size()) {
    throw DataError("reference program list contains duplicates");
  }
  for (const std::string& program : given) {
    if (!known.contains(program)) {
      throw DataError(squote(program) + " is not a reference program of this table");
    }
  }
  if (given.size() != known.size()) {
    throw DataError("reference program list must cover all " + std::to_string(known.size()) +
                    " reference programs, got " + std::to_string(given.size()));
  }
}

void assert_unit_rows(const Matrix& m, double tolerance, const char* what) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (std::abs(m.row_sum(r) - 1.0) > tolerance) {
      throw std::logic_error(std::string(what) + " row " + std::to_string(r) + " sums to " +
                             std::to_string(m.row_sum(r)));
    }
  }
}

nlohmann::ordered_json matrix_json(const Matrix& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    rows.push_back(std::vector<double>(m.row(r).begin(), m.row(r).end()));
  }
  return rows;
}

}  // namespace

TransitionStructure build_transitions(const CountsTable& counts,
                                      std::span<const std::string> reference_programs) {
  check_reference_set(counts, reference_programs);
  const std::size_t programs = reference_programs.size();
  const std::size_t venues = counts.venues.size();

  TransitionStructure out;
  out.program_index.assign(reference_programs.begin(), reference_programs.end());
  out.venue_index = counts.venues;
  out.alpha = Matrix(venues, programs);
  out.beta = Matrix(programs, venues);

  for (std::size_t w = 0; w < programs; ++w) {
    const Rational total = program_total(counts, out.program_index[w]);
    if (total == 0) {
      throw DataError("reference program " + squote(out.program_index[w]) +
                      " has no publications in the reference venue set");
    }
    for (std::size_t j = 0; j < venues; ++j) {
      out.beta(w, j) = to_double(counts.program_venue(out.program_index[w], counts.venues[j]) /
                                 total);
    }
  }

  bool renormalized = false;
  for (std::size_t j = 0; j < venues; ++j) {
    const VenueId& venue = counts.venues[j];
    Rational shares = 0;
    for (const std::string& program : out.program_index) {
      shares += counts.program_venue(program, venue);
    }
    Rational denominator = venue_total(counts, venue);
    if (denominator == 0 || shares == 0) {
      throw DataError("venue " + squote(venue.value()) + " has no reference publications");
    }
    // Distinct-paper totals undercount shared papers; keep each row stochastic.
    if (denominator != shares) {
      denominator = shares;
      renormalized = true;
    }
    for (std::size_t w = 0; w < programs; ++w) {
      out.alpha(j, w) = to_double(counts.program_venue(out.program_index[w], venue) /
                                  denominator);
    }
  }
  if (renormalized) {
    out.notices.push_back(
        "venue totals count shared papers once; venue-to-program shares were renormalized "
        "to sum to 1");
  }

  assert_unit_rows(out.beta, kBuildTolerance, "beta");
  assert_unit_rows(out.alpha, kBuildTolerance, "alpha");
  return out;
}

Matrix aggregate(const TransitionStructure& structure) {
  Matrix p_prime = multiply(structure.beta, structure.alpha);
  assert_unit_rows(p_prime, kSolverTolerance, "P'");
  return p_prime;
}

std::vector<double> propagate_to_venues(const TransitionStructure& structure,
                                        std::span<const double> gamma) {
  return left_multiply(gamma, structure.beta);
}

std::vector<double> venue_reputation(const TransitionStructure& structure,
                                     std::span<const double> gamma) {
  std::vector<double> nu = propagate_to_venues(structure, gamma);
  const double top = nu.empty() ? 0.0 : *std::max_element(nu.begin(), nu.end());
  if (!(top > 0.0)) throw DataError("venue reputation vector is identically zero");
  for (double& v : nu) v /= top;
  return nu;
}

ReputationModel build_reputation_model(const CountsTable& counts,
                                       std::span<const std::string> reference_programs) {
  ReputationModel model;
  model.structure = build_transitions(counts, reference_programs);
  model.p_prime = aggregate(model.structure);

  const auto components = strongly_connected_components(model.p_prime);
  if (components.size() > 1) {
    std::string listing;
    for (const auto& component : components) {
      listing += listing.empty() ? "{" : " {";
      for (std::size_t i = 0; i < component.size(); ++i) {
        listing += (i == 0 ? "" : ",") + model.structure.program_index[component[i]];
      }
      listing += "}";
    }
    throw DataError("program chain is reducible; strongly connected components: " + listing);
  }
  model.gamma = stationary_gth(model.p_prime);

  const std::vector<double> image = left_multiply(model.gamma, model.p_prime);
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (std::abs(image[i] - model.gamma[i]) > kSolverTolerance) {
      throw std::logic_error("stationary vector residual exceeds tolerance at state " +
                             std::to_string(i));
    }
  }

  model.nu_unnormalized = propagate_to_venues(model.structure, model.gamma);
  model.nu = venue_reputation(model.structure, model.gamma);
  return model;
}

ReputationModel build_reputation_model(const CountsTable& counts) {
  return build_reputation_model(counts, counts.reference_programs);
}

Matrix full_chain(const TransitionStructure& structure) {
  const std::size_t programs = structure.beta.rows();
  const std::size_t venues = structure.beta.cols();
  Matrix p(programs + venues, programs + venues);
  for (std::size_t w = 0; w < programs; ++w) {
    for (std::size_t j = 0; j < venues; ++j) {
      p(w, programs + j) = structure.beta(w, j);
      p(programs + j, w) = structure.alpha(j, w);
    }
  }
  return p;
}

std::string dump_matrices(const ReputationModel& model) {
  nlohmann::ordered_json doc;
  doc["programs"] = model.structure.program_index;
  nlohmann::ordered_json venues = nlohmann::ordered_json::array();
  for (const VenueId& venue : model.structure.venue_index) venues.push_back(venue.value());
  doc["venues"] = venues;
  doc["alpha"] = matrix_json(model.structure.alpha);
  doc["beta"] = matrix_json(model.structure.beta);
  doc["p_prime"] = matrix_json(model.p_prime);
  doc["gamma"] = model.gamma;
  doc["nu"] = model.nu;
  doc["notices"] = model.structure.notices;
  return doc.dump(2) + "\n";
}

}  // namespace rscore
