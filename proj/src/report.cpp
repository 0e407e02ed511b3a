#include "rscore/report.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace rscore {
namespace {

using nlohmann::ordered_json;

std::string fixed(double value, int digits = 6) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*f", digits, value);
  // Avoid "-0.000000" for tiny negative rounding noise.
  if (std::string_view(buffer).find_first_not_of("-0.") == std::string_view::npos &&
      buffer[0] == '-') {
    return buffer + 1;
  }
  return buffer;
}

std::string compact(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.10g", value);
  return buffer;
}

ordered_json rational_json(const Rational& value) {
  return ordered_json{{"value", to_double(value)}, {"exact", format_exact(value)}};
}

std::string rho_text(const std::optional<double>& rho) {
  return rho ? fixed(*rho) : "degenerate";
}

ordered_json rho_json(const std::optional<double>& rho) {
  return rho ? ordered_json(*rho) : ordered_json("degenerate");
}

std::vector<std::size_t> venues_by_reputation(const ReputationModel& model) {
  const auto& venues = model.structure.venue_index;
  std::vector<std::size_t> order(venues.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (model.nu[a] != model.nu[b]) return model.nu[a] > model.nu[b];
    return venues[a] < venues[b];
  });
  return order;
}

ordered_json correlation_json(const RankCorrelation& c) {
  ordered_json row;
  row["comparison"] = comparison_label(c.size_a, c.size_b);
  row["a"] = c.size_a;
  row["b"] = c.size_b;
  row["rho"] = rho_json(c.rho);
  row["agreement_pct"] = c.rho ? ordered_json(format_agreement(*c.rho)) : ordered_json(nullptr);
  return row;
}

void correlation_tsv(std::ostringstream& out, const RankCorrelation& c) {
  out << comparison_label(c.size_a, c.size_b) << '\t' << rho_text(c.rho) << '\t'
      << (c.rho ? format_agreement(*c.rho) : "degenerate") << '\n';
}

}  // namespace

std::string comparison_label(std::size_t a, std::size_t b) {
  return "R_Top(" + std::to_string(a) + ") vs R_Top(" + std::to_string(b) + ")";
}

std::string format_agreement(double rho) { return fixed(100.0 * rho, 2) + "%"; }

std::string format_validate(const Corpus& corpus, std::size_t reference_venues) {
  std::ostringstream out;
  out << "ok\tpublications=" << corpus.publications().size()
      << "\tdropped_outside_window=" << corpus.dropped_outside_window()
      << "\treference_programs=" << corpus.reference_programs().size()
      << "\tcandidate_programs=" << corpus.candidate_programs().size()
      << "\treference_venues=" << reference_venues << '\n';
  return out.str();
}

std::string format_validate_json(const Corpus& corpus, std::size_t reference_venues) {
  ordered_json doc;
  doc["status"] = "ok";
  doc["publications"] = corpus.publications().size();
  doc["dropped_outside_window"] = corpus.dropped_outside_window();
  doc["reference_programs"] = corpus.reference_programs().size();
  doc["candidate_programs"] = corpus.candidate_programs().size();
  doc["reference_venues"] = reference_venues;
  return doc.dump(2) + "\n";
}

std::string format_counts_tsv(const CountsTable& counts) {
  std::ostringstream out;
  out << "# venue_mode\t" << to_string(counts.venue_mode) << '\n';
  out << "# per_faculty_venue\nprogram_id\tfaculty_id\tvenue_id\tvalue\texact\n";
  for (const auto& [key, value] : counts.per_faculty_venue) {
    const auto& [program, author, venue] = key;
    out << program << '\t' << author.value() << '\t' << venue.value() << '\t'
        << format_fixed(value, 6) << '\t' << format_exact(value) << '\n';
  }
  out << "# per_program_venue\nprogram_id\tvenue_id\tvalue\texact\n";
  for (const auto& [key, value] : counts.per_program_venue) {
    out << key.first << '\t' << key.second.value() << '\t' << format_fixed(value, 6) << '\t'
        << format_exact(value) << '\n';
  }
  out << "# per_venue\nvenue_id\tvalue\texact\n";
  for (const auto& [venue, value] : counts.per_venue) {
    out << venue.value() << '\t' << format_fixed(value, 6) << '\t' << format_exact(value)
        << '\n';
  }
  out << "# per_program\nprogram_id\tvalue\texact\n";
  for (const auto& [program, value] : counts.per_program) {
    out << program << '\t' << format_fixed(value, 6) << '\t' << format_exact(value) << '\n';
  }
  return out.str();
}

std::string format_counts_json(const CountsTable& counts) {
  ordered_json doc;
  doc["venue_mode"] = to_string(counts.venue_mode);
  ordered_json venues = ordered_json::array();
  for (const VenueId& venue : counts.venues) venues.push_back(venue.value());
  doc["venues"] = venues;
  doc["reference_programs"] = counts.reference_programs;
  doc["candidate_programs"] = counts.candidate_programs;

  ordered_json faculty = ordered_json::array();
  for (const auto& [key, value] : counts.per_faculty_venue) {
    const auto& [program, author, venue] = key;
    ordered_json row = rational_json(value);
    row["program_id"] = program;
    row["faculty_id"] = author.value();
    row["venue_id"] = venue.value();
    faculty.push_back(std::move(row));
  }
  doc["per_faculty_venue"] = faculty;

  ordered_json program_venue = ordered_json::array();
  for (const auto& [key, value] : counts.per_program_venue) {
    ordered_json row = rational_json(value);
    row["program_id"] = key.first;
    row["venue_id"] = key.second.value();
    program_venue.push_back(std::move(row));
  }
  doc["per_program_venue"] = program_venue;

  ordered_json per_venue = ordered_json::object();
  for (const auto& [venue, value] : counts.per_venue) per_venue[venue.value()] = rational_json(value);
  doc["per_venue"] = per_venue;

  ordered_json per_program = ordered_json::object();
  for (const auto& [program, value] : counts.per_program) per_program[program] = rational_json(value);
  doc["per_program"] = per_program;
  return doc.dump(2) + "\n";
}

std::string format_venues_tsv(const ReputationModel& model) {
  std::ostringstream out;
  out << "venue_id\tnu\n";
  for (std::size_t j : venues_by_reputation(model)) {
    out << model.structure.venue_index[j].value() << '\t' << fixed(model.nu[j]) << '\n';
  }
  return out.str();
}

std::string format_venues_json(const ReputationModel& model) {
  ordered_json rows = ordered_json::array();
  for (std::size_t j : venues_by_reputation(model)) {
    rows.push_back({{"venue_id", model.structure.venue_index[j].value()}, {"nu", model.nu[j]}});
  }
  ordered_json doc;
  doc["venues"] = rows;
  return doc.dump(2) + "\n";
}

std::string format_rank_tsv(const ScoreReport& report) {
  std::ostringstream out;
  out << "program_id\tfaculty_count\traw_score\tr_score\tr_score_per_faculty\trank_total\t"
         "rank_per_faculty\n";
  for (const ScoreRow& row : report.rows) {
    out << row.program_id << '\t' << row.faculty_count << '\t' << fixed(row.raw_score) << '\t'
        << fixed(row.r_score) << '\t' << fixed(row.r_score_per_faculty) << '\t'
        << row.rank_total << '\t' << row.rank_per_faculty << '\n';
  }
  return out.str();
}

std::string format_rank_json(const ScoreReport& report) {
  ordered_json rows = ordered_json::array();
  for (const ScoreRow& row : report.rows) {
    ordered_json entry;
    entry["program_id"] = row.program_id;
    entry["faculty_count"] = row.faculty_count;
    entry["raw_score"] = row.raw_score;
    entry["r_score"] = row.r_score;
    entry["r_score_per_faculty"] = row.r_score_per_faculty;
    entry["rank_total"] = row.rank_total;
    entry["rank_per_faculty"] = row.rank_per_faculty;
    rows.push_back(std::move(entry));
  }
  ordered_json doc;
  doc["model_digest"] = report.model_digest;
  doc["all_zero"] = report.all_zero;
  doc["warnings"] = report.warnings;
  doc["rows"] = rows;
  return doc.dump(2) + "\n";
}

std::string format_stability_tsv(const StabilityReport& report) {
  std::ostringstream out;
  out << "comparison\trho\tagreement_pct\n";
  for (const RankCorrelation& c : report.adjacent) correlation_tsv(out, c);
  correlation_tsv(out, report.first_vs_last);
  return out.str();
}

std::string format_stability_json(const StabilityReport& report) {
  ordered_json doc;
  doc["sizes"] = report.sizes;
  ordered_json adjacent = ordered_json::array();
  for (const RankCorrelation& c : report.adjacent) adjacent.push_back(correlation_json(c));
  doc["adjacent"] = adjacent;
  doc["first_vs_last"] = correlation_json(report.first_vs_last);
  ordered_json rankings = ordered_json::object();
  for (const auto& [size, order] : report.rankings) rankings[std::to_string(size)] = order;
  doc["rankings"] = rankings;
  return doc.dump(2) + "\n";
}

std::string format_compare_tsv(const ComparisonTable& table) {
  std::ostringstream out;
  out << "program_id\tr_score\trank_total\tgrade\tgrade_rank\n";
  for (const ComparisonRow& row : table.rows) {
    out << row.program_id << '\t' << fixed(row.r_score) << '\t' << row.rank_total << '\t'
        << compact(row.grade) << '\t' << compact(row.grade_rank) << '\n';
  }
  out << "# spearman\t" << rho_text(table.rho) << '\n';
  return out.str();
}

std::string format_compare_json(const ComparisonTable& table) {
  ordered_json rows = ordered_json::array();
  for (const ComparisonRow& row : table.rows) {
    ordered_json entry;
    entry["program_id"] = row.program_id;
    entry["r_score"] = row.r_score;
    entry["rank_total"] = row.rank_total;
    entry["grade"] = row.grade;
    entry["grade_rank"] = row.grade_rank;
    rows.push_back(std::move(entry));
  }
  ordered_json doc;
  doc["rows"] = rows;
  doc["spearman"] = rho_json(table.rho);
  doc["unmatched_report"] = table.unmatched_report;
  doc["unmatched_external"] = table.unmatched_external;
  return doc.dump(2) + "\n";
}

}  // namespace rscore
