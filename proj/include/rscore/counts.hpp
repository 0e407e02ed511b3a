#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "rscore/corpus.hpp"
#include "rscore/rational.hpp"

namespace rscore {

// How the venue total N(v) treats papers co-authored across reference programs.
enum class VenueMode {
  kPerProgram,     // each program's share counts: N(v) = sum over programs of N(p, v)
  kDistinctPaper,  // each paper with any reference author counts once
};

std::string_view to_string(VenueMode mode);
// Accepts "per-program" and "distinct". Throws DataError otherwise.
VenueMode parse_venue_mode(std::string_view text);

// Every publication count over the reference venue set. Absent map entries
// are zero. Only venues of the reference venue set ever appear.
struct CountsTable {
  using FacultyKey = std::tuple<std::string, AuthorId, VenueId>;
  using ProgramVenueKey = std::pair<std::string, VenueId>;

  VenueMode venue_mode = VenueMode::kPerProgram;
  std::vector<VenueId> venues;                  // lexicographic
  std::vector<std::string> reference_programs;  // priority order
  std::vector<std::string> candidate_programs;  // file order
  std::map<std::string, std::size_t> faculty_count;

  std::map<FacultyKey, Rational> per_faculty_venue;
  std::map<ProgramVenueKey, Rational> per_program_venue;  // reference and candidate
  std::map<VenueId, Rational> per_venue;                  // reference programs only
  std::map<std::string, Rational> per_program;            // reference and candidate

  Rational faculty_venue(std::string_view program, const AuthorId& author,
                         const VenueId& venue) const;
  Rational program_venue(std::string_view program, const VenueId& venue) const;

  bool has_program(std::string_view program) const;
  bool has_venue(const VenueId& venue) const;
};

// Sum over the author's papers in `venue` of 1/a, where a is the number of
// authors on that paper belonging to `program`'s roster.
Rational weighted_faculty_count(const Corpus& corpus, std::string_view program,
                                const AuthorId& faculty, const VenueId& venue);

// Number of distinct papers in `venue` with at least one author in the roster.
Rational program_venue_count(const Corpus& corpus, std::string_view program,
                             const VenueId& venue);

Rational venue_total(const CountsTable& counts, const VenueId& venue);
Rational program_total(const CountsTable& counts, std::string_view program);

CountsTable build_counts(const Corpus& corpus,
                         VenueMode mode = VenueMode::kPerProgram);

}  // namespace rscore
