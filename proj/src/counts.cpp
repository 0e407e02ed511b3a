#include "rscore/counts.hpp"

#include <algorithm>
#include <set>

#include "rscore/error.hpp"

namespace rscore {
namespace {

std::string squote(std::string_view text) { return "'" + std::string(text) + "'"; }

void require_reference_venue(const Corpus& corpus, const VenueId& venue) {
  const std::vector<VenueId> venues = reference_venue_set(corpus);
  if (!std::binary_search(venues.begin(), venues.end(), venue)) {
    throw DataError("venue " + squote(venue.value()) + " is not in the reference venue set");
  }
}

std::size_t roster_authors(const ProgramRoster& roster, const PublicationRecord& record) {
  return static_cast<std::size_t>(
      std::count_if(record.authors.begin(), record.authors.end(),
                    [&](const AuthorId& author) { return roster.contains(author); }));
}

}  // namespace

std::string_view to_string(VenueMode mode) {
  return mode == VenueMode::kPerProgram ? "per-program" : "distinct";
}

VenueMode parse_venue_mode(std::string_view text) {
  if (text == "per-program") return VenueMode::kPerProgram;
  if (text == "distinct") return VenueMode::kDistinctPaper;
  throw DataError("unknown venue mode " + squote(text) + " (expected per-program or distinct)");
}

Rational CountsTable::faculty_venue(std::string_view program, const AuthorId& author,
                                    const VenueId& venue) const {
  auto it = per_faculty_venue.find(FacultyKey{std::string(program), author, venue});
  return it == per_faculty_venue.end() ? Rational(0) : it->second;
}

Rational CountsTable::program_venue(std::string_view program, const VenueId& venue) const {
  auto it = per_program_venue.find(ProgramVenueKey{std::string(program), venue});
  return it == per_program_venue.end() ? Rational(0) : it->second;
}

bool CountsTable::has_program(std::string_view program) const {
  return faculty_count.contains(std::string(program));
}

bool CountsTable::has_venue(const VenueId& venue) const {
  return std::binary_search(venues.begin(), venues.end(), venue);
}

Rational weighted_faculty_count(const Corpus& corpus, std::string_view program,
                                const AuthorId& faculty, const VenueId& venue) {
  const ProgramRoster& roster = corpus.program(program);
  if (!roster.contains(faculty)) {
    throw DataError("faculty " + squote(faculty.value()) + " is not on the roster of " +
                    squote(program));
  }
  require_reference_venue(corpus, venue);

  Rational total = 0;
  for (const PublicationRecord& record : corpus.publications()) {
    if (record.venue != venue || !record.has_author(faculty)) continue;
    total += Rational(1, static_cast<long long>(roster_authors(roster, record)));
  }
  return total;
}

Rational program_venue_count(const Corpus& corpus, std::string_view program,
                             const VenueId& venue) {
  const ProgramRoster& roster = corpus.program(program);
  require_reference_venue(corpus, venue);

  Rational total = 0;
  for (const AuthorId& member : roster.faculty) {
    total += weighted_faculty_count(corpus, program, member, venue);
  }
  return total;
}

Rational venue_total(const CountsTable& counts, const VenueId& venue) {
  auto it = counts.per_venue.find(venue);
  if (it == counts.per_venue.end()) {
    throw DataError("venue " + squote(venue.value()) + " is not in the reference venue set");
  }
  return it->second;
}

Rational program_total(const CountsTable& counts, std::string_view program) {
  if (!counts.has_program(program)) throw DataError("unknown program " + squote(program));
  auto it = counts.per_program.find(std::string(program));
  return it == counts.per_program.end() ? Rational(0) : it->second;
}

CountsTable build_counts(const Corpus& corpus, VenueMode mode) {
  CountsTable table;
  table.venue_mode = mode;
  table.venues = reference_venue_set(corpus);

  // Each author belongs to at most one roster (enforced by Corpus).
  std::map<AuthorId, const ProgramRoster*> home;
  for (const auto* list : {&corpus.reference_programs(), &corpus.candidate_programs()}) {
    for (const ProgramRoster& roster : *list) {
      (roster.role == Role::kReference ? table.reference_programs : table.candidate_programs)
          .push_back(roster.program_id);
      table.faculty_count[roster.program_id] = roster.faculty.size();
      table.per_program[roster.program_id] = 0;
      for (const AuthorId& member : roster.faculty) home[member] = &roster;
    }
  }
  for (const VenueId& venue : table.venues) table.per_venue[venue] = 0;

  for (const PublicationRecord& record : corpus.publications()) {
    if (!table.has_venue(record.venue)) continue;

    std::map<const ProgramRoster*, std::vector<const AuthorId*>> by_program;
    for (const AuthorId& author : record.authors) {
      if (auto it = home.find(author); it != home.end()) {
        by_program[it->second].push_back(&author);
      }
    }

    bool has_reference_author = false;
    for (const auto& [roster, members] : by_program) {
      const Rational share(1, static_cast<long long>(members.size()));
      for (const AuthorId* member : members) {
        table.per_faculty_venue[{roster->program_id, *member, record.venue}] += share;
      }
      table.per_program_venue[{roster->program_id, record.venue}] += 1;
      table.per_program[roster->program_id] += 1;
      if (roster->role == Role::kReference) {
        has_reference_author = true;
        if (mode == VenueMode::kPerProgram) table.per_venue[record.venue] += 1;
      }
    }
    if (mode == VenueMode::kDistinctPaper && has_reference_author) {
      table.per_venue[record.venue] += 1;
    }
  }
  return table;
}

}  // namespace rscore
