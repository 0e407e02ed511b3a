#pragma once

#include <compare>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rscore {

std::string trim(std::string_view text);

// Opaque identifier compared by exact bytes after trimming surrounding
// whitespace. Construction throws DataError when the trimmed text is empty.
template <class Tag>
class Identifier {
 public:
  explicit Identifier(std::string_view text);

  const std::string& value() const { return value_; }

  auto operator<=>(const Identifier&) const = default;
  bool operator==(const Identifier&) const = default;

 private:
  std::string value_;
};

using AuthorId = Identifier<struct AuthorTag>;
using VenueId = Identifier<struct VenueTag>;

extern template class Identifier<AuthorTag>;
extern template class Identifier<VenueTag>;

struct PublicationRecord {
  std::string id;
  VenueId venue;
  int year = 0;
  std::vector<AuthorId> authors;

  bool has_author(const AuthorId& author) const;
  bool operator==(const PublicationRecord&) const = default;
};

enum class Role { kReference, kCandidate };

std::string_view to_string(Role role);

struct ProgramRoster {
  std::string program_id;
  Role role = Role::kReference;
  std::optional<int> rank_hint;
  std::vector<AuthorId> faculty;  // file order, no duplicates

  bool contains(const AuthorId& author) const;
  bool operator==(const ProgramRoster&) const = default;
};

// Closed interval; both endpoints inclusive.
struct YearWindow {
  int from = 0;
  int to = 0;

  bool contains(int year) const { return from <= year && year <= to; }
  bool operator==(const YearWindow&) const = default;
};

// Validated, immutable bundle of publications and program rosters.
// Reference programs are kept in priority order (rank_hint, then file order);
// that order defines the prefixes used by stability sweeps.
class Corpus {
 public:
  // Validates every record and roster invariant and drops publications
  // outside `window`. Throws DataError on the first violation.
  static Corpus create(std::vector<PublicationRecord> publications,
                       std::vector<ProgramRoster> reference_programs,
                       std::vector<ProgramRoster> candidate_programs,
                       std::optional<YearWindow> window = std::nullopt);

  const std::vector<PublicationRecord>& publications() const { return publications_; }
  const std::vector<ProgramRoster>& reference_programs() const { return reference_; }
  const std::vector<ProgramRoster>& candidate_programs() const { return candidates_; }
  const std::optional<YearWindow>& year_window() const { return window_; }

  std::size_t dropped_outside_window() const { return dropped_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  // nullptr when no roster carries this id.
  const ProgramRoster* find_program(std::string_view program_id) const;
  // Throws DataError for an unknown id.
  const ProgramRoster& program(std::string_view program_id) const;

  // Same publications and candidates, only the first `n` reference programs.
  Corpus with_reference_prefix(std::size_t n) const;

  // Content equality: publications, rosters and window. Warnings and the
  // dropped count describe how the corpus was built and are not compared.
  bool operator==(const Corpus& other) const;

 private:
  Corpus() = default;

  std::vector<PublicationRecord> publications_;
  std::vector<ProgramRoster> reference_;
  std::vector<ProgramRoster> candidates_;
  std::optional<YearWindow> window_;
  std::size_t dropped_ = 0;
  std::vector<std::string> warnings_;
};

// Publications: one JSON object per line with exactly `id`, `venue`, `year`,
// `authors`. Blank lines are skipped. Rosters: a JSON document
// {"programs": [{"id", "role", "rank_hint"?, "faculty"}]}.
// Errors name the offending line (publications) or program (rosters).
Corpus parse_corpus(std::istream& publications, std::istream& rosters,
                    std::optional<YearWindow> window = std::nullopt);

Corpus load_corpus(const std::filesystem::path& publications_path,
                   const std::filesystem::path& rosters_path,
                   std::optional<YearWindow> window = std::nullopt);

// Inverse of parse_corpus for the corpus content. Reference programs are
// written in priority order with their original rank_hint, so reparsing
// (with the same year window) reproduces an equal Corpus.
std::string serialize_publications(const Corpus& corpus);
std::string serialize_rosters(const Corpus& corpus);

// Venues with at least one publication co-authored by a reference-program
// faculty member, sorted lexicographically. Throws DataError when empty.
std::vector<VenueId> reference_venue_set(const Corpus& corpus);

}  // namespace rscore
