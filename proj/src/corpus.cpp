#include "rscore/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"
#include "rscore/error.hpp"

namespace rscore {
namespace {

using nlohmann::json;

constexpr std::string_view kWhitespace = " \t\r\n\f\v";

std::string line_prefix(std::size_t line) {
  return "publications line " + std::to_string(line) + ": ";
}

std::string squote(std::string_view text) { return "'" + std::string(text) + "'"; }

const json& require_key(const json& object, const char* key, const std::string& where) {
  auto it = object.find(key);
  if (it == object.end()) throw DataError(where + "missing key '" + key + "'");
  return *it;
}

std::string require_string(const json& value, const char* key, const std::string& where) {
  if (!value.is_string()) throw DataError(where + "'" + key + "' must be a string");
  return value.get<std::string>();
}

void reject_unknown_keys(const json& object, std::initializer_list<std::string_view> known,
                         const std::string& where) {
  for (const auto& [key, value] : object.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw DataError(where + "unknown key " + squote(key));
    }
  }
}

PublicationRecord parse_record(const std::string& text, std::size_t line) {
  const std::string where = line_prefix(line);
  json object;
  try {
    object = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DataError(where + "malformed record: " + e.what());
  }
  if (!object.is_object()) throw DataError(where + "malformed record: expected an object");
  reject_unknown_keys(object, {"id", "venue", "year", "authors"}, where);

  const std::string id = trim(require_string(require_key(object, "id", where), "id", where));
  if (id.empty()) throw DataError(where + "empty publication id");
  const std::string record = where + "record " + squote(id) + ": ";

  const std::string venue_text =
      require_string(require_key(object, "venue", where), "venue", record);
  if (trim(venue_text).empty()) throw DataError(record + "empty venue");

  const json& year = require_key(object, "year", where);
  if (!year.is_number_integer()) throw DataError(record + "'year' must be an integer");

  const json& authors = require_key(object, "authors", where);
  if (!authors.is_array()) throw DataError(record + "'authors' must be an array");
  if (authors.empty()) throw DataError(record + "empty author list");

  PublicationRecord out{id, VenueId(venue_text), year.get<int>(), {}};
  for (const json& author : authors) {
    if (!author.is_string()) throw DataError(record + "authors must be strings");
    const std::string name = author.get<std::string>();
    if (trim(name).empty()) throw DataError(record + "empty author id");
    AuthorId author_id(name);
    if (out.has_author(author_id)) {
      throw DataError(record + "duplicate author " + squote(author_id.value()));
    }
    out.authors.push_back(std::move(author_id));
  }
  return out;
}

ProgramRoster parse_roster(const json& object, std::size_t index) {
  const std::string where = "rosters: program #" + std::to_string(index + 1) + ": ";
  if (!object.is_object()) throw DataError(where + "expected an object");
  reject_unknown_keys(object, {"id", "role", "rank_hint", "faculty"}, where);

  ProgramRoster roster;
  roster.program_id = trim(require_string(require_key(object, "id", where), "id", where));
  if (roster.program_id.empty()) throw DataError(where + "empty program id");
  const std::string named = "rosters: program " + squote(roster.program_id) + ": ";

  const std::string role = require_string(require_key(object, "role", where), "role", named);
  if (role == "reference") {
    roster.role = Role::kReference;
  } else if (role == "candidate") {
    roster.role = Role::kCandidate;
  } else {
    throw DataError(named + "role must be 'reference' or 'candidate', got " + squote(role));
  }

  if (auto it = object.find("rank_hint"); it != object.end()) {
    if (!it->is_number_integer() || it->get<long long>() < 1) {
      throw DataError(named + "rank_hint must be an integer >= 1");
    }
    roster.rank_hint = it->get<int>();
  }

  const json& faculty = require_key(object, "faculty", named);
  if (!faculty.is_array()) throw DataError(named + "'faculty' must be an array");
  for (const json& member : faculty) {
    if (!member.is_string()) throw DataError(named + "faculty entries must be strings");
    const std::string name = member.get<std::string>();
    if (trim(name).empty()) throw DataError(named + "empty faculty id");
    roster.faculty.emplace_back(name);
  }
  return roster;
}

void validate_record(const PublicationRecord& record) {
  if (trim(record.id).empty() || trim(record.id) != record.id) {
    throw DataError("publication id " + squote(record.id) + " is empty or untrimmed");
  }
  if (record.authors.empty()) {
    throw DataError("record " + squote(record.id) + ": empty author list");
  }
  std::set<AuthorId> seen;
  for (const AuthorId& author : record.authors) {
    if (!seen.insert(author).second) {
      throw DataError("record " + squote(record.id) + ": duplicate author " +
                      squote(author.value()));
    }
  }
}

void validate_roster(const ProgramRoster& roster, Role expected) {
  if (trim(roster.program_id).empty() || trim(roster.program_id) != roster.program_id) {
    throw DataError("program id " + squote(roster.program_id) + " is empty or untrimmed");
  }
  if (roster.role != expected) {
    throw DataError("program " + squote(roster.program_id) + " is listed as " +
                    std::string(to_string(expected)) + " but has role " +
                    std::string(to_string(roster.role)));
  }
  if (roster.faculty.empty()) {
    throw DataError("empty roster for program " + squote(roster.program_id));
  }
  std::set<AuthorId> seen;
  for (const AuthorId& member : roster.faculty) {
    if (!seen.insert(member).second) {
      throw DataError("program " + squote(roster.program_id) + ": duplicate faculty " +
                      squote(member.value()));
    }
  }
}

}  // namespace

std::string trim(std::string_view text) {
  const auto first = text.find_first_not_of(kWhitespace);
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(kWhitespace);
  return std::string(text.substr(first, last - first + 1));
}

template <class Tag>
Identifier<Tag>::Identifier(std::string_view text) : value_(trim(text)) {
  if (value_.empty()) throw DataError("empty identifier");
}

template class Identifier<AuthorTag>;
template class Identifier<VenueTag>;

bool PublicationRecord::has_author(const AuthorId& author) const {
  return std::find(authors.begin(), authors.end(), author) != authors.end();
}

std::string_view to_string(Role role) {
  return role == Role::kReference ? "reference" : "candidate";
}

bool ProgramRoster::contains(const AuthorId& author) const {
  return std::find(faculty.begin(), faculty.end(), author) != faculty.end();
}

Corpus Corpus::create(std::vector<PublicationRecord> publications,
                      std::vector<ProgramRoster> reference_programs,
                      std::vector<ProgramRoster> candidate_programs,
                      std::optional<YearWindow> window) {
  if (window && window->from > window->to) {
    throw DataError("year window [" + std::to_string(window->from) + ", " +
                    std::to_string(window->to) + "] is empty");
  }

  std::unordered_set<std::string> ids;
  for (const PublicationRecord& record : publications) {
    validate_record(record);
    if (!ids.insert(record.id).second) {
      throw DataError("duplicate publication id " + squote(record.id));
    }
  }

  std::map<std::string, Role> program_roles;
  std::map<AuthorId, std::string> faculty_home;
  auto admit = [&](const ProgramRoster& roster, Role expected) {
    validate_roster(roster, expected);
    auto [it, inserted] = program_roles.emplace(roster.program_id, expected);
    if (!inserted) {
      if (it->second != expected) {
        throw DataError("roster overlap: program " + squote(roster.program_id) +
                        " is listed as both reference and candidate");
      }
      throw DataError("duplicate program id " + squote(roster.program_id));
    }
    for (const AuthorId& member : roster.faculty) {
      auto [home, fresh] = faculty_home.emplace(member, roster.program_id);
      if (!fresh) {
        throw DataError("faculty " + squote(member.value()) + " appears in rosters " +
                        squote(home->second) + " and " + squote(roster.program_id));
      }
    }
  };
  for (const ProgramRoster& roster : reference_programs) admit(roster, Role::kReference);
  for (const ProgramRoster& roster : candidate_programs) admit(roster, Role::kCandidate);

  Corpus corpus;
  corpus.window_ = window;
  if (window) {
    std::erase_if(publications, [&](const PublicationRecord& record) {
      if (window->contains(record.year)) return false;
      ++corpus.dropped_;
      return true;
    });
    if (corpus.dropped_ > 0) {
      corpus.warnings_.push_back("dropped " + std::to_string(corpus.dropped_) +
                                 " publication(s) outside year window [" +
                                 std::to_string(window->from) + ", " +
                                 std::to_string(window->to) + "]");
    }
  }
  corpus.publications_ = std::move(publications);
  corpus.reference_ = std::move(reference_programs);
  corpus.candidates_ = std::move(candidate_programs);
  return corpus;
}

bool Corpus::operator==(const Corpus& other) const {
  return publications_ == other.publications_ && reference_ == other.reference_ &&
         candidates_ == other.candidates_ && window_ == other.window_;
}

const ProgramRoster* Corpus::find_program(std::string_view program_id) const {
  for (const auto* list : {&reference_, &candidates_}) {
    for (const ProgramRoster& roster : *list) {
      if (roster.program_id == program_id) return &roster;
    }
  }
  return nullptr;
}

const ProgramRoster& Corpus::program(std::string_view program_id) const {
  const ProgramRoster* roster = find_program(program_id);
  if (roster == nullptr) throw DataError("unknown program " + squote(program_id));
  return *roster;
}

Corpus Corpus::with_reference_prefix(std::size_t n) const {
  if (n > reference_.size()) {
    throw DataError("need " + std::to_string(n) + " reference programs, found " +
                    std::to_string(reference_.size()));
  }
  Corpus out = *this;
  out.reference_.resize(n);
  return out;
}

Corpus parse_corpus(std::istream& publications, std::istream& rosters,
                    std::optional<YearWindow> window) {
  std::vector<PublicationRecord> records;
  std::unordered_map<std::string, std::size_t> first_line;
  std::string text;
  std::size_t line = 0;
  while (std::getline(publications, text)) {
    ++line;
    if (trim(text).empty()) continue;
    PublicationRecord record = parse_record(text, line);
    auto [it, inserted] = first_line.emplace(record.id, line);
    if (!inserted) {
      throw DataError(line_prefix(line) + "duplicate publication id " + squote(record.id) +
                      " (first seen on line " + std::to_string(it->second) + ")");
    }
    records.push_back(std::move(record));
  }

  json document;
  try {
    document = json::parse(rosters);
  } catch (const json::parse_error& e) {
    throw DataError(std::string("rosters: malformed document: ") + e.what());
  }
  if (!document.is_object()) throw DataError("rosters: expected an object");
  reject_unknown_keys(document, {"programs"}, "rosters: ");
  const json& programs = require_key(document, "programs", "rosters: ");
  if (!programs.is_array()) throw DataError("rosters: 'programs' must be an array");

  std::vector<ProgramRoster> reference;
  std::vector<ProgramRoster> candidates;
  for (std::size_t i = 0; i < programs.size(); ++i) {
    ProgramRoster roster = parse_roster(programs[i], i);
    (roster.role == Role::kReference ? reference : candidates).push_back(std::move(roster));
  }
  // Hinted reference programs first by hint, then unhinted in file order.
  std::stable_sort(reference.begin(), reference.end(),
                   [](const ProgramRoster& a, const ProgramRoster& b) {
                     if (a.rank_hint.has_value() != b.rank_hint.has_value()) {
                       return a.rank_hint.has_value();
                     }
                     return a.rank_hint.value_or(0) < b.rank_hint.value_or(0);
                   });

  return Corpus::create(std::move(records), std::move(reference), std::move(candidates),
                        window);
}

Corpus load_corpus(const std::filesystem::path& publications_path,
                   const std::filesystem::path& rosters_path,
                   std::optional<YearWindow> window) {
  std::ifstream publications(publications_path);
  if (!publications) {
    throw DataError("cannot open publications file " + squote(publications_path.string()));
  }
  std::ifstream rosters(rosters_path);
  if (!rosters) throw DataError("cannot open rosters file " + squote(rosters_path.string()));
  return parse_corpus(publications, rosters, window);
}

std::string serialize_publications(const Corpus& corpus) {
  std::ostringstream out;
  for (const PublicationRecord& record : corpus.publications()) {
    nlohmann::ordered_json line;
    line["id"] = record.id;
    line["venue"] = record.venue.value();
    line["year"] = record.year;
    line["authors"] = nlohmann::ordered_json::array();
    for (const AuthorId& author : record.authors) line["authors"].push_back(author.value());
    out << line.dump() << '\n';
  }
  return out.str();
}

std::string serialize_rosters(const Corpus& corpus) {
  nlohmann::ordered_json programs = nlohmann::ordered_json::array();
  for (const auto* list : {&corpus.reference_programs(), &corpus.candidate_programs()}) {
    for (const ProgramRoster& roster : *list) {
      nlohmann::ordered_json entry;
      entry["id"] = roster.program_id;
      entry["role"] = to_string(roster.role);
      if (roster.rank_hint) entry["rank_hint"] = *roster.rank_hint;
      entry["faculty"] = nlohmann::ordered_json::array();
      for (const AuthorId& member : roster.faculty) entry["faculty"].push_back(member.value());
      programs.push_back(std::move(entry));
    }
  }
  nlohmann::ordered_json document;
  document["programs"] = std::move(programs);
  return document.dump(2) + "\n";
}

std::vector<VenueId> reference_venue_set(const Corpus& corpus) {
  std::set<AuthorId> reference_faculty;
  for (const ProgramRoster& roster : corpus.reference_programs()) {
    reference_faculty.insert(roster.faculty.begin(), roster.faculty.end());
  }
  std::set<VenueId> venues;
  for (const PublicationRecord& record : corpus.publications()) {
    for (const AuthorId& author : record.authors) {
      if (reference_faculty.contains(author)) {
        venues.insert(record.venue);
        break;
      }
    }
  }
  if (venues.empty()) {
    throw DataError("unusable corpus: no publication has a reference-program author, so the "
                    "reference venue set is empty");
  }
  return {venues.begin(), venues.end()};
}

}  // namespace rscore
