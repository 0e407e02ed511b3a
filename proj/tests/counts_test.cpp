#include "rscore/counts.hpp"

#include <gtest/gtest.h>

#include <random>

#include "rscore/error.hpp"
#include "support/oracles.hpp"

namespace rscore {
namespace {

using testing::worked_example_corpus;

const VenueId kV1("v1"), kV2("v2"), kV3("v3");

// Exact comparison of a CountsTable against the brute-force recount.
void expect_matches_oracle(const CountsTable& table, const testing::BruteCounts& oracle) {
  ASSERT_EQ(table.venues.size(), oracle.venues.size());
  for (std::size_t j = 0; j < table.venues.size(); ++j) {
    EXPECT_EQ(table.venues[j].value(), oracle.venues[j]);
  }
  std::size_t nonzero = 0;
  for (const auto& [key, value] : oracle.per_faculty_venue) {
    const auto& [program, author, venue] = key;
    EXPECT_EQ(table.faculty_venue(program, AuthorId(author), VenueId(venue)), value);
    ++nonzero;
  }
  EXPECT_EQ(table.per_faculty_venue.size(), nonzero);
  for (const auto& [key, value] : oracle.per_program_venue) {
    EXPECT_EQ(table.program_venue(key.first, VenueId(key.second)), value);
  }
  EXPECT_EQ(table.per_program_venue.size(), oracle.per_program_venue.size());
  const auto& venue_totals = table.venue_mode == VenueMode::kPerProgram
                                 ? oracle.per_venue_per_program
                                 : oracle.per_venue_distinct;
  for (const auto& [venue, value] : venue_totals) {
    EXPECT_EQ(venue_total(table, VenueId(venue)), value);
  }
  for (const auto& [program, value] : oracle.per_program) {
    EXPECT_EQ(program_total(table, program), value);
  }
}

TEST(WeightedFacultyCount, WorkedExample) {
  const Corpus corpus = worked_example_corpus();
  EXPECT_EQ(weighted_faculty_count(corpus, "P1", AuthorId("f11"), kV1), Rational(5, 2));
  EXPECT_EQ(weighted_faculty_count(corpus, "P1", AuthorId("f31"), kV2), Rational(3, 2));
  EXPECT_EQ(weighted_faculty_count(corpus, "P1", AuthorId("f31"), kV3), Rational(1));
  EXPECT_EQ(weighted_faculty_count(corpus, "P1", AuthorId("f11"), kV2), Rational(0));
}

TEST(WeightedFacultyCount, Errors) {
  const Corpus corpus = worked_example_corpus();
  EXPECT_THROW(weighted_faculty_count(corpus, "P1", AuthorId("f12"), kV1), DataError);
  EXPECT_THROW(weighted_faculty_count(corpus, "P1", AuthorId("f11"), VenueId("v9")), DataError);
  EXPECT_THROW(weighted_faculty_count(corpus, "nope", AuthorId("f11"), kV1), DataError);
}

TEST(ProgramVenueCount, WorkedExample) {
  const Corpus corpus = worked_example_corpus();
  EXPECT_EQ(program_venue_count(corpus, "P1", kV1), Rational(3));
  EXPECT_EQ(program_venue_count(corpus, "P1", kV2), Rational(2));
  EXPECT_EQ(program_venue_count(corpus, "P1", kV3), Rational(1));
  EXPECT_EQ(program_venue_count(corpus, "P2", kV1), Rational(2));
  EXPECT_EQ(program_venue_count(corpus, "P2", kV2), Rational(4));
  EXPECT_EQ(program_venue_count(corpus, "P2", kV3), Rational(2));
  EXPECT_THROW(program_venue_count(corpus, "P3", kV1), DataError);
}

TEST(ProgramVenueCount, ZeroWhenProgramNeverPublishesThere) {
  const Corpus corpus = testing::worked_example_with_candidates();
  EXPECT_EQ(program_venue_count(corpus, "X2", kV1), Rational(0));
}

TEST(BuildCounts, WorkedExamplePerProgram) {
  const CountsTable table = build_counts(worked_example_corpus());
  EXPECT_EQ(table.faculty_venue("P1", AuthorId("f11"), kV1), Rational(5, 2));
  EXPECT_EQ(table.faculty_venue("P1", AuthorId("f31"), kV2), Rational(3, 2));
  EXPECT_EQ(table.program_venue("P1", kV1), Rational(3));
  EXPECT_EQ(table.program_venue("P1", kV2), Rational(2));
  EXPECT_EQ(table.program_venue("P2", kV2), Rational(4));
  EXPECT_EQ(venue_total(table, kV1), Rational(5));
  EXPECT_EQ(venue_total(table, kV2), Rational(6));
  EXPECT_EQ(venue_total(table, kV3), Rational(3));
  EXPECT_EQ(program_total(table, "P1"), Rational(6));
  EXPECT_EQ(program_total(table, "P2"), Rational(8));
  EXPECT_EQ(table.faculty_count.at("P1"), 3u);
}

TEST(BuildCounts, WorkedExampleDistinctPaper) {
  const Corpus corpus = worked_example_corpus();
  const CountsTable table = build_counts(corpus, VenueMode::kDistinctPaper);
  // Enumerated by the brute-force oracle: v2 holds four distinct papers.
  const testing::BruteCounts oracle = testing::brute_force_counts(corpus);
  ASSERT_EQ(oracle.per_venue_distinct.at("v2"), Rational(4));
  EXPECT_EQ(venue_total(table, kV2), Rational(4));
  EXPECT_EQ(venue_total(table, kV1), Rational(5));
  EXPECT_EQ(venue_total(table, kV3), Rational(3));
  EXPECT_EQ(program_total(table, "P1"), Rational(6));
}

TEST(BuildCounts, SingleAuthorSingleProgram) {
  const Corpus corpus = Corpus::create({{"p", VenueId("v"), 2000, {AuthorId("a")}}},
                                       {{"A", Role::kReference, std::nullopt, {AuthorId("a")}}},
                                       {});
  for (VenueMode mode : {VenueMode::kPerProgram, VenueMode::kDistinctPaper}) {
    const CountsTable table = build_counts(corpus, mode);
    EXPECT_EQ(table.faculty_venue("A", AuthorId("a"), VenueId("v")), Rational(1));
    EXPECT_EQ(table.program_venue("A", VenueId("v")), Rational(1));
    EXPECT_EQ(venue_total(table, VenueId("v")), Rational(1));
    EXPECT_EQ(program_total(table, "A"), Rational(1));
  }
}

TEST(BuildCounts, CandidateCountsOnlyInsideReferenceVenues) {
  const CountsTable table = build_counts(testing::worked_example_with_candidates());
  EXPECT_EQ(table.program_venue("X1", kV1), Rational(2));
  EXPECT_EQ(table.program_venue("X1", kV2), Rational(1));
  EXPECT_EQ(table.program_venue("X1", kV3), Rational(3));
  EXPECT_EQ(program_total(table, "X1"), Rational(6));
  EXPECT_FALSE(table.has_venue(VenueId("v9")));
  // Candidate papers never feed reference venue totals.
  EXPECT_EQ(venue_total(table, kV2), Rational(6));
}

TEST(BuildCounts, UnknownLookups) {
  const CountsTable table = build_counts(worked_example_corpus());
  EXPECT_THROW(program_total(table, "P9"), DataError);
  EXPECT_THROW(venue_total(table, VenueId("v9")), DataError);
}

TEST(BuildCounts, MatchesBruteForceOnRandomCorpora) {
  std::mt19937_64 rng(20);
  for (int trial = 0; trial < 20; ++trial) {
    const Corpus corpus = testing::random_corpus(rng, {.papers = 20});
    const testing::BruteCounts oracle = testing::brute_force_counts(corpus);
    expect_matches_oracle(build_counts(corpus, VenueMode::kPerProgram), oracle);
    expect_matches_oracle(build_counts(corpus, VenueMode::kDistinctPaper), oracle);
  }
}

TEST(CountsProperties, ProgramVenueCountsAreIntegers) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const Corpus corpus = testing::random_corpus(rng, {.max_faculty = 6, .max_authors = 6});
    const CountsTable table = build_counts(corpus);
    for (const auto& [key, value] : table.per_program_venue) {
      EXPECT_EQ(boost::multiprecision::denominator(value), 1) << key.first;
      Rational faculty_sum = 0;
      for (const AuthorId& member : corpus.program(key.first).faculty) {
        faculty_sum += table.faculty_venue(key.first, member, key.second);
      }
      EXPECT_EQ(faculty_sum, value);
    }
    for (const std::string& program : table.reference_programs) {
      Rational venue_sum = 0;
      for (const VenueId& venue : table.venues) venue_sum += table.program_venue(program, venue);
      EXPECT_EQ(venue_sum, program_total(table, program));
    }
  }
}

TEST(CountsProperties, PerProgramTotalsDominateDistinctTotals) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 30; ++trial) {
    const Corpus corpus = testing::random_corpus(rng, {.papers = 25});
    const CountsTable per_program = build_counts(corpus, VenueMode::kPerProgram);
    const CountsTable distinct = build_counts(corpus, VenueMode::kDistinctPaper);
    for (const VenueId& venue : per_program.venues) {
      bool shared = false;
      for (const PublicationRecord& paper : corpus.publications()) {
        if (paper.venue != venue) continue;
        int programs = 0;
        for (const ProgramRoster& roster : corpus.reference_programs()) {
          programs += std::any_of(paper.authors.begin(), paper.authors.end(),
                                  [&](const AuthorId& a) { return roster.contains(a); });
        }
        shared = shared || programs > 1;
      }
      const Rational a = venue_total(per_program, venue);
      const Rational b = venue_total(distinct, venue);
      EXPECT_GE(a, b);
      EXPECT_EQ(a == b, !shared) << venue.value();
    }
  }
}

TEST(CountsProperties, InvariantUnderAuthorPermutation) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const Corpus corpus = testing::random_corpus(rng, {});
    std::vector<PublicationRecord> papers = corpus.publications();
    for (PublicationRecord& paper : papers) std::shuffle(paper.authors.begin(), paper.authors.end(), rng);
    const Corpus permuted =
        Corpus::create(papers, corpus.reference_programs(), corpus.candidate_programs());
    const CountsTable a = build_counts(corpus);
    const CountsTable b = build_counts(permuted);
    EXPECT_EQ(a.per_faculty_venue, b.per_faculty_venue);
    EXPECT_EQ(a.per_program_venue, b.per_program_venue);
    EXPECT_EQ(a.per_venue, b.per_venue);
    EXPECT_EQ(a.per_program, b.per_program);
  }
}

TEST(CountsProperties, RemovingAPaperSubtractsItsContribution) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 10; ++trial) {
    const Corpus corpus = testing::random_corpus(rng, {.papers = 40});
    const CountsTable before = build_counts(corpus);
    // Drop one non-seed paper from venue-0, which the seed papers keep in the
    // reference venue set.
    std::vector<PublicationRecord> papers = corpus.publications();
    auto victim = std::find_if(papers.begin(), papers.end(), [&](const PublicationRecord& p) {
      return p.id.starts_with("paper-") && p.venue == VenueId("venue-0");
    });
    if (victim == papers.end()) continue;
    const PublicationRecord removed = *victim;
    papers.erase(victim);
    const Corpus smaller =
        Corpus::create(papers, corpus.reference_programs(), corpus.candidate_programs());
    const CountsTable after = build_counts(smaller);
    for (const auto* list : {&corpus.reference_programs(), &corpus.candidate_programs()}) {
      for (const ProgramRoster& roster : *list) {
        std::size_t members = 0;
        for (const AuthorId& a : removed.authors) members += roster.contains(a);
        const Rational delta = members > 0 ? Rational(1) : Rational(0);
        EXPECT_EQ(before.program_venue(roster.program_id, removed.venue) -
                      after.program_venue(roster.program_id, removed.venue),
                  delta);
        for (const AuthorId& a : removed.authors) {
          if (!roster.contains(a)) continue;
          EXPECT_EQ(before.faculty_venue(roster.program_id, a, removed.venue) -
                        after.faculty_venue(roster.program_id, a, removed.venue),
                    Rational(1, static_cast<long long>(members)));
        }
      }
    }
  }
}

TEST(VenueMode, ParsesNames) {
  EXPECT_EQ(parse_venue_mode("per-program"), VenueMode::kPerProgram);
  EXPECT_EQ(parse_venue_mode("distinct"), VenueMode::kDistinctPaper);
  EXPECT_THROW(parse_venue_mode("both"), DataError);
}

}  // namespace
}  // namespace rscore
