#include "rscore/scoring.hpp"

#include <gtest/gtest.h>

#include <random>

#include "rscore/error.hpp"
#include "support/oracles.hpp"

namespace rscore {
namespace {

using testing::worked_example_with_candidates;

struct Scored {
  CountsTable counts;
  ReputationModel model;
  ScoreReport report;
};

Scored score(const Corpus& corpus) {
  Scored s{build_counts(corpus), {}, {}};
  s.model = build_reputation_model(s.counts);
  s.report = score_programs(s.model, s.counts);
  return s;
}

Corpus with_extra(const Corpus& base, std::vector<PublicationRecord> extra,
                  std::vector<ProgramRoster> candidates = {}) {
  std::vector<PublicationRecord> papers = base.publications();
  papers.insert(papers.end(), extra.begin(), extra.end());
  std::vector<ProgramRoster> rosters = base.candidate_programs();
  rosters.insert(rosters.end(), candidates.begin(), candidates.end());
  return Corpus::create(std::move(papers), base.reference_programs(), std::move(rosters));
}

TEST(RawScore, WorkedExampleCandidate) {
  const Scored s = score(worked_example_with_candidates());
  // 2 * 5/6 + 1 * 1 + 3 * 1/2
  EXPECT_NEAR(raw_score(s.model, s.counts, "X1"), 25.0 / 6, 1e-14);
  EXPECT_NEAR(raw_score(s.model, s.counts, "X2"), 2.0, 1e-14);
  EXPECT_THROW(raw_score(s.model, s.counts, "nobody"), DataError);
}

TEST(ScorePrograms, WorkedExampleTable) {
  const ScoreReport report = score(worked_example_with_candidates()).report;
  ASSERT_EQ(report.rows.size(), 2u);
  EXPECT_EQ(report.rows[0].program_id, "X1");
  EXPECT_EQ(report.rows[0].r_score, 1.0);
  EXPECT_EQ(report.rows[0].rank_total, 1);
  EXPECT_EQ(report.rows[1].program_id, "X2");
  EXPECT_NEAR(report.rows[1].r_score, 0.48, 1e-14);
  EXPECT_EQ(report.rows[1].rank_total, 2);
  EXPECT_FALSE(report.all_zero);
  EXPECT_TRUE(report.warnings.empty());
  EXPECT_EQ(report.model_digest.size(), 16u);
}

TEST(ScorePrograms, WorkedExamplePerFaculty) {
  const ScoreReport report = score(worked_example_with_candidates()).report;
  // X1: 25/12 per member, X2: 2 per member.
  EXPECT_EQ(report.rows[0].faculty_count, 2u);
  EXPECT_EQ(report.rows[0].r_score_per_faculty, 1.0);
  EXPECT_NEAR(report.rows[1].r_score_per_faculty, 2.0 / (25.0 / 12), 1e-14);
  EXPECT_EQ(report.rows[1].rank_per_faculty, 2);
}

TEST(ScorePrograms, SingleCandidateScoresOne) {
  const Scored s = score(worked_example_with_candidates());
  const std::vector<std::string> only{"X2"};
  const ScoreReport report = score_programs(s.model, s.counts, only);
  ASSERT_EQ(report.rows.size(), 1u);
  EXPECT_EQ(report.rows[0].r_score, 1.0);
}

TEST(ScorePrograms, AllZeroIsFlagged) {
  const Corpus base = testing::worked_example_corpus();
  ProgramRoster outsider{"Z", Role::kCandidate, std::nullopt, {AuthorId("z1")}};
  PublicationRecord elsewhere{"z-1", VenueId("v9"), 2001, {AuthorId("z1")}};
  const ScoreReport report = score(with_extra(base, {elsewhere}, {outsider})).report;
  EXPECT_TRUE(report.all_zero);
  EXPECT_EQ(report.rows[0].r_score, 0.0);
  EXPECT_EQ(report.rows[0].r_score_per_faculty, 0.0);
  ASSERT_EQ(report.warnings.size(), 1u);
  EXPECT_EQ(report.warnings[0].rfind("all_zero", 0), 0u);
}

TEST(ScorePrograms, ZeroScoreCandidateRanksLast) {
  ProgramRoster outsider{"A-zero", Role::kCandidate, std::nullopt, {AuthorId("z1")}};
  PublicationRecord elsewhere{"z-1", VenueId("v9"), 2001, {AuthorId("z1")}};
  const ScoreReport report =
      score(with_extra(worked_example_with_candidates(), {elsewhere}, {outsider})).report;
  ASSERT_EQ(report.rows.size(), 3u);
  EXPECT_EQ(report.rows.back().program_id, "A-zero");
  EXPECT_EQ(report.rows.back().r_score, 0.0);
  EXPECT_EQ(report.rows.back().rank_total, 3);
}

TEST(ScorePrograms, RejectsBadLists) {
  const Scored s = score(worked_example_with_candidates());
  EXPECT_THROW(score_programs(s.model, s.counts, std::vector<std::string>{}), DataError);
  EXPECT_THROW(score_programs(s.model, s.counts, std::vector<std::string>{"X1", "X1"}), DataError);
  EXPECT_THROW(score_programs(s.model, s.counts, std::vector<std::string>{"X1", "Q"}), DataError);
}

TEST(ScorePrograms, ReferenceProgramsCanBeScoredExplicitly) {
  const Scored s = score(worked_example_with_candidates());
  const std::vector<std::string> mixed{"X1", "P1", "X2"};
  const ScoreReport report = score_programs(s.model, s.counts, mixed);
  EXPECT_EQ(report.rows.size(), 3u);
  EXPECT_EQ(report.rows[0].r_score, 1.0);
}

TEST(PerFacultyView, SmallerGroupCanOvertake) {
  ScoreReport report;
  report.rows.push_back({"Big", 10, 10.0, 1.0, 0.0, 1, 0});
  report.rows.push_back({"Small", 3, 6.0, 0.6, 0.0, 2, 0});
  const ScoreReport view = per_faculty_view(report);
  EXPECT_NEAR(view.rows[0].r_score_per_faculty, 0.5, 1e-15);
  EXPECT_EQ(view.rows[1].r_score_per_faculty, 1.0);
  EXPECT_EQ(view.rows[0].rank_per_faculty, 2);
  EXPECT_EQ(view.rows[1].rank_per_faculty, 1);
  EXPECT_EQ(view.rows[0].rank_total, 1);
}

TEST(PerFacultyView, EqualRosterSizesKeepTotalOrder) {
  ScoreReport report;
  report.rows.push_back({"A", 4, 9.0, 0, 0, 0, 0});
  report.rows.push_back({"B", 4, 7.5, 0, 0, 0, 0});
  report.rows.push_back({"C", 4, 7.5, 0, 0, 0, 0});
  report.rows.push_back({"D", 4, 1.0, 0, 0, 0, 0});
  const ScoreReport view = per_faculty_view(report);
  EXPECT_EQ(view.rows[0].rank_per_faculty, 1);
  EXPECT_EQ(view.rows[1].rank_per_faculty, 2);
  EXPECT_EQ(view.rows[2].rank_per_faculty, 2);
  EXPECT_EQ(view.rows[3].rank_per_faculty, 4);
  EXPECT_NEAR(view.rows[3].r_score_per_faculty, 1.0 / 9, 1e-15);
}

TEST(CompetitionRanks, SharesRankAndSkips) {
  const std::vector<double> values{3.0, 5.0, 3.0, 1.0, 5.0};
  EXPECT_EQ(competition_ranks(values), (std::vector<int>{3, 1, 3, 5, 1}));
  EXPECT_TRUE(competition_ranks(std::vector<double>{}).empty());
}

TEST(ScoringProperties, RScoresStayInUnitInterval) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const ScoreReport report = score(testing::random_corpus(rng, {.candidate_programs = 4})).report;
    if (report.all_zero) continue;
    EXPECT_EQ(report.rows[0].r_score, 1.0);
    for (const ScoreRow& row : report.rows) {
      EXPECT_GE(row.r_score, 0.0);
      EXPECT_LE(row.r_score, 1.0);
      EXPECT_GE(row.r_score_per_faculty, 0.0);
      EXPECT_LE(row.r_score_per_faculty, 1.0);
    }
  }
}

TEST(ScoringProperties, SoloPaperInReputedVenueRaisesRawScore) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const Corpus corpus = testing::random_corpus(rng, {});
    const Scored before = score(corpus);
    const ProgramRoster& candidate = corpus.candidate_programs()[0];
    const PublicationRecord extra{"extra", VenueId("venue-0"), 2005, {candidate.faculty[0]}};
    const Scored after = score(with_extra(corpus, {extra}));
    EXPECT_GT(raw_score(after.model, after.counts, candidate.program_id),
              raw_score(before.model, before.counts, candidate.program_id));
    EXPECT_EQ(after.model.nu, before.model.nu);
  }
}

TEST(ScoringProperties, ScoringIsIdempotent) {
  std::mt19937_64 rng(43);
  const Scored s = score(testing::random_corpus(rng, {}));
  EXPECT_EQ(score_programs(s.model, s.counts), s.report);
  EXPECT_EQ(per_faculty_view(s.report), s.report);
}

TEST(ScoringProperties, DuplicatingEveryPaperDoublesRawScores) {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 10; ++trial) {
    const Corpus corpus = testing::random_corpus(rng, {});
    std::vector<PublicationRecord> copies = corpus.publications();
    for (PublicationRecord& p : copies) p.id += "-copy";
    const Scored base = score(corpus);
    const Scored doubled = score(with_extra(corpus, copies));
    for (std::size_t i = 0; i < base.report.rows.size(); ++i) {
      EXPECT_EQ(doubled.report.rows[i].program_id, base.report.rows[i].program_id);
      EXPECT_NEAR(doubled.report.rows[i].raw_score, 2 * base.report.rows[i].raw_score, 1e-9);
      EXPECT_NEAR(doubled.report.rows[i].r_score, base.report.rows[i].r_score, 1e-12);
    }
  }
}

TEST(ScoringProperties, MatchesIndependentPipeline) {
  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 20; ++trial) {
    const Corpus corpus = testing::random_corpus(rng, {.candidate_programs = 3});
    const Scored s = score(corpus);
    const auto oracle = testing::oracle_raw_scores(corpus);
    for (const ScoreRow& row : s.report.rows) {
      EXPECT_NEAR(row.raw_score, oracle.at(row.program_id), 1e-8);
    }
  }
}

TEST(ModelDigest, StableAndSensitive) {
  const Scored a = score(worked_example_with_candidates());
  const Scored b = score(worked_example_with_candidates());
  EXPECT_EQ(model_digest(a.model), model_digest(b.model));
  const ReputationModel c =
      build_reputation_model(build_counts(worked_example_with_candidates().with_reference_prefix(1)));
  EXPECT_NE(model_digest(a.model), model_digest(c));
}

}  // namespace
}  // namespace rscore
