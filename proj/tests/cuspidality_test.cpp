#include <gtest/gtest.h>

#include <algorithm>

#include "cusp/cuspidality.hpp"
#include "cusp/notation.hpp"
#include "cusp/scan.hpp"
#include "oracles.hpp"

using cusp::Assumption;
using cusp::FieldKind;
using cusp::GrsOrder;
using cusp::Partition;
using cusp::RuleId;
using cusp::Status;

namespace {

bool fired(const cusp::Verdict& v, RuleId rule) {
  return std::any_of(v.firings.begin(), v.firings.end(), [&](const cusp::Firing& f) { return f.rule == rule; });
}

cusp::Verdict analyze(std::string_view text, FieldKind field = FieldKind::General, cusp::AssumptionSet a = {}) {
  return cusp::verdict(cusp::parse_parameter(text), field, a);
}

}  // namespace

TEST(RankSumBound, Examples) {
  EXPECT_EQ(cusp::n_a(std::vector<int>{5, 2}), 48);
  EXPECT_EQ(cusp::n_a(std::vector<int>{6, 1}), 48);
  EXPECT_EQ(cusp::n_a(std::vector<int>{1, 2}), 8);
  EXPECT_EQ(cusp::n_a(std::vector<int>{1, 4}), 24);
  EXPECT_EQ(cusp::n_a(std::vector<int>{2, 2}), 24);
  EXPECT_THROW(cusp::n_a(std::vector<int>{}), cusp::Error);
  EXPECT_THROW(cusp::n_a(std::vector<int>{0, 3}), cusp::Error);
}

TEST(RankSumBound, Membership) {
  EXPECT_TRUE(cusp::b_a_contains(std::vector<int>{5, 2}, std::vector<int>{1, 8}));
  EXPECT_FALSE(cusp::b_a_contains(std::vector<int>{3, 1}, std::vector<int>{2, 1}));
  EXPECT_TRUE(cusp::b_a_contains(std::vector<int>{1, 2}, std::vector<int>{1, 2}));
  EXPECT_FALSE(cusp::b_a_contains(std::vector<int>{1, 2}, std::vector<int>{2, 2}));
  EXPECT_THROW(cusp::b_a_contains(std::vector<int>{1}, std::vector<int>{1, 2}), cusp::Error);
}

TEST(GrsMax, Examples) {
  const Partition eta{6, 2, 2, 2, 2, 2, 2, 2};
  const auto lex = cusp::grs_max_weight(eta, GrsOrder::Lex);
  EXPECT_EQ(lex.weight, 24);
  EXPECT_EQ(lex.witness, (Partition{4, 4, 4, 4, 2, 2, 2, 2}));
  const auto dom = cusp::grs_max_weight(eta, GrsOrder::Dominance);
  EXPECT_EQ(dom.weight, 16);
  EXPECT_EQ(dom.witness, (Partition{4, 4, 2, 2, 2, 2}));
  for (auto order : {GrsOrder::Lex, GrsOrder::Dominance}) {
    const auto r = cusp::grs_max_weight(Partition{2, 2}, order);
    EXPECT_EQ(r.weight, 4);
    EXPECT_EQ(r.witness, (Partition{2, 2}));
  }
}

TEST(GrsMax, EmptyFeasibleFamily) {
  for (auto order : {GrsOrder::Lex, GrsOrder::Dominance}) {
    const auto r = cusp::grs_max_weight(Partition{1, 1}, order);
    EXPECT_EQ(r.weight, 0);
    EXPECT_TRUE(r.witness.empty());
    EXPECT_EQ(cusp::grs_max_weight(Partition{}, order).weight, 0);
  }
  EXPECT_THROW(cusp::grs_max_weight(Partition{3}, GrsOrder::Lex), cusp::Error);
}

TEST(GrsMax, MatchesOracleOnAllSymplecticPartitionsToSixteen) {
  for (int w = 0; w <= 16; w += 2) {
    for (const auto& eta : cusp::partitions_of(w)) {
      if (!cusp::is_symplectic(eta)) continue;
      for (bool dominance : {false, true}) {
        const auto got = cusp::grs_max_weight(eta, dominance ? GrsOrder::Dominance : GrsOrder::Lex);
        const auto want = oracle::grs_max(oracle::parts_of(eta), dominance);
        ASSERT_EQ(got.weight, want.weight) << cusp::render_partition(eta) << (dominance ? " dom" : " lex");
        ASSERT_EQ(oracle::parts_of(got.witness), want.witness) << cusp::render_partition(eta);
        ASSERT_TRUE(cusp::is_grs_admissible(got.witness));
        if (dominance) {
          ASSERT_TRUE(cusp::dominated_by(got.witness, eta));
          ASSERT_LE(got.weight, w);
        } else {
          ASSERT_TRUE(cusp::lex_at_most(got.witness, eta));
        }
      }
    }
  }
}

TEST(Bounds, Examples) {
  const auto b = cusp::bounds(cusp::parse_parameter("(5o,1)+(2s,8)"));
  EXPECT_EQ(b.n_a, 48);
  EXPECT_EQ(b.n1, 24);
  EXPECT_EQ(b.n2, 16);
  EXPECT_EQ(b.n1_witness, (Partition{4, 4, 4, 4, 2, 2, 2, 2}));
  EXPECT_EQ(b.n2_witness, (Partition{4, 4, 2, 2, 2, 2}));

  const auto generic = cusp::bounds(cusp::parse_parameter("(1c,1)+(2s,2)"));
  EXPECT_EQ(generic.n_a, 8);
  EXPECT_EQ(generic.n1, 4);
  EXPECT_EQ(generic.n2, 4);

  for (const char* text : {"(1c,1)+(2s,2)", "(1c,3)+(2s,2)", "(1c,5)+(2s,2)", "(1c,1)+(2s,4)"}) {
    EXPECT_EQ(cusp::bounds(cusp::parse_parameter(text)).n_a, 8) << text;
  }
}

TEST(Verdict, KudlaRallisOddN) {
  const auto v = analyze("(1c,7)+(2s,2)");
  EXPECT_EQ(v.status, Status::NoCuspidal);
  EXPECT_EQ(v.n, 5);
  EXPECT_TRUE(fired(v, RuleId::KudlaRallis));
  EXPECT_TRUE(fired(v, RuleId::UnipotentDominance));
  EXPECT_FALSE(fired(v, RuleId::RankSumBound));
  EXPECT_EQ(v.eta, (Partition{3, 3, 1, 1, 1, 1}));
}

TEST(Verdict, ImaginaryFieldRankBound) {
  const auto v = analyze("(1o:omega,1)+(2o,5)", FieldKind::TotallyImaginary);
  EXPECT_EQ(v.status, Status::NoCuspidal);
  EXPECT_TRUE(fired(v, RuleId::RankSumBound));
  EXPECT_TRUE(fired(v, RuleId::LexGrsBound));
  EXPECT_EQ(v.bounds.n_a, 8);
  EXPECT_EQ(analyze("(1o:omega,1)+(2o,5)").status, Status::Undetermined);
}

TEST(Verdict, StarredPointUndetermined) {
  const auto v = analyze("(1c,1)+(2s,2)", FieldKind::TotallyImaginary);
  EXPECT_EQ(v.status, Status::Undetermined);
  EXPECT_TRUE(v.firings.empty());
}

TEST(Verdict, EisensteinFamilyBeyondThreshold) {
  const auto v = analyze("(1c,1)+(4s,8)", FieldKind::TotallyImaginary);
  EXPECT_EQ(v.n, 16);
  EXPECT_EQ(v.bounds.n_a, 24);
  EXPECT_TRUE(fired(v, RuleId::RankSumBound));
  EXPECT_EQ(v.status, Status::NoCuspidal);
}

TEST(Verdict, GenericContainsCuspidal) {
  const auto v = analyze("(3o,1)+(2o,1)+(2o:x,1)");
  EXPECT_EQ(v.status, Status::ContainsCuspidal);
  ASSERT_EQ(v.firings.size(), 1u);
  EXPECT_EQ(v.firings[0].rule, RuleId::Generic);
  EXPECT_FALSE(v.firings[0].conditional_on.has_value());
  EXPECT_EQ(analyze("(3o,1)+(2o,1)+(2o:x,1)", FieldKind::TotallyImaginary).status, Status::ContainsCuspidal);
}

TEST(Verdict, KudlaRallisEvenNThreshold) {
  // even n allows b = n+1, odd n allows b = n
  EXPECT_FALSE(fired(analyze("(1c,5)+(2s,2)"), RuleId::KudlaRallis));
  EXPECT_EQ(analyze("(1c,5)+(2s,2)").status, Status::Undetermined);
  EXPECT_TRUE(fired(analyze("(1c,9)+(2s,2)"), RuleId::KudlaRallis));
  EXPECT_FALSE(fired(analyze("(1c,9)+(2s,2)+(2s:y,2)"), RuleId::KudlaRallis));
  EXPECT_FALSE(fired(analyze("(1c,7)+(2s,2)+(2s:y,2)"), RuleId::KudlaRallis));
  EXPECT_TRUE(fired(analyze("(1c,9)+(2s,2)+(1c:x,1)+(1c:z,1)"), RuleId::KudlaRallis));
}

TEST(Verdict, ConditionalRulesOnlyCountWhenActive) {
  const auto moeglin_only = analyze("(1c,5)+(2s,2)");
  EXPECT_TRUE(fired(moeglin_only, RuleId::Moeglin));
  EXPECT_EQ(moeglin_only.status, Status::Undetermined);
  EXPECT_EQ(analyze("(1c,5)+(2s,2)", FieldKind::General, {Assumption::MoeglinConjecture}).status,
            Status::NoCuspidal);
  for (const auto& f : moeglin_only.firings) {
    if (f.rule == RuleId::Moeglin) {
      EXPECT_EQ(f.conditional_on, Assumption::MoeglinConjecture);
    }
  }
}

TEST(Verdict, DominanceBoundNeedsAssumption) {
  // 2n = 20 exceeds N2 = 16 but not N1 = 24 or N_a = 48
  const auto v = analyze("(5o,1)+(2s,8)", FieldKind::TotallyImaginary);
  EXPECT_TRUE(fired(v, RuleId::DominanceGrsBound));
  EXPECT_FALSE(fired(v, RuleId::LexGrsBound));
  EXPECT_FALSE(fired(v, RuleId::RankSumBound));
  EXPECT_EQ(v.status, Status::Undetermined);
  EXPECT_EQ(analyze("(5o,1)+(2s,8)", FieldKind::TotallyImaginary, {Assumption::ConjJ14Part1}).status,
            Status::NoCuspidal);
  EXPECT_EQ(analyze("(5o,1)+(2s,8)", FieldKind::General, {Assumption::ConjJ14Part1}).status, Status::Undetermined);
}

TEST(Verdict, TotallyRealActsAsGeneral) {
  for (const char* text : {"(1c,7)+(2s,2)", "(1c,1)+(2s,6)", "(1o:omega,1)+(2o,5)", "(3o,1)+(2o,1)+(2o:x,1)"}) {
    const auto g = analyze(text);
    const auto r = analyze(text, FieldKind::TotallyReal);
    EXPECT_EQ(g.status, r.status);
    EXPECT_EQ(g.firings, r.firings);
  }
}

TEST(Verdict, UnipotentIffDominanceFailsToNineteen) {
  // Rank-one summand (chi, b) with b above every other multiplicity; the
  // remainder is any orthogonal partition with parts below b.
  int cases = 0;
  for (int total = 3; total <= 19; total += 2) {
    const int n = (total - 1) / 2;
    const Partition floor_2n(std::vector<int>(static_cast<std::size_t>(n), 2));
    for (int b = 1; b <= total; b += 2) {
      for (const auto& rest : cusp::partitions_of(total - b)) {
        if (!rest.empty() && rest.largest() >= b) continue;
        if (!cusp::is_orthogonal(rest)) continue;
        std::string text = "(1c:chi," + std::to_string(b) + ")";
        int label = 0;
        for (auto [value, mult] : rest.grouped()) {
          text += "+(" + std::to_string(mult) + (value % 2 ? "o" : "s") + ":t" + std::to_string(label++) + "," +
                  std::to_string(value) + ")";
        }
        const auto psi = cusp::parse_parameter(text);
        ASSERT_EQ(psi.n(), n);
        const auto v = cusp::verdict(psi, FieldKind::General, {});
        const auto rel = cusp::compare_dominance(floor_2n, v.eta);
        const bool below = rel == cusp::OrderRel::Less || rel == cusp::OrderRel::Equal;
        ASSERT_EQ(b > n + 1, !below) << text;
        ASSERT_EQ(fired(v, RuleId::UnipotentDominance), b > n + 1) << text;
        if (n % 2 == 1 && b > n + 1) {
          ASSERT_TRUE(fired(v, RuleId::KudlaRallis));
        }
        ++cases;
      }
    }
  }
  EXPECT_GT(cases, 200);
}

TEST(Scan, FigureGrid) {
  const cusp::ParameterTemplate t("(1c,$b1)+(2s,$b2)");
  const auto rows = cusp::scan(t, {cusp::parse_range("b1=1:7:2"), cusp::parse_range("b2=2:6:2")},
                               FieldKind::TotallyImaginary, {});
  ASSERT_EQ(rows.size(), 12u);
  std::vector<std::pair<int, int>> undetermined;
  for (const auto& r : rows) {
    ASSERT_TRUE(r.verdict.has_value());
    if (r.verdict->status == Status::Undetermined) {
      undetermined.emplace_back(r.values[0], r.values[1]);
    } else {
      EXPECT_EQ(r.verdict->status, Status::NoCuspidal);
    }
  }
  EXPECT_EQ(undetermined, (std::vector<std::pair<int, int>>{{1, 2}, {1, 4}, {3, 2}, {5, 2}}));
  EXPECT_EQ(rows[0].values, (std::vector<int>{1, 2}));
  EXPECT_EQ(rows[1].values, (std::vector<int>{1, 4}));
  EXPECT_EQ(rows[3].values, (std::vector<int>{3, 2}));
}

TEST(Scan, GeneralFieldThreshold) {
  const cusp::ParameterTemplate t("(1c,$b)+(2s,2)");
  const auto rows = cusp::scan(t, {cusp::parse_range("b=5:7:2")}, FieldKind::General, {});
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].verdict->status, Status::Undetermined);
  EXPECT_EQ(rows[1].verdict->status, Status::NoCuspidal);
}

TEST(Scan, EmptyRangeAndInvalidCells) {
  const cusp::ParameterTemplate t("(1c,$b)+(2s,$c)");
  EXPECT_TRUE(cusp::scan(t, {cusp::parse_range("b=5:3"), cusp::parse_range("c=2:4")}, FieldKind::General, {}).empty());
  const auto rows = cusp::scan(t, {cusp::parse_range("b=1:2"), cusp::parse_range("c=2:3")}, FieldKind::General, {});
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_TRUE(rows[0].verdict.has_value());
  EXPECT_FALSE(rows[1].verdict.has_value());
  EXPECT_NE(rows[1].error.find("ParityRule"), std::string::npos);
  EXPECT_EQ(rows[1].parameter_text, "(1c,1)+(2s,3)");
}

TEST(Scan, RangeErrors) {
  const cusp::ParameterTemplate t("(1c,$b)+(2s,2)");
  EXPECT_THROW(cusp::scan(t, {}, FieldKind::General, {}), cusp::Error);
  EXPECT_THROW(cusp::scan(t, {cusp::parse_range("b=1:3"), cusp::parse_range("b=1:3")}, FieldKind::General, {}),
               cusp::Error);
  EXPECT_THROW(cusp::scan(t, {cusp::parse_range("b=1:3"), cusp::parse_range("z=1:3")}, FieldKind::General, {}),
               cusp::Error);
  EXPECT_THROW(cusp::parse_range("b=1:3:0"), cusp::Error);
  EXPECT_THROW(cusp::parse_range("b=1"), cusp::Error);
  EXPECT_THROW(cusp::parse_range("=1:2"), cusp::Error);
  EXPECT_THROW(cusp::parse_range("b=1:x"), cusp::Error);
  const auto r = cusp::parse_range("b=-3:3:3");
  EXPECT_EQ(r.values(), (std::vector<int>{-3, 0, 3}));
}

TEST(Scan, ThreadCountDoesNotChangeRows) {
  const cusp::ParameterTemplate t("(1c,$b1)+(2s,$b2)+(3o,$b3)");
  const std::vector<cusp::ScanRange> ranges{cusp::parse_range("b1=1:9"), cusp::parse_range("b2=2:8:2"),
                                            cusp::parse_range("b3=1:5")};
  const cusp::AssumptionSet a{Assumption::UpbfcDominanceBound};
  const auto one = cusp::scan(t, ranges, FieldKind::TotallyImaginary, a, 1);
  const auto eight = cusp::scan(t, ranges, FieldKind::TotallyImaginary, a, 8);
  ASSERT_EQ(one.size(), 180u);
  ASSERT_EQ(one.size(), eight.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    ASSERT_EQ(one[i].values, eight[i].values);
    ASSERT_EQ(one[i].error, eight[i].error);
    ASSERT_EQ(one[i].verdict.has_value(), eight[i].verdict.has_value());
    if (one[i].verdict) {
      ASSERT_EQ(one[i].verdict->status, eight[i].verdict->status);
      ASSERT_EQ(one[i].verdict->firings, eight[i].verdict->firings);
    }
  }
}
