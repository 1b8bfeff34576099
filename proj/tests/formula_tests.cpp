#include <tix/formulas.hpp>

#include "helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

using namespace tix;

namespace {

FormulaContext context_for(const Graph& g, int k) {
  FormulaContext ctx;
  ctx.base = compute_all(g);
  ctx.n = g.n;
  ctx.m = g.m();
  ctx.k = k;
  if (auto r = regular_degree(g)) ctx.r = *r;
  return ctx;
}

FormulaContext context_with_prev(const Graph& g, int k, TransformKind t) {
  FormulaContext ctx = context_for(g, k);
  ctx.prev = compute_all(apply_transform(g, {t, k - 1}));
  return ctx;
}

}  // namespace

TEST_CASE("catalog is complete and well-formed") {
  CHECK(kAllFormulaIds.size() == 42);
  std::set<std::string_view> names;
  for (FormulaId id : kAllFormulaIds) {
    const FormulaInfo& info = formula_info(id);
    CHECK(info.id == id);
    CHECK(!info.name.empty());
    CHECK(!info.expression.empty());
    CHECK(info.k_min >= 0);
    names.insert(info.name);
  }
  CHECK(names.size() == 42);

  // every block runs through the seven kinds in order M1,M2,F,PI1,PI2,HM,SDD
  const std::array<IndexKind, 7> order = kAllIndexKinds;
  auto check_block = [&](int start, TransformKind t, FormulaInputs in) {
    for (int i = 0; i < 7; ++i) {
      const FormulaInfo& info = formula_info(FormulaId(start + i));
      CHECK(info.kind == order[static_cast<std::size_t>(i)]);
      CHECK(info.transform == t);
      CHECK(info.inputs == in);
    }
  };
  check_block(0, TransformKind::subdivision, FormulaInputs::base);        // T2_1..7
  check_block(7, TransformKind::semi_total, FormulaInputs::base);         // T2_8..14
  check_block(14, TransformKind::subdivision, FormulaInputs::base_and_prev);
  check_block(21, TransformKind::subdivision, FormulaInputs::regular);
  check_block(28, TransformKind::semi_total, FormulaInputs::base_and_prev);
  check_block(35, TransformKind::semi_total, FormulaInputs::regular);
}

TEST_CASE("k_min assignments") {
  auto kmin = [](FormulaId id) { return formula_info(id).k_min; };
  // theorems: identity at k=0 holds except where the shape changes
  CHECK(kmin(FormulaId::T2_1) == 0);
  CHECK(kmin(FormulaId::T2_2) == 1);
  CHECK(kmin(FormulaId::T2_3) == 0);
  CHECK(kmin(FormulaId::T2_4) == 0);
  CHECK(kmin(FormulaId::T2_5) == 0);
  CHECK(kmin(FormulaId::T2_6) == 1);
  CHECK(kmin(FormulaId::T2_7) == 1);
  CHECK(kmin(FormulaId::T2_8) == 0);
  CHECK(kmin(FormulaId::T2_9) == 0);
  CHECK(kmin(FormulaId::T2_10) == 0);
  CHECK(kmin(FormulaId::T2_11) == 0);
  CHECK(kmin(FormulaId::T2_12) == 1);
  CHECK(kmin(FormulaId::T2_13) == 0);
  CHECK(kmin(FormulaId::T2_14) == 1);
  // subdivision recurrences consume the k-1 level; M2/HM/SDD first hold at 2
  CHECK(kmin(FormulaId::CS_REC_1) == 1);
  CHECK(kmin(FormulaId::CS_REC_2) == 2);
  CHECK(kmin(FormulaId::CS_REC_3) == 1);
  CHECK(kmin(FormulaId::CS_REC_4) == 1);
  CHECK(kmin(FormulaId::CS_REC_5) == 1);
  CHECK(kmin(FormulaId::CS_REC_6) == 2);
  CHECK(kmin(FormulaId::CS_REC_7) == 2);
  // regular corollaries inherit the parent theorem
  for (int i = 0; i < 7; ++i)
    CHECK(kmin(FormulaId(static_cast<int>(FormulaId::CS_REG_1) + i)) ==
          kmin(FormulaId(static_cast<int>(FormulaId::T2_1) + i)));
  for (int i = 0; i < 7; ++i)
    CHECK(kmin(FormulaId(static_cast<int>(FormulaId::CR_REC_1) + i)) == 1);
  CHECK(kmin(FormulaId::CR_REG_1) == 0);
  CHECK(kmin(FormulaId::CR_REG_2) == 0);
  CHECK(kmin(FormulaId::CR_REG_3) == 0);
  CHECK(kmin(FormulaId::CR_REG_4) == 0);
  CHECK(kmin(FormulaId::CR_REG_5) == 1);
  CHECK(kmin(FormulaId::CR_REG_6) == 0);
  CHECK(kmin(FormulaId::CR_REG_7) == 1);  // its own k(k+1) denominator
}

TEST_CASE("formula id parsing accepts aliases") {
  CHECK(parse_formula_id("T2_14") == FormulaId::T2_14);
  CHECK(parse_formula_id("T2.14") == FormulaId::T2_14);
  CHECK(parse_formula_id("t2.14") == FormulaId::T2_14);
  CHECK(parse_formula_id("cs_rec_4") == FormulaId::CS_REC_4);
  CHECK(parse_formula_id("CS.REC.4") == FormulaId::CS_REC_4);
  CHECK(parse_formula_id("cs_rec_iv") == FormulaId::CS_REC_4);
  CHECK(parse_formula_id("CR_REG_vii") == FormulaId::CR_REG_7);
  CHECK(parse_formula_id("cr.reg.VII") == FormulaId::CR_REG_7);
  CHECK(parse_formula_id("T2_15") == std::nullopt);
  CHECK(parse_formula_id("CS_REC_8") == std::nullopt);
  CHECK(parse_formula_id("") == std::nullopt);
  CHECK(parse_formula_id("bogus") == std::nullopt);
}

TEST_CASE("formula set parsing") {
  CHECK(parse_formula_set("all").size() == 42);
  CHECK(parse_formula_set("ALL").size() == 42);

  auto range = parse_formula_set("T2.1..T2.13");
  REQUIRE(range.size() == 13);
  CHECK(range.front() == FormulaId::T2_1);
  CHECK(range.back() == FormulaId::T2_13);

  auto list = parse_formula_set("T2_14, CS_REC_1 ,T2_14");
  REQUIRE(list.size() == 2);
  CHECK(list[0] == FormulaId::T2_14);
  CHECK(list[1] == FormulaId::CS_REC_1);

  auto mixed = parse_formula_set("CR_REG_1..CR_REG_3,T2_5");
  REQUIRE(mixed.size() == 4);
  CHECK(mixed[3] == FormulaId::T2_5);

  CHECK_THROWS_AS(parse_formula_set("T2_9..T2_2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_formula_set("nope"), std::invalid_argument);
  CHECK_THROWS_AS(parse_formula_set("T2_1..nope"), std::invalid_argument);
}

TEST_CASE("frozen evaluation examples") {
  Graph c3 = cycle_graph(3);

  CHECK(evaluate_formula(FormulaId::T2_1, context_for(c3, 2)) == ExactNumber(36));
  CHECK(evaluate_formula(FormulaId::T2_8, context_for(c3, 0)) == ExactNumber(12));
  CHECK(evaluate_formula(FormulaId::T2_12, context_for(c3, 1)) ==
        tix::pow(ExactNumber(2), 30));
  CHECK(evaluate_formula(FormulaId::T2_14, context_for(c3, 2)) == ExactNumber(26));
  CHECK(evaluate_formula(FormulaId::CS_REG_1, context_for(c3, 1)) == ExactNumber(24));
  CHECK(evaluate_formula(FormulaId::CS_REG_1, context_for(c3, 2)) == ExactNumber(36));

  Graph k4 = complete_graph(4);
  CHECK(evaluate_formula(FormulaId::CR_REG_6, context_for(k4, 1)) == ExactNumber(1344));

  // negative exponent path: K_2 is a tree, so k^(m-n) = 1^(-1)
  Graph k2 = path_graph(2);
  CHECK(evaluate_formula(FormulaId::CR_REC_5,
                         context_with_prev(k2, 1, TransformKind::semi_total)) ==
        ExactNumber(16));

  CHECK(evaluate_formula(FormulaId::CR_REC_6,
                         context_with_prev(c3, 1, TransformKind::semi_total)) ==
        ExactNumber(312));
}

TEST_CASE("k = 0 reduces to the base index where the printed form allows it") {
  // expected identities at k=0
  for (const Graph& g : {cycle_graph(4), complete_graph(4), star_graph(3)}) {
    FormulaContext ctx = context_for(g, 0);
    CHECK(evaluate_formula(FormulaId::T2_1, ctx) == ctx.base.m1);
    CHECK(evaluate_formula(FormulaId::T2_3, ctx) == ctx.base.f);
    CHECK(evaluate_formula(FormulaId::T2_4, ctx) == ctx.base.pi1);
    CHECK(evaluate_formula(FormulaId::T2_5, ctx) == ctx.base.pi2);
    CHECK(evaluate_formula(FormulaId::T2_8, ctx) == ctx.base.m1);
    CHECK(evaluate_formula(FormulaId::T2_9, ctx) == ctx.base.m2);
    CHECK(evaluate_formula(FormulaId::T2_10, ctx) == ctx.base.f);
    CHECK(evaluate_formula(FormulaId::T2_11, ctx) == ctx.base.pi1);
    CHECK(evaluate_formula(FormulaId::T2_13, ctx) == ctx.base.hm);
  }
  FormulaContext reg = context_for(cycle_graph(4), 0);
  CHECK(evaluate_formula(FormulaId::CS_REG_1, reg) == reg.base.m1);
  CHECK(evaluate_formula(FormulaId::CS_REG_3, reg) == reg.base.f);
  CHECK(evaluate_formula(FormulaId::CS_REG_4, reg) == reg.base.pi1);
  CHECK(evaluate_formula(FormulaId::CS_REG_5, reg) == reg.base.pi2);
  CHECK(evaluate_formula(FormulaId::CR_REG_1, reg) == reg.base.m1);
  CHECK(evaluate_formula(FormulaId::CR_REG_2, reg) == reg.base.m2);
  CHECK(evaluate_formula(FormulaId::CR_REG_3, reg) == reg.base.f);

  // printed misprints visible already at k=0: CR_REG_4 has r^n where the
  // identity needs r^(2n); CR_REG_6 leads with 4nr^2 instead of nr^3
  FormulaContext c3 = context_for(cycle_graph(3), 0);
  CHECK(evaluate_formula(FormulaId::CR_REG_4, c3) == ExactNumber(8));
  CHECK(c3.base.pi1 == ExactNumber(64));
  FormulaContext k4 = context_for(complete_graph(4), 0);
  CHECK(evaluate_formula(FormulaId::CR_REG_6, k4) == ExactNumber(144));
  CHECK(k4.base.hm == ExactNumber(216));
  // while on r=2 inputs the leading terms coincide
  FormulaContext c4 = context_for(cycle_graph(4), 0);
  CHECK(evaluate_formula(FormulaId::CR_REG_6, c4) == c4.base.hm);
}

TEST_CASE("evaluation error paths") {
  Graph p4 = path_graph(4);
  Graph c3 = cycle_graph(3);

  // regular-only formula without r
  FormulaContext no_r = context_for(p4, 1);
  CHECK_FALSE(no_r.r.has_value());
  CHECK_THROWS_AS(evaluate_formula(FormulaId::CS_REG_1, no_r), std::invalid_argument);

  // recurrence without the previous level
  CHECK_THROWS_AS(evaluate_formula(FormulaId::CS_REC_1, context_for(c3, 1)),
                  std::invalid_argument);

  // below k_min
  CHECK_THROWS_AS(evaluate_formula(FormulaId::T2_14, context_for(c3, 0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(evaluate_formula(FormulaId::T2_2, context_for(c3, 0)),
                  std::invalid_argument);

  // below k_min is allowed on request, and the printed value comes back
  CHECK(evaluate_formula(FormulaId::T2_14, context_for(c3, 0), true) == ExactNumber(18));

  // but genuine division by zero stays an error even when allowed
  CHECK_THROWS_AS(
      evaluate_formula(FormulaId::CR_REG_7, context_for(c3, 0), true), std::domain_error);
  FormulaContext rec0 = context_for(c3, 0);
  rec0.prev = rec0.base;  // R_(-1) does not exist; any stand-in shows the 1/k blowup
  CHECK_THROWS_AS(evaluate_formula(FormulaId::CR_REC_4, rec0, true), std::domain_error);

  CHECK_THROWS_AS(evaluate_formula(FormulaId::T2_1, context_for(c3, -1)),
                  std::invalid_argument);
}

TEST_CASE("regular corollaries agree with exact parent theorems on regular graphs") {
  // asserted only where the parent closed form is itself exact: all seven
  // subdivision corollaries, and the first two semi-total ones
  std::vector<Graph> regulars = {cycle_graph(5), complete_graph(4),
                                 random_regular_graph(8, 3, 1)};
  const std::pair<FormulaId, FormulaId> pairs[] = {
      {FormulaId::CS_REG_1, FormulaId::T2_1}, {FormulaId::CS_REG_2, FormulaId::T2_2},
      {FormulaId::CS_REG_3, FormulaId::T2_3}, {FormulaId::CS_REG_4, FormulaId::T2_4},
      {FormulaId::CS_REG_5, FormulaId::T2_5}, {FormulaId::CS_REG_6, FormulaId::T2_6},
      {FormulaId::CS_REG_7, FormulaId::T2_7}, {FormulaId::CR_REG_1, FormulaId::T2_8},
      {FormulaId::CR_REG_2, FormulaId::T2_9},
  };
  for (const Graph& g : regulars) {
    for (auto [reg_id, thm_id] : pairs) {
      int lo = std::max(formula_info(reg_id).k_min, formula_info(thm_id).k_min);
      for (int k = lo; k <= 4; ++k) {
        FormulaContext ctx = context_for(g, k);
        INFO(formula_name(reg_id) << " vs " << formula_name(thm_id) << " k=" << k);
        CHECK(evaluate_formula(reg_id, ctx) == evaluate_formula(thm_id, ctx));
      }
    }
  }

  // CR_REG_5 is deliberately NOT in that list: its parent T2_12 is misprinted
  // (PI1 where PI2 belongs), while the corollary's own substitution is right.
  FormulaContext k4 = context_for(complete_graph(4), 1);
  CHECK(evaluate_formula(FormulaId::CR_REG_5, k4) !=
        evaluate_formula(FormulaId::T2_12, k4));
  CHECK(evaluate_formula(FormulaId::CR_REG_5, k4) ==
        tix::pow(ExactNumber(36), 6) * tix::pow(ExactNumber(12), 12));
}

TEST_CASE("expression strings stay faithful to the printed statements") {
  CHECK(formula_info(FormulaId::T2_12).expression ==
        "PI2(R_k(G)) = 4^(km) ((k+1)^(2m) PI1(G))^(k+1)");
  CHECK(formula_info(FormulaId::CR_REC_7).expression ==
        "SDD(R_k(G)) = SDD(R_(k-1)(G)) + (1/2) M1(G) - 2n/(k(k+1))");
  CHECK(formula_info(FormulaId::CS_REG_6).expression ==
        "HM(S_k(G)) = nr(r^2 + 4r + 8k - 4)");
}
