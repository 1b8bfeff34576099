#pragma once

#include "tix/formulas.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <tuple>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tix {

struct GraphCase {
  std::string label;
  Graph graph;
};

struct VerificationRecord {
  FormulaId id{};
  std::string graph_label;
  int n = 0;
  int m = 0;
  int k = 0;
  ExactNumber predicted;
  ExactNumber actual;
  ExactNumber residual;  // predicted - actual, signed
  bool match = false;
  bool applicable = true;  // false for rows evaluated below the id's k_min
  int case_index = 0;      // position in the suite; breaks counterexample ties
};

// Predicted value from the printed formula vs. the index computed on the
// actually constructed derived graph. The (k-1)-level inputs of recurrences
// are obtained by building that graph directly, never from another formula.
inline VerificationRecord verify_formula(FormulaId id, const Graph& g, int k,
                                         std::string label = std::string(), int case_index = 0,
                                         bool allow_below_k_min = false) {
  const FormulaInfo& info = formula_info(id);
  if (k < 0) throw std::invalid_argument("verify: k must be >= 0");
  FormulaContext ctx;
  ctx.base = compute_all(g);
  ctx.n = g.n;
  ctx.m = g.m();
  ctx.k = k;
  if (info.inputs == FormulaInputs::regular) {
    auto r = regular_degree(g);
    if (!r)
      throw std::invalid_argument(std::string(info.name) + ": input graph is not regular");
    ctx.r = *r;
  }
  if (info.inputs == FormulaInputs::base_and_prev) {
    if (k < 1)
      throw std::invalid_argument(std::string(info.name) +
                                  ": recurrence needs k >= 1 (no level below S_0/R_0)");
    ctx.prev = compute_all(apply_transform(g, {info.transform, k - 1}));
  }
  ExactNumber predicted = evaluate_formula(id, ctx, allow_below_k_min);
  ExactNumber actual = compute_index(apply_transform(g, {info.transform, k}), info.kind);

  VerificationRecord rec;
  rec.id = id;
  rec.graph_label = label.empty() ? "graph(n=" + std::to_string(g.n) + ",m=" +
                                        std::to_string(g.m()) + ")"
                                  : std::move(label);
  rec.n = g.n;
  rec.m = g.m();
  rec.k = k;
  rec.predicted = predicted;
  rec.actual = actual;
  rec.residual = predicted - actual;
  rec.match = predicted == actual;
  rec.applicable = k >= info.k_min;
  rec.case_index = case_index;
  return rec;
}

struct SuiteSpec {
  std::vector<GraphCase> cases;
  std::vector<FormulaId> formulas{kAllFormulaIds.begin(), kAllFormulaIds.end()};
  int k_max = 4;
  std::optional<int> k_lo;  // explicit lower bound; default is each id's k_min
  std::uint64_t seed = 1;
  std::vector<std::string> notes;  // generation diagnostics
};

// Fixed instance battery: paths P_2..P_8, cycles C_3..C_8, complete K_2..K_6,
// stars K_{1,2}..K_{1,6}, K_{2,3}, one random cubic graph on 8 vertices and
// one connected G(8, 1/2). Random instances are redrawn with successive seeds
// until connected (bounded); the accepted seed lands in the label.
inline std::vector<GraphCase> default_cases(std::uint64_t seed,
                                            std::vector<std::string>* notes = nullptr) {
  std::vector<GraphCase> cases;
  auto add = [&](const FamilySpec& s) { cases.push_back({describe(s), generate(s)}); };
  for (int n = 2; n <= 8; ++n) add({FamilyKind::path, n});
  for (int n = 3; n <= 8; ++n) add({FamilyKind::cycle, n});
  for (int n = 2; n <= 6; ++n) add({FamilyKind::complete, n});
  for (int leaves = 2; leaves <= 6; ++leaves) add({FamilyKind::star, leaves});
  add({FamilyKind::complete_bipartite, 2, 3});

  auto add_random = [&](FamilySpec s) {
    const int tries = 100;
    for (int i = 0; i < tries; ++i) {
      s.seed = seed + static_cast<std::uint64_t>(i);
      Graph g;
      try {
        g = generate(s);
      } catch (const std::runtime_error&) {
        continue;  // pairing model gave up for this seed
      }
      if (is_connected(g)) {
        cases.push_back({describe(s), std::move(g)});
        return;
      }
    }
    if (notes)
      notes->push_back("skipped " + family_name(s.kind) +
                       ": no connected instance within " + std::to_string(tries) +
                       " seeds starting at " + std::to_string(seed));
  };
  FamilySpec rr;
  rr.kind = FamilyKind::random_regular;
  rr.a = 8;
  rr.r = 3;
  add_random(rr);
  FamilySpec er;
  er.kind = FamilyKind::erdos_renyi;
  er.a = 8;
  er.p = 0.5;
  add_random(er);
  return cases;
}

inline SuiteSpec default_suite(std::uint64_t seed = 1) {
  SuiteSpec suite;
  suite.seed = seed;
  suite.cases = default_cases(seed, &suite.notes);
  return suite;
}

struct FormulaSummary {
  FormulaId id{};
  int passes = 0;
  int fails = 0;
  std::optional<VerificationRecord> smallest_counterexample;
};

struct AuditReport {
  SuiteSpec suite;
  std::vector<VerificationRecord> records;
  std::vector<FormulaSummary> summaries;
  int mismatches = 0;  // applicable failing records
};

// Records are emitted formula-major, then suite order, then ascending k.
// Regular-only formulas are evaluated only on regular instances. Rows below
// an id's k_min appear only when the suite pins an explicit k_lo; they carry
// applicable=false and never count toward summaries or the mismatch total.
// The smallest counterexample minimizes (n, k, suite position).
inline AuditReport run_audit(const SuiteSpec& suite) {
  AuditReport rep;
  rep.suite = suite;
  for (FormulaId id : suite.formulas) {
    const FormulaInfo& info = formula_info(id);
    FormulaSummary sum;
    sum.id = id;
    for (std::size_t ci = 0; ci < suite.cases.size(); ++ci) {
      const GraphCase& gc = suite.cases[ci];
      if (info.inputs == FormulaInputs::regular && !regular_degree(gc.graph)) continue;
      int lo = suite.k_lo ? std::max(0, *suite.k_lo) : info.k_min;
      for (int k = lo; k <= suite.k_max; ++k) {
        bool below = k < info.k_min;
        VerificationRecord rec;
        try {
          rec = verify_formula(id, gc.graph, k, gc.label, static_cast<int>(ci), below);
        } catch (const std::exception& e) {
          if (!below) throw;
          rep.suite.notes.push_back(std::string(info.name) + " on " + gc.label + " at k=" +
                                    std::to_string(k) + ": " + e.what());
          continue;
        }
        rep.records.push_back(rec);
        if (!rec.applicable) continue;
        if (rec.match) {
          ++sum.passes;
        } else {
          ++sum.fails;
          const auto& best = sum.smallest_counterexample;
          auto key = [](const VerificationRecord& r) {
            return std::tuple<int, int, int>(r.n, r.k, r.case_index);
          };
          if (!best || key(rec) < key(*best)) sum.smallest_counterexample = rec;
        }
      }
    }
    rep.mismatches += sum.fails;
    rep.summaries.push_back(sum);
  }
  return rep;
}

inline const FormulaSummary* find_summary(const AuditReport& rep, FormulaId id) {
  for (const auto& s : rep.summaries)
    if (s.id == id) return &s;
  return nullptr;
}

inline std::optional<VerificationRecord> smallest_counterexample(const AuditReport& rep,
                                                                 FormulaId id) {
  const FormulaSummary* s = find_summary(rep, id);
  return s ? s->smallest_counterexample : std::nullopt;
}

}  // namespace tix
