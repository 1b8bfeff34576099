#pragma once

#include "tix/exact.hpp"
#include "tix/indices.hpp"
#include "tix/transforms.hpp"

#include <array>
#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tix {

// Catalog of the published closed forms under audit. T2_i are the theorem
// statements, CS_*/CR_* the corollary blocks for S_k / R_k (REC = recurrence
// in k, REG = closed form for r-regular inputs). Item order inside every
// block is M1, M2, F, PI1, PI2, HM, SDD. Expressions are transcribed as
// printed in the source text; the audit's job is to compare them against
// direct computation, not to repair them.
enum class FormulaId : int {
  T2_1, T2_2, T2_3, T2_4, T2_5, T2_6, T2_7,
  T2_8, T2_9, T2_10, T2_11, T2_12, T2_13, T2_14,
  CS_REC_1, CS_REC_2, CS_REC_3, CS_REC_4, CS_REC_5, CS_REC_6, CS_REC_7,
  CS_REG_1, CS_REG_2, CS_REG_3, CS_REG_4, CS_REG_5, CS_REG_6, CS_REG_7,
  CR_REC_1, CR_REC_2, CR_REC_3, CR_REC_4, CR_REC_5, CR_REC_6, CR_REC_7,
  CR_REG_1, CR_REG_2, CR_REG_3, CR_REG_4, CR_REG_5, CR_REG_6, CR_REG_7,
};

inline constexpr int kFormulaCount = 42;

inline constexpr std::array<FormulaId, kFormulaCount> kAllFormulaIds = [] {
  std::array<FormulaId, kFormulaCount> ids{};
  for (int i = 0; i < kFormulaCount; ++i) ids[static_cast<std::size_t>(i)] = FormulaId(i);
  return ids;
}();

enum class FormulaInputs { base, base_and_prev, regular };

struct FormulaInfo {
  FormulaId id;
  std::string_view name;
  TransformKind transform;
  IndexKind kind;
  int k_min;
  FormulaInputs inputs;
  std::string_view expression;
};

namespace detail {

inline constexpr TransformKind S = TransformKind::subdivision;
inline constexpr TransformKind R = TransformKind::semi_total;
inline constexpr FormulaInputs BASE = FormulaInputs::base;
inline constexpr FormulaInputs PREV = FormulaInputs::base_and_prev;
inline constexpr FormulaInputs REG = FormulaInputs::regular;

inline constexpr std::array<FormulaInfo, kFormulaCount> kFormulaTable = {{
    {FormulaId::T2_1, "T2_1", S, IndexKind::M1, 0, BASE,
     "M1(S_k(G)) = M1(G) + 4km"},
    {FormulaId::T2_2, "T2_2", S, IndexKind::M2, 1, BASE,
     "M2(S_k(G)) = 2 M1(G) + 4(k-1)m"},
    {FormulaId::T2_3, "T2_3", S, IndexKind::F, 0, BASE,
     "F(S_k(G)) = F(G) + 8km"},
    {FormulaId::T2_4, "T2_4", S, IndexKind::PI1, 0, BASE,
     "PI1(S_k(G)) = 4^(km) PI1(G)"},
    {FormulaId::T2_5, "T2_5", S, IndexKind::PI2, 0, BASE,
     "PI2(S_k(G)) = 4^(km) PI2(G)"},
    {FormulaId::T2_6, "T2_6", S, IndexKind::HM, 1, BASE,
     "HM(S_k(G)) = F(G) + 4 M1(G) + 16km - 8m"},
    {FormulaId::T2_7, "T2_7", S, IndexKind::SDD, 1, BASE,
     "SDD(S_k(G)) = (1/2) M1(G) + 2(k-1)m + 2n"},
    {FormulaId::T2_8, "T2_8", R, IndexKind::M1, 0, BASE,
     "M1(R_k(G)) = (k+1)^2 M1(G) + 4km"},
    {FormulaId::T2_9, "T2_9", R, IndexKind::M2, 0, BASE,
     "M2(R_k(G)) = 2k(k+1) M1(G) + (k+1)^2 M2(G)"},
    {FormulaId::T2_10, "T2_10", R, IndexKind::F, 0, BASE,
     "F(R_k(G)) = (k+1)^3 F(G) + 8km"},
    {FormulaId::T2_11, "T2_11", R, IndexKind::PI1, 0, BASE,
     "PI1(R_k(G)) = 4^(km) (k+1)^(2n) PI1(G)"},
    {FormulaId::T2_12, "T2_12", R, IndexKind::PI2, 1, BASE,
     "PI2(R_k(G)) = 4^(km) ((k+1)^(2m) PI1(G))^(k+1)"},
    {FormulaId::T2_13, "T2_13", R, IndexKind::HM, 0, BASE,
     "HM(R_k(G)) = (k+1)^2 HM(G) + k(k+1)^2 F(G) + 4k(k+1) M1(G) + 8km"},
    {FormulaId::T2_14, "T2_14", R, IndexKind::SDD, 1, BASE,
     "SDD(R_k(G)) = SDD(G) + (1/2)(k+1) M1(G) + 2n/(k+1)"},

    {FormulaId::CS_REC_1, "CS_REC_1", S, IndexKind::M1, 1, PREV,
     "M1(S_k(G)) = M1(S_(k-1)(G)) + 4m"},
    {FormulaId::CS_REC_2, "CS_REC_2", S, IndexKind::M2, 2, PREV,
     "M2(S_k(G)) = M2(S_(k-1)(G)) + 4m"},
    {FormulaId::CS_REC_3, "CS_REC_3", S, IndexKind::F, 1, PREV,
     "F(S_k(G)) = F(S_(k-1)(G)) + 8m"},
    {FormulaId::CS_REC_4, "CS_REC_4", S, IndexKind::PI1, 1, PREV,
     "PI1(S_k(G)) = 4^m PI1(S_(k-1)(G))"},
    {FormulaId::CS_REC_5, "CS_REC_5", S, IndexKind::PI2, 1, PREV,
     "PI2(S_k(G)) = 4^m PI2(S_(k-1)(G))"},
    {FormulaId::CS_REC_6, "CS_REC_6", S, IndexKind::HM, 2, PREV,
     "HM(S_k(G)) = HM(S_(k-1)(G)) + 16m"},
    {FormulaId::CS_REC_7, "CS_REC_7", S, IndexKind::SDD, 2, PREV,
     "SDD(S_k(G)) = SDD(S_(k-1)(G)) + 2m"},

    {FormulaId::CS_REG_1, "CS_REG_1", S, IndexKind::M1, 0, REG,
     "M1(S_k(G)) = nr^2 + 2nkr"},
    {FormulaId::CS_REG_2, "CS_REG_2", S, IndexKind::M2, 1, REG,
     "M2(S_k(G)) = 2nr(r + k - 1)"},
    {FormulaId::CS_REG_3, "CS_REG_3", S, IndexKind::F, 0, REG,
     "F(S_k(G)) = nr^3 + 4nkr"},
    {FormulaId::CS_REG_4, "CS_REG_4", S, IndexKind::PI1, 0, REG,
     "PI1(S_k(G)) = 2^(knr) r^(2n)"},
    {FormulaId::CS_REG_5, "CS_REG_5", S, IndexKind::PI2, 0, REG,
     "PI2(S_k(G)) = 2^(nkr) r^(nr)"},
    {FormulaId::CS_REG_6, "CS_REG_6", S, IndexKind::HM, 1, REG,
     "HM(S_k(G)) = nr(r^2 + 4r + 8k - 4)"},
    {FormulaId::CS_REG_7, "CS_REG_7", S, IndexKind::SDD, 1, REG,
     "SDD(S_k(G)) = (1/2)nr^2 + nr(k-1) + 2n"},

    {FormulaId::CR_REC_1, "CR_REC_1", R, IndexKind::M1, 1, PREV,
     "M1(R_k(G)) = M1(R_(k-1)(G)) + (2k+1) M1(G) + 4m"},
    {FormulaId::CR_REC_2, "CR_REC_2", R, IndexKind::M2, 1, PREV,
     "M2(R_k(G)) = M2(R_(k-1)(G)) + 4k M1(G) + (2k+1) M2(G)"},
    {FormulaId::CR_REC_3, "CR_REC_3", R, IndexKind::F, 1, PREV,
     "F(R_k(G)) = F(R_(k-1)(G)) + (3k(k+1)+1) F(G) + 8m"},
    {FormulaId::CR_REC_4, "CR_REC_4", R, IndexKind::PI1, 1, PREV,
     "PI1(R_k(G)) = 4^m (1 + 1/k)^(2n) PI1(R_(k-1)(G))"},
    {FormulaId::CR_REC_5, "CR_REC_5", R, IndexKind::PI2, 1, PREV,
     "PI2(R_k(G)) = k^(m-n) (k+1)^(n(k+1)) PI2(G) PI2(R_(k-1)(G))"},
    {FormulaId::CR_REC_6, "CR_REC_6", R, IndexKind::HM, 1, PREV,
     "HM(R_k(G)) = HM(R_(k-1)(G)) + (2k-1) HM(G) + k(3k+1) F(G) + 8k M1(G) + 8m"},
    {FormulaId::CR_REC_7, "CR_REC_7", R, IndexKind::SDD, 1, PREV,
     "SDD(R_k(G)) = SDD(R_(k-1)(G)) + (1/2) M1(G) - 2n/(k(k+1))"},

    {FormulaId::CR_REG_1, "CR_REG_1", R, IndexKind::M1, 0, REG,
     "M1(R_k(G)) = nr^2 (k+1)^2 + 2nkr"},
    {FormulaId::CR_REG_2, "CR_REG_2", R, IndexKind::M2, 0, REG,
     "M2(R_k(G)) = 2k(k+1) nr^2 + (1/2) nr^3 (k+1)^2"},
    {FormulaId::CR_REG_3, "CR_REG_3", R, IndexKind::F, 0, REG,
     "F(R_k(G)) = nr^3 (k+1) + 4nkr"},
    {FormulaId::CR_REG_4, "CR_REG_4", R, IndexKind::PI1, 0, REG,
     "PI1(R_k(G)) = 2^(knr) r^n (k+1)^(2n)"},
    {FormulaId::CR_REG_5, "CR_REG_5", R, IndexKind::PI2, 1, REG,
     "PI2(R_k(G)) = 2^(knr) (r(k+1))^(nr(k+1))"},
    {FormulaId::CR_REG_6, "CR_REG_6", R, IndexKind::HM, 0, REG,
     "HM(R_k(G)) = 4nr^2 (k+1)^2 + nr^3 k(k+1)^2 + 4nr^2 k(k+1) + 4nrk"},
    {FormulaId::CR_REG_7, "CR_REG_7", R, IndexKind::SDD, 1, REG,
     "SDD(R_k(G)) = (1/2)nr^2 - 2n/(k(k+1)) + 2"},
}};

static_assert([] {
  for (int i = 0; i < kFormulaCount; ++i)
    if (kFormulaTable[static_cast<std::size_t>(i)].id != FormulaId(i)) return false;
  return true;
}());

}  // namespace detail

inline const FormulaInfo& formula_info(FormulaId id) {
  return detail::kFormulaTable[static_cast<std::size_t>(id)];
}

inline std::string_view formula_name(FormulaId id) { return formula_info(id).name; }

namespace detail {

inline std::optional<int> roman_item(const std::string& s) {
  static const std::pair<const char*, int> map[] = {
      {"I", 1}, {"II", 2}, {"III", 3}, {"IV", 4}, {"V", 5}, {"VI", 6}, {"VII", 7}};
  for (auto& [txt, val] : map)
    if (s == txt) return val;
  return std::nullopt;
}

}  // namespace detail

// Case-insensitive; '.' and '_' are interchangeable ("T2.14" == "T2_14");
// corollary items also accept roman numerals ("CS_REC_iv").
inline std::optional<FormulaId> parse_formula_id(std::string s) {
  for (auto& c : s) {
    c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (c == '.') c = '_';
  }
  auto us = s.rfind('_');
  if (us != std::string::npos && us + 1 < s.size()) {
    if (auto item = detail::roman_item(s.substr(us + 1)))
      s = s.substr(0, us + 1) + std::to_string(*item);
  }
  for (const auto& info : detail::kFormulaTable)
    if (s == info.name) return info.id;
  return std::nullopt;
}

// Comma-separated ids and inclusive ranges in catalog order; "all" selects
// everything. Duplicates are dropped, first occurrence wins.
inline std::vector<FormulaId> parse_formula_set(const std::string& spec) {
  std::vector<FormulaId> out;
  std::array<bool, kFormulaCount> seen{};
  auto push = [&](FormulaId id) {
    if (!seen[static_cast<std::size_t>(id)]) {
      seen[static_cast<std::size_t>(id)] = true;
      out.push_back(id);
    }
  };
  auto trim = [](std::string t) {
    auto b = t.find_first_not_of(" \t");
    auto e = t.find_last_not_of(" \t");
    return b == std::string::npos ? std::string{} : t.substr(b, e - b + 1);
  };
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    auto comma = spec.find(',', pos);
    std::string tok = trim(spec.substr(pos, comma == std::string::npos ? std::string::npos
                                                                       : comma - pos));
    pos = comma == std::string::npos ? spec.size() + 1 : comma + 1;
    if (tok.empty()) continue;
    std::string lower = tok;
    for (auto& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (lower == "all") {
      for (auto id : kAllFormulaIds) push(id);
      continue;
    }
    auto dots = tok.find("..");
    if (dots != std::string::npos) {
      auto lo = parse_formula_id(tok.substr(0, dots));
      auto hi = parse_formula_id(tok.substr(dots + 2));
      if (!lo || !hi)
        throw std::invalid_argument("unknown formula id in range '" + tok + "'");
      if (static_cast<int>(*lo) > static_cast<int>(*hi))
        throw std::invalid_argument("reversed formula range '" + tok + "'");
      for (int i = static_cast<int>(*lo); i <= static_cast<int>(*hi); ++i) push(FormulaId(i));
      continue;
    }
    auto id = parse_formula_id(tok);
    if (!id)
      throw std::invalid_argument("unknown formula id '" + tok +
                                  "' (see the catalog command for valid ids)");
    push(*id);
  }
  return out;
}

// Inputs for one formula evaluation. base is always the indices of G itself;
// prev carries the (k-1)-level derived graph's indices for recurrences;
// r is the common degree for the regular-graph corollaries.
struct FormulaContext {
  IndexVector base;
  int n = 0;
  int m = 0;
  int k = 0;
  std::optional<int> r;
  std::optional<IndexVector> prev;
};

// Evaluates the id's right-hand side exactly as printed. Throws on missing
// context inputs, on k below the id's k_min unless allow_below_k_min is set,
// and on genuinely undefined arithmetic (division by zero) regardless.
inline ExactNumber evaluate_formula(FormulaId id, const FormulaContext& ctx,
                                    bool allow_below_k_min = false) {
  const FormulaInfo& info = formula_info(id);
  const std::string name(info.name);
  if (ctx.k < 0) throw std::invalid_argument(name + ": k must be >= 0");
  if (ctx.k < info.k_min && !allow_below_k_min)
    throw std::invalid_argument(name + ": k=" + std::to_string(ctx.k) + " is below k_min=" +
                                std::to_string(info.k_min));
  if (info.inputs == FormulaInputs::regular && !ctx.r)
    throw std::invalid_argument(name + ": requires the common degree r of a regular graph");
  if (info.inputs == FormulaInputs::base_and_prev && !ctx.prev)
    throw std::invalid_argument(name + ": requires the (k-1)-level index vector");

  const long long n = ctx.n, m = ctx.m, k = ctx.k;
  const long long r = ctx.r ? *ctx.r : 0;
  const IndexVector& B = ctx.base;
  const IndexVector& P = ctx.prev ? *ctx.prev : B;
  const ExactNumber N(n), M(m), K(k), K1(k + 1), RR(r);

  switch (id) {
    case FormulaId::T2_1:
      return B.m1 + ExactNumber(4) * K * M;
    case FormulaId::T2_2:
      return ExactNumber(2) * B.m1 + ExactNumber(4 * (k - 1)) * M;
    case FormulaId::T2_3:
      return B.f + ExactNumber(8) * K * M;
    case FormulaId::T2_4:
      return pow(ExactNumber(4), k * m) * B.pi1;
    case FormulaId::T2_5:
      return pow(ExactNumber(4), k * m) * B.pi2;
    case FormulaId::T2_6:
      return B.f + ExactNumber(4) * B.m1 + ExactNumber(16) * K * M - ExactNumber(8) * M;
    case FormulaId::T2_7:
      return B.m1 / ExactNumber(2) + ExactNumber(2 * (k - 1)) * M + ExactNumber(2) * N;
    case FormulaId::T2_8:
      return K1 * K1 * B.m1 + ExactNumber(4) * K * M;
    case FormulaId::T2_9:
      return ExactNumber(2 * k * (k + 1)) * B.m1 + K1 * K1 * B.m2;
    case FormulaId::T2_10:
      return K1 * K1 * K1 * B.f + ExactNumber(8) * K * M;
    case FormulaId::T2_11:
      return pow(ExactNumber(4), k * m) * pow(K1, 2 * n) * B.pi1;
    case FormulaId::T2_12:
      return pow(ExactNumber(4), k * m) * pow(pow(K1, 2 * m) * B.pi1, k + 1);
    case FormulaId::T2_13:
      return K1 * K1 * B.hm + K * K1 * K1 * B.f + ExactNumber(4 * k * (k + 1)) * B.m1 +
             ExactNumber(8) * K * M;
    case FormulaId::T2_14:
      return B.sdd + K1 * B.m1 / ExactNumber(2) + ExactNumber(2) * N / K1;

    case FormulaId::CS_REC_1:
      return P.m1 + ExactNumber(4) * M;
    case FormulaId::CS_REC_2:
      return P.m2 + ExactNumber(4) * M;
    case FormulaId::CS_REC_3:
      return P.f + ExactNumber(8) * M;
    case FormulaId::CS_REC_4:
      return pow(ExactNumber(4), m) * P.pi1;
    case FormulaId::CS_REC_5:
      return pow(ExactNumber(4), m) * P.pi2;
    case FormulaId::CS_REC_6:
      return P.hm + ExactNumber(16) * M;
    case FormulaId::CS_REC_7:
      return P.sdd + ExactNumber(2) * M;

    case FormulaId::CS_REG_1:
      return N * RR * RR + ExactNumber(2 * k) * N * RR;
    case FormulaId::CS_REG_2:
      return ExactNumber(2) * N * RR * (RR + K - ExactNumber(1));
    case FormulaId::CS_REG_3:
      return N * RR * RR * RR + ExactNumber(4 * k) * N * RR;
    case FormulaId::CS_REG_4:
      return pow(ExactNumber(2), k * n * r) * pow(RR, 2 * n);
    case FormulaId::CS_REG_5:
      return pow(ExactNumber(2), n * k * r) * pow(RR, n * r);
    case FormulaId::CS_REG_6:
      return N * RR * (RR * RR + ExactNumber(4) * RR + ExactNumber(8 * k) - ExactNumber(4));
    case FormulaId::CS_REG_7:
      return N * RR * RR / ExactNumber(2) + N * RR * ExactNumber(k - 1) + ExactNumber(2) * N;

    case FormulaId::CR_REC_1:
      return P.m1 + ExactNumber(2 * k + 1) * B.m1 + ExactNumber(4) * M;
    case FormulaId::CR_REC_2:
      return P.m2 + ExactNumber(4 * k) * B.m1 + ExactNumber(2 * k + 1) * B.m2;
    case FormulaId::CR_REC_3:
      return P.f + ExactNumber(3 * k * (k + 1) + 1) * B.f + ExactNumber(8) * M;
    case FormulaId::CR_REC_4:
      return pow(ExactNumber(4), m) * pow(ExactNumber(1) + ExactNumber(1) / K, 2 * n) * P.pi1;
    case FormulaId::CR_REC_5:
      return pow(K, m - n) * pow(K1, n * (k + 1)) * B.pi2 * P.pi2;
    case FormulaId::CR_REC_6:
      return P.hm + ExactNumber(2 * k - 1) * B.hm + ExactNumber(k * (3 * k + 1)) * B.f +
             ExactNumber(8 * k) * B.m1 + ExactNumber(8) * M;
    case FormulaId::CR_REC_7:
      return P.sdd + B.m1 / ExactNumber(2) - ExactNumber(2) * N / ExactNumber(k * (k + 1));

    case FormulaId::CR_REG_1:
      return N * RR * RR * K1 * K1 + ExactNumber(2 * k) * N * RR;
    case FormulaId::CR_REG_2:
      return ExactNumber(2 * k * (k + 1)) * N * RR * RR +
             N * RR * RR * RR * K1 * K1 / ExactNumber(2);
    case FormulaId::CR_REG_3:
      return N * RR * RR * RR * K1 + ExactNumber(4 * k) * N * RR;
    case FormulaId::CR_REG_4:
      return pow(ExactNumber(2), k * n * r) * pow(RR, n) * pow(K1, 2 * n);
    case FormulaId::CR_REG_5:
      return pow(ExactNumber(2), k * n * r) * pow(RR * K1, n * r * (k + 1));
    case FormulaId::CR_REG_6:
      return ExactNumber(4) * N * RR * RR * K1 * K1 + N * RR * RR * RR * K * K1 * K1 +
             ExactNumber(4 * k) * N * RR * RR * K1 + ExactNumber(4 * k) * N * RR;
    case FormulaId::CR_REG_7:
      return N * RR * RR / ExactNumber(2) - ExactNumber(2) * N / ExactNumber(k * (k + 1)) +
             ExactNumber(2);
  }
  throw std::logic_error("evaluate_formula: bad id");
}

}  // namespace tix
