#pragma once

#include "tix/verify.hpp"

#include <json.hpp>

#include <cctype>
#include <charconv>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tix {

using ordered_json = nlohmann::ordered_json;

enum class OutputFormat { json, csv, markdown };

inline std::optional<OutputFormat> parse_output_format(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  if (s == "markdown" || s == "md") return OutputFormat::markdown;
  return std::nullopt;
}

namespace detail {

// shortest round-trip form, locale-independent
inline std::string format_double(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline std::string csv_escape(const std::string& s) {
  bool needs = s.find_first_of(",\"\n\r") != std::string::npos;
  if (!needs) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline std::string md_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Verification records and audit reports

inline ordered_json record_to_json(const VerificationRecord& r) {
  ordered_json j;
  j["formula"] = std::string(formula_name(r.id));
  j["graph"] = r.graph_label;
  j["n"] = r.n;
  j["m"] = r.m;
  j["k"] = r.k;
  j["predicted"] = r.predicted.to_string();
  j["actual"] = r.actual.to_string();
  j["match"] = r.match;
  j["residual"] = r.residual.to_string();
  j["applicable"] = r.applicable;
  return j;
}

inline ordered_json report_to_json(const AuditReport& rep) {
  ordered_json suite;
  suite["seed"] = rep.suite.seed;
  suite["k_max"] = rep.suite.k_max;
  if (rep.suite.k_lo)
    suite["k_min_override"] = *rep.suite.k_lo;
  else
    suite["k_min_override"] = nullptr;
  ordered_json formulas = ordered_json::array();
  for (FormulaId id : rep.suite.formulas) formulas.push_back(std::string(formula_name(id)));
  suite["formulas"] = std::move(formulas);
  ordered_json graphs = ordered_json::array();
  for (const auto& gc : rep.suite.cases) {
    ordered_json g;
    g["label"] = gc.label;
    g["n"] = gc.graph.n;
    g["m"] = gc.graph.m();
    graphs.push_back(std::move(g));
  }
  suite["graphs"] = std::move(graphs);
  suite["notes"] = rep.suite.notes;

  ordered_json records = ordered_json::array();
  for (const auto& r : rep.records) records.push_back(record_to_json(r));

  ordered_json summary = ordered_json::array();
  for (const auto& s : rep.summaries) {
    ordered_json row;
    row["formula"] = std::string(formula_name(s.id));
    row["passes"] = s.passes;
    row["fails"] = s.fails;
    if (s.smallest_counterexample)
      row["smallest_counterexample"] = record_to_json(*s.smallest_counterexample);
    else
      row["smallest_counterexample"] = nullptr;
    summary.push_back(std::move(row));
  }

  ordered_json top;
  top["suite"] = std::move(suite);
  top["records"] = std::move(records);
  top["summary"] = std::move(summary);
  return top;
}

inline std::string render_report_json(const AuditReport& rep) {
  return report_to_json(rep).dump(2) + "\n";
}

inline std::string render_records_csv(const std::vector<VerificationRecord>& records) {
  std::string out = "formula,graph,n,m,k,predicted,actual,match,residual,applicable\n";
  for (const auto& r : records) {
    out += std::string(formula_name(r.id));
    out += ',';
    out += detail::csv_escape(r.graph_label);
    out += ',';
    out += std::to_string(r.n);
    out += ',';
    out += std::to_string(r.m);
    out += ',';
    out += std::to_string(r.k);
    out += ',';
    out += detail::csv_escape(r.predicted.to_string());
    out += ',';
    out += detail::csv_escape(r.actual.to_string());
    out += ',';
    out += r.match ? "true" : "false";
    out += ',';
    out += detail::csv_escape(r.residual.to_string());
    out += ',';
    out += r.applicable ? "true" : "false";
    out += '\n';
  }
  return out;
}

inline std::string render_report_csv(const AuditReport& rep) {
  return render_records_csv(rep.records);
}

inline std::string render_records_markdown(const std::vector<VerificationRecord>& records) {
  std::string out =
      "| formula | graph | n | m | k | predicted | actual | match | residual | applicable |\n";
  out += "|---|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& r : records) {
    out += "| ";
    out += std::string(formula_name(r.id));
    out += " | " + detail::md_escape(r.graph_label);
    out += " | " + std::to_string(r.n) + " | " + std::to_string(r.m) + " | " +
           std::to_string(r.k);
    out += " | " + r.predicted.to_string() + " | " + r.actual.to_string();
    out += std::string(" | ") + (r.match ? "true" : "false");
    out += " | " + r.residual.to_string();
    out += std::string(" | ") + (r.applicable ? "true" : "false") + " |\n";
  }
  return out;
}

inline std::string render_report_markdown(const AuditReport& rep) {
  std::string out = "## Audit summary\n\n";
  out += "| formula | passes | fails | smallest counterexample |\n";
  out += "|---|---|---|---|\n";
  for (const auto& s : rep.summaries) {
    out += "| ";
    out += std::string(formula_name(s.id));
    out += " | " + std::to_string(s.passes) + " | " + std::to_string(s.fails) + " | ";
    if (s.smallest_counterexample) {
      const auto& c = *s.smallest_counterexample;
      out += detail::md_escape(c.graph_label) + " at k=" + std::to_string(c.k) +
             " (predicted " + c.predicted.to_string() + ", actual " + c.actual.to_string() + ")";
    } else {
      out += "none";
    }
    out += " |\n";
  }
  if (!rep.suite.notes.empty()) {
    out += "\nNotes:\n";
    for (const auto& n : rep.suite.notes) out += "- " + n + "\n";
  }
  out += "\n## Records\n\n";
  out += render_records_markdown(rep.records);
  return out;
}

inline std::string render_report(const AuditReport& rep, OutputFormat f) {
  switch (f) {
    case OutputFormat::json: return render_report_json(rep);
    case OutputFormat::csv: return render_report_csv(rep);
    case OutputFormat::markdown: return render_report_markdown(rep);
  }
  throw std::logic_error("render_report: bad format");
}

// Plain-text summary for the terminal.
inline std::string render_summary_table(const AuditReport& rep) {
  std::string out;
  auto pad = [](std::string s, std::size_t w) {
    while (s.size() < w) s += ' ';
    return s;
  };
  out += pad("formula", 10) + pad("passes", 8) + pad("fails", 7) + "smallest counterexample\n";
  for (const auto& s : rep.summaries) {
    out += pad(std::string(formula_name(s.id)), 10);
    out += pad(std::to_string(s.passes), 8);
    out += pad(std::to_string(s.fails), 7);
    if (s.smallest_counterexample) {
      const auto& c = *s.smallest_counterexample;
      out += c.graph_label + " k=" + std::to_string(c.k) + " predicted=" +
             c.predicted.to_string() + " actual=" + c.actual.to_string();
    } else {
      out += "-";
    }
    out += '\n';
  }
  for (const auto& n : rep.suite.notes) out += "note: " + n + "\n";
  out += "records: " + std::to_string(rep.records.size()) +
         ", mismatches: " + std::to_string(rep.mismatches) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Index vectors

inline ordered_json indices_to_json(const Graph& g, const std::string& label) {
  IndexVector iv = compute_all(g);
  ordered_json j;
  j["graph"] = label;
  j["n"] = iv.n;
  j["m"] = iv.m;
  j["M1"] = iv.m1.to_string();
  j["M2"] = iv.m2.to_string();
  j["F"] = iv.f.to_string();
  j["PI1"] = iv.pi1.to_string();
  j["PI2"] = iv.pi2.to_string();
  j["HM"] = iv.hm.to_string();
  j["SDD"] = iv.sdd.to_fraction_string();
  j["SDD_approx"] = iv.sdd.to_double();
  if (iv.pi1.is_zero())
    j["PI1_ln"] = nullptr;
  else
    j["PI1_ln"] = log_value(iv.pi1);
  j["PI2_ln"] = log_value(iv.pi2);
  j["warnings"] = index_warnings(g);
  return j;
}

inline std::string render_indices(const Graph& g, const std::string& label, OutputFormat f) {
  if (f == OutputFormat::json) return indices_to_json(g, label).dump(2) + "\n";
  IndexVector iv = compute_all(g);
  std::vector<std::pair<std::string, std::string>> fields = {
      {"graph", label},
      {"n", std::to_string(iv.n)},
      {"m", std::to_string(iv.m)},
      {"M1", iv.m1.to_string()},
      {"M2", iv.m2.to_string()},
      {"F", iv.f.to_string()},
      {"PI1", iv.pi1.to_string()},
      {"PI2", iv.pi2.to_string()},
      {"HM", iv.hm.to_string()},
      {"SDD", iv.sdd.to_fraction_string()},
      {"SDD_approx", detail::format_double(iv.sdd.to_double())},
      {"PI1_ln", iv.pi1.is_zero() ? "" : detail::format_double(log_value(iv.pi1))},
      {"PI2_ln", detail::format_double(log_value(iv.pi2))},
  };
  if (f == OutputFormat::csv) {
    std::string head, row;
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) {
        head += ',';
        row += ',';
      }
      head += fields[i].first;
      row += detail::csv_escape(fields[i].second);
    }
    return head + "\n" + row + "\n";
  }
  std::string out = "| field | value |\n|---|---|\n";
  for (const auto& [k, v] : fields) out += "| " + k + " | " + detail::md_escape(v) + " |\n";
  return out;
}

// ---------------------------------------------------------------------------
// Formula catalog

inline std::string formula_inputs_name(FormulaInputs in) {
  switch (in) {
    case FormulaInputs::base: return "base";
    case FormulaInputs::base_and_prev: return "base+prev";
    case FormulaInputs::regular: return "regular";
  }
  throw std::logic_error("formula_inputs_name: bad inputs");
}

inline std::string render_catalog(OutputFormat f) {
  if (f == OutputFormat::json) {
    ordered_json arr = ordered_json::array();
    for (FormulaId id : kAllFormulaIds) {
      const FormulaInfo& info = formula_info(id);
      ordered_json row;
      row["id"] = std::string(info.name);
      row["transform"] = transform_symbol(info.transform);
      row["index"] = std::string(index_name(info.kind));
      row["k_min"] = info.k_min;
      row["inputs"] = formula_inputs_name(info.inputs);
      row["formula"] = std::string(info.expression);
      arr.push_back(std::move(row));
    }
    return arr.dump(2) + "\n";
  }
  if (f == OutputFormat::csv) {
    std::string out = "id,transform,index,k_min,inputs,formula\n";
    for (FormulaId id : kAllFormulaIds) {
      const FormulaInfo& info = formula_info(id);
      out += std::string(info.name) + ',' + transform_symbol(info.transform) + ',' +
             std::string(index_name(info.kind)) + ',' + std::to_string(info.k_min) + ',' +
             formula_inputs_name(info.inputs) + ',' +
             detail::csv_escape(std::string(info.expression)) + '\n';
    }
    return out;
  }
  std::string out = "| id | transform | index | k_min | inputs | formula |\n";
  out += "|---|---|---|---|---|---|\n";
  for (FormulaId id : kAllFormulaIds) {
    const FormulaInfo& info = formula_info(id);
    out += "| " + std::string(info.name) + " | " + transform_symbol(info.transform) + " | " +
           std::string(index_name(info.kind)) + " | " + std::to_string(info.k_min) + " | " +
           formula_inputs_name(info.inputs) + " | " +
           detail::md_escape(std::string(info.expression)) + " |\n";
  }
  return out;
}

}  // namespace tix
