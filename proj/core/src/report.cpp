#include "schwarz/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "schwarz/error.hpp"

namespace schwarz::report {

Format parse_format(std::string_view name) {
  if (name == "jsonl") return Format::Jsonl;
  if (name == "csv") return Format::Csv;
  if (name == "text") return Format::Text;
  throw Error(ErrorKind::BadParams, "unknown format '" + std::string(name) + "' (jsonl, csv, text)");
}

nlohmann::json to_json(const suite::JobResult& r) {
  nlohmann::json j = verify::to_json(r.verdict);
  j.erase("tolerance");
  j["id"] = r.id;
  j["passed"] = r.passed;
  j["runtime_ms"] = r.runtime_ms;
  j["check"] = r.check;
  j["expect"] = r.expect;
  j["outcome"] = r.outcome;
  j["verdict_passed"] = r.verdict.passed;
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

namespace {

std::string sig3(double x) {
  if (std::isnan(x)) return "n/a";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

std::string csv_number(double x) {
  if (!std::isfinite(x)) return "";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void emit_csv(std::ostream& out, const std::vector<suite::JobResult>& results) {
  // Column set: every quantity name seen; complex quantities take two columns.
  std::set<std::string> real_cols;
  std::set<std::string> complex_cols;
  for (const auto& r : results) {
    for (const auto& [name, q] : r.verdict.quantities) {
      (std::holds_alternative<Complex>(q) ? complex_cols : real_cols).insert(name);
    }
  }
  std::set<std::string> all(real_cols);
  all.insert(complex_cols.begin(), complex_cols.end());
  out << "id,check,theorem_id,passed,outcome,margin";
  for (const auto& name : all) {
    if (complex_cols.count(name)) {
      out << ',' << csv_field(name + ".re") << ',' << csv_field(name + ".im");
    } else {
      out << ',' << csv_field(name);
    }
  }
  out << '\n';
  for (const auto& r : results) {
    out << csv_field(r.id) << ',' << csv_field(r.check) << ',' << csv_field(r.verdict.theorem_id) << ','
        << (r.passed ? "true" : "false") << ',' << csv_field(r.outcome) << ',' << csv_number(r.verdict.margin);
    for (const auto& name : all) {
      const auto q = r.verdict.get(name);
      const bool cplx = complex_cols.count(name) > 0;
      if (!q) {
        out << (cplx ? ",," : ",");
        continue;
      }
      if (const double* d = std::get_if<double>(&*q)) {
        out << ',' << csv_number(*d);
        if (cplx) out << ',' << csv_number(0.0);
      } else {
        const Complex c = std::get<Complex>(*q);
        out << ',' << csv_number(c.real()) << ',' << csv_number(c.imag());
      }
    }
    out << '\n';
  }
}

void emit_text(std::ostream& out, const std::vector<suite::JobResult>& results) {
  std::vector<const suite::JobResult*> order;
  for (const auto& r : results) order.push_back(&r);
  std::stable_partition(order.begin(), order.end(), [](const suite::JobResult* r) { return !r->passed; });
  std::size_t id_w = 2;
  std::size_t th_w = 7;
  for (const auto* r : order) {
    id_w = std::max(id_w, r->id.size());
    th_w = std::max(th_w, r->verdict.theorem_id.size());
  }
  std::size_t failed = 0;
  for (const auto* r : order) {
    if (!r->passed) ++failed;
    std::ostringstream line;
    line << (r->passed ? "PASS  " : "FAIL  ") << r->id << std::string(id_w - r->id.size() + 2, ' ')
         << r->verdict.theorem_id << std::string(th_w - r->verdict.theorem_id.size() + 2, ' ')
         << "margin=" << sig3(r->verdict.margin) << "  outcome=" << r->outcome;
    if (r->expect != "pass") line << " (expected " << r->expect << ")";
    if (!r->passed && !r->verdict.detail.empty()) line << "  " << r->verdict.detail;
    out << line.str() << '\n';
  }
  out << results.size() - failed << " passed, " << failed << " failed\n";
}

}  // namespace

void emit(std::ostream& out, const std::vector<suite::JobResult>& results, Format format) {
  switch (format) {
    case Format::Jsonl:
      for (const auto& r : results) out << to_json(r).dump() << '\n';
      break;
    case Format::Csv: emit_csv(out, results); break;
    case Format::Text: emit_text(out, results); break;
  }
}

std::string emit(const std::vector<suite::JobResult>& results, Format format) {
  std::ostringstream os;
  emit(os, results, format);
  return os.str();
}

}  // namespace schwarz::report
