#include "bspec/report.hpp"

#include <cstdlib>
#include <json.hpp>
#include <sstream>

namespace bspec {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "";
}

std::size_t Report::count(Status s) const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.status == s;
  return n;
}

void Report::append(const Report& o) {
  checks.insert(checks.end(), o.checks.begin(), o.checks.end());
  exports.insert(exports.end(), o.exports.begin(), o.exports.end());
}

std::string emit_human(const Report& r, const EmitOptions& opt) {
  std::ostringstream out;
  for (const auto& c : r.checks) {
    std::string tag = c.status == Status::pass ? "PASS" : c.status == Status::fail ? "FAIL" : "SKIP";
    if (opt.color) {
      const char* code = c.status == Status::pass ? "\x1b[32m" : c.status == Status::fail ? "\x1b[31m" : "\x1b[33m";
      tag = code + tag + "\x1b[0m";
    }
    out << tag << "  " << c.suite << " / " << c.law;
    if (!c.anchor.empty()) out << " [" << c.anchor << "]";
    if (!c.witness.empty()) out << ": " << c.witness;
    if (opt.elapsed) out << " (" << c.elapsed_ms << " ms)";
    out << "\n";
  }
  for (const auto& e : r.exports) {
    out << "export " << e.name << "\n";
    for (const auto& [k, v] : e.fields) out << "  " << k << ": " << v << "\n";
  }
  out << "summary: " << r.count(Status::pass) << " pass, " << r.count(Status::fail) << " fail, "
      << r.count(Status::skipped) << " skipped\n";
  return out.str();
}

std::string emit_json(const Report& r, const EmitOptions& opt) {
  using ordered = nlohmann::ordered_json;
  ordered j;
  j["schema"] = 1;
  j["checks"] = ordered::array();
  for (const auto& c : r.checks) {
    ordered rec;
    rec["suite"] = c.suite;
    rec["law"] = c.law;
    rec["anchor"] = c.anchor;
    rec["status"] = std::string(to_string(c.status));
    rec["witness"] = c.witness;
    if (opt.elapsed) rec["elapsed_ms"] = c.elapsed_ms;
    j["checks"].push_back(std::move(rec));
  }
  if (!r.exports.empty()) {
    j["exports"] = ordered::array();
    for (const auto& e : r.exports) {
      ordered x;
      x["name"] = e.name;
      ordered f = ordered::object();
      for (const auto& [k, v] : e.fields) f[k] = v;
      x["fields"] = std::move(f);
      j["exports"].push_back(std::move(x));
    }
  }
  ordered s;
  s["pass"] = r.count(Status::pass);
  s["fail"] = r.count(Status::fail);
  s["skipped"] = r.count(Status::skipped);
  j["summary"] = std::move(s);
  return j.dump();
}

bool color_from_env() {
  const char* v = std::getenv("BSPEC_COLOR");
  if (!v) return false;
  std::string s(v);
  return s == "1" || s == "always" || s == "yes";
}

}  // namespace bspec
