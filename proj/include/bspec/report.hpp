#pragma once

#include <string>
#include <vector>

namespace bspec {

enum class Status { pass, fail, skipped };
std::string_view to_string(Status s);

struct CheckRecord {
  std::string suite;
  std::string law;
  std::string anchor;
  Status status = Status::pass;
  std::string witness;
  double elapsed_ms = 0;
};

struct Export {
  std::string name;
  std::vector<std::pair<std::string, std::string>> fields;
};

struct Report {
  std::vector<CheckRecord> checks;
  std::vector<Export> exports;

  void add(CheckRecord r) { checks.push_back(std::move(r)); }
  std::size_t count(Status s) const;
  bool ok() const { return count(Status::fail) == 0; }
  void append(const Report& o);
};

struct EmitOptions {
  bool color = false;
  bool elapsed = false;  // include timings (not byte-stable)
};

std::string emit_human(const Report& r, const EmitOptions& opt = {});
std::string emit_json(const Report& r, const EmitOptions& opt = {});
// BSPEC_COLOR=1|always|yes enables ANSI colour in human output.
bool color_from_env();

}  // namespace bspec
