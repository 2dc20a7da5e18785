#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace hydrosym {

inline const char* version() { return "0.1.0"; }

struct ReportItem {
  std::string id;
  std::string status;  // pass | fail | erratum | skipped
  std::string witness;
  double seconds = 0;
};

// JSON-lines report: one object per item (sorted by id) plus a trailing
// summary object. Exit code 0 iff no item failed; errata are counted
// separately and do not fail the run.
struct Report {
  std::string suite;
  std::uint64_t seed = 42;
  std::vector<ReportItem> items;

  void add(std::string id, std::string status, std::string witness = "",
           double seconds = 0);
  int count(const std::string& status) const;
  bool passed() const { return count("fail") == 0; }
  int exit_code() const { return passed() ? 0 : 1; }

  // with_timing is off by default so that default runs are byte-reproducible
  void emit_jsonl(std::ostream& os, bool with_timing = false) const;
  void merge(const Report& other);
};

std::string json_escape(const std::string& s);

}  // namespace hydrosym
