#include <hydrosym/report.hpp>

#include <algorithm>
#include <cstdio>

namespace hydrosym {

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

void Report::add(std::string id, std::string status, std::string witness,
                 double seconds) {
  items.push_back({std::move(id), std::move(status), std::move(witness), seconds});
}

int Report::count(const std::string& status) const {
  int n = 0;
  for (const auto& i : items)
    if (i.status == status) ++n;
  return n;
}

void Report::emit_jsonl(std::ostream& os, bool with_timing) const {
  std::vector<ReportItem> sorted = items;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const ReportItem& a, const ReportItem& b) { return a.id < b.id; });
  for (const auto& item : sorted) {
    os << "{\"suite\":\"" << json_escape(suite) << "\",\"id\":\"" << json_escape(item.id)
       << "\",\"status\":\"" << item.status << "\"";
    if (!item.witness.empty()) os << ",\"witness\":\"" << json_escape(item.witness) << "\"";
    if (with_timing) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.6f", item.seconds);
      os << ",\"seconds\":" << buf;
    }
    os << "}\n";
  }
  os << "{\"suite\":\"" << json_escape(suite) << "\",\"summary\":{\"total\":" << items.size()
     << ",\"pass\":" << count("pass") << ",\"fail\":" << count("fail")
     << ",\"erratum\":" << count("erratum") << ",\"skipped\":" << count("skipped")
     << "},\"seed\":" << seed << ",\"version\":\"" << version() << "\"}\n";
}

void Report::merge(const Report& other) {
  for (const auto& i : other.items) {
    ReportItem item = i;
    item.id = other.suite + ":" + item.id;
    items.push_back(std::move(item));
  }
}

}  // namespace hydrosym
