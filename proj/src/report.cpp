#include "lsa/report.hpp"

#include <json.hpp>

#include <sstream>

namespace lsa {

Report::Section& Report::section(const std::string& title) {
  for (Section& s : sections_)
    if (s.title == title) return s;
  sections_.push_back(Section{title, {}});
  return sections_.back();
}

void Report::add(const std::string& sec, const std::string& key,
                 const std::string& value) {
  section(sec).entries.push_back(Entry{key, 0, value, 0, false, {}});
}

void Report::add(const std::string& sec, const std::string& key,
                 const char* value) {
  add(sec, key, std::string(value));
}

void Report::add(const std::string& sec, const std::string& key,
                 long long value) {
  section(sec).entries.push_back(Entry{key, 1, {}, value, false, {}});
}

void Report::add(const std::string& sec, const std::string& key, bool value) {
  section(sec).entries.push_back(Entry{key, 2, {}, 0, value, {}});
}

void Report::add_list(const std::string& sec, const std::string& key,
                      const std::vector<std::string>& values) {
  section(sec).entries.push_back(Entry{key, 3, {}, 0, false, values});
}

std::string Report::render_text() const {
  std::ostringstream os;
  bool first = true;
  for (const Section& s : sections_) {
    if (!first) os << "\n";
    first = false;
    os << s.title << "\n";
    for (const Entry& e : s.entries) {
      switch (e.kind) {
        case 0: os << "  " << e.key << ": " << e.text << "\n"; break;
        case 1: os << "  " << e.key << ": " << e.number << "\n"; break;
        case 2: os << "  " << e.key << ": " << (e.flag ? "yes" : "no") << "\n"; break;
        case 3:
          os << "  " << e.key << ":";
          if (e.list.empty()) os << " (none)";
          os << "\n";
          for (const std::string& item : e.list) os << "    - " << item << "\n";
          break;
      }
    }
  }
  return os.str();
}

std::string Report::render_json() const {
  nlohmann::ordered_json doc;
  doc["schema"] = 1;
  for (const Section& s : sections_)
    for (const Entry& e : s.entries) {
      const std::string key = s.title + "." + e.key;
      switch (e.kind) {
        case 0: doc[key] = e.text; break;
        case 1: doc[key] = e.number; break;
        case 2: doc[key] = e.flag; break;
        case 3: doc[key] = e.list; break;
      }
    }
  return doc.dump(2) + "\n";
}

}  // namespace lsa
