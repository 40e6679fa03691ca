#pragma once

#include <string>
#include <vector>

namespace lsa {

/// Ordered fact sheet rendered either as plain text or as a flat JSON
/// document. Both renderings carry exactly the same facts in the same order;
/// values are strings, integers, booleans, or arrays of strings.
class Report {
 public:
  void add(const std::string& section, const std::string& key,
           const std::string& value);
  void add(const std::string& section, const std::string& key, const char* value);
  void add(const std::string& section, const std::string& key, long long value);
  void add(const std::string& section, const std::string& key, bool value);
  void add_list(const std::string& section, const std::string& key,
                const std::vector<std::string>& values);

  std::string render_text() const;
  /// Flat single-object document; keys are "<section>.<key>", plus a leading
  /// "schema" version field. Deterministic byte-for-byte for equal reports.
  std::string render_json() const;

 private:
  struct Entry {
    std::string key;
    int kind;  // 0 string, 1 integer, 2 boolean, 3 list
    std::string text;
    long long number = 0;
    bool flag = false;
    std::vector<std::string> list;
  };
  struct Section {
    std::string title;
    std::vector<Entry> entries;
  };

  Section& section(const std::string& title);
  std::vector<Section> sections_;
};

}  // namespace lsa
