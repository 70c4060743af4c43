#ifndef MULTIARITY_REPORT_HPP
#define MULTIARITY_REPORT_HPP

#include <string>
#include <vector>

namespace multiarity {

// One finding of a law checker. For violations, `detail` quotes the two
// sides of the violated equation verbatim as term names.
struct ReportEntry {
  std::string law;
  std::string instance;
  std::string detail;
};

// Aggregated result of a validation run. An instance is "checked" when all
// table entries it needs are present, "skipped" otherwise (truncation
// gaps); gap entries record what was missing where that is informative.
struct Report {
  std::vector<ReportEntry> violations;
  std::vector<ReportEntry> gaps;
  std::vector<ReportEntry> infos;
  long checked = 0;
  long skipped = 0;

  bool pass() const { return violations.empty(); }

  std::string status() const {
    if (!violations.empty()) return "fail";
    if (!gaps.empty()) return "coverage-gap";
    return "pass";
  }

  void merge(const Report& o) {
    violations.insert(violations.end(), o.violations.begin(),
                      o.violations.end());
    gaps.insert(gaps.end(), o.gaps.begin(), o.gaps.end());
    infos.insert(infos.end(), o.infos.begin(), o.infos.end());
    checked += o.checked;
    skipped += o.skipped;
  }

  void violation(std::string law, std::string instance, std::string detail) {
    violations.push_back({std::move(law), std::move(instance),
                          std::move(detail)});
  }
  void gap(std::string law, std::string instance, std::string detail) {
    gaps.push_back({std::move(law), std::move(instance), std::move(detail)});
  }
  void info(std::string law, std::string instance, std::string detail) {
    infos.push_back({std::move(law), std::move(instance), std::move(detail)});
  }
};

}  // namespace multiarity

#endif
