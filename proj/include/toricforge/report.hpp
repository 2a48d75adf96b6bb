#pragma once

// Reports for the command-line verbs, as JSON and as Markdown.

#include "toricforge/catalog.hpp"
#include "toricforge/io.hpp"
#include "toricforge/strata.hpp"
#include "toricforge/verify.hpp"

#include <optional>
#include <string>

namespace toricforge {

struct Report {
  Json json;
  std::string markdown;
};

Report catalog_list_report();
Report catalog_show_report(const SolidEntry& e);
Report classify_report(const Instance& in);
Report delzant_report(const Instance& in);
// With a vertex: chart group and tau chart there (triple defaults to the
// first independent one). Without: the atlas summary.
Report charts_report(const Instance& in, std::optional<int> vertex, std::optional<IndexSet> triple);
Report link_report(const Instance& in, int vertex, const PlaneOverride& o);
Report stratification_json_report(const Instance& in);
Report checks_report(const std::string& title, const std::vector<std::pair<std::string, std::vector<Check>>>& groups);
Report criteria_report(const std::vector<CriterionResult>& results);

// "a|z_1|² − b|z_2|² = c"
std::string equation_md(const Vec& row, const Scalar& rhs);

}  // namespace toricforge
