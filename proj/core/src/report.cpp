// Copyright 2026 The posebench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "posebench/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace posebench {
namespace {

using ojson = nlohmann::ordered_json;

ojson opt(const std::optional<double>& v) { return v ? ojson(*v) : ojson(nullptr); }

ojson statistic_json(double v) {
  if (std::isfinite(v)) return v;
  return v > 0 ? "inf" : "-inf";
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> ratio_columns(std::span<const double> ratios) {
  std::vector<std::string> cols;
  for (double r : ratios) cols.push_back(PckRatios::column_name(r));
  return cols;
}

ojson row_json(const GroupStats& g, std::span<const double> ratios) {
  ojson j;
  j["group"] = g.group;
  j["view"] = g.view;
  j["n"] = g.n;
  j["mean_px"] = opt(g.mean_px);
  j["ci95_px"] = opt(g.ci95_px);
  j["mean_mm_upper_bound"] = opt(g.mean_mm_upper_bound);
  const auto cols = ratio_columns(ratios);
  for (std::size_t i = 0; i < cols.size(); ++i) j[cols[i]] = opt(g.pck[i]);
  j["annotated"] = g.annotated;
  j["unpredicted"] = g.unpredicted;
  j["pck_excluded"] = g.pck_excluded;
  return j;
}

std::string pad(std::string s, std::size_t width, bool right = false) {
  if (s.size() >= width) return s;
  const std::string fill(width - s.size(), ' ');
  return right ? fill + s : s + fill;
}

std::string fixed2(const std::optional<double>& v, double scale = 1.0) {
  if (!v) return "-";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", *v * scale);
  return buf;
}

ojson test_json(const TestResult& r) {
  ojson j;
  j["test"] = r.test;
  j["statistic"] = statistic_json(r.statistic);
  j["df"] = r.df;
  j["p"] = r.p;
  j["n"] = r.n;
  j["excluded_pairs"] = r.excluded_pairs;
  return j;
}

std::string test_csv_row(const TestResult& r, const std::string& ratio) {
  std::string stat;
  if (std::isfinite(r.statistic)) {
    stat = format_number(r.statistic);
  } else {
    stat = r.statistic > 0 ? "inf" : "-inf";
  }
  return r.test + "," + ratio + "," + stat + "," + format_number(r.df) + "," +
         format_number(r.p) + "," + std::to_string(r.n) + "," + std::to_string(r.excluded_pairs) +
         ",\n";
}

std::string error_csv_row(const std::string& test, const std::string& ratio, const std::string& error) {
  std::string quoted = "\"";
  for (char c : error) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
  return test + "," + ratio + ",,,,,," + quoted + "\"\n";
}

}  // namespace

std::string format_number(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string format_optional(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string();
}

std::string group_stats_csv(std::span<const StatsTable> tables) {
  std::string out = "group,view,n,mean_px,ci95_px,mean_mm_upper_bound";
  const std::span<const double> ratios =
      tables.empty() ? std::span<const double>() : std::span<const double>(tables.front().ratios);
  for (const auto& c : ratio_columns(ratios)) out += "," + c;
  out += ",annotated,unpredicted,pck_excluded\n";
  for (const auto& t : tables) {
    for (const auto& g : t.rows) {
      out += csv_field(g.group) + "," + csv_field(g.view) + "," + std::to_string(g.n) + "," +
             format_optional(g.mean_px) + "," + format_optional(g.ci95_px) + "," +
             format_optional(g.mean_mm_upper_bound);
      for (const auto& p : g.pck) out += "," + format_optional(p);
      out += "," + std::to_string(g.annotated) + "," + std::to_string(g.unpredicted) + "," +
             std::to_string(g.pck_excluded) + "\n";
    }
  }
  return out;
}

std::string group_stats_json(std::span<const StatsTable> tables) {
  ojson j;
  j["model"] = tables.empty() ? "" : tables.front().model;
  j["ratios"] = tables.empty() ? std::vector<double>{} : tables.front().ratios;
  ojson rows = ojson::array();
  for (const auto& t : tables) {
    for (const auto& g : t.rows) rows.push_back(row_json(g, t.ratios));
  }
  j["rows"] = std::move(rows);
  ojson exclusions = ojson::array();
  for (const auto& t : tables) {
    exclusions.push_back(ojson{{"view", t.view},
                               {"frames", t.frames},
                               {"torso_excluded_frames", t.torso_excluded_frames}});
  }
  j["frames"] = std::move(exclusions);
  return j.dump(2) + "\n";
}

std::string pck_summary_csv(std::span<const StatsTable> tables) {
  std::string out = "model,view,n,mean_px,ci95_px,mean_mm_upper_bound";
  const std::span<const double> ratios =
      tables.empty() ? std::span<const double>() : std::span<const double>(tables.front().ratios);
  for (const auto& c : ratio_columns(ratios)) out += "," + c;
  out += "\n";
  for (const auto& t : tables) {
    const GroupStats& g = t.overall();
    out += csv_field(t.model) + "," + csv_field(t.view) + "," + std::to_string(g.n) + "," +
           format_optional(g.mean_px) + "," + format_optional(g.ci95_px) + "," +
           format_optional(g.mean_mm_upper_bound);
    for (const auto& p : g.pck) out += "," + format_optional(p);
    out += "\n";
  }
  return out;
}

std::string pck_summary_json(std::span<const StatsTable> tables) {
  ojson rows = ojson::array();
  for (const auto& t : tables) {
    const GroupStats& g = t.overall();
    ojson j;
    j["model"] = t.model;
    j["view"] = t.view;
    j["n"] = g.n;
    j["mean_px"] = opt(g.mean_px);
    j["ci95_px"] = opt(g.ci95_px);
    j["mean_mm_upper_bound"] = opt(g.mean_mm_upper_bound);
    const auto cols = ratio_columns(t.ratios);
    for (std::size_t i = 0; i < cols.size(); ++i) j[cols[i]] = opt(g.pck[i]);
    rows.push_back(std::move(j));
  }
  return rows.dump(2) + "\n";
}

std::string pck_summary_text(std::span<const StatsTable> tables) {
  std::size_t model_w = 5;
  for (const auto& t : tables) model_w = std::max(model_w, t.model.size());
  std::vector<std::string> header = {"view"};
  const std::span<const double> ratios =
      tables.empty() ? std::span<const double>() : std::span<const double>(tables.front().ratios);
  for (double r : ratios) header.push_back("PCK@" + format_number(r) + " [%]");
  header.push_back("d_a [px]");
  header.push_back("<= mm");

  std::string out = pad("Model", model_w);
  for (const auto& h : header) out += " | " + pad(h, std::max<std::size_t>(h.size(), 9), true);
  out += "\n" + std::string(out.size() - 1, '-') + "\n";
  for (const auto& t : tables) {
    const GroupStats& g = t.overall();
    std::vector<std::string> cells = {t.view};
    for (const auto& p : g.pck) cells.push_back(fixed2(p, 100.0));
    cells.push_back(fixed2(g.mean_px));
    cells.push_back(fixed2(g.mean_mm_upper_bound));
    out += pad(t.model, model_w);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out += " | " + pad(cells[i], std::max<std::size_t>(header[i].size(), 9), true);
    }
    out += "\n";
  }
  out += "PCK in percent; <= mm is an upper bound on the real-world distance.\n";
  return out;
}

std::string curve_csv(const ReliabilityCurve& curve) {
  std::string out = "t,m,mean_px,retained_n\n";
  for (const auto& p : curve.points) {
    out += format_number(p.threshold) + "," + format_number(p.missing_ratio) + "," +
           format_optional(p.mean_px) + "," + std::to_string(p.retained) + "\n";
  }
  return out;
}

std::string curve_json(const ReliabilityCurve& curve) {
  ojson pts = ojson::array();
  for (const auto& p : curve.points) {
    pts.push_back(ojson{{"t", p.threshold},
                        {"m", p.missing_ratio},
                        {"mean_px", opt(p.mean_px)},
                        {"retained_n", p.retained}});
  }
  ojson j;
  j["model"] = curve.model;
  j["view"] = curve.view;
  j["annotated"] = curve.annotated;
  j["points"] = std::move(pts);
  return j.dump(2) + "\n";
}

std::string occlusion_json(const OcclusionStats& stats) {
  auto stratum = [](const MissingRate& r) {
    return ojson{{"rate", opt(r.rate())}, {"missing", r.missing}, {"slots", r.slots}, {"frames", r.frames}};
  };
  ojson groups = ojson::array();
  for (std::size_t g = 0; g < kNumGroups; ++g) {
    const auto& go = stats.groups[g];
    groups.push_back(ojson{{"group", std::string(KeypointSchema::group_names()[g])},
                           {"overall", stratum(go.overall)},
                           {"younger", stratum(go.younger)},
                           {"older", stratum(go.older)}});
  }
  ojson j;
  j["age_split_days"] = stats.age_split_days;
  j["groups"] = std::move(groups);
  return j.dump(2) + "\n";
}

std::string occlusion_text(const OcclusionStats& stats) {
  const std::string split = format_number(stats.age_split_days);
  std::string out = pad("group", 9) + " | " + pad("missing", 8, true) + " | " +
                    pad("age < " + split, 12, true) + " | " + pad("age >= " + split, 12, true) + "\n";
  for (std::size_t g = 0; g < kNumGroups; ++g) {
    const auto& go = stats.groups[g];
    auto pct = [](const MissingRate& r) { return r.rate() ? fixed2(r.rate(), 100.0) + "%" : "-"; };
    out += pad(std::string(KeypointSchema::group_names()[g]), 9) + " | " +
           pad(pct(go.overall), 8, true) + " | " + pad(pct(go.younger), 12, true) + " | " +
           pad(pct(go.older), 12, true) + "\n";
  }
  return out;
}

std::string agreement_json(const AgreementOutput& out) {
  ojson rows = ojson::array();
  for (const auto& t : out.tables) {
    for (const auto& g : t.rows) rows.push_back(row_json(g, t.ratios));
  }
  ojson j;
  j["double_annotated_frames"] = out.double_annotated_frames;
  j["annotator_missing_ratio"] = opt(out.missing_ratio);
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

std::string comparison_json(const ComparisonOutput& out) {
  ojson j;
  j["model_a"] = out.model_a;
  j["model_b"] = out.model_b;
  j["view"] = out.view;
  j["t_test"] = test_json(out.t_test);
  ojson ratios = ojson::array();
  for (const auto& rc : out.ratios) {
    const auto& c = rc.counts;
    ojson e;
    e["ratio"] = c.ratio;
    e["counts"] = ojson{{"a_correct", c.a_correct},
                        {"a_incorrect", c.a_incorrect},
                        {"b_correct", c.b_correct},
                        {"b_incorrect", c.b_incorrect},
                        {"only_a_correct", c.only_a_correct},
                        {"only_b_correct", c.only_b_correct}};
    if (rc.chi_squared) {
      e["chi_squared"] = test_json(*rc.chi_squared);
    } else {
      e["chi_squared"] = ojson{{"test", "pearson_chi_squared"}, {"error", rc.chi_squared_error}};
    }
    if (rc.mcnemar) {
      e["mcnemar"] = test_json(*rc.mcnemar);
    } else if (!rc.mcnemar_error.empty()) {
      e["mcnemar"] = ojson{{"test", "mcnemar"}, {"error", rc.mcnemar_error}};
    }
    ratios.push_back(std::move(e));
  }
  j["pck"] = std::move(ratios);
  return j.dump(2) + "\n";
}

std::string comparison_csv(const ComparisonOutput& out) {
  std::string s = "test,ratio,statistic,df,p,n,excluded_pairs,error\n";
  s += test_csv_row(out.t_test, "");
  for (const auto& rc : out.ratios) {
    const std::string ratio = format_number(rc.counts.ratio);
    if (rc.chi_squared) {
      s += test_csv_row(*rc.chi_squared, ratio);
    } else if (!rc.chi_squared_error.empty()) {
      s += error_csv_row("pearson_chi_squared", ratio, rc.chi_squared_error);
    }
    if (rc.mcnemar) {
      s += test_csv_row(*rc.mcnemar, ratio);
    } else if (!rc.mcnemar_error.empty()) {
      s += error_csv_row("mcnemar", ratio, rc.mcnemar_error);
    }
  }
  return s;
}

}  // namespace posebench
