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

#include "commands.hpp"

#include <cstdlib>
#include <map>
#include <ostream>

#include "CLI11.hpp"
#include "posebench/error.hpp"
#include "posebench/features.hpp"
#include "posebench/folds.hpp"
#include "posebench/kmeans.hpp"
#include "posebench/manifest_io.hpp"
#include "posebench/metrics.hpp"
#include "posebench/occlusion.hpp"
#include "posebench/reliability.hpp"
#include "posebench/report.hpp"
#include "posebench/stats.hpp"
#include "posebench/svg.hpp"

namespace posebench::cli {
namespace {

namespace fs = std::filesystem;

constexpr const char* kOutEnv = "POSEBENCH_OUT";
constexpr const char* kDefaultOut = "posebench_out";

Dataset load_dataset(const RunConfig& config, std::ostream& err) {
  if (config.manifest.empty()) throw DomainError("--manifest is required");
  std::vector<std::string> warnings;
  Dataset d = load_manifest(config.manifest, &warnings);
  for (const auto& w : warnings) err << "warning: " << w << "\n";
  return d;
}

std::vector<PredictionSet> load_all_predictions(const RunConfig& config, const Dataset& dataset) {
  std::vector<PredictionSet> sets;
  std::map<std::string, int> seen;
  for (const auto& p : config.predictions) {
    PredictionSet s = load_predictions(p, dataset);
    if (++seen[s.model()] > 1) {
      throw DomainError("model name '" + s.model() + "' appears in more than one prediction file");
    }
    sets.push_back(std::move(s));
  }
  return sets;
}

/// "all" first, then each view, or only the requested view.
std::vector<FrameFilter> view_filters(const RunConfig& config, const Dataset& dataset) {
  if (config.view) return {FrameFilter::for_view(*config.view)};
  std::vector<FrameFilter> filters = {FrameFilter::all()};
  for (const auto& v : view_labels(dataset)) filters.push_back(FrameFilter::for_view(v));
  return filters;
}

void write_if(const RunConfig& config, const std::string& format, const fs::path& path,
              const std::string& contents) {
  if (config.wants(format)) write_text_file(path, contents);
}

void require_seed(const RunConfig& config) {
  if (!config.seed) throw DomainError("--seed is required for reproducible output");
}

std::string p_string(double p) {
  if (p == 0.0) return "< 1e-300";
  return format_number(p);
}

}  // namespace

std::string safe_name(const std::string& name) {
  std::string out;
  for (char c : name) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                    c == '-' || c == '_' || c == '.';
    out += ok ? c : '_';
  }
  if (out.empty() || out == "." || out == "..") out = "model";
  return out;
}

int cmd_validate(const RunConfig& config, std::ostream& out, std::ostream&) {
  if (config.manifest.empty()) throw DomainError("--manifest is required");
  const ValidationReport report = validate_manifest_file(config.manifest);
  for (const Issue& i : report.issues) {
    out << (i.warning ? "warning: " : "error: ") << i.message << "\n";
  }
  out << report.error_count() << " errors, " << report.warning_count() << " warnings\n";
  if (!report.ok()) return kDomainError;

  const Dataset& d = *report.dataset;
  out << d.size() << " frames, " << subject_frame_counts(d).size() << " subjects, "
      << d.double_annotated_count() << " double-annotated\n\n";
  const OcclusionStats occ = occlusion_stats(d, config.age_split_days);
  out << "Missing annotations per group:\n" << occlusion_text(occ);
  if (!config.out_dir.empty()) write_if(config, "json", config.out_dir / "occlusion.json", occlusion_json(occ));
  return kOk;
}

int cmd_eval(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const Dataset dataset = load_dataset(config, err);
  if (config.predictions.empty()) throw DomainError("eval needs at least one --pred");
  const auto sets = load_all_predictions(config, dataset);
  const PckRatios ratios(config.ratios);
  const auto filters = view_filters(config, dataset);

  std::vector<StatsTable> summary;
  for (const auto& preds : sets) {
    std::vector<StatsTable> tables;
    for (const auto& f : filters) tables.push_back(aggregate(dataset, preds, f, ratios));
    const fs::path dir = config.out_dir / safe_name(preds.model());
    write_if(config, "csv", dir / "groups.csv", group_stats_csv(tables));
    write_if(config, "json", dir / "groups.json", group_stats_json(tables));
    write_if(config, "svg", dir / "groups.svg",
             group_bar_chart_svg(tables, "Mean error per keypoint group: " + preds.model()));
    for (const auto& t : tables) {
      if (t.torso_excluded_frames > 0) {
        err << "note: " << preds.model() << " (" << t.view << "): " << t.torso_excluded_frames
            << " frames without a torso excluded from PCK\n";
      }
    }
    summary.insert(summary.end(), tables.begin(), tables.end());
  }
  write_if(config, "csv", config.out_dir / "pck_table.csv", pck_summary_csv(summary));
  write_if(config, "json", config.out_dir / "pck_table.json", pck_summary_json(summary));
  const std::string text = pck_summary_text(summary);
  write_text_file(config.out_dir / "pck_table.txt", text);
  out << text;
  return kOk;
}

int cmd_compare(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const Dataset dataset = load_dataset(config, err);
  if (config.predictions.size() != 2) throw DomainError("compare needs exactly two --pred files");
  const auto sets = load_all_predictions(config, dataset);
  const PckRatios ratios(config.ratios);
  FrameFilter filter;
  if (config.view) filter.view = *config.view;

  ComparisonOutput cmp;
  cmp.model_a = sets[0].model();
  cmp.model_b = sets[1].model();
  cmp.view = filter.view_label();
  const PairedErrors pairs = paired_errors(dataset, sets[0], sets[1], filter);
  cmp.t_test = paired_t_test(pairs.a, pairs.b, pairs.excluded);
  for (double r : ratios.values()) {
    RatioComparison rc;
    rc.counts = pck_contingency(dataset, sets[0], sets[1], r, filter);
    const auto& c = rc.counts;
    try {
      rc.chi_squared = chi_squared_2x2({c.a_correct, c.a_incorrect, c.b_correct, c.b_incorrect});
    } catch (const DomainError& e) {
      rc.chi_squared_error = e.what();
    }
    if (config.mcnemar) {
      try {
        rc.mcnemar = mcnemar(c.only_a_correct, c.only_b_correct);
      } catch (const DomainError& e) {
        rc.mcnemar_error = e.what();
      }
    }
    cmp.ratios.push_back(std::move(rc));
  }

  out << cmp.model_a << " vs " << cmp.model_b << " (" << cmp.view << ")\n";
  out << "paired t-test on d_a: t = " << format_number(cmp.t_test.statistic)
      << ", df = " << format_number(cmp.t_test.df) << ", p = " << p_string(cmp.t_test.p)
      << ", pairs = " << cmp.t_test.n << ", excluded = " << cmp.t_test.excluded_pairs << "\n";
  for (const auto& rc : cmp.ratios) {
    const auto& c = rc.counts;
    out << "PCK@" << format_number(c.ratio) << ": correct " << c.a_correct << "/"
        << (c.a_correct + c.a_incorrect) << " vs " << c.b_correct << "/" << (c.b_correct + c.b_incorrect);
    if (rc.chi_squared) {
      out << "; chi2 = " << format_number(rc.chi_squared->statistic)
          << ", p = " << p_string(rc.chi_squared->p);
    } else {
      out << "; chi2 not defined: " << rc.chi_squared_error;
    }
    if (rc.mcnemar) {
      out << "; McNemar = " << format_number(rc.mcnemar->statistic) << ", p = " << p_string(rc.mcnemar->p);
    } else if (!rc.mcnemar_error.empty()) {
      out << "; McNemar not defined: " << rc.mcnemar_error;
    }
    out << "\n";
  }
  write_if(config, "json", config.out_dir / "compare.json", comparison_json(cmp));
  write_if(config, "csv", config.out_dir / "compare.csv", comparison_csv(cmp));
  return kOk;
}

int cmd_curve(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const Dataset dataset = load_dataset(config, err);
  if (config.predictions.empty()) throw DomainError("curve needs at least one --pred");
  const auto sets = load_all_predictions(config, dataset);
  for (const auto& s : sets) {
    if (!s.has_confidence()) {
      throw DomainError("prediction set '" + s.model() +
                        "' carries no confidence values; run 'eval' for error metrics instead");
    }
  }
  const auto filters = view_filters(config, dataset);

  std::vector<ReliabilityCurve> overall;
  std::vector<ReliabilityCurve> by_view;
  for (const auto& preds : sets) {
    const fs::path dir = config.out_dir / safe_name(preds.model());
    for (const auto& f : filters) {
      ReliabilityCurve c = threshold_curve(dataset, preds, config.curve_points, f);
      const std::string stem = "curve_" + safe_name(c.view);
      write_if(config, "csv", dir / (stem + ".csv"), curve_csv(c));
      write_if(config, "json", dir / (stem + ".json"), curve_json(c));
      const auto& first = c.points.front();
      out << preds.model() << " (" << c.view << "): " << c.points.size() << " points, m(min) = "
          << format_number(first.missing_ratio) << ", mean d_a = " << format_optional(first.mean_px)
          << " px\n";
      (f.view ? by_view : overall).push_back(std::move(c));
    }
  }
  if (!overall.empty()) {
    write_if(config, "svg", config.out_dir / "reliability.svg",
             reliability_plot_svg(overall, "Mean error vs. ratio of missing detections"));
  }
  if (!by_view.empty()) {
    write_if(config, "svg", config.out_dir / "reliability_by_view.svg",
             reliability_plot_svg(by_view, "Mean error vs. ratio of missing detections, by view"));
  }
  return kOk;
}

int cmd_agreement(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const Dataset dataset = load_dataset(config, err);
  const PckRatios ratios(config.ratios);
  AgreementOutput result;
  const auto filters = view_filters(config, dataset);
  for (std::size_t i = 0; i < filters.size(); ++i) {
    const bool headline = i == 0;  // "all", or the single requested view
    std::optional<AgreementReport> r;
    try {
      r = annotator_agreement(dataset, filters[i], ratios);
    } catch (const DomainError&) {
      // A view without double annotations is skipped in the split.
      if (headline) throw;
      continue;
    }
    if (headline) {
      result.double_annotated_frames = r->double_annotated_frames;
      result.missing_ratio = r->missing_ratio();
    }
    result.tables.push_back(std::move(r->table));
  }
  write_if(config, "csv", config.out_dir / "agreement.csv", group_stats_csv(result.tables));
  write_if(config, "json", config.out_dir / "agreement.json", agreement_json(result));
  write_if(config, "svg", config.out_dir / "agreement.svg",
           group_bar_chart_svg(result.tables, "Difference between two annotators"));

  out << result.double_annotated_frames << " double-annotated frames; annotator missing ratio "
      << format_optional(result.missing_ratio) << "\n";
  out << "group     view       n   mean_px  ci95_px\n";
  for (const auto& t : result.tables) {
    for (const auto& g : t.rows) {
      char line[160];
      std::snprintf(line, sizeof(line), "%-9s %-9s %5zu %9s %8s\n", g.group.c_str(), g.view.c_str(), g.n,
                    g.mean_px ? format_number(*g.mean_px).substr(0, 9).c_str() : "-",
                    g.ci95_px ? format_number(*g.ci95_px).substr(0, 8).c_str() : "-");
      out << line;
    }
  }
  return kOk;
}

int cmd_select_frames(const RunConfig& config, std::ostream& out, std::ostream&) {
  require_seed(config);
  if (config.features.empty()) throw DomainError("--features is required");
  const auto features = load_features(config.features);
  const auto ids = select_frames(features, config.k, *config.seed);
  std::string text;
  for (const auto& id : ids) text += id + "\n";
  write_text_file(config.out_dir / "selected_frames.txt", text);
  out << text;
  return kOk;
}

int cmd_split_folds(const RunConfig& config, std::ostream& out, std::ostream& err) {
  require_seed(config);
  const Dataset dataset = load_dataset(config, err);
  FoldAssignment folds = subject_exclusive_folds(subject_frame_counts(dataset), config.n_folds);
  if (config.validation_fraction > 0.0) {
    tag_validation(folds, dataset, config.validation_fraction, *config.seed);
  }
  const std::string json = to_json(folds);
  write_text_file(config.out_dir / "folds.json", json);
  for (std::size_t f = 0; f < folds.n_folds; ++f) {
    out << "fold " << f << ": " << folds.totals[f] << " frames, " << folds.subjects[f] << " subjects";
    if (!folds.validation.empty()) out << ", " << folds.validation[f].size() << " validation frames";
    out << "\n";
  }
  return kOk;
}

int run_command(const std::string& verb, const RunConfig& config, std::ostream& out,
                std::ostream& err) {
  try {
    if (verb == "validate") return cmd_validate(config, out, err);
    if (verb == "eval") return cmd_eval(config, out, err);
    if (verb == "compare") return cmd_compare(config, out, err);
    if (verb == "curve") return cmd_curve(config, out, err);
    if (verb == "agreement") return cmd_agreement(config, out, err);
    if (verb == "select-frames") return cmd_select_frames(config, out, err);
    if (verb == "split-folds") return cmd_split_folds(config, out, err);
    err << "error: unknown command '" << verb << "'\n";
    return kDomainError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"posebench: pose-estimation evaluation harness"};
  app.require_subcommand(1);
  RunConfig config;
  std::string out_dir;
  std::vector<std::string> formats;
  std::uint64_t seed = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", out_dir, "Output directory (default: $POSEBENCH_OUT or ./posebench_out)");
  };
  auto add_manifest = [&](CLI::App* sub) {
    sub->add_option("--manifest", config.manifest, "Dataset manifest (JSON)")->required();
  };
  auto add_eval_options = [&](CLI::App* sub) {
    sub->add_option("--ratios", config.ratios, "PCK ratios")->delimiter(',');
    sub->add_option("--view", config.view, "Restrict to one view label (e.g. top, diagonal)");
    sub->add_option("--format", formats, "Output formats: csv, json, svg")
        ->delimiter(',')
        ->check(CLI::IsMember({"csv", "json", "svg"}));
  };

  auto* validate = app.add_subcommand("validate", "Check a manifest and report occlusion statistics");
  add_manifest(validate);
  add_common(validate);
  validate->add_option("--age-split", config.age_split_days, "Age stratum boundary in days");
  validate->add_option("--format", formats, "Output formats")->delimiter(',');

  auto* eval = app.add_subcommand("eval", "Per-group error and PCK tables");
  add_manifest(eval);
  add_common(eval);
  add_eval_options(eval);
  eval->add_option("--pred", config.predictions, "Prediction file (repeatable)")->required();

  auto* compare = app.add_subcommand("compare", "Paired t-test and chi-squared between two models");
  add_manifest(compare);
  add_common(compare);
  add_eval_options(compare);
  compare->add_option("--pred", config.predictions, "Prediction file (exactly two)")->required();
  compare->add_flag("--mcnemar", config.mcnemar, "Also run McNemar's test on PCK outcomes");

  auto* curve = app.add_subcommand("curve", "Error vs. missing-ratio reliability curves");
  add_manifest(curve);
  add_common(curve);
  add_eval_options(curve);
  curve->add_option("--pred", config.predictions, "Prediction file (repeatable)")->required();
  curve->add_option("--curve-points", config.curve_points, "Maximum thresholds per curve")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1000000}));

  auto* agreement = app.add_subcommand("agreement", "Difference between two annotators");
  add_manifest(agreement);
  add_common(agreement);
  add_eval_options(agreement);

  auto* select = app.add_subcommand("select-frames", "k-means representative frame selection");
  add_common(select);
  select->add_option("--features", config.features, "Feature matrix (CSV or binary)")->required();
  select->add_option("--k", config.k, "Number of frames to select");
  auto* select_seed = select->add_option("--seed", seed, "Random seed");

  auto* split = app.add_subcommand("split-folds", "Subject-exclusive cross-validation folds");
  add_manifest(split);
  add_common(split);
  split->add_option("--folds", config.n_folds, "Number of folds");
  split->add_option("--validation-fraction", config.validation_fraction,
                    "Tag this fraction of each fold's training frames for validation");
  auto* split_seed = split->add_option("--seed", seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kDomainError;
  }

  CLI::App* sub = app.get_subcommands().front();
  if (select_seed->count() > 0 || split_seed->count() > 0) config.seed = seed;
  if (!formats.empty()) config.formats = {formats.begin(), formats.end()};
  if (!out_dir.empty()) {
    config.out_dir = out_dir;
  } else if (const char* env = std::getenv(kOutEnv); env && *env) {
    config.out_dir = env;
  } else {
    config.out_dir = kDefaultOut;
  }
  return run_command(sub->get_name(), config, out, err);
}

}  // namespace posebench::cli
