// Copyright 2026 The PlotKit Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "plotkit/cli.h"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "plotkit/config.h"
#include "plotkit/detector.h"
#include "plotkit/error.h"
#include "plotkit/evaluator.h"
#include "plotkit/json_io.h"
#include "plotkit/losscheck.h"
#include "plotkit/parallel.h"
#include "plotkit/proposals.h"
#include "plotkit/synth.h"
#include "plotkit/table.h"
#include "plotkit/targets.h"

namespace plotkit::cli {
namespace {

namespace fs = std::filesystem;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "plot_00001.png" -> "plot_00001"
std::string ImageStem(const fs::path& p) { return p.stem().string(); }

std::vector<fs::path> ListImages(const fs::path& dir) {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".png") {
      out.push_back(e.path());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> ParseThresholds(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad IOU threshold '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError("--iou needs at least one threshold");
  return out;
}

void Emit(const Json& json, const std::optional<fs::path>& path,
          std::ostream& out) {
  const std::string text = DumpJson(json);
  if (path) {
    WriteFileAtomic(*path, text);
  } else {
    out << text;
  }
}

PlotTable TableOrEmpty(const std::vector<Detection>& detections,
                       const std::optional<PlotLayout>& layout,
                       const RasterImage& image,
                       const std::vector<Annotation>& annotations) {
  if (!layout) return PlotTable();
  try {
    AnnotationTextSource text(annotations);
    const auto objects = ObjectsFromDetections(detections, image, text);
    return BuildTable(objects, *layout);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kInsufficientTicks ||
        e.code() == ErrorCode::kNoDataObjects ||
        e.code() == ErrorCode::kNonMonotonicScale) {
      return PlotTable();
    }
    throw;
  }
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Region proposals, detection, evaluation and plot-to-table "
               "extraction for synthetic plots.",
               "plotkit"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");
  std::optional<std::string> config_path;
  app.add_option("--config", config_path,
                 std::string("JSON config file (default: $") + kConfigEnvVar +
                     " if set, else built-in defaults)");

  const Config defaults;

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a synthetic plot corpus");
  int gen_count = 0;
  uint64_t gen_seed = 1;
  std::string gen_out;
  std::optional<int> gen_workers;
  gen->add_option("--count", gen_count, "Number of plots")->required();
  gen->add_option("--seed", gen_seed, "Base seed")->capture_default_str();
  gen->add_option("--out", gen_out, "Output directory")->required();
  gen->add_option("--workers", gen_workers,
                  "Worker threads (default: logical CPUs)");

  // propose
  auto* propose = app.add_subcommand("propose", "Extract region proposals");
  std::string propose_img;
  std::optional<std::string> propose_out;
  std::optional<int> threshold, min_side, max_proposals;
  propose->add_option("image", propose_img, "PNG image")->required();
  propose->add_option("--out", propose_out, "Output JSON (default: stdout)");
  propose->add_option("--threshold", threshold,
                      "Laplacian edge threshold (default " +
                          std::to_string(defaults.detector.proposals.threshold) +
                          ")");
  propose->add_option("--min-side", min_side,
                      "Minimum proposal side in px (default " +
                          std::to_string(defaults.detector.proposals.min_side_px) +
                          ")");
  propose->add_option(
      "--max-proposals", max_proposals,
      "Proposal cap (default " +
          std::to_string(defaults.detector.proposals.max_proposals) + ")");

  // detect
  auto* detect = app.add_subcommand("detect", "Detect plot objects");
  std::string detect_in;
  std::optional<std::string> detect_out, detect_text;
  std::optional<int> detect_workers;
  detect->add_option("input", detect_in, "PNG image or directory of PNGs")
      ->required();
  detect->add_option("--out", detect_out,
                     "Output directory for <stem>.det.json (required for a "
                     "directory input; default for one image: stdout)");
  detect->add_option("--text-from", detect_text,
                     "Directory with <stem>.ann.json; also writes "
                     "<stem>.table.json using that text");
  detect->add_option("--workers", detect_workers,
                     "Worker threads (default: logical CPUs)");

  // eval
  auto* eval = app.add_subcommand("eval", "Score detections against GT");
  std::string eval_pred, eval_gt;
  std::optional<std::string> eval_iou, eval_json;
  std::optional<double> eval_tol;
  std::optional<int> eval_workers;
  eval->add_option("--pred", eval_pred, "Prediction directory")->required();
  eval->add_option("--gt", eval_gt, "Ground-truth directory")->required();
  eval->add_option("--iou", eval_iou,
                   "Comma-separated IOU thresholds (default 0.9,0.75,0.5)");
  eval->add_option("--json", eval_json, "Also write the report as JSON");
  eval->add_option("--rel-tol", eval_tol,
                   "Table cell relative tolerance (default 0.02)");
  eval->add_option("--workers", eval_workers,
                   "Worker threads (default: logical CPUs)");

  // table
  auto* table = app.add_subcommand("table", "Convert a plot to a table");
  std::string table_img, table_ann;
  std::optional<std::string> table_out;
  bool table_from_gt = false;
  table->add_option("image", table_img, "PNG image")->required();
  table->add_option("--ann", table_ann, "Annotation JSON (text source)")
      ->required();
  table->add_option("--out", table_out, "Output JSON (default: stdout)");
  table->add_flag("--from-gt", table_from_gt,
                  "Use annotation boxes instead of detections (default off)");

  // losscheck
  auto* losscheck =
      app.add_subcommand("losscheck", "Verify loss values and gradients");
  std::string loss_kind = "all";
  double gamma = 2.0;
  int trials = 100;
  uint64_t loss_seed = 1;
  losscheck->add_option("--kind", loss_kind, "all or one loss name")
      ->capture_default_str();
  losscheck->add_option("--gamma", gamma, "Focal exponent")
      ->capture_default_str();
  losscheck->add_option("--trials", trials, "Random box pairs per kind")
      ->capture_default_str();
  losscheck->add_option("--seed", loss_seed, "Random seed")
      ->capture_default_str();

  // targets
  auto* targets =
      app.add_subcommand("targets", "Emit training targets for proposals");
  std::string targets_img, targets_ann;
  std::optional<std::string> targets_out;
  double window = kDefaultLinkWindowPx;
  targets->add_option("image", targets_img, "PNG image")->required();
  targets->add_option("--ann", targets_ann, "Annotation JSON")->required();
  targets->add_option("--out", targets_out, "Output JSON (default: stdout)");
  targets->add_option("--window", window, "Linking window in px")
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help()
                                          : app.get_subcommands()[0]->help());
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs[0]->help());
    return kExitUsage;
  }

  try {
    Config config = ResolveConfig(config_path
                                      ? std::optional<fs::path>(*config_path)
                                      : std::nullopt);

    if (gen->parsed()) {
      if (gen_workers) config.workers = *gen_workers;
      const int workers = EffectiveWorkers(config);
      const CorpusManifest m = GenCorpus(gen_count, gen_seed, gen_out, workers);
      out << "wrote " << m.entries.size() << " plots to " << gen_out << "\n";
      return kExitOk;
    }

    if (propose->parsed()) {
      ProposalConfig& p = config.detector.proposals;
      if (threshold) p.threshold = *threshold;
      if (min_side) p.min_side_px = *min_side;
      if (max_proposals) p.max_proposals = *max_proposals;
      ValidateConfig(config);
      const RasterImage image = LoadImage(propose_img);
      const auto t0 = std::chrono::steady_clock::now();
      const auto proposals = ProposeRegions(image, p);
      const double ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
      err << "proposals: " << proposals.size() << " in " << ms << " ms\n";
      Emit(ProposalsToJson(fs::path(propose_img).filename().string(),
                           proposals),
           propose_out ? std::optional<fs::path>(*propose_out) : std::nullopt,
           out);
      return kExitOk;
    }

    if (detect->parsed()) {
      if (detect_workers) config.workers = *detect_workers;
      ValidateConfig(config);
      const bool is_dir = fs::is_directory(detect_in);
      if (is_dir && !detect_out) {
        throw UsageError("detect on a directory needs --out");
      }
      const std::vector<fs::path> images =
          is_dir ? ListImages(detect_in) : std::vector<fs::path>{detect_in};
      if (detect_out) fs::create_directories(*detect_out);
      std::vector<size_t> counts(images.size(), 0);
      std::vector<std::string> outputs(images.size());
      ParallelFor(images.size(), EffectiveWorkers(config), [&](size_t i) {
        const RasterImage image = LoadImage(images[i]);
        const DetectResult r = Detect(image, config.detector);
        counts[i] = r.detections.size();
        DetectionFile file{images[i].filename().string(), r.detections,
                           r.warnings};
        const std::string stem = ImageStem(images[i]);
        if (detect_out) {
          WriteFileAtomic(fs::path(*detect_out) / (stem + ".det.json"),
                          DumpJson(ToJson(file)));
        } else {
          outputs[i] = DumpJson(ToJson(file));
        }
        if (detect_text && detect_out) {
          const AnnotationFile ann = AnnotationFileFromJson(
              ReadJsonFile(fs::path(*detect_text) / (stem + ".ann.json")));
          const PlotTable t =
              TableOrEmpty(r.detections, r.layout, image, ann.objects);
          WriteFileAtomic(fs::path(*detect_out) / (stem + ".table.json"),
                          DumpJson(ToJson(t)));
        }
      });
      for (const std::string& s : outputs) out << s;
      size_t total = 0;
      for (size_t c : counts) total += c;
      err << "detected " << total << " objects in " << images.size()
          << " images\n";
      return kExitOk;
    }

    if (eval->parsed()) {
      if (eval_workers) config.workers = *eval_workers;
      if (eval_iou) config.iou_thresholds = ParseThresholds(*eval_iou);
      if (eval_tol) config.table_rel_tol = *eval_tol;
      ValidateConfig(config);
      const EvalReport report =
          Evaluate(eval_pred, eval_gt, config.iou_thresholds,
                   EffectiveWorkers(config), config.table_rel_tol);
      out << FormatReport(report);
      if (eval_json) WriteFileAtomic(*eval_json, DumpJson(ToJson(report)));
      return kExitOk;
    }

    if (table->parsed()) {
      ValidateConfig(config);
      const RasterImage image = LoadImage(table_img);
      const AnnotationFile ann =
          AnnotationFileFromJson(ReadJsonFile(table_ann));
      PlotTable result;
      if (table_from_gt) {
        const EdgeMap edges =
            LaplacianEdges(image, config.detector.proposals.threshold);
        const PlotLayout layout = InferLayout(image, edges);
        result = BuildTable(ObjectsFromAnnotations(ann.objects, image), layout);
      } else {
        const DetectResult r = Detect(image, config.detector);
        if (!r.layout) {
          throw Error(ErrorCode::kLayoutNotFound, "no plot layout in image");
        }
        AnnotationTextSource text(ann.objects);
        result = BuildTable(ObjectsFromDetections(r.detections, image, text),
                            *r.layout);
      }
      Emit(ToJson(result),
           table_out ? std::optional<fs::path>(*table_out) : std::nullopt,
           out);
      return kExitOk;
    }

    if (losscheck->parsed()) {
      std::vector<LossType> kinds;
      if (loss_kind == "all") {
        kinds.assign(kAllLossTypes.begin(), kAllLossTypes.end());
      } else if (auto k = ParseLossType(loss_kind)) {
        kinds.push_back(*k);
      } else {
        throw UsageError("unknown loss kind '" + loss_kind + "'");
      }
      const LossCheckReport report =
          RunLossCheck(kinds, gamma, trials, loss_seed);
      out << FormatLossCheck(report);
      out << (report.ok() ? "losscheck: ok\n" : "losscheck: FAILED\n");
      return report.ok() ? kExitOk : kExitError;
    }

    if (targets->parsed()) {
      const RasterImage image = LoadImage(targets_img);
      const AnnotationFile ann =
          AnnotationFileFromJson(ReadJsonFile(targets_ann));
      const auto proposals =
          ProposeRegions(image, config.detector.proposals);
      std::vector<Box> boxes;
      for (const Proposal& p : proposals) boxes.push_back(p.box);
      const auto t = AssignTargets(boxes, ann.objects, window);
      Emit(TargetsToJson(fs::path(targets_img).filename().string(), proposals,
                         t),
           targets_out ? std::optional<fs::path>(*targets_out) : std::nullopt,
           out);
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kExitError;
  }
  return kExitUsage;
}

}  // namespace plotkit::cli
