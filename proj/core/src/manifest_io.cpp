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

#include "posebench/manifest_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "posebench/error.hpp"

namespace posebench {
namespace {

using nlohmann::json;

std::string line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::string what = e.what();
    // Drop the library's "[json.exception.parse_error.101] parse error at ..." prefix.
    if (auto pos = what.find(": "); pos != std::string::npos) what = what.substr(pos + 2);
    throw ParseError("JSON syntax error at " + line_col(text, e.byte == 0 ? 0 : e.byte - 1) +
                     ": " + what);
  }
}

std::string index_path(const std::string& base, std::size_t i) {
  return base + "[" + std::to_string(i) + "]";
}

/// Accumulates issues while reading; field access helpers return nullopt on
/// a type mismatch after recording it.
class Reader {
 public:
  void error(Issue::Kind kind, std::string msg) { issues.push_back({kind, false, std::move(msg)}); }
  void warn(Issue::Kind kind, std::string msg) { issues.push_back({kind, true, std::move(msg)}); }

  const json* member(const json& obj, const char* key, const std::string& path, bool required) {
    auto it = obj.find(key);
    if (it == obj.end()) {
      if (required) error(Issue::Kind::kSyntax, path + "." + key + ": missing field");
      return nullptr;
    }
    return &*it;
  }

  std::optional<std::string> string_field(const json& obj, const char* key,
                                          const std::string& path, bool required = true) {
    const json* v = member(obj, key, path, required);
    if (!v) return std::nullopt;
    if (!v->is_string()) {
      error(Issue::Kind::kSyntax, path + "." + key + ": expected string");
      return std::nullopt;
    }
    return v->get<std::string>();
  }

  std::optional<double> number_field(const json& obj, const char* key, const std::string& path,
                                     bool required = true) {
    const json* v = member(obj, key, path, required);
    if (!v) return std::nullopt;
    if (!v->is_number()) {
      error(Issue::Kind::kSyntax, path + "." + key + ": expected number");
      return std::nullopt;
    }
    return v->get<double>();
  }

  std::optional<int> int_field(const json& obj, const char* key, const std::string& path) {
    const json* v = member(obj, key, path, true);
    if (!v) return std::nullopt;
    if (!v->is_number_integer()) {
      error(Issue::Kind::kSyntax, path + "." + key + ": expected integer");
      return std::nullopt;
    }
    return v->get<int>();
  }

  const json* array_field(const json& obj, const char* key, const std::string& path) {
    const json* v = member(obj, key, path, true);
    if (!v) return nullptr;
    if (!v->is_array()) {
      error(Issue::Kind::kSyntax, path + "." + key + ": expected array");
      return nullptr;
    }
    return v;
  }

  bool has_errors() const {
    return std::any_of(issues.begin(), issues.end(), [](const Issue& i) { return !i.warning; });
  }

  [[noreturn]] void throw_first_error() const {
    for (const Issue& i : issues) {
      if (i.warning) continue;
      if (i.kind == Issue::Kind::kSyntax) throw ParseError(i.message);
      throw ValidationError(i.message);
    }
    throw ValidationError("unknown validation failure");
  }

  std::vector<Issue> issues;
};

struct RawAnnotation {
  std::string frame_id;
  std::optional<std::string> role;
  Annotation annotation;
  std::string path;
};

std::optional<Annotation> read_keypoints(Reader& r, const json& arr, const std::string& path) {
  if (arr.size() != kNumKeypoints) {
    r.error(Issue::Kind::kSchema, path + ": expected " + std::to_string(kNumKeypoints) +
                                      " keypoint entries, got " + std::to_string(arr.size()));
    return std::nullopt;
  }
  Annotation a;
  bool ok = true;
  for (std::size_t k = 0; k < kNumKeypoints; ++k) {
    const json& e = arr[k];
    if (e.is_null()) continue;
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      r.error(Issue::Kind::kSyntax, index_path(path, k) + ": expected null or [x, y]");
      ok = false;
      continue;
    }
    a.keypoints[k] = Point{e[0].get<double>(), e[1].get<double>()};
  }
  if (!ok) return std::nullopt;
  return a;
}

void check_in_frame(Reader& r, const Annotation& a, const FrameRecord& f, const std::string& path) {
  for (std::size_t k = 0; k < kNumKeypoints; ++k) {
    const auto& p = a.keypoints[k];
    if (!p) continue;
    const double w = f.width;
    const double h = f.height;
    const std::string where = path + " (frame '" + f.id + "', " +
                              std::string(KeypointSchema::keypoint_names()[k]) + ")";
    if (p->x < -0.5 * w || p->x > 1.5 * w || p->y < -0.5 * h || p->y > 1.5 * h) {
      r.error(Issue::Kind::kRange, where + ": position outside [-0.5, 1.5] x frame size");
    } else if (p->x < 0.0 || p->x > w || p->y < 0.0 || p->y > h) {
      r.warn(Issue::Kind::kRange, where + ": position slightly outside the frame");
    }
  }
}

/// Parses and validates; returns the dataset only when no error was recorded.
std::optional<Dataset> read_manifest(Reader& r, const json& root) {
  if (!root.is_object()) {
    r.error(Issue::Kind::kSyntax, "manifest root must be an object");
    return std::nullopt;
  }

  if (const json* schema = r.array_field(root, "schema", "manifest")) {
    std::vector<std::string> names;
    bool typed = true;
    for (const auto& n : *schema) {
      if (!n.is_string()) {
        typed = false;
        break;
      }
      names.push_back(n.get<std::string>());
    }
    if (!typed) {
      r.error(Issue::Kind::kSyntax, "manifest.schema: expected array of strings");
    } else if (auto m = KeypointSchema::mismatch(names)) {
      r.error(Issue::Kind::kSchema, "schema mismatch: " + *m);
    }
  }

  double mm_bound = Dataset::kDefaultMmPerPixelBound;
  if (auto v = r.number_field(root, "mm_per_pixel_bound", "manifest", false)) {
    if (!(*v > 0.0)) {
      r.error(Issue::Kind::kRange, "manifest.mm_per_pixel_bound: must be > 0");
    } else {
      mm_bound = *v;
    }
  }

  std::map<std::string, FrameEntry> frames;
  if (const json* arr = r.array_field(root, "frames", "manifest")) {
    for (std::size_t i = 0; i < arr->size(); ++i) {
      const json& f = (*arr)[i];
      const std::string path = index_path("frames", i);
      if (!f.is_object()) {
        r.error(Issue::Kind::kSyntax, path + ": expected object");
        continue;
      }
      auto id = r.string_field(f, "id", path);
      auto subject = r.string_field(f, "subject", path);
      auto session = r.string_field(f, "session", path);
      auto view = r.string_field(f, "view", path);
      auto age = r.number_field(f, "age_days", path);
      auto width = r.int_field(f, "width", path);
      auto height = r.int_field(f, "height", path);
      if (!id || !subject || !session || !view || !age || !width || !height) continue;
      if (*width <= 0 || *height <= 0) {
        r.error(Issue::Kind::kRange, path + " (frame '" + *id + "'): width and height must be > 0");
        continue;
      }
      if (*age < 0.0) {
        r.error(Issue::Kind::kRange, path + " (frame '" + *id + "'): age_days must be >= 0");
        continue;
      }
      FrameRecord rec{*id, *subject, *session, View::parse(*view), *age, *width, *height};
      if (!frames.emplace(*id, FrameEntry{std::move(rec), {}, {}}).second) {
        r.error(Issue::Kind::kReference, path + ": duplicate frame id '" + *id + "'");
      }
    }
  }

  std::vector<RawAnnotation> raw;
  if (const json* arr = r.array_field(root, "annotations", "manifest")) {
    for (std::size_t i = 0; i < arr->size(); ++i) {
      const json& a = (*arr)[i];
      const std::string path = index_path("annotations", i);
      if (!a.is_object()) {
        r.error(Issue::Kind::kSyntax, path + ": expected object");
        continue;
      }
      auto frame_id = r.string_field(a, "frame_id", path);
      auto annotator = r.string_field(a, "annotator", path);
      auto role = r.string_field(a, "role", path, false);
      const json* kps = r.array_field(a, "keypoints", path);
      if (!frame_id || !annotator || !kps) continue;
      if (role && *role != "primary" && *role != "secondary") {
        r.error(Issue::Kind::kSyntax, path + ".role: expected \"primary\" or \"secondary\"");
        continue;
      }
      auto ann = read_keypoints(r, *kps, path + ".keypoints");
      if (!ann) continue;
      ann->annotator = *annotator;
      raw.push_back({*frame_id, role, std::move(*ann), path});
    }
  }

  // Resolve references and roles.
  std::map<std::string, std::vector<const RawAnnotation*>> by_frame;
  for (const auto& a : raw) {
    auto it = frames.find(a.frame_id);
    if (it == frames.end()) {
      r.error(Issue::Kind::kReference, a.path + ": unknown frame id '" + a.frame_id + "'");
      continue;
    }
    check_in_frame(r, a.annotation, it->second.record, a.path);
    by_frame[a.frame_id].push_back(&a);
  }
  for (auto& [id, entry] : frames) {
    auto it = by_frame.find(id);
    if (it == by_frame.end()) {
      r.error(Issue::Kind::kReference, "frame '" + id + "' has no annotation");
      continue;
    }
    const auto& list = it->second;
    if (list.size() > 2) {
      r.error(Issue::Kind::kReference, "frame '" + id + "' has " + std::to_string(list.size()) +
                                           " annotations; at most two are supported");
      continue;
    }
    const RawAnnotation* primary = nullptr;
    const RawAnnotation* secondary = nullptr;
    // Explicit roles first, then file order fills the remaining role.
    for (const auto* a : list) {
      if (a->role == "primary") {
        if (primary) r.error(Issue::Kind::kReference, "frame '" + id + "' has two primary annotations");
        primary = a;
      } else if (a->role == "secondary") {
        if (secondary) {
          r.error(Issue::Kind::kReference, "frame '" + id + "' has two secondary annotations");
        }
        secondary = a;
      }
    }
    for (const auto* a : list) {
      if (a->role) continue;
      if (!primary) {
        primary = a;
      } else if (!secondary) {
        secondary = a;
      } else {
        r.error(Issue::Kind::kReference, "frame '" + id + "' has conflicting annotation roles");
      }
    }
    if (!primary) {
      r.error(Issue::Kind::kReference, "frame '" + id + "' has no primary annotation");
      continue;
    }
    entry.primary = primary->annotation;
    if (secondary) entry.secondary = secondary->annotation;
  }

  if (r.has_errors()) return std::nullopt;
  std::vector<FrameEntry> entries;
  entries.reserve(frames.size());
  for (auto& [id, entry] : frames) entries.push_back(std::move(entry));
  return Dataset(std::move(entries), mm_bound);
}

json point_json(const Point& p) { return json::array({p.x, p.y}); }

json annotation_json(const FrameRecord& f, const Annotation& a, const char* role) {
  json kps = json::array();
  for (const auto& p : a.keypoints) kps.push_back(p ? point_json(*p) : json(nullptr));
  return json{{"frame_id", f.id}, {"annotator", a.annotator}, {"role", role}, {"keypoints", kps}};
}

}  // namespace

std::size_t ValidationReport::error_count() const {
  return static_cast<std::size_t>(
      std::count_if(issues.begin(), issues.end(), [](const Issue& i) { return !i.warning; }));
}

std::size_t ValidationReport::warning_count() const { return issues.size() - error_count(); }

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error reading '" + path.string() + "'");
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw IoError("cannot create directory '" + path.parent_path().string() + "'");
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw IoError("error writing '" + path.string() + "'");
}

ValidationReport validate_manifest_text(std::string_view text) {
  ValidationReport report;
  Reader r;
  try {
    json root = parse_json(text);
    report.dataset = read_manifest(r, root);
  } catch (const ParseError& e) {
    r.error(Issue::Kind::kSyntax, e.what());
  } catch (const ValidationError& e) {
    r.error(Issue::Kind::kRange, e.what());
  }
  report.issues = std::move(r.issues);
  return report;
}

ValidationReport validate_manifest_file(const std::filesystem::path& path) {
  return validate_manifest_text(read_text_file(path));
}

Dataset parse_manifest(std::string_view text, std::vector<std::string>* warnings) {
  json root = parse_json(text);
  Reader r;
  auto dataset = read_manifest(r, root);
  if (!dataset) r.throw_first_error();
  if (warnings) {
    for (const Issue& i : r.issues) {
      if (i.warning) warnings->push_back(i.message);
    }
  }
  return std::move(*dataset);
}

Dataset load_manifest(const std::filesystem::path& path, std::vector<std::string>* warnings) {
  return parse_manifest(read_text_file(path), warnings);
}

std::string emit_manifest(const Dataset& dataset) {
  json schema = json::array();
  for (auto n : KeypointSchema::keypoint_names()) schema.push_back(std::string(n));
  json frames = json::array();
  json annotations = json::array();
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    const FrameRecord& f = dataset.frame(i);
    frames.push_back(json{{"id", f.id},
                          {"subject", f.subject},
                          {"session", f.session},
                          {"view", f.view.label()},
                          {"age_days", f.age_days},
                          {"width", f.width},
                          {"height", f.height}});
    annotations.push_back(annotation_json(f, dataset.primary(i), "primary"));
    if (dataset.secondary(i)) {
      annotations.push_back(annotation_json(f, *dataset.secondary(i), "secondary"));
    }
  }
  json root = json::object();
  root["schema"] = std::move(schema);
  root["mm_per_pixel_bound"] = dataset.mm_per_pixel_bound();
  root["frames"] = std::move(frames);
  root["annotations"] = std::move(annotations);
  return root.dump(2) + "\n";
}

PredictionSet parse_predictions(std::string_view text, const Dataset& dataset,
                                std::string_view fallback_model) {
  if (std::all_of(text.begin(), text.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); })) {
    return PredictionSet::empty_for(std::string(fallback_model), dataset);
  }
  json root = parse_json(text);
  if (!root.is_object()) throw ParseError("predictions root must be an object");
  std::string model(fallback_model);
  if (auto it = root.find("model"); it != root.end()) {
    if (!it->is_string()) throw ParseError("predictions.model: expected string");
    model = it->get<std::string>();
  }
  std::vector<FramePredictions> frames(dataset.size());
  std::vector<bool> seen(dataset.size(), false);
  std::vector<std::string> unknown;

  auto fit = root.find("frames");
  if (fit == root.end()) throw ParseError("predictions.frames: missing field");
  if (!fit->is_array()) throw ParseError("predictions.frames: expected array");
  for (std::size_t i = 0; i < fit->size(); ++i) {
    const json& f = (*fit)[i];
    const std::string path = index_path("frames", i);
    if (!f.is_object()) throw ParseError(path + ": expected object");
    auto id_it = f.find("frame_id");
    if (id_it == f.end() || !id_it->is_string()) throw ParseError(path + ".frame_id: expected string");
    const std::string id = id_it->get<std::string>();
    auto idx = dataset.find(id);
    if (!idx) {
      unknown.push_back(id);
      continue;
    }
    if (seen[*idx]) throw ValidationError(path + ": duplicate frame id '" + id + "'");
    seen[*idx] = true;

    auto kp_it = f.find("keypoints");
    if (kp_it == f.end() || !kp_it->is_array()) throw ParseError(path + ".keypoints: expected array");
    if (kp_it->size() != kNumKeypoints) {
      throw ValidationError(path + ".keypoints: expected " + std::to_string(kNumKeypoints) +
                            " entries, got " + std::to_string(kp_it->size()));
    }
    for (std::size_t k = 0; k < kNumKeypoints; ++k) {
      const json& e = (*kp_it)[k];
      if (e.is_null()) continue;
      const bool shape_ok = e.is_array() && (e.size() == 2 || e.size() == 3) &&
                            std::all_of(e.begin(), e.end(), [](const json& v) { return v.is_number(); });
      if (!shape_ok) {
        throw ParseError(index_path(path + ".keypoints", k) + ": expected null, [x, y] or [x, y, c]");
      }
      KeypointPrediction p{{e[0].get<double>(), e[1].get<double>()}, std::nullopt};
      if (e.size() == 3) {
        const double c = e[2].get<double>();
        if (!(c >= 0.0 && c <= 1.0)) {
          throw ValidationError(index_path(path + ".keypoints", k) + " (frame '" + id +
                                "'): confidence " + e[2].dump() + " outside [0,1]");
        }
        p.confidence = c;
      }
      frames[*idx][k] = p;
    }
  }
  if (!unknown.empty()) {
    std::string list;
    for (std::size_t i = 0; i < unknown.size(); ++i) {
      if (i > 0) list += ", ";
      if (i == 20) {
        list += "... (" + std::to_string(unknown.size()) + " total)";
        break;
      }
      list += "'" + unknown[i] + "'";
    }
    throw ValidationError("predictions reference unknown frame ids: " + list);
  }
  return PredictionSet(std::move(model), dataset, std::move(frames));
}

PredictionSet load_predictions(const std::filesystem::path& path, const Dataset& dataset) {
  return parse_predictions(read_text_file(path), dataset, path.stem().string());
}

std::string emit_predictions(const PredictionSet& predictions, const Dataset& dataset) {
  require_aligned(dataset, predictions);
  json frames = json::array();
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    const auto& fp = predictions.frame(i);
    if (std::none_of(fp.begin(), fp.end(), [](const auto& s) { return s.has_value(); })) continue;
    json kps = json::array();
    for (const auto& s : fp) {
      if (!s) {
        kps.push_back(nullptr);
      } else if (s->confidence) {
        kps.push_back(json::array({s->position.x, s->position.y, *s->confidence}));
      } else {
        kps.push_back(point_json(s->position));
      }
    }
    frames.push_back(json{{"frame_id", dataset.frame(i).id}, {"keypoints", kps}});
  }
  json root = json::object();
  root["model"] = predictions.model();
  root["frames"] = std::move(frames);
  return root.dump(2) + "\n";
}

}  // namespace posebench
