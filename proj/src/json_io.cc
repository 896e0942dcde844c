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
#include "plotkit/json_io.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "plotkit/error.h"

namespace plotkit {
namespace {

void Indent(std::string& out, int depth) { out.append(2 * depth, ' '); }

void Dump(const Json& j, std::string& out, int depth) {
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      size_t i = 0;
      for (auto it = j.begin(); it != j.end(); ++it, ++i) {
        Indent(out, depth + 1);
        out += Json(it.key()).dump();
        out += ": ";
        Dump(it.value(), out, depth + 1);
        out += i + 1 < j.size() ? ",\n" : "\n";
      }
      Indent(out, depth);
      out += "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      const bool flat = std::all_of(j.begin(), j.end(), [](const Json& e) {
        return !e.is_object() && !e.is_array();
      });
      if (flat) {
        out += "[";
        for (size_t i = 0; i < j.size(); ++i) {
          if (i > 0) out += ", ";
          Dump(j[i], out, depth);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (size_t i = 0; i < j.size(); ++i) {
        Indent(out, depth + 1);
        Dump(j[i], out, depth + 1);
        out += i + 1 < j.size() ? ",\n" : "\n";
      }
      Indent(out, depth);
      out += "]";
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
        return;
      }
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.6f", v);
      // Avoid "-0.000000".
      if (std::string_view(buf) == "-0.000000") {
        out += "0.000000";
      } else {
        out += buf;
      }
      return;
    }
    default:
      out += j.dump();
  }
}

[[noreturn]] void SchemaError(const std::string& what) {
  throw Error(ErrorCode::kSchemaMismatch, what);
}

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    SchemaError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

std::string StringField(const Json& j, const char* key) {
  const Json& v = Field(j, key);
  if (!v.is_string()) SchemaError(std::string("'") + key + "' is not a string");
  return v.get<std::string>();
}

double NumberField(const Json& j, const char* key) {
  const Json& v = Field(j, key);
  if (!v.is_number()) SchemaError(std::string("'") + key + "' is not a number");
  return v.get<double>();
}

const Json& ArrayField(const Json& j, const char* key) {
  const Json& v = Field(j, key);
  if (!v.is_array()) SchemaError(std::string("'") + key + "' is not an array");
  return v;
}

ObjectClass ClassField(const Json& j) {
  const std::string name = StringField(j, "class");
  const auto cls = ParseClassName(name);
  if (!cls || *cls == ObjectClass::kBackground) {
    SchemaError("unknown class '" + name + "'");
  }
  return *cls;
}

}  // namespace

std::string DumpJson(const Json& json) {
  std::string out;
  Dump(json, out, 0);
  out += "\n";
  return out;
}

void WriteFileAtomic(const std::filesystem::path& path,
                     const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(ErrorCode::kIo, "cannot open " + tmp.string());
    f.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!f) throw Error(ErrorCode::kIo, "write failed: " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    throw Error(ErrorCode::kIo,
                "cannot rename to " + path.string() + ": " + ec.message());
  }
}

Json ReadJsonFile(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::kMissingFile, "cannot open " + path.string());
  std::stringstream ss;
  ss << f.rdbuf();
  Json j = Json::parse(ss.str(), nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) {
    SchemaError("invalid JSON in " + path.string());
  }
  return j;
}

Json BoxToJson(const Box& box) {
  return Json::array({box.x0(), box.y0(), box.x1(), box.y1()});
}

Box BoxFromJson(const Json& json) {
  if (!json.is_array() || json.size() != 4) {
    SchemaError("bbox must be an array of 4 numbers");
  }
  double v[4];
  for (size_t i = 0; i < 4; ++i) {
    if (!json[i].is_number()) SchemaError("bbox must hold numbers");
    v[i] = json[i].get<double>();
  }
  try {
    return Box(v[0], v[1], v[2], v[3]);
  } catch (const Error& e) {
    SchemaError(std::string("bad bbox: ") + e.what());
  }
}

Json ToJson(const AnnotationFile& file) {
  Json objects = Json::array();
  for (const Annotation& a : file.objects) {
    Json o;
    o["id"] = a.object_id;
    o["class"] = std::string(ClassName(a.cls));
    o["bbox"] = BoxToJson(a.box);
    if (a.text) o["text"] = *a.text;
    if (!a.words.empty()) {
      Json words = Json::array();
      for (const Box& w : a.words) words.push_back(BoxToJson(w));
      o["words"] = words;
    }
    objects.push_back(o);
  }
  Json j;
  j["image"] = file.image;
  j["width"] = file.width;
  j["height"] = file.height;
  j["objects"] = objects;
  return j;
}

AnnotationFile AnnotationFileFromJson(const Json& json) {
  AnnotationFile file;
  file.image = StringField(json, "image");
  file.width = static_cast<int>(NumberField(json, "width"));
  file.height = static_cast<int>(NumberField(json, "height"));
  for (const Json& o : ArrayField(json, "objects")) {
    Annotation a;
    a.object_id = static_cast<int>(NumberField(o, "id"));
    a.cls = ClassField(o);
    a.box = BoxFromJson(Field(o, "bbox"));
    if (o.contains("text")) a.text = StringField(o, "text");
    if (o.contains("words")) {
      for (const Json& w : ArrayField(o, "words")) {
        a.words.push_back(BoxFromJson(w));
      }
    }
    file.objects.push_back(std::move(a));
  }
  return file;
}

Json ToJson(const DetectionFile& file) {
  Json dets = Json::array();
  for (const Detection& d : file.detections) {
    Json o;
    o["class"] = std::string(ClassName(d.cls));
    o["score"] = d.score;
    o["bbox"] = BoxToJson(d.box);
    dets.push_back(o);
  }
  Json j;
  j["image"] = file.image;
  j["detections"] = dets;
  j["warnings"] = file.warnings;
  return j;
}

DetectionFile DetectionFileFromJson(const Json& json) {
  DetectionFile file;
  file.image = StringField(json, "image");
  for (const Json& o : ArrayField(json, "detections")) {
    Detection d;
    d.cls = ClassField(o);
    d.score = NumberField(o, "score");
    d.box = BoxFromJson(Field(o, "bbox"));
    file.detections.push_back(d);
  }
  if (json.contains("warnings")) {
    for (const Json& w : ArrayField(json, "warnings")) {
      if (w.is_string()) file.warnings.push_back(w.get<std::string>());
    }
  }
  return file;
}

Json ToJson(const PlotTable& table) {
  Json values = Json::array();
  for (const auto& row : table.values) {
    Json r = Json::array();
    for (const auto& v : row) {
      if (v) {
        r.push_back(*v);
      } else {
        r.push_back(nullptr);
      }
    }
    values.push_back(r);
  }
  Json j;
  j["rows"] = table.row_headers;
  j["cols"] = table.col_headers;
  j["values"] = values;
  return j;
}

PlotTable PlotTableFromJson(const Json& json) {
  std::vector<std::string> rows, cols;
  for (const Json& r : ArrayField(json, "rows")) {
    if (!r.is_string()) SchemaError("row header is not a string");
    rows.push_back(r.get<std::string>());
  }
  for (const Json& c : ArrayField(json, "cols")) {
    if (!c.is_string()) SchemaError("column header is not a string");
    cols.push_back(c.get<std::string>());
  }
  PlotTable table(rows, cols);
  const Json& values = ArrayField(json, "values");
  if (values.size() != rows.size()) SchemaError("values row count mismatch");
  for (size_t r = 0; r < rows.size(); ++r) {
    if (!values[r].is_array() || values[r].size() != cols.size()) {
      SchemaError("values column count mismatch");
    }
    for (size_t c = 0; c < cols.size(); ++c) {
      const Json& v = values[r][c];
      if (v.is_number()) {
        table.values[r][c] = v.get<double>();
      } else if (!v.is_null()) {
        SchemaError("table cell must be a number or null");
      }
    }
  }
  return table;
}

Json ToJson(const CorpusManifest& manifest) {
  Json entries = Json::array();
  for (const ManifestEntry& e : manifest.entries) {
    Json o;
    o["image"] = e.image;
    o["annotation"] = e.annotation;
    o["table"] = e.table;
    o["seed"] = e.seed;
    entries.push_back(o);
  }
  Json j;
  j["count"] = manifest.entries.size();
  j["entries"] = entries;
  return j;
}

Json ToJson(const EvalReport& report) {
  Json per_threshold = Json::array();
  for (size_t t = 0; t < report.thresholds.size(); ++t) {
    Json ap = Json::object();
    for (ObjectClass cls : kObjectClasses) {
      const auto& v = report.ap[t][static_cast<int>(cls)];
      ap[std::string(ClassName(cls))] = v ? Json(*v) : Json(nullptr);
    }
    Json o;
    o["iou"] = report.thresholds[t];
    o["map"] = report.mean_ap[t];
    o["ap"] = ap;
    per_threshold.push_back(o);
  }
  Json excluded = Json::array();
  for (ObjectClass cls : report.excluded_classes) {
    excluded.push_back(std::string(ClassName(cls)));
  }
  Json j;
  j["images"] = report.num_images;
  j["detections"] = report.num_detections;
  j["ground_truth"] = report.num_gt;
  j["thresholds"] = per_threshold;
  j["excluded_classes"] = excluded;
  if (report.table) {
    Json t;
    t["precision"] = report.table->precision;
    t["recall"] = report.table->recall;
    t["f1"] = report.table->f1;
    t["matched"] = report.table->matched;
    t["predicted_cells"] = report.table->predicted_cells;
    t["gt_cells"] = report.table->gt_cells;
    j["table"] = t;
  }
  return j;
}

Json ProposalsToJson(const std::string& image,
                     const std::vector<Proposal>& proposals) {
  Json list = Json::array();
  for (const Proposal& p : proposals) {
    Json o;
    o["contour"] = p.source_contour;
    o["bbox"] = BoxToJson(p.box);
    list.push_back(o);
  }
  Json j;
  j["image"] = image;
  j["count"] = proposals.size();
  j["proposals"] = list;
  return j;
}

Json TargetsToJson(const std::string& image,
                   const std::vector<Proposal>& proposals,
                   const std::vector<ProposalTargets>& targets) {
  Json list = Json::array();
  for (size_t i = 0; i < proposals.size(); ++i) {
    const ProposalTargets& t = targets[i];
    Json o;
    o["proposal"] = BoxToJson(proposals[i].box);
    o["class"] = std::string(ClassName(t.cls));
    o["parent"] = t.parent_id ? Json(*t.parent_id) : Json(nullptr);
    o["target"] = t.regression_box ? BoxToJson(*t.regression_box)
                                   : Json(nullptr);
    Json links = Json::object();
    for (Direction d : kAllDirections) {
      links[DirectionName(d)] = t.links[d];
    }
    o["links"] = links;
    list.push_back(o);
  }
  Json j;
  j["image"] = image;
  j["targets"] = list;
  return j;
}

}  // namespace plotkit
