#include "corfield/io/files.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "corfield/error.hpp"

namespace corfield::io {

using nlohmann::json;

namespace {

std::ifstream open_in(const std::string& path, std::ios_base::openmode mode =
                                                   std::ios_base::in) {
  std::ifstream in(path, mode);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return in;
}

std::ofstream open_out(const std::string& path, std::ios_base::openmode mode =
                                                    std::ios_base::out) {
  std::ofstream out(path, mode);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  return out;
}

Eigen::Matrix3d mat3_from(const json& arr, const std::string& what) {
  if (!arr.is_array() || arr.size() != 9) {
    throw IoError(what + " must be a row-major array of 9 numbers");
  }
  Eigen::Matrix3d m;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m(r, c) = arr[r * 3 + c].get<double>();
  return m;
}

json mat3_to(const Eigen::Matrix3d& m) {
  json arr = json::array();
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) arr.push_back(m(r, c));
  return arr;
}

}  // namespace

corres::CameraMap read_cameras(const std::string& path) {
  auto in = open_in(path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw IoError("camera file '" + path + "': " + e.what());
  }
  if (!doc.contains("cameras") || !doc["cameras"].is_array()) {
    throw IoError("camera file '" + path + "': missing 'cameras' array");
  }
  corres::CameraMap cameras;
  for (const auto& entry : doc["cameras"]) {
    const std::string name = entry.at("name").get<std::string>();
    Eigen::Vector3d t;
    const auto& tj = entry.at("translation");
    if (!tj.is_array() || tj.size() != 3) {
      throw IoError("camera '" + name + "': translation must have 3 numbers");
    }
    for (int i = 0; i < 3; ++i) t(i) = tj[i].get<double>();
    cameras.emplace(
        name,
        geometry::Camera(mat3_from(entry.at("intrinsics"), "intrinsics"),
                         mat3_from(entry.at("rotation"), "rotation"), t,
                         entry.at("width").get<int>(),
                         entry.at("height").get<int>()));
  }
  return cameras;
}

void write_cameras(const std::string& path, const corres::CameraMap& cameras) {
  json arr = json::array();
  for (const auto& [name, cam] : cameras) {
    json entry;
    entry["name"] = name;
    entry["intrinsics"] = mat3_to(cam.intrinsics());
    entry["rotation"] = mat3_to(cam.rotation());
    entry["translation"] = {cam.translation().x(), cam.translation().y(),
                            cam.translation().z()};
    entry["width"] = cam.width();
    entry["height"] = cam.height();
    arr.push_back(entry);
  }
  auto out = open_out(path);
  out << json{{"cameras", arr}}.dump(2) << "\n";
}

corres::CorrespondenceSet read_correspondences(const std::string& path) {
  auto in = open_in(path);
  corres::CorrespondenceSet set;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json rec;
    try {
      rec = json::parse(line);
      corres::Correspondence c;
      c.image_q = rec.at("image_q").get<std::string>();
      c.image_s = rec.at("image_s").get<std::string>();
      c.p_q = {rec.at("u_q").get<double>(), rec.at("v_q").get<double>()};
      c.p_s = {rec.at("u_s").get<double>(), rec.at("v_s").get<double>()};
      c.confidence = rec.at("confidence").get<double>();
      if (rec.contains("provenance")) {
        c.provenance =
            corres::provenance_from_name(rec["provenance"].get<std::string>());
      }
      corres::validate(c);
      set.push_back(std::move(c));
    } catch (const json::exception& e) {
      std::ostringstream os;
      os << path << ":" << line_no << ": bad correspondence record ("
         << e.what() << ")";
      throw IoError(os.str());
    } catch (const DomainError& e) {
      std::ostringstream os;
      os << path << ":" << line_no << ": " << e.what();
      throw IoError(os.str());
    }
  }
  return set;
}

void write_correspondences(const std::string& path,
                           const corres::CorrespondenceSet& set) {
  auto out = open_out(path);
  for (const auto& c : set) {
    json rec;
    rec["image_q"] = c.image_q;
    rec["image_s"] = c.image_s;
    rec["u_q"] = c.p_q.u;
    rec["v_q"] = c.p_q.v;
    rec["u_s"] = c.p_s.u;
    rec["v_s"] = c.p_s.v;
    rec["confidence"] = c.confidence;
    rec["provenance"] = corres::provenance_name(c.provenance);
    out << rec.dump() << "\n";
  }
}

void write_ply(const std::string& path,
               const std::vector<corres::CloudPoint>& points) {
  auto out = open_out(path, std::ios_base::out | std::ios_base::binary);
  out << "ply\n"
      << "format binary_little_endian 1.0\n"
      << "element vertex " << points.size() << "\n"
      << "property double x\n"
      << "property double y\n"
      << "property double z\n"
      << "property double confidence\n"
      << "end_header\n";
  for (const auto& p : points) {
    const double rec[4] = {p.position.x(), p.position.y(), p.position.z(),
                           p.confidence};
    out.write(reinterpret_cast<const char*>(rec), sizeof(rec));
  }
}

std::vector<corres::CloudPoint> read_ply(const std::string& path) {
  auto in = open_in(path, std::ios_base::in | std::ios_base::binary);
  std::string line;
  std::size_t count = 0;
  bool header_done = false;
  std::vector<std::string> props;
  while (std::getline(in, line)) {
    if (line.rfind("element vertex ", 0) == 0) {
      count = std::stoull(line.substr(15));
    } else if (line.rfind("property double ", 0) == 0) {
      props.push_back(line.substr(16));
    } else if (line == "end_header") {
      header_done = true;
      break;
    }
  }
  if (!header_done || props != std::vector<std::string>{"x", "y", "z",
                                                        "confidence"}) {
    throw IoError("'" + path + "' is not a cloud PLY written by this tool");
  }
  std::vector<corres::CloudPoint> points(count);
  for (auto& p : points) {
    double rec[4];
    in.read(reinterpret_cast<char*>(rec), sizeof(rec));
    if (!in) throw IoError("'" + path + "': truncated vertex data");
    p.position = Eigen::Vector3d(rec[0], rec[1], rec[2]);
    p.confidence = rec[3];
  }
  return points;
}

void write_filter_report(const std::string& path,
                         const corres::FilterReport& report) {
  json doc;
  doc["input_count"] = report.input_count;
  doc["after_projection_filter"] = report.after_projection_filter;
  doc["after_knn_filter"] = report.after_knn_filter;
  doc["survival_fraction"] = report.survival_fraction;
  doc["threshold_px"] = report.threshold_px;
  doc["knn_k"] = report.knn_k;
  doc["knn_std_multiplier"] = report.knn_std_multiplier;
  auto out = open_out(path);
  out << doc.dump(2) << "\n";
}

}  // namespace corfield::io
