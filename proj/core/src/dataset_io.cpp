#include "relieflab/dataset_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace relieflab {

std::filesystem::path sidecar_path(const std::filesystem::path& csv_path) {
  std::filesystem::path p = csv_path;
  p.replace_extension();
  p += ".meta.json";
  return p;
}

namespace {

std::string format_value(const Value& v) {
  if (v.is_missing()) return "";
  if (v.is_categoric()) return std::to_string(v.cat());
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v.num());
  if (ec != std::errc{}) throw std::runtime_error("dataset: double formatting failed");
  return std::string(buf, ptr);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cell);
      cell.clear();
    } else if (c != '\r') {
      cell += c;
    }
  }
  out.push_back(cell);
  return out;
}

}  // namespace

void write_dataset(const Dataset& ds, const std::filesystem::path& csv_path) {
  std::ofstream csv(csv_path);
  if (!csv) throw std::runtime_error("write_dataset: cannot open " + csv_path.string());
  for (int f = 0; f < ds.feature_count(); ++f) csv << ds.feature(f).name << ',';
  csv << "class\n";
  for (int i = 0; i < ds.instance_count(); ++i) {
    for (int f = 0; f < ds.feature_count(); ++f) csv << format_value(ds.value(i, f)) << ',';
    csv << ds.label(i) << '\n';
  }
  if (!csv.flush())
    throw std::runtime_error("write_dataset: write failed for " + csv_path.string());

  nlohmann::json features = nlohmann::json::array();
  for (int f = 0; f < ds.feature_count(); ++f) {
    const FeatureMeta& meta = ds.feature(f);
    nlohmann::json entry = {{"name", meta.name},
                            {"kind", meta.kind.is_numeric() ? "numeric" : "categoric"},
                            {"relevant", meta.relevant}};
    if (meta.kind.is_categoric()) entry["domainSize"] = meta.kind.domain_size;
    features.push_back(std::move(entry));
  }
  const nlohmann::json sidecar = {{"features", features}, {"classes", ds.class_count()}};
  const std::filesystem::path meta_path = sidecar_path(csv_path);
  std::ofstream meta(meta_path);
  if (!meta) throw std::runtime_error("write_dataset: cannot open " + meta_path.string());
  meta << sidecar.dump(2) << '\n';
  if (!meta.flush())
    throw std::runtime_error("write_dataset: write failed for " + meta_path.string());
}

Dataset read_dataset(const std::filesystem::path& csv_path) {
  const std::filesystem::path meta_path = sidecar_path(csv_path);
  std::ifstream meta(meta_path);
  if (!meta)
    throw std::runtime_error("read_dataset: missing sidecar " + meta_path.string());
  nlohmann::json sidecar;
  try {
    meta >> sidecar;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("read_dataset: bad sidecar " + meta_path.string() + ": " +
                             e.what());
  }

  std::vector<FeatureMeta> features;
  for (const auto& entry : sidecar.at("features")) {
    FeatureMeta fm;
    fm.name = entry.at("name").get<std::string>();
    const std::string kind = entry.at("kind").get<std::string>();
    if (kind == "numeric") {
      fm.kind = FeatureKind::numeric();
    } else if (kind == "categoric") {
      fm.kind = FeatureKind::categoric(entry.at("domainSize").get<int>());
    } else {
      throw std::runtime_error("read_dataset: unknown feature kind '" + kind + "'");
    }
    fm.relevant = entry.value("relevant", false);
    features.push_back(std::move(fm));
  }
  const int class_count = sidecar.at("classes").get<int>();

  std::ifstream csv(csv_path);
  if (!csv) throw std::runtime_error("read_dataset: cannot open " + csv_path.string());
  std::string line;
  if (!std::getline(csv, line))
    throw std::runtime_error("read_dataset: empty file " + csv_path.string());
  const auto header = split_csv_line(line);
  if (header.size() != features.size() + 1 || header.back() != "class")
    throw std::runtime_error("read_dataset: header does not match sidecar in " +
                             csv_path.string());

  std::vector<Value> values;
  std::vector<int> labels;
  std::size_t row_number = 1;
  while (std::getline(csv, line)) {
    ++row_number;
    if (line.empty()) continue;
    const auto cells = split_csv_line(line);
    if (cells.size() != features.size() + 1)
      throw std::runtime_error("read_dataset: row " + std::to_string(row_number) +
                               " has wrong arity");
    for (std::size_t f = 0; f < features.size(); ++f) {
      const std::string& cell = cells[f];
      if (cell.empty()) {
        values.push_back(Value::missing());
        continue;
      }
      if (features[f].kind.is_numeric()) {
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
        if (ec != std::errc{} || ptr != cell.data() + cell.size())
          throw std::runtime_error("read_dataset: bad numeric '" + cell + "' at row " +
                                   std::to_string(row_number));
        values.push_back(Value::num(v));
      } else {
        int v = 0;
        auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
        if (ec != std::errc{} || ptr != cell.data() + cell.size())
          throw std::runtime_error("read_dataset: bad symbol index '" + cell +
                                   "' at row " + std::to_string(row_number));
        values.push_back(Value::cat(v));
      }
    }
    int label = 0;
    const std::string& cls = cells.back();
    auto [ptr, ec] = std::from_chars(cls.data(), cls.data() + cls.size(), label);
    if (ec != std::errc{} || ptr != cls.data() + cls.size())
      throw std::runtime_error("read_dataset: bad class '" + cls + "' at row " +
                               std::to_string(row_number));
    labels.push_back(label);
  }

  return compute_stats(
      Dataset(std::move(features), std::move(values), std::move(labels), class_count));
}

}  // namespace relieflab
