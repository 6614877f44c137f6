#include "sawstrip/record_io.hpp"

#include <fstream>
#include <sstream>

#include "sawstrip/errors.hpp"

namespace sawstrip {
namespace {

template <class Coeff>
Json series_to_json(const TruncatedSeries<Coeff>& s) {
  Json arr = Json::array();
  for (const Coeff& c : s.coeffs()) arr.push_back(CoeffTraits<Coeff>::to_string(c));
  return arr;
}

template <class Coeff>
TruncatedSeries<Coeff> series_from_json(const Json& arr, int max_degree, int scale, const char* name) {
  if (!arr.is_array() || arr.size() != static_cast<std::size_t>(max_degree) + 1) {
    throw InputError(std::string("record field '") + name + "' must be an array of M+1 strings");
  }
  std::vector<Coeff> coeffs;
  coeffs.reserve(arr.size());
  for (const Json& v : arr) {
    if (!v.is_string()) throw InputError(std::string("record field '") + name + "' holds a non-string entry");
    coeffs.push_back(CoeffTraits<Coeff>::parse(v.get<std::string>()));
  }
  return TruncatedSeries<Coeff>(std::move(coeffs), scale);
}

template <class T>
T field(const Json& doc, const char* key) {
  if (!doc.contains(key)) throw InputError(std::string("record lacks field '") + key + "'");
  try {
    return doc.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("record field '") + key + "': " + e.what());
  }
}

}  // namespace

Json record_to_json(const GFRecord& r) {
  Json doc;
  doc["lattice"] = to_string(r.spec.lattice);
  doc["T"] = r.spec.width;
  doc["L"] = r.spec.half_length;
  doc["M"] = r.spec.max_degree;
  doc["precision"] = to_string(r.spec.precision);
  doc["normalization"] = r.meta.normalization;
  doc["scale_log2"] = scale_log2(r.A);
  doc["A"] = std::visit([](const auto& s) { return series_to_json(s); }, r.A);
  doc["B"] = std::visit([](const auto& s) { return series_to_json(s); }, r.B);
  doc["meta"] = {{"generator", r.meta.generator},
                 {"wall_seconds", r.meta.wall_seconds},
                 {"peak_states", r.meta.peak_states}};
  return doc;
}

GFRecord record_from_json(const Json& doc) {
  if (!doc.is_object()) throw InputError("record must be a JSON object");
  GFRecord r;
  try {
    r.spec.lattice = parse_lattice(field<std::string>(doc, "lattice"));
    r.spec.precision = parse_precision(field<std::string>(doc, "precision"));
  } catch (const SpecError& e) {
    throw InputError(e.what());
  }
  r.spec.width = field<int>(doc, "T");
  r.spec.half_length = field<int>(doc, "L");
  r.spec.max_degree = field<int>(doc, "M");
  if (r.spec.max_degree < 0) throw InputError("record has negative M");
  if (r.spec.half_length < r.spec.max_degree) throw InputError("record has L < M");
  r.meta.normalization = field<std::string>(doc, "normalization");
  const int scale = field<int>(doc, "scale_log2");
  const Json& a = doc.contains("A") ? doc.at("A") : throw InputError("record lacks field 'A'");
  const Json& b = doc.contains("B") ? doc.at("B") : throw InputError("record lacks field 'B'");
  const int m = r.spec.max_degree;
  switch (r.spec.precision) {
    case PrecisionMode::fast:
      r.A = series_from_json<double>(a, m, scale, "A");
      r.B = series_from_json<double>(b, m, scale, "B");
      break;
    case PrecisionMode::high:
      r.A = series_from_json<DoubleDouble>(a, m, scale, "A");
      r.B = series_from_json<DoubleDouble>(b, m, scale, "B");
      break;
    case PrecisionMode::exact:
      if (scale != 0) throw InputError("exact records cannot carry a coefficient scale");
      r.A = series_from_json<mpz_class>(a, m, scale, "A");
      r.B = series_from_json<mpz_class>(b, m, scale, "B");
      break;
  }
  if (doc.contains("meta") && doc.at("meta").is_object()) {
    const Json& meta = doc.at("meta");
    r.meta.generator = meta.value("generator", std::string());
    r.meta.wall_seconds = meta.value("wall_seconds", 0.0);
    r.meta.peak_states = meta.value("peak_states", std::size_t{0});
  }
  return r;
}

void write_record(const GFRecord& record, const std::filesystem::path& path) {
  write_text(path, record_to_json(record).dump(1) + "\n");
}

GFRecord read_record(const std::filesystem::path& path) {
  const std::string text = read_text(path);
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  }
  return record_from_json(doc);
}

std::string record_file_name(const StripSpec& spec) {
  return to_string(spec.lattice) + "_T" + std::to_string(spec.width) + "_M" + std::to_string(spec.max_degree) +
         ".json";
}

namespace {

bool needs_quotes(const std::string& s) { return s.find_first_of(",\"\n") != std::string::npos; }

std::string csv_field(const std::string& s) {
  if (!needs_quotes(s)) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(std::move(cur));
  return out;
}

constexpr std::string_view kConfigPrefix = "# config: ";

}  // namespace

std::string Report::to_csv() const {
  std::ostringstream out;
  out << kConfigPrefix << config.dump() << "\n";
  for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << csv_field(columns[i]);
  out << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
    out << "\n";
  }
  return out.str();
}

Report Report::parse_csv(std::string_view text) {
  Report r;
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line.rfind(kConfigPrefix, 0) != 0) {
    throw InputError("report does not start with an embedded '# config:' line");
  }
  try {
    r.config = Json::parse(line.substr(kConfigPrefix.size()));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("report config: ") + e.what());
  }
  if (std::getline(in, line)) r.columns = split_csv_line(line);
  while (std::getline(in, line)) {
    if (!line.empty()) r.rows.push_back(split_csv_line(line));
  }
  return r;
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open '" + path.string() + "' for writing");
  out << text;
  if (!out) throw InputError("write to '" + path.string() + "' failed");
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace sawstrip
