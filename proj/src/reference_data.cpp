#include "sawstrip/reference_data.hpp"

#include <cstdlib>

#include "sawstrip/errors.hpp"
#include "sawstrip/record_io.hpp"

#ifndef SAWSTRIP_DATA_DIR
#define SAWSTRIP_DATA_DIR "data"
#endif

namespace sawstrip {
namespace {

DoubleDouble num(const Json& v) { return parse_decimal(v.get<std::string>()); }

std::map<LatticeKind, DoubleDouble> per_lattice(const Json& obj) {
  std::map<LatticeKind, DoubleDouble> out;
  for (const auto& [name, v] : obj.items()) out[parse_lattice(name)] = num(v);
  return out;
}

std::vector<ReferenceRow> rows(const Json& table) {
  std::vector<ReferenceRow> out;
  for (const Json& r : table.at("rows")) out.push_back({r.at(0).get<int>(), num(r.at(1)), num(r.at(2))});
  return out;
}

const ReferenceRow* find(const std::map<LatticeKind, std::vector<ReferenceRow>>& m, LatticeKind kind, int T) {
  const auto it = m.find(kind);
  if (it == m.end()) return nullptr;
  for (const ReferenceRow& r : it->second) {
    if (r.T == T) return &r;
  }
  return nullptr;
}

}  // namespace

const ReferenceRow* ReferenceData::critical_row(LatticeKind kind, int T) const {
  return find(critical_values, kind, T);
}

const ReferenceRow* ReferenceData::lambda_free_row(LatticeKind kind, int T) const {
  return find(lambda_free, kind, T);
}

std::filesystem::path reference_data_path() {
  if (const char* dir = std::getenv("SAWSTRIP_DATA_DIR"); dir && *dir) {
    return std::filesystem::path(dir) / "reference_tables.json";
  }
  return std::filesystem::path(SAWSTRIP_DATA_DIR) / "reference_tables.json";
}

ReferenceData load_reference_data(const std::filesystem::path& path) {
  ReferenceData d;
  try {
    const Json doc = Json::parse(read_text(path));
    d.version = doc.at("version").get<std::string>();
    const Json& c = doc.at("constants");
    d.cos_3pi_8 = num(c.at("cos_3pi_8"));
    d.zc = per_lattice(c.at("zc"));
    d.zc_extrapolated = per_lattice(c.at("zc_extrapolated"));
    d.combo_limit = per_lattice(c.at("combo_limit"));
    d.amplitude = per_lattice(c.at("amplitude"));
    d.critical_values[LatticeKind::square] = rows(doc.at("square_critical_values"));
    d.critical_values[LatticeKind::triangular] = rows(doc.at("triangular_critical_values"));
    d.lambda_free[LatticeKind::square] = rows(doc.at("square_lambda_free"));
    d.lambda_free[LatticeKind::triangular] = rows(doc.at("triangular_lambda_free"));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  }
  return d;
}

const ReferenceData& reference_data() {
  static const ReferenceData data = load_reference_data(reference_data_path());
  return data;
}

}  // namespace sawstrip
