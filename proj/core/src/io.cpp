#include "autorecon/io.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "autorecon/error.hpp"

namespace autorecon {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse_error, std::string("malformed JSON: ") + e.what());
  }
}

GroupSpec dims_from(const json& doc) {
  if (!doc.contains("dims") || !doc["dims"].is_array()) throw Error(ErrorKind::parse_error, "missing \"dims\" array");
  std::vector<std::int64_t> dims;
  for (const auto& d : doc["dims"]) {
    if (!d.is_number_integer()) throw Error(ErrorKind::parse_error, "dims must be integers");
    dims.push_back(d.get<std::int64_t>());
  }
  try {
    return GroupSpec(dims);
  } catch (const Error& e) {
    throw Error(ErrorKind::parse_error, e.what());
  }
}

Rational rational_from(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(Integer(v.get<std::int64_t>()));
  throw Error(ErrorKind::parse_error, "values must be rational strings or integers");
}

json element_to_json(const GroupElement& x) { return json(x.coords); }

GroupElement element_from(const GroupSpec& g, const json& v) {
  if (!v.is_array() || v.size() != g.dimension()) throw Error(ErrorKind::parse_error, "shift of the wrong length");
  std::vector<std::int64_t> coords;
  for (const auto& c : v) {
    if (!c.is_number_integer()) throw Error(ErrorKind::parse_error, "shift coordinates must be integers");
    coords.push_back(c.get<std::int64_t>());
  }
  return g.element(coords);
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

std::string grid_to_json(const RatFn& f) {
  json doc;
  doc["dims"] = f.group().dims();
  json values = json::array();
  for (const auto& v : f.values()) values.push_back(to_canonical_string(v));
  doc["values"] = std::move(values);
  return dump(doc);
}

RatFn grid_from_json(std::string_view text) {
  const json doc = parse_json(text);
  const GroupSpec g = dims_from(doc);
  if (!doc.contains("values") || !doc["values"].is_array()) throw Error(ErrorKind::parse_error, "missing \"values\" array");
  const auto& values = doc["values"];
  if (values.size() != static_cast<std::size_t>(g.order()))
    throw Error(ErrorKind::parse_error, "expected " + std::to_string(g.order()) + " values, got " +
                                            std::to_string(values.size()));
  RatFn f(g);
  for (std::size_t i = 0; i < values.size(); ++i) f.values()[i] = rational_from(values[i]);
  return f;
}

std::string grid_to_csv(const RatFn& f) {
  std::ostringstream os;
  const auto& dims = f.group().dims();
  for (std::size_t i = 0; i < dims.size(); ++i) os << (i ? "," : "") << dims[i];
  os << "\n";
  const std::size_t run = dims.empty() ? 1 : static_cast<std::size_t>(dims.back());
  const auto& values = f.values();
  for (std::size_t i = 0; i < values.size(); ++i)
    os << to_canonical_string(values[i]) << ((i + 1) % run ? "," : "\n");
  return os.str();
}

RatFn grid_from_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::int64_t> dims;
  std::vector<Rational> values;
  bool header = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      const auto b = cell.find_first_not_of(" \t"), e = cell.find_last_not_of(" \t");
      if (b == std::string::npos) throw Error(ErrorKind::parse_error, "empty CSV cell");
      cell = cell.substr(b, e - b + 1);
      if (header) {
        try {
          std::size_t used = 0;
          dims.push_back(std::stoll(cell, &used));
          if (used != cell.size()) throw std::invalid_argument(cell);
        } catch (const std::exception&) {
          throw Error(ErrorKind::parse_error, "bad dimension \"" + cell + "\"");
        }
      } else {
        values.push_back(parse_rational(cell));
      }
    }
    header = false;
  }
  if (dims.empty()) throw Error(ErrorKind::parse_error, "CSV grid without a dims header");
  GroupSpec g;
  try {
    g = GroupSpec(dims);
  } catch (const Error& e) {
    throw Error(ErrorKind::parse_error, e.what());
  }
  if (values.size() != static_cast<std::size_t>(g.order()))
    throw Error(ErrorKind::parse_error, "expected " + std::to_string(g.order()) + " values, got " +
                                            std::to_string(values.size()));
  return RatFn(g, std::move(values));
}

// ---------------------------------------------------------------------------

std::string moments_to_json(const MomentTable& table) {
  json doc;
  doc["dims"] = table.group().dims();
  doc["max_order"] = table.max_order();
  json entries = json::array();
  for (std::size_t n = 1; n <= table.max_order(); ++n)
    for (const auto& [shifts, v] : table.entries(n)) {
      json s = json::array();
      for (const auto& x : shifts) s.push_back(element_to_json(x));
      entries.push_back({{"shifts", std::move(s)}, {"value", to_canonical_string(v)}});
    }
  doc["entries"] = std::move(entries);
  return dump(doc);
}

MomentTable moments_from_json(std::string_view text) {
  const json doc = parse_json(text);
  const GroupSpec g = dims_from(doc);
  if (!doc.contains("max_order") || !doc["max_order"].is_number_unsigned() || doc["max_order"].get<std::size_t>() < 1)
    throw Error(ErrorKind::parse_error, "missing or invalid \"max_order\"");
  const auto k = doc["max_order"].get<std::size_t>();
  if (!doc.contains("entries") || !doc["entries"].is_array()) throw Error(ErrorKind::parse_error, "missing \"entries\"");
  MomentTable table(g, k);
  for (const auto& e : doc["entries"]) {
    if (!e.is_object() || !e.contains("shifts") || !e.contains("value") || !e["shifts"].is_array())
      throw Error(ErrorKind::parse_error, "entry needs \"shifts\" and \"value\"");
    MomentTable::Shifts shifts;
    for (const auto& s : e["shifts"]) shifts.push_back(element_from(g, s));
    if (shifts.size() + 1 > k) throw Error(ErrorKind::parse_error, "entry beyond max_order");
    table.set(std::move(shifts), rational_from(e["value"]));
  }
  return table;
}

std::string spectrum_to_json(const SpecFn& F) {
  json doc;
  doc["dims"] = F.group().dims();
  doc["conductor"] = F.context()->conductor();
  json values = json::array();
  const auto elems = F.group().elements();
  for (const auto& x : elems) {
    const CycNum& v = F(x);
    if (v.is_zero()) continue;
    json coeffs = json::array();
    for (const auto& c : v.coeffs()) coeffs.push_back(to_canonical_string(c));
    values.push_back({{"point", element_to_json(x)}, {"coeffs", std::move(coeffs)}});
  }
  doc["values"] = std::move(values);
  return dump(doc);
}

bool is_moment_document(std::string_view text) {
  const json doc = parse_json(text);
  return doc.is_object() && doc.contains("entries");
}

// ---------------------------------------------------------------------------

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::parse_error, "cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file_atomic(const std::filesystem::path& path, std::string_view content) {
  std::random_device rd;
  auto tmp = path;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::parse_error, "cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out.flush()) throw Error(ErrorKind::parse_error, "write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw Error(ErrorKind::parse_error, "cannot move output into place: " + ec.message());
  }
}

RatFn read_grid(const std::filesystem::path& path, GridFormat format) {
  const std::string text = read_text_file(path);
  return format == GridFormat::csv ? grid_from_csv(text) : grid_from_json(text);
}

void write_grid(const std::filesystem::path& path, const RatFn& f, GridFormat format) {
  write_text_file_atomic(path, format == GridFormat::csv ? grid_to_csv(f) : grid_to_json(f));
}

}  // namespace autorecon
