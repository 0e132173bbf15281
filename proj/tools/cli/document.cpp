#include "cli/document.hpp"

#include <sstream>

namespace koszul::cli {

namespace {

RingMatrix parse_matrix(const RingPtr& ring, const nlohmann::json& rows,
                        const std::string& where) {
  if (!rows.is_array()) throw DocumentError(where + ": matrix must be an array of rows");
  std::vector<std::vector<Polynomial>> parsed;
  std::size_t cols = 0;
  for (const auto& row : rows) {
    if (!row.is_array()) throw DocumentError(where + ": matrix row must be an array");
    parsed.emplace_back();
    for (const auto& entry : row) {
      if (!entry.is_string()) throw DocumentError(where + ": matrix entry must be a string");
      try {
        parsed.back().push_back(Polynomial::parse(ring, entry.get<std::string>()));
      } catch (const std::invalid_argument& e) {
        throw DocumentError(where + ": " + e.what());
      }
    }
    if (parsed.size() == 1) cols = parsed.back().size();
    if (parsed.back().size() != cols) throw DocumentError(where + ": ragged matrix rows");
  }
  return RingMatrix::from_rows(ring, std::move(parsed));
}

std::pair<SubsetMask, int> parse_boundary_key(const std::string& key, int dims,
                                              const std::string& where) {
  auto colon = key.find(':');
  if (colon == std::string::npos)
    throw DocumentError(where + ": boundary key must read \"subset:direction\"");
  std::string bits = key.substr(0, colon);
  if (static_cast<int>(bits.size()) != dims)
    throw DocumentError(where + ": subset bitstring must have one character per direction");
  SubsetMask mask;
  try {
    mask = mask_from_bitstring(bits);
  } catch (const std::invalid_argument& e) {
    throw DocumentError(where + ": " + e.what());
  }
  int direction = 0;
  try {
    direction = std::stoi(key.substr(colon + 1));
  } catch (...) {
    throw DocumentError(where + ": bad direction in boundary key");
  }
  if (direction < 1 || direction > dims || !mask_contains(mask, direction))
    throw DocumentError(where + ": boundary key needs a direction inside the subset");
  return {mask, direction};
}

}  // namespace

Polynomial Document::poly_ref(const std::string& text) const {
  auto it = polynomials.find(text);
  if (it != polynomials.end()) return it->second;
  try {
    return Polynomial::parse(ring, text);
  } catch (const std::invalid_argument& e) {
    throw DocumentError("cannot resolve polynomial '" + text + "': " + e.what());
  }
}

const RingMatrix& Document::matrix_ref(const std::string& name) const {
  auto it = matrices.find(name);
  if (it == matrices.end()) throw DocumentError("unknown matrix '" + name + "'");
  return it->second;
}

const Cube& Document::cube_ref(const std::string& name) const {
  auto it = cubes.find(name);
  if (it == cubes.end()) throw DocumentError("unknown cube '" + name + "'");
  return it->second;
}

const BoundaryFamily& Document::family_ref(const std::string& name) const {
  auto it = families.find(name);
  if (it == families.end()) throw DocumentError("unknown boundary family '" + name + "'");
  return it->second;
}

std::vector<Polynomial> Document::poly_list(const std::string& comma_separated) const {
  std::vector<Polynomial> out;
  std::stringstream ss(comma_separated);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(poly_ref(item));
  }
  return out;
}

Document parse_document(const nlohmann::json& j) {
  if (!j.is_object()) throw DocumentError("document must be a JSON object");
  Document doc;
  doc.raw = j;

  if (!j.contains("ring") || !j["ring"].is_object())
    throw DocumentError("document needs a \"ring\" object");
  const auto& ring = j["ring"];
  if (!ring.contains("variables") || !ring["variables"].is_array())
    throw DocumentError("ring needs a \"variables\" array");
  std::vector<std::string> vars;
  for (const auto& v : ring["variables"]) {
    if (!v.is_string()) throw DocumentError("ring variables must be strings");
    vars.push_back(v.get<std::string>());
  }
  TermOrder order = TermOrder::degrevlex;
  if (ring.contains("order")) {
    std::string o = ring["order"].get<std::string>();
    if (o == "lex") {
      order = TermOrder::lex;
    } else if (o == "degrevlex") {
      order = TermOrder::degrevlex;
    } else {
      throw DocumentError("unknown term order '" + o + "'");
    }
  }
  try {
    doc.ring = PolyRing::make(std::move(vars), order);
  } catch (const std::invalid_argument& e) {
    throw DocumentError(e.what());
  }

  if (j.contains("polynomials")) {
    for (const auto& [name, value] : j["polynomials"].items()) {
      if (!value.is_string()) throw DocumentError("polynomial '" + name + "' must be a string");
      try {
        doc.polynomials.emplace(name, Polynomial::parse(doc.ring, value.get<std::string>()));
      } catch (const std::invalid_argument& e) {
        throw DocumentError("polynomial '" + name + "': " + e.what());
      }
    }
  }

  if (j.contains("matrices")) {
    for (const auto& [name, value] : j["matrices"].items())
      doc.matrices.emplace(name, parse_matrix(doc.ring, value, "matrix '" + name + "'"));
  }

  auto boundary_matrix = [&](const nlohmann::json& value,
                             const std::string& where) -> RingMatrix {
    if (value.is_string()) return doc.matrix_ref(value.get<std::string>());
    return parse_matrix(doc.ring, value, where);
  };

  if (j.contains("cubes")) {
    for (const auto& [name, value] : j["cubes"].items()) {
      std::string where = "cube '" + name + "'";
      if (!value.is_object() || !value.contains("dims") || !value.contains("ranks") ||
          !value.contains("boundaries"))
        throw DocumentError(where + ": need dims, ranks and boundaries");
      int dims = value["dims"].get<int>();
      if (dims < 0 || dims > 16) throw DocumentError(where + ": dims must be in 0..16");
      std::vector<int> ranks(std::size_t(1) << dims, -1);
      for (const auto& [bits, rank] : value["ranks"].items()) {
        if (static_cast<int>(bits.size()) != dims)
          throw DocumentError(where + ": rank key must have one character per direction");
        ranks[mask_from_bitstring(bits)] = rank.get<int>();
      }
      for (std::size_t i = 0; i < ranks.size(); ++i)
        if (ranks[i] < 0)
          throw DocumentError(where + ": missing rank for subset " +
                              mask_bitstring(static_cast<SubsetMask>(i), dims));
      std::map<std::pair<SubsetMask, int>, RingMatrix> boundaries;
      for (const auto& [key, mat] : value["boundaries"].items()) {
        auto parsed = parse_boundary_key(key, dims, where);
        boundaries.emplace(parsed, boundary_matrix(mat, where + " boundary " + key));
      }
      try {
        doc.cubes.emplace(name, Cube(doc.ring, dims, std::move(ranks), std::move(boundaries)));
      } catch (const std::invalid_argument& e) {
        throw DocumentError(where + ": " + e.what());
      }
    }
  }

  if (j.contains("families")) {
    for (const auto& [name, value] : j["families"].items()) {
      std::string where = "family '" + name + "'";
      if (!value.is_object() || !value.contains("directions") || !value.contains("rank") ||
          !value.contains("targets") || !value.contains("maps"))
        throw DocumentError(where + ": need directions, rank, targets and maps");
      BoundaryFamily family;
      family.ring = doc.ring;
      family.directions = value["directions"].get<int>();
      family.rank = value["rank"].get<std::size_t>();
      if (family.directions < 1 || family.directions > 16)
        throw DocumentError(where + ": directions must be in 1..16");
      for (const auto& t : value["targets"]) {
        if (!t.is_string()) throw DocumentError(where + ": targets must be strings");
        family.targets.push_back(doc.poly_ref(t.get<std::string>()));
      }
      for (const auto& [key, mat] : value["maps"].items()) {
        auto parsed = parse_boundary_key(key, family.directions, where);
        family.maps.emplace(parsed, boundary_matrix(mat, where + " map " + key));
      }
      doc.families.emplace(name, std::move(family));
    }
  }

  return doc;
}

Params params_from_document(const nlohmann::json& j) {
  Params p;
  if (!j.contains("params")) return p;
  const auto& params = j["params"];
  if (!params.is_object()) throw DocumentError("\"params\" must be an object");
  auto str = [&](const char* key) -> std::optional<std::string> {
    if (!params.contains(key)) return std::nullopt;
    return params[key].get<std::string>();
  };
  p.sequence = str("sequence");
  p.weights = str("weights");
  p.ideal = str("ideal");
  p.columns = str("columns");
  p.cube = str("cube");
  p.family = str("family");
  p.module = str("module");
  p.matrix = str("matrix");
  p.f = str("f");
  p.g = str("g");
  if (params.contains("degree")) p.degree = params["degree"].get<int>();
  if (params.contains("n")) p.n = params["n"].get<int>();
  if (params.contains("degree_bound")) p.degree_bound = params["degree_bound"].get<int>();
  if (params.contains("seed")) p.seed = params["seed"].get<std::uint64_t>();
  return p;
}

nlohmann::json params_to_json(const Params& p) {
  nlohmann::json out = nlohmann::json::object();
  auto put = [&](const char* key, const std::optional<std::string>& v) {
    if (v) out[key] = *v;
  };
  put("sequence", p.sequence);
  put("weights", p.weights);
  put("ideal", p.ideal);
  put("columns", p.columns);
  put("cube", p.cube);
  put("family", p.family);
  put("module", p.module);
  put("matrix", p.matrix);
  put("f", p.f);
  put("g", p.g);
  if (p.degree) out["degree"] = *p.degree;
  if (p.n) out["n"] = *p.n;
  out["degree_bound"] = p.degree_bound;
  if (p.seed) out["seed"] = *p.seed;
  return out;
}

}  // namespace koszul::cli
