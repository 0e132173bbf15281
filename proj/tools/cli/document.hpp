#pragma once

#include <koszul/cube.hpp>
#include <koszul/gkoszul.hpp>
#include <koszul/matrix.hpp>
#include <koszul/ring.hpp>

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace koszul::cli {

/// Thrown for malformed documents and unresolved names (exit code 2).
class DocumentError : public std::runtime_error {
public:
  explicit DocumentError(const std::string& what) : std::runtime_error(what) {}
};

/// Parsed input document: one ring, named polynomials, matrices, cubes and
/// boundary families, plus default command parameters under "params".
/// Subsets are written as bitstrings with the leftmost character for
/// direction 1; boundary keys read "subset:direction".
struct Document {
  RingPtr ring;
  std::map<std::string, Polynomial> polynomials;
  std::map<std::string, RingMatrix> matrices;
  std::map<std::string, Cube> cubes;
  std::map<std::string, BoundaryFamily> families;
  nlohmann::json raw;

  /// A polynomial by name, or parsed from the text grammar when unnamed.
  Polynomial poly_ref(const std::string& text) const;
  const RingMatrix& matrix_ref(const std::string& name) const;
  const Cube& cube_ref(const std::string& name) const;
  const BoundaryFamily& family_ref(const std::string& name) const;
  std::vector<Polynomial> poly_list(const std::string& comma_separated) const;
};

Document parse_document(const nlohmann::json& j);

/// Command parameters: document "params" defaults overlaid by CLI flags.
struct Params {
  std::optional<std::string> sequence;  // comma-separated polynomial refs
  std::optional<std::string> weights;
  std::optional<std::string> ideal;
  std::optional<std::string> columns;
  std::optional<std::string> cube;
  std::optional<std::string> family;
  std::optional<std::string> module;
  std::optional<std::string> matrix;
  std::optional<std::string> f, g;
  std::optional<int> degree;
  std::optional<int> n;
  int degree_bound = 6;
  std::optional<std::uint64_t> seed;
};

Params params_from_document(const nlohmann::json& j);
nlohmann::json params_to_json(const Params& p);

}  // namespace koszul::cli
