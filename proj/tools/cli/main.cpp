#include "cli/commands.hpp"
#include "cli/document.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw koszul::cli::DocumentError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Koszul cubes, generalized Koszul resolutions and weight-two certificates"};
  app.require_subcommand(1);

  std::string document_path = "-";
  bool json_output = false;
  struct Flags {
    std::string sequence, weights, ideal, columns, cube, family, module, matrix, f, g;
    int degree = 0, n = 0, degree_bound = 6;
    std::uint64_t seed = 0;
  } flags;

  std::map<std::string, CLI::App*> subs;
  for (const auto& name : koszul::cli::kCommands) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("document", document_path,
                    "input document (JSON file path, or - for stdin)");
    sub->add_flag("--json", json_output, "emit the machine-readable certificate");
    sub->add_option("--sequence", flags.sequence, "comma-separated polynomial references");
    sub->add_option("--weights", flags.weights, "comma-separated polynomial references");
    sub->add_option("--ideal", flags.ideal, "comma-separated polynomial references");
    sub->add_option("--columns", flags.columns, "matrix name (submodule generators)");
    sub->add_option("--cube", flags.cube, "cube name");
    sub->add_option("--family", flags.family, "boundary family name");
    sub->add_option("--module", flags.module, "matrix name presenting the module");
    sub->add_option("--matrix", flags.matrix, "matrix name");
    sub->add_option("--f", flags.f, "polynomial reference");
    sub->add_option("--g", flags.g, "polynomial reference");
    sub->add_option("--degree", flags.degree, "homology degree");
    sub->add_option("--n", flags.n, "sphericality degree");
    sub->add_option("--degree-bound", flags.degree_bound, "graded degree bound");
    sub->add_option("--seed", flags.seed, "seed for randomized harnesses");
    subs.emplace(name, sub);
  }

  CLI11_PARSE(app, argc, argv);

  std::string command;
  CLI::App* active = nullptr;
  for (const auto& [name, sub] : subs)
    if (sub->parsed()) {
      command = name;
      active = sub;
    }

  try {
    nlohmann::json input;
    try {
      input = nlohmann::json::parse(read_input(document_path));
    } catch (const nlohmann::json::parse_error& e) {
      throw koszul::cli::DocumentError(std::string("JSON parse error: ") + e.what());
    }
    koszul::cli::Document doc = koszul::cli::parse_document(input);
    koszul::cli::Params params = koszul::cli::params_from_document(input);

    auto set = [&](const char* flag) { return active->count(flag) > 0; };
    // A source-selecting flag overrides every competing document default.
    if (set("--ideal") || set("--columns")) {
      params.ideal.reset();
      params.columns.reset();
    }
    if (set("--cube") || set("--family") || set("--sequence")) {
      params.cube.reset();
      params.family.reset();
      params.sequence.reset();
    }
    if (set("--sequence")) params.sequence = flags.sequence;
    if (set("--weights")) params.weights = flags.weights;
    if (set("--ideal")) params.ideal = flags.ideal;
    if (set("--columns")) params.columns = flags.columns;
    if (set("--cube")) params.cube = flags.cube;
    if (set("--family")) params.family = flags.family;
    if (set("--module")) params.module = flags.module;
    if (set("--matrix")) params.matrix = flags.matrix;
    if (set("--f")) params.f = flags.f;
    if (set("--g")) params.g = flags.g;
    if (set("--degree")) params.degree = flags.degree;
    if (set("--n")) params.n = flags.n;
    if (set("--degree-bound")) params.degree_bound = flags.degree_bound;
    if (set("--seed")) params.seed = flags.seed;

    koszul::cli::RunResult result = koszul::cli::run_command(command, doc, params);
    if (json_output) {
      std::cout << koszul::cli::certificate_json(command, input, params, result).dump(2)
                << "\n";
    } else {
      std::cout << koszul::cli::human_report(command, result);
    }
    return result.exit_code;
  } catch (const koszul::cli::DocumentError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
