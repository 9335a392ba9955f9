#include "osq/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "osq/fft.hpp"

namespace osq {

SuiteConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_config: cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

SuiteConfig parse_config(const std::string& text) {
  SuiteConfig cfg;
  std::string trimmed;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) trimmed.push_back(c);
  if (trimmed.empty()) return cfg;

  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(std::string("config parse error: ") + e.what());
  }

  if (j.contains("suite")) cfg.suite = j.at("suite").get<std::string>();
  if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("jobs")) cfg.jobs = j.at("jobs").get<int>();
  if (j.contains("grid")) {
    const auto& g = j.at("grid");
    if (g.contains("half_width")) cfg.half_width = g.at("half_width").get<double>();
    if (g.contains("n")) cfg.n = g.at("n").get<std::size_t>();
  }
  if (j.contains("atoms")) {
    cfg.atoms.clear();
    for (const auto& a : j.at("atoms")) {
      Atom atom;
      atom.lambda = a.at("lambda").get<double>();
      atom.weight = a.contains("weight") ? a.at("weight").get<double>() : 1.0;
      cfg.atoms.push_back(atom);
    }
  }
  if (j.contains("tolerances")) {
    for (const auto& [key, val] : j.at("tolerances").items())
      cfg.tolerance_overrides[key] = val.get<double>();
  }

  if (!(cfg.half_width > 0.0)) throw std::runtime_error("config: grid.half_width must be positive");
  if (!is_power_of_two(cfg.n)) throw std::runtime_error("config: grid.n must be a power of two");
  for (const auto& a : cfg.atoms) {
    if (!(a.weight > 0.0)) throw std::runtime_error("config: atoms[].weight must be positive");
    if (a.lambda < 0.0) throw std::runtime_error("config: atoms[].lambda must be >= 0");
  }
  return cfg;
}

}  // namespace osq
