#include "ntkit/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ntkit {

namespace {

void set_key(const std::string& key, const std::string& value, ToolConfig& cfg) {
  auto as_double = [&]() {
    std::size_t pos = 0;
    double v = std::stod(value, &pos);
    if (pos != value.size())
      throw std::invalid_argument("config: bad numeric value for " + key);
    if (!(v > 0)) throw std::invalid_argument("config: " + key + " must be positive");
    return v;
  };
  if (key == "K_d")
    cfg.constants.K_d = as_double();
  else if (key == "K")
    cfg.constants.K = as_double();
  else if (key == "K_prime")
    cfg.constants.K_prime = as_double();
  else if (key == "K_double_prime")
    cfg.constants.K_double_prime = as_double();
  else if (key == "M")
    cfg.constants.M = as_double();
  else if (key == "kappa")
    cfg.constants.kappa = as_double();
  else if (key == "kappa_prime")
    cfg.constants.kappa_prime = as_double();
  else if (key == "sieve_ceiling")
    cfg.sieve_ceiling = static_cast<uint64_t>(std::stoull(value));
  else
    throw std::invalid_argument("config: unknown key '" + key + "'");
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

void load_config_file(const std::string& path, ToolConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open " + path);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = trim(line.substr(0, line.find('#')));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: line " + std::to_string(line_no) +
                                  ": expected key = value");
    set_key(trim(body.substr(0, eq)), trim(body.substr(eq + 1)), cfg);
  }
}

void apply_config_override(const std::string& spec, ToolConfig& cfg) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos)
    throw std::invalid_argument("config override: expected key=value");
  set_key(trim(spec.substr(0, eq)), trim(spec.substr(eq + 1)), cfg);
}

}  // namespace ntkit
