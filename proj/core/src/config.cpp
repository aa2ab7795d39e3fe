#include "vemec/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "vemec/errors.hpp"

namespace vemec {

std::string to_string(RateCapMode mode) {
  return mode == RateCapMode::kIdeal ? "ideal" : "si-limited";
}

RateCapMode rate_cap_mode_from_string(const std::string& s) {
  if (s == "ideal") return RateCapMode::kIdeal;
  if (s == "si-limited") return RateCapMode::kSiLimited;
  throw ConfigError("rate_cap_mode must be 'ideal' or 'si-limited', got '" + s + "'");
}

void SystemConfig::validate() const {
  auto fail = [](const std::string& msg) { throw ConfigError("invalid config: " + msg); };
  if (K < 1) fail("K must be >= 1");
  if (N < 1) fail("N must be >= 1");
  if (!(B > 0)) fail("B must be > 0");
  if (!(T > 0)) fail("T must be > 0");
  if (!(C > 0)) fail("C must be > 0");
  if (!(kappa > 0)) fail("kappa must be > 0");
  if (!(alpha >= 0 && alpha <= 1)) fail("alpha must be in [0,1]");
  if (!(beta > 0 && beta < 1)) fail("beta must be in (0,1)");
  if (!(p_an > 0)) fail("p_an must be > 0");
  if (!(p_min > 0 && p_min <= p_max)) fail("need 0 < p_min <= p_max");
  if (!(f_max > 0)) fail("f_max must be > 0");
  if (!(sigma2_an > 0)) fail("sigma2_an must be > 0");
  if (!(sigma2_vn > 0)) fail("sigma2_vn must be > 0");
  if (!(sigma2_ps > 0)) fail("sigma2_ps must be > 0");
  if (static_cast<int>(M.size()) != K) fail("M must have exactly K entries");
  for (double mi : M)
    if (!(mi > 0) || !std::isfinite(mi)) fail("every task size M_i must be finite and > 0");
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17e", v);
  return buf;
}

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

double parse_number(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("trailing characters");
    return x;
  } catch (const std::exception&) {
    throw ConfigError("key '" + key + "': cannot parse number '" + v + "'");
  }
}

std::int64_t parse_int(const std::string& key, const std::string& v) {
  double x = parse_number(key, v);
  auto i = static_cast<std::int64_t>(std::llround(x));
  if (std::abs(x - static_cast<double>(i)) > 1e-9)
    throw ConfigError("key '" + key + "': expected an integer, got '" + v + "'");
  return i;
}

std::vector<double> parse_list(const std::string& key, const std::string& v) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) throw ConfigError("key '" + key + "': empty list element");
    out.push_back(parse_number(key, item));
  }
  if (out.empty()) throw ConfigError("key '" + key + "': empty value");
  return out;
}

}  // namespace

SystemConfig parse_config(const std::string& text, const std::string& origin) {
  SystemConfig cfg;
  bool have_M = false;
  std::vector<double> m_values;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected 'key = value'");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty key or value");

    if (key == "K") cfg.K = static_cast<int>(parse_int(key, value));
    else if (key == "N") cfg.N = static_cast<int>(parse_int(key, value));
    else if (key == "B") cfg.B = parse_number(key, value);
    else if (key == "T") cfg.T = parse_number(key, value);
    else if (key == "C") cfg.C = parse_number(key, value);
    else if (key == "kappa") cfg.kappa = parse_number(key, value);
    else if (key == "alpha") cfg.alpha = parse_number(key, value);
    else if (key == "beta") cfg.beta = parse_number(key, value);
    else if (key == "p_an") cfg.p_an = parse_number(key, value);
    else if (key == "p_min") cfg.p_min = parse_number(key, value);
    else if (key == "p_max") cfg.p_max = parse_number(key, value);
    else if (key == "f_max") cfg.f_max = parse_number(key, value);
    else if (key == "sigma2_an") cfg.sigma2_an = parse_number(key, value);
    else if (key == "sigma2_vn") cfg.sigma2_vn = parse_number(key, value);
    else if (key == "sigma2_ps") cfg.sigma2_ps = parse_number(key, value);
    else if (key == "M") { m_values = parse_list(key, value); have_M = true; }
    else if (key == "rate_cap_mode") cfg.rate_cap_mode = rate_cap_mode_from_string(value);
    else if (key == "seed") cfg.seed = static_cast<std::uint64_t>(parse_int(key, value));
    else throw ConfigError(origin + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
  }

  if (have_M) {
    if (m_values.size() == 1) {
      cfg.M.assign(cfg.K, m_values[0]);
    } else {
      cfg.M = std::move(m_values);
    }
  } else {
    cfg.M.assign(cfg.K, 5e5);
  }

  cfg.validate();
  return cfg;
}

SystemConfig load_config_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str(), path);
}

void echo_config(const SystemConfig& cfg, std::ostream& os) {
  os << "K = " << cfg.K << "\n";
  os << "N = " << cfg.N << "\n";
  os << "B = " << format_double(cfg.B) << "\n";
  os << "T = " << format_double(cfg.T) << "\n";
  os << "C = " << format_double(cfg.C) << "\n";
  os << "kappa = " << format_double(cfg.kappa) << "\n";
  os << "alpha = " << format_double(cfg.alpha) << "\n";
  os << "beta = " << format_double(cfg.beta) << "\n";
  os << "p_an = " << format_double(cfg.p_an) << "\n";
  os << "p_min = " << format_double(cfg.p_min) << "\n";
  os << "p_max = " << format_double(cfg.p_max) << "\n";
  os << "f_max = " << format_double(cfg.f_max) << "\n";
  os << "sigma2_an = " << format_double(cfg.sigma2_an) << "\n";
  os << "sigma2_vn = " << format_double(cfg.sigma2_vn) << "\n";
  os << "sigma2_ps = " << format_double(cfg.sigma2_ps) << "\n";
  os << "M = ";
  for (std::size_t i = 0; i < cfg.M.size(); ++i)
    os << (i ? ", " : "") << format_double(cfg.M[i]);
  os << "\n";
  os << "rate_cap_mode = " << to_string(cfg.rate_cap_mode) << "\n";
  os << "seed = " << cfg.seed << "\n";
}

}  // namespace vemec
