#include "nwc/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace nwc {

ConfigError::ConfigError(const std::string& what, int line)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <typename T>
T parse_number(std::string_view text, std::string_view key, int line) {
  T v{};
  const auto t = trim(text);
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty())
    throw ConfigError("bad value for " + std::string(key) + ": '" + std::string(text) + "'", line);
  return v;
}

std::vector<std::size_t> to_indices(const std::vector<int>& xs, std::string_view key, int line) {
  std::vector<std::size_t> out;
  for (int x : xs) {
    if (x < 0) throw ConfigError("negative index in " + std::string(key), line);
    out.push_back(static_cast<std::size_t>(x));
  }
  return out;
}

}  // namespace

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::string_view rest = trim(text);
  if (rest.empty()) return out;
  while (true) {
    const auto comma = rest.find(',');
    out.push_back(parse_number<int>(rest.substr(0, comma), "list", 0));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return out;
}

CertifyMode parse_mode(std::string_view text) {
  if (text == "semigroup") return CertifyMode::Semigroup;
  if (text == "exact") return CertifyMode::Exact;
  throw ConfigError("mode must be semigroup or exact, got '" + std::string(text) + "'");
}

OutputFormat parse_format(std::string_view text) {
  if (text == "csv") return OutputFormat::Csv;
  if (text == "markdown") return OutputFormat::Markdown;
  throw ConfigError("format must be csv or markdown, got '" + std::string(text) + "'");
}

void RunConfig::set(std::string_view key, std::string_view value, int line) {
  value = trim(value);
  auto list = [&] {
    try {
      return parse_int_list(value);
    } catch (const ConfigError&) {
      throw ConfigError("bad list for " + std::string(key) + ": '" + std::string(value) + "'", line);
    }
  };
  try {
    if (key == "field.p") {
      field_p = parse_number<int>(value, key, line);
    } else if (key == "field.e") {
      field_e = parse_number<int>(value, key, line);
    } else if (key == "field.modulus") {
      field_modulus = list();
    } else if (key == "curve.q") {
      curve_q = parse_number<int>(value, key, line);
    } else if (key == "points.Q") {
      q_points = to_indices(list(), key, line);
    } else if (key == "points.eval") {
      if (value == "all")
        eval_places.reset();
      else
        eval_places = to_indices(list(), key, line);
    } else if (key == "seed") {
      seed = parse_number<std::uint64_t>(value, key, line);
    } else if (key == "mode") {
      mode = parse_mode(value);
    } else if (key == "format") {
      format = parse_format(value);
    } else if (key == "output") {
      output = std::string(value);
    } else if (key == "box") {
      const auto xs = list();
      for (int x : xs)
        if (x < 0) throw ConfigError("negative entry in box", line);
      box = DivisorVector(xs);
    } else {
      throw ConfigError("unknown key '" + std::string(key) + "'", line);
    }
  } catch (const ConfigError& e) {
    if (e.line() == 0 && line > 0) throw ConfigError(e.what(), line);
    throw;
  }
}

RunConfig parse_config(std::string_view text) {
  RunConfig cfg;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view s = raw;
    if (const auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
    s = trim(s);
    if (s.empty()) continue;
    const auto eq = s.find('=');
    if (eq == std::string_view::npos) throw ConfigError("expected 'key = value'", line);
    const auto key = trim(s.substr(0, eq));
    if (key.empty()) throw ConfigError("missing key", line);
    cfg.set(key, s.substr(eq + 1), line);
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

Instance::Instance(const RunConfig& config) {
  FieldPtr field;
  if (config.field_p || config.field_e) {
    if (!config.field_p || !config.field_e) throw ConfigError("field.p and field.e must be given together");
    field = GaloisField::make(*config.field_p, *config.field_e, config.field_modulus);
  } else if (!config.field_modulus.empty()) {
    throw ConfigError("field.modulus needs field.p and field.e");
  }
  curve_ = HermitianCurve::make(config.curve_q, field);
  rr_ = std::make_unique<RiemannRoch>(curve_, config.q_points);
  semigroup_ = std::make_unique<MultiPointSemigroup>(*rr_, config.seed);
  engine_ = std::make_unique<BoundEngine>(*semigroup_, config.box);
  eval_ = config.eval_places ? select_eval_places(*rr_, *config.eval_places) : default_eval_places(*rr_);
}

}  // namespace nwc
