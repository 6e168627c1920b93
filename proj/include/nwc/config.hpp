#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nwc/bounds.hpp"
#include "nwc/codes.hpp"
#include "nwc/curve.hpp"
#include "nwc/riemann_roch.hpp"
#include "nwc/weierstrass.hpp"

namespace nwc {

/// Malformed run configuration. line() is 0 when the problem is not tied to
/// a line of the file.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& what, int line = 0);
  int line() const { return line_; }

 private:
  int line_;
};

enum class OutputFormat { Csv, Markdown };

struct RunConfig {
  std::optional<int> field_p;
  std::optional<int> field_e;
  std::vector<int> field_modulus;
  int curve_q = 3;
  std::vector<std::size_t> q_points{0, 1, 2};
  /// Empty means every affine place off the chosen points.
  std::optional<std::vector<std::size_t>> eval_places;
  std::uint64_t seed = MultiPointSemigroup::kDefaultSeed;
  CertifyMode mode = CertifyMode::Semigroup;
  OutputFormat format = OutputFormat::Csv;
  std::string output;
  /// Optional limit on every tuple the bound search may touch.
  std::optional<DivisorVector> box;

  /// Applies one `key = value` setting. Throws ConfigError for an unknown
  /// key or a bad value.
  void set(std::string_view key, std::string_view value, int line = 0);
};

/// Parses `key = value` lines; `#` starts a comment, blank lines are skipped.
RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::string& path);

std::vector<int> parse_int_list(std::string_view text);
CertifyMode parse_mode(std::string_view text);
OutputFormat parse_format(std::string_view text);

/// Curve, Riemann-Roch spaces, semigroup and bound engine for one config.
/// The members refer to each other, so an Instance is pinned in place.
class Instance {
 public:
  /// Throws FieldError or CurveError when the field does not carry the curve.
  explicit Instance(const RunConfig& config);
  Instance(const Instance&) = delete;
  Instance& operator=(const Instance&) = delete;

  const HermitianCurve& curve() const { return *curve_; }
  const RiemannRoch& rr() const { return *rr_; }
  const MultiPointSemigroup& semigroup() const { return *semigroup_; }
  const BoundEngine& engine() const { return *engine_; }
  const std::vector<RationalPlace>& eval_places() const { return eval_; }

 private:
  std::shared_ptr<const HermitianCurve> curve_;
  std::unique_ptr<RiemannRoch> rr_;
  std::unique_ptr<MultiPointSemigroup> semigroup_;
  std::unique_ptr<BoundEngine> engine_;
  std::vector<RationalPlace> eval_;
};

}  // namespace nwc
