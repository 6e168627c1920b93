#include "commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include "nwc/bounds.hpp"
#include "nwc/codes.hpp"
#include "nwc/config.hpp"
#include "nwc/near_weights.hpp"

namespace nwc::cli {

const Preset& preset(const std::string& name) {
  static const std::map<std::string, Preset> presets = {
      {"t1",
       {"t1",
        3,
        {
            {{2, 1, 1}, {2, 2, 2}, {11, 11, 11}, 2, 0},
            {{1, 2, 1}, {2, 2, 2}, {11, 11, 11}, 2, 0},
            {{1, 1, 2}, {2, 2, 2}, {11, 11, 11}, 2, 0},
            {{2, 2, 1}, {2, 2, 3}, {11, 11, 11}, 2, 1},
            {{2, 1, 2}, {2, 3, 2}, {11, 11, 11}, 2, 1},
            {{1, 2, 2}, {3, 2, 2}, {11, 11, 11}, 2, 1},
            {{2, 2, 2}, {3, 3, 3}, {11, 11, 11}, 2, 2},
            {{3, 2, 2}, {4, 4, 4}, {11, 11, 11}, 3, 3},
            {{2, 3, 2}, {4, 4, 4}, {11, 11, 11}, 3, 3},
            {{2, 2, 3}, {4, 4, 4}, {11, 11, 11}, 4, 3},
        }}},
      {"t2",
       {"t2",
        4,
        {
            {{1, 2, 3}, {2, 2, 2}, {23, 23, 23}, 2, -4},
            {{3, 1, 3}, {2, 2, 2}, {23, 23, 23}, 2, -3},
            {{3, 2, 3}, {2, 2, 2}, {23, 23, 23}, 2, -2},
            {{3, 3, 3}, {2, 2, 2}, {23, 23, 23}, 2, -1},
            {{4, 3, 2}, {2, 2, 2}, {23, 23, 23}, 2, -1},
            {{4, 3, 3}, {2, 2, 2}, {23, 23, 23}, 2, 0},
            {{4, 4, 3}, {2, 2, 3}, {23, 23, 23}, 2, 1},
        }}},
  };
  const auto it = presets.find(name);
  if (it == presets.end()) throw ConfigError("unknown preset '" + name + "' (expected t1 or t2)");
  return it->second;
}

namespace {

std::string join(const std::vector<int>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

std::string paren(const std::string& s) { return "(" + s + ")"; }

DivisorVector parse_divisor(const std::string& text, std::size_t m) {
  DivisorVector a = DivisorVector::parse(text);
  if (a.size() != m)
    throw ConfigError("divisor '" + text + "' has " + std::to_string(a.size()) + " entries, expected " +
                      std::to_string(m));
  return a;
}

struct Options {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string format;
  std::string out;
  std::string mode;
  std::string search_box;
  std::optional<int> q;

  RunConfig resolve(std::optional<int> preset_q = std::nullopt) const {
    RunConfig cfg = config_path.empty() ? RunConfig{} : load_config(config_path);
    if (q) cfg.curve_q = *q;
    if (preset_q) cfg.curve_q = *preset_q;
    if (seed) cfg.seed = *seed;
    if (!format.empty()) cfg.format = parse_format(format);
    if (!out.empty()) cfg.output = out;
    if (!mode.empty()) cfg.mode = parse_mode(mode);
    if (!search_box.empty()) cfg.set("box", search_box);
    return cfg;
  }
};

void places_cmd(const Instance& in, std::ostream& os) {
  const auto& f = in.curve().field();
  std::map<std::size_t, std::string> role;
  for (std::size_t k = 0; k < in.rr().m(); ++k) role[in.rr().points()[k].index] = "Q" + std::to_string(k + 1);
  for (const auto& p : in.eval_places()) role.emplace(p.index, "eval");
  for (const auto& p : in.curve().places()) {
    const auto r = role.find(p.index);
    const std::string tag = r == role.end() ? "-" : r->second;
    if (p.is_infinite())
      os << p.index << ";inf;inf;" << tag << "\n";
    else
      os << p.index << ";" << f.format(p.x) << ";" << f.format(p.y) << ";" << tag << "\n";
  }
}

void semigroup_cmd(const Instance& in, const std::string& box_text, std::ostream& os) {
  const auto& h = in.semigroup();
  DivisorVector box(h.m());
  if (box_text.empty())
    for (std::size_t k = 0; k < h.m(); ++k) box[k] = 2 * h.one_point(k).conductor() - 1;
  else
    box = parse_divisor(box_text, h.m());
  DivisorVector a(h.m());
  while (true) {
    const bool member = h.contains(a);
    os << a.to_string() << "," << member << "," << (member && h.is_minimal(a)) << "\n";
    std::size_t k = h.m();
    while (k > 0 && a[k - 1] == box[k - 1]) a[--k] = 0;
    if (k == 0) break;
    ++a[k - 1];
  }
}

void rr_cmd(const Instance& in, const std::string& a_text, std::ostream& os) {
  const auto basis = in.rr().basis(parse_divisor(a_text, in.rr().m()));
  os << "dim;" << basis->dim() << "\n";
  for (const auto& f : basis->basis) os << f.to_string() << "\n";
}

std::string pairs_string(const PairChain& chain) {
  std::string s;
  for (std::size_t i = 0; i < chain.pairs.size(); ++i) {
    if (i) s += " ";
    s += paren(chain.pairs[i].u.to_string()) + "|" + paren(chain.pairs[i].v.to_string());
  }
  return s;
}

void nu_cmd(const Instance& in, const RunConfig& cfg, const std::string& a_text, std::ostream& os) {
  const DivisorVector a = parse_divisor(a_text, in.rr().m());
  for (std::size_t k = 0; k < a.size(); ++k) {
    const PairChain chain = in.engine().nu(a, k, cfg.mode);
    os << k + 1 << ";" << chain.size() << ";" << pairs_string(chain) << "\n";
  }
}

BoundReport compute_bound(const Instance& in, const RunConfig& cfg, const DivisorVector& a, const std::string& path) {
  if (path == "default") return in.engine().delta_bound(a, cfg.mode);
  if (path == "search") return in.engine().delta_bound_search(a, cfg.mode);
  throw ConfigError("path must be default or search, got '" + path + "'");
}

std::string bound_row(const BoundReport& r, OutputFormat fmt) {
  if (fmt == OutputFormat::Markdown)
    return "| " + paren(r.a.to_string()) + " | " + paren(join(r.nu)) + " | " + paren(r.limits.to_string()) + " | " +
           std::to_string(r.delta) + " | " + std::to_string(r.goppa) + " |";
  return r.a.to_string() + ";" + join(r.nu) + ";" + r.limits.to_string() + ";" + std::to_string(r.delta) + ";" +
         std::to_string(r.goppa);
}

void table_cmd(const Instance& in, const RunConfig& cfg, const Preset& p, const std::string& path, std::ostream& os,
               std::ostream& err) {
  if (cfg.format == OutputFormat::Markdown) {
    os << "| a | (nu1,nu2,nu3) | (A1,A2,A3) | delta | d |\n";
    os << "|---|---|---|---|---|\n";
  }
  for (const auto& ref : p.rows) {
    const BoundReport r = compute_bound(in, cfg, ref.a, path);
    os << bound_row(r, cfg.format) << "\n";
    const std::string at = "note: " + p.name + " row (" + ref.a.to_string() + ") ";
    if (DivisorVector(r.nu) != ref.nu)
      err << at << "nu computed (" << join(r.nu) << ") reference (" << ref.nu.to_string() << ")\n";
    if (r.limits != ref.limits)
      err << at << "A computed (" << r.limits.to_string() << ") reference (" << ref.limits.to_string() << ")\n";
    if (r.delta != ref.delta) err << at << "delta computed " << r.delta << " reference " << ref.delta << "\n";
    if (r.goppa != ref.goppa) err << at << "d computed " << r.goppa << " reference " << ref.goppa << "\n";
  }
}

void code_cmd(const Instance& in, const std::string& a_text, int dmax, std::ostream& os) {
  const EvaluationCode code = build_code(in.rr(), parse_divisor(a_text, in.rr().m()), in.eval_places());
  const auto& f = in.curve().field();
  os << "# n=" << code.length() << " k=" << code.dimension << "\n";
  for (std::size_t r = 0; r < code.generator.rows(); ++r) {
    for (std::size_t c = 0; c < code.generator.cols(); ++c) os << (c ? ";" : "") << f.format(code.generator(r, c));
    os << "\n";
  }
  if (dmax > 0) {
    const DualDistance d = dual_min_distance_upto(code, dmax);
    if (d.distance) {
      std::vector<int> cols;
      for (std::size_t j : d.witness) cols.push_back(static_cast<int>(code.places[j].index));
      os << "# dual_distance=" << *d.distance << " dependent_places=" << join(cols) << "\n";
    } else {
      os << "# dual_distance>" << d.searched_upto << "\n";
    }
  }
}

bool check_cmd(const Instance& in, const std::string& suite, std::size_t n, std::uint64_t seed, std::ostream& os,
               std::ostream& err) {
  std::vector<AxiomReport> reports;
  if (suite == "axioms" || suite == "all") reports.push_back(verify_axioms(in.semigroup(), n, seed));
  if (suite == "complete" || suite == "all") reports.push_back(complete_set_check(in.semigroup()));
  if (reports.empty()) throw ConfigError("suite must be axioms, complete or all, got '" + suite + "'");
  bool ok = true;
  for (const auto& rep : reports)
    for (const auto& c : rep.checks) {
      os << (c.passed() ? "PASS " : "FAIL ") << c.name << " checked=" << c.checked
         << " violations=" << c.violations.size() << "\n";
      for (const auto& v : c.violations) err << c.name << ": " << v << "\n";
      ok = ok && c.passed();
    }
  os << (ok ? "PASS " : "FAIL ") << suite << "\n";
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Near-weight bounds for multi-point Hermitian codes", "nwc"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--config", opt.config_path, "key = value run configuration");
  app.add_option("--seed", opt.seed, "RNG seed");
  app.add_option("--format", opt.format, "csv or markdown");
  app.add_option("--out", opt.out, "write rows to this file instead of stdout");
  app.add_option("--mode", opt.mode, "semigroup or exact certification");
  app.add_option("--search-box", opt.search_box, "limit on tuples the bound search may touch");
  app.add_option("--q", opt.q, "curve parameter q (field GF(q^2))");

  std::string a_text, box_text, path = "default", preset_name, eval_text, suite = "axioms";
  int dmax = 0;
  std::size_t n = 1000;

  auto* places = app.add_subcommand("places", "list rational places");
  auto* semigroup = app.add_subcommand("semigroup", "dump semigroup members and minimals");
  semigroup->add_option("--box", box_text, "upper corner of the dump");
  auto* rr = app.add_subcommand("rr", "basis of L(a)");
  rr->add_option("--a", a_text)->required();
  auto* nu = app.add_subcommand("nu", "maximal pair chains per coordinate");
  nu->add_option("--a", a_text)->required();
  auto* bound = app.add_subcommand("bound", "path bound for one divisor");
  bound->add_option("--a", a_text)->required();
  bound->add_option("--path", path, "default or search");
  auto* table = app.add_subcommand("table", "reproduce a reference table");
  table->add_option("--preset", preset_name)->required();
  table->add_option("--path", path, "default or search");
  auto* code = app.add_subcommand("code", "generator matrix of the evaluation code");
  code->add_option("--a", a_text)->required();
  code->add_option("--eval", eval_text, "all or place indices");
  code->add_option("--dual-dmax", dmax, "search dependent column sets up to this size");
  auto* check = app.add_subcommand("check", "property suites");
  check->add_option("--suite", suite, "axioms, complete or all");
  check->add_option("--n", n, "sampled pairs");

  std::vector<const char*> argv{"nwc"};
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    const Preset* p = table->parsed() ? &preset(preset_name) : nullptr;
    RunConfig cfg = opt.resolve(p ? std::optional<int>(p->q) : std::nullopt);
    if (!eval_text.empty()) cfg.set("points.eval", eval_text);
    const Instance in(cfg);

    std::ostringstream rows;
    int status = kOk;
    if (places->parsed()) {
      places_cmd(in, rows);
    } else if (semigroup->parsed()) {
      semigroup_cmd(in, box_text, rows);
    } else if (rr->parsed()) {
      rr_cmd(in, a_text, rows);
    } else if (nu->parsed()) {
      nu_cmd(in, cfg, a_text, rows);
    } else if (bound->parsed()) {
      const BoundReport r = compute_bound(in, cfg, parse_divisor(a_text, in.rr().m()), path);
      rows << bound_row(r, cfg.format) << "\n";
    } else if (table->parsed()) {
      table_cmd(in, cfg, *p, path, rows, err);
    } else if (code->parsed()) {
      code_cmd(in, a_text, dmax, rows);
    } else if (check->parsed()) {
      if (!check_cmd(in, suite, n, cfg.seed, rows, err)) status = kSuiteFailure;
    }

    if (cfg.output.empty()) {
      out << rows.str();
    } else {
      std::ofstream file(cfg.output);
      if (!file) throw ConfigError("cannot write " + cfg.output);
      file << rows.str();
    }
    return status;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kUsage;
  } catch (const BoxTooSmall& e) {
    err << "box too small: " << e.what() << "\n";
    return kBoxTooSmall;
  } catch (const FieldError& e) {
    err << "field/curve mismatch: " << e.what() << "\n";
    return kFieldCurveMismatch;
  } catch (const CurveError& e) {
    err << "field/curve mismatch: " << e.what() << "\n";
    return kFieldCurveMismatch;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kOtherError;
  }
}

}  // namespace nwc::cli
