#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <system_error>
#include <unistd.h>
#include <variant>
#include <vector>

#include "laakso/audit.hpp"
#include "laakso/casimir.hpp"
#include "laakso/errors.hpp"
#include "laakso/format.hpp"
#include "laakso/graph.hpp"
#include "laakso/oracle.hpp"
#include "laakso/parallel.hpp"
#include "laakso/plates.hpp"
#include "laakso/pole.hpp"
#include "laakso/poles.hpp"
#include "laakso/rational.hpp"
#include "laakso/sequence.hpp"
#include "laakso/spectrum.hpp"
#include "laakso/zeta.hpp"

namespace laakso::cli {
namespace {

using Cell = std::variant<std::string, double, std::int64_t>;

// Rows with typed cells, rendered identically as CSV or as a JSON array.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

struct Output {
  Table table;
  std::optional<nlohmann::json> document;  // replaces the table in JSON form
  std::string default_format = "csv";
  std::vector<AuditRecord> audits;
  int code = exit_ok;
};

std::string render_csv(const Table& table) {
  std::ostringstream os;
  for (std::size_t i = 0; i < table.header.size(); ++i) os << (i ? "," : "") << table.header[i];
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
              os << format_double(v);
            } else {
              os << v;
            }
          },
          row[i]);
    }
    os << '\n';
  }
  return os.str();
}

nlohmann::json render_json(const Table& table) {
  auto rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::visit([&](const auto& v) { obj[table.header[i]] = v; }, row[i]);
    }
    rows.push_back(std::move(obj));
  }
  return rows;
}

double parse_number(const std::string& text, const std::string& what) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
    throw ValidationError(what + ": '" + text + "' is not a finite number");
  }
  return value;
}

struct Range {
  double lo = 0.0;
  double hi = 0.0;
  std::optional<double> step;
};

Range parse_range(const std::string& text, const std::string& flag) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (parts.size() < 2 || parts.size() > 3) {
    throw ValidationError(flag + " expects lo:hi or lo:hi:step, got '" + text + "'");
  }
  Range r{parse_number(parts[0], flag), parse_number(parts[1], flag), std::nullopt};
  if (r.lo > r.hi) throw ValidationError(flag + ": lo must not exceed hi in '" + text + "'");
  if (parts.size() == 3) {
    r.step = parse_number(parts[2], flag);
    if (!(*r.step > 0.0)) throw ValidationError(flag + ": step must be positive");
  }
  return r;
}

// Grid points lo, lo+step, ... up to hi (inclusive within rounding).
std::vector<double> grid(const Range& r, const std::string& flag) {
  if (r.lo == r.hi) return {r.lo};
  if (!r.step) throw ValidationError(flag + " spans an interval and needs a step (lo:hi:step)");
  const double span = (r.hi - r.lo) / *r.step;
  if (span > 1e6) throw ResourceError(flag + " grid exceeds 10^6 points");
  const auto count = static_cast<std::int64_t>(std::floor(span + 1e-9)) + 1;
  std::vector<double> pts;
  pts.reserve(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) pts.push_back(r.lo + static_cast<double>(i) * *r.step);
  return pts;
}

int parse_int(const std::string& text, const std::string& flag) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ValidationError(flag + ": '" + text + "' is not an integer");
  }
  return value;
}

BigInt parse_big_int(const std::string& text, const std::string& flag) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ValidationError(flag + ": '" + text + "' is not a positive integer");
  }
  return BigInt(text);
}

struct SequenceArgs {
  std::string j = "2";
  std::optional<int> period;

  JSequence get() const {
    const auto seq = parse_sequence(j);
    if (period) return make_sequence(seq.entries(), *period);
    return seq;
  }
};

void add_sequence(CLI::App* cmd, SequenceArgs& args) {
  cmd->add_option("--j", args.j, "Defining sequence, one period as a comma list (e.g. 2,3)");
  cmd->add_option("--period", args.period, "Period length (must equal the list length)");
}

int single_j(const JSequence& seq) {
  if (seq.period() != 1) throw ValidationError("--j must be a single integer here");
  return seq.entries().front();
}

struct PlateArgs {
  std::optional<int> Z;
  std::optional<std::string> X0;

  PlateConfig get(int j) const {
    if (!Z) throw ValidationError("plates need --Z (number of cells between the plates)");
    if (X0) return plate_config(j, *Z, parse_rational(*X0));
    return plate_config(j, *Z);
  }
};

void add_plates(CLI::App* cmd, PlateArgs& args) {
  cmd->add_option("--Z", args.Z, "Cells strictly between the plates");
  cmd->add_option("--X0", args.X0, "Plate half-separation (default Z/(2j)); exact decimals or p/q");
}

// ---------------------------------------------------------------- spectrum

struct SpectrumArgs {
  SequenceArgs seq;
  PlateArgs plates;
  std::string variant = "free";
  std::optional<int> level;
  double cutoff = 0.0;
};

Output cmd_spectrum(const SpectrumArgs& a) {
  const auto seq = a.seq.get();
  if (!(a.cutoff >= 0.0)) throw ValidationError("--cutoff must be nonnegative");
  EnumeratedSpectrum spec;
  if (a.variant == "free") {
    if (a.level) throw ValidationError("--level applies to --variant finite or plated");
    spec = free_spectrum(seq, a.cutoff);
  } else if (a.variant == "finite") {
    if (!a.level) throw ValidationError("--variant finite needs --level");
    spec = finite_spectrum(seq, *a.level, a.cutoff);
  } else {
    spec = plated_spectrum(a.plates.get(single_j(seq)), a.cutoff, a.level);
  }
  Output out;
  out.table.header = {"lambda", "multiplicity", "symbolic"};
  for (const auto& e : spec.entries) out.table.rows.push_back({e.lambda, e.multiplicity, e.symbolic()});
  return out;
}

// ---------------------------------------------------------------- graph

struct GraphArgs {
  SequenceArgs seq;
  PlateArgs plates;
  int level = 0;
  bool dirichlet_plates = false;
};

MetricGraph make_graph(const JSequence& seq, int level, bool plated, const PlateArgs& plates) {
  if (plated) return build_plated_graph(plates.get(single_j(seq)), level);
  return build_graph(seq, level);
}

Output cmd_graph(const GraphArgs& a) {
  const auto graph = make_graph(a.seq.get(), a.level, a.dirichlet_plates, a.plates);
  Output out;
  out.default_format = "json";
  out.document = to_json(graph);
  out.table.header = {"u", "v", "length", "x_u", "x_v"};
  for (const auto& e : graph.edges) {
    out.table.rows.push_back({static_cast<std::int64_t>(e.u), static_cast<std::int64_t>(e.v),
                              to_string(e.length), to_string(graph.vertices[e.u].x),
                              to_string(graph.vertices[e.v].x)});
  }
  return out;
}

// ---------------------------------------------------------------- oracle

struct OracleArgs {
  SequenceArgs seq;
  PlateArgs plates;
  int level = 1;
  int mesh = 512;
  double cutoff = 400.0;
  double tol = 1e-3;
  bool dirichlet_plates = false;
};

Output cmd_oracle(const OracleArgs& a) {
  const auto seq = a.seq.get();
  if (a.level > max_oracle_level) {
    throw ResourceError("oracle is limited to level " + std::to_string(max_oracle_level) +
                        "; requested " + std::to_string(a.level));
  }
  if (!(a.cutoff > 0.0)) throw ValidationError("--cutoff must be positive");
  const auto graph = make_graph(seq, a.level, a.dirichlet_plates, a.plates);
  const auto closed = a.dirichlet_plates
                          ? plated_spectrum(a.plates.get(single_j(seq)), a.cutoff, a.level)
                          : finite_spectrum(seq, a.level, a.cutoff);
  const auto run = run_oracle(graph, closed, a.mesh, a.tol);
  Output out;
  out.default_format = "json";
  out.document = to_json(run.report);
  out.table.header = {"lambda", "closed_mult", "oracle_mult", "rel_err", "status"};
  for (const auto& r : run.report.rows) {
    out.table.rows.push_back({r.lambda, r.closed_mult, r.oracle_mult, r.rel_err, to_string(r.status)});
  }
  out.code = run.report.all_matched() ? exit_ok : exit_mismatch;
  return out;
}

// ---------------------------------------------------------------- zeta

struct ZetaArgs {
  SequenceArgs seq;
  PlateArgs plates;
  std::string variant = "free";
  std::optional<int> level;
  std::optional<std::string> s;
  std::optional<std::string> re;
  std::optional<std::string> im;
  std::string method = "closed";
  double cutoff = 2000.0;
  double tail_bound = 1e-8;
};

std::vector<ComplexValue> zeta_points(const ZetaArgs& a) {
  if (a.s) {
    if (a.re || a.im) throw ValidationError("give either --s or a --re/--im grid, not both");
    return {parse_complex(*a.s)};
  }
  if (!a.re) throw ValidationError("zeta needs --s or --re (with optional --im)");
  const auto res = grid(parse_range(*a.re, "--re"), "--re");
  const auto ims = a.im ? grid(parse_range(*a.im, "--im"), "--im") : std::vector<double>{0.0};
  std::vector<ComplexValue> pts;
  for (double x : res) {
    for (double y : ims) pts.emplace_back(x, y);
  }
  return pts;
}

Output cmd_zeta(const ZetaArgs& a) {
  const auto seq = a.seq.get();
  const auto points = zeta_points(a);
  if (a.variant == "finite" && !a.level) throw ValidationError("--variant finite needs --level");
  if (a.variant != "finite" && a.variant != "plated" && a.level) {
    throw ValidationError("--level applies to --variant finite or plated");
  }
  std::optional<PlateConfig> cfg;
  if (a.variant == "plated") cfg = a.plates.get(single_j(seq));
  const bool direct = a.method == "direct";
  if (direct && a.variant == "interval") throw ValidationError("--method direct needs a graph variant");
  if (direct && !(a.cutoff > 0.0)) throw ValidationError("--cutoff must be positive");
  if (cfg && a.level && !direct) throw ValidationError("plated closed form covers all levels; drop --level");

  std::optional<EnumeratedSpectrum> spec;
  if (direct) {
    if (a.variant == "free") spec = free_spectrum(seq, a.cutoff);
    if (a.variant == "finite") spec = finite_spectrum(seq, *a.level, a.cutoff);
    if (a.variant == "plated") spec = plated_spectrum(*cfg, a.cutoff, a.level);
  }

  std::vector<ComplexValue> values(points.size());
  std::vector<double> brackets(points.size(), 0.0);
  parallel_for(points.size(), [&](std::size_t i) {
    const auto s = points[i];
    if (direct) {
      const auto sum = zeta_direct(*spec, s, a.tail_bound);
      values[i] = sum.value;
      brackets[i] = sum.tail_bracket;
    } else if (a.variant == "free") {
      values[i] = zeta_laakso_closed(seq, s);
    } else if (a.variant == "finite") {
      values[i] = zeta_finite(seq, *a.level, s);
    } else if (a.variant == "plated") {
      values[i] = zeta_plated(*cfg, s);
    } else {
      values[i] = zeta_interval(s);
    }
  });

  Output out;
  out.table.header = {"re_s", "im_s", "re_val", "im_val"};
  if (direct) out.table.header.push_back("tail_bracket");
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<Cell> row{points[i].real(), points[i].imag(), values[i].real(), values[i].imag()};
    if (direct) row.push_back(brackets[i]);
    out.table.rows.push_back(std::move(row));
  }

  const bool constant = seq.period() == 1;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto s = points[i];
    const std::string params = "j=" + seq.to_string() + ",s=" + format_complex(s);
    try {
      if (a.variant == "free" && constant && seq.entries().front() == 2) {
        out.audits.push_back(make_audit("zeta_L printed j=2 form", params, values[i], printed_zeta_j2(s), 1e-9));
      } else if (a.variant == "finite" && constant) {
        out.audits.push_back(make_audit("zeta_m printed form", params + ",m=" + std::to_string(*a.level),
                                        values[i], printed_zeta_finite(seq.entries().front(), *a.level, s),
                                        1e-9));
      }
    } catch (const NumericalGuardError&) {
      // The printed form has a pole here; nothing to compare.
    }
  }
  return out;
}

// ---------------------------------------------------------------- poles

struct PolesArgs {
  SequenceArgs seq;
  std::optional<int> level;
  std::string re = "0:1.5";
  std::string im = "0:10";
  bool all = false;
};

Output cmd_poles(const PolesArgs& a) {
  const auto seq = a.seq.get();
  const auto re = parse_range(a.re, "--re");
  const auto im = parse_range(a.im, "--im");
  if (a.level && *a.level < 0) throw ValidationError("--level must be nonnegative");
  const Region region{re.lo, re.hi, im.lo, im.hi};
  const auto poles = a.all ? scan_poles(seq, a.level, region) : find_poles(seq, a.level, region);
  Output out;
  out.table.header = {"re", "im", "order", "tower", "k"};
  if (a.all) {
    out.table.header.push_back("slope");
    out.table.header.push_back("confirmed");
  }
  for (const auto& p : poles) {
    std::vector<Cell> row{p.location.real(), p.location.imag(), std::int64_t{p.order}, p.tower,
                          std::int64_t{p.k}};
    if (a.all) {
      row.push_back(p.slope);
      row.push_back(std::int64_t{p.confirmed ? 1 : 0});
    }
    out.table.rows.push_back(std::move(row));
  }
  return out;
}

// ---------------------------------------------------------------- casimir

struct CasimirArgs {
  std::string kind;
  SequenceArgs seq;
  PlateArgs plates;
  double d = 1.0;
  bool numeric = false;
  double h = 1e-5;
};

Output cmd_casimir(const CasimirArgs& a) {
  Output out;
  CasimirResult r;
  if (a.kind == "energy" || a.kind == "force") {
    const int j = single_j(a.seq.get());
    const auto cfg = a.plates.get(j);
    if (a.kind == "energy") {
      r = energy_1d(cfg);
    } else if (a.numeric) {
      r = force_1d_numeric(j, cfg.Z, to_double(cfg.X0), a.h);
    } else {
      r = force_1d_closed(j, cfg.Z, cfg.X0);
    }
    out.table.header = {"j", "Z", "X0", a.kind, "units", "exact", "unit", "method"};
    out.table.rows.push_back({std::int64_t{j}, std::int64_t{cfg.Z}, to_string(cfg.X0), r.value, r.units,
                              r.exact ? to_string(*r.exact) : std::string(), r.unit, to_string(r.method)});
  } else {
    if (!(a.d > 0.0) || !std::isfinite(a.d)) throw ValidationError("--d must be a positive separation");
    std::string label;
    if (a.kind == "pressure") {
      label = a.seq.j;
      r = pressure_3d_constant(parse_big_int(a.seq.j, "--j"), a.d);
    } else {
      const auto seq = a.seq.get();
      label = seq.to_string();
      if (a.kind == "energy3d") {
        r = energy_3d_periodic(seq, a.d);
      } else {
        r = pressure_3d_periodic(seq, a.d);
        if (seq.period() == 1) r.audits.push_back(cross_proposition_report(seq.entries().front()));
      }
    }
    const std::string column = a.kind == "energy3d" ? "energy" : "pressure";
    out.table.header = {"j_or_seq", "d", column, "units", "exact", "unit"};
    out.table.rows.push_back({label, a.d, r.value, r.units, r.exact ? to_string(*r.exact) : std::string(), r.unit});
  }
  out.audits = r.audits;
  return out;
}

// ---------------------------------------------------------------- sweep

struct SweepArgs {
  int j = 256;
  std::string Z = "1:125";
  bool terms = false;
};

Output cmd_sweep(const SweepArgs& a) {
  const auto colon = a.Z.find(':');
  if (colon == std::string::npos) throw ValidationError("--Z expects lo:hi");
  const int lo = parse_int(a.Z.substr(0, colon), "--Z");
  const int hi = parse_int(a.Z.substr(colon + 1), "--Z");
  if (lo > hi) throw ValidationError("--Z: lo must not exceed hi");
  const auto rows = sweep_force(a.j, lo, hi);
  Output out;
  out.table.header = {"Z", "X0", "force"};
  if (a.terms) {
    out.table.header.push_back("plate_term");
    out.table.header.push_back("boundary_term");
  }
  for (const auto& r : rows) {
    std::vector<Cell> row{std::int64_t{r.Z}, to_string(r.X0), r.force};
    if (a.terms) {
      row.push_back(r.terms.plate);
      row.push_back(r.terms.boundary);
    }
    out.table.rows.push_back(std::move(row));
  }
  return out;
}

// ---------------------------------------------------------------- plumbing

void write_atomic(const std::filesystem::path& path, const std::string& text) {
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw ResourceError("cannot open " + tmp.string() + " for writing");
    f << text;
    f.close();
    if (!f) throw ResourceError("failed writing " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw ResourceError("cannot move output into place at " + path.string());
  }
}

std::filesystem::path sidecar_path(const std::filesystem::path& out) {
  auto p = out;
  p.replace_extension(".audit.json");
  return p;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

const std::set<std::string> flag_keys = {"dirichlet-plates", "numeric", "all", "terms"};

bool has_option(const std::vector<std::string>& args, const std::string& key) {
  const std::string flag = "--" + key;
  return std::any_of(args.begin(), args.end(),
                     [&](const std::string& a) { return a == flag || a.rfind(flag + "=", 0) == 0; });
}

// Appends key=value lines from the --config file for every flag the command
// line does not already set.
std::vector<std::string> apply_config(std::vector<std::string> args) {
  std::optional<std::string> path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (!path) return args;
  std::ifstream f(*path);
  if (!f) throw ValidationError("cannot read config file " + *path);
  std::vector<std::string> extra;
  int line_no = 0;
  for (std::string line; std::getline(f, line);) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ValidationError(*path + ":" + std::to_string(line_no) + ": expected key=value");
    }
    auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key.rfind("--", 0) == 0) key = key.substr(2);
    if (key.empty() || key == "config" || has_option(args, key)) continue;
    if (flag_keys.count(key)) {
      if (value == "true" || value == "1") extra.push_back("--" + key);
      continue;
    }
    extra.push_back("--" + key + "=" + value);
  }
  args.insert(args.end(), extra.begin(), extra.end());
  return args;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  std::string format;
  std::string out_path;
  std::string audit_path;
  std::string config_path;

  CLI::App app{"Laakso spaces: spectra, spectral zeta functions and Casimir effects", "laakso"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", format, "Output format (csv or json)")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", out_path, "Write output to this file (atomically) instead of stdout");
  app.add_option("--audit", audit_path, "Audit sidecar path (default: <out> with .audit.json)");
  app.add_option("--config", config_path, "Flat key=value file supplying defaults for flags");

  SpectrumArgs spectrum;
  auto* sp = app.add_subcommand("spectrum", "Enumerate eigenvalues with multiplicities below a cutoff");
  add_sequence(sp, spectrum.seq);
  add_plates(sp, spectrum.plates);
  sp->add_option("--variant", spectrum.variant, "free, finite or plated")
      ->check(CLI::IsMember({"free", "finite", "plated"}));
  sp->add_option("--level", spectrum.level, "Graph level m (finite) or highest level (plated)")
      ->check(CLI::NonNegativeNumber);
  sp->add_option("--cutoff", spectrum.cutoff, "Eigenvalue cutoff")->required();

  GraphArgs graph;
  auto* gr = app.add_subcommand("graph", "Build the level-n quantum graph");
  add_sequence(gr, graph.seq);
  add_plates(gr, graph.plates);
  gr->add_option("--level", graph.level, "Graph level n")->required()->check(CLI::NonNegativeNumber);
  gr->add_flag("--dirichlet-plates", graph.dirichlet_plates, "Tag the plate coordinates as Dirichlet");

  OracleArgs oracle;
  auto* orc = app.add_subcommand("oracle", "Check the closed-form spectrum against a discretized solver");
  add_sequence(orc, oracle.seq);
  add_plates(orc, oracle.plates);
  orc->add_option("--level", oracle.level, "Graph level n")->check(CLI::NonNegativeNumber);
  orc->add_option("--mesh", oracle.mesh, "Points per edge on the fine mesh (even, >= 6)");
  orc->add_option("--cutoff", oracle.cutoff, "Eigenvalue cutoff");
  orc->add_option("--tol", oracle.tol, "Relative tolerance per eigenvalue")->check(CLI::PositiveNumber);
  orc->add_flag("--dirichlet-plates", oracle.dirichlet_plates, "Tag the plate coordinates as Dirichlet");

  ZetaArgs zeta;
  auto* ze = app.add_subcommand("zeta", "Evaluate a spectral zeta function");
  add_sequence(ze, zeta.seq);
  add_plates(ze, zeta.plates);
  ze->add_option("--variant", zeta.variant, "free, finite, plated or interval")
      ->check(CLI::IsMember({"free", "finite", "plated", "interval"}));
  ze->add_option("--level", zeta.level, "Graph level m")->check(CLI::NonNegativeNumber);
  ze->add_option("--s", zeta.s, "Complex argument as a+bi");
  ze->add_option("--re", zeta.re, "Real-part grid lo:hi:step");
  ze->add_option("--im", zeta.im, "Imaginary-part grid lo:hi:step");
  ze->add_option("--method", zeta.method, "closed or direct")->check(CLI::IsMember({"closed", "direct"}));
  ze->add_option("--cutoff", zeta.cutoff, "Enumeration cutoff for --method direct");
  ze->add_option("--tail-bound", zeta.tail_bound, "Tail certification bound for --method direct")
      ->check(CLI::PositiveNumber);

  PolesArgs poles;
  auto* po = app.add_subcommand("poles", "Locate and classify pole candidates in a region");
  add_sequence(po, poles.seq);
  po->add_option("--level", poles.level, "Graph level m (omit for the full space)");
  po->add_option("--re", poles.re, "Real-part range lo:hi");
  po->add_option("--im", poles.im, "Imaginary-part range lo:hi");
  po->add_flag("--all", poles.all, "Also list rejected candidates with their slopes");

  CasimirArgs casimir;
  auto* ca = app.add_subcommand("casimir", "Casimir energies, forces and pressures");
  ca->add_option("kind", casimir.kind, "energy, force, pressure, energy3d or pressure3d")
      ->required()
      ->check(CLI::IsMember({"energy", "force", "pressure", "energy3d", "pressure3d"}));
  add_sequence(ca, casimir.seq);
  add_plates(ca, casimir.plates);
  ca->add_option("--d", casimir.d, "Plate separation for the 3D arrangements");
  ca->add_flag("--numeric", casimir.numeric, "Differentiate the energy numerically (force only)");
  ca->add_option("--step", casimir.h, "Derivative step for --numeric");

  SweepArgs sweep;
  auto* sw = app.add_subcommand("sweep", "1D Casimir force over a range of plate cell counts");
  sw->add_option("--j", sweep.j, "Constant sequence value j");
  sw->add_option("--Z", sweep.Z, "Cell-count range lo:hi");
  sw->add_flag("--terms", sweep.terms, "Add the plate and boundary force terms");

  try {
    auto args = apply_config(raw_args);
    std::vector<std::string> argv_store;
    argv_store.reserve(args.size() + 1);
    argv_store.push_back("laakso");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_store) argv.push_back(s.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());

    Output result;
    if (sp->parsed()) result = cmd_spectrum(spectrum);
    if (gr->parsed()) result = cmd_graph(graph);
    if (orc->parsed()) result = cmd_oracle(oracle);
    if (ze->parsed()) result = cmd_zeta(zeta);
    if (po->parsed()) result = cmd_poles(poles);
    if (ca->parsed()) result = cmd_casimir(casimir);
    if (sw->parsed()) result = cmd_sweep(sweep);

    const std::string fmt = format.empty() ? result.default_format : format;
    std::string text;
    if (fmt == "json") {
      text = (result.document ? *result.document : render_json(result.table)).dump(2) + "\n";
    } else {
      text = render_csv(result.table);
    }
    if (out_path.empty()) {
      out << text;
    } else {
      write_atomic(out_path, text);
    }
    if (!result.audits.empty()) {
      std::filesystem::path sidecar = audit_path;
      if (sidecar.empty() && !out_path.empty()) sidecar = sidecar_path(out_path);
      if (sidecar.empty()) {
        err << result.audits.size() << " audit record(s) not saved; pass --out or --audit\n";
      } else {
        write_atomic(sidecar, to_json(result.audits).dump(2) + "\n");
      }
    }
    return result.code;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_validation;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return exit_validation;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return exit_resource;
  } catch (const NumericalGuardError& e) {
    err << "error: " << e.what() << '\n';
    return exit_numerical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_mismatch;
  }
}

}  // namespace laakso::cli
