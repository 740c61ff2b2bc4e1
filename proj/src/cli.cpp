#include "arcv/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "arcv/acceptance.hpp"
#include "arcv/demazure.hpp"
#include "arcv/errors.hpp"
#include "arcv/qchar.hpp"
#include "arcv/symfunc.hpp"
#include "arcv/veronese.hpp"

namespace arcv::cli {

using nlohmann::json;

namespace {

constexpr int kDefaultQmaxCap = 12;

struct RunConfig {
  std::string command;
  int l = 2;
  int n = 1;
  int nmax = -1;
  int qmax = -1;
  int tmax = -1;
  int a = 0;
  bool a_given = false;
  std::string ideal = "q";
  std::string kind = "global";
  std::string points;
  std::string levels;
  std::string format = "json";
  std::string profile = "desk";
  std::string config;
  int jobs = 0;
  bool compare = false;
  bool dump_generators = false;
  bool dump_basis = false;
  bool allow_large = false;
  bool no_timing = false;
};

const std::set<std::string> kFlags = {"compare",     "dump-generators", "dump-basis",
                                      "allow-large", "no-timing"};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<Rational> parse_rationals(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& item : split_list(text)) {
    try {
      Rational r(item);
      if (r.get_den() == 0) throw std::invalid_argument("zero denominator");
      r.canonicalize();
      out.push_back(r);
    } catch (const std::invalid_argument&) {
      throw UsageError("malformed rational '" + item + "'");
    }
  }
  return out;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  for (const auto& item : split_list(text)) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || item.empty()) throw UsageError("malformed integer '" + item + "'");
    out.push_back(v);
  }
  return out;
}

json rational_json(const Rational& r) {
  if (is_integer(r) && r.get_num().fits_slong_p()) return r.get_num().get_si();
  return to_string(r);
}

json character_json(const LaurentCharacter& ch) {
  json arr = json::array();
  for (int w : ch.support()) {
    json q = json::array();
    const QSeries s = ch.at(w);
    for (const auto& c : s.coeffs()) q.push_back(rational_json(c));
    arr.push_back({{"weight", w}, {"q", q}});
  }
  return arr;
}

struct Report {
  json body = json::object();
  json checks = json::array();
  bool mismatch = false;
  bool inconclusive = false;
  std::optional<LaurentCharacter> character;

  void check(const std::string& name, bool ok, const std::string& detail = "") {
    checks.push_back({{"name", name}, {"status", ok ? "pass" : "fail"}, {"detail", detail}});
    if (!ok) mismatch = true;
  }
  void inconclusive_check(const std::string& name, const std::string& detail) {
    checks.push_back({{"name", name}, {"status", "inconclusive"}, {"detail", detail}});
    inconclusive = true;
  }
};

void require_qmax(const RunConfig& cfg, int qmax) {
  if (qmax < 0) throw UsageError("--qmax must be >= 0");
  if (qmax > kDefaultQmaxCap && !cfg.allow_large)
    throw UsageError("--qmax " + std::to_string(qmax) + " exceeds the cap of " +
                     std::to_string(kDefaultQmaxCap) + " (pass --allow-large to override)");
}

void require_level(int l) {
  if (l < 1) throw UsageError("--l must be >= 1");
}

int default_qmax(const RunConfig& cfg, int fallback) { return cfg.qmax >= 0 ? cfg.qmax : fallback; }

IdealKind parse_ideal(const std::string& s) {
  if (s == "q") return IdealKind::Q;
  if (s == "qprime") return IdealKind::Qprime;
  if (s == "kernel") return IdealKind::KernelNu;
  throw UsageError("--ideal must be q, qprime or kernel");
}

// ---- subcommands ----

void cmd_character(const RunConfig& cfg, Report& rep, int workers) {
  (void)workers;
  require_level(cfg.l);
  if (cfg.n < 0) throw UsageError("--n must be >= 0");
  const int qmax = default_qmax(cfg, 4);
  require_qmax(cfg, qmax);
  const auto global = global_demazure_character(cfg.l, cfg.n, qmax);
  if (cfg.kind == "global") {
    rep.character = global;
  } else if (cfg.kind == "local") {
    rep.character = demazure_character(cfg.l, cfg.n, qmax);
  } else if (cfg.kind == "leading") {
    rep.character = hilbert_leading_quotient(cfg.l, cfg.n, qmax);
    rep.check("composition sum equals global Demazure character", *rep.character == global);
  } else if (cfg.kind == "module") {
    if (cfg.n < 1) throw UsageError("--kind module needs --n >= 1");
    const auto basis = build_global_demazure({cfg.l, cfg.n, qmax});
    rep.character = basis.character();
    rep.check("module character equals (1/(q)_n) ch D", *rep.character == global);
    if (cfg.dump_basis) {
      json pieces = json::array();
      for (int k = 0; k <= basis.max_ucount(); ++k)
        for (int d = 0; d <= qmax; ++d) {
          const auto& piece = basis.piece(k, d);
          if (piece.basis.empty()) continue;
          json elems = json::array();
          for (const auto& b : piece.basis) elems.push_back(b.to_string());
          pieces.push_back({{"weight", basis.weight_of(k)},
                            {"qdeg", d},
                            {"dim", piece.basis.size()},
                            {"basis", elems}});
        }
      rep.body["basis"] = pieces;
    }
  } else {
    throw UsageError("--kind must be global, local, leading or module");
  }
}

void cmd_supernomial(const RunConfig& cfg, Report& rep) {
  require_level(cfg.l);
  if (cfg.n < 0) throw UsageError("--n must be >= 0");
  const int qmax = default_qmax(cfg, 4);
  require_qmax(cfg, qmax);
  const auto L = demazure_L(cfg.l, cfg.n);
  json list = json::array();
  LaurentCharacter ch(qmax);
  for (int a = -cfg.l * cfg.n; a <= cfg.l * cfg.n; ++a) {
    if (cfg.a_given && a != cfg.a) continue;
    const QSeries s = supernomial({L, a}, qmax);
    json q = json::array();
    for (const auto& c : s.coeffs()) q.push_back(rational_json(c));
    list.push_back({{"a", a}, {"q", q}});
    ch.add(a, s);
  }
  rep.body["L"] = L;
  rep.body["supernomials"] = list;
  rep.character = ch;
}

void cmd_jet(const RunConfig& cfg, Report& rep, int workers) {
  require_level(cfg.l);
  if (cfg.n < 0) throw UsageError("--n must be >= 0");
  const int qmax = default_qmax(cfg, 4);
  require_qmax(cfg, qmax);
  JetRingSpec spec = JetRingSpec::make(cfg.l, cfg.n, qmax);
  if (cfg.tmax >= 0) spec.tmax = cfg.tmax;
  const IdealKind ideal = parse_ideal(cfg.ideal);

  if (cfg.dump_generators) {
    const auto gens = ideal == IdealKind::Qprime ? build_Qprime(spec) : build_Q(spec);
    json arr = json::array();
    for (const auto& g : gens.gens)
      arr.push_back({{"s", g.s}, {"r", g.r}, {"w", g.w}, {"k", g.k}, {"polynomial", g.poly.to_string()}});
    rep.body["generators"] = arr;
  }

  const auto result = quotient_pieces(spec, ideal, workers);
  rep.character = result.character;
  json pieces = json::array();
  for (const auto& p : result.pieces)
    pieces.push_back({{"weight", p.weight},
                      {"qdeg", p.qdeg},
                      {"ambient", p.ambient},
                      {"rank", p.rank},
                      {"quotient", p.quotient}});
  rep.body["pieces"] = pieces;

  if (cfg.compare) {
    const int nmax = cfg.nmax >= 0 ? cfg.nmax : cfg.n;
    const auto vr = verify_reduced(cfg.l, nmax, qmax, workers);
    rep.check("S/I == S/ker nu == global Demazure == composition sum, with S/I' >= S/I",
              vr.passed, vr.failures.empty() ? std::to_string(vr.rows.size()) + " coefficients"
                                             : vr.failures.front());
    rep.check(std::string("selected quotient equals global Demazure character"),
              result.character == global_demazure_character(cfg.l, cfg.n, qmax));
  }
}

void cmd_fiber(const RunConfig& cfg, Report& rep, int workers) {
  require_level(cfg.l);
  if (cfg.n < 1) throw UsageError("--n must be >= 1");
  std::vector<Rational> point =
      cfg.points.empty() ? std::vector<Rational>(cfg.n, Rational(0)) : parse_rationals(cfg.points);
  if (static_cast<int>(point.size()) != cfg.n)
    throw UsageError("--point needs exactly n coordinates");
  const int qmax = default_qmax(cfg, demazure_top_degree(cfg.l, cfg.n) + 1);
  require_qmax(cfg, qmax);
  if (qmax < 1) throw UsageError("fiber needs --qmax >= 1");
  const auto res = fiber_dimension({cfg.l, cfg.n, qmax}, point, workers);
  long expected = 1;
  for (int i = 0; i < cfg.n; ++i) expected *= cfg.l + 1;

  json by_weight = json::array();
  for (auto [w, d] : res.by_weight)
    if (d) by_weight.push_back({{"weight", w}, {"dim", d}});
  json pt = json::array();
  for (const auto& c : point) pt.push_back(to_string(c));
  rep.body["fiber"] = {{"point", pt},
                       {"dimension", res.dimension},
                       {"previous_dimension", res.previous_dimension},
                       {"by_weight", by_weight},
                       {"status", res.status == FiberStatus::Ok ? "ok" : "inconclusive"}};
  if (res.status == FiberStatus::Inconclusive) {
    rep.inconclusive_check("fiber dimension stabilized",
                           "q-bound " + std::to_string(qmax - 1) + " gives " +
                               std::to_string(res.previous_dimension) + ", q-bound " +
                               std::to_string(qmax) + " gives " + std::to_string(res.dimension));
    return;
  }
  rep.check("fiber dimension stabilized", true);
  rep.check("fiber dimension equals (l+1)^n", res.dimension == expected,
            std::to_string(res.dimension) + " vs " + std::to_string(expected));
  rep.check("p_{n+1} - p_{n+1}(c) acts inside the generated span", res.higher_power_sums_in_span);
  if (res.graded_character) {
    rep.character = *res.graded_character;
    rep.check("graded fiber at 0 equals the Demazure character",
              *res.graded_character == demazure_character(cfg.l, cfg.n, qmax));
  }
}

void cmd_fusion(const RunConfig& cfg, Report& rep) {
  const auto levels = parse_ints(cfg.levels);
  const auto points = parse_rationals(cfg.points);
  if (levels.empty()) throw UsageError("--levels is required");
  if (points.size() != levels.size())
    throw UsageError("--points must list one point per level");
  int top = 0;
  for (int l : levels) top += l;
  const int qmax = default_qmax(cfg, static_cast<int>(levels.size() * levels.size()));
  require_qmax(cfg, qmax);
  rep.character = fusion_character(levels, points, qmax);
  if (cfg.compare) {
    const bool uniform = std::all_of(levels.begin(), levels.end(), [&](int l) { return l == levels[0]; });
    if (!uniform) throw UsageError("--compare needs equal levels");
    rep.check("fusion character equals the Demazure character",
              *rep.character ==
                  demazure_character(levels[0], static_cast<int>(levels.size()), qmax));
  }
}

void cmd_identities(const RunConfig& cfg, Report& rep) {
  require_level(cfg.l);
  if (cfg.n < 1) throw UsageError("--n must be >= 1");
  const auto res = demazure_relation_check(cfg.l, cfg.n);
  for (const auto& [name, ok] : res.checks) rep.check(name, ok);
  json newton = json::array();
  for (int j = 0; j <= cfg.n; ++j)
    newton.push_back({{"j", j}, {"E", newton_to_elementary(j, cfg.n).to_string()}});
  rep.body["newton"] = newton;
  rep.body["g_n"] = res.g_n_expansion;
  rep.body["newton_residual"] = res.newton_residual;
  rep.body["top_coefficient"] = rational_json(res.top_coefficient);
}

void cmd_accept(const RunConfig& cfg, Report& rep, int workers, std::ostream& err) {
  const Profile profile = parse_profile(cfg.profile);
  run_acceptance({profile, workers}, [&](const CriterionResult& r) {
    err << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.name << " (" << r.detail << ")\n";
    rep.check(std::to_string(r.id) + ". " + r.name, r.passed, r.detail);
  });
}

json params_json(const RunConfig& c) {
  json p = {{"l", c.l}, {"n", c.n}};
  if (c.qmax >= 0) p["qmax"] = c.qmax;
  if (c.tmax >= 0) p["tmax"] = c.tmax;
  if (c.nmax >= 0) p["nmax"] = c.nmax;
  if (c.a_given) p["a"] = c.a;
  if (c.command == "jet") p["ideal"] = c.ideal;
  if (c.command == "character") p["kind"] = c.kind;
  if (!c.points.empty()) p["points"] = c.points;
  if (!c.levels.empty()) p["levels"] = c.levels;
  if (c.command == "accept") p["profile"] = c.profile;
  if (c.compare) p["compare"] = true;
  return p;
}

void write_csv(const Report& rep, std::ostream& out) {
  if (rep.character) {
    out << "weight,qdeg,coefficient\n";
    for (int w : rep.character->support()) {
      const QSeries s = rep.character->at(w);
      for (int k = 0; k <= s.qmax(); ++k)
        if (s[k] != 0) out << w << "," << k << "," << to_string(s[k]) << "\n";
    }
  }
  if (!rep.checks.empty()) {
    out << "check,status,detail\n";
    for (const auto& c : rep.checks) {
      std::string detail = c["detail"].get<std::string>();
      std::replace(detail.begin(), detail.end(), ',', ';');
      out << c["name"].get<std::string>() << "," << c["status"].get<std::string>() << ","
          << detail << "\n";
    }
  }
}

// Prepends key=value settings from a config file for every option the
// command line does not already set.
std::vector<std::string> merge_config(const std::vector<std::string>& args) {
  std::string path;
  for (std::size_t i = 0; i + 1 < args.size(); ++i)
    if (args[i] == "--config") path = args[i + 1];
  for (const auto& a : args)
    if (a.rfind("--config=", 0) == 0) path = a.substr(9);
  if (path.empty() || args.empty()) return args;

  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::set<std::string> given;
  for (const auto& a : args)
    if (a.rfind("--", 0) == 0) given.insert(a.substr(2, a.find('=') == std::string::npos
                                                             ? std::string::npos
                                                             : a.find('=') - 2));
  std::vector<std::string> extra;
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError("config line without '=': " + line);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "config" || given.count(key)) continue;
    if (kFlags.count(key)) {
      if (value == "true" || value == "1") extra.push_back("--" + key);
    } else {
      extra.push_back("--" + key);
      extra.push_back(value);
    }
  }
  // Subcommand name stays first.
  std::vector<std::string> merged{args.front()};
  merged.insert(merged.end(), extra.begin(), extra.end());
  merged.insert(merged.end(), args.begin() + 1, args.end());
  return merged;
}

}  // namespace

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact jet rings of Veronese curves, sl2 global Demazure modules and q-characters",
               "arcv"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--qmax", cfg.qmax, "q-degree bound (inclusive)");
    sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--jobs", cfg.jobs, "worker threads (default: ARCV_WORKERS or 1)");
    sub->add_option("--config", cfg.config, "key=value file mirroring the flags");
    sub->add_flag("--allow-large", cfg.allow_large, "lift the qmax cap");
    sub->add_flag("--no-timing", cfg.no_timing, "report timing_ms as 0");
  };
  auto add_ln = [&](CLI::App* sub) {
    sub->add_option("--l", cfg.l, "Veronese degree / level");
    sub->add_option("--n", cfg.n, "x-degree / number of tensor factors");
  };

  auto* character = app.add_subcommand("character", "closed-form or computed characters");
  add_ln(character);
  add_common(character);
  character->add_option("--kind", cfg.kind, "global, local, leading or module");
  character->add_flag("--dump-basis", cfg.dump_basis, "list basis elements (kind=module)");

  auto* supernom = app.add_subcommand("supernomial", "q-supernomials for L = (0,...,0,n)");
  add_ln(supernom);
  add_common(supernom);
  supernom->add_option("--a", cfg.a, "single weight");

  auto* jet = app.add_subcommand("jet", "quotients of the jet ring of the Veronese curve");
  add_ln(jet);
  add_common(jet);
  jet->add_option("--tmax", cfg.tmax, "t-order bound for generator series");
  jet->add_option("--nmax", cfg.nmax, "largest n for --compare");
  jet->add_option("--ideal", cfg.ideal, "q, qprime or kernel");
  jet->add_flag("--compare", cfg.compare, "check against all other characters");
  jet->add_flag("--dump-generators", cfg.dump_generators, "list generator coefficients");

  auto* fiber = app.add_subcommand("fiber", "fibers of the global Demazure module");
  add_ln(fiber);
  add_common(fiber);
  fiber->add_option("--point", cfg.points, "comma-separated rational coordinates");

  auto* fusion = app.add_subcommand("fusion", "fusion product of evaluation modules");
  add_common(fusion);
  fusion->add_option("--levels", cfg.levels, "comma-separated levels")->required();
  fusion->add_option("--points", cfg.points, "comma-separated distinct rationals")->required();
  fusion->add_flag("--compare", cfg.compare, "compare with the Demazure character");

  auto* identities = app.add_subcommand("identities", "symmetric-function identities");
  add_ln(identities);
  add_common(identities);

  auto* accept = app.add_subcommand("accept", "run the acceptance suite");
  add_common(accept);
  accept->add_option("--profile", cfg.profile, "desk, quick or stretch");

  try {
    std::vector<std::string> args = merge_config(raw_args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kInvalidInput;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }

  for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();
  cfg.a_given = supernom->count("--a") > 0;

  int workers = 1;
  if (const char* env = std::getenv("ARCV_WORKERS")) workers = std::max(1, std::atoi(env));
  if (cfg.jobs > 0) workers = cfg.jobs;

  Report rep;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (cfg.command == "character") cmd_character(cfg, rep, workers);
    else if (cfg.command == "supernomial") cmd_supernomial(cfg, rep);
    else if (cfg.command == "jet") cmd_jet(cfg, rep, workers);
    else if (cfg.command == "fiber") cmd_fiber(cfg, rep, workers);
    else if (cfg.command == "fusion") cmd_fusion(cfg, rep);
    else if (cfg.command == "identities") cmd_identities(cfg, rep);
    else if (cfg.command == "accept") cmd_accept(cfg, rep, workers, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const TruncationError& e) {
    err << "error: " << e.what() << " (needed order " << e.needed_order() << ")\n";
    return kInconclusive;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kMismatch;
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();

  if (cfg.format == "csv") {
    write_csv(rep, out);
  } else {
    json doc = rep.body;
    doc["command"] = cfg.command;
    doc["params"] = params_json(cfg);
    doc["character"] = rep.character ? character_json(*rep.character) : json::array();
    doc["checks"] = rep.checks;
    doc["timing_ms"] = cfg.no_timing ? 0 : ms;
    out << doc.dump(2) << "\n";
  }
  if (rep.mismatch) return kMismatch;
  if (rep.inconclusive) return kInconclusive;
  return kOk;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace arcv::cli
