// schubert: command-line front end for the schubert library.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "schubert/errors.hpp"
#include "schubert/report.hpp"
#include "schubert/serialize.hpp"

namespace {

using namespace schubert;

struct Options {
  int l = 2;
  int m = 4;
  int q = 2;
  std::string format = "markdown";
  std::string out;
  std::size_t guard = kDefaultEnumerationGuard;
  double oracle_budget = 2e7;
  std::string maxima;
  bool has_maxima = false;
  std::string r_range;
  std::string experiment;
  std::string config;
};

enum Exit { kOk = 0, kFailure = 1, kInvalid = 2, kResource = 3 };

// Values from --config apply only where the flag was not given.
void apply_config(CLI::App& app, Options& o) {
  if (o.config.empty()) return;
  std::ifstream in(o.config);
  if (!in) throw InvalidArgument("cannot open config file: " + o.config);
  nlohmann::json cfg;
  try {
    cfg = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed config file: ") + e.what());
  }
  auto given = [&](const std::string& name) {
    for (const auto* sub : app.get_subcommands()) {
      const auto* opt = sub->get_option_no_throw(name);
      if (opt && opt->count() > 0) return true;
    }
    return false;
  };
  try {
    if (cfg.contains("l") && !given("--l")) o.l = cfg["l"].get<int>();
    if (cfg.contains("m") && !given("--m")) o.m = cfg["m"].get<int>();
    if (cfg.contains("q") && !given("--q")) o.q = cfg["q"].get<int>();
    if (cfg.contains("format") && !given("--format")) o.format = cfg["format"].get<std::string>();
    if (cfg.contains("out") && !given("--out")) o.out = cfg["out"].get<std::string>();
    if (cfg.contains("guard") && !given("--guard")) o.guard = cfg["guard"].get<std::size_t>();
    if (cfg.contains("oracle-budget") && !given("--oracle-budget")) o.oracle_budget = cfg["oracle-budget"].get<double>();
    if (cfg.contains("maxima") && !given("--maxima")) {
      o.maxima = cfg["maxima"].get<std::string>();
      o.has_maxima = true;
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("bad config value: ") + e.what());
  }
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw InvalidArgument("cannot write " + o.out);
  f << text;
}

void emit_table(const Options& o, const Table& t) { emit(o, render(t, parse_format(o.format))); }

std::pair<std::size_t, std::size_t> parse_range(const std::string& s, std::size_t hi) {
  if (s.empty()) return {1, hi};
  const auto colon = s.find(':');
  try {
    if (colon == std::string::npos) {
      const auto r = std::stoul(s);
      return {r, r};
    }
    const std::size_t lo = colon == 0 ? 1 : std::stoul(s.substr(0, colon));
    const std::size_t top = colon + 1 == s.size() ? hi : std::stoul(s.substr(colon + 1));
    return {lo, top};
  } catch (const std::logic_error&) {
    throw InvalidArgument("bad --r-range: " + s + " (expected r, a:b, a: or :b)");
  }
}

BigInt budget(const Options& o) {
  if (o.oracle_budget < 0) throw InvalidArgument("--oracle-budget must be non-negative");
  return BigInt(static_cast<unsigned long long>(o.oracle_budget));
}

SchubertUnion selected_union(const Options& o) {
  const GrassParams params(o.l, o.m);
  return o.has_maxima ? parse_maxima(params, o.maxima) : SchubertUnion::full(params);
}

int run(CLI::App& app, Options& o) {
  apply_config(app, o);
  const std::string cmd = app.get_subcommands().front()->get_name();

  if (cmd == "enumerate") {
    emit_table(o, enumerate_table(GrassParams(o.l, o.m), o.guard));
  } else if (cmd == "dual") {
    const GrassParams params(o.l, o.m);
    emit_table(o, o.has_maxima ? dual_table(parse_maxima(params, o.maxima)) : dual_pairs_table(params, o.guard));
  } else if (cmd == "bounds") {
    emit_table(o, bounds_table(GrassParams(o.l, o.m), o.guard));
  } else if (cmd == "directions") {
    emit_table(o, directions_table(GrassParams(o.l, o.m)));
  } else if (cmd == "krull") {
    emit_table(o, krull_table(GrassParams(o.l, o.m)));
  } else if (cmd == "encode") {
    emit_table(o, encode_table(selected_union(o)));
  } else if (cmd == "genmatrix") {
    const std::string fmt = o.format == "markdown" ? "text" : o.format;
    if (fmt != "text" && fmt != "binary") throw InvalidArgument("genmatrix --format is text or binary");
    const GeneratorMatrix g = generator_matrix(selected_union(o), Field(o.q));
    std::ostringstream os;
    if (fmt == "text") write_text(os, g);
    else write_binary(os, g);
    if (o.out.empty()) {
      std::cout << os.str();
    } else {
      std::ofstream f(o.out, std::ios::binary);
      if (!f) throw InvalidArgument("cannot write " + o.out);
      f << os.str();
    }
  } else if (cmd == "weights") {
    const GrassParams params(o.l, o.m);
    if (o.has_maxima) {
      emit_table(o, union_weights_table(parse_maxima(params, o.maxima), o.q, budget(o)));
    } else {
      const auto [lo, hi] = parse_range(o.r_range, params.grid_size());
      emit_table(o, weights_table(params, o.q, lo, hi, budget(o), o.guard));
    }
  } else if (cmd == "experiment") {
    emit_table(o, experiment_table(o.experiment, GrassParams(o.l, o.m), o.q, budget(o), o.guard));
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schubert unions in Grassmannians: tables, duality, bounds and Grassmann codes"};
  app.require_subcommand(1);
  Options o;

  const char* env_guard = "SCHUBERT_GUARD";
  auto common = [&](CLI::App* sub, bool with_q) {
    sub->add_option("--l", o.l, "Subspace dimension l")->capture_default_str();
    sub->add_option("--m", o.m, "Ambient dimension m")->capture_default_str();
    if (with_q) sub->add_option("--q", o.q, "Field size (prime power <= 256)")->capture_default_str();
    sub->add_option("--format", o.format, "markdown, csv or json")->capture_default_str();
    sub->add_option("--out", o.out, "Output file (default: stdout)");
    sub->add_option("--guard", o.guard, "Largest grid size to enumerate exhaustively")
        ->envname(env_guard)
        ->capture_default_str();
    sub->add_option("--config", o.config, "JSON file with defaults for the same keys");
  };
  auto maxima = [&](CLI::App* sub) {
    sub->add_option("--maxima", o.maxima, "Union maxima, e.g. \"1,5;2,3\" or \"empty\"")
        ->each([&](const std::string&) { o.has_maxima = true; });
  };
  auto oracle = [&](CLI::App* sub) {
    sub->add_option("--oracle-budget", o.oracle_budget, "Subspace budget for the brute-force oracle; 0 disables it")
        ->capture_default_str();
  };

  common(app.add_subcommand("enumerate", "All unions with span, Krull dimension, point count and maximality"), false);
  auto* dual = app.add_subcommand("dual", "Dual of one union (--maxima) or all dual pairs up to half span");
  common(dual, false);
  maxima(dual);
  common(app.add_subcommand("bounds", "J_r, D_r, E_r per codimension"), false);
  common(app.add_subcommand("directions", "Left/right direction of the maximal union per codimension (l = 2)"), false);
  common(app.add_subcommand("krull", "Largest Krull dimension per span and threshold regimes (l = 2)"), false);
  auto* gen = app.add_subcommand("genmatrix", "Generator matrix of C(l,m) or of a union code");
  common(gen, true);
  maxima(gen);
  auto* weights = app.add_subcommand("weights", "Higher weights: formulas, bounds and oracle");
  common(weights, true);
  maxima(weights);
  oracle(weights);
  weights->add_option("--r-range", o.r_range, "r, a:b, a: or :b");
  auto* exp = app.add_subcommand("experiment", "Run one of the open-question checks");
  exp->add_option("question", o.experiment, "Q3, Q4, Q8 or Q9")->required();
  common(exp, true);
  oracle(exp);
  auto* enc = app.add_subcommand("encode", "M_U and sigma_U encodings of an l = 2 union and its dual");
  common(enc, false);
  maxima(enc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    return run(app, o);
  } catch (const ResourceLimit& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kResource;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const NotTwoDim& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const EmptyUnion& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const NotDownwardClosed& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
}
