// Command line front end for the promotion chain library.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "promo/catalog.hpp"
#include "promo/chain.hpp"
#include "promo/error.hpp"
#include "promo/mixing.hpp"
#include "promo/monoid.hpp"
#include "promo/promotion.hpp"
#include "promo/report.hpp"
#include "promo/spectral.hpp"
#include "promo/subsets.hpp"
#include "promo/sweep.hpp"

namespace {

using namespace promo;

constexpr const char* kVersion = "1.0.0";

enum Exit { kOk = 0, kVerificationFailed = 1, kInputError = 2 };

// Input problems are reported with the file they came from.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Poset load_poset(const std::string& path) {
  try {
    return parse_poset(read_file(path));
  } catch (const Error& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw InputError(path + ": cannot write file");
  out << content;
}

Json envelope(const std::string& command, const Json& input) {
  return Json{{"tool", "promo"}, {"version", kVersion}, {"command", command}, {"input", input}};
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string rational_text(const std::vector<Rational>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ' ';
    out += to_string(v[i]);
  }
  return out;
}

// --- extensions -------------------------------------------------------------

struct ExtensionsArgs {
  std::string poset;
  bool json = false;
};

int cmd_extensions(const ExtensionsArgs& a) {
  Poset p = load_poset(a.poset);
  auto ext = linear_extensions(p);
  if (a.json) {
    Json list = Json::array();
    for (const auto& w : ext) list.push_back(format_word(w));
    Json out = envelope("extensions", to_json(p));
    out["count"] = ext.size();
    out["extensions"] = list;
    print_json(out);
    return kOk;
  }
  std::cout << ext.size() << (ext.size() == 1 ? " extension" : " extensions") << ":";
  for (const auto& w : ext) std::cout << ' ' << format_word(w);
  std::cout << "\n";
  return kOk;
}

// --- matrix -----------------------------------------------------------------

struct MatrixArgs {
  std::string poset;
  std::string mode = "promotion";
  std::string weights;
  std::string dot;
  bool no_loops = false;
  bool json = false;
};

int cmd_matrix(const MatrixArgs& a) {
  Poset p = load_poset(a.poset);
  WeightMode mode = parse_weight_mode(a.mode);
  auto graph = build_promotion_graph(p, mode);
  if (!a.dot.empty()) write_file(a.dot, to_dot(graph, !a.no_loops));
  auto m = transition_matrix(graph);
  Json out = envelope("matrix", to_json(p));
  out["mode"] = to_string(mode);
  if (a.weights.empty()) {
    if (a.json) {
      out["matrix"] = to_json(m);
      print_json(out);
    } else {
      std::cout << m.to_text();
    }
    return kOk;
  }
  WeightVector w = WeightVector::parse(a.weights, p.size());
  auto numeric = evaluate(m, w);
  if (a.json) {
    out["weights"] = to_json(w);
    Json basis = Json::array();
    for (const auto& word : m.basis().words()) basis.push_back(format_word(word));
    out["basis"] = basis;
    out["entries"] = to_json(numeric);
    print_json(out);
  } else {
    std::cout << numeric.to_string();
  }
  return kOk;
}

// --- stationary -------------------------------------------------------------

struct StationaryArgs {
  std::string poset;
  std::string mode = "promotion";
  std::string weights = "uniform";
  bool json = false;
};

int cmd_stationary(const StationaryArgs& a) {
  Poset p = load_poset(a.poset);
  WeightMode mode = parse_weight_mode(a.mode);
  WeightVector w = WeightVector::parse(a.weights, p.size());
  w.require_positive(false);
  auto m = transition_matrix(p, mode);
  auto solved = stationary_solve(evaluate(m, w.normalized()));
  std::vector<Rational> formula;
  if (mode == WeightMode::Uniform) {
    formula.assign(m.size(), Rational(1, static_cast<unsigned long>(m.size())));
  } else {
    formula = normalize(product_weights(m.basis(), w));
  }
  const bool agree = solved == formula;
  if (a.json) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
      Json row{{"extension", format_word(m.basis()[i])}};
      if (mode == WeightMode::Promotion) {
        row["formula"] = stationary_weight(p, m.basis()[i]).to_string();
      }
      row["probability"] = rational_json(solved[i]);
      rows.push_back(std::move(row));
    }
    Json out = envelope("stationary", to_json(p));
    out["mode"] = to_string(mode);
    out["weights"] = to_json(w);
    out["stationary"] = rows;
    out["formula_agrees"] = agree;
    print_json(out);
  } else {
    for (std::size_t i = 0; i < m.size(); ++i) {
      std::cout << format_word(m.basis()[i]) << "  " << to_string(solved[i]);
      if (mode == WeightMode::Promotion) {
        std::cout << "  w = " << stationary_weight(p, m.basis()[i]).to_string();
      }
      std::cout << "\n";
    }
    std::cout << "formula agrees with solve: " << (agree ? "true" : "false") << "\n";
  }
  return agree ? kOk : kVerificationFailed;
}

// --- spectrum ---------------------------------------------------------------

struct SpectrumArgs {
  std::string poset;
  bool probe = false;
  int samples = 4;
  std::uint64_t seed = 1;
  bool json = false;
};

std::string eigenvalue_label(const LinearForm& f) {
  if (f == LinearForm::all_ones(f.size())) return f.to_string() + " (= 1)";
  return f.to_string();
}

int cmd_spectrum(const SpectrumArgs& a) {
  Poset p = load_poset(a.poset);
  const bool forest = classify(p).is_rooted_forest;
  Json out = envelope("spectrum", to_json(p));
  out["rooted_forest"] = forest;
  if (forest && !a.probe) {
    auto prediction = predicted_spectrum(p);
    std::mt19937_64 rng(a.seed);
    bool ok = true;
    std::vector<WeightVector> samples;
    for (int s = 0; s < a.samples; ++s) {
      samples.push_back(WeightVector::random(p.size(), rng));
      ok = verify_spectrum(p, prediction, samples.back()) && ok;
    }
    if (a.json) {
      out["spectrum"] = to_json(prediction);
      Json used = Json::array();
      for (const auto& w : samples) used.push_back(to_json(w));
      out["samples"] = used;
      out["verified"] = ok;
      print_json(out);
    } else {
      for (const auto& item : prediction.items) {
        std::cout << format_set(item.upper_set) << "  " << eigenvalue_label(item.eigenvalue)
                  << "  multiplicity " << to_string(item.multiplicity) << "\n";
      }
      std::cout << "characteristic polynomial verified at " << a.samples
                << " random weights: " << (ok ? "true" : "false") << "\n";
    }
    return ok ? kOk : kVerificationFailed;
  }
  ProbeOptions options;
  options.samples = a.samples;
  options.seed = a.seed;
  auto probe = probe_linear_spectrum(p, options);
  auto conjecture = check_conjecture(p, probe);
  if (a.json) {
    out["probe"] = to_json(probe);
    out["conjecture"] = to_json(conjecture);
    print_json(out);
  } else {
    if (!probe.linear) std::cout << "nonlinear (residual degree " << probe.residual_degree << ")\n";
    for (const auto& ev : probe.eigenvalues) {
      std::cout << eigenvalue_label(ev.form) << "  multiplicity " << ev.multiplicity << "\n";
    }
    if (conjecture.hypothesis) {
      std::cout << "successor conditions consistent: "
                << (conjecture.consistent ? "true" : "false") << "\n";
    }
  }
  return kOk;
}

// --- monoid -----------------------------------------------------------------

struct MonoidArgs {
  std::string poset;
  std::string eggbox;
  std::size_t cap = 100000;
  bool json = false;
};

int cmd_monoid(const MonoidArgs& a) {
  Poset p = load_poset(a.poset);
  auto gens = generators(p);
  auto m = Monoid::generate(gens, ProductOrder::Matrix, a.cap);
  auto classes = green_classes(m);
  // Pictures use the operator product, where rows are R-classes of the
  // right action (the L-classes of the matrix product).
  auto box = eggbox(Monoid::generate(gens, ProductOrder::Action, a.cap));
  if (!a.eggbox.empty()) write_file(a.eggbox, to_dot(box));
  std::size_t idempotents = 0;
  for (std::size_t x = 0; x < m.size(); ++x) idempotents += is_idempotent(m, x);
  const bool r_trivial = classes.r_count == m.size();
  const bool aperiodic = classes.h_count == m.size();
  if (a.json) {
    Json out = envelope("monoid", to_json(p));
    out["size"] = m.size();
    out["idempotents"] = idempotents;
    out["r_trivial"] = r_trivial;
    out["l_trivial"] = classes.l_count == m.size();
    out["aperiodic"] = aperiodic;
    out["r_classes"] = classes.r_count;
    out["l_classes"] = classes.l_count;
    out["h_classes"] = classes.h_count;
    out["d_classes"] = classes.d_count;
    out["eggbox"] = to_json(box);
    print_json(out);
  } else {
    std::cout << "R-trivial: " << (r_trivial ? "true" : "false") << "; " << m.size()
              << " elements\n";
    std::cout << "aperiodic: " << (aperiodic ? "true" : "false") << "; " << idempotents
              << " idempotents; " << classes.d_count << " D-classes\n";
    std::cout << to_ascii(box);
  }
  return kOk;
}

// --- mix --------------------------------------------------------------------

struct MixArgs {
  std::string poset;
  std::string weights = "uniform";
  std::size_t kmax = 0;
  std::string start;
  std::size_t simulate = 0;
  std::uint64_t seed = 1;
  bool json = false;
};

int cmd_mix(const MixArgs& a) {
  Poset p = load_poset(a.poset);
  WeightVector w = WeightVector::parse(a.weights, p.size());
  w.require_positive(true);
  std::optional<std::size_t> start;
  if (!a.start.empty()) {
    Basis basis(linear_extensions(p));
    auto index = basis.find(parse_word(a.start));
    if (!index) throw Error(ErrorKind::NotALinearExtension, a.start + " is not an extension");
    start = *index;
  }
  auto rows = mixing_table(p, w, a.kmax, start);
  bool ok = true;
  for (const auto& row : rows) {
    if (row.bound && !bound_holds(row.tv, *row.bound)) ok = false;
  }
  std::optional<WalkResult> walk;
  if (a.simulate > 0) walk = simulate_walk(p, w, a.simulate, a.seed);
  if (a.json) {
    Json out = envelope("mix", to_json(p));
    out["weights"] = to_json(w);
    out["mixing_time_upper"] = rational_json(mixing_time_upper(p.size(), w.min(), 1));
    out["rows"] = to_json(rows);
    out["bound_holds"] = ok;
    if (walk) {
      Json empirical = Json::array();
      for (double x : walk->empirical) empirical.push_back(x);
      out["simulation"] = Json{{"steps", a.simulate}, {"seed", a.seed}, {"empirical", empirical}};
    }
    print_json(out);
  } else {
    std::cout << to_csv(rows);
    if (walk) {
      std::cout << "# empirical distribution after " << a.simulate << " steps (seed " << a.seed
                << "):";
      for (double x : walk->empirical) std::cout << ' ' << x;
      std::cout << "\n";
    }
  }
  return ok ? kOk : kVerificationFailed;
}

// --- subset -----------------------------------------------------------------

struct SubsetArgs {
  std::string file;
  std::vector<std::string> targets;
  std::vector<std::string> chains;
  std::string mode = "promotion";
  std::string weights = "uniform";
  bool json = false;
};

int cmd_subset(const SubsetArgs& a) {
  PermSubset subset;
  Json input;
  if (!a.file.empty()) {
    try {
      subset = parse_subset(read_file(a.file));
    } catch (const Error& e) {
      throw InputError(a.file + ": " + e.what());
    }
    input = a.file;
  } else {
    std::vector<NetworkTarget> targets;
    for (const auto& t : a.targets) targets.push_back({parse_word(t), std::nullopt});
    for (const auto& c : a.chains) {
      std::vector<Word> chain;
      std::stringstream in(c);
      for (std::string item; std::getline(in, item, ';');) chain.push_back(parse_word(item));
      if (chain.empty()) throw InputError("empty chain");
      targets.push_back({chain.back(), chain});
    }
    if (targets.empty()) throw InputError("give a subset file, --targets or --chain");
    subset = sorting_network_union(targets);
    input = Json{{"targets", a.targets}, {"chains", a.chains}};
  }
  WeightMode mode = parse_weight_mode(a.mode);
  WeightVector w = WeightVector::parse(a.weights, subset.n);
  auto graph = subset_graph(subset, mode);
  const bool connected = is_strongly_connected(graph);
  auto matrix = transition_matrix(graph);
  auto stationary = subset_stationary(subset, mode, w);
  const bool master = verify_master_equation(matrix, stationary, w);
  if (a.json) {
    Json out = envelope("subset", input);
    Json perms = Json::array();
    for (const auto& p : subset.perms.words()) perms.push_back(format_word(p));
    out["mode"] = to_string(mode);
    out["subset"] = perms;
    out["strongly_connected"] = connected;
    out["master_equation"] = master;
    Json weights = Json::array();
    for (const auto& x : normalize(stationary)) weights.push_back(rational_json(x));
    out["stationary"] = weights;
    print_json(out);
  } else {
    std::cout << subset.perms.size() << " permutations:";
    for (const auto& p : subset.perms.words()) std::cout << ' ' << format_word(p);
    std::cout << "\nstrongly connected: " << (connected ? "true" : "false") << "\n";
    std::cout << "stationary: " << rational_text(normalize(stationary)) << "\n";
    std::cout << "master equation: " << (master ? "true" : "false") << "\n";
  }
  return master ? kOk : kVerificationFailed;
}

// --- sweep ------------------------------------------------------------------

struct SweepArgs {
  SweepOptions options;
  std::string family = "all";
  bool json = false;
};

int cmd_sweep(SweepArgs a) {
  a.options.family = parse_family(a.family);
  auto report = run_sweep(a.options);
  if (a.json) {
    Json out = envelope("sweep", Json{{"family", a.family}});
    out["report"] = report.json;
    print_json(out);
  } else {
    for (const auto& entry : report.json["results"]) {
      std::cout << entry["encoding"].get<std::string>() << "  "
                << (entry["passed"].get<bool>() ? "ok" : "FAILED") << "\n";
    }
    std::cout << report.posets << " posets, " << report.failures << " failed checks\n";
    for (const auto& e : report.json["conjecture_exceptions"]) {
      std::cout << "linear spectrum outside the successor conditions: " << e.get<std::string>()
                << "\n";
    }
  }
  return report.failures == 0 ? kOk : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Promotion Markov chains on linear extensions of posets"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  ExtensionsArgs ext;
  auto* c_ext = app.add_subcommand("extensions", "List linear extensions");
  c_ext->add_option("poset", ext.poset, "Poset file (text or JSON, '-' for stdin)")->required();
  c_ext->add_flag("--json", ext.json);

  MatrixArgs mat;
  auto* c_mat = app.add_subcommand("matrix", "Transition matrix, symbolic or evaluated");
  c_mat->add_option("poset", mat.poset)->required();
  c_mat->add_option("--mode", mat.mode, "promotion or uniform");
  c_mat->add_option("--weights", mat.weights, "uniform or exact p/q list");
  c_mat->add_option("--dot", mat.dot, "Write the promotion graph as DOT");
  c_mat->add_flag("--no-loops", mat.no_loops, "Omit self-loops from DOT output");
  c_mat->add_flag("--json", mat.json);

  StationaryArgs st;
  auto* c_st = app.add_subcommand("stationary", "Stationary distribution");
  c_st->add_option("poset", st.poset)->required();
  c_st->add_option("--mode", st.mode);
  c_st->add_option("--weights", st.weights);
  c_st->add_flag("--json", st.json);

  SpectrumArgs sp;
  auto* c_sp = app.add_subcommand("spectrum", "Eigenvalues with multiplicities");
  c_sp->add_option("poset", sp.poset)->required();
  c_sp->add_flag("--probe", sp.probe, "Search linear eigenvalues instead of predicting");
  c_sp->add_option("--samples", sp.samples)->check(CLI::PositiveNumber);
  c_sp->add_option("--seed", sp.seed);
  c_sp->add_flag("--json", sp.json);

  MonoidArgs mo;
  auto* c_mo = app.add_subcommand("monoid", "Transition monoid and Green's relations");
  c_mo->add_option("poset", mo.poset)->required();
  c_mo->add_option("--eggbox", mo.eggbox, "Write the egg-box picture as DOT");
  c_mo->add_option("--cap", mo.cap);
  c_mo->add_flag("--json", mo.json);

  MixArgs mx;
  auto* c_mx = app.add_subcommand("mix", "Distance to stationarity against the bound");
  c_mx->add_option("poset", mx.poset)->required();
  c_mx->add_option("--weights", mx.weights);
  c_mx->add_option("--kmax", mx.kmax)->required();
  c_mx->add_option("--start", mx.start, "Starting extension (default: worst point mass)");
  c_mx->add_option("--simulate", mx.simulate, "Also simulate this many steps");
  c_mx->add_option("--seed", mx.seed);
  c_mx->add_flag("--json", mx.json);

  SubsetArgs su;
  auto* c_su = app.add_subcommand("subset", "Promotion on a subset of permutations");
  c_su->add_option("file", su.file, "One permutation per line");
  c_su->add_option("--targets", su.targets, "Targets whose geodesics form the subset");
  c_su->add_option("--chain", su.chains, "Explicit chain 'e;w1;...;target'");
  c_su->add_option("--mode", su.mode);
  c_su->add_option("--weights", su.weights);
  c_su->add_flag("--json", su.json);

  SweepArgs sw;
  auto* c_sw = app.add_subcommand("sweep", "Run every check over a poset family");
  c_sw->add_option("--nmin", sw.options.nmin);
  c_sw->add_option("--nmax", sw.options.nmax);
  c_sw->add_option("--family", sw.family, "all, rooted-forests or non-forests");
  c_sw->add_option("--seed", sw.options.seed);
  c_sw->add_option("--samples", sw.options.samples);
  c_sw->add_flag("--json", sw.json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*c_ext) return cmd_extensions(ext);
    if (*c_mat) return cmd_matrix(mat);
    if (*c_st) return cmd_stationary(st);
    if (*c_sp) return cmd_spectrum(sp);
    if (*c_mo) return cmd_monoid(mo);
    if (*c_mx) return cmd_mix(mx);
    if (*c_su) return cmd_subset(su);
    if (*c_sw) return cmd_sweep(sw);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
