#include "promo/sweep.hpp"

#include <random>
#include <set>

#include "promo/catalog.hpp"
#include "promo/chain.hpp"
#include "promo/error.hpp"
#include "promo/promotion.hpp"

namespace promo {

Family parse_family(std::string_view text) {
  if (text == "all") return Family::All;
  if (text == "rooted-forests") return Family::RootedForests;
  if (text == "non-forests") return Family::NonForests;
  throw Error(ErrorKind::MalformedInput,
              "family must be all, rooted-forests or non-forests, got '" + std::string(text) +
                  "'");
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::All: return "all";
    case Family::RootedForests: return "rooted-forests";
    case Family::NonForests: return "non-forests";
  }
  return "all";
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

UStatisticCheck check_u_statistic(const Monoid& m, const Basis& basis, int n) {
  UStatisticCheck check;
  std::vector<std::pair<int, int>> u(m.size());
  for (std::size_t x = 0; x < m.size(); ++x) u[x] = rfactor_stats(m, basis, n, x).u;
  for (std::size_t x = 0; x < m.size(); ++x) {
    for (std::size_t y = 0; y < m.size(); ++y) {
      std::size_t xy = m.index_of(multiply(m[x], m[y], ProductOrder::Matrix));
      if (u[xy] > u[x]) check.monotone = false;
    }
    if (m[x].is_constant()) continue;
    bool descends = false;
    for (const auto& g : m.generators()) {
      if (u[m.index_of(multiply(m[x], g, ProductOrder::Matrix))] < u[x]) descends = true;
    }
    if (!descends) check.strict_descent = false;
  }
  return check;
}

namespace {

bool bijective(const PromotionGraph& g) {
  for (int j = 1; j <= g.n; ++j) {
    std::set<std::size_t> images;
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
      images.insert(g.edges[v * static_cast<std::size_t>(g.n) + (j - 1)].target);
    }
    if (images.size() != g.vertices.size()) return false;
  }
  return true;
}

struct Checks {
  Json json = Json::object();
  std::size_t failures = 0;

  void record(const char* name, bool ok) {
    json[name] = ok;
    if (!ok) ++failures;
  }
};

Json sweep_poset(const Poset& p, const SweepOptions& options, std::uint64_t seed,
                 std::size_t& failures) {
  Checks checks;
  const auto cls = classify(p);
  auto graph = build_promotion_graph(p, WeightMode::Promotion, options.limits);
  const std::size_t extensions = graph.vertices.size();
  checks.record("strongly_connected", is_strongly_connected(graph));
  checks.record("bijective", bijective(graph));

  auto promotion = transition_matrix(graph);
  auto uniform = transition_matrix(p, WeightMode::Uniform, options.limits);
  std::mt19937_64 rng(seed);
  std::vector<WeightVector> samples;
  for (int s = 0; s < options.samples; ++s) samples.push_back(WeightVector::random(p.size(), rng));

  bool uniform_ok = true;
  bool product_ok = true;
  bool master_ok = true;
  bool partition_ok = true;
  const std::vector<Rational> flat(extensions, Rational(1, static_cast<unsigned long>(extensions)));
  for (const auto& w : samples) {
    if (stationary_solve(evaluate(uniform, w)) != flat) uniform_ok = false;
    auto weights = product_weights(promotion.basis(), w);
    if (stationary_solve(evaluate(promotion, w)) != normalize(weights)) product_ok = false;
    if (!verify_master_equation(promotion, weights, w)) master_ok = false;
    if (cls.is_rooted_forest &&
        partition_function(p, w, PartitionMode::Formula) !=
            partition_function(p, w, PartitionMode::Brute, options.limits)) {
      partition_ok = false;
    }
  }
  checks.record("uniform_stationary", uniform_ok);
  checks.record("product_formula", product_ok);
  checks.record("master_equation", master_ok);

  Json entry{{"encoding", p.encoding()},
             {"n", p.size()},
             {"extensions", extensions},
             {"rooted_forest", cls.is_rooted_forest}};

  if (cls.is_rooted_forest) {
    checks.record("partition_function", partition_ok);
    auto prediction = predicted_spectrum(p, options.limits);
    checks.record("multiplicity_sum", prediction.total_multiplicity() == Integer(
                                          static_cast<unsigned long>(extensions)));
    bool spectrum_ok = true;
    for (const auto& w : samples) {
      if (char_poly(evaluate(promotion, w)) != prediction.polynomial(w)) spectrum_ok = false;
    }
    checks.record("spectrum", spectrum_ok);
    if (cls.is_consecutively_labeled_chains) {
      auto chains = predicted_spectrum_chains(p, options.limits);
      bool agree = chains.items.size() == prediction.items.size();
      for (std::size_t i = 0; agree && i < chains.items.size(); ++i) {
        agree = chains.items[i].multiplicity == prediction.items[i].multiplicity;
      }
      checks.record("chain_multiplicities", agree);
    }
    if (p.size() <= options.monoid_nmax) {
      auto gens = generators(p, options.limits);
      auto monoid = Monoid::generate(gens, ProductOrder::Matrix);
      checks.record("r_trivial", is_r_trivial(monoid));
      checks.record("action_l_trivial",
                    is_l_trivial(Monoid::generate(gens, ProductOrder::Action)));
      auto u = check_u_statistic(monoid, promotion.basis(), p.size());
      checks.record("u_monotone", u.monotone);
      checks.record("u_strict_descent", u.strict_descent);
      entry["monoid_size"] = monoid.size();
    }
    entry["spectrum"] = to_json(prediction);
  } else if (p.size() <= options.probe_nmax) {
    ProbeOptions probe_options = options.probe;
    probe_options.seed = seed;
    auto probe = probe_linear_spectrum(promotion, probe_options);
    // Reported as an observation: the conditions are conjectural.
    entry["conjecture"] = to_json(check_conjecture(p, probe));
    Json forms = Json::array();
    for (const auto& ev : probe.eigenvalues) {
      forms.push_back(Json{{"form", ev.form.to_string()}, {"multiplicity", ev.multiplicity}});
    }
    entry["linear_spectrum"] = probe.linear;
    entry["eigenvalues"] = forms;
  }
  entry["checks"] = checks.json;
  entry["passed"] = checks.failures == 0;
  failures += checks.failures;
  return entry;
}

}  // namespace

SweepReport run_sweep(const SweepOptions& options) {
  if (options.nmin < 1 || options.nmax > 7 || options.nmin > options.nmax) {
    throw Error(ErrorKind::SizeLimitExceeded, "sweep sizes must satisfy 1 <= nmin <= nmax <= 7");
  }
  SweepReport report;
  Json posets = Json::array();
  Json exceptions = Json::array();
  std::uint64_t index = 0;
  for (int n = options.nmin; n <= options.nmax; ++n) {
    std::vector<Poset> family;
    switch (options.family) {
      case Family::All: family = all_posets(n); break;
      case Family::RootedForests: family = rooted_forests(n); break;
      case Family::NonForests: family = non_forests(n); break;
    }
    for (const auto& p : family) {
      posets.push_back(sweep_poset(p, options, derive_seed(options.seed, index++),
                                   report.failures));
      ++report.posets;
      const auto& last = posets.back();
      if (last.contains("conjecture") && !last["conjecture"]["consistent"].get<bool>()) {
        exceptions.push_back(p.encoding());
      }
    }
  }
  report.json = Json{{"family", to_string(options.family)},
                     {"nmin", options.nmin},
                     {"nmax", options.nmax},
                     {"seed", options.seed},
                     {"samples", options.samples},
                     {"posets", report.posets},
                     {"failures", report.failures},
                     {"conjecture_exceptions", exceptions},
                     {"results", posets}};
  return report;
}

}  // namespace promo
