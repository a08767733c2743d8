#include "toda_rpp/cli/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <map>
#include <ostream>

#include "toda_rpp/errors.hpp"
#include "toda_rpp/identities/alpha.hpp"
#include "toda_rpp/identities/bijection.hpp"
#include "toda_rpp/identities/identities.hpp"
#include "toda_rpp/lattice/paths.hpp"
#include "toda_rpp/toda/toda.hpp"

namespace toda_rpp::cli {

using nlohmann::json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResample = 3;

json value_record(const std::string& identity, json instance, const Scalar& lhs, const Scalar& rhs) {
  return CheckResult{identity, std::move(instance), lhs.to_string(), rhs.to_string(), lhs == rhs}.to_json();
}

json report_record(const std::string& identity, json instance, const Report& report) {
  return json{{"identity", identity}, {"instance", std::move(instance)}, {"violations", to_json(report)}, {"equal", report.empty()}};
}

json shape_instance(const RunConfig& cfg) { return {{"shape", cfg.shape.to_string()}, {"n", cfg.n}}; }

template <class T>
const T& pick(SeededRng& rng, const std::vector<T>& items) {
  return items.at(static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(items.size()) - 1)));
}

std::vector<Point> points_of(const RegularLattice& L) {
  std::vector<Point> out;
  for (int i = L.i_top(); i <= L.i_bot(); ++i)
    for (int j = L.eta(i); j <= L.j_max(); ++j) out.push_back({i, j});
  return out;
}

json fundamental_trial(const RunConfig& cfg, SeededRng& rng, int trial) {
  const RegularLattice L = lattice_from_partition(cfg.shape, std::max(cfg.n, 1));
  const Point p = pick(rng, points_of(L));
  return with_resample(rng, [&](SeededRng& g) {
    const SampleFunction f = SampleFunction::random(sample_window_for(L), g);
    const TodaSolution sol = ab_from_f(f);
    const int xj = x_of(L, p.j);
    json instance = {{"lattice", L.to_json()}, {"point", {p.i, p.j}}, {"trial", trial}};
    return value_record("thm3.2", instance, f.at(p.i, p.j) / f.at(xj, p.j), g_sum(L, sol, {p.i, y_of(L, p.i)}, {xj, p.j}));
  });
}

json ni_trial(const RunConfig& cfg, SeededRng& rng, int trial) {
  const RegularLattice L = lattice_from_partition(cfg.shape, std::max(cfg.n, 1));
  const int s = cfg.shape.r(), t = cfg.shape.c();
  const NiSums sums = with_resample(rng, [&](SeededRng& g) { return ni_sums(SampleFunction::random(sample_window_for(L), g), L, s, t, cfg.n); });
  json record = value_record("thm3.3", {{"lattice", L.to_json()}, {"s", s}, {"t", t}, {"n", cfg.n}, {"trial", trial}}, sums.det_ratio,
                             sums.path_sum);
  record["product"] = sums.product.to_string();
  record["equal"] = sums.det_ratio == sums.path_sum && sums.path_sum == sums.product;
  return record;
}

json corner_trial(SeededRng& rng, int trial) {
  const RegularLattice L = random_lattice(rng, 5, 4);
  const Point corner = pick(rng, convex_corners(L));
  std::vector<Point> pts;
  for (Point p : points_of(delete_corner(L, corner)))
    if (p.i - p.j != corner.i - corner.j) pts.push_back(p);
  std::vector<std::pair<Point, Point>> pairs;
  for (int k = 0; k < 10; ++k) {
    const Point from = pick(rng, pts);
    pairs.emplace_back(from, pick(rng, pts));
  }
  const Report report = with_resample(rng, [&](SeededRng& g) {
    const TodaSolution sol = ab_from_f(SampleFunction::random(sample_window_for(L), g));
    Report all;
    for (const auto& [from, to] : pairs)
      for (auto& v : corner_deletion_check(sol, L, corner, from, to)) all.push_back(std::move(v));
    return all;
  });
  return report_record("lemma3.2", {{"lattice", L.to_json()}, {"corner", {corner.i, corner.j}}, {"pairs", pairs.size()}, {"trial", trial}},
                       report);
}

IndexedFamily rational_family(SeededRng& rng, int lo, int hi) {
  std::map<int, Scalar> values;
  for (int l = lo; l <= hi; ++l) {
    const int sign = rng.uniform_int(0, 1) == 1 ? 1 : -1;
    values.emplace(l, Scalar::rational(sign * rng.uniform_int(1, 9), rng.uniform_int(1, 9)));
  }
  return [values](int l) { return values.at(l); };
}

constexpr SiteWindow kTodaSites{0, 3, 0, 3, 0, 3};
constexpr GridWindow kTodaGrid{0, 9, 0, 9};

json evolution_records(const RunConfig& cfg, SeededRng& rng) {
  json out = json::array();
  for (int trial = 0; trial < cfg.trials; ++trial) {
    const Report report = with_resample(rng, [&](SeededRng& g) { return verify_evolution(ab_from_f(SampleFunction::random(kTodaGrid, g)), kTodaSites); });
    out.push_back(report_record("evolution", {{"solution", "determinant"}, {"trial", trial}}, report));
  }
  for (int trial = 0; trial < cfg.trials; ++trial) {
    const Report report = with_resample(rng, [&](SeededRng& g) {
      const Scalar a = Scalar::rational(g.uniform_int(1, 9), g.uniform_int(1, 9));
      const TodaSolution sol = closed_form_apq(a, rational_family(g, -8, 10), rational_family(g, -8, 10));
      return verify_evolution(sol, {-3, 3, -3, 3, 0, 3});
    });
    out.push_back(report_record("evolution", {{"solution", "closed-form"}, {"trial", trial}}, report));
  }
  return out;
}

json bilinear_records(const RunConfig& cfg, SeededRng& rng) {
  json out = json::array();
  const SiteWindow sites{0, 3, 0, 3, 1, 3};
  for (int trial = 0; trial < cfg.trials; ++trial) {
    const Report report = verify_bilinear(SampleFunction::random(kTodaGrid, rng), sites);
    out.push_back(report_record("bilinear", {{"sample", "random"}, {"trial", trial}}, report));
  }
  const SampleFunction ones = SampleFunction::from_function(kTodaGrid, [](int, int) { return Scalar(1); });
  out.push_back(report_record("bilinear", {{"sample", "ones"}}, verify_bilinear(ones, sites)));
  return out;
}

bool all_equal(const json& records) {
  for (const auto& r : records)
    if (!r.at("equal").get<bool>()) return false;
  return true;
}

json trace_list(const RppTable& pi) {
  json out = json::array();
  const Partition& lambda = pi.shape();
  for (int l = 1 - lambda.r(); l <= lambda.c() - 1; ++l) out.push_back({l, pi.trace(l)});
  return out;
}

}  // namespace

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = {"thm3.2", "thm3.3", "thm4.3",   "thm5.1", "lemma3.2", "lemma4.2",
                                                 "macmahon", "gansner", "qspec", "evolution", "bilinear"};
  return names;
}

json verify_identity(const std::string& identity, const RunConfig& cfg, SeededRng& rng) {
  json out = json::array();
  const Partition& lambda = cfg.shape;
  const int n = cfg.n;
  if (identity == "macmahon") {
    out.push_back(macmahon_check(cfg.r, cfg.c, n).to_json());
  } else if (identity == "thm5.1") {
    out.push_back(product_x_check(lambda, n).to_json());
  } else if (identity == "qspec") {
    out.push_back(q_check(lambda, n).to_json());
    out.push_back(value_record("qspec-specialize", shape_instance(cfg), q_lhs(lambda, n), specialize_x_to_q(pf_x_lhs(lambda, n))));
  } else if (identity == "gansner") {
    out.push_back(gansner_check(lambda, cfg.degree).to_json());
    out.push_back(gansner_q_check(lambda, cfg.degree).to_json());
  } else if (identity == "thm4.3") {
    for (int trial = 0; trial < cfg.trials; ++trial) {
      json record = with_resample(rng, [&](SeededRng& g) {
        return product_check(lambda, n, SampleFunction::random(sample_window_for(lambda, n), g)).to_json();
      });
      record["instance"]["trial"] = trial;
      out.push_back(std::move(record));
    }
  } else if (identity == "lemma4.2") {
    for (int trial = 0; trial < cfg.trials; ++trial) {
      const Report report = with_resample(rng, [&](SeededRng& g) {
        return weight_transport_check(lambda, n, SampleFunction::random(sample_window_for(lambda, n), g));
      });
      json instance = shape_instance(cfg);
      instance["fillings"] = count_rpp(lambda, n);
      instance["trial"] = trial;
      out.push_back(report_record("lemma4.2", instance, report));
    }
  } else if (identity == "thm3.2") {
    for (int trial = 0; trial < cfg.trials; ++trial) out.push_back(fundamental_trial(cfg, rng, trial));
  } else if (identity == "thm3.3") {
    for (int trial = 0; trial < cfg.trials; ++trial) out.push_back(ni_trial(cfg, rng, trial));
  } else if (identity == "lemma3.2") {
    for (int trial = 0; trial < cfg.trials; ++trial) out.push_back(corner_trial(rng, trial));
  } else if (identity == "evolution") {
    out = evolution_records(cfg, rng);
  } else if (identity == "bilinear") {
    out = bilinear_records(cfg, rng);
  } else {
    throw DomainError("unknown identity " + identity);
  }
  return out;
}

json cmd_verify(const RunConfig& cfg) {
  SeededRng rng(cfg.seed);
  json results = json::array();
  const std::vector<std::string> ids = cfg.identity ? std::vector<std::string>{*cfg.identity} : identity_names();
  for (const auto& id : ids)
    for (auto& record : verify_identity(id, cfg, rng)) results.push_back(std::move(record));
  const bool equal = all_equal(results);
  return {{"command", cfg.command}, {"seed", cfg.seed}, {"results", std::move(results)}, {"equal", equal}};
}

json cmd_toda_check(const RunConfig& cfg) {
  SeededRng rng(cfg.seed);
  json results = json::array();
  const std::vector<std::string> ids = cfg.identity ? std::vector<std::string>{*cfg.identity} : std::vector<std::string>{"evolution", "bilinear"};
  for (const auto& id : ids) {
    if (id != "evolution" && id != "bilinear") throw DomainError("toda-check runs evolution or bilinear, not " + id);
    for (auto& record : verify_identity(id, cfg, rng)) results.push_back(std::move(record));
  }
  const bool equal = all_equal(results);
  return {{"command", cfg.command}, {"seed", cfg.seed}, {"results", std::move(results)}, {"equal", equal}};
}

json cmd_enumerate(const RunConfig& cfg) {
  const Partition& lambda = cfg.shape;
  const int n = cfg.n;
  std::optional<TodaSolution> sol;
  if (cfg.mode == Mode::Rational) {
    SeededRng rng(cfg.seed);
    sol = with_resample(rng, [&](SeededRng& g) {
      TodaSolution s = ab_from_f(SampleFunction::random(sample_window_for(lambda, n), g));
      for_each_rpp(lambda, n, [&](const RppTable& pi) { (void)rpp_weight(lambda, n, s, pi); });
      return s;
    });
  }
  json records = json::array();
  for_each_rpp(lambda, n, [&](const RppTable& pi) {
    Scalar w;
    switch (cfg.mode) {
      case Mode::Rational: w = rpp_weight(lambda, n, *sol, pi); break;
      case Mode::Q: w = q_weight(lambda, n, pi); break;
      case Mode::X: w = weight_x(lambda, n, pi); break;
    }
    records.push_back({{"pi", pi.to_json()}, {"size", pi.size()}, {"traces", trace_list(pi)}, {"w", w.to_string()}});
  });
  return records;
}

json cmd_genfun(const RunConfig& cfg) {
  const std::string id = cfg.identity.value_or("thm5.1");
  const Partition& lambda = cfg.shape;
  if (id == "macmahon") {
    return {{"identity", id}, {"instance", {{"r", cfg.r}, {"c", cfg.c}, {"n", cfg.n}}}, {"value", macmahon_rhs(cfg.r, cfg.c, cfg.n).to_string()}};
  }
  if (id == "thm5.1") return {{"identity", id}, {"instance", shape_instance(cfg)}, {"value", pf_x_rhs(lambda, cfg.n).to_string()}};
  if (id == "qspec") return {{"identity", id}, {"instance", shape_instance(cfg)}, {"value", q_rhs(lambda, cfg.n).to_string()}};
  if (id == "gansner") {
    return {{"identity", id},
            {"instance", {{"shape", lambda.to_string()}, {"degree", cfg.degree}}},
            {"value", gansner_rhs_truncated(lambda, cfg.degree).to_string()}};
  }
  throw DomainError("genfun supports macmahon, thm5.1, qspec and gansner, not " + id);
}

json cmd_bijection(const RunConfig& cfg) {
  const Partition& lambda = cfg.shape;
  json records = json::array();
  bool equal = true;
  for_each_rpp(lambda, cfg.n, [&](const RppTable& pi) {
    const PathTuple tuple = rpp_to_lp(pi, lambda, cfg.n);
    const bool back = lp_to_rpp(tuple, lambda, cfg.n) == pi;
    equal = equal && back;
    records.push_back({{"pi", pi.to_json()}, {"paths", to_json(tuple)}, {"roundtrip", back}});
  });
  return {{"command", cfg.command}, {"instance", shape_instance(cfg)}, {"records", std::move(records)}, {"equal", equal}};
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks of Toda lattice path identities for reverse plane partitions", "toda_rpp"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::optional<std::string> shape_text;
  std::optional<int> r, c;
  std::string mode = "q";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--shape", shape_text, "partition, e.g. 3,2,1 (empty string for the empty shape)");
    sub->add_option("--r", r, "rows of a rectangular shape")->check(CLI::NonNegativeNumber);
    sub->add_option("--c", c, "columns of a rectangular shape")->check(CLI::NonNegativeNumber);
    sub->add_option("--n", cfg.n, "bound on the entries")->check(CLI::NonNegativeNumber);
    sub->add_option("--mode", mode, "weight mode")->check(CLI::IsMember({"rational", "q", "x"}));
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--trials", cfg.trials, "random trials per identity")->check(CLI::NonNegativeNumber);
    sub->add_option("--degree", cfg.degree, "truncation degree")->check(CLI::NonNegativeNumber);
    sub->add_option("--identity", cfg.identity, "identity to check")->check(CLI::IsMember(identity_names()));
    sub->add_option("--out", cfg.out, "write JSON here instead of stdout");
  };
  std::map<std::string, json (*)(const RunConfig&)> handlers = {{"verify", cmd_verify},
                                                                  {"enumerate", cmd_enumerate},
                                                                  {"genfun", cmd_genfun},
                                                                  {"bijection", cmd_bijection},
                                                                  {"toda-check", cmd_toda_check}};
  const std::map<std::string, std::string> help = {{"verify", "check identities exactly"},
                                                   {"enumerate", "list fillings with traces and weights"},
                                                   {"genfun", "product side of a generating function"},
                                                   {"bijection", "fillings and their path tuples"},
                                                   {"toda-check", "evolution and bilinear checks on random samples"}};
  for (const auto& [name, text] : help) add_common(app.add_subcommand(name, text));

  std::vector<const char*> argv{"toda_rpp"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    if (mode == "rational") cfg.mode = Mode::Rational;
    if (mode == "x") cfg.mode = Mode::X;
    if (shape_text) {
      cfg.shape = Partition::parse(*shape_text);
      cfg.r = r.value_or(cfg.shape.r());
      cfg.c = c.value_or(cfg.shape.c());
    } else if (r || c) {
      cfg.r = r.value_or(cfg.r);
      cfg.c = c.value_or(cfg.c);
      cfg.shape = Partition::rectangle(cfg.r, cfg.c);
    }
    (void)max_resample();
  } catch (const Error& e) {
    err << "toda_rpp: " << e.what() << "\n";
    return kExitUsage;
  }

  json result;
  try {
    result = handlers.at(cfg.command)(cfg);
  } catch (const ResampleExhausted& e) {
    err << "toda_rpp: " << e.what() << "\n";
    return kExitResample;
  } catch (const DomainError& e) {
    err << "toda_rpp: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "toda_rpp: " << e.what() << "\n";
    return kExitFail;
  }

  const std::string text = result.dump(2) + "\n";
  if (cfg.out) {
    std::ofstream file(*cfg.out, std::ios::binary);
    if (!file) {
      err << "toda_rpp: cannot write " << *cfg.out << "\n";
      return kExitUsage;
    }
    file << text;
  } else {
    out << text;
  }
  const bool ok = !result.is_object() || !result.contains("equal") || result.at("equal").get<bool>();
  return ok ? 0 : kExitFail;
}

}  // namespace toda_rpp::cli
