#include "cli.hpp"

#include "report_json.hpp"

#include "iwahori/errors.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>

namespace iwahori::cli {

namespace {

constexpr const char* kReportSchema = "iwahori.report/v1";
constexpr const char* kTimingSchema = "iwahori.timing/v1";

struct Outcome {
  json result;
  bool ok = true;
  std::map<std::string, std::int64_t> timings_ms;
};

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

RatVec parse_rationals(const std::string& s) {
  RatVec v;
  for (const auto& part : split(s, ',')) v.push_back(parse_rational(part));
  return v;
}

/// Rows separated by ';', entries by ','; entries are integers, fractions or digit expansions.
GroupElement parse_matrix(const ChevalleyGroup& G, const std::string& text) {
  const auto rows = split(text, ';');
  const auto n = static_cast<std::size_t>(G.datum().matrix_size());
  if (rows.size() != n) throw std::invalid_argument("matrix needs " + std::to_string(n) + " rows");
  ScalarMatrix m(n, n, PadicScalar::zero(G.ring()));
  for (std::size_t i = 0; i < n; ++i) {
    const auto entries = split(rows[i], ',');
    if (entries.size() != n) throw std::invalid_argument("row " + std::to_string(i) + " needs " + std::to_string(n) + " entries");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = padic::parse_scalar(G.ring(), entries[j]);
  }
  return GroupElement(std::move(m));
}

json roots_json(const RootDatum& d) {
  json roots = json::array();
  for (const auto& r : d.positive_roots())
    roots.push_back({{"label", r.label}, {"root", to_json(r.vec)}, {"coroot", to_json(r.coroot)}, {"height", r.height}});
  json simple = json::array();
  for (auto k : d.simple_roots()) simple.push_back(d.positive_roots()[k].label);
  return {{"positive_roots", roots}, {"simple_roots", simple}, {"delta", to_json(d.delta())},
          {"highest_root", d.highest_root().label}, {"mu0", to_json(d.mu0())}};
}

json config_json(const RunConfig& c) {
  return {{"group", c.group},     {"p", c.p},         {"precision", c.precision},
          {"degree", c.degree},   {"n_samples", c.samples}, {"seed", c.seed}};
}

class Runner {
public:
  explicit Runner(RunConfig& cfg) : cfg_(cfg) {}

  GroupType group() const { return parse_group(cfg_.group); }

  ChevalleyGroup gated() const {
    ChevalleyGroup G(group(), cfg_.p, cfg_.precision);
    G.require_gate();
    return G;
  }

  GroupElement element(const ChevalleyGroup& G, const std::string& matrix) const {
    if (!matrix.empty()) return parse_matrix(G, matrix);
    std::mt19937_64 rng(sample_seed(cfg_.seed, 0));
    return G.random_element(rng);
  }

  Outcome rootdata_info() const {
    const auto d = RootDatum::make(group());
    json weyl = json::array();
    for (const auto& w : d.weyl_group()) weyl.push_back({{"word", w.word_string()}, {"length", d.length(w)}});
    return {{{"group", group_name(group())},
             {"rank", d.rank()},
             {"coxeter_number", d.coxeter_number()},
             {"mu_scale", d.mu_scale()},
             {"diagonal_weights", [&] {
                json a = json::array();
                for (const auto& x : d.diagonal_weights()) a.push_back(to_json(x));
                return a;
              }()},
             {"borel", roots_json(d)},
             {"iwahori", roots_json(d.opposite())},
             {"weyl_group", weyl}},
            true,
            {}};
  }

  Outcome omega(const std::string& matrix) const {
    auto G = gated();
    auto g = element(G, matrix);
    if (!G.in_iwahori(g)) throw MembershipError("element is not in the pro-p Iwahori subgroup");
    const auto a = G.omega(g), b = G.omega_oracle(g);
    const auto agree = equal(a, b);
    return {{{"element", to_json(g)},
             {"omega", to_json(a)},
             {"omega_oracle", to_json(b)},
             {"oracle_ramification", G.oracle_ramification()},
             {"agree", agree == Decision::True ? json(true) : agree == Decision::False ? json(false) : json("undecided")}},
            agree != Decision::False,
            {}};
  }

  Outcome factorize(const std::string& word, const std::string& matrix) const {
    auto G = gated();
    auto g = element(G, matrix);
    const auto& w = G.datum().parse_word(word);
    auto f = G.factorize(g, w);
    const bool round_trip = G.from_factorization(f) == g;
    return {{{"w", w.word_string()},
             {"element", to_json(g)},
             {"factorization", to_json(f, G.datum())},
             {"factorization_omega", to_json(G.factorization_omega(f))},
             {"omega", to_json(G.omega(g))},
             {"round_trip", round_trip}},
            round_trip,
            {}};
  }

  Outcome basis(const std::string& word) const {
    auto G = gated();
    const auto& w = G.datum().parse_word(word);
    return {{{"w", w.word_string()}, {"basis", to_json(G.ordered_basis(w))}}, true, {}};
  }

  Outcome verify(const std::string& which) const {
    gated();
    const auto g = group();
    SuiteReport r;
    if (which == "axioms") r = check_pvaluation_axioms(g, cfg_.p, cfg_.precision, cfg_.samples, cfg_.seed);
    else if (which == "compat") r = check_compatibility_all_w(g, cfg_.p, cfg_.precision, cfg_.samples, cfg_.seed);
    else if (which == "et") r = check_et_embedding(g, cfg_.p, cfg_.precision);
    else if (which == "oracle") r = check_oracle_agreement(g, cfg_.p, cfg_.precision, cfg_.samples, cfg_.seed);
    else r = check_ordered_basis(g, cfg_.p, cfg_.precision, cfg_.samples, cfg_.seed);
    return {to_json(r), r.ok(), {}};
  }

  SeriesContext series_context(const std::string& word, const std::string& chi) const {
    RatVec c = chi.empty() ? default_character(group()) : parse_rationals(chi);
    return SeriesContext(group(), cfg_.p, word, c, cfg_.precision);
  }

  Outcome slope_split_cmd(const std::string& word, const std::string& chi, int s, std::size_t terms) const {
    auto ctx = series_context(word, chi);
    std::mt19937_64 rng(sample_seed(cfg_.seed, 0));
    auto f = random_rational_series(ctx, cfg_.degree, terms, rng, true);
    auto split = slope_split(ctx, f, s);
    json lambdas = json::array();
    for (const auto& [i, c] : f.terms())
      lambdas.push_back({{"index", i}, {"lambda", lambda_eigenvalue(ctx, i).str()}, {"slope", to_json(slope(ctx, i))}});
    return {{{"w", ctx.w().word_string()},
             {"mu", to_json(ctx.mu())},
             {"mu_pairings", ctx.mu_pairings()},
             {"s", s},
             {"series", series_json(f)},
             {"eigenvalues", lambdas},
             {"below", series_json(split.below)},
             {"at_least", series_json(split.at_least)},
             {"recombines", split.below + split.at_least == f}},
            split.below + split.at_least == f,
            {}};
  }

  Outcome slope_project_cmd(const std::string& word, const std::string& chi, int s, int n, std::size_t terms) const {
    auto ctx = series_context(word, chi);
    auto ring = padic::make_ring(cfg_.p, 1, cfg_.precision);
    std::mt19937_64 rng(sample_seed(cfg_.seed, 0));
    auto f = slope_split(ctx, random_padic_series(ctx, ring, cfg_.degree, terms, rng, true), s).at_least;
    auto out = hida_projector(ctx, f, s, n);
    auto target = slope_exact(ctx, f, s);
    Integer nf = 1;
    for (int k = 2; k <= n; ++k) nf *= k;
    const auto bound = gauss_valuation(f, cfg_.p) + Rational(1 + valuation(nf, cfg_.p));
    const auto dist = gauss_valuation(out - target, cfg_.p);
    const bool ok = greater_equal(dist, bound) != Decision::False;
    return {{{"w", ctx.w().word_string()},
             {"s", s},
             {"n", n},
             {"input", series_json(f)},
             {"output", series_json(out)},
             {"slope_part", series_json(target)},
             {"distance_valuation", to_json(dist)},
             {"bound_valuation", to_json(bound)},
             {"within_bound", ok}},
            ok,
            {}};
  }

  Outcome slope_constants_cmd(const std::string& word, std::size_t terms) const {
    SeriesContext ctx(group(), cfg_.p, word);
    std::mt19937_64 rng(sample_seed(cfg_.seed, 0));
    auto f = random_rational_series(ctx, cfg_.degree, terms, rng, true);
    auto r = constants_limit_check(ctx, f, 4);
    return {{{"w", ctx.w().word_string()}, {"series", series_json(f)}, {"check", to_json(r)}}, r.ok(), {}};
  }

  Outcome bgg(const std::string& c) const {
    const auto g = group();
    const RatVec chi = parse_rationals(c);
    auto v = bgg_simple(g, chi);
    json r = to_json(v);
    r["group"] = group_name(g);
    r["character"] = to_json(chi);
    r["irreducibility"] = v.simple ? "the analytic induction is topologically irreducible by the main theorem; not computed here"
                                   : "criterion fails; no irreducibility conclusion";
    if (g == GroupType::Sp4 && chi.size() == 2) r["sp4_conditions"] = to_json(sp4_conditions(chi[0], chi[1]));
    return {r, true, {}};
  }

  Outcome verma_mult(const std::string& chi, const std::string& lambda, const std::string& word) const {
    const auto d = RootDatum::make(group());
    const auto& w = d.parse_word(word);
    const RatVec c = parse_rationals(chi), l = parse_rationals(lambda);
    return {{{"w", w.word_string()},
             {"character", to_json(c)},
             {"weight", to_json(l)},
             {"top_weight", to_json(weyl_twist(d, c, w))},
             {"multiplicity", weight_multiplicity(d, c, l, w)}},
            true,
            {}};
  }

  Outcome summands() const {
    const auto d = RootDatum::make(group());
    auto inv = summand_inventory(group());
    json list = json::array();
    for (const auto& s : inv) list.push_back(to_json(s, d));
    return {{{"count", inv.size()}, {"complete", inventory_complete(inv)}, {"summands", list}}, inventory_complete(inv), {}};
  }

  Outcome haar(int degree) const {
    auto r = haar_obstruction(degree);
    return {to_json(r), r.only_zero(), {}};
  }

  Outcome verify_all() const {
    const auto g = group();
    gated();
    Outcome o;
    json suites = json::object();
    auto run = [&](const std::string& name, const std::function<SuiteReport()>& f) {
      const auto start = Clock::now();
      auto r = f();
      o.timings_ms[name] = elapsed_ms(start);
      suites[name] = to_json(r);
      o.ok = o.ok && r.ok();
    };
    const auto p = cfg_.p;
    const auto n = cfg_.precision;
    const auto k = cfg_.samples;
    const auto seed = cfg_.seed;
    const std::uint64_t series_samples = std::max<std::uint64_t>(k / 4, 1);
    run("padic", [&] { return check_padic_arithmetic(p, n, k, seed); });
    run("axioms", [&] { return check_pvaluation_axioms(g, p, n, k, seed); });
    run("compat", [&] { return check_compatibility_all_w(g, p, n, k, seed); });
    run("et", [&] { return check_et_embedding(g, p, n); });
    run("oracle", [&] { return check_oracle_agreement(g, p, n, k, seed); });
    run("basis", [&] { return check_ordered_basis(g, p, n, k, seed); });
    run("eigen", [&] { return check_eigenfunctions(g, p, 12, seed); });
    run("projector", [&] { return check_projector(g, p, n, cfg_.degree, series_samples, seed); });
    run("constants", [&] { return check_constants_limit(g, p, cfg_.degree, series_samples, seed); });
    run("haar", [&] { return check_haar(cfg_.degree); });
    run("verma", [&] { return check_verma_multiplicities(g, 10); });
    run("multiplicity_one", [&] { return check_multiplicity_one(g); });
    if (g == GroupType::Sp4) run("sp4_golden", [&] { return check_sp4_golden(p, 100, seed); });
    json failing = json::array();
    for (const auto& [name, r] : suites.items())
      if (!r["ok"].get<bool>()) failing.push_back(name);
    o.result = {{"suites", suites}, {"failing", failing}};
    return o;
  }

  Outcome sp4_golden() const {
    const auto d = RootDatum::make(GroupType::Sp4);
    ChevalleyGroup G(GroupType::Sp4, cfg_.p, cfg_.precision);
    G.require_gate();
    auto r = check_sp4_golden(cfg_.p, 100, cfg_.seed);
    json matrices = json::object();
    const char* names[] = {"alpha", "beta", "alpha+beta", "2alpha+beta"};
    for (std::size_t k = 0; k < 4; ++k) matrices[names[k]] = sp4_coroot_matrices()[k];
    auto inv = summand_inventory(GroupType::Sp4);
    return {{{"coxeter_number", d.coxeter_number()},
             {"positive_roots", roots_json(d)["positive_roots"]},
             {"delta", {{"vector", to_json(d.delta())}, {"formula", "a^2 b"}}},
             {"coroot_matrices", matrices},
             {"conditions_at_zero", to_json(sp4_conditions(0, 0))},
             {"rigidity_bound", to_string(Rational(1, cfg_.p - 1) - 1)},
             {"summand_count", inv.size()},
             {"iwahori_pattern", iwahori_pattern(G)},
             {"report", to_json(r)}},
            r.ok(),
            {}};
  }

private:
  RunConfig& cfg_;
};

void write_file(const std::filesystem::path& path, const json& j) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << j.dump(2) << '\n';
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact computations on pro-p Iwahori subgroups of SL2, SL3 and Sp4"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--group", cfg.group, "sl2, sl3 or sp4")->envname("IWAHORI_GROUP")->check(CLI::IsMember({"sl2", "sl3", "sp4"}));
  app.add_option("--p", cfg.p, "prime")->envname("IWAHORI_P");
  app.add_option("--precision,--n", cfg.precision, "absolute p-adic precision N")->envname("IWAHORI_PRECISION");
  app.add_option("--degree", cfg.degree, "degree cap D for series")->envname("IWAHORI_DEGREE");
  app.add_option("--n-samples", cfg.samples, "samples per property")->envname("IWAHORI_N_SAMPLES");
  app.add_option("--seed", cfg.seed, "run seed")->envname("IWAHORI_SEED");
  app.add_option("--json", cfg.json_dir, "directory for report and timing files")->envname("IWAHORI_JSON");

  std::string matrix, word = "e", chi, lambda, c;
  int s = 1, nf = 3, haar_degree = 25;
  std::size_t terms = 12;
  std::string verify_kind;
  std::function<Outcome(Runner&)> action;
  std::string command;

  auto bind = [&](CLI::App* sub, std::string name, std::function<Outcome(Runner&)> f) {
    sub->callback([&, name, f] {
      command = name;
      action = f;
    });
  };

  auto* rootdata = app.add_subcommand("rootdata", "root datum tables");
  rootdata->require_subcommand(1);
  bind(rootdata->add_subcommand("info", "roots, coroots, heights, δ, Weyl group"), "rootdata-info",
       [](Runner& r) { return r.rootdata_info(); });

  auto* omega = app.add_subcommand("omega", "ω by factorization and by the conjugation oracle");
  omega->add_option("--matrix", matrix, "rows separated by ';', entries by ','; random element when absent");
  bind(omega, "omega", [&](Runner& r) { return r.omega(matrix); });

  auto* fact = app.add_subcommand("factorize", "U_w⁻ · T¹ · U_w⁺ factorization");
  fact->add_option("--matrix", matrix, "rows separated by ';', entries by ','");
  fact->add_option("--w", word, "Weyl word, e.g. e or s1s2");
  bind(fact, "factorize", [&](Runner& r) { return r.factorize(word, matrix); });

  auto* basis = app.add_subcommand("basis", "ordered basis with ω values");
  basis->add_option("--w", word, "Weyl word");
  bind(basis, "basis", [&](Runner& r) { return r.basis(word); });

  auto* verify = app.add_subcommand("verify", "one property suite");
  verify->require_subcommand(1);
  for (const char* kind : {"axioms", "compat", "et", "oracle", "basis"}) {
    std::string k = kind;
    bind(verify->add_subcommand(kind), "verify-" + k, [k](Runner& r) { return r.verify(k); });
  }

  auto* slope = app.add_subcommand("slope", "slope decomposition and projector on a random series");
  slope->require_subcommand(1);
  for (auto* sub : {slope->add_subcommand("split"), slope->add_subcommand("project"), slope->add_subcommand("constants")}) {
    sub->add_option("--w", word, "Weyl word");
    sub->add_option("--terms", terms, "number of random monomials");
    if (sub->get_name() != "constants") {
      sub->add_option("--chi", chi, "character in ε-coordinates, comma separated");
      sub->add_option("--s", s, "slope");
    }
  }
  slope->get_subcommand("project")->add_option("--n-factorial", nf, "apply U_s^{n!}");
  bind(slope->get_subcommand("split"), "slope-split", [&](Runner& r) { return r.slope_split_cmd(word, chi, s, terms); });
  bind(slope->get_subcommand("project"), "slope-project",
       [&](Runner& r) { return r.slope_project_cmd(word, chi, s, nf, terms); });
  bind(slope->get_subcommand("constants"), "slope-constants", [&](Runner& r) { return r.slope_constants_cmd(word, terms); });

  auto* bgg = app.add_subcommand("bgg", "BGG simplicity criterion");
  bgg->add_option("--c", c, "dχ in ε-coordinates, comma separated (use --c=-1,-1 for negatives)")->required();
  bind(bgg, "bgg", [&](Runner& r) { return r.bgg(c); });

  auto* verma = app.add_subcommand("verma-mult", "weight multiplicity of the Verma module");
  verma->add_option("--chi", chi, "dχ in ε-coordinates")->required();
  verma->add_option("--lambda", lambda, "weight in ε-coordinates")->required();
  verma->add_option("--w", word, "Weyl word");
  bind(verma, "verma-mult", [&](Runner& r) { return r.verma_mult(chi, lambda, word); });

  bind(app.add_subcommand("summands", "Weyl-indexed summands with intersection witnesses"), "summands",
       [](Runner& r) { return r.summands(); });

  auto* haar = app.add_subcommand("haar", "translation-invariant functional system");
  haar->add_option("--max-degree", haar_degree, "largest monomial degree");
  bind(haar, "haar", [&](Runner& r) { return r.haar(haar_degree); });

  bind(app.add_subcommand("verify-all", "every suite for the chosen group"), "verify-all",
       [](Runner& r) { return r.verify_all(); });
  bind(app.add_subcommand("sp4-golden", "the explicit Sp4 data"), "sp4-golden", [](Runner& r) { return r.sp4_golden(); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  Runner runner(cfg);
  Outcome o;
  const auto start = Clock::now();
  try {
    o = action(runner);
  } catch (const GateError& e) {
    err << "gate error: " << e.what() << '\n';
    return kGateError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
  const auto total = elapsed_ms(start);

  json report = {{"schema", kReportSchema}, {"command", command}, {"config", config_json(cfg)}, {"ok", o.ok},
                 {"result", o.result}};
  out << report.dump(2) << '\n';
  if (!cfg.json_dir.empty()) {
    std::filesystem::path dir(cfg.json_dir);
    std::filesystem::create_directories(dir);
    write_file(dir / (command + ".json"), report);
    json timing = {{"schema", kTimingSchema}, {"command", command}, {"total_ms", total}, {"suites_ms", o.timings_ms}};
    write_file(dir / "timing.json", timing);
  }
  return o.ok ? kOk : kCheckFailed;
}

}  // namespace iwahori::cli
