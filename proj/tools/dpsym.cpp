// Command-line front end.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dpsym/suites.hpp"

namespace {

using namespace dpsym;

enum ExitCode { kOk = 0, kInputError = 1, kDomainError = 2, kIndeterminate = 3, kVerifyFailed = 4 };

struct Config {
  std::uint64_t seed = 0;
  int trials = kDefaultTrials;
  int max_word_length = 12;
  std::string format = "json";
  bool trace = false;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string token;
  std::istringstream in(s);
  while (std::getline(in, token, ',')) out.push_back(token);
  return out;
}

ProjectiveCoord parse_coord(const std::string& s) {
  const auto first = s.find_first_not_of(" \t");
  const auto last = s.find_last_not_of(" \t");
  const std::string t = first == std::string::npos ? "" : s.substr(first, last - first + 1);
  if (t == "inf" || t == "infinity") return ProjectiveCoord::infinity();
  return parse_rational(t);
}

std::vector<ProjectiveCoord> parse_coords(const std::string& s, std::size_t n, const char* what) {
  const auto parts = split_list(s);
  if (parts.size() != n)
    throw ParseError(std::string(what) + " needs " + std::to_string(n) + " comma-separated values");
  std::vector<ProjectiveCoord> out;
  for (const auto& p : parts) out.push_back(parse_coord(p));
  return out;
}

ParamVector parse_params(const std::string& s) {
  const auto parts = split_list(s);
  if (parts.size() != kNumParams) throw ParseError("--b needs 8 comma-separated rationals");
  ParamVector b;
  for (int i = 0; i < kNumParams; ++i) b(i) = parse_rational(parts[i]);
  return b;
}

SchlesingerParams parse_theta(const std::string& s) {
  const auto parts = split_list(s);
  if (parts.size() != 7) throw ParseError("--theta needs 7 comma-separated rationals");
  Json j = Json::array();
  for (const auto& p : parts) j.push_back(p);
  return schlesinger_from_json(j);
}

Json parse_json_arg(const std::string& arg) {
  try {
    if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return Json::parse(arg);
    std::ifstream in(arg);
    if (!in) throw ParseError("cannot open '" + arg + "'");
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

PicMap named_element(const std::string& name) {
  if (name == "phi") return phi_pushforward();
  if (name == "psi") return psi_pushforward();
  if (name == "conjugator") return word_to_picmap(conjugator_word());
  throw ParseError("unknown element '" + name + "' (expected phi, psi or conjugator)");
}

void emit(const Json& j) {
  std::cout << j.dump() << '\n';
}

// ---------------------------------------------------------------------------

int cmd_gens() {
  for (Generator g : kAllGenerators) {
    const BirationalStep& s = generator_step(g);
    Json params = Json::array();
    for (int i = 0; i < kNumParams; ++i) params.push_back(to_expr(s.param_matrix.row(i).transpose()).to_string());
    Json j{{"name", std::string(to_string(g))},
           {"picmap", to_json(s.picmap)},
           {"params", params},
           {"f", s.coord_f.to_string()},
           {"g", s.coord_g.to_string()}};
    if (!is_reflection(g)) {
      const auto perm = alpha_permutation(g);
      j["alpha_permutation"] = Json(std::vector<int>(perm.begin(), perm.end()));
    }
    const auto dperm = delta_permutation(g);
    j["delta_permutation"] = Json(std::vector<int>(dperm.begin(), dperm.end()));
    emit(j);
  }
  return kOk;
}

int cmd_decompose(const Config& cfg, const std::string& element, const std::string& picmap_file) {
  if (element.empty() == picmap_file.empty()) throw ParseError("give exactly one of --element or --picmap");
  const PicMap m = element.empty() ? picmap_from_json(parse_json_arg(picmap_file)) : named_element(element);
  const Decomposition d = decompose(m, cfg.trace);
  Json j = to_json(d, cfg.trace);
  j["length"] = d.word.size();
  j["verified"] = word_to_picmap(d.word) == m;
  emit(j);
  return kOk;
}

int cmd_act(const std::string& word, const std::string& point, const std::string& params) {
  SurfaceState s;
  s.b = parse_params(params);
  const auto p = parse_coords(point, 2, "--point");
  s.p = {p[0], p[1]};
  const Word w = parse_word(word);
  emit(Json{{"word", to_json(w)}, {"input", to_json(s)}, {"output", to_json(eval_word(w, s))}});
  return kOk;
}

int cmd_period(const std::string& params, const std::string& word) {
  const ParamVector b = parse_params(params);
  const RootVariables<Rational> a = root_variables(b);
  Json j{{"b", to_json(b)}, {"a", to_json(RationalRootVector(a))}, {"chi_delta", to_json(chi_of_null_root(a))}};
  if (!word.empty()) {
    const Word w = parse_word(word);
    j["word"] = to_json(w);
    j["evolved"] = to_json(RationalRootVector(root_variable_evolution<Rational>(w, a)));
  }
  emit(j);
  return kOk;
}

std::string decimal(const ProjectiveCoord& c) {
  return c.is_infinite() ? "inf" : to_decimal(c.num(), 20);
}

template <typename State>
int finish_orbit(const OrbitTrace<State>& trace) {
  if (trace.error) {
    std::cerr << Json{{"error", "indeterminate"}, {"step", *trace.failed_step}, {"message", *trace.error}}.dump()
              << '\n';
    return kIndeterminate;
  }
  return kOk;
}

int cmd_orbit(const Config& cfg, const std::string& map, int steps, const std::string& initial,
              const std::string& params, const std::string& theta, const std::string& point) {
  const bool csv = cfg.format == "csv";
  if (map == "phi") {
    SurfaceState s;
    if (!initial.empty()) {
      s = surface_state_from_json(parse_json_arg(initial));
    } else {
      if (params.empty() || point.empty()) throw ParseError("phi orbit needs --initial or --b with --point");
      s.b = parse_params(params);
      const auto p = parse_coords(point, 2, "--point");
      s.p = {p[0], p[1]};
    }
    const auto trace = orbit_phi(s, steps);
    if (csv) std::cout << "step,b1,b2,b3,b4,b5,b6,b7,b8,f,g,chi_delta\n";
    for (std::size_t k = 0; k < trace.states.size(); ++k) {
      const SurfaceState& st = trace.states[k];
      if (csv) {
        std::cout << k;
        for (int i = 0; i < kNumParams; ++i) std::cout << ',' << to_decimal(st.b(i), 20);
        std::cout << ',' << decimal(st.p.f) << ',' << decimal(st.p.g) << ',' << to_decimal(st.b.sum(), 20) << '\n';
      } else {
        Json j{{"step", k}};
        j.update(to_json(st));
        j["chi_delta"] = to_json(Rational(st.b.sum()));
        emit(j);
      }
    }
    return finish_orbit(trace);
  }
  if (map == "psi") {
    SchlesingerState s;
    if (!initial.empty()) {
      s = schlesinger_state_from_json(parse_json_arg(initial));
    } else {
      if (theta.empty() || point.empty()) throw ParseError("psi orbit needs --initial or --theta with --point");
      s.t = parse_theta(theta);
      const auto p = parse_coords(point, 2, "--point");
      s.x = p[0];
      s.y = p[1];
    }
    const auto trace = orbit_psi(s, steps);
    if (csv) std::cout << "step,theta01,theta02,theta11,theta12,kappa1,kappa2,kappa3,x,y,fuchs_relation\n";
    for (std::size_t k = 0; k < trace.states.size(); ++k) {
      const SchlesingerState& st = trace.states[k];
      const bool fuchs = st.t.fuchs_sum() == 0;
      if (csv) {
        std::cout << k;
        for (const Rational* v : {&st.t.theta01, &st.t.theta02, &st.t.theta11, &st.t.theta12, &st.t.kappa1,
                                  &st.t.kappa2, &st.t.kappa3})
          std::cout << ',' << to_decimal(*v, 20);
        std::cout << ',' << decimal(st.x) << ',' << decimal(st.y) << ',' << (fuchs ? "true" : "false") << '\n';
      } else {
        Json j{{"step", k}};
        j.update(to_json(st));
        j["fuchs_relation"] = fuchs;
        emit(j);
      }
    }
    return finish_orbit(trace);
  }
  throw ParseError("unknown map '" + map + "' (expected phi or psi)");
}

int cmd_verify(const Config& cfg, const std::string& suite) {
  SuiteOptions opts;
  opts.seed = cfg.seed;
  opts.trials = cfg.trials;
  opts.max_word_length = cfg.max_word_length;
  bool ok = true;
  for (const SuiteReport& r : run_suites(suite, opts)) {
    std::cout << to_json(r).dump(2) << '\n';
    ok = ok && r.passed();
  }
  return ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Picard-lattice, Weyl-group and birational tools for the E6^(1) discrete Painleve equation"};
  app.fallthrough();
  app.require_subcommand(1);

  Config cfg;
  app.add_option("--seed", cfg.seed, "Seed for every randomized check");
  app.add_option("--trials", cfg.trials, "Generic samples per identity")->check(CLI::NonNegativeNumber);
  app.add_option("--max-word-length", cfg.max_word_length, "Length bound for random words")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "Output format for orbit")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--trace", cfg.trace, "Include the reduction trace in decompose output");

  auto* gens = app.add_subcommand("gens", "Print every generator's Picard and birational action");

  std::string element, picmap_file;
  auto* dec = app.add_subcommand("decompose", "Write a Picard-lattice map as a generator word");
  dec->add_option("--element", element, "phi, psi or conjugator");
  dec->add_option("--picmap", picmap_file, "File (or inline JSON) holding a 10x10 integer matrix");

  std::string word, point, params, theta;
  auto* act = app.add_subcommand("act", "Apply a word to (b; f, g)");
  act->add_option("--word", word, "Comma-separated word, rightmost acts first")->required();
  act->add_option("--point", point, "f,g")->required();
  act->add_option("--b", params, "b1,...,b8")->required();

  std::string period_word;
  auto* period = app.add_subcommand("period", "Root variables of b, optionally evolved by a word");
  period->add_option("--b", params, "b1,...,b8")->required();
  period->add_option("--word", period_word, "Word whose root-variable evolution to apply");

  std::string map, initial;
  int steps = 0;
  auto* orbit = app.add_subcommand("orbit", "Iterate phi or psi exactly");
  orbit->add_option("--map", map, "phi or psi")->required()->check(CLI::IsMember({"phi", "psi"}));
  orbit->add_option("--steps", steps, "Number of steps")->required()->check(CLI::NonNegativeNumber);
  orbit->add_option("--initial", initial, "Initial state as a JSON file or inline JSON");
  orbit->add_option("--b", params, "b1,...,b8 (phi)");
  orbit->add_option("--theta", theta, "theta01,theta02,theta11,theta12,kappa1,kappa2,kappa3 (psi)");
  orbit->add_option("--point", point, "f,g or x,y");

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "Run invariant suites");
  verify->add_option("suite", suite, "coxeter, birational, period, equivalence or all")
      ->check(CLI::IsMember({"coxeter", "birational", "period", "equivalence", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*gens) return cmd_gens();
    if (*dec) return cmd_decompose(cfg, element, picmap_file);
    if (*act) return cmd_act(word, point, params);
    if (*period) return cmd_period(params, period_word);
    if (*orbit) return cmd_orbit(cfg, map, steps, initial, params, theta, point);
    if (*verify) return cmd_verify(cfg, suite);
  } catch (const Indeterminate& e) {
    Json j{{"error", "indeterminate"}, {"message", e.what()}};
    if (e.step()) j["step"] = *e.step();
    std::cerr << j.dump() << '\n';
    return kIndeterminate;
  } catch (const NotInGroup& e) {
    std::cerr << Json{{"error", "not_in_group"}, {"message", e.what()}}.dump() << '\n';
    return kDomainError;
  } catch (const NormMismatch& e) {
    std::cerr << Json{{"error", "norm_mismatch"}, {"message", e.what()}}.dump() << '\n';
    return kDomainError;
  } catch (const TooManyDegenerateSamples& e) {
    std::cerr << Json{{"error", "too_many_degenerate_samples"}, {"message", e.what()}}.dump() << '\n';
    return kDomainError;
  } catch (const ParseError& e) {
    std::cerr << Json{{"error", "input"}, {"message", e.what()}}.dump() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << Json{{"error", "input"}, {"message", e.what()}}.dump() << '\n';
    return kInputError;
  }
  return kInputError;
}
