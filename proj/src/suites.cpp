#include "dpsym/suites.hpp"

#include <algorithm>
#include <map>

namespace dpsym {

namespace {

SuiteCheck make_check(std::string name, bool passed, Json detail = nullptr) {
  return SuiteCheck{std::move(name), passed, std::move(detail)};
}

template <typename In, typename Out>
SuiteCheck from_result(std::string name, const MapsEqualResult<In, Out>& r) {
  Json detail{{"verdict", to_string(r.verdict)}, {"accepted", r.accepted}, {"rejected", r.rejected}};
  if (r.counterexample) detail["counterexample"] = to_json(*r.counterexample);
  if (r.lhs) detail["lhs"] = to_json(*r.lhs);
  if (r.rhs) detail["rhs"] = to_json(*r.rhs);
  return make_check(std::move(name), r.equal(), std::move(detail));
}

// First failing word of a family, or pass.
SuiteCheck words_identity(std::string name, const std::vector<std::pair<Word, Word>>& pairs,
                          const SuiteOptions& opts) {
  for (const auto& [a, b] : pairs) {
    const auto r = words_equal(a, b, opts.trials, opts.seed);
    if (!r.equal()) {
      SuiteCheck c = from_result(name, r);
      c.detail["lhs_word"] = to_json(a);
      c.detail["rhs_word"] = to_json(b);
      return c;
    }
  }
  return make_check(std::move(name), true, Json{{"identities", pairs.size()}});
}

Word power(const Word& w, int k) {
  Word out;
  for (int i = 0; i < k; ++i) out.insert(out.end(), w.begin(), w.end());
  return out;
}

int coxeter_order(int i, int j) {
  return i == j ? 1 : adjacent(i, j) ? 3 : 2;
}

std::vector<std::pair<Word, Word>> semidirect_pairs() {
  std::vector<std::pair<Word, Word>> out;
  for (Generator s : kAutomorphisms) {
    const auto perm = alpha_permutation(s);
    for (int i = 0; i < kNumSimpleRoots; ++i)
      out.push_back({Word{s, reflection(i), inverse(s)}, Word{reflection(perm[i])}});
  }
  return out;
}

ParamVector random_params(std::mt19937_64& rng) {
  ParamVector b;
  for (int i = 0; i < kNumParams; ++i) b(i) = random_rational(rng);
  return b;
}

Json word_picmap_detail(const Word& w, const PicMap& got, const PicMap& want) {
  return Json{{"word", to_json(w)}, {"got", to_json(got)}, {"want", to_json(want)}};
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const SuiteCheck& c) { return c.passed; });
}

Word random_word(std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, std::max(0, max_len));
  std::uniform_int_distribution<int> sym(0, static_cast<int>(kAllGenerators.size()) - 1);
  Word w(static_cast<std::size_t>(len(rng)));
  for (Generator& g : w) g = kAllGenerators[sym(rng)];
  return w;
}

// ---------------------------------------------------------------------------

SuiteReport run_coxeter_suite(const SuiteOptions& opts) {
  SuiteReport rep{"coxeter", {}};
  const PicMap id = PicMap::Identity();

  bool ok = true;
  Json bad = Json::array();
  for (Generator g : kAllGenerators)
    if (!is_cremona_isometry(generator_picmap(g))) {
      ok = false;
      bad.push_back(std::string(to_string(g)));
    }
  rep.checks.push_back(make_check("generators are Cremona isometries", ok, ok ? Json(nullptr) : bad));

  ok = true;
  Json fail = nullptr;
  for (int i = 0; i < kNumSimpleRoots && ok; ++i)
    for (int j = 0; j < kNumSimpleRoots && ok; ++j) {
      const Word w = power(Word{reflection(i), reflection(j)}, coxeter_order(i, j));
      if (word_to_picmap(w) != id) {
        ok = false;
        fail = to_json(w);
      }
    }
  rep.checks.push_back(make_check("Coxeter relations (w_i w_j)^m_ij = e", ok, fail));

  // The automorphisms close up into a group of order six.
  ok = word_to_picmap(Word{Generator::r, Generator::r, Generator::r}) == id &&
       word_to_picmap(Word{Generator::r, Generator::r}) == generator_picmap(Generator::r2) &&
       word_to_picmap(Word{Generator::r, Generator::r2}) == id;
  for (Generator m : {Generator::m0, Generator::m1, Generator::m2})
    ok = ok && word_to_picmap(Word{m, m}) == id;
  for (Generator a : kAutomorphisms)
    for (Generator b : kAutomorphisms) {
      const PicMap p = generator_picmap(a) * generator_picmap(b);
      bool found = p == id;
      for (Generator c : kAutomorphisms) found = found || p == generator_picmap(c);
      ok = ok && found;
    }
  rep.checks.push_back(make_check("automorphisms form a dihedral group of order 6", ok));

  ok = true;
  fail = nullptr;
  for (const auto& [a, b] : semidirect_pairs())
    if (ok && word_to_picmap(a) != word_to_picmap(b)) {
      ok = false;
      fail = Json{{"lhs", to_json(a)}, {"rhs", to_json(b)}};
    }
  ok = ok && word_to_picmap(Word{Generator::m1, Generator::w0, Generator::m1}) ==
                 generator_picmap(Generator::w4);
  rep.checks.push_back(make_check("semidirect relations sigma w_i sigma^-1 = w_sigma(i)", ok, fail));

  ok = true;
  for (Generator s : kAllGenerators) {
    const PicMap& m = generator_picmap(s);
    if (!is_reflection(s)) {
      const auto perm = alpha_permutation(s);
      for (int i = 0; i < kNumSimpleRoots; ++i) ok = ok && m * symmetry_root(i) == symmetry_root(perm[i]);
    }
    const auto dperm = delta_permutation(s);
    for (int i = 0; i < kNumSurfaceRoots; ++i) ok = ok && m * surface_root(i) == surface_root(dperm[i]);
  }
  rep.checks.push_back(make_check("permutation tables match the Picard action", ok));

  CartanMatrix expected = CartanMatrix::Zero();
  expected.diagonal().setConstant(-2);
  for (auto [i, j] : {std::pair{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}, {5, 6}}) expected(i, j) = expected(j, i) = 1;
  rep.checks.push_back(make_check("Cartan matrix is E6^(1)", cartan_matrix() == expected));

  for (const auto& [name, target] : {std::pair<const char*, const PicMap*>{"phi", &phi_pushforward()},
                                     {"psi", &psi_pushforward()}}) {
    const Decomposition d = decompose(*target);
    const PicMap got = word_to_picmap(d.word);
    rep.checks.push_back(make_check(std::string("decompose ") + name, got == *target,
                                    Json{{"word", to_json(d.word)}, {"length", d.word.size()}}));
  }

  ok = true;
  fail = nullptr;
  for (int k = 0; k < opts.random_words && ok; ++k) {
    std::mt19937_64 rng = sample_rng(opts.seed, static_cast<std::uint64_t>(k));
    const Word w = random_word(rng, opts.max_word_length);
    const PicMap m = word_to_picmap(w);
    const Decomposition d = decompose(m);
    const PicMap got = word_to_picmap(d.word);
    if (got != m) {
      ok = false;
      fail = word_picmap_detail(w, got, m);
    }
  }
  rep.checks.push_back(make_check("decompose is sound on random words", ok,
                                  ok ? Json{{"words", opts.random_words}} : fail));
  return rep;
}

// ---------------------------------------------------------------------------

SuiteReport run_birational_suite(const SuiteOptions& opts) {
  SuiteReport rep{"birational", {}};

  std::vector<std::pair<Word, Word>> involutions;
  for (Generator g : kAllGenerators)
    if (g != Generator::r && g != Generator::r2) involutions.push_back({Word{g, g}, Word{}});
  involutions.push_back({Word{Generator::r, Generator::r, Generator::r}, Word{}});
  involutions.push_back({Word{Generator::r, Generator::r}, Word{Generator::r2}});
  rep.checks.push_back(words_identity("generator orders", involutions, opts));

  std::vector<std::pair<Word, Word>> braids;
  for (int i = 0; i < kNumSimpleRoots; ++i)
    for (int j = i + 1; j < kNumSimpleRoots; ++j) {
      const Generator a = reflection(i), b = reflection(j);
      if (adjacent(i, j))
        braids.push_back({Word{a, b, a}, Word{b, a, b}});
      else
        braids.push_back({Word{a, b}, Word{b, a}});
    }
  rep.checks.push_back(words_identity("braid relations", braids, opts));

  rep.checks.push_back(words_identity("semidirect relations", semidirect_pairs(), opts));

  bool ok = true;
  Json fail = nullptr;
  for (Generator g : kAllGenerators) {
    const BirationalStep& s = generator_step(g);
    for (int k = 0; k < opts.trials && ok; ++k) {
      std::mt19937_64 rng = sample_rng(opts.seed, static_cast<std::uint64_t>(k));
      const ParamVector b = random_params(rng);
      const ParamVector bb = s.map_params(b);
      if (bb(3) != b(3) || bb.sum() != b.sum()) {
        ok = false;
        fail = Json{{"generator", std::string(to_string(g))}, {"b", to_json(b)}};
      }
    }
  }
  rep.checks.push_back(make_check("every generator fixes b4 and chi(delta)", ok, fail));

  ok = true;
  for (Generator g : kAllGenerators) ok = ok && generator_step(g).picmap == generator_picmap(g);
  rep.checks.push_back(make_check("birational steps carry their Picard action", ok));
  return rep;
}

// ---------------------------------------------------------------------------

SuiteReport run_period_suite(const SuiteOptions& opts) {
  SuiteReport rep{"period", {}};

  Params<Rational> b0;
  b0 << 1, 2, 3, 4, 5, 6, 7, 8;
  RootVariables<Rational> a0;
  a0 << 1, 1, 1, 8, 1, 6, 1;
  const RootVariables<Rational> a = root_variables(b0);
  rep.checks.push_back(make_check("root variables of b = (1..8)", a == a0 && chi_of_null_root(a) == 36,
                                  Json{{"a", to_json(RationalRootVector(a))}}));

  bool ok = true;
  for (int k = 0; k < opts.trials; ++k) {
    std::mt19937_64 rng = sample_rng(opts.seed, static_cast<std::uint64_t>(k));
    const ParamVector b = random_params(rng);
    const RootVariables<Rational> ab = root_variables(b);
    ok = ok && params_from_root_variables(ab, b(3)) == b && chi_of_null_root(ab) == b.sum();
  }
  rep.checks.push_back(make_check("params_from_root_variables inverts root_variables", ok));

  ok = true;
  Json fail = nullptr;
  for (Generator g : kAllGenerators) {
    const Word w{g};
    for (int k = 0; k < 10 && ok; ++k) {
      std::mt19937_64 rng = sample_rng(opts.seed, static_cast<std::uint64_t>(k));
      const ParamVector b = random_params(rng);
      const auto lhs = root_variables(generator_step(g).map_params(b));
      const auto rhs = root_variable_evolution<Rational>(w, root_variables(b));
      if (lhs != rhs) {
        ok = false;
        fail = Json{{"generator", std::string(to_string(g))}, {"b", to_json(b)}};
      }
    }
  }
  rep.checks.push_back(make_check("parameter maps agree with root-variable evolution", ok, fail));

  ok = true;
  for (int k = 0; k < opts.trials; ++k) {
    std::mt19937_64 rng = sample_rng(opts.seed, static_cast<std::uint64_t>(k));
    const ParamVector b = random_params(rng);
    const auto av = root_variables(b);
    const Rational d = b.sum();
    RootVariables<Rational> want = av;
    want(3) -= d;
    want(5) += d;
    ok = ok && root_variable_evolution<Rational>(phi_word(), av) == want;
    ok = ok && root_variables(phi_step_map().map_params(b)) == want;
  }
  rep.checks.push_back(make_check("phi shifts (a3, a5) by (-d, +d)", ok));

  ok = true;
  for (int k = 0; k < opts.trials; ++k) {
    std::mt19937_64 rng = sample_rng(opts.seed, static_cast<std::uint64_t>(k));
    const SchlesingerParams t = random_schlesinger_params(rng);
    const auto av = root_variables(b_from_schlesinger_psi_chart(t));
    const Rational d = chi_of_null_root(av);
    RootVariables<Rational> want = av;
    want(3) += d;
    want(4) -= d;
    want(5) -= d;
    want(6) += d;
    ok = ok && d == -1 && root_variable_evolution<Rational>(psi_word(), av) == want &&
         root_variables(b_from_schlesinger_psi_chart(psi_params(t))) == want;
  }
  rep.checks.push_back(make_check("psi shifts (a3, a4, a5, a6) by (d, -d, -d, d)", ok));

  ok = true;
  for (int k = 0; k < opts.trials; ++k) {
    std::mt19937_64 rng = sample_rng(opts.seed, static_cast<std::uint64_t>(k));
    const Word w = random_word(rng, opts.max_word_length);
    const auto a1 = root_variables(random_params(rng));
    const auto a2 = root_variables(random_params(rng));
    const auto e1 = root_variable_evolution<Rational>(w, a1);
    ok = ok && chi_of_null_root(e1) == chi_of_null_root(a1) &&
         root_variable_evolution<Rational>(w, RootVariables<Rational>(a1 + a2)) ==
             e1 + root_variable_evolution<Rational>(w, a2);
  }
  rep.checks.push_back(make_check("evolution is linear and fixes chi(delta)", ok));
  return rep;
}

// ---------------------------------------------------------------------------

SuiteReport run_equivalence_suite(const SuiteOptions& opts) {
  SuiteReport rep{"equivalence", {}};

  const PicMap phi_w = word_to_picmap(phi_word());
  const PicMap psi_w = word_to_picmap(psi_word());
  rep.checks.push_back(make_check("phi word reproduces the phi Picard action", phi_w == phi_pushforward(),
                                  phi_w == phi_pushforward() ? Json(nullptr)
                                                             : word_picmap_detail(phi_word(), phi_w, phi_pushforward())));
  rep.checks.push_back(make_check("psi word reproduces the psi Picard action", psi_w == psi_pushforward(),
                                  psi_w == psi_pushforward() ? Json(nullptr)
                                                             : word_picmap_detail(psi_word(), psi_w, psi_pushforward())));

  RootVector phi_n, psi_n;
  phi_n << 0, 0, 0, 1, 0, -1, 0;
  psi_n << 0, 0, 0, -1, 1, 1, -1;
  const auto dphi = translation_delta_vector(phi_pushforward());
  const auto dpsi = translation_delta_vector(psi_pushforward());
  rep.checks.push_back(make_check("translation vectors", dphi == phi_n && dpsi == psi_n,
                                  Json{{"phi", dphi ? to_json(*dphi) : Json(nullptr)},
                                       {"psi", dpsi ? to_json(*dpsi) : Json(nullptr)}}));

  const Rational four_thirds(4, 3);
  const Rational nphi = translation_norm(phi_pushforward());
  const Rational npsi = translation_norm(psi_pushforward());
  rep.checks.push_back(make_check("translation norms are 4/3", nphi == four_thirds && npsi == four_thirds,
                                  Json{{"phi", to_json(nphi)}, {"psi", to_json(npsi)}}));

  const std::array<int, 3> cycle{1, 2, 0};
  rep.checks.push_back(make_check("phi and psi induce (delta0 delta1 delta2)",
                                  surface_root_permutation(phi_pushforward()) == cycle &&
                                      surface_root_permutation(psi_pushforward()) == cycle));

  const auto conj = find_conjugator(kac_vector(psi_pushforward()), kac_vector(phi_pushforward()));
  bool in_w3w5 = conj.has_value() && !conj->empty();
  if (conj)
    for (Generator g : *conj) in_w3w5 = in_w3w5 && (g == Generator::w3 || g == Generator::w5);
  rep.checks.push_back(make_check("Kac vectors are conjugate by a word in w3, w5", in_w3w5,
                                  Json{{"word", conj ? to_json(*conj) : Json(nullptr)}}));

  EquivalenceOptions eo;
  eo.trials = opts.trials;
  eo.seed = opts.seed;
  const EquivalenceReport r = verify_equivalence(eo);
  for (const CheckResult& c : r.checks) rep.checks.push_back(make_check(c.name, c.passed(), to_json(c)));
  return rep;
}

std::vector<SuiteReport> run_suites(const std::string& which, const SuiteOptions& opts) {
  using Runner = SuiteReport (*)(const SuiteOptions&);
  const std::vector<std::pair<std::string, Runner>> all{{"coxeter", run_coxeter_suite},
                                                        {"birational", run_birational_suite},
                                                        {"period", run_period_suite},
                                                        {"equivalence", run_equivalence_suite}};
  std::vector<SuiteReport> out;
  for (const auto& [name, run] : all)
    if (which == "all" || which == name) out.push_back(run(opts));
  if (out.empty()) throw ParseError("unknown suite '" + which + "'");
  return out;
}

Json to_json(const SuiteReport& r) {
  Json checks = Json::array();
  for (const SuiteCheck& c : r.checks) {
    Json j{{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.is_null()) j["detail"] = c.detail;
    checks.push_back(j);
  }
  return Json{{"suite", r.suite}, {"passed", r.passed()}, {"checks", checks}};
}

}  // namespace dpsym
