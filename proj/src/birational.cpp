#include "dpsym/birational.hpp"

#include <array>
#include <stdexcept>
#include <variant>

namespace dpsym {

// ---------------------------------------------------------------------------
// Projective arithmetic. Every operation is the homogeneous formula followed
// by normalization, so 0/0 surfaces exactly where the formula degenerates.

ProjectiveCoord ProjectiveCoord::from_pair(const Rational& num, const Rational& den) {
  if (num == 0 && den == 0) throw Indeterminate("0/0 in projective evaluation");
  ProjectiveCoord c;
  if (den == 0) {
    c.num_ = 1;
    c.den_ = 0;
  } else {
    c.num_ = num / den;
    c.den_ = 1;
  }
  return c;
}

const Rational& ProjectiveCoord::value() const {
  if (is_infinite()) throw std::domain_error("coordinate is at infinity");
  return num_;
}

ProjectiveCoord operator+(const ProjectiveCoord& a, const ProjectiveCoord& b) {
  return ProjectiveCoord::from_pair(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

ProjectiveCoord operator-(const ProjectiveCoord& a, const ProjectiveCoord& b) {
  return ProjectiveCoord::from_pair(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

ProjectiveCoord operator*(const ProjectiveCoord& a, const ProjectiveCoord& b) {
  return ProjectiveCoord::from_pair(a.num_ * b.num_, a.den_ * b.den_);
}

ProjectiveCoord operator/(const ProjectiveCoord& a, const ProjectiveCoord& b) {
  return ProjectiveCoord::from_pair(a.num_ * b.den_, a.den_ * b.num_);
}

ProjectiveCoord operator-(const ProjectiveCoord& a) {
  ProjectiveCoord c = a;
  c.num_ = a.is_infinite() ? a.num_ : Rational(-a.num_);
  return c;
}

std::string to_string(const ProjectiveCoord& c) {
  return c.is_infinite() ? std::string("inf") : to_string(c.num());
}

// ---------------------------------------------------------------------------
// Expressions.

struct Expr::Node {
  enum class Op { Const, Var, Add, Sub, Mul, Div, Neg };
  Op op;
  Rational constant;
  int slot = -1;
  std::string name;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;

ProjectiveCoord eval_node(const Expr::Node& n, std::span<const ProjectiveCoord> env) {
  using Op = Expr::Node::Op;
  switch (n.op) {
    case Op::Const: return n.constant;
    case Op::Var:
      if (n.slot < 0 || static_cast<std::size_t>(n.slot) >= env.size())
        throw std::out_of_range("expression variable '" + n.name + "' has no value");
      return env[n.slot];
    case Op::Neg: return -eval_node(*n.lhs, env);
    case Op::Add: return eval_node(*n.lhs, env) + eval_node(*n.rhs, env);
    case Op::Sub: return eval_node(*n.lhs, env) - eval_node(*n.rhs, env);
    case Op::Mul: return eval_node(*n.lhs, env) * eval_node(*n.rhs, env);
    case Op::Div: return eval_node(*n.lhs, env) / eval_node(*n.rhs, env);
  }
  throw std::logic_error("bad expression node");
}

std::string print_node(const Expr::Node& n) {
  using Op = Expr::Node::Op;
  switch (n.op) {
    case Op::Const: return n.constant < 0 ? "(" + to_string(n.constant) + ")" : to_string(n.constant);
    case Op::Var: return n.name;
    case Op::Neg:
      return n.lhs->op == Op::Var ? "-" + n.lhs->name : "-(" + print_node(*n.lhs) + ")";
    case Op::Add: return "(" + print_node(*n.lhs) + " + " + print_node(*n.rhs) + ")";
    case Op::Sub: return "(" + print_node(*n.lhs) + " - " + print_node(*n.rhs) + ")";
    case Op::Mul: return print_node(*n.lhs) + "*" + print_node(*n.rhs);
    case Op::Div: return print_node(*n.lhs) + "/" + print_node(*n.rhs);
  }
  return "?";
}

}  // namespace

Expr::Expr(Rational c) : node_(std::make_shared<Node>(Node{Node::Op::Const, std::move(c), -1, {}, {}, {}})) {}

Expr::Expr(int c) : Expr(Rational(c)) {}

Expr Expr::var(int slot, std::string name) {
  return Expr(std::make_shared<Node>(Node{Node::Op::Var, 0, slot, std::move(name), {}, {}}));
}

ProjectiveCoord Expr::eval(std::span<const ProjectiveCoord> env) const {
  return eval_node(*node_, env);
}

std::string Expr::to_string() const {
  return print_node(*node_);
}

Expr operator+(const Expr& a, const Expr& b) {
  return Expr(std::make_shared<Expr::Node>(Expr::Node{Expr::Node::Op::Add, 0, -1, {}, a.node_, b.node_}));
}
Expr operator-(const Expr& a, const Expr& b) {
  return Expr(std::make_shared<Expr::Node>(Expr::Node{Expr::Node::Op::Sub, 0, -1, {}, a.node_, b.node_}));
}
Expr operator*(const Expr& a, const Expr& b) {
  return Expr(std::make_shared<Expr::Node>(Expr::Node{Expr::Node::Op::Mul, 0, -1, {}, a.node_, b.node_}));
}
Expr operator/(const Expr& a, const Expr& b) {
  return Expr(std::make_shared<Expr::Node>(Expr::Node{Expr::Node::Op::Div, 0, -1, {}, a.node_, b.node_}));
}
Expr operator-(const Expr& a) {
  return Expr(std::make_shared<Expr::Node>(Expr::Node{Expr::Node::Op::Neg, 0, -1, {}, a.node_, {}}));
}

Expr var_f() {
  return Expr::var(kSlotF, "f");
}

Expr var_g() {
  return Expr::var(kSlotG, "g");
}

Expr var_b(int i) {
  if (i < 1 || i > kNumParams) throw std::out_of_range("b_i needs 1 <= i <= 8");
  return Expr::var(kSlotB1 + i - 1, "b" + std::to_string(i));
}

LinearForm lin_b(int i) {
  if (i < 1 || i > kNumParams) throw std::out_of_range("b_i needs 1 <= i <= 8");
  return LinearForm::Unit(i - 1);
}

Expr to_expr(const LinearForm& form) {
  std::optional<Expr> out;
  for (int i = 0; i < kNumParams; ++i) {
    const Rational& c = form(i);
    if (c == 0) continue;
    if (out && c < 0) {
      out = *out - (c == -1 ? var_b(i + 1) : Expr(Rational(-c)) * var_b(i + 1));
      continue;
    }
    Expr term = c == 1 ? var_b(i + 1) : c == -1 ? -var_b(i + 1) : Expr(c) * var_b(i + 1);
    out = out ? *out + term : term;
  }
  return out ? *out : Expr(0);
}

// ---------------------------------------------------------------------------
// Generator table.

namespace {

ParamMatrix param_rows(const std::array<LinearForm, kNumParams>& rows) {
  ParamMatrix m;
  for (int i = 0; i < kNumParams; ++i) m.row(i) = rows[i].transpose();
  return m;
}

BirationalStep make_step(Generator g) {
  const auto b = [](int i) { return lin_b(i); };
  const Expr f = var_f(), gg = var_g();
  const auto B = [](int i) { return var_b(i); };

  BirationalStep s;
  s.name = std::string(to_string(g));
  s.picmap = generator_picmap(g);
  switch (g) {
    case Generator::w0:
      s.param_matrix = param_rows({b(1) + b(4) - b(3), b(2) + b(4) - b(3), 2 * b(4) - b(3), b(4),
                                   b(5) + b(3) - b(4), b(6) + b(3) - b(4), b(7) + b(3) - b(4),
                                   b(8) + b(3) - b(4)});
      s.coord_f = f - B(3) + B(4);
      s.coord_g = gg + B(3) - B(4);
      break;
    case Generator::w1:
      s.param_matrix = param_rows({b(1), b(3), b(2), b(4), b(5), b(6), b(7), b(8)});
      break;
    case Generator::w2:
      s.param_matrix = param_rows({b(2), b(1), b(3), b(4), b(5), b(6), b(7), b(8)});
      break;
    case Generator::w3:
      s.param_matrix = param_rows({-b(7), b(2), b(3), b(4), b(1) + b(5) + b(7), b(1) + b(6) + b(7),
                                   -b(1), b(8)});
      s.coord_g = (f + B(7)) * (gg + B(1)) / (f - B(1)) + B(7);
      break;
    case Generator::w4:
      s.param_matrix = param_rows({b(1), b(2), b(3), b(4), b(5), b(6), b(8), b(7)});
      break;
    case Generator::w5:
      s.param_matrix = param_rows({-b(5), b(2), b(3), b(4), -b(1), b(6), b(1) + b(5) + b(7),
                                   b(1) + b(5) + b(8)});
      s.coord_f = (f - B(1)) * (gg - B(5)) / (gg + B(1)) - B(5);
      break;
    case Generator::w6:
      s.param_matrix = param_rows({b(1), b(2), b(3), b(4), b(6), b(5), b(7), b(8)});
      break;
    case Generator::m0:
      s.param_matrix = param_rows({b(1), b(2), b(3), b(4), b(7), b(8), b(5), b(6)});
      s.coord_f = -gg;
      s.coord_g = -f;
      break;
    case Generator::m1:
      s.param_matrix = param_rows({b(4) - b(2) - b(8), b(4) - b(1) - b(8), b(4) + b(7) - b(8), b(4),
                                   b(1) + b(2) + b(5) + b(8) - b(4),
                                   b(1) + b(2) + b(6) + b(8) - b(4), b(3) + b(8) - b(4), b(8)});
      s.coord_f = -f + B(4) - B(8);
      s.coord_g = (f * (gg + B(1)) + B(2) * (f - B(1))) / (f + gg) + B(8) - B(4);
      break;
    case Generator::m2:
      s.param_matrix = param_rows({b(4) - b(2) - b(6), b(4) - b(1) - b(6), b(4) + b(5) - b(6), b(4),
                                   b(3) + b(6) - b(4), b(6), b(1) + b(2) + b(6) + b(7) - b(4),
                                   b(1) + b(2) + b(6) + b(8) - b(4)});
      s.coord_f = (gg * (f - B(1)) - B(2) * (gg + B(1))) / (f + gg) + B(4) - B(6);
      s.coord_g = -gg - B(4) + B(6);
      break;
    case Generator::r:
      s.param_matrix = param_rows({b(4) - b(2) - b(8), b(4) - b(1) - b(8), b(4) + b(7) - b(8), b(4),
                                   b(3) + b(8) - b(4), b(8), b(1) + b(2) + b(5) + b(8) - b(4),
                                   b(1) + b(2) + b(6) + b(8) - b(4)});
      s.coord_f = -((f * (gg + B(1)) + B(2) * (f - B(1))) / (f + gg)) + B(4) - B(8);
      s.coord_g = f - B(4) + B(8);
      break;
    case Generator::r2:
      s.param_matrix = param_rows({b(4) - b(2) - b(6), b(4) - b(1) - b(6), b(4) + b(5) - b(6), b(4),
                                   b(1) + b(2) + b(6) + b(7) - b(4),
                                   b(1) + b(2) + b(6) + b(8) - b(4), b(3) + b(6) - b(4), b(6)});
      s.coord_f = gg + B(4) - B(6);
      s.coord_g = -((gg * (f - B(1)) - B(2) * (gg + B(1))) / (f + gg)) - B(4) + B(6);
      break;
  }
  return s;
}

}  // namespace

const BirationalStep& generator_step(Generator g) {
  static const std::array<BirationalStep, 12> table = [] {
    std::array<BirationalStep, 12> t;
    for (Generator s : kAllGenerators) t[static_cast<std::size_t>(s)] = make_step(s);
    return t;
  }();
  return table[static_cast<std::size_t>(g)];
}

SurfaceState eval_step(const BirationalStep& s, const SurfaceState& in) {
  std::array<ProjectiveCoord, kCanonicalSlots> env;
  env[kSlotF] = in.p.f;
  env[kSlotG] = in.p.g;
  for (int i = 0; i < kNumParams; ++i) env[kSlotB1 + i] = in.b(i);
  SurfaceState out;
  out.b = s.map_params(in.b);
  out.p.f = s.coord_f.eval(env);
  out.p.g = s.coord_g.eval(env);
  return out;
}

SurfaceState eval_word(std::span<const Generator> w, const SurfaceState& in) {
  SurfaceState s = in;
  for (std::size_t k = w.size(); k-- > 0;) {
    try {
      s = eval_step(generator_step(w[k]), s);
    } catch (const Indeterminate& e) {
      throw Indeterminate(std::string(e.what()) + " at position " + std::to_string(k) + " (" +
                              std::string(to_string(w[k])) + ")",
                          k);
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Sampling.

std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

Rational random_rational(std::mt19937_64& rng, std::int64_t bound) {
  std::uniform_int_distribution<std::int64_t> num(-bound, bound);
  std::uniform_int_distribution<std::int64_t> den(1, bound);
  const std::int64_t n = num(rng);
  const std::int64_t d = den(rng);
  return Rational(n, d);
}

SurfaceState random_surface_state(std::mt19937_64& rng, std::int64_t bound) {
  SurfaceState s;
  for (int i = 0; i < kNumParams; ++i) s.b(i) = random_rational(rng, bound);
  s.p.f = random_rational(rng, bound);
  s.p.g = random_rational(rng, bound);
  return s;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Equal: return "equal";
    case Verdict::Counterexample: return "counterexample";
    case Verdict::NoSamples: return "no samples";
  }
  return "?";
}

MapsEqualResult<SurfaceState> maps_equal(const std::function<SurfaceState(const SurfaceState&)>& a,
                                         const std::function<SurfaceState(const SurfaceState&)>& b,
                                         int trials, std::uint64_t seed) {
  return maps_equal<SurfaceState>(a, b, [](std::mt19937_64& rng) { return random_surface_state(rng); },
                                  trials, seed);
}

MapsEqualResult<SurfaceState> words_equal(const Word& a, const Word& b, int trials, std::uint64_t seed) {
  return maps_equal([&a](const SurfaceState& s) { return eval_word(a, s); },
                    [&b](const SurfaceState& s) { return eval_word(b, s); }, trials, seed);
}

}  // namespace dpsym
