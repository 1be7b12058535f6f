// Second transcriptions of the phi and psi formulas, written with plain
// rational arithmetic and a different arrangement of each fraction. They
// return nullopt wherever some denominator vanishes.

#ifndef DPSYM_TESTS_ORACLES_HPP_
#define DPSYM_TESTS_ORACLES_HPP_

#include <array>
#include <optional>
#include <tuple>

#include "dpsym/models.hpp"

namespace oracle {

using dpsym::Rational;

struct PhiOut {
  std::array<Rational, 8> b;
  Rational f, g;
};

// Solve (f + g)(F + g) = P(g) for F, then (F + g)(F + G) = Q(F) for G,
// where Q uses b_7 - d and b_8 - d.
inline std::optional<PhiOut> phi(const std::array<Rational, 8>& b, const Rational& f, const Rational& g) {
  Rational d = 0;
  for (const Rational& v : b) d += v;
  const Rational p_num = (g + b[0]) * (g + b[1]) * (g + b[2]) * (g + b[3]);
  const Rational p_den = (g - b[4]) * (g - b[5]);
  const Rational s = f + g;
  if (p_den == 0 || s == 0) return std::nullopt;
  const Rational F = (p_num - g * s * p_den) / (s * p_den);

  const Rational q_num = (F - b[0]) * (F - b[1]) * (F - b[2]) * (F - b[3]);
  const Rational q_den = (F + b[6] - d) * (F + b[7] - d);
  const Rational t = F + g;
  if (q_den == 0 || t == 0) return std::nullopt;
  const Rational G = (q_num - F * t * q_den) / (t * q_den);

  PhiOut out{b, F, G};
  out.b[4] += d;
  out.b[5] += d;
  out.b[6] -= d;
  out.b[7] -= d;
  return out;
}

struct PsiOut {
  dpsym::SchlesingerParams t;
  Rational x, y;
};

inline std::optional<PsiOut> psi(const dpsym::SchlesingerParams& p, const Rational& x, const Rational& y) {
  const Rational &a1 = p.theta01, &a2 = p.theta02, &c1 = p.theta11, &c2 = p.theta12;
  const Rational &k1 = p.kappa1, &k2 = p.kappa2, &k3 = p.kappa3;

  const Rational e2 = k1 * k2 + k2 * k3 + k3 * k1;
  const Rational e3 = k1 * k2 * k3;
  const Rational q = (y - c2) * (x - a2);
  const Rational r1 = e2 - q - a1 * (y + a2) - c1 * (a1 + a2 + c2);
  const Rational r2 = e3 + c1 * (q + a1 * (y + a2));

  const Rational h = x + a1 - a2;
  const Rational w = (x + y) * (c1 - c2);
  if (h == 0 || w == 0) return std::nullopt;
  // alpha over a common denominator h * w.
  const Rational al = (y * r1 * h + x * (a1 * r1 + r2)) / (h * w);
  const Rational be = ((y + a2) * r1 + r2) / w;
  const Rational diff = al - be;

  const Rational xn = diff * (al * x * (c1 - c2) + (a2 + 1) * (x * (y - c2) + y * (a1 - a2)));
  const Rational xd = diff * (x * (y - c2) + (a1 - a2) * y) - al * (c1 + 1) * (a1 - a2);
  const Rational yn = diff * (y * h - c2 * x);
  const Rational yd = al * (a1 - a2);
  if (xd == 0 || yd == 0) return std::nullopt;

  PsiOut out{p, xn / xd, yn / yd};
  out.t.theta01 = a1 - 1;
  out.t.theta11 = c1 + 1;
  return out;
}

}  // namespace oracle

#endif  // DPSYM_TESTS_ORACLES_HPP_
