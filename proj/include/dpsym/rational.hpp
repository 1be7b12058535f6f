// Exact rational scalar and the small amount of exact linear algebra the
// lattice code needs. Everything downstream of this header is free of
// floating point.

#ifndef DPSYM_RATIONAL_HPP_
#define DPSYM_RATIONAL_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace dpsym {

// Expression templates are disabled so the type composes with Eigen.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

template <typename Scalar, int Rows>
using Vec = Eigen::Matrix<Scalar, Rows, 1>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Parses "p", "-p", "p/q" (q != 0). Whitespace around the token is ignored.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" text, or "p" when the denominator is one.
std::string to_string(const Rational& r);

/// Decimal approximation with `digits` significant digits, for plotting only.
std::string to_decimal(const Rational& r, int digits = 20);

inline bool is_integer(const Rational& r) {
  return denominator(r) == 1;
}

// Solves A x = b exactly by Gauss-Jordan elimination over Q. Returns
// nullopt when the system is inconsistent. When the solution is not unique
// the free variables are set to zero, so callers that need uniqueness must
// pass a full-column-rank A.
template <typename DerivedA, typename DerivedB>
std::optional<Vec<Rational, Eigen::Dynamic>> solve_exact(
    const Eigen::MatrixBase<DerivedA>& A, const Eigen::MatrixBase<DerivedB>& b) {
  const Eigen::Index rows = A.rows();
  const Eigen::Index cols = A.cols();
  Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic> aug(rows, cols + 1);
  aug.leftCols(cols) = A.template cast<Rational>();
  aug.col(cols) = b.template cast<Rational>();

  std::vector<Eigen::Index> pivot_col;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && aug(p, c) == 0) ++p;
    if (p == rows) continue;
    aug.row(p).swap(aug.row(r));
    const Rational inv = 1 / aug(r, c);
    aug.row(r) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i != r && aug(i, c) != 0) {
        const Rational factor = aug(i, c);
        aug.row(i) -= factor * aug.row(r);
      }
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (Eigen::Index i = r; i < rows; ++i)
    if (aug(i, cols) != 0) return std::nullopt;

  Vec<Rational, Eigen::Dynamic> x = Vec<Rational, Eigen::Dynamic>::Zero(cols);
  for (Eigen::Index i = 0; i < r; ++i) x(pivot_col[i]) = aug(i, cols);
  return x;
}

}  // namespace dpsym

#endif  // DPSYM_RATIONAL_HPP_
