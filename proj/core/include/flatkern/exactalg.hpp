#pragma once

// Exact arithmetic over Q and Q(sqrt d).

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace flatkern {

using Rational = mpq_class;

// "p/q" always, denominator included.
std::string rational_to_string(const Rational& q);
Rational rational_from_string(const std::string& s);

struct ContextError : std::logic_error {
  using std::logic_error::logic_error;
};

struct DimensionError : std::logic_error {
  using std::logic_error::logic_error;
};

bool is_square_free(long d);

// a + b*sqrt(d). d == 0 is the rational context (b must vanish).
class QuadraticNumber {
 public:
  QuadraticNumber() : d_(0) {}
  QuadraticNumber(Rational a, Rational b, long d);

  static QuadraticNumber rational(const Rational& a, long d = 0) { return {a, 0, d}; }
  static QuadraticNumber zero(long d) { return {0, 0, d}; }
  static QuadraticNumber one(long d) { return {1, 0, d}; }
  static QuadraticNumber sqrt_d(long d) { return {0, 1, d}; }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  long d() const { return d_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }
  int sign() const;

  QuadraticNumber conjugate() const { return {a_, -b_, d_}; }
  Rational norm() const { return a_ * a_ - b_ * b_ * d_; }
  QuadraticNumber inverse() const;

  QuadraticNumber operator-() const { return {-a_, -b_, d_}; }
  QuadraticNumber& operator+=(const QuadraticNumber& o);
  QuadraticNumber& operator-=(const QuadraticNumber& o);
  QuadraticNumber& operator*=(const QuadraticNumber& o);
  QuadraticNumber& operator/=(const QuadraticNumber& o);

  friend QuadraticNumber operator+(QuadraticNumber x, const QuadraticNumber& y) { return x += y; }
  friend QuadraticNumber operator-(QuadraticNumber x, const QuadraticNumber& y) { return x -= y; }
  friend QuadraticNumber operator*(QuadraticNumber x, const QuadraticNumber& y) { return x *= y; }
  friend QuadraticNumber operator/(QuadraticNumber x, const QuadraticNumber& y) { return x /= y; }

  // componentwise; contexts must agree
  friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y);
  friend bool operator<(const QuadraticNumber& x, const QuadraticNumber& y) { return (x - y).sign() < 0; }
  friend bool operator>(const QuadraticNumber& x, const QuadraticNumber& y) { return y < x; }

  double to_double() const;
  std::string to_string() const;  // human form, e.g. "1+1/2*sqrt2"

 private:
  void same_context(const QuadraticNumber& o) const;

  Rational a_, b_;
  long d_;
};

using QVector = std::vector<QuadraticNumber>;
using RVector = std::vector<Rational>;
using RMatrix = std::vector<RVector>;

// Rows x cols matrix over one context.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols, long d);
  explicit QMatrix(const std::vector<QVector>& rows, long d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  long d() const { return d_; }

  QuadraticNumber& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const QuadraticNumber& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  QVector row(std::size_t i) const;
  QVector apply(const QVector& x) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  long d_ = 0;
  QVector e_;
};

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(QMatrix& m);
std::vector<std::size_t> rref(RMatrix& m, std::size_t cols);

std::size_t rank(QMatrix m);
std::size_t rank(RMatrix m, std::size_t cols);

// Canonical: rows of the RREF of the kernel, sorted by pivot.
std::vector<QVector> kernel_basis(const QMatrix& m);
std::vector<RVector> kernel_basis(const RMatrix& m, std::size_t cols);

// Canonical basis of the row space (non-zero RREF rows).
std::vector<QVector> row_space_basis(const std::vector<QVector>& vs, long d);

std::size_t qspan_dimension(const QVector& values);

// Strictly positive x with A x = 0, or nothing. Exact.
std::optional<RVector> positive_solution(const RMatrix& aeq, std::size_t cols);

// Smallest rational subspace containing u.
std::vector<RVector> rational_closure(const QVector& u);

long common_context(const QVector& v);
QVector to_quadratic(const RVector& v, long d);

}  // namespace flatkern
