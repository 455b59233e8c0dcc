#include "flatkern/exactalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace flatkern {

std::string rational_to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto slash = s.find('/');
  auto digits = [&](const std::string& t, bool sign_ok) {
    if (t.empty()) return false;
    std::size_t i = (sign_ok && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!digits(num, true) || !digits(den, false)) throw std::invalid_argument("bad rational '" + s + "'");
  if (num[0] == '+') num = num.substr(1);
  mpz_class n(num), q(den);
  if (q == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  Rational r(n, q);
  r.canonicalize();
  return r;
}

bool is_square_free(long d) {
  if (d <= 1) return false;
  for (long p = 2; p * p <= d; ++p)
    if (d % (p * p) == 0) return false;
  return true;
}

QuadraticNumber::QuadraticNumber(Rational a, Rational b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  a_.canonicalize();
  b_.canonicalize();
  if (d_ < 0) throw ContextError("negative discriminant base");
  if (d_ == 0 && sgn(b_) != 0) throw ContextError("irrational part in rational context");
  if (d_ != 0 && !is_square_free(d_)) throw ContextError("discriminant base must be square-free and > 1");
}

void QuadraticNumber::same_context(const QuadraticNumber& o) const {
  if (d_ != o.d_)
    throw ContextError("mixed contexts d=" + std::to_string(d_) + " and d=" + std::to_string(o.d_));
}

int QuadraticNumber::sign() const {
  int sa = sgn(a_), sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: compare a^2 with b^2 d
  Rational lhs = a_ * a_, rhs = b_ * b_ * d_;
  int c = cmp(lhs, rhs);
  return c > 0 ? sa : sb;  // c == 0 impossible, d not a square
}

QuadraticNumber QuadraticNumber::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Rational n = norm();
  return {a_ / n, -b_ / n, d_};
}

QuadraticNumber& QuadraticNumber::operator+=(const QuadraticNumber& o) {
  same_context(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadraticNumber& QuadraticNumber::operator-=(const QuadraticNumber& o) {
  same_context(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadraticNumber& QuadraticNumber::operator*=(const QuadraticNumber& o) {
  same_context(o);
  Rational a = a_ * o.a_ + b_ * o.b_ * d_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadraticNumber& QuadraticNumber::operator/=(const QuadraticNumber& o) {
  same_context(o);
  return *this *= o.inverse();
}

bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
  x.same_context(y);
  return x.a_ == y.a_ && x.b_ == y.b_;
}

double QuadraticNumber::to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(double(d_)); }

std::string QuadraticNumber::to_string() const {
  std::ostringstream os;
  if (sgn(b_) == 0) {
    os << a_.get_str();
    return os.str();
  }
  if (sgn(a_) != 0) os << a_.get_str() << (sgn(b_) > 0 ? "+" : "");
  if (b_ == -1) os << "-";
  else if (b_ != 1) os << b_.get_str() << "*";
  os << "sqrt" << d_;
  return os.str();
}

QMatrix::QMatrix(std::size_t rows, std::size_t cols, long d)
    : rows_(rows), cols_(cols), d_(d), e_(rows * cols, QuadraticNumber::zero(d)) {}

QMatrix::QMatrix(const std::vector<QVector>& rows, long d) : rows_(rows.size()), d_(d) {
  cols_ = rows.empty() ? 0 : rows[0].size();
  e_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix rows");
    for (const auto& x : r) {
      if (x.d() != d) throw ContextError("matrix entry outside context");
      e_.push_back(x);
    }
  }
}

QVector QMatrix::row(std::size_t i) const {
  return QVector(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
}

QVector QMatrix::apply(const QVector& x) const {
  if (x.size() != cols_) throw DimensionError("matrix-vector size mismatch");
  QVector y(rows_, QuadraticNumber::zero(d_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!(*this)(i, j).is_zero() && !x[j].is_zero()) y[i] += (*this)(i, j) * x[j];
  return y;
}

namespace {

bool zero(const QuadraticNumber& x) { return x.is_zero(); }
bool zero(const Rational& x) { return sgn(x) == 0; }
QuadraticNumber inv_of(const QuadraticNumber& x) { return x.inverse(); }
Rational inv_of(const Rational& x) { return Rational(1) / x; }

// Gauss-Jordan on a row accessor. Lowest pivot column first.
template <class Get, class T>
std::vector<std::size_t> gauss_jordan(std::size_t rows, std::size_t cols, Get&& at, T*) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && zero(at(p, c))) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(p, j), at(r, j));
    T inv = inv_of(at(r, c));
    for (std::size_t j = c; j < cols; ++j)
      if (!zero(at(r, j))) at(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || zero(at(i, c))) continue;
      T f = at(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!zero(at(r, j))) at(i, j) -= f * at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class V, class Z, class O>
std::vector<V> kernel_from_rref(const std::vector<V>& rrefrows, const std::vector<std::size_t>& pivots, std::size_t cols,
                                Z mkzero, O mkone) {
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<V> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    V v(cols, mkzero());
    v[f] = mkone();
    for (std::size_t k = 0; k < pivots.size(); ++k)
      if (!zero(rrefrows[k][f])) v[pivots[k]] = -rrefrows[k][f];
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::vector<std::size_t> rref(QMatrix& m) {
  auto at = [&](std::size_t i, std::size_t j) -> QuadraticNumber& { return m(i, j); };
  return gauss_jordan(m.rows(), m.cols(), at, static_cast<QuadraticNumber*>(nullptr));
}

std::vector<std::size_t> rref(RMatrix& m, std::size_t cols) {
  for (auto& r : m)
    if (r.size() != cols) throw DimensionError("ragged rational matrix");
  auto at = [&](std::size_t i, std::size_t j) -> Rational& { return m[i][j]; };
  return gauss_jordan(m.size(), cols, at, static_cast<Rational*>(nullptr));
}

std::size_t rank(QMatrix m) { return rref(m).size(); }
std::size_t rank(RMatrix m, std::size_t cols) { return rref(m, cols).size(); }

std::vector<QVector> row_space_basis(const std::vector<QVector>& vs, long d) {
  if (vs.empty()) return {};
  QMatrix m(vs, d);
  auto piv = rref(m);
  std::vector<QVector> out;
  for (std::size_t i = 0; i < piv.size(); ++i) out.push_back(m.row(i));
  return out;
}

std::vector<QVector> kernel_basis(const QMatrix& m) {
  QMatrix r = m;
  auto piv = rref(r);
  std::vector<QVector> rows;
  for (std::size_t i = 0; i < piv.size(); ++i) rows.push_back(r.row(i));
  long d = m.d();
  auto k = kernel_from_rref(rows, piv, m.cols(), [d] { return QuadraticNumber::zero(d); },
                            [d] { return QuadraticNumber::one(d); });
  return row_space_basis(k, d);
}

std::vector<RVector> kernel_basis(const RMatrix& m, std::size_t cols) {
  RMatrix r = m;
  auto piv = rref(r, cols);
  r.resize(piv.size());
  auto k = kernel_from_rref(r, piv, cols, [] { return Rational(0); }, [] { return Rational(1); });
  if (k.empty()) return k;
  auto p2 = rref(k, cols);
  k.resize(p2.size());
  return k;
}

long common_context(const QVector& v) {
  if (v.empty()) return 0;
  long d = v[0].d();
  for (const auto& x : v)
    if (x.d() != d) throw ContextError("vector mixes contexts");
  return d;
}

QVector to_quadratic(const RVector& v, long d) {
  QVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(QuadraticNumber::rational(x, d));
  return out;
}

std::size_t qspan_dimension(const QVector& values) {
  if (values.empty()) throw DimensionError("qspan_dimension of empty list");
  common_context(values);
  RMatrix m;
  for (const auto& v : values) m.push_back({v.a(), v.b()});
  return rank(std::move(m), 2);
}

std::vector<RVector> rational_closure(const QVector& u) {
  common_context(u);
  bool nz = false;
  for (const auto& x : u) nz = nz || !x.is_zero();
  if (!nz) throw std::domain_error("rational closure of the zero vector");
  RMatrix m(2);
  for (const auto& x : u) {
    m[0].push_back(x.a());
    m[1].push_back(x.b());
  }
  auto piv = rref(m, u.size());
  m.resize(piv.size());
  return m;
}

// Phase-one simplex with Bland's rule on A y = -A 1, y >= 0 (x = 1 + y).
std::optional<RVector> positive_solution(const RMatrix& aeq, std::size_t n) {
  if (n == 0) throw DimensionError("positive_solution needs at least one column");
  for (const auto& r : aeq)
    if (r.size() != n) throw DimensionError("ragged system");
  // drop dependent rows so the artificial basis can always be driven out
  RMatrix a = aeq;
  auto piv = rref(a, n);
  a.resize(piv.size());
  std::size_t m = a.size();
  if (m == 0) return RVector(n, Rational(1));

  std::size_t width = n + m;  // y then artificials
  RMatrix t(m, RVector(width + 1, Rational(0)));
  for (std::size_t i = 0; i < m; ++i) {
    Rational b = 0;
    for (std::size_t j = 0; j < n; ++j) b -= a[i][j];
    int s = sgn(b) < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = s * a[i][j];
    t[i][n + i] = 1;
    t[i][width] = s * b;
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  // reduced costs of objective sum(artificials)
  auto reduced = [&](std::size_t j) {
    Rational c = j >= n ? Rational(1) : Rational(0);
    for (std::size_t i = 0; i < m; ++i)
      if (basis[i] >= n) c -= t[i][j];
    return c;
  };

  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < width; ++j) {
      bool in_basis = std::find(basis.begin(), basis.end(), j) != basis.end();
      if (!in_basis && sgn(reduced(j)) < 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(t[i][enter]) <= 0) continue;
      Rational ratio = t[i][width] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction cannot occur for a bounded-below objective
    Rational p = t[leave][enter];
    for (auto& x : t[leave]) x /= p;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || sgn(t[i][enter]) == 0) continue;
      Rational f = t[i][enter];
      for (std::size_t j = 0; j <= width; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] >= n && sgn(t[i][width]) != 0) return std::nullopt;

  RVector x(n, Rational(1));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] += t[i][width];
  return x;
}

}  // namespace flatkern
