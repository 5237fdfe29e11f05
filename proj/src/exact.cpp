#include "weylfund/exact.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <sstream>

namespace weylfund {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

mpz_class parse_int(std::string_view s, std::string_view whole) {
  if (!is_integer_literal(s)) throw InputError("malformed rational: '" + std::string(whole) + "'");
  std::string digits(s);
  if (digits[0] == '+') digits.erase(0, 1);
  return mpz_class(digits, 10);
}

}  // namespace

Rat::Rat(long num, long den) {
  if (den == 0) throw InputError("zero denominator");
  q_ = mpq_class(num, 1);
  q_ /= mpq_class(den, 1);
  q_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto slash = text.find('/');
  mpz_class num, den(1);
  if (slash == std::string_view::npos) {
    num = parse_int(text, text);
  } else {
    num = parse_int(text.substr(0, slash), text);
    den = parse_int(text.substr(slash + 1), text);
    if (den == 0) throw InputError("zero denominator: '" + std::string(text) + "'");
  }
  mpq_class q(num, den);
  q.canonicalize();
  return Rat(std::move(q));
}

long Rat::to_long() const {
  if (!is_integer()) throw std::logic_error("Rat::to_long on non-integer " + str());
  if (!q_.get_num().fits_slong_p()) throw std::overflow_error("Rat::to_long overflow");
  return q_.get_num().get_si();
}

std::string Rat::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

VecPi VecPi::from_ints(std::span<const int> coords) {
  VecPi v(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) v[i] = Rat(coords[i]);
  return v;
}

bool VecPi::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return r.is_zero(); });
}

VecPi VecPi::operator-() const {
  VecPi r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

VecPi& VecPi::operator+=(const VecPi& o) {
  if (o.size() != size()) throw InputError("vector length mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

VecPi& VecPi::operator-=(const VecPi& o) {
  if (o.size() != size()) throw InputError("vector length mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

VecPi& VecPi::operator*=(const Rat& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

std::strong_ordering operator<=>(const VecPi& a, const VecPi& b) {
  return std::lexicographical_compare_three_way(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
}

std::ostream& operator<<(std::ostream& os, const VecPi& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  return os << ')';
}

MatRat::MatRat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

MatRat::MatRat(std::size_t rows, std::size_t cols, std::vector<Rat> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (e_.size() != rows * cols) throw InputError("matrix entry count does not match shape");
}

MatRat MatRat::identity(std::size_t n) {
  MatRat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

MatRat MatRat::from_rows(const std::vector<std::vector<Rat>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows[0].size() : 0;
  MatRat m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw InputError("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

bool MatRat::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

MatRat MatRat::transpose() const {
  MatRat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

MatRat MatRat::operator*(const MatRat& o) const {
  if (cols_ != o.rows_) throw InputError("matrix product shape mismatch");
  MatRat r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
    }
  return r;
}

std::vector<Rat> MatRat::operator*(std::span<const Rat> x) const {
  if (x.size() != cols_) throw InputError("matrix-vector shape mismatch");
  std::vector<Rat> r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!x[j].is_zero()) r[i] += (*this)(i, j) * x[j];
  return r;
}

VecPi MatRat::operator*(const VecPi& x) const {
  return VecPi((*this) * std::span<const Rat>(x.coords()));
}

namespace {

// Row-reduces m in place; returns (rank, determinant sign/product for square input).
std::pair<std::size_t, Rat> eliminate(MatRat& m) {
  std::size_t rank = 0;
  Rat det = 1;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t piv = rank;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) {
      det = 0;
      continue;
    }
    if (piv != rank) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(rank, j));
      det = -det;
    }
    Rat p = m(rank, col);
    det *= p;
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      if (m(i, col).is_zero()) continue;
      Rat f = m(i, col) / p;
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(rank, j);
    }
    ++rank;
  }
  if (rank < m.rows() || rank < m.cols()) det = 0;
  return {rank, det};
}

}  // namespace

Rat MatRat::determinant() const {
  if (!is_square()) throw InputError("determinant of non-square matrix");
  MatRat m(*this);
  return eliminate(m).second;
}

std::size_t MatRat::matrix_rank() const {
  MatRat m(*this);
  return eliminate(m).first;
}

std::strong_ordering operator<=>(const MatRat& a, const MatRat& b) {
  if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
  if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.e_.begin(), a.e_.end(), b.e_.begin(), b.e_.end());
}

std::ostream& operator<<(std::ostream& os, const MatRat& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

std::optional<std::vector<Rat>> solve_linear(const MatRat& a, std::span<const Rat> b) {
  if (!a.is_square()) throw InputError("solve_linear: matrix is not square");
  if (b.size() != a.rows()) throw InputError("solve_linear: right-hand side has wrong length");
  const std::size_t n = a.rows();
  MatRat aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && aug(piv, col).is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != col)
      for (std::size_t j = 0; j <= n; ++j) std::swap(aug(piv, j), aug(col, j));
    Rat p = aug(col, col);
    for (std::size_t j = col; j <= n; ++j) aug(col, j) /= p;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || aug(i, col).is_zero()) continue;
      Rat f = aug(i, col);
      for (std::size_t j = col; j <= n; ++j) aug(i, j) -= f * aug(col, j);
    }
  }
  std::vector<Rat> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
  return x;
}

}  // namespace weylfund
