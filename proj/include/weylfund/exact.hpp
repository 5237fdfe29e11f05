#pragma once

// Exact rational scalars, vectors and matrices.
//
// Every quantity handled by the library (coordinates in the simple-root
// basis, inner products, Cartan entries) is rational, so there is no
// floating point anywhere. Scalars are backed by GMP rationals, which keeps
// long chains of reflections from overflowing.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace weylfund {

/// Malformed or inconsistent caller input (CLI exit code 2).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation refused because it would exceed a configured size bound
/// (CLI exit code 3).
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rational number, always in lowest terms with positive denominator.
class Rat {
 public:
  Rat() = default;
  Rat(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
  Rat(long long v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  Rat(long num, long den);
  explicit Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "p", "p/q" (q != 0, any sign); the result is normalized.
  static Rat parse(std::string_view text);

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  const mpq_class& value() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  /// Requires is_integer() and a value fitting in a long.
  long to_long() const;

  /// "p" for integers, otherwise "p/q".
  std::string str() const;

  Rat operator-() const { return Rat(mpq_class(-q_)); }
  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

/// Coordinates of a vector of V in the simple-root basis.
class VecPi {
 public:
  VecPi() = default;
  explicit VecPi(std::size_t rank) : c_(rank) {}
  explicit VecPi(std::vector<Rat> coords) : c_(std::move(coords)) {}
  VecPi(std::initializer_list<Rat> coords) : c_(coords) {}
  static VecPi from_ints(std::span<const int> coords);

  std::size_t size() const { return c_.size(); }
  const Rat& operator[](std::size_t i) const { return c_[i]; }
  Rat& operator[](std::size_t i) { return c_[i]; }
  const std::vector<Rat>& coords() const { return c_; }

  bool is_zero() const;
  VecPi operator-() const;
  VecPi& operator+=(const VecPi& o);
  VecPi& operator-=(const VecPi& o);
  VecPi& operator*=(const Rat& s);
  friend VecPi operator+(VecPi a, const VecPi& b) { return a += b; }
  friend VecPi operator-(VecPi a, const VecPi& b) { return a -= b; }
  friend VecPi operator*(const Rat& s, VecPi a) { return a *= s; }

  friend bool operator==(const VecPi& a, const VecPi& b) = default;
  /// Lexicographic on coordinates. This is the vector-space total order of V
  /// in which u < v iff v - u has first nonzero coordinate positive.
  friend std::strong_ordering operator<=>(const VecPi& a, const VecPi& b);

 private:
  std::vector<Rat> c_;
};

std::ostream& operator<<(std::ostream& os, const VecPi& v);

/// Dense row-major rational matrix.
class MatRat {
 public:
  MatRat() = default;
  MatRat(std::size_t rows, std::size_t cols);
  MatRat(std::size_t rows, std::size_t cols, std::vector<Rat> entries);
  static MatRat identity(std::size_t n);
  static MatRat from_rows(const std::vector<std::vector<Rat>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  Rat& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const std::vector<Rat>& entries() const { return e_; }

  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;
  MatRat transpose() const;
  MatRat operator*(const MatRat& o) const;
  std::vector<Rat> operator*(std::span<const Rat> x) const;
  VecPi operator*(const VecPi& x) const;
  Rat determinant() const;
  std::size_t matrix_rank() const;

  friend bool operator==(const MatRat& a, const MatRat& b) = default;
  /// Row-major lexicographic comparison (shapes compared first).
  friend std::strong_ordering operator<=>(const MatRat& a, const MatRat& b);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> e_;
};

std::ostream& operator<<(std::ostream& os, const MatRat& m);

/// Solves A x = b exactly; empty when A is singular.
/// Throws InputError if A is not square or b has the wrong length.
std::optional<std::vector<Rat>> solve_linear(const MatRat& a, std::span<const Rat> b);

}  // namespace weylfund
