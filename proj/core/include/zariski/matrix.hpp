#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "zariski/rational.hpp"

namespace zariski {

/// Dense integer matrix, row-major. Gram data in this domain is integral,
/// so the integer form is the common case.
class ZMatrix {
 public:
  ZMatrix() = default;
  ZMatrix(std::size_t rows, std::size_t cols);
  static ZMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;

  bool operator==(const ZMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// Dense rational matrix, row-major.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  static QMatrix from_rows(std::initializer_list<std::initializer_list<Rat>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rat& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;

  bool operator==(const QMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

QMatrix to_rational(const ZMatrix& m);

/// Inertia of a symmetric form: counts of positive, negative and zero
/// eigenvalues. Computed exactly; no floating point anywhere.
struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  bool operator==(const Signature&) const = default;
};

Int determinant(const ZMatrix& m);
Rat determinant(const QMatrix& m);

/// Solves m·x = rhs exactly; std::nullopt when m is singular.
std::optional<std::vector<Rat>> solve_linear(const ZMatrix& m, std::span<const Rat> rhs);

/// Sylvester test: true iff every leading principal minor of order k has
/// sign (-1)^k. The 0x0 matrix counts as negative definite (empty support).
///
/// The span overloads take a row-major n*n symmetric matrix with int64
/// entries; they exist for hot loops over small integral Grams and agree
/// exactly with the matrix overloads. Throws InputError on asymmetry.
bool is_negative_definite(std::span<const std::int64_t> m, std::size_t n);
bool is_negative_definite(const ZMatrix& m);
bool is_negative_definite(const QMatrix& m);

inline constexpr std::size_t kDefaultSemidefiniteCap = 20;

/// All-principal-minors test: true iff every principal minor of order k has
/// sign (-1)^k or vanishes. Exponential in the matrix size, which is why the
/// size cap exists; support and fiber sets are small in practice.
/// Throws ResourceError when n exceeds the cap.
bool is_negative_semidefinite(std::span<const std::int64_t> m, std::size_t n,
                              std::size_t size_cap = kDefaultSemidefiniteCap);
bool is_negative_semidefinite(const ZMatrix& m,
                              std::size_t size_cap = kDefaultSemidefiniteCap);
bool is_negative_semidefinite(const QMatrix& m,
                              std::size_t size_cap = kDefaultSemidefiniteCap);

/// Exact inertia via congruence diagonalization (rational Schur complements
/// with diagonal pivoting; a rank-two row/column addition handles the
/// all-zero-diagonal case).
Signature signature(std::span<const std::int64_t> m, std::size_t n);
Signature signature(const ZMatrix& m);
Signature signature(const QMatrix& m);

}  // namespace zariski
