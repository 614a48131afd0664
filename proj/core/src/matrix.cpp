#include "zariski/matrix.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>

#include "zariski/errors.hpp"

namespace zariski {

namespace {

using std::size_t;
using i64 = std::int64_t;
using i128 = __int128;

// ---------------------------------------------------------------------------
// Exact kernels. Every verdict below runs in integer (or rational) arithmetic
// only; the int64/int128 instantiations are selected by a Hadamard-style bit
// bound that guarantees no intermediate can overflow, with mpz as the general
// fallback. Bareiss intermediates are minors of the input matrix, so one
// bound covers the whole elimination.
// ---------------------------------------------------------------------------

int bit_length(const Int& v) {
  if (v == 0) return 0;
  return static_cast<int>(mpz_sizeinbase(v.get_mpz_t(), 2));
}

int bit_length(i64 v) {
  const unsigned long long a =
      v < 0 ? -static_cast<unsigned long long>(v) : static_cast<unsigned long long>(v);
  return std::bit_width(a);
}

// Upper bound on the bit length of any minor: (n*bits(n)+1)/2 for the
// dimensional factor plus one max-entry bit length per row.
template <class E>
int minor_bits_bound(const std::vector<E>& a, size_t n, size_t stride) {
  int total = (static_cast<int>(n) * std::bit_width(n) + 1) / 2 + 1;
  for (size_t r = 0; r < n; ++r) {
    int row_max = 0;
    for (size_t c = 0; c < n; ++c) row_max = std::max(row_max, bit_length(a[r * stride + c]));
    total += row_max;
  }
  return total;
}

template <class T>
T abs_value(const T& v) {
  return v < 0 ? T(-v) : v;
}

// Fraction-free elimination; returns the determinant. `a` is row-major n*n
// and is consumed.
template <class T>
T bareiss_determinant(std::vector<T>& a, size_t n) {
  if (n == 0) return T(1);
  bool negate = false;
  T prev(1);
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      size_t r = k + 1;
      while (r < n && a[r * n + k] == 0) ++r;
      if (r == n) return T(0);
      for (size_t j = k; j < n; ++j) std::swap(a[k * n + j], a[r * n + j]);
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
    prev = a[k * n + k];
  }
  T det = a[n * n - 1];
  if (negate) det = -det;
  return det;
}

// Bareiss pivots equal the leading principal minors, so the Sylvester test
// reads them off one elimination pass: negative definite iff the k-th pivot
// has sign (-1)^k. A zero pivot means a zero leading minor, which already
// fails the strict test, so no row swaps are ever needed here.
template <class T>
bool bareiss_negative_definite(std::vector<T>& a, size_t n) {
  T prev(1);
  for (size_t k = 0; k < n; ++k) {
    const T& pivot = a[k * n + k];
    const bool want_negative = (k % 2 == 0);
    if (pivot == 0 || (pivot < 0) != want_negative) return false;
    if (k + 1 == n) break;
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
    prev = a[k * n + k];
  }
  return true;
}

// Principal minor of the rows/cols in `subset`.
template <class T>
T principal_minor(const std::vector<T>& a, size_t n, const size_t* subset, size_t k,
                  std::vector<T>& scratch) {
  scratch.resize(k * k);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) scratch[i * k + j] = a[subset[i] * n + subset[j]];
  return bareiss_determinant(scratch, k);
}

template <class T>
bool minors_negative_semidefinite(const std::vector<T>& a, size_t n) {
  std::vector<size_t> subset(n);
  std::vector<T> scratch;
  for (size_t k = 1; k <= n; ++k) {
    // combination odometer over k-subsets
    for (size_t i = 0; i < k; ++i) subset[i] = i;
    while (true) {
      const T det = principal_minor(a, n, subset.data(), k, scratch);
      const bool odd = (k % 2 == 1);
      if (det != 0 && (det < 0) != odd) return false;
      size_t pos = k;
      while (pos > 0 && subset[pos - 1] == n - k + pos - 1) --pos;
      if (pos == 0) break;
      ++subset[pos - 1];
      for (size_t i = pos; i < k; ++i) subset[i] = subset[i - 1] + 1;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Signature kernels.
// ---------------------------------------------------------------------------

struct NeedFallback {};

// Fraction-free congruence reduction. One step turns M into
// diag(d, d*B) with B_ij = d*M_ij - M_i0*M_0j, which is congruent to
// diag(d, B) up to the sign of d; `flipped` tracks the accumulated sign.
Signature signature_fraction_free(std::vector<i64> m, size_t n) {
  constexpr i64 kAddGate = i64{1} << 60;
  constexpr i64 kMulGate = i64{1} << 30;
  Signature sig;
  bool flipped = false;
  size_t base = 0;
  const auto idx = [n](size_t i, size_t j) { return i * n + j; };
  while (base < n) {
    size_t pivot = n;
    for (size_t k = base; k < n; ++k)
      if (m[idx(k, k)] != 0) {
        pivot = k;
        break;
      }
    if (pivot == n) {
      size_t oi = n, oj = n;
      for (size_t i = base; i < n && oi == n; ++i)
        for (size_t j = i + 1; j < n; ++j)
          if (m[idx(i, j)] != 0) {
            oi = i;
            oj = j;
            break;
          }
      if (oi == n) {
        sig.zero += n - base;
        return sig;
      }
      for (size_t t = base; t < n; ++t)
        if (abs_value(m[idx(oi, t)]) > kAddGate || abs_value(m[idx(oj, t)]) > kAddGate)
          throw NeedFallback{};
      for (size_t t = base; t < n; ++t) m[idx(oi, t)] += m[idx(oj, t)];
      for (size_t t = base; t < n; ++t) m[idx(t, oi)] += m[idx(t, oj)];
      pivot = oi;
    }
    if (pivot != base) {
      for (size_t t = base; t < n; ++t) std::swap(m[idx(pivot, t)], m[idx(base, t)]);
      for (size_t t = base; t < n; ++t) std::swap(m[idx(t, pivot)], m[idx(t, base)]);
    }
    const i64 d = m[idx(base, base)];
    if ((d > 0) != flipped)
      ++sig.positive;
    else
      ++sig.negative;
    for (size_t t = base; t < n; ++t)
      for (size_t u = base; u < n; ++u)
        if (abs_value(m[idx(t, u)]) > kMulGate) throw NeedFallback{};
    for (size_t i = base + 1; i < n; ++i)
      for (size_t j = base + 1; j < n; ++j)
        m[idx(i, j)] = d * m[idx(i, j)] - m[idx(i, base)] * m[idx(base, j)];
    flipped ^= (d < 0);
    ++base;
  }
  return sig;
}

// Rational congruence diagonalization; handles any symmetric input.
Signature signature_congruence(QMatrix m) {
  const size_t n = m.rows();
  Signature sig;
  size_t base = 0;
  while (base < n) {
    size_t pivot = n;
    for (size_t k = base; k < n; ++k)
      if (m.at(k, k) != 0) {
        pivot = k;
        break;
      }
    if (pivot == n) {
      size_t oi = n, oj = n;
      for (size_t i = base; i < n && oi == n; ++i)
        for (size_t j = i + 1; j < n; ++j)
          if (m.at(i, j) != 0) {
            oi = i;
            oj = j;
            break;
          }
      if (oi == n) {
        sig.zero += n - base;
        return sig;
      }
      for (size_t t = base; t < n; ++t) m.at(oi, t) += m.at(oj, t);
      for (size_t t = base; t < n; ++t) m.at(t, oi) += m.at(t, oj);
      pivot = oi;
    }
    if (pivot != base) {
      for (size_t t = base; t < n; ++t) std::swap(m.at(pivot, t), m.at(base, t));
      for (size_t t = base; t < n; ++t) std::swap(m.at(t, pivot), m.at(t, base));
    }
    const Rat d = m.at(base, base);
    if (d > 0)
      ++sig.positive;
    else
      ++sig.negative;
    // Schur complement of the pivot; symmetry is preserved entrywise.
    for (size_t i = base + 1; i < n; ++i) {
      if (m.at(i, base) == 0) continue;
      const Rat f = m.at(i, base) / d;
      for (size_t j = base + 1; j < n; ++j) m.at(i, j) -= f * m.at(base, j);
    }
    ++base;
  }
  return sig;
}

// ---------------------------------------------------------------------------
// Dispatch helpers.
// ---------------------------------------------------------------------------

bool fits_i64(const Int& v) { return mpz_fits_slong_p(v.get_mpz_t()) != 0; }

std::vector<Int> to_mpz_vector(std::span<const i64> m) {
  std::vector<Int> out(m.size());
  for (size_t i = 0; i < m.size(); ++i) out[i] = static_cast<long>(m[i]);
  return out;
}

template <class Out, class In>
std::vector<Out> widen(std::span<const In> m) {
  std::vector<Out> out(m.size());
  for (size_t i = 0; i < m.size(); ++i) out[i] = static_cast<Out>(m[i]);
  return out;
}

Int det_dispatch_mpz(const std::vector<Int>& a, size_t n) {
  std::vector<Int> work = a;
  return bareiss_determinant(work, n);
}

// Determinant of an integral matrix, choosing the narrowest safe kernel.
Int integral_determinant(const std::vector<Int>& a, size_t n) {
  const int bits = minor_bits_bound(a, n, n);
  if (2 * bits + 2 <= 126) {
    bool ok = true;
    std::vector<i128> work(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
      if (!fits_i64(a[i])) {
        ok = false;
        break;
      }
      work[i] = static_cast<i128>(mpz_get_si(a[i].get_mpz_t()));
    }
    if (ok) {
      const i128 det = bareiss_determinant(work, n);
      Int result;
      const bool neg = det < 0;
      unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(det)
                                  : static_cast<unsigned __int128>(det);
      const unsigned long long hi = static_cast<unsigned long long>(mag >> 64);
      const unsigned long long lo = static_cast<unsigned long long>(mag);
      result = hi;
      result <<= 64;
      result += lo;
      if (neg) result = -result;
      return result;
    }
  }
  return det_dispatch_mpz(a, n);
}

bool integral_negative_definite(const std::vector<Int>& a, size_t n) {
  const int bits = minor_bits_bound(a, n, n);
  if (2 * bits + 2 <= 62) {
    std::vector<i64> work(a.size());
    for (size_t i = 0; i < a.size(); ++i) work[i] = mpz_get_si(a[i].get_mpz_t());
    return bareiss_negative_definite(work, n);
  }
  if (2 * bits + 2 <= 126) {
    bool ok = true;
    std::vector<i128> work(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
      if (!fits_i64(a[i])) {
        ok = false;
        break;
      }
      work[i] = static_cast<i128>(mpz_get_si(a[i].get_mpz_t()));
    }
    if (ok) return bareiss_negative_definite(work, n);
  }
  std::vector<Int> work = a;
  return bareiss_negative_definite(work, n);
}

bool integral_negative_semidefinite(const std::vector<Int>& a, size_t n) {
  const int bits = minor_bits_bound(a, n, n);
  if (2 * bits + 2 <= 62) {
    std::vector<i64> work(a.size());
    for (size_t i = 0; i < a.size(); ++i) work[i] = mpz_get_si(a[i].get_mpz_t());
    return minors_negative_semidefinite(work, n);
  }
  if (2 * bits + 2 <= 126) {
    bool ok = true;
    std::vector<i128> work(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
      if (!fits_i64(a[i])) {
        ok = false;
        break;
      }
      work[i] = static_cast<i128>(mpz_get_si(a[i].get_mpz_t()));
    }
    if (ok) return minors_negative_semidefinite(work, n);
  }
  return minors_negative_semidefinite(a, n);
}

void require_symmetric_span(std::span<const i64> m, size_t n) {
  if (m.size() != n * n)
    throw InputError("matrix span has wrong size for the declared dimension");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (m[i * n + j] != m[j * n + i])
        throw InputError("symmetric-form verdicts require a symmetric matrix");
}

void require_symmetric(const ZMatrix& m) {
  if (!m.is_square() || !m.is_symmetric())
    throw InputError("symmetric-form verdicts require a symmetric matrix");
}

void require_symmetric(const QMatrix& m) {
  if (!m.is_square() || !m.is_symmetric())
    throw InputError("symmetric-form verdicts require a symmetric matrix");
}

// Positive rescaling by the global denominator lcm; definiteness and
// signature verdicts are invariant under it.
std::vector<Int> cleared_integer_matrix(const QMatrix& m) {
  const size_t n = m.rows();
  Int lcm = 1;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Int l;
      mpz_lcm(l.get_mpz_t(), lcm.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
      lcm = l;
    }
  std::vector<Int> out(n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Rat scaled = m.at(i, j) * Rat(lcm);
      scaled.canonicalize();
      out[i * n + j] = scaled.get_num();
    }
  return out;
}

std::optional<std::vector<i64>> small_int_data(const std::vector<Int>& a) {
  std::vector<i64> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    if (!fits_i64(a[i])) return std::nullopt;
    out[i] = mpz_get_si(a[i].get_mpz_t());
  }
  return out;
}

Signature integral_signature(const std::vector<Int>& a, size_t n) {
  if (auto small = small_int_data(a)) {
    try {
      return signature_fraction_free(std::move(*small), n);
    } catch (const NeedFallback&) {
    }
  }
  QMatrix q(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) q.at(i, j) = Rat(a[i * n + j]);
  return signature_congruence(std::move(q));
}

}  // namespace

// ---------------------------------------------------------------------------
// Matrix types.
// ---------------------------------------------------------------------------

ZMatrix::ZMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

ZMatrix ZMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  ZMatrix m(rows.size(), rows.size() == 0 ? 0 : rows.begin()->size());
  size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != m.cols_) throw InputError("ragged initializer for ZMatrix");
    size_t c = 0;
    for (long v : row) m.at(r, c++) = v;
    ++r;
  }
  return m;
}

bool ZMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

QMatrix::QMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

QMatrix QMatrix::from_rows(std::initializer_list<std::initializer_list<Rat>> rows) {
  QMatrix m(rows.size(), rows.size() == 0 ? 0 : rows.begin()->size());
  size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != m.cols_) throw InputError("ragged initializer for QMatrix");
    size_t c = 0;
    for (const Rat& v : row) m.at(r, c++) = v;
    ++r;
  }
  return m;
}

bool QMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

QMatrix to_rational(const ZMatrix& m) {
  QMatrix q(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) q.at(i, j) = Rat(m.at(i, j));
  return q;
}

// ---------------------------------------------------------------------------
// Determinants and linear solving.
// ---------------------------------------------------------------------------

Int determinant(const ZMatrix& m) {
  if (!m.is_square()) throw InputError("determinant requires a square matrix");
  const size_t n = m.rows();
  std::vector<Int> a(n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a[i * n + j] = m.at(i, j);
  return integral_determinant(a, n);
}

Rat determinant(const QMatrix& m) {
  if (!m.is_square()) throw InputError("determinant requires a square matrix");
  const size_t n = m.rows();
  if (n == 0) return Rat(1);
  Int lcm = 1;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Int l;
      mpz_lcm(l.get_mpz_t(), lcm.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
      lcm = l;
    }
  std::vector<Int> a(n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Rat scaled = m.at(i, j) * Rat(lcm);
      scaled.canonicalize();
      a[i * n + j] = scaled.get_num();
    }
  Int scale = 1;
  for (size_t i = 0; i < n; ++i) scale *= lcm;
  Rat det(integral_determinant(a, n), scale);
  det.canonicalize();
  return det;
}

std::optional<std::vector<Rat>> solve_linear(const ZMatrix& m, std::span<const Rat> rhs) {
  if (!m.is_square()) throw InputError("solve_linear requires a square matrix");
  const size_t n = m.rows();
  if (rhs.size() != n) throw InputError("solve_linear: right-hand side has wrong length");
  if (n == 0) return std::vector<Rat>{};

  const Int lcm = denominator_lcm(rhs);
  std::vector<Int> b(n);
  for (size_t i = 0; i < n; ++i) {
    Rat scaled = rhs[i] * Rat(lcm);
    scaled.canonicalize();
    b[i] = scaled.get_num();
  }

  std::vector<Int> a(n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a[i * n + j] = m.at(i, j);

  const Int det = integral_determinant(a, n);
  if (det == 0) return std::nullopt;

  // Cramer columns; each determinant is exact.
  std::vector<Rat> x(n);
  std::vector<Int> work(n * n);
  const Int denom = det * lcm;
  for (size_t col = 0; col < n; ++col) {
    work = a;
    for (size_t i = 0; i < n; ++i) work[i * n + col] = b[i];
    Rat xi(integral_determinant(work, n), denom);
    xi.canonicalize();
    x[col] = xi;
  }
  return x;
}

// ---------------------------------------------------------------------------
// Symmetric-form verdicts.
// ---------------------------------------------------------------------------

bool is_negative_definite(std::span<const i64> m, size_t n) {
  require_symmetric_span(m, n);
  const std::vector<i64> data(m.begin(), m.end());
  const int bits = minor_bits_bound(data, n, n);
  if (2 * bits + 2 <= 62) {
    std::vector<i64> work = data;
    return bareiss_negative_definite(work, n);
  }
  if (2 * bits + 2 <= 126) {
    std::vector<i128> work = widen<i128>(m);
    return bareiss_negative_definite(work, n);
  }
  std::vector<Int> work = to_mpz_vector(m);
  return bareiss_negative_definite(work, n);
}

bool is_negative_definite(const ZMatrix& m) {
  require_symmetric(m);
  const size_t n = m.rows();
  std::vector<Int> a(n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a[i * n + j] = m.at(i, j);
  return integral_negative_definite(a, n);
}

bool is_negative_definite(const QMatrix& m) {
  require_symmetric(m);
  return integral_negative_definite(cleared_integer_matrix(m), m.rows());
}

bool is_negative_semidefinite(std::span<const i64> m, size_t n, size_t size_cap) {
  require_symmetric_span(m, n);
  if (n > size_cap)
    throw ResourceError("semidefiniteness test: matrix size exceeds the configured cap");
  const std::vector<i64> data(m.begin(), m.end());
  const int bits = minor_bits_bound(data, n, n);
  if (2 * bits + 2 <= 62) return minors_negative_semidefinite(data, n);
  if (2 * bits + 2 <= 126) {
    const std::vector<i128> wide = widen<i128>(m);
    return minors_negative_semidefinite(wide, n);
  }
  return minors_negative_semidefinite(to_mpz_vector(m), n);
}

bool is_negative_semidefinite(const ZMatrix& m, size_t size_cap) {
  require_symmetric(m);
  const size_t n = m.rows();
  if (n > size_cap)
    throw ResourceError("semidefiniteness test: matrix size exceeds the configured cap");
  std::vector<Int> a(n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a[i * n + j] = m.at(i, j);
  return integral_negative_semidefinite(a, n);
}

bool is_negative_semidefinite(const QMatrix& m, size_t size_cap) {
  require_symmetric(m);
  if (m.rows() > size_cap)
    throw ResourceError("semidefiniteness test: matrix size exceeds the configured cap");
  return integral_negative_semidefinite(cleared_integer_matrix(m), m.rows());
}

Signature signature(std::span<const i64> m, size_t n) {
  require_symmetric_span(m, n);
  try {
    return signature_fraction_free(std::vector<i64>(m.begin(), m.end()), n);
  } catch (const NeedFallback&) {
  }
  QMatrix q(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) q.at(i, j) = Rat(static_cast<long>(m[i * n + j]));
  return signature_congruence(std::move(q));
}

Signature signature(const ZMatrix& m) {
  require_symmetric(m);
  const size_t n = m.rows();
  std::vector<Int> a(n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a[i * n + j] = m.at(i, j);
  return integral_signature(a, n);
}

Signature signature(const QMatrix& m) {
  require_symmetric(m);
  const size_t n = m.rows();
  bool integral = true;
  for (size_t i = 0; i < n && integral; ++i)
    for (size_t j = 0; j < n; ++j)
      if (!is_integral(m.at(i, j))) {
        integral = false;
        break;
      }
  if (integral) {
    std::vector<Int> a(n * n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) a[i * n + j] = m.at(i, j).get_num();
    return integral_signature(a, n);
  }
  return signature_congruence(m);
}

}  // namespace zariski
