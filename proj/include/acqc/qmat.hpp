// Copyright 2026 The acqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

/**
 * Fixed-size dense complex linear algebra for the 2x2 and 4x4 objects that
 * appear in two-qubit gate analysis. Storage is row-major. Nothing here
 * allocates.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <numbers>
#include <random>
#include <string>
#include <utility>

#include "acqc/error.hpp"

namespace acqc {

using Complex = std::complex<double>;
using namespace std::complex_literals;

inline constexpr double kPi = std::numbers::pi;

/** Unitarity tolerance on max-abs entries of U^dagger U - I. */
inline constexpr double kUnitaryTol = 1e-10;
/** Default tolerance for local-equivalence and class decisions. */
inline constexpr double kEquivalenceTol = 1e-8;

template <std::size_t N>
class Vector {
 public:
  static constexpr std::size_t kDim = N;

  Vector() { data_.fill(Complex{0.0, 0.0}); }
  Vector(std::initializer_list<Complex> values) {
    if (values.size() != N) throw InvalidInput("vector length mismatch");
    std::copy(values.begin(), values.end(), data_.begin());
  }

  static Vector basis(std::size_t i) {
    Vector v;
    v[i] = 1.0;
    return v;
  }

  Complex& operator[](std::size_t i) { return data_[i]; }
  const Complex& operator[](std::size_t i) const { return data_[i]; }

  auto begin() { return data_.begin(); }
  auto end() { return data_.end(); }
  auto begin() const { return data_.begin(); }
  auto end() const { return data_.end(); }

  double norm() const {
    double s = 0.0;
    for (const auto& x : data_) s += std::norm(x);
    return std::sqrt(s);
  }

  Vector normalized() const {
    const double n = norm();
    if (n == 0.0) throw InvalidInput("cannot normalize the zero vector");
    return *this * Complex{1.0 / n, 0.0};
  }

  Vector conj() const {
    Vector r;
    for (std::size_t i = 0; i < N; ++i) r[i] = std::conj(data_[i]);
    return r;
  }

  friend Vector operator+(const Vector& a, const Vector& b) {
    Vector r;
    for (std::size_t i = 0; i < N; ++i) r[i] = a[i] + b[i];
    return r;
  }
  friend Vector operator-(const Vector& a, const Vector& b) {
    Vector r;
    for (std::size_t i = 0; i < N; ++i) r[i] = a[i] - b[i];
    return r;
  }
  friend Vector operator*(const Vector& a, Complex z) {
    Vector r;
    for (std::size_t i = 0; i < N; ++i) r[i] = a[i] * z;
    return r;
  }
  friend Vector operator*(Complex z, const Vector& a) { return a * z; }

 private:
  std::array<Complex, N> data_;
};

using State2 = Vector<2>;
using State4 = Vector<4>;

/** <a|b>, antilinear in the first argument. */
template <std::size_t N>
Complex inner(const Vector<N>& a, const Vector<N>& b) {
  Complex s{0.0, 0.0};
  for (std::size_t i = 0; i < N; ++i) s += std::conj(a[i]) * b[i];
  return s;
}

template <std::size_t N>
double max_abs_diff(const Vector<N>& a, const Vector<N>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < N; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

template <std::size_t N>
class Matrix {
 public:
  static constexpr std::size_t kDim = N;

  Matrix() { data_.fill(Complex{0.0, 0.0}); }
  Matrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    if (rows.size() != N) throw InvalidInput("matrix row count mismatch");
    std::size_t r = 0;
    for (const auto& row : rows) {
      if (row.size() != N) throw InvalidInput("matrix column count mismatch");
      std::size_t c = 0;
      for (const auto& x : row) data_[r * N + c++] = x;
      ++r;
    }
  }

  static Matrix identity() {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  static Matrix diagonal(const std::array<Complex, N>& d) {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
    return m;
  }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * N + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * N + c];
  }

  Vector<N> column(std::size_t c) const {
    Vector<N> v;
    for (std::size_t r = 0; r < N; ++r) v[r] = (*this)(r, c);
    return v;
  }

  void set_column(std::size_t c, const Vector<N>& v) {
    for (std::size_t r = 0; r < N; ++r) (*this)(r, c) = v[r];
  }

  Matrix adjoint() const {
    Matrix m;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) m(c, r) = std::conj((*this)(r, c));
    return m;
  }

  Matrix transpose() const {
    Matrix m;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) m(c, r) = (*this)(r, c);
    return m;
  }

  Matrix conj() const {
    Matrix m;
    for (std::size_t i = 0; i < N * N; ++i) m.data_[i] = std::conj(data_[i]);
    return m;
  }

  Complex trace() const {
    Complex t{0.0, 0.0};
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  bool all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](const Complex& z) {
      return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix m;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t k = 0; k < N; ++k) {
        const Complex ark = a(r, k);
        if (ark == Complex{0.0, 0.0}) continue;
        for (std::size_t c = 0; c < N; ++c) m(r, c) += ark * b(k, c);
      }
    return m;
  }
  friend Vector<N> operator*(const Matrix& a, const Vector<N>& v) {
    Vector<N> r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) r[i] += a(i, k) * v[k];
    return r;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix m;
    for (std::size_t i = 0; i < N * N; ++i) m.data_[i] = a.data_[i] + b.data_[i];
    return m;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix m;
    for (std::size_t i = 0; i < N * N; ++i) m.data_[i] = a.data_[i] - b.data_[i];
    return m;
  }
  friend Matrix operator*(const Matrix& a, Complex z) {
    Matrix m;
    for (std::size_t i = 0; i < N * N; ++i) m.data_[i] = a.data_[i] * z;
    return m;
  }
  friend Matrix operator*(Complex z, const Matrix& a) { return a * z; }

 private:
  std::array<Complex, N * N> data_;
};

using Mat2 = Matrix<2>;
using Mat4 = Matrix<4>;
// Aliases that document intent at API boundaries; unitarity is checked by
// require_unitary where an operation's contract demands it.
using Unitary2 = Mat2;
using Unitary4 = Mat4;
using Hermitian4 = Mat4;

template <std::size_t N>
double max_abs(const Matrix<N>& m) {
  double r = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r = std::max(r, std::abs(m(i, j)));
  return r;
}

template <std::size_t N>
double max_abs_diff(const Matrix<N>& a, const Matrix<N>& b) {
  return max_abs(a - b);
}

template <std::size_t N>
double unitarity_error(const Matrix<N>& u) {
  return max_abs_diff(u.adjoint() * u, Matrix<N>::identity());
}

template <std::size_t N>
bool is_unitary(const Matrix<N>& u, double tol = kUnitaryTol) {
  return u.all_finite() && unitarity_error(u) < tol;
}

template <std::size_t N>
bool is_hermitian(const Matrix<N>& h, double tol = kUnitaryTol) {
  return h.all_finite() && max_abs_diff(h, h.adjoint()) < tol;
}

template <std::size_t N>
void require_unitary(const Matrix<N>& u, const char* what) {
  if (!u.all_finite())
    throw InvalidInput(std::string(what) + ": non-finite entry");
  if (unitarity_error(u) >= kUnitaryTol)
    throw InvalidInput(std::string(what) + ": matrix is not unitary");
}

template <std::size_t N>
void require_normalized(const Vector<N>& v, const char* what,
                        double tol = 1e-10) {
  if (std::abs(v.norm() - 1.0) >= tol)
    throw InvalidInput(std::string(what) + ": state is not normalized");
}

inline Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 m;
  for (std::size_t i1 = 0; i1 < 2; ++i1)
    for (std::size_t j1 = 0; j1 < 2; ++j1)
      for (std::size_t i2 = 0; i2 < 2; ++i2)
        for (std::size_t j2 = 0; j2 < 2; ++j2)
          m(2 * i1 + i2, 2 * j1 + j2) = a(i1, j1) * b(i2, j2);
  return m;
}

/** Kronecker product of two unitaries; rejects non-unitary input. */
inline Unitary4 kron_unitary(const Unitary2& a, const Unitary2& b) {
  require_unitary(a, "kron");
  require_unitary(b, "kron");
  return kron(a, b);
}

inline State4 kron(const State2& a, const State2& b) {
  State4 v;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) v[2 * i + j] = a[i] * b[j];
  return v;
}

inline Complex det(const Mat2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

/** Exact cofactor expansion along the first row. */
inline Complex det(const Mat4& m) {
  auto minor3 = [&](std::size_t skip) {
    std::array<std::size_t, 3> cols{};
    std::size_t k = 0;
    for (std::size_t c = 0; c < 4; ++c)
      if (c != skip) cols[k++] = c;
    auto e = [&](std::size_t r, std::size_t c) { return m(r + 1, cols[c]); };
    return e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) -
           e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
           e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
  };
  Complex d{0.0, 0.0};
  for (std::size_t c = 0; c < 4; ++c) {
    const double sign = (c % 2 == 0) ? 1.0 : -1.0;
    d += sign * m(0, c) * minor3(c);
  }
  return d;
}

template <std::size_t N>
struct HermitianEigen {
  std::array<double, N> values;  // ascending
  Matrix<N> vectors;             // eigenvectors as columns
};

/**
 * Cyclic Jacobi diagonalization of a Hermitian matrix. Each rotation first
 * removes the phase of the pivot so the 2x2 subproblem is real symmetric.
 * Real symmetric input stays real throughout.
 */
template <std::size_t N>
HermitianEigen<N> eigh(Matrix<N> a, double tol = 1e-13) {
  Matrix<N> v = Matrix<N>::identity();
  const double scale = std::max(1.0, max_abs(a));
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < N; ++p)
      for (std::size_t q = 0; q < N; ++q)
        if (p != q) off += std::norm(a(p, q));
    if (std::sqrt(off) < tol * scale) break;
    for (std::size_t p = 0; p + 1 < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        const Complex apq = a(p, q);
        const double r = std::abs(apq);
        if (r < 1e-300) continue;
        const Complex phase = apq / r;
        const double theta =
            0.5 * std::atan2(2.0 * r, a(q, q).real() - a(p, p).real());
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        Matrix<N> g = Matrix<N>::identity();
        g(p, p) = c;
        g(p, q) = s;
        g(q, p) = -s * std::conj(phase);
        g(q, q) = c * std::conj(phase);
        a = g.adjoint() * a * g;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        v = v * g;
      }
    }
  }
  std::array<std::size_t, N> order{};
  for (std::size_t i = 0; i < N; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });
  HermitianEigen<N> out;
  for (std::size_t k = 0; k < N; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    out.vectors.set_column(k, v.column(order[k]));
  }
  return out;
}

/** exp(-i h t) for Hermitian h, via eigendecomposition. */
template <std::size_t N>
Matrix<N> expm_hermitian(const Matrix<N>& h, double t) {
  if (!is_hermitian(h)) throw InvalidInput("expm_hermitian: not Hermitian");
  if (!std::isfinite(t)) throw InvalidInput("expm_hermitian: non-finite time");
  const auto eig = eigh(h);
  std::array<Complex, N> d{};
  for (std::size_t k = 0; k < N; ++k) d[k] = std::exp(-1i * eig.values[k] * t);
  return eig.vectors * Matrix<N>::diagonal(d) * eig.vectors.adjoint();
}

struct PhaseMatch {
  bool equal = false;
  double phase = 0.0;  // a ~= exp(i phase) b
};

/**
 * Tests a = exp(i phi) b. The phase reference is the largest-magnitude entry
 * of b, so structurally zero entries are never divided by.
 */
template <std::size_t N>
PhaseMatch equal_up_to_global_phase(const Matrix<N>& a, const Matrix<N>& b,
                                    double tol = kEquivalenceTol) {
  std::size_t br = 0, bc = 0;
  double best = -1.0;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c)
      if (std::abs(b(r, c)) > best) {
        best = std::abs(b(r, c));
        br = r;
        bc = c;
      }
  if (best <= 0.0) return {max_abs(a) < tol, 0.0};
  const Complex ratio = a(br, bc) / b(br, bc);
  if (std::abs(ratio) == 0.0) return {false, 0.0};
  const double phase = std::arg(ratio);
  const Complex rot = std::polar(1.0, phase);
  return {max_abs_diff(a, b * rot) < tol, phase};
}

/** |<a|b>| >= 1 - tol for unit vectors. */
template <std::size_t N>
bool state_equal_up_to_phase(const Vector<N>& a, const Vector<N>& b,
                             double tol = kEquivalenceTol) {
  return std::abs(inner(a, b)) >= 1.0 - tol;
}

/** Rescales so the largest-magnitude component is real and positive. */
template <std::size_t N>
Vector<N> canonical_phase(const Vector<N>& v) {
  std::size_t k = 0;
  for (std::size_t i = 1; i < N; ++i)
    if (std::abs(v[i]) > std::abs(v[k]) + 1e-12) k = i;
  if (std::abs(v[k]) == 0.0) return v;
  return v * (std::abs(v[k]) / v[k]);
}

template <std::size_t N>
std::pair<Matrix<N>, Complex> canonical_phase(const Matrix<N>& m) {
  std::size_t kr = 0, kc = 0;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c)
      if (std::abs(m(r, c)) > std::abs(m(kr, kc)) + 1e-12) {
        kr = r;
        kc = c;
      }
  if (std::abs(m(kr, kc)) == 0.0) return {m, Complex{1.0, 0.0}};
  const Complex rot = std::abs(m(kr, kc)) / m(kr, kc);
  return {m * rot, rot};
}

/** A unit vector orthogonal to a unit 2-vector. */
inline State2 orthogonal_complement(const State2& v) {
  return State2{-std::conj(v[1]), std::conj(v[0])};
}

/** Haar-distributed unitary from Gram-Schmidt on a complex Ginibre matrix. */
template <std::size_t N, class Rng>
Matrix<N> random_unitary(Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix<N> g;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) g(r, c) = Complex{gauss(rng), gauss(rng)};
  for (std::size_t c = 0; c < N; ++c) {
    Vector<N> col = g.column(c);
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t k = 0; k < c; ++k) {
        const Vector<N> e = g.column(k);
        col = col - e * inner(e, col);
      }
    g.set_column(c, col.normalized());
  }
  return g;
}

template <std::size_t N, class Rng>
Vector<N> random_state(Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector<N> v;
  for (std::size_t i = 0; i < N; ++i) v[i] = Complex{gauss(rng), gauss(rng)};
  return v.normalized();
}

}  // namespace acqc
