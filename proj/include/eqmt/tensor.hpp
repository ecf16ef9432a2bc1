#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace eqmt {

// Row-major dense matrix of doubles; the workhorse for model activations.
struct Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<double> v;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), v(r * c, 0.0) {}

  double* row(std::size_t r) { return v.data() + r * cols; }
  const double* row(std::size_t r) const { return v.data() + r * cols; }
  double& at(std::size_t r, std::size_t c) { return v[r * cols + c]; }
  double at(std::size_t r, std::size_t c) const { return v[r * cols + c]; }
  void zero() { std::fill(v.begin(), v.end(), 0.0); }
};

struct BoolMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::uint8_t> v;

  BoolMatrix() = default;
  BoolMatrix(std::size_t r, std::size_t c, bool fill = true)
      : rows(r), cols(c), v(r * c, fill ? 1 : 0) {}

  bool at(std::size_t r, std::size_t c) const { return v[r * cols + c] != 0; }
  void set(std::size_t r, std::size_t c, bool b) { v[r * cols + c] = b ? 1 : 0; }
};

// C (n x m) = A (n x k) * B (k x m); accumulates when acc.
void gemm(const double* a, const double* b, double* c, std::size_t n, std::size_t k, std::size_t m,
          bool acc);
// C (n x m) = A (n x k) * B^T, with B stored (m x k).
void gemm_nt(const double* a, const double* b, double* c, std::size_t n, std::size_t k,
             std::size_t m, bool acc);
// C (k x m) = A^T * B, with A stored (n x k) and B (n x m).
void gemm_tn(const double* a, const double* b, double* c, std::size_t n, std::size_t k,
             std::size_t m, bool acc);

}  // namespace eqmt
