#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace rydcav {

// Dense row-major square matrix, small sizes only.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  std::size_t size() const { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  std::span<const double> data() const { return data_; }

  // Sets (i,j) and (j,i) to the same value.
  void set_symmetric(std::size_t i, std::size_t j, double v) {
    (*this)(i, j) = v;
    (*this)(j, i) = v;
  }

  bool is_symmetric() const;
  double frobenius_norm() const;
  Matrix transposed() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  Matrix vectors;              // column k belongs to values[k]
  int sweeps = 0;
};

// Cyclic Jacobi rotations. Stops once the off-diagonal Frobenius norm is
// <= 1e-14 * ||H||. Throws ContractError for non-symmetric input or n > 8.
EigenDecomposition eigen_symmetric(const Matrix& h);

}  // namespace rydcav
