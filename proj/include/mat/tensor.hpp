#pragma once

#include <string>
#include <vector>

namespace mat {

// Dense row-major tensor of 64-bit floats. Shapes are lists of positive
// dimension sizes; a rank-0 tensor holds a single scalar. Construction
// rejects NaN/Inf entries.
struct Tensor {
  std::vector<int> shape;
  std::vector<double> data;

  Tensor() = default;
  explicit Tensor(std::vector<int> dims);
  Tensor(std::vector<int> dims, std::vector<double> values);

  static Tensor scalar(double v);
  static Tensor zeros(std::vector<int> dims) { return Tensor(std::move(dims)); }
  static Tensor full(std::vector<int> dims, double v);

  int rank() const { return static_cast<int>(shape.size()); }
  int numel() const { return static_cast<int>(data.size()); }
  int dim(int axis) const { return shape[static_cast<size_t>(axis)]; }

  bool same_shape(const Tensor& other) const { return shape == other.shape; }

  double& at(int i) { return data[static_cast<size_t>(i)]; }
  double at(int i) const { return data[static_cast<size_t>(i)]; }
  double& at(int i, int j) { return data[static_cast<size_t>(i * shape[1] + j)]; }
  double at(int i, int j) const { return data[static_cast<size_t>(i * shape[1] + j)]; }

  double item() const;  // value of a scalar (numel == 1)

  double frobenius_norm() const;
  double sum() const;
  double max() const;

  Tensor& operator+=(const Tensor& other);
  Tensor& operator*=(double c);
};

// "[2,3]" style shape rendering for error messages.
std::string shape_str(const std::vector<int>& shape);

// Throws std::invalid_argument naming `context` if any entry is NaN/Inf.
void check_finite(const Tensor& t, const std::string& context);

int numel_of(const std::vector<int>& shape);

}  // namespace mat
