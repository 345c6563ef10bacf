#include "mat/tensor.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mat {

int numel_of(const std::vector<int>& shape) {
  int n = 1;
  for (int d : shape) {
    if (d <= 0) throw std::invalid_argument("tensor dimension must be positive, got " + shape_str(shape));
    n *= d;
  }
  return n;
}

std::string shape_str(const std::vector<int>& shape) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < shape.size(); ++i) {
    if (i) os << ',';
    os << shape[i];
  }
  os << ']';
  return os.str();
}

void check_finite(const Tensor& t, const std::string& context) {
  for (double v : t.data) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument(context + ": non-finite tensor entry");
    }
  }
}

Tensor::Tensor(std::vector<int> dims) : shape(std::move(dims)) {
  data.assign(static_cast<size_t>(numel_of(shape)), 0.0);
}

Tensor::Tensor(std::vector<int> dims, std::vector<double> values) : shape(std::move(dims)), data(std::move(values)) {
  if (static_cast<int>(data.size()) != numel_of(shape)) {
    throw std::invalid_argument("tensor data length " + std::to_string(data.size()) + " does not match shape " +
                                shape_str(shape));
  }
  check_finite(*this, "tensor construction");
}

Tensor Tensor::scalar(double v) { return Tensor({}, {v}); }

Tensor Tensor::full(std::vector<int> dims, double v) {
  Tensor t(std::move(dims));
  for (double& x : t.data) x = v;
  return t;
}

double Tensor::item() const {
  if (numel() != 1) throw std::invalid_argument("item() on tensor of shape " + shape_str(shape));
  return data[0];
}

double Tensor::frobenius_norm() const {
  double s = 0.0;
  for (double v : data) s += v * v;
  return std::sqrt(s);
}

double Tensor::sum() const {
  double s = 0.0;
  for (double v : data) s += v;
  return s;
}

double Tensor::max() const {
  double m = -HUGE_VAL;
  for (double v : data) m = v > m ? v : m;
  return m;
}

Tensor& Tensor::operator+=(const Tensor& other) {
  if (!same_shape(other)) {
    throw std::invalid_argument("tensor += shape mismatch: " + shape_str(shape) + " vs " + shape_str(other.shape));
  }
  for (size_t i = 0; i < data.size(); ++i) data[i] += other.data[i];
  return *this;
}

Tensor& Tensor::operator*=(double c) {
  for (double& v : data) v *= c;
  return *this;
}

}  // namespace mat
