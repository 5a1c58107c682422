#include "oscsteer/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "oscsteer/errors.hpp"

namespace oscsteer {

Jet4::Jet4(Orders orders) : orders_(orders) {
  for (int d : orders_) {
    if (d < 0) throw ParameterError("jet orders must be non-negative");
  }
  strides_[3] = 1;
  for (int v = 2; v >= 0; --v) {
    strides_[v] = strides_[v + 1] * static_cast<std::size_t>(orders_[v + 1] + 1);
  }
  coeffs_.assign(strides_[0] * static_cast<std::size_t>(orders_[0] + 1), 0.0);
}

Jet4 Jet4::constant(Orders orders, double value) {
  Jet4 j(orders);
  j.coeffs_[0] = value;
  return j;
}

Jet4 Jet4::variable(Orders orders, int var) {
  if (var < 0 || var > 3) throw ParameterError("jet variable index must be 0..3");
  Jet4 j(orders);
  if (orders[var] >= 1) j.coeffs_[j.strides_[var]] = 1.0;
  return j;
}

std::size_t Jet4::index(int i, int j, int k, int l) const {
  const std::array<int, 4> idx{i, j, k, l};
  for (int v = 0; v < 4; ++v) {
    if (idx[v] < 0 || idx[v] > orders_[v]) {
      throw ParameterError("jet coefficient index out of range");
    }
  }
  return i * strides_[0] + j * strides_[1] + k * strides_[2] + l * strides_[3];
}

double Jet4::coefficient(int i, int j, int k, int l) const { return coeffs_[index(i, j, k, l)]; }

void Jet4::set_coefficient(int i, int j, int k, int l, double value) {
  coeffs_[index(i, j, k, l)] = value;
}

void Jet4::require_same_orders(const Jet4& other) const {
  if (orders_ != other.orders_) throw ParameterError("jet order mismatch");
}

Jet4& Jet4::operator+=(const Jet4& other) {
  require_same_orders(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Jet4& Jet4::operator-=(const Jet4& other) {
  require_same_orders(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

Jet4& Jet4::operator*=(double scale) {
  for (double& c : coeffs_) c *= scale;
  return *this;
}

Jet4& Jet4::operator+=(double value) {
  coeffs_[0] += value;
  return *this;
}

Jet4 operator*(const Jet4& a, const Jet4& b) {
  a.require_same_orders(b);
  const auto [d0, d1, d2, d3] = a.orders_;
  const auto& st = a.strides_;
  Jet4 out(a.orders_);
  for (int i = 0; i <= d0; ++i)
    for (int j = 0; j <= d1; ++j)
      for (int k = 0; k <= d2; ++k)
        for (int l = 0; l <= d3; ++l) {
          const double ca = a.coeffs_[i * st[0] + j * st[1] + k * st[2] + l * st[3]];
          if (ca == 0.0) continue;
          for (int i2 = 0; i2 <= d0 - i; ++i2)
            for (int j2 = 0; j2 <= d1 - j; ++j2)
              for (int k2 = 0; k2 <= d2 - k; ++k2) {
                const std::size_t base_b = i2 * st[0] + j2 * st[1] + k2 * st[2];
                const std::size_t base_o = (i + i2) * st[0] + (j + j2) * st[1] + (k + k2) * st[2];
                for (int l2 = 0; l2 <= d3 - l; ++l2) {
                  out.coeffs_[base_o + l + l2] += ca * b.coeffs_[base_b + l2];
                }
              }
        }
  return out;
}

namespace {

// Calls f(beta) for every multi-index 0 <= beta <= alpha (componentwise)
// other than 0 and alpha itself.
template <typename F>
void for_each_proper_split(const std::array<int, 4>& alpha, F&& f) {
  for (int i = 0; i <= alpha[0]; ++i)
    for (int j = 0; j <= alpha[1]; ++j)
      for (int k = 0; k <= alpha[2]; ++k)
        for (int l = 0; l <= alpha[3]; ++l) {
          const bool zero = (i | j | k | l) == 0;
          const bool full = i == alpha[0] && j == alpha[1] && k == alpha[2] && l == alpha[3];
          if (zero || full) continue;
          f(std::array<int, 4>{i, j, k, l});
        }
}

}  // namespace

// Both recursions visit multi-indices in lexicographic order, so every
// alpha - beta with 0 < beta <= alpha is already final when alpha is reached.
Jet4 Jet4::reciprocal() const {
  const double c0 = coeffs_[0];
  if (c0 == 0.0) throw ParameterError("reciprocal of a jet with zero constant term");
  Jet4 out(orders_);
  const auto& st = strides_;
  auto flat = [&st](const std::array<int, 4>& a) {
    return a[0] * st[0] + a[1] * st[1] + a[2] * st[2] + a[3] * st[3];
  };
  for (int i = 0; i <= orders_[0]; ++i)
    for (int j = 0; j <= orders_[1]; ++j)
      for (int k = 0; k <= orders_[2]; ++k)
        for (int l = 0; l <= orders_[3]; ++l) {
          const std::array<int, 4> alpha{i, j, k, l};
          const std::size_t ia = flat(alpha);
          if (ia == 0) {
            out.coeffs_[0] = 1.0 / c0;
            continue;
          }
          // (a*b)_alpha = 0: a_0 b_alpha + sum_{0<beta<=alpha} a_beta b_{alpha-beta} = 0
          double acc = coeffs_[ia] * out.coeffs_[0];
          for_each_proper_split(alpha, [&](const std::array<int, 4>& beta) {
            const std::size_t ib = flat(beta);
            acc += coeffs_[ib] * out.coeffs_[ia - ib];
          });
          out.coeffs_[ia] = -acc / c0;
        }
  return out;
}

Jet4 Jet4::sqrt() const {
  const double c0 = coeffs_[0];
  if (!(c0 > 0.0)) throw ParameterError("square root of a jet needs a positive constant term");
  Jet4 out(orders_);
  const auto& st = strides_;
  auto flat = [&st](const std::array<int, 4>& a) {
    return a[0] * st[0] + a[1] * st[1] + a[2] * st[2] + a[3] * st[3];
  };
  const double root = std::sqrt(c0);
  for (int i = 0; i <= orders_[0]; ++i)
    for (int j = 0; j <= orders_[1]; ++j)
      for (int k = 0; k <= orders_[2]; ++k)
        for (int l = 0; l <= orders_[3]; ++l) {
          const std::array<int, 4> alpha{i, j, k, l};
          const std::size_t ia = flat(alpha);
          if (ia == 0) {
            out.coeffs_[0] = root;
            continue;
          }
          // (b*b)_alpha = a_alpha, b_alpha appears twice (beta = 0 and beta = alpha).
          double acc = coeffs_[ia];
          for_each_proper_split(alpha, [&](const std::array<int, 4>& beta) {
            const std::size_t ib = flat(beta);
            acc -= out.coeffs_[ib] * out.coeffs_[ia - ib];
          });
          out.coeffs_[ia] = acc / (2.0 * root);
        }
  return out;
}

double Jet4::max_abs_difference(const Jet4& other) const {
  require_same_orders(other);
  double d = 0.0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    d = std::max(d, std::abs(coeffs_[i] - other.coeffs_[i]));
  }
  return d;
}

}  // namespace oscsteer
