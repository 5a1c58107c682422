#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace oscsteer {

// Truncated power series in four variables (u, s, v, w). Entry [i,j,k,l] is
// the coefficient of u^i s^j v^k w^l, kept for i <= du, j <= ds, k <= dv,
// l <= dw. Products drop every term above the per-variable orders, so the
// retained coefficients are exact Taylor coefficients of the result.
class Jet4 {
 public:
  using Orders = std::array<int, 4>;

  explicit Jet4(Orders orders);

  static Jet4 constant(Orders orders, double value);
  // The coordinate function kappa_var, var in {0,1,2,3}.
  static Jet4 variable(Orders orders, int var);

  const Orders& orders() const { return orders_; }
  std::size_t size() const { return coeffs_.size(); }

  double coefficient(int i, int j, int k, int l) const;
  void set_coefficient(int i, int j, int k, int l, double value);
  double constant_term() const { return coeffs_[0]; }

  Jet4& operator+=(const Jet4& other);
  Jet4& operator-=(const Jet4& other);
  Jet4& operator*=(double scale);
  Jet4& operator+=(double value);

  friend Jet4 operator+(Jet4 a, const Jet4& b) { return a += b; }
  friend Jet4 operator-(Jet4 a, const Jet4& b) { return a -= b; }
  friend Jet4 operator*(Jet4 a, double c) { return a *= c; }
  friend Jet4 operator*(double c, Jet4 a) { return a *= c; }
  friend Jet4 operator+(Jet4 a, double c) { return a += c; }
  friend Jet4 operator+(double c, Jet4 a) { return a += c; }
  friend Jet4 operator-(double c, const Jet4& a) { return (a * -1.0) += c; }
  friend Jet4 operator*(const Jet4& a, const Jet4& b);

  // Throws ParameterError on a zero constant term.
  Jet4 reciprocal() const;
  // Requires a positive constant term.
  Jet4 sqrt() const;

  double max_abs_difference(const Jet4& other) const;

 private:
  std::size_t index(int i, int j, int k, int l) const;
  void require_same_orders(const Jet4& other) const;

  Orders orders_;
  std::array<std::size_t, 4> strides_;
  std::vector<double> coeffs_;
};

}  // namespace oscsteer
