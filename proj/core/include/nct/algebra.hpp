/**
 * @file algebra.hpp
 * @brief Exact symbolic arithmetic in the twisted group algebra S(Z^n, omega_theta).
 *
 * Elements are finite maps from lattice points l in Z^n to complex amplitudes.
 * The basis element delta_l denotes the normal-ordered monomial
 * U_1^{l1} ... U_n^{ln}; products are twisted convolutions
 * (a.b)(l) = sum_{x+y=l} a(x) b(y) omega(x,y).
 */
#pragma once

#include <map>
#include <stdexcept>

#include "nct/cocycle.hpp"

namespace nct {

class AlgebraElement {
 public:
  using Coeffs = std::map<IVec, cplx>;

  AlgebraElement() = default;
  AlgebraElement(SkewMatrix theta, Convention conv)
      : theta_(std::move(theta)), conv_(conv) {}

  const SkewMatrix& theta() const { return theta_; }
  Convention convention() const { return conv_; }
  const Coeffs& coeffs() const { return c_; }
  int n() const { return theta_.n(); }

  cplx at(const IVec& l) const {
    auto it = c_.find(l);
    return it == c_.end() ? cplx(0.0) : it->second;
  }

  AlgebraElement& set(const IVec& l, cplx v) {
    if (static_cast<int>(l.size()) != theta_.n())
      throw std::invalid_argument("AlgebraElement::set: dimension mismatch");
    if (std::abs(v) == 0.0)
      c_.erase(l);
    else
      c_[l] = v;
    return *this;
  }

  AlgebraElement& accumulate(const IVec& l, cplx v) { return set(l, at(l) + v); }

  /// Drop amplitudes below `tol` (default: exact zeros only are pruned by set()).
  AlgebraElement pruned(double tol = 1e-15) const {
    AlgebraElement r(theta_, conv_);
    for (const auto& [l, v] : c_)
      if (std::abs(v) > tol) r.c_[l] = v;
    return r;
  }

  bool compatible(const AlgebraElement& o) const {
    return theta_ == o.theta_ && conv_ == o.conv_;
  }

  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    a.require_compatible(b);
    AlgebraElement r = a;
    for (const auto& [l, v] : b.c_) r.accumulate(l, v);
    return r;
  }
  friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
    a.require_compatible(b);
    AlgebraElement r = a;
    for (const auto& [l, v] : b.c_) r.accumulate(l, -v);
    return r;
  }
  friend AlgebraElement operator*(cplx s, const AlgebraElement& a) {
    AlgebraElement r(a.theta_, a.conv_);
    if (std::abs(s) == 0.0) return r;
    for (const auto& [l, v] : a.c_) r.c_[l] = s * v;
    return r;
  }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    return multiply(a, b);
  }

  /// Twisted convolution product.
  static AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
    a.require_compatible(b);
    AlgebraElement r(a.theta_, a.conv_);
    for (const auto& [x, va] : a.c_)
      for (const auto& [y, vb] : b.c_) {
        const cplx w = cocycle_value(a.theta_, a.conv_, x, y);
        r.accumulate(add(x, y), va * vb * w);
      }
    return r;
  }

  /// a*(l) = conj(a(-l)) * conj(omega(l,-l)).
  AlgebraElement star() const {
    AlgebraElement r(theta_, conv_);
    for (const auto& [l, v] : c_) {
      const cplx w = cocycle_value(theta_, conv_, l, neg(l));
      r.accumulate(neg(l), std::conj(v) * std::conj(w));
    }
    return r;
  }

  /// Canonical trace tau(sum a_l U_l) = a_0.
  cplx trace() const { return at(IVec(static_cast<size_t>(theta_.n()), 0)); }

  double norm_l1() const {
    double s = 0.0;
    for (const auto& [l, v] : c_) s += std::abs(v);
    return s;
  }
  double norm_sup() const {
    double s = 0.0;
    for (const auto& [l, v] : c_) s = std::max(s, std::abs(v));
    return s;
  }

  /// Unit U_l (normal-ordered basis element).
  static AlgebraElement unit(const SkewMatrix& theta, Convention conv, const IVec& l) {
    AlgebraElement r(theta, conv);
    r.set(l, 1.0);
    return r;
  }
  static AlgebraElement one(const SkewMatrix& theta, Convention conv) {
    return unit(theta, conv, IVec(static_cast<size_t>(theta.n()), 0));
  }

 private:
  void require_compatible(const AlgebraElement& o) const {
    if (!compatible(o)) throw std::invalid_argument("AlgebraElement: theta/convention mismatch");
  }

  SkewMatrix theta_;
  Convention conv_ = Convention::Presentation;
  Coeffs c_;
};

/// sup-norm distance between coefficient lists.
inline double distance_sup(const AlgebraElement& a, const AlgebraElement& b) {
  return (a - b).norm_sup();
}

}  // namespace nct
