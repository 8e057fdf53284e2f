/**
 * @file crossed.hpp
 * @brief Crossed products A_theta x F for a finite cyclic group F = <W> of
 *        theta-symplectic matrices (the noncommutative orbifold).
 *
 * Elements are finite sums sum_g a_g delta_g with a_g in the twisted group
 * algebra; (a delta_g)(b delta_h) = a alpha_g(b) delta_{gh} and
 * (a delta_g)* = alpha_{g^{-1}}(a*) delta_{g^{-1}}.
 */
#pragma once

#include <map>

#include "nct/cyclic_action.hpp"

namespace nct {

class OrbifoldElement {
 public:
  using Parts = std::map<int, AlgebraElement>;

  OrbifoldElement() = default;
  OrbifoldElement(FiniteCyclicAction action, Convention conv)
      : action_(std::move(action)), conv_(conv) {}

  const FiniteCyclicAction& action() const { return action_; }
  Convention convention() const { return conv_; }
  const Parts& parts() const { return parts_; }
  int order() const { return action_.order; }

  AlgebraElement part(int g) const {
    auto it = parts_.find(normalize(g));
    if (it != parts_.end()) return it->second;
    return AlgebraElement(action_.theta, conv_);
  }

  OrbifoldElement& set_part(int g, const AlgebraElement& a) {
    parts_[normalize(g)] = a;
    return *this;
  }

  OrbifoldElement& accumulate(int g, const AlgebraElement& a) {
    const int gg = normalize(g);
    auto it = parts_.find(gg);
    if (it == parts_.end())
      parts_[gg] = a;
    else
      it->second = it->second + a;
    return *this;
  }

  friend OrbifoldElement operator+(const OrbifoldElement& x, const OrbifoldElement& y) {
    OrbifoldElement r = x;
    for (const auto& [g, a] : y.parts_) r.accumulate(g, a);
    return r;
  }
  friend OrbifoldElement operator-(const OrbifoldElement& x, const OrbifoldElement& y) {
    OrbifoldElement r = x;
    for (const auto& [g, a] : y.parts_) r.accumulate(g, cplx(-1.0) * a);
    return r;
  }
  friend OrbifoldElement operator*(cplx s, const OrbifoldElement& x) {
    OrbifoldElement r(x.action_, x.conv_);
    for (const auto& [g, a] : x.parts_) r.set_part(g, s * a);
    return r;
  }
  friend OrbifoldElement operator*(const OrbifoldElement& x, const OrbifoldElement& y) {
    OrbifoldElement r(x.action_, x.conv_);
    for (const auto& [g, a] : x.parts_)
      for (const auto& [h, b] : y.parts_)
        r.accumulate(g + h, AlgebraElement::multiply(a, apply_action(x.action_, b, g)));
    return r;
  }

  OrbifoldElement star() const {
    OrbifoldElement r(action_, conv_);
    for (const auto& [g, a] : parts_) r.accumulate(-g, apply_action(action_, a.star(), -g));
    return r;
  }

  /// tau(sum a_g delta_g) = tau(a_e).
  cplx trace() const { return part(0).trace(); }

  double norm_l1() const {
    double s = 0.0;
    for (const auto& [g, a] : parts_) s += a.norm_l1();
    return s;
  }
  double norm_sup() const {
    double s = 0.0;
    for (const auto& [g, a] : parts_) s = std::max(s, a.norm_sup());
    return s;
  }

  static OrbifoldElement embed(const FiniteCyclicAction& act, Convention conv,
                               const AlgebraElement& a, int g = 0) {
    OrbifoldElement r(act, conv);
    r.set_part(g, a);
    return r;
  }
  static OrbifoldElement one(const FiniteCyclicAction& act, Convention conv) {
    return embed(act, conv, AlgebraElement::one(act.theta, conv));
  }
  /// The implementing unitary delta_{W^g}.
  static OrbifoldElement unitary(const FiniteCyclicAction& act, Convention conv, int g = 1) {
    return embed(act, conv, AlgebraElement::one(act.theta, conv), g);
  }

 private:
  int normalize(int g) const {
    const int r = action_.order;
    return ((g % r) + r) % r;
  }

  FiniteCyclicAction action_;
  Convention conv_ = Convention::Presentation;
  Parts parts_;
};

}  // namespace nct
