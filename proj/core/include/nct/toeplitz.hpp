/**
 * @file toeplitz.hpp
 * @brief Truncated realizations of the Toeplitz exact-sequence machinery:
 *        the Natsume generators iota2(a), iota2(g), iota2(s) on l2(P, A), the
 *        symbol map pi into A_c x Z2, the representation of symbols back on
 *        the truncated space, and the commuting-diagram check.
 *
 * Word indexing.  P = P1 u P2 with P1 = {e, sg, (sg)^2, ...} and
 * P2 = {g, g sg, g(sg)^2, ...}; both are identified with Z>=0 by counting sg
 * pairs.  The truncated basis of length 2N lists (P1, k) for k < N followed
 * by (P2, k) for k < N.
 *
 * With S the subdiagonal shift (S e_k = e_{k+1}, truncated):
 *   iota2(a) = diag(a, ..., a, beta(a), ..., beta(a))   (beta = flip)
 *   iota2(g) = [[0, I],[I, 0]]
 *   iota2(s) = [[0, S],[S*, 0]]
 * The symbol algebra is A_{theta_c} x Z2 with
 * theta_c = [[0, theta12, 0],[-theta12, 0, 0],[0, 0, 0]] (so u3 is the
 * central circle generator); pi(iota2(a)) = a, pi(iota2(g)) = delta_w,
 * pi(iota2(s)) = u3 delta_w.  On the truncation the symbol acts with u3 as S
 * on the P1 block and S* on the P2 block (the sg-counting identification).
 */
#pragma once

#include "nct/orbifold.hpp"

namespace nct {

/// Dense matrix over AlgebraElement entries (all sharing theta/convention).
class AlgMat {
 public:
  AlgMat() = default;
  AlgMat(int rows, int cols, SkewMatrix theta, Convention conv)
      : rows_(rows), cols_(cols), theta_(std::move(theta)), conv_(conv),
        e_(static_cast<size_t>(rows) * static_cast<size_t>(cols), AlgebraElement(theta_, conv)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const SkewMatrix& theta() const { return theta_; }
  Convention convention() const { return conv_; }

  AlgebraElement& at(int i, int j) {
    return e_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)];
  }
  const AlgebraElement& at(int i, int j) const {
    return e_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)];
  }

  static AlgMat identity(int n, const SkewMatrix& theta, Convention conv) {
    AlgMat r(n, n, theta, conv);
    for (int i = 0; i < n; ++i) r.at(i, i) = AlgebraElement::one(theta, conv);
    return r;
  }

  friend AlgMat operator*(const AlgMat& x, const AlgMat& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("AlgMat: shape mismatch");
    AlgMat r(x.rows_, y.cols_, x.theta_, x.conv_);
    for (int i = 0; i < x.rows_; ++i)
      for (int k = 0; k < x.cols_; ++k) {
        const AlgebraElement& xik = x.at(i, k);
        if (xik.coeffs().empty()) continue;
        for (int j = 0; j < y.cols_; ++j) {
          const AlgebraElement& ykj = y.at(k, j);
          if (ykj.coeffs().empty()) continue;
          r.at(i, j) = r.at(i, j) + xik * ykj;
        }
      }
    return r;
  }
  friend AlgMat operator+(const AlgMat& x, const AlgMat& y) {
    AlgMat r = x;
    for (int i = 0; i < x.rows_; ++i)
      for (int j = 0; j < x.cols_; ++j) r.at(i, j) = r.at(i, j) + y.at(i, j);
    return r;
  }
  friend AlgMat operator-(const AlgMat& x, const AlgMat& y) {
    AlgMat r = x;
    for (int i = 0; i < x.rows_; ++i)
      for (int j = 0; j < x.cols_; ++j) r.at(i, j) = r.at(i, j) - y.at(i, j);
    return r;
  }

  /// Conjugate transpose with entrywise involution.
  AlgMat star() const {
    AlgMat r(cols_, rows_, theta_, conv_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j).star();
    return r;
  }

  double norm_sup() const {
    double s = 0.0;
    for (const auto& a : e_) s = std::max(s, a.norm_sup());
    return s;
  }

 private:
  int rows_ = 0, cols_ = 0;
  SkewMatrix theta_;
  Convention conv_ = Convention::Presentation;
  std::vector<AlgebraElement> e_;
};

/// theta_c for the symbol algebra A_{theta12} tensor C(T).
inline SkewMatrix theta_circle(double theta12) {
  Mat m = Mat::Zero(3, 3);
  m(0, 1) = theta12;
  m(1, 0) = -theta12;
  return SkewMatrix(m);
}

enum class NatsumeGen { A, G, S };

struct NatsumeWordStep {
  NatsumeGen kind;
  AlgebraElement a;  ///< used when kind == A (element of A_theta12)
};

/// Truncated Natsume representation on l2(P, A) with N layers per part.
struct TruncatedRep {
  int N;
  SkewMatrix theta2;  ///< 2-d algebra parameter of A
  Convention conv;

  TruncatedRep(int n, SkewMatrix th, Convention c = Convention::Presentation)
      : N(n), theta2(std::move(th)), conv(c) {}

  int dim() const { return 2 * N; }
  int layer(int idx) const { return idx < N ? idx : idx - N; }

  AlgMat iota2_a(const AlgebraElement& a) const {
    AlgMat r(dim(), dim(), theta2, conv);
    const AlgebraElement b = flip_of(a);
    for (int k = 0; k < N; ++k) {
      r.at(k, k) = a;
      r.at(N + k, N + k) = b;
    }
    return r;
  }

  AlgMat iota2_g() const {
    AlgMat r(dim(), dim(), theta2, conv);
    const AlgebraElement one = AlgebraElement::one(theta2, conv);
    for (int k = 0; k < N; ++k) {
      r.at(k, N + k) = one;
      r.at(N + k, k) = one;
    }
    return r;
  }

  AlgMat iota2_s() const {
    AlgMat r(dim(), dim(), theta2, conv);
    const AlgebraElement one = AlgebraElement::one(theta2, conv);
    for (int k = 0; k + 1 < N; ++k) {
      r.at(k + 1, N + k) = one;  // P2,k -> P1,k+1  (block S)
      r.at(N + k, k + 1) = one;  // P1,k+1 -> P2,k  (block S*)
    }
    return r;
  }

  AlgMat apply_word(const std::vector<NatsumeWordStep>& word) const {
    AlgMat r = AlgMat::identity(dim(), theta2, conv);
    for (const auto& st : word) {
      switch (st.kind) {
        case NatsumeGen::A: r = r * iota2_a(st.a); break;
        case NatsumeGen::G: r = r * iota2_g(); break;
        case NatsumeGen::S: r = r * iota2_s(); break;
      }
    }
    return r;
  }

  /// The symbol-algebra crossed product A_{theta_c} x Z2.
  FiniteCyclicAction symbol_action() const {
    return flip_action(theta_circle(theta2(0, 1)));
  }

  /// pi on generators: a -> a, g -> delta_w, s -> u3 delta_w.
  OrbifoldElement pi_generator(const NatsumeWordStep& st) const {
    const SkewMatrix tc = theta_circle(theta2(0, 1));
    const FiniteCyclicAction act = symbol_action();
    OrbifoldElement r(act, conv);
    switch (st.kind) {
      case NatsumeGen::A: {
        AlgebraElement em(tc, conv);
        for (const auto& [l, v] : st.a.coeffs()) em.accumulate({l[0], l[1], 0}, v);
        r.set_part(0, em);
        break;
      }
      case NatsumeGen::G:
        r.set_part(1, AlgebraElement::one(tc, conv));
        break;
      case NatsumeGen::S:
        r.set_part(1, AlgebraElement::unit(tc, conv, {0, 0, 1}));
        break;
    }
    return r;
  }

  OrbifoldElement pi_word(const std::vector<NatsumeWordStep>& word) const {
    OrbifoldElement r = OrbifoldElement::one(symbol_action(), conv);
    for (const auto& st : word) r = r * pi_generator(st);
    return r;
  }

  /**
   * Represent a symbol x in A_{theta_c} x Z2 on the truncated space: u3 acts
   * as the shift S on the P1 block and S* on the P2 block; the A-coefficient
   * is flipped on P2 rows; the delta_w part swaps the blocks.
   */
  AlgMat represent_symbol(const OrbifoldElement& x) const {
    AlgMat r(dim(), dim(), theta2, conv);
    auto add_shift = [&](int row_block, int col_block, int k, const AlgebraElement& coef) {
      // shift(k): e_j -> e_{j+k} within a block, entries (j+k, j)
      for (int j = 0; j < N; ++j) {
        const int i = j + k;
        if (i < 0 || i >= N) continue;
        r.at(row_block * N + i, col_block * N + j) =
            r.at(row_block * N + i, col_block * N + j) + coef;
      }
    };
    // part 0: a-terms; part 1: (gamma delta_w)-terms
    const AlgebraElement part0 = x.part(0);
    const AlgebraElement part1 = x.part(1);
    for (const auto& [l, v] : part0.coeffs()) {
      AlgebraElement c2(theta2, conv);
      c2.set({l[0], l[1]}, v);
      add_shift(0, 0, l[2], c2);
      add_shift(1, 1, -l[2], flip_of(c2));
    }
    for (const auto& [l, v] : part1.coeffs()) {
      AlgebraElement c2(theta2, conv);
      c2.set({l[0], l[1]}, v);
      add_shift(0, 1, l[2], c2);
      add_shift(1, 0, -l[2], flip_of(c2));
    }
    return r;
  }
};

/// Diagram-check report for one probe word.
struct DiagramReport {
  int N = 0;
  size_t word_len = 0;
  double interior = 0.0;  ///< max defect over columns with word_len <= layer <= N-3
  double ideal = 0.0;     ///< max defect over columns with layer < word_len (kernel hits)
  double boundary = 0.0;  ///< max defect over columns with layer > N-3
  double total = 0.0;
};

/**
 * Verify the commuting diagram on a probe word: the truncated operator
 * product against the represented symbol p(pi(word)).  Exact agreement is
 * required on interior columns; defects may appear only in the first
 * word_len layers (the compact ideal the quotient map kills) and the last
 * two layers (the truncation).
 */
inline DiagramReport check_diagram(const TruncatedRep& rep,
                                   const std::vector<NatsumeWordStep>& word) {
  const AlgMat lhs = rep.apply_word(word);
  const AlgMat rhs = rep.represent_symbol(rep.pi_word(word));
  const AlgMat d = lhs - rhs;

  DiagramReport rpt;
  rpt.N = rep.N;
  rpt.word_len = word.size();
  for (int j = 0; j < rep.dim(); ++j) {
    double colmax = 0.0;
    for (int i = 0; i < rep.dim(); ++i) colmax = std::max(colmax, d.at(i, j).norm_sup());
    const int layer = rep.layer(j);
    rpt.total = std::max(rpt.total, colmax);
    if (layer < static_cast<int>(rpt.word_len))
      rpt.ideal = std::max(rpt.ideal, colmax);
    else if (layer > rep.N - 3)
      rpt.boundary = std::max(rpt.boundary, colmax);
    else
      rpt.interior = std::max(rpt.interior, colmax);
  }
  return rpt;
}

/// q_e := I - iota2(s)* iota2(s); equals e_{(P1,0)} + e_{(P2,N-1)} on the
/// truncation (the second term is the boundary artifact).
inline AlgMat kernel_projection(const TruncatedRep& rep) {
  const AlgMat s = rep.iota2_s();
  return AlgMat::identity(rep.dim(), rep.theta2, rep.conv) - s.star() * s;
}

/// pi(1 - s* s) computed symbolically in the crossed product (must vanish).
inline double pi_kernel_residual(const TruncatedRep& rep) {
  const OrbifoldElement s = rep.pi_generator({NatsumeGen::S, {}});
  const OrbifoldElement r =
      OrbifoldElement::one(rep.symbol_action(), rep.conv) - s.star() * s;
  return r.norm_sup();
}

}  // namespace nct
