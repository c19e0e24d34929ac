#pragma once

#include "lacunae/exec.hpp"
#include "lacunae/hermite.hpp"
#include "lacunae/lambda_series.hpp"

#include <string>
#include <vector>

namespace lacunae {

/// K-tuple (K ≥ 1), L-shifted (L ≥ 0) lacunary index; K = 2T or 2T + 1.
class LacunaryIndex {
 public:
  LacunaryIndex(unsigned k, unsigned l);
  unsigned K() const { return k_; }
  unsigned L() const { return l_; }
  unsigned T() const { return k_ / 2; }
  bool even() const { return k_ % 2 == 0; }

 private:
  unsigned k_;
  unsigned l_;
};

/// λ^n ↦ [n ≡ 0 mod K] · n!/(n/K)! · λ^{n/K}, applied monomial by monomial.
/// Output order is floor(order / K).
LambdaSeries dilate_bruteforce(const LambdaSeries& series, unsigned K);
/// Same, with an explicit output order; the input must carry order ≥ K·out_order.
LambdaSeries dilate_bruteforce(const LambdaSeries& series, unsigned K, unsigned out_order);

/// (d/dλ)^L.
LambdaSeries shift(const LambdaSeries& series, unsigned L);

enum class Part { even, odd, mixed };

/// One summand family of the resummed dilatation. For s, j ≥ 0 it contributes
///   x^r λ^n / n! · g_{r,m}(y),  r = K·s + x_offset,  m = m_stride·j + m_offset,
/// with n = (r + m)/K (always integral by construction).
struct ResumBranch {
  std::string label;
  Part part = Part::mixed;
  unsigned x_offset = 0;
  unsigned m_stride = 1;
  unsigned m_offset = 0;
};

struct ResummedSeries {
  unsigned K = 1;
  std::vector<ResumBranch> branches;
};

/// Branch families of the mod-K split: α = 0 and, after α ↦ K − α, α = 1..K−1.
ResummedSeries lemma1_plan(unsigned K);
/// The same families further split by parity of the second index m.
ResummedSeries corollary1_plan(unsigned K);

/// Sums the chosen branches against `table` up to λ^order.
LambdaSeries evaluate_resummed(const ResummedSeries& plan, const CoeffTable& table, unsigned order,
                               std::vector<Part> parts = {Part::even, Part::odd, Part::mixed},
                               Exec exec = Exec::parallel);

LambdaSeries resum_lemma1(const CoeffTable& table, unsigned K, unsigned order, Exec exec = Exec::parallel);

struct SplitSeries {
  LambdaSeries even_part;
  LambdaSeries odd_part;
};
SplitSeries resum_corollary1(const CoeffTable& table, unsigned K, unsigned order, Exec exec = Exec::parallel);

/// Uses the table's support: parity-supported tables only evaluate the part
/// that can be non-zero; any other support class falls back to resum_lemma1.
LambdaSeries resum_with_support(const CoeffTable& table, unsigned K, unsigned order, Exec exec = Exec::parallel);

}  // namespace lacunae
