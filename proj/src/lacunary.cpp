#include "lacunae/lacunary.hpp"

#include "lacunae/combinatorics.hpp"
#include "lacunae/error.hpp"

#include <algorithm>
#include <utility>

namespace lacunae {

LacunaryIndex::LacunaryIndex(unsigned k, unsigned l) : k_(k), l_(l) {
  if (k_ < 1) throw DomainError("lacunary multiple K must be at least 1");
}

LambdaSeries dilate_bruteforce(const LambdaSeries& series, unsigned K) {
  if (K < 1) throw DomainError("dilatation multiple K must be at least 1");
  return dilate_bruteforce(series, K, series.order() / K);
}

LambdaSeries dilate_bruteforce(const LambdaSeries& series, unsigned K, unsigned out_order) {
  if (K < 1) throw DomainError("dilatation multiple K must be at least 1");
  if (series.order() < K * out_order) {
    throw TruncationUnderflow("dilatation by " + std::to_string(K) + " to order " + std::to_string(out_order) +
                              " needs input order " + std::to_string(K * out_order) + ", got " +
                              std::to_string(series.order()));
  }
  LambdaSeries out(out_order);
  for (unsigned j = 0; j <= out_order; ++j) {
    const unsigned n = j * K;
    out.coeff_mut(j) = series.coeff(n) * BigRational(BigInt(factorial(n) / factorial(j)));
  }
  return out;
}

LambdaSeries shift(const LambdaSeries& series, unsigned L) { return series_diff_lambda(series, L); }

ResummedSeries lemma1_plan(unsigned K) {
  if (K < 1) throw DomainError("dilatation multiple K must be at least 1");
  ResummedSeries plan{K, {}};
  plan.branches.push_back({"alpha=0", Part::mixed, 0, K, 0});
  for (unsigned alpha = 1; alpha < K; ++alpha) {
    plan.branches.push_back({"alpha=" + std::to_string(alpha), Part::mixed, K - alpha, K, alpha});
  }
  return plan;
}

ResummedSeries corollary1_plan(unsigned K) {
  if (K < 1) throw DomainError("dilatation multiple K must be at least 1");
  const unsigned T = K / 2;
  ResummedSeries plan{K, {}};
  auto& b = plan.branches;
  auto beta_label = [](const char* fam, unsigned beta) { return std::string(fam) + ":beta=" + std::to_string(beta); };
  if (K % 2 == 0) {
    b.push_back({"E:main", Part::even, 0, K, 0});
    for (unsigned beta = 1; beta + 1 <= T; ++beta) b.push_back({beta_label("E", beta), Part::even, K - 2 * beta, K, 2 * beta});
    for (unsigned beta = 1; beta <= T; ++beta) b.push_back({beta_label("O", beta), Part::odd, K - 2 * beta + 1, K, 2 * beta - 1});
    return plan;
  }
  // K = 2T + 1; the inner index runs over ℓ with q = 2ℓ or 2ℓ + 1
  const unsigned stride = 2 * K;
  b.push_back({"E:main", Part::even, 0, stride, 0});
  for (unsigned beta = 1; beta <= T; ++beta) b.push_back({beta_label("E1", beta), Part::even, K - 2 * beta, stride, 2 * beta});
  for (unsigned beta = 1; beta <= T; ++beta) b.push_back({beta_label("E2", beta), Part::even, K - 2 * beta + 1, stride, K + 2 * beta - 1});
  b.push_back({"O:main", Part::odd, 0, stride, K});
  for (unsigned beta = 1; beta <= T; ++beta) b.push_back({beta_label("O1", beta), Part::odd, K - 2 * beta + 1, stride, 2 * beta - 1});
  for (unsigned beta = 1; beta <= T; ++beta) b.push_back({beta_label("O2", beta), Part::odd, K - 2 * beta, stride, K + 2 * beta});
  return plan;
}

namespace {

// All (s, j) summands of one branch with fixed s.
LambdaSeries evaluate_branch_row(const ResumBranch& br, unsigned K, const CoeffTable& table, unsigned s, unsigned order) {
  LambdaSeries out(order);
  const unsigned r = K * s + br.x_offset;
  for (unsigned j = 0;; ++j) {
    const unsigned m = br.m_stride * j + br.m_offset;
    const unsigned n = (r + m) / K;
    if (n > order) break;
    const BivarPoly g = table(r, m);
    if (!g.is_zero()) out.coeff_mut(n) += g.shifted(r, 0) * BigRational(1, factorial(n));
  }
  return out;
}

}  // namespace

LambdaSeries evaluate_resummed(const ResummedSeries& plan, const CoeffTable& table, unsigned order,
                               std::vector<Part> parts, Exec exec) {
  const unsigned K = plan.K;
  // Work items (branch, s); the smallest λ-power of a row is (K s + x_offset + m_offset)/K.
  std::vector<std::pair<std::size_t, unsigned>> items;
  for (std::size_t bi = 0; bi < plan.branches.size(); ++bi) {
    const auto& br = plan.branches[bi];
    if (std::find(parts.begin(), parts.end(), br.part) == parts.end()) continue;
    for (unsigned s = 0; (K * s + br.x_offset + br.m_offset) / K <= order; ++s) items.emplace_back(bi, s);
  }
  std::vector<LambdaSeries> rows(items.size(), LambdaSeries(order));
  const long n_items = static_cast<long>(items.size());
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n_items; ++i) {
      const auto& [bi, s] = items[static_cast<std::size_t>(i)];
      rows[static_cast<std::size_t>(i)] = evaluate_branch_row(plan.branches[bi], K, table, s, order);
    }
  } else {
    for (long i = 0; i < n_items; ++i) {
      const auto& [bi, s] = items[static_cast<std::size_t>(i)];
      rows[static_cast<std::size_t>(i)] = evaluate_branch_row(plan.branches[bi], K, table, s, order);
    }
  }
  LambdaSeries total(order);
  for (const auto& row : rows) total += row;
  return total;
}

LambdaSeries resum_lemma1(const CoeffTable& table, unsigned K, unsigned order, Exec exec) {
  return evaluate_resummed(lemma1_plan(K), table, order, {Part::mixed}, exec);
}

SplitSeries resum_corollary1(const CoeffTable& table, unsigned K, unsigned order, Exec exec) {
  const ResummedSeries plan = corollary1_plan(K);
  return {evaluate_resummed(plan, table, order, {Part::even}, exec),
          evaluate_resummed(plan, table, order, {Part::odd}, exec)};
}

LambdaSeries resum_with_support(const CoeffTable& table, unsigned K, unsigned order, Exec exec) {
  const SupportClass sup = table.support();
  if (sup.modulus == 2) {
    const Part live = sup.residue % 2 == 0 ? Part::even : Part::odd;
    return evaluate_resummed(corollary1_plan(K), table, order, {live}, exec);
  }
  return resum_lemma1(table, K, order, exec);
}

}  // namespace lacunae
