#pragma once

#include "lacunae/bivar_poly.hpp"
#include "lacunae/lambda_series.hpp"

#include <cstdint>
#include <functional>
#include <string>

namespace lacunae {

/// Index set {m : m ≡ residue (mod modulus)} on which a coefficient table may
/// be non-zero. modulus == 1 means no constraint.
struct SupportClass {
  unsigned modulus = 1;
  unsigned residue = 0;
  bool contains(unsigned m) const { return m % modulus == residue % modulus; }
};

/// Expansion coefficients g_{r,m}(y) of an exponential generating function
///   G(λ; x, y) = Σ_r x^r Σ_m λ^{r+m} / (r+m)! · g_{r,m}(y).
/// Entries are produced on demand by `generator`, never materialized.
class CoeffTable {
 public:
  using Generator = std::function<BivarPoly(unsigned r, unsigned m)>;

  CoeffTable(std::string name, Generator generator, SupportClass support = {})
      : name_(std::move(name)), generator_(std::move(generator)), support_(support) {}

  BivarPoly operator()(unsigned r, unsigned m) const {
    return support_.contains(m) ? generator_(r, m) : BivarPoly{};
  }
  const std::string& name() const { return name_; }
  SupportClass support() const { return support_; }

  /// The generating function rebuilt from the table, truncated at λ^order.
  LambdaSeries egf(unsigned order) const;

 private:
  std::string name_;
  Generator generator_;
  SupportClass support_;
};

/// Two-variable Hermite polynomial H_n(x,y) = n! Σ_k x^{n-2k} y^k / ((n-2k)! k!).
BivarPoly hermite_poly(unsigned n);

/// e^{λx + λ²y} truncated at λ^order; [λ^n] = H_n(x,y)/n!.
LambdaSeries hermite_egf(unsigned order);

/// g_{r,2m}(y) = (r+2m)! y^m / (r! m!), zero for odd second index.
CoeffTable hermite_coeff_table();

/// Full-support table with small pseudo-random rational entries c·y^k,
/// a pure function of (seed, r, m).
CoeffTable random_dense_table(std::uint64_t seed);

}  // namespace lacunae
