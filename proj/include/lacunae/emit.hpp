#pragma once

#include <string>
#include <string_view>

namespace lacunae {

enum class SeriesKind { egf, hk0, hkl, dilated, shifted };
enum class OutputFormat { json, text, plan };

SeriesKind parse_series_kind(std::string_view name);
OutputFormat parse_output_format(std::string_view name);

struct EmitParams {
  unsigned K = 1;
  unsigned L = 0;
  unsigned order = 0;
};

/// Deterministic rendering of one of the library's series:
///   egf      hermite_egf(order)
///   hk0      closed_form_HK0(K, order)
///   hkl      closed_form_HKL(K, L, order)
///   dilated  dilate_bruteforce(hermite_egf(K·order), K)
///   shifted  shift(hermite_egf(order + L), L)
/// `plan` is only meaningful for hk0/hkl with K ≥ 2. Invalid combinations
/// throw UsageError.
std::string emit_series(SeriesKind kind, const EmitParams& params, OutputFormat format);

}  // namespace lacunae
