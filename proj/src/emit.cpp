#include "lacunae/emit.hpp"

#include "lacunae/closed_form.hpp"
#include "lacunae/error.hpp"
#include "lacunae/hermite.hpp"
#include "lacunae/lacunary.hpp"
#include "lacunae/serialize.hpp"

#include <string>

namespace lacunae {

SeriesKind parse_series_kind(std::string_view name) {
  if (name == "egf") return SeriesKind::egf;
  if (name == "hk0") return SeriesKind::hk0;
  if (name == "hkl") return SeriesKind::hkl;
  if (name == "dilated") return SeriesKind::dilated;
  if (name == "shifted") return SeriesKind::shifted;
  throw UsageError("unknown series kind '" + std::string(name) + "' (egf|hk0|hkl|dilated|shifted)");
}

OutputFormat parse_output_format(std::string_view name) {
  if (name == "json") return OutputFormat::json;
  if (name == "text") return OutputFormat::text;
  if (name == "plan") return OutputFormat::plan;
  throw UsageError("unknown format '" + std::string(name) + "' (json|text|plan)");
}

std::string emit_series(SeriesKind kind, const EmitParams& p, OutputFormat format) {
  if (p.K < 1) throw UsageError("K must be at least 1");
  if (format == OutputFormat::plan) {
    if (kind != SeriesKind::hk0 && kind != SeriesKind::hkl) throw UsageError("plan format needs kind hk0 or hkl");
    if (p.K < 2) throw UsageError("plan format needs K >= 2");
    return plan_to_text(closed_form_plan(p.K, kind == SeriesKind::hk0 ? 0 : p.L));
  }
  LambdaSeries s;
  switch (kind) {
    case SeriesKind::egf:
      s = hermite_egf(p.order);
      break;
    case SeriesKind::hk0:
      s = closed_form_HK0(p.K, p.order);
      break;
    case SeriesKind::hkl:
      s = closed_form_HKL(p.K, p.L, p.order);
      break;
    case SeriesKind::dilated:
      s = dilate_bruteforce(hermite_egf(p.K * p.order), p.K, p.order);
      break;
    case SeriesKind::shifted:
      s = shift(hermite_egf(p.order + p.L), p.L);
      break;
  }
  if (format == OutputFormat::json) return series_to_json(s).dump() + "\n";
  return s.pretty_str() + "\n";
}

}  // namespace lacunae
