#include "lacunae/closed_form.hpp"
#include "lacunae/emit.hpp"
#include "lacunae/error.hpp"
#include "lacunae/hermite.hpp"
#include "lacunae/lacunary.hpp"
#include "lacunae/nieto_truax.hpp"
#include "lacunae/normal_order.hpp"
#include "lacunae/serialize.hpp"
#include "lacunae/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

using namespace lacunae;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

void print_series(const LambdaSeries& s, OutputFormat format) {
  if (format == OutputFormat::plan) throw UsageError("plan format is only available for closed-form");
  if (format == OutputFormat::json) {
    std::cout << series_to_json(s).dump() << "\n";
  } else {
    std::cout << s.pretty_str() << "\n";
  }
}

LambdaSeries read_series(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  try {
    return series_from_json(json::parse(in));
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << text;
  if (!out) throw Error("write to " + path + " failed");
}

struct VerifyOpts {
  std::optional<unsigned> kmin, kmax, lmin, lmax, nmax;
  std::uint64_t seed = 1;
  std::string format = "text";
  std::optional<std::string> out;
};

int run_verify(const VerifyOpts& o) {
  if (o.format != "text" && o.format != "json") throw UsageError("verify --format must be text or json");
  std::vector<VerifyConfig> configs;
  const unsigned cap = index_cap_from_env();
  if (!o.kmin && !o.kmax && !o.lmin && !o.lmax && !o.nmax) {
    configs = default_sweep();
  } else {
    VerifyConfig cfg;
    cfg.k_range.lo = o.kmin.value_or(o.kmax.value_or(3));
    cfg.k_range.hi = o.kmax.value_or(cfg.k_range.lo);
    cfg.l_range.lo = o.lmin.value_or(0);
    cfg.l_range.hi = o.lmax.value_or(cfg.l_range.lo);
    cfg.n_max = o.nmax.value_or(6);
    configs.push_back(cfg);
  }
  VerifyReport report;
  for (auto& cfg : configs) {
    cfg.seed = o.seed;
    cfg.index_cap = cap;
    cfg.output_path = o.out;
    report.append(run_verification(cfg));
  }
  const std::string json_text = report_to_json(report).dump(2) + "\n";
  if (o.out) write_file(*o.out, json_text);
  if (o.format == "json") {
    std::cout << json_text;
  } else {
    for (const auto& c : report.cases) {
      if (c.pass) continue;
      std::cout << "FAIL K=" << c.K << " L=" << c.L << " n=" << c.n;
      if (c.diff_term) {
        std::cout << " first difference " << c.diff_term->coef << " x^" << c.diff_term->mono.xp << " y^"
                  << c.diff_term->mono.yp;
      }
      std::cout << "\n";
    }
    for (const auto& c : report.checks) {
      if (!c.pass) std::cout << "FAIL " << c.name << " K=" << c.K << " " << c.detail << "\n";
    }
    std::cout << "cases " << report.cases.size() << ", checks " << report.checks.size() << ", passed "
              << report.passed << ", failed " << report.failed << ", " << report.elapsed_ms << " ms\n";
  }
  return report.ok() ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lacunary generating functions of two-variable Hermite polynomials"};
  app.require_subcommand(1);

  VerifyOpts vo;
  auto* verify = app.add_subcommand("verify", "Check closed forms against the Hermite oracle");
  verify->add_option("--kmin", vo.kmin, "Smallest K");
  verify->add_option("--kmax", vo.kmax, "Largest K");
  verify->add_option("--lmin", vo.lmin, "Smallest L");
  verify->add_option("--lmax", vo.lmax, "Largest L");
  verify->add_option("--nmax", vo.nmax, "Highest λ-coefficient checked");
  verify->add_option("--seed", vo.seed, "Seed for the randomized table");
  verify->add_option("--format", vo.format, "text or json")->capture_default_str();
  verify->add_option("--out", vo.out, "Write the JSON report here");

  unsigned herm_n = 0;
  std::string herm_format = "text";
  auto* hermite = app.add_subcommand("hermite", "Print H_n(x,y)");
  hermite->add_option("n", herm_n, "Index")->required();
  hermite->add_option("--format", herm_format, "text or json")->capture_default_str();

  unsigned cf_k = 2;
  unsigned cf_l = 0;
  unsigned cf_order = 4;
  std::string cf_format = "text";
  auto* closed = app.add_subcommand("closed-form", "Closed-form H_{K,L}(λ;x,y) series or branch plan");
  closed->add_option("K", cf_k, "Multiple")->required();
  closed->add_option("L", cf_l, "Shift")->capture_default_str();
  closed->add_option("--order", cf_order, "λ truncation order")->capture_default_str();
  closed->add_option("--format", cf_format, "json, text or plan")->capture_default_str();

  unsigned dil_k = 1;
  unsigned dil_order = 4;
  std::string dil_format = "text";
  std::optional<std::string> dil_in;
  auto* dilate = app.add_subcommand("dilate", "Brute-force dilatation of the Hermite EGF or of --in");
  dilate->add_option("K", dil_k, "Multiple")->required();
  dilate->add_option("--order", dil_order, "Output order")->capture_default_str();
  dilate->add_option("--format", dil_format, "json or text")->capture_default_str();
  dilate->add_option("--in", dil_in, "Series JSON to dilate instead");

  unsigned sh_l = 0;
  unsigned sh_order = 4;
  std::string sh_format = "text";
  std::optional<std::string> sh_in;
  auto* shift_cmd = app.add_subcommand("shift", "L-fold λ-derivative of the Hermite EGF or of --in");
  shift_cmd->add_option("L", sh_l, "Shift")->required();
  shift_cmd->add_option("--order", sh_order, "Output order")->capture_default_str();
  shift_cmd->add_option("--format", sh_format, "json or text")->capture_default_str();
  shift_cmd->add_option("--in", sh_in, "Series JSON to shift instead");

  std::string no_q = "0";
  std::string no_v = "0";
  unsigned no_order = 4;
  std::string no_format = "json";
  std::optional<std::string> no_f;
  auto* normal = app.add_subcommand("normal-order", "Normal-ordered form of e^{μ(q d/dx + v)}");
  normal->add_option("--q", no_q, "Coefficient of d/dx")->capture_default_str();
  normal->add_option("--v", no_v, "Multiplicative part")->capture_default_str();
  normal->add_option("--order", no_order, "μ truncation order")->capture_default_str();
  normal->add_option("--format", no_format, "json or text")->capture_default_str();
  normal->add_option("--f", no_f, "Also apply e^{μD} to this polynomial");

  unsigned nt_k = 1;
  unsigned nt_l = 0;
  std::string nt_lambda = "1/10";
  std::string nt_x = "1";
  std::string nt_y = "1/2";
  unsigned nt_bits = 256;
  unsigned nt_nmax = 30;
  double nt_tol = 1e-30;
  auto* nieto = app.add_subcommand("nieto-truax", "Roots-of-unity sum against the exact partial sum");
  nieto->add_option("K", nt_k, "Multiple")->required();
  nieto->add_option("L", nt_l, "Residue")->capture_default_str();
  nieto->add_option("--lambda", nt_lambda, "λ (decimal or p/q)")->capture_default_str();
  nieto->add_option("--x", nt_x, "x")->capture_default_str();
  nieto->add_option("--y", nt_y, "y")->capture_default_str();
  nieto->add_option("--bits", nt_bits, "MPFR precision")->capture_default_str();
  nieto->add_option("--nmax", nt_nmax, "Terms in the exact partial sum")->capture_default_str();
  nieto->add_option("--tol", nt_tol, "Relative tolerance")->capture_default_str();

  std::string em_kind;
  EmitParams em;
  std::string em_format = "text";
  auto* emit = app.add_subcommand("emit", "Render one of egf|hk0|hkl|dilated|shifted");
  emit->add_option("kind", em_kind, "Series kind")->required();
  emit->add_option("--K", em.K, "Multiple")->capture_default_str();
  emit->add_option("--L", em.L, "Shift")->capture_default_str();
  emit->add_option("--order", em.order, "λ truncation order")->capture_default_str();
  emit->add_option("--format", em_format, "json, text or plan")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    if (verify->parsed()) return run_verify(vo);

    if (hermite->parsed()) {
      const BivarPoly h = hermite_poly(herm_n);
      if (herm_format == "json") {
        std::cout << poly_to_json(h).dump() << "\n";
      } else if (herm_format == "text") {
        std::cout << h.pretty_str() << "\n";
      } else {
        throw UsageError("hermite --format must be text or json");
      }
      return 0;
    }

    if (closed->parsed()) {
      const OutputFormat f = parse_output_format(cf_format);
      if (cf_k < 1) throw UsageError("K must be at least 1");
      if (f == OutputFormat::plan) {
        if (cf_k < 2) throw UsageError("plan format needs K >= 2");
        std::cout << plan_to_text(closed_form_plan(cf_k, cf_l));
        return 0;
      }
      print_series(closed_form_HKL(cf_k, cf_l, cf_order), f);
      return 0;
    }

    if (dilate->parsed()) {
      if (dil_k < 1) throw UsageError("K must be at least 1");
      const LambdaSeries src = dil_in ? read_series(*dil_in) : hermite_egf(dil_k * dil_order);
      const LambdaSeries out = dil_in ? dilate_bruteforce(src, dil_k) : dilate_bruteforce(src, dil_k, dil_order);
      print_series(out, parse_output_format(dil_format));
      return 0;
    }

    if (shift_cmd->parsed()) {
      const LambdaSeries src = sh_in ? read_series(*sh_in) : hermite_egf(sh_order + sh_l);
      print_series(shift(src, sh_l), parse_output_format(sh_format));
      return 0;
    }

    if (normal->parsed()) {
      const SemiLinearOp op{parse_poly(no_q), parse_poly(no_v)};
      const NormalOrderResult r = normal_order(op, no_order);
      std::optional<LambdaSeries> applied;
      if (no_f) applied = apply_exp_op(op, no_order, parse_poly(*no_f));
      if (no_format == "json") {
        json j = normal_order_to_json(r);
        if (applied) j["applied"] = series_to_json(*applied);
        std::cout << j.dump() << "\n";
      } else if (no_format == "text") {
        std::cout << "T = " << r.T.pretty_str("μ") << "\ng = " << r.g.pretty_str("μ") << "\n";
        if (applied) std::cout << "e^{μD} f = " << applied->pretty_str("μ") << "\n";
      } else {
        throw UsageError("normal-order --format must be text or json");
      }
      return 0;
    }

    if (nieto->parsed()) {
      const ComplexHP r = nieto_truax(nt_k, nt_l, HighPrecReal::parse(nt_lambda, nt_bits),
                                      HighPrecReal::parse(nt_x, nt_bits), HighPrecReal::parse(nt_y, nt_bits), nt_bits);
      const BigRational exact = lacunary_partial_sum(nt_k, nt_l, BigRational::parse(nt_lambda), BigRational::parse(nt_x),
                                                     BigRational::parse(nt_y), nt_nmax);
      const HighPrecReal ref(exact, nt_bits);
      const HighPrecReal diff = (r.re - ref).abs();
      const double rel = ref.abs().to_double() == 0 ? diff.to_double() : (diff / ref.abs()).to_double();
      const double im = r.im.abs().to_double();
      const bool ok = rel < nt_tol && im < nt_tol;
      std::cout << "re          " << r.re.str() << "\n"
                << "im          " << r.im.str() << "\n"
                << "partial sum " << ref.str() << "\n"
                << "rel error   " << rel << "\n"
                << (ok ? "agree" : "disagree") << " within " << nt_tol << "\n";
      return ok ? 0 : kExitFailure;
    }

    if (emit->parsed()) {
      std::cout << emit_series(parse_series_kind(em_kind), em, parse_output_format(em_format));
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
