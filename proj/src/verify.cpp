#include "lacunae/verify.hpp"

#include "lacunae/closed_form.hpp"
#include "lacunae/error.hpp"
#include "lacunae/hermite.hpp"
#include "lacunae/lacunary.hpp"
#include "lacunae/serialize.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <utility>

namespace lacunae {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

bool same_term(const std::optional<Term>& a, const std::optional<Term>& b) {
  if (a.has_value() != b.has_value()) return false;
  return !a || (a->mono == b->mono && a->coef == b->coef);
}

}  // namespace

bool operator==(const CaseRecord& a, const CaseRecord& b) {
  return a.K == b.K && a.L == b.L && a.n == b.n && a.pass == b.pass && same_term(a.diff_term, b.diff_term) &&
         a.elapsed_ms == b.elapsed_ms;
}

bool operator==(const CheckRecord& a, const CheckRecord& b) {
  return a.name == b.name && a.K == b.K && a.pass == b.pass && a.detail == b.detail && a.elapsed_ms == b.elapsed_ms;
}

unsigned index_cap_from_env() {
  const char* v = std::getenv("LACUNAE_CAP");
  if (v == nullptr || *v == '\0') return kDefaultIndexCap;
  char* end = nullptr;
  const unsigned long cap = std::strtoul(v, &end, 10);
  if (end == v || *end != '\0' || cap == 0) throw DomainError(std::string("LACUNAE_CAP is not a positive integer: ") + v);
  return static_cast<unsigned>(cap);
}

void VerifyConfig::validate() const {
  if (k_range.lo < 1 || k_range.hi > 12 || k_range.lo > k_range.hi) {
    throw DomainError("K range must be a non-empty subrange of [1, 12]");
  }
  if (l_range.lo > l_range.hi) throw DomainError("L range is empty");
  const unsigned top = n_max * k_range.hi + l_range.hi;
  if (top > index_cap) {
    throw DomainError("sweep reaches H_" + std::to_string(top) + ", above the index cap " + std::to_string(index_cap) +
                      " (raise LACUNAE_CAP to allow it)");
  }
}

std::vector<VerifyConfig> default_sweep() {
  VerifyConfig k3;
  k3.k_range = {3, 3};
  k3.n_max = 16;
  VerifyConfig k4 = k3;
  k4.k_range = {4, 4};
  VerifyConfig k5 = k3;
  k5.k_range = {5, 5};
  k5.n_max = 15;
  return {k3, k4, k5};
}

bool VerifyReport::totals_consistent() const {
  unsigned p = 0;
  unsigned f = 0;
  for (const auto& c : cases) (c.pass ? p : f)++;
  for (const auto& c : checks) (c.pass ? p : f)++;
  return p == passed && f == failed;
}

void VerifyReport::append(const VerifyReport& other) {
  cases.insert(cases.end(), other.cases.begin(), other.cases.end());
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  passed += other.passed;
  failed += other.failed;
  elapsed_ms += other.elapsed_ms;
}

namespace {

std::vector<CaseRecord> check_pair(unsigned K, unsigned L, unsigned n_max) {
  const LambdaSeries series = closed_form_HKL(K, L, n_max, Exec::serial);
  std::vector<CaseRecord> out;
  for (unsigned n = 0; n <= n_max; ++n) {
    const auto t0 = Clock::now();
    CaseRecord rec{K, L, n, false, std::nullopt, 0};
    rec.diff_term = first_difference(series.egf_coeff(n), hermite_poly(n * K + L));
    rec.pass = !rec.diff_term.has_value();
    rec.elapsed_ms = ms_since(t0);
    out.push_back(std::move(rec));
  }
  return out;
}

std::string describe(const LambdaSeries& a, const LambdaSeries& b) {
  for (unsigned n = 0; n <= std::min(a.order(), b.order()); ++n) {
    if (auto d = first_difference(a.coeff(n), b.coeff(n))) {
      return "differs at λ^" + std::to_string(n) + " x^" + std::to_string(d->mono.xp) + " y^" +
             std::to_string(d->mono.yp);
    }
  }
  return {};
}

std::vector<CheckRecord> structural_checks(unsigned K, unsigned order, std::uint64_t seed) {
  std::vector<CheckRecord> out;
  const CoeffTable hermite = hermite_coeff_table();
  auto record = [&](std::string name, const LambdaSeries& a, const LambdaSeries& b, Clock::time_point t0) {
    const std::string detail = describe(a, b);
    out.push_back(CheckRecord{std::move(name), K, detail.empty(), detail, ms_since(t0)});
  };
  {
    const auto t0 = Clock::now();
    record("lemma1_vs_bruteforce", resum_lemma1(hermite, K, order, Exec::serial),
           dilate_bruteforce(hermite_egf(K * order), K, order), t0);
  }
  {
    const auto t0 = Clock::now();
    const CoeffTable dense = random_dense_table(seed + K);
    const SplitSeries split = resum_corollary1(dense, K, order, Exec::serial);
    record("even_odd_split", series_add(split.even_part, split.odd_part), resum_lemma1(dense, K, order, Exec::serial),
           t0);
  }
  {
    const auto t0 = Clock::now();
    record("closed_form_vs_resummed", closed_form_HK0(K, order, Exec::serial),
           resum_with_support(hermite, K, order, Exec::serial), t0);
  }
  return out;
}

}  // namespace

VerifyReport run_verification(const VerifyConfig& cfg, Exec exec) {
  cfg.validate();
  const auto t0 = Clock::now();
  std::vector<std::pair<unsigned, unsigned>> pairs;
  for (unsigned K = cfg.k_range.lo; K <= cfg.k_range.hi; ++K) {
    for (unsigned L = cfg.l_range.lo; L <= cfg.l_range.hi; ++L) pairs.emplace_back(K, L);
  }
  const unsigned n_k = cfg.k_range.hi - cfg.k_range.lo + 1;
  std::vector<std::vector<CaseRecord>> case_blocks(pairs.size());
  std::vector<std::vector<CheckRecord>> check_blocks(n_k);
  const long n_jobs = static_cast<long>(pairs.size() + n_k);
  // jobs [0, pairs) are closed-form sweeps, the rest are per-K structural checks
  auto run_job = [&](long i) {
    const auto idx = static_cast<std::size_t>(i);
    if (idx < pairs.size()) {
      case_blocks[idx] = check_pair(pairs[idx].first, pairs[idx].second, cfg.n_max);
    } else {
      const auto ki = idx - pairs.size();
      check_blocks[ki] = structural_checks(cfg.k_range.lo + static_cast<unsigned>(ki), cfg.n_max, cfg.seed);
    }
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n_jobs; ++i) run_job(i);
  } else {
    for (long i = 0; i < n_jobs; ++i) run_job(i);
  }
  VerifyReport report;
  for (auto& block : case_blocks) {
    for (auto& rec : block) {
      (rec.pass ? report.passed : report.failed)++;
      report.cases.push_back(std::move(rec));
    }
  }
  for (auto& block : check_blocks) {
    for (auto& rec : block) {
      (rec.pass ? report.passed : report.failed)++;
      report.checks.push_back(std::move(rec));
    }
  }
  report.elapsed_ms = ms_since(t0);
  return report;
}

nlohmann::json report_to_json(const VerifyReport& r) {
  json cases = json::array();
  for (const auto& c : r.cases) {
    cases.push_back(json{{"K", c.K},
                         {"L", c.L},
                         {"n", c.n},
                         {"pass", c.pass},
                         {"diff_term", c.diff_term ? term_to_json(*c.diff_term) : json(nullptr)},
                         {"elapsed_ms", c.elapsed_ms}});
  }
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back(json{{"name", c.name}, {"K", c.K}, {"pass", c.pass}, {"detail", c.detail}, {"elapsed_ms", c.elapsed_ms}});
  }
  return json{{"cases", std::move(cases)},
              {"checks", std::move(checks)},
              {"passed", r.passed},
              {"failed", r.failed},
              {"elapsed_ms", r.elapsed_ms}};
}

VerifyReport report_from_json(const nlohmann::json& j) {
  try {
    VerifyReport r;
    for (const auto& c : j.at("cases")) {
      CaseRecord rec;
      rec.K = c.at("K").get<unsigned>();
      rec.L = c.at("L").get<unsigned>();
      rec.n = c.at("n").get<unsigned>();
      rec.pass = c.at("pass").get<bool>();
      if (!c.at("diff_term").is_null()) rec.diff_term = term_from_json(c.at("diff_term"));
      rec.elapsed_ms = c.value("elapsed_ms", 0.0);
      r.cases.push_back(std::move(rec));
    }
    if (j.contains("checks")) {
      for (const auto& c : j.at("checks")) {
        r.checks.push_back(CheckRecord{c.at("name").get<std::string>(), c.at("K").get<unsigned>(), c.at("pass").get<bool>(),
                                       c.value("detail", std::string{}), c.value("elapsed_ms", 0.0)});
      }
    }
    r.passed = j.at("passed").get<unsigned>();
    r.failed = j.at("failed").get<unsigned>();
    r.elapsed_ms = j.value("elapsed_ms", 0.0);
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad verification report: ") + e.what());
  }
}

VerifyReport without_timing(VerifyReport r) {
  r.elapsed_ms = 0;
  for (auto& c : r.cases) c.elapsed_ms = 0;
  for (auto& c : r.checks) c.elapsed_ms = 0;
  return r;
}

}  // namespace lacunae
