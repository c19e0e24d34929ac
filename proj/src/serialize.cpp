#include "lacunae/serialize.hpp"

#include "lacunae/error.hpp"

#include <sstream>

namespace lacunae {

json term_to_json(const Term& t) {
  return json{{"xp", t.mono.xp}, {"yp", t.mono.yp}, {"num", t.coef.num().get_str()}, {"den", t.coef.den().get_str()}};
}

Term term_from_json(const json& j) {
  try {
    const BigInt num(j.at("num").get<std::string>(), 10);
    const BigInt den(j.at("den").get<std::string>(), 10);
    return Term{Monomial{j.at("xp").get<unsigned>(), j.at("yp").get<unsigned>()}, BigRational(num, den)};
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad term object: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw ParseError("bad integer string in term object: " + j.dump());
  }
}

json poly_to_json(const BivarPoly& p) {
  json arr = json::array();
  for (const auto& [m, c] : p) arr.push_back(term_to_json(Term{m, c}));
  return arr;
}

BivarPoly poly_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be a JSON array of terms");
  BivarPoly p;
  for (const auto& t : j) {
    const Term term = term_from_json(t);
    p.add_term(term.coef, term.mono.xp, term.mono.yp);
  }
  return p;
}

json series_to_json(const LambdaSeries& s) {
  json coeffs = json::array();
  for (const auto& p : s.coeffs()) coeffs.push_back(poly_to_json(p));
  return json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

LambdaSeries series_from_json(const json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs")) {
    throw ParseError("series must be an object with 'order' and 'coeffs'");
  }
  const auto order = j.at("order").get<unsigned>();
  const auto& coeffs = j.at("coeffs");
  if (!coeffs.is_array() || coeffs.size() != order + 1) {
    throw ParseError("series 'coeffs' must hold order+1 entries");
  }
  std::vector<BivarPoly> c;
  c.reserve(coeffs.size());
  for (const auto& p : coeffs) c.push_back(poly_from_json(p));
  return LambdaSeries(std::move(c));
}

json spec_to_json(const HypergeomSpec& spec) {
  json upper = json::array();
  json lower = json::array();
  for (const auto& a : spec.upper) upper.push_back(a.fraction_str());
  for (const auto& b : spec.lower) lower.push_back(b.fraction_str());
  return json{{"upper", std::move(upper)},
              {"lower", std::move(lower)},
              {"arg", {{"coef", spec.arg.coef.fraction_str()}, {"lp", spec.arg.lp}, {"xp", spec.arg.xp}, {"yp", spec.arg.yp}}}};
}

HypergeomSpec spec_from_json(const json& j) {
  try {
    HypergeomSpec spec;
    for (const auto& a : j.at("upper")) spec.upper.push_back(BigRational::parse(a.get<std::string>()));
    for (const auto& b : j.at("lower")) spec.lower.push_back(BigRational::parse(b.get<std::string>()));
    const auto& arg = j.at("arg");
    spec.arg = MonomialArg{BigRational::parse(arg.at("coef").get<std::string>()), arg.at("lp").get<unsigned>(),
                           arg.at("xp").get<unsigned>(), arg.at("yp").get<unsigned>()};
    return spec;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad hypergeometric spec: ") + e.what());
  }
}

json plan_to_json(const ClosedFormPlan& plan) {
  json branches = json::array();
  for (const auto& br : plan.branches) {
    json offsets = json::array();
    for (const auto& o : br.upper_offsets) offsets.push_back(o.fraction_str());
    json spec = spec_to_json(br.spec_at(0));
    branches.push_back(json{{"label", br.label},
                            {"lambda_shift", br.lambda_shift},
                            {"weight", br.weight},
                            {"beta", br.beta},
                            {"p", br.upper_offsets.size()},
                            {"q", br.lower.size()},
                            {"s_scale", br.s_scale.fraction_str()},
                            {"upper_offsets", std::move(offsets)},
                            {"lower", spec["lower"]},
                            {"arg", spec["arg"]}});
  }
  return json{{"K", plan.K}, {"L", plan.L}, {"T", plan.T}, {"branches", std::move(branches)}};
}

namespace {

std::string linear_in_s(unsigned K, unsigned c, unsigned w) {
  // K(s+c) − 2w written as "Ks + const" or "Ks − const"
  const long constant = static_cast<long>(K * c) - 2L * w;
  std::string out = std::to_string(K) + "s";
  if (constant > 0) out += "+" + std::to_string(constant);
  if (constant < 0) out += "-" + std::to_string(-constant);
  return out;
}

}  // namespace

std::string plan_to_text(const ClosedFormPlan& plan) {
  std::ostringstream os;
  os << "H_{" << plan.K << "," << plan.L << "}: K=" << plan.K << " T=" << plan.T << " branches=" << plan.branches.size()
     << "\n";
  for (const auto& br : plan.branches) {
    const std::string S = br.lambda_shift == 0 ? "s" : "s+" + std::to_string(br.lambda_shift);
    const std::string P = linear_in_s(plan.K, br.lambda_shift, br.weight);
    os << "[" << br.label << "] λ^(" << S << ")/(" << S << ")! · ";
    if (plan.L == 0) {
      os << "x^(" << P << ")";
    } else {
      os << "Σ_{q=0}^{" << plan.L << "} q!·C(" << plan.L << ",q)·C(" << P << ",q)·H_{" << plan.L << "-q}(x,y)·x^(" << P
         << "-q)·(2y)^q";
    }
    if (br.weight > 0) {
      os << " · y^" << br.weight << " · (" << plan.K << "(" << S << "))!/((" << P << ")!·" << br.weight << "!)";
    }
    os << " · " << br.upper_offsets.size() << "F" << br.lower.size() << "[";
    const std::string base = br.s_scale.is_one() ? S : (br.lambda_shift == 0 ? S : "(" + S + ")") + "/" + br.s_scale.den().get_str();
    for (std::size_t i = 0; i < br.upper_offsets.size(); ++i) {
      os << (i ? ", " : "") << base << "+" << br.upper_offsets[i].str();
    }
    os << "; ";
    for (std::size_t i = 0; i < br.lower.size(); ++i) os << (i ? ", " : "") << br.lower[i].str();
    os << "](" << br.arg.coef.str() << " λ";
    if (br.arg.lp > 1) os << "^" << br.arg.lp;
    os << " y^" << br.arg.yp << ")\n";
  }
  return os.str();
}

json normal_order_to_json(const NormalOrderResult& r) {
  return json{{"order", r.order()}, {"T", series_to_json(r.T)}, {"g", series_to_json(r.g)}};
}

}  // namespace lacunae
