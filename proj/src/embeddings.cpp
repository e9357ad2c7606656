/**
 * @file embeddings.cpp
 */
#include "klab/embeddings.hpp"

#include <cmath>

#include "json.hpp"
#include "klab/errors.hpp"

namespace klab::embeddings {

namespace {

Condition less(std::string name, double lhs, double rhs) { return {std::move(name), lhs, rhs, "<", lhs < rhs}; }
Condition less_eq(std::string name, double lhs, double rhs) { return {std::move(name), lhs, rhs, "<=", lhs <= rhs}; }
Condition equal(std::string name, double lhs, double rhs) { return {std::move(name), lhs, rhs, "=", lhs == rhs}; }

void check_main_ranges(const SpaceParams& s) {
  if (!(s.p > 1.0) || !std::isfinite(s.p)) throw InvalidParams("need 1 < p < inf");
  if (!(s.tau > 0.0) || !std::isfinite(s.tau)) throw InvalidParams("need 0 < tau < inf");
  if (s.m < 1) throw InvalidParams("need m >= 1");
  if (s.d < 1 || s.d > 3) throw InvalidParams("need d in 1..3");
  if (!(s.delta >= 0.0) || !(s.delta < s.d)) throw InvalidParams("need 0 <= delta < d");
  if (!std::isfinite(s.a)) throw InvalidParams("a must be finite");
}

}  // namespace

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Holds: return "Holds";
    case Outcome::Fails: return "Fails";
    case Outcome::UndeterminedByPaper: return "UndeterminedByPaper";
  }
  return "?";
}

std::string Verdict::to_json() const {
  nlohmann::ordered_json j;
  j["outcome"] = to_string(outcome);
  j["trigger"] = trigger;
  auto& cs = j["conditionValues"] = nlohmann::ordered_json::array();
  for (const auto& c : conditions)
    cs.push_back({{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"relation", c.relation}, {"satisfied", c.satisfied}});
  return j.dump();
}

double adaptivity_scale(int d, double m) {
  if (d < 1) throw InvalidParams("adaptivity_scale: need d >= 1");
  if (!(m > 0.0)) throw InvalidParams("adaptivity_scale: need m > 0");
  return 1.0 / (m / d + 0.5);
}

Verdict decide_embedding(const SpaceParams& s) {
  check_main_ranges(s);
  Verdict v;
  const double sig = sigma(s.tau, 2.0, s.d);
  const double lhs = s.m - s.a;
  const double bound = (s.d - s.delta) * (1.0 / s.tau - 1.0 / s.p);
  if (s.tau > s.p) {
    v.outcome = Outcome::Fails;
    v.trigger = "necessity: tau <= p";
    v.conditions.push_back(less_eq("tau <= p", s.tau, s.p));
    return v;
  }
  v.conditions.push_back(less("sigma_{tau,2} < m", sig, s.m));
  if (!(s.m > sig)) {
    v.outcome = Outcome::Fails;
    v.trigger = "m <= sigma_{tau,2}: target space undefined";
    return v;
  }
  if (s.tau < s.p) {
    const auto c = less("m - a < (d - delta)(1/tau - 1/p)", lhs, bound);
    v.conditions.push_back(c);
    v.outcome = c.satisfied ? Outcome::Holds : Outcome::Fails;
    if (c.satisfied) v.trigger = "tau < p and m - a < (d - delta)(1/tau - 1/p)";
    else if (lhs == bound) v.trigger = "necessity: equality m - a = (d - delta)(1/tau - 1/p)";
    else v.trigger = "necessity: m - a > (d - delta)(1/tau - 1/p)";
    return v;
  }
  const auto c = less_eq("m <= a", s.m, s.a);
  v.conditions.push_back(equal("tau = p", s.tau, s.p));
  v.conditions.push_back(c);
  v.outcome = c.satisfied ? Outcome::Holds : Outcome::Fails;
  v.trigger = c.satisfied ? "tau = p and m <= a" : "necessity: tau = p and a < m";
  return v;
}

std::pair<Verdict, HolderRoute> decide_embedding_holder_route(const SpaceParams& s, double q1, double q2) {
  check_main_ranges(s);
  if (s.ell < 0 || s.ell > s.d - 2) throw InvalidParams("need 0 <= l <= d - 2");
  if (!(q2 > 0.0) || !(q2 <= q1)) throw InvalidParams("need 0 < q2 <= q1 <= inf");
  if (!(s.tau < s.p)) throw InvalidParams("need tau < p");
  const double d = s.d, l = s.ell, m = s.m;
  const double gap = 1.0 / s.tau - 1.0 / s.p;
  HolderRoute route;
  route.eta = 1.0 / (m / d + gap);
  route.r = 1.0 / gap;

  Verdict v;
  const auto guard = less("sigma_{tau,2} < m", sigma(s.tau, 2.0, s.d), m);
  const auto c1 = less("(d + l)/d m - a < (d - l)(1/tau - 1/p)", (d + l) / d * m - s.a, (d - l) * gap);
  const auto w1 = less("1/tau - 1 < m/d", 1.0 / s.tau - 1.0, m / d);
  const auto w2 = less("m/d < 1/p", m / d, 1.0 / s.p);
  const auto c2 = less("m - a < (d - l)(1/tau - 1/p)", m - s.a, (d - l) * gap);
  const auto w3 = less("1/tau - 1 < m/(d - l)", 1.0 / s.tau - 1.0, m / (d - l));
  const auto w4 = less("m/(d - l) < 1/p", m / (d - l), 1.0 / s.p);
  v.conditions = {guard, c1, w1, w2, c2, w3, w4};
  route.applies = guard.satisfied && c1.satisfied && w1.satisfied && w2.satisfied;
  route.improved_applies = guard.satisfied && c2.satisfied && w3.satisfied && w4.satisfied;
  if (route.applies) {
    v.outcome = Outcome::Holds;
    v.trigger = "Hoelder route: (d + l)/d m - a bound with window 1/tau - 1 < m/d < 1/p";
  } else if (route.improved_applies) {
    v.outcome = Outcome::Holds;
    v.trigger = "improved Hoelder route: window 1/tau - 1 < m/(d - l) < 1/p";
  } else {
    v.outcome = Outcome::UndeterminedByPaper;
    v.trigger = "Hoelder routes inapplicable (sufficient conditions only)";
  }
  return {v, route};
}

Verdict decide_reverse_embedding(const SpaceParams& s) {
  check_main_ranges(s);
  Verdict v;
  const double lhs = s.m - s.a;
  const double bound = (s.d - s.delta) * (1.0 / s.tau - 1.0 / s.p);
  if (s.tau < s.p) {
    v.outcome = Outcome::Fails;
    v.trigger = "necessity: p <= tau";
    v.conditions.push_back(less_eq("p <= tau", s.p, s.tau));
    return v;
  }
  if (s.tau == s.p) {
    const auto c = less_eq("a <= m", s.a, s.m);
    v.conditions.push_back(equal("tau = p", s.tau, s.p));
    v.conditions.push_back(c);
    v.outcome = c.satisfied ? Outcome::Holds : Outcome::Fails;
    v.trigger = c.satisfied ? "tau = p and a <= m" : "necessity: m - a = (d - delta)(1/tau - 1/p) and a > m";
    return v;
  }
  const auto gt = less("(d - delta)(1/tau - 1/p) < m - a", bound, lhs);
  v.conditions.push_back(gt);
  if (gt.satisfied) {
    v.outcome = Outcome::Holds;
    v.trigger = "tau > p and m - a > (d - delta)(1/tau - 1/p)";
  } else if (lhs < bound) {
    v.outcome = Outcome::Fails;
    v.trigger = "necessity: m - a < (d - delta)(1/tau - 1/p)";
  } else if (s.a > s.m) {
    v.conditions.push_back(less("m < a", s.m, s.a));
    v.outcome = Outcome::Fails;
    v.trigger = "necessity: m - a = (d - delta)(1/tau - 1/p) and a > m";
  } else {
    v.outcome = Outcome::UndeterminedByPaper;
    v.trigger = "equality m - a = (d - delta)(1/tau - 1/p) with a <= m";
  }
  return v;
}

double pde_regularity_tau(int m, double a, int d, double delta, std::optional<double> a_bar) {
  if (m < 1) throw InvalidParams("pde_regularity_tau: need m >= 1");
  if (!(delta >= 0.0) || !(delta < d)) throw InvalidParams("pde_regularity_tau: need 0 <= delta < d");
  if (!(std::abs(a) <= m)) throw InvalidParams("pde_regularity_tau: need |a| <= m");
  if (a_bar && !(std::abs(a) < *a_bar)) throw InvalidParams("pde_regularity_tau: need |a| < a_bar");
  return 1.0 / ((m - a) / (d - delta) + 0.5);
}

Threshold technical_threshold_a(int ell, int d, double tau, double p) {
  if (!(tau > 0.0) || !(p > 0.0)) throw InvalidParams("technical_threshold_a: need tau, p > 0");
  if (ell < 0 || ell >= d) throw InvalidParams("technical_threshold_a: need 0 <= l < d");
  return {ell * (1.0 / tau - 1.0 / p) + d * (1.0 / p - 1.0), tau >= 1.0};
}

}  // namespace klab::embeddings
