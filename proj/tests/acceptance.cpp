/*******************************************************************************
 * Copyright (c) 2026 The lincodes authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lincodes/channel.hpp"
#include "lincodes/code.hpp"
#include "lincodes/decoder.hpp"
#include "lincodes/ensemble.hpp"
#include "lincodes/types.hpp"

using namespace lincodes;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string &why) {
    if (pass)
      detail = why;
    pass = false;
  }
};

struct Params {
  unsigned q;
  std::size_t n, k1, k2;
};

std::vector<EnsemblePair> ensemble_for(const Params &p) {
  return build_ensemble(companion_matrix(find_primitive_poly(p.q, p.n)), p.k1, p.k2);
}

std::string describe(const Params &p) {
  std::ostringstream s;
  s << "(q=" << p.q << ",n=" << p.n << ",k1=" << p.k1 << ",k2=" << p.k2 << ")";
  return s.str();
}

const std::vector<Params> kEnsembles{
    {2, 4, 2, 2}, {2, 6, 3, 3}, {3, 3, 2, 2}, {2, 8, 4, 4}};

Outcome balancedness() {
  Outcome o;
  std::size_t pairs = 0;
  for (const auto &p : kEnsembles) {
    const auto e = ensemble_for(p);
    const auto b1 = verify_balanced(first_codes(e));
    const auto b2 = verify_balanced(second_codes(e));
    if (!b1.balanced || b1.v != checked_pow(p.q, p.k1) - 1 || !b1.pair_count_identity)
      o.fail("C1 side of " + describe(p));
    if (!b2.balanced || b2.v != checked_pow(p.q, p.k2) - 1 || !b2.pair_count_identity)
      o.fail("C2 side of " + describe(p));
    for (const auto &pair : e) {
      ++pairs;
      if (!is_compatible_pair(pair.c1, pair.c2))
        o.fail("incompatible pair " + std::to_string(pair.index) + " of " + describe(p));
    }
  }
  if (o.pass)
    o.detail = std::to_string(pairs) + " pairs, all balanced and compatible";
  return o;
}

Outcome average_spectrum_identity() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto &p : kEnsembles) {
    const auto e = ensemble_for(p);
    for (const auto &codes : {first_codes(e), second_codes(e)}) {
      const auto av = average_spectrum(codes);
      checked += av.types.size() - 1;
      if (!av.identity_holds)
        o.fail("mismatch at " + av.first_mismatch->to_string() + " in " + describe(p));
      if (!av.upper_bound_holds)
        o.fail("upper bound in " + describe(p));
    }
  }
  if (o.pass)
    o.detail = std::to_string(checked) + " nonzero types equal exactly";
  return o;
}

// Good codes at epsilon = 0.25 per block length, for criterion 4.
std::vector<LinearCode> g_good_codes;

Outcome census() {
  Outcome o;
  std::ostringstream d;
  for (std::size_t n : {6u, 8u}) {
    const auto e = ensemble_for({2, n, n / 2, n / 2});
    const auto codes = first_codes(e);
    const auto spectra = spectra_of(codes);
    for (double eps : {0.1, 0.25, 0.5}) {
      const auto r = census_bad_codes(codes, spectra, eps);
      d << " n=" << n << ",eps=" << eps << ":" << r.bad_count << "<=" << r.z;
      if (!r.within_bound)
        o.fail("n=" + std::to_string(n) + " eps=" + std::to_string(eps) + " bad " +
               std::to_string(r.bad_count) + " > " + std::to_string(r.z));
      if (eps == 0.25)
        for (std::size_t i = 0; i < codes.size(); ++i)
          if (r.good[i])
            g_good_codes.push_back(codes[i]);
    }
  }
  if (o.pass)
    o.detail = d.str().substr(1);
  return o;
}

Outcome rcex_bound() {
  Outcome o;
  if (g_good_codes.empty()) {
    o.fail("no good codes from the census");
    return o;
  }
  constexpr double eps = 0.25;
  // n = 10 joins the block lengths of the census.
  auto codes = g_good_codes;
  {
    const auto e10 = first_codes(ensemble_for({2, 10, 5, 5}));
    const auto r = census_bad_codes(e10, eps);
    for (std::size_t i = 0; i < e10.size(); ++i)
      if (r.good[i])
        codes.push_back(e10[i]);
  }
  double min_slack = 1.0, min_inner_slack = 1.0, min_gen_slack = 1.0;
  double min_raw = INFINITY;
  for (double p : {0.01, 0.05, 0.1}) {
    const auto w = AdditiveChannel::symmetric(2, p);
    const auto er = random_coding_exponent(w, 0.5);
    for (const auto &c : codes) {
      const unsigned n = static_cast<unsigned>(c.n());
      const double types = type_count_real(n, 2);
      const double a_n = std::pow(2.0, eps * n) * (types - 1);
      const auto s = spectrum(c);
      const auto premise = check_rcex_premise(s, c.k(), a_n);
      if (!premise.holds)
        o.fail("premise fails for a good code at n=" + std::to_string(n));
      const double exact = exact_error_probability(RepresentativeTable::build(c), w);
      const double raw = a_n * types * types * std::pow(2.0, -double(n) * er.value);
      const double bound = std::min(1.0, raw);
      min_raw = std::min(min_raw, raw);
      const double inner = good_code_error_bound(n, 2, er.value, eps);
      const auto gen = exponent_over_types(w, 1.0 - double(c.k()) / n, n);
      const double gen_bound =
          a_n * types * types * std::pow(2.0, -double(n) * gen.value);
      min_slack = std::min(min_slack, bound - exact);
      min_inner_slack = std::min(min_inner_slack, std::min(1.0, inner) - exact);
      min_gen_slack = std::min(min_gen_slack, std::min(1.0, gen_bound) - exact);
      if (!(exact <= bound))
        o.fail("rcex bound violated, p=" + std::to_string(p));
      if (!(exact <= inner))
        o.fail("inner bound violated, p=" + std::to_string(p));
      if (!(exact <= gen_bound))
        o.fail("types bound violated, p=" + std::to_string(p));
    }
  }
  if (o.pass) {
    std::ostringstream d;
    d << codes.size() << " codes x 3 channels, min slack " << min_slack << " / "
      << min_inner_slack << " / " << min_gen_slack << ", smallest unclamped bound "
      << min_raw;
    o.detail = d.str();
  }
  return o;
}

Outcome lemma_gen() {
  Outcome o;
  std::size_t cases = 0;
  for (auto [n, k] : {std::pair{3u, 1u}, {4u, 1u}, {4u, 2u}})
    for (const auto &c : enumerate_codes(n, k, 2))
      for (auto p : {Rational(1, 20), Rational(1, 10), Rational(1, 5)}) {
        const std::vector<Rational> law{1 - p, p};
        const double t = 1.0 - double(k) / n;
        const double a = tight_permutation_factor(c, t);
        const auto r = permuted_failure_average_product<Rational>(c, law, a, t);
        ++cases;
        if (!r.premise_holds)
          o.fail("premise with tight a_n fails");
        if (!r.holds)
          o.fail("lhs > rhs for a [" + std::to_string(n) + "," + std::to_string(k) + "] code");
        if (!r.orbit_identity_holds || !r.orbit_bound_holds || !r.pointwise_bound_holds)
          o.fail("intermediate counting step fails");
      }
  if (o.pass)
    o.detail = std::to_string(cases) + " code/channel cases, exact lhs";
  return o;
}

std::vector<Distribution> simplex_grid(unsigned q) {
  std::vector<Distribution> out;
  for (int a = 0; a <= 10; ++a) {
    if (q == 2) {
      out.emplace_back(std::vector<double>{a / 10.0, (10 - a) / 10.0});
      continue;
    }
    for (int b = 0; a + b <= 10; ++b)
      out.emplace_back(std::vector<double>{a / 10.0, b / 10.0, (10 - a - b) / 10.0});
  }
  return out;
}

Outcome types_inequalities() {
  Outcome o;
  std::size_t checks = 0;
  for (unsigned q : {2u, 3u}) {
    const auto grid = simplex_grid(q);
    for (unsigned n = 1; n <= 12; ++n)
      for (const auto &t : enumerate_types(n, q)) {
        const double size = static_cast<double>(type_class_size(t));
        ++checks;
        if (size > std::pow(double(q), n * entropy(t)) * (1 + 1e-9))
          o.fail("class size bound at " + t.to_string());
        for (const auto &p : grid) {
          ++checks;
          const double prob = type_class_prob(p, t);
          const auto d = relative_entropy(t, p);
          const double cap = d.is_infinite() ? 0.0 : std::pow(double(q), -double(n) * d.value());
          if (prob > cap * (1 + 1e-9))
            o.fail("probability bound at " + t.to_string());
        }
      }
  }
  if (o.pass)
    o.detail = std::to_string(checks) + " inequalities";
  return o;
}

double binary_scan(double p, double r) {
  const double t = 1.0 - r;
  double best = INFINITY;
  for (int i = 0; i <= 100000; ++i) {
    const double s = i * 1e-5;
    double d = 0.0, h = 0.0;
    if (s < 1) {
      d += (1 - s) * std::log2((1 - s) / (1 - p));
      h -= (1 - s) * std::log2(1 - s);
    }
    if (s > 0) {
      d += s * std::log2(s / p);
      h -= s * std::log2(s);
    }
    best = std::min(best, d + std::max(0.0, t - h));
  }
  return best;
}

Outcome exponent_sanity() {
  Outcome o;
  double worst = 0.0;
  for (double p : {0.01, 0.05, 0.1, 0.25}) {
    const auto w = AdditiveChannel::symmetric(2, p);
    double prev = INFINITY;
    for (int i = 0; i <= 20; ++i) {
      const double v = random_coding_exponent(w, i * 0.05).value;
      if (v > prev + 1e-9)
        o.fail("not monotone at p=" + std::to_string(p));
      prev = v;
    }
    const auto one = random_coding_exponent(w, 1.0);
    if (!(std::abs(one.value) < 1e-9))
      o.fail("E_r(1) != 0 at p=" + std::to_string(p));
    if (std::abs(one.minimizer[1] - p) > 1e-4)
      o.fail("minimizer at r=1 is not W for p=" + std::to_string(p));
  }
  for (double p : {0.05, 0.1, 0.25})
    for (int i = 1; i <= 9; ++i) {
      const double r = i / 10.0;
      const double diff = std::abs(random_coding_exponent(AdditiveChannel::symmetric(2, p), r).value -
                                   binary_scan(p, r));
      worst = std::max(worst, diff);
      if (diff > 1e-4)
        o.fail("scan mismatch at p=" + std::to_string(p) + " r=" + std::to_string(r));
    }
  if (o.pass) {
    std::ostringstream d;
    d << "max deviation from scan " << worst;
    o.detail = d.str();
  }
  return o;
}

Outcome counting_and_markov() {
  Outcome o;
  std::mt19937_64 rng(20261019);
  for (int c = 0; c < 200; ++c) {
    const std::size_t members = 1 + rng() % 30, conditions = 1 + rng() % 8;
    const long long num = 1 + rng() % 40, den = 1 + rng() % 8; // a = num / den
    std::vector<std::vector<long long>> v(members, std::vector<long long>(conditions));
    std::vector<std::vector<double>> dv(members, std::vector<double>(conditions));
    std::vector<long long> sums(conditions, 0);
    for (std::size_t x = 0; x < members; ++x)
      for (std::size_t w = 0; w < conditions; ++w) {
        v[x][w] = rng() % 3 == 0 ? 0 : static_cast<long long>(rng() % 1000);
        dv[x][w] = static_cast<double>(v[x][w]);
        sums[w] += v[x][w];
      }
    // Exact: fails iff v |S| den > sum |W| num for some w.
    std::vector<std::size_t> expect;
    for (std::size_t x = 0; x < members; ++x) {
      bool fails = false;
      for (std::size_t w = 0; w < conditions; ++w)
        fails |= v[x][w] * static_cast<long long>(members) * den >
                 sums[w] * static_cast<long long>(conditions) * num;
      if (fails)
        expect.push_back(x);
    }
    const auto r = count_failing_members(dv, double(num) / double(den));
    if (r.failing != expect)
      o.fail("failing set differs from brute force in case " + std::to_string(c));
    if (static_cast<long long>(expect.size()) * num > static_cast<long long>(members) * den)
      o.fail("more than |S|/a failures in case " + std::to_string(c));
    if (!r.within_bound || !r.markov_steps_hold)
      o.fail("reported bound fails in case " + std::to_string(c));
  }
  // Markov on random discrete variables, exact rational expectations.
  for (int c = 0; c < 200; ++c) {
    const std::size_t support = 1 + rng() % 10;
    std::vector<long long> val(support), wt(support);
    long long total = 0;
    for (std::size_t i = 0; i < support; ++i) {
      val[i] = static_cast<long long>(rng() % 50);
      wt[i] = 1 + static_cast<long long>(rng() % 20);
      total += wt[i];
    }
    Rational mean = 0;
    for (std::size_t i = 0; i < support; ++i)
      mean += Rational(val[i] * wt[i], total);
    if (mean == 0)
      continue;
    for (Rational a : {Rational(1), Rational(3, 2), Rational(2), Rational(5), Rational(17, 3)}) {
      Rational tail = 0;
      for (std::size_t i = 0; i < support; ++i)
        if (Rational(val[i]) >= a * mean)
          tail += Rational(wt[i], total);
      if (tail > 1 / a)
        o.fail("Markov inequality fails in case " + std::to_string(c));
    }
  }
  if (o.pass)
    o.detail = "200 counting cases, 200 Markov cases";
  return o;
}

Outcome monte_carlo() {
  Outcome o;
  const auto w = AdditiveChannel::symmetric(2, 0.1);
  const auto c6 = ensemble_for({2, 6, 3, 3}).front().c1;
  std::ostringstream d;
  for (const auto &c : {LinearCode::span(FieldMatrix({{1, 1}}, 2)), c6}) {
    const auto r = simulate_error_probability(RepresentativeTable::build(c), w, 1000000, 12345);
    const double z = std::abs(r.estimate - *r.exact) / r.std_error;
    d << " [" << c.n() << "," << c.k() << "]: " << r.estimate << " vs " << *r.exact
      << " (" << z << " se)";
    if (!(z <= 4.0))
      o.fail("estimate off by " + std::to_string(z) + " standard errors");
  }
  if (o.pass)
    o.detail = d.str().substr(1);
  return o;
}

Outcome power_field() {
  Outcome o;
  for (std::size_t n : {2u, 3u, 4u}) {
    const auto r = verify_power_field(companion_matrix(find_primitive_poly(2, n)));
    if (r.size != checked_pow(2, static_cast<unsigned>(n)) || !r.closed_under_addition ||
        !r.closed_under_multiplication)
      o.fail("not a field for n=" + std::to_string(n));
  }
  if (o.pass)
    o.detail = "n=2,3,4 closed under + and *";
  return o;
}

} // namespace

int main() {
  const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria{
      {"balancedness", balancedness},
      {"average spectrum identity", average_spectrum_identity},
      {"bad-code census", census},
      {"random coding bound", rcex_bound},
      {"permutation averaging lemma", lemma_gen},
      {"method of types inequalities", types_inequalities},
      {"exponent sanity", exponent_sanity},
      {"counting lemma and Markov", counting_and_markov},
      {"Monte-Carlo consistency", monte_carlo},
      {"field structure of powers", power_field}};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception &e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %2zu %s (%.2fs): %s\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first, secs, o.detail.c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
