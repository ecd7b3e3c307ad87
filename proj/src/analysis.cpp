#include "equiform/analysis.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>
#include <utility>

namespace equiform {

namespace {

Rational sq(const Rational& x) { return x * x; }

Rational pow_r(const Rational& x, int n) {
  Rational result(1);
  for (int i = 0; i < n; ++i) result *= x;
  return result;
}

struct Pipeline {
  MetricField metric;
  CurvatureField curvature;
};

Pipeline run_pipeline(const MotionParams& params) {
  Pipeline p;
  p.metric = first_fundamental_form(build_chart(params));
  p.curvature = scalar_curvature(p.metric, christoffel(p.metric));
  return p;
}

// phi^2 coefficient (frequency 0) of det(0, phi); strictly positive for
// every motion with s' != 0.
Rational det0_leading(const MetricField& metric) {
  return metric.det.at_t0().coeff(2, 0, Kind::Cos);
}

ObstructionReport make_report(const CoeffTable& table, int power, int freq,
                              Kind kind, const Rational& rho,
                              std::optional<Rational> expected,
                              std::string branch) {
  ObstructionReport report;
  report.id = TrigKey{power, freq, kind};
  report.value = table.value(power, freq, kind);
  report.vanished = is_zero(report.value);
  if (!is_zero(rho)) report.normalized = report.value / rho;
  report.expected = std::move(expected);
  report.branch = std::move(branch);
  return report;
}

// Re(z) and Im(z) for z = (w2 + i w7)^4.
Rational quartic_re(const MotionParams& p) {
  const Rational& w2 = p.omega[1];
  const Rational& w7 = p.omega[6];
  return pow_r(w2, 4) - Rational(6) * sq(w2) * sq(w7) + pow_r(w7, 4);
}

Rational quartic_im(const MotionParams& p) {
  const Rational& w2 = p.omega[1];
  const Rational& w7 = p.omega[6];
  return Rational(4) * w2 * w7 * (sq(w2) - sq(w7));
}

}  // namespace

Rational AlphaSet::kappa() const {
  return (Rational(1) + sq(lambda)) * alpha[2] - pow_r(lambda, 4) * sq(s_prime);
}

AlphaSet alphas_closed_form(const MotionParams& params) {
  params.validate();
  const auto& w = params.omega;  // w[k] holds omega_{k+1}
  const auto& b = params.b_prime;
  const Rational& lam = params.lambda;
  const Rational& sp = params.s_prime;

  Rational omega_mid_sq(0);  // sum_{i=2}^{11} omega_i^2
  for (int i = 1; i <= 10; ++i) omega_mid_sq += sq(w[i]);
  Rational b_sq(0);
  for (int i = 0; i < 7; ++i) b_sq += sq(b[i]);
  Rational omega_tail_sq(0);  // sum_{i=12}^{15} omega_i^2
  for (int i = 11; i <= 14; ++i) omega_tail_sq += sq(w[i]);

  AlphaSet a;
  a.lambda = lam;
  a.s_prime = sp;

  a.alpha[0] = sq(sp) + sq(w[0]) + omega_mid_sq / 2 + b_sq;
  a.alpha[1] = Rational(2) * lam *
               (b[0] * w[1] + b[1] * w[6] + b[2] * sp -
                (b[3] * w[11] + b[4] * w[12] + b[5] * w[13] + b[6] * w[14]));
  a.alpha[2] = sq(lam) * (sq(sp) + sq(w[1]) + sq(w[6]) + omega_tail_sq);
  {
    Rational cross(0);  // sum_{i=1}^{6} b'_{i+1} omega_i
    for (int i = 0; i < 6; ++i) cross += b[i + 1] * w[i];
    a.alpha[3] = Rational(2) * (b[0] * sp - cross);
  }
  {
    Rational cross(0);  // sum_{i=3}^{6} omega_i omega_{i+9}
    for (int i = 2; i <= 5; ++i) cross += w[i] * w[i + 9];
    a.alpha[4] = Rational(2) * lam * (-w[0] * w[6] + cross);
  }
  {
    Rational cross(0);  // sum_{i=3}^{7} b'_i omega_{i+4}
    for (int i = 2; i <= 6; ++i) cross += b[i] * w[i + 4];
    a.alpha[5] = Rational(2) * (b[0] * w[0] + b[1] * sp - cross);
  }
  {
    Rational cross(0);  // sum_{i=8}^{11} omega_i omega_{i+4}
    for (int i = 7; i <= 10; ++i) cross += w[i] * w[i + 4];
    a.alpha[6] = Rational(2) * lam * (w[0] * w[1] + cross);
  }
  {
    Rational diff(0);
    for (int i = 1; i <= 5; ++i) diff += sq(w[i]) - sq(w[i + 5]);
    a.alpha[7] = diff / 2;
  }
  {
    Rational cross(0);
    for (int i = 1; i <= 5; ++i) cross += w[i] * w[i + 5];
    a.alpha[8] = cross;
  }
  a.alpha[9] = (Rational(1) + sq(lam)) * sq(sp) + sq(w[0]) + omega_mid_sq / 2 +
               sq(lam) * (sq(w[1]) + sq(w[6]) + omega_tail_sq);
  return a;
}

AlphaSet alphas_printed(const MotionParams& params) {
  // Start from the corrected forms and reapply the three slips, so the
  // diff against alphas_closed_form stays visible in reports.
  AlphaSet a = alphas_closed_form(params);
  const auto& w = params.omega;
  const auto& b = params.b_prime;
  const Rational& lam = params.lambda;

  Rational b_sq(0);
  for (int i = 0; i < 7; ++i) b_sq += sq(b[i]);
  a.alpha[0] -= b_sq / 2;                                   // halved b' sum
  a.alpha[1] += Rational(2) * lam * b[1] * (w[1] - w[6]);   // b2' w2 for b2' w7
  a.alpha[9] += sq(lam) * (pow_r(w[1], 7) - sq(w[6]));      // w2^7 for w7^2
  return a;
}

std::vector<AlphaCorrection> alpha_corrections(const MotionParams& params) {
  AlphaSet printed = alphas_printed(params);
  AlphaSet corrected = alphas_closed_form(params);
  const char* notes[10] = {
      "b' quadratic term enters unhalved",
      "second term is b2' omega_7, not b2' omega_2",
      "", "", "", "", "", "", "",
      "omega_2^7 reads omega_7^2",
  };
  std::vector<AlphaCorrection> out;
  for (int i = 0; i < 10; ++i) {
    AlphaCorrection c;
    c.index = i;
    c.printed = printed[i];
    c.corrected = corrected[i];
    c.agree = c.printed == c.corrected;
    c.note = notes[i];
    out.push_back(std::move(c));
  }
  return out;
}

MetricExpansionReport verify_metric_expansion(const MotionParams& params) {
  return verify_metric_expansion(params, alphas_closed_form(params));
}

MetricExpansionReport verify_metric_expansion(const MotionParams& params,
                                              const AlphaSet& a) {
  params.validate();
  const auto& w = params.omega;
  const auto& b = params.b_prime;
  const Rational& lam = params.lambda;
  const Rational& sp = params.s_prime;
  const Rational one_plus_l2 = Rational(1) + sq(lam);

  using TP = TrigPoly;
  auto c = [](Rational v) { return TP::constant(std::move(v)); };
  auto term = [](int power, int freq, Kind kind, Rational v) {
    return TP::term(power, freq, kind, std::move(v));
  };

  // g11 = a0 + a1 phi + a2 phi^2 + (a3 + a4 phi) cos + (a5 + a6 phi) sin
  //       + a7 cos 2phi + a8 sin 2phi.
  TP g11 = c(a[0]) + term(1, 0, Kind::Cos, a[1]) + term(2, 0, Kind::Cos, a[2]) +
           term(0, 1, Kind::Cos, a[3]) + term(1, 1, Kind::Cos, a[4]) +
           term(0, 1, Kind::Sin, a[5]) + term(1, 1, Kind::Sin, a[6]) +
           term(0, 2, Kind::Cos, a[7]) + term(0, 2, Kind::Sin, a[8]);

  TP g12_t0 = c(lam * b[2] - w[0]) + term(1, 0, Kind::Cos, sq(lam) * sp) +
              term(0, 1, Kind::Cos, b[1] - lam * w[1]) +
              term(1, 1, Kind::Cos, lam * w[6]) +
              term(0, 1, Kind::Sin, -(b[0] + lam * w[6])) +
              term(1, 1, Kind::Sin, -lam * w[1]);
  TP g12_t1 = c(a[1]) + term(1, 0, Kind::Cos, Rational(2) * a[2]) +
              term(0, 1, Kind::Cos, a[4] + a[5]) + term(1, 1, Kind::Cos, a[6]) +
              term(0, 1, Kind::Sin, a[6] - a[3]) + term(1, 1, Kind::Sin, -a[4]) +
              term(0, 2, Kind::Cos, Rational(2) * a[8]) +
              term(0, 2, Kind::Sin, Rational(-2) * a[7]);

  TP g22_t2 = c(a[9]) + term(0, 1, Kind::Cos, a[6]) +
              term(0, 2, Kind::Cos, -a[7]) + term(0, 1, Kind::Sin, -a[4]) +
              term(0, 2, Kind::Sin, -a[8]);

  TPoly expected_g11{g11};
  TPoly expected_g12 = TPoly::from_coeffs({g12_t0, g12_t1.scaled(Rational(1, 2))});
  TPoly expected_g22 = TPoly::from_coeffs(
      {c(one_plus_l2), c(Rational(2) * sp * one_plus_l2), g22_t2});

  MetricField metric = first_fundamental_form(build_chart(params));
  MetricExpansionReport report;
  if (metric.g11 != expected_g11) {
    report.mismatch = "g11";
  } else if (metric.g12 != expected_g12) {
    report.mismatch = "g12";
  } else if (metric.g22 != expected_g22) {
    report.mismatch = "g22";
  } else {
    report.ok = true;
  }
  return report;
}

Rational curvature_normalization() { return Rational(-2); }

std::vector<ObstructionReport> theorem31_forward(const MotionParams& params) {
  params.validate();
  for (int k = 0; k < 15; ++k) {
    if (!is_zero(params.omega[k])) {
      throw std::invalid_argument(
          "theorem31_forward requires omega_1..omega_15 = 0");
    }
  }
  Pipeline p = run_pipeline(params);
  std::vector<ObstructionReport> out;
  for (const auto& [key, value] : p.curvature.coeff_num.entries) {
    ObstructionReport report;
    report.id = key;
    report.value = value;
    report.vanished = false;
    report.branch = "forward";
    out.push_back(std::move(report));
  }
  return out;
}

std::vector<ObstructionReport> theorem31_converse_cases(
    const MotionParams& params) {
  params.validate();
  AlphaSet a = alphas_closed_form(params);
  Pipeline p = run_pipeline(params);
  const CoeffTable& table = p.curvature.coeff_num;
  const Rational rho = curvature_normalization();

  const bool w27_zero = is_zero(params.omega[1]) && is_zero(params.omega[6]);
  const bool a78_zero = is_zero(a[7]) && is_zero(a[8]);
  const bool a46_zero = is_zero(a[4]) && is_zero(a[6]);

  std::vector<ObstructionReport> out;
  auto push = [&](int power, int freq, Kind kind,
                  std::optional<Rational> expected, const char* branch) {
    out.push_back(
        make_report(table, power, freq, kind, rho, std::move(expected), branch));
  };

  if (!w27_zero) {
    if (!a78_zero) {
      push(4, 6, Kind::Cos, corrected_a46(params), "root");
      push(4, 6, Kind::Sin, corrected_b46(params), "root");
    } else {
      const char* branch = "alpha7=alpha8=0";
      push(4, 6, Kind::Cos, corrected_a46(params), branch);
      push(4, 6, Kind::Sin, corrected_b46(params), branch);
      push(4, 5, Kind::Cos, corrected_a45(params), branch);
      push(4, 5, Kind::Sin, corrected_b45(params), branch);
      if (a46_zero) {
        branch = "alpha4=alpha6=alpha7=alpha8=0";
        push(4, 4, Kind::Cos, corrected_a44(params), branch);
        push(4, 4, Kind::Sin, corrected_b44(params), branch);
      }
    }
    return out;
  }

  // omega_2 = omega_7 = 0: the (4,6), (4,5), (4,4) pairs all carry the
  // vanishing quartic factor.
  push(4, 6, Kind::Cos, corrected_a46(params), "omega2=omega7=0");
  push(4, 6, Kind::Sin, corrected_b46(params), "omega2=omega7=0");
  if (!a78_zero) {
    const char* branch = "omega2=omega7=0, alpha7/alpha8 live";
    push(4, 1, Kind::Cos, corrected_a41(params), branch);
    push(4, 1, Kind::Sin, corrected_b41(params), branch);
    if (a46_zero) {
      push(4, 2, Kind::Cos, corrected_a42(params), branch);
      push(4, 2, Kind::Sin, corrected_b42(params), branch);
    }
  } else if (!a46_zero) {
    const char* branch = "omega2=omega7=0, alpha4/alpha6 live";
    push(4, 1, Kind::Cos, corrected_a41(params), branch);
    push(4, 1, Kind::Sin, corrected_b41(params), branch);
    push(4, 0, Kind::Cos, std::nullopt, branch);
  } else {
    push(4, 0, Kind::Cos, corrected_a40_case_a(params),
         "omega2=omega7=0, alpha4..alpha8=0");
  }
  return out;
}

std::vector<ObstructionReport> theorem32_check(const MotionParams& params,
                                               const Rational& k) {
  Pipeline p = run_pipeline(params);
  return theorem32_check(p.metric, p.curvature, params, k);
}

std::vector<ObstructionReport> theorem32_check(const MetricField& metric,
                                               const CurvatureField& field,
                                               const MotionParams& params,
                                               const Rational& k) {
  if (is_zero(k)) {
    throw std::invalid_argument("theorem32_check requires K != 0");
  }
  params.validate();
  const TrigPoly pmkq = field.k0_num - field.k0_den.scaled(k);
  CoeffTable table = pmkq.extract_coeffs();

  // Certified scales of the P - K*Q identity displays: the (6,6) pair sits
  // at a constant factor 2, the (6,0) entry at 2*kappa^2 where kappa is the
  // leading phi^2 coefficient of det(0, phi).
  const Rational rho66(2);
  const Rational rho60 = Rational(2) * sq(det0_leading(metric));

  const bool forced = is_zero(params.omega[1]) && is_zero(params.omega[6]);
  const char* branch = forced ? "omega2=omega7=0" : "generic";

  std::vector<ObstructionReport> out;
  out.push_back(make_report(table, 6, 6, Kind::Cos, rho66,
                            corrected_a66(params, k), branch));
  out.push_back(make_report(table, 6, 6, Kind::Sin, rho66,
                            corrected_b66(params, k), branch));
  out.push_back(make_report(
      table, 6, 0, Kind::Cos, rho60,
      forced ? std::optional<Rational>(corrected_a60(params, k)) : std::nullopt,
      branch));
  return out;
}

Rational corrected_a46(const MotionParams& p) {
  AlphaSet a = alphas_closed_form(p);
  return pow_r(p.lambda, 4) *
         (a[8] * quartic_im(p) - a[7] * quartic_re(p)) / 4;
}

Rational corrected_b46(const MotionParams& p) {
  AlphaSet a = alphas_closed_form(p);
  return -pow_r(p.lambda, 4) *
         (a[7] * quartic_im(p) + a[8] * quartic_re(p)) / 4;
}

Rational corrected_a45(const MotionParams& p) {
  AlphaSet a = alphas_closed_form(p);
  return pow_r(p.lambda, 4) *
         (a[4] * quartic_im(p) + a[6] * quartic_re(p)) / 4;
}

Rational corrected_b45(const MotionParams& p) {
  AlphaSet a = alphas_closed_form(p);
  return pow_r(p.lambda, 4) *
         (a[6] * quartic_im(p) - a[4] * quartic_re(p)) / 4;
}

Rational corrected_a44(const MotionParams& p) {
  AlphaSet a = alphas_closed_form(p);
  return pow_r(p.lambda, 4) * a[9] * quartic_re(p) / 2;
}

Rational corrected_b44(const MotionParams& p) {
  AlphaSet a = alphas_closed_form(p);
  return pow_r(p.lambda, 4) * a[9] * quartic_im(p) / 2;
}

Rational corrected_a40_case_a(const MotionParams& p) {
  AlphaSet a = alphas_closed_form(p);
  const Rational l2 = sq(p.lambda);
  const Rational l4 = sq(l2);
  const Rational sp2 = sq(p.s_prime);
  Rational second = (l2 + 1) * a[2] * (a[9] - a[2]) +
                    sp2 * ((l4 - 1) * a[2] - l4 * a[9]);
  return Rational(4) * a.kappa() * second;
}

Rational corrected_a41(const MotionParams& p) {
  AlphaSet a = alphas_closed_form(p);
  return Rational(4) * sq(p.lambda) * sq(p.s_prime) * a[6] * a.kappa();
}

Rational corrected_b41(const MotionParams& p) {
  AlphaSet a = alphas_closed_form(p);
  return Rational(-4) * sq(p.lambda) * sq(p.s_prime) * a[4] * a.kappa();
}

Rational corrected_a42(const MotionParams& p) {
  AlphaSet a = alphas_closed_form(p);
  return Rational(-4) * a[7] * sq(a.kappa());
}

Rational corrected_b42(const MotionParams& p) {
  AlphaSet a = alphas_closed_form(p);
  return Rational(-4) * a[8] * sq(a.kappa());
}

Rational corrected_a66(const MotionParams& p, const Rational& k) {
  const Rational& w2 = p.omega[1];
  const Rational& w7 = p.omega[6];
  // Re (w7 + i w2)^6
  Rational sextic = pow_r(w7, 6) - Rational(15) * pow_r(w7, 4) * sq(w2) +
                    Rational(15) * sq(w7) * pow_r(w2, 4) - pow_r(w2, 6);
  return pow_r(p.lambda, 6) * k * sextic / 16;
}

Rational corrected_b66(const MotionParams& p, const Rational& k) {
  const Rational& w2 = p.omega[1];
  const Rational& w7 = p.omega[6];
  Rational mixed = Rational(3) * pow_r(w7, 4) -
                   Rational(10) * sq(w7) * sq(w2) + Rational(3) * pow_r(w2, 4);
  return -pow_r(p.lambda, 6) * k * w2 * w7 * mixed / 8;
}

Rational corrected_a60(const MotionParams& p, const Rational& k) {
  AlphaSet a = alphas_closed_form(p);
  return Rational(-2) * k * a.kappa();
}

namespace {

// Dyadic draw k/64 with k in [-128, 128].
Rational draw_value(std::mt19937_64& rng) {
  long k = static_cast<long>(rng() % 257) - 128;
  Rational v(k, 64);
  v.canonicalize();
  return v;
}

Rational draw_nonzero(std::mt19937_64& rng) {
  // |k| >= 7 keeps |v| >= 0.1 and clear of degenerate numerics.
  for (;;) {
    long k = static_cast<long>(rng() % 257) - 128;
    if (k <= -7 || k >= 7) {
      Rational v(k, 64);
      v.canonicalize();
      return v;
    }
  }
}

Rational draw_positive(std::mt19937_64& rng) {
  long k = 7 + static_cast<long>(rng() % 122);  // [7, 128] -> [0.109, 2]
  Rational v(k, 64);
  v.canonicalize();
  return v;
}

}  // namespace

MotionParams draw_params(std::mt19937_64& rng, const DrawOptions& options) {
  MotionParams params;
  params.lambda =
      options.lambda_positive ? draw_positive(rng) : draw_nonzero(rng);
  if (options.s_prime_positive) {
    params.s_prime = draw_positive(rng);
  } else if (options.s_prime_nonzero) {
    params.s_prime = draw_nonzero(rng);
  } else {
    params.s_prime = draw_value(rng);
  }
  for (int k = 0; k < 21; ++k) {
    if (options.omega_zero[k]) {
      params.omega[k] = 0;
    } else if (options.omega_nonzero[k]) {
      params.omega[k] = draw_nonzero(rng);
    } else {
      params.omega[k] = draw_value(rng);
    }
  }
  for (int i = 0; i < 7; ++i) params.b_prime[i] = draw_value(rng);
  return params;
}

MotionParams branch_draw(CaseBranch branch, std::mt19937_64& rng) {
  DrawOptions options;
  options.s_prime_nonzero = true;
  for (int k = 0; k < 15; ++k) options.omega_zero[k] = true;

  MotionParams params = draw_params(rng, options);
  Rational c = draw_nonzero(rng);

  switch (branch) {
    case CaseBranch::Root: {
      params.omega[1] = c;
      params.omega[6] = draw_nonzero(rng);
      // almost every such draw has alpha_7 or alpha_8 nonzero; redraw the
      // measure-zero exceptions
      while (true) {
        AlphaSet a = alphas_closed_form(params);
        if (!is_zero(a[7]) || !is_zero(a[8])) break;
        params.omega[1] = draw_nonzero(rng);
        params.omega[6] = draw_nonzero(rng);
      }
      break;
    }
    case CaseBranch::QuartetZeroed:
      // (omega_2, omega_3, omega_7, omega_8) = (c, 2c, 2c, -c) kills
      // alpha_7 and alpha_8 while (omega_2 + i omega_7)^4 stays away from
      // both axes; omega_1 = d keeps alpha_4, alpha_6 alive.
      params.omega[1] = c;
      params.omega[2] = c * 2;
      params.omega[6] = c * 2;
      params.omega[7] = -c;
      params.omega[0] = draw_nonzero(rng);
      break;
    case CaseBranch::QuartetPairZeroed:
      params.omega[1] = c;
      params.omega[2] = c * 2;
      params.omega[6] = c * 2;
      params.omega[7] = -c;
      break;
    case CaseBranch::ZeroFreqTail:
      params.omega[2] = c;
      params.omega[3] = c;
      params.omega[7] = c;
      params.omega[8] = -c;
      params.omega[0] = draw_value(rng);
      params.omega[13] = draw_value(rng);
      break;
    case CaseBranch::PhiLinear:
      params.omega[2] = c;
      params.omega[3] = c;
      params.omega[7] = c;
      params.omega[8] = -c;
      params.omega[11] = draw_nonzero(rng);
      break;
    case CaseBranch::SecondHarmonic: {
      params.omega[2] = c;
      Rational e = draw_nonzero(rng);
      while (sq(e) == sq(c)) e = draw_nonzero(rng);
      params.omega[7] = e;
      break;
    }
  }
  return params;
}

ExampleMotionReport example_motion_check(const Rational& mu,
                                         const Rational& lambda,
                                         const Rational& s_prime,
                                         const std::array<Rational, 7>& b_prime) {
  if (is_zero(mu)) {
    throw std::invalid_argument("the example motion requires mu != 0");
  }
  const double m = to_double(mu);
  using Entry = std::function<double(double)>;
  auto zero = [](double) { return 0.0; };
  auto cos_t = [](double t) { return std::cos(t); };
  auto cos_mt = [m](double t) { return std::cos(m * t); };
  auto sin_mt = [m](double t) { return std::sin(m * t); };
  auto neg_sin_mt = [m](double t) { return -std::sin(m * t); };
  auto sts = [m](double t) { return std::sin(t) * std::sin(m * t); };
  auto neg_sts = [m](double t) { return -std::sin(t) * std::sin(m * t); };
  auto smt_cmt = [m](double t) { return std::sin(m * t) * std::cos(m * t); };
  auto neg_ct_smt = [m](double t) { return -std::cos(t) * std::sin(m * t); };

  // The printed example rotation, row by row.
  Entry entries[7][7] = {
      {cos_t, zero, zero, zero, zero, sts, zero},
      {zero, cos_mt, zero, zero, sts, zero, zero},
      {zero, zero, cos_mt, zero, zero, zero, neg_sts},
      {zero, zero, zero, cos_mt, sin_mt, zero, zero},
      {zero, zero, zero, neg_sin_mt, cos_mt, zero, smt_cmt},
      {neg_sts, zero, zero, zero, zero, cos_mt, sin_mt},
      {sts, zero, zero, zero, neg_sin_mt, neg_ct_smt, cos_mt},
  };

  ExampleMotionReport report;
  report.params.lambda = lambda;
  report.params.s_prime = s_prime;
  report.params.b_prime = b_prime;
  report.params.omega[15] = mu;  // (4,5) slot
  report.params.omega[19] = mu;  // (5,7) slot
  report.params.omega[20] = mu;  // (6,7) slot

  Mat7 expected = omega_matrix(report.params);

  const double h = 1e-4;
  double max_error = 0.0;
  bool ok = true;
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 7; ++j) {
      auto stencil = [&](double step) {
        return (entries[i][j](step) - entries[i][j](-step)) / (2.0 * step);
      };
      double derivative = (4.0 * stencil(h / 2.0) - stencil(h)) / 3.0;
      double target = to_double(expected[i][j]);
      double error = std::fabs(derivative - target);
      max_error = std::max(max_error, error);
      if (error > 1e-9) ok = false;
    }
  }
  report.pattern_ok = ok;
  report.max_derivative_error = max_error;

  // The printed matrix is not exactly orthogonal away from t = 0; record
  // the defect, only Adot(0) is consumed by the motion.
  double defect = 0.0;
  const double t0 = 0.5;
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 7; ++j) {
      double dot = 0.0;
      for (int k = 0; k < 7; ++k) {
        dot += entries[i][k](t0) * entries[j][k](t0);
      }
      defect = std::max(defect, std::fabs(dot - (i == j ? 1.0 : 0.0)));
    }
  }
  report.orthogonality_defect = defect;
  return report;
}

}  // namespace equiform
