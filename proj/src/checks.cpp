#include "lieorb/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <future>
#include <limits>
#include <map>

#include "lieorb/errors.hpp"
#include "lieorb/flows.hpp"
#include "lieorb/kernels.hpp"
#include "lieorb/kkform.hpp"
#include "lieorb/symplecto.hpp"

namespace lieorb {

namespace {

constexpr int kPoints = 20;

struct Context {
  const RunConfig& cfg;
  std::shared_ptr<const Structure> s;
  bool single;  // one check requested explicitly
};

struct NotApplicable : Error {
  using Error::Error;
};

Json rational_json(const Rational& r) {
  if (r.denominator() == 1) return Json(r.numerator());
  return Json(to_string(r));
}

Json c_json(const RunConfig& cfg) {
  Json arr = Json::array();
  for (const auto& e : cfg.c) {
    if (e.exact) {
      arr.push_back(rational_json(*e.exact));
    } else if (e.value.imag() == 0.0) {
      arr.push_back(e.value.real());
    } else {
      arr.push_back(Json{{"re", e.value.real()}, {"im", e.value.imag()}});
    }
  }
  return arr;
}

Json roots_json(const RestrictedRootSystem& rs) {
  Json arr = Json::array();
  for (const auto& r : rs.roots) {
    Json alpha = Json::array();
    for (const auto& x : r.diag) alpha.push_back(rational_json(x));
    arr.push_back(Json{{"alpha", alpha}, {"mult", r.multiplicity}});
  }
  return arr;
}

std::vector<Rational> regular_default(int n) {
  std::vector<Rational> c;
  for (int i = 0; i < n; ++i) c.emplace_back(n - 1 - 2 * i);
  return c;
}

// Hyperbolic data for the real diagonal c (or the default regular element).
HyperbolicData real_data(const Context& ctx) {
  const RunConfig& cfg = ctx.cfg;
  if (!cfg.has_c()) return hyperbolic_data(ctx.s, regular_default(cfg.algebra.n));
  if (!cfg.c_real()) throw NotApplicable("needs a real diagonal c");
  if (auto ex = cfg.c_exact()) return hyperbolic_data(ctx.s, *ex);
  return hyperbolic_data(ctx.s, cfg.c_real_parts());
}

// c as an algebra element, complex entries allowed on realified algebras.
Vec c_element(const Context& ctx) {
  const auto& alg = *ctx.s->algebra;
  const RunConfig& cfg = ctx.cfg;
  if (!cfg.has_c()) {
    std::vector<double> h;
    for (const auto& r : regular_default(cfg.algebra.n)) h.push_back(to_double(r));
    return alg.diag_element(h);
  }
  if (alg.realified()) return alg.complex_diag_element(cfg.c_values());
  return alg.diag_element(cfg.c_real_parts());
}

double vec_scale(const Vec& c) { return std::max(1.0, c.cwiseAbs().maxCoeff()); }

Mat random_group(const MatrixLieAlgebra& alg, Rng& rng, double spread = 0.5) {
  return expm(alg.to_matrix(spread * random_vec(rng, alg.dim())));
}

Json ladder_json(const HyperbolicData& d) {
  Json arr = Json::array();
  for (int j = 0; j < d.grades(); ++j) arr.push_back(Json::array({d.eigenvalues[j], d.multiplicities[j]}));
  return arr;
}

// ---------------------------------------------------------------- roots

Json check_roots(const Context& ctx, Rng&) {
  const auto& alg = *ctx.s->algebra;
  const auto& tol = ctx.cfg.tol;
  const StructureResiduals sr = structure_residuals(alg, ctx.s->split);
  const RootResiduals rr = root_residuals(alg, ctx.s->split, ctx.s->roots, ctx.s->positive);
  const double k_roots = k_from_roots_check(alg, ctx.s->roots, ctx.s->positive, ctx.s->split);

  Json j;
  j["roots"] = roots_json(ctx.s->roots);
  j["dim_m"] = ctx.s->roots.m_basis.cols();
  j["dim_a"] = ctx.s->roots.a_basis.cols();
  j["positive"] = ctx.s->positive;
  j["structure"] = {{"antisymmetry", sr.antisymmetry},
                    {"jacobi", sr.jacobi},
                    {"killing_symmetry", sr.killing_symmetry},
                    {"killing_invariance", sr.killing_invariance},
                    {"killing_min_abs_eig", sr.killing_min_abs_eig},
                    {"theta_involution", sr.theta_involution},
                    {"theta_killing", sr.theta_killing},
                    {"theta_automorphism", sr.theta_automorphism},
                    {"bracket_kk", sr.bracket_kk},
                    {"bracket_kp", sr.bracket_kp},
                    {"bracket_pp", sr.bracket_pp},
                    {"killing_k_max", sr.killing_k_max},
                    {"killing_p_min", sr.killing_p_min},
                    {"inner_min_eig", sr.inner_min_eig},
                    {"ad_p_symmetry", sr.ad_p_symmetry},
                    {"dim_additivity", sr.dim_additivity}};
  j["root_residuals"] = {{"eigen", rr.eigen},
                         {"theta_pairing", rr.theta_pairing},
                         {"bracket_grading", rr.bracket_grading},
                         {"g0_cap_p", rr.g0_cap_p},
                         {"abelian", rr.abelian},
                         {"dim_bookkeeping", rr.dim_bookkeeping},
                         {"symmetric", rr.symmetric},
                         {"positive_closed", rr.positive_closed},
                         {"partition", rr.partition},
                         {"k_from_roots", k_roots}};

  const double s = tol.structural;
  bool pass = sr.antisymmetry < s && sr.jacobi < s && sr.killing_symmetry < s && sr.killing_invariance < s &&
              sr.killing_min_abs_eig > kRankGrayHigh && sr.theta_involution < s && sr.theta_killing < s &&
              sr.theta_automorphism < s && sr.bracket_kk < s && sr.bracket_kp < s && sr.bracket_pp < s &&
              sr.killing_k_max < 0 && sr.killing_p_min > 0 && sr.inner_min_eig > 0 && sr.ad_p_symmetry < s &&
              sr.dim_additivity == 0;
  const double d = tol.decomposition;
  pass = pass && rr.eigen < d && rr.theta_pairing < d && rr.bracket_grading < d && rr.g0_cap_p < d &&
         rr.abelian < d && rr.dim_bookkeeping == 0 && rr.symmetric && rr.positive_closed && rr.partition &&
         k_roots < d;

  if (alg.realified()) {
    const double kd = killing_compare_realified(alg);
    j["killing_duality"] = kd;
    pass = pass && kd < d;
  }
  if (ctx.cfg.has_c()) {
    const auto h = ctx.cfg.c_values();
    double scale = 1.0;
    for (const auto& x : h) scale = std::max(scale, std::abs(x));
    const double gap = spectrum_gap(alg, h);
    j["spectrum_gap"] = gap;
    pass = pass && gap < d * scale;
  }
  j["pass"] = pass;
  return j;
}

// ------------------------------------------------------------ parabolic

Json check_parabolic(const Context& ctx, Rng& rng) {
  const HyperbolicData d = real_data(ctx);
  const auto& tol = ctx.cfg.tol;
  const ParabolicResiduals pr = parabolic_residuals(d, rng());
  const double scale = vec_scale(d.c);
  Json j;
  j["dim_z"] = d.dim_z();
  j["dim_n"] = d.dim_n();
  j["eigenvalues"] = ladder_json(d);
  j["N0"] = d.N0;
  j["degree_bound"] = d.degree_bound;
  j["residuals"] = {{"eigen", pr.eigen},
                    {"grading", pr.grading},
                    {"killing_n_p", pr.killing_n_p},
                    {"zk_invariance", pr.zk_invariance},
                    {"projector", pr.projector},
                    {"half_dimension", pr.half_dimension},
                    {"additivity", pr.additivity}};
  j["pass"] = pr.eigen < tol.decomposition * scale && pr.grading < tol.decomposition * scale &&
              pr.killing_n_p < tol.structural * scale && pr.zk_invariance < tol.decomposition &&
              pr.projector < tol.structural && pr.half_dimension == 0 && pr.additivity == 0 &&
              d.N0 <= d.degree_bound;
  return j;
}

// ------------------------------------------------------------------- kk

Json check_kk(const Context& ctx, Rng& rng) {
  const auto& alg = *ctx.s->algebra;
  const auto& tol = ctx.cfg.tol;
  const Vec c = c_element(ctx);
  const double scale = vec_scale(c);
  std::vector<FormKind> kinds{FormKind::omega};
  if (alg.realified()) {
    kinds.push_back(FormKind::re);
    kinds.push_back(FormKind::im);
  }

  double antisym = 0, invariance = 0, closed = 0;
  bool rank_ok = true;
  double sigma_min = std::numeric_limits<double>::infinity();
  for (int p = 0; p < kPoints; ++p) {
    const Mat g = random_group(alg, rng);
    const Mat h = random_group(alg, rng);
    const Mat h_inv = h.inverse();
    const Vec w = alg.Ad(g, c);
    const Vec x = random_vec(rng, alg.dim()), y = random_vec(rng, alg.dim()), z = random_vec(rng, alg.dim());
    const double ws = std::max(1.0, w.norm());
    const Vec hw = alg.Ad(h, h_inv, w), hx = alg.Ad(h, h_inv, x), hy = alg.Ad(h, h_inv, y);
    for (FormKind k : kinds) {
      const double f = eval_form(k, alg, w, x, y);
      antisym = std::max(antisym, std::abs(f + eval_form(k, alg, w, y, x)) / ws);
      invariance = std::max(invariance, std::abs(eval_form(k, alg, hw, hx, hy) - f) / ws);
    }
    closed = std::max(closed, std::abs(closedness_check(alg, w, x, y, z)) / ws);
    if (p < 3) {
      for (FormKind k : kinds) {
        const Nondegeneracy nd = nondegeneracy_check(alg, w, k);
        rank_ok = rank_ok && nd.rank == nd.expected_rank;
        sigma_min = std::min(sigma_min, nd.normalized());
      }
    }
  }

  Json j;
  j["antisymmetry"] = antisym;
  j["invariance"] = invariance;
  j["closedness"] = closed;
  j["nondegeneracy"] = {{"rank_ok", rank_ok}, {"min_normalized_sigma", sigma_min}};
  bool pass = antisym < tol.structural && invariance < tol.decomposition && closed < tol.decomposition && rank_ok;

  if (!ctx.cfg.has_c() || ctx.cfg.c_real()) {
    const HyperbolicData d = real_data(ctx);
    const double at_base = fiber_isotropy_check(d);
    double translated = 0;
    for (int p = 0; p < kPoints; ++p) translated = std::max(translated, fiber_isotropy_check(d, random_group(alg, rng)));
    const int half = 2 * d.dim_n() - (alg.dim() - d.dim_z());
    const Nondegeneracy nd = nondegeneracy_check(alg, orbit_point(alg, random_group(alg, rng), d.c), d);
    j["fiber_isotropy"] = {{"at_base", at_base}, {"translated", translated}, {"half_dimension_defect", half}};
    j["nondegeneracy"]["complement_rank_ok"] = nd.rank == nd.expected_rank;
    pass = pass && at_base < tol.structural * scale && translated < tol.decomposition * scale && half == 0 &&
           nd.rank == nd.expected_rank;
  } else {
    j["fiber_isotropy"] = nullptr;
  }

  auto lag_json = [&](const KLagrangian& kl) {
    return Json{{"max_abs", kl.max_abs}, {"dim_k_orbit", kl.dim_k_orbit}, {"half_orbit", kl.half_orbit}};
  };
  if (alg.realified()) {
    const ExactnessVerdict v = exactness_verdict(alg, ctx.s->split, c);
    j["exactness_verdict"] = {{"re_exact", v.re_exact},
                              {"im_exact", v.im_exact},
                              {"spectrum_max_imag", v.spectrum_max_imag},
                              {"spectrum_max_real", v.spectrum_max_real},
                              {"re_k_residual", v.re_k_residual},
                              {"im_k_residual", v.im_k_residual}};
    if (v.re_exact || v.im_exact) {
      const KLagrangian kl = k_orbit_lagrangian_check(alg, ctx.s->split, c, v.re_exact ? FormKind::re : FormKind::im);
      j["k_lagrangian"] = lag_json(kl);
      pass = pass && kl.max_abs < tol.structural * scale && kl.dim_k_orbit == kl.half_orbit;
    } else {
      j["k_lagrangian"] = nullptr;
    }
  } else {
    j["exactness_verdict"] = nullptr;
    const KLagrangian kl = k_orbit_lagrangian_check(alg, ctx.s->split, c, FormKind::omega);
    j["k_lagrangian"] = lag_json(kl);
    pass = pass && kl.max_abs < tol.structural * scale && kl.dim_k_orbit == kl.half_orbit;
  }
  j["pass"] = pass;
  return j;
}

// ----------------------------------------------------------------- flow

Json check_flow(const Context& ctx, Rng& rng) {
  const HyperbolicData d = real_data(ctx);
  const auto& tol = ctx.cfg.tol;
  const int dn = d.dim_n();

  double gap = 0, rk_err = 0, tail = 0, ode = 0, oracle = 0;
  int max_degree = 0;
  std::map<int, int> hist;
  for (int s = 0; s < 50; ++s) {
    const Vec V = random_vec(rng, dn);
    const Vec U0 = random_vec(rng, dn);
    const double t = 2.0 * uniform_pm1(rng);
    const FlowPolynomial fp = flow_exact(d, V, U0);
    const NumericFlow nf = flow_numeric(d, V, U0, t);
    gap = std::max(gap, (fp.eval(t) - nf.value).cwiseAbs().maxCoeff());
    rk_err = std::max(rk_err, nf.error_estimate);
    tail = std::max(tail, fp.tail);
    ode = std::max(ode, fp.ode_residual);
    oracle = std::max(oracle, hv_oracle_residual(d, V, U0));
    const int deg = fp.degree();
    max_degree = std::max(max_degree, deg);
    ++hist[deg];
  }

  double commute = 0;
  for (int a = 0; a < dn; ++a)
    for (int b = 0; b < dn; ++b)
      commute = std::max(commute, commute_residual(d, Vec::Unit(dn, a), Vec::Unit(dn, b)));

  double roundtrip = 0;
  int worst_iters = 0;
  std::vector<std::pair<Vec, Mat>> images;
  for (int s = 0; s < 100; ++s) {
    const Vec V = random_vec(rng, dn);
    const Mat e = exp_H(d, V);
    int iters = 0;
    roundtrip = std::max(roundtrip, (invert_exp_H(d, e, &iters) - V).cwiseAbs().maxCoeff());
    worst_iters = std::max(worst_iters, iters);
    images.emplace_back(V, e);
  }
  // Injectivity on the sampled pairs: image distance against source distance.
  double min_ratio = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < images.size(); i += 2)
    min_ratio = std::min(min_ratio, (images[i].second - images[i + 1].second).norm() /
                                        (images[i].first - images[i + 1].first).norm());

  Json h = Json::object();
  for (const auto& [deg, count] : hist) h[std::to_string(deg)] = count;
  Json j;
  j["max_oracle_gap"] = gap;
  j["max_rk4_error_estimate"] = rk_err;
  j["max_commute_residual"] = commute;
  j["max_roundtrip_residual"] = roundtrip;
  j["max_newton_iterations"] = worst_iters;
  j["degree_histogram"] = h;
  j["degree_bound"] = d.degree_bound;
  j["N0"] = d.N0;
  j["max_tail"] = tail;
  j["max_ode_residual"] = ode;
  j["max_field_oracle_residual"] = oracle;
  j["injectivity_min_ratio"] = min_ratio;
  j["pass"] = gap < kOracleGap && commute < tol.decomposition && roundtrip < tol.decomposition && tail < kPolyTail &&
              ode < tol.decomposition && oracle < tol.decomposition && max_degree <= d.degree_bound &&
              min_ratio > kRankGrayLow;
  return j;
}

// ------------------------------------------------------------ symplecto

Json check_symplecto(const Context& ctx, Rng& rng) {
  const HyperbolicData d = real_data(ctx);
  const auto& alg = d.algebra();
  const auto& tol = ctx.cfg.tol;
  const double scale = vec_scale(d.c);
  const auto frame = cotangent_frame(d);

  double pb = 0, rich = 0, fd = 0, bundle = 0, wd = 0, equiv = 0, zero = 0;
  double ratio_lo = std::numeric_limits<double>::infinity(), ratio_hi = -ratio_lo;
  std::vector<CotangentPoint> pts;
  for (int p = 0; p < kPoints; ++p) {
    const CotangentPoint pt = random_cotangent_point(d, rng);
    pts.push_back(pt);
    const PullbackReport r = pullback(d, pt);
    pb = std::max(pb, r.residual);
    rich = std::max(rich, r.richardson);
    ratio_lo = std::min(ratio_lo, r.scale_ratio);
    ratio_hi = std::max(ratio_hi, r.scale_ratio);
    if (p < 5) {
      for (const auto& a : frame)
        for (const auto& b : frame)
          fd = std::max(fd, std::abs(liouville_fd(d, pt, a, b).value - liouville_eval(d, pt, a, b)));
    }
    const OrbitPoint op = phi_lambda(d, pt);
    bundle = std::max(bundle, coset_residual(d, project_pi(d, op).k, pt.k));

    const Mat m = random_Z_K(d, rng);
    const Vec moved = d.n_coords(alg.Ad(m, m.transpose(), d.n_element(pt.V)));
    wd = std::max(wd, (phi_lambda(d, {pt.k * m, pt.V}).w - phi_lambda(d, {pt.k, moved}).w).norm());

    const Mat k0 = random_K(alg, ctx.s->split, rng);
    equiv = std::max(equiv, (phi_lambda(d, {k0 * pt.k, pt.V}).w - alg.Ad(k0, k0.transpose(), op.w)).norm());

    const Vec zs = phi_lambda(d, {pt.k, Vec::Zero(d.dim_n())}).w;
    zero = std::max(zero, (zs - alg.Ad(pt.k, pt.k.transpose(), d.c)).norm());
  }
  const double section = section_lagrangian_check(d, rng, 10);

  // Distinct random points must have distinct images.
  double min_sep = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 100; ++i) {
    const CotangentPoint a = random_cotangent_point(d, rng), b = random_cotangent_point(d, rng);
    min_sep = std::min(min_sep, (phi_lambda(d, a).w - phi_lambda(d, b).w).norm());
  }

  Json j;
  j["pullback_max_residual"] = pb;
  j["pullback_richardson"] = rich;
  j["scale_ratio_range"] = Json::array({ratio_lo, ratio_hi});
  j["liouville_fd_residual"] = fd;
  j["bundle_residual"] = bundle;
  j["well_defined_residual"] = wd;
  j["equivariance_residual"] = equiv;
  j["zero_section_residual"] = zero;
  j["section_residual"] = section;
  j["injectivity_min_separation"] = min_sep;
  j["samples"] = kPoints;
  j["seed"] = ctx.cfg.seed;
  j["pullback_sign"] = kPullbackSign;
  j["pass"] = pb < tol.finite_difference && fd < tol.finite_difference && bundle < tol.decomposition &&
              wd < tol.decomposition * scale && equiv < tol.decomposition * scale && zero < tol.structural * scale &&
              section < tol.structural * scale && min_sep > kRankGrayHigh;
  return j;
}

// --------------------------------------------------------------- arnold

Json check_arnold(const Context& ctx, Rng& rng) {
  const auto& alg = *ctx.s->algebra;
  if (!alg.realified()) throw NotApplicable("needs a realified complex algebra");
  const auto& tol = ctx.cfg.tol;
  const RunConfig& cfg = ctx.cfg;
  const Vec c = c_element(ctx);
  const ExactnessVerdict v = exactness_verdict(alg, ctx.s->split, c);

  Json j;
  j["re_exact"] = v.re_exact;
  j["im_exact"] = v.im_exact;
  const bool real_case = !cfg.has_c() || cfg.c_real();
  const bool imag_case = cfg.has_c() && cfg.c_imaginary();
  if (!real_case && !imag_case) {
    j["case"] = "mixed";
    j["pass"] = !v.re_exact && !v.im_exact;
    return j;
  }

  // The cotangent model is built for X = c/2 (resp. b/2 for c = ib); see
  // the arnold_scale convention.
  std::vector<double> half;
  if (real_case) {
    const HyperbolicData full = real_data(ctx);
    for (double x : full.c_diag) half.push_back(x / 2);
  } else {
    for (double x : cfg.c_imag_parts()) half.push_back(x / 2);
  }
  const HyperbolicData dh = hyperbolic_data(ctx.s, half);
  const FormKind form = real_case ? FormKind::re : FormKind::im;

  double pb = 0, ratio_dev = 0;
  for (int p = 0; p < kPoints; ++p) {
    const CotangentPoint pt = random_cotangent_point(dh, rng);
    const PullbackReport r = pullback(dh, pt, {form, c});
    pb = std::max(pb, r.residual);
    ratio_dev = std::max(ratio_dev, std::abs(r.scale_ratio - 1.0));
  }
  j["case"] = real_case ? "real" : "imaginary";
  j["model_element_scale"] = 0.5;
  j["pullback_max_residual"] = pb;
  j["max_scale_ratio_deviation"] = ratio_dev;
  j["samples"] = kPoints;
  j["pass"] = (real_case ? v.re_exact : v.im_exact) && pb < tol.finite_difference && ratio_dev < tol.finite_difference;
  return j;
}

using CheckFn = Json (*)(const Context&, Rng&);

const std::map<std::string, CheckFn>& registry() {
  static const std::map<std::string, CheckFn> r{{"roots", check_roots},       {"parabolic", check_parabolic},
                                                {"kk", check_kk},             {"flow", check_flow},
                                                {"symplecto", check_symplecto}, {"arnold", check_arnold}};
  return r;
}

Json tolerances_json(const Tolerances& t) {
  return {{"structural", t.structural},
          {"decomposition", t.decomposition},
          {"eigen", t.eigen},
          {"finite_difference", t.finite_difference},
          {"oracle_gap", kOracleGap},
          {"poly_tail", kPolyTail},
          {"witness", kWitness},
          {"fd_step", kFdStep}};
}

}  // namespace

std::string version() { return "0.1.0"; }

Json conventions() {
  return {{"basis", "H_k = E_kk - E_k+1,k+1; E_ij (i<j, lexicographic); E_ji. Realified: each b followed by i*b"},
          {"cartan_involution", "theta(X) = -X^T"},
          {"killing", "B(X,Y) = tr(ad X ad Y)"},
          {"cotangent_pairing", "eta_V = -B(V, .)"},
          {"liouville_chart", "d_eta1(Y2) - d_eta2(Y1) - eta([Y1,Y2])"},
          {"pullback_sign", kPullbackSign},
          {"arnold_scale", 0.5}};
}

Report run(const RunConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  Context ctx{cfg, build_structure(cfg.algebra), cfg.checks.size() == 1};
  std::vector<std::string> names = cfg.checks.empty() ? known_checks() : cfg.checks;

  std::vector<std::future<Json>> futures;
  for (const auto& name : names) {
    futures.push_back(std::async(std::launch::async, [&ctx, name] {
      Rng rng = make_rng(ctx.cfg.seed, name);
      try {
        return registry().at(name)(ctx, rng);
      } catch (const NotApplicable& e) {
        if (ctx.single) throw ConfigError("check '" + name + "': " + e.what());
        return Json{{"applicable", false}, {"reason", e.what()}, {"pass", true}};
      }
    }));
  }
  Json checks = Json::object();
  bool pass = true;
  for (std::size_t i = 0; i < names.size(); ++i) {
    Json r = futures[i].get();
    pass = pass && r.at("pass").get<bool>();
    checks[names[i]] = std::move(r);
  }

  Report rep;
  rep.pass = pass;
  rep.body = {{"algebra", describe(cfg.algebra)},
              {"c", c_json(cfg)},
              {"seed", cfg.seed},
              {"checks", checks},
              {"conventions", conventions()},
              {"tolerances", tolerances_json(cfg.tol)},
              {"pass", pass}};
  const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  rep.meta = {{"version", version()},
              {"runtime_ms", ms},
              {"simd", std::string(kernels::isa_name(kernels::active_isa()))}};
  return rep;
}

Json emit_fixture(const RunConfig& cfg) {
  const auto s = build_structure(cfg.algebra);
  const auto& alg = *s->algebra;
  Json sc = Json::array();
  for (int i = 0; i < alg.dim(); ++i)
    for (int jj = 0; jj < alg.dim(); ++jj)
      for (int k = 0; k < alg.dim(); ++k) {
        const double v = alg.ad(i)(k, jj);
        if (v != 0.0) sc.push_back(Json::array({i, jj, k, v}));
      }
  Json f;
  f["algebra"] = describe(cfg.algebra);
  f["dim"] = alg.dim();
  f["labels"] = alg.labels();
  f["structure_constants"] = sc;
  f["roots"] = roots_json(s->roots);
  f["positive"] = s->positive;
  if (!cfg.has_c() || cfg.c_real()) {
    Context ctx{cfg, s, false};
    const HyperbolicData d = real_data(ctx);
    f["ladder"] = {{"c", c_json(cfg)},
                   {"eigenvalues", ladder_json(d)},
                   {"dim_z", d.dim_z()},
                   {"dim_n", d.dim_n()},
                   {"N0", d.N0}};
  }
  f["conventions"] = conventions();
  return f;
}

int exit_code(const std::exception& e) {
  if (dynamic_cast<const ConfigError*>(&e) || dynamic_cast<const DomainError*>(&e)) return 2;
  return 3;
}

}  // namespace lieorb
