#include "tsgpr/gpr.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>

#include "tsgpr/lbfgs.hpp"

namespace tsgpr {

// ---------------- L-BFGS ----------------

Eigen::VectorXd fd_gradient(const std::function<double(const Eigen::VectorXd&)>& f,
                            const Eigen::VectorXd& x, double step) {
  Eigen::VectorXd g(x.size());
  Eigen::VectorXd xp = x;
  for (int i = 0; i < x.size(); ++i) {
    const double xi = x[i];
    xp[i] = xi + step;
    const double fp = f(xp);
    xp[i] = xi - step;
    const double fm = f(xp);
    xp[i] = xi;
    g[i] = (fp - fm) / (2.0 * step);
  }
  return g;
}

namespace {

// Strong-Wolfe line search (bracket + zoom with bisection refinement).
// Returns the accepted step, or 0 if no acceptable step was found.
double wolfe_line_search(const std::function<double(const Eigen::VectorXd&)>& f,
                         const Eigen::VectorXd& x, const Eigen::VectorXd& d, double f0,
                         const Eigen::VectorXd& g0, const LbfgsOptions& opts, double fd_step,
                         double& f_out, Eigen::VectorXd& x_out, Eigen::VectorXd& g_out) {
  const double dg0 = g0.dot(d);
  if (dg0 >= 0.0) return 0.0;
  const auto phi = [&](double a) { return f(x + a * d); };

  double a_prev = 0.0, f_prev = f0;
  double a = 1.0;
  double a_lo = 0.0, a_hi = 0.0, f_lo = f0;
  bool bracketed = false;
  for (int it = 0; it < 25 && !bracketed; ++it) {
    const double fa = phi(a);
    if (fa > f0 + opts.c1 * a * dg0 || (it > 0 && fa >= f_prev)) {
      a_lo = a_prev;
      f_lo = f_prev;
      a_hi = a;
      bracketed = true;
      break;
    }
    const Eigen::VectorXd ga = fd_gradient(f, x + a * d, fd_step);
    const double dga = ga.dot(d);
    if (std::abs(dga) <= -opts.c2 * dg0) {
      f_out = fa;
      x_out = x + a * d;
      g_out = ga;
      return a;
    }
    if (dga >= 0.0) {
      a_lo = a;
      f_lo = fa;
      a_hi = a_prev;
      bracketed = true;
      break;
    }
    a_prev = a;
    f_prev = fa;
    a *= 2.0;
  }
  if (!bracketed) return 0.0;

  for (int it = 0; it < 40; ++it) {
    const double am = 0.5 * (a_lo + a_hi);
    const double fm = phi(am);
    if (fm > f0 + opts.c1 * am * dg0 || fm >= f_lo) {
      a_hi = am;
    } else {
      const Eigen::VectorXd gm = fd_gradient(f, x + am * d, fd_step);
      const double dgm = gm.dot(d);
      if (std::abs(dgm) <= -opts.c2 * dg0) {
        f_out = fm;
        x_out = x + am * d;
        g_out = gm;
        return am;
      }
      if (dgm * (a_hi - a_lo) >= 0.0) a_hi = a_lo;
      a_lo = am;
      f_lo = fm;
    }
    if (std::abs(a_hi - a_lo) < opts.step_tolerance) break;
  }
  // fall back to the sufficient-decrease point if we have one
  const double am = 0.5 * (a_lo + a_hi);
  const double fm = phi(am);
  if (fm < f0) {
    f_out = fm;
    x_out = x + am * d;
    g_out = fd_gradient(f, x_out, fd_step);
    return am;
  }
  return 0.0;
}

}  // namespace

LbfgsResult lbfgs_minimize(const std::function<double(const Eigen::VectorXd&)>& f,
                           const Eigen::VectorXd& x0, const LbfgsOptions& opts, double fd_step) {
  LbfgsResult res;
  res.x = x0;
  res.f = f(x0);
  Eigen::VectorXd g = fd_gradient(f, res.x, fd_step);

  std::deque<Eigen::VectorXd> s_hist, y_hist;
  std::deque<double> rho_hist;

  for (int iter = 0; iter < opts.max_iterations; ++iter) {
    res.iterations = iter;
    if (g.norm() < opts.grad_tolerance) break;

    // two-loop recursion
    Eigen::VectorXd q = g;
    std::vector<double> alpha(s_hist.size());
    for (int i = static_cast<int>(s_hist.size()) - 1; i >= 0; --i) {
      alpha[i] = rho_hist[i] * s_hist[i].dot(q);
      q -= alpha[i] * y_hist[i];
    }
    if (!s_hist.empty()) {
      const double gamma = s_hist.back().dot(y_hist.back()) / y_hist.back().squaredNorm();
      q *= gamma;
    }
    for (size_t i = 0; i < s_hist.size(); ++i) {
      const double beta = rho_hist[i] * y_hist[i].dot(q);
      q += (alpha[i] - beta) * s_hist[i];
    }
    Eigen::VectorXd d = -q;
    if (d.dot(g) >= 0.0) d = -g;  // restore descent

    double f_new = res.f;
    Eigen::VectorXd x_new, g_new;
    const double step = wolfe_line_search(f, res.x, d, res.f, g, opts, fd_step, f_new, x_new, g_new);
    if (step == 0.0) {
      if (iter == 0) res.line_search_failed_at_start = true;
      break;
    }

    const Eigen::VectorXd s = x_new - res.x;
    const Eigen::VectorXd y = g_new - g;
    const double sy = s.dot(y);
    if (sy > 1e-12 * s.norm() * y.norm()) {
      s_hist.push_back(s);
      y_hist.push_back(y);
      rho_hist.push_back(1.0 / sy);
      if (static_cast<int>(s_hist.size()) > opts.history) {
        s_hist.pop_front();
        y_hist.pop_front();
        rho_hist.pop_front();
      }
    }
    const double df = res.f - f_new;
    res.x = x_new;
    res.f = f_new;
    g = g_new;
    if (df < 1e-12 * (1.0 + std::abs(res.f)) && s.norm() < opts.step_tolerance) break;
  }
  return res;
}

// ---------------- Matern 5/2 GPR ----------------

double matern52(double r, const Hyperparameters& hp) {
  const double a = std::sqrt(5.0) * r / hp.length_scale;
  return hp.signal_variance * (1.0 + a + 5.0 * r * r / (3.0 * hp.length_scale * hp.length_scale)) *
         std::exp(-a);
}

double matern52_dz2(double z, double z2, const Hyperparameters& hp) {
  const double u = z - z2;
  const double r = std::abs(u);
  const double ell = hp.length_scale;
  return hp.signal_variance * (5.0 * u / (3.0 * ell * ell)) * (1.0 + std::sqrt(5.0) * r / ell) *
         std::exp(-std::sqrt(5.0) * r / ell);
}

Eigen::MatrixXd gram(const Eigen::MatrixXd& Z, const Hyperparameters& hp,
                     const Eigen::VectorXd& nuggets) {
  const Eigen::Index n = Z.rows();
  Eigen::MatrixXd K(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      const double k = matern52((Z.row(i) - Z.row(j)).norm(), hp);
      K(i, j) = k;
      K(j, i) = k;
    }
    K(i, i) += nuggets[i];
  }
  return K;
}

Eigen::LLT<Eigen::MatrixXd> cholesky_with_jitter(Eigen::MatrixXd K) {
  Eigen::LLT<Eigen::MatrixXd> llt(K);
  if (llt.info() == Eigen::Success) return llt;
  const double jitter = 1e-10 * K.trace() / static_cast<double>(K.rows());
  K.diagonal().array() += jitter;
  llt.compute(K);
  if (llt.info() != Eigen::Success) throw NotPositiveDefinite();
  return llt;
}

void GprModel::refactorize() {
  if (inputs.rows() < 1) throw TooFewPoints("GPR needs at least one training point");
  if (nuggets.size() != inputs.rows()) throw ConfigError("nugget schedule length mismatch");
  llt_ = cholesky_with_jitter(gram(inputs, hp, nuggets));
  alpha_ = llt_.solve(outputs);
}

double GprModel::nlml() const {
  // Literal Eq.-24 matrix form: quadratic term summed over output
  // columns, log-determinant counted once.
  const double quad = 0.5 * (outputs.array() * alpha_.array()).sum();
  const double logdet = Eigen::MatrixXd(llt_.matrixL()).diagonal().array().log().sum();
  return quad + logdet + 0.5 * static_cast<double>(inputs.rows()) * std::log(2.0 * M_PI);
}

Prediction GprModel::predict(const Eigen::VectorXd& z) const {
  const Eigen::Index n = inputs.rows();
  Eigen::VectorXd k(n);
  for (Eigen::Index i = 0; i < n; ++i) k[i] = matern52((inputs.row(i).transpose() - z).norm(), hp);
  Prediction p;
  p.mean = alpha_.transpose() * k;
  const Eigen::VectorXd v = llt_.solve(k);
  p.variance = std::max(0.0, matern52(0.0, hp) - k.dot(v));
  return p;
}

double GprModel::predict_derivative(double z) const {
  if (inputs.cols() != 1 || outputs.cols() != 1)
    throw ConfigError("derivative posterior requires scalar inputs and outputs");
  const Eigen::Index n = inputs.rows();
  double acc = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) acc += matern52_dz2(inputs(i, 0), z, hp) * alpha_(i, 0);
  return acc;
}

Hyperparameters default_init(const Eigen::MatrixXd& Z, const Eigen::MatrixXd& Y) {
  Hyperparameters hp;
  const double sd = std::sqrt((Y.array() - Y.mean()).square().mean());
  hp.signal_variance = sd > 0.0 ? sd * sd : 1.0;
  std::vector<double> dists;
  for (Eigen::Index i = 0; i < Z.rows(); ++i)
    for (Eigen::Index j = i + 1; j < Z.rows(); ++j) {
      const double d = (Z.row(i) - Z.row(j)).norm();
      if (d > 0.0) dists.push_back(d);
    }
  if (dists.empty()) {
    hp.length_scale = 1.0;
  } else {
    std::nth_element(dists.begin(), dists.begin() + dists.size() / 2, dists.end());
    hp.length_scale = dists[dists.size() / 2];
  }
  return hp;
}

GprModel optimize(const Eigen::MatrixXd& Z, const Eigen::MatrixXd& Y,
                  const Eigen::VectorXd& nuggets, const OptimizeOptions& opts,
                  const PenaltyFn& penalty) {
  if (Z.rows() != Y.rows()) throw ConfigError("input/output row mismatch");
  if (Z.rows() < 2 && Y.norm() == 0.0)
    throw TooFewPoints("need n >= 2 or a nonzero target to identify hyperparameters");

  GprModel model;
  model.inputs = Z;
  model.outputs = Y;
  model.nuggets = nuggets;

  const Hyperparameters init = opts.init.signal_variance > 0.0 ? opts.init : default_init(Z, Y);
  Eigen::VectorXd x0(2);
  x0 << 0.5 * std::log(init.signal_variance), std::log(init.length_scale);

  const auto objective = [&](const Eigen::VectorXd& x) {
    model.hp.signal_variance = std::exp(2.0 * x[0]);
    model.hp.length_scale = std::exp(x[1]);
    try {
      model.refactorize();
    } catch (const NotPositiveDefinite&) {
      return 1e30;
    }
    double v = model.nlml();
    if (penalty) v += penalty(model);
    return std::isfinite(v) ? v : 1e30;
  };

  // smallest positive input spacing; candidates below it are
  // pure-interpolation artifacts with no predictive content
  double min_spacing = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < Z.rows(); ++i)
    for (Eigen::Index j = i + 1; j < Z.rows(); ++j) {
      const double d = (Z.row(i) - Z.row(j)).norm();
      if (d > 0.0) min_spacing = std::min(min_spacing, d);
    }
  if (!std::isfinite(min_spacing)) min_spacing = 0.0;

  std::mt19937_64 rng(opts.seed);
  const auto log_uniform = [&]() {
    // deterministic uniform in [-1, 1] from the raw engine
    const double u = static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
    return 2.0 * u - 1.0;
  };

  bool any_step = false;
  bool have_best = false;
  double best_f = std::numeric_limits<double>::infinity();
  Eigen::VectorXd best_x;
  for (int r = 0; r < opts.restarts; ++r) {
    Eigen::VectorXd xr = x0;
    if (r > 0) {
      xr[0] += std::log(10.0) * log_uniform();
      xr[1] += std::log(10.0) * log_uniform();
    }
    const LbfgsResult res = lbfgs_minimize(objective, xr, opts.lbfgs, opts.fd_step);
    if (!res.line_search_failed_at_start) any_step = true;
    if (std::exp(res.x[1]) < 0.5 * min_spacing) continue;  // degenerate interpolator
    if (!have_best || res.f < best_f - 1e-12) {
      best_f = res.f;
      best_x = res.x;
      have_best = true;
    }
  }
  if (!any_step && Z.rows() > 1)
    throw OptimizationFailed("line search failed at the initial point for every restart");
  if (!have_best) best_x = x0;

  model.hp.signal_variance = std::exp(2.0 * best_x[0]);
  model.hp.length_scale = std::exp(best_x[1]);
  model.refactorize();
  return model;
}

}  // namespace tsgpr
