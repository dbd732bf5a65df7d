#include "burgers/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace burgers {

namespace {

// Pairwise sum, deterministic and cancellation-friendly.
Complex pairwise_sum(const std::vector<Complex>& v, std::size_t lo, std::size_t hi) {
  const std::size_t n = hi - lo;
  if (n == 0) return {};
  if (n <= 8) {
    Complex s{};
    for (std::size_t i = lo; i < hi; ++i) s += v[i];
    return s;
  }
  const std::size_t mid = lo + n / 2;
  return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

Complex pairwise_sum(const std::vector<Complex>& v) { return pairwise_sum(v, 0, v.size()); }

void symmetrize(std::vector<double>& nodes, std::vector<double>& weights) {
  const std::size_t n = nodes.size();
  for (std::size_t i = 0; i < n / 2; ++i) {
    const std::size_t j = n - 1 - i;
    const double x = 0.5 * (nodes[j] - nodes[i]);
    nodes[i] = -x;
    nodes[j] = x;
    const double w = 0.5 * (weights[i] + weights[j]);
    weights[i] = weights[j] = w;
  }
  if (n % 2 == 1) nodes[n / 2] = 0.0;
}

}  // namespace

QuadratureRule gauss_legendre_rule(std::size_t n) {
  if (n < 1 || n > 2048)
    throw Error(Errc::InvalidOrder, "gauss_legendre_rule: order must be in [1, 2048]");
  QuadratureRule rule;
  rule.kind = RuleKind::Legendre;
  rule.nodes.resize(n);
  rule.weights.resize(n);

  for (std::size_t i = 0; i < n; ++i) {
    // Tricomi-style initial guess, then Newton on the recurrence-evaluated P_n.
    double x = std::cos(kPi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      if (n == 1) { p1 = x; }
      for (std::size_t k = 2; k <= n; ++k) {
        const double kd = static_cast<double>(k);
        const double p2 = ((2.0 * kd - 1.0) * x * p1 - (kd - 1.0) * p0) / kd;
        p0 = p1;
        p1 = p2;
      }
      const double pn = (n == 1) ? x : p1;
      const double pm = (n == 1) ? 1.0 : p0;
      pp = static_cast<double>(n) * (x * pn - pm) / (x * x - 1.0);
      const double dx = pn / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * pp * pp);
  }
  std::reverse(rule.nodes.begin(), rule.nodes.end());
  std::reverse(rule.weights.begin(), rule.weights.end());
  symmetrize(rule.nodes, rule.weights);
  return rule;
}

QuadratureRule gauss_hermite_rule(std::size_t n) {
  if (n < 1 || n > 512)
    throw Error(Errc::InvalidOrder, "gauss_hermite_rule: order must be in [1, 512]");
  QuadratureRule rule;
  rule.kind = RuleKind::Hermite;
  rule.nodes.resize(n);
  rule.weights.resize(n);

  const double pim4 = std::pow(kPi, -0.25);
  // Hermite functions psi_k = h_k exp(-x^2/2) with orthonormal h_k stay O(1),
  // so the recurrence never overflows even at n = 512.
  const auto eval = [&](double x, double& psi_n, double& psi_nm1, double& sum_sq) {
    double p0 = pim4 * std::exp(-0.5 * x * x);
    double p1 = std::sqrt(2.0) * x * p0;
    sum_sq = p0 * p0;
    if (n == 1) {
      psi_n = p1;
      psi_nm1 = p0;
      return;
    }
    sum_sq += p1 * p1;
    for (std::size_t k = 1; k + 1 < n; ++k) {
      const double kd = static_cast<double>(k);
      const double p2 = x * std::sqrt(2.0 / (kd + 1.0)) * p1 - std::sqrt(kd / (kd + 1.0)) * p0;
      p0 = p1;
      p1 = p2;
      sum_sq += p1 * p1;
    }
    // One more step to reach psi_n; sum_sq holds sum_{k<n} psi_k^2.
    const double kd = static_cast<double>(n - 1);
    const double p2 = x * std::sqrt(2.0 / (kd + 1.0)) * p1 - std::sqrt(kd / (kd + 1.0)) * p0;
    psi_nm1 = p1;
    psi_n = p2;
  };

  const std::size_t m = (n + 1) / 2;
  double z = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    // Initial guesses per descending root index (largest first).
    if (i == 0) {
      z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -1.0 / 6.0);
    } else if (i == 1) {
      z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
    } else if (i == 2) {
      z = 1.86 * z - 0.86 * rule.nodes[0];
    } else if (i == 3) {
      z = 1.91 * z - 0.91 * rule.nodes[1];
    } else {
      z = 2.0 * z - rule.nodes[i - 2];
    }
    double psi_n = 0, psi_nm1 = 0, sum_sq = 0;
    for (int iter = 0; iter < 100; ++iter) {
      eval(z, psi_n, psi_nm1, sum_sq);
      const double dpsi = std::sqrt(2.0 * n) * psi_nm1 - z * psi_n;
      const double dz = psi_n / dpsi;
      z -= dz;
      if (std::abs(dz) < 1e-15 * std::max(1.0, std::abs(z))) break;
    }
    eval(z, psi_n, psi_nm1, sum_sq);
    rule.nodes[i] = z;  // descending positive roots, stored temporarily
    rule.weights[i] = std::exp(-z * z) / sum_sq;
  }
  // Mirror to the full symmetric rule, ascending.
  std::vector<double> xs(n), ws(n);
  for (std::size_t i = 0; i < m; ++i) {
    xs[i] = -rule.nodes[i];
    ws[i] = rule.weights[i];
    xs[n - 1 - i] = rule.nodes[i];
    ws[n - 1 - i] = rule.weights[i];
  }
  if (n % 2 == 1) xs[n / 2] = 0.0;
  rule.nodes = std::move(xs);
  rule.weights = std::move(ws);
  symmetrize(rule.nodes, rule.weights);
  return rule;
}

void Contour::validate() const {
  if (vertices.size() < 2)
    throw Error(Errc::InvalidArgument, "Contour: need at least 2 vertices");
  for (std::size_t i = 1; i < vertices.size(); ++i)
    if (vertices[i] == vertices[i - 1])
      throw Error(Errc::InvalidArgument, "Contour: consecutive vertices must be distinct");
}

Complex integrate_contour(const ComplexFn& f, const Contour& path,
                          const QuadratureRule& rule, std::size_t panels) {
  if (rule.kind != RuleKind::Legendre)
    throw Error(Errc::InvalidOrder, "integrate_contour: rule must be Gauss-Legendre");
  if (panels < 1)
    throw Error(Errc::InvalidArgument, "integrate_contour: panels must be >= 1");
  path.validate();

  std::vector<Complex> contrib;
  contrib.reserve((path.vertices.size() - 1) * panels * rule.order());
  for (std::size_t seg = 0; seg + 1 < path.vertices.size(); ++seg) {
    const Complex a = path.vertices[seg], b = path.vertices[seg + 1];
    const Complex step = (b - a) / static_cast<double>(panels);
    for (std::size_t p = 0; p < panels; ++p) {
      const Complex lo = a + step * static_cast<double>(p);
      const Complex half = 0.5 * step;
      const Complex mid = lo + half;
      for (std::size_t k = 0; k < rule.order(); ++k) {
        const Complex s = mid + half * rule.nodes[k];
        const Complex fv = f(s);
        if (!is_finite(fv)) {
          std::ostringstream os;
          os << "integrate_contour: non-finite integrand at node (" << s.real() << ", "
             << s.imag() << ")";
          throw Error(Errc::IntegrandBlowup, os.str());
        }
        contrib.push_back(fv * rule.weights[k] * half);
      }
    }
  }
  return pairwise_sum(contrib);
}

AdaptiveResult integrate_contour_adaptive(const ComplexFn& f, const Contour& path,
                                          const QuadratureRule& rule, double rel_tol,
                                          std::size_t max_panels) {
  AdaptiveResult res;
  Complex prev = integrate_contour(f, path, rule, 1);
  std::size_t panels = 1;
  while (panels < max_panels) {
    panels *= 2;
    const Complex cur = integrate_contour(f, path, rule, panels);
    const double diff = std::abs(cur - prev);
    res.value = cur;
    res.est_error = diff;
    res.panels = panels;
    if (diff <= rel_tol * std::max(std::abs(cur), 1e-300)) {
      res.converged = true;
      return res;
    }
    prev = cur;
  }
  res.converged = false;
  return res;
}

AdaptiveResult integrate_hermite_adaptive(const ComplexFn& f, std::size_t n0, double rel_tol) {
  AdaptiveResult res;
  const auto apply = [&](const QuadratureRule& rule) {
    std::vector<Complex> contrib(rule.order());
    for (std::size_t k = 0; k < rule.order(); ++k) {
      if (rule.weights[k] == 0.0) {
        contrib[k] = 0.0;  // underflowed tail weight, integrand factor is bounded
        continue;
      }
      const Complex fv = f(Complex(rule.nodes[k], 0.0));
      if (!is_finite(fv))
        throw Error(Errc::IntegrandBlowup, "integrate_hermite_adaptive: non-finite integrand");
      contrib[k] = fv * rule.weights[k];
    }
    return pairwise_sum(contrib);
  };

  std::size_t n = std::max<std::size_t>(1, n0);
  Complex prev = apply(gauss_hermite_rule(n));
  while (n < 512) {
    n = std::min<std::size_t>(512, 2 * n);
    const Complex cur = apply(gauss_hermite_rule(n));
    const double diff = std::abs(cur - prev);
    res.value = cur;
    res.est_error = diff;
    res.panels = n;
    if (diff <= rel_tol * std::max(std::abs(cur), 1e-300)) {
      res.converged = true;
      return res;
    }
    prev = cur;
  }
  res.converged = false;
  return res;
}

}  // namespace burgers
