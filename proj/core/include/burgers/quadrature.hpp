#pragma once

#include <functional>

#include "burgers/core.hpp"

namespace burgers {

enum class RuleKind { Legendre, Hermite };

/// Symmetric Gaussian rule; Legendre on [-1,1], Hermite for weight exp(-x^2) on R.
struct QuadratureRule {
  RuleKind kind = RuleKind::Legendre;
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t order() const { return nodes.size(); }
};

QuadratureRule gauss_legendre_rule(std::size_t n);  // 1 <= n <= 2048
QuadratureRule gauss_hermite_rule(std::size_t n);   // 1 <= n <= 512

/// Piecewise-linear path in C.
struct Contour {
  std::vector<Complex> vertices;

  Contour() = default;
  Contour(std::initializer_list<Complex> v) : vertices(v) { validate(); }
  explicit Contour(std::vector<Complex> v) : vertices(std::move(v)) { validate(); }
  void validate() const;
};

using ComplexFn = std::function<Complex(Complex)>;

/// Composite Gauss-Legendre along a piecewise-linear path, `panels` panels per segment.
Complex integrate_contour(const ComplexFn& f, const Contour& path,
                          const QuadratureRule& rule, std::size_t panels);

struct AdaptiveResult {
  Complex value{};
  double est_error = 0.0;   // |I_2p - I_p| of the accepted doubling step
  bool converged = false;
  std::size_t panels = 0;   // panels per segment at acceptance
};

/// Panel doubling until two successive composite estimates agree to rel_tol (cap max_panels).
AdaptiveResult integrate_contour_adaptive(const ComplexFn& f, const Contour& path,
                                          const QuadratureRule& rule, double rel_tol = 1e-10,
                                          std::size_t max_panels = 1024);

/// Whole-line integral of f against weight exp(-x^2) with Gauss-Hermite order doubling
/// (n0, 2 n0, ... capped at 512); f is the smooth factor only.
AdaptiveResult integrate_hermite_adaptive(const ComplexFn& f, std::size_t n0 = 64,
                                          double rel_tol = 1e-10);

}  // namespace burgers
