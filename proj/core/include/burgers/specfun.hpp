#pragma once

#include "burgers/core.hpp"

namespace burgers {

enum class SfMethod { Series, Asymptotic, Recurrence, Integral };

/// Value plus an estimated relative error and the evaluation route taken.
struct SpecFunResult {
  Complex value{};
  double est_error = 0.0;
  SfMethod method = SfMethod::Series;
};

/// Principal power z^a = exp(a log z), arg in (-pi, pi].
Complex pow_c(Complex z, Complex a);

/// arctan with branch cuts (-i inf, -i] and [i, i inf).
SpecFunResult arctan_c(Complex z);

SpecFunResult erf_c(Complex z);
SpecFunResult erfc_c(Complex z);

/// Lanczos gamma; reflection for Re z < 0.5. Poles -> DomainError.
SpecFunResult gamma_c(Complex z);
/// log Gamma, principal-branch continuous off the negative real axis.
Complex log_gamma_c(Complex z);

SpecFunResult kummer_m(Complex a, Complex b, Complex z);
SpecFunResult kummer_u(Complex a, Complex b, Complex z);

/// Weber parabolic cylinder U(a,z): solution of u'' - (z^2/4 + a) u = 0 recessive as z -> +inf.
SpecFunResult pcf_u(Complex a, Complex z);

SpecFunResult airy_ai(Complex z);
SpecFunResult airy_ai_prime(Complex z);
/// First k zeros of Ai on the negative real axis, in decreasing order (a_1 ~ -2.33811).
std::vector<double> airy_ai_zeros(std::size_t k);

}  // namespace burgers
