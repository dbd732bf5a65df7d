#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace burgers {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr Complex kI{0.0, 1.0};

// Inviscid shock location for u0 = 1/(1+x^2): (x_s, t_s) = (sqrt(3), 8 sqrt(3)/9).
inline constexpr double kShockX = 1.7320508075688772935;
inline constexpr double kShockT = 8.0 * 1.7320508075688772935 / 9.0;

enum class Errc {
  InvalidGrid,
  InvalidOrder,
  InvalidArgument,
  IntegrandBlowup,
  BranchCutError,
  NearPole,
  RangeError,
  DomainError,
  ConvergenceError,
  TooCloseToSingularity,
  DenominatorZero,
  MultivaluedRegion,
  DegenerateSaddle,
  SeedRejected,
  StepFailure,
  NoInteriorMax,
  DegenerateData,
  RankDeficiency,
  EigensolveFailure,
  EmptyPoleSet,
  NotAPole,
  ValidityRange,
  BranchAmbiguity,
  InvalidConfig,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

inline bool is_finite(double x) { return std::isfinite(x); }
inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

/// Viscosity and time of a Burgers evaluation; mu > 0, t >= 0.
struct PhysParams {
  double mu = 1.0;
  double t = 0.0;

  void require_viscous() const {
    if (!(mu > 0.0) || !is_finite(mu))
      throw Error(Errc::DomainError, "PhysParams: mu must be positive and finite");
    if (!(t >= 0.0) || !is_finite(t))
      throw Error(Errc::DomainError, "PhysParams: t must be nonnegative and finite");
  }
};

/// Uniform cell-centered sampling rectangle, row-major (x fastest).
struct Grid2D {
  double x_min = 0, x_max = 1, y_min = 0, y_max = 1;
  std::size_t nx = 2, ny = 2;

  std::size_t size() const { return nx * ny; }
  double dx() const { return (x_max - x_min) / static_cast<double>(nx); }
  double dy() const { return (y_max - y_min) / static_cast<double>(ny); }

  Complex point(std::size_t k) const {
    const std::size_t iy = k / nx, ix = k % nx;
    return {x_min + (static_cast<double>(ix) + 0.5) * dx(),
            y_min + (static_cast<double>(iy) + 0.5) * dy()};
  }

  std::vector<Complex> points() const {
    std::vector<Complex> p;
    p.reserve(size());
    for (std::size_t k = 0; k < size(); ++k) p.push_back(point(k));
    return p;
  }
};

Grid2D build_grid(double x_min, double x_max, double y_min, double y_max,
                  std::size_t nx, std::size_t ny);

/// Value of the solution at conj(z), given u = u(z,t) for data real on the real line.
inline Complex schwarz_reflect(Complex /*z*/, Complex u) { return std::conj(u); }

enum class TrackMethod { ExactRoot, Saddle, AAA, InnerAsymptotic, LargeTime };

struct TrajectorySample {
  double t = 0;
  Complex z{};
  Complex residue{};
  bool converged = false;
};

/// Time-ordered pole estimates from one tracking method. Times strictly monotone.
struct PoleTrajectory {
  TrackMethod method = TrackMethod::ExactRoot;
  std::vector<TrajectorySample> samples;

  void validate() const;
};

const char* to_string(TrackMethod m);

}  // namespace burgers
