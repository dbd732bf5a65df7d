#include "burgers/core.hpp"

#include <cmath>

namespace burgers {

Grid2D build_grid(double x_min, double x_max, double y_min, double y_max,
                  std::size_t nx, std::size_t ny) {
  if (!(x_min < x_max) || !(y_min < y_max) || !is_finite(x_min) || !is_finite(x_max) ||
      !is_finite(y_min) || !is_finite(y_max))
    throw Error(Errc::InvalidGrid, "build_grid: bounds must be finite and ordered");
  if (nx < 2 || ny < 2)
    throw Error(Errc::InvalidGrid, "build_grid: need nx, ny >= 2");
  return Grid2D{x_min, x_max, y_min, y_max, nx, ny};
}

void PoleTrajectory::validate() const {
  for (std::size_t i = 1; i < samples.size(); ++i) {
    const double dt = samples[i].t - samples[i - 1].t;
    if (!((dt > 0) == (samples[1].t > samples[0].t)) || dt == 0)
      throw Error(Errc::InvalidArgument, "PoleTrajectory: times must be strictly monotone");
  }
  for (const auto& s : samples)
    if (s.converged && !is_finite(s.z))
      throw Error(Errc::InvalidArgument, "PoleTrajectory: converged sample with non-finite z");
}

const char* to_string(TrackMethod m) {
  switch (m) {
    case TrackMethod::ExactRoot: return "exact";
    case TrackMethod::Saddle: return "saddle";
    case TrackMethod::AAA: return "aaa";
    case TrackMethod::InnerAsymptotic: return "inner";
    case TrackMethod::LargeTime: return "largetime";
  }
  return "unknown";
}

}  // namespace burgers
