#include "subconv/convolution.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace subconv {

SetFunction<std::int64_t> round_to_integers(const SetFunction<double>& h, RunReport& report) {
  const auto& values = h.values();
  std::vector<std::int64_t> out(values.size());
  double worst = 0.0;
  std::uint64_t worst_index = 0;
  for (std::uint64_t s = 0; s < values.size(); ++s) {
    const double rounded = std::nearbyint(values[s]);
    const double deviation = std::abs(values[s] - rounded);
    if (deviation > worst || std::isnan(deviation)) {
      worst = deviation;
      worst_index = s;
    }
    out[s] = static_cast<std::int64_t>(rounded);
  }
  report.rounding_max_deviation = worst;
  if (!(worst <= 0.25))
    throw RoundingUnsafeError("round_to_integers: entry " + std::to_string(worst_index) +
                              " deviates " + std::to_string(worst) +
                              " from the integer grid (limit 0.25); result untrustworthy");
  return SetFunction<std::int64_t>(h.n(), std::move(out));
}

}  // namespace subconv
