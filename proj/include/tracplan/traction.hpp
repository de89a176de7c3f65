#pragma once

#include <span>
#include <vector>

#include "tracplan/grid.hpp"
#include "tracplan/rng.hpp"

namespace tracplan {

/// Probability mass over discretized traction values in [0, 1]. The support
/// is implicit: bin_count uniform bins over [0, 1], each represented by its
/// center value (i + 0.5) / bin_count.
struct CategoricalDistribution {
  int bin_count = 0;
  std::vector<double> probs;  // length bin_count, nonnegative, sums to 1

  static double bin_center(int bin, int bin_count) {
    return (bin + 0.5) / static_cast<double>(bin_count);
  }
  double center(int bin) const { return bin_center(bin, bin_count); }

  double mean() const;

  /// Distribution with all mass in the bin containing `value` (boundary
  /// values go to the higher bin, value 1.0 to the last bin).
  static CategoricalDistribution point_mass(double value, int bin_count);

  /// Throws std::invalid_argument when the invariants do not hold.
  void validate() const;
};

/// Histogram fit over uniform bins. Samples exactly on a bin boundary assign
/// to the higher bin; a sample of 1.0 assigns to the last bin.
CategoricalDistribution fit_categorical(std::span<const double> samples,
                                        int bin_count);

/// Left-tail CVaR at level alpha in (0, 1]: the exact integral of the lower
/// quantile function, evaluated by walking bins in ascending order and
/// clipping the boundary bin's mass so exactly alpha probability is covered.
/// Equals the mean at alpha = 1.
double left_cvar(const CategoricalDistribution& dist, double alpha);

/// Empirical right-tail CVaR of a sample: mean of the largest ceil(alpha * M)
/// values. Equals the sample mean at alpha = 1.
double right_cvar_empirical(std::span<const double> values, double alpha);

/// The planner's world model: per-cell categorical distributions over linear
/// and angular traction, plus a known/unknown mask. Unknown cells behave as
/// zero traction everywhere downstream.
struct TractionDistributionMap {
  GridGeometry geom;
  int bin_count = 20;
  std::vector<CategoricalDistribution> linear;   // size cell_count
  std::vector<CategoricalDistribution> angular;  // size cell_count
  std::vector<std::uint8_t> known;               // size cell_count, 0 = unknown

  void validate() const;
};

/// A concrete per-cell draw of (linear, angular) traction values: either a
/// sampled world for CVaR-Cost or the frozen ground truth of one trial.
struct TractionRealizationMap {
  GridGeometry geom;
  std::vector<double> linear;   // size cell_count, values in [0, 1]
  std::vector<double> angular;  // size cell_count
};

/// One independent draw per known cell (bin picked by probability, value is
/// the bin center). Unknown cells get zero traction. Draw order is row-major,
/// linear before angular, so results are reproducible from the stream state.
TractionRealizationMap sample_realization(const TractionDistributionMap& map,
                                          RngStream& rng);

/// M realizations stored contiguously ([map][cell]) so the rollout kernels
/// can gather across maps with a single base pointer.
struct RealizationEnsemble {
  GridGeometry geom;
  int count = 0;
  std::vector<double> linear;   // count * cell_count
  std::vector<double> angular;  // count * cell_count

  const double* linear_map(int m) const {
    return linear.data() + static_cast<std::size_t>(m) * geom.cell_count();
  }
  const double* angular_map(int m) const {
    return angular.data() + static_cast<std::size_t>(m) * geom.cell_count();
  }

  static RealizationEnsemble from_maps(
      const std::vector<TractionRealizationMap>& maps);
};

/// Precomputed per-cell CDF tables; sampling a whole ensemble every planning
/// cycle is much cheaper through this than re-scanning the pmfs.
class RealizationSampler {
 public:
  explicit RealizationSampler(const TractionDistributionMap& map);

  /// Map m is drawn from its own child stream of `key`, so the ensemble is
  /// reproducible and parallelizable across maps.
  RealizationEnsemble sample(int count, StreamKey key) const;

  /// Single realization drawn from an explicit stream.
  TractionRealizationMap sample_one(RngStream& rng) const;

 private:
  void sample_into(double* linear, double* angular, RngStream& rng) const;

  GridGeometry geom_;
  int bin_count_ = 0;
  std::vector<std::uint8_t> known_;
  std::vector<double> linear_cdf_;   // cell_count * bin_count
  std::vector<double> angular_cdf_;  // cell_count * bin_count
};

/// Per-cell (left_cvar(linear, alpha), left_cvar(angular, alpha)); unknown
/// cells hold zero. With alpha = 1 this is the per-cell mean map.
TractionRealizationMap cvar_traction_map(const TractionDistributionMap& map,
                                         double alpha);

/// All-ones traction on known cells, zero on unknown: the no-slip model used
/// by the nominal cost mode.
TractionRealizationMap nominal_traction_map(const TractionDistributionMap& map);

}  // namespace tracplan
