#include "tracplan/traction.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace tracplan {

namespace {
constexpr double kProbTol = 1e-9;

int bin_of(double value, int bin_count) {
  // floor assigns boundary values to the higher bin; 1.0 folds into the last.
  int bin = static_cast<int>(std::floor(value * bin_count));
  if (bin >= bin_count) bin = bin_count - 1;
  return bin;
}
}  // namespace

double CategoricalDistribution::mean() const {
  double m = 0.0;
  for (int i = 0; i < bin_count; ++i) m += probs[i] * center(i);
  return m;
}

CategoricalDistribution CategoricalDistribution::point_mass(double value,
                                                            int bin_count) {
  if (bin_count < 1) throw std::invalid_argument("bin_count must be >= 1");
  if (value < 0.0 || value > 1.0)
    throw std::invalid_argument("point mass value out of range");
  CategoricalDistribution dist;
  dist.bin_count = bin_count;
  dist.probs.assign(bin_count, 0.0);
  dist.probs[bin_of(value, bin_count)] = 1.0;
  return dist;
}

void CategoricalDistribution::validate() const {
  if (bin_count < 1) throw std::invalid_argument("bin_count must be >= 1");
  if (static_cast<int>(probs.size()) != bin_count)
    throw std::invalid_argument("probability vector length != bin_count");
  double total = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0)) throw std::invalid_argument("negative bin probability");
    total += p;
  }
  if (std::abs(total - 1.0) > kProbTol)
    throw std::invalid_argument("bin probabilities must sum to 1");
}

CategoricalDistribution fit_categorical(std::span<const double> samples,
                                        int bin_count) {
  if (samples.empty()) throw std::invalid_argument("no samples");
  if (bin_count < 1) throw std::invalid_argument("bin_count must be >= 1");
  CategoricalDistribution dist;
  dist.bin_count = bin_count;
  dist.probs.assign(bin_count, 0.0);
  for (double s : samples) {
    if (!(s >= 0.0 && s <= 1.0)) throw std::invalid_argument("out of range");
    dist.probs[bin_of(s, bin_count)] += 1.0;
  }
  const double inv = 1.0 / static_cast<double>(samples.size());
  for (double& p : dist.probs) p *= inv;
  return dist;
}

double left_cvar(const CategoricalDistribution& dist, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw std::invalid_argument("invalid risk level");
  dist.validate();
  // Integral of the lower quantile function: ascend through the bins and take
  // mass until exactly alpha is covered, clipping the boundary bin.
  double remaining = alpha;
  double acc = 0.0;
  for (int i = 0; i < dist.bin_count && remaining > 0.0; ++i) {
    const double m = std::min(dist.probs[i], remaining);
    acc += m * dist.center(i);
    remaining -= m;
  }
  return acc / alpha;
}

double right_cvar_empirical(std::span<const double> values, double alpha) {
  if (values.empty()) throw std::invalid_argument("no samples");
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw std::invalid_argument("invalid risk level");
  const int m = static_cast<int>(values.size());
  const int k = std::min(
      m, static_cast<int>(std::ceil(alpha * static_cast<double>(m))));
  std::vector<double> sorted(values.begin(), values.end());
  std::partial_sort(sorted.begin(), sorted.begin() + k, sorted.end(),
                    std::greater<double>());
  double acc = 0.0;
  for (int i = 0; i < k; ++i) acc += sorted[i];
  return acc / static_cast<double>(k);
}

void TractionDistributionMap::validate() const {
  const auto cells = static_cast<std::size_t>(geom.cell_count());
  if (linear.size() != cells || angular.size() != cells ||
      known.size() != cells) {
    throw std::invalid_argument("map grids must share the geometry");
  }
  for (std::size_t i = 0; i < cells; ++i) {
    if (!known[i]) continue;
    linear[i].validate();
    angular[i].validate();
    if (linear[i].bin_count != bin_count || angular[i].bin_count != bin_count)
      throw std::invalid_argument("cell bin_count differs from map bin_count");
  }
}

TractionRealizationMap sample_realization(const TractionDistributionMap& map,
                                          RngStream& rng) {
  RealizationSampler sampler(map);
  return sampler.sample_one(rng);
}

RealizationEnsemble RealizationEnsemble::from_maps(
    const std::vector<TractionRealizationMap>& maps) {
  if (maps.empty()) throw std::invalid_argument("no realization maps");
  RealizationEnsemble ens;
  ens.geom = maps.front().geom;
  ens.count = static_cast<int>(maps.size());
  const auto cells = static_cast<std::size_t>(ens.geom.cell_count());
  ens.linear.reserve(cells * maps.size());
  ens.angular.reserve(cells * maps.size());
  for (const auto& map : maps) {
    if (!map.geom.same_shape(ens.geom))
      throw std::invalid_argument("realization maps must share the geometry");
    ens.linear.insert(ens.linear.end(), map.linear.begin(), map.linear.end());
    ens.angular.insert(ens.angular.end(), map.angular.begin(),
                       map.angular.end());
  }
  return ens;
}

RealizationSampler::RealizationSampler(const TractionDistributionMap& map) {
  map.validate();
  geom_ = map.geom;
  bin_count_ = map.bin_count;
  known_ = map.known;
  const auto cells = static_cast<std::size_t>(geom_.cell_count());
  linear_cdf_.assign(cells * bin_count_, 0.0);
  angular_cdf_.assign(cells * bin_count_, 0.0);
  for (std::size_t i = 0; i < cells; ++i) {
    if (!known_[i]) continue;
    double lc = 0.0, ac = 0.0;
    for (int b = 0; b < bin_count_; ++b) {
      lc += map.linear[i].probs[b];
      ac += map.angular[i].probs[b];
      linear_cdf_[i * bin_count_ + b] = lc;
      angular_cdf_[i * bin_count_ + b] = ac;
    }
  }
}

void RealizationSampler::sample_into(double* linear, double* angular,
                                     RngStream& rng) const {
  const auto cells = static_cast<std::size_t>(geom_.cell_count());
  for (std::size_t i = 0; i < cells; ++i) {
    if (!known_[i]) {
      linear[i] = 0.0;
      angular[i] = 0.0;
      continue;
    }
    const double* lcdf = linear_cdf_.data() + i * bin_count_;
    const double* acdf = angular_cdf_.data() + i * bin_count_;
    const double ul = rng.uniform();
    const double ua = rng.uniform();
    const int bl = static_cast<int>(
        std::upper_bound(lcdf, lcdf + bin_count_, ul) - lcdf);
    const int ba = static_cast<int>(
        std::upper_bound(acdf, acdf + bin_count_, ua) - acdf);
    linear[i] = CategoricalDistribution::bin_center(
        std::min(bl, bin_count_ - 1), bin_count_);
    angular[i] = CategoricalDistribution::bin_center(
        std::min(ba, bin_count_ - 1), bin_count_);
  }
}

TractionRealizationMap RealizationSampler::sample_one(RngStream& rng) const {
  TractionRealizationMap out;
  out.geom = geom_;
  const auto cells = static_cast<std::size_t>(geom_.cell_count());
  out.linear.resize(cells);
  out.angular.resize(cells);
  sample_into(out.linear.data(), out.angular.data(), rng);
  return out;
}

RealizationEnsemble RealizationSampler::sample(int count, StreamKey key) const {
  if (count < 1) throw std::invalid_argument("ensemble count must be >= 1");
  RealizationEnsemble ens;
  ens.geom = geom_;
  ens.count = count;
  const auto cells = static_cast<std::size_t>(geom_.cell_count());
  ens.linear.resize(cells * count);
  ens.angular.resize(cells * count);
  for (int m = 0; m < count; ++m) {
    RngStream rng = key.child(static_cast<std::uint64_t>(m)).stream();
    sample_into(ens.linear.data() + cells * m, ens.angular.data() + cells * m,
                rng);
  }
  return ens;
}

TractionRealizationMap cvar_traction_map(const TractionDistributionMap& map,
                                         double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw std::invalid_argument("invalid risk level");
  map.validate();
  TractionRealizationMap out;
  out.geom = map.geom;
  const auto cells = static_cast<std::size_t>(map.geom.cell_count());
  out.linear.assign(cells, 0.0);
  out.angular.assign(cells, 0.0);
  for (std::size_t i = 0; i < cells; ++i) {
    if (!map.known[i]) continue;
    out.linear[i] = left_cvar(map.linear[i], alpha);
    out.angular[i] = left_cvar(map.angular[i], alpha);
  }
  return out;
}

TractionRealizationMap nominal_traction_map(
    const TractionDistributionMap& map) {
  TractionRealizationMap out;
  out.geom = map.geom;
  const auto cells = static_cast<std::size_t>(map.geom.cell_count());
  out.linear.assign(cells, 0.0);
  out.angular.assign(cells, 0.0);
  for (std::size_t i = 0; i < cells; ++i) {
    if (map.known[i]) {
      out.linear[i] = 1.0;
      out.angular[i] = 1.0;
    }
  }
  return out;
}

}  // namespace tracplan
