#include "gsr/synthdata.hpp"

#include "gsr/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gsr {

Vector bandlimited_signal(const Spectrum& spec, std::span<const Index> band, Rng& rng) {
  if (band.empty()) throw Error(Errc::EmptyBand, "signal band is empty");
  std::vector<Index> sorted(band.begin(), band.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() < 0 || sorted.back() >= spec.size()) {
    throw Error(Errc::IndexOutOfRange, "band index outside the spectrum");
  }
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(Errc::InvalidArgument, "band has repeated frequencies");
  }
  Vector coeffs(static_cast<Index>(band.size()));
  for (Index k = 0; k < coeffs.size(); ++k) coeffs(k) = rng.uniform01();
  return spec.band_basis(band) * coeffs;
}

Vector bandlimited_signal(const Spectrum& spec, std::span<const Index> band, std::uint64_t seed) {
  Rng rng(seed);
  return bandlimited_signal(spec, band, rng);
}

NoisySignal add_noise(const Vector& f, double snr_db, Rng& rng) {
  const double energy = f.squaredNorm();
  if (!(energy > 0.0)) throw Error(Errc::ZeroSignal, "cannot calibrate noise for a zero signal");
  if (!std::isfinite(snr_db)) throw Error(Errc::InvalidArgument, "SNR must be finite");
  const double var = energy / (static_cast<double>(f.size()) * std::pow(10.0, snr_db / 10.0));
  const double sd = std::sqrt(var);
  Vector noisy = f;
  for (Index i = 0; i < noisy.size(); ++i) noisy(i) += sd * rng.normal();
  return NoisySignal{std::move(noisy), var};
}

NoisySignal add_noise(const Vector& f, double snr_db, std::uint64_t seed) {
  Rng rng(seed);
  return add_noise(f, snr_db, rng);
}

std::vector<Index> sample_uniform(Index n_vertices, Index sample_count, Rng& rng) {
  if (sample_count < 1) throw Error(Errc::InvalidArgument, "sample count must be >= 1");
  if (sample_count > n_vertices) {
    throw Error(Errc::TooManySamples, "cannot draw " + std::to_string(sample_count) +
                                          " distinct vertices out of " + std::to_string(n_vertices));
  }
  std::vector<Index> pool(static_cast<std::size_t>(n_vertices));
  std::iota(pool.begin(), pool.end(), Index{0});
  for (Index k = 0; k < sample_count; ++k) {
    const auto remaining = static_cast<std::uint64_t>(n_vertices - k);
    const auto pick = k + static_cast<Index>(rng.index(remaining));
    std::swap(pool[static_cast<std::size_t>(k)], pool[static_cast<std::size_t>(pick)]);
  }
  pool.resize(static_cast<std::size_t>(sample_count));
  std::sort(pool.begin(), pool.end());
  return pool;
}

std::vector<Index> sample_uniform(Index n_vertices, Index sample_count, std::uint64_t seed) {
  Rng rng(seed);
  return sample_uniform(n_vertices, sample_count, rng);
}

SignalInstance make_instance(const Spectrum& spec, std::vector<Index> band, double snr_db,
                             std::uint64_t seed) {
  Rng rng(seed);
  Vector truth = bandlimited_signal(spec, band, rng);
  NoisySignal noisy = add_noise(truth, snr_db, rng);
  return SignalInstance{std::move(truth), std::move(noisy.noisy), noisy.noise_var, std::move(band), seed};
}

void NmseAccumulator::add(const Vector& truth, const Vector& estimate) {
  if (truth.size() != estimate.size()) throw Error(Errc::DimensionMismatch, "estimate size mismatch");
  error_ += (truth - estimate).squaredNorm();
  energy_ += truth.squaredNorm();
  ++count_;
}

double NmseAccumulator::value() const {
  if (!(energy_ > 0.0)) throw Error(Errc::ZeroDenominator, "NMSE undefined: zero truth energy");
  return error_ / energy_;
}

double nmse(const Vector& truth, std::span<const Vector> estimates) {
  if (estimates.empty()) throw Error(Errc::InvalidArgument, "no estimates given");
  NmseAccumulator acc;
  for (const Vector& e : estimates) acc.add(truth, e);
  return acc.value();
}

}  // namespace gsr
