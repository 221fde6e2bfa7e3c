#pragma once

#include "gsr/linalg.hpp"
#include "gsr/rng.hpp"
#include "gsr/spectral.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace gsr {

/// f = U_F c with c_k ~ U[0, 1) i.i.d. (not centered). Throws EmptyBand,
/// IndexOutOfRange for band entries outside [0, N), InvalidArgument for
/// repeated entries.
Vector bandlimited_signal(const Spectrum& spec, std::span<const Index> band, Rng& rng);
Vector bandlimited_signal(const Spectrum& spec, std::span<const Index> band, std::uint64_t seed);

struct NoisySignal {
  Vector noisy;
  double noise_var;
};

/// Gaussian noise with variance ||f||^2 / (N 10^(snr_db / 10)). Throws ZeroSignal.
NoisySignal add_noise(const Vector& f, double snr_db, Rng& rng);
NoisySignal add_noise(const Vector& f, double snr_db, std::uint64_t seed);

/// S distinct vertices out of N by partial Fisher-Yates, sorted ascending.
/// Throws TooManySamples when S > N, InvalidArgument when S < 1.
std::vector<Index> sample_uniform(Index n_vertices, Index sample_count, Rng& rng);
std::vector<Index> sample_uniform(Index n_vertices, Index sample_count, std::uint64_t seed);

/// Bandlimited truth plus a fully observed noisy copy.
struct SignalInstance {
  Vector truth;
  Vector noisy_full;
  double noise_var;
  std::vector<Index> band;
  std::uint64_t seed;
};
SignalInstance make_instance(const Spectrum& spec, std::vector<Index> band, double snr_db,
                             std::uint64_t seed);

/// Sum of squared errors over sum of squared truths, accumulated across trials.
class NmseAccumulator {
 public:
  void add(const Vector& truth, const Vector& estimate);
  /// Throws ZeroDenominator before any nonzero truth was added.
  double value() const;
  Index count() const noexcept { return count_; }

 private:
  double error_ = 0.0;
  double energy_ = 0.0;
  Index count_ = 0;
};

/// sum_i ||f - f_i||^2 / (k ||f||^2) for k estimates of one truth.
double nmse(const Vector& truth, std::span<const Vector> estimates);

}  // namespace gsr
