#pragma once

#include <cstdint>

namespace noma_shield {

/// Scalar parameters of the downlink scheme.
///
/// The base station has `num_pairs` antennas and serves `num_pairs` user
/// pairs; every receiver has `antennas_per_user` antennas. Power-allocation
/// amplitudes satisfy alpha_near^2 + alpha_far^2 = 1 with the far user
/// favoured. Path loss is d^pathloss_exp beyond the reference distance r0 and
/// constant r0 below it. Near users live in [r0, r1], far users in (r1, r2].
struct SystemConfig {
  int num_pairs = 7;          // M
  int antennas_per_user = 5;  // N, must satisfy N > M/2
  double transmit_snr = 5.0;  // rho, linear scale
  double noise_var = 1.0;     // sigma^2
  double alpha_near = 0.4472135954999579;  // sqrt(0.2)
  double alpha_far = 0.8944271909999159;   // sqrt(0.8)
  double pathloss_exp = 3.0;
  double r0 = 1.0;
  double r1 = 5.0;
  double r2 = 15.0;
  std::uint64_t master_seed = 0x6e6f6d61ULL;

  /// Throws ConfigError naming the offending field.
  void validate() const;
};

}  // namespace noma_shield
