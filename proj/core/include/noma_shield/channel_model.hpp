#pragma once

#include <optional>
#include <vector>

#include "noma_shield/rng.hpp"
#include "noma_shield/system_config.hpp"
#include "noma_shield/types.hpp"

namespace noma_shield {

/// Piecewise path loss: d^exponent for d > r0, constant r0 otherwise.
/// Note the constant branch returns r0 itself, so L is discontinuous at
/// d = r0 unless r0^exponent = r0. Negative distances are a domain error.
double path_loss(double distance, double exponent, double r0);
double path_loss(double distance, const SystemConfig& cfg);

/// rows x cols matrix of IID CN(0, 1) entries (unit-variance Rayleigh
/// fading). Entries are drawn in column-major order; that order is part of
/// the determinism contract.
CMatrix sample_fading_matrix(int rows, int cols, RandomStream& rng);

/// One near/far user pair. Fading matrices exclude path loss; the physical
/// channel is fading / sqrt(L(d)).
struct UserPair {
  double d_near = 0.0;
  double d_far = 0.0;
  CMatrix fading_near;  // N x M
  CMatrix fading_far;   // N x M
};

struct UserPopulation {
  int num_pairs = 0;
  int num_antennas = 0;
  std::vector<UserPair> pairs;
};

/// Pins sampled distances to fixed values (distance sweeps need exact
/// placement). Unset fields keep the uniform draw.
struct DistanceOverride {
  std::optional<double> near_distance;
  std::optional<double> far_distance;
};

/// Draws M pairs: near distances uniform on [r0, r1], far distances uniform
/// on (r1, r2], all fading matrices IID CN(0, 1). Per pair the draw order is
/// d_near, d_far, fading_near, fading_far.
UserPopulation sample_population(const SystemConfig& cfg, RandomStream& rng,
                                 const DistanceOverride& pin = {});

struct EveChannel {
  CMatrix fading;  // N x M, IID CN(0, 1)
  double distance = 0.0;
  double path_loss = 0.0;
};

EveChannel sample_eve_channel(const SystemConfig& cfg, double distance,
                              RandomStream& rng);

}  // namespace noma_shield
