#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>

#include "dislab/params.hpp"

namespace dislab::rng {

// Counter-based generation: every normal variate is a pure function of
// (key, domain, index, period, lane). Nothing depends on the order in which
// draws are requested, so results are identical under any thread partition.
//
// Counter layout fed to Philox2x64-10:
//   word 0: [63:62] domain, [61:0] index (agent id, or 0)
//   word 1: [63:48] tag (0 = primary block, >0 = ziggurat refills), [47:0] period

using Key = std::uint64_t;
using Block = std::array<std::uint64_t, 2>;

inline constexpr std::uint64_t kMaxIndex = (std::uint64_t{1} << 62) - 1;
inline constexpr std::uint64_t kMaxPeriod = (std::uint64_t{1} << 48) - 1;

enum class Domain : std::uint64_t {
  agent = 0,        // per-agent idiosyncratic shocks (nu, eta)
  fundamental = 1,  // innovations of the fundamental
  initial = 2,      // initial belief draws
  sequential = 3,   // free-running RngState streams
};

/// Philox2x64 with 10 rounds (Salmon et al., SC'11).
Block philox2x64(Block counter, Key key) noexcept;

/// Stream key for a (master_seed, stream_id) pair. Distinct pairs map to
/// distinct keys except with probability ~2^-64.
Key derive_key(const SeedSpec& seed) noexcept;

/// Two independent standard normals addressed by (domain, index, period);
/// `.first` is lane 0, `.second` is lane 1.
std::pair<double, double> standard_normal_pair(Key key, Domain domain, std::uint64_t index,
                                               std::uint64_t period) noexcept;

/// Lane-0 normal at the address; equals standard_normal_pair(...).first.
double standard_normal(Key key, Domain domain, std::uint64_t index,
                       std::uint64_t period) noexcept;

/// Batch form used by the panel engine: lane 0 into `lane0[k]`, lane 1 into
/// `lane1[k]` for agents first_index + k. Either span may be empty to skip
/// that lane; a non-empty span must match the other's length when both are
/// given.
void standard_normals(Key key, Domain domain, std::uint64_t first_index,
                      std::uint64_t period, std::span<double> lane0,
                      std::span<double> lane1) noexcept;

/// Opaque state of a sequential normal stream.
struct RngState {
  Key key = 0;
  std::uint64_t counter = 0;

  friend bool operator==(const RngState&, const RngState&) = default;
};

RngState make_state(const SeedSpec& seed) noexcept;

/// Draws N(mean, sd^2) and returns the advanced state. `sd == 0` returns
/// `mean` exactly. Precondition: sd >= 0 (checked, throws DomainError).
std::pair<double, RngState> gaussian_draw(RngState state, double mean, double sd);

}  // namespace dislab::rng
