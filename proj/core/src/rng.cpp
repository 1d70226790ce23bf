#include "dislab/rng.hpp"

#include <boost/random/normal_distribution.hpp>
#include <cassert>

#include "dislab/errors.hpp"

namespace dislab::rng {
namespace {

constexpr std::uint64_t kPhiloxMultiplier = 0xD2B74407B1CE6E93ULL;
constexpr std::uint64_t kPhiloxWeyl = 0x9E3779B97F4A7C15ULL;
constexpr int kTagShift = 48;

__extension__ using Wide = unsigned __int128;

inline std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline Block philox_inline(Block c, Key k) noexcept {
  for (int round = 0; round < 10; ++round) {
    const Wide product = static_cast<Wide>(kPhiloxMultiplier) * c[0];
    const auto hi = static_cast<std::uint64_t>(product >> 64);
    const auto lo = static_cast<std::uint64_t>(product);
    c = {hi ^ k ^ c[1], lo};
    k += kPhiloxWeyl;
  }
  return c;
}

inline Block base_counter(Domain domain, std::uint64_t index, std::uint64_t period) noexcept {
  assert(index <= kMaxIndex);
  assert(period <= kMaxPeriod);
  return {(static_cast<std::uint64_t>(domain) << 62) | index, period};
}

// Adapts one Philox word (plus refill blocks, if the ziggurat rejects) to the
// UniformRandomBitGenerator interface Boost's normal_distribution expects.
// Refill tags for lane L are 1 + L, 3 + L, 5 + L, ... so the two lanes of one
// address never share words.
class AddressedWords {
 public:
  using result_type = std::uint64_t;
  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }

  AddressedWords(std::uint64_t first, Key key, Block base, unsigned lane) noexcept
      : first_(first), key_(key), base_(base), lane_(lane) {}

  result_type operator()() noexcept {
    if (!first_used_) {
      first_used_ = true;
      return first_;
    }
    if (pos_ == 2) {
      const std::uint64_t tag = (1 + lane_ + 2 * refills_++) & 0xFFFF;
      buffer_ = philox_inline({base_[0], base_[1] | (tag << kTagShift)}, key_);
      pos_ = 0;
    }
    return buffer_[pos_++];
  }

 private:
  std::uint64_t first_;
  Key key_;
  Block base_;
  unsigned lane_;
  bool first_used_ = false;
  std::uint64_t refills_ = 0;
  Block buffer_{};
  int pos_ = 2;
};

inline double normal_from_word(std::uint64_t word, Key key, Block base, unsigned lane) noexcept {
  AddressedWords words(word, key, base, lane);
  boost::random::normal_distribution<double> unit;
  return unit(words);
}

}  // namespace

Block philox2x64(Block counter, Key key) noexcept { return philox_inline(counter, key); }

Key derive_key(const SeedSpec& seed) noexcept {
  return splitmix64(splitmix64(seed.master_seed) ^ seed.stream_id);
}

std::pair<double, double> standard_normal_pair(Key key, Domain domain, std::uint64_t index,
                                               std::uint64_t period) noexcept {
  const Block base = base_counter(domain, index, period);
  const Block words = philox_inline(base, key);
  return {normal_from_word(words[0], key, base, 0), normal_from_word(words[1], key, base, 1)};
}

double standard_normal(Key key, Domain domain, std::uint64_t index,
                       std::uint64_t period) noexcept {
  const Block base = base_counter(domain, index, period);
  const Block words = philox_inline(base, key);
  return normal_from_word(words[0], key, base, 0);
}

void standard_normals(Key key, Domain domain, std::uint64_t first_index, std::uint64_t period,
                      std::span<double> lane0, std::span<double> lane1) noexcept {
  assert(lane0.empty() || lane1.empty() || lane0.size() == lane1.size());
  const std::size_t count = lane0.empty() ? lane1.size() : lane0.size();
  for (std::size_t k = 0; k < count; ++k) {
    const Block base = base_counter(domain, first_index + k, period);
    const Block words = philox_inline(base, key);
    if (!lane0.empty()) lane0[k] = normal_from_word(words[0], key, base, 0);
    if (!lane1.empty()) lane1[k] = normal_from_word(words[1], key, base, 1);
  }
}

RngState make_state(const SeedSpec& seed) noexcept { return {derive_key(seed), 0}; }

std::pair<double, RngState> gaussian_draw(RngState state, double mean, double sd) {
  if (!(sd >= 0.0)) throw DomainError("std", "gaussian_draw: standard deviation must be >= 0");
  const double z = standard_normal(state.key, Domain::sequential, state.counter >> 48,
                                   state.counter & kMaxPeriod);
  ++state.counter;
  if (sd == 0.0) return {mean, state};
  return {mean + sd * z, state};
}

}  // namespace dislab::rng
