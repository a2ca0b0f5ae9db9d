#include "cgkn/rng.hpp"

#include <cmath>

namespace cgkn {

namespace {
constexpr uint32_t kMul0 = 0xD2511F53u;
constexpr uint32_t kMul1 = 0xCD9E8D57u;
constexpr uint32_t kWeyl0 = 0x9E3779B9u;
constexpr uint32_t kWeyl1 = 0xBB67AE85u;

inline void round_once(std::array<uint32_t, 4>& x, const std::array<uint32_t, 2>& k) {
  uint64_t p0 = static_cast<uint64_t>(kMul0) * x[0];
  uint64_t p1 = static_cast<uint64_t>(kMul1) * x[2];
  uint32_t hi0 = static_cast<uint32_t>(p0 >> 32), lo0 = static_cast<uint32_t>(p0);
  uint32_t hi1 = static_cast<uint32_t>(p1 >> 32), lo1 = static_cast<uint32_t>(p1);
  x = {hi1 ^ x[1] ^ k[0], lo1, hi0 ^ x[3] ^ k[1], lo0};
}
}  // namespace

std::array<uint32_t, 4> RngStream::philox4x32(const std::array<uint32_t, 4>& counter,
                                              const std::array<uint32_t, 2>& key) {
  std::array<uint32_t, 4> x = counter;
  std::array<uint32_t, 2> k = key;
  for (int r = 0; r < 10; ++r) {
    if (r > 0) {
      k[0] += kWeyl0;
      k[1] += kWeyl1;
    }
    round_once(x, k);
  }
  return x;
}

RngStream::RngStream(uint64_t seed, uint64_t stream)
    : key_{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32)}, stream_(stream) {}

uint64_t RngStream::next_u64() {
  if (has_pending_word_) {
    has_pending_word_ = false;
    return pending_word_;
  }
  std::array<uint32_t, 4> ctr = {static_cast<uint32_t>(block_), static_cast<uint32_t>(block_ >> 32),
                                 static_cast<uint32_t>(stream_),
                                 static_cast<uint32_t>(stream_ >> 32)};
  std::array<uint32_t, 4> out = philox4x32(ctr, key_);
  ++block_;
  pending_word_ = (static_cast<uint64_t>(out[2]) << 32) | out[3];
  has_pending_word_ = true;
  return (static_cast<uint64_t>(out[0]) << 32) | out[1];
}

double RngStream::uniform() {
  // 53 bits of mantissa, offset by half an ulp so the result is never 0.
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double RngStream::normal() {
  if (has_pending_normal_) {
    has_pending_normal_ = false;
    return pending_normal_;
  }
  double u1 = uniform();
  double u2 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double a = 2.0 * M_PI * u2;
  pending_normal_ = r * std::sin(a);
  has_pending_normal_ = true;
  return r * std::cos(a);
}

uint64_t RngStream::uniform_index(uint64_t n) {
  // Rejection sampling to avoid modulo bias.
  if (n == 0) return 0;
  uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  uint64_t x;
  do {
    x = next_u64();
  } while (x >= limit);
  return x % n;
}

void RngStream::seek(uint64_t block) {
  block_ = block;
  has_pending_word_ = false;
  has_pending_normal_ = false;
}

}  // namespace cgkn
