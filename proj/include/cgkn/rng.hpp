#pragma once

#include <array>
#include <cstdint>

namespace cgkn {

// Counter-based random stream (Philox-4x32 with 10 rounds). Draws are a pure
// function of (seed, stream, counter), so trajectories and training runs are
// reproducible across platforms and thread counts. Distinct `stream` values
// give statistically independent streams under one seed.
class RngStream {
 public:
  explicit RngStream(uint64_t seed, uint64_t stream = 0);

  // Raw generator block: 4x32 bits per counter tick.
  static std::array<uint32_t, 4> philox4x32(const std::array<uint32_t, 4>& counter,
                                            const std::array<uint32_t, 2>& key);

  uint64_t next_u64();
  double uniform();           // (0, 1), 53-bit resolution, never exactly 0
  double normal();            // standard normal via Box-Muller
  // Uniform integer in [0, n).
  uint64_t uniform_index(uint64_t n);

  // Positions the stream at an absolute block counter; with `normal()` the
  // internal pair cache is cleared.
  void seek(uint64_t block);

 private:
  std::array<uint32_t, 2> key_;
  uint64_t stream_;
  uint64_t block_ = 0;
  // One philox block yields two u64 words; they are served in order.
  uint64_t pending_word_ = 0;
  bool has_pending_word_ = false;
  double pending_normal_ = 0.0;
  bool has_pending_normal_ = false;
};

}  // namespace cgkn
