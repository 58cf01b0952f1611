#pragma once

// Deterministic random streams with documented seed splitting.
//
// Child seeds are derived as
//     derive_seed(master, label, index)
//       = splitmix64( splitmix64(master ^ fnv1a64(label)) + (index + 1) * PHI )
// where PHI is the 64-bit golden-ratio constant. Every sampling component
// (one per term, per shot block, per trajectory) owns its own stream, so
// results do not depend on thread count or evaluation order.

#include <cstdint>
#include <random>
#include <string_view>

namespace merminsim {

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t fnv1a64(std::string_view text);
std::uint64_t derive_seed(std::uint64_t master, std::string_view label,
                          std::uint64_t index);

class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(seed) {}
  RngStream(std::uint64_t master, std::string_view label, std::uint64_t index)
      : engine_(derive_seed(master, label, index)) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits; avoids distribution objects so the
  // mapping from engine output to doubles is pinned down exactly.
  double next_unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace merminsim
