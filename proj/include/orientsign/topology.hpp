#pragma once

// Topological types of real curves and real bundles over them, plus
// counting of real spin structures.
//
// A real curve of genus g has a real locus with k circle components,
// subject to 0 <= k <= g+1.  If the complement of the real locus is
// disconnected the curve is called separating; then k >= 1 and
// k == g+1 (mod 2).  Otherwise k <= g.
//
// A real bundle carries one first Stiefel-Whitney bit per real
// component; the bit sum is the degree mod 2.  Components with bit 1
// restrict to non-orientable (Moebius-like) real parts.

#include <cstdint>
#include <vector>

#include "orientsign/core.hpp"

namespace orientsign {

struct RealCurve {
  int genus = 0;
  int realComponents = 0;
  bool separating = false;
};

struct RealBundle {
  int rank = 1;
  long long degree = 0;
  Bits w1;  // one bit per real component
};

struct SpinClass {
  Bits w;  // restriction bits of a real spin structure, one per component
};

inline void validate_curve(const RealCurve& c) {
  require(c.genus >= 0, errc::invalid_topology, "genus must be >= 0");
  require(c.realComponents >= 0 && c.realComponents <= c.genus + 1,
          errc::invalid_topology,
          "real component count must lie in [0, genus+1]");
  if (c.separating) {
    require(c.realComponents >= 1, errc::invalid_topology,
            "a separating curve has non-empty real locus");
    require((c.realComponents - (c.genus + 1)) % 2 == 0, errc::invalid_topology,
            "separating curve needs k == g+1 (mod 2)");
  } else {
    require(c.realComponents <= c.genus, errc::invalid_topology,
            "non-separating curve needs k <= g");
  }
}

inline void validate_bundle(const RealCurve& c, const RealBundle& b) {
  validate_curve(c);
  require(b.rank >= 1, errc::invalid_topology, "bundle rank must be >= 1");
  require(static_cast<int>(b.w1.size()) == c.realComponents,
          errc::length_mismatch,
          "w1 must have one bit per real component");
  require_bits(b.w1, "w1");
  require((bit_sum(b.w1) - b.degree) % 2 == 0, errc::parity_mismatch,
          "sum of w1 bits must equal the degree mod 2");
}

inline void validate_spin_class(const RealCurve& c, const SpinClass& s) {
  validate_curve(c);
  require(static_cast<int>(s.w.size()) == c.realComponents,
          errc::length_mismatch,
          "spin class must have one bit per real component");
  require_bits(s.w, "spin class");
  require((bit_sum(s.w) - (c.genus + 1)) % 2 == 0, errc::parity_mismatch,
          "spin class bit sum must equal g+1 mod 2");
}

// number of components whose real part is non-orientable
inline int k_minus(const RealBundle& b) {
  return static_cast<int>(bit_sum(b.w1));
}

inline int k_plus(const RealCurve& c, const RealBundle& b) {
  return c.realComponents - k_minus(b);
}

inline std::vector<int> orientable_components(const RealBundle& b) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(b.w1.size()); ++i)
    if (b.w1[static_cast<std::size_t>(i)] == 0) out.push_back(i);
  return out;
}

inline std::vector<int> nonorientable_components(const RealBundle& b) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(b.w1.size()); ++i)
    if (b.w1[static_cast<std::size_t>(i)] == 1) out.push_back(i);
  return out;
}

// Number of real spin structures on a genus-g curve with k real
// components: 2^(g+k-1).  Exact in 64 bits for g+k <= 64.
inline std::uint64_t spin_count(const RealCurve& c) {
  validate_curve(c);
  require(c.realComponents >= 1, errc::empty_real_locus,
          "spin structure count needs a non-empty real locus");
  int e = c.genus + c.realComponents - 1;
  require(e < 64, errc::too_large, "spin structure count exceeds 64 bits");
  return std::uint64_t{1} << e;
}

// All restriction-bit classes: length-k bit vectors with bit sum
// g+1 mod 2, listed in increasing integer order (component i at bit
// position i).  There are 2^(k-1) of them.
inline std::vector<SpinClass> spin_w_classes(const RealCurve& c) {
  validate_curve(c);
  int k = c.realComponents;
  require(k >= 1, errc::empty_real_locus,
          "spin restriction classes need a non-empty real locus");
  require(k <= 20, errc::too_large, "class enumeration capped at k <= 20");
  std::vector<SpinClass> out;
  out.reserve(std::size_t{1} << (k - 1));
  int want = (c.genus + 1) & 1;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask) {
    if ((__builtin_popcount(mask) & 1) != want) continue;
    Bits w(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) w[static_cast<std::size_t>(i)] = (mask >> i) & 1;
    out.push_back(SpinClass{std::move(w)});
  }
  return out;
}

// Spin structures inducing a fixed restriction class: 2^g, the same
// for every class.
inline std::uint64_t spin_count_per_class(const RealCurve& c) {
  validate_curve(c);
  require(c.realComponents >= 1, errc::empty_real_locus,
          "spin structure count needs a non-empty real locus");
  require(c.genus < 64, errc::too_large, "per-class count exceeds 64 bits");
  return std::uint64_t{1} << c.genus;
}

}  // namespace orientsign
