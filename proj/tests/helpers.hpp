#pragma once

// Shared test utilities: deterministic random generators for the
// domain types and an error-kind extractor.

#include <catch2/catch_amalgamated.hpp>
#include <numeric>
#include <random>
#include <vector>

#include "orientsign/orientsign.hpp"

namespace testutil {

using namespace orientsign;

template <typename F>
errc thrown_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an orientsign::Error");
  return errc::bad_field;
}

inline int pick(std::mt19937& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Bits random_bits(std::mt19937& rng, int k) {
  Bits out(static_cast<std::size_t>(k));
  for (auto& b : out) b = static_cast<std::uint8_t>(pick(rng, 0, 1));
  return out;
}

inline Permutation random_perm(std::mt19937& rng, int k) {
  std::vector<int> img(static_cast<std::size_t>(k));
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(std::move(img));
}

// permutation preserving the given labels (shuffles within label classes)
inline Permutation random_label_perm(std::mt19937& rng, const Bits& labels) {
  int k = static_cast<int>(labels.size());
  std::vector<int> zero, one;
  for (int i = 0; i < k; ++i) (labels[static_cast<std::size_t>(i)] ? one : zero).push_back(i);
  std::vector<int> zeroTo = zero, oneTo = one;
  std::shuffle(zeroTo.begin(), zeroTo.end(), rng);
  std::shuffle(oneTo.begin(), oneTo.end(), rng);
  std::vector<int> img(static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < zero.size(); ++i) img[static_cast<std::size_t>(zero[i])] = zeroTo[i];
  for (std::size_t i = 0; i < one.size(); ++i) img[static_cast<std::size_t>(one[i])] = oneTo[i];
  return Permutation(std::move(img));
}

inline RealCurve random_curve(std::mt19937& rng, int maxGenus,
                              bool needRealLocus = false) {
  for (;;) {
    int g = pick(rng, 0, maxGenus);
    bool sep = pick(rng, 0, 1) == 1;
    if (sep) {
      std::vector<int> ks;
      for (int k = (g % 2 == 0) ? 1 : 2; k <= g + 1; k += 2) ks.push_back(k);
      return RealCurve{g, ks[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(ks.size()) - 1))], true};
    }
    int lo = needRealLocus ? 1 : 0;
    if (g < lo) continue;
    return RealCurve{g, pick(rng, lo, g), false};
  }
}

inline RealBundle random_bundle(std::mt19937& rng, const RealCurve& c,
                                int maxRank = 3) {
  RealBundle b;
  b.rank = pick(rng, 1, maxRank);
  b.w1 = random_bits(rng, c.realComponents);
  b.degree = bit_sum(b.w1) + 2 * pick(rng, -3, 3);
  return b;
}

inline PinAction random_pin(std::mt19937& rng, int k) {
  return PinAction{random_bits(rng, k), random_perm(rng, k)};
}

inline PinAction random_pin_for(std::mt19937& rng, const RealBundle& b) {
  return PinAction{random_bits(rng, static_cast<int>(b.w1.size())),
                   random_label_perm(rng, b.w1)};
}

inline DiffeoClass random_diffeo(std::mt19937& rng, const RealCurve& c,
                                 const Permutation& perm) {
  DiffeoClass d;
  d.componentPerm = perm;
  d.reversesCircle = random_bits(rng, c.realComponents);
  d.detH1Minus = pick(rng, 0, 1) ? Sign::minus() : Sign::plus();
  d.swapsHalves = c.separating && pick(rng, 0, 1) == 1;
  return d;
}

inline Sign random_sign(std::mt19937& rng) {
  return pick(rng, 0, 1) ? Sign::minus() : Sign::plus();
}

}  // namespace testutil
