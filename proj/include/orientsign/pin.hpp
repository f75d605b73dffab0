#pragma once

// Actions on the set of pin structures over the real locus, modeled as
// the product torsor (Z/2)^k with one coordinate per real component.
// An action is the affine map x -> rho.x + t for a component
// permutation rho and a flip vector t.  The signature of that map as a
// permutation of the 2^k pin structures is what the determinant line
// computations consume.
//
// Also here: mapping-class data of an equivariant diffeomorphism
// (component permutation, circle reversals, det of the action on the
// anti-invariant part of H^1, half-swap bit) and the companion
// signature on local orientations at non-orientable components.

#include <cstdint>
#include <vector>

#include "orientsign/core.hpp"
#include "orientsign/permutation.hpp"
#include "orientsign/topology.hpp"

namespace orientsign {

struct PinAction {
  Bits flips;
  Permutation componentPerm;

  static PinAction identity(int k) {
    return {Bits(static_cast<std::size_t>(k), 0), Permutation::identity(k)};
  }

  bool is_identity() const {
    return componentPerm.is_identity() && bit_sum(flips) == 0;
  }
};

inline void validate_pin_action(int k, const PinAction& a) {
  require(k >= 0, errc::invalid_topology, "component count must be >= 0");
  require(static_cast<int>(a.flips.size()) == k, errc::length_mismatch,
          "flip vector must have one bit per real component");
  require_bits(a.flips, "flips");
  require(a.componentPerm.size() == k, errc::length_mismatch,
          "component permutation must have one entry per real component");
}

// out[p(i)] = t[i]
inline Bits push_bits(const Permutation& p, const Bits& t) {
  require(p.size() == static_cast<int>(t.size()), errc::length_mismatch,
          "bit vector does not match permutation size");
  Bits out(t.size());
  for (int i = 0; i < p.size(); ++i)
    out[static_cast<std::size_t>(p(i))] = t[static_cast<std::size_t>(i)];
  return out;
}

// a after b:  x -> rho_a (rho_b x + t_b) + t_a
inline PinAction compose(const PinAction& a, const PinAction& b) {
  return {xor_bits(a.flips, push_bits(a.componentPerm, b.flips)),
          a.componentPerm.compose(b.componentPerm)};
}

// ---------------------------------------------------------------------------
// orbit counts for the single-cycle case

inline int euler_phi(int n) {
  int out = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out -= out / p;
    while (n % p == 0) n /= p;
  }
  if (n > 1) out -= out / n;
  return out;
}

// Orbits of the cyclic shift on k-bit strings (binary necklaces):
// (1/k) sum_{d|k} phi(d) 2^(k/d).
inline unsigned __int128 binary_necklace_count(int k) {
  require(k >= 1 && k <= 120, errc::too_large,
          "necklace count supported for 1 <= k <= 120");
  unsigned __int128 total = 0;
  for (int d = 1; d <= k; ++d) {
    if (k % d) continue;
    total += static_cast<unsigned __int128>(euler_phi(d))
             << static_cast<unsigned>(k / d);
  }
  return total / static_cast<unsigned>(k);
}

// Orbits of the shift-then-flip-one-coordinate map, equivalently
// antiperiodic strings of length 2k up to rotation:
// (1/(2k)) sum_{d|k, d odd} phi(d) 2^(k/d).
inline unsigned __int128 antiperiodic_necklace_count(int k) {
  require(k >= 1 && k <= 120, errc::too_large,
          "necklace count supported for 1 <= k <= 120");
  unsigned __int128 total = 0;
  for (int d = 1; d <= k; d += 2) {
    if (k % d) continue;
    total += static_cast<unsigned __int128>(euler_phi(d))
             << static_cast<unsigned>(k / d);
  }
  return total / static_cast<unsigned>(2 * k);
}

// Signature of x -> rho.x + t on (Z/2)^k.
//
// The map splits over the cycles of rho.  A cycle of length l acts on
// its own (Z/2)^l; the other k-l coordinates replicate that action
// 2^(k-l) times, so its contribution enters with exponent 2^(k-l),
// even unless l = k.  Hence any rho with two or more cycles gives +1.
// For a single k-cycle, conjugating by a translation moves t by an
// even-weight vector, so only the parity s of t survives; the orbit
// count is the necklace count (s = 0) or the antiperiodic count
// (s = 1), and on an even-size ground set the signature is -1 exactly
// when the orbit count is odd.
inline Sign pin_signature(int k, const PinAction& a) {
  validate_pin_action(k, a);
  if (k == 0) return Sign::plus();
  if (a.componentPerm.cycles().size() >= 2) return Sign::plus();
  unsigned __int128 orbits = bit_parity(a.flips)
                                 ? antiperiodic_necklace_count(k)
                                 : binary_necklace_count(k);
  return Sign::from_parity(static_cast<long long>(orbits & 1));
}

// Same signature by walking the 2^k points.  Oracle for the closed
// form; keep both.
inline Sign pin_signature_bruteforce(int k, const PinAction& a) {
  validate_pin_action(k, a);
  require(k <= 16, errc::too_large, "brute-force signature capped at k <= 16");
  if (k == 0) return Sign::plus();
  const std::uint32_t n = std::uint32_t{1} << k;
  std::uint32_t flipMask = 0;
  for (int i = 0; i < k; ++i)
    if (a.flips[static_cast<std::size_t>(i)]) flipMask |= std::uint32_t{1} << i;
  auto step = [&](std::uint32_t x) {
    std::uint32_t y = 0;
    for (int i = 0; i < k; ++i)
      y |= ((x >> i) & 1u) << a.componentPerm(i);
    return y ^ flipMask;
  };
  std::vector<char> seen(n, 0);
  long long orbits = 0;
  for (std::uint32_t x = 0; x < n; ++x) {
    if (seen[x]) continue;
    ++orbits;
    for (std::uint32_t y = x; !seen[y]; y = step(y)) seen[y] = 1;
  }
  return Sign::from_parity(n - orbits);
}

enum class PinBackend { closed_form, brute_force };

inline Sign pin_signature_with(PinBackend backend, int k, const PinAction& a) {
  return backend == PinBackend::brute_force ? pin_signature_bruteforce(k, a)
                                            : pin_signature(k, a);
}

// ---------------------------------------------------------------------------
// diffeomorphism class data

struct DiffeoClass {
  Permutation componentPerm;
  Bits reversesCircle;
  Sign detH1Minus = Sign::plus();
  bool swapsHalves = false;

  static DiffeoClass identity(int k) {
    return {Permutation::identity(k), Bits(static_cast<std::size_t>(k), 0),
            Sign::plus(), false};
  }

  bool is_trivial_class() const {
    return componentPerm.is_identity() && bit_sum(reversesCircle) == 0 &&
           detH1Minus == Sign::plus() && !swapsHalves;
  }
};

inline void validate_diffeo(const RealCurve& c, const DiffeoClass& d) {
  validate_curve(c);
  require(d.componentPerm.size() == c.realComponents, errc::length_mismatch,
          "component permutation must match the real component count");
  require(static_cast<int>(d.reversesCircle.size()) == c.realComponents,
          errc::length_mismatch,
          "reversal vector must have one bit per real component");
  require_bits(d.reversesCircle, "reverses_circle");
  require(!d.swapsHalves || c.separating, errc::invalid_topology,
          "only a separating curve has halves to swap");
}

// a after b
inline DiffeoClass compose(const DiffeoClass& a, const DiffeoClass& b) {
  require(a.componentPerm.size() == b.componentPerm.size(),
          errc::length_mismatch, "composing diffeo classes of different sizes");
  DiffeoClass out;
  out.componentPerm = a.componentPerm.compose(b.componentPerm);
  out.reversesCircle = Bits(a.reversesCircle.size());
  for (int i = 0; i < b.componentPerm.size(); ++i)
    out.reversesCircle[static_cast<std::size_t>(i)] =
        (b.reversesCircle[static_cast<std::size_t>(i)] ^
         a.reversesCircle[static_cast<std::size_t>(b.componentPerm(i))]) &
        1;
  out.detH1Minus = a.detH1Minus * b.detH1Minus;
  out.swapsHalves = a.swapsHalves != b.swapsHalves;
  return out;
}

// Canonical representative: within each permutation cycle only the
// reversal parity matters, so collect it on the smallest index.
inline DiffeoClass normalized(const DiffeoClass& d) {
  DiffeoClass out = d;
  for (const auto& cyc : d.componentPerm.cycles()) {
    int p = 0;
    for (int i : cyc) p ^= d.reversesCircle[static_cast<std::size_t>(i)] & 1;
    for (int i : cyc) out.reversesCircle[static_cast<std::size_t>(i)] = 0;
    out.reversesCircle[static_cast<std::size_t>(cyc.front())] =
        static_cast<std::uint8_t>(p);
  }
  return out;
}

// Signature of the permutation induced on local orientations at the
// non-orientable components.  Each cycle of the component permutation
// within that set lifts to two cycles when the circle reversals along
// it cancel (net parity 0) and to a single doubled cycle otherwise, so
// the cycle contributes -1 exactly when its reversal parity is 1.
inline Sign sigma_minus_signature(const DiffeoClass& d, const RealBundle& b) {
  int k = d.componentPerm.size();
  require(static_cast<int>(b.w1.size()) == k, errc::length_mismatch,
          "w1 must match the component permutation size");
  require(static_cast<int>(d.reversesCircle.size()) == k, errc::length_mismatch,
          "reversal vector must match the component permutation size");
  require(d.componentPerm.preserves(b.w1), errc::perm_mismatch,
          "component permutation must preserve w1 labels");
  std::vector<char> seen(static_cast<std::size_t>(k), 0);
  Sign s = Sign::plus();
  for (int i = 0; i < k; ++i) {
    if (b.w1[static_cast<std::size_t>(i)] != 1 || seen[static_cast<std::size_t>(i)])
      continue;
    int p = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = d.componentPerm(j)) {
      seen[static_cast<std::size_t>(j)] = 1;
      p ^= d.reversesCircle[static_cast<std::size_t>(j)] & 1;
    }
    if (p) s *= Sign::minus();
  }
  return s;
}

// The two pin-structure torsors over the same diffeomorphism differ by
// the local-orientation signature at non-orientable components.
inline Sign pin_minus_signature(int k, const PinAction& a, const DiffeoClass& d,
                                const RealBundle& b) {
  validate_pin_action(k, a);
  require(a.componentPerm == d.componentPerm, errc::perm_mismatch,
          "pin action and diffeomorphism must share the component permutation");
  return pin_signature(k, a) * sigma_minus_signature(d, b);
}

}  // namespace orientsign
