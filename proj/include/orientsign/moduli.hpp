#pragma once

// Orientation data for real Teichmueller spaces and moduli of real
// curves in a symplectic target: the first Stiefel-Whitney pairings
// against loop monodromies, the orientability predicate, and the
// polarisation bookkeeping.
//
// Monodromy along a loop arrives as per-factor signs.  The pairings
// below multiply the factors each formula consumes and report the bit
// (-1 maps to 1).

#include <vector>

#include "orientsign/core.hpp"
#include "orientsign/permutation.hpp"
#include "orientsign/pin.hpp"
#include "orientsign/topology.hpp"

namespace orientsign {

struct ModuliData {
  int halfDim = 2;       // target has dimension 2n
  int genus = 0;         // member curve genus
  int marked = 0;        // number of marked points
  Permutation tau;       // involution of the marked points
  long long c1d = 0;     // pairing of c1 of the target with the class d
  RealCurve curveType;   // topological type of the member curves
  int kMinus = 0;        // non-orientable components of the restricted bundle
  bool rxSpin = false;
  bool reEuOrientable = false;
};

struct LoopMonodromy {
  Sign pinPlus, detH1Minus, oX, rw, hFactor, h0Minus, lr, semiOrient, h1w, tD;
};

inline LoopMonodromy trivial_loop() { return LoopMonodromy{}; }

inline LoopMonodromy compose(const LoopMonodromy& a, const LoopMonodromy& b) {
  return LoopMonodromy{a.pinPlus * b.pinPlus,
                       a.detH1Minus * b.detH1Minus,
                       a.oX * b.oX,
                       a.rw * b.rw,
                       a.hFactor * b.hFactor,
                       a.h0Minus * b.h0Minus,
                       a.lr * b.lr,
                       a.semiOrient * b.semiOrient,
                       a.h1w * b.h1w,
                       a.tD * b.tD};
}

struct PolarisationComponent {
  int multiplicity = 1;
  bool conjugationStable = false;
};

struct PolarisationData {
  std::vector<PolarisationComponent> components;
  bool claimsPD_c1 = false;
  bool claimsPD_w1RX = false;
  bool hasPolarizingSection = false;
};

inline void validate_moduli(const ModuliData& m) {
  require(m.halfDim >= 2, errc::invalid_topology,
          "target dimension 2n must be at least 4");
  validate_curve(m.curveType);
  require(m.marked >= 0, errc::invalid_topology,
          "marked point count must be >= 0");
  require(m.tau.size() == m.marked, errc::length_mismatch,
          "tau must permute exactly the marked points");
  require(m.tau.compose(m.tau).is_identity(), errc::bad_field,
          "tau must be an involution");
  require(m.kMinus >= 0 && m.kMinus <= m.curveType.realComponents,
          errc::invalid_topology,
          "kMinus must lie between 0 and the component count");
  require((m.c1d + m.kMinus) % 2 == 0, errc::parity_mismatch,
          "c1d plus kMinus must be even");
  require(!m.reEuOrientable || m.kMinus == 0, errc::invalid_topology,
          "orientable restricted bundle forces kMinus = 0");
  require(!m.rxSpin || m.reEuOrientable, errc::invalid_topology,
          "a spin real target restricts to an orientable bundle");
}

inline void validate_loop(const ModuliData& m, const LoopMonodromy& g) {
  validate_moduli(m);
  if (!m.curveType.separating)
    require(g.hFactor == Sign::plus(), errc::bad_field,
            "h_factor must be +1 when member curves are non-separating");
}

inline void validate_polarisation(const PolarisationData& p) {
  for (const auto& comp : p.components)
    require(comp.multiplicity == 1 || comp.multiplicity == -1,
            errc::bad_multiplicity,
            "divisor components must have multiplicity +1 or -1");
  require(p.claimsPD_c1, errc::missing_pd_claim,
          "divisor must be claimed Poincare dual to c1 of the target");
  require(p.claimsPD_w1RX, errc::missing_pd_claim,
          "real stable part must be claimed dual to w1 of the real target");
}

// Teichmueller orientations form the determinant line of the
// anti-invariant part of H^1, so a diffeomorphism acts by exactly that
// determinant sign.
inline Sign teich_orientation_sign(const DiffeoClass& d, const RealCurve& c) {
  validate_diffeo(c, d);
  require(c.genus >= 2, errc::genus_too_small,
          "Teichmueller statement needs genus at least 2");
  return d.detH1Minus;
}

inline FactorList moduli_separating_w1_factors(const ModuliData& m,
                                               const LoopMonodromy& g) {
  validate_loop(m, g);
  require(m.curveType.separating, errc::not_separating,
          "pairing defined over separating member curves");
  require((m.c1d + m.kMinus) % 2 == 0, errc::parity_broken,
          "c1d plus kMinus must be even");
  long long halfExp = (m.c1d + m.kMinus) / 2;
  return FactorList{{"det_h1_minus", g.detH1Minus.pow(m.halfDim - 1)},
                    {"rw_line", g.rw},
                    {"complex_orientation", g.hFactor.pow(halfExp)},
                    {"pin_plus", g.pinPlus},
                    {"orientation_lines", g.oX},
                    {"h0_nonorientable", g.h0Minus}};
}

inline int moduli_separating_w1(const ModuliData& m, const LoopMonodromy& g) {
  return factor_product(moduli_separating_w1_factors(m, g)).bit();
}

enum class Orientability { orientable, unknown };

// Sufficient conditions only; the formulas never certify
// non-orientability.
inline Orientability orientable_predicate(const ModuliData& m) {
  validate_moduli(m);
  bool tauInvolutive = !m.tau.is_identity();  // genuine order 2
  bool tauHasFixedPoint = false;
  for (int i = 0; i < m.tau.size(); ++i)
    if (m.tau(i) == i) tauHasFixedPoint = true;
  if (m.rxSpin && m.genus == 0 && m.marked >= 3 && tauHasFixedPoint &&
      tauInvolutive)
    return Orientability::orientable;
  if (m.halfDim % 2 == 1 && tauInvolutive && m.marked >= 2 &&
      m.curveType.separating)
    return Orientability::orientable;
  return Orientability::unknown;
}

inline FactorList moduli_spin_w1_factors(const ModuliData& m,
                                         const LoopMonodromy& g) {
  validate_loop(m, g);
  require(m.c1d % 2 == 0, errc::spin_hypothesis_violated,
          "spin pairing needs even c1d");
  require(m.reEuOrientable, errc::spin_hypothesis_violated,
          "spin pairing needs an orientable restricted bundle");
  require(m.curveType.realComponents >= 1, errc::spin_hypothesis_violated,
          "spin pairing needs a non-empty real locus");
  Sign semi = g.semiOrient.pow(((1 - m.genus) % 2 + 2) % 2);
  return FactorList{{"det_h1_minus", g.detH1Minus.pow(m.halfDim - 1)},
                    {"h1_circles", g.h1w},
                    {"semi_orientation", semi},
                    {"pin_plus", g.pinPlus}};
}

inline int moduli_spin_w1(const ModuliData& m, const LoopMonodromy& g) {
  return factor_product(moduli_spin_w1_factors(m, g)).bit();
}

inline FactorList hypersurface_w1_factors(int bigN, int delta,
                                          const ModuliData& m,
                                          const LoopMonodromy& g) {
  validate_loop(m, g);
  require(bigN >= 4, errc::hypothesis_violated,
          "ambient projective dimension must be at least 4");
  require(bigN % 4 == 0 || bigN % 4 == 3, errc::hypothesis_violated,
          "ambient projective dimension must be 0 or 3 mod 4");
  require(delta >= 1, errc::hypothesis_violated,
          "hypersurface degree must be at least 1");
  require((delta - (bigN + 1)) % 4 == 0, errc::hypothesis_violated,
          "degree must be N+1 mod 4");
  require(delta <= bigN + 1, errc::hypothesis_violated,
          "degree must be at most N+1");
  require(m.marked >= 1, errc::hypothesis_violated,
          "at least one marked point is required");
  bool tauHasFixedPoint = false;
  for (int i = 0; i < m.tau.size(); ++i)
    if (m.tau(i) == i) tauHasFixedPoint = true;
  require(tauHasFixedPoint, errc::hypothesis_violated,
          "tau must fix at least one marked point");
  require(m.curveType.realComponents >= 1, errc::hypothesis_violated,
          "real locus must be non-empty");
  return FactorList{{"tautological_line", g.lr},
                    {"det_h1_minus", g.detH1Minus.pow((delta - 1) % 2)}};
}

inline int hypersurface_w1(int bigN, int delta, const ModuliData& m,
                           const LoopMonodromy& g) {
  return factor_product(hypersurface_w1_factors(bigN, delta, m, g)).bit();
}

inline FactorList polarized_w1_factors(const ModuliData& m,
                                       const LoopMonodromy& g,
                                       const PolarisationData& p) {
  validate_loop(m, g);
  validate_polarisation(p);
  require(p.hasPolarizingSection, errc::no_polarizing_section,
          "pairing needs a polarizing section");
  return FactorList{{"pin_plus", g.pinPlus},
                    {"det_h1_minus", g.detH1Minus.pow(m.halfDim - 1)},
                    {"divisor_line", g.tD}};
}

inline int polarized_w1(const ModuliData& m, const LoopMonodromy& g,
                        const PolarisationData& p) {
  return factor_product(polarized_w1_factors(m, g, p)).bit();
}

}  // namespace orientsign
