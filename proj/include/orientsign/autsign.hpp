#pragma once

// Total orientation-action signs for bundle automorphism classes.
//
// Automorphism classes come filtered in three levels: fix the curve
// and act with determinant one (rsaut), fix the curve (raut), or move
// it by an equivariant diffeomorphism (riso).  The class data is a pin
// action, a word of determinant-part generators, and a diffeomorphism
// class; each level constrains which parts may be non-trivial.
//
// Determinant parts lifting the identity are expressed as words in
// four generator twists: a twist along a real component, along an
// invariant circle disjoint from the real locus, along a pair of
// conjugate circles, and the global minus-one map.

#include <string>
#include <vector>

#include "orientsign/core.hpp"
#include "orientsign/permutation.hpp"
#include "orientsign/pin.hpp"
#include "orientsign/topology.hpp"

namespace orientsign {

enum class TwistKind { real_component, invariant_circle, conjugate_pair, minus_one };

struct DetGenerator {
  TwistKind kind = TwistKind::minus_one;
  int component = 0;  // 1-based, used by real_component only
};

using DetWord = std::vector<DetGenerator>;

enum class AutLevel { rsaut, raut, riso };

struct AutClass {
  AutLevel level = AutLevel::rsaut;
  PinAction pin;
  DetWord detWord;
  DiffeoClass diffeo;
};

// determinant bundle: rank one, same degree, same w1 bits
inline RealBundle det_bundle(const RealBundle& b) {
  return RealBundle{1, b.degree, b.w1};
}

inline void validate_word(const DetWord& w, const RealCurve& c) {
  for (const auto& gen : w) {
    if (gen.kind == TwistKind::real_component)
      require(gen.component >= 1 && gen.component <= c.realComponents,
              errc::bad_component_index,
              "real component twist index out of range");
  }
}

inline void validate_aut_class(const AutClass& a, const RealCurve& c,
                               const RealBundle& b) {
  validate_bundle(c, b);
  validate_pin_action(c.realComponents, a.pin);
  require(a.pin.componentPerm.preserves(b.w1), errc::perm_mismatch,
          "pin action permutation must preserve w1 labels");
  validate_diffeo(c, a.diffeo);
  require(a.pin.componentPerm == a.diffeo.componentPerm, errc::perm_mismatch,
          "pin action and diffeomorphism must share the component permutation");
  validate_word(a.detWord, c);
  if (a.level == AutLevel::rsaut)
    require(a.detWord.empty() && a.diffeo.is_trivial_class(),
            errc::level_mismatch,
            "rsaut class must have empty word and trivial diffeomorphism");
  if (a.level == AutLevel::raut)
    require(a.diffeo.is_trivial_class(), errc::level_mismatch,
            "raut class must have a trivial diffeomorphism");
}

// Sign of a single determinant-part generator acting on orientations
// of the determinant line, for a rank-one bundle:
//   twist on a real component: +1 iff the real part is non-orientable
//   there; twist on an invariant circle off the real locus: -1;
//   twist on a conjugate pair: +1; global minus one: parity of d+1-g.
inline Sign generator_sign(const DetGenerator& gen, const RealCurve& c,
                           const RealBundle& b) {
  validate_bundle(c, b);
  require(b.rank == 1, errc::rank_not_one,
          "generator twists act on a rank-one bundle");
  switch (gen.kind) {
    case TwistKind::real_component:
      require(gen.component >= 1 && gen.component <= c.realComponents,
              errc::bad_component_index,
              "real component twist index out of range");
      return b.w1[static_cast<std::size_t>(gen.component - 1)] ? Sign::plus()
                                                               : Sign::minus();
    case TwistKind::invariant_circle:
      return Sign::minus();
    case TwistKind::conjugate_pair:
      return Sign::plus();
    case TwistKind::minus_one:
      return Sign::from_parity(b.degree + 1 - c.genus);
  }
  fail(errc::bad_field, "unknown twist kind");
}

inline Sign word_sign(const DetWord& w, const RealCurve& c, const RealBundle& b) {
  Sign s = Sign::plus();
  for (const auto& gen : w) s *= generator_sign(gen, c, b);
  return s;
}

// Warnings for word tokens that cannot occur on the given curve: an
// invariant circle disjoint from the real locus would have to lie in
// one half of a separating curve while the involution carries it to
// the other half.
inline std::vector<std::string> word_warnings(const DetWord& w,
                                              const RealCurve& c) {
  std::vector<std::string> out;
  if (!c.separating) return out;
  for (const auto& gen : w)
    if (gen.kind == TwistKind::invariant_circle) {
      out.push_back(
          "invariant_circle twist: a separating curve carries no invariant "
          "circle disjoint from its real locus; sign kept for reference");
      break;
    }
  return out;
}

inline Sign rsaut_sign(const AutClass& a, const RealCurve& c,
                       const RealBundle& b) {
  require(a.level == AutLevel::rsaut, errc::level_mismatch,
          "rsaut_sign needs an rsaut-level class");
  validate_aut_class(a, c, b);
  return pin_signature(c.realComponents, a.pin);
}

inline Sign raut_sign(const AutClass& a, const RealCurve& c,
                      const RealBundle& b,
                      PinBackend backend = PinBackend::closed_form) {
  require(a.level == AutLevel::rsaut || a.level == AutLevel::raut,
          errc::level_mismatch, "raut_sign needs an rsaut or raut class");
  validate_aut_class(a, c, b);
  return pin_signature_with(backend, c.realComponents, a.pin) *
         word_sign(a.detWord, c, det_bundle(b));
}

// Full-level sign.  lineSign is the action of the induced map on
// orientations of the determinant line of the rank-one determinant
// bundle; it must be supplied (from word_sign when the underlying
// diffeomorphism is trivial, from the divisor evaluators otherwise).
inline Sign riso_sign(const AutClass& a, const RealCurve& c,
                      const RealBundle& b, Sign lineSign,
                      PinBackend backend = PinBackend::closed_form) {
  require(a.level == AutLevel::riso, errc::level_mismatch,
          "riso_sign needs a riso-level class");
  validate_aut_class(a, c, b);
  return pin_signature_with(backend, c.realComponents, a.pin) * lineSign *
         a.diffeo.detH1Minus.pow(b.rank - 1);
}

// The part of a word's total sign not seen by the pin torsor: total
// divided by the pin signature (signs are self-inverse).
inline Sign pin_residual_sign(const DetWord& w, const PinAction& a_pin,
                              const RealCurve& c, const RealBundle& b) {
  validate_bundle(c, b);
  require(b.rank == 1, errc::rank_not_one,
          "residual sign defined for rank-one bundles");
  validate_pin_action(c.realComponents, a_pin);
  return word_sign(w, c, b) * pin_signature(c.realComponents, a_pin);
}

inline AutClass compose(const AutClass& a, const AutClass& b) {
  AutClass out;
  out.level = a.level >= b.level ? a.level : b.level;
  out.pin = compose(a.pin, b.pin);
  out.diffeo = compose(a.diffeo, b.diffeo);
  out.detWord = a.detWord;
  out.detWord.insert(out.detWord.end(), b.detWord.begin(), b.detWord.end());
  return out;
}

// ---------------------------------------------------------------------------
// Generator pin rules.
//
// Each built-in generator acts on the pin torsor by flipping a fixed
// pattern of components.  The pattern is not free: requiring the
// orientation-line evaluator for separating curves to reproduce the
// generator table on every separating type with small genus pins it
// down uniquely (see derivation.hpp), and the unique solution flips
// nothing.  The rule space searched is the five booleans below;
// invariant-circle twists live away from the real locus and never
// touch pin structures, so they carry no rule bit.

struct GeneratorPinTable {
  bool realTwistFlipsOrientable = false;
  bool realTwistFlipsNonOrientable = false;
  bool conjugatePairFlipsAll = false;
  bool minusOneFlipsOrientable = false;
  bool minusOneFlipsNonOrientable = false;

  friend bool operator==(const GeneratorPinTable&,
                         const GeneratorPinTable&) = default;
};

inline Bits generator_pin_flips(const GeneratorPinTable& t,
                                const DetGenerator& gen, const RealCurve& c,
                                const RealBundle& b) {
  Bits flips(static_cast<std::size_t>(c.realComponents), 0);
  auto flip_by_label = [&](bool onOrientable, bool onNonOrientable) {
    for (int i = 0; i < c.realComponents; ++i) {
      bool nonOr = b.w1[static_cast<std::size_t>(i)] == 1;
      if (nonOr ? onNonOrientable : onOrientable)
        flips[static_cast<std::size_t>(i)] ^= 1;
    }
  };
  switch (gen.kind) {
    case TwistKind::real_component: {
      int i0 = gen.component - 1;
      require(i0 >= 0 && i0 < c.realComponents, errc::bad_component_index,
              "real component twist index out of range");
      bool nonOr = b.w1[static_cast<std::size_t>(i0)] == 1;
      if (nonOr ? t.realTwistFlipsNonOrientable : t.realTwistFlipsOrientable)
        flips[static_cast<std::size_t>(i0)] ^= 1;
      break;
    }
    case TwistKind::invariant_circle:
      break;
    case TwistKind::conjugate_pair:
      if (t.conjugatePairFlipsAll) flip_by_label(true, true);
      break;
    case TwistKind::minus_one:
      flip_by_label(t.minusOneFlipsOrientable, t.minusOneFlipsNonOrientable);
      break;
  }
  return flips;
}

// Pin action of a whole word: identity permutation, flips accumulated.
inline PinAction word_pin_action(const GeneratorPinTable& t, const DetWord& w,
                                 const RealCurve& c, const RealBundle& b) {
  PinAction out = PinAction::identity(c.realComponents);
  for (const auto& gen : w)
    out.flips = xor_bits(out.flips, generator_pin_flips(t, gen, c, b));
  return out;
}

// Action of a word on the orientation lines of the orientable
// components, listed in increasing component order: a real-component
// twist reverses its own line, minus one reverses all of them.
inline std::vector<Sign> word_orientation_actions(const DetWord& w,
                                                  const RealCurve& c,
                                                  const RealBundle& b) {
  std::vector<int> comps = orientable_components(b);
  std::vector<Sign> out(comps.size(), Sign::plus());
  for (const auto& gen : w) {
    switch (gen.kind) {
      case TwistKind::real_component:
        for (std::size_t p = 0; p < comps.size(); ++p)
          if (comps[p] == gen.component - 1) out[p] *= Sign::minus();
        break;
      case TwistKind::minus_one:
        for (auto& s : out) s *= Sign::minus();
        break;
      default:
        break;
    }
  }
  return out;
}

}  // namespace orientsign
