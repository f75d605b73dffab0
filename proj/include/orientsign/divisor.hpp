#pragma once

// Divisors compatible with a real bundle: adapted point-count shapes,
// explicit point configurations, and the sign evaluators built on the
// determinant-line decomposition over divisor spaces.
//
// A shape (rPlus, rMinus, sPlus, sMinus) counts plus/minus real points
// and plus/minus conjugate pairs.  It is adapted to (curve, bundle)
// when some placement of the real points on the real components meets
// the degree equation and the per-component parity (w1 duality).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orientsign/core.hpp"
#include "orientsign/permutation.hpp"
#include "orientsign/pin.hpp"
#include "orientsign/topology.hpp"

namespace orientsign {

struct DivisorShape {
  long long rPlus = 0;
  long long rMinus = 0;
  long long sPlus = 0;
  long long sMinus = 0;
};

inline void validate_shape(const DivisorShape& s) {
  require(s.rPlus >= 0 && s.rMinus >= 0 && s.sPlus >= 0 && s.sMinus >= 0,
          errc::bad_field, "shape entries must be nonnegative");
}

// Explicit placement: real point components (1-based, with repetition),
// conjugate pairs as counts only (they live off the real locus).
struct DivisorConfig {
  std::vector<int> realPlus;
  std::vector<int> realMinus;
  long long conjPairsPlus = 0;
  long long conjPairsMinus = 0;
};

inline void validate_config(const DivisorShape& s, const DivisorConfig& cfg,
                            const RealCurve& c, const RealBundle& b) {
  validate_shape(s);
  validate_bundle(c, b);
  require(static_cast<long long>(cfg.realPlus.size()) == s.rPlus &&
              static_cast<long long>(cfg.realMinus.size()) == s.rMinus,
          errc::length_mismatch, "config point counts must match the shape");
  require(cfg.conjPairsPlus == s.sPlus && cfg.conjPairsMinus == s.sMinus,
          errc::length_mismatch, "config pair counts must match the shape");
  require(s.rPlus - s.rMinus + 2 * (s.sPlus - s.sMinus) == b.degree,
          errc::parity_mismatch, "configuration degree must match the bundle");
  std::vector<long long> perComponent(static_cast<std::size_t>(c.realComponents), 0);
  auto place = [&](const std::vector<int>& pts) {
    for (int i : pts) {
      require(i >= 1 && i <= c.realComponents, errc::bad_component_index,
              "point placed on a component out of range");
      ++perComponent[static_cast<std::size_t>(i - 1)];
    }
  };
  place(cfg.realPlus);
  place(cfg.realMinus);
  for (int i = 0; i < c.realComponents; ++i)
    require((perComponent[static_cast<std::size_t>(i)] -
             b.w1[static_cast<std::size_t>(i)]) % 2 == 0,
            errc::parity_mismatch,
            "per-component point parity must match w1");
}

enum class AdaptedBackend { automatic, search, parity };

namespace detail {

// Exhaustive placement feasibility: distribute exactly rPlus plus and
// rMinus minus points over the k components with the per-component
// parities w1[i].  Memoized walk over (component, plus left, minus
// left, parity placed so far on the current component); every concrete
// placement corresponds to a path, so this decides the same question
// as enumerating configurations.
inline bool placement_search(const RealCurve& c, const RealBundle& b,
                             long long rPlus, long long rMinus) {
  int k = c.realComponents;
  if (k == 0) return rPlus == 0 && rMinus == 0;
  const std::size_t states = static_cast<std::size_t>(k + 1) *
                             static_cast<std::size_t>(rPlus + 1) *
                             static_cast<std::size_t>(rMinus + 1) * 2;
  require(states <= std::size_t{2} * 1000 * 1000, errc::search_too_large,
          "placement search state space too large");
  std::vector<signed char> memo(states, -1);
  auto idx = [&](int i, long long a, long long bb, int par) {
    return ((static_cast<std::size_t>(i) * static_cast<std::size_t>(rPlus + 1) +
             static_cast<std::size_t>(a)) *
                static_cast<std::size_t>(rMinus + 1) +
            static_cast<std::size_t>(bb)) *
               2 +
           static_cast<std::size_t>(par);
  };
  // explicit stack: (state, expanded?)
  struct Node {
    int i;
    long long a, b;
    int par;
  };
  auto rec = [&](auto&& self, int i, long long a, long long bb, int par) -> bool {
    if (i == k) return a == 0 && bb == 0;
    signed char& m = memo[idx(i, a, bb, par)];
    if (m >= 0) return m == 1;
    m = 0;  // guards against revisiting while expanding; graph is acyclic
    bool ok = false;
    if (par == (b.w1[static_cast<std::size_t>(i)] & 1))
      ok = self(self, i + 1, a, bb, 0);
    if (!ok && a > 0) ok = self(self, i, a - 1, bb, par ^ 1);
    if (!ok && bb > 0) ok = self(self, i, a, bb - 1, par ^ 1);
    m = ok ? 1 : 0;
    return ok;
  };
  return rec(rec, 0, rPlus, rMinus, 0);
}

// Closed form for the same feasibility question: every non-orientable
// component needs an odd (hence >= 1) number of points, orientable
// ones an even number, so a placement exists iff the total R = r+ + r-
// covers kMinus with the right parity (and lands on some component at
// all when R > 0).
inline bool placement_parity(const RealCurve& c, const RealBundle& b,
                             long long rPlus, long long rMinus) {
  long long total = rPlus + rMinus;
  int kMin = k_minus(b);
  if (c.realComponents == 0) return total == 0 && kMin == 0;
  return total >= kMin && (total - kMin) % 2 == 0;
}

}  // namespace detail

inline bool is_adapted(const DivisorShape& s, const RealCurve& c,
                       const RealBundle& b,
                       AdaptedBackend backend = AdaptedBackend::automatic) {
  validate_shape(s);
  validate_bundle(c, b);
  if (s.rPlus - s.rMinus + 2 * (s.sPlus - s.sMinus) != b.degree) return false;
  switch (backend) {
    case AdaptedBackend::search:
      return detail::placement_search(c, b, s.rPlus, s.rMinus);
    case AdaptedBackend::parity:
      return detail::placement_parity(c, b, s.rPlus, s.rMinus);
    case AdaptedBackend::automatic: {
      const unsigned long long work =
          static_cast<unsigned long long>(c.realComponents + 1) *
          static_cast<unsigned long long>(s.rPlus + 1) *
          static_cast<unsigned long long>(s.rMinus + 1);
      if (work <= 1000ull * 1000ull)
        return detail::placement_search(c, b, s.rPlus, s.rMinus);
      return detail::placement_parity(c, b, s.rPlus, s.rMinus);
    }
  }
  fail(errc::bad_field, "unknown backend");
}

// All point placements realizing a shape (small instances only; the
// count explodes combinatorially).  Used as the literal oracle behind
// is_adapted.
inline std::vector<DivisorConfig> enumerate_configs(const DivisorShape& s,
                                                    const RealCurve& c,
                                                    const RealBundle& b) {
  validate_shape(s);
  validate_bundle(c, b);
  int k = c.realComponents;
  require(s.rPlus <= 8 && s.rMinus <= 8 && k <= 6, errc::search_too_large,
          "configuration enumeration is for small shapes only");
  std::vector<DivisorConfig> out;
  if (k == 0) {
    if (s.rPlus == 0 && s.rMinus == 0) {
      DivisorConfig cfg{{}, {}, s.sPlus, s.sMinus};
      if (s.rPlus - s.rMinus + 2 * (s.sPlus - s.sMinus) == b.degree)
        out.push_back(cfg);
    }
    return out;
  }
  std::vector<int> plus, minus;
  // nondecreasing component sequences = multisets
  auto gen = [&](auto&& self, std::vector<int>& pts, long long left, int minComp,
                 auto&& done) -> void {
    if (left == 0) {
      done();
      return;
    }
    for (int i = minComp; i <= k; ++i) {
      pts.push_back(i);
      self(self, pts, left - 1, i, done);
      pts.pop_back();
    }
  };
  gen(gen, plus, s.rPlus, 1, [&] {
    gen(gen, minus, s.rMinus, 1, [&] {
      DivisorConfig cfg{plus, minus, s.sPlus, s.sMinus};
      try {
        validate_config(s, cfg, c, b);
      } catch (const Error&) {
        return;
      }
      out.push_back(cfg);
    });
  });
  return out;
}

// |S_d| = rPlus! rMinus! (2^sPlus sPlus!) (2^sMinus sMinus!)
inline std::uint64_t renumbering_group_order(const DivisorShape& s) {
  validate_shape(s);
  unsigned long long acc = 1;
  auto mul = [&](unsigned long long v) {
    unsigned long long r;
    require(!__builtin_umulll_overflow(acc, v, &r), errc::too_large,
            "renumbering group order exceeds 64 bits");
    acc = r;
  };
  auto factorial = [&](long long n) {
    for (long long i = 2; i <= n; ++i) mul(static_cast<unsigned long long>(i));
  };
  factorial(s.rPlus);
  factorial(s.rMinus);
  for (long long i = 0; i < s.sPlus; ++i) mul(2);
  factorial(s.sPlus);
  for (long long i = 0; i < s.sMinus; ++i) mul(2);
  factorial(s.sMinus);
  return acc;
}

// ---------------------------------------------------------------------------
// sign evaluators on the tensor decomposition

// Signs of an automorphism (or loop monodromy) on the individual
// tensor factors.  The five core factors drive the full decomposition;
// the rest belong to the specialized evaluators.
struct FactorAction {
  std::optional<Sign> pinPlus, dFactor, rjFactor, tFactor, h1Minus;
  std::optional<Sign> oFactor, h0Minus, hFactor, semiOrient, h1w;
};

inline FactorAction identity_factor_action() {
  FactorAction fa;
  fa.pinPlus = fa.dFactor = fa.rjFactor = fa.tFactor = fa.h1Minus = Sign::plus();
  return fa;
}

inline FactorAction multiply(const FactorAction& a, const FactorAction& b) {
  FactorAction out;
  auto mul = [](const std::optional<Sign>& x, const std::optional<Sign>& y)
      -> std::optional<Sign> {
    if (x && y) return *x * *y;
    return std::nullopt;
  };
  out.pinPlus = mul(a.pinPlus, b.pinPlus);
  out.dFactor = mul(a.dFactor, b.dFactor);
  out.rjFactor = mul(a.rjFactor, b.rjFactor);
  out.tFactor = mul(a.tFactor, b.tFactor);
  out.h1Minus = mul(a.h1Minus, b.h1Minus);
  out.oFactor = mul(a.oFactor, b.oFactor);
  out.h0Minus = mul(a.h0Minus, b.h0Minus);
  out.hFactor = mul(a.hFactor, b.hFactor);
  out.semiOrient = mul(a.semiOrient, b.semiOrient);
  out.h1w = mul(a.h1w, b.h1w);
  return out;
}

inline FactorList eval_decomposition_factors(const FactorAction& fa, int rank) {
  require(rank >= 1, errc::invalid_topology, "rank must be >= 1");
  require(fa.pinPlus && fa.dFactor && fa.rjFactor && fa.tFactor && fa.h1Minus,
          errc::missing_factor,
          "all five core factor signs are required");
  return FactorList{{"pin_plus", *fa.pinPlus},
                    {"d_factor", *fa.dFactor},
                    {"rj_factor", *fa.rjFactor},
                    {"t_factor", *fa.tFactor},
                    {"det_h1_minus", fa.h1Minus->pow(rank)}};
}

inline Sign eval_decomposition(const FactorAction& fa, int rank) {
  return factor_product(eval_decomposition_factors(fa, rank));
}

// Monodromy of the loop swapping the two points of one conjugate pair.
// The divisor-orientation factor is non-trivial exactly when the curve
// is non-separating; the point-renumbering factor always flips (the
// swap is a transposition); the rest stay put.
inline FactorAction conjugate_swap_monodromy(const RealCurve& c) {
  validate_curve(c);
  FactorAction fa = identity_factor_action();
  fa.dFactor = c.separating ? Sign::plus() : Sign::minus();
  fa.rjFactor = Sign::minus();
  return fa;
}

// With a shape: no conjugate pair, no such loop.
inline FactorAction conjugate_swap_monodromy(const RealCurve& c,
                                             const DivisorShape& s) {
  validate_shape(s);
  if (s.sPlus == 0 && s.sMinus == 0) return identity_factor_action();
  return conjugate_swap_monodromy(c);
}

// Per-point line monodromies (cotangent lines at real plus points, or
// the marked-point lines of a moduli problem) enter as the determinant
// of a signed permutation of the points.
inline Sign point_line_sign(const SignedPerm& action) { return action.det(); }

// Separating-curve evaluator.  orientActions lists the sign of the
// action on the orientation line of each orientable component, in
// increasing component order; the permutation part is induced by the
// diffeomorphism.
inline FactorList eval_separating_factors(
    const RealCurve& c, const RealBundle& b, const PinAction& pin,
    const DiffeoClass& diffeo, const std::vector<Sign>& orientActions,
    PinBackend backend = PinBackend::closed_form) {
  validate_curve(c);
  require(c.separating, errc::not_separating,
          "evaluator defined for separating curves");
  require(static_cast<int>(b.w1.size()) == c.realComponents,
          errc::length_mismatch, "w1 must have one bit per real component");
  require_bits(b.w1, "w1");
  require(b.rank >= 1, errc::invalid_topology, "rank must be >= 1");
  int kMin = k_minus(b);
  require((b.degree + kMin) % 2 == 0, errc::parity_broken,
          "degree plus non-orientable count must be even");
  validate_pin_action(c.realComponents, pin);
  validate_diffeo(c, diffeo);
  require(pin.componentPerm == diffeo.componentPerm, errc::perm_mismatch,
          "pin action and diffeomorphism must share the component permutation");
  require(pin.componentPerm.preserves(b.w1), errc::perm_mismatch,
          "component permutation must preserve w1 labels");
  std::vector<int> orient = orientable_components(b);
  require(orientActions.size() == orient.size(), errc::length_mismatch,
          "need one orientation-line sign per orientable component");

  Sign oSign = diffeo.componentPerm.restrict_to(orient).signature();
  for (Sign s : orientActions) oSign *= s;
  Sign h0Sign =
      diffeo.componentPerm.restrict_to(nonorientable_components(b)).signature();
  long long halfExp = (b.degree + kMin) / 2;
  Sign hSign = diffeo.swapsHalves ? Sign::from_parity(halfExp) : Sign::plus();

  return FactorList{
      {"pin_plus", pin_signature_with(backend, c.realComponents, pin)},
      {"orientation_lines", oSign},
      {"h0_nonorientable", h0Sign},
      {"det_h1_minus", diffeo.detH1Minus.pow(b.rank)},
      {"complex_orientation", hSign}};
}

inline Sign eval_separating(const RealCurve& c, const RealBundle& b,
                            const PinAction& pin, const DiffeoClass& diffeo,
                            const std::vector<Sign>& orientActions,
                            PinBackend backend = PinBackend::closed_form) {
  return factor_product(
      eval_separating_factors(c, b, pin, diffeo, orientActions, backend));
}

// Orientable-real-part (spin) evaluator.  xiClass fixes the spin
// restriction bits; h1wAction is the signed permutation of the
// components carrying bit 1 (sign -1 where the circle is reversed).
inline FactorList eval_spin_case_factors(
    const RealCurve& c, const RealBundle& b, const PinAction& pin,
    const DiffeoClass& diffeo, const SpinClass& xiClass, bool semiOrientFlip,
    const SignedPerm& h1wAction, PinBackend backend = PinBackend::closed_form) {
  validate_curve(c);
  require(c.realComponents >= 1, errc::spin_hypothesis_violated,
          "spin evaluator needs a non-empty real locus");
  require(b.degree % 2 == 0, errc::spin_hypothesis_violated,
          "spin evaluator needs even degree");
  require(static_cast<int>(b.w1.size()) == c.realComponents,
          errc::length_mismatch, "w1 must have one bit per real component");
  require(bit_sum(b.w1) == 0, errc::spin_hypothesis_violated,
          "spin evaluator needs an orientable real part (w1 = 0)");
  require(b.rank >= 1, errc::invalid_topology, "rank must be >= 1");
  validate_spin_class(c, xiClass);
  validate_pin_action(c.realComponents, pin);
  validate_diffeo(c, diffeo);
  require(pin.componentPerm == diffeo.componentPerm, errc::perm_mismatch,
          "pin action and diffeomorphism must share the component permutation");
  require(static_cast<long long>(h1wAction.perm.size()) == bit_sum(xiClass.w),
          errc::length_mismatch,
          "h1w action must cover exactly the components with spin bit 1");

  Sign semi = semiOrientFlip ? Sign::from_parity(1 - c.genus) : Sign::plus();
  return FactorList{
      {"pin_plus", pin_signature_with(backend, c.realComponents, pin)},
      {"det_h1_minus", diffeo.detH1Minus.pow(b.rank)},
      {"semi_orientation", semi},
      {"h1_circles", h1wAction.det()}};
}

inline Sign eval_spin_case(const RealCurve& c, const RealBundle& b,
                           const PinAction& pin, const DiffeoClass& diffeo,
                           const SpinClass& xiClass, bool semiOrientFlip,
                           const SignedPerm& h1wAction,
                           PinBackend backend = PinBackend::closed_form) {
  return factor_product(eval_spin_case_factors(c, b, pin, diffeo, xiClass,
                                               semiOrientFlip, h1wAction,
                                               backend));
}

}  // namespace orientsign
