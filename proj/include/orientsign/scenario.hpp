#pragma once

// Scenario execution: each CLI command maps to a run_* function taking
// the parsed input document and returning the output document, its
// exit code, and any warnings for stderr.  Keeping this below the CLI
// lets tests drive commands without spawning processes.

#include <string>
#include <vector>

#include "orientsign/autsign.hpp"
#include "orientsign/core.hpp"
#include "orientsign/derivation.hpp"
#include "orientsign/divisor.hpp"
#include "orientsign/json_io.hpp"
#include "orientsign/moduli.hpp"
#include "orientsign/pin.hpp"
#include "orientsign/topology.hpp"

namespace orientsign {

struct RunResult {
  json doc;
  int exitCode = 0;
  std::vector<std::string> warnings;
};

namespace detail {

template <typename F>
RunResult guarded(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    return RunResult{error_to_json(e), errc_exit_code(e.kind()), {}};
  }
}

struct SignOutcome {
  Sign sign;
  FactorList factors;
  std::vector<std::string> warnings;
};

inline SignOutcome sign_scenario(const json& input, PinBackend backend) {
  jio::check_keys(input,
                  {"curve", "bundle", "automorphism", "line_sign",
                   "orient_actions", "xi_class", "semi_orient_flip",
                   "h1w_action"},
                  "sign input");
  RealCurve c = curve_from_json(jio::field(input, "curve", "sign input"));
  RealBundle b = bundle_from_json(jio::field(input, "bundle", "sign input"));
  AutClass a = aut_from_json(jio::field(input, "automorphism", "sign input"),
                             c.realComponents);
  validate_aut_class(a, c, b);

  SignOutcome out;
  switch (a.level) {
    case AutLevel::rsaut: {
      Sign pin = pin_signature_with(backend, c.realComponents, a.pin);
      out.sign = pin;
      out.factors = {{"pin_plus", pin}};
      return out;
    }
    case AutLevel::raut: {
      Sign pin = pin_signature_with(backend, c.realComponents, a.pin);
      Sign word = word_sign(a.detWord, c, det_bundle(b));
      out.sign = pin * word;
      out.factors = {{"pin_plus", pin}, {"determinant_word", word}};
      out.warnings = word_warnings(a.detWord, c);
      return out;
    }
    case AutLevel::riso:
      break;
  }

  if (input.contains("line_sign")) {
    Sign line = jio::sign_field(input, "line_sign", "sign input");
    Sign pin = pin_signature_with(backend, c.realComponents, a.pin);
    Sign det = a.diffeo.detH1Minus.pow(b.rank - 1);
    out.sign = riso_sign(a, c, b, line, backend);
    out.factors = {{"pin_plus", pin}, {"line", line}, {"det_h1_minus", det}};
    return out;
  }

  if (input.contains("orient_actions")) {
    std::vector<Sign> given = jio::signs_value(
        input.at("orient_actions"), "sign input.orient_actions");
    for (const auto& gen : a.detWord)
      require(gen.kind != TwistKind::invariant_circle, errc::unsupported,
              "invariant_circle twists cannot be folded into the "
              "separating-curve evaluator");
    const GeneratorPinTable table = builtin_generator_pin_table();
    PinAction effective = compose(a.pin, word_pin_action(table, a.detWord, c, b));
    std::vector<Sign> wordActs = word_orientation_actions(a.detWord, c, b);
    require(wordActs.size() == given.size(), errc::length_mismatch,
            "orient_actions must list one sign per orientable component");
    for (std::size_t i = 0; i < given.size(); ++i) given[i] *= wordActs[i];
    out.factors =
        eval_separating_factors(c, b, effective, a.diffeo, given, backend);
    out.sign = factor_product(out.factors);
    return out;
  }

  if (input.contains("xi_class")) {
    SpinClass xi = spin_class_from_json(input.at("xi_class"));
    bool semiFlip =
        jio::opt_bool(input, "semi_orient_flip", false, "sign input");
    for (const auto& gen : a.detWord) {
      if (gen.kind == TwistKind::conjugate_pair) continue;
      if (gen.kind == TwistKind::minus_one) {
        semiFlip = !semiFlip;
        continue;
      }
      fail(errc::unsupported,
           "only conjugate_pair and minus_one twists can be folded into the "
           "orientable-real-part evaluator");
    }
    SignedPerm h1w =
        input.contains("h1w_action")
            ? signed_perm_from_json(input.at("h1w_action"), "h1w_action")
            : SignedPerm::identity(static_cast<int>(bit_sum(xi.w)));
    out.factors = eval_spin_case_factors(c, b, a.pin, a.diffeo, xi, semiFlip,
                                         h1w, backend);
    out.sign = factor_product(out.factors);
    return out;
  }

  if (a.diffeo.is_trivial_class()) {
    Sign pin = pin_signature_with(backend, c.realComponents, a.pin);
    Sign word = word_sign(a.detWord, c, det_bundle(b));
    out.sign = riso_sign(a, c, b, word, backend);
    out.factors = {{"pin_plus", pin}, {"determinant_word", word}};
    out.warnings = word_warnings(a.detWord, c);
    return out;
  }

  fail(errc::unsupported,
       "class moves the curve: supply line_sign, orient_actions, or xi_class");
}

}  // namespace detail

inline RunResult run_validate(const json& input) {
  return detail::guarded([&] {
    jio::check_keys(input,
                    {"curve", "bundle", "automorphism", "shape", "config",
                     "moduli", "loop", "polarisation"},
                    "validate input");
    bool any = false;
    RealCurve c;
    bool haveCurve = input.contains("curve");
    if (haveCurve) {
      c = curve_from_json(input.at("curve"));
      validate_curve(c);
      any = true;
    }
    RealBundle b;
    bool haveBundle = input.contains("bundle");
    if (haveBundle) {
      require(haveCurve, errc::bad_field, "bundle needs a curve");
      b = bundle_from_json(input.at("bundle"));
      validate_bundle(c, b);
      any = true;
    }
    if (input.contains("automorphism")) {
      require(haveBundle, errc::bad_field,
              "automorphism needs a curve and a bundle");
      AutClass a = aut_from_json(input.at("automorphism"), c.realComponents);
      validate_aut_class(a, c, b);
      any = true;
    }
    DivisorShape s;
    bool haveShape = input.contains("shape");
    if (haveShape) {
      s = shape_from_json(input.at("shape"));
      validate_shape(s);
      any = true;
    }
    if (input.contains("config")) {
      require(haveShape && haveBundle, errc::bad_field,
              "config needs a shape, a curve and a bundle");
      validate_config(s, config_from_json(input.at("config")), c, b);
      any = true;
    }
    ModuliData m;
    bool haveModuli = input.contains("moduli");
    if (haveModuli) {
      m = moduli_from_json(input.at("moduli"));
      validate_moduli(m);
      any = true;
    }
    if (input.contains("loop")) {
      require(haveModuli, errc::bad_field, "loop needs moduli data");
      validate_loop(m, loop_from_json(input.at("loop")));
      any = true;
    }
    if (input.contains("polarisation")) {
      validate_polarisation(polarisation_from_json(input.at("polarisation")));
      any = true;
    }
    require(any, errc::bad_field, "nothing to validate");
    return RunResult{json{{"ok", true}}, 0, {}};
  });
}

inline RunResult run_sign(const json& input, bool explain,
                          PinBackend backend = PinBackend::closed_form) {
  return detail::guarded([&] {
    detail::SignOutcome o = detail::sign_scenario(input, backend);
    json doc{{"sign", sign_to_json(o.sign)}};
    if (explain) doc["factors"] = factors_to_json(o.factors);
    return RunResult{doc, 0, o.warnings};
  });
}

inline RunResult run_teich(const json& input) {
  return detail::guarded([&] {
    jio::check_keys(input, {"curve", "diffeo"}, "teich input");
    RealCurve c = curve_from_json(jio::field(input, "curve", "teich input"));
    DiffeoClass d = diffeo_from_json(jio::field(input, "diffeo", "teich input"));
    Sign s = teich_orientation_sign(d, c);
    return RunResult{json{{"sign", sign_to_json(s)}}, 0, {}};
  });
}

inline RunResult run_moduli_w1(const json& input, bool explain) {
  return detail::guarded([&] {
    jio::check_keys(input, {"pairing", "moduli", "loop", "polarisation"},
                    "moduli-w1 input");
    const json& pv = jio::field(input, "pairing", "moduli-w1 input");
    require(pv.is_string(), errc::bad_field, "pairing must be a string");
    std::string pairing = pv.get<std::string>();
    ModuliData m = moduli_from_json(jio::field(input, "moduli", "moduli-w1 input"));
    LoopMonodromy g = loop_from_json(jio::field(input, "loop", "moduli-w1 input"));

    FactorList fl;
    if (pairing == "separating") {
      fl = moduli_separating_w1_factors(m, g);
    } else if (pairing == "spin") {
      fl = moduli_spin_w1_factors(m, g);
    } else if (pairing == "polarized") {
      PolarisationData p = polarisation_from_json(
          jio::field(input, "polarisation", "moduli-w1 input"));
      fl = polarized_w1_factors(m, g, p);
    } else {
      fail(errc::bad_field,
           "pairing must be one of separating, spin, polarized");
    }
    json doc{{"w1_bit", factor_product(fl).bit()}};
    if (explain) doc["factors"] = factors_to_json(fl);
    return RunResult{doc, 0, {}};
  });
}

inline RunResult run_spin_count(int genus, int k, bool listClasses) {
  return detail::guarded([&] {
    RealCurve c{genus, k, false};
    if (k > genus) c.separating = true;  // only the separating type exists
    validate_curve(c);
    json doc{{"count", spin_count(c)}};
    if (listClasses) {
      doc["per_class"] = spin_count_per_class(c);
      json cls = json::array();
      for (const SpinClass& x : spin_w_classes(c)) cls.push_back(bits_to_json(x.w));
      doc["classes"] = cls;
    }
    return RunResult{doc, 0, {}};
  });
}

inline RunResult run_adapted(const json& input, AdaptedBackend backend) {
  return detail::guarded([&] {
    jio::check_keys(input, {"shape", "curve", "bundle"}, "adapted input");
    DivisorShape s = shape_from_json(jio::field(input, "shape", "adapted input"));
    RealCurve c = curve_from_json(jio::field(input, "curve", "adapted input"));
    RealBundle b = bundle_from_json(jio::field(input, "bundle", "adapted input"));
    return RunResult{json{{"adapted", is_adapted(s, c, b, backend)}}, 0, {}};
  });
}

inline RunResult run_hypersurface(int bigN, int delta, const json& input,
                                  bool explain) {
  return detail::guarded([&] {
    jio::check_keys(input, {"moduli", "loop"}, "hypersurface input");
    ModuliData m =
        moduli_from_json(jio::field(input, "moduli", "hypersurface input"));
    LoopMonodromy g =
        loop_from_json(jio::field(input, "loop", "hypersurface input"));
    FactorList fl = hypersurface_w1_factors(bigN, delta, m, g);
    json doc{{"w1_bit", factor_product(fl).bit()}};
    if (explain) doc["factors"] = factors_to_json(fl);
    return RunResult{doc, 0, {}};
  });
}

}  // namespace orientsign
