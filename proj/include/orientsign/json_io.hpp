#pragma once

// JSON wire format.  Objects are strict: unknown fields are rejected,
// field types are checked, permutations travel as 1-based image
// arrays, signs as the integers 1 and -1.

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <json.hpp>

#include "orientsign/autsign.hpp"
#include "orientsign/core.hpp"
#include "orientsign/divisor.hpp"
#include "orientsign/moduli.hpp"
#include "orientsign/permutation.hpp"
#include "orientsign/pin.hpp"
#include "orientsign/topology.hpp"

namespace orientsign {

using json = nlohmann::ordered_json;

inline json parse_json_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  require(!j.is_discarded(), errc::malformed_json, "input is not valid JSON");
  return j;
}

namespace jio {

inline void check_keys(const json& j, std::initializer_list<const char*> keys,
                       const char* what) {
  require(j.is_object(), errc::bad_field,
          std::string(what) + " must be a JSON object");
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* k : keys)
      if (item.key() == k) {
        known = true;
        break;
      }
    require(known, errc::bad_field,
            "unknown field '" + item.key() + "' in " + what);
  }
}

inline const json& field(const json& j, const char* key, const char* what) {
  require(j.is_object() && j.contains(key), errc::bad_field,
          std::string(what) + " needs field '" + key + "'");
  return j.at(key);
}

inline int int_field(const json& j, const char* key, const char* what) {
  const json& v = field(j, key, what);
  require(v.is_number_integer(), errc::bad_field,
          std::string(what) + "." + key + " must be an integer");
  return v.get<int>();
}

inline long long ll_field(const json& j, const char* key, const char* what) {
  const json& v = field(j, key, what);
  require(v.is_number_integer(), errc::bad_field,
          std::string(what) + "." + key + " must be an integer");
  return v.get<long long>();
}

inline bool bool_field(const json& j, const char* key, const char* what) {
  const json& v = field(j, key, what);
  require(v.is_boolean(), errc::bad_field,
          std::string(what) + "." + key + " must be a boolean");
  return v.get<bool>();
}

inline bool opt_bool(const json& j, const char* key, bool fallback,
                     const char* what) {
  if (!j.is_object() || !j.contains(key)) return fallback;
  return bool_field(j, key, what);
}

inline Sign sign_value(const json& v, const std::string& what) {
  require(v.is_number_integer(), errc::bad_field, what + " must be 1 or -1");
  return Sign::from_value(v.get<int>());
}

inline Sign sign_field(const json& j, const char* key, const char* what) {
  return sign_value(field(j, key, what), std::string(what) + "." + key);
}

inline Sign opt_sign(const json& j, const char* key, Sign fallback,
                     const char* what) {
  if (!j.is_object() || !j.contains(key)) return fallback;
  return sign_field(j, key, what);
}

inline Bits bits_value(const json& v, const std::string& what) {
  require(v.is_array(), errc::bad_field, what + " must be an array of bits");
  Bits out;
  for (const json& e : v) {
    require(e.is_number_integer() &&
                (e.get<int>() == 0 || e.get<int>() == 1),
            errc::bad_field, what + " entries must be 0 or 1");
    out.push_back(static_cast<std::uint8_t>(e.get<int>()));
  }
  return out;
}

inline Bits bits_field(const json& j, const char* key, const char* what) {
  return bits_value(field(j, key, what), std::string(what) + "." + key);
}

inline Permutation perm_value(const json& v, const std::string& what) {
  require(v.is_array(), errc::bad_field,
          what + " must be an array of 1-based images");
  std::vector<int> img;
  for (const json& e : v) {
    require(e.is_number_integer(), errc::bad_field,
            what + " entries must be integers");
    img.push_back(e.get<int>() - 1);
  }
  for (int x : img)
    require(x >= 0, errc::bad_field, what + " entries must be >= 1");
  return Permutation(std::move(img));
}

inline Permutation perm_field(const json& j, const char* key,
                              const char* what) {
  return perm_value(field(j, key, what), std::string(what) + "." + key);
}

inline std::vector<Sign> signs_value(const json& v, const std::string& what) {
  require(v.is_array(), errc::bad_field, what + " must be an array of signs");
  std::vector<Sign> out;
  for (const json& e : v) out.push_back(sign_value(e, what + " entry"));
  return out;
}

}  // namespace jio

// --------------------------------------------------------------------------
// readers

inline RealCurve curve_from_json(const json& j) {
  jio::check_keys(j, {"genus", "real_components", "separating"}, "curve");
  RealCurve c{jio::int_field(j, "genus", "curve"),
              jio::int_field(j, "real_components", "curve"),
              jio::bool_field(j, "separating", "curve")};
  return c;
}

inline RealBundle bundle_from_json(const json& j) {
  jio::check_keys(j, {"rank", "degree", "w1"}, "bundle");
  return RealBundle{jio::int_field(j, "rank", "bundle"),
                    jio::ll_field(j, "degree", "bundle"),
                    jio::bits_field(j, "w1", "bundle")};
}

inline PinAction pin_from_json(const json& j) {
  jio::check_keys(j, {"flips", "component_perm"}, "pin");
  return PinAction{jio::bits_field(j, "flips", "pin"),
                   jio::perm_field(j, "component_perm", "pin")};
}

inline DiffeoClass diffeo_from_json(const json& j) {
  jio::check_keys(
      j, {"component_perm", "reverses_circle", "det_h1_minus", "swaps_halves"},
      "diffeo");
  DiffeoClass d;
  d.componentPerm = jio::perm_field(j, "component_perm", "diffeo");
  d.reversesCircle = jio::bits_field(j, "reverses_circle", "diffeo");
  d.detH1Minus = jio::sign_field(j, "det_h1_minus", "diffeo");
  d.swapsHalves = jio::bool_field(j, "swaps_halves", "diffeo");
  return d;
}

inline AutLevel level_from_json(const json& v) {
  require(v.is_string(), errc::bad_field, "level must be a string");
  std::string s = v.get<std::string>();
  if (s == "rsaut") return AutLevel::rsaut;
  if (s == "raut") return AutLevel::raut;
  if (s == "riso") return AutLevel::riso;
  fail(errc::bad_field, "level must be one of rsaut, raut, riso");
}

inline DetGenerator generator_from_json(const json& j) {
  jio::check_keys(j, {"twist", "index"}, "det_word entry");
  const json& tv = jio::field(j, "twist", "det_word entry");
  require(tv.is_string(), errc::bad_field, "twist must be a string");
  std::string t = tv.get<std::string>();
  if (t == "real_component") {
    return DetGenerator{TwistKind::real_component,
                        jio::int_field(j, "index", "det_word entry")};
  }
  require(!j.contains("index"), errc::bad_field,
          "only real_component twists carry an index");
  if (t == "invariant_circle") return DetGenerator{TwistKind::invariant_circle, 0};
  if (t == "conjugate_pair") return DetGenerator{TwistKind::conjugate_pair, 0};
  if (t == "minus_one") return DetGenerator{TwistKind::minus_one, 0};
  fail(errc::bad_field, "unknown twist kind '" + t + "'");
}

inline DetWord word_from_json(const json& v) {
  require(v.is_array(), errc::bad_field, "det_word must be an array");
  DetWord w;
  for (const json& e : v) w.push_back(generator_from_json(e));
  return w;
}

inline AutClass aut_from_json(const json& j, int k) {
  jio::check_keys(j, {"level", "pin", "det_word", "diffeo"}, "automorphism");
  AutClass a;
  a.level = level_from_json(jio::field(j, "level", "automorphism"));
  a.pin = pin_from_json(jio::field(j, "pin", "automorphism"));
  a.detWord =
      j.contains("det_word") ? word_from_json(j.at("det_word")) : DetWord{};
  a.diffeo = j.contains("diffeo") ? diffeo_from_json(j.at("diffeo"))
                                  : DiffeoClass::identity(k);
  return a;
}

inline DivisorShape shape_from_json(const json& j) {
  jio::check_keys(j, {"r_plus", "r_minus", "s_plus", "s_minus"}, "shape");
  return DivisorShape{jio::ll_field(j, "r_plus", "shape"),
                      jio::ll_field(j, "r_minus", "shape"),
                      jio::ll_field(j, "s_plus", "shape"),
                      jio::ll_field(j, "s_minus", "shape")};
}

inline DivisorConfig config_from_json(const json& j) {
  jio::check_keys(
      j, {"real_plus", "real_minus", "conj_pairs_plus", "conj_pairs_minus"},
      "config");
  auto points = [&](const char* key) {
    const json& v = jio::field(j, key, "config");
    require(v.is_array(), errc::bad_field,
            std::string("config.") + key + " must be an array");
    std::vector<int> out;
    for (const json& e : v) {
      require(e.is_number_integer(), errc::bad_field,
              std::string("config.") + key + " entries must be integers");
      out.push_back(e.get<int>());
    }
    return out;
  };
  return DivisorConfig{points("real_plus"), points("real_minus"),
                       jio::ll_field(j, "conj_pairs_plus", "config"),
                       jio::ll_field(j, "conj_pairs_minus", "config")};
}

inline SpinClass spin_class_from_json(const json& j) {
  jio::check_keys(j, {"w"}, "xi_class");
  return SpinClass{jio::bits_field(j, "w", "xi_class")};
}

inline SignedPerm signed_perm_from_json(const json& j, const char* what) {
  jio::check_keys(j, {"component_perm", "signs"}, what);
  SignedPerm sp;
  sp.perm = jio::perm_field(j, "component_perm", what);
  sp.signs = jio::signs_value(jio::field(j, "signs", what),
                              std::string(what) + ".signs");
  sp.check();
  return sp;
}

inline ModuliData moduli_from_json(const json& j) {
  jio::check_keys(j,
                  {"half_dim", "genus", "marked", "tau", "c1d", "curve",
                   "k_minus", "rx_spin", "re_eu_orientable"},
                  "moduli");
  ModuliData m;
  m.halfDim = jio::int_field(j, "half_dim", "moduli");
  m.genus = jio::int_field(j, "genus", "moduli");
  m.marked = jio::int_field(j, "marked", "moduli");
  m.tau = jio::perm_field(j, "tau", "moduli");
  m.c1d = jio::ll_field(j, "c1d", "moduli");
  m.curveType = curve_from_json(jio::field(j, "curve", "moduli"));
  m.kMinus = jio::int_field(j, "k_minus", "moduli");
  m.rxSpin = jio::opt_bool(j, "rx_spin", false, "moduli");
  m.reEuOrientable = jio::opt_bool(j, "re_eu_orientable", false, "moduli");
  return m;
}

inline LoopMonodromy loop_from_json(const json& j) {
  jio::check_keys(j,
                  {"pin_plus", "det_h1_minus", "o_x", "rw", "h_factor",
                   "h0_minus", "lr", "semi_orient", "h1w", "t_d"},
                  "loop");
  LoopMonodromy g;
  g.pinPlus = jio::opt_sign(j, "pin_plus", Sign::plus(), "loop");
  g.detH1Minus = jio::opt_sign(j, "det_h1_minus", Sign::plus(), "loop");
  g.oX = jio::opt_sign(j, "o_x", Sign::plus(), "loop");
  g.rw = jio::opt_sign(j, "rw", Sign::plus(), "loop");
  g.hFactor = jio::opt_sign(j, "h_factor", Sign::plus(), "loop");
  g.h0Minus = jio::opt_sign(j, "h0_minus", Sign::plus(), "loop");
  g.lr = jio::opt_sign(j, "lr", Sign::plus(), "loop");
  g.semiOrient = jio::opt_sign(j, "semi_orient", Sign::plus(), "loop");
  g.h1w = jio::opt_sign(j, "h1w", Sign::plus(), "loop");
  g.tD = jio::opt_sign(j, "t_d", Sign::plus(), "loop");
  return g;
}

inline PolarisationData polarisation_from_json(const json& j) {
  jio::check_keys(j,
                  {"components", "claims_pd_c1", "claims_pd_w1rx",
                   "has_polarizing_section"},
                  "polarisation");
  PolarisationData p;
  const json& comps = jio::field(j, "components", "polarisation");
  require(comps.is_array(), errc::bad_field,
          "polarisation.components must be an array");
  for (const json& e : comps) {
    jio::check_keys(e, {"multiplicity", "conjugation_stable"},
                    "polarisation component");
    p.components.push_back(
        {jio::int_field(e, "multiplicity", "polarisation component"),
         jio::bool_field(e, "conjugation_stable", "polarisation component")});
  }
  p.claimsPD_c1 = jio::bool_field(j, "claims_pd_c1", "polarisation");
  p.claimsPD_w1RX = jio::bool_field(j, "claims_pd_w1rx", "polarisation");
  p.hasPolarizingSection =
      jio::bool_field(j, "has_polarizing_section", "polarisation");
  return p;
}

// --------------------------------------------------------------------------
// writers

inline json sign_to_json(Sign s) { return json(s.value()); }

inline json perm_to_json(const Permutation& p) {
  json out = json::array();
  for (int v : p.images()) out.push_back(v + 1);
  return out;
}

inline json bits_to_json(const Bits& b) {
  json out = json::array();
  for (auto v : b) out.push_back(static_cast<int>(v));
  return out;
}

inline json curve_to_json(const RealCurve& c) {
  return json{{"genus", c.genus},
              {"real_components", c.realComponents},
              {"separating", c.separating}};
}

inline json bundle_to_json(const RealBundle& b) {
  return json{{"rank", b.rank}, {"degree", b.degree}, {"w1", bits_to_json(b.w1)}};
}

inline json pin_to_json(const PinAction& a) {
  return json{{"flips", bits_to_json(a.flips)},
              {"component_perm", perm_to_json(a.componentPerm)}};
}

inline json diffeo_to_json(const DiffeoClass& d) {
  return json{{"component_perm", perm_to_json(d.componentPerm)},
              {"reverses_circle", bits_to_json(d.reversesCircle)},
              {"det_h1_minus", sign_to_json(d.detH1Minus)},
              {"swaps_halves", d.swapsHalves}};
}

inline json shape_to_json(const DivisorShape& s) {
  return json{{"r_plus", s.rPlus},
              {"r_minus", s.rMinus},
              {"s_plus", s.sPlus},
              {"s_minus", s.sMinus}};
}

inline json config_to_json(const DivisorConfig& c) {
  return json{{"real_plus", c.realPlus},
              {"real_minus", c.realMinus},
              {"conj_pairs_plus", c.conjPairsPlus},
              {"conj_pairs_minus", c.conjPairsMinus}};
}

inline json factors_to_json(const FactorList& fl) {
  json out = json::array();
  for (const Factor& f : fl)
    out.push_back(json{{"name", f.name}, {"sign", sign_to_json(f.sign)}});
  return out;
}

inline json error_to_json(const Error& e) {
  return json{{"error", {{"kind", errc_name(e.kind())}, {"message", e.what()}}}};
}

}  // namespace orientsign
