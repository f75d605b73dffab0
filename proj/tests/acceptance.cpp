// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Usage: acceptance <cli-binary> <golden-dir> <data-dir>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "orientsign/orientsign.hpp"

using namespace orientsign;
using Clock = std::chrono::steady_clock;

namespace {

int g_pass = 0;
int g_fail = 0;

void report(const char* id, const char* name, bool ok, const std::string& detail) {
  std::printf("[%s] %s %s\n", ok ? "PASS" : "FAIL", id, name);
  if (!ok && !detail.empty()) std::printf("       %s\n", detail.c_str());
  ++(ok ? g_pass : g_fail);
}

int pick(std::mt19937& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Bits random_bits(std::mt19937& rng, int k) {
  Bits out(static_cast<std::size_t>(k));
  for (auto& b : out) b = static_cast<std::uint8_t>(pick(rng, 0, 1));
  return out;
}

Permutation random_perm(std::mt19937& rng, int k) {
  std::vector<int> img(static_cast<std::size_t>(k));
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(std::move(img));
}

Permutation random_label_perm(std::mt19937& rng, const Bits& labels) {
  int k = static_cast<int>(labels.size());
  std::vector<int> zero, one;
  for (int i = 0; i < k; ++i)
    (labels[static_cast<std::size_t>(i)] ? one : zero).push_back(i);
  std::vector<int> zeroTo = zero, oneTo = one;
  std::shuffle(zeroTo.begin(), zeroTo.end(), rng);
  std::shuffle(oneTo.begin(), oneTo.end(), rng);
  std::vector<int> img(static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < zero.size(); ++i)
    img[static_cast<std::size_t>(zero[i])] = zeroTo[i];
  for (std::size_t i = 0; i < one.size(); ++i)
    img[static_cast<std::size_t>(one[i])] = oneTo[i];
  return Permutation(std::move(img));
}

Sign random_sign(std::mt19937& rng) {
  return pick(rng, 0, 1) ? Sign::minus() : Sign::plus();
}

RealCurve random_curve(std::mt19937& rng, int maxGenus, bool needRealLocus) {
  for (;;) {
    int g = pick(rng, 0, maxGenus);
    if (pick(rng, 0, 1) == 1) {
      std::vector<int> ks;
      for (int k = (g % 2 == 0) ? 1 : 2; k <= g + 1; k += 2) ks.push_back(k);
      return RealCurve{g, ks[static_cast<std::size_t>(
                              pick(rng, 0, static_cast<int>(ks.size()) - 1))],
                       true};
    }
    int lo = needRealLocus ? 1 : 0;
    if (g < lo) continue;
    return RealCurve{g, pick(rng, lo, g), false};
  }
}

RealBundle random_bundle(std::mt19937& rng, const RealCurve& c, int maxRank) {
  RealBundle b;
  b.rank = pick(rng, 1, maxRank);
  b.w1 = random_bits(rng, c.realComponents);
  b.degree = bit_sum(b.w1) + 2 * pick(rng, -3, 3);
  return b;
}

DiffeoClass random_diffeo(std::mt19937& rng, const RealCurve& c,
                          const Permutation& perm) {
  DiffeoClass d;
  d.componentPerm = perm;
  d.reversesCircle = random_bits(rng, c.realComponents);
  d.detH1Minus = random_sign(rng);
  d.swapsHalves = c.separating && pick(rng, 0, 1) == 1;
  return d;
}

std::vector<RealCurve> curve_types(int maxGenus) {
  std::vector<RealCurve> out;
  for (int g = 0; g <= maxGenus; ++g) {
    for (int k = 0; k <= g; ++k) out.push_back({g, k, false});
    for (int k = (g % 2 == 0) ? 1 : 2; k <= g + 1; k += 2)
      out.push_back({g, k, true});
  }
  return out;
}

Bits mask_bits(int k, std::uint32_t mask) {
  Bits w1(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) w1[static_cast<std::size_t>(i)] = (mask >> i) & 1;
  return w1;
}

// ---------------------------------------------------------------------------

void a01_signature_oracle() {
  auto t0 = Clock::now();
  std::string detail;
  bool ok = true;
  for (int k = 1; k <= 4 && ok; ++k) {
    std::vector<int> img(static_cast<std::size_t>(k));
    std::iota(img.begin(), img.end(), 0);
    do {
      Permutation p(img);
      for (std::uint32_t m = 0; m < (std::uint32_t{1} << k); ++m) {
        PinAction a{mask_bits(k, m), p};
        if (pin_signature(k, a) != pin_signature_bruteforce(k, a)) {
          ok = false;
          detail = "mismatch at k=" + std::to_string(k);
          break;
        }
      }
    } while (ok && std::next_permutation(img.begin(), img.end()));
  }
  std::mt19937 rng(9001);
  for (int it = 0; it < 1000 && ok; ++it) {
    int k = pick(rng, 5, 12);
    PinAction a{random_bits(rng, k), random_perm(rng, k)};
    if (pin_signature(k, a) != pin_signature_bruteforce(k, a)) {
      ok = false;
      detail = "random mismatch at k=" + std::to_string(k);
    }
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (ok && secs >= 10.0) {
    ok = false;
    detail = "took " + std::to_string(secs) + " s";
  }
  report("A01", "closed-form signature matches the orbit-counting oracle", ok,
         detail);
}

void a02_product_identity() {
  std::mt19937 rng(9002);
  bool ok = true;
  std::string detail;
  for (int it = 0; it < 1000 && ok; ++it) {
    auto c = random_curve(rng, 6, false);
    auto b = random_bundle(rng, c, 3);
    int k = c.realComponents;
    PinAction a{random_bits(rng, k), random_label_perm(rng, b.w1)};
    DiffeoClass d = random_diffeo(rng, c, a.componentPerm);
    Sign prod = pin_minus_signature(k, a, d, b) * sigma_minus_signature(d, b) *
                pin_signature(k, a);
    if (prod != Sign::plus()) {
      ok = false;
      detail = "triple product broke at iteration " + std::to_string(it);
    }
  }
  report("A02", "pin, twisted-label, and combined signatures multiply to one",
         ok, detail);
}

void a03_multiplicativity() {
  std::mt19937 rng(9003);
  bool ok = true;
  std::string detail;
  auto flag = [&](bool cond, const char* what) {
    if (ok && !cond) {
      ok = false;
      detail = what;
    }
  };

  for (int it = 0; it < 1000 && ok; ++it) {  // rsaut
    auto c = random_curve(rng, 5, false);
    auto b = random_bundle(rng, c, 3);
    int k = c.realComponents;
    AutClass a1{AutLevel::rsaut,
                {random_bits(rng, k), Permutation::identity(k)},
                {},
                DiffeoClass::identity(k)};
    AutClass a2 = a1;
    a2.pin.flips = random_bits(rng, k);
    flag(rsaut_sign(compose(a1, a2), c, b) ==
             rsaut_sign(a1, c, b) * rsaut_sign(a2, c, b),
         "rsaut level");
  }

  auto random_word = [&](const RealCurve& c) {
    DetWord w;
    for (int j = pick(rng, 0, 4); j > 0; --j) {
      switch (pick(rng, 0, 3)) {
        case 0:
          if (c.realComponents > 0) {
            w.push_back(
                {TwistKind::real_component, pick(rng, 1, c.realComponents)});
            break;
          }
          [[fallthrough]];
        case 1:
          w.push_back({TwistKind::invariant_circle, 0});
          break;
        case 2:
          w.push_back({TwistKind::conjugate_pair, 0});
          break;
        default:
          w.push_back({TwistKind::minus_one, 0});
          break;
      }
    }
    return w;
  };

  for (int it = 0; it < 1000 && ok; ++it) {  // raut
    auto c = random_curve(rng, 5, false);
    auto b = random_bundle(rng, c, 3);
    int k = c.realComponents;
    AutClass a1{AutLevel::raut,
                {random_bits(rng, k), Permutation::identity(k)},
                random_word(c),
                DiffeoClass::identity(k)};
    AutClass a2{AutLevel::raut,
                {random_bits(rng, k), Permutation::identity(k)},
                random_word(c),
                DiffeoClass::identity(k)};
    flag(raut_sign(compose(a1, a2), c, b) ==
             raut_sign(a1, c, b) * raut_sign(a2, c, b),
         "raut level");
  }

  for (int it = 0; it < 1000 && ok; ++it) {  // riso with line signs
    auto c = random_curve(rng, 5, false);
    auto b = random_bundle(rng, c, 3);
    int k = c.realComponents;
    AutClass a1{AutLevel::riso,
                {random_bits(rng, k), random_label_perm(rng, b.w1)},
                {},
                DiffeoClass::identity(k)};
    a1.diffeo = random_diffeo(rng, c, a1.pin.componentPerm);
    AutClass a2{AutLevel::riso,
                {random_bits(rng, k), random_label_perm(rng, b.w1)},
                {},
                DiffeoClass::identity(k)};
    a2.diffeo = random_diffeo(rng, c, a2.pin.componentPerm);
    Sign l1 = random_sign(rng), l2 = random_sign(rng);
    flag(riso_sign(compose(a1, a2), c, b, l1 * l2) ==
             riso_sign(a1, c, b, l1) * riso_sign(a2, c, b, l2),
         "riso level");
  }

  for (int done = 0; done < 1000 && ok;) {  // separating evaluator
    auto c = random_curve(rng, 5, false);
    if (!c.separating) continue;
    auto b = random_bundle(rng, c, 3);
    auto orient = orientable_components(b);
    auto piece = [&] {
      PinAction pin{random_bits(rng, c.realComponents),
                    random_label_perm(rng, b.w1)};
      DiffeoClass d = random_diffeo(rng, c, pin.componentPerm);
      SignedPerm lines{pin.componentPerm.restrict_to(orient),
                       std::vector<Sign>(orient.size())};
      for (auto& s : lines.signs) s = random_sign(rng);
      return std::pair{pin, std::pair{d, lines}};
    };
    auto [p1, r1] = piece();
    auto [p2, r2] = piece();
    auto l12 = r1.second.compose(r2.second);
    flag(eval_separating(c, b, compose(p1, p2), compose(r1.first, r2.first),
                         l12.signs) ==
             eval_separating(c, b, p1, r1.first, r1.second.signs) *
                 eval_separating(c, b, p2, r2.first, r2.second.signs),
         "separating evaluator");
    ++done;
  }

  for (int it = 0; it < 1000 && ok; ++it) {  // spin-case evaluator
    auto c = random_curve(rng, 5, true);
    RealBundle b{pick(rng, 1, 3), 2LL * pick(rng, -3, 3),
                 Bits(static_cast<std::size_t>(c.realComponents), 0)};
    auto classes = spin_w_classes(c);
    SpinClass xi =
        classes[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(classes.size()) - 1))];
    int mlen = static_cast<int>(bit_sum(xi.w));
    auto piece = [&] {
      PinAction pin{random_bits(rng, c.realComponents),
                    random_perm(rng, c.realComponents)};
      DiffeoClass d = random_diffeo(rng, c, pin.componentPerm);
      d.swapsHalves = false;
      bool f = pick(rng, 0, 1) == 1;
      SignedPerm h{random_perm(rng, mlen), std::vector<Sign>(static_cast<std::size_t>(mlen))};
      for (auto& s : h.signs) s = random_sign(rng);
      return std::tuple{pin, d, f, h};
    };
    auto [p1, d1, f1, h1] = piece();
    auto [p2, d2, f2, h2] = piece();
    flag(eval_spin_case(c, b, compose(p1, p2), compose(d1, d2), xi, f1 != f2,
                        h1.compose(h2)) ==
             eval_spin_case(c, b, p1, d1, xi, f1, h1) *
                 eval_spin_case(c, b, p2, d2, xi, f2, h2),
         "spin-case evaluator");
  }

  auto random_loop = [&](bool separating) {
    LoopMonodromy g;
    for (Sign* s : {&g.pinPlus, &g.detH1Minus, &g.oX, &g.rw, &g.h0Minus, &g.lr,
                    &g.semiOrient, &g.h1w, &g.tD})
      *s = random_sign(rng);
    g.hFactor = separating ? random_sign(rng) : Sign::plus();
    return g;
  };

  ModuliData sep;
  sep.halfDim = 3;
  sep.genus = 2;
  sep.c1d = 2;
  sep.curveType = RealCurve{2, 1, true};
  for (int it = 0; it < 1000 && ok; ++it) {
    auto g1 = random_loop(true);
    auto g2 = random_loop(true);
    flag(moduli_separating_w1(sep, compose(g1, g2)) ==
             (moduli_separating_w1(sep, g1) ^ moduli_separating_w1(sep, g2)),
         "separating moduli pairing");
  }

  ModuliData spin;
  spin.halfDim = 2;
  spin.genus = 0;
  spin.c1d = 0;
  spin.curveType = RealCurve{0, 1, true};
  spin.reEuOrientable = true;
  for (int it = 0; it < 1000 && ok; ++it) {
    auto g1 = random_loop(true);
    auto g2 = random_loop(true);
    flag(moduli_spin_w1(spin, compose(g1, g2)) ==
             (moduli_spin_w1(spin, g1) ^ moduli_spin_w1(spin, g2)),
         "spin moduli pairing");
  }

  report("A03", "signs and bits are multiplicative at every level", ok, detail);
}

void a04_minus_one_parity() {
  bool ok = true;
  std::string detail;
  for (int g = 0; g <= 6 && ok; ++g)
    for (long long d = -6; d <= 6 && ok; ++d) {
      RealCurve c{g, 1, g % 2 == 0};
      RealBundle b{1, d, Bits{static_cast<std::uint8_t>(((d % 2) + 2) % 2)}};
      if (generator_sign({TwistKind::minus_one, 0}, c, b) !=
          Sign::from_parity(d + 1 - g)) {
        ok = false;
        detail = "g=" + std::to_string(g) + " d=" + std::to_string(d);
      }
    }
  report("A04", "global minus-one sign follows the degree parity rule", ok,
         detail);
}

void a05_generator_table() {
  bool ok = true;
  std::string detail;
  for (const RealCurve& c : curve_types(4)) {
    int k = c.realComponents;
    for (std::uint32_t m = 0; m < (std::uint32_t{1} << k) && ok; ++m) {
      Bits w1 = mask_bits(k, m);
      long long par = bit_sum(w1) % 2;
      for (long long d : {par, par + 2, par - 2}) {
        RealBundle b{1, d, w1};
        for (int i = 1; i <= k; ++i) {
          Sign want = w1[static_cast<std::size_t>(i - 1)] ? Sign::plus()
                                                          : Sign::minus();
          if (generator_sign({TwistKind::real_component, i}, c, b) != want)
            ok = false;
        }
        if (generator_sign({TwistKind::invariant_circle, 0}, c, b) !=
            Sign::minus())
          ok = false;
        if (generator_sign({TwistKind::conjugate_pair, 0}, c, b) != Sign::plus())
          ok = false;
        if (!ok) detail = "curve g=" + std::to_string(c.genus);
      }
    }
  }
  report("A05", "twist generator signs match the table on all small types", ok,
         detail);
}

void a06_pin_rule_derivation(const std::string& dataDir) {
  bool ok = true;
  std::string detail;

  auto sols = solve_generator_pin_rules(4);
  if (sols.size() != 1) {
    ok = false;
    detail = "solution set has size " + std::to_string(sols.size()) +
             "; generator pin bits would need to be supplied as input";
  } else if (!(sols[0] == builtin_generator_pin_table())) {
    ok = false;
    detail = "derived table differs from the built-in one";
  }

  if (ok) {
    std::ifstream in(dataDir + "/generator_pin_table.json");
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
      json j = parse_json_text(ss.str());
      const json& f = j.at("flips");
      GeneratorPinTable file;
      file.realTwistFlipsOrientable = f.at("real_twist_flips_orientable").get<bool>();
      file.realTwistFlipsNonOrientable =
          f.at("real_twist_flips_non_orientable").get<bool>();
      file.conjugatePairFlipsAll = f.at("conjugate_pair_flips_all").get<bool>();
      file.minusOneFlipsOrientable = f.at("minus_one_flips_orientable").get<bool>();
      file.minusOneFlipsNonOrientable =
          f.at("minus_one_flips_non_orientable").get<bool>();
      if (!(file == sols[0]) || !j.at("unique").get<bool>() ||
          j.at("checked_genus_max").get<int>() < 4) {
        ok = false;
        detail = "committed artifact disagrees with the derived table";
      }
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("cannot read committed artifact: ") + e.what();
    }
  }

  if (ok) {
    // route agreement on identity-lifting words: all words of length <= 2
    // exhaustively, longer ones sampled
    const GeneratorPinTable table = builtin_generator_pin_table();
    auto check_word = [&](const RealCurve& c, const RealBundle& b,
                          const Bits& base, const DetWord& w) {
      PinAction basePin{base, Permutation::identity(c.realComponents)};
      Sign tableRoute =
          pin_signature(c.realComponents, basePin) * word_sign(w, c, b);
      PinAction effective = compose(basePin, word_pin_action(table, w, c, b));
      Sign evalRoute =
          eval_separating(c, b, effective,
                          DiffeoClass::identity(c.realComponents),
                          word_orientation_actions(w, c, b));
      return tableRoute == evalRoute;
    };
    for (const RealCurve& c : separating_types(4)) {
      int k = c.realComponents;
      std::vector<DetGenerator> alphabet;
      for (int i = 1; i <= k; ++i)
        alphabet.push_back({TwistKind::real_component, i});
      alphabet.push_back({TwistKind::conjugate_pair, 0});
      alphabet.push_back({TwistKind::minus_one, 0});
      for (std::uint32_t m = 0; m < (std::uint32_t{1} << k) && ok; ++m) {
        Bits w1 = mask_bits(k, m);
        long long par = bit_sum(w1) % 2;
        for (long long d : {par, par + 2, par - 2}) {
          RealBundle b{1, d, w1};
          Bits none(static_cast<std::size_t>(k), 0);
          if (!check_word(c, b, none, {})) ok = false;
          for (const auto& g1 : alphabet) {
            if (!check_word(c, b, none, {g1})) ok = false;
            for (const auto& g2 : alphabet)
              if (!check_word(c, b, none, {g1, g2})) ok = false;
          }
        }
      }
      if (!ok) detail = "route mismatch on g=" + std::to_string(c.genus);
    }
    std::mt19937 rng(9006);
    for (int done = 0; done < 500 && ok;) {
      auto c = random_curve(rng, 4, false);
      if (!c.separating) continue;
      ++done;
      Bits w1 = random_bits(rng, c.realComponents);
      RealBundle b{1, bit_sum(w1) + 2 * pick(rng, -2, 2), w1};
      DetWord w;
      for (int j = pick(rng, 0, 6); j > 0; --j) {
        switch (pick(rng, 0, 2)) {
          case 0:
            w.push_back({TwistKind::real_component, pick(rng, 1, c.realComponents)});
            break;
          case 1:
            w.push_back({TwistKind::conjugate_pair, 0});
            break;
          default:
            w.push_back({TwistKind::minus_one, 0});
            break;
        }
      }
      if (!check_word(c, b, random_bits(rng, c.realComponents), w)) {
        ok = false;
        detail = "random word route mismatch";
      }
    }
  }

  report("A06", "pin flip rules re-derive uniquely and match the artifact", ok,
         detail);
}

void a07_spin_counting() {
  bool ok = true;
  std::string detail;
  auto check_type = [&](const RealCurve& c) {
    int g = c.genus, k = c.realComponents;
    auto total = spin_count(c);
    auto per = spin_count_per_class(c);
    auto classes = spin_w_classes(c);
    bool good = total == (std::uint64_t{1} << (g + k - 1)) &&
                per == (std::uint64_t{1} << g) &&
                classes.size() == (std::size_t{1} << (k - 1)) &&
                total == per * classes.size();
    for (std::size_t i = 0; good && i < classes.size(); ++i) {
      if ((bit_sum(classes[i].w) - (g + 1)) % 2 != 0) good = false;
      for (std::size_t j = i + 1; j < classes.size(); ++j)
        if (classes[i].w == classes[j].w) good = false;
    }
    if (!good) {
      ok = false;
      detail = "g=" + std::to_string(g) + " k=" + std::to_string(k) +
               (c.separating ? " separating" : " non-separating");
    }
  };
  for (int g = 0; g <= 12 && ok; ++g)
    for (int k = 1; g + k <= 12 && k <= g + 1 && ok; ++k) {
      if (k <= g) check_type({g, k, false});
      if (ok && (g + 1 - k) % 2 == 0) check_type({g, k, true});
    }
  report("A07", "spin structure counts factor as expected on all small types",
         ok, detail);
}

void a08_parity_invariants() {
  std::mt19937 rng(9008);
  bool ok = true;
  std::string detail;
  for (int it = 0; it < 1000 && ok; ++it) {
    auto c = random_curve(rng, 6, false);
    auto b = random_bundle(rng, c, 3);
    validate_bundle(c, b);
    if ((b.degree + k_minus(b)) % 2 != 0) {
      ok = false;
      detail = "valid bundle with odd degree + kMinus";
    }
    RealBundle broken = b;
    broken.degree += 1;
    try {
      validate_bundle(c, broken);
      ok = false;
      detail = "validator accepted a parity violation (bundle)";
    } catch (const Error& e) {
      if (e.kind() != errc::parity_mismatch) {
        ok = false;
        detail = "wrong error kind for bundle parity violation";
      }
    }
  }
  for (int it = 0; it < 1000 && ok; ++it) {
    ModuliData m;
    m.halfDim = pick(rng, 2, 5);
    m.genus = pick(rng, 0, 6);
    m.marked = pick(rng, 0, 4);
    m.tau = Permutation::identity(m.marked);
    m.curveType = random_curve(rng, 6, true);
    m.kMinus = pick(rng, 0, m.curveType.realComponents);
    m.c1d = 2 * pick(rng, -4, 4) + m.kMinus;
    validate_moduli(m);
    if ((m.c1d + m.kMinus) % 2 != 0) {
      ok = false;
      detail = "valid moduli data with odd c1d + kMinus";
    }
    ModuliData broken = m;
    broken.c1d += 1;
    try {
      validate_moduli(broken);
      ok = false;
      detail = "validator accepted a parity violation (moduli)";
    } catch (const Error& e) {
      if (e.kind() != errc::parity_mismatch) {
        ok = false;
        detail = "wrong error kind for moduli parity violation";
      }
    }
  }
  report("A08", "parity invariants hold and violations are rejected", ok,
         detail);
}

void a09_conjugate_swap() {
  bool ok = true;
  std::string detail;
  for (const RealCurve& c : curve_types(4)) {
    Sign want = c.separating ? Sign::minus() : Sign::plus();
    for (int rank = 1; rank <= 3; ++rank)
      if (eval_decomposition(conjugate_swap_monodromy(c), rank) != want) {
        ok = false;
        detail = "curve g=" + std::to_string(c.genus) +
                 (c.separating ? " separating" : " non-separating");
      }
  }
  report("A09", "conjugate pair swap monodromy has the expected sign", ok,
         detail);
}

void a10_hypersurface_gate() {
  bool ok = true;
  std::string detail;
  ModuliData m;
  m.halfDim = 2;
  m.genus = 0;
  m.marked = 1;
  m.tau = Permutation::identity(1);
  m.c1d = 0;
  m.curveType = RealCurve{0, 1, true};

  auto admissible = [](int bigN, int delta) {
    return bigN >= 4 && (bigN % 4 == 0 || bigN % 4 == 3) && delta >= 1 &&
           delta <= bigN + 1 && (bigN + 1 - delta) % 4 == 0;
  };

  LoopMonodromy det;
  det.detH1Minus = Sign::minus();
  for (int bigN = 4; bigN <= 12 && ok; ++bigN)
    for (int delta = 1; delta <= 13 && ok; ++delta) {
      bool accepted;
      int bit = -1;
      try {
        bit = hypersurface_w1(bigN, delta, m, det);
        accepted = true;
      } catch (const Error& e) {
        accepted = false;
        if (e.kind() != errc::hypothesis_violated) {
          ok = false;
          detail = "wrong rejection kind";
        }
      }
      if (accepted != admissible(bigN, delta)) {
        ok = false;
        detail = "gate differs at N=" + std::to_string(bigN) +
                 " delta=" + std::to_string(delta);
      }
      if (accepted && bit != (delta - 1) % 2) {
        ok = false;
        detail = "bit does not follow (delta-1) mod 2 at N=" +
                 std::to_string(bigN) + " delta=" + std::to_string(delta);
      }
    }
  report("A10", "hypersurface gate is exact and the bit follows degree parity",
         ok, detail);
}

struct CliRun {
  std::string output;
  int exitCode = -1;
};

CliRun run_cli(const std::string& cli, const std::vector<std::string>& args) {
  std::string cmd = "'" + cli + "'";
  for (const std::string& a : args) cmd += " '" + a + "'";
  cmd += " 2>/dev/null";
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.output.append(buf, n);
  int status = pclose(p);
  r.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

void a11_cli_goldens(const std::string& cli, const std::string& goldenDir) {
  auto t0 = Clock::now();
  bool ok = true;
  std::string detail;
  std::ifstream in(goldenDir + "/manifest.json");
  std::ostringstream ss;
  ss << in.rdbuf();
  json manifest;
  try {
    manifest = parse_json_text(ss.str());
  } catch (const std::exception&) {
    report("A11", "golden scenarios reproduce byte for byte", false,
           "cannot read manifest");
    return;
  }
  int count = 0;
  for (const json& sc : manifest.at("scenarios")) {
    ++count;
    std::string name = sc.at("name").get<std::string>();
    std::vector<std::string> args;
    for (const json& a : sc.at("args")) {
      std::string s = a.get<std::string>();
      const std::string tag = "{dir}";
      if (auto pos = s.find(tag); pos != std::string::npos)
        s = s.substr(0, pos) + goldenDir + s.substr(pos + tag.size());
      args.push_back(s);
    }
    std::ifstream ef(goldenDir + "/" + sc.at("expected").get<std::string>(),
                     std::ios::binary);
    std::ostringstream es;
    es << ef.rdbuf();
    std::string expected = es.str();

    CliRun first = run_cli(cli, args);
    CliRun second = run_cli(cli, args);
    if (first.output != expected || first.exitCode != sc.at("exit").get<int>()) {
      ok = false;
      detail = name + ": output or exit code differs from the committed file";
      break;
    }
    if (first.output != second.output || first.exitCode != second.exitCode) {
      ok = false;
      detail = name + ": output differs between runs";
      break;
    }
    try {
      json doc = parse_json_text(first.output);
      if (doc.contains("factors")) {
        int prod = 1;
        for (const json& f : doc.at("factors")) prod *= f.at("sign").get<int>();
        bool match = doc.contains("sign")
                         ? prod == doc.at("sign").get<int>()
                         : (prod == 1 ? 0 : 1) == doc.at("w1_bit").get<int>();
        if (!match) {
          ok = false;
          detail = name + ": factor product does not reconcile";
          break;
        }
      }
    } catch (const std::exception&) {
      ok = false;
      detail = name + ": output is not valid JSON";
      break;
    }
  }
  if (ok && count < 12) {
    ok = false;
    detail = "only " + std::to_string(count) + " scenarios in the manifest";
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (ok && secs >= 60.0) {
    ok = false;
    detail = "took " + std::to_string(secs) + " s";
  }
  report("A11", "golden scenarios reproduce byte for byte and reconcile", ok,
         detail);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 4) {
    std::fprintf(stderr, "usage: %s <cli-binary> <golden-dir> <data-dir>\n",
                 argv[0]);
    return 2;
  }
  const std::string cli = argv[1];
  const std::string goldenDir = argv[2];
  const std::string dataDir = argv[3];

  auto t0 = Clock::now();
  a01_signature_oracle();
  a02_product_identity();
  a03_multiplicativity();
  a04_minus_one_parity();
  a05_generator_table();
  a06_pin_rule_derivation(dataDir);
  a07_spin_counting();
  a08_parity_invariants();
  a09_conjugate_swap();
  a10_hypersurface_gate();
  a11_cli_goldens(cli, goldenDir);
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();

  std::printf("%d passed, %d failed (%.1f s)\n", g_pass, g_fail, secs);
  return g_fail == 0 ? 0 : 1;
}
