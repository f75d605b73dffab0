#pragma once

// Shared ground types: signs in {+1,-1}, mod-2 bit vectors, and the
// error taxonomy used across the library and the CLI.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace orientsign {

enum class errc {
  // data validation (CLI exit code 2)
  invalid_topology,
  parity_mismatch,
  length_mismatch,
  perm_mismatch,
  bad_component_index,
  rank_not_one,
  level_mismatch,
  bad_multiplicity,
  missing_pd_claim,
  missing_factor,
  bad_field,

  // hypothesis of the formula not met (CLI exit code 3)
  empty_real_locus,
  not_separating,
  parity_broken,
  spin_hypothesis_violated,
  genus_too_small,
  hypothesis_violated,
  no_polarizing_section,

  // input outside supported range (CLI exit code 4)
  too_large,
  search_too_large,
  unsupported,

  // unreadable input (CLI exit code 1)
  malformed_json,
};

inline const char* errc_name(errc k) {
  switch (k) {
    case errc::invalid_topology: return "InvalidTopology";
    case errc::parity_mismatch: return "ParityMismatch";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::perm_mismatch: return "PermMismatch";
    case errc::bad_component_index: return "BadComponentIndex";
    case errc::rank_not_one: return "RankNotOne";
    case errc::level_mismatch: return "LevelMismatch";
    case errc::bad_multiplicity: return "BadMultiplicity";
    case errc::missing_pd_claim: return "MissingPDClaim";
    case errc::missing_factor: return "MissingFactor";
    case errc::bad_field: return "BadField";
    case errc::empty_real_locus: return "EmptyRealLocus";
    case errc::not_separating: return "NotSeparating";
    case errc::parity_broken: return "ParityBroken";
    case errc::spin_hypothesis_violated: return "SpinHypothesisViolated";
    case errc::genus_too_small: return "GenusTooSmall";
    case errc::hypothesis_violated: return "HypothesisViolated";
    case errc::no_polarizing_section: return "NoPolarizingSection";
    case errc::too_large: return "TooLarge";
    case errc::search_too_large: return "SearchTooLarge";
    case errc::unsupported: return "Unsupported";
    case errc::malformed_json: return "MalformedJson";
  }
  return "Unknown";
}

inline int errc_exit_code(errc k) {
  switch (k) {
    case errc::malformed_json:
      return 1;
    case errc::empty_real_locus:
    case errc::not_separating:
    case errc::parity_broken:
    case errc::spin_hypothesis_violated:
    case errc::genus_too_small:
    case errc::hypothesis_violated:
    case errc::no_polarizing_section:
      return 3;
    case errc::too_large:
    case errc::search_too_large:
    case errc::unsupported:
      return 4;
    default:
      return 2;
  }
}

class Error : public std::runtime_error {
 public:
  Error(errc kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  errc kind() const { return kind_; }

 private:
  errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& msg) {
  throw Error(kind, msg);
}

inline void require(bool ok, errc kind, const std::string& msg) {
  if (!ok) fail(kind, msg);
}

// A multiplicative sign.  Constructed from a value in {+1,-1}, from a
// parity (even -> +1), or from a bit (0 -> +1).
class Sign {
 public:
  constexpr Sign() = default;

  static constexpr Sign plus() { return Sign(false); }
  static constexpr Sign minus() { return Sign(true); }

  static Sign from_value(long long v) {
    require(v == 1 || v == -1, errc::bad_field,
            "sign must be +1 or -1, got " + std::to_string(v));
    return Sign(v == -1);
  }

  // +1 for even parity; works for negative arguments too.
  static constexpr Sign from_parity(long long p) { return Sign((p % 2) != 0); }

  static constexpr Sign from_bit(int b) { return Sign(b != 0); }

  constexpr int value() const { return neg_ ? -1 : 1; }
  constexpr int bit() const { return neg_ ? 1 : 0; }
  constexpr bool negative() const { return neg_; }

  constexpr Sign pow(long long e) const {
    return Sign(neg_ && (e % 2) != 0);
  }

  friend constexpr Sign operator*(Sign a, Sign b) {
    return Sign(a.neg_ != b.neg_);
  }
  Sign& operator*=(Sign o) {
    neg_ = (neg_ != o.neg_);
    return *this;
  }
  friend constexpr bool operator==(Sign, Sign) = default;

 private:
  constexpr explicit Sign(bool neg) : neg_(neg) {}
  bool neg_ = false;
};

// Bit vectors over Z/2, one entry per real component unless stated
// otherwise.  Entries are constrained to 0/1 at validation points.
using Bits = std::vector<std::uint8_t>;

inline long long bit_sum(const Bits& v) {
  long long s = 0;
  for (auto b : v) s += b;
  return s;
}

inline int bit_parity(const Bits& v) {
  int p = 0;
  for (auto b : v) p ^= (b & 1);
  return p;
}

inline void require_bits(const Bits& v, const std::string& name) {
  for (auto b : v)
    require(b == 0 || b == 1, errc::bad_field, name + " entries must be 0 or 1");
}

inline Bits xor_bits(const Bits& a, const Bits& b) {
  require(a.size() == b.size(), errc::length_mismatch,
          "bit vectors of unequal length");
  Bits out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = (a[i] ^ b[i]) & 1;
  return out;
}

// Named sign factors; a factor list explains a sign as a product.
struct Factor {
  std::string name;
  Sign sign;
};
using FactorList = std::vector<Factor>;

inline Sign factor_product(const FactorList& fs) {
  Sign s = Sign::plus();
  for (const auto& f : fs) s *= f.sign;
  return s;
}

}  // namespace orientsign
