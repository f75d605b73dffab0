#pragma once

// Permutations of {0,...,n-1} stored as image arrays, plus signed
// permutations (permutation matrices with +-1 entries).

#include <algorithm>
#include <numeric>
#include <vector>

#include "orientsign/core.hpp"

namespace orientsign {

class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
      require(v >= 0 && v < static_cast<int>(img_.size()) && !seen[v],
              errc::bad_field, "permutation images must be a bijection");
      seen[v] = 1;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
  }

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const {
    for (int i = 0; i < size(); ++i)
      if (img_[static_cast<std::size_t>(i)] != i) return false;
    return true;
  }

  // this after other: (a.compose(b))(i) = a(b(i))
  Permutation compose(const Permutation& other) const {
    require(size() == other.size(), errc::length_mismatch,
            "composing permutations of different sizes");
    std::vector<int> img(img_.size());
    for (int i = 0; i < size(); ++i) img[static_cast<std::size_t>(i)] = (*this)(other(i));
    return Permutation(std::move(img));
  }

  Permutation inverse() const {
    std::vector<int> img(img_.size());
    for (int i = 0; i < size(); ++i) img[static_cast<std::size_t>((*this)(i))] = i;
    return Permutation(std::move(img));
  }

  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(img_.size(), 0);
    for (int i = 0; i < size(); ++i) {
      if (seen[static_cast<std::size_t>(i)]) continue;
      std::vector<int> cyc;
      for (int j = i; !seen[static_cast<std::size_t>(j)]; j = (*this)(j)) {
        seen[static_cast<std::size_t>(j)] = 1;
        cyc.push_back(j);
      }
      out.push_back(std::move(cyc));
    }
    return out;
  }

  Sign signature() const {
    // (-1)^(n - #cycles)
    return Sign::from_parity(size() - static_cast<long long>(cycles().size()));
  }

  // labels[p(i)] == labels[i] for all i
  bool preserves(const Bits& labels) const {
    if (static_cast<int>(labels.size()) != size()) return false;
    for (int i = 0; i < size(); ++i)
      if (labels[static_cast<std::size_t>((*this)(i))] != labels[static_cast<std::size_t>(i)])
        return false;
    return true;
  }

  // Restriction to an invariant subset, reindexed by position in `subset`
  // (which must be strictly increasing).
  Permutation restrict_to(const std::vector<int>& subset) const {
    std::vector<int> pos(img_.size(), -1);
    for (std::size_t r = 0; r < subset.size(); ++r) {
      require(subset[r] >= 0 && subset[r] < size(), errc::bad_component_index,
              "restriction index out of range");
      pos[static_cast<std::size_t>(subset[r])] = static_cast<int>(r);
    }
    std::vector<int> img(subset.size());
    for (std::size_t r = 0; r < subset.size(); ++r) {
      int image = (*this)(subset[r]);
      require(pos[static_cast<std::size_t>(image)] >= 0, errc::perm_mismatch,
              "subset not invariant under the permutation");
      img[r] = pos[static_cast<std::size_t>(image)];
    }
    return Permutation(std::move(img));
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> img_;
};

// A permutation with a sign attached to each source index; acts on n
// lines, det = signature * product of entry signs.
struct SignedPerm {
  Permutation perm;
  std::vector<Sign> signs;

  static SignedPerm identity(int n) {
    return {Permutation::identity(n), std::vector<Sign>(static_cast<std::size_t>(n), Sign::plus())};
  }

  void check() const {
    require(static_cast<int>(signs.size()) == perm.size(), errc::length_mismatch,
            "signed permutation: sign list does not match size");
  }

  Sign det() const {
    check();
    Sign s = perm.signature();
    for (Sign x : signs) s *= x;
    return s;
  }

  SignedPerm compose(const SignedPerm& other) const {
    check();
    other.check();
    SignedPerm out{perm.compose(other.perm), std::vector<Sign>(signs.size())};
    for (int i = 0; i < perm.size(); ++i)
      out.signs[static_cast<std::size_t>(i)] =
          other.signs[static_cast<std::size_t>(i)] * signs[static_cast<std::size_t>(other.perm(i))];
    return out;
  }
};

}  // namespace orientsign
