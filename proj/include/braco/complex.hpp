#pragma once
// Finitely generated chain complexes of free Z-modules and their homology.
//
// A complex stores its lowest degree, the rank of each chain group, and the
// boundary maps between consecutive degrees.  Homology at degree k is the
// abelian group ker d_k / im d_{k+1}, computed through Smith normal form.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "intmatrix.hpp"
#include "smith.hpp"

namespace braco {

// ---------------------------------------------------------------------------
// Abelian groups (finitely generated)

struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;  // invariant factors > 1, ascending

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  bool operator==(const AbelianGroup&) const = default;

  // "0", "Z", "Z^2", "Z/3", "Z ⊕ Z/2 ⊕ Z/6", ...
  std::string to_string() const {
    std::vector<std::string> parts;
    if (free_rank == 1)
      parts.push_back("Z");
    else if (free_rank > 1)
      parts.push_back("Z^" + std::to_string(free_rank));
    for (const Int& d : torsion) parts.push_back("Z/" + d.str());
    if (parts.empty()) return "0";
    std::string out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) out += " ⊕ " + parts[i];
    return out;
  }
};

// ---------------------------------------------------------------------------
// Chain complexes

class ChainComplex {
 public:
  // ranks[i] is the rank in degree lowest + i; boundaries[i] is the map from
  // degree lowest + i + 1 down to degree lowest + i.
  ChainComplex(int lowest, std::vector<std::size_t> ranks, std::vector<IntMatrix> boundaries)
      : lowest_(lowest), ranks_(std::move(ranks)), boundaries_(std::move(boundaries)) {
    if (ranks_.empty()) throw internal_error("chain complex with no degrees");
    if (boundaries_.size() + 1 != ranks_.size())
      throw internal_error("chain complex boundary count does not match degree range");
    for (std::size_t i = 0; i < boundaries_.size(); ++i) {
      if (boundaries_[i].rows() != ranks_[i] || boundaries_[i].cols() != ranks_[i + 1])
        throw internal_error("chain complex boundary shape mismatch");
    }
    for (std::size_t i = 0; i + 1 < boundaries_.size(); ++i) {
      if (!(boundaries_[i] * boundaries_[i + 1]).is_zero())
        throw internal_error("chain complex boundary composition is nonzero");
    }
  }

  int lowest_degree() const { return lowest_; }
  int highest_degree() const { return lowest_ + static_cast<int>(ranks_.size()) - 1; }

  std::size_t rank_at(int k) const {
    if (k < lowest_ || k > highest_degree()) return 0;
    return ranks_[static_cast<std::size_t>(k - lowest_)];
  }

  // d_k : C_k -> C_{k-1}; degrees outside the stored range give zero maps.
  IntMatrix boundary_at(int k) const {
    if (k <= lowest_ || k > highest_degree()) return IntMatrix(rank_at(k - 1), rank_at(k));
    return boundaries_[static_cast<std::size_t>(k - lowest_) - 1];
  }

  AbelianGroup homology_at(int k) const {
    if (k < lowest_ || k > highest_degree()) return {};
    const std::size_t n = rank_at(k);
    std::size_t rank_out = 0;
    if (k > lowest_) rank_out = rank_of(boundary_at(k));
    AbelianGroup h;
    std::size_t rank_in = 0;
    if (k < highest_degree()) {
      SmithNormalForm s = smith_normal_form(boundary_at(k + 1));
      rank_in = s.rank();
      for (const Int& d : s.factors)
        if (d > 1) h.torsion.push_back(d);
    }
    if (rank_out + rank_in > n) throw internal_error("homology rank accounting underflow");
    h.free_rank = n - rank_out - rank_in;
    return h;
  }

 private:
  int lowest_;
  std::vector<std::size_t> ranks_;
  std::vector<IntMatrix> boundaries_;
};

}  // namespace braco
