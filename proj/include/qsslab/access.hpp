#pragma once

#include <string>
#include <vector>

#include "qsslab/errors.hpp"

namespace qss {

// Monotone access structure over an ordered player list, stored as the
// antichain of minimal authorized sets. Construction normalizes redundant
// supersets away (recorded in `normalization_warnings`).
class AccessStructure {
public:
  AccessStructure() = default;
  AccessStructure(std::vector<std::string> players,
                  std::vector<std::vector<std::string>> minimal_authorized);

  const std::vector<std::string>& players() const { return players_; }
  const std::vector<std::vector<std::string>>& minimal_authorized() const { return minimal_; }
  const std::vector<std::string>& normalization_warnings() const { return warnings_; }

  std::size_t player_index(const std::string& label) const;

  // Bitmask over the player order; bit i = players()[i].
  std::uint64_t mask_of(const std::vector<std::string>& subset) const;
  std::vector<std::string> subset_of(std::uint64_t mask) const;

  bool is_authorized_mask(std::uint64_t mask) const;

private:
  std::vector<std::string> players_;
  std::vector<std::vector<std::string>> minimal_;
  std::vector<std::uint64_t> minimal_masks_;
  std::vector<std::string> warnings_;
};

// True iff `a` contains some minimal authorized set.
bool is_authorized(const AccessStructure& gamma, const std::vector<std::string>& a);

struct StructureFlags {
  bool monotone_antichain = false;   // stored form is a proper antichain
  bool quantum_admissible = false;   // no two disjoint authorized sets
  bool complement_closed = false;    // maximal: A unauthorized iff P\A authorized
  // Witness of inadmissibility: two disjoint minimal authorized sets.
  std::vector<std::string> disjoint_witness_a;
  std::vector<std::string> disjoint_witness_b;
};

StructureFlags classify(const AccessStructure& gamma);

struct SubsetPair {
  std::vector<std::string> a;
  std::vector<std::string> b;
};

// All ordered pairs (A, B) of disjoint nonempty unauthorized subsets whose
// union is authorized. Enumeration guard: more than 12 players throws.
std::vector<SubsetPair> theorem6_pairs(const AccessStructure& gamma);

// Minimal sets = all t-subsets of {P1..Pn}.
AccessStructure threshold_structure(std::size_t t, std::size_t n);

// Players (A, B, M); minimal sets {{A,M},{B,M}}.
AccessStructure vernam_structure();

}  // namespace qss
