#include "qsslab/access.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace qss {

namespace {

constexpr std::size_t kEnumerationPlayerCap = 12;

}  // namespace

AccessStructure::AccessStructure(std::vector<std::string> players,
                                 std::vector<std::vector<std::string>> minimal_authorized)
    : players_(std::move(players)) {
  if (players_.empty()) throw input_error("access structure needs at least one player");
  if (players_.size() > 64) throw input_error("access structure limited to 64 players");
  std::set<std::string> seen;
  for (const auto& p : players_)
    if (!seen.insert(p).second) throw input_error("duplicate player label '" + p + "'");

  std::vector<std::uint64_t> masks;
  for (const auto& s : minimal_authorized) {
    if (s.empty()) throw input_error("minimal authorized sets must be nonempty");
    masks.push_back(mask_of(s));
  }
  // Normalize to the antichain of minimal sets; keep declared order otherwise.
  std::vector<bool> redundant(masks.size(), false);
  for (std::size_t i = 0; i < masks.size(); ++i)
    for (std::size_t j = 0; j < masks.size(); ++j) {
      if (i == j || redundant[j]) continue;
      const bool proper_superset = (masks[i] & masks[j]) == masks[j] && masks[i] != masks[j];
      const bool duplicate_later = masks[i] == masks[j] && j < i;
      if (proper_superset || duplicate_later) {
        redundant[i] = true;
        warnings_.push_back("dropped redundant authorized set covering another minimal set");
        break;
      }
    }
  for (std::size_t i = 0; i < masks.size(); ++i) {
    if (redundant[i]) continue;
    minimal_masks_.push_back(masks[i]);
    minimal_.push_back(subset_of(masks[i]));
  }
  if (minimal_.empty()) throw input_error("access structure needs at least one authorized set");
}

std::size_t AccessStructure::player_index(const std::string& label) const {
  for (std::size_t i = 0; i < players_.size(); ++i)
    if (players_[i] == label) return i;
  throw input_error("unknown player label '" + label + "'");
}

std::uint64_t AccessStructure::mask_of(const std::vector<std::string>& subset) const {
  std::uint64_t m = 0;
  for (const auto& l : subset) m |= (std::uint64_t{1} << player_index(l));
  return m;
}

std::vector<std::string> AccessStructure::subset_of(std::uint64_t mask) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < players_.size(); ++i)
    if (mask & (std::uint64_t{1} << i)) out.push_back(players_[i]);
  return out;
}

bool AccessStructure::is_authorized_mask(std::uint64_t mask) const {
  for (auto m : minimal_masks_)
    if ((mask & m) == m) return true;
  return false;
}

bool is_authorized(const AccessStructure& gamma, const std::vector<std::string>& a) {
  return gamma.is_authorized_mask(gamma.mask_of(a));
}

StructureFlags classify(const AccessStructure& gamma) {
  StructureFlags flags;
  flags.monotone_antichain = true;  // normalized at construction

  flags.quantum_admissible = true;
  const auto& minimal = gamma.minimal_authorized();
  for (std::size_t i = 0; i < minimal.size() && flags.quantum_admissible; ++i)
    for (std::size_t j = i + 1; j < minimal.size(); ++j) {
      if ((gamma.mask_of(minimal[i]) & gamma.mask_of(minimal[j])) == 0) {
        flags.quantum_admissible = false;
        flags.disjoint_witness_a = minimal[i];
        flags.disjoint_witness_b = minimal[j];
        break;
      }
    }

  const std::size_t n = gamma.players().size();
  if (n > kEnumerationPlayerCap)
    throw size_error("complement-closure classification is limited to " +
                     std::to_string(kEnumerationPlayerCap) + " players");
  // Maximal structures: a set is unauthorized exactly when its complement
  // is authorized. (The one-directional reading would admit structures with
  // two disjoint authorized sets, which no quantum scheme can realize.)
  const std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  flags.complement_closed = true;
  for (std::uint64_t mask = 0; mask <= full; ++mask) {
    if (gamma.is_authorized_mask(full & ~mask) == gamma.is_authorized_mask(mask)) {
      flags.complement_closed = false;
      break;
    }
  }
  return flags;
}

std::vector<SubsetPair> theorem6_pairs(const AccessStructure& gamma) {
  const std::size_t n = gamma.players().size();
  if (n > kEnumerationPlayerCap)
    throw size_error("pair enumeration is limited to " + std::to_string(kEnumerationPlayerCap) +
                     " players");
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;

  std::vector<std::uint64_t> unauthorized;
  for (std::uint64_t mask = 1; mask <= full; ++mask)
    if (!gamma.is_authorized_mask(mask)) unauthorized.push_back(mask);

  std::vector<SubsetPair> pairs;
  for (auto a : unauthorized)
    for (auto b : unauthorized) {
      if ((a & b) != 0) continue;
      if (gamma.is_authorized_mask(a | b)) pairs.push_back({gamma.subset_of(a), gamma.subset_of(b)});
    }
  return pairs;
}

AccessStructure threshold_structure(std::size_t t, std::size_t n) {
  if (t < 1 || t > n) throw input_error("threshold structure requires 1 <= t <= n");
  if (n > 20) throw size_error("threshold structure enumeration is limited to 20 players");
  std::vector<std::string> players;
  for (std::size_t i = 1; i <= n; ++i) players.push_back("P" + std::to_string(i));

  std::vector<std::vector<std::string>> minimal;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != t) continue;
    std::vector<std::string> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::uint64_t{1} << i)) s.push_back(players[i]);
    minimal.push_back(std::move(s));
  }
  return AccessStructure(std::move(players), std::move(minimal));
}

AccessStructure vernam_structure() {
  return AccessStructure({"A", "B", "M"}, {{"A", "M"}, {"B", "M"}});
}

}  // namespace qss
