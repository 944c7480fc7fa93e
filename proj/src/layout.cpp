#include "qsslab/layout.hpp"

#include <algorithm>
#include <set>

namespace qss {

SubsystemLayout::SubsystemLayout(std::vector<Subsystem> parts) : parts_(std::move(parts)) {
  std::set<std::string> seen;
  for (const auto& p : parts_) {
    if (p.dim < 1) throw input_error("subsystem '" + p.label + "' must have dimension >= 1");
    if (!seen.insert(p.label).second) throw input_error("duplicate subsystem label '" + p.label + "'");
  }
}

std::size_t SubsystemLayout::total_dim() const {
  std::size_t d = 1;
  for (const auto& p : parts_) d *= p.dim;
  return d;
}

bool SubsystemLayout::has_label(const std::string& label) const {
  for (const auto& p : parts_)
    if (p.label == label) return true;
  return false;
}

std::size_t SubsystemLayout::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < parts_.size(); ++i)
    if (parts_[i].label == label) return i;
  throw input_error("unknown subsystem label '" + label + "'");
}

std::vector<std::string> SubsystemLayout::labels() const {
  std::vector<std::string> out;
  out.reserve(parts_.size());
  for (const auto& p : parts_) out.push_back(p.label);
  return out;
}

std::vector<std::size_t> SubsystemLayout::positions_of(const std::vector<std::string>& labels) const {
  std::set<std::size_t> pos;
  for (const auto& l : labels) pos.insert(index_of(l));
  return {pos.begin(), pos.end()};
}

SubsystemLayout SubsystemLayout::select(const std::vector<std::size_t>& positions) const {
  std::vector<Subsystem> parts;
  parts.reserve(positions.size());
  for (auto i : positions) {
    if (i >= parts_.size()) throw input_error("subsystem position out of range");
    parts.push_back(parts_[i]);
  }
  return SubsystemLayout(std::move(parts));
}

std::vector<std::size_t> SubsystemLayout::complement(const std::vector<std::size_t>& positions) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < parts_.size(); ++i)
    if (std::find(positions.begin(), positions.end(), i) == positions.end()) out.push_back(i);
  return out;
}

}  // namespace qss
