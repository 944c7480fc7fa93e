#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qsslab/errors.hpp"

namespace qss {

struct Subsystem {
  std::string label;
  std::size_t dim = 0;
};

// Ordered list of labeled tensor factors. Positions matter: reductions and
// reorderings are always expressed relative to this order.
class SubsystemLayout {
public:
  SubsystemLayout() = default;
  SubsystemLayout(std::vector<Subsystem> parts);
  SubsystemLayout(std::initializer_list<Subsystem> parts)
      : SubsystemLayout(std::vector<Subsystem>(parts)) {}

  std::size_t size() const { return parts_.size(); }
  const Subsystem& operator[](std::size_t i) const { return parts_[i]; }
  const std::vector<Subsystem>& parts() const { return parts_; }

  std::size_t total_dim() const;

  bool has_label(const std::string& label) const;
  std::size_t index_of(const std::string& label) const;

  std::vector<std::string> labels() const;

  // Positions of the given labels, sorted in layout order. Unknown labels
  // throw. Duplicates in `labels` collapse.
  std::vector<std::size_t> positions_of(const std::vector<std::string>& labels) const;

  // Layout restricted to the given positions (which must be sorted).
  SubsystemLayout select(const std::vector<std::size_t>& positions) const;

  // Layout of everything except the given positions.
  std::vector<std::size_t> complement(const std::vector<std::size_t>& positions) const;

private:
  std::vector<Subsystem> parts_;
};

}  // namespace qss
