#include "qsslab/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

namespace qss {

namespace {

std::string joined(const std::vector<std::string>& labels) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < labels.size(); ++i) os << (i ? "," : "") << labels[i];
  os << "}";
  return os.str();
}

void require_disjoint(const std::vector<std::string>& x, const std::vector<std::string>& y) {
  std::set<std::string> sx(x.begin(), x.end());
  for (const auto& l : y)
    if (sx.count(l)) throw input_error("label sets overlap on '" + l + "'");
}

std::vector<std::string> unions(const std::vector<std::string>& x, const std::vector<std::string>& y) {
  std::vector<std::string> out = x;
  out.insert(out.end(), y.begin(), y.end());
  return out;
}

// S of a reduction, with S({}) = 0.
double subset_entropy(const DensityMatrix& rho, const std::vector<std::string>& labels) {
  if (labels.empty()) return 0.0;
  return von_neumann_entropy(rho.reduce(labels));
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix matrix, SubsystemLayout layout)
    : matrix_(std::move(matrix)), layout_(std::move(layout)) {
  if (!matrix_.square()) throw input_error("density matrix must be square");
  if (matrix_.rows() != layout_.total_dim())
    throw input_error("density matrix dimension " + std::to_string(matrix_.rows()) +
                      " does not match layout total " + std::to_string(layout_.total_dim()));
  if (matrix_.hermiticity_defect() > 1e-10)
    throw input_error("density matrix is not Hermitian within 1e-10");
  if (std::abs(matrix_.trace() - complexd(1.0)) > 1e-10)
    throw input_error("density matrix trace deviates from 1 by more than 1e-10");
}

DensityMatrix DensityMatrix::reduce(const std::vector<std::string>& keep) const {
  auto keep_pos = layout_.positions_of(keep);
  auto reduced = partial_trace(matrix_, layout_, keep);
  return DensityMatrix(std::move(reduced), layout_.select(keep_pos));
}

double entropy_from_eigenvalues(const std::vector<double>& eigenvalues) {
  double s = 0.0;
  for (double lambda : eigenvalues) {
    if (lambda < -kEigenClamp)
      throw input_error("density matrix has eigenvalue " + std::to_string(lambda) +
                        " below the -1e-10 floor");
    if (lambda <= 0.0) continue;  // clamp window and exact zeros
    s -= lambda * std::log2(lambda);
  }
  // Guard against accumulated rounding pushing the sum slightly negative.
  return (s < 0.0 && s >= -1e-9) ? 0.0 : s;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  return entropy_from_eigenvalues(hermitian_eigenvalues(rho.matrix()));
}

double conditional_entropy(const DensityMatrix& rho, const std::vector<std::string>& x,
                           const std::vector<std::string>& y) {
  require_disjoint(x, y);
  return subset_entropy(rho, unions(x, y)) - subset_entropy(rho, y);
}

double mutual_information(const DensityMatrix& rho, const std::vector<std::string>& x,
                          const std::vector<std::string>& y) {
  require_disjoint(x, y);
  return subset_entropy(rho, x) + subset_entropy(rho, y) - subset_entropy(rho, unions(x, y));
}

double coherent_information(const DensityMatrix& rho_ra, const std::vector<std::string>& a,
                            const std::vector<std::string>& r) {
  require_disjoint(a, r);
  std::set<std::string> all(a.begin(), a.end());
  all.insert(r.begin(), r.end());
  for (const auto& part : rho_ra.layout().parts())
    if (!all.count(part.label))
      throw input_error("coherent information requires a and r to cover the state; missing '" +
                        part.label + "'");
  return subset_entropy(rho_ra, a) - von_neumann_entropy(rho_ra);
}

bool EntropyReport::all_hold() const {
  for (const auto& v : verdicts)
    if (!v.holds) return false;
  return true;
}

EntropyReport check_entropy_inequalities(const DensityMatrix& rho, const std::vector<std::string>& x,
                                         const std::vector<std::string>& y,
                                         const std::vector<std::string>& z, double tolerance) {
  require_disjoint(x, y);
  require_disjoint(x, z);
  require_disjoint(y, z);

  EntropyReport report;
  report.tolerance = tolerance;

  const double s_x = subset_entropy(rho, x);
  const double s_y = subset_entropy(rho, y);
  const double s_xy = subset_entropy(rho, unions(x, y));
  report.entropies = {{joined(x), s_x}, {joined(y), s_y}, {joined(unions(x, y)), s_xy}};
  report.conditional_entropies = {{"S(" + joined(x) + "|" + joined(y) + ")", s_xy - s_y}};
  report.mutual_informations = {{"I(" + joined(x) + ":" + joined(y) + ")", s_x + s_y - s_xy}};

  auto add = [&](const std::string& name, double slack) {
    report.verdicts.push_back({name, slack, slack >= -tolerance});
  };
  add("subadditivity", s_x + s_y - s_xy);
  add("araki-lieb", s_xy - std::abs(s_x - s_y));

  if (!z.empty()) {
    const double s_z = subset_entropy(rho, z);
    const double s_yz = subset_entropy(rho, unions(y, z));
    const double s_xyz = subset_entropy(rho, unions(unions(x, y), z));
    report.entropies.push_back({joined(z), s_z});
    report.entropies.push_back({joined(unions(y, z)), s_yz});
    report.entropies.push_back({joined(unions(unions(x, y), z)), s_xyz});
    const double i_xy = s_x + s_y - s_xy;
    const double i_xyz = s_x + s_yz - s_xyz;
    report.mutual_informations.push_back({"I(" + joined(x) + ":" + joined(unions(y, z)) + ")", i_xyz});
    add("strong-subadditivity", s_xy + s_yz - s_xyz - s_y);
    add("mi-monotonicity", i_xyz - i_xy);
  }
  return report;
}

StateVector random_pure_state(std::size_t dim, std::uint64_t seed) {
  if (dim == 0) throw input_error("cannot sample a zero-dimensional state");
  std::mt19937_64 rng(seed);
  // Box-Muller on the raw 64-bit stream; mt19937_64 output is fully
  // specified by the standard, so results are identical across platforms.
  auto uniform = [&rng]() {
    return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;  // (0, 1]
  };
  StateVector psi(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const double r = std::sqrt(-2.0 * std::log(uniform()));
    const double theta = 2.0 * std::numbers::pi * uniform();
    psi[i] = complexd(r * std::cos(theta), r * std::sin(theta));
  }
  psi.normalize();
  return psi;
}

DensityMatrix random_density_matrix(const SubsystemLayout& layout, std::size_t purifying_dim,
                                    std::uint64_t seed) {
  if (purifying_dim < 1) throw input_error("purifying dimension must be >= 1");
  std::vector<Subsystem> parts = layout.parts();
  parts.push_back({"__purifier__", purifying_dim});
  SubsystemLayout extended(std::move(parts));

  StateVector psi = random_pure_state(extended.total_dim(), seed);
  ComplexMatrix rho = reduce_pure(psi, extended, layout.labels());
  // The reduction of a unit vector has unit trace up to rounding; snap it so
  // the invariant check is about the caller's data, not our arithmetic.
  complexd tr = rho.trace();
  for (auto& e : rho.entries()) e /= tr.real();
  return DensityMatrix(std::move(rho), layout);
}

}  // namespace qss
