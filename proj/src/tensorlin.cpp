#include "qsslab/tensorlin.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qss {

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b, std::size_t max_dim) {
  const std::size_t rows = a.rows() * b.rows();
  const std::size_t cols = a.cols() * b.cols();
  if ((a.rows() != 0 && rows / a.rows() != b.rows()) || rows > max_dim || cols > max_dim)
    throw size_error("tensor product dimension " + std::to_string(rows) + "x" + std::to_string(cols) +
                     " exceeds the configured maximum of " + std::to_string(max_dim));
  ComplexMatrix out(rows, cols);
  for (std::size_t ra = 0; ra < a.rows(); ++ra)
    for (std::size_t ca = 0; ca < a.cols(); ++ca) {
      const complexd f = a(ra, ca);
      if (f == complexd(0.0)) continue;
      for (std::size_t rb = 0; rb < b.rows(); ++rb)
        for (std::size_t cb = 0; cb < b.cols(); ++cb)
          out(ra * b.rows() + rb, ca * b.cols() + cb) = f * b(rb, cb);
    }
  return out;
}

StateVector tensor_product(const StateVector& a, const StateVector& b, std::size_t max_dim) {
  const std::size_t dim = a.dim() * b.dim();
  if (dim > max_dim)
    throw size_error("tensor product dimension " + std::to_string(dim) +
                     " exceeds the configured maximum of " + std::to_string(max_dim));
  StateVector out(dim);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) out[i * b.dim() + j] = a[i] * b[j];
  return out;
}

namespace {

// Row-major strides of the layout factors.
std::vector<std::size_t> layout_strides(const SubsystemLayout& layout) {
  std::vector<std::size_t> strides(layout.size());
  std::size_t s = 1;
  for (std::size_t i = layout.size(); i-- > 0;) {
    strides[i] = s;
    s *= layout[i].dim;
  }
  return strides;
}

// Flat offsets of every multi-index over the factors at `positions`.
std::vector<std::size_t> enumerate_offsets(const SubsystemLayout& layout,
                                           const std::vector<std::size_t>& strides,
                                           const std::vector<std::size_t>& positions) {
  std::vector<std::size_t> offsets{0};
  for (auto p : positions) {
    const std::size_t d = layout[p].dim;
    std::vector<std::size_t> next;
    next.reserve(offsets.size() * d);
    for (auto base : offsets)
      for (std::size_t k = 0; k < d; ++k) next.push_back(base + k * strides[p]);
    offsets = std::move(next);
  }
  return offsets;
}

}  // namespace

ComplexMatrix partial_trace(const ComplexMatrix& m, const SubsystemLayout& layout,
                            const std::vector<std::string>& keep) {
  if (!m.square() || m.rows() != layout.total_dim())
    throw input_error("partial trace input must be square with dimension equal to the layout total");
  const auto keep_pos = layout.positions_of(keep);
  const auto traced_pos = layout.complement(keep_pos);
  const auto strides = layout_strides(layout);
  const auto keep_offs = enumerate_offsets(layout, strides, keep_pos);
  const auto tr_offs = enumerate_offsets(layout, strides, traced_pos);

  const std::size_t dk = keep_offs.size();
  ComplexMatrix out(dk, dk);
  for (std::size_t i = 0; i < dk; ++i)
    for (std::size_t j = 0; j < dk; ++j) {
      complexd acc = 0.0;
      for (auto t : tr_offs) acc += m(keep_offs[i] + t, keep_offs[j] + t);
      out(i, j) = acc;
    }
  return out;
}

namespace {

double offdiag_frobenius(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

struct JacobiOut {
  std::vector<double> values;
  ComplexMatrix vectors;
};

JacobiOut jacobi_hermitian(const ComplexMatrix& m, double hermitian_tol, bool want_vectors) {
  if (!m.square()) throw input_error("hermitian_eig requires a square matrix");
  if (m.hermiticity_defect() > hermitian_tol)
    throw input_error("hermitian_eig input is not Hermitian within tolerance");

  const std::size_t n = m.rows();
  ComplexMatrix a = m;
  ComplexMatrix q = want_vectors ? ComplexMatrix::identity(n) : ComplexMatrix();

  const double frob = m.frobenius_norm();
  const double conv = 1e-13 * frob;
  // Elements below this cannot push the off-diagonal norm past conv.
  const double skip = (n > 1) ? conv / static_cast<double>(n) : 0.0;
  constexpr int kMaxSweeps = 100;

  bool converged = (n <= 1) || offdiag_frobenius(a) <= conv;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t qq = p + 1; qq < n; ++qq) {
        const complexd apq = a(p, qq);
        const double g = std::abs(apq);
        if (g <= skip) continue;
        const complexd phase = apq / g;  // e^{i phi}
        const double app = a(p, p).real();
        const double aqq = a(qq, qq).real();
        const double tau = (app - aqq) / (2.0 * g);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // A <- U^dagger A U with the (p,q) block of U = [[c, -s e^{i phi}],
        // [s e^{-i phi}, c]].
        for (std::size_t j = 0; j < n; ++j) {
          const complexd rp = a(p, j), rq = a(qq, j);
          a(p, j) = c * rp + s * phase * rq;
          a(qq, j) = -s * std::conj(phase) * rp + c * rq;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const complexd cp = a(i, p), cq = a(i, qq);
          a(i, p) = c * cp + s * std::conj(phase) * cq;
          a(i, qq) = -s * phase * cp + c * cq;
        }
        a(p, qq) = 0.0;
        a(qq, p) = 0.0;
        a(p, p) = complexd(a(p, p).real(), 0.0);
        a(qq, qq) = complexd(a(qq, qq).real(), 0.0);

        if (want_vectors) {
          for (std::size_t i = 0; i < n; ++i) {
            const complexd cp = q(i, p), cq = q(i, qq);
            q(i, p) = c * cp + s * std::conj(phase) * cq;
            q(i, qq) = -s * phase * cp + c * cq;
          }
        }
      }
    }
    converged = offdiag_frobenius(a) <= conv;
  }
  if (!converged)
    throw numeric_error("Jacobi eigensolver did not converge within 100 sweeps");

  // Ascending eigenvalue order, stable in the original index for ties.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

  JacobiOut out;
  out.values.resize(n);
  for (std::size_t k = 0; k < n; ++k) out.values[k] = a(order[k], order[k]).real();
  if (want_vectors) {
    out.vectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = q(i, order[k]);
  }
  return out;
}

}  // namespace

EigResult hermitian_eig(const ComplexMatrix& m, double hermitian_tol) {
  auto r = jacobi_hermitian(m, hermitian_tol, true);
  return {std::move(r.values), std::move(r.vectors)};
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, double hermitian_tol) {
  return jacobi_hermitian(m, hermitian_tol, false).values;
}

bool check_isometry(const ComplexMatrix& v, double tol) {
  if (v.rows() < v.cols()) return false;
  const std::size_t n = v.cols();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      complexd acc = 0.0;
      for (std::size_t r = 0; r < v.rows(); ++r) acc += std::conj(v(r, i)) * v(r, j);
      if (i == j) acc -= 1.0;
      worst = std::max(worst, std::abs(acc));
    }
  return worst <= tol;
}

StateVector permute_state(const StateVector& psi, const SubsystemLayout& layout,
                          const std::vector<std::size_t>& new_order) {
  const std::size_t n = layout.size();
  if (new_order.size() != n) throw input_error("permutation length mismatch");
  std::vector<bool> seen(n, false);
  for (auto p : new_order) {
    if (p >= n || seen[p]) throw input_error("invalid tensor factor permutation");
    seen[p] = true;
  }
  if (psi.dim() != layout.total_dim())
    throw input_error("state dimension does not match layout");

  const auto strides = layout_strides(layout);
  std::vector<std::size_t> new_dims(n);
  for (std::size_t k = 0; k < n; ++k) new_dims[k] = layout[new_order[k]].dim;

  StateVector out(psi.dim());
  std::vector<std::size_t> idx(n, 0);  // multi-index over the NEW factor order
  for (std::size_t flat = 0; flat < psi.dim(); ++flat) {
    std::size_t src = 0;
    for (std::size_t k = 0; k < n; ++k) src += idx[k] * strides[new_order[k]];
    out[flat] = psi[src];
    for (std::size_t k = n; k-- > 0;) {
      if (++idx[k] < new_dims[k]) break;
      idx[k] = 0;
    }
  }
  return out;
}

ComplexMatrix reduce_pure(const StateVector& psi, const SubsystemLayout& layout,
                          const std::vector<std::string>& keep) {
  if (psi.dim() != layout.total_dim())
    throw input_error("state dimension does not match layout");
  const auto keep_pos = layout.positions_of(keep);
  const auto rest_pos = layout.complement(keep_pos);
  const auto strides = layout_strides(layout);
  const auto keep_offs = enumerate_offsets(layout, strides, keep_pos);
  const auto rest_offs = enumerate_offsets(layout, strides, rest_pos);

  const std::size_t dk = keep_offs.size();
  ComplexMatrix out(dk, dk);
  for (std::size_t i = 0; i < dk; ++i) {
    for (std::size_t j = i; j < dk; ++j) {
      complexd acc = 0.0;
      for (auto r : rest_offs) acc += psi[keep_offs[i] + r] * std::conj(psi[keep_offs[j] + r]);
      out(i, j) = acc;
      out(j, i) = std::conj(acc);
    }
  }
  return out;
}

std::vector<complexd> contract_bra(const StateVector& psi, const SubsystemLayout& layout,
                                   const std::vector<std::size_t>& positions,
                                   const std::vector<complexd>& u) {
  if (psi.dim() != layout.total_dim())
    throw input_error("state dimension does not match layout");
  const auto strides = layout_strides(layout);
  const auto u_offs = enumerate_offsets(layout, strides, positions);
  const auto rest_pos = layout.complement(positions);
  const auto rest_offs = enumerate_offsets(layout, strides, rest_pos);
  if (u.size() != u_offs.size()) throw input_error("bra dimension mismatch in contraction");

  std::vector<complexd> out(rest_offs.size(), 0.0);
  for (std::size_t k = 0; k < u_offs.size(); ++k) {
    const complexd w = std::conj(u[k]);
    if (w == complexd(0.0)) continue;
    for (std::size_t r = 0; r < rest_offs.size(); ++r) out[r] += w * psi[u_offs[k] + rest_offs[r]];
  }
  return out;
}

}  // namespace qss
