#include "qsslab/schemes.hpp"

#include <cmath>
#include <set>

#include "qsslab/tensorlin.hpp"

namespace qss {

SecretEnsemble::SecretEnsemble(std::size_t secret_dim, std::vector<Item> items)
    : secret_dim_(secret_dim) {
  if (secret_dim_ < 1) throw input_error("secret dimension must be >= 1");
  double total = 0.0;
  for (const auto& item : items) {
    if (!(item.probability >= 0.0) || item.probability > 1.0 + 1e-12)
      throw input_error("ensemble probabilities must lie in [0, 1]");
    if (item.state.dim() != secret_dim_)
      throw input_error("ensemble state dimension does not match the secret dimension");
    if (!item.state.is_normalized(1e-10))
      throw input_error("ensemble states must be normalized within 1e-10");
    total += item.probability;
    if (item.probability > 0.0) items_.push_back(item);
  }
  if (std::abs(total - 1.0) > 1e-10)
    throw input_error("ensemble probabilities must sum to 1 within 1e-10");
  if (items_.empty()) throw input_error("ensemble must contain a state with positive probability");
}

SecretEnsemble SecretEnsemble::uniform_basis(std::size_t secret_dim) {
  std::vector<Item> items;
  for (std::size_t i = 0; i < secret_dim; ++i) {
    StateVector basis(secret_dim);
    basis[i] = 1.0;
    items.push_back({1.0 / static_cast<double>(secret_dim), std::move(basis)});
  }
  return SecretEnsemble(secret_dim, std::move(items));
}

DensityMatrix ensemble_density(const SecretEnsemble& e) {
  const std::size_t d = e.secret_dim();
  ComplexMatrix rho(d, d);
  for (const auto& item : e.items()) rho = rho + item.state.projector() * complexd(item.probability);
  // Rounding in the projector sum can leave the trace a few ulps off 1.
  const double tr = rho.trace().real();
  for (auto& entry : rho.entries()) entry /= tr;
  return DensityMatrix(std::move(rho), SubsystemLayout({{"S", d}}));
}

EncodingIsometry::EncodingIsometry(ComplexMatrix matrix, SubsystemLayout output_layout)
    : matrix_(std::move(matrix)), output_layout_(std::move(output_layout)) {
  if (matrix_.rows() != output_layout_.total_dim())
    throw input_error("encoding rows must equal the product of player dimensions");
  if (!check_isometry(matrix_, 1e-10))
    throw encoding_error(
        "encoding matrix is not an isometry within 1e-10; general completely positive maps "
        "can be lifted with dilate(), which appends an environment player");
}

SchemeSpec::SchemeSpec(std::string name_, SecretEnsemble ensemble, EncodingIsometry encoding_,
                       AccessStructure gamma_)
    : name(std::move(name_)),
      ensemble_default(std::move(ensemble)),
      encoding(std::move(encoding_)),
      gamma(std::move(gamma_)) {
  if (ensemble_default.secret_dim() != encoding.secret_dim())
    throw input_error("ensemble secret dimension does not match the encoding");
  const auto layout_labels = encoding.output_layout().labels();
  if (gamma.players() != layout_labels)
    throw input_error("access structure players must match the encoding output layout");
}

SchemeSpec cgl23_scheme() {
  const double w = 1.0 / std::sqrt(3.0);
  ComplexMatrix u(27, 3);
  auto idx = [](int a, int b, int c) { return a * 9 + b * 3 + c; };
  // Codeword supports: |0> -> 000,111,222 ; |1> -> 012,120,201 ; |2> -> 021,102,210.
  const int support[3][3][3] = {{{0, 0, 0}, {1, 1, 1}, {2, 2, 2}},
                                {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}},
                                {{0, 2, 1}, {1, 0, 2}, {2, 1, 0}}};
  for (int s = 0; s < 3; ++s)
    for (int k = 0; k < 3; ++k)
      u(idx(support[s][k][0], support[s][k][1], support[s][k][2]), s) = w;

  SubsystemLayout players({{"P1", 3}, {"P2", 3}, {"P3", 3}});
  return SchemeSpec("cgl23", SecretEnsemble::uniform_basis(3),
                    EncodingIsometry(std::move(u), std::move(players)), threshold_structure(2, 3));
}

namespace {

bool is_prime(std::size_t q) {
  if (q < 2) return false;
  for (std::size_t f = 2; f * f <= q; ++f)
    if (q % f == 0) return false;
  return true;
}

}  // namespace

SchemeSpec threshold_scheme(std::size_t t, std::size_t n, std::size_t q) {
  if (n != 2 * t - 1) throw input_error("threshold scheme requires n = 2t - 1");
  if (!is_prime(q)) throw input_error("threshold scheme requires a prime field size");
  if (q < n) throw input_error("field size must be at least the player count");

  std::size_t rows = 1;
  for (std::size_t i = 0; i < n; ++i) {
    rows *= q;
    if (rows > kDefaultMaxDim)
      throw size_error("threshold scheme share space exceeds the configured maximum dimension");
  }

  const double norm = std::pow(static_cast<double>(q), -0.5 * static_cast<double>(t - 1));
  ComplexMatrix v(rows, q);
  // Polynomials f(x) = c_0 + c_1 x + ... + c_{t-2} x^{t-2} + s x^{t-1} over
  // GF(q): the secret rides the leading coefficient, one share tuple
  // (f(1), ..., f(n)) per choice of the lower coefficients. Placing the
  // secret at f(0) instead would leak it outright whenever q = n (the point
  // n is 0 mod q); the leading-coefficient form works for every q >= n and
  // reproduces the (2,3) qutrit code verbatim at t=2, q=3.
  std::vector<std::size_t> coeffs(t > 1 ? t - 1 : 0, 0);
  for (std::size_t s = 0; s < q; ++s) {
    std::fill(coeffs.begin(), coeffs.end(), 0);
    while (true) {
      std::size_t row = 0;
      for (std::size_t x = 1; x <= n; ++x) {
        std::size_t power = 1;  // x^k mod q, starting at k = 0
        std::size_t value = 0;
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
          value = (value + coeffs[k] * power) % q;
          power = (power * x) % q;
        }
        value = (value + s * power) % q;  // power is now x^{t-1}
        row = row * q + value;
      }
      v(row, s) += norm;

      std::size_t carry = 0;
      for (; carry < coeffs.size(); ++carry) {
        if (++coeffs[carry] < q) break;
        coeffs[carry] = 0;
      }
      if (carry == coeffs.size()) break;
    }
  }

  std::vector<Subsystem> parts;
  for (std::size_t i = 1; i <= n; ++i) parts.push_back({"P" + std::to_string(i), q});
  const std::string name =
      "threshold(" + std::to_string(t) + "," + std::to_string(n) + "," + std::to_string(q) + ")";
  return SchemeSpec(name, SecretEnsemble::uniform_basis(q),
                    EncodingIsometry(std::move(v), SubsystemLayout(std::move(parts))),
                    threshold_structure(t, n));
}

EncodingIsometry dilate(const std::vector<ComplexMatrix>& kraus_components,
                        const SubsystemLayout& output_layout) {
  if (kraus_components.empty()) throw input_error("dilation needs at least one Kraus component");
  const std::size_t rows = kraus_components.front().rows();
  const std::size_t cols = kraus_components.front().cols();
  if (rows != output_layout.total_dim())
    throw input_error("Kraus component rows must equal the product of player dimensions");

  ComplexMatrix completeness(cols, cols);
  for (const auto& k : kraus_components) {
    if (k.rows() != rows || k.cols() != cols)
      throw input_error("Kraus components must share one shape");
    completeness = completeness + k.dagger() * k;
  }
  if (completeness.max_abs_diff(ComplexMatrix::identity(cols)) > 1e-9)
    throw input_error("Kraus components are not trace preserving (sum K^dagger K != I within 1e-9)");

  const std::size_t env = kraus_components.size();
  // |s> -> sum_k K_k |s> (x) |k>_env.
  ComplexMatrix v(rows * env, cols);
  for (std::size_t k = 0; k < env; ++k)
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) v(r * env + k, c) += kraus_components[k](r, c);

  std::vector<Subsystem> parts = output_layout.parts();
  parts.push_back({"env", env});
  return EncodingIsometry(std::move(v), SubsystemLayout(std::move(parts)));
}

}  // namespace qss
