// Copyright 2026 The eamtp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "eamtp/channels.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "eamtp/error.hpp"

namespace eamtp {
namespace {

void require_unit_interval(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw InvalidInput(std::string(name) + " must lie in [0, 1], got " + std::to_string(v));
  }
}

// |det K| from the eigenvalues of K K^dagger; works for any square size.
double abs_determinant(const ComplexMatrix& k) {
  if (k.rows() == 2) return std::abs(det_2x2(k));
  double prod = 1.0;
  for (double lambda : eig_hermitian(matmul(k, dagger(k)))) prod *= std::max(lambda, 0.0);
  return std::sqrt(prod);
}

}  // namespace

KrausChannel::KrausChannel(std::vector<ComplexMatrix> operators, std::vector<std::string> labels)
    : operators_(std::move(operators)), labels_(std::move(labels)) {
  if (operators_.empty()) throw InvalidInput("a channel needs at least one Kraus operator");
  if (labels_.size() != operators_.size()) {
    throw InvalidInput("every Kraus operator needs exactly one label");
  }
  const std::size_t d = operators_.front().rows();
  for (const ComplexMatrix& k : operators_) {
    if (k.rows() != d || k.cols() != d) throw DimensionMismatch("Kraus operators differ in shape");
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    for (std::size_t j = i + 1; j < labels_.size(); ++j) {
      if (labels_[i] == labels_[j]) throw InvalidInput("duplicate Kraus label '" + labels_[i] + "'");
    }
  }
  const double defect = completeness_defect();
  if (defect > kCompletenessTolerance) {
    throw InvalidInput("Kraus operators are not complete (defect " + std::to_string(defect) + ")");
  }
}

const ComplexMatrix& KrausChannel::op(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return operators_[i];
  }
  throw InvalidInput("unknown Kraus label '" + std::string(label) + "'");
}

double KrausChannel::completeness_defect() const {
  ComplexMatrix sum(dim(), dim());
  for (const ComplexMatrix& k : operators_) sum += matmul(dagger(k), k);
  return sum.max_abs_diff(ComplexMatrix::identity(dim()));
}

KrausChannel adc(double r) {
  require_unit_interval(r, "decay probability r");
  ComplexMatrix e0{{1, 0}, {0, std::sqrt(1.0 - r)}};
  ComplexMatrix e1{{0, std::sqrt(r)}, {0, 0}};
  return KrausChannel({std::move(e0), std::move(e1)}, {"e0", "e1"});
}

double decay_probability(double gamma, double t) {
  if (!(gamma >= 0.0) || !(t >= 0.0)) throw InvalidInput("rate and time must be non-negative");
  return 1.0 - std::exp(-gamma * t);
}

KrausChannel lift(const KrausChannel& channel, std::span<const std::size_t> targets,
                  std::size_t n_qubits) {
  if (channel.dim() != 2) throw InvalidInput("only single-qubit channels can be lifted");
  if (n_qubits == 0 || (std::size_t{1} << n_qubits) > kMaxDimension) {
    throw InvalidInput("register must hold between 1 and 4 qubits");
  }
  if (targets.empty()) throw InvalidInput("lift needs at least one target qubit");
  std::vector<std::size_t> sorted(targets.begin(), targets.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidInput("target qubits must be distinct");
  }
  if (sorted.back() >= n_qubits) throw InvalidInput("target qubit out of range");

  const std::size_t k = channel.size();
  std::size_t combos = 1;
  for (std::size_t i = 0; i < sorted.size(); ++i) combos *= k;

  std::vector<ComplexMatrix> ops;
  std::vector<std::string> labels;
  ops.reserve(combos);
  labels.reserve(combos);
  for (std::size_t c = 0; c < combos; ++c) {
    // Decode c in base k, first target most significant.
    std::vector<std::size_t> pick(sorted.size());
    std::size_t rest = c;
    for (std::size_t i = sorted.size(); i-- > 0;) {
      pick[i] = rest % k;
      rest /= k;
    }
    ComplexMatrix full = ComplexMatrix::identity(1);
    std::string label;
    std::size_t next = 0;
    for (std::size_t q = 0; q < n_qubits; ++q) {
      if (next < sorted.size() && sorted[next] == q) {
        full = kron(full, channel.operators()[pick[next]]);
        if (!label.empty()) label += ',';
        label += channel.labels()[pick[next]];
        ++next;
      } else {
        full = kron(full, identity2());
      }
    }
    ops.push_back(std::move(full));
    labels.push_back(std::move(label));
  }
  return KrausChannel(std::move(ops), std::move(labels));
}

DensityMatrix apply_channel(const KrausChannel& channel, const DensityMatrix& rho) {
  if (channel.dim() != rho.dim()) throw DimensionMismatch("channel and state dimensions differ");
  ComplexMatrix out(rho.dim(), rho.dim());
  for (const ComplexMatrix& k : channel.operators()) {
    out += matmul(matmul(k, rho.matrix()), dagger(k));
  }
  return DensityMatrix::from_unnormalized(out);
}

std::vector<double> branch_probabilities(const KrausChannel& channel, const DensityMatrix& rho) {
  if (channel.dim() != rho.dim()) throw DimensionMismatch("channel and state dimensions differ");
  std::vector<double> out;
  out.reserve(channel.size());
  for (const ComplexMatrix& k : channel.operators()) {
    out.push_back(matmul(matmul(k, rho.matrix()), dagger(k)).trace().real());
  }
  return out;
}

PostSelection eam_select(const KrausChannel& channel, const DensityMatrix& rho,
                         std::string_view label) {
  if (channel.dim() != rho.dim()) throw DimensionMismatch("channel and state dimensions differ");
  const ComplexMatrix& k = channel.op(label);
  const ComplexMatrix branch = matmul(matmul(k, rho.matrix()), dagger(k));
  const double p = branch.trace().real();
  if (!(p >= kZeroBranchThreshold)) throw ZeroProbabilityBranch(std::string(label), p);
  return {DensityMatrix::from_unnormalized(branch), p};
}

PostSelection eam_select(const KrausChannel& channel, const Ket& psi, std::string_view label) {
  if (channel.dim() != psi.dim()) throw DimensionMismatch("channel and state dimensions differ");
  const ComplexMatrix& k = channel.op(label);
  std::vector<Complex> out(psi.dim());
  double p = 0.0;
  for (std::size_t i = 0; i < psi.dim(); ++i) {
    for (std::size_t j = 0; j < psi.dim(); ++j) out[i] += k(i, j) * psi[j];
    p += std::norm(out[i]);
  }
  if (!(p >= kZeroBranchThreshold)) throw ZeroProbabilityBranch(std::string(label), p);
  const Ket post = Ket::normalized(psi.n_qubits(), std::move(out));
  return {DensityMatrix::pure(post), p};
}

double reversal_normalization(const ComplexMatrix& k) {
  const std::vector<double> eig = eig_hermitian(matmul(k, dagger(k)));
  return std::sqrt(std::max(eig.front(), 0.0));
}

ComplexMatrix wm_reversal(const ComplexMatrix& k) {
  const ComplexMatrix inv = inverse_2x2(k);
  return inv * Complex(reversal_normalization(k));
}

double WeakMeasurement::click_probability(const ComplexMatrix& rho) const {
  return matmul(matmul(op, rho), dagger(op)).trace().real();
}

const ComplexMatrix& correction_unitary(int branch_index) {
  static const ComplexMatrix xz = matmul(pauli_x(), pauli_z());
  switch (branch_index) {
    case 1: return identity2();
    case 2: return pauli_z();
    case 3: return pauli_x();
    case 4: return xz;
    default: throw InvalidInput("branch index must be 1..4, got " + std::to_string(branch_index));
  }
}

WeakMeasurement wm_operator(double q, int branch_index, WeakVariant variant) {
  require_unit_interval(q, "weak measurement strength q");
  const ComplexMatrix& u = correction_unitary(branch_index);
  const double d0 = variant == WeakVariant::kSqrt ? std::sqrt(1.0 - q) : 1.0 - q;
  const ComplexMatrix d{{d0, 0}, {0, 1}};
  WeakMeasurement wm{q, u, matmul(u, d)};
  const double top = eig_hermitian(matmul(dagger(wm.op), wm.op)).back();
  if (top > 1.0 + 1e-12) throw InvalidInput("weak measurement element exceeds identity");
  return wm;
}

KrausChannel transform_kraus(const KrausChannel& channel, const ComplexMatrix& v) {
  if (v.rows() != channel.size() || v.cols() != channel.size()) {
    throw DimensionMismatch("mixing matrix must be square with side equal to the operator count");
  }
  if (!is_unitary(v)) throw InvalidInput("mixing matrix is not unitary");
  std::vector<ComplexMatrix> ops;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < channel.size(); ++i) {
    ComplexMatrix f(channel.dim(), channel.dim());
    for (std::size_t j = 0; j < channel.size(); ++j) f += channel.operators()[j] * v(i, j);
    ops.push_back(std::move(f));
    labels.push_back("f" + std::to_string(i));
  }
  return KrausChannel(std::move(ops), std::move(labels));
}

ComplexMatrix rotation_family(double delta) {
  const double c = std::cos(delta);
  const double s = std::sin(delta);
  return ComplexMatrix{{c, -s}, {s, c}};
}

ComplexMatrix unitary_family(double a, double b, double g, double d) {
  const double c = std::cos(d);
  const double s = std::sin(d);
  auto phase = [](double theta) { return std::polar(1.0, theta); };
  return ComplexMatrix{{c * phase(a - b - g), -s * phase(a - b + g)},
                       {s * phase(a + b - g), c * phase(a + b + g)}};
}

double recoverable_probability(const KrausChannel& channel) {
  double total = 0.0;
  for (const ComplexMatrix& k : channel.operators()) {
    if (abs_determinant(k) < kSingularityThreshold) continue;
    const double n = reversal_normalization(k);
    total += n * n;
  }
  return total;
}

}  // namespace eamtp
