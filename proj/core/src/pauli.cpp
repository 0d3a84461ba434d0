// Copyright 2026 The qnhe authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "qnhe/pauli.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>

namespace qnhe {

namespace {

constexpr double kCoeffDropTolerance = 1e-15;

// i^k for k in 0..3.
constexpr std::complex<double> kIPowers[4] = {
    {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};

inline int parity(std::uint64_t bits) {
  return static_cast<int>(std::popcount(bits) & 1u);
}

}  // namespace

PauliString::PauliString(int n) : n_(n), x_mask_(0), z_mask_(0) {
  if (n < 1 || n > kMaxQubits) {
    throw std::invalid_argument("PauliString: qubit count out of range");
  }
}

PauliString PauliString::from_letters(std::string_view letters) {
  const int n = static_cast<int>(letters.size());
  if (n < 1 || n > kMaxQubits) {
    throw std::invalid_argument("PauliString: qubit count out of range");
  }
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  for (int q = 0; q < n; ++q) {
    const std::uint64_t bit = qubit_bit(n, q);
    switch (letters[static_cast<std::size_t>(q)]) {
      case 'I':
        break;
      case 'X':
        x |= bit;
        break;
      case 'Y':
        x |= bit;
        z |= bit;
        break;
      case 'Z':
        z |= bit;
        break;
      default:
        throw std::invalid_argument("PauliString: letters must be I/X/Y/Z");
    }
  }
  return PauliString(n, x, z);
}

char PauliString::letter(int qubit) const {
  const std::uint64_t bit = qubit_bit(n_, qubit);
  const bool x = (x_mask_ & bit) != 0;
  const bool z = (z_mask_ & bit) != 0;
  if (x && z) return 'Y';
  if (x) return 'X';
  if (z) return 'Z';
  return 'I';
}

std::string PauliString::letters() const {
  std::string out(static_cast<std::size_t>(n_), 'I');
  for (int q = 0; q < n_; ++q) out[static_cast<std::size_t>(q)] = letter(q);
  return out;
}

int PauliString::lowest_xy_qubit() const {
  if (x_mask_ == 0) return -1;
  for (int q = 0; q < n_; ++q) {
    if (x_mask_ & qubit_bit(n_, q)) return q;
  }
  return -1;
}

int PauliString::weight_y() const {
  return std::popcount(x_mask_ & z_mask_);
}

std::size_t PauliStringHash::operator()(const PauliString &p) const noexcept {
  std::uint64_t h = static_cast<std::uint64_t>(p.num_qubits());
  h = h * 0x9e3779b97f4a7c15ull + p.x_mask();
  h = h * 0x9e3779b97f4a7c15ull + p.z_mask();
  return static_cast<std::size_t>(h ^ (h >> 32));
}

Hamiltonian Hamiltonian::from_terms(
    int n, const std::vector<std::pair<double, PauliString>> &raw) {
  if (n < 1 || n > kMaxQubits) {
    throw std::invalid_argument("Hamiltonian: qubit count out of range");
  }
  // Merge duplicates in first-seen order.
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::size_t> seen;
  Hamiltonian h;
  h.n = n;
  for (const auto &[coeff, pauli] : raw) {
    if (pauli.num_qubits() != n) {
      throw std::invalid_argument("Hamiltonian: term size mismatch");
    }
    if (!std::isfinite(coeff)) {
      throw std::invalid_argument("Hamiltonian: coefficient must be finite");
    }
    const auto key = std::make_pair(pauli.x_mask(), pauli.z_mask());
    auto it = seen.find(key);
    if (it == seen.end()) {
      seen.emplace(key, h.terms.size());
      h.terms.emplace_back(coeff, pauli);
    } else {
      h.terms[it->second].first += coeff;
    }
  }
  std::erase_if(h.terms, [](const auto &term) {
    return std::abs(term.first) < kCoeffDropTolerance;
  });
  return h;
}

double Hamiltonian::coeff_l1() const {
  double total = 0.0;
  for (const auto &[coeff, pauli] : terms) total += std::abs(coeff);
  return total;
}

Hamiltonian build_tfim(int n, double h, Boundary boundary) {
  if (n < 2) throw std::invalid_argument("build_tfim: requires n >= 2");
  if (!std::isfinite(h)) throw std::invalid_argument("build_tfim: h not finite");
  std::vector<std::pair<double, PauliString>> terms;
  const int bonds = boundary == Boundary::Periodic ? n : n - 1;
  for (int i = 0; i < bonds; ++i) {
    std::string letters(static_cast<std::size_t>(n), 'I');
    letters[static_cast<std::size_t>(i)] = 'Z';
    letters[static_cast<std::size_t>((i + 1) % n)] = 'Z';
    terms.emplace_back(-1.0, PauliString::from_letters(letters));
  }
  for (int i = 0; i < n; ++i) {
    std::string letters(static_cast<std::size_t>(n), 'I');
    letters[static_cast<std::size_t>(i)] = 'X';
    terms.emplace_back(-h, PauliString::from_letters(letters));
  }
  return Hamiltonian::from_terms(n, terms);
}

StateVector apply_pauli(const PauliString &p, const StateVector &v) {
  if (p.num_qubits() != v.n) {
    throw std::invalid_argument("apply_pauli: size mismatch");
  }
  const std::uint64_t flip = p.x_mask();
  const std::uint64_t sign_mask = p.z_mask();
  const std::complex<double> y_phase = kIPowers[p.weight_y() & 3];
  StateVector out;
  out.n = v.n;
  out.amps.resize(v.dim());
  for (std::uint64_t s = 0; s < v.dim(); ++s) {
    const double sign = parity(s & sign_mask) ? -1.0 : 1.0;
    out.amps[s ^ flip] = y_phase * sign * v.amps[s];
  }
  return out;
}

std::complex<double> pauli_expectation(const PauliString &p,
                                       const StateVector &v) {
  if (p.num_qubits() != v.n) {
    throw std::invalid_argument("pauli_expectation: size mismatch");
  }
  const std::uint64_t flip = p.x_mask();
  const std::uint64_t sign_mask = p.z_mask();
  const std::complex<double> y_phase = kIPowers[p.weight_y() & 3];
  std::complex<double> acc{0.0, 0.0};
  for (std::uint64_t s = 0; s < v.dim(); ++s) {
    const double sign = parity(s & sign_mask) ? -1.0 : 1.0;
    acc += std::conj(v.amps[s ^ flip]) * (y_phase * sign * v.amps[s]);
  }
  return acc;
}

double exact_expectation(const Hamiltonian &h, const StateVector &v) {
  if (h.n != v.n) throw std::invalid_argument("exact_expectation: size mismatch");
  v.require_normalized();
  double total = 0.0;
  for (const auto &[coeff, pauli] : h.terms) {
    total += coeff * pauli_expectation(pauli, v).real();
  }
  return total;
}

StateVector apply_hamiltonian(const Hamiltonian &h, const StateVector &v) {
  if (h.n != v.n) throw std::invalid_argument("apply_hamiltonian: size mismatch");
  StateVector out;
  out.n = v.n;
  out.amps.assign(v.dim(), {0.0, 0.0});
  for (const auto &[coeff, pauli] : h.terms) {
    const std::uint64_t flip = pauli.x_mask();
    const std::uint64_t sign_mask = pauli.z_mask();
    const std::complex<double> scale =
        coeff * kIPowers[pauli.weight_y() & 3];
    for (std::uint64_t s = 0; s < v.dim(); ++s) {
      const double sign = parity(s & sign_mask) ? -1.0 : 1.0;
      out.amps[s ^ flip] += scale * sign * v.amps[s];
    }
  }
  return out;
}

}  // namespace qnhe
