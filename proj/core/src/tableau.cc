// Copyright 2026 The hexmon Authors
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

#include "hexmon/tableau.h"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hexmon {

namespace {

struct PivotInfo {
  std::size_t row_count = 0;
  std::vector<std::size_t> pivot_qubits;
};

bool pauli_bit(const PauliOperator& op, std::size_t q, bool z_part) {
  return z_part ? op.z_mask().get(q) : op.x_mask().get(q);
}

// Echelon over Pauli rows with phase tracking. When `reduced`, pivots are also
// cleared from rows above them.
PivotInfo echelon_paulis(std::vector<PauliOperator>& rows, std::span<const std::size_t> qubit_order, bool reduced) {
  PivotInfo info;
  std::size_t pivot_row = 0;
  for (const std::size_t q : qubit_order) {
    for (const bool z_part : {false, true}) {
      if (pivot_row == rows.size()) {
        return info;
      }
      std::size_t found = rows.size();
      for (std::size_t r = pivot_row; r < rows.size(); ++r) {
        if (pauli_bit(rows[r], q, z_part)) {
          found = r;
          break;
        }
      }
      if (found == rows.size()) {
        continue;
      }
      std::swap(rows[pivot_row], rows[found]);
      for (std::size_t r = reduced ? 0 : pivot_row + 1; r < rows.size(); ++r) {
        if (r != pivot_row && pauli_bit(rows[r], q, z_part)) {
          rows[r] = multiply_hermitian(rows[r], rows[pivot_row]);
        }
      }
      info.pivot_qubits.push_back(q);
      ++pivot_row;
      info.row_count = pivot_row;
    }
  }
  return info;
}

void require_qubit(std::size_t q, std::size_t n, const char* what) {
  if (q >= n) {
    throw std::out_of_range(std::string(what) + ": qubit " + std::to_string(q) + " out of range for " +
                            std::to_string(n) + " qubits");
  }
}

}  // namespace

std::vector<PauliOperator> canonicalize(std::vector<PauliOperator> rows, std::span<const std::size_t> qubit_order) {
  const PivotInfo info = echelon_paulis(rows, qubit_order, /*reduced=*/true);
  for (std::size_t r = info.row_count; r < rows.size(); ++r) {
    if (rows[r].negative() && rows[r].is_identity()) {
      throw std::invalid_argument("canonicalize: rows generate -I");
    }
  }
  rows.resize(info.row_count);
  return rows;
}

StabilizerState::StabilizerState(std::size_t num_qubits) : n_(num_qubits), stride_(words_for_bits(num_qubits)) {}

StabilizerState StabilizerState::computational_basis_state(std::size_t num_qubits) {
  if (num_qubits == 0) {
    throw std::invalid_argument("computational_basis_state: need at least one qubit");
  }
  StabilizerState state(num_qubits);
  state.gens_.assign(num_qubits * 2 * state.stride_, 0);
  state.signs_.assign(num_qubits, 0);
  for (std::size_t q = 0; q < num_qubits; ++q) {
    state.gen_z(q)[q / kWordBits] |= std::uint64_t{1} << (q % kWordBits);
  }
  return state;
}

StabilizerState StabilizerState::maximally_mixed(std::size_t num_qubits) {
  if (num_qubits == 0) {
    throw std::invalid_argument("maximally_mixed: need at least one qubit");
  }
  StabilizerState state(num_qubits);
  state.logicals_.assign(2 * num_qubits * 2 * state.stride_, 0);
  for (std::size_t q = 0; q < num_qubits; ++q) {
    const std::uint64_t bit = std::uint64_t{1} << (q % kWordBits);
    state.log_x(2 * q)[q / kWordBits] |= bit;
    state.log_z(2 * q + 1)[q / kWordBits] |= bit;
  }
  return state;
}

StabilizerState StabilizerState::from_generators(std::size_t num_qubits, std::span<const PauliOperator> generators) {
  StabilizerState state = maximally_mixed(num_qubits);
  Rng unused(0);
  for (const auto& g : generators) {
    if (g.num_qubits() != num_qubits) {
      throw DimensionError("from_generators: generator " + g.str() + " has wrong qubit count");
    }
    // Reject before mutating: an anticommuting pair cannot share an eigenstate.
    for (std::size_t r = 0; r < state.num_generators(); ++r) {
      if (anticommutes(g, state.generator(r))) {
        throw std::invalid_argument("from_generators: " + g.str() + " anticommutes with an earlier generator");
      }
    }
    try {
      state.measure(g, unused, {.forced = 1});
    } catch (const PostselectionError&) {
      throw std::invalid_argument("from_generators: " + g.str() + " contradicts the earlier generators");
    }
  }
  return state;
}

PauliOperator StabilizerState::generator(std::size_t i) const {
  if (i >= num_generators()) {
    throw std::out_of_range("generator index " + std::to_string(i) + " out of range");
  }
  PauliOperator op(n_);
  std::copy_n(gen_x(i), stride_, op.x_mask().words().begin());
  std::copy_n(gen_z(i), stride_, op.z_mask().words().begin());
  op.set_negative(signs_[i] != 0);
  return op;
}

std::vector<PauliOperator> StabilizerState::generators() const {
  std::vector<PauliOperator> out;
  out.reserve(num_generators());
  for (std::size_t i = 0; i < num_generators(); ++i) {
    out.push_back(generator(i));
  }
  return out;
}

BitMatrix StabilizerState::generator_matrix() const {
  BitMatrix m(num_generators(), 2 * n_);
  for (std::size_t r = 0; r < num_generators(); ++r) {
    for (std::size_t q = 0; q < n_; ++q) {
      const std::size_t w = q / kWordBits;
      const std::uint64_t bit = std::uint64_t{1} << (q % kWordBits);
      if (gen_x(r)[w] & bit) {
        m.set(r, q, true);
      }
      if (gen_z(r)[w] & bit) {
        m.set(r, n_ + q, true);
      }
    }
  }
  return m;
}

void StabilizerState::append_generator(const PauliOperator& op, bool negative) {
  gens_.insert(gens_.end(), op.x_mask().words().begin(), op.x_mask().words().end());
  gens_.insert(gens_.end(), op.z_mask().words().begin(), op.z_mask().words().end());
  signs_.push_back(negative ? 1 : 0);
}

void StabilizerState::overwrite_generator(std::size_t r, const PauliOperator& op, bool negative) {
  std::copy(op.x_mask().words().begin(), op.x_mask().words().end(), gen_x(r));
  std::copy(op.z_mask().words().begin(), op.z_mask().words().end(), gen_z(r));
  signs_[r] = negative ? 1 : 0;
}

void StabilizerState::remove_logical_pair(std::size_t pair) {
  const std::size_t row_words = 2 * stride_;
  const std::size_t last = num_logical_rows() / 2 - 1;
  if (pair != last) {
    std::copy_n(logicals_.data() + 2 * last * row_words, 2 * row_words, logicals_.data() + 2 * pair * row_words);
  }
  logicals_.resize(logicals_.size() - 2 * row_words);
}

int StabilizerState::resolve_in_group_sign(const PauliOperator& op) const {
  BitVector target(2 * n_);
  for (std::size_t w = 0; w < stride_; ++w) {
    target.words()[w] = op.x_mask().words()[w];
  }
  for (const std::size_t q : op.z_mask().ones()) {
    target.set(n_ + q, true);
  }
  const auto witness = in_span(generator_matrix(), target);
  if (!witness) {
    throw std::logic_error("measure: commuting operator " + op.str() + " is neither in the group nor independent");
  }
  PauliOperator product(n_);
  for (const std::size_t r : *witness) {
    product = multiply_hermitian(product, generator(r));
  }
  if (product.x_mask() != op.x_mask() || product.z_mask() != op.z_mask()) {
    throw std::logic_error("measure: span witness does not reproduce " + op.str());
  }
  return product.sign() * op.sign();
}

MeasurementResult StabilizerState::measure(const PauliOperator& op, Rng& rng, const MeasureOptions& options) {
  if (op.num_qubits() != n_) {
    throw DimensionError("measure: operator acts on " + std::to_string(op.num_qubits()) + " qubits, state has " +
                         std::to_string(n_));
  }
  if (options.forced && *options.forced != 1 && *options.forced != -1) {
    throw std::invalid_argument("measure: forced outcome must be +1 or -1");
  }
  const std::uint64_t* ox = op.x_mask().words().data();
  const std::uint64_t* oz = op.z_mask().words().data();
  support_words_.clear();
  for (std::size_t w = 0; w < stride_; ++w) {
    if (ox[w] | oz[w]) {
      support_words_.push_back(static_cast<std::uint32_t>(w));
    }
  }
  if (support_words_.empty()) {
    const int value = op.sign();
    if (options.forced && *options.forced != value) {
      throw PostselectionError("measure: identity operator cannot be postselected to " +
                               std::to_string(*options.forced));
    }
    return {value, true, MeasurementCase::kInGroup};
  }

  auto anticommutes_row = [&](const std::uint64_t* rx, const std::uint64_t* rz) {
    std::uint64_t acc = 0;
    for (const std::uint32_t w : support_words_) {
      acc ^= (rx[w] & oz[w]) ^ (rz[w] & ox[w]);
    }
    return (std::popcount(acc) & 1) != 0;
  };
  auto draw = [&]() -> int {
    if (options.forced) {
      return *options.forced;
    }
    return rng.next_bit() ? -1 : 1;
  };

  hits_.clear();
  const std::size_t k = num_generators();
  for (std::size_t r = 0; r < k; ++r) {
    if (anticommutes_row(gen_x(r), gen_z(r))) {
      hits_.push_back(static_cast<std::uint32_t>(r));
    }
  }

  if (!hits_.empty()) {
    const std::size_t g = hits_.front();
    for (std::size_t i = 1; i < hits_.size(); ++i) {
      const std::size_t h = hits_[i];
      const unsigned log_i = detail::mul_words_log_i(gen_x(h), gen_z(h), gen_x(g), gen_z(g), stride_);
      signs_[h] ^= signs_[g] ^ static_cast<std::uint8_t>(log_i >> 1);
    }
    const std::size_t logical_rows = num_logical_rows();
    for (std::size_t r = 0; r < logical_rows; ++r) {
      if (anticommutes_row(log_x(r), log_z(r))) {
        std::uint64_t* lx = log_x(r);
        std::uint64_t* lz = log_z(r);
        for (std::size_t w = 0; w < stride_; ++w) {
          lx[w] ^= gen_x(g)[w];
          lz[w] ^= gen_z(g)[w];
        }
      }
    }
    const int value = draw();
    overwrite_generator(g, op, (value < 0) != op.negative());
    return {value, false, MeasurementCase::kAnticommuting};
  }

  const std::size_t logical_rows = num_logical_rows();
  std::size_t anchor = logical_rows;
  for (std::size_t r = 0; r < logical_rows; ++r) {
    if (anticommutes_row(log_x(r), log_z(r))) {
      anchor = r;
      break;
    }
  }
  if (anchor != logical_rows) {
    const std::size_t anchor_pair = anchor / 2;
    for (std::size_t r = anchor + 1; r < logical_rows; ++r) {
      if (r / 2 == anchor_pair) {
        continue;
      }
      if (anticommutes_row(log_x(r), log_z(r))) {
        std::uint64_t* lx = log_x(r);
        std::uint64_t* lz = log_z(r);
        for (std::size_t w = 0; w < stride_; ++w) {
          lx[w] ^= log_x(anchor)[w];
          lz[w] ^= log_z(anchor)[w];
        }
      }
    }
    remove_logical_pair(anchor_pair);
    const int value = draw();
    append_generator(op, (value < 0) != op.negative());
    return {value, false, MeasurementCase::kIndependent};
  }

  if (!options.resolve_sign && !options.forced) {
    return {0, true, MeasurementCase::kInGroup};
  }
  const int value = resolve_in_group_sign(op);
  if (options.forced && *options.forced != value) {
    throw PostselectionError("measure: " + op.str() + " is deterministic with outcome " + std::to_string(value));
  }
  return {value, true, MeasurementCase::kInGroup};
}

template <typename RowFn>
void StabilizerState::for_each_row(RowFn&& fn) {
  for (std::size_t r = 0; r < num_generators(); ++r) {
    fn(gen_x(r), gen_z(r), &signs_[r]);
  }
  std::uint8_t discard = 0;
  for (std::size_t r = 0; r < num_logical_rows(); ++r) {
    fn(log_x(r), log_z(r), &discard);
  }
}

void StabilizerState::hadamard(std::size_t q) {
  require_qubit(q, n_, "hadamard");
  const std::size_t w = q / kWordBits;
  const unsigned s = q % kWordBits;
  for_each_row([&](std::uint64_t* x, std::uint64_t* z, std::uint8_t* sign) {
    const std::uint64_t xb = (x[w] >> s) & 1u;
    const std::uint64_t zb = (z[w] >> s) & 1u;
    *sign ^= static_cast<std::uint8_t>(xb & zb);
    x[w] = (x[w] & ~(std::uint64_t{1} << s)) | (zb << s);
    z[w] = (z[w] & ~(std::uint64_t{1} << s)) | (xb << s);
  });
}

void StabilizerState::phase(std::size_t q) {
  require_qubit(q, n_, "phase");
  const std::size_t w = q / kWordBits;
  const unsigned s = q % kWordBits;
  for_each_row([&](std::uint64_t* x, std::uint64_t* z, std::uint8_t* sign) {
    const std::uint64_t xb = (x[w] >> s) & 1u;
    const std::uint64_t zb = (z[w] >> s) & 1u;
    *sign ^= static_cast<std::uint8_t>(xb & zb);
    z[w] ^= xb << s;
  });
}

void StabilizerState::phase_dagger(std::size_t q) {
  phase(q);
  phase(q);
  phase(q);
}

void StabilizerState::cnot(std::size_t control, std::size_t target) {
  require_qubit(control, n_, "cnot");
  require_qubit(target, n_, "cnot");
  if (control == target) {
    throw std::invalid_argument("cnot: control and target coincide");
  }
  const std::size_t wc = control / kWordBits;
  const unsigned sc = control % kWordBits;
  const std::size_t wt = target / kWordBits;
  const unsigned st = target % kWordBits;
  for_each_row([&](std::uint64_t* x, std::uint64_t* z, std::uint8_t* sign) {
    const std::uint64_t xc = (x[wc] >> sc) & 1u;
    const std::uint64_t zc = (z[wc] >> sc) & 1u;
    const std::uint64_t xt = (x[wt] >> st) & 1u;
    const std::uint64_t zt = (z[wt] >> st) & 1u;
    *sign ^= static_cast<std::uint8_t>(xc & zt & (xt ^ zc ^ 1u));
    x[wt] ^= xc << st;
    z[wc] ^= zt << sc;
  });
}

void StabilizerState::pauli_x(std::size_t q) {
  require_qubit(q, n_, "pauli_x");
  const std::size_t w = q / kWordBits;
  const unsigned s = q % kWordBits;
  for_each_row([&](std::uint64_t*, std::uint64_t* z, std::uint8_t* sign) {
    *sign ^= static_cast<std::uint8_t>((z[w] >> s) & 1u);
  });
}

void StabilizerState::apply(const CliffordGate& gate) {
  switch (gate.kind) {
    case GateKind::kHadamard:
      hadamard(gate.a);
      break;
    case GateKind::kPhase:
      phase(gate.a);
      break;
    case GateKind::kCnot:
      cnot(gate.a, gate.b);
      break;
  }
}

std::size_t StabilizerState::subsystem_entropy_bits(const BitVector& region) const {
  if (!is_pure()) {
    throw UnsupportedStateError("subsystem_entropy_bits: state is mixed (" + std::to_string(entropy_bits()) +
                                " bits); use entropy_bits()");
  }
  if (region.size() != n_) {
    throw DimensionError("subsystem_entropy_bits: region has " + std::to_string(region.size()) +
                         " bits, state has " + std::to_string(n_) + " qubits");
  }
  // S_A = S_B for pure states; restrict to the smaller side.
  const BitVector side = region.popcount() * 2 <= n_ ? region : ~region;
  const std::vector<std::size_t> qubits = side.ones();
  const std::size_t m = qubits.size();
  if (m == 0) {
    return 0;
  }
  BitMatrix restricted(num_generators(), 2 * m);
  for (std::size_t r = 0; r < num_generators(); ++r) {
    const std::uint64_t* x = gen_x(r);
    const std::uint64_t* z = gen_z(r);
    std::uint64_t* out = restricted.row_words(r);
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t q = qubits[i];
      const std::size_t w = q / kWordBits;
      const unsigned s = q % kWordBits;
      out[i / kWordBits] |= ((x[w] >> s) & 1u) << (i % kWordBits);
      out[(m + i) / kWordBits] |= ((z[w] >> s) & 1u) << ((m + i) % kWordBits);
    }
  }
  return rank(std::move(restricted)) - m;
}

std::vector<std::size_t> StabilizerState::prefix_entropies_bits() const {
  if (!is_pure()) {
    throw UnsupportedStateError("prefix_entropies_bits: state is mixed");
  }
  BitMatrix m = generator_matrix();
  std::vector<std::size_t> order;
  order.reserve(2 * n_);
  for (std::size_t q = n_; q-- > 0;) {
    order.push_back(q);
    order.push_back(n_ + q);
  }
  const auto pivots = echelon_by_column_order(m, order);
  // Pivot rows are supported on qubits <= their pivot qubit, so the suffix
  // [x, n) has rank equal to the number of pivots at qubits >= x.
  std::vector<std::size_t> pivots_at(n_ + 1, 0);
  for (const std::size_t c : pivots) {
    ++pivots_at[c >= n_ ? c - n_ : c];
  }
  std::vector<std::size_t> out(n_ + 1, 0);
  std::size_t suffix_rank = 0;
  for (std::size_t x = n_; x-- > 0;) {
    suffix_rank += pivots_at[x];
    out[x] = suffix_rank - (n_ - x);
  }
  out[n_] = 0;
  return out;
}

std::vector<PauliOperator> StabilizerState::canonical_generators() const {
  std::vector<std::size_t> order(n_);
  std::iota(order.begin(), order.end(), std::size_t{0});
  return canonicalize(generators(), order);
}

std::vector<PauliOperator> StabilizerState::stabilizers_within(const BitVector& region) const {
  if (region.size() != n_) {
    throw DimensionError("stabilizers_within: region size mismatch");
  }
  std::vector<std::size_t> order;
  std::vector<bool> inside(n_, false);
  for (std::size_t q = 0; q < n_; ++q) {
    inside[q] = region.get(q);
    if (!inside[q]) {
      order.push_back(q);
    }
  }
  for (std::size_t q = 0; q < n_; ++q) {
    if (inside[q]) {
      order.push_back(q);
    }
  }
  std::vector<PauliOperator> rows = generators();
  const PivotInfo info = echelon_paulis(rows, order, /*reduced=*/false);
  std::vector<PauliOperator> kept;
  for (std::size_t r = 0; r < info.row_count; ++r) {
    if (inside[info.pivot_qubits[r]]) {
      kept.push_back(std::move(rows[r]));
    }
  }
  std::vector<std::size_t> natural(n_);
  std::iota(natural.begin(), natural.end(), std::size_t{0});
  return canonicalize(std::move(kept), natural);
}

std::optional<std::string> StabilizerState::check_invariants() const {
  const std::size_t k = num_generators();
  if (k > n_) {
    return "more generators than qubits";
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      if (detail::anticommute_words(gen_x(a), gen_z(a), gen_x(b), gen_z(b), stride_)) {
        return "generators " + std::to_string(a) + " and " + std::to_string(b) + " anticommute";
      }
    }
  }
  if (rank(generator_matrix()) != k) {
    return "generators are not independent";
  }
  const std::size_t rows = num_logical_rows();
  if (rows != 2 * (n_ - k)) {
    return "expected " + std::to_string(n_ - k) + " logical pairs, found " + std::to_string(rows / 2) + " rows";
  }
  const std::uint64_t* lg = logicals_.data();
  auto lx = [&](std::size_t r) { return lg + r * 2 * stride_; };
  auto lz = [&](std::size_t r) { return lg + r * 2 * stride_ + stride_; };
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t g = 0; g < k; ++g) {
      if (detail::anticommute_words(lx(r), lz(r), gen_x(g), gen_z(g), stride_)) {
        return "logical row " + std::to_string(r) + " anticommutes with generator " + std::to_string(g);
      }
    }
    for (std::size_t s = r + 1; s < rows; ++s) {
      const bool partner = (r / 2 == s / 2);
      if (detail::anticommute_words(lx(r), lz(r), lx(s), lz(s), stride_) != partner) {
        return "logical rows " + std::to_string(r) + " and " + std::to_string(s) + " break the pairing";
      }
    }
  }
  return std::nullopt;
}

std::string StabilizerState::dump() const {
  std::ostringstream out;
  for (std::size_t r = 0; r < num_generators(); ++r) {
    out << generator(r).str() << '\n';
  }
  return out.str();
}

}  // namespace hexmon
