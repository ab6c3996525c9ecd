#pragma once

#include <array>
#include <optional>

#include "hyperfan/classify.hpp"
#include "hyperfan/types.hpp"

namespace hyperfan {

struct MatrixIdentification {
  std::int64_t order;
  std::array<std::int64_t, 4> exponents;  // eigenvalues zeta^{a_i}, zeta = e^{2 pi i/order}
  HyperconifoldClass cls;
};

// Multiplicative order of M, or nullopt if it exceeds the bound.
std::optional<std::int64_t> matrix_order(const Mat4& m, std::int64_t bound);

// Identifies the hyperconifold class of a linearized group action: computes
// the order n, the eigenvalue exponents mod n (numerically, then re-verified
// exactly against the characteristic polynomial over Z[y]/Phi_n(y)), pairs
// them and reduces to normal form.
MatrixIdentification identify_from_matrix(const Mat4& m, std::int64_t order_bound = 1000);

// Integer matrix with spectrum {zeta^{w_i}}; only exists when the product of
// the linear factors has integer coefficients (Galois-closed exponent set).
std::optional<Mat4> companion_matrix(std::int64_t n, const std::array<std::int64_t, 4>& weights);

// Characteristic polynomial of M, lowest degree first (5 coefficients, monic).
std::array<Integer, 5> characteristic_polynomial(const Mat4& m);

// n-th cyclotomic polynomial, lowest degree first.
std::vector<Integer> cyclotomic_polynomial(std::int64_t n);

}  // namespace hyperfan
