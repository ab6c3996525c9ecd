#pragma once

#include <complex>
#include <vector>

#include "hyperfan/classify.hpp"

namespace hyperfan {

struct LaurentTerm {
  Integer coeff;
  std::int64_t ex, ey;
};

// Local mirror of C_{n,k}: F = uv - f with
// f = 1 + x + x^k y^n + x^{k+1} y^n = (1 + x)(1 + x^k y^n).
struct MirrorGeometry {
  std::int64_t n, k;
  std::vector<LaurentTerm> f;  // exponent-sorted
};

// One node of {F = 0}: u = v = 0, x = -1, y an n-th root of (-1)^{k+1}.
// The y-coordinate is kept exactly as a rational multiple of a full turn.
struct NodeCertificate {
  std::int64_t root_index;       // j in y_j = exp(i pi (k+1+2j)/n)
  Rational y_turns;              // y = exp(2 pi i * y_turns), in [0,1)
  std::complex<double> y;
  std::complex<double> hessian_det;
  bool nondegenerate;            // |hessian_det| > 1e-9 after normalization
  bool exact_residuals;          // f1 = f2 = 0 verified by phase arithmetic
};

MirrorGeometry mirror_polynomial(const HyperconifoldClass& c);

// Exactly n certificates; also re-checks symbolically that f1 = df1 = 0 and
// f2 = df2 = 0 have no torus solutions, so the nodes found are all of them.
std::vector<NodeCertificate> mirror_nodes(const MirrorGeometry& g);

// Numeric oracle: multi-start Newton iteration on f_x = f_y = 0 over (C*)^2,
// clustered; cross-validates the certificate count.
std::vector<std::array<std::complex<double>, 2>> independent_node_search(
    const MirrorGeometry& g, int grid);

std::complex<double> evaluate_laurent(const std::vector<LaurentTerm>& f,
                                      const std::complex<double>& x,
                                      const std::complex<double>& y,
                                      int dx = 0, int dy = 0);

}  // namespace hyperfan
