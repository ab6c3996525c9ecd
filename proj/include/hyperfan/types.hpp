#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperfan {

// Exact scalars. All lattice and cone arithmetic runs on these; doubles
// appear only in the mirror module's Hessian evaluation.
using Integer  = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using Vec2 = Eigen::Matrix<Integer, 2, 1>;
using Vec3 = Eigen::Matrix<Integer, 3, 1>;
using Mat2 = Eigen::Matrix<Integer, 2, 2>;
using Mat3 = Eigen::Matrix<Integer, 3, 3>;
using Mat4 = Eigen::Matrix<Integer, 4, 4>;

using RatVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

// CLI exit-code contract: 2 invalid input, 3 resource bound, 4 domain precondition.
struct InvalidInputError : std::runtime_error {
  explicit InvalidInputError(const std::string& msg) : std::runtime_error(msg) {}
};
struct ResourceBoundError : std::runtime_error {
  explicit ResourceBoundError(const std::string& msg) : std::runtime_error(msg) {}
};
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

template <typename V>
struct LexLess {
  bool operator()(const V& a, const V& b) const {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
};
using Vec2Less = LexLess<Vec2>;
using Vec3Less = LexLess<Vec3>;

inline bool vec_eq(const Vec2& a, const Vec2& b) { return a[0] == b[0] && a[1] == b[1]; }
inline bool vec_eq(const Vec3& a, const Vec3& b) {
  return a[0] == b[0] && a[1] == b[1] && a[2] == b[2];
}

inline std::int64_t to_int64(const Integer& x) {
  if (x > std::numeric_limits<std::int64_t>::max() ||
      x < std::numeric_limits<std::int64_t>::min()) {
    throw InvalidInputError("integer out of 64-bit range: " + x.str());
  }
  return static_cast<std::int64_t>(x);
}

// a mod n in [0, n)
inline std::int64_t mod_pos(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b);

// Inverse of k modulo n; requires gcd(k, n) = 1.
std::int64_t mod_inverse(std::int64_t k, std::int64_t n);

}  // namespace hyperfan
