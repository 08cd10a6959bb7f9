#pragma once

// Seeded random generators for elements, automorphisms and derivations.
// Everything is driven by one std::mt19937_64, so a (seed, call sequence)
// pair reproduces the same draws on a given standard library.

#include <Eigen/Dense>

#include <cstdint>
#include <random>

#include "jordan/algebra.hpp"

namespace jordan {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double normal();
  double uniform(double lo, double hi);
  int uniform_int(int lo, int hi);  // inclusive
  bool coin();

  // Independent standard normal coordinates, times `scale`.
  Element element(const Algebra& a, double scale = 1.0);
  // x^2 + 0.1 * 1 for a random x.
  Element cone_element(const Algebra& a);
  // One of the 2^m central projections, uniformly.
  Element central_projection(const Algebra& a);

  // Haar-distributed orthogonal / unitary matrices (QR with sign fix).
  Eigen::MatrixXd orthogonal(int n);
  Eigen::MatrixXcd unitary(int n);
  Eigen::MatrixXcd complex_gaussian(int n);
  // Random skew-Hermitian matrix with entries of size ~scale.
  Eigen::MatrixXcd skew_hermitian(int n, double scale = 1.0);

  // Random automorphism: orthogonal/unitary congruence per matrix block
  // (HermComplex blocks are composed with the transpose map half of the
  // time), an orthogonal rotation of u on spin blocks.
  VOperator automorphism(const Algebra& a);
  // Automorphism in the identity component of each block.
  VOperator inner_automorphism(const Algebra& a);
  // Random derivation: commutator with a skew matrix per matrix block,
  // (s,u) -> (0, K u) with K skew on spin blocks.
  VOperator derivation(const Algebra& a, double scale = 1.0);

  std::mt19937_64& engine() { return rng_; }

 private:
  VOperator block_automorphism(const Algebra& a, bool allow_antiunitary);
  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace jordan
