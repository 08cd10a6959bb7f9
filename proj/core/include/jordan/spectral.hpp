#pragma once

#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "jordan/algebra.hpp"

namespace jordan {

// Jordan spectral decomposition x = sum_i lambda_i e_i with a complete
// system of orthogonal idempotents. Eigenvalues are ascending and distinct
// after cluster merging.
struct SpectralData {
  std::vector<double> eigenvalues;
  std::vector<Element> frame;

  Element reconstruct() const;
};

SpectralData spectral_decompose(const Element& x);

// Eigenvalues with multiplicity (one entry per primitive idempotent), ascending.
std::vector<double> eigenvalues(const Element& x);
double min_eigenvalue(const Element& x);
double max_eigenvalue(const Element& x);

enum class ScalarFunction { Sqrt, Log, Exp, Inv, ChiPlus, ChiMinus, Abs };

// f(x) = sum_i f(lambda_i) e_i. Throws DomainViolation naming the offending
// eigenvalue when it lies outside the domain of f.
Element apply_function(const Element& x, ScalarFunction f);
// Unchecked variant for arbitrary f.
Element map_spectrum(const Element& x, const std::function<double(double)>& f);

Element sqrt(const Element& x);
Element log(const Element& x);
Element exp(const Element& x);
Element abs(const Element& x);

// All dim eigenvalues of a (generally non-symmetric) operator, sorted by
// real part then imaginary part.
std::vector<std::complex<double>> operator_spectrum(const VOperator& t);

// Real parts of operator_spectrum; throws DomainViolation when some
// eigenvalue has |imag| above tol * max(1, |lambda|).
std::vector<double> real_operator_spectrum(const VOperator& t, double tol = 1e-7);

// (min sigma(L_x) - min sigma(x), max sigma(L_x) - max sigma(x)).
std::pair<double, double> hull_check(const Element& x);

// Matrix exponential (scaling and squaring with Pade approximants).
VOperator operator_exp(const VOperator& t);

// Merge a sorted list of reals into clusters closer than `tol`; returns the
// cluster means. Exposed for multiset comparisons in the verification suite.
std::vector<double> cluster_values(std::vector<double> values, double tol);

// Maximum pairwise gap between two multisets of equal size after sorting;
// +inf when the sizes differ.
double multiset_distance(std::vector<double> a, std::vector<double> b);

}  // namespace jordan
