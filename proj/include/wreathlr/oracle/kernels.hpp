#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "wreathlr/oracle/group.hpp"

namespace wreathlr::oracle {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// Per-element loops of the oracle. `serial` is the reference; `omp`
/// splits the outer loop across OpenMP threads and must agree with it.
namespace kernels {

namespace serial {

/// Trace of every image.
std::vector<Complex> traces(std::span<const Matrix> images);

/// (1/n) sum_g a(g) conj(b(g)).
Complex inner_product(std::span<const Complex> a, std::span<const Complex> b);

/// Character of Ind_H^G from a class function of H:
/// (1/|H|) sum_{x in G} chi(x^-1 g x), with chi zero off H.
std::vector<Complex> induced_character(const Embedding& emb, std::span<const Complex> chi);

/// max entrywise |rho(ab) - rho(a) rho(b)| over all pairs (a, b).
double homomorphism_defect(const GroupData& g, std::span<const Matrix> images);

/// max |chi(x g x^-1) - chi(g)| over all pairs (x, g).
double class_function_defect(const GroupData& g, std::span<const Complex> values);

} // namespace serial

namespace omp {

std::vector<Complex> traces(std::span<const Matrix> images);
Complex inner_product(std::span<const Complex> a, std::span<const Complex> b);
std::vector<Complex> induced_character(const Embedding& emb, std::span<const Complex> chi);
double homomorphism_defect(const GroupData& g, std::span<const Matrix> images);
double class_function_defect(const GroupData& g, std::span<const Complex> values);

} // namespace omp

} // namespace kernels
} // namespace wreathlr::oracle
