#pragma once

// Exact linear algebra over the rationals: reduced row echelon form and the
// kernel / rank / solve routines built on top of it.  Everything here is
// deterministic: pivoting always takes the first nonzero candidate, free
// variables are enumerated in increasing column order, and reported basis
// vectors are rescaled to primitive integer form (coprime integer entries,
// first nonzero entry positive).

#include <Eigen/Core>

#include <optional>
#include <vector>

#include "wrzero/rational.hpp"

namespace wrzero {

using RatMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

// In-place Gauss-Jordan reduction; returns the pivot column of each pivot row.
std::vector<Eigen::Index> reduced_row_echelon(RatMatrix& m);

Eigen::Index rank(const RatMatrix& m);

// Basis of {v : m v = 0}, one vector per free column in increasing column
// order, each in primitive integer form.  Empty when the kernel is trivial.
std::vector<RatVector> kernel_basis(const RatMatrix& m);

struct LinearSolution {
  RatVector particular;           // free variables set to zero
  std::vector<RatVector> kernel;  // kernel_basis of the coefficient matrix
};

// Exact solve of m x = b; std::nullopt when the system is inconsistent.
std::optional<LinearSolution> solve_exact(const RatMatrix& m, const RatVector& b);

// Scales v so its entries are coprime integers with a positive leading
// nonzero entry.  The zero vector is returned unchanged.
RatVector primitive_integer(const RatVector& v);

// Strict componentwise lexicographic order (first entry most significant).
bool ratvec_lex_less(const RatVector& a, const RatVector& b);

RatMatrix to_rational(const Eigen::MatrixXi& m);
RatVector to_rational(const Eigen::VectorXi& v);
Eigen::MatrixXd to_double(const RatMatrix& m);
Eigen::VectorXd to_double(const RatVector& v);

}  // namespace wrzero
