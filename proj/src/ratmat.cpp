#include "wrzero/ratmat.hpp"

#include <stdexcept>

namespace wrzero {

std::vector<Eigen::Index> reduced_row_echelon(RatMatrix& m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    // First nonzero entry at or below the current row.
    Eigen::Index pivot = -1;
    for (Eigen::Index r = row; r < rows; ++r) {
      if (m(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    const Rational inv = Rational(1) / m(row, col);
    m.row(row) *= inv;
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == row || m(r, col) == 0) continue;
      m.row(r) -= m(r, col) * m.row(row);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

Eigen::Index rank(const RatMatrix& m) {
  RatMatrix work = m;
  return static_cast<Eigen::Index>(reduced_row_echelon(work).size());
}

RatVector primitive_integer(const RatVector& v) {
  Integer lcm_den = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    lcm_den = lcm(lcm_den, v(i).get_den());
  }
  RatVector scaled = v * Rational(lcm_den);
  Integer gcd_num = 0;
  for (Eigen::Index i = 0; i < scaled.size(); ++i) {
    gcd_num = gcd(gcd_num, scaled(i).get_num());
  }
  if (gcd_num == 0) return scaled;  // zero vector
  scaled /= Rational(gcd_num);
  for (Eigen::Index i = 0; i < scaled.size(); ++i) {
    if (scaled(i) != 0) {
      if (scaled(i) < 0) scaled = -scaled;
      break;
    }
  }
  return scaled;
}

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  RatMatrix r = m;
  const std::vector<Eigen::Index> pivots = reduced_row_echelon(r);
  const Eigen::Index cols = m.cols();

  std::vector<bool> is_pivot(cols, false);
  for (Eigen::Index c : pivots) is_pivot[c] = true;

  std::vector<RatVector> basis;
  for (Eigen::Index free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    RatVector v = RatVector::Zero(cols);
    v(free_col) = 1;
    for (size_t k = 0; k < pivots.size(); ++k) {
      v(pivots[k]) = -r(static_cast<Eigen::Index>(k), free_col);
    }
    basis.push_back(primitive_integer(v));
  }
  return basis;
}

std::optional<LinearSolution> solve_exact(const RatMatrix& m, const RatVector& b) {
  if (m.rows() != b.size()) throw std::invalid_argument("solve_exact: dimension mismatch");
  RatMatrix aug(m.rows(), m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = b;
  const std::vector<Eigen::Index> pivots = reduced_row_echelon(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;  // 0 = 1 row

  LinearSolution sol;
  sol.particular = RatVector::Zero(m.cols());
  for (size_t k = 0; k < pivots.size(); ++k) {
    sol.particular(pivots[k]) = aug(static_cast<Eigen::Index>(k), m.cols());
  }
  sol.kernel = kernel_basis(m);
  return sol;
}

bool ratvec_lex_less(const RatVector& a, const RatVector& b) {
  const Eigen::Index size = std::min(a.size(), b.size());
  for (Eigen::Index i = 0; i < size; ++i) {
    if (a(i) != b(i)) return a(i) < b(i);
  }
  return a.size() < b.size();
}

RatMatrix to_rational(const Eigen::MatrixXi& m) {
  RatMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

RatVector to_rational(const Eigen::VectorXi& v) {
  RatVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = v(i);
  return out;
}

Eigen::MatrixXd to_double(const RatMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_d();
  return out;
}

Eigen::VectorXd to_double(const RatVector& v) {
  Eigen::VectorXd out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = v(i).get_d();
  return out;
}

}  // namespace wrzero
