#include "wrzero/cone.hpp"

#include <algorithm>
#include <stdexcept>

namespace wrzero {

namespace {

// Rank of the rows of `rows` restricted to the columns NOT listed in
// `dropped` (which is sorted ascending).
Eigen::Index restricted_rank(const std::vector<RatVector>& rows, const std::vector<int>& dropped,
                             int m) {
  if (rows.empty()) return 0;
  std::vector<int> keep;
  keep.reserve(m - dropped.size());
  size_t d = 0;
  for (int c = 0; c < m; ++c) {
    if (d < dropped.size() && dropped[d] == c) {
      ++d;
    } else {
      keep.push_back(c);
    }
  }
  RatMatrix sub(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(keep.size()));
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < keep.size(); ++c)
      sub(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r](keep[c]);
  return rank(sub);
}

// Two rays of the cone {v >= 0 : rows . v = 0} span a common 2-face iff the
// constraints active at both (all equality rows plus the orthant facets on
// their common zero set) leave exactly two degrees of freedom.
bool adjacent(const RatVector& p, const RatVector& q, const std::vector<RatVector>& rows, int m) {
  std::vector<int> common_zeros;
  for (int i = 0; i < m; ++i) {
    if (p(i) == 0 && q(i) == 0) common_zeros.push_back(i);
  }
  const Eigen::Index needed = m - 2 - static_cast<Eigen::Index>(common_zeros.size());
  if (needed < 0) return false;
  if (static_cast<Eigen::Index>(rows.size()) < needed) return false;  // rank bound
  return restricted_rank(rows, common_zeros, m) == needed;
}

}  // namespace

ConeRays extreme_rays(const RatMatrix& w) {
  const int m = static_cast<int>(w.cols());
  ConeRays result;
  result.m = m;
  if (m == 0) return result;

  // Row-space basis of w, primitive, inserted largest leading entry first.
  RatMatrix reduced = w;
  const size_t rank_w = reduced_row_echelon(reduced).size();
  std::vector<RatVector> constraints;
  for (size_t r = 0; r < rank_w; ++r) {
    constraints.push_back(primitive_integer(reduced.row(static_cast<Eigen::Index>(r)).transpose()));
  }
  std::stable_sort(constraints.begin(), constraints.end(),
                   [](const RatVector& a, const RatVector& b) {
                     for (Eigen::Index i = 0; i < a.size(); ++i) {
                       if (a(i) != 0) {
                         for (Eigen::Index j = 0; j < b.size(); ++j) {
                           if (b(j) != 0) return abs(a(i)) > abs(b(j));
                         }
                         return true;
                       }
                     }
                     return false;
                   });

  // Double description: start from the orthant's rays and cut with one
  // equality constraint at a time.
  std::vector<RatVector> rays;
  for (int i = 0; i < m; ++i) {
    RatVector e = RatVector::Zero(m);
    e(i) = 1;
    rays.push_back(std::move(e));
  }

  std::vector<RatVector> processed;
  for (const RatVector& a : constraints) {
    std::vector<Rational> value(rays.size());
    std::vector<size_t> positive, zero, negative;
    for (size_t i = 0; i < rays.size(); ++i) {
      value[i] = a.dot(rays[i]);
      if (value[i] > 0) {
        positive.push_back(i);
      } else if (value[i] < 0) {
        negative.push_back(i);
      } else {
        zero.push_back(i);
      }
    }

    std::vector<RatVector> next;
    for (size_t i : zero) next.push_back(std::move(rays[i]));
    for (size_t p : positive) {
      for (size_t q : negative) {
        if (!adjacent(rays[p], rays[q], processed, m)) continue;
        RatVector combined = value[p] * rays[q] - value[q] * rays[p];
        next.push_back(primitive_integer(combined));
      }
    }
    rays = std::move(next);
    processed.push_back(a);
  }

  std::sort(rays.begin(), rays.end(), ratvec_lex_less);
  result.rays = std::move(rays);
  return result;
}

std::vector<int> support(const RatVector& v) {
  std::vector<int> indices;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) != 0) indices.push_back(static_cast<int>(i));
  }
  return indices;
}

std::optional<ComponentPartition> supports_partition(const ConeRays& rays) {
  std::vector<bool> covered(rays.m, false);
  ComponentPartition blocks;
  for (const RatVector& ray : rays.rays) {
    std::vector<int> s = support(ray);
    for (int i : s) {
      if (covered[i]) return std::nullopt;  // overlapping supports
      covered[i] = true;
    }
    blocks.push_back(std::move(s));
  }
  for (bool c : covered) {
    if (!c) return std::nullopt;  // some source in no support
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
  return blocks;
}

bool is_consistent(const RatMatrix& w) {
  const ConeRays rays = extreme_rays(w);
  std::vector<bool> covered(rays.m, false);
  for (const RatVector& ray : rays.rays) {
    for (int i : support(ray)) covered[i] = true;
  }
  return std::all_of(covered.begin(), covered.end(), [](bool c) { return c; });
}

}  // namespace wrzero
