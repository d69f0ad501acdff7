// Copyright 2026 The raagscan Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact reduced simplicial homology over Z.
//
// Boundary maps are dense Eigen matrices over an exact integer scalar
// (arbitrary precision by default), reduced to Smith normal form by
// unimodular row and column operations.

#ifndef RAAG_HOMOLOGY_HPP_
#define RAAG_HOMOLOGY_HPP_

#include <utility>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include "raag/complex.hpp"

namespace raag {

using BigInt = boost::multiprecision::cpp_int;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntegerMatrix = MatrixX<BigInt>;

/// U * M * V == D with D = diag(diagonal, 0, ...), d_1 | d_2 | ... | d_r,
/// and U, V unimodular. U and V are empty when transforms were not asked for.
template <typename Scalar>
struct SmithForm {
  std::vector<Scalar> diagonal;
  Eigen::Index rank = 0;
  MatrixX<Scalar> U;
  MatrixX<Scalar> V;
};

namespace detail {

template <typename Scalar>
Scalar abs_value(const Scalar& x) {
  return x < 0 ? Scalar(-x) : x;
}

template <typename Scalar>
void swap_rows(MatrixX<Scalar>& m, Eigen::Index a, Eigen::Index b) {
  if (a != b) m.row(a).swap(m.row(b));
}

template <typename Scalar>
void swap_cols(MatrixX<Scalar>& m, Eigen::Index a, Eigen::Index b) {
  if (a != b) m.col(a).swap(m.col(b));
}

// row[target] -= q * row[source]
template <typename Scalar>
void row_axpy(MatrixX<Scalar>& m, Eigen::Index target, Eigen::Index source, const Scalar& q) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    if (m(source, j) != 0) m(target, j) -= q * m(source, j);
  }
}

template <typename Scalar>
void col_axpy(MatrixX<Scalar>& m, Eigen::Index target, Eigen::Index source, const Scalar& q) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (m(i, source) != 0) m(i, target) -= q * m(i, source);
  }
}

}  // namespace detail

/// Smith normal form. Pivots on the entry of least absolute value,
/// leftmost then uppermost on ties. With transforms, the witnesses satisfy
/// U * M * V == D exactly.
template <typename Scalar>
SmithForm<Scalar> smith_normal_form(MatrixX<Scalar> m, bool with_transforms = true) {
  using Eigen::Index;
  const Index rows = m.rows();
  const Index cols = m.cols();
  SmithForm<Scalar> out;
  MatrixX<Scalar> u, v;
  if (with_transforms) {
    u = MatrixX<Scalar>::Identity(rows, rows);
    v = MatrixX<Scalar>::Identity(cols, cols);
  }
  auto swap_r = [&](Index a, Index b) {
    detail::swap_rows(m, a, b);
    if (with_transforms) detail::swap_rows(u, a, b);
  };
  auto swap_c = [&](Index a, Index b) {
    detail::swap_cols(m, a, b);
    if (with_transforms) detail::swap_cols(v, a, b);
  };
  auto axpy_r = [&](Index target, Index source, const Scalar& q) {
    detail::row_axpy(m, target, source, q);
    if (with_transforms) detail::row_axpy(u, target, source, q);
  };
  auto axpy_c = [&](Index target, Index source, const Scalar& q) {
    detail::col_axpy(m, target, source, q);
    if (with_transforms) detail::col_axpy(v, target, source, q);
  };

  for (Index t = 0; t < std::min(rows, cols); ++t) {
    Index pr = -1, pc = -1;
    Scalar best = 0;
    for (Index j = t; j < cols; ++j) {
      for (Index i = t; i < rows; ++i) {
        if (m(i, j) == 0) continue;
        const Scalar a = detail::abs_value(m(i, j));
        if (pr < 0 || a < best) {
          best = a;
          pr = i;
          pc = j;
        }
      }
    }
    if (pr < 0) break;
    swap_r(t, pr);
    swap_c(t, pc);
    for (;;) {
      bool clean = true;
      for (Index i = t + 1; i < rows; ++i) {
        if (m(i, t) == 0) continue;
        const Scalar q = m(i, t) / m(t, t);
        axpy_r(i, t, q);
        if (m(i, t) != 0) clean = false;
      }
      for (Index j = t + 1; j < cols; ++j) {
        if (m(t, j) == 0) continue;
        const Scalar q = m(t, j) / m(t, t);
        axpy_c(j, t, q);
        if (m(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot survived; move it to (t, t).
        Index bi = t, bj = t;
        Scalar b = detail::abs_value(m(t, t));
        for (Index i = t + 1; i < rows; ++i) {
          if (m(i, t) != 0 && detail::abs_value(m(i, t)) < b) {
            b = detail::abs_value(m(i, t));
            bi = i;
            bj = t;
          }
        }
        for (Index j = t + 1; j < cols; ++j) {
          if (m(t, j) != 0 && detail::abs_value(m(t, j)) < b) {
            b = detail::abs_value(m(t, j));
            bi = t;
            bj = j;
          }
        }
        swap_r(t, bi);
        swap_c(t, bj);
        continue;
      }
      Index bad = -1;
      for (Index i = t + 1; i < rows && bad < 0; ++i) {
        for (Index j = t + 1; j < cols; ++j) {
          if (m(i, j) % m(t, t) != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad < 0) break;
      axpy_r(t, bad, Scalar(-1));
    }
    if (m(t, t) < 0) {
      for (Index j = 0; j < cols; ++j) m(t, j) = -m(t, j);
      if (with_transforms) {
        for (Index j = 0; j < rows; ++j) u(t, j) = -u(t, j);
      }
    }
    out.diagonal.push_back(m(t, t));
  }
  out.rank = static_cast<Index>(out.diagonal.size());
  out.U = std::move(u);
  out.V = std::move(v);
  return out;
}

/// Reduced homology in one degree: Z^free_rank ⊕ ⊕ Z/t.
struct HomologyGroup {
  int free_rank = 0;
  std::vector<BigInt> torsion;

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// Reduced homology in degrees -1 .. dim; other degrees are zero.
struct HomologyProfile {
  std::vector<HomologyGroup> groups;  // groups[k + 1] is degree k

  int top_degree() const { return static_cast<int>(groups.size()) - 2; }
  /// Zero group for degrees outside the stored range.
  HomologyGroup degree(int k) const;
  friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

/// Signed incidence matrix of the k-th boundary map, rows indexed by the
/// (k-1)-faces and columns by the k-faces in lexicographic order, entry
/// (-1)^i for deleting the i-th vertex. For k = 0 this is the augmentation
/// row of ones. Throws Error unless 0 <= k <= dim.
template <typename Scalar = BigInt>
MatrixX<Scalar> boundary_matrix(const SimplicialComplex& complex, int k) {
  if (k < 0 || k > complex.dimension()) throw Error("boundary_matrix: degree out of range");
  const auto& rows = complex.faces(k - 1);
  const auto& cols = complex.faces(k);
  MatrixX<Scalar> m = MatrixX<Scalar>::Zero(static_cast<Eigen::Index>(rows.size()),
                                            static_cast<Eigen::Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const Simplex& face = cols[j];
    for (std::size_t i = 0; i < face.size(); ++i) {
      Simplex facet;
      facet.reserve(face.size() - 1);
      for (std::size_t l = 0; l < face.size(); ++l) {
        if (l != i) facet.push_back(face[l]);
      }
      const auto it = std::lower_bound(rows.begin(), rows.end(), facet);
      m(it - rows.begin(), static_cast<Eigen::Index>(j)) = (i % 2 == 0) ? Scalar(1) : Scalar(-1);
    }
  }
  return m;
}

HomologyProfile reduced_homology(const SimplicialComplex& complex);

/// True iff every group is free and all of them vanish outside degree n.
bool concentrated_free_in_degree(const HomologyProfile& h, int n);

}  // namespace raag

#endif  // RAAG_HOMOLOGY_HPP_
