#ifndef CERING_LINALG_HPP
#define CERING_LINALG_HPP

#include <optional>
#include <vector>

#include "cering/field.hpp"

namespace cering {

using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>;  // row-major

Vec zero_vec(const FieldSpec& f, size_t n);
bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Vec& v, const Scalar& c);

Mat identity_mat(const FieldSpec& f, size_t n);
Vec mat_vec(const Mat& m, const Vec& v);
Mat mat_mul(const Mat& a, const Mat& b);
Scalar mat_trace(const Mat& m);

/// In-place reduced row echelon form: pivots scaled to 1, entries above
/// and below pivots cleared, zero rows dropped, pivot columns strictly
/// increasing. Returns the pivot columns.
std::vector<size_t> rref(Mat& rows);

/// Reduces v against echelon rows (pivot list as returned by rref);
/// the residual is zero iff v lies in the row space.
Vec reduce_row(const Mat& rows, const std::vector<size_t>& pivots, Vec v);

/// Echelon basis of {x : M x = 0} (unknowns indexed by columns).
Mat kernel(Mat m, const FieldSpec& f, size_t ncols);

/// Coefficients c with sum_j c[j] * cols[j] = target, if any.
std::optional<Vec> solve_columns(const std::vector<Vec>& cols, const Vec& target,
                                 const FieldSpec& f);

/// Characteristic polynomial det(tI - M) by the Samuelson-Berkowitz
/// scheme (division-free, any field). Coefficients low to high, size
/// n+1, leading coefficient 1.
std::vector<Scalar> charpoly(const Mat& m, const FieldSpec& f);

}  // namespace cering

#endif
