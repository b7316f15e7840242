#pragma once

#include <array>
#include <string>
#include <vector>

#include "ruled/scalar.hpp"

namespace ruled {

using Vec3 = std::array<Scalar, 3>;
using Mat3 = std::array<Vec3, 3>;

Vec3 vec3(const Scalar& x, const Scalar& y, const Scalar& z);
Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a, const Vec3& b);
Vec3 operator*(const Scalar& c, const Vec3& v);
bool operator==(const Vec3& a, const Vec3& b);
Scalar dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
bool is_zero(const Vec3& v);

Mat3 mat3_identity();
Mat3 mat3_zero();
Mat3 operator*(const Mat3& a, const Mat3& b);
Vec3 operator*(const Mat3& a, const Vec3& v);
Mat3 operator*(const Scalar& c, const Mat3& a);
Mat3 operator+(const Mat3& a, const Mat3& b);
Mat3 operator-(const Mat3& a, const Mat3& b);
bool operator==(const Mat3& a, const Mat3& b);
Mat3 transpose(const Mat3& a);
Scalar det(const Mat3& a);
Scalar trace(const Mat3& a);
Mat3 inverse(const Mat3& a);  // throws std::invalid_argument when singular
bool is_orthogonal(const Mat3& a);

// Invertible affine map x -> A x + b.
struct AffineMap {
  Mat3 A = mat3_identity();
  Vec3 b = vec3(Scalar(0), Scalar(0), Scalar(0));
};

AffineMap compose(const AffineMap& f, const AffineMap& g);  // f after g
AffineMap affine_inverse(const AffineMap& f);
Vec3 map_point(const AffineMap& f, const Vec3& x);
bool operator==(const AffineMap& f, const AffineMap& g);

std::string vec3_str(const Vec3& v);
std::string mat3_str(const Mat3& a);

// Exact Gauss-Jordan over the coefficient field.
int rank_of(std::vector<std::vector<Scalar>> m);

struct LinearSolution {
  bool consistent = false;
  std::vector<Scalar> particular;  // free coordinates set to 0
  int rank = 0;
  std::vector<int> free_cols;
};

// Solves A x = rhs exactly; any solution set is reported through a particular
// solution plus the indices of free columns.
LinearSolution solve_linear(std::vector<std::vector<Scalar>> a,
                            std::vector<Scalar> rhs);

}  // namespace ruled
