#include "ruled/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace ruled {

Vec3 vec3(const Scalar& x, const Scalar& y, const Scalar& z) { return {x, y, z}; }

Vec3 operator+(const Vec3& a, const Vec3& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

Vec3 operator-(const Vec3& a, const Vec3& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

Vec3 operator*(const Scalar& c, const Vec3& v) {
  return {c * v[0], c * v[1], c * v[2]};
}

bool operator==(const Vec3& a, const Vec3& b) {
  return a[0] == b[0] && a[1] == b[1] && a[2] == b[2];
}

Scalar dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

bool is_zero(const Vec3& v) {
  return v[0] == Scalar(0) && v[1] == Scalar(0) && v[2] == Scalar(0);
}

Mat3 mat3_identity() {
  Mat3 m = mat3_zero();
  m[0][0] = m[1][1] = m[2][2] = Scalar(1);
  return m;
}

Mat3 mat3_zero() {
  Vec3 z = {Scalar(0), Scalar(0), Scalar(0)};
  return {z, z, z};
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 r = mat3_zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r[i][j] = r[i][j] + a[i][k] * b[k][j];
  return r;
}

Vec3 operator*(const Mat3& a, const Vec3& v) {
  return {dot(a[0], v), dot(a[1], v), dot(a[2], v)};
}

Mat3 operator*(const Scalar& c, const Mat3& a) {
  Mat3 r;
  for (int i = 0; i < 3; ++i) r[i] = c * a[i];
  return r;
}

Mat3 operator+(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i) r[i] = a[i] + b[i];
  return r;
}

Mat3 operator-(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i) r[i] = a[i] - b[i];
  return r;
}

bool operator==(const Mat3& a, const Mat3& b) {
  return a[0] == b[0] && a[1] == b[1] && a[2] == b[2];
}

Mat3 transpose(const Mat3& a) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = a[j][i];
  return r;
}

Scalar det(const Mat3& a) { return dot(a[0], cross(a[1], a[2])); }

Scalar trace(const Mat3& a) { return a[0][0] + a[1][1] + a[2][2]; }

Mat3 inverse(const Mat3& a) {
  Scalar d = det(a);
  if (d == Scalar(0)) throw std::invalid_argument("matrix is singular");
  Mat3 t = transpose(a);
  Mat3 adj;
  adj[0] = cross(t[1], t[2]);
  adj[1] = cross(t[2], t[0]);
  adj[2] = cross(t[0], t[1]);
  Scalar inv = Scalar(1) / d;
  return inv * transpose(adj);
}

bool is_orthogonal(const Mat3& a) {
  return transpose(a) * a == mat3_identity();
}

AffineMap compose(const AffineMap& f, const AffineMap& g) {
  return AffineMap{f.A * g.A, f.A * g.b + f.b};
}

AffineMap affine_inverse(const AffineMap& f) {
  Mat3 inv = inverse(f.A);
  return AffineMap{inv, Scalar(-1) * (inv * f.b)};
}

Vec3 map_point(const AffineMap& f, const Vec3& x) { return f.A * x + f.b; }

bool operator==(const AffineMap& f, const AffineMap& g) {
  return f.A == g.A && f.b == g.b;
}

std::string vec3_str(const Vec3& v) {
  return "(" + v[0].str() + ", " + v[1].str() + ", " + v[2].str() + ")";
}

std::string mat3_str(const Mat3& a) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < 3; ++i) {
    os << "[" << a[i][0].str() << ", " << a[i][1].str() << ", "
       << a[i][2].str() << "]";
    if (i < 2) os << ", ";
  }
  os << "]";
  return os.str();
}

namespace {

// Row echelon over the field; returns rank and records pivot columns.
int echelon(std::vector<std::vector<Scalar>>& m, std::vector<int>& pivots) {
  if (m.empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t sel = r;
    while (sel < rows && m[sel][c] == Scalar(0)) ++sel;
    if (sel == rows) continue;
    std::swap(m[r], m[sel]);
    Scalar inv = Scalar(1) / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == Scalar(0)) continue;
      Scalar f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace

int rank_of(std::vector<std::vector<Scalar>> m) {
  std::vector<int> pivots;
  return echelon(m, pivots);
}

LinearSolution solve_linear(std::vector<std::vector<Scalar>> a,
                            std::vector<Scalar> rhs) {
  LinearSolution out;
  if (a.size() != rhs.size()) throw std::invalid_argument("shape mismatch");
  size_t rows = a.size();
  size_t cols = rows ? a[0].size() : 0;
  if (rows == 0) {
    out.consistent = true;
    return out;
  }
  for (size_t i = 0; i < rows; ++i) a[i].push_back(rhs[i]);
  std::vector<int> pivots;
  int r = echelon(a, pivots);
  out.rank = r;
  // A pivot in the appended column marks an inconsistent row.
  for (int p : pivots) {
    if (p == static_cast<int>(cols)) return out;
  }
  out.consistent = true;
  out.particular.assign(cols, Scalar(0));
  for (size_t i = 0; i < pivots.size(); ++i)
    out.particular[pivots[i]] = a[i][cols];
  size_t next = 0;
  for (size_t c = 0; c < cols; ++c) {
    if (next < pivots.size() && pivots[next] == static_cast<int>(c)) {
      ++next;
    } else {
      out.free_cols.push_back(static_cast<int>(c));
    }
  }
  out.rank = static_cast<int>(pivots.size());
  return out;
}

}  // namespace ruled
