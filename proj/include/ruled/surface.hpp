#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "ruled/linalg.hpp"
#include "ruled/poly.hpp"

namespace ruled {

struct invalid_surface : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Rational ruled surface x(t,s) = p(t) + s q(t) in standard form: the
// direction vector q is polynomial with coprime components and the joint
// coefficient content removed.
struct RuledSurface {
  std::array<RatFunc, 3> p;
  std::array<UniPoly, 3> q;
  int n = 0;  // max component degree of q
  bool normalized = false;
  std::string name;

  Vec3 point_at(const Scalar& t, const Scalar& s) const;
  Vec3 direction_at(const Scalar& t) const;
};

// Input form before standardization; the direction may still be rational.
struct RawSurface {
  std::array<RatFunc, 3> p;
  std::array<RatFunc, 3> q;
  std::string name;
};

// Rescales the direction vector by a rational function so its components
// become coprime polynomials, e.g. (t/(t^2+1), t^3/(t^2+1), 1/(t^2+1))
// becomes (t, t^3, 1) and (2t^2+2t, 4t, 2t) becomes (t+1, 2, 1).
// Throws invalid_surface when q vanishes identically.
RuledSurface normalize(const RawSurface& s);
RuledSurface normalize(const RuledSurface& s);

// Coefficient vectors v_j of q(t) = sum_j v_j t^j and their exact rank.
struct DirectionProfile {
  std::vector<Vec3> v;  // v_0 .. v_n
  int r = 0;            // rank of the span, 1 <= r <= 3
};
DirectionProfile direction_profile(const RuledSurface& s);

struct SurfaceClass {
  enum class Tag { General, PlanarDirections, Cylindrical, Conical };
  Tag tag = Tag::General;
  Vec3 vertex = {Scalar(0), Scalar(0), Scalar(0)};  // set when Conical
};

// Cylindrical when all rulings are parallel (direction rank 1); Conical when
// some point p0 lies on every ruling, i.e. (p(t) - p0) x q(t) == 0; otherwise
// General or PlanarDirections according to the direction rank.
SurfaceClass classify(const RuledSurface& s);

// Image surface (A p + b, A q), restandardized. Throws std::invalid_argument
// when A is singular.
RuledSurface apply_affine(const RuledSurface& s, const AffineMap& f);

// Largest sqrt discriminant appearing in the coefficients (0 when rational).
long surface_field_d(const RuledSurface& s);

// Shared coefficient field of a pair; throws field_mismatch when the two
// surfaces carry different nonzero discriminants.
long common_field_d(const RuledSurface& a, const RuledSurface& b);

std::string surface_str(const RuledSurface& s);
std::string class_str(const SurfaceClass& c);

}  // namespace ruled
