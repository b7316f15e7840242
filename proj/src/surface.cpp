#include "ruled/surface.hpp"

#include <sstream>

namespace ruled {

namespace {

// Joint rescale of a polynomial triple: coefficients become primitive
// integers collectively, first nonzero coefficient positive.
void scale_primitive_joint(std::array<UniPoly, 3>& q) {
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& comp : q) {
    for (const auto& c : comp.coeffs()) {
      for (const mpq_class* part : {&c.rat_part(), &c.quad_part()}) {
        if (*part == 0) continue;
        mpz_class num = part->get_num();
        mpz_abs(num.get_mpz_t(), num.get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), num.get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                part->get_den().get_mpz_t());
      }
    }
  }
  if (num_gcd == 0) return;
  Scalar f(mpq_class(den_lcm, num_gcd));
  for (auto& comp : q) comp *= f;
  for (const auto& comp : q) {
    for (const auto& c : comp.coeffs()) {
      if (c.is_zero()) continue;
      if (c.sign() < 0)
        for (auto& cc : q) cc *= Scalar(-1);
      return;
    }
  }
}

UniPoly poly_lcm(const UniPoly& a, const UniPoly& b) {
  UniPoly g = gcd(a, b);
  return monic(exact_div(a * b, g));
}

std::array<UniPoly, 3> cross_poly(const std::array<UniPoly, 3>& a,
                                  const std::array<UniPoly, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

void note_field(const Scalar& c, long& d_seen) {
  if (c.field_d() == 0) return;
  if (d_seen == 0)
    d_seen = c.field_d();
  else if (d_seen != c.field_d())
    throw field_mismatch(d_seen, c.field_d());
}

}  // namespace

Vec3 RuledSurface::point_at(const Scalar& t, const Scalar& s) const {
  Vec3 r;
  for (int i = 0; i < 3; ++i) r[i] = p[i].eval(t) + s * q[i].eval(t);
  return r;
}

Vec3 RuledSurface::direction_at(const Scalar& t) const {
  return {q[0].eval(t), q[1].eval(t), q[2].eval(t)};
}

RuledSurface normalize(const RawSurface& s) {
  if (s.q[0].is_zero() && s.q[1].is_zero() && s.q[2].is_zero())
    throw invalid_surface("direction vector is identically zero");
  UniPoly mu1 = poly_lcm(poly_lcm(s.q[0].den(), s.q[1].den()), s.q[2].den());
  std::array<UniPoly, 3> q;
  for (int i = 0; i < 3; ++i)
    q[i] = s.q[i].num() * exact_div(mu1, s.q[i].den());
  UniPoly g = gcd_all({q[0], q[1], q[2]});
  if (g.deg() >= 1)
    for (auto& comp : q) comp = exact_div(comp, g);
  scale_primitive_joint(q);
  RuledSurface out;
  out.p = s.p;
  out.q = q;
  out.n = std::max({q[0].deg(), q[1].deg(), q[2].deg()});
  out.normalized = true;
  out.name = s.name;
  return out;
}

RuledSurface normalize(const RuledSurface& s) {
  RawSurface raw;
  raw.p = s.p;
  for (int i = 0; i < 3; ++i) raw.q[i] = RatFunc(s.q[i], UniPoly(Scalar(1)));
  raw.name = s.name;
  return normalize(raw);
}

DirectionProfile direction_profile(const RuledSurface& s) {
  DirectionProfile out;
  std::vector<std::vector<Scalar>> rows;
  for (int j = 0; j <= s.n; ++j) {
    Vec3 v = {s.q[0].coeff(j), s.q[1].coeff(j), s.q[2].coeff(j)};
    out.v.push_back(v);
    rows.push_back({v[0], v[1], v[2]});
  }
  out.r = rank_of(rows);
  return out;
}

SurfaceClass classify(const RuledSurface& s) {
  SurfaceClass out;
  DirectionProfile prof = direction_profile(s);
  if (prof.r == 1) {
    out.tag = SurfaceClass::Tag::Cylindrical;
    return out;
  }
  // Vertex search: (p(t) - p0) x q(t) == 0, linear in p0 after clearing the
  // denominators of p.
  UniPoly den =
      poly_lcm(poly_lcm(s.p[0].den(), s.p[1].den()), s.p[2].den());
  std::array<UniPoly, 3> num;
  for (int i = 0; i < 3; ++i)
    num[i] = s.p[i].num() * exact_div(den, s.p[i].den());
  std::array<UniPoly, 3> lhs = cross_poly(num, s.q);
  std::array<UniPoly, 3> dq;
  for (int i = 0; i < 3; ++i) dq[i] = den * s.q[i];
  int top = 0;
  for (int i = 0; i < 3; ++i) top = std::max({top, lhs[i].deg(), dq[i].deg()});
  std::vector<std::vector<Scalar>> rows;
  std::vector<Scalar> rhs;
  for (int l = 0; l <= top; ++l) {
    rows.push_back({Scalar(0), dq[2].coeff(l), -dq[1].coeff(l)});
    rhs.push_back(lhs[0].coeff(l));
    rows.push_back({-dq[2].coeff(l), Scalar(0), dq[0].coeff(l)});
    rhs.push_back(lhs[1].coeff(l));
    rows.push_back({dq[1].coeff(l), -dq[0].coeff(l), Scalar(0)});
    rhs.push_back(lhs[2].coeff(l));
  }
  LinearSolution sol = solve_linear(rows, rhs);
  if (sol.consistent) {
    out.tag = SurfaceClass::Tag::Conical;
    out.vertex = {sol.particular[0], sol.particular[1], sol.particular[2]};
    return out;
  }
  out.tag = prof.r == 3 ? SurfaceClass::Tag::General
                        : SurfaceClass::Tag::PlanarDirections;
  return out;
}

RuledSurface apply_affine(const RuledSurface& s, const AffineMap& f) {
  if (det(f.A) == Scalar(0))
    throw std::invalid_argument("affine map is singular");
  RuledSurface out;
  for (int i = 0; i < 3; ++i) {
    RatFunc acc(f.b[i]);
    UniPoly qa;
    for (int j = 0; j < 3; ++j) {
      acc = acc + RatFunc(f.A[i][j]) * s.p[j];
      qa += s.q[j] * f.A[i][j];
    }
    out.p[i] = acc;
    out.q[i] = qa;
  }
  out.name = s.name;
  return normalize(out);
}

long surface_field_d(const RuledSurface& s) {
  long d_seen = 0;
  for (int i = 0; i < 3; ++i) {
    for (const auto& c : s.q[i].coeffs()) note_field(c, d_seen);
    for (const auto& c : s.p[i].num().coeffs()) note_field(c, d_seen);
    for (const auto& c : s.p[i].den().coeffs()) note_field(c, d_seen);
  }
  return d_seen;
}

long common_field_d(const RuledSurface& a, const RuledSurface& b) {
  long d1 = surface_field_d(a), d2 = surface_field_d(b);
  if (d1 != 0 && d2 != 0 && d1 != d2) throw field_mismatch(d1, d2);
  return d1 != 0 ? d1 : d2;
}

std::string surface_str(const RuledSurface& s) {
  std::ostringstream os;
  if (!s.name.empty()) os << s.name << ": ";
  os << "p = (" << s.p[0].str() << ", " << s.p[1].str() << ", "
     << s.p[2].str() << "), q = (" << poly_str(s.q[0]) << ", "
     << poly_str(s.q[1]) << ", " << poly_str(s.q[2]) << ")";
  return os.str();
}

std::string class_str(const SurfaceClass& c) {
  switch (c.tag) {
    case SurfaceClass::Tag::General:
      return "general";
    case SurfaceClass::Tag::PlanarDirections:
      return "planar-directions";
    case SurfaceClass::Tag::Cylindrical:
      return "cylindrical";
    case SurfaceClass::Tag::Conical:
      return "conical (vertex " + vec3_str(c.vertex) + ")";
  }
  return "";
}

}  // namespace ruled
