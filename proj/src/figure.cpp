#include "trigproof/figure.hpp"

#include <cmath>

namespace trigproof {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kEdgeMargin = 0.01;  // rad, kept away from open endpoints
}  // namespace

Point perpendicular_foot(const Point& p, const Point& a, const Point& b) {
  Point u = b - a;
  double uu = u.squaredNorm();
  if (uu == 0.0) throw Error("perpendicular_foot: degenerate line (a == b)");
  double t = (p - a).dot(u) / uu;
  return a + t * u;
}

Point bisector_point(const Point& apex, const Point& p, const Point& q,
                     const Point& seg_a, const Point& seg_b) {
  Point dp = p - apex;
  Point dq = q - apex;
  double np = dp.norm();
  double nq = dq.norm();
  if (np == 0.0 || nq == 0.0)
    throw Error("bisector_point: degenerate angle rays");
  Point dir = dp / np + dq / nq;
  if (dir.norm() < 1e-14)
    throw Error("bisector_point: straight angle has no internal bisector");
  // apex + t*dir = seg_a + s*(seg_b - seg_a)
  Eigen::Matrix2d m;
  m.col(0) = dir;
  m.col(1) = seg_a - seg_b;
  if (std::abs(m.determinant()) < 1e-14)
    throw Error("bisector_point: bisector is parallel to the segment");
  Eigen::Vector2d ts = m.colPivHouseholderQr().solve(seg_a - apex);
  double t = ts[0];
  double s = ts[1];
  if (t < 0.0 || s < -1e-12 || s > 1.0 + 1e-12)
    throw Error("bisector_point: no intersection within the segment");
  return apex + t * dir;
}

double angle_at(const Point& a, const Point& b, const Point& c) {
  Point u = a - b;
  Point v = c - b;
  double cross = u.x() * v.y() - u.y() * v.x();
  double dot = u.dot(v);
  return std::abs(std::atan2(cross, dot));
}

const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids{"fig1", "fig2", "fig3", "fig4",
                                            "fig5", "fig6", "fig7", "fig8"};
  return ids;
}

std::vector<std::string> figure_param_names(const std::string& id) {
  if (id == "fig4" || id == "fig5" || id == "fig7") return {"alpha", "beta"};
  if (id == "fig6") return {"alpha"};
  if (id == "fig1" || id == "fig2" || id == "fig3" || id == "fig8")
    return {"theta"};
  throw UnknownQuantity(id);
}

namespace {

double need(const std::map<std::string, double>& params,
            const std::string& name) {
  auto it = params.find(name);
  if (it == params.end()) throw DomainViolation(name + " missing");
  return it->second;
}

double dist(const Figure& f, const std::string& a, const std::string& b) {
  return (f.points.at(a) - f.points.at(b)).norm();
}

// Isosceles triangle ABD with AB = AD = 1, apex angle 2*theta at A; C is the
// foot of the perpendicular from B to AD, E the bisector intersection on BC.
Figure build_fig1(double theta) {
  if (!(theta > 0.0)) throw DomainViolation("theta > 0");
  if (!(theta < kPi / 4)) throw DomainViolation("theta < pi/4");
  Figure f;
  f.id = "fig1";
  f.params["theta"] = theta;
  Point a(0.0, 0.0);
  Point d(1.0, 0.0);
  Point b(std::cos(2 * theta), std::sin(2 * theta));
  Point c = perpendicular_foot(b, a, d);
  Point e = bisector_point(a, b, d, b, c);
  f.points = {{"A", a}, {"B", b}, {"C", c}, {"D", d}, {"E", e}};
  auto& q = f.quantities;
  q["AB"] = dist(f, "A", "B");
  q["AD"] = dist(f, "A", "D");
  q["CA"] = dist(f, "C", "A");
  q["BC"] = dist(f, "B", "C");
  q["CD"] = dist(f, "C", "D");
  q["EC"] = dist(f, "E", "C");
  q["EB"] = dist(f, "E", "B");
  q["BD"] = dist(f, "B", "D");
  q["angle_BAD"] = angle_at(b, a, d);
  q["angle_ABD"] = angle_at(a, b, d);
  q["angle_ADB"] = angle_at(a, d, b);
  q["angle_DBC"] = angle_at(d, b, c);
  q["tan_theta"] = q["CD"] / q["BC"];
  q["tan_theta_via_CD_over_BC"] = q["CD"] / q["BC"];
  q["tan_2theta"] = q["BC"] / q["CA"];
  q["sin_2theta"] = q["BC"] / q["AB"];
  q["cos_2theta"] = q["CA"] / q["AB"];
  q["sin_theta"] = q["CD"] / q["BD"];  // right triangle DBC, hypotenuse BD
  q["cos_theta"] = q["BC"] / q["BD"];
  q["sin_3theta"] = std::sin(3 * theta);
  return f;
}

// Right triangle ABC, right angle at C, BC = 1, angle CBA = 2*theta; D is the
// bisector intersection on AC, E the foot of the perpendicular from D to AB.
Figure build_fig2(double theta) {
  if (!(theta > 0.0)) throw DomainViolation("theta > 0");
  if (!(theta < kPi / 4)) throw DomainViolation("theta < pi/4");
  Figure f;
  f.id = "fig2";
  f.params["theta"] = theta;
  Point b(0.0, 0.0);
  Point c(1.0, 0.0);
  Point a(1.0, std::tan(2 * theta));
  Point d = bisector_point(b, c, a, a, c);
  Point e = perpendicular_foot(d, a, b);
  f.points = {{"A", a}, {"B", b}, {"C", c}, {"D", d}, {"E", e}};
  auto& q = f.quantities;
  q["BC"] = dist(f, "B", "C");
  q["CD"] = dist(f, "C", "D");
  q["ED"] = dist(f, "E", "D");
  q["BE"] = dist(f, "B", "E");
  q["AD"] = dist(f, "A", "D");
  q["AB"] = dist(f, "A", "B");
  q["AC"] = dist(f, "A", "C");
  q["AE"] = dist(f, "A", "E");
  q["tan_theta"] = q["CD"] / q["BC"];
  q["tan_2theta"] = q["AC"] / q["BC"];
  q["sin_2theta"] = q["AC"] / q["AB"];
  q["cos_2theta"] = q["BC"] / q["AB"];
  return f;
}

// Right triangle ABC, right angle at C, angle BAC = theta; D on AC with
// AD = BD = 1, E the foot of the perpendicular from D to AB.
Figure build_fig3(double theta) {
  if (!(theta > 0.0)) throw DomainViolation("theta > 0");
  if (!(theta < kPi / 4)) throw DomainViolation("theta < pi/4");
  Figure f;
  f.id = "fig3";
  f.params["theta"] = theta;
  Point a(0.0, 0.0);
  Point d(1.0, 0.0);
  Point c(1.0 + std::cos(2 * theta), 0.0);
  Point b(1.0 + std::cos(2 * theta), std::sin(2 * theta));
  Point e = perpendicular_foot(d, a, b);
  f.points = {{"A", a}, {"B", b}, {"C", c}, {"D", d}, {"E", e}};
  auto& q = f.quantities;
  q["AB"] = dist(f, "A", "B");
  q["BC"] = dist(f, "B", "C");
  q["AC"] = dist(f, "A", "C");
  q["AD"] = dist(f, "A", "D");
  q["BD"] = dist(f, "B", "D");
  q["CD"] = dist(f, "C", "D");
  q["AE"] = dist(f, "A", "E");
  q["DE"] = dist(f, "D", "E");
  q["angle_ABD"] = angle_at(a, b, d);
  q["sin_theta"] = q["BC"] / q["AB"];
  q["cos_theta"] = q["AE"] / q["AD"];
  q["sin_2theta"] = q["BC"] / q["BD"];
  q["cos_2theta"] = q["CD"] / q["BD"];
  return f;
}

// Triangle ABD with foot C of the perpendicular from B on AD; BC = 1,
// angle ABC = alpha, angle DBC = beta. fig4 puts A and D on opposite sides
// of C (addition); fig5 puts D between A and C (subtraction, beta < alpha).
Figure build_fig45(const std::string& id, double alpha, double beta) {
  if (!(alpha > 0.0)) throw DomainViolation("alpha > 0");
  if (!(beta > 0.0)) throw DomainViolation("beta > 0");
  if (!(alpha < kPi / 2)) throw DomainViolation("alpha < pi/2");
  if (!(beta < kPi / 2)) throw DomainViolation("beta < pi/2");
  const bool subtract = id == "fig5";
  if (subtract && !(beta < alpha)) throw DomainViolation("beta < alpha");
  Figure f;
  f.id = id;
  f.params["alpha"] = alpha;
  f.params["beta"] = beta;
  Point c(0.0, 0.0);
  Point b(0.0, 1.0);
  Point a(-std::tan(alpha), 0.0);
  Point d(subtract ? -std::tan(beta) : std::tan(beta), 0.0);
  f.points = {{"A", a}, {"B", b}, {"C", c}, {"D", d}};
  auto& q = f.quantities;
  q["BC"] = dist(f, "B", "C");
  q["AC"] = dist(f, "A", "C");
  q["AB"] = dist(f, "A", "B");
  q["CD"] = dist(f, "C", "D");
  q["BD"] = dist(f, "B", "D");
  q["AD"] = dist(f, "A", "D");
  q["angle_ABD"] = angle_at(a, b, d);
  q["angle_ADB"] = angle_at(a, d, b);
  q["angle_DAB"] = angle_at(d, a, b);
  q["sin_alpha"] = std::sin(alpha);
  q["cos_alpha"] = std::cos(alpha);
  q["tan_alpha"] = std::tan(alpha);
  q["sin_beta"] = std::sin(beta);
  q["cos_beta"] = std::cos(beta);
  q["tan_beta"] = std::tan(beta);
  if (subtract) {
    q["sin_alpha_minus_beta"] = std::sin(alpha - beta);
    q["cos_alpha_minus_beta"] = std::cos(alpha - beta);
  } else {
    q["sin_alpha_plus_beta"] = std::sin(alpha + beta);
    q["cos_alpha_plus_beta"] = std::cos(alpha + beta);
  }
  return f;
}

// Right triangle ABD, right angle at A; C is the foot of the perpendicular
// from A onto BD, angle ABC = alpha, BC = 1.
Figure build_fig6(double alpha) {
  if (!(alpha > 0.0)) throw DomainViolation("alpha > 0");
  if (!(alpha < kPi / 2)) throw DomainViolation("alpha < pi/2");
  Figure f;
  f.id = "fig6";
  f.params["alpha"] = alpha;
  double ta = std::tan(alpha);
  Point b(0.0, 0.0);
  Point c(1.0, 0.0);
  Point a(1.0, ta);
  Point d(1.0 + ta * ta, 0.0);
  f.points = {{"A", a}, {"B", b}, {"C", c}, {"D", d}};
  auto& q = f.quantities;
  q["BC"] = dist(f, "B", "C");
  q["AC"] = dist(f, "A", "C");
  q["AB"] = dist(f, "A", "B");
  q["CD"] = dist(f, "C", "D");
  q["BD"] = dist(f, "B", "D");
  q["AD"] = dist(f, "A", "D");
  q["angle_BAD"] = angle_at(b, a, d);
  q["cos_alpha"] = std::cos(alpha);
  q["tan_alpha"] = std::tan(alpha);
  return f;
}

// Cyclic quadrilateral ABCD in the circle of radius 1/2 centered at the
// origin, AC the horizontal unit diameter; angle BAC = alpha above, angle
// DAC = beta below.
Figure build_fig7(double alpha, double beta) {
  if (!(alpha > 0.0)) throw DomainViolation("alpha > 0");
  if (!(beta > 0.0)) throw DomainViolation("beta > 0");
  if (!(alpha < kPi / 2)) throw DomainViolation("alpha < pi/2");
  if (!(beta < kPi / 2)) throw DomainViolation("beta < pi/2");
  Figure f;
  f.id = "fig7";
  f.params["alpha"] = alpha;
  f.params["beta"] = beta;
  double ca = std::cos(alpha);
  double sa = std::sin(alpha);
  double cb = std::cos(beta);
  double sb = std::sin(beta);
  Point a(-0.5, 0.0);
  Point c(0.5, 0.0);
  Point b(-0.5 + ca * ca, ca * sa);
  Point d(-0.5 + cb * cb, -cb * sb);
  f.points = {{"A", a}, {"B", b}, {"C", c}, {"D", d}};
  auto& q = f.quantities;
  q["AC"] = dist(f, "A", "C");
  q["AB"] = dist(f, "A", "B");
  q["BC"] = dist(f, "B", "C");
  q["AD"] = dist(f, "A", "D");
  q["DC"] = dist(f, "D", "C");
  q["BD"] = dist(f, "B", "D");
  q["angle_ABC"] = angle_at(a, b, c);
  q["angle_ADC"] = angle_at(a, d, c);
  q["angle_BAD"] = angle_at(b, a, d);
  q["angle_BCD"] = angle_at(b, c, d);
  q["sin_alpha"] = sa;
  q["cos_alpha"] = ca;
  q["sin_beta"] = sb;
  q["cos_beta"] = cb;
  q["sin_alpha_plus_beta"] = std::sin(alpha + beta);
  q["sin_angle_BCD"] = std::sin(q["angle_BCD"]);
  // Quadrilateral area split along diagonal AC, and split along diagonal BD
  // into triangles ABD and CBD with their measured vertex angles.
  double area1 = 0.5 * q["AB"] * q["BC"] + 0.5 * q["AD"] * q["DC"];
  double area2 = 0.5 * q["AB"] * q["AD"] * std::sin(q["angle_BAD"]) +
                 0.5 * q["BC"] * q["DC"] * q["sin_angle_BCD"];
  q["area_q1"] = area1;
  q["area_q2"] = area2;
  q["area_two_ways_diff"] = area1 - area2;
  // Residual of the key displayed relation, with measured side lengths in
  // the sine/cosine roles.
  q["eq5_residual"] =
      q["BC"] * q["AB"] * (q["AD"] * q["AD"] + q["DC"] * q["DC"] - 1.0) +
      q["DC"] * q["AD"] * (q["AB"] * q["AB"] + q["BC"] * q["BC"] - 1.0);
  return f;
}

// fig3's triangle with theta < pi/6, plus F on segment DC placed so that
// triangle BDF has angles theta at B and 2*theta at D. The printed figure is
// unavailable; this reconstruction reproduces every stated angle and length
// and is cross-checked by the law of sines in triangle BDF.
Figure build_fig8(double theta) {
  if (!(theta > 0.0)) throw DomainViolation("theta > 0");
  if (!(theta < kPi / 6)) throw DomainViolation("theta < pi/6");
  Figure f = build_fig3(theta);
  f.id = "fig8";
  f.flags.push_back("reconstructed-configuration");
  double s3 = std::sin(3 * theta);
  Point d = f.points.at("D");
  Point fpt(d.x() + std::sin(theta) / s3, 0.0);
  f.points["F"] = fpt;
  auto& q = f.quantities;
  const Point& b = f.points.at("B");
  const Point& c = f.points.at("C");
  q["BF"] = (b - fpt).norm();
  q["DF"] = (d - fpt).norm();
  q["CF"] = (c - fpt).norm();
  q["angle_BFC"] = angle_at(b, fpt, c);
  q["angle_DBF"] = angle_at(d, b, fpt);
  q["angle_BDF"] = angle_at(b, d, fpt);
  q["sin_3theta"] = s3;
  q["sin_angle_BFD"] = std::sin(angle_at(b, fpt, d));
  q["tan_theta"] = std::tan(theta);
  q["triple_angle_residual"] = std::sin(3 * theta) + std::sin(theta) -
                               2.0 * std::cos(theta) * std::sin(2 * theta);
  return f;
}

}  // namespace

Figure construct_figure(const std::string& id,
                        const std::map<std::string, double>& params) {
  if (id == "fig1") return build_fig1(need(params, "theta"));
  if (id == "fig2") return build_fig2(need(params, "theta"));
  if (id == "fig3") return build_fig3(need(params, "theta"));
  if (id == "fig4")
    return build_fig45("fig4", need(params, "alpha"), need(params, "beta"));
  if (id == "fig5")
    return build_fig45("fig5", need(params, "alpha"), need(params, "beta"));
  if (id == "fig6") return build_fig6(need(params, "alpha"));
  if (id == "fig7")
    return build_fig7(need(params, "alpha"), need(params, "beta"));
  if (id == "fig8") return build_fig8(need(params, "theta"));
  throw UnknownQuantity(id);
}

double measure(const Figure& fig, const std::string& quantity) {
  auto it = fig.quantities.find(quantity);
  if (it == fig.quantities.end()) throw UnknownQuantity(quantity);
  return it->second;
}

namespace {

void add_check(ResidualReport& r, const std::string& name,
               const std::string& expr, double expected, double measured) {
  ResidualCheck c{name, expr, expected, measured,
                  std::abs(measured - expected)};
  r.max_residual = std::max(r.max_residual, c.residual);
  r.checks.push_back(std::move(c));
}

}  // namespace

ResidualReport check_figure(const Figure& fig, double tol) {
  (void)tol;
  ResidualReport r;
  r.figure_id = fig.id;
  r.params = fig.params;
  r.flags = fig.flags;
  const auto& q = fig.quantities;
  auto g = [&](const char* n) { return q.at(n); };

  if (fig.id == "fig1") {
    double th = fig.params.at("theta");
    add_check(r, "AB_eq_AD", "AB - AD", g("AB"), g("AD"));
    add_check(r, "angle_DBC", "theta", th, g("angle_DBC"));
    add_check(r, "CD_eq_AB_minus_AC", "AB - AC", g("AB") - g("CA"), g("CD"));
    add_check(r, "tan_BAD", "BC/CA", std::tan(g("angle_BAD")),
              g("BC") / g("CA"));
    add_check(r, "angle_ABD", "pi/2 - theta", kPi / 2 - th, g("angle_ABD"));
    add_check(r, "tan_DBC", "tan(theta)", std::tan(th),
              g("tan_theta_via_CD_over_BC"));
    add_check(r, "bisector_ratio", "EC*(AC+AB) = BC*AC", g("BC") * g("CA"),
              g("EC") * (g("CA") + g("AB")));
  } else if (fig.id == "fig2") {
    double th = fig.params.at("theta");
    add_check(r, "BC_unit", "1", 1.0, g("BC"));
    add_check(r, "BE_eq_BC", "BC", g("BC"), g("BE"));
    add_check(r, "CD_tan_theta", "tan(theta)", std::tan(th), g("CD"));
    add_check(r, "ED_eq_CD", "CD", g("CD"), g("ED"));
    add_check(r, "AD_eq_AB_tan_theta", "AB*tan(theta)", g("AB") * std::tan(th),
              g("AD"));
    add_check(r, "AC_len_eq6", "(AB+1)*tan(theta)",
              (g("AB") + 1.0) * std::tan(th), g("AC"));
    add_check(r, "AE_eq_AB_minus_1", "AB - 1", g("AB") - 1.0, g("AE"));
    add_check(r, "AE_len_eq7", "tan(2theta)*tan(theta)",
              std::tan(2 * th) * std::tan(th), g("AE"));
  } else if (fig.id == "fig3") {
    double th = fig.params.at("theta");
    add_check(r, "AB_2cos", "2cos(theta)", 2 * std::cos(th), g("AB"));
    add_check(r, "BC_sin2", "sin(2theta)", std::sin(2 * th), g("BC"));
    add_check(r, "AC_1_plus_cos2", "1 + cos(2theta)", 1 + std::cos(2 * th),
              g("AC"));
    add_check(r, "AD_eq_BD", "AD", g("AD"), g("BD"));
    add_check(r, "AE_half_AB", "AB/2", g("AB") / 2, g("AE"));
    add_check(r, "angle_ABD", "theta", th, g("angle_ABD"));
  } else if (fig.id == "fig4" || fig.id == "fig5") {
    double al = fig.params.at("alpha");
    double be = fig.params.at("beta");
    bool addf = fig.id == "fig4";
    double gamma = addf ? al + be : al - be;
    const char* gname = addf ? "sin_alpha_plus_beta" : "sin_alpha_minus_beta";
    const char* cname = addf ? "cos_alpha_plus_beta" : "cos_alpha_minus_beta";
    add_check(r, "AD_tan_sum", addf ? "tan(a)+tan(b)" : "tan(a)-tan(b)",
              addf ? std::tan(al) + std::tan(be) : std::tan(al) - std::tan(be),
              g("AD"));
    add_check(r, "angle_ABD", "alpha +/- beta", gamma, g("angle_ABD"));
    add_check(r, "los_AD_AB", "AD/sin(gamma) = AB/cos(beta)",
              g("AB") / std::cos(be), g("AD") / q.at(gname));
    add_check(r, "los_AD_BD", "AD/sin(gamma) = BD/cos(alpha)",
              g("BD") / std::cos(al), g("AD") / q.at(gname));
    double loc = (g("AB") * g("AB") + g("BD") * g("BD") - g("AD") * g("AD")) /
                 (2 * g("AB") * g("BD"));
    add_check(r, "loc_cos_gamma", "(AB^2+BD^2-AD^2)/(2 AB BD)", q.at(cname),
              loc);
  } else if (fig.id == "fig6") {
    double al = fig.params.at("alpha");
    double ta = std::tan(al);
    add_check(r, "CD_tan2", "tan(alpha)^2", ta * ta, g("CD"));
    add_check(r, "BD_1_plus_tan2", "1 + tan(alpha)^2", 1 + ta * ta, g("BD"));
    add_check(r, "sec_identity", "cos(a)*BD*cos(a) = 1", 1.0,
              std::cos(al) * g("BD") * std::cos(al));
    add_check(r, "angle_BAD", "pi/2", kPi / 2, g("angle_BAD"));
  } else if (fig.id == "fig7") {
    double al = fig.params.at("alpha");
    double be = fig.params.at("beta");
    add_check(r, "AB_cos_alpha", "cos(alpha)", std::cos(al), g("AB"));
    add_check(r, "BC_sin_alpha", "sin(alpha)", std::sin(al), g("BC"));
    add_check(r, "AD_cos_beta", "cos(beta)", std::cos(be), g("AD"));
    add_check(r, "DC_sin_beta", "sin(beta)", std::sin(be), g("DC"));
    add_check(r, "angle_ABC_right", "pi/2", kPi / 2, g("angle_ABC"));
    add_check(r, "angle_ADC_right", "pi/2", kPi / 2, g("angle_ADC"));
    add_check(r, "area_two_ways", "area via AC = area via BD", g("area_q1"),
              g("area_q2"));
    add_check(r, "eq5_rhs_zero", "0", 0.0, g("eq5_residual"));
  } else if (fig.id == "fig8") {
    double th = fig.params.at("theta");
    double s3 = std::sin(3 * th);
    add_check(r, "AB_2cos", "2cos(theta)", 2 * std::cos(th), g("AB"));
    add_check(r, "BC_sin2", "sin(2theta)", std::sin(2 * th), g("BC"));
    add_check(r, "CD_cos2", "cos(2theta)", std::cos(2 * th), g("CD"));
    add_check(r, "BF_los", "sin(2theta)/sin(3theta)", std::sin(2 * th) / s3,
              g("BF"));
    add_check(r, "DF_los", "sin(theta)/sin(3theta)", std::sin(th) / s3,
              g("DF"));
    add_check(r, "angle_BFC", "3theta", 3 * th, g("angle_BFC"));
    add_check(r, "angle_DBF", "theta", th, g("angle_DBF"));
    add_check(r, "triple_angle", "sin3+sin = 2cos*sin2", 0.0,
              g("triple_angle_residual"));
  } else {
    throw UnknownQuantity(fig.id);
  }
  return r;
}

std::uint64_t SampleRng::next_u64() {
  // splitmix64; a fixed algorithm keeps streams identical everywhere.
  state_ += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double SampleRng::next() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::vector<std::map<std::string, double>> sample_parameters(
    const std::string& id, int count, std::uint64_t seed) {
  std::vector<std::map<std::string, double>> out;
  const double m = kEdgeMargin;
  auto one = [&](double lo, double hi, double u) {
    return lo + m + u * (hi - lo - 2 * m);
  };
  // Distinct figure ids draw from decorrelated streams.
  std::uint64_t mix = 0;
  for (char c : id) mix = mix * 131 + static_cast<unsigned char>(c);
  SampleRng rng(seed ^ (mix * 0x9E3779B97F4A7C15ull));

  if (id == "fig1" || id == "fig2" || id == "fig3" || id == "fig8") {
    double hi = id == "fig8" ? kPi / 6 : kPi / 4;
    out.push_back({{"theta", m}});
    out.push_back({{"theta", hi - m}});
    for (int i = 0; i < count; ++i)
      out.push_back({{"theta", one(0, hi, rng.next())}});
  } else if (id == "fig6") {
    out.push_back({{"alpha", m}});
    out.push_back({{"alpha", kPi / 2 - m}});
    for (int i = 0; i < count; ++i)
      out.push_back({{"alpha", one(0, kPi / 2, rng.next())}});
  } else if (id == "fig4" || id == "fig7") {
    out.push_back({{"alpha", m}, {"beta", kPi / 2 - m}});
    out.push_back({{"alpha", kPi / 2 - m}, {"beta", m}});
    for (int i = 0; i < count; ++i) {
      double a = one(0, kPi / 2, rng.next());
      double b = one(0, kPi / 2, rng.next());
      out.push_back({{"alpha", a}, {"beta", b}});
    }
  } else if (id == "fig5") {
    out.push_back({{"alpha", kPi / 2 - m}, {"beta", m}});
    for (int i = 0; i < count; ++i) {
      double a = 2 * m + rng.next() * (kPi / 2 - 3 * m);
      double b = m + rng.next() * (a - 2 * m);
      out.push_back({{"alpha", a}, {"beta", b}});
    }
  } else {
    throw UnknownQuantity(id);
  }
  return out;
}

}  // namespace trigproof
