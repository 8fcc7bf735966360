#include "trigproof/exact_bindings.hpp"

#include "trigproof/errors.hpp"

namespace trigproof {

std::vector<std::string> exact_param_names(const std::string& figure_id) {
  if (figure_id == "fig1" || figure_id == "fig2" || figure_id == "fig3" ||
      figure_id == "fig8")
    return {"w"};
  if (figure_id == "fig6") return {"ua"};
  if (figure_id == "fig4" || figure_id == "fig5" || figure_id == "fig7")
    return {"ua", "ub"};
  throw UnknownQuantity(figure_id);
}

namespace {

Rational clamp_unit(int num, int den, const Rational& hi) {
  // maps seed to a rational strictly inside (0, hi)
  Rational u(std::abs(num) % den + 1, den + 1);
  return u * hi;
}

struct SinCos {
  Rational s;
  Rational c;
};

// Half-angle substitution: u = tan(x/2) gives exact sin x, cos x.
SinCos from_half(const Rational& u) {
  Rational one(1);
  Rational d = one + u * u;
  return {Rational(2) * u / d, (one - u * u) / d};
}

}  // namespace

std::map<std::string, Rational> exact_params_from_seed(
    const std::string& figure_id, int seed_num, int seed_den) {
  if (seed_den < 2) seed_den = 97;
  auto names = exact_param_names(figure_id);
  std::map<std::string, Rational> out;
  // Strict upper bounds for each parameter keep the point inside the open
  // domain: tan(pi/8) > 2/5, tan(pi/12) > 1/4 are safe caps.
  Rational hi(1);
  if (figure_id == "fig1" || figure_id == "fig2" || figure_id == "fig3")
    hi = rat_make(2, 5);
  if (figure_id == "fig8") hi = rat_make(1, 4);
  int k = 0;
  for (const auto& n : names) {
    out[n] = clamp_unit(seed_num + 7 * k, seed_den + k, hi);
    ++k;
  }
  if (figure_id == "fig5") {
    // beta < alpha: shrink ub below ua
    out["ub"] = out["ub"] * out["ua"] / Rational(2);
  }
  return out;
}

std::map<std::string, Rational> exact_quantities(
    const std::string& figure_id,
    const std::map<std::string, Rational>& params) {
  std::map<std::string, Rational> q;
  Rational one(1);
  Rational two(2);

  if (figure_id == "fig1" || figure_id == "fig2") {
    SinCos th = from_half(params.at("w"));
    Rational s = th.s, co = th.c;       // sin theta, cos theta
    Rational t = s / co;                // tan theta
    Rational s2 = two * s * co;         // sin 2theta
    Rational c2 = co * co - s * s;      // cos 2theta
    Rational tan2 = s2 / c2;
    q["sin_theta"] = s;
    q["cos_theta"] = co;
    q["tan_theta"] = t;
    q["tan_theta_via_CD_over_BC"] = t;
    q["tan_2theta"] = tan2;
    q["sin_2theta"] = s2;
    q["cos_2theta"] = c2;
    if (figure_id == "fig1") {
      q["AB"] = one;
      q["AD"] = one;
      q["BC"] = s2;
      q["CA"] = c2;
      q["CD"] = one - c2;
      q["EC"] = c2 * t;  // bisector hits BC at height b*tan(theta)
      q["EB"] = s2 - c2 * t;
      q["BD"] = two * s;  // isosceles base: 2 sin theta
      q["sin_3theta"] = s2 * co + c2 * s;
    } else {
      Rational y = one / c2;  // AB = 1/cos 2theta
      q["BC"] = one;
      q["CD"] = t;
      q["ED"] = t;
      q["BE"] = one;
      q["AB"] = y;
      q["AC"] = tan2;
      q["AD"] = y * t;
      q["AE"] = y - one;
    }
    return q;
  }

  if (figure_id == "fig3" || figure_id == "fig8") {
    SinCos th = from_half(params.at("w"));
    Rational s = th.s, co = th.c;
    Rational s2 = two * s * co;
    Rational c2 = co * co - s * s;
    q["sin_theta"] = s;
    q["cos_theta"] = co;
    q["sin_2theta"] = s2;
    q["cos_2theta"] = c2;
    q["AB"] = two * co;
    q["BC"] = s2;
    q["AC"] = one + c2;
    q["AD"] = one;
    q["BD"] = one;
    q["CD"] = c2;
    q["AE"] = co;
    q["DE"] = s;
    if (figure_id == "fig8") {
      Rational s3 = s2 * co + c2 * s;
      q["sin_3theta"] = s3;
      q["sin_angle_BFD"] = s3;
      q["tan_theta"] = s / co;
      q["BF"] = s2 / s3;
      q["DF"] = s / s3;
      q["CF"] = c2 - s / s3;
    }
    return q;
  }

  if (figure_id == "fig6") {
    SinCos al = from_half(params.at("ua"));
    Rational ta = al.s / al.c;
    q["cos_alpha"] = al.c;
    q["tan_alpha"] = ta;
    q["BC"] = one;
    q["AC"] = ta;
    q["AB"] = one / al.c;
    q["CD"] = ta * ta;
    q["BD"] = one + ta * ta;
    return q;
  }

  if (figure_id == "fig4" || figure_id == "fig5" || figure_id == "fig7") {
    SinCos al = from_half(params.at("ua"));
    SinCos be = from_half(params.at("ub"));
    Rational sa = al.s, ca = al.c, sb = be.s, cb = be.c;
    q["sin_alpha"] = sa;
    q["cos_alpha"] = ca;
    q["sin_beta"] = sb;
    q["cos_beta"] = cb;
    if (figure_id == "fig7") {
      q["AB"] = ca;
      q["BC"] = sa;
      q["AD"] = cb;
      q["DC"] = sb;
      q["AC"] = one;
      Rational sab = sa * cb + ca * sb;
      q["sin_alpha_plus_beta"] = sab;
      q["sin_angle_BCD"] = sab;  // supplement of angle BAD
      return q;
    }
    Rational ta = sa / ca, tb = sb / cb;
    q["tan_alpha"] = ta;
    q["tan_beta"] = tb;
    q["BC"] = one;
    q["AC"] = ta;
    q["AB"] = one / ca;
    q["CD"] = tb;
    q["BD"] = one / cb;
    if (figure_id == "fig4") {
      q["AD"] = ta + tb;
      q["sin_alpha_plus_beta"] = sa * cb + ca * sb;
      q["cos_alpha_plus_beta"] = ca * cb - sa * sb;
    } else {
      q["AD"] = ta - tb;
      q["sin_alpha_minus_beta"] = sa * cb - ca * sb;
      q["cos_alpha_minus_beta"] = ca * cb + sa * sb;
    }
    return q;
  }

  throw UnknownQuantity(figure_id);
}

}  // namespace trigproof
