#pragma once

#include <map>
#include <string>
#include <vector>

#include "trigproof/rational.hpp"

namespace trigproof {

// Exact rational points on each figure's constraint variety. Every quantity
// a catalog script binds an atom to is expressed as a rational function of
// rational parameters (tangent or half-angle substitution), so accepted
// equations can be probed with exact arithmetic: symbolic acceptance must
// imply exact numeric equality at every such point.
//
// Parameters per figure:
//   fig1, fig2        t  = tan(theta)      in (0, 1)
//   fig3, fig8        w  = tan(theta/2)    in (0, tan(pi/8)) resp. tan(pi/12)
//   fig4, fig5, fig7  ua = tan(alpha/2), ub = tan(beta/2) in (0, 1)
//   fig6              ua = tan(alpha/2)    in (0, 1)
std::vector<std::string> exact_param_names(const std::string& figure_id);

// A valid interior rational parameter choice derived from two small seeds.
std::map<std::string, Rational> exact_params_from_seed(
    const std::string& figure_id, int seed_num, int seed_den);

std::map<std::string, Rational> exact_quantities(
    const std::string& figure_id, const std::map<std::string, Rational>& params);

}  // namespace trigproof
