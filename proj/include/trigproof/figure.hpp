#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "trigproof/errors.hpp"

namespace trigproof {

using Point = Eigen::Vector2d;

// A numeric construction: labeled points rebuilt from the angle parameters
// by elementary coordinate geometry, plus every named length/angle/ratio
// the catalog scripts and postcondition tables refer to.
struct Figure {
  std::string id;
  std::map<std::string, double> params;      // angle name -> radians
  std::map<std::string, Point> points;       // label -> coordinates
  std::map<std::string, double> quantities;  // name -> value
  std::vector<std::string> flags;            // e.g. "reconstructed-configuration"
};

struct ResidualCheck {
  std::string name;
  std::string expected_expr;
  double expected = 0.0;
  double measured = 0.0;
  double residual = 0.0;  // |measured - expected|
};

struct ResidualReport {
  std::string figure_id;
  std::map<std::string, double> params;
  std::vector<ResidualCheck> checks;
  double max_residual = 0.0;
  std::vector<std::string> flags;
};

// Foot of the perpendicular from p onto line ab. Errors when a == b.
Point perpendicular_foot(const Point& p, const Point& a, const Point& b);

// Intersection of the internal bisector of angle p-apex-q with segment
// seg_a..seg_b. Errors when the bisector misses the segment.
Point bisector_point(const Point& apex, const Point& p, const Point& q,
                     const Point& seg_a, const Point& seg_b);

// Angle at vertex b of the path a-b-c, in (0, pi).
double angle_at(const Point& a, const Point& b, const Point& c);

const std::vector<std::string>& figure_ids();

// Parameter names per figure: fig1..fig3, fig8 take {theta}; fig4, fig5 and
// fig7 take {alpha, beta}; fig6 takes {alpha}.
std::vector<std::string> figure_param_names(const std::string& id);

// Rebuilds the figure from its parameters. Out-of-domain parameters raise
// DomainViolation naming the violated constraint.
Figure construct_figure(const std::string& id,
                        const std::map<std::string, double>& params);

double measure(const Figure& fig, const std::string& quantity);

// Evaluates the figure's postcondition table.
ResidualReport check_figure(const Figure& fig, double tol);

// Deterministic uniform sampler (splitmix-fed mt19937_64, explicit 53-bit
// mapping so streams are identical across platforms).
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : state_(seed) {}
  // uniform in [0, 1)
  double next();

 private:
  std::uint64_t next_u64();
  std::uint64_t state_;
};

// Parameter maps for a sampling run: always-included domain-edge margin
// points followed by `count` seeded-uniform interior draws.
std::vector<std::map<std::string, double>> sample_parameters(
    const std::string& id, int count, std::uint64_t seed);

}  // namespace trigproof
