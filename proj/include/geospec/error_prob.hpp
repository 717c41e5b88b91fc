// Pairwise, triplet-wise, and quadruple-wise error probabilities over AWGN:
// Q-function, correlated half-space orthant probabilities (1-3 constraints),
// and a Monte Carlo oracle on counter-based streams.
#ifndef GEOSPEC_ERROR_PROB_HPP
#define GEOSPEC_ERROR_PROB_HPP

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "geospec/geometry.hpp"

namespace geospec {

struct NoiseModel {
    explicit NoiseModel(double s);
    double sigma;
};

/// Standard normal upper tail; Q(-x) = 1 - Q(x) exactly.
double q_function(double x);
double normal_cdf(double x);
double normal_pdf(double x);

/// P(U1 < b1, U2 < b2) for standard bivariate normal with correlation rho;
/// absolute accuracy ~1e-15. Exact-boundary correlations use the degenerate
/// closed forms.
double bvn_cdf(double b1, double b2, double rho);

/// P(U < b) for standard trivariate normal with the given correlations,
/// adaptive outer quadrature with conditional bivariate CDF inside (~1e-9).
double tvn_cdf(double b1, double b2, double b3, double r12, double r13, double r23);

/// Intersection of 1-3 half-spaces {x : n_r . x < tau_r} with unit normals,
/// thresholds in signal-space units.
class HalfSpaceSystem {
public:
    static HalfSpaceSystem make(std::vector<Eigen::Vector3d> normals,
                                std::vector<double> offsets);

    int count() const { return static_cast<int>(normals_.size()); }
    const Eigen::Vector3d& normal(int r) const { return normals_[r]; }
    double offset(int r) const { return offsets_[r]; }
    Eigen::MatrixXd correlation() const;

private:
    HalfSpaceSystem() = default;
    std::vector<Eigen::Vector3d> normals_;
    std::vector<double> offsets_;
};

/// P(all constraints hold) for iid N(0, sigma^2) coordinates. Singular
/// correlation structures are reduced to the lower-dimensional equivalent.
double mvn_halfspace_prob(const HalfSpaceSystem& sys, const NoiseModel& noise);

struct McEstimate {
    double estimate;
    double std_error;
};

/// Unbiased Monte Carlo estimate with binomial standard error; deterministic
/// in (seed, samples) under any thread count. threads = 0 picks a default.
McEstimate mc_event_prob(const HalfSpaceSystem& sys, const NoiseModel& noise,
                         std::uint64_t samples, std::uint64_t seed, int threads = 0);

/// p2(i) = Q(sqrt(i)/sigma), i >= 1.
double pairwise_error_prob(int i, const NoiseModel& noise);

/// p3: probability that at least one of {c1 at distance d1, c at distance i,
/// with W_H(c - c1) = j} beats the transmitted codeword.
double triplet_error_prob(int d1, int i, int j, const NoiseModel& noise);

/// p4 for the full tetrahedron (or rectangle) configuration.
double quadruple_error_prob(const TetrahedronConfig& cfg, const NoiseModel& noise);

/// The Voronoi-region constraint systems behind p3/p4 (also used by the MC
/// oracle so both routes share one geometry).
HalfSpaceSystem triplet_halfspaces(int d1, int i, int j);
HalfSpaceSystem quadruple_halfspaces(const TetrahedronConfig& cfg);

/// Literal repeated-integral evaluation of the p3/p4 integrals; slow, kept as
/// a cross-check of the CDF reformulation. Requires an interior configuration
/// (no right-angle or coplanar degeneracy).
double trep_repeated_integral(int d1, int i, int j, const NoiseModel& noise);
double quep_repeated_integral(const TetrahedronConfig& cfg, const NoiseModel& noise);

}  // namespace geospec

#endif
