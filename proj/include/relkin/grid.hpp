#ifndef RELKIN_GRID_HPP
#define RELKIN_GRID_HPP

#include <vector>

#include "relkin/kinematics.hpp"

namespace relkin {

// Spherical-product discretization of momentum space, |p| <= pmax.
// Radial direction: Gauss-Legendre nodes t on (0,1) mapped by
// r = pmax t^2 (3-2t); sphere: Gauss-Legendre in cos(polar) times a uniform
// midpoint rule in azimuth.  Weights include the r^2 volume element, so
// sum_i w_i f(p_i) ~ int f dp.
struct GridSpec {
    double pmax = 12.0;
    int radial = 32;
    int polar = 8;
    int azimuth = 6;

    GridSpec refined(double factor = 1.5) const;
    static GridSpec from_counts(double pmax, int radial_nodes, int sphere_nodes);
};

class MomentumGrid {
  public:
    explicit MomentumGrid(const GridSpec& spec);

    int size() const { return static_cast<int>(nodes_.size()); }
    const std::vector<Momentum3>& nodes() const { return nodes_; }
    const std::vector<double>& weights() const { return weights_; }
    const std::vector<double>& energies() const { return p0_; }
    const GridSpec& spec() const { return spec_; }
    double pmax() const { return spec_.pmax; }

    // relative defect of sum w J against int J dp (the grid health check)
    double mass_defect() const;

    // discrete L^2(R^3) inner product of nodal functions
    double inner(const std::vector<double>& f, const std::vector<double>& g) const;

    // Off-node evaluation.  Nodal values are multiplied by e^{+kappa p0}
    // before tricubic (radius x polar x azimuth) Lagrange interpolation and
    // the result is rescaled by e^{-kappa p0(x)}; kappa = 1 suits absolute
    // distributions F ~ e^{-p0}, kappa = 1/2 perturbations h ~ sqrt(J).
    // Beyond pmax the weighted values are held radially constant, which is
    // exactly the e^{-kappa p0} tail.
    struct Stencil {
        int idx[64];
        double w[64];
        int n = 0;
    };
    Stencil stencil(const Momentum3& x, double kappa) const;
    double interpolate(const std::vector<double>& values, const Momentum3& x,
                       double kappa) const;

    int node_index(int radial, int polar, int azimuth) const {
        return (radial * spec_.polar + polar) * spec_.azimuth + azimuth;
    }

  private:
    GridSpec spec_;
    std::vector<Momentum3> nodes_;
    std::vector<double> weights_;
    std::vector<double> p0_;
    std::vector<double> rad_r_;    // radial node positions
    std::vector<double> pol_mu_;   // polar cosines
    std::vector<double> az_phi_;   // azimuth angles
};

} // namespace relkin

#endif
