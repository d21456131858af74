#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace nlfront {

// A finite Borel measure on the line, represented as point masses plus an
// optional absolutely continuous part from a named density family. This is
// rich enough to cover every dispersal kernel the toolkit ships: lattice
// kernels (pure atoms), compactly supported and Gaussian/Laplace densities,
// and heavy-tailed families whose exponential moments all diverge.

struct Atom {
    double location = 0.0;
    double mass = 0.0;  // strictly positive
};

struct UniformDensity { double a = 0.0, b = 1.0; };           // constant on [a, b]
struct GaussianDensity { double sigma = 1.0; };               // N(0, sigma^2)
struct LaplaceDensity { double b = 1.0; };                    // exp(-|y|/b) / (2b)
struct CauchyDensity { double s = 1.0; };                     // s / (pi (s^2 + y^2))
struct ExpPowerDensity { double alpha = 2.0, beta = 1.0; };   // ~ exp(-beta |y|^alpha)
struct TabulatedDensity {
    double x_min = 0.0;
    double dx = 1.0;
    std::vector<double> samples;  // nonnegative, piecewise-linear interpolation
};

using DensityShape = std::variant<UniformDensity, GaussianDensity, LaplaceDensity,
                                  CauchyDensity, ExpPowerDensity, TabulatedDensity>;

struct Density {
    DensityShape shape;
    double weight = 1.0;  // total mass carried by the density part
};

class Kernel {
  public:
    // Validates and (by default) rescales masses so the total is exactly 1.
    Kernel(std::vector<Atom> atoms, std::optional<Density> density, bool normalize = true);

    static Kernel point_mass(double location, double mass = 1.0);
    static Kernel from_atoms(std::vector<Atom> atoms, bool normalize = true);
    static Kernel from_density(Density density, bool normalize = true);

    const std::vector<Atom>& atoms() const { return atoms_; }
    const std::optional<Density>& density() const { return density_; }
    double total_mass() const { return total_mass_; }
    bool atoms_only() const { return !density_.has_value(); }

    // Scales every mass by a positive factor (used for measures like
    // exp(c) * nu that are not probability measures).
    Kernel scaled(double factor) const;

  private:
    std::vector<Atom> atoms_;
    std::optional<Density> density_;
    double total_mass_ = 0.0;
};

/// Pointwise density value; jump points of a discontinuous family evaluate to
/// the midpoint of the one-sided limits.
double density_value(const Density& d, double y);

/// int exp(s y) dmu(y) for arbitrary real s; +infinity when the integral
/// diverges. Divergence is decided by the analytic classification of the
/// family, never by runaway quadrature.
double exp_moment(const Kernel& k, double s);
bool exp_moment_is_finite(const Kernel& k, double s);

/// M(lambda) = int exp(-lambda y) dmu(y), lambda > 0 (throws std::domain_error
/// otherwise). The decay exponent convention matches profiles that vanish at
/// -infinity and travel with speed c in the argument x + c t.
double mgf(const Kernel& k, double lambda);
bool mgf_is_finite(const Kernel& k, double lambda);

/// True when M(lambda) is finite for at least one lambda > 0; false for
/// heavy-tailed kernels (Cauchy, stretched-exponential with exponent < 1).
bool mgf_finite_for_some_lambda(const Kernel& k);

/// Same integral as exp_moment but with the density part evaluated by
/// adaptive quadrature even when a closed form exists. Cross-checks the
/// closed forms; also the evaluation route for families without one.
double exp_moment_quadrature(const Kernel& k, double s);

/// Mirror image: hat-mu((-inf, y)) = mu((-y, +inf)). An involution on the
/// representation; exp_moment(reflect(k), s) == exp_moment(k, -s).
Kernel reflect(const Kernel& k);

// Convolution weights on a uniform grid of spacing h, offsets -radius..+radius.
struct DiscreteWeights {
    double h = 0.0;
    int radius = 0;
    std::vector<double> weights;   // size 2*radius + 1, nonnegative
    double total_mass = 0.0;       // sum of weights as stored
    double truncated_mass = 0.0;   // density mass dropped beyond the radius
    bool renormalized = false;

    double weight_at(int offset) const { return weights[static_cast<std::size_t>(offset + radius)]; }

    // prefix[j] = sum of weights[0..j-1]; prefix.back() = full sum. Used for
    // O(1) boundary terms when convolving against constant tail extensions.
    std::vector<double> prefix;
    double sum_first(int count) const;        // sum of the first `count` weights
    double sum_last(int count) const;         // sum of the last `count` weights

    // Smallest half-width m (multiple of h) with weight mass outside [-m, m]
    // at most tail_tol * total_mass.
    double tail_quantile(double tail_tol) const;
};

/// Splits each atom between the two neighboring grid nodes (exact for
/// grid-aligned atoms), integrates the density with the midpoint rule per
/// cell, and truncates the support once the omitted density mass drops to
/// cutoff_mass. With renormalize on, weights are rescaled so their sum equals
/// total_mass exactly, making constants exact discrete equilibria.
DiscreteWeights discretize(const Kernel& k, double h, double cutoff_mass,
                           bool renormalize = true);

struct GalleryEntry {
    std::string id;
    Kernel kernel;
};

/// Named kernels exercised throughout the tests and the CLI: lattice kernels
/// with one and two atoms, one-sided and symmetric uniform densities,
/// Gaussian, Laplace, and the heavy-tailed Cauchy.
std::vector<GalleryEntry> kernel_gallery();

}  // namespace nlfront
