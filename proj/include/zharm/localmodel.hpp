#pragma once

// Desk-scale numerical verification of the transverse local models of
// multivalued harmonic 1-forms: sampling of v_k = z^{k-1/2} dz on a
// two-sheeted polar annulus, finite-difference harmonicity residuals, the
// 2pi/3 rotation pullback, and extraction of the half-integer mode
// expansion Re(d(A z^{1/2}) + d(B z^{3/2})) + higher order.

#include <complex>
#include <functional>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace zharm::localmodel {

using Complex = std::complex<double>;

// Input fails the asserted symmetry (e.g. not Z3-invariant as a multivalued
// form); carries the measured defect.
class InvarianceError : public std::runtime_error {
public:
    InvarianceError(std::string msg, double defect)
        : std::runtime_error(std::move(msg)), defect_(defect) {}
    double defect() const { return defect_; }

private:
    double defect_;
};

// Uniform annulus grid, theta in [0, 4pi): two sheets of the double cover,
// sheet 0 for theta < 2pi, sheet 1 above. n_theta must be even so the sheet
// swap theta -> theta + 2pi is grid-aligned.
struct PolarGrid {
    double r0 = 0.5;
    double r1 = 1.0;
    int n_r = 64;
    int n_theta = 384;

    PolarGrid() = default;
    PolarGrid(double r0_, double r1_, int n_r_, int n_theta_);

    double radius(int i) const { return r0 + i * (r1 - r0) / (n_r - 1); }
    double theta(int j) const { return 4.0 * kPi * j / n_theta; }
    double dr() const { return (r1 - r0) / (n_r - 1); }
    double dtheta() const { return 4.0 * kPi / n_theta; }
    size_t nodes() const { return static_cast<size_t>(n_r) * static_cast<size_t>(n_theta); }

    bool operator==(const PolarGrid&) const = default;

    static constexpr double kPi = 3.14159265358979323846;
};

// Samples of a (possibly complex-valued) 1-form a dr + b (r dtheta) on the
// double-cover grid, stored row-major [radius][theta]. sheet_flip asserts
// the monodromy samples(theta + 2pi) = -samples(theta).
struct MultivaluedForm {
    std::vector<Complex> comp_r;      // against dr
    std::vector<Complex> comp_theta;  // against r dtheta
    bool sheet_flip = true;

    static MultivaluedForm sample(
        const PolarGrid& grid,
        const std::function<std::pair<Complex, Complex>(double r, double theta)>& fn);

    // Largest violation of samples(theta+2pi) = -samples(theta).
    double monodromy_defect(const PolarGrid& grid) const;
    double max_abs() const;
};

// Exact samples of v_k = z^{k-1/2} dz, k >= 0. The second sheet is the
// exact negation of the first, so the monodromy invariant holds bitwise.
MultivaluedForm sample_vk(int k, const PolarGrid& grid);

// Max |dv| and |d star v| over interior radial nodes, flat metric,
// second-order centered stencils in (r, theta); the operator is assembled on
// the Cartesian component functions so exactly constant forms (e.g. Re(dz))
// have residuals at round-off.
std::pair<double, double> harmonic_residual(const MultivaluedForm& f, const PolarGrid& grid);

// Pullback under z -> e^{2 pi i / 3} z: an index shift of n_theta/6 on the
// double-cover grid (requires n_theta divisible by 3; with n_theta even this
// makes the shift grid-aligned). The cube of the shift is the deck
// transformation, i.e. the identity as multivalued forms.
MultivaluedForm rotate_pullback(const MultivaluedForm& f, const PolarGrid& grid);

// sup-norm distance up to the sheet identification (global sign):
// min_{s = +-1} max_nodes |f - s g|.
double multivalued_distance(const MultivaluedForm& f, const MultivaluedForm& g);

struct ModeExpansion {
    // (k, nu) -> least-squares coefficient of the dz-coefficient radial
    // power r^{nu - 1/2 + 2k} for the angular mode e^{i (nu + 1/2) theta}.
    std::map<std::pair<int, int>, Complex> modes;
    Complex A{0.0, 0.0};  // d-potential coefficient of z^{1/2}: A = 2 m(0,0)
    Complex B{0.0, 0.0};  // d-potential coefficient of z^{3/2}: B = (2/3) m(0,1)
    double fit_residual = 0.0;  // relative least-squares misfit

    Complex mode(int k, int nu) const;
};

// Circle integrals against e^{-i (nu + 1/2) theta} over theta in [0, 4pi) at
// each radius, then a least-squares fit of the radial powers
// r^{nu - 1/2 + 2k}, k = 0..k_max. Real forms Re(d(A z^{1/2}) + d(B z^{3/2}))
// recover (A, B) exactly up to quadrature round-off. Requires at least
// max(3, k_max + 1) radii.
ModeExpansion extract_modes(const MultivaluedForm& f, const PolarGrid& grid, int nu_max,
                            int k_max);

// Real form with the given mode coefficients:
// Re( sum m_{k,nu} r^{2k} z^{nu-1/2} dz ). Inverse of extract_modes on its
// image; also the generator of exact test inputs.
MultivaluedForm synthesize(const ModeExpansion& expansion, const PolarGrid& grid);

// Asserts the rotation-symmetry implication: requires f to be Z3-invariant
// as a multivalued form (distance to its pullback at most tol, else
// InvarianceError), then reports whether the extracted A term vanishes
// against scale = max(|A|, |B|, 1).
bool a_term_vanishes_under_z3(const MultivaluedForm& f, const PolarGrid& grid, double tol);

// samples.csv with header r,theta,sheet,re_dr,im_dr,re_dtheta,im_dtheta;
// theta is the per-sheet angle in [0, 2pi). Rows may appear in any order but
// must fill a complete uniform grid.
MultivaluedForm read_samples_csv(std::istream& in, PolarGrid* grid_out);
void write_samples_csv(std::ostream& out, const MultivaluedForm& f, const PolarGrid& grid);

}  // namespace zharm::localmodel
