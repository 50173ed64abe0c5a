#include "zharm/localmodel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace zharm::localmodel {

namespace {

constexpr double kPi = PolarGrid::kPi;

size_t idx(const PolarGrid& g, int i, int j) {
    return static_cast<size_t>(i) * static_cast<size_t>(g.n_theta) + static_cast<size_t>(j);
}

void check_sizes(const MultivaluedForm& f, const PolarGrid& g) {
    if (f.comp_r.size() != g.nodes() || f.comp_theta.size() != g.nodes())
        throw std::invalid_argument("form/grid size mismatch");
}

}  // namespace

PolarGrid::PolarGrid(double r0_, double r1_, int n_r_, int n_theta_)
    : r0(r0_), r1(r1_), n_r(n_r_), n_theta(n_theta_) {
    if (!(0.0 < r0 && r0 < r1)) throw std::invalid_argument("PolarGrid: need 0 < r0 < r1");
    if (n_r < 8 || n_theta < 8)
        throw std::invalid_argument("PolarGrid: need n_r >= 8 and n_theta >= 8");
    if (n_theta % 2 != 0) throw std::invalid_argument("PolarGrid: n_theta must be even");
}

MultivaluedForm MultivaluedForm::sample(
    const PolarGrid& grid,
    const std::function<std::pair<Complex, Complex>(double, double)>& fn) {
    MultivaluedForm f;
    f.comp_r.resize(grid.nodes());
    f.comp_theta.resize(grid.nodes());
    for (int i = 0; i < grid.n_r; ++i)
        for (int j = 0; j < grid.n_theta; ++j) {
            auto [a, b] = fn(grid.radius(i), grid.theta(j));
            f.comp_r[idx(grid, i, j)] = a;
            f.comp_theta[idx(grid, i, j)] = b;
        }
    const double defect = f.monodromy_defect(grid);
    f.sheet_flip = defect <= 1e-9 * std::max(1.0, f.max_abs());
    return f;
}

double MultivaluedForm::monodromy_defect(const PolarGrid& grid) const {
    check_sizes(*this, grid);
    const int half = grid.n_theta / 2;
    double defect = 0.0;
    for (int i = 0; i < grid.n_r; ++i)
        for (int j = 0; j < grid.n_theta; ++j) {
            const size_t here = idx(grid, i, j);
            const size_t there = idx(grid, i, (j + half) % grid.n_theta);
            defect = std::max(defect, std::abs(comp_r[there] + comp_r[here]));
            defect = std::max(defect, std::abs(comp_theta[there] + comp_theta[here]));
        }
    return defect;
}

double MultivaluedForm::max_abs() const {
    double m = 0.0;
    for (const auto& v : comp_r) m = std::max(m, std::abs(v));
    for (const auto& v : comp_theta) m = std::max(m, std::abs(v));
    return m;
}

MultivaluedForm sample_vk(int k, const PolarGrid& grid) {
    if (k < 0) throw std::invalid_argument("sample_vk: k must be >= 0");
    MultivaluedForm f;
    f.comp_r.resize(grid.nodes());
    f.comp_theta.resize(grid.nodes());
    f.sheet_flip = true;
    const int half = grid.n_theta / 2;
    // z^{k-1/2} dz = r^{k-1/2} e^{i (k+1/2) theta} (dr + i r dtheta).
    // The second sheet is written as the exact negation of the first.
    for (int i = 0; i < grid.n_r; ++i) {
        const double rad = std::pow(grid.radius(i), k - 0.5);
        for (int j = 0; j < half; ++j) {
            const double phase = (k + 0.5) * grid.theta(j);
            const Complex a = rad * Complex{std::cos(phase), std::sin(phase)};
            f.comp_r[idx(grid, i, j)] = a;
            f.comp_theta[idx(grid, i, j)] = Complex{0.0, 1.0} * a;
            f.comp_r[idx(grid, i, j + half)] = -a;
            f.comp_theta[idx(grid, i, j + half)] = -Complex{0.0, 1.0} * a;
        }
    }
    return f;
}

std::pair<double, double> harmonic_residual(const MultivaluedForm& f, const PolarGrid& grid) {
    check_sizes(f, grid);
    if (grid.n_r < 8 || grid.n_theta < 8)
        throw std::invalid_argument("harmonic_residual: grid too coarse");
    const int N = grid.n_theta;
    // Cartesian component functions on the polar grid:
    //   vx = a cos - b sin, vy = a sin + b cos  (v = a dr + b r dtheta).
    std::vector<Complex> vx(grid.nodes()), vy(grid.nodes());
    for (int i = 0; i < grid.n_r; ++i)
        for (int j = 0; j < N; ++j) {
            const double th = grid.theta(j);
            const double c = std::cos(th), s = std::sin(th);
            const size_t p = idx(grid, i, j);
            vx[p] = f.comp_r[p] * c - f.comp_theta[p] * s;
            vy[p] = f.comp_r[p] * s + f.comp_theta[p] * c;
        }
    // Chain rule with centered differences; theta wraps over the 4pi cover.
    const double inv2dr = 1.0 / (2.0 * grid.dr());
    const double inv2dt = 1.0 / (2.0 * grid.dtheta());
    auto d_x = [&](const std::vector<Complex>& g, int i, int j, double c, double s, double r) {
        const Complex gr = (g[idx(grid, i + 1, j)] - g[idx(grid, i - 1, j)]) * inv2dr;
        const Complex gt =
            (g[idx(grid, i, (j + 1) % N)] - g[idx(grid, i, (j + N - 1) % N)]) * inv2dt;
        return c * gr - (s / r) * gt;
    };
    auto d_y = [&](const std::vector<Complex>& g, int i, int j, double c, double s, double r) {
        const Complex gr = (g[idx(grid, i + 1, j)] - g[idx(grid, i - 1, j)]) * inv2dr;
        const Complex gt =
            (g[idx(grid, i, (j + 1) % N)] - g[idx(grid, i, (j + N - 1) % N)]) * inv2dt;
        return s * gr + (c / r) * gt;
    };
    double res_d = 0.0, res_dstar = 0.0;
    for (int i = 1; i + 1 < grid.n_r; ++i) {
        const double r = grid.radius(i);
        for (int j = 0; j < N; ++j) {
            const double th = grid.theta(j);
            const double c = std::cos(th), s = std::sin(th);
            // dv = (dx vy - dy vx) dx^dy ; d*v = (dx vx + dy vy) dx^dy.
            const Complex curl = d_x(vy, i, j, c, s, r) - d_y(vx, i, j, c, s, r);
            const Complex div = d_x(vx, i, j, c, s, r) + d_y(vy, i, j, c, s, r);
            res_d = std::max(res_d, std::abs(curl));
            res_dstar = std::max(res_dstar, std::abs(div));
        }
    }
    return {res_d, res_dstar};
}

MultivaluedForm rotate_pullback(const MultivaluedForm& f, const PolarGrid& grid) {
    check_sizes(f, grid);
    if (grid.n_theta % 3 != 0)
        throw std::invalid_argument("rotate_pullback: n_theta must be divisible by 3");
    const int N = grid.n_theta;
    const int shift = N / 6;  // 2pi/3 of the 4pi cover
    MultivaluedForm g;
    g.comp_r.resize(grid.nodes());
    g.comp_theta.resize(grid.nodes());
    g.sheet_flip = f.sheet_flip;
    for (int i = 0; i < grid.n_r; ++i)
        for (int j = 0; j < N; ++j) {
            const size_t src = idx(grid, i, (j + shift) % N);
            const size_t dst = idx(grid, i, j);
            g.comp_r[dst] = f.comp_r[src];
            g.comp_theta[dst] = f.comp_theta[src];
        }
    return g;
}

double multivalued_distance(const MultivaluedForm& f, const MultivaluedForm& g) {
    if (f.comp_r.size() != g.comp_r.size())
        throw std::invalid_argument("multivalued_distance: size mismatch");
    double plus = 0.0, minus = 0.0;
    for (size_t p = 0; p < f.comp_r.size(); ++p) {
        minus = std::max(minus, std::abs(f.comp_r[p] - g.comp_r[p]));
        minus = std::max(minus, std::abs(f.comp_theta[p] - g.comp_theta[p]));
        plus = std::max(plus, std::abs(f.comp_r[p] + g.comp_r[p]));
        plus = std::max(plus, std::abs(f.comp_theta[p] + g.comp_theta[p]));
    }
    return std::min(plus, minus);
}

Complex ModeExpansion::mode(int k, int nu) const {
    auto it = modes.find({k, nu});
    return it == modes.end() ? Complex{0.0, 0.0} : it->second;
}

ModeExpansion extract_modes(const MultivaluedForm& f, const PolarGrid& grid, int nu_max,
                            int k_max) {
    check_sizes(f, grid);
    if (nu_max < 0 || k_max < 0)
        throw std::invalid_argument("extract_modes: nu_max and k_max must be >= 0");
    const int n_basis = k_max + 1;
    if (grid.n_r < 3 || grid.n_r < n_basis)
        throw std::invalid_argument(
            "extract_modes: rank-deficient radial fit (too few radii for requested k_max)");
    const int N = grid.n_theta;
    const double dth = grid.dtheta();

    ModeExpansion ex;
    double misfit_sq = 0.0, signal_sq = 0.0;
    for (int nu = 0; nu <= nu_max; ++nu) {
        const double mu = nu + 0.5;
        // dz-coefficient per radius: d(r) = (u - i w)/2 with u, w the circle
        // integrals of the dr and r dtheta components. Fixed summation order
        // keeps the reduction bitwise reproducible.
        std::vector<Complex> d(grid.n_r);
        for (int i = 0; i < grid.n_r; ++i) {
            Complex u{0.0, 0.0}, w{0.0, 0.0};
            for (int j = 0; j < N; ++j) {
                const double phase = -mu * grid.theta(j);
                const Complex kern{std::cos(phase), std::sin(phase)};
                u += f.comp_r[idx(grid, i, j)] * kern;
                w += f.comp_theta[idx(grid, i, j)] * kern;
            }
            u *= dth / (2.0 * kPi);
            w *= dth / (2.0 * kPi);
            d[i] = (u - Complex{0.0, 1.0} * w) * 0.5;
        }
        // Least squares against the radial powers r^{nu - 1/2 + 2k}.
        std::vector<std::vector<double>> basis(static_cast<size_t>(n_basis),
                                               std::vector<double>(grid.n_r));
        for (int k = 0; k < n_basis; ++k)
            for (int i = 0; i < grid.n_r; ++i)
                basis[static_cast<size_t>(k)][static_cast<size_t>(i)] =
                    std::pow(grid.radius(i), nu - 0.5 + 2.0 * k);
        std::vector<std::vector<double>> gram(static_cast<size_t>(n_basis),
                                              std::vector<double>(n_basis, 0.0));
        std::vector<Complex> rhs(static_cast<size_t>(n_basis), Complex{0.0, 0.0});
        for (int k = 0; k < n_basis; ++k) {
            for (int l = 0; l < n_basis; ++l)
                for (int i = 0; i < grid.n_r; ++i) gram[k][l] += basis[k][i] * basis[l][i];
            for (int i = 0; i < grid.n_r; ++i) rhs[k] += basis[k][i] * d[i];
        }
        // Gaussian elimination with partial pivoting on the small normal
        // system (real SPD matrix, complex right-hand side).
        std::vector<Complex> sol(static_cast<size_t>(n_basis));
        {
            auto a = gram;
            auto b = rhs;
            for (int col = 0; col < n_basis; ++col) {
                int piv = col;
                for (int r = col + 1; r < n_basis; ++r)
                    if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
                if (std::fabs(a[piv][col]) < 1e-300)
                    throw std::invalid_argument("extract_modes: rank-deficient radial fit");
                std::swap(a[col], a[piv]);
                std::swap(b[col], b[piv]);
                for (int r = col + 1; r < n_basis; ++r) {
                    const double m = a[r][col] / a[col][col];
                    for (int c = col; c < n_basis; ++c) a[r][c] -= m * a[col][c];
                    b[r] -= m * b[col];
                }
            }
            for (int r = n_basis - 1; r >= 0; --r) {
                Complex acc = b[r];
                for (int c = r + 1; c < n_basis; ++c) acc -= a[r][c] * sol[c];
                sol[r] = acc / a[r][r];
            }
        }
        for (int k = 0; k < n_basis; ++k) ex.modes[{k, nu}] = sol[k];
        for (int i = 0; i < grid.n_r; ++i) {
            Complex fit{0.0, 0.0};
            for (int k = 0; k < n_basis; ++k) fit += sol[k] * basis[k][i];
            misfit_sq += std::norm(d[i] - fit);
            signal_sq += std::norm(d[i]);
        }
    }
    ex.A = 2.0 * ex.mode(0, 0);
    ex.B = (2.0 / 3.0) * ex.mode(0, 1);
    ex.fit_residual = signal_sq > 0.0 ? std::sqrt(misfit_sq / signal_sq) : 0.0;
    return ex;
}

MultivaluedForm synthesize(const ModeExpansion& expansion, const PolarGrid& grid) {
    MultivaluedForm f;
    f.comp_r.assign(grid.nodes(), Complex{0.0, 0.0});
    f.comp_theta.assign(grid.nodes(), Complex{0.0, 0.0});
    f.sheet_flip = true;
    const int half = grid.n_theta / 2;
    for (int i = 0; i < grid.n_r; ++i) {
        const double r = grid.radius(i);
        for (int j = 0; j < half; ++j) {
            Complex w{0.0, 0.0};
            for (const auto& [key, m] : expansion.modes) {
                const auto [k, nu] = key;
                const double phase = (nu + 0.5) * grid.theta(j);
                w += m * std::pow(r, nu - 0.5 + 2.0 * k) *
                     Complex{std::cos(phase), std::sin(phase)};
            }
            const double a = w.real();
            const double b = (Complex{0.0, 1.0} * w).real();
            f.comp_r[idx(grid, i, j)] = a;
            f.comp_theta[idx(grid, i, j)] = b;
            f.comp_r[idx(grid, i, j + half)] = -a;
            f.comp_theta[idx(grid, i, j + half)] = -b;
        }
    }
    return f;
}

bool a_term_vanishes_under_z3(const MultivaluedForm& f, const PolarGrid& grid, double tol) {
    const double defect = multivalued_distance(rotate_pullback(f, grid), f);
    if (defect > tol)
        throw InvarianceError("a_term_vanishes_under_z3: input is not Z3-invariant as a "
                              "multivalued form (defect " +
                                  std::to_string(defect) + " > tol)",
                              defect);
    const ModeExpansion ex = extract_modes(f, grid, 1, 0);
    const double scale = std::max({std::abs(ex.A), std::abs(ex.B), 1.0});
    return std::abs(ex.A) <= tol * scale;
}

MultivaluedForm read_samples_csv(std::istream& in, PolarGrid* grid_out) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("samples: missing header");
    struct Row {
        double r, theta;
        int sheet;
        Complex a, b;
    };
    std::vector<Row> rows;
    std::vector<double> radii, thetas;
    auto note = [](std::vector<double>& v, double x) {
        for (double y : v)
            if (std::fabs(x - y) <= 1e-12 * std::max(1.0, std::fabs(y))) return;
        v.push_back(x);
    };
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        Row row;
        double re_a, im_a, re_b, im_b;
        if (std::sscanf(line.c_str(), "%lf,%lf,%d,%lf,%lf,%lf,%lf", &row.r, &row.theta,
                        &row.sheet, &re_a, &im_a, &re_b, &im_b) != 7)
            throw std::invalid_argument("samples: malformed line " + std::to_string(lineno));
        if (row.sheet != 0 && row.sheet != 1)
            throw std::invalid_argument("samples: sheet must be 0 or 1 (line " +
                                        std::to_string(lineno) + ")");
        row.a = Complex{re_a, im_a};
        row.b = Complex{re_b, im_b};
        rows.push_back(row);
        note(radii, row.r);
        note(thetas, row.theta + 2.0 * kPi * row.sheet);
    }
    std::sort(radii.begin(), radii.end());
    std::sort(thetas.begin(), thetas.end());
    const int n_r = static_cast<int>(radii.size());
    const int n_theta = static_cast<int>(thetas.size());
    if (rows.size() != static_cast<size_t>(n_r) * static_cast<size_t>(n_theta))
        throw std::invalid_argument("samples: rows do not fill a complete r x theta grid");
    PolarGrid grid(radii.front(), radii.back(), n_r, n_theta);
    for (int i = 0; i < n_r; ++i)
        if (std::fabs(radii[static_cast<size_t>(i)] - grid.radius(i)) > 1e-9)
            throw std::invalid_argument("samples: radii are not uniformly spaced");
    for (int j = 0; j < n_theta; ++j)
        if (std::fabs(thetas[static_cast<size_t>(j)] - grid.theta(j)) > 1e-9)
            throw std::invalid_argument("samples: angles are not uniformly spaced from 0");

    MultivaluedForm f;
    f.comp_r.assign(grid.nodes(), Complex{0.0, 0.0});
    f.comp_theta.assign(grid.nodes(), Complex{0.0, 0.0});
    std::vector<bool> seen(grid.nodes(), false);
    for (const auto& row : rows) {
        const int i = static_cast<int>(std::lround((row.r - grid.r0) / grid.dr()));
        const double th = row.theta + 2.0 * kPi * row.sheet;
        const int j = static_cast<int>(std::lround(th / grid.dtheta()));
        if (i < 0 || i >= n_r || j < 0 || j >= n_theta ||
            std::fabs(row.r - grid.radius(i)) > 1e-9 || std::fabs(th - grid.theta(j)) > 1e-9)
            throw std::invalid_argument("samples: node off the uniform grid");
        const size_t p = idx(grid, i, j);
        if (seen[p]) throw std::invalid_argument("samples: duplicate node");
        seen[p] = true;
        f.comp_r[p] = row.a;
        f.comp_theta[p] = row.b;
    }
    const double defect = f.monodromy_defect(grid);
    f.sheet_flip = defect <= 1e-9 * std::max(1.0, f.max_abs());
    if (grid_out) *grid_out = grid;
    return f;
}

void write_samples_csv(std::ostream& out, const MultivaluedForm& f, const PolarGrid& grid) {
    check_sizes(f, grid);
    out << "r,theta,sheet,re_dr,im_dr,re_dtheta,im_dtheta\n";
    char buf[256];
    const int half = grid.n_theta / 2;
    for (int i = 0; i < grid.n_r; ++i)
        for (int j = 0; j < grid.n_theta; ++j) {
            const int sheet = j < half ? 0 : 1;
            const double theta = grid.theta(j) - 2.0 * kPi * sheet;
            const size_t p = idx(grid, i, j);
            std::snprintf(buf, sizeof buf,
                          "%.17g,%.17g,%d,%.17g,%.17g,%.17g,%.17g\n", grid.radius(i), theta,
                          sheet, f.comp_r[p].real(), f.comp_r[p].imag(),
                          f.comp_theta[p].real(), f.comp_theta[p].imag());
            out << buf;
        }
}

}  // namespace zharm::localmodel
