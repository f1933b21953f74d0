#include "lk/string_su2.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

namespace lk {

Quat operator*(const Quat& a, const Quat& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}
Quat operator+(const Quat& a, const Quat& b) { return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z}; }
Quat operator-(const Quat& a, const Quat& b) { return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z}; }

double Quat::norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

Quat Quat::normalized() const {
    double n = norm();
    if (n == 0) throw std::domain_error("Quat: normalizing zero");
    return scaled(1.0 / n);
}

Quat quat_exp(double angle, const std::array<double, 3>& axis) {
    double n = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
    if (n < 1e-300) return {1, 0, 0, 0};
    double s = std::sin(angle) / n;
    return {std::cos(angle), axis[0] * s, axis[1] * s, axis[2] * s};
}

Quat SU2Map::operator()(const std::vector<double>& t) const {
    Quat q = eval(t);
    double n = q.norm();
    if (!(std::fabs(n - 1.0) < 1e-9))
        throw std::domain_error("SU2Map: non-unit quaternion from map '" + name + "'");
    if (!std::isfinite(q.w) || !std::isfinite(q.x) || !std::isfinite(q.y) ||
        !std::isfinite(q.z))
        throw std::domain_error("SU2Map: non-finite sample from map '" + name + "'");
    return q;
}

namespace {

// Radial fraction from the barycenter: 0 only at the center, exactly 1 on
// the boundary.  Built from the facet product s = 256 t0 t1 t2 t3 through a
// profile that is flat at both ends, so rho * (unit direction) extends to a
// C-infinity field across the center and the quadrature keeps its spectral
// rate.  (The exit-parameter of the ray through the barycenter has cone
// kinks, and a merely polynomial profile leaves a derivative jump at the
// center; both stall tensor Gauss well below the target accuracy.)  The
// profile is homotopic to the exit-parameter one through boundary-collapsing
// maps, so the degree is unchanged.
double radial_rho(const std::vector<double>& t, std::array<double, 3>& dir) {
    const double c = 0.25;
    double d1 = t[0] - c, d2 = t[1] - c, d3 = t[2] - c;
    double nd = std::sqrt(d1 * d1 + d2 * d2 + d3 * d3);
    if (nd < 1e-14) {
        dir = {1, 0, 0};
        return 0;
    }
    dir = {d1 / nd, d2 / nd, d3 / nd};
    double t0 = 1 - t[0] - t[1] - t[2];
    double s = 256.0 * t0 * t[0] * t[1] * t[2];
    if (s <= 0) return 1.0;
    if (s >= 1) return 0.0;
    const double lambda = 1.5;
    return 1.0 - std::exp(lambda * (1.0 - 1.0 / s));
}

// Panelized tensor Gauss nodes on [0,1]: `kPanels` uniform cells with an
// `order`-point rule each.  The panels keep the default order-12 rule inside
// its spectral regime for the bump-profile integrands.
constexpr int kPanels = 3;

void panel_nodes(int order, std::vector<double>& xs, std::vector<double>& ws) {
    std::vector<double> x0, w0;
    gauss_legendre_01(order, x0, w0);
    xs.clear();
    ws.clear();
    for (int p = 0; p < kPanels; ++p)
        for (int i = 0; i < order; ++i) {
            xs.push_back((p + x0[i]) / kPanels);
            ws.push_back(w0[i] / kPanels);
        }
}

Quat degree1_eval(const std::vector<double>& t) {
    std::array<double, 3> dir;
    double rho = radial_rho(t, dir);
    Quat q = quat_exp(M_PI * rho, dir);
    // translate so the collapsed boundary is the identity
    return q.scaled(-1.0);
}

}  // namespace

SU2Map builtin_su2_map(const std::string& name) {
    SU2Map f;
    f.m = 3;
    f.name = name;
    if (name == "constant") {
        f.eval = [](const std::vector<double>&) { return Quat{1, 0, 0, 0}; };
        return f;
    }
    if (name == "degree1") {
        f.eval = degree1_eval;
        return f;
    }
    if (name == "degree1-reversed") {
        f.eval = [](const std::vector<double>& t) {
            std::vector<double> s{t[1], t[0], t[2]};
            return degree1_eval(s);
        };
        return f;
    }
    if (name.rfind("concat-", 0) == 0) {
        int k = std::stoi(name.substr(7));
        f.eval = [k](const std::vector<double>& t) {
            Quat q = degree1_eval(t);
            Quat p{1, 0, 0, 0};
            for (int i = 0; i < k; ++i) p = p * q;
            return p;
        };
        return f;
    }
    throw std::invalid_argument("builtin_su2_map: unknown map '" + name + "'");
}

void gauss_legendre_01(int order, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.resize(order);
    weights.resize(order);
    for (int i = 0; i < order; ++i) {
        // Newton iteration from the Chebyshev estimate, on [-1,1]
        double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
        for (int it = 0; it < 100; ++it) {
            double p0 = 1, p1 = x;
            for (int k = 2; k <= order; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = order * (x * p1 - p0) / (x * x - 1);
            double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        double p0 = 1, p1 = x;
        for (int k = 2; k <= order; ++k) {
            double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        double dp = order * (x * p1 - p0) / (x * x - 1);
        nodes[order - 1 - i] = (x + 1) / 2;
        weights[order - 1 - i] = 1.0 / ((1 - x * x) * dp * dp);
    }
}

const double kCartanScale = -1.0 / (4.0 * M_PI * M_PI);

namespace {

std::array<double, 3> mc_frame_component(const SU2Map& f, const std::vector<double>& t,
                                         int i, double h) {
    std::vector<double> tp = t, tm = t;
    tp[i] += h;
    tm[i] -= h;
    Quat df = (f.eval(tp) - f.eval(tm)).scaled(1.0 / (2 * h));
    Quat theta = f.eval(t).inverse() * df;
    return theta.imag();
}

double bracket_pair(const std::array<double, 3>& a, const std::array<double, 3>& b,
                    const std::array<double, 3>& c) {
    // <[a,b], c> with [a,b] = 2 a x b for imaginary quaternions
    std::array<double, 3> cr{2 * (a[1] * b[2] - a[2] * b[1]),
                             2 * (a[2] * b[0] - a[0] * b[2]),
                             2 * (a[0] * b[1] - a[1] * b[0])};
    return cr[0] * c[0] + cr[1] * c[1] + cr[2] * c[2];
}

}  // namespace

double cartan_pullback_coeff(const SU2Map& f, const std::vector<double>& t, double h) {
    auto t1 = mc_frame_component(f, t, 0, h);
    auto t2 = mc_frame_component(f, t, 1, h);
    auto t3 = mc_frame_component(f, t, 2, h);
    return kCartanScale * (-bracket_pair(t1, t2, t3));
}

double cartan_period(const SU2Map& f, int order) {
    std::vector<double> xs, ws;
    panel_nodes(order, xs, ws);
    int n = (int)xs.size();
    const double h = 1e-5;
    double total = 0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                double u1 = xs[a], u2 = xs[b], u3 = xs[c];
                // Duffy: t1 = u1, t2 = u2(1-u1), t3 = u3(1-u1)(1-u2)
                std::vector<double> t{u1, u2 * (1 - u1), u3 * (1 - u1) * (1 - u2)};
                double jac = (1 - u1) * (1 - u1) * (1 - u2);
                total += ws[a] * ws[b] * ws[c] * jac * cartan_pullback_coeff(f, t, h);
            }
    return total;
}

double calibration_integral(int order) {
    // independent chart of S^3: q = (cos(pi u1), sin(pi u1) n(u2, u3)) with
    // n in spherical coordinates; covers SU(2) once
    auto chart = [](const std::vector<double>& u) {
        double psi = M_PI * u[0], th = M_PI * u[1], ph = 2 * M_PI * u[2];
        std::array<double, 3> n{std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph),
                                std::cos(th)};
        return quat_exp(psi, n);
    };
    std::vector<double> xs, ws;
    panel_nodes(order, xs, ws);
    int n = (int)xs.size();
    const double h = 1e-5;
    double total = 0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                std::vector<double> u{xs[a], xs[b], xs[c]};
                std::array<std::array<double, 3>, 3> th;
                for (int i = 0; i < 3; ++i) {
                    std::vector<double> up = u, um = u;
                    up[i] += h;
                    um[i] -= h;
                    Quat df = (chart(up) - chart(um)).scaled(1.0 / (2 * h));
                    th[i] = (chart(u).inverse() * df).imag();
                }
                double coeff = kCartanScale * (-bracket_pair(th[0], th[1], th[2]));
                total += ws[a] * ws[b] * ws[c] * coeff;
            }
    return total;
}

double mc_pair_residual(const SU2Map& f, const Numeric2Form& beta, int order) {
    std::vector<double> xs, ws;
    panel_nodes(order, xs, ws);
    int n = (int)xs.size();
    const double h = 1e-3;
    double worst = 0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                std::vector<double> t{xs[a], xs[b] * (1 - xs[a]),
                                      xs[c] * (1 - xs[a]) * (1 - xs[b])};
                // d(beta)(e1,e2,e3) = d1 b23 - d2 b13 + d3 b12, with a
                // fourth-order stencil (the primitive's third derivatives are
                // steep enough to defeat the plain central difference)
                auto pd = [&](int dir, int i, int j) {
                    std::vector<double> tp = t, tm = t, tp2 = t, tm2 = t;
                    tp[dir] += h;
                    tm[dir] -= h;
                    tp2[dir] += 2 * h;
                    tm2[dir] -= 2 * h;
                    return (-beta(i, j, tp2) + 8 * beta(i, j, tp) -
                            8 * beta(i, j, tm) + beta(i, j, tm2)) /
                           (12 * h);
                };
                double dbeta = pd(0, 1, 2) - pd(1, 0, 2) + pd(2, 0, 1);
                double res = std::fabs(dbeta - cartan_pullback_coeff(f, t, 1e-5));
                worst = std::max(worst, res);
            }
    return worst;
}

Numeric2Form radial_primitive(const SU2Map& f, int order) {
    std::vector<double> xs, ws;
    panel_nodes(order, xs, ws);
    auto nodes = std::make_shared<std::vector<double>>(xs);
    auto weights = std::make_shared<std::vector<double>>(ws);
    SU2Map fc = f;
    return [fc, nodes, weights](int i, int j, const std::vector<double>& t) {
        const double c = 0.25;
        std::array<double, 3> d{t[0] - c, t[1] - c, t[2] - c};
        double total = 0;
        for (size_t q = 0; q < nodes->size(); ++q) {
            double s = (*nodes)[q];
            std::vector<double> p{c + s * d[0], c + s * d[1], c + s * d[2]};
            double G = cartan_pullback_coeff(fc, p, 1e-5);
            // det[d, e_i, e_j]: the scalar triple product d . (e_i x e_j)
            double det = 0;
            if (i == 0 && j == 1) det = d[2];
            else if (i == 0 && j == 2) det = -d[1];
            else if (i == 1 && j == 2) det = d[0];
            else throw std::invalid_argument("radial_primitive: bad index pair");
            total += (*weights)[q] * s * s * G * det;
        }
        return total;
    };
}

BundleTwoSimplex bundle_face(const SU2Map& f, int i, double b) {
    // vertices of face i of Delta^3, as barycentric corners (t1,t2,t3)
    auto corner = [](int v) {
        std::vector<double> t(3, 0.0);
        if (v > 0) t[v - 1] = 1.0;
        return t;
    };
    std::vector<int> verts;
    for (int v = 0; v <= 3; ++v)
        if (v != i) verts.push_back(v);
    BundleTwoSimplex out;
    out.b = b;
    int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (int e = 0; e < 3; ++e) {
        auto a = corner(verts[pairs[e][0]]);
        auto bb = corner(verts[pairs[e][1]]);
        SU2Map fc = f;
        out.edges[e] = [fc, a, bb](double s) {
            std::vector<double> t(3);
            for (int q = 0; q < 3; ++q) t[q] = (1 - s) * a[q] + s * bb[q];
            return fc.eval(t);
        };
    }
    return out;
}

namespace {

double quat_dist(const Quat& a, const Quat& b) {
    Quat d = a - b;
    return d.norm();
}

void check_edges_match(const BundleTetra& tetra) {
    const int samples = 7;
    for (int i = 0; i <= 3; ++i) {
        BundleTwoSimplex expect = bundle_face(tetra.filling, i, 0);
        for (int e = 0; e < 3; ++e)
            for (int q = 0; q <= samples; ++q) {
                double s = (double)q / samples;
                if (quat_dist(expect.edges[e](s), tetra.faces[i].edges[e](s)) > 1e-8)
                    throw std::invalid_argument(
                        "cocycle_check: face edges do not match the filling");
            }
    }
}

double dist_to_integer(double x) { return std::fabs(x - std::round(x)); }

}  // namespace

double cocycle_check(const BundleTetra& tetra, int order) {
    check_edges_match(tetra);
    double period = cartan_period(tetra.filling, order);
    // reduce the fiber coordinates mod 1 first, so integer shifts cancel
    // exactly in floating point
    auto red = [](double b) { return b - std::floor(b); };
    double alt = red(tetra.faces[0].b) - red(tetra.faces[1].b) +
                 red(tetra.faces[2].b) - red(tetra.faces[3].b);
    return dist_to_integer(alt - period);
}

double prism_period(const SU2Homotopy& F, int order) {
    std::vector<double> xs, ws;
    panel_nodes(order, xs, ws);
    int n = (int)xs.size();
    const double h = 1e-5;
    double total = 0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                // triangle Duffy in (t1, t2), direct in s
                double t1 = xs[a], t2 = xs[b] * (1 - xs[a]), s = xs[c];
                double jac = 1 - xs[a];
                auto eval = [&](double a1, double a2, double a3) {
                    return F.eval(a1, a2, a3);
                };
                Quat g = eval(t1, t2, s);
                auto partial = [&](int dir) {
                    double d1 = dir == 0 ? h : 0, d2 = dir == 1 ? h : 0,
                           d3 = dir == 2 ? h : 0;
                    Quat df = (eval(t1 + d1, t2 + d2, s + d3) -
                               eval(t1 - d1, t2 - d2, s - d3))
                                  .scaled(1.0 / (2 * h));
                    return (g.inverse() * df).imag();
                };
                auto th1 = partial(0), th2 = partial(1), th3 = partial(2);
                double coeff = kCartanScale * (-bracket_pair(th1, th2, th3));
                total += ws[a] * ws[b] * ws[c] * jac * coeff;
            }
    return total;
}

bool class_equal(const BundleTwoSimplex& x, const BundleTwoSimplex& y,
                 const SU2Homotopy& F, int order, double tol) {
    // shared edges, fixed by the homotopy
    const int samples = 7;
    for (int e = 0; e < 3; ++e)
        for (int q = 0; q <= samples; ++q) {
            double s = (double)q / samples;
            if (quat_dist(x.edges[e](s), y.edges[e](s)) > 1e-8)
                throw std::invalid_argument("class_equal: simplices do not share edges");
        }
    // boundary of the triangle, sampled against the homotopy at several times
    auto edge_point = [](int e, double s) {
        // edges of Delta^2 in (t1,t2): (01): (s,0); (02): (0,s); (12): (1-s,s)
        if (e == 0) return std::pair<double, double>{s, 0.0};
        if (e == 1) return std::pair<double, double>{0.0, s};
        return std::pair<double, double>{1 - s, s};
    };
    for (int e = 0; e < 3; ++e)
        for (int q = 0; q <= samples; ++q)
            for (double sv : {0.0, 0.31, 0.77, 1.0}) {
                double s = (double)q / samples;
                auto [a1, a2] = edge_point(e, s);
                if (quat_dist(F.eval(a1, a2, sv), x.edges[e](s)) > 1e-6)
                    throw std::invalid_argument("class_equal: homotopy moves the boundary");
            }
    double period = prism_period(F, order);
    return dist_to_integer((y.b - x.b) - period) < tol;
}

}  // namespace lk
