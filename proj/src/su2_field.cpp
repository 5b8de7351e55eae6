#include "ymx/su2_field.hpp"

#include <cmath>
#include <stdexcept>

#include "ymx/elliptic.hpp"

namespace ymx {

double levi_civita(int a, int b, int c) {
    if (a < 1 || a > 3 || b < 1 || b > 3 || c < 1 || c > 3) {
        throw std::out_of_range("levi_civita: color indices must lie in {1,2,3}");
    }
    // (a-b)(b-c)(c-a)/2 is +-1 on permutations of {1,2,3}, 0 otherwise.
    return 0.5 * (a - b) * (b - c) * (c - a);
}

namespace {

void require_gauge(const GaugeCoupling& gc) {
    if (gc.alpha == 0.0 || !std::isfinite(gc.alpha)) {
        throw std::invalid_argument("gauge parameter alpha must be finite and nonzero");
    }
}

struct ColorDots {
    double dot[3][3];  // eta-contracted A^b . A^d
    double div[3];     // d^mu A^b_mu
};

ColorDots color_dots(const FieldPointJet& jet) {
    ColorDots cd{};
    for (int b = 0; b < 3; ++b) {
        cd.div[b] = 0.0;
        for (std::size_t mu = 0; mu < 4; ++mu) cd.div[b] += metric_diag(mu) * jet.d1[mu][b][mu];
        for (int d = 0; d < 3; ++d) {
            double s = 0.0;
            for (std::size_t mu = 0; mu < 4; ++mu) {
                s += metric_diag(mu) * jet.value[b][mu] * jet.value[d][mu];
            }
            cd.dot[b][d] = s;
        }
    }
    return cd;
}

}  // namespace

std::array<std::array<double, 4>, 3> ym_lhs_compact(const FieldPointJet& jet,
                                                    const GaugeCoupling& gc) {
    require_gauge(gc);
    const double g = gc.g;
    const double gauge = 1.0 - 1.0 / gc.alpha;
    const ColorDots cd = color_dots(jet);

    std::array<std::array<double, 4>, 3> res{};
    for (int a = 1; a <= 3; ++a) {
        for (std::size_t nu = 0; nu < 4; ++nu) {
            double acc = 0.0;
            // box A^a_nu  -  (1 - 1/alpha) d_nu d^mu A^a_mu
            for (std::size_t mu = 0; mu < 4; ++mu) {
                acc += metric_diag(mu) * jet.d2[mu][mu][a - 1][nu];
                acc -= gauge * metric_diag(mu) * jet.d2[nu][mu][a - 1][mu];
            }
            for (int b = 1; b <= 3; ++b) {
                for (int c = 1; c <= 3; ++c) {
                    const double eps = levi_civita(a, b, c);
                    if (eps == 0.0) continue;
                    // g eps_abc [ A^{b mu}(d_mu A^c_nu - d_nu A^c_mu)
                    //             + d^mu (A^b_mu A^c_nu) ]  (product rule)
                    double quad = cd.div[b - 1] * jet.value[c - 1][nu];
                    for (std::size_t mu = 0; mu < 4; ++mu) {
                        const double em = metric_diag(mu);
                        quad += em * jet.value[b - 1][mu] *
                                (jet.d1[mu][c - 1][nu] - jet.d1[nu][c - 1][mu]);
                        quad += em * jet.value[b - 1][mu] * jet.d1[mu][c - 1][nu];
                    }
                    acc += g * eps * quad;
                    // g^2 eps_abc eps_cde A^{b mu} A^d_mu A^e_nu
                    for (int d = 1; d <= 3; ++d) {
                        for (int e = 1; e <= 3; ++e) {
                            const double eps2 = levi_civita(c, d, e);
                            if (eps2 == 0.0) continue;
                            acc += g * g * eps * eps2 * cd.dot[b - 1][d - 1] *
                                   jet.value[e - 1][nu];
                        }
                    }
                }
            }
            res[a - 1][nu] = acc;
        }
    }
    return res;
}

double ym_lhs_compact(const FieldPointJet& jet, const GaugeCoupling& gc, int a, std::size_t nu) {
    if (a < 1 || a > 3 || nu > 3) throw std::out_of_range("component indices out of range");
    return ym_lhs_compact(jet, gc)[a - 1][nu];
}

std::array<std::array<double, 4>, 3> ym_lhs_expanded(const FieldPointJet& jet,
                                                     const GaugeCoupling& gc) {
    require_gauge(gc);
    const double g = gc.g;
    const double gauge = 1.0 - 1.0 / gc.alpha;
    const ColorDots cd = color_dots(jet);

    std::array<std::array<double, 4>, 3> res{};
    for (int ai = 0; ai < 3; ++ai) {
        const int bi = (ai + 1) % 3;  // (a,b,c) cyclic, so eps_abc = +1
        const int ci = (bi + 1) % 3;
        for (std::size_t nu = 0; nu < 4; ++nu) {
            double lin = 0.0;
            for (std::size_t mu = 0; mu < 4; ++mu) {
                lin += metric_diag(mu) * (jet.d2[mu][mu][ai][nu] - gauge * jet.d2[nu][mu][ai][mu]);
            }

            // Quadratic terms written out for the two orientations of the
            // cross product: (b,c) with +, (c,b) with -.  The coefficient 2
            // collects the identical derivative from the field-strength and
            // the product-rule term.
            double quad = cd.div[bi] * jet.value[ci][nu] - cd.div[ci] * jet.value[bi][nu];
            for (std::size_t mu = 0; mu < 4; ++mu) {
                const double em = metric_diag(mu);
                quad += em * jet.value[bi][mu] * (2.0 * jet.d1[mu][ci][nu] - jet.d1[nu][ci][mu]);
                quad -= em * jet.value[ci][mu] * (2.0 * jet.d1[mu][bi][nu] - jet.d1[nu][bi][mu]);
            }

            // Cubic term after contracting the two cross products:
            // (A^a.A^b) A^b_nu + (A^a.A^c) A^c_nu - (A^b.A^b + A^c.A^c) A^a_nu.
            const double cubic = cd.dot[ai][bi] * jet.value[bi][nu] +
                                 cd.dot[ai][ci] * jet.value[ci][nu] -
                                 (cd.dot[bi][bi] + cd.dot[ci][ci]) * jet.value[ai][nu];

            res[ai][nu] = lin + g * quad + g * g * cubic;
        }
    }
    return res;
}

double ym_lhs_expanded(const FieldPointJet& jet, const GaugeCoupling& gc, int a, std::size_t nu) {
    if (a < 1 || a > 3 || nu > 3) throw std::out_of_range("component indices out of range");
    return ym_lhs_expanded(jet, gc)[a - 1][nu];
}

FieldPointJet jet_from_ansatz(const DiagonalAnsatz& ansatz, const FourVector& x) {
    const double u = minkowski_dot(ansatz.p, x) + ansatz.theta;
    const EllipticTriple t = jacobi_sn_cn_dn(u, -1.0);
    const double sn = t.sn;
    const double sn1 = t.sn_d1();
    const double sn2 = t.sn_d2();
    // d_nu acting on p.x produces the lower-index components of p.
    const FourVector p_low = raise_index(ansatz.p);
    const std::array<double, 3> C = ansatz.amplitudes();

    FieldPointJet jet;
    for (int k = 0; k < 3; ++k) {
        const std::size_t mu = static_cast<std::size_t>(k) + 1;  // A^1_1, A^2_2, A^3_3
        jet.value[k][mu] = C[k] * sn;
        for (std::size_t nu = 0; nu < 4; ++nu) {
            jet.d1[nu][k][mu] = C[k] * sn1 * p_low.c[nu];
            for (std::size_t rho = nu; rho < 4; ++rho) {
                const double v = C[k] * sn2 * p_low.c[rho] * p_low.c[nu];
                jet.d2[rho][nu][k][mu] = v;
                jet.d2[nu][rho][k][mu] = v;  // bitwise symmetric by construction
            }
        }
    }
    return jet;
}

namespace {

std::array<std::array<double, 4>, 3> sample(const FieldMap& field, const FourVector& x) {
    auto v = field(x);
    for (const auto& color : v) {
        for (double entry : color) {
            if (!std::isfinite(entry)) {
                throw std::runtime_error("field sample is non-finite during differencing");
            }
        }
    }
    return v;
}

using Component = std::array<std::array<double, 4>, 3>;

Component combine(double wa, const Component& a, double wb, const Component& b) {
    Component r{};
    for (int i = 0; i < 3; ++i) {
        for (std::size_t mu = 0; mu < 4; ++mu) r[i][mu] = wa * a[i][mu] + wb * b[i][mu];
    }
    return r;
}

Component combine4(double w1, const Component& a, double w2, const Component& b, double w3,
                   const Component& c, double w4, const Component& d) {
    Component r{};
    for (int i = 0; i < 3; ++i) {
        for (std::size_t mu = 0; mu < 4; ++mu) {
            r[i][mu] = w1 * a[i][mu] + w2 * b[i][mu] + w3 * c[i][mu] + w4 * d[i][mu];
        }
    }
    return r;
}

/// First derivative of the field along axis k at x, by central differences.
Component first_difference(const FieldMap& field, const FourVector& x, std::size_t k, double h,
                           StencilOrder order) {
    const FourVector e = FourVector::axis(k);
    if (order == StencilOrder::second) {
        const Component fp = sample(field, x + h * e);
        const Component fm = sample(field, x - h * e);
        return combine(0.5 / h, fp, -0.5 / h, fm);
    }
    const Component fp1 = sample(field, x + h * e);
    const Component fm1 = sample(field, x - h * e);
    const Component fp2 = sample(field, x + (2.0 * h) * e);
    const Component fm2 = sample(field, x - (2.0 * h) * e);
    // (-f(+2h) + 8 f(+h) - 8 f(-h) + f(-2h)) / (12 h)
    return combine4(-1.0 / (12.0 * h), fp2, 8.0 / (12.0 * h), fp1, -8.0 / (12.0 * h), fm1,
                    1.0 / (12.0 * h), fm2);
}

}  // namespace

FieldPointJet jet_from_callable(const FieldMap& field, const FourVector& x, double h,
                                StencilOrder order) {
    if (!(h > 0.0)) throw std::invalid_argument("finite-difference step must be positive");

    FieldPointJet jet;
    jet.value = sample(field, x);

    std::array<Component, 4> plus1{}, minus1{}, plus2{}, minus2{};
    for (std::size_t k = 0; k < 4; ++k) {
        const FourVector e = FourVector::axis(k);
        plus1[k] = sample(field, x + h * e);
        minus1[k] = sample(field, x - h * e);
        if (order == StencilOrder::fourth) {
            plus2[k] = sample(field, x + (2.0 * h) * e);
            minus2[k] = sample(field, x - (2.0 * h) * e);
        }
    }

    for (std::size_t k = 0; k < 4; ++k) {
        if (order == StencilOrder::second) {
            jet.d1[k] = combine(0.5 / h, plus1[k], -0.5 / h, minus1[k]);
            // (f(+h) - 2 f(0) + f(-h)) / h^2
            jet.d2[k][k] = combine(1.0 / (h * h), combine(1.0, plus1[k], 1.0, minus1[k]),
                                   -2.0 / (h * h), jet.value);
        } else {
            jet.d1[k] = combine4(-1.0 / (12.0 * h), plus2[k], 8.0 / (12.0 * h), plus1[k],
                                 -8.0 / (12.0 * h), minus1[k], 1.0 / (12.0 * h), minus2[k]);
            // (-f(+2h) + 16 f(+h) - 30 f(0) + 16 f(-h) - f(-2h)) / (12 h^2)
            const double s = 1.0 / (12.0 * h * h);
            jet.d2[k][k] = combine(1.0,
                                   combine4(-s, plus2[k], 16.0 * s, plus1[k], 16.0 * s, minus1[k],
                                            -s, minus2[k]),
                                   -30.0 * s, jet.value);
        }
    }

    // Mixed second derivatives: difference the first derivative along the
    // other axis; computed once per unordered pair, mirrored by symmetry.
    for (std::size_t k = 0; k < 4; ++k) {
        for (std::size_t l = k + 1; l < 4; ++l) {
            const FourVector e = FourVector::axis(l);
            Component mixed;
            if (order == StencilOrder::second) {
                const Component gp = first_difference(field, x + h * e, k, h, order);
                const Component gm = first_difference(field, x - h * e, k, h, order);
                mixed = combine(0.5 / h, gp, -0.5 / h, gm);
            } else {
                const Component gp1 = first_difference(field, x + h * e, k, h, order);
                const Component gm1 = first_difference(field, x - h * e, k, h, order);
                const Component gp2 = first_difference(field, x + (2.0 * h) * e, k, h, order);
                const Component gm2 = first_difference(field, x - (2.0 * h) * e, k, h, order);
                mixed = combine4(-1.0 / (12.0 * h), gp2, 8.0 / (12.0 * h), gp1,
                                 -8.0 / (12.0 * h), gm1, 1.0 / (12.0 * h), gm2);
            }
            jet.d2[k][l] = mixed;
            jet.d2[l][k] = mixed;
        }
    }
    return jet;
}

FieldMap ansatz_field_map(const DiagonalAnsatz& ansatz) {
    return [ansatz](const FourVector& x) {
        const double u = minkowski_dot(ansatz.p, x) + ansatz.theta;
        const double sn = jacobi_sn_cn_dn(u, -1.0).sn;
        std::array<std::array<double, 4>, 3> v{};
        v[0][1] = ansatz.X * sn;
        v[1][2] = ansatz.Y * sn;
        v[2][3] = ansatz.Z * sn;
        return v;
    };
}

}  // namespace ymx
