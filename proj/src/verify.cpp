#include "ymx/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "ymx/elliptic.hpp"

namespace ymx {

FourVector GridSpec::point(std::size_t flat) const {
    std::array<std::size_t, 4> idx;
    for (std::size_t k = 4; k-- > 0;) {
        idx[k] = flat % counts[k];
        flat /= counts[k];
    }
    FourVector x = origin;
    for (std::size_t k = 0; k < 4; ++k) x[k] += static_cast<double>(idx[k]) * spacing(k);
    return x;
}

GridSpec GridSpec::centered_cube(std::size_t n, double L) {
    if (n == 0) throw std::invalid_argument("grid needs at least one point per axis");
    if (!(L >= 0.0)) throw std::invalid_argument("grid extent must be nonnegative");
    if (n == 1) return {FourVector{}, {0.0, 0.0, 0.0, 0.0}, {1, 1, 1, 1}};
    const double half = 0.5 * L;
    return {FourVector{-half, -half, -half, -half}, {L, L, L, L}, {n, n, n, n}};
}

const char* to_string(JetMethod m) {
    switch (m) {
        case JetMethod::analytic: return "analytic";
        case JetMethod::fd2: return "fd2";
        case JetMethod::fd4: return "fd4";
    }
    return "analytic";
}

double ResidualReport::max_diagonal() const {
    double v = 0.0;
    for (int a = 1; a <= 3; ++a) v = std::max(v, entry(a, a).max_abs);
    return v;
}

double ResidualReport::max_all() const {
    double v = 0.0;
    for (const auto& e : entries) v = std::max(v, e.max_abs);
    return v;
}

namespace {

/// Pairwise (tree) sum over values[begin, end); sequential below 8 terms.
double pairwise_sum(const double* values, std::size_t n) {
    if (n <= 8) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += values[i];
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(values, half) + pairwise_sum(values + half, n - half);
}

struct BlockResult {
    std::array<double, 12> max_abs{};
    std::array<double, 12> sumsq{};
    double block_max = -1.0;      // global max over components in this block
    std::size_t first_flat = 0;   // first flat index attaining block_max
};

BlockResult scan_block(const DiagonalAnsatz& ansatz, const GridSpec& grid, JetMethod method,
                       double fd_step, const FieldMap& field, std::size_t begin,
                       std::size_t end) {
    const GaugeCoupling gc{ansatz.g, ansatz.alpha};
    BlockResult r;
    std::array<std::vector<double>, 12> squares;
    for (auto& v : squares) v.reserve(end - begin);

    for (std::size_t flat = begin; flat < end; ++flat) {
        const FourVector x = grid.point(flat);
        FieldPointJet jet;
        switch (method) {
            case JetMethod::analytic: jet = jet_from_ansatz(ansatz, x); break;
            case JetMethod::fd2: jet = jet_from_callable(field, x, fd_step, StencilOrder::second); break;
            case JetMethod::fd4: jet = jet_from_callable(field, x, fd_step, StencilOrder::fourth); break;
        }
        const auto lhs = ym_lhs_compact(jet, gc);
        double point_max = 0.0;
        for (int a = 0; a < 3; ++a) {
            for (std::size_t nu = 0; nu < 4; ++nu) {
                const double v = std::fabs(lhs[a][nu]);
                const std::size_t e = static_cast<std::size_t>(a) * 4 + nu;
                r.max_abs[e] = std::max(r.max_abs[e], v);
                squares[e].push_back(v * v);
                point_max = std::max(point_max, v);
            }
        }
        if (point_max > r.block_max) {  // strict: keeps the first attaining point
            r.block_max = point_max;
            r.first_flat = flat;
        }
    }
    for (std::size_t e = 0; e < 12; ++e) r.sumsq[e] = pairwise_sum(squares[e].data(), squares[e].size());
    return r;
}

}  // namespace

ResidualReport residual_scan(const DiagonalAnsatz& ansatz, const GridSpec& grid, JetMethod method,
                             double fd_step, unsigned workers) {
    const std::size_t total = grid.total();
    if (total == 0) throw std::invalid_argument("empty grid");
    if (method != JetMethod::analytic && !(fd_step > 0.0)) {
        throw std::invalid_argument("finite-difference step must be positive");
    }

    const std::size_t nblocks = (total + kScanBlock - 1) / kScanBlock;
    if (workers == 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        workers = hw == 0 ? 1 : std::min(hw, 8u);
    }
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, nblocks));

    const FieldMap field =
        method == JetMethod::analytic ? FieldMap{} : ansatz_field_map(ansatz);

    std::vector<BlockResult> blocks(nblocks);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto run = [&]() {
        try {
            for (;;) {
                const std::size_t b = next.fetch_add(1);
                if (b >= nblocks) return;
                const std::size_t begin = b * kScanBlock;
                const std::size_t end = std::min(begin + kScanBlock, total);
                blocks[b] = scan_block(ansatz, grid, method, fd_step, field, begin, end);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    };

    if (workers <= 1) {
        run();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    // Merge in block order: deterministic regardless of scheduling.
    std::array<double, 12> max_abs{};
    std::vector<double> block_sumsq(nblocks);
    double global_max = -1.0;
    std::size_t global_flat = 0;
    std::array<double, 12> sumsq{};
    for (std::size_t e = 0; e < 12; ++e) {
        for (std::size_t b = 0; b < nblocks; ++b) block_sumsq[b] = blocks[b].sumsq[e];
        sumsq[e] = pairwise_sum(block_sumsq.data(), nblocks);
        for (std::size_t b = 0; b < nblocks; ++b) max_abs[e] = std::max(max_abs[e], blocks[b].max_abs[e]);
    }
    for (std::size_t b = 0; b < nblocks; ++b) {
        if (blocks[b].block_max > global_max) {
            global_max = blocks[b].block_max;
            global_flat = blocks[b].first_flat;
        }
    }

    ResidualReport report{ansatz,
                          method,
                          method == JetMethod::analytic ? 0.0 : fd_step,
                          grid,
                          {},
                          grid.point(global_flat),
                          global_max};
    for (int a = 0; a < 3; ++a) {
        for (int nu = 0; nu < 4; ++nu) {
            const std::size_t e = static_cast<std::size_t>(a) * 4 + static_cast<std::size_t>(nu);
            report.entries[e] = {a + 1, nu, max_abs[e],
                                 std::sqrt(sumsq[e] / static_cast<double>(total))};
        }
    }
    return report;
}

ConvergenceStudy convergence_study(const FieldMap& field, const FieldPointJet& reference,
                                   const FourVector& x, const std::vector<double>& h_list,
                                   StencilOrder order) {
    if (h_list.size() < 3) throw std::invalid_argument("need at least three step sizes");
    for (std::size_t i = 1; i < h_list.size(); ++i) {
        if (!(h_list[i] < h_list[i - 1])) {
            throw std::invalid_argument("step sizes must be strictly decreasing");
        }
    }
    if (!(h_list.back() > 0.0)) throw std::invalid_argument("step sizes must be positive");

    double scale = 0.0;
    for (int a = 0; a < 3; ++a) {
        for (std::size_t mu = 0; mu < 4; ++mu) {
            scale = std::max(scale, std::fabs(reference.value[a][mu]));
            for (std::size_t nu = 0; nu < 4; ++nu) {
                scale = std::max(scale, std::fabs(reference.d1[nu][a][mu]));
                for (std::size_t rho = 0; rho < 4; ++rho) {
                    scale = std::max(scale, std::fabs(reference.d2[rho][nu][a][mu]));
                }
            }
        }
    }

    ConvergenceStudy study{0.0, true, h_list, {}};
    study.max_error.reserve(h_list.size());
    for (double h : h_list) {
        const FieldPointJet jet = jet_from_callable(field, x, h, order);
        double err = 0.0;
        for (int a = 0; a < 3; ++a) {
            for (std::size_t mu = 0; mu < 4; ++mu) {
                err = std::max(err, std::fabs(jet.value[a][mu] - reference.value[a][mu]));
                for (std::size_t nu = 0; nu < 4; ++nu) {
                    err = std::max(err, std::fabs(jet.d1[nu][a][mu] - reference.d1[nu][a][mu]));
                    for (std::size_t rho = 0; rho < 4; ++rho) {
                        err = std::max(err,
                                       std::fabs(jet.d2[rho][nu][a][mu] - reference.d2[rho][nu][a][mu]));
                    }
                }
            }
        }
        study.max_error.push_back(err);
    }

    // Errors at rounding level carry no truncation signal; report the
    // study as non-applicable rather than fit noise.
    const double floor = 1e-12 * std::max(1.0, scale);
    bool all_rounding = true;
    for (double e : study.max_error) {
        if (e > floor) all_rounding = false;
    }
    if (all_rounding) {
        study.applicable = false;
        return study;
    }

    // Least-squares slope of log(err) vs log(h).
    const std::size_t n = h_list.size();
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!(study.max_error[i] > 0.0)) {
            study.applicable = false;  // exact hit; fit would be degenerate
            return study;
        }
        const double lx = std::log(h_list[i]);
        const double ly = std::log(study.max_error[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double denom = static_cast<double>(n) * sxx - sx * sx;
    if (denom == 0.0) throw std::runtime_error("degenerate step list for slope fit");
    study.slope = (static_cast<double>(n) * sxy - sx * sy) / denom;
    return study;
}

ConvergenceStudy convergence_study(const DiagonalAnsatz& ansatz, const FourVector& x,
                                   const std::vector<double>& h_list, StencilOrder order) {
    return convergence_study(ansatz_field_map(ansatz), jet_from_ansatz(ansatz, x), x, h_list,
                             order);
}

CollapseReport collapse_check(double mu, double g, double alpha,
                              const std::array<double, 3>& spatial_p, double rel_tol,
                              std::size_t samples) {
    if (samples < 3) throw std::invalid_argument("need at least three sample points");
    const double A = mu / std::sqrt(g);
    const FourVector p = on_shell_momentum(mu, g, spatial_p);
    const DiagonalAnsatz ansatz = make_diagonal_ansatz(A, A, A, p, 0.0, mu, g, alpha);
    const GaugeCoupling gc{g, alpha};

    // One full period of the argument, sampled along the time axis at the
    // spatial origin.
    const double period = 4.0 * complete_elliptic_k(-1.0) / p.c[0];

    CollapseReport rep{};
    for (std::size_t j = 0; j < samples; ++j) {
        const double t = period * static_cast<double>(j) / static_cast<double>(samples);
        const FieldPointJet jet = jet_from_ansatz(ansatz, {t, 0.0, 0.0, 0.0});
        const auto lhs = ym_lhs_compact(jet, gc);
        const std::array<double, 3> eq{lhs[0][1], lhs[1][2], lhs[2][3]};
        for (int k = 0; k < 3; ++k) {
            rep.equation_max[k] = std::max(rep.equation_max[k], std::fabs(eq[k]));
        }
        rep.pair_mismatch[0] = std::max(rep.pair_mismatch[0], std::fabs(eq[0] - eq[1]));
        rep.pair_mismatch[1] = std::max(rep.pair_mismatch[1], std::fabs(eq[0] - eq[2]));
        rep.pair_mismatch[2] = std::max(rep.pair_mismatch[2], std::fabs(eq[1] - eq[2]));
    }
    rep.max_abs = std::max({rep.equation_max[0], rep.equation_max[1], rep.equation_max[2]});
    rep.max_mismatch =
        std::max({rep.pair_mismatch[0], rep.pair_mismatch[1], rep.pair_mismatch[2]});

    // Scale of the individual equation terms: |A sn'' (p^2 + gauge p_k^2)|
    // is at most 2A(p^2 + |gauge| max p_k^2), the cubic term at most
    // 2 g^2 A^3.
    const double p2 = minkowski_dot(p, p);
    double maxpk2 = 0.0;
    for (double pk : spatial_p) maxpk2 = std::max(maxpk2, pk * pk);
    const double gauge = 1.0 - 1.0 / alpha;
    const double scale =
        std::max(1.0, 2.0 * A * (std::fabs(p2) + std::fabs(gauge) * maxpk2) +
                          2.0 * g * g * A * A * A);
    rep.tolerance = rel_tol * scale;
    rep.pass = rep.max_mismatch <= rep.tolerance;
    rep.vanish = rep.max_abs <= rep.tolerance;
    return rep;
}

}  // namespace ymx
