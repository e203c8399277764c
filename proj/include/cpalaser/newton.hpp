#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <utility>

// Small dense damped Newton driver with a central finite-difference Jacobian.
// Square systems take pivoted-elimination steps; overdetermined ones fall back
// to Gauss-Newton on the normal equations. Steps are backtracked until the
// residual norm decreases, which keeps the large-phase trigonometry of the
// root functions from throwing the iterates out of the seeded basin.

namespace cpalaser::detail {

struct NewtonOptions {
    int max_iterations = 50;
    double tolerance = 1e-10;         // on the euclidean residual norm
    double fd_relative_step = 1e-7;   // central differences
    double fd_step_floor = 1e-3;      // |x_j| floor entering the relative step
    double condition_limit = 1e12;
    int max_backtracks = 8;
    // trust radius on the inf-norm of a step; root lattices of oscillatory
    // systems are dense, so callers cap steps to stay in the seeded basin
    double max_step = std::numeric_limits<double>::infinity();
    // extra full steps taken after the tolerance is first met, keeping only
    // improvements; buys two or three decades of residual margin for free
    int polish_iterations = 2;
};

enum class NewtonStatus { converged, max_iterations, singular_jacobian, stalled };

template <std::size_t NVar>
struct NewtonResult {
    NewtonStatus status = NewtonStatus::max_iterations;
    std::array<double, NVar> x{};
    double residual_norm = 0.0;
    int iterations = 0;
    double condition_estimate = 0.0;
};

template <std::size_t N>
using SquareMatrix = std::array<std::array<double, N>, N>;

// in-place gaussian elimination with partial pivoting; false on a ~zero pivot
template <std::size_t N>
inline bool solve_linear(SquareMatrix<N> a, std::array<double, N>& b) {
    for (std::size_t col = 0; col < N; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < N; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (std::abs(a[piv][col]) < 1e-300) return false;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = col + 1; r < N; ++r) {
            const double f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < N; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    for (std::size_t i = N; i-- > 0;) {
        double s = b[i];
        for (std::size_t c = i + 1; c < N; ++c) s -= a[i][c] * b[c];
        b[i] = s / a[i][i];
    }
    return true;
}

template <std::size_t N>
inline double inf_norm(const SquareMatrix<N>& a) {
    double best = 0.0;
    for (const auto& row : a) {
        double s = 0.0;
        for (double v : row) s += std::abs(v);
        best = std::max(best, s);
    }
    return best;
}

// ||A||_inf * ||A^-1||_inf via column-wise solves; infinite if singular
template <std::size_t N>
inline double condition_inf(const SquareMatrix<N>& a) {
    SquareMatrix<N> inv{};
    for (std::size_t c = 0; c < N; ++c) {
        std::array<double, N> e{};
        e[c] = 1.0;
        if (!solve_linear(a, e)) return std::numeric_limits<double>::infinity();
        for (std::size_t r = 0; r < N; ++r) inv[r][c] = e[r];
    }
    return inf_norm(a) * inf_norm(inv);
}

template <std::size_t NEq>
inline double norm2(const std::array<double, NEq>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

template <std::size_t NEq, std::size_t NVar, class Fn>
inline NewtonResult<NVar> newton_solve(Fn&& f, std::array<double, NVar> x,
                                       const NewtonOptions& opt = {}) {
    static_assert(NEq >= NVar);
    NewtonResult<NVar> res;
    res.x = x;
    std::array<double, NEq> fx = f(x);
    res.residual_norm = norm2<NEq>(fx);

    // one damped, step-capped Newton update; returns the status of the attempt
    auto advance = [&]() -> NewtonStatus {
        std::array<std::array<double, NVar>, NEq> jac{};
        for (std::size_t j = 0; j < NVar; ++j) {
            const double h =
                opt.fd_relative_step * std::max(std::abs(x[j]), opt.fd_step_floor);
            auto xp = x, xm = x;
            xp[j] += h;
            xm[j] -= h;
            const std::array<double, NEq> fp = f(xp);
            const std::array<double, NEq> fm = f(xm);
            for (std::size_t i = 0; i < NEq; ++i)
                jac[i][j] = (fp[i] - fm[i]) / (2.0 * h);
        }

        SquareMatrix<NVar> a{};
        std::array<double, NVar> rhs{};
        if constexpr (NEq == NVar) {
            a = jac;
            for (std::size_t i = 0; i < NVar; ++i) rhs[i] = -fx[i];
        } else {
            // normal equations J^T J dx = -J^T f
            for (std::size_t r = 0; r < NVar; ++r) {
                for (std::size_t c = 0; c < NVar; ++c) {
                    double s = 0.0;
                    for (std::size_t i = 0; i < NEq; ++i) s += jac[i][r] * jac[i][c];
                    a[r][c] = s;
                }
                double s = 0.0;
                for (std::size_t i = 0; i < NEq; ++i) s += jac[i][r] * fx[i];
                rhs[r] = -s;
            }
        }

        res.condition_estimate = condition_inf(a);
        std::array<double, NVar> step = rhs;
        if (res.condition_estimate > opt.condition_limit || !solve_linear(a, step))
            return NewtonStatus::singular_jacobian;

        double step_inf = 0.0;
        for (double s : step) step_inf = std::max(step_inf, std::abs(s));
        if (step_inf > opt.max_step)
            for (double& s : step) s *= opt.max_step / step_inf;

        double t = 1.0;
        for (int bt = 0; bt <= opt.max_backtracks; ++bt, t *= 0.5) {
            auto xt = x;
            for (std::size_t j = 0; j < NVar; ++j) xt[j] += t * step[j];
            const std::array<double, NEq> ft = f(xt);
            const double rt = norm2<NEq>(ft);
            if (rt < res.residual_norm * (1.0 - 1e-4 * t)) {
                x = xt;
                fx = ft;
                res.residual_norm = rt;
                return NewtonStatus::converged;  // step accepted
            }
        }
        return NewtonStatus::stalled;
    };

    for (int it = 0; it < opt.max_iterations; ++it) {
        if (res.residual_norm < opt.tolerance) break;
        const NewtonStatus step_status = advance();
        res.x = x;
        res.iterations = it + 1;
        if (step_status != NewtonStatus::converged) {
            res.status = step_status;
            return res;
        }
    }

    if (res.residual_norm >= opt.tolerance) {
        res.status = NewtonStatus::max_iterations;
        return res;
    }

    // converged; a couple of extra improving steps push the residual toward
    // the evaluation noise floor
    for (int p = 0; p < opt.polish_iterations; ++p) {
        const double before = res.residual_norm;
        if (advance() != NewtonStatus::converged || res.residual_norm >= before) break;
        res.x = x;
        ++res.iterations;
    }
    res.status = NewtonStatus::converged;
    return res;
}

}  // namespace cpalaser::detail
