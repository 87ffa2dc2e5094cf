// Copyright 2026 The kitaev-lab Developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied. See the License for the specific language governing
// permissions and limitations under the License.

#include <kitaev/spin_ed.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>

namespace kitaev {

namespace {

using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

Vec random_vec(long dim, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0, 1);
    Vec v(dim);
    for (long i = 0; i < dim; ++i) v(i) = cplx{g(rng), g(rng)};
    return v;
}

// Orthogonalize v against the first `cols` columns of a basis block
// (two Gram-Schmidt passes, blocked for memory locality).
void project_out(Vec& v, const Mat& basis, long cols) {
    if (cols == 0) return;
    for (int pass = 0; pass < 2; ++pass) {
        Eigen::VectorXcd c = basis.leftCols(cols).adjoint() * v;
        v.noalias() -= basis.leftCols(cols) * c;
    }
}

EigenResult dense_solve(const SparseOperator& H, int k) {
    const size_t dim = H.dim();
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(static_cast<long>(dim), static_cast<long>(dim));
    // Each Pauli string is a signed permutation: one entry per column.
    for (const auto& [c, q] : H.terms()) {
        StringAction act = string_action(q);
        for (size_t b = 0; b < dim; ++b)
            M(static_cast<long>(b ^ act.flip), static_cast<long>(b)) += c * act.factor(b);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(M);
    if (es.info() != Eigen::Success) throw NumericError("dense eigensolver failed");
    EigenResult out;
    for (int m = 0; m < k; ++m) {
        double lambda = es.eigenvalues()(m);
        std::vector<cplx> v(dim), hv(dim);
        for (size_t i = 0; i < dim; ++i) v[i] = es.eigenvectors()(static_cast<long>(i), m);
        H.apply_to(v.data(), hv.data());
        double res = 0;
        for (size_t i = 0; i < dim; ++i) res += std::norm(hv[i] - lambda * v[i]);
        out.eigenvalues.push_back(lambda);
        out.eigenvectors.push_back(
            StateVector::from_amplitudes(H.n_spins(), 0, std::move(v)));
        out.residuals.push_back(std::sqrt(res));
    }
    return out;
}

}  // namespace

EigenResult ground_states(const SparseOperator& H, int k, const SolverOptions& opts) {
    if (k < 1) throw DomainError("need k >= 1 eigenpairs");
    if (static_cast<size_t>(k) > H.dim()) throw DomainError("k exceeds Hilbert dimension");
    if (H.n_terms() == 0) throw DomainError("empty operator");

    if (H.n_spins() <= opts.dense_cutoff) return dense_solve(H, k);

    const long dim = static_cast<long>(H.dim());
    const double scale_h = std::max(H.coeff_norm(), 1e-300);
    const double target = opts.tol * scale_h;
    const double accept = 1e-8 * scale_h;  // residual contract

    Mat found(dim, k);
    EigenResult out;
    Vec warm_start;  // second Ritz vector of the previous pass's subspace

    for (int pass = 0; pass < k; ++pass) {
        Vec v0 = warm_start.size() == dim
                     ? warm_start
                     : random_vec(dim, opts.seed +
                                           0x9e3779b97f4a7c15ULL * static_cast<uint64_t>(pass));
        project_out(v0, found, pass);
        double n0 = v0.norm();
        if (n0 < 1e-6) {
            // degenerate warm start collapsed onto the found set; fall back
            v0 = random_vec(dim, opts.seed + 0x9e3779b97f4a7c15ULL * static_cast<uint64_t>(pass));
            project_out(v0, found, pass);
            n0 = v0.norm();
        }
        if (n0 < 1e-12) throw NumericError("deflation start vector vanished");
        v0 /= n0;

        bool converged = false;
        double last_res = 0;
        double theta = 0;
        Vec ritz;
        Mat Q(dim, opts.max_krylov);
        Vec w(dim), hv(dim);

        for (int restart = 0; restart < opts.max_restarts && !converged; ++restart) {
            std::vector<double> alpha, beta;
            Q.col(0) = v0;
            int m = 0;
            bool lucky = false;
            for (; m < opts.max_krylov; ++m) {
                H.apply_to(Q.col(m).data(), w.data());
                double a = (Q.col(m).adjoint() * w)(0).real();
                alpha.push_back(a);
                project_out(w, found, pass);
                // full reorthogonalization against the Krylov block (two
                // passes); this also removes the alpha/beta components
                project_out(w, Q, m + 1);
                double b = w.norm();
                if (b < 1e-10 * scale_h) {
                    lucky = true;  // invariant subspace reached
                    ++m;
                    break;
                }
                if (m + 1 < opts.max_krylov) {
                    beta.push_back(b);
                    Q.col(m + 1) = w / b;
                } else {
                    ++m;
                    break;
                }
            }

            // Solve the tridiagonal Ritz problem.
            int mm = static_cast<int>(alpha.size());
            Eigen::MatrixXd T = Eigen::MatrixXd::Zero(mm, mm);
            for (int i = 0; i < mm; ++i) {
                T(i, i) = alpha[static_cast<size_t>(i)];
                if (i + 1 < mm) T(i, i + 1) = T(i + 1, i) = beta[static_cast<size_t>(i)];
            }
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
            ritz.noalias() = Q.leftCols(mm) * es.eigenvectors().col(0).cast<cplx>();
            double rn = ritz.norm();
            if (rn < 1e-12) throw NumericError("Ritz vector vanished");
            ritz /= rn;

            H.apply_to(ritz.data(), hv.data());
            theta = (ritz.adjoint() * hv)(0).real();
            last_res = (hv - theta * ritz).norm();
            if (last_res <= target || (lucky && last_res <= accept)) {
                converged = true;
                if (mm >= 2)
                    warm_start = Q.leftCols(mm) * es.eigenvectors().col(1).cast<cplx>();
                else
                    warm_start.resize(0);
            } else {
                v0 = ritz;
            }
        }

        if (!converged && last_res > accept) {
            std::vector<double> rs = out.residuals;
            rs.push_back(last_res);
            throw ConvergenceError(
                "Lanczos failed to reach residual tolerance after max restarts", rs);
        }

        found.col(pass) = ritz;
        out.eigenvalues.push_back(theta);
        out.residuals.push_back(last_res);
        out.eigenvectors.push_back(StateVector::from_amplitudes(
            H.n_spins(), 0, std::vector<cplx>(ritz.data(), ritz.data() + dim)));
    }

    // Deflation finds eigenvalues in whatever order the projected problems
    // yield; sort ascending.
    std::vector<size_t> order(out.eigenvalues.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return out.eigenvalues[a] < out.eigenvalues[b]; });
    EigenResult sorted;
    for (size_t i : order) {
        sorted.eigenvalues.push_back(out.eigenvalues[i]);
        sorted.eigenvectors.push_back(std::move(out.eigenvectors[i]));
        sorted.residuals.push_back(out.residuals[i]);
    }
    return sorted;
}

}  // namespace kitaev
