// Test-only oracles, independent of the library's bit-mask kernels:
// dense matrices are assembled entry by entry from the single-site
// Pauli matrices via explicit Kronecker products.
#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

#include <kitaev/pauli.hpp>
#include <kitaev/spin_ed.hpp>

namespace oracle {

using kitaev::cplx;
using Mat = Eigen::MatrixXcd;

inline Mat pauli_matrix(kitaev::Axis a) {
    Mat m(2, 2);
    switch (a) {
        case kitaev::Axis::X: m << 0, 1, 1, 0; break;
        case kitaev::Axis::Y: m << 0, cplx{0, -1}, cplx{0, 1}, 0; break;
        case kitaev::Axis::Z: m << 1, 0, 0, -1; break;
    }
    return m;
}

// Kronecker product with qubit 0 as the least significant factor:
// full = M_{n-1} x ... x M_1 x M_0.
inline Mat dense_string(const kitaev::PauliString& p, int n_qubits) {
    Mat full = Mat::Identity(1, 1);
    for (int q = 0; q < n_qubits; ++q) {
        Mat site = Mat::Identity(2, 2);
        for (const auto& [s, a] : p.letters())
            if (s == q) site = pauli_matrix(a);
        Mat next(full.rows() * 2, full.cols() * 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                next.block(i * full.rows(), j * full.cols(), full.rows(), full.cols()) =
                    site(i, j) * full;
        full = std::move(next);
    }
    return p.phase() * full;
}

inline Mat dense_operator(const kitaev::SparseOperator& H) {
    int n = H.n_spins();
    Mat m = Mat::Zero(1L << n, 1L << n);
    for (const auto& [c, q] : H.terms()) m += c * dense_string(q, n);
    return m;
}

inline bool dense_commute(const kitaev::PauliString& a, const kitaev::PauliString& b,
                          int n_qubits, double tol = 1e-12) {
    Mat ma = dense_string(a, n_qubits), mb = dense_string(b, n_qubits);
    return (ma * mb - mb * ma).norm() <= tol;
}

// Eigenvalues of H restricted to the flux sector: build the projector
// prod_p (1 + w_p W_p)/2 densely, extract an orthonormal range basis,
// and diagonalize the restriction. Independent of the penalty method.
inline std::vector<double> sector_eigenvalues_dense(const kitaev::SparseOperator& H,
                                                    const kitaev::HoneycombLattice& lat,
                                                    const std::vector<int>& flux) {
    int n = H.n_spins();
    long dim = 1L << n;
    Mat proj = Mat::Identity(dim, dim);
    for (int p = 0; p < lat.n_plaquettes(); ++p) {
        Mat wp = dense_string(kitaev::plaquette_operator(lat, p), n);
        proj = proj * 0.5 * (Mat::Identity(dim, dim) + double(flux[size_t(p)]) * wp);
    }
    Eigen::JacobiSVD<Mat> svd(proj, Eigen::ComputeThinU);
    long rank = 0;
    for (long i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > 1e-8) ++rank;
    if (rank == 0) return {};
    Mat basis = svd.matrixU().leftCols(rank);
    Mat h = dense_operator(H);
    Mat hr = basis.adjoint() * h * basis;
    Eigen::SelfAdjointEigenSolver<Mat> es(hr);
    std::vector<double> out(static_cast<size_t>(rank));
    for (long i = 0; i < rank; ++i) out[static_cast<size_t>(i)] = es.eigenvalues()(i);
    return out;
}

}  // namespace oracle
