#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include <kitaev/spin_ed.hpp>

#include "oracle.hpp"

using namespace kitaev;

namespace {

CouplingParams random_couplings(std::mt19937_64& rng, bool with_field) {
    std::uniform_real_distribution<double> u(0.2, 1.5);
    CouplingParams p{u(rng), u(rng), u(rng), 0, 0, 0};
    if (with_field) {
        std::uniform_real_distribution<double> f(-0.3, 0.3);
        p.hx = f(rng);
        p.hy = f(rng);
        p.hz = f(rng);
    }
    return p;
}

std::vector<double> dense_eigenvalues(const SparseOperator& H) {
    Eigen::SelfAdjointEigenSolver<oracle::Mat> es(oracle::dense_operator(H));
    std::vector<double> out(static_cast<size_t>(es.eigenvalues().size()));
    for (long i = 0; i < es.eigenvalues().size(); ++i)
        out[static_cast<size_t>(i)] = es.eigenvalues()(i);
    return out;
}

}  // namespace

TEST_CASE("build_hamiltonian: term counts and Hermiticity") {
    auto lat = build_lattice(2, 2, Boundary::Torus);
    CouplingParams p{1, 0.7, 0.3, 0, 0, 0};
    auto H = build_hamiltonian(lat, p);
    CHECK(H.n_spins() == 8);
    CHECK(H.n_terms() == 12);  // one term per bond at zero field
    for (const auto& [c, q] : H.terms()) {
        CHECK(q.hermitian());
        CHECK(q.letters().size() == 2);
    }

    CouplingParams pf = p;
    pf.hz = 0.1;
    auto Hf = build_hamiltonian(lat, pf);
    CHECK(Hf.n_terms() == 12 + 8);  // one Z term per site

    CouplingParams pz{1, 0, 0.3, 0, 0, 0};  // Jy = 0 terms dropped
    CHECK(build_hamiltonian(lat, pz).n_terms() == 8);
}

TEST_CASE("build_hamiltonian rejects registers above the ED ceiling") {
    auto big = build_lattice(4, 3, Boundary::Torus);  // 24 spins
    CHECK_THROWS_AS(build_hamiltonian(big, CouplingParams{}), ResourceError);
}

TEST_CASE("bad couplings rejected") {
    CouplingParams p{0, 0, 0, 0, 0, 0};
    CHECK_THROWS_AS(p.validate(), DomainError);
}

TEST_CASE("SparseOperator: dedup, sign folding, coeff_norm, plus") {
    SparseOperator H(2);
    H.add_term(0.5, PauliString::single(0, Axis::Z));
    H.add_term(0.25, PauliString::single(0, Axis::Z));
    CHECK(H.n_terms() == 1);
    CHECK(H.terms()[0].first == doctest::Approx(0.75));

    // -1 phase folds into the coefficient
    auto mzz = multiply(PauliString::identity(2),
                        multiply(PauliString::single(0, Axis::Z), PauliString::single(1, Axis::Z)));
    H.add_term(0.5, mzz);
    CHECK(H.n_terms() == 2);
    double zz = 0;
    for (const auto& [c, q] : H.terms())
        if (q.letters().size() == 2) zz = c;
    CHECK(zz == doctest::Approx(-0.5));
    CHECK(H.coeff_norm() == doctest::Approx(1.25));

    SparseOperator G(2);
    G.add_term(-0.75, PauliString::single(0, Axis::Z));
    auto S = H.plus(G);
    CHECK(S.n_terms() == 1);  // Z0 cancels exactly
}

TEST_CASE("non-Hermitian phase rejected by add_term") {
    SparseOperator H(2);
    auto xy = multiply(PauliString::single(0, Axis::X), PauliString::single(0, Axis::Y));  // +i Z0
    CHECK_THROWS_AS(H.add_term(1.0, xy), DomainError);
}

TEST_CASE("two-spin dimer: exact spectrum") {
    // H = -Jz Z0 Z1: eigenvalues {-Jz, -Jz, +Jz, +Jz}
    SparseOperator H(2);
    H.add_term(-0.8, multiply(PauliString::single(0, Axis::Z), PauliString::single(1, Axis::Z)));
    auto res = ground_states(H, 3);
    REQUIRE(res.eigenvalues.size() == 3);
    CHECK(res.eigenvalues[0] == doctest::Approx(-0.8).epsilon(1e-12));
    CHECK(res.eigenvalues[1] == doctest::Approx(-0.8).epsilon(1e-12));
    CHECK(res.eigenvalues[2] == doctest::Approx(0.8).epsilon(1e-12));
    for (double r : res.residuals) CHECK(r < 1e-10);
}

TEST_CASE("dense path matches the dense oracle (2x2 torus, random params)") {
    auto lat = build_lattice(2, 2, Boundary::Torus);
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 5; ++trial) {
        auto p = random_couplings(rng, trial % 2 == 1);
        auto H = build_hamiltonian(lat, p);
        auto res = ground_states(H, 4);
        auto exact = dense_eigenvalues(H);
        for (int i = 0; i < 4; ++i)
            CHECK(std::abs(res.eigenvalues[static_cast<size_t>(i)] -
                           exact[static_cast<size_t>(i)]) < 1e-8);
        for (double r : res.residuals) CHECK(r < 1e-8 * H.coeff_norm());
    }
}

TEST_CASE("Lanczos path matches the dense oracle") {
    auto lat = build_lattice(2, 2, Boundary::Torus);
    std::mt19937_64 rng(202);
    SolverOptions opts;
    opts.dense_cutoff = 0;  // force the iterative path on 8 spins
    for (int trial = 0; trial < 3; ++trial) {
        auto p = random_couplings(rng, trial != 0);
        auto H = build_hamiltonian(lat, p);
        auto res = ground_states(H, 3, opts);
        auto exact = dense_eigenvalues(H);
        for (int i = 0; i < 3; ++i)
            CHECK(std::abs(res.eigenvalues[static_cast<size_t>(i)] -
                           exact[static_cast<size_t>(i)]) < 1e-8);
        for (double r : res.residuals) CHECK(r < 1e-8 * H.coeff_norm());
        // eigenvectors really satisfy H v = lambda v
        for (size_t i = 0; i < 3; ++i) {
            auto hv = H.apply_to(res.eigenvectors[i]);
            double dev = 0;
            for (size_t b = 0; b < hv.dim(); ++b)
                dev = std::max(dev, std::abs(hv[b] - res.eigenvalues[i] *
                                                         res.eigenvectors[i][b]));
            CHECK(dev < 1e-7 * H.coeff_norm());
        }
    }
}

TEST_CASE("Lanczos determinism: same seed, same result bits") {
    auto lat = build_lattice(2, 2, Boundary::Torus);
    auto H = build_hamiltonian(lat, CouplingParams{1, 0.9, 1.1, 0, 0, 0.05});
    SolverOptions opts;
    opts.dense_cutoff = 0;
    auto a = ground_states(H, 2, opts);
    auto b = ground_states(H, 2, opts);
    for (size_t i = 0; i < 2; ++i) {
        CHECK(a.eigenvalues[i] == b.eigenvalues[i]);
        for (size_t k = 0; k < a.eigenvectors[i].dim(); ++k)
            CHECK(a.eigenvectors[i][k] == b.eigenvectors[i][k]);
    }
}

TEST_CASE("[H, W_p] = 0 at zero field, symbolically and densely") {
    auto lat = build_lattice(2, 2, Boundary::Torus);
    auto H = build_hamiltonian(lat, CouplingParams{0.9, 1.2, 0.7, 0, 0, 0});
    for (int p = 0; p < lat.n_plaquettes(); ++p) {
        auto w = plaquette_operator(lat, p);
        for (const auto& [c, q] : H.terms()) CHECK(commutes(q, w));
        oracle::Mat hm = oracle::dense_operator(H);
        oracle::Mat wm = oracle::dense_string(w, 8);
        CHECK((hm * wm - wm * hm).norm() < 1e-10);
    }
}

TEST_CASE("wp_profile: flux eigenstates, vortex pair after sigma^z") {
    auto lat = build_lattice(2, 2, Boundary::Torus);
    CouplingParams p{1, 1, 1, 0, 0, 0};
    auto H = build_hamiltonian(lat, p);

    // the global ground state of this small torus is a flux eigenstate
    // (uniform sector); all values pinned to +-1, nothing mixed
    auto gs = ground_states(H, 1);
    auto prof0 = wp_profile(gs.eigenvectors[0], lat);
    REQUIRE(prof0.values.size() == 4);
    for (double v : prof0.values) CHECK(std::abs(std::abs(v) - 1.0) < 1e-8);
    CHECK(prof0.mixed.empty());

    // vortex-free state obtained by sector targeting
    auto res = sector_ground(H, lat, p, {1, 1, 1, 1}, 1);
    auto prof = wp_profile(res.eigenvectors[0], lat);
    for (double v : prof.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(prof.mixed.empty());

    // sigma^z on an A site flips exactly the two adjacent plaquettes
    int site = lat.site_index(0, 0, Sublattice::A);
    auto flipped = apply(PauliString::single(site, Axis::Z), res.eigenvectors[0]);
    auto prof2 = wp_profile(flipped, lat);
    int minus = 0;
    for (double v : prof2.values) {
        CHECK(std::abs(std::abs(v) - 1.0) < 1e-8);
        if (v < 0) ++minus;
    }
    CHECK(minus == 2);
    // exactly the plaquettes whose W anticommutes with Z_site flip sign
    for (int q = 0; q < lat.n_plaquettes(); ++q) {
        bool anti = !commutes(plaquette_operator(lat, q), PauliString::single(site, Axis::Z));
        CHECK((prof2.values[static_cast<size_t>(q)] < 0) == anti);
    }

    // a superposition across sectors is flagged as mixed
    std::vector<cplx> amps(res.eigenvectors[0].dim());
    for (size_t i = 0; i < amps.size(); ++i)
        amps[i] = res.eigenvectors[0][i] + flipped[i];
    auto mixed = StateVector::from_amplitudes(8, 0, std::move(amps));
    auto prof3 = wp_profile(mixed, lat);
    CHECK(prof3.mixed.size() == 2);
}

TEST_CASE("conjugation identity: sigma^z_i H sigma^z_i = H + 2Jx XX + 2Jy YY") {
    auto lat = build_lattice(2, 2, Boundary::Torus);
    std::mt19937_64 rng(303);
    auto p = random_couplings(rng, false);
    auto H = build_hamiltonian(lat, p);
    for (const Site& s : lat.sites) {
        auto conj = two_vortex_hamiltonian(H, lat, p, s.index);
        CHECK(conj.identity_checked);
        CHECK_FALSE(conj.warning.has_value());

        // independent construction of the right-hand side
        auto xn = lat.neighbor(s.index, LinkType::X);
        auto yn = lat.neighbor(s.index, LinkType::Y);
        REQUIRE(xn.has_value());
        REQUIRE(yn.has_value());
        SparseOperator rhs = H;
        rhs.add_term(2 * p.Jx, multiply(PauliString::single(s.index, Axis::X),
                                        PauliString::single(*xn, Axis::X)));
        rhs.add_term(2 * p.Jy, multiply(PauliString::single(s.index, Axis::Y),
                                        PauliString::single(*yn, Axis::Y)));
        CHECK(conj.op.same_terms(rhs, 1e-12));

        // and densely: Z H Z equals the conjugated operator
        oracle::Mat z = oracle::dense_string(PauliString::single(s.index, Axis::Z), 8);
        oracle::Mat lhs = z * oracle::dense_operator(H) * z;
        CHECK((lhs - oracle::dense_operator(conj.op)).norm() < 1e-10);
    }
}

TEST_CASE("conjugation with a transverse field: checked flag off, warning set") {
    auto lat = build_lattice(2, 2, Boundary::Torus);
    CouplingParams p{1, 1, 1, 0.1, 0, 0};
    auto H = build_hamiltonian(lat, p);
    auto conj = two_vortex_hamiltonian(H, lat, p, 0);
    CHECK_FALSE(conj.identity_checked);
    CHECK(conj.warning.has_value());
    // the conjugation itself is still exact
    oracle::Mat z = oracle::dense_string(PauliString::single(0, Axis::Z), 8);
    oracle::Mat lhs = z * oracle::dense_operator(H) * z;
    CHECK((lhs - oracle::dense_operator(conj.op)).norm() < 1e-10);
}

TEST_CASE("sector_ground matches the dense projector oracle") {
    auto lat = build_lattice(2, 2, Boundary::Torus);
    CouplingParams p{1, 0.8, 1.2, 0, 0, 0};
    auto H = build_hamiltonian(lat, p);

    std::vector<int> free_sector{1, 1, 1, 1};
    auto free_res = sector_ground(H, lat, p, free_sector, 2);
    auto free_oracle = oracle::sector_eigenvalues_dense(H, lat, free_sector);
    REQUIRE(free_oracle.size() >= 2);
    CHECK(std::abs(free_res.eigenvalues[0] - free_oracle[0]) < 1e-8);
    CHECK(std::abs(free_res.eigenvalues[1] - free_oracle[1]) < 1e-8);
    auto prof = wp_profile(free_res.eigenvectors[0], lat);
    for (double v : prof.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-6));

    std::vector<int> pair_sector{-1, -1, 1, 1};
    auto pair_res = sector_ground(H, lat, p, pair_sector, 1);
    auto pair_oracle = oracle::sector_eigenvalues_dense(H, lat, pair_sector);
    REQUIRE_FALSE(pair_oracle.empty());
    CHECK(std::abs(pair_res.eigenvalues[0] - pair_oracle[0]) < 1e-8);
    auto prof2 = wp_profile(pair_res.eigenvectors[0], lat);
    CHECK(prof2.values[0] == doctest::Approx(-1.0).epsilon(1e-6));
    CHECK(prof2.values[1] == doctest::Approx(-1.0).epsilon(1e-6));

    // creating a vortex pair costs energy
    CHECK(pair_res.eigenvalues[0] > free_res.eigenvalues[0] + 1e-6);
}

TEST_CASE("sector_ground input validation") {
    auto lat = build_lattice(2, 2, Boundary::Torus);
    CouplingParams p{1, 1, 1, 0, 0, 0};
    auto H = build_hamiltonian(lat, p);
    CHECK_THROWS_AS(sector_ground(H, lat, p, {1, 1, 1}, 1), ConstraintError);       // wrong length
    CHECK_THROWS_AS(sector_ground(H, lat, p, {-1, 1, 1, 1}, 1), ConstraintError);   // odd vortex count
    CHECK_THROWS_AS(sector_ground(H, lat, p, {2, 1, 1, 1}, 1), ConstraintError);    // not +-1

    CouplingParams pf = p;
    pf.hx = 0.1;
    auto Hf = build_hamiltonian(lat, pf);
    CHECK_THROWS_AS(sector_ground(Hf, lat, pf, {1, 1, 1, 1}, 1), UnsupportedSectorError);
}

TEST_CASE("effective couplings from tunneling and repulsion") {
    auto eff = effective_couplings(0.05, 0.04, 0.03, 1.0);
    CHECK(eff.params.Jx == doctest::Approx(0.05 * 0.05 / 2));
    CHECK(eff.params.Jy == doctest::Approx(0.04 * 0.04 / 2));
    CHECK(eff.params.Jz == doctest::Approx(0.03 * 0.03 / 2));
    CHECK(eff.params.hx == doctest::Approx(4 * 0.05 * 0.05));
    CHECK(eff.params.hx / eff.params.Jx == doctest::Approx(8.0));
    CHECK(eff.perturbative);

    auto strong = effective_couplings(0.5, 0.1, 0.1, 1.0);
    CHECK_FALSE(strong.perturbative);

    CHECK_THROWS_AS(effective_couplings(0.1, 0.1, 0.1, 0.0), DomainError);
}
