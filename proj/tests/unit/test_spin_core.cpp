#include "oracles.hpp"

#include "nvodmr/eigensystem.hpp"
#include "nvodmr/errors.hpp"
#include "nvodmr/hamiltonian.hpp"
#include "nvodmr/spin_operators.hpp"
#include "nvodmr/spin_register.hpp"
#include "nvodmr/transitions.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

using namespace nvodmr;

namespace {

std::vector<double> sorted_eigenvalues(const Eigen::MatrixXcd& h) {
    const Eigensystem eig = eigendecompose(h);
    std::vector<double> v(eig.values.data(), eig.values.data() + eig.values.size());
    std::sort(v.begin(), v.end());
    return v;
}

void expect_values(const std::vector<double>& got, const std::vector<double>& want, double tol) {
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], want[i], tol) << "index " << i;
}

std::vector<HyperfineCoupling> axial_sites(const std::vector<double>& a) {
    std::vector<HyperfineCoupling> out;
    for (std::size_t k = 0; k < a.size(); ++k) out.push_back(HyperfineCoupling::axial("s" + std::to_string(k), a[k]));
    return out;
}

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST(SpinRegister, DimensionsFollowNucleusCount) {
    EXPECT_EQ(build_register(0).dim(), 3);
    EXPECT_EQ(build_register(3).dim(), 24);
    EXPECT_EQ(build_register(11).dim(), 6144);
    const SpinRegister reg = build_register(3);
    EXPECT_EQ(reg.slot_count(), 4);
    EXPECT_EQ(reg.slot_dim(0), 3);
    EXPECT_EQ(reg.slot_dim(3), 2);
    EXPECT_THROW((void)reg.slot_dim(4), std::out_of_range);
}

TEST(SpinRegister, CapNamesRequestedDimension) {
    try {
        (void)build_register(13);
        FAIL() << "expected DimensionLimitError";
    } catch (const DimensionLimitError& e) {
        EXPECT_EQ(e.requested_dim(), 3 * (Eigen::Index{1} << 13));
        EXPECT_EQ(e.requested_nuclei(), 13);
        EXPECT_NE(std::string(e.what()).find("24576"), std::string::npos);
    }
    EXPECT_THROW((void)build_register(-1), std::invalid_argument);
    EXPECT_NO_THROW((void)build_register(14, 14));
}

TEST(EmbedOperator, IdentityEmbedsToIdentity) {
    const SpinRegister reg = build_register(2);
    EXPECT_TRUE(embed_operator(spin1::identity(), 0, reg).isApprox(Eigen::MatrixXcd::Identity(12, 12)));
    EXPECT_TRUE(embed_operator(spin_half::identity(), 2, reg).isApprox(Eigen::MatrixXcd::Identity(12, 12)));
}

TEST(EmbedOperator, ElectronSzWithOneNucleus) {
    const Eigen::MatrixXcd m = embed_operator(spin1::sz(), 0, build_register(1));
    Eigen::VectorXcd want(6);
    want << 1, 1, 0, 0, -1, -1;
    EXPECT_TRUE(m.isApprox(Eigen::MatrixXcd(want.asDiagonal())));
}

TEST(EmbedOperator, TraceIdentityAndOracleAgreement) {
    const SpinRegister reg = build_register(3);
    for (int slot = 0; slot < reg.slot_count(); ++slot) {
        const Eigen::MatrixXcd op = slot == 0 ? Eigen::MatrixXcd(spin1::sz() * spin1::sz() + spin1::sx())
                                              : Eigen::MatrixXcd(spin_half::sz() + 2.0 * spin_half::identity());
        const auto embedded = embed_operator(op, slot, reg);
        const double ratio = static_cast<double>(reg.dim()) / static_cast<double>(op.rows());
        EXPECT_NEAR(std::abs(embedded.trace() - op.trace() * ratio), 0.0, 1e-12) << "slot " << slot;
    }
    // Nucleus k sits in bit n-k of the nuclear index.
    const auto sz2 = embed_operator(spin_half::sz(), 2, reg);
    for (Eigen::Index i = 0; i < reg.dim(); ++i) {
        const int bit = static_cast<int>((i % 8) >> 1) & 1;
        EXPECT_DOUBLE_EQ(sz2(i, i).real(), bit ? -0.5 : 0.5);
    }
}

TEST(EmbedOperator, RejectsBadSlotsAndShapes) {
    const SpinRegister reg = build_register(2);
    EXPECT_THROW((void)embed_operator(spin1::sz(), 3, reg), std::out_of_range);
    EXPECT_THROW((void)embed_operator(spin1::sz(), 1, reg), std::invalid_argument);
    EXPECT_THROW((void)embed_operator(spin_half::sz(), 0, reg), std::invalid_argument);
}

TEST(SpinOperators, CommutationRelations) {
    const Eigen::Matrix3cd x = spin1::sx(), y = spin1::sy(), z = spin1::sz();
    const std::complex<double> i(0, 1);
    EXPECT_TRUE((x * y - y * x).isApprox(i * z));
    EXPECT_TRUE((x * x + y * y + z * z).isApprox(2.0 * Eigen::Matrix3cd::Identity()));
    const Eigen::Matrix2cd hx = spin_half::sx(), hy = spin_half::sy(), hz = spin_half::sz();
    EXPECT_TRUE((hx * hy - hy * hx).isApprox(i * hz));
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            EXPECT_EQ(x(r, c), oracle::spin1_element('x', r, c));
            EXPECT_EQ(y(r, c), oracle::spin1_element('y', r, c));
        }
    }
}

TEST(Hamiltonian, BareNvStrainEigenvalues) {
    const auto h = build_hamiltonian(ZfsParams(2870, 5), Eigen::Vector3d::Zero(), {}, 0, build_register(0));
    expect_values(sorted_eigenvalues(h), {0, 2865, 2875}, 1e-9);
}

TEST(Hamiltonian, SingleNucleusSplitting) {
    const auto sites = axial_sites({130});
    const auto h = build_hamiltonian(ZfsParams(2870, 0), Eigen::Vector3d::Zero(), sites, 1, build_register(1));
    expect_values(sorted_eigenvalues(h), {0, 0, 2805, 2805, 2935, 2935}, 1e-9);
    const auto h0 = build_hamiltonian(ZfsParams(2870, 0), Eigen::Vector3d::Zero(), sites, 0, build_register(1));
    expect_values(sorted_eigenvalues(h0), {0, 0, 2870, 2870, 2870, 2870}, 1e-9);
}

TEST(Hamiltonian, AxialZeeman) {
    const auto h = build_hamiltonian(ZfsParams(2870, 0), Eigen::Vector3d(0, 0, 28.025), {}, 0, build_register(0));
    expect_values(sorted_eigenvalues(h), {0, 2841.975, 2898.025}, 1e-9);
}

TEST(Hamiltonian, MatchesElementwiseOracle) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-40, 40);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = trial % 4;
        std::vector<Eigen::Vector3d> rows;
        std::vector<bool> occ;
        std::vector<HyperfineCoupling> sites;
        OccupancyMask mask = 0;
        for (int k = 0; k < n; ++k) {
            rows.emplace_back(u(rng), u(rng), 3 * u(rng));
            occ.push_back((trial + k) % 3 != 0);
            if (occ.back()) mask |= OccupancyMask{1} << k;
            sites.emplace_back("r" + std::to_string(k), rows.back());
        }
        const Eigen::Vector3d b(u(rng), u(rng), u(rng));
        const double e = u(rng) / 10;
        const auto h = build_hamiltonian(ZfsParams(2870, e), b, sites, mask, build_register(n));
        const auto want = oracle::hamiltonian(2870, e, b, rows, occ);
        EXPECT_LT(max_abs(h - want), 1e-12) << "trial " << trial;
    }
}

TEST(Hamiltonian, HermitianAndTraceOfElectronPart) {
    const auto sites = axial_sites({130, 13.7, 12.8});
    const Eigen::Vector3d b(3, -2, 17);
    const auto h = build_hamiltonian(ZfsParams(2870, 2), b, sites, all_occupied(3), build_register(3));
    EXPECT_LT(hermiticity_defect(h), 1e-12);
    const auto he = electron_hamiltonian(ZfsParams(2870, 2), b);
    EXPECT_NEAR(std::abs(h.trace() - he.trace() * 8.0), 0.0, 1e-9);
}

TEST(Hamiltonian, FullTensorReducesToRowWhenOnlyZRowSet) {
    Eigen::Matrix3d t = Eigen::Matrix3d::Zero();
    t.row(2) << 5, -3, 120;
    const std::vector<HyperfineCoupling> full{HyperfineCoupling("t", t)};
    const std::vector<HyperfineCoupling> row{HyperfineCoupling("t", Eigen::Vector3d(5, -3, 120))};
    const Eigen::Vector3d b(1, 2, 3);
    const auto reg = build_register(1);
    const auto a = build_hamiltonian(ZfsParams(2870, 1), b, full, 1, reg);
    const auto c = build_hamiltonian(ZfsParams(2870, 1), b, row, 1, reg);
    EXPECT_LT(max_abs(a - c), 1e-12);
}

TEST(Hamiltonian, NuclearZeemanAddsDiagonalTerm) {
    const auto sites = axial_sites({0.0});
    HamiltonianOptions opts;
    opts.nuclear_zeeman = true;
    const Eigen::Vector3d b(0, 0, 2802.5);
    const auto h = build_hamiltonian(ZfsParams(2870, 0), b, sites, 1, build_register(1), opts);
    const double nuc = opts.nuclear_gamma_ratio * b.z() * 0.5;
    // m_s = 0 block: nuclear Zeeman splits the two nuclear levels by gamma_n B.
    EXPECT_NEAR(h(2, 2).real(), -nuc, 1e-9);
    EXPECT_NEAR(h(3, 3).real(), nuc, 1e-9);
}

TEST(Hamiltonian, RejectsInvalidInput) {
    const auto sites = axial_sites({130, 10});
    EXPECT_THROW((void)build_hamiltonian(ZfsParams(2870, 0), Eigen::Vector3d::Zero(), sites, 3, build_register(1)),
                 std::invalid_argument);
    EXPECT_THROW((void)build_hamiltonian(ZfsParams(2870, 0), Eigen::Vector3d(NAN, 0, 0), {}, 0, build_register(0)),
                 std::invalid_argument);
    EXPECT_THROW(ZfsParams(std::numeric_limits<double>::infinity(), 0), std::invalid_argument);
}

TEST(Eigensystem, DiagonalInput) {
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(3, 3);
    h(0, 0) = 0;
    h(1, 1) = 2865;
    h(2, 2) = 2875;
    const Eigensystem eig = eigendecompose(h);
    expect_values({eig.values[0], eig.values[1], eig.values[2]}, {0, 2865, 2875}, 1e-12);
    EXPECT_TRUE(eig.vectors.cwiseAbs().isApprox(Eigen::MatrixXd::Identity(3, 3)));
}

TEST(Eigensystem, InvariantsOnRandomHamiltonians) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-30, 30);
    for (int n = 0; n <= 5; ++n) {
        std::vector<HyperfineCoupling> sites;
        for (int k = 0; k < n; ++k) sites.emplace_back("r", Eigen::Vector3d(u(rng), u(rng), 4 * u(rng)));
        const auto h = build_hamiltonian(ZfsParams(2870, u(rng) / 5), Eigen::Vector3d(u(rng), u(rng), u(rng)),
                                         sites, all_occupied(n), build_register(n));
        const Eigensystem eig = eigendecompose(h);
        EXPECT_LT(unitarity_defect(eig), 1e-8);
        EXPECT_LT(reconstruction_residual(h, eig), 1e-8);
        const double norm = std::max(1.0, max_abs(h));
        EXPECT_NEAR(eig.values.sum(), h.trace().real(), 1e-6 * norm);
        for (Eigen::Index i = 1; i < eig.dim(); ++i) EXPECT_LE(eig.values[i - 1], eig.values[i]);
    }
}

TEST(Eigensystem, DecouplingGivesBareValuesWithMultiplicity) {
    const auto sites = axial_sites({130, 20, 9});
    const Eigen::Vector3d b(4, 1, 9);
    const auto bare = sorted_eigenvalues(build_hamiltonian(ZfsParams(2870, 3), b, {}, 0, build_register(0)));
    const auto full = sorted_eigenvalues(build_hamiltonian(ZfsParams(2870, 3), b, sites, 0, build_register(3)));
    for (std::size_t i = 0; i < full.size(); ++i) EXPECT_NEAR(full[i], bare[i / 8], 1e-9);
}

TEST(Eigensystem, RejectsNonHermitian) {
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Identity(3, 3);
    h(0, 1) = 1.0;
    EXPECT_THROW((void)eigendecompose(h), std::invalid_argument);
    EXPECT_THROW((void)eigendecompose(Eigen::MatrixXcd::Zero(2, 3)), std::invalid_argument);
}

TEST(Transitions, BareNvDegenerateAndStrainSplit) {
    const auto reg = build_register(0);
    // At E = 0 the two lines coincide; their summed strength is basis independent.
    auto lines = extract_transitions(eigendecompose(build_hamiltonian(ZfsParams(2870, 0), Eigen::Vector3d::Zero(), {}, 0, reg)), reg);
    ASSERT_EQ(lines.size(), 1U);
    EXPECT_NEAR(lines[0].freq_mhz, 2870, 1e-9);
    EXPECT_NEAR(lines[0].weight, 1.0, 1e-12);

    lines = extract_transitions(eigendecompose(build_hamiltonian(ZfsParams(2870, 5), Eigen::Vector3d::Zero(), {}, 0, reg)), reg);
    ASSERT_EQ(lines.size(), 2U);
    EXPECT_NEAR(lines[0].freq_mhz, 2865, 1e-9);
    EXPECT_NEAR(lines[1].freq_mhz, 2875, 1e-9);
    EXPECT_NEAR(lines[0].weight, 0.5, 1e-12);
    EXPECT_NEAR(lines[1].weight, 0.5, 1e-12);
}

TEST(Transitions, ProjectionSumRuleMatchesBruteForce) {
    for (int n = 1; n <= 4; ++n) {
        const std::vector<double> a(static_cast<std::size_t>(n), 130.0);
        const auto sites = axial_sites(a);
        const auto reg = build_register(n);
        const auto lines = merge_lines(
            extract_transitions(eigendecompose(build_hamiltonian(ZfsParams(2870, 0), Eigen::Vector3d::Zero(), sites, all_occupied(n), reg)), reg),
            1e-6);
        const auto want = oracle::axial_line_tally(2870, a);
        ASSERT_EQ(lines.size(), want.size()) << "n=" << n;
        double total = 0;
        for (const auto& l : lines) total += l.weight;
        std::size_t i = 0;
        for (const auto& [f, w] : want) {
            EXPECT_NEAR(lines[i].freq_mhz, f, 1e-6);
            EXPECT_NEAR(lines[i].weight / total, w / static_cast<double>(1 << n), 1e-9);
            ++i;
        }
    }
}

TEST(Transitions, FirstShellFourLinesOneThreeThreeOne) {
    const auto sites = axial_sites({130, 130, 130});
    const auto reg = build_register(3);
    const auto lines = merge_lines(
        extract_transitions(eigendecompose(build_hamiltonian(ZfsParams(2870, 0), Eigen::Vector3d::Zero(), sites, 7, reg)), reg), 1e-6);
    ASSERT_EQ(lines.size(), 4U);
    const double want_f[] = {2675, 2805, 2935, 3065};
    const double want_w[] = {1, 3, 3, 1};
    for (int i = 0; i < 4; ++i) {
        EXPECT_NEAR(lines[i].freq_mhz, want_f[i], 1e-6);
        EXPECT_NEAR(lines[i].weight / lines[0].weight, want_w[i], 1e-9);
    }
}

TEST(Transitions, WeightFloorDropsNegligibleLines) {
    const auto reg = build_register(1);
    const auto sites = axial_sites({130});
    const auto lines = extract_transitions(
        eigendecompose(build_hamiltonian(ZfsParams(2870, 2), Eigen::Vector3d(0.5, 0, 40), sites, 1, reg)), reg);
    double wmax = 0;
    for (const auto& l : lines) wmax = std::max(wmax, l.weight);
    for (const auto& l : lines) {
        EXPECT_GE(l.weight, kWeightFloor * wmax);
        EXPECT_GT(l.freq_mhz, 0.0);
    }
}

TEST(Factorized, BareNvIdenticalToExact) {
    const auto reg = build_register(0);
    for (const double e : {0.0, 5.0}) {
        const Eigen::Vector3d b(3, 4, 20);
        auto exact = merge_lines(extract_transitions(eigendecompose(build_hamiltonian(ZfsParams(2870, e), b, {}, 0, reg)), reg), 1e-9);
        auto fact = merge_lines(factorized_transitions(ZfsParams(2870, e), b, {}, 0), 1e-9);
        ASSERT_EQ(exact.size(), fact.size());
        for (std::size_t i = 0; i < exact.size(); ++i) {
            EXPECT_NEAR(exact[i].freq_mhz, fact[i].freq_mhz, 1e-9);
            EXPECT_NEAR(exact[i].weight, fact[i].weight, 1e-9);
        }
    }
}

TEST(Factorized, MatchesExactOnAxialExamples) {
    struct Case {
        std::vector<double> a;
        Eigen::Vector3d b;
    };
    const std::vector<Case> cases{{{130, 130, 130}, Eigen::Vector3d::Zero()}, {{130}, Eigen::Vector3d(0, 0, 28.025)}};
    for (const auto& c : cases) {
        const int n = static_cast<int>(c.a.size());
        const auto sites = axial_sites(c.a);
        const auto reg = build_register(n);
        auto exact = merge_lines(
            extract_transitions(eigendecompose(build_hamiltonian(ZfsParams(2870, 0), c.b, sites, all_occupied(n), reg)), reg), 1e-6);
        auto fact = merge_lines(factorized_transitions(ZfsParams(2870, 0), c.b, sites, all_occupied(n)), 1e-6);
        ASSERT_EQ(exact.size(), fact.size());
        for (std::size_t i = 0; i < exact.size(); ++i) {
            EXPECT_NEAR(exact[i].freq_mhz, fact[i].freq_mhz, 1e-6);
            EXPECT_NEAR(exact[i].weight / fact[i].weight, 1.0, 1e-6);
        }
    }
}

TEST(Factorized, RandomizedEquivalenceWithRowCouplings) {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = trial % 5;
        std::vector<HyperfineCoupling> sites;
        for (int k = 0; k < n; ++k) sites.emplace_back("r", Eigen::Vector3d(20 * u(rng), 20 * u(rng), 150 * u(rng)));
        const OccupancyMask occ = static_cast<OccupancyMask>(rng()) & all_occupied(n);
        const Eigen::Vector3d b(0, 0, 100 * u(rng));
        const ZfsParams zfs(2870, 0);
        const auto reg = build_register(n);
        auto exact = merge_lines(extract_transitions(eigendecompose(build_hamiltonian(zfs, b, sites, occ, reg)), reg), 1e-7);
        auto fact = merge_lines(factorized_transitions(zfs, b, sites, occ), 1e-7);
        ASSERT_EQ(exact.size(), fact.size()) << "trial " << trial;
        for (std::size_t i = 0; i < exact.size(); ++i) {
            EXPECT_NEAR(exact[i].freq_mhz, fact[i].freq_mhz, 1e-6);
            EXPECT_NEAR(exact[i].weight / fact[i].weight, 1.0, 1e-6);
        }
    }
}

TEST(MergeLines, CombinesWithinToleranceAndSorts) {
    const auto merged = merge_lines({{3000, 1}, {2000, 2}, {2000.5e0, 2}, {3000 + 1e-9, 3}}, 1e-6);
    ASSERT_EQ(merged.size(), 3U);
    EXPECT_DOUBLE_EQ(merged[0].freq_mhz, 2000);
    EXPECT_DOUBLE_EQ(merged[2].weight, 4);
    EXPECT_NEAR(merged[2].freq_mhz, 3000 + 0.75e-9, 1e-12);
}
