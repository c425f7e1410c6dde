#include "nvodmr/transitions.hpp"

#include "nvodmr/spin_operators.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nvodmr {

namespace {

// Initial states with less m_s = 0 weight than this cannot carry a line.
constexpr double kPopulationCutoff = 1e-14;

// Shift-distribution keys closer than this (MHz) are the same block energy.
constexpr double kShiftMergeTol = 1e-9;

// Lines closer than this (MHz) are one line split across a degenerate
// eigenbasis; they are combined before the weight floor applies.
constexpr double kDegenerateLineTol = 1e-8;

void apply_weight_floor(std::vector<TransitionLine>& lines) {
    if (lines.empty()) return;
    lines = merge_lines(std::move(lines), kDegenerateLineTol);
    double max_w = 0.0;
    for (const auto& l : lines) max_w = std::max(max_w, l.weight);
    const double floor = kWeightFloor * max_w;
    std::erase_if(lines, [floor](const TransitionLine& l) { return !(l.weight >= floor) || l.weight <= 0.0; });
}

struct ShiftWeight {
    double h;
    double multiplicity;
};

std::vector<ShiftWeight> hyperfine_shift_distribution(std::span<const HyperfineCoupling> couplings,
                                                      OccupancyMask occupancy) {
    std::vector<ShiftWeight> dist{{0.0, 1.0}};
    std::vector<ShiftWeight> next;
    for (std::size_t n = 0; n < couplings.size(); ++n) {
        if (!is_occupied(occupancy, static_cast<int>(n))) {
            for (auto& s : dist) s.multiplicity *= 2.0;
            continue;
        }
        const double half = 0.5 * couplings[n].magnitude();
        next.clear();
        next.reserve(2 * dist.size());
        for (const auto& s : dist) {
            next.push_back({s.h - half, s.multiplicity});
            next.push_back({s.h + half, s.multiplicity});
        }
        std::sort(next.begin(), next.end(),
                  [](const ShiftWeight& a, const ShiftWeight& b) { return a.h < b.h; });
        dist.clear();
        for (const auto& s : next) {
            if (!dist.empty() && s.h - dist.back().h <= kShiftMergeTol) {
                dist.back().multiplicity += s.multiplicity;
            } else {
                dist.push_back(s);
            }
        }
    }
    return dist;
}

}  // namespace

std::vector<TransitionLine> extract_transitions(const Eigensystem& eig, const SpinRegister& reg) {
    if (eig.dim() != reg.dim() || eig.vectors.rows() != reg.dim() ||
        eig.vectors.cols() != reg.dim()) {
        throw std::invalid_argument("eigensystem dimension does not match the spin register");
    }
    const Eigen::Index nd = reg.nuclear_dim();
    const Eigen::Index dim = reg.dim();
    const Eigen::MatrixXcd& v = eig.vectors;

    std::vector<Eigen::Index> sources;
    std::vector<double> pops;
    for (Eigen::Index i = 0; i < dim; ++i) {
        const double pop = v.block(kMsZeroIndex * nd, i, nd, 1).squaredNorm();
        if (pop > kPopulationCutoff) {
            sources.push_back(i);
            pops.push_back(pop);
        }
    }

    // S_+ and S_- applied to the source columns; each is a single shifted
    // copy of one m_s block scaled by sqrt(2).
    const double r2 = std::sqrt(2.0);
    const auto ns = static_cast<Eigen::Index>(sources.size());
    Eigen::MatrixXcd raised = Eigen::MatrixXcd::Zero(dim, ns);
    Eigen::MatrixXcd lowered = Eigen::MatrixXcd::Zero(dim, ns);
    for (Eigen::Index c = 0; c < ns; ++c) {
        const auto col = v.col(sources[static_cast<std::size_t>(c)]);
        raised.block(0, c, nd, 1) = r2 * col.segment(nd, nd);
        raised.block(nd, c, nd, 1) = r2 * col.segment(2 * nd, nd);
        lowered.block(nd, c, nd, 1) = r2 * col.segment(0, nd);
        lowered.block(2 * nd, c, nd, 1) = r2 * col.segment(nd, nd);
    }
    const Eigen::MatrixXcd up = v.adjoint() * raised;
    const Eigen::MatrixXcd down = v.adjoint() * lowered;

    std::vector<TransitionLine> lines;
    for (Eigen::Index c = 0; c < ns; ++c) {
        const Eigen::Index i = sources[static_cast<std::size_t>(c)];
        const double pop = pops[static_cast<std::size_t>(c)];
        for (Eigen::Index j = i + 1; j < dim; ++j) {
            const double freq = eig.values(j) - eig.values(i);
            if (!(freq > 0.0)) continue;
            const double w = 0.25 * pop * (std::norm(up(j, c)) + std::norm(down(j, c)));
            if (w > 0.0) lines.push_back({freq, w});
        }
    }
    apply_weight_floor(lines);
    return lines;
}

std::vector<TransitionLine> factorized_transitions(const ZfsParams& zfs,
                                                   const Eigen::Vector3d& b_nv_mhz,
                                                   std::span<const HyperfineCoupling> couplings,
                                                   OccupancyMask occupancy) {
    if (couplings.size() > static_cast<std::size_t>(kMaxOccupancyBits)) {
        throw std::invalid_argument("too many couplings for an occupancy mask");
    }
    const Eigen::Matrix3cd he = electron_hamiltonian(zfs, b_nv_mhz);
    const Eigen::Matrix3cd sz = spin1::sz();
    const Eigen::Matrix3cd sx = spin1::sx();
    const Eigen::Matrix3cd sy = spin1::sy();

    std::vector<TransitionLine> lines;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> solver;
    for (const auto& [h, multiplicity] : hyperfine_shift_distribution(couplings, occupancy)) {
        solver.compute(he + h * sz);
        const Eigen::Vector3d& values = solver.eigenvalues();
        const Eigen::Matrix3cd& v = solver.eigenvectors();
        const Eigen::Matrix3cd ex = v.adjoint() * sx * v;
        const Eigen::Matrix3cd ey = v.adjoint() * sy * v;
        for (Eigen::Index i = 0; i < 3; ++i) {
            const double pop = std::norm(v(kMsZeroIndex, i));
            if (pop <= kPopulationCutoff) continue;
            for (Eigen::Index j = i + 1; j < 3; ++j) {
                const double freq = values(j) - values(i);
                if (!(freq > 0.0)) continue;
                const double w =
                    0.5 * multiplicity * pop * (std::norm(ex(j, i)) + std::norm(ey(j, i)));
                if (w > 0.0) lines.push_back({freq, w});
            }
        }
    }
    apply_weight_floor(lines);
    return lines;
}

std::vector<TransitionLine> merge_lines(std::vector<TransitionLine> lines, double tol_mhz) {
    std::sort(lines.begin(), lines.end(),
              [](const TransitionLine& a, const TransitionLine& b) { return a.freq_mhz < b.freq_mhz; });
    std::vector<TransitionLine> merged;
    double last_freq = 0.0;
    double moment = 0.0;
    for (const auto& l : lines) {
        if (!merged.empty() && l.freq_mhz - last_freq <= tol_mhz) {
            auto& m = merged.back();
            m.weight += l.weight;
            moment += l.weight * l.freq_mhz;
            if (m.weight > 0.0) m.freq_mhz = moment / m.weight;
        } else {
            merged.push_back(l);
            moment = l.weight * l.freq_mhz;
        }
        last_freq = l.freq_mhz;
    }
    return merged;
}

}  // namespace nvodmr
