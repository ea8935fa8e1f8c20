#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "fft.hpp"

namespace osg {

namespace {

constexpr double kPi = std::numbers::pi;

void require(bool ok, const std::string& msg) {
    if (!ok) throw ContractError(msg);
}

} // namespace

GridPacket::GridPacket(double x_min, double x_max, std::size_t n)
    : x_min_(x_min), x_max_(x_max), samples_(n, Complex(0.0, 0.0)) {
    require(x_max > x_min, "GridPacket: empty interval");
    require(is_power_of_two(n), "GridPacket: sample count must be a power of two");
}

GridPacket GridPacket::sample_gaussian(const GaussianPacket& packet, double x_min, double x_max,
                                       std::size_t n) {
    GridPacket g(x_min, x_max, n);
    const double norm = std::pow(2.0 * kPi * packet.sigma_x * packet.sigma_x, -0.25);
    for (std::size_t j = 0; j < n; ++j) {
        const double x = g.x_at(j);
        const double u = (x - packet.x0) / (2.0 * packet.sigma_x);
        g.samples_[j] = std::polar(norm * std::exp(-u * u), packet.p0 * x / packet.hbar);
    }
    const double nsq = g.norm_sq();
    if (std::abs(nsq - 1.0) > 1e-10) {
        std::ostringstream os;
        os << "GridPacket: sampled Gaussian norm deviates by " << std::abs(nsq - 1.0)
           << " (grid too coarse or bounds too tight)";
        throw ContractError(os.str());
    }
    return g;
}

double GridPacket::norm_sq() const {
    double s = 0.0;
    for (const Complex& z : samples_) s += std::norm(z);
    return s * dx();
}

double GridPacket::mean_position() const {
    double num = 0.0, den = 0.0;
    for (std::size_t j = 0; j < samples_.size(); ++j) {
        const double w = std::norm(samples_[j]);
        num += w * x_at(j);
        den += w;
    }
    return num / den;
}

double GridPacket::mean_momentum(double hbar) const {
    std::vector<Complex> spec = samples_;
    fft_inplace(spec, false);
    const std::size_t n = spec.size();
    const double dp = 2.0 * kPi * hbar / (x_max_ - x_min_);
    double num = 0.0, den = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double k_signed = (k < n / 2) ? double(k) : double(k) - double(n);
        const double w = std::norm(spec[k]);
        num += w * k_signed * dp;
        den += w;
    }
    return num / den;
}

bool GridPacket::same_grid(const GridPacket& other) const {
    return x_min_ == other.x_min_ && x_max_ == other.x_max_ && size() == other.size();
}

Complex quadrature_overlap(const GridPacket& a, const GridPacket& b) {
    require(a.same_grid(b), "quadrature_overlap: mismatched grids");
    Complex s = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) s += std::conj(a.samples()[j]) * b.samples()[j];
    return s * a.dx();
}

GridPacket apply_branch_unitary(const GridPacket& packet, const PhaseSpaceDisplacement& disp,
                                double hbar) {
    // exp[-i s(x + beta p)] = e^{i hbar s^2 beta / 2} e^{-i s x} e^{-i s beta p}
    // with s = -dp/hbar and hbar s beta = dx, so the factorization scalar is
    // exp[-i dp dx / (2 hbar)]. The spectral step realizes the translation
    // by dx; the pointwise step realizes the momentum kick dp.
    GridPacket out = packet;
    const double span = packet.x_max() - packet.x_min();

    // Guard: the displaced packet must stay well inside the periodic window.
    const double center = packet.mean_position() + disp.dx;
    const double margin = 0.05 * span;
    if (center < packet.x_min() + margin || center > packet.x_max() - margin) {
        std::ostringstream os;
        os << "apply_branch_unitary: displaced packet center " << center
           << " escapes grid [" << packet.x_min() << ", " << packet.x_max() << ")";
        throw TruncationError(os.str());
    }

    if (disp.dx != 0.0) {
        std::vector<Complex>& s = out.samples();
        fft_inplace(s, false);
        const std::size_t n = s.size();
        for (std::size_t k = 0; k < n; ++k) {
            const double k_signed = (k < n / 2) ? double(k) : double(k) - double(n);
            // translation by dx: psi(x) -> psi(x - dx)
            s[k] *= std::polar(1.0, -2.0 * kPi * k_signed * disp.dx / span);
        }
        fft_inplace(s, true);
    }

    const double kick = disp.dp / hbar;
    const double scalar = disp.phase - disp.dp * disp.dx / (2.0 * hbar);
    for (std::size_t j = 0; j < out.size(); ++j)
        out.samples()[j] *= std::polar(1.0, kick * out.x_at(j) + scalar);
    return out;
}

double BranchState::total_norm() const {
    double s = 0.0;
    for (const Branch& b : branches)
        s += std::norm(b.amplitude) * b.packet1.norm_sq() * b.packet2.norm_sq();
    return s;
}

namespace {

struct AtomGrids {
    GridPacket initial;
    GridPacket plus;    // packet after the u = +1 branch unitary
    GridPacket minus;   // packet after the u = -1 branch unitary
};

AtomGrids evolve_atom(const PhysicalParams& params, double x0, double sigma,
                      const PhaseSpaceDisplacement& d_plus,
                      const PhaseSpaceDisplacement& d_minus, const GridSpec& grid) {
    const double lo = std::min({x0, x0 + d_plus.dx, x0 + d_minus.dx}) - grid.span_sigma * sigma;
    const double hi = std::max({x0, x0 + d_plus.dx, x0 + d_minus.dx}) + grid.span_sigma * sigma;
    GaussianPacket packet{x0, 0.0, sigma, params.hbar};
    GridPacket g0 = GridPacket::sample_gaussian(packet, lo, hi, grid.n);
    GridPacket gp = apply_branch_unitary(g0, d_plus, params.hbar);
    GridPacket gm = apply_branch_unitary(g0, d_minus, params.hbar);
    return AtomGrids{std::move(g0), std::move(gp), std::move(gm)};
}

GridPacket half_sum(const GridPacket& a, const GridPacket& b, double sign) {
    GridPacket out = a;
    for (std::size_t j = 0; j < out.size(); ++j)
        out.samples()[j] = 0.5 * (a.samples()[j] + sign * b.samples()[j]);
    return out;
}

} // namespace

BranchState build_full_state(const PhysicalParams& params, InitialState initial,
                             const GridSpec& grid) {
    params.validate();
    const AtomGrids a1 = evolve_atom(params, params.x1, params.sigma_x1,
                                     branch_displacement_atom1(params, +1),
                                     branch_displacement_atom1(params, -1), grid);
    const AtomGrids a2 = evolve_atom(params, params.x2, params.sigma_x2,
                                     branch_displacement_atom2(params, +1),
                                     branch_displacement_atom2(params, -1), grid);

    // |S+-> = (|phi+> +- |phi->)/2 per atom.
    GridPacket s1_plus = half_sum(a1.plus, a1.minus, +1.0);
    GridPacket s1_minus = half_sum(a1.plus, a1.minus, -1.0);
    GridPacket s2_plus = half_sum(a2.plus, a2.minus, +1.0);
    GridPacket s2_minus = half_sum(a2.plus, a2.minus, -1.0);

    BranchState state;
    if (initial == InitialState::GG1) {
        // |g g 1>: atom 1 splits |g,1> = (|+> + |->)/sqrt2; the photon branch
        // then feeds atom 2 while the |e1,0> branch leaves atom 2 dark.
        state.branches.push_back(
            Branch{AtomLabel::Excited, AtomLabel::Ground, 0, 1.0, s1_minus, a2.initial});
        state.branches.push_back(
            Branch{AtomLabel::Ground, AtomLabel::Excited, 0, 1.0, s1_plus, s2_minus});
        state.branches.push_back(
            Branch{AtomLabel::Ground, AtomLabel::Ground, 1, 1.0, s1_plus, s2_plus});
    } else {
        // |e g 0>: atom 1 enters as |e,0> = (|+> - |->)/sqrt2, which swaps the
        // roles of S+ and S- relative to the one-photon case.
        state.branches.push_back(
            Branch{AtomLabel::Excited, AtomLabel::Ground, 0, 1.0, s1_plus, a2.initial});
        state.branches.push_back(
            Branch{AtomLabel::Ground, AtomLabel::Excited, 0, 1.0, s1_minus, s2_minus});
        state.branches.push_back(
            Branch{AtomLabel::Ground, AtomLabel::Ground, 1, 1.0, s1_minus, s2_plus});
    }

    const double norm = state.total_norm();
    if (std::abs(norm - 1.0) > 1e-8) {
        std::ostringstream os;
        os << "build_full_state: branch norms sum to " << norm << " instead of 1";
        throw TruncationError(os.str());
    }
    return state;
}

TwoQubitDensityMatrix reduce_to_internal(const BranchState& state) {
    ComplexMatrix rho(4, 4);
    auto basis_index = [](const Branch& b) {
        const std::size_t i1 = (b.atom1 == AtomLabel::Excited) ? 0 : 1;
        const std::size_t i2 = (b.atom2 == AtomLabel::Excited) ? 0 : 1;
        return 2 * i1 + i2;
    };
    for (const Branch& bi : state.branches) {
        for (const Branch& bj : state.branches) {
            if (bi.photons != bj.photons) continue;
            const Complex w = bi.amplitude * std::conj(bj.amplitude) *
                              quadrature_overlap(bj.packet1, bi.packet1) *
                              quadrature_overlap(bj.packet2, bi.packet2);
            rho.at(basis_index(bi), basis_index(bj)) += w;
        }
    }
    TwoQubitDensityMatrix::Tolerances tol;
    tol.hermiticity = 1e-8;
    tol.trace = 1e-6;   // bounded by the quadrature error budget
    tol.psd = 1e-6;
    return TwoQubitDensityMatrix::make(rho, tol);
}

} // namespace osg
