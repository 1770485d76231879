#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "archive.hpp"
#include "norms.hpp"

namespace yudo {

/// Optional time-dependent forcing; must be zero-mean at every time.
using Forcing = std::function<ScalarField(double)>;

struct SimulationConfig {
    double nu = 0.0;        // viscosity, >= 0
    double dt = 1e-3;       // advective step; diffusion is exact
    double t_end = 1.0;
    Forcing forcing;        // null = unforced
    bool dealias = true;
    int snapshot_stride = 1;
    double cfl_limit = 0.5;
};

struct TrajectorySnapshot {
    long step = 0;
    double time = 0.0;
    ScalarField omega;
    double energy = 0.0;
    double enstrophy = 0.0;
    double palinstrophy = 0.0;
    double max_abs = 0.0;
};

struct Trajectory {
    GridSpec grid;
    double nu = 0.0;
    double dt = 0.0;
    bool forced = false;
    double omega_infty_bound = 0.0;   // |w(0)|_inf plus the integrated forcing bound
    double max_observed_linf = 0.0;   // running max over snapshots of |w(t)|_inf
    std::vector<TrajectorySnapshot> snapshots;

    const TrajectorySnapshot& front() const { return snapshots.front(); }
    const TrajectorySnapshot& back() const { return snapshots.back(); }

    const TrajectorySnapshot& at_time(double t) const {
        for (const auto& s : snapshots)
            if (std::fabs(s.time - t) <= 1e-9 * std::max(1.0, std::fabs(t))) return s;
        throw std::out_of_range("Trajectory: no snapshot at t = " + std::to_string(t));
    }
};

/// Called at every stored snapshot with the spectral state.
using StepObserver = std::function<void(long step, double time, const SpectralField& w)>;

namespace detail {

/// Shared stepping core: integrating-factor RK4. Diffusion is applied
/// exactly through exp(-nu |k|^2 dt) factors; the advection (plus forcing)
/// part is advanced explicitly, with the advective product dealiased.
class VorticityStepper {
  public:
    /// Fills (u1, u2) with the advecting velocity for state w at time t.
    using VelocitySource = std::function<void(const SpectralField& w, double t, ScalarField& u1,
                                              ScalarField& u2)>;

    VorticityStepper(const GridSpec& grid, const SimulationConfig& cfg, VelocitySource vel)
        : grid_(grid),
          cfg_(cfg),
          vel_(std::move(vel)),
          u1_(grid),
          u2_(grid),
          w1_(grid),
          w2_(grid),
          adv_(grid) {
        const int n = grid.n, nc = n / 2 + 1;
        half_factor_.resize(static_cast<size_t>(n) * nc);
        for (int r = 0; r < n; ++r) {
            const int k1 = r < n / 2 ? r : r - n;
            for (int c = 0; c < nc; ++c) {
                const double ksq = double(k1) * k1 + double(c) * c;
                half_factor_[static_cast<size_t>(r) * nc + c] = std::exp(-cfg.nu * ksq * 0.5 * cfg.dt);
            }
        }
    }

    double last_max_speed() const { return max_speed_; }

    /// out = -P(u . grad w) + g_hat(t); records max |u| of the first stage.
    void nonlinear(const SpectralField& w, double t, bool record_speed, SpectralField& out) {
        vel_(w, t, u1_, u2_);
        if (record_speed) {
            double m2 = 0.0;
            for (size_t i = 0; i < u1_.values.size(); ++i) {
                const double s2 = u1_.values[i] * u1_.values[i] + u2_.values[i] * u2_.values[i];
                if (s2 > m2) m2 = s2;
            }
            max_speed_ = std::sqrt(m2);
        }
        gradient_spectral(w, d1_, d2_);
        auto& fft = SpectralTransform::local(grid_.n);
        fft.inverse(d1_.coeff.data(), w1_.values.data());
        fft.inverse(d2_.coeff.data(), w2_.values.data());
        for (size_t i = 0; i < adv_.values.size(); ++i)
            adv_.values[i] = u1_.values[i] * w1_.values[i] + u2_.values[i] * w2_.values[i];
        if (out.grid != grid_) out = SpectralField(grid_);
        fft.forward(adv_.values.data(), out.coeff.data());
        if (cfg_.dealias) dealias_spectral(out);
        for (auto& c : out.coeff) c = -c;
        if (cfg_.forcing) {
            ScalarField g = cfg_.forcing(t);
            require_zero_mean(g, "forcing");
            SpectralField gh = to_spectral(g);
            for (size_t i = 0; i < out.coeff.size(); ++i) out.coeff[i] += gh.coeff[i];
        }
    }

    /// One integrating-factor RK4 step from time t.
    void step(SpectralField& w, double t) {
        const double dt = cfg_.dt;
        nonlinear(w, t, true, k1_);
        stage_ = w;
        axpy(stage_, 0.5 * dt, k1_);
        scale_half(stage_);
        nonlinear(stage_, t + 0.5 * dt, false, k2_);
        stage_ = w;
        scale_half(stage_);
        axpy(stage_, 0.5 * dt, k2_);
        nonlinear(stage_, t + 0.5 * dt, false, k3_);
        stage_ = w;
        scale_half(stage_);
        scale_half(stage_);
        tmp_ = k3_;
        scale_half(tmp_);
        axpy(stage_, dt, tmp_);
        nonlinear(stage_, t + dt, false, k4_);
        // w <- E^2 (w + dt/6 k1) + dt/6 (2 E (k2 + k3) + k4)
        axpy(w, dt / 6.0, k1_);
        scale_half(w);
        scale_half(w);
        tmp_ = k2_;
        for (size_t i = 0; i < tmp_.coeff.size(); ++i) tmp_.coeff[i] += k3_.coeff[i];
        scale_half(tmp_);
        axpy(w, dt / 3.0, tmp_);
        axpy(w, dt / 6.0, k4_);
    }

  private:
    void scale_half(SpectralField& f) const {
        for (size_t i = 0; i < f.coeff.size(); ++i) f.coeff[i] *= half_factor_[i];
    }
    static void axpy(SpectralField& y, double a, const SpectralField& x) {
        for (size_t i = 0; i < y.coeff.size(); ++i) y.coeff[i] += a * x.coeff[i];
    }

    GridSpec grid_;
    SimulationConfig cfg_;
    VelocitySource vel_;
    ScalarField u1_, u2_, w1_, w2_, adv_;
    SpectralField d1_, d2_, k1_, k2_, k3_, k4_, stage_, tmp_;
    std::vector<double> half_factor_;
    double max_speed_ = 0.0;
};

inline bool finite_state(const SpectralField& w) {
    double s = 0.0;
    for (const auto& c : w.coeff) s += std::norm(c);
    return std::isfinite(s);
}

/// Adjusts dt so t_end is a whole number of steps.
inline SimulationConfig rounded_config(const SimulationConfig& cfg) {
    if (cfg.dt <= 0.0 || cfg.t_end <= 0.0)
        throw std::invalid_argument("SimulationConfig: dt and t_end must be positive");
    if (cfg.snapshot_stride < 1)
        throw std::invalid_argument("SimulationConfig: snapshot_stride must be >= 1");
    SimulationConfig r = cfg;
    const long steps = std::max<long>(1, std::llround(cfg.t_end / cfg.dt));
    r.dt = cfg.t_end / static_cast<double>(steps);
    return r;
}

/// Runs the stepper over [0, t_end], invoking the observer at stride
/// boundaries and at the endpoints. cfg must already be rounded.
inline void run_steps(SpectralField& w, const SimulationConfig& cfg, VorticityStepper& stepper,
                      const StepObserver& observe) {
    const long steps = std::max<long>(1, std::llround(cfg.t_end / cfg.dt));
    if (observe) observe(0, 0.0, w);
    const double dx = w.grid.spacing();
    for (long s = 0; s < steps; ++s) {
        const double t = cfg.dt * static_cast<double>(s);
        stepper.step(w, t);
        const double cfl = cfg.dt * stepper.last_max_speed() / dx;
        if (cfl > cfg.cfl_limit) throw CflViolation(s, cfl);
        if (!finite_state(w)) throw NanDetected(s);
        const long done = s + 1;
        if (observe && (done % cfg.snapshot_stride == 0 || done == steps))
            observe(done, cfg.dt * static_cast<double>(done), w);
    }
}

inline TrajectorySnapshot make_snapshot(long step, double time, const SpectralField& w) {
    TrajectorySnapshot snap;
    snap.step = step;
    snap.time = time;
    snap.omega = to_physical(w);
    snap.energy = energy_from_vorticity(w);
    snap.enstrophy = enstrophy(w);
    snap.palinstrophy = palinstrophy(w);
    snap.max_abs = snap.omega.max_abs();
    return snap;
}

}  // namespace detail

/// Right-hand side -u.grad(omega) + nu Lap(omega) + g with u = biot_savart(omega).
inline ScalarField rhs(const ScalarField& omega, double nu, const ScalarField* g = nullptr) {
    require_zero_mean(omega, "rhs");
    SpectralField w = to_spectral(omega), u1h, u2h, d1, d2;
    biot_savart_spectral(w, u1h, u2h);
    gradient_spectral(w, d1, d2);
    const ScalarField u1 = to_physical(u1h), u2 = to_physical(u2h);
    const ScalarField w1 = to_physical(d1), w2 = to_physical(d2);
    ScalarField adv(omega.grid);
    for (size_t i = 0; i < adv.values.size(); ++i)
        adv.values[i] = u1.values[i] * w1.values[i] + u2.values[i] * w2.values[i];
    SpectralField advh = to_spectral(adv);
    dealias_spectral(advh);
    laplacian_spectral(w);
    for (size_t i = 0; i < advh.coeff.size(); ++i) advh.coeff[i] = -advh.coeff[i] + nu * w.coeff[i];
    ScalarField out = to_physical(advh);
    if (g) {
        require_zero_mean(*g, "rhs forcing");
        out += *g;
    }
    return out;
}

/// Integrates the vorticity equation (Euler for nu = 0, otherwise
/// Navier-Stokes) from omega0 and records snapshots every snapshot_stride
/// steps. The observer variant skips snapshot storage entirely.
inline void evolve_observed(const ScalarField& omega0, const SimulationConfig& config,
                            const StepObserver& observe) {
    require_zero_mean(omega0, "evolve");
    if (!std::isfinite(omega0.max_abs())) throw NanDetected(-1);
    const SimulationConfig cfg = detail::rounded_config(config);
    detail::VorticityStepper stepper(
        omega0.grid, cfg,
        [u1h = SpectralField(), u2h = SpectralField()](const SpectralField& w, double,
                                                       ScalarField& u1, ScalarField& u2) mutable {
            biot_savart_spectral(w, u1h, u2h);
            auto& fft = SpectralTransform::local(w.grid.n);
            fft.inverse(u1h.coeff.data(), u1.values.data());
            fft.inverse(u2h.coeff.data(), u2.values.data());
        });
    SpectralField w = to_spectral(omega0);
    detail::run_steps(w, cfg, stepper, observe);
}

inline Trajectory evolve(const ScalarField& omega0, const SimulationConfig& cfg) {
    Trajectory traj;
    traj.grid = omega0.grid;
    traj.nu = cfg.nu;
    traj.forced = static_cast<bool>(cfg.forcing);
    traj.dt = cfg.dt;
    double forcing_bound = 0.0;
    if (cfg.forcing) {
        const long steps = std::max<long>(1, std::llround(cfg.t_end / cfg.dt));
        const double dt = cfg.t_end / static_cast<double>(steps);
        for (long s = 0; s < steps; ++s) forcing_bound += dt * cfg.forcing(dt * s).max_abs();
    }
    traj.omega_infty_bound = omega0.max_abs() + forcing_bound;
    evolve_observed(omega0, cfg, [&](long step, double time, const SpectralField& w) {
        traj.snapshots.push_back(detail::make_snapshot(step, time, w));
        traj.max_observed_linf = std::max(traj.max_observed_linf, traj.snapshots.back().max_abs);
    });
    return traj;
}

/// Passive scalar advected-diffused by an archived velocity; theta need not
/// have zero mean. For nu = 0 and g = 0 all Lebesgue norms of theta are
/// conserved up to discretization error.
inline Trajectory transport_linear(const ScalarField& theta0, const VelocityArchive& archive,
                                   const SimulationConfig& config) {
    if (archive.grid() != theta0.grid)
        throw std::invalid_argument("transport_linear: archive grid mismatch");
    const SimulationConfig cfg = detail::rounded_config(config);
    archive.require_coverage(0.0, cfg.t_end, "transport_linear");
    const double needed = cfg.dt * cfg.snapshot_stride;
    if (archive.count() > 1 && archive.declared_max_gap() > needed * (1.0 + 1e-9))
        throw CoverageGap("transport_linear: archive stride " +
                          std::to_string(archive.declared_max_gap()) + " exceeds dt*stride = " +
                          std::to_string(needed));
    Trajectory traj;
    traj.grid = theta0.grid;
    traj.nu = cfg.nu;
    traj.forced = static_cast<bool>(cfg.forcing);
    traj.dt = cfg.dt;
    traj.omega_infty_bound = theta0.max_abs();
    detail::VorticityStepper stepper(
        theta0.grid, cfg,
        [&archive, u = VectorField()](const SpectralField&, double t, ScalarField& u1,
                                      ScalarField& u2) mutable {
            archive.velocity_field(t, u);
            u1 = u.x;
            u2 = u.y;
        });
    SpectralField w = to_spectral(theta0);
    detail::run_steps(w, cfg, stepper, [&](long step, double time, const SpectralField& ws) {
        traj.snapshots.push_back(detail::make_snapshot(step, time, ws));
        traj.max_observed_linf = std::max(traj.max_observed_linf, traj.snapshots.back().max_abs);
    });
    return traj;
}

/// Builds a velocity archive from trajectory snapshots via Biot-Savart.
inline VelocityArchive archive_from_trajectory(const Trajectory& traj) {
    double gap = 0.0;
    for (size_t i = 1; i < traj.snapshots.size(); ++i)
        gap = std::max(gap, traj.snapshots[i].time - traj.snapshots[i - 1].time);
    VelocityArchive arch(traj.grid, gap > 0 ? gap : 1.0, traj.forced);
    for (const auto& s : traj.snapshots) {
        SpectralField w = to_spectral(s.omega), u1h, u2h;
        biot_savart_spectral(w, u1h, u2h);
        VectorField u(traj.grid);
        u.x = to_physical(u1h);
        u.y = to_physical(u2h);
        arch.push(s.time, std::move(u));
    }
    return arch;
}

/// Time-varying Lebesgue exponent schedule p(t) = beta p0 / (beta + 2 p0 t),
/// evaluated until p reaches 1 at t* = beta (p0 - 1) / (2 p0).
struct TrackedNorms {
    std::vector<std::pair<double, double>> values;  // (t, |theta(t)|_{2 p(t)})
    double t_star = 0.0;
};

inline TrackedNorms ptracked_norm(const Trajectory& traj, double p0, double beta) {
    if (p0 <= 1.0) throw std::invalid_argument("ptracked_norm: p0 must exceed 1");
    if (beta <= 0.0) throw std::invalid_argument("ptracked_norm: beta must be positive");
    TrackedNorms out;
    out.t_star = beta * (p0 - 1.0) / (2.0 * p0);
    for (const auto& s : traj.snapshots) {
        if (s.time > out.t_star * (1.0 + 1e-12)) break;
        const double p = beta * p0 / (beta + 2.0 * p0 * s.time);
        out.values.emplace_back(s.time, lp_norm(s.omega, 2.0 * p));
    }
    return out;
}

}  // namespace yudo
