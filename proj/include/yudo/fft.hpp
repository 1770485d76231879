#pragma once

#include <fftw3.h>

#include <complex>
#include <cstring>
#include <map>
#include <memory>
#include <mutex>

#include "grid.hpp"

namespace yudo {

/// FFTW-backed transform pair between an n x n real grid and its half
/// spectrum (n rows by n/2+1 columns, Hermitian in the dropped half).
/// Forward output is scaled by 1/n^2 so coefficient (0,0) equals the field
/// mean and inverse(forward(f)) == f. Each instance owns aligned buffers,
/// so one instance must not be shared across threads; use local() for a
/// per-thread cache. Plan creation is serialized (FFTW requirement).
class SpectralTransform {
  public:
    explicit SpectralTransform(int n) : n_(n), nc_(n / 2 + 1) {
        real_ = fftw_alloc_real(static_cast<size_t>(n_) * n_);
        cplx_ = fftw_alloc_complex(static_cast<size_t>(n_) * nc_);
        std::lock_guard<std::mutex> lock(plan_mutex());
        fwd_ = fftw_plan_dft_r2c_2d(n_, n_, real_, cplx_, FFTW_ESTIMATE);
        inv_ = fftw_plan_dft_c2r_2d(n_, n_, cplx_, real_, FFTW_ESTIMATE);
    }

    ~SpectralTransform() {
        std::lock_guard<std::mutex> lock(plan_mutex());
        fftw_destroy_plan(fwd_);
        fftw_destroy_plan(inv_);
        fftw_free(real_);
        fftw_free(cplx_);
    }

    SpectralTransform(const SpectralTransform&) = delete;
    SpectralTransform& operator=(const SpectralTransform&) = delete;

    long spectrum_size() const { return static_cast<long>(n_) * nc_; }

    void forward(const double* values, std::complex<double>* coeff) {
        std::memcpy(real_, values, sizeof(double) * static_cast<size_t>(n_) * n_);
        fftw_execute(fwd_);
        const double scale = 1.0 / (static_cast<double>(n_) * n_);
        const auto* c = reinterpret_cast<const std::complex<double>*>(cplx_);
        const long m = spectrum_size();
        for (long i = 0; i < m; ++i) coeff[i] = c[i] * scale;
    }

    void inverse(const std::complex<double>* coeff, double* values) {
        std::memcpy(cplx_, coeff, sizeof(fftw_complex) * static_cast<size_t>(n_) * nc_);
        fftw_execute(inv_);
        std::memcpy(values, real_, sizeof(double) * static_cast<size_t>(n_) * n_);
    }

    static SpectralTransform& local(int n) {
        thread_local std::map<int, std::unique_ptr<SpectralTransform>> cache;
        auto& slot = cache[n];
        if (!slot) slot = std::make_unique<SpectralTransform>(n);
        return *slot;
    }

  private:
    static std::mutex& plan_mutex() {
        static std::mutex m;
        return m;
    }

    int n_, nc_;
    double* real_;
    fftw_complex* cplx_;
    fftw_plan fwd_, inv_;
};

}  // namespace yudo
