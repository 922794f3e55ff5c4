// Copyright 2026 The jjvar Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef JJVAR_FFT2D_HPP
#define JJVAR_FFT2D_HPP

#include <complex>
#include <mutex>
#include <span>

#include <fftw3.h>

namespace jjvar {

namespace detail {

// FFTW's planner is not thread-safe; plan creation/destruction is serialized.
// Executing distinct plans on their own buffers is safe.
inline std::mutex& fftw_planner_mutex() {
    static std::mutex m;
    return m;
}

} // namespace detail

/// Unnormalized 2D half-complex -> real transform (ny x nx real output,
/// ny x (nx/2+1) complex input, row-major with y as the slow index).
/// Plans use FFTW_ESTIMATE so the chosen algorithm, and therefore the
/// bit-level output, is reproducible for a given build.
class SpectrumToField {
  public:
    SpectrumToField(int nx, int ny) : nx_(nx), ny_(ny) {
        const int nxh = nx / 2 + 1;
        in_ = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) *
                                                     static_cast<std::size_t>(ny) * nxh));
        out_ = static_cast<double*>(fftw_malloc(sizeof(double) *
                                                static_cast<std::size_t>(ny) * nx));
        std::lock_guard<std::mutex> lock(detail::fftw_planner_mutex());
        plan_ = fftw_plan_dft_c2r_2d(ny, nx, in_, out_,
                                     FFTW_ESTIMATE | FFTW_DESTROY_INPUT);
    }

    SpectrumToField(const SpectrumToField&) = delete;
    SpectrumToField& operator=(const SpectrumToField&) = delete;

    ~SpectrumToField() {
        {
            std::lock_guard<std::mutex> lock(detail::fftw_planner_mutex());
            fftw_destroy_plan(plan_);
        }
        fftw_free(in_);
        fftw_free(out_);
    }

    std::span<std::complex<double>> spectrum() {
        return {reinterpret_cast<std::complex<double>*>(in_),
                static_cast<std::size_t>(ny_) * (nx_ / 2 + 1)};
    }
    std::span<const double> field() const {
        return {out_, static_cast<std::size_t>(ny_) * nx_};
    }

    void execute() { fftw_execute(plan_); }

  private:
    int nx_, ny_;
    fftw_complex* in_;
    double* out_;
    fftw_plan plan_;
};

/// Unnormalized 2D real -> half-complex transform (companion of the above).
class FieldToSpectrum {
  public:
    FieldToSpectrum(int nx, int ny) : nx_(nx), ny_(ny) {
        const int nxh = nx / 2 + 1;
        in_ = static_cast<double*>(fftw_malloc(sizeof(double) *
                                               static_cast<std::size_t>(ny) * nx));
        out_ = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) *
                                                      static_cast<std::size_t>(ny) * nxh));
        std::lock_guard<std::mutex> lock(detail::fftw_planner_mutex());
        plan_ = fftw_plan_dft_r2c_2d(ny, nx, in_, out_, FFTW_ESTIMATE);
    }

    FieldToSpectrum(const FieldToSpectrum&) = delete;
    FieldToSpectrum& operator=(const FieldToSpectrum&) = delete;

    ~FieldToSpectrum() {
        {
            std::lock_guard<std::mutex> lock(detail::fftw_planner_mutex());
            fftw_destroy_plan(plan_);
        }
        fftw_free(in_);
        fftw_free(out_);
    }

    std::span<double> field() {
        return {in_, static_cast<std::size_t>(ny_) * nx_};
    }
    std::span<const std::complex<double>> spectrum() const {
        return {reinterpret_cast<const std::complex<double>*>(out_),
                static_cast<std::size_t>(ny_) * (nx_ / 2 + 1)};
    }

    void execute() { fftw_execute(plan_); }

  private:
    int nx_, ny_;
    double* in_;
    fftw_complex* out_;
    fftw_plan plan_;
};

} // namespace jjvar

#endif // JJVAR_FFT2D_HPP
