// SPDX-License-Identifier: Apache-2.0
//
// sensewave - MIMO-OFDM sensing waveform design and Cramer-Rao bound evaluation
// Copyright (C) 2026 sensewave contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "sensewave/channel_model.hpp"

#include <cmath>
#include <numbers>

namespace sensewave {

namespace {

constexpr std::complex<double> kImag{0.0, 1.0};

// Kronecker product of two vectors: out[p*b.size() + q] = a[p]*b[q].
Eigen::VectorXcd kron_vec(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
    Eigen::VectorXcd out(a.size() * b.size());
    for (Eigen::Index p = 0; p < a.size(); ++p)
        out.segment(p * b.size(), b.size()) = a(p) * b;
    return out;
}

} // namespace

const char* param_block_name(ParamBlock block) {
    switch (block) {
        case ParamBlock::GainRe: return "gain_real";
        case ParamBlock::GainIm: return "gain_imag";
        case ParamBlock::Delay: return "delay";
        case ParamBlock::Doppler: return "doppler";
        case ParamBlock::Aoa: return "aoa";
        case ParamBlock::Aod: return "aod";
    }
    return "unknown";
}

Eigen::VectorXd MultipathParams::to_vector() const {
    const int L = n_paths();
    Eigen::VectorXd flat(dim());
    for (int l = 0; l < L; ++l) {
        const PathParams& p = paths[static_cast<std::size_t>(l)];
        flat(0 * L + l) = p.gain_re;
        flat(1 * L + l) = p.gain_im;
        flat(2 * L + l) = p.delay_s;
        flat(3 * L + l) = p.doppler_hz;
        flat(4 * L + l) = p.aoa_rad;
        flat(5 * L + l) = p.aod_rad;
    }
    return flat;
}

MultipathParams MultipathParams::from_vector(const Eigen::VectorXd& flat) {
    if (flat.size() % kNumParamBlocks != 0 || flat.size() == 0)
        throw std::invalid_argument("MultipathParams: flat vector length must be a positive multiple of 6");
    const int L = static_cast<int>(flat.size()) / kNumParamBlocks;
    MultipathParams out;
    out.paths.resize(static_cast<std::size_t>(L));
    for (int l = 0; l < L; ++l) {
        PathParams& p = out.paths[static_cast<std::size_t>(l)];
        p.gain_re = flat(0 * L + l);
        p.gain_im = flat(1 * L + l);
        p.delay_s = flat(2 * L + l);
        p.doppler_hz = flat(3 * L + l);
        p.aoa_rad = flat(4 * L + l);
        p.aod_rad = flat(5 * L + l);
    }
    return out;
}

void MultipathParams::validate() const {
    if (paths.empty())
        throw std::invalid_argument("MultipathParams: at least one path required");
}

Eigen::VectorXcd steering_vector(double angle_rad, int count) {
    if (count < 1)
        throw std::invalid_argument("steering_vector: count must be >= 1");
    const double s = std::sin(angle_rad);
    Eigen::VectorXcd a(count);
    for (int p = 0; p < count; ++p)
        a(p) = std::exp(kImag * (std::numbers::pi * p * s));
    return a;
}

Eigen::VectorXcd steering_derivative(double angle_rad, int count) {
    if (count < 1)
        throw std::invalid_argument("steering_derivative: count must be >= 1");
    const double s = std::sin(angle_rad);
    const double c = std::cos(angle_rad);
    Eigen::VectorXcd d(count);
    for (int p = 0; p < count; ++p)
        d(p) = kImag * (std::numbers::pi * p * c) * std::exp(kImag * (std::numbers::pi * p * s));
    return d;
}

std::complex<double> phase_factor(const PathParams& path, const ResourceElement& re,
                                  const OfdmNumerology& num) {
    const double delay_phase = -2.0 * std::numbers::pi * re.subcarrier * num.f0 * path.delay_s;
    const double doppler_phase = 2.0 * std::numbers::pi * path.doppler_hz * re.symbol * num.ts;
    return std::exp(kImag * delay_phase) * std::exp(kImag * doppler_phase);
}

Eigen::VectorXcd channel_vector(const MultipathParams& params, const ResourceElement& re,
                                const OfdmNumerology& num, const ArrayGeometry& geom) {
    Eigen::VectorXcd h = Eigen::VectorXcd::Zero(geom.n_tx * geom.n_rx);
    for (const PathParams& p : params.paths) {
        const std::complex<double> w = phase_factor(p, re, num);
        const Eigen::VectorXcd at = steering_vector(p.aod_rad, geom.n_tx);
        const Eigen::VectorXcd ar = steering_vector(p.aoa_rad, geom.n_rx);
        h += p.gain() * w * kron_vec(at, ar);
    }
    return h;
}

Eigen::MatrixXcd channel_derivatives(const MultipathParams& params, const ResourceElement& re,
                                     const OfdmNumerology& num, const ArrayGeometry& geom) {
    const int L = params.n_paths();
    Eigen::MatrixXcd deriv(geom.n_tx * geom.n_rx, params.dim());
    for (int l = 0; l < L; ++l) {
        const PathParams& p = params.paths[static_cast<std::size_t>(l)];
        const std::complex<double> b = p.gain();
        const std::complex<double> w = phase_factor(p, re, num);
        const std::complex<double> g = -kImag * (2.0 * std::numbers::pi * re.subcarrier * num.f0) * w;
        const std::complex<double> f = kImag * (2.0 * std::numbers::pi * re.symbol * num.ts) * w;

        const Eigen::VectorXcd at = steering_vector(p.aod_rad, geom.n_tx);
        const Eigen::VectorXcd ar = steering_vector(p.aoa_rad, geom.n_rx);
        const Eigen::VectorXcd dt = steering_derivative(p.aod_rad, geom.n_tx);
        const Eigen::VectorXcd dr = steering_derivative(p.aoa_rad, geom.n_rx);

        const Eigen::VectorXcd at_ar = kron_vec(at, ar);
        deriv.col(0 * L + l) = w * at_ar;
        deriv.col(1 * L + l) = (kImag * w) * at_ar;
        deriv.col(2 * L + l) = (b * g) * at_ar;
        deriv.col(3 * L + l) = (b * f) * at_ar;
        deriv.col(4 * L + l) = (b * w) * kron_vec(at, dr);
        deriv.col(5 * L + l) = (b * w) * kron_vec(dt, ar);
    }
    return deriv;
}

} // namespace sensewave
