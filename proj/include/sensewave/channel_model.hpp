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

#ifndef SENSEWAVE_CHANNEL_MODEL_HPP
#define SENSEWAVE_CHANNEL_MODEL_HPP

#include <array>
#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace sensewave {

// OFDM numerology. The symbol duration is tied to the subcarrier spacing
// (ts = 1/f0), which is the convention used throughout the frequency-domain
// channel model.
struct OfdmNumerology {
    double f0 = 0.0; // subcarrier spacing [Hz]
    double ts = 0.0; // OFDM symbol duration [s], always 1/f0
    double fc = 0.0; // carrier frequency [Hz]

    OfdmNumerology(double subcarrier_spacing_hz, double carrier_hz)
        : f0(subcarrier_spacing_hz), ts(1.0 / subcarrier_spacing_hz), fc(carrier_hz) {
        if (!(f0 > 0.0))
            throw std::invalid_argument("OfdmNumerology: subcarrier spacing must be > 0");
        if (!(fc > 0.0))
            throw std::invalid_argument("OfdmNumerology: carrier frequency must be > 0");
    }
};

// Half-wavelength ULAs at both ends of the link.
struct ArrayGeometry {
    int n_tx = 1;
    int n_rx = 1;

    ArrayGeometry(int n_transmit, int n_receive) : n_tx(n_transmit), n_rx(n_receive) {
        if (n_tx < 1 || n_rx < 1)
            throw std::invalid_argument("ArrayGeometry: antenna counts must be >= 1");
    }
};

// Parameters of a single propagation path. Angles are stored in radians;
// degree values only exist at the configuration boundary.
struct PathParams {
    double gain_re = 0.0;   // Re(b)
    double gain_im = 0.0;   // Im(b)
    double delay_s = 0.0;   // tau >= 0
    double doppler_hz = 0.0;
    double aoa_rad = 0.0;   // phi in (-pi/2, pi/2)
    double aod_rad = 0.0;   // theta in (-pi/2, pi/2)

    std::complex<double> gain() const { return {gain_re, gain_im}; }
};

// Parameter-type blocks of the flattened 6L vector, in canonical order:
// all Re(b), all Im(b), all delays, all Dopplers, all AoAs, all AoDs.
enum class ParamBlock : int {
    GainRe = 0,
    GainIm = 1,
    Delay = 2,
    Doppler = 3,
    Aoa = 4,
    Aod = 5,
};

inline constexpr int kNumParamBlocks = 6;

inline constexpr std::array<ParamBlock, kNumParamBlocks> kParamBlockOrder = {
    ParamBlock::GainRe, ParamBlock::GainIm, ParamBlock::Delay,
    ParamBlock::Doppler, ParamBlock::Aoa,   ParamBlock::Aod};

const char* param_block_name(ParamBlock block);

// The L-path parameter set behind the 6L-dimensional estimation problem.
// Flattening is parameter-type-major: index of (block t, path l) is t*L + l.
struct MultipathParams {
    std::vector<PathParams> paths;

    int n_paths() const { return static_cast<int>(paths.size()); }
    int dim() const { return kNumParamBlocks * n_paths(); }

    Eigen::VectorXd to_vector() const;
    static MultipathParams from_vector(const Eigen::VectorXd& flat);

    void validate() const;
};

// One (subcarrier, OFDM symbol) slot of the time-frequency grid.
struct ResourceElement {
    int subcarrier = 0; // n >= 0
    int symbol = 0;     // k >= 0
};

// ULA response a(angle): element p carries phase exp(j*pi*p*sin(angle)),
// 0-based element index, broadside reference.
Eigen::VectorXcd steering_vector(double angle_rad, int count);

// d a(angle)/d angle: element p is j*pi*p*cos(angle)*exp(j*pi*p*sin(angle)).
Eigen::VectorXcd steering_derivative(double angle_rad, int count);

// Delay/Doppler phase rotation of one path on one resource element:
// omega = exp(-j*2*pi*n*f0*tau) * exp(j*2*pi*fD*k*ts). Unit modulus.
std::complex<double> phase_factor(const PathParams& path, const ResourceElement& re,
                                  const OfdmNumerology& num);

// Vectorized channel h = vec(H) = sum_l b_l * omega_l * aT(theta_l) x aR(phi_l),
// length n_tx*n_rx, Kronecker order transmit (x) receive.
Eigen::VectorXcd channel_vector(const MultipathParams& params, const ResourceElement& re,
                                const OfdmNumerology& num, const ArrayGeometry& geom);

// All partial derivatives of the vectorized channel, one column per parameter
// in canonical order; (n_tx*n_rx) x 6L.
Eigen::MatrixXcd channel_derivatives(const MultipathParams& params, const ResourceElement& re,
                                     const OfdmNumerology& num, const ArrayGeometry& geom);

} // namespace sensewave

#endif // SENSEWAVE_CHANNEL_MODEL_HPP
