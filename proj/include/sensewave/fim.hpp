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

#ifndef SENSEWAVE_FIM_HPP
#define SENSEWAVE_FIM_HPP

#include <Eigen/Dense>

#include "sensewave/channel_model.hpp"

namespace sensewave {

// The M resource elements carrying sensing symbols, with per-RE noise
// variances. Element order fixes the column order of the waveform matrix.
struct ResourceGrid {
    std::vector<ResourceElement> elements;
    Eigen::VectorXd noise_var; // sigma_m^2, one per element

    int size() const { return static_cast<int>(elements.size()); }
    void validate() const;
};

// Complex transmit symbol matrix, n_tx x M; the design variable. The
// optimizer keeps it on the hypersphere ||X||_F^2 = M*P.
using WaveformMatrix = Eigen::MatrixXcd;

// Diagonal parameter weighting, stored as its diagonal (6L positive reals).
struct WeightMatrix {
    Eigen::VectorXd diag;

    static WeightMatrix identity(int dim) { return WeightMatrix{Eigen::VectorXd::Ones(dim)}; }
    void validate() const;
};

// Per-RE diagonal coupling of the derivative factorization dh_m/dxi = (T*R)Lambda_m,
// returned as the 6L diagonal. Blocks of L entries in canonical order:
// omega, j*omega, b*g, b*f, b*omega, b*omega with g = -j*2pi*n*f0*omega and
// f = j*2pi*k*ts*omega.
Eigen::VectorXcd lambda_matrix(const MultipathParams& params, const ResourceElement& re,
                               const OfdmNumerology& num);

// Steering-block factors of the derivative factorization:
// T = [A_T A_T A_T A_T A_T D_T] (n_tx x 6L), R = [A_R A_R A_R A_R D_R A_R] (n_rx x 6L).
struct SteeringBlocks {
    Eigen::MatrixXcd t;
    Eigen::MatrixXcd r;
};
SteeringBlocks tr_matrices(const MultipathParams& params, const ArrayGeometry& geom);

// Fisher information of the multipath parameters in the closed Hadamard form
// I = Re{(sum_m (2/sigma_m^2) Lam_m^H T^H x_m* x_m^T T Lam_m) o (R^H R)}.
// Real symmetric 6L x 6L, PSD.
Eigen::MatrixXd fim_closed(const WaveformMatrix& x, const MultipathParams& params,
                           const ResourceGrid& grid, const OfdmNumerology& num,
                           const ArrayGeometry& geom);

// Same matrix assembled element by element from the per-parameter channel
// derivatives: [I]_ij = sum_m (2/sigma_m^2) Re[dh_i^H (x_m* x_m^T kron I) dh_j].
// Serves as the independent cross-check of fim_closed.
Eigen::MatrixXd fim_elementwise(const WaveformMatrix& x, const MultipathParams& params,
                                const ResourceGrid& grid, const OfdmNumerology& num,
                                const ArrayGeometry& geom);

// log det(J^H I J) of a given FIM; -inf when the Cholesky factorization fails
// (singular or indefinite), so callers can reject the point.
double weighted_logdet(const Eigen::MatrixXd& fim, const WeightMatrix& weights);

// Design objective log det(J^H I(X) J); -inf sentinel on singular FIM.
double objective(const WaveformMatrix& x, const MultipathParams& params, const ResourceGrid& grid,
                 const OfdmNumerology& num, const ArrayGeometry& geom, const WeightMatrix& weights);

// Euclidean gradient of the objective with respect to X under the real inner
// product Re tr(A^H B). Column m is (4/sigma_m^2) * conj(T Lam_m S Lam_m^H T^H) x_m
// with S = J(J^H I J)^{-1} J^H o (R^H R)^T. Throws on singular FIM.
Eigen::MatrixXcd objective_gradient(const WaveformMatrix& x, const MultipathParams& params,
                                    const ResourceGrid& grid, const OfdmNumerology& num,
                                    const ArrayGeometry& geom, const WeightMatrix& weights);

namespace detail {

// One-pass evaluation shared by objective/objective_gradient and the
// optimizer loss: the weighted log-det and, optionally, its gradient.
struct ObjectiveEval {
    double logdet = 0.0; // -inf when singular
    bool singular = false;
    Eigen::MatrixXcd gradient; // empty unless requested and nonsingular
};

ObjectiveEval eval_objective(const WaveformMatrix& x, const MultipathParams& params,
                             const ResourceGrid& grid, const OfdmNumerology& num,
                             const ArrayGeometry& geom, const WeightMatrix& weights,
                             bool want_gradient);

} // namespace detail

} // namespace sensewave

#endif // SENSEWAVE_FIM_HPP
