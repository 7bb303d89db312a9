#pragma once

namespace sqz {

inline constexpr const char* kVersion = "0.1.0";

// Fixed numerical contract. Checks may scale these DOWN (tolerance_scale in
// [0,1]) but never up.
namespace tol {

inline constexpr double unitarity = 1e-10;            // | ||psi|| - 1 |
inline constexpr double eigen_residual = 1e-8;        // ||H V - V L||_max / max|lambda|
inline constexpr double eigen_orthonormality = 1e-10; // ||V^T V - I||_max
inline constexpr double state_residual = 1e-10;       // ||Jx psi + J psi|| per J
inline constexpr double imag_residue = 1e-12;         // imaginary part of expectations, per J
inline constexpr double covariance_psd = 1e-10;       // covariance eigenvalue floor, per J^2
inline constexpr double degenerate_mean = 1e-6;       // |<J>| per J below which no frame exists
inline constexpr double time_refine_bracket = 1e-6;   // golden-section exit, units of 1/kappa
inline constexpr double omega_refine_rel = 1e-2;      // relative Omega precision of the sweep
inline constexpr double minimizer_tie = 1e-13;        // xi improvements below this count as ties

}  // namespace tol
}  // namespace sqz
