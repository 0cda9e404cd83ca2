#ifndef NBD_SPECTRUM_HPP
#define NBD_SPECTRUM_HPP

#include <Eigen/Dense>
#include <complex>
#include <iosfwd>
#include <stdexcept>
#include <vector>

namespace nbd {

/// Raised when a numerical routine fails (e.g. QR iteration does not
/// converge); the message names the matrix dimension.
class NumericalError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Tolerances of the spectral pipeline. The degenerate-base threshold must sit
// above the eigensolver's forward error on the defective unit root of pure
// cycle cores (measured up to ~4e-8) and below the smallest genuine spectral
// radius gap of multi-cycle cores.
inline constexpr double kDegenerateBaseTol = 1e-6;  // spectral radius <= 1 + tol: skip the log rescale
inline constexpr double kZeroModulusTol = 1e-12;    // below this modulus the argument is pinned to 0

/// Full complex spectrum of a real matrix, with algebraic multiplicity.
struct ComplexSpectrum {
    std::vector<std::complex<double>> eigenvalues;
    int source_dim = 0;   // matrix dimension (2m for B, 2n for B')
    double radius = 0.0;  // max |lambda|
};

/// Dense nonsymmetric eigendecomposition (Hessenberg reduction + shifted QR,
/// via Eigen's real Schur form). Throws NumericalError on non-convergence.
ComplexSpectrum eigenvalues_of(const Eigen::MatrixXd& matrix);

/// One rescaled eigenvalue in polar form: magnitude in [0, 1] after the
/// log_rho(B) map, argument in [0, pi].
struct RescaledPoint {
    double magnitude = 0.0;
    double argument = 0.0;
};

/// Upper-half-plane rescaled spectrum. Lower-half eigenvalues are counted in
/// total_count but not stored (they mirror the stored conjugates).
struct RescaledSpectrum {
    std::vector<RescaledPoint> points;
    int total_count = 0;
};

/// |lambda| -> clamp(log_rho |lambda|, 0, 1) when rho > 1 + tol, identity on
/// moduli (clamped to [0,1]) for the degenerate base rho <= 1. Arguments are
/// preserved; eigenvalues of modulus <= kZeroModulusTol get argument 0.
RescaledSpectrum rescale_spectrum(const ComplexSpectrum& spectrum);

/// JSON export: {"eigenvalues": [{"re","im"}...], "radius", "source_dim"},
/// eigenvalues ordered by (Re desc, Im desc). `rescaled`, when non-null, adds
/// {"points": [{"magnitude","argument"}...], "total_count"}.
void write_spectrum_json(const ComplexSpectrum& spectrum, const RescaledSpectrum* rescaled,
                         std::ostream& out);

}  // namespace nbd

#endif  // NBD_SPECTRUM_HPP
