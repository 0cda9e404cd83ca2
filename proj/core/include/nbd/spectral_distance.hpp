#ifndef NBD_SPECTRAL_DISTANCE_HPP
#define NBD_SPECTRAL_DISTANCE_HPP

#include <Eigen/Dense>
#include <iosfwd>
#include <string>
#include <vector>

#include "nbd/graph.hpp"
#include "nbd/spectrum.hpp"

namespace nbd {

/// The stated density normalizes the upper-half-plane count by the full
/// spectrum size 2n, so F(1, pi) < 1 whenever non-real eigenvalues exist.
/// `upper_half` divides by the stored point count instead.
enum class CdfNormalization { full_spectrum, upper_half };

/// Empirical cumulative spectral density F(r, theta): the normalized number
/// of rescaled upper-half-plane eigenvalues with magnitude <= r and argument
/// <= theta. A graph with an empty two-core yields the zero CDF.
class SpectralCdf {
public:
    SpectralCdf() = default;  // zero CDF, denominator 0

    static SpectralCdf from_rescaled(RescaledSpectrum spectrum,
                                     CdfNormalization norm = CdfNormalization::full_spectrum);

    /// Full pipeline: two_core -> B' -> eigenvalues -> rescale.
    static SpectralCdf from_graph(const Graph& g,
                                  CdfNormalization norm = CdfNormalization::full_spectrum);

    /// F(r, theta) with inclusive comparisons on both coordinates.
    double query(double r, double theta) const;

    int denominator() const { return denominator_; }
    const RescaledSpectrum& rescaled() const { return spectrum_; }

    /// F sampled at the midpoint grid r_i = (i+1/2)/R, theta_j = pi(j+1/2)/R,
    /// laid out r-major: value (i, j) at index i*R + j.
    std::vector<double> midpoint_grid(int resolution) const;

    /// F sampled at the inclusive node grid r_i = i/(k-1), theta_j = pi*j/(k-1),
    /// laid out theta-major (row j holds theta_j): value (j, i) at j*k + i.
    std::vector<double> node_grid(int k) const;

private:
    RescaledSpectrum spectrum_;
    int denominator_ = 0;
};

/// Distributional non-backtracking spectral distance (1/pi)*||F1 - F2||_2,
/// approximated with the midpoint rule on a resolution x resolution grid over
/// [0,1] x [0,pi]. The result lies in [0, pi^{-1/2}].
double dnbd(const SpectralCdf& f1, const SpectralCdf& f2, int resolution = 100);

/// k^2-dimensional grid discretization of F, theta-major with both endpoints
/// included: the last entry is F(1, pi). Requires k >= 2.
std::vector<double> embed(const SpectralCdf& f, int k);

/// Symmetric pairwise-distance matrix with zero diagonal.
struct DistanceMatrix {
    std::vector<std::string> labels;
    Eigen::MatrixXd values;
};

/// Computes each spectral CDF once, then all pairwise d-NBD values. Failures
/// are reported with the offending graph's label. `threads` <= 1 runs
/// serially; results are identical for any thread count.
DistanceMatrix pairwise_distances(const std::vector<Graph>& graphs,
                                  const std::vector<std::string>& labels, int resolution = 100,
                                  int threads = 1);

/// CSV export: header row of labels, then one row per graph prefixed with its
/// label.
void write_distance_csv(const DistanceMatrix& dm, std::ostream& out);

}  // namespace nbd

#endif  // NBD_SPECTRAL_DISTANCE_HPP
