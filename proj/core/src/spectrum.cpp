#include "nbd/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include <nlohmann/json.hpp>

namespace nbd {

ComplexSpectrum eigenvalues_of(const Eigen::MatrixXd& matrix) {
    if (matrix.rows() != matrix.cols())
        throw std::invalid_argument("eigenvalues_of: matrix must be square");
    ComplexSpectrum spectrum;
    spectrum.source_dim = static_cast<int>(matrix.rows());
    if (matrix.rows() == 0) return spectrum;

    Eigen::EigenSolver<Eigen::MatrixXd> solver(matrix, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw NumericalError("eigendecomposition did not converge for dimension " +
                             std::to_string(matrix.rows()));
    const auto& values = solver.eigenvalues();
    spectrum.eigenvalues.reserve(static_cast<std::size_t>(values.size()));
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        spectrum.eigenvalues.push_back(values[i]);
        spectrum.radius = std::max(spectrum.radius, std::abs(values[i]));
    }
    return spectrum;
}

RescaledSpectrum rescale_spectrum(const ComplexSpectrum& spectrum) {
    RescaledSpectrum out;
    out.total_count = static_cast<int>(spectrum.eigenvalues.size());
    const double rho = spectrum.radius;
    const bool degenerate = rho <= 1.0 + kDegenerateBaseTol;
    const double log_rho = degenerate ? 0.0 : std::log(rho);
    for (const auto& lambda : spectrum.eigenvalues) {
        if (lambda.imag() < 0.0) continue;  // conjugate of a stored point
        RescaledPoint pt;
        const double modulus = std::abs(lambda);
        if (modulus <= kZeroModulusTol) {
            pt.magnitude = 0.0;
            pt.argument = 0.0;
        } else {
            double mag = degenerate ? modulus : std::log(modulus) / log_rho;
            pt.magnitude = std::clamp(mag, 0.0, 1.0);
            pt.argument = lambda.imag() == 0.0 ? (lambda.real() >= 0.0 ? 0.0 : M_PI)
                                               : std::arg(lambda);
        }
        out.points.push_back(pt);
    }
    std::sort(out.points.begin(), out.points.end(), [](const auto& a, const auto& b) {
        return a.magnitude != b.magnitude ? a.magnitude < b.magnitude : a.argument < b.argument;
    });
    return out;
}

void write_spectrum_json(const ComplexSpectrum& spectrum, const RescaledSpectrum* rescaled,
                         std::ostream& out) {
    auto sorted = spectrum.eigenvalues;
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        return a.real() != b.real() ? a.real() > b.real() : a.imag() > b.imag();
    });
    nlohmann::json j;
    j["eigenvalues"] = nlohmann::json::array();
    for (const auto& lambda : sorted)
        j["eigenvalues"].push_back({{"re", lambda.real()}, {"im", lambda.imag()}});
    j["radius"] = spectrum.radius;
    j["source_dim"] = spectrum.source_dim;
    if (rescaled != nullptr) {
        nlohmann::json r;
        r["points"] = nlohmann::json::array();
        for (const auto& pt : rescaled->points)
            r["points"].push_back({{"magnitude", pt.magnitude}, {"argument", pt.argument}});
        r["total_count"] = rescaled->total_count;
        j["rescaled"] = std::move(r);
    }
    out << j.dump(2) << "\n";
}

}  // namespace nbd
