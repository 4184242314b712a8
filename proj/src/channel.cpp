// SPDX-License-Identifier: Apache-2.0
#include "holobeam/channel.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

#include "holobeam/io.hpp"

namespace holobeam {

namespace {

double amplitude(AmplitudeModel model, double distance) {
    return model == AmplitudeModel::unit ? 1.0 : 1.0 / distance;
}

}  // namespace

Eigen::MatrixXcd los_channel_matrix(const ArrayGeometry& tx, const ArrayGeometry& rx, double k,
                                    AmplitudeModel amplitude_model) {
    if (!(k > 0.0)) throw InvalidArgumentError("wavenumber must be positive");
    const auto tx_pos = tx.element_positions();
    const auto rx_pos = rx.element_positions();
    const double lambda = kTwoPi / k;

    Eigen::MatrixXcd h(rx.num_elements, tx.num_elements);
    double min_distance = std::numeric_limits<double>::infinity();
    for (int n = 0; n < tx.num_elements; ++n) {
        const Point2D p = tx_pos[n];
        for (int m = 0; m < rx.num_elements; ++m) {
            const double dx = p.x - rx_pos[m].x;
            const double dy = p.y - rx_pos[m].y;
            const double d = std::sqrt(dx * dx + dy * dy);
            if (d < min_distance) min_distance = d;
            h(m, n) = std::polar(amplitude(amplitude_model, d), -k * d);
        }
    }
    if (!(min_distance > lambda / 100.0)) {
        std::ostringstream msg;
        msg << "arrays overlap: min element distance " << min_distance << " m is not above lambda/100 = "
            << lambda / 100.0 << " m";
        throw InvalidScenarioError(msg.str());
    }
    return h;
}

Eigen::VectorXcd los_channel_vector(const ArrayGeometry& irs, Point2D user, double k,
                                    AmplitudeModel amplitude_model) {
    if (!(k > 0.0)) throw InvalidArgumentError("wavenumber must be positive");
    const auto irs_pos = irs.element_positions();
    const double lambda = kTwoPi / k;

    Eigen::VectorXcd h(irs.num_elements);
    for (int m = 0; m < irs.num_elements; ++m) {
        const double d = distance(irs_pos[m], user);
        if (!(d > lambda / 100.0))
            throw InvalidScenarioError("user coincides with an IRS element (distance not above lambda/100)");
        h(m) = std::polar(amplitude(amplitude_model, d), +k * d);
    }
    return h;
}

Eigen::VectorXcd steering_near(const ArrayGeometry& array, Point2D source, double k) {
    if (!(k > 0.0)) throw InvalidArgumentError("wavenumber must be positive");
    const double reference = distance(array.center, source);
    if (reference == 0.0) throw InvalidArgumentError("steering source coincides with the array center");

    Eigen::VectorXcd a(array.num_elements);
    for (int n = 0; n < array.num_elements; ++n) {
        const double d = distance(array.element(n), source);
        if (d == 0.0) throw InvalidArgumentError("steering source coincides with an array element");
        a(n) = std::polar(1.0, -k * (d - reference));
    }
    return a;
}

Eigen::VectorXcd steering_far(int num_elements, double spacing, double k, double beta) {
    if (num_elements < 1) throw InvalidArgumentError("steering vector needs at least one element");
    if (!(spacing > 0.0)) throw InvalidArgumentError("element spacing must be positive");
    if (!(k > 0.0)) throw InvalidArgumentError("wavenumber must be positive");
    if (!(std::abs(beta) <= 1.0)) throw InvalidArgumentError("direction sine beta must satisfy |beta| <= 1");

    Eigen::VectorXcd a(num_elements);
    for (int n = 0; n < num_elements; ++n) a(n) = std::polar(1.0, -k * n * spacing * beta);
    return a;
}

void write_matrix_csv(std::ostream& out, const Eigen::MatrixXcd& matrix) {
    out << "m,n,re,im\n";
    for (Eigen::Index m = 0; m < matrix.rows(); ++m)
        for (Eigen::Index n = 0; n < matrix.cols(); ++n)
            out << m << ',' << n << ',' << format_double(matrix(m, n).real()) << ','
                << format_double(matrix(m, n).imag()) << '\n';
}

}  // namespace holobeam
