#pragma once

#include <casimir/casimir.hpp>

#include <string>
#include <vector>

namespace casimir::cli {

/// Column-oriented figure data: one abscissa plus one column per curve.
struct Dataset {
    std::string name;
    std::string description;
    std::string x_label;
    std::vector<double> x;
    std::vector<std::string> curve_labels;
    std::vector<std::vector<double>> curves;  // curves[i][j] at x[j]; NaN marks a failed point
    std::vector<std::string> notes;           // emitted as header comments
};

const std::vector<std::string>& figure_names();
bool is_known_figure(const std::string& name);

/// Computes the curve family of a figure. Reduction-factor figures run on a
/// worker pool; the result does not depend on the thread count.
Dataset run_figure(const std::string& name, const QuadratureSpec& quad = {}, unsigned threads = 1,
                   int points_per_decade = 50);

}  // namespace casimir::cli
