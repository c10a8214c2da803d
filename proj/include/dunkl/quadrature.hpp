#pragma once

#include <span>
#include <vector>

namespace dunkl::quad {

/// Nodes and weights of a one-dimensional rule, nodes ascending.
struct Rule {
    std::vector<double> nodes;
    std::vector<double> weights;

    [[nodiscard]] std::size_t size() const { return nodes.size(); }
};

/// m-point Gauss-Legendre rule on [-1, 1].
Rule gauss_legendre(int m);

/// m-point Gauss-Jacobi rule on [-1, 1] for the weight (1-t)^a (1+t)^b,
/// built with the Golub-Welsch eigenvalue method. Requires a, b > -1.
Rule gauss_jacobi(int m, double a, double b);

/// Composite rule on [0, radius] for the weight x^power (power > -1).
///
/// The interval is cut into `panels` equal panels of `order` nodes each.
/// The panel touching the origin uses Gauss-Jacobi so the x^power cusp is
/// integrated exactly against polynomials; every other panel is
/// Gauss-Legendre with x^power multiplied into the weights.
Rule half_line_rule(double radius, int panels, int order, double power);

/// Sum of a[i]*b[i] with a fixed left-to-right order and Neumaier compensation.
double compensated_dot(std::span<const double> a, std::span<const double> b);

/// Neumaier-compensated running sum. Order of accumulation is the caller's.
class CompensatedSum {
public:
    void add(double x);
    [[nodiscard]] double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace dunkl::quad
