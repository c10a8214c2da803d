#include "dunkl/quadrature.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dunkl::quad {

Rule gauss_legendre(int m)
{
    if (m < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
    Rule rule;
    rule.nodes.resize(m);
    rule.weights.resize(m);
    for (int i = 0; i < (m + 1) / 2; ++i) {
        // Newton on P_m starting from the Tricomi estimate of the i-th root.
        long double x = std::cos(std::numbers::pi * (i + 0.75) / (m + 0.5));
        long double dp = 0.0L;
        for (int iter = 0; iter < 100; ++iter) {
            long double p0 = 1.0L, p1 = x;
            for (int k = 2; k <= m; ++k) {
                long double const p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = m * (x * p1 - p0) / (x * x - 1.0L);
            long double const dx = p1 / dp;
            x -= dx;
            if (std::fabs(static_cast<double>(dx)) < 1e-19) break;
        }
        // recompute derivative at the converged root
        long double p0 = 1.0L, p1 = x;
        for (int k = 2; k <= m; ++k) {
            long double const p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = m * (x * p1 - p0) / (x * x - 1.0L);
        long double const w = 2.0L / ((1.0L - x * x) * dp * dp);
        rule.nodes[i] = -static_cast<double>(x);
        rule.nodes[m - 1 - i] = static_cast<double>(x);
        rule.weights[i] = rule.weights[m - 1 - i] = static_cast<double>(w);
    }
    if (m % 2 == 1) rule.nodes[m / 2] = 0.0;
    return rule;
}

Rule gauss_jacobi(int m, double a, double b)
{
    if (m < 1) throw std::invalid_argument("gauss_jacobi: need at least one node");
    if (a <= -1.0 || b <= -1.0) throw std::invalid_argument("gauss_jacobi: exponents must exceed -1");

    Eigen::VectorXd diag(m);
    Eigen::VectorXd sub(m > 1 ? m - 1 : 1);
    double const ab = a + b;
    for (int n = 0; n < m; ++n) {
        double const s = 2.0 * n + ab;
        if (n == 0)
            diag(n) = (b - a) / (ab + 2.0);
        else
            diag(n) = (b * b - a * a) / (s * (s + 2.0));
        if (n >= 1) {
            double const num = 4.0 * n * (n + a) * (n + b) * (n + ab);
            double const den = s * s * (s + 1.0) * (s - 1.0);
            sub(n - 1) = std::sqrt(num / den);
        }
    }
    double const mu0 = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) +
                                std::lgamma(b + 1.0) - std::lgamma(ab + 2.0));

    Rule rule;
    rule.nodes.resize(m);
    rule.weights.resize(m);
    if (m == 1) {
        rule.nodes[0] = diag(0);
        rule.weights[0] = mu0;
        return rule;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) throw std::runtime_error("gauss_jacobi: eigen solver failed");
    for (int i = 0; i < m; ++i) {
        rule.nodes[i] = solver.eigenvalues()(i);
        double const v0 = solver.eigenvectors()(0, i);
        rule.weights[i] = mu0 * v0 * v0;
    }
    return rule;
}

Rule half_line_rule(double radius, int panels, int order, double power)
{
    if (!(radius > 0.0)) throw std::invalid_argument("half_line_rule: radius must be positive");
    if (panels < 1 || order < 1) throw std::invalid_argument("half_line_rule: empty layout");
    if (power <= -1.0) throw std::invalid_argument("half_line_rule: weight exponent must exceed -1");

    double const h = radius / panels;
    Rule const legendre = gauss_legendre(order);
    Rule const jacobi = gauss_jacobi(order, 0.0, power);

    Rule out;
    out.nodes.reserve(static_cast<std::size_t>(panels) * order);
    out.weights.reserve(out.nodes.capacity());

    // panel [0, h]: x = h (1 + t) / 2, x^power dx = (h/2)^(power+1) (1+t)^power dt
    double const scale0 = std::pow(0.5 * h, power + 1.0);
    for (int i = 0; i < order; ++i) {
        out.nodes.push_back(0.5 * h * (1.0 + jacobi.nodes[i]));
        out.weights.push_back(scale0 * jacobi.weights[i]);
    }
    for (int p = 1; p < panels; ++p) {
        double const left = p * h;
        for (int i = 0; i < order; ++i) {
            double const x = left + 0.5 * h * (1.0 + legendre.nodes[i]);
            out.nodes.push_back(x);
            out.weights.push_back(0.5 * h * legendre.weights[i] * std::pow(x, power));
        }
    }
    return out;
}

void CompensatedSum::add(double x)
{
    double const t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x))
        comp_ += (sum_ - t) + x;
    else
        comp_ += (x - t) + sum_;
    sum_ = t;
}

double compensated_dot(std::span<const double> a, std::span<const double> b)
{
    CompensatedSum acc;
    std::size_t const n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) acc.add(a[i] * b[i]);
    return acc.value();
}

}  // namespace dunkl::quad
