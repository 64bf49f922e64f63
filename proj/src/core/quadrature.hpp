#pragma once

#include <vector>

namespace betacp {

struct GLRule {
    std::vector<double> x, w;  // nodes and weights on [-1, 1]
};

// Gauss-Legendre rule of order n (cached).
const GLRule& gauss_legendre(int n);

struct Node {
    double x, w;
};

// Rule mapped to [a, b].
std::vector<Node> gl_interval(int n, double a, double b);

// Composite rule: npanel panels of order n on [a, b].
std::vector<Node> gl_panels(int n, double a, double b, int npanel);

}  // namespace betacp
