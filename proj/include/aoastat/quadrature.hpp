#pragma once

#include "aoastat/types.hpp"

namespace aoastat {

/// Gauss-Legendre rule on [-1, 1], nodes ascending.
struct GaussLegendre {
    ArrayX nodes;
    ArrayX weights;

    explicit GaussLegendre(int order);
};

/// Cached, thread-safe lookup of a rule by order.
const GaussLegendre& gauss_legendre(int order);

}  // namespace aoastat
