#pragma once

namespace modcensus::detail {

// Compensated summation; results depend only on the order of add() calls.
struct Kahan {
    double sum = 0;
    double comp = 0;

    void add(double x) {
        double y = x - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

}  // namespace modcensus::detail
