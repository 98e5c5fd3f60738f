#pragma once

// Neumaier-compensated accumulators. The series engine sums alternating
// closed-form rows and tens of thousands of outer terms in a fixed order;
// the compensation keeps the result independent of magnitude ordering
// surprises without changing the deterministic order itself.

namespace sinint {

template <class Real = double>
struct CompensatedSum {
    Real sum = 0;
    Real comp = 0;

    void add(Real x) {
        Real t = sum + x;
        if ((sum >= 0 ? sum : -sum) >= (x >= 0 ? x : -x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }

    Real value() const { return sum + comp; }
};

using NeumaierSum = CompensatedSum<double>;
using NeumaierSumL = CompensatedSum<long double>;

}  // namespace sinint
