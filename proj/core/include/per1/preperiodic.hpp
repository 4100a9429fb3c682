#pragma once

#include "per1/rational.hpp"

namespace per1 {

struct PreperiodicityResult {
    enum Kind { Preperiodic, Escaping, Undecided } kind = Undecided;
    int period = 0;
    int preperiod = 0;
    int steps = 0;
};

/// Exact rational iteration of the critical point critical_sign*1 under
/// f_{lambda,t}, with cycle detection (infinity is an explicit orbit value;
/// a pole feeds the fixed point 0).  Escaping requires the Weil height to
/// exceed height_bound while growing geometrically across 3 consecutive
/// iterates.  height_bound < 0 selects the default 64 + 4h(lambda) + 4h(t).
PreperiodicityResult is_preperiodic(const BigRat& lambda, const BigRat& t, int critical_sign,
                                    double height_bound = -1.0);

}  // namespace per1
