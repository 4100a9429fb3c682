#include "per1/preperiodic.hpp"

#include <map>

#include "per1/errors.hpp"

namespace per1 {

PreperiodicityResult is_preperiodic(const BigRat& lambda, const BigRat& t, int critical_sign,
                                    double height_bound) {
    if (lambda == 0) throw error("is_preperiodic: lambda must be nonzero");
    if (height_bound < 0.0) height_bound = 64.0 + 4.0 * weil_height(lambda) + 4.0 * weil_height(t);

    constexpr int kMaxSteps = 96;
    constexpr size_t kMaxBits = 1u << 21;

    std::map<BigRat, int> seen;  // finite orbit values -> index
    BigRat z(critical_sign);
    double h_prev3 = 0, h_prev2 = 0, h_prev1 = weil_height(z);
    int step = 0;
    seen[z] = 0;
    while (step < kMaxSteps) {
        const BigRat den = z * z + t * z + 1;
        ++step;
        if (den == 0) {
            // pole: z -> infinity -> 0 -> 0 -> ...; the cycle {0} starts one
            // step after the pole image.
            return {PreperiodicityResult::Preperiodic, 1, step + 1, step};
        }
        z = lambda * z / den;
        z.canonicalize();
        auto [it, inserted] = seen.emplace(z, step);
        if (!inserted)
            return {PreperiodicityResult::Preperiodic, step - it->second, it->second, step};

        const double h = weil_height(z);
        if (h > height_bound && h >= 1.5 * h_prev1 && h_prev1 >= 1.5 * h_prev2 &&
            h_prev2 >= 1.5 * h_prev3 && h_prev3 > 0)
            return {PreperiodicityResult::Escaping, 0, 0, step};
        h_prev3 = h_prev2;
        h_prev2 = h_prev1;
        h_prev1 = h;

        const size_t bits = mpz_sizeinbase(z.get_num().get_mpz_t(), 2) +
                            mpz_sizeinbase(z.get_den().get_mpz_t(), 2);
        if (bits > kMaxBits) break;
    }
    return {PreperiodicityResult::Undecided, 0, 0, step};
}

}  // namespace per1
