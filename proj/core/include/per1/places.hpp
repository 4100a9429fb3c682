#pragma once

#include <string>
#include <vector>

#include "per1/rational.hpp"

namespace per1 {

/// A place of Q: the archimedean slot or a prime p.  N_v = 1 for every place
/// of Q; the field is kept so the product formula reads as in general.
struct Place {
    bool archimedean = true;
    unsigned long p = 0;
    int N_v = 1;

    static Place arch() { return Place{true, 0, 1}; }
    static Place prime(unsigned long p) { return Place{false, p, 1}; }

    friend bool operator==(const Place& a, const Place& b) = default;
};

std::string to_string(const Place& v);

/// Normalized absolute value |x|_v: |x| at the archimedean place,
/// p^{-ord_p(x)} at a finite place; |0|_v = 0.
double abs_at(const BigRat& x, const Place& v);

/// log|x|_v for x != 0 (exact-mantissa based at the archimedean place).
double log_abs_at(const BigRat& x, const Place& v);

struct PlaceClass {
    enum Kind { M0_so_far, Mn, exceptional } kind = M0_so_far;
    int n = 0;            // witness index for Mn
    int search_bound = 0;  // how far M0 was verified

    bool is_Mn() const { return kind == Mn; }
};

/// Classify a finite place against lambda: Mn with the least witness
/// n <= n_max such that |1+...+lambda^n|_p < 1 while all earlier partial sums
/// are units; M0-so-far when no witness exists up to n_max; exceptional when
/// |lambda|_p != 1.
PlaceClass classify_place(const BigRat& lambda, unsigned long p, int n_max = 64);

/// Primes where x or any listed rational can have a non-unit absolute value.
std::vector<unsigned long> support_primes(const std::vector<BigRat>& xs);

bool is_root_of_unity(const BigRat& lambda);  // over Q: lambda in {1, -1}

}  // namespace per1
