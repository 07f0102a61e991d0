#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rote/bigint.hpp"
#include "rote/numeration.hpp"

namespace rote {

struct DivergingCountError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// (row vector, digit-indexed matrix family, column vector) computing a
// counting function of the parameter values: value = u * mu(digits) * v,
// msd first, with u * mu(0) = u so leading zeros do not change the value.
struct LinearRepresentation {
    std::vector<std::string> params;            // parameter variables, track order
    std::vector<int> param_sizes;               // digits per parameter track
    std::vector<BigInt> u, v;                   // dimension d
    std::vector<std::vector<long long>> mu;     // [symbol], d*d row-major

    size_t dim() const { return u.size(); }
    int num_symbols() const;
    BigInt value_symbols(std::span<const int> symbols) const;
};

// value at a single natural parameter (the common case)
BigInt linrep_value(const LinearRepresentation& lr, const NumerationSystem& sys,
                    unsigned long long n);

// exact equivalence as functions of the digit input, decided by saturating
// the row space of the difference representation with integer arithmetic
bool linrep_equal(const LinearRepresentation& a, const LinearRepresentation& b);

}  // namespace rote
