#ifndef DOMPOLY_BIGINT_HPP
#define DOMPOLY_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace dompoly {

// Counts of dominating sets reach C(n, n/2) and overflow 64 bits near
// n = 67; coefficients are exact arbitrary-precision integers throughout.
using BigInt = boost::multiprecision::cpp_int;

// Binomial coefficient with C(a,b) = 0 whenever b < 0 or b > a.  The
// closed-form k-set sums rely on out-of-range terms vanishing.
BigInt binomial(long long a, long long b);

} // namespace dompoly

#endif
