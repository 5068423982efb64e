#ifndef DOMPOLY_POLYNOMIAL_HPP
#define DOMPOLY_POLYNOMIAL_HPP

#include "dompoly/bigint.hpp"

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

namespace dompoly {

// The two rendering conventions for a domination polynomial:
//   D:     sum of coeff[k] * t^k       (index = set size)
//   gamma: sum of coeff[k] * t^(n-k)   (exponent counts the complement)
// Internally everything is stored in the D convention.
enum class Convention { D, gamma };

const char* convention_name(Convention c);
Convention convention_from_name(const std::string& name);

// Domination polynomial of an n-vertex graph (or of a one-way digraph,
// with n = |u1|): coeff(k) is the number of dominating k-sets.
class DomPolynomial {
public:
    DomPolynomial() : coeffs_(1) {} // context 0, the zero polynomial
    explicit DomPolynomial(int n);
    DomPolynomial(int n, std::vector<BigInt> coeffs);

    int context() const { return n_; }

    // Zero outside 0..n, so identities can be checked without bounds fuss.
    BigInt coeff(int k) const;
    void set_coeff(int k, BigInt value);

    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    bool is_zero() const;

    bool operator==(const DomPolynomial& other) const
    {
        return n_ == other.n_ && coeffs_ == other.coeffs_;
    }
    bool operator!=(const DomPolynomial& other) const { return !(*this == other); }

private:
    int n_ = 0;
    std::vector<BigInt> coeffs_; // size n_ + 1, index = k
};

// Integer polynomial in one variable; index = power.  Trailing zeros are
// permitted, equality compares the trimmed forms.
class UnivariateSeries {
public:
    UnivariateSeries() = default;
    explicit UnivariateSeries(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {}

    BigInt coeff(int i) const;
    void set_coeff(int i, BigInt value);
    int length() const { return static_cast<int>(coeffs_.size()); }
    int degree() const; // -1 for the zero polynomial
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    UnivariateSeries trimmed() const;

    bool operator==(const UnivariateSeries& other) const;
    bool operator!=(const UnivariateSeries& other) const { return !(*this == other); }

private:
    std::vector<BigInt> coeffs_;
};

// Table of coefficients c(n,k) of x^n y^k for 0 <= n <= maxN, 0 <= k <= maxK.
class TruncatedBivariateSeries {
public:
    TruncatedBivariateSeries(int max_n, int max_k);

    int max_n() const { return max_n_; }
    int max_k() const { return max_k_; }

    const BigInt& at(int n, int k) const;
    void set(int n, int k, BigInt value);

    bool operator==(const TruncatedBivariateSeries& other) const;
    bool operator!=(const TruncatedBivariateSeries& other) const { return !(*this == other); }

private:
    int max_n_, max_k_;
    std::vector<BigInt> c_; // row-major in n
};

// Plain convolution of coefficient vectors.
std::vector<BigInt> convolve(const std::vector<BigInt>& a, const std::vector<BigInt>& b);

// Product polynomial; contexts add (the disjoint-union rule).
DomPolynomial poly_mul(const DomPolynomial& a, const DomPolynomial& b);

bool poly_equal(const DomPolynomial& a, const DomPolynomial& b);

// gamma rendering: coefficient of t^j is coeff(n - j).  The round trip
// through to_D_convention is the identity.
UnivariateSeries to_gamma_convention(const DomPolynomial& p);
DomPolynomial to_D_convention(const UnivariateSeries& gamma_form, int n);

// Exact Horner evaluation of the D form.
BigInt evaluate(const DomPolynomial& p, const BigInt& t);

UnivariateSeries series_mul(const UnivariateSeries& a, const UnivariateSeries& b);
UnivariateSeries series_add(const UnivariateSeries& a, const UnivariateSeries& b);

// Bivariate arithmetic truncates at the operands' shared bounds; bound
// mismatch is a domain error.
TruncatedBivariateSeries series_mul(const TruncatedBivariateSeries& a,
                                    const TruncatedBivariateSeries& b);
TruncatedBivariateSeries series_sub(const TruncatedBivariateSeries& a,
                                    const TruncatedBivariateSeries& b);
TruncatedBivariateSeries series_truncate(const TruncatedBivariateSeries& a,
                                         int max_n, int max_k);

// "1 + 3t + t^2": ascending powers, zero terms skipped, "0" when empty.
std::string to_plain_string(const DomPolynomial& p, Convention c);

// {"n": ..., "convention": "D"|"gamma", "coeffs": [decimal strings]}.
// Coefficients ride as strings so consumers never lose integer width.
nlohmann::json to_json(const DomPolynomial& p, Convention c);

std::string to_csv(const DomPolynomial& p, Convention c);

} // namespace dompoly

#endif
