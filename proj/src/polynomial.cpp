#include "dompoly/polynomial.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

namespace dompoly {

const char* convention_name(Convention c)
{
    return c == Convention::D ? "D" : "gamma";
}

Convention convention_from_name(const std::string& name)
{
    if (name == "D")
        return Convention::D;
    if (name == "gamma")
        return Convention::gamma;
    throw std::domain_error("unknown convention: " + name);
}

DomPolynomial::DomPolynomial(int n)
    : n_(n)
{
    if (n < 0)
        throw std::domain_error("polynomial context must be nonnegative");
    coeffs_.resize(n + 1);
}

DomPolynomial::DomPolynomial(int n, std::vector<BigInt> coeffs)
    : n_(n)
    , coeffs_(std::move(coeffs))
{
    if (n < 0)
        throw std::domain_error("polynomial context must be nonnegative");
    if (coeffs_.size() != static_cast<std::size_t>(n) + 1)
        throw std::domain_error("coefficient count must be context + 1");
}

BigInt DomPolynomial::coeff(int k) const
{
    if (k < 0 || k > n_)
        return 0;
    return coeffs_[k];
}

void DomPolynomial::set_coeff(int k, BigInt value)
{
    if (k < 0 || k > n_)
        throw std::domain_error("coefficient index outside context");
    coeffs_[k] = std::move(value);
}

bool DomPolynomial::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const BigInt& c) { return c == 0; });
}

BigInt UnivariateSeries::coeff(int i) const
{
    if (i < 0 || i >= length())
        return 0;
    return coeffs_[i];
}

void UnivariateSeries::set_coeff(int i, BigInt value)
{
    if (i < 0)
        throw std::domain_error("negative power");
    if (i >= length())
        coeffs_.resize(i + 1);
    coeffs_[i] = std::move(value);
}

int UnivariateSeries::degree() const
{
    for (int i = length() - 1; i >= 0; --i)
        if (coeffs_[i] != 0)
            return i;
    return -1;
}

UnivariateSeries UnivariateSeries::trimmed() const
{
    std::vector<BigInt> c(coeffs_.begin(), coeffs_.begin() + (degree() + 1));
    return UnivariateSeries(std::move(c));
}

bool UnivariateSeries::operator==(const UnivariateSeries& other) const
{
    int d = degree();
    if (d != other.degree())
        return false;
    for (int i = 0; i <= d; ++i)
        if (coeffs_[i] != other.coeffs_[i])
            return false;
    return true;
}

TruncatedBivariateSeries::TruncatedBivariateSeries(int max_n, int max_k)
    : max_n_(max_n)
    , max_k_(max_k)
{
    if (max_n < 0 || max_k < 0)
        throw std::domain_error("truncation bounds must be nonnegative");
    c_.resize(static_cast<std::size_t>(max_n + 1) * (max_k + 1));
}

const BigInt& TruncatedBivariateSeries::at(int n, int k) const
{
    if (n < 0 || n > max_n_ || k < 0 || k > max_k_)
        throw std::domain_error("bivariate index outside truncation bounds");
    return c_[static_cast<std::size_t>(n) * (max_k_ + 1) + k];
}

void TruncatedBivariateSeries::set(int n, int k, BigInt value)
{
    if (n < 0 || n > max_n_ || k < 0 || k > max_k_)
        throw std::domain_error("bivariate index outside truncation bounds");
    c_[static_cast<std::size_t>(n) * (max_k_ + 1) + k] = std::move(value);
}

bool TruncatedBivariateSeries::operator==(const TruncatedBivariateSeries& other) const
{
    return max_n_ == other.max_n_ && max_k_ == other.max_k_ && c_ == other.c_;
}

std::vector<BigInt> convolve(const std::vector<BigInt>& a, const std::vector<BigInt>& b)
{
    if (a.empty() || b.empty())
        return {};
    std::vector<BigInt> r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    }
    return r;
}

DomPolynomial poly_mul(const DomPolynomial& a, const DomPolynomial& b)
{
    return { a.context() + b.context(), convolve(a.coeffs(), b.coeffs()) };
}

bool poly_equal(const DomPolynomial& a, const DomPolynomial& b)
{
    return a == b;
}

UnivariateSeries to_gamma_convention(const DomPolynomial& p)
{
    std::vector<BigInt> rev(p.coeffs().rbegin(), p.coeffs().rend());
    return UnivariateSeries(std::move(rev));
}

DomPolynomial to_D_convention(const UnivariateSeries& gamma_form, int n)
{
    if (gamma_form.trimmed().length() > n + 1)
        throw std::domain_error("gamma form has degree above the context");
    std::vector<BigInt> c(n + 1);
    for (int k = 0; k <= n; ++k)
        c[k] = gamma_form.coeff(n - k);
    return { n, std::move(c) };
}

BigInt evaluate(const DomPolynomial& p, const BigInt& t)
{
    BigInt acc = 0;
    for (int k = p.context(); k >= 0; --k)
        acc = acc * t + p.coeff(k);
    return acc;
}

UnivariateSeries series_mul(const UnivariateSeries& a, const UnivariateSeries& b)
{
    return UnivariateSeries(convolve(a.coeffs(), b.coeffs()));
}

UnivariateSeries series_add(const UnivariateSeries& a, const UnivariateSeries& b)
{
    std::vector<BigInt> c(std::max(a.length(), b.length()));
    for (int i = 0; i < static_cast<int>(c.size()); ++i)
        c[i] = a.coeff(i) + b.coeff(i);
    return UnivariateSeries(std::move(c));
}

TruncatedBivariateSeries series_mul(const TruncatedBivariateSeries& a,
                                    const TruncatedBivariateSeries& b)
{
    if (a.max_n() != b.max_n() || a.max_k() != b.max_k())
        throw std::domain_error("bivariate operands have mismatched bounds");
    TruncatedBivariateSeries r(a.max_n(), a.max_k());
    for (int n1 = 0; n1 <= a.max_n(); ++n1)
        for (int k1 = 0; k1 <= a.max_k(); ++k1) {
            const BigInt& ca = a.at(n1, k1);
            if (ca == 0)
                continue;
            for (int n2 = 0; n1 + n2 <= a.max_n(); ++n2)
                for (int k2 = 0; k1 + k2 <= a.max_k(); ++k2) {
                    const BigInt& cb = b.at(n2, k2);
                    if (cb == 0)
                        continue;
                    r.set(n1 + n2, k1 + k2, r.at(n1 + n2, k1 + k2) + ca * cb);
                }
        }
    return r;
}

TruncatedBivariateSeries series_sub(const TruncatedBivariateSeries& a,
                                    const TruncatedBivariateSeries& b)
{
    if (a.max_n() != b.max_n() || a.max_k() != b.max_k())
        throw std::domain_error("bivariate operands have mismatched bounds");
    TruncatedBivariateSeries r(a.max_n(), a.max_k());
    for (int n = 0; n <= a.max_n(); ++n)
        for (int k = 0; k <= a.max_k(); ++k)
            r.set(n, k, a.at(n, k) - b.at(n, k));
    return r;
}

TruncatedBivariateSeries series_truncate(const TruncatedBivariateSeries& a,
                                         int max_n, int max_k)
{
    if (max_n > a.max_n() || max_k > a.max_k())
        throw std::domain_error("cannot truncate to larger bounds");
    TruncatedBivariateSeries r(max_n, max_k);
    for (int n = 0; n <= max_n; ++n)
        for (int k = 0; k <= max_k; ++k)
            r.set(n, k, a.at(n, k));
    return r;
}

namespace {

    // Coefficients by ascending power of t in the requested convention.
    std::vector<BigInt> rendered_coeffs(const DomPolynomial& p, Convention c)
    {
        if (c == Convention::D)
            return p.coeffs();
        return { p.coeffs().rbegin(), p.coeffs().rend() };
    }

} // namespace

std::string to_plain_string(const DomPolynomial& p, Convention c)
{
    std::vector<BigInt> coeffs = rendered_coeffs(p, c);
    std::ostringstream out;
    bool first = true;
    for (int j = 0; j < static_cast<int>(coeffs.size()); ++j) {
        if (coeffs[j] == 0)
            continue;
        if (!first)
            out << " + ";
        first = false;
        if (j == 0)
            out << coeffs[j];
        else {
            if (coeffs[j] != 1)
                out << coeffs[j];
            out << "t";
            if (j > 1)
                out << "^" << j;
        }
    }
    if (first)
        out << "0";
    return out.str();
}

nlohmann::json to_json(const DomPolynomial& p, Convention c)
{
    nlohmann::json j;
    j["n"] = p.context();
    j["convention"] = convention_name(c);
    std::vector<std::string> coeffs;
    for (const BigInt& v : rendered_coeffs(p, c))
        coeffs.push_back(v.str());
    j["coeffs"] = coeffs;
    return j;
}

std::string to_csv(const DomPolynomial& p, Convention c)
{
    std::ostringstream out;
    bool first = true;
    for (const BigInt& v : rendered_coeffs(p, c)) {
        if (!first)
            out << ",";
        first = false;
        out << v;
    }
    return out.str();
}

} // namespace dompoly
