#include "dompoly/families.hpp"

#include <stdexcept>

namespace dompoly {

BigInt binomial(long long a, long long b)
{
    if (b < 0 || b > a)
        return 0;
    b = std::min(b, a - b);
    BigInt r = 1;
    for (long long i = 1; i <= b; ++i)
        r = r * (a - b + i) / i;
    return r;
}

DomPolynomial complete_poly(int n)
{
    if (n < 1)
        throw std::domain_error("complete graph needs at least one vertex");
    DomPolynomial p(n);
    for (int k = 1; k <= n; ++k)
        p.set_coeff(k, binomial(n, k));
    return p;
}

DomPolynomial union_poly(const std::vector<DomPolynomial>& parts)
{
    DomPolynomial acc(0, { 1 });
    for (const DomPolynomial& p : parts)
        acc = poly_mul(acc, p);
    return acc;
}

DomPolynomial join_poly(const DomPolynomial& pg, const DomPolynomial& ph)
{
    int n = pg.context(), m = ph.context();
    if (n < 1 || m < 1)
        throw std::domain_error("join operands must be nonempty");
    DomPolynomial r(n + m);
    for (int k = 1; k <= n + m; ++k)
        r.set_coeff(k, binomial(n + m, k) - binomial(n, k) - binomial(m, k)
                           + pg.coeff(k) + ph.coeff(k));
    return r;
}

namespace {

    DomPolynomial shift_recurrence(int n, const std::vector<DomPolynomial>& init)
    {
        if (n < 1)
            throw std::domain_error("family polynomials need at least one vertex");
        if (n <= static_cast<int>(init.size()))
            return init[n - 1];
        DomPolynomial a = init[0], b = init[1], c = init[2];
        for (int i = 4; i <= n; ++i) {
            DomPolynomial next(i);
            for (int k = 1; k <= i; ++k)
                next.set_coeff(k, c.coeff(k - 1) + b.coeff(k - 1) + a.coeff(k - 1));
            a = std::move(b);
            b = std::move(c);
            c = std::move(next);
        }
        return c;
    }

} // namespace

DomPolynomial path_poly(int n)
{
    static const std::vector<DomPolynomial> init {
        { 1, { 0, 1 } },       // single vertex
        { 2, { 0, 2, 1 } },    // one edge
        { 3, { 0, 1, 3, 1 } },
    };
    return shift_recurrence(n, init);
}

DomPolynomial cycle_poly(int n)
{
    static const std::vector<DomPolynomial> init {
        { 1, { 0, 1 } },
        { 2, { 0, 2, 1 } },
        { 3, { 0, 3, 3, 1 } },
    };
    return shift_recurrence(n, init);
}

DomPolynomial wheel_poly(int n)
{
    if (n < 4)
        throw std::domain_error("wheels need at least four vertices");
    DomPolynomial rim = cycle_poly(n - 1);
    DomPolynomial p(n);
    for (int k = 1; k <= n; ++k)
        p.set_coeff(k, binomial(n - 1, k - 1) + rim.coeff(k));
    return p;
}

BigInt path_kset_count(long long k, long long t)
{
    if (k < 1 || t < 0)
        return 0;
    BigInt total = 0;
    for (long long m = 0; m <= t / 2 + 1; ++m)
        total += binomial(k - 1, t - m) * binomial(t - m + 2, m);
    return total;
}

BigInt cycle_kset_count(long long k, long long t)
{
    if (k < 1 || t < 0)
        return 0;
    BigInt total = 0;
    for (long long m = 0; m <= t / 2 + 1; ++m)
        total += binomial(k - 1, t - m)
            * (binomial(t - m + 2, m) + 2 * binomial(t - m, m - 2));
    return total;
}

BigInt wheel_kset_count(long long k, long long t)
{
    if (k < 1 || t < 0 || k + t < 4)
        throw std::domain_error("wheels need at least four vertices");
    return binomial(k + t - 1, t) + cycle_kset_count(k, t - 1);
}

namespace {

    UnivariateSeries kset_series(int k, std::vector<BigInt> head)
    {
        if (k < 1)
            throw std::domain_error("set size must be positive");
        UnivariateSeries acc(std::move(head));
        const UnivariateSeries core(std::vector<BigInt> { 1, 1, 1 });
        for (int i = 1; i < k; ++i)
            acc = series_mul(acc, core);
        // multiply by x^k
        std::vector<BigInt> shifted(k);
        shifted.insert(shifted.end(), acc.coeffs().begin(), acc.coeffs().end());
        return UnivariateSeries(std::move(shifted));
    }

} // namespace

UnivariateSeries path_kset_series(int k)
{
    return kset_series(k, { 1, 2, 1 });
}

UnivariateSeries cycle_kset_series(int k)
{
    return kset_series(k, { 1, 2, 3 });
}

TruncatedBivariateSeries kset_generating_table(Family f, int max_n, int max_k)
{
    if (f != Family::path && f != Family::cycle)
        throw std::domain_error("generating tables cover paths and cycles only");
    if (max_n < 1 || max_k < 1)
        throw std::domain_error("truncation bounds must be at least one");
    TruncatedBivariateSeries table(max_n, max_k);
    for (int k = 1; k <= max_k; ++k) {
        UnivariateSeries row = f == Family::path ? path_kset_series(k)
                                                 : cycle_kset_series(k);
        for (int n = 0; n <= max_n; ++n)
            table.set(n, k, row.coeff(n));
    }
    return table;
}

BigInt tribonacci(int n, TribonacciMode mode)
{
    if (n < 0)
        throw std::domain_error("tribonacci index must be nonnegative");
    if (mode == TribonacciMode::recurrence) {
        BigInt a = 1, b = 1, c = 2; // T0, T1, T2
        if (n == 0 || n == 1)
            return 1;
        if (n == 2)
            return 2;
        for (int i = 3; i <= n; ++i) {
            BigInt next = a + b + c;
            a = std::move(b);
            b = std::move(c);
            c = std::move(next);
        }
        return c;
    }
    BigInt total = 0;
    for (long long m = 0; m <= n / 2; ++m)
        for (long long r = 0; r <= n / 3; ++r)
            total += binomial(n - m - 2 * r, m + r) * binomial(m + r, r);
    return total;
}

BigInt min_dominating_count(Family f, int n)
{
    if (f == Family::path) {
        if (n < 1)
            throw std::domain_error("paths need at least one vertex");
    } else if (f == Family::cycle) {
        if (n < 3)
            throw std::domain_error("cycle minimum counts start at three vertices");
    } else {
        throw std::domain_error("minimum counts cover paths and cycles only");
    }
    long long k = n / 3;
    switch (n % 3) {
    case 0:
        return f == Family::path ? BigInt(1) : BigInt(3);
    case 1:
        if (f == Family::path)
            return binomial(k + 2, 2) + k;
        return binomial(k + 2, 2) + 2 * binomial(k, 2) + 3 * k;
    default:
        return f == Family::path ? BigInt(k + 2) : BigInt(3 * k + 2);
    }
}

int domination_number(const DomPolynomial& p)
{
    for (int k = 1; k <= p.context(); ++k)
        if (p.coeff(k) > 0)
            return k;
    throw std::domain_error("polynomial has no dominating set of any size");
}

int domination_number(Family f, int n)
{
    switch (f) {
    case Family::path: return domination_number(path_poly(n));
    case Family::cycle: return domination_number(cycle_poly(n));
    case Family::wheel: return domination_number(wheel_poly(n));
    case Family::complete: return domination_number(complete_poly(n));
    }
    throw std::domain_error("unknown graph family");
}

KSetTriangle formula_triangle(Family f, int max_n)
{
    KSetTriangle t;
    t.family = f;
    t.min_n = f == Family::wheel ? 4 : 1;
    if (max_n < t.min_n)
        throw std::domain_error("triangle upper bound below the family's smallest order");
    for (int n = t.min_n; n <= max_n; ++n) {
        std::vector<BigInt> row;
        for (int k = 1; k <= n; ++k) {
            switch (f) {
            case Family::path:
                row.push_back(path_kset_count(k, n - k));
                break;
            case Family::cycle:
                row.push_back(cycle_kset_count(k, n - k));
                break;
            case Family::wheel:
                row.push_back(wheel_kset_count(k, n - k));
                break;
            case Family::complete:
                row.push_back(binomial(n, k));
                break;
            }
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

} // namespace dompoly
