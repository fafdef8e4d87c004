#include "bottbord/charmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace bottbord {

ReducedVectorMatrix parse_matrix(const std::vector<int>& dims, CoeffMode mode,
                                 std::vector<std::vector<long long>> raw_rows)
{
    ReducedVectorMatrix A;
    A.P_ = SimplexProduct::make(dims);
    A.mode_ = mode;
    const int m = A.P_.m(), n = A.P_.n();
    if (static_cast<int>(raw_rows.size()) != m)
        throw Error(Errc::ShapeMismatch, "expected " + std::to_string(m) + " rows");
    for (const auto& r : raw_rows)
        if (static_cast<int>(r.size()) != n)
            throw Error(Errc::ShapeMismatch, "expected rows of length " + std::to_string(n));
    if (mode == CoeffMode::Mod2)
        for (const auto& r : raw_rows)
            for (long long x : r)
                if (x != 0 && x != 1)
                    throw Error(Errc::EntryOutOfRange, "mod-two entries must be 0 or 1");
    A.rows_ = std::move(raw_rows);
    for (int i = 1; i <= m; ++i)
        for (int k = 1; k <= dims[i - 1]; ++k)
            if (A.entry(i, i, k) != 1)
                throw Error(Errc::DiagonalNotOne,
                            "a^" + std::to_string(i) + "_{" + std::to_string(i) + "," +
                                std::to_string(k) + "} must be 1");
    return A;
}

long long det_ll(std::vector<std::vector<long long>> M)
{
    const int n = static_cast<int>(M.size());
    if (n == 0)
        return 1;
    long long sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (M[k][k] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (M[i][k] != 0) { p = i; break; }
            if (p < 0)
                return 0;
            std::swap(M[k], M[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
        prev = M[k][k];
    }
    return sign * M[n - 1][n - 1];
}

namespace {

bool is_unit(long long det, CoeffMode mode)
{
    if (mode == CoeffMode::Mod2)
        return (det % 2 + 2) % 2 == 1;
    return det == 1 || det == -1;
}

// Submatrix over the factor subset S (0-based) with column choices k[j]
// (1-based index into factor S[j]'s block).
std::vector<std::vector<long long>> subblock(const ReducedVectorMatrix& A,
                                             const std::vector<int>& S,
                                             const std::vector<int>& k)
{
    const int s = static_cast<int>(S.size());
    std::vector<std::vector<long long>> M(s, std::vector<long long>(s));
    for (int r = 0; r < s; ++r)
        for (int c = 0; c < s; ++c)
            M[r][c] = A.entry(S[r] + 1, S[c] + 1, k[c]);
    return M;
}

} // namespace

ValidationReport validate_characteristic(const ReducedVectorMatrix& A)
{
    ValidationReport rep;
    const auto& P = A.polytope();
    for (const auto& v : P.vertex_list()) {
        std::vector<int> S, k;
        for (int i = 0; i < P.m(); ++i)
            if (v.choices[i] >= 1) {
                S.push_back(i);
                k.push_back(v.choices[i]);
            }
        if (S.empty())
            continue;
        long long d = det_ll(subblock(A, S, k));
        if (A.mode() == CoeffMode::Mod2)
            d = (d % 2 + 2) % 2;
        if (!is_unit(d, A.mode())) {
            rep.valid = false;
            rep.failures.push_back({v, d});
        }
    }
    return rep;
}

bool principal_minors_all_one(const ReducedVectorMatrix& A)
{
    const auto& P = A.polytope();
    const int m = P.m();
    // Subsets of factors x choices of one column per chosen factor.
    for (int mask = 1; mask < (1 << m); ++mask) {
        std::vector<int> S;
        for (int i = 0; i < m; ++i)
            if (mask & (1 << i))
                S.push_back(i);
        std::vector<int> k(S.size(), 1);
        for (;;) {
            long long d = det_ll(subblock(A, S, k));
            if (A.mode() == CoeffMode::Mod2)
                d = (d % 2 + 2) % 2;
            if (d != 1)
                return false;
            int j = static_cast<int>(S.size()) - 1;
            while (j >= 0 && k[j] == P.dims()[S[j]])
                k[j--] = 1;
            if (j < 0)
                break;
            ++k[j];
        }
    }
    return true;
}

ReducedVectorMatrix permute_factors(const ReducedVectorMatrix& A, const std::vector<int>& perm)
{
    const auto& P = A.polytope();
    const int m = P.m();
    std::vector<int> dims(m);
    for (int p = 0; p < m; ++p)
        dims[p] = P.dims()[perm[p]];
    auto Q = SimplexProduct::make(dims);
    std::vector<std::vector<long long>> rows(m, std::vector<long long>(P.n()));
    for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q)
            for (int k = 1; k <= dims[q]; ++k)
                rows[p][Q.col_offset(q + 1) + k - 1] = A.entry(perm[p] + 1, perm[q] + 1, k);
    return parse_matrix(dims, A.mode(), std::move(rows));
}

namespace {

bool block_is_zero(const ReducedVectorMatrix& A, int i, int j) // 0-based factors
{
    for (int k = 1; k <= A.polytope().dims()[j]; ++k)
        if (A.entry(i + 1, j + 1, k) != 0)
            return false;
    return true;
}

bool search_perm(const ReducedVectorMatrix& A, std::vector<int>& remaining,
                 std::vector<int>& perm, int forced_last = -1)
{
    if (remaining.empty())
        return true;
    // A factor f can take the next position iff every other remaining
    // factor's block into f's column is zero.
    for (size_t idx = 0; idx < remaining.size(); ++idx) {
        int f = remaining[idx];
        if (f == forced_last && remaining.size() > 1)
            continue;
        bool ok = true;
        for (int g : remaining)
            if (g != f && !block_is_zero(A, g, f)) { ok = false; break; }
        if (!ok)
            continue;
        perm.push_back(f);
        remaining.erase(remaining.begin() + idx);
        if (search_perm(A, remaining, perm, forced_last))
            return true;
        remaining.insert(remaining.begin() + idx, f);
        perm.pop_back();
    }
    return false;
}

} // namespace

std::optional<Triangularization> try_triangularize(const ReducedVectorMatrix& A)
{
    const int m = A.polytope().m();
    if (m > 12)
        throw Error(Errc::TooManyFactors, "permutation search capped at 12 factors");
    std::vector<int> remaining(m), perm;
    for (int i = 0; i < m; ++i)
        remaining[i] = i;
    if (!search_perm(A, remaining, perm))
        return std::nullopt;
    return Triangularization{perm, permute_factors(A, perm)};
}

std::optional<Triangularization> try_triangularize_factor_last(const ReducedVectorMatrix& A,
                                                               int last_factor)
{
    const int m = A.polytope().m();
    if (m > 12)
        throw Error(Errc::TooManyFactors, "permutation search capped at 12 factors");
    if (last_factor < 0 || last_factor >= m)
        throw Error(Errc::BadParams, "factor index out of range");
    std::vector<int> remaining(m), perm;
    for (int i = 0; i < m; ++i)
        remaining[i] = i;
    if (!search_perm(A, remaining, perm, last_factor))
        return std::nullopt;
    return Triangularization{perm, permute_factors(A, perm)};
}

std::optional<Triangularization> try_triangularize_interval_last(const ReducedVectorMatrix& A)
{
    const auto& dims = A.polytope().dims();
    for (int f = static_cast<int>(dims.size()) - 1; f >= 0; --f)
        if (dims[f] == 1)
            if (auto t = try_triangularize_factor_last(A, f))
                return t;
    return std::nullopt;
}

Triangularization triangularize(const ReducedVectorMatrix& A)
{
    auto t = try_triangularize(A);
    if (!t)
        throw Error(Errc::NotTriangularizable, "no factor permutation yields triangular form");
    return *t;
}

bool orientability_column_test(const ReducedVectorMatrix& A)
{
    const auto& P = A.polytope();
    for (int d : P.dims())
        if (d != 1)
            throw Error(Errc::NotACube, "column test applies to cubes only");
    if (A.mode() != CoeffMode::Mod2)
        throw Error(Errc::ModeMismatch, "column test is a mod-two criterion");
    // w_1 = sum_j y_j with y_j read off column j of A, so the coefficient
    // of u_i is the i-th row sum of E_n + A.
    const int n = P.n();
    for (int i = 0; i < n; ++i) {
        long long s = 1; // E_n contribution
        for (int j = 0; j < n; ++j)
            s += A.rows()[i][j];
        if (s % 2 != 0)
            return false;
    }
    return true;
}

ReducedVectorMatrix mod2_reduce(const ReducedVectorMatrix& A)
{
    if (A.mode() != CoeffMode::Integer)
        throw Error(Errc::ModeMismatch, "mod2_reduce expects an integer-mode matrix");
    std::vector<std::vector<long long>> rows = A.rows();
    for (auto& r : rows)
        for (auto& x : r)
            x = (x % 2 + 2) % 2;
    auto B = parse_matrix(A.polytope().dims(), CoeffMode::Mod2, std::move(rows));
    if (!validate_characteristic(B).valid)
        throw Error(Errc::ReducedNotCharacteristic, "mod-2 reduction fails the vertex condition");
    return B;
}

} // namespace bottbord
