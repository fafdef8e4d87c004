#include "bottbord/charclass.hpp"

#include <sstream>

namespace bottbord {

namespace {

void gen_partitions(int remaining, int max_part, PartitionIndex& cur,
                    std::vector<PartitionIndex>& out)
{
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int j = std::min(max_part, remaining); j >= 1; --j) {
        ++cur.mult[j - 1];
        gen_partitions(remaining - j, j, cur, out);
        --cur.mult[j - 1];
    }
}

} // namespace

std::vector<PartitionIndex> partitions(int target, int max_part)
{
    std::vector<PartitionIndex> out;
    if (target == 0) {
        out.push_back(PartitionIndex{std::vector<int>(std::max(max_part, 0), 0)});
        return out;
    }
    PartitionIndex cur{std::vector<int>(max_part, 0)};
    gen_partitions(target, max_part, cur, out);
    return out;
}

std::string partition_label(const std::vector<int>& parts)
{
    std::ostringstream os;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i)
            os << "+";
        os << parts[i];
    }
    return os.str();
}

Polynomial<Rational> newton_power_sum(const std::vector<Polynomial<Rational>>& sigma, int k)
{
    if (k < 1 || static_cast<int>(sigma.size()) < k)
        throw Error(Errc::BadParams, "need sigma_1..sigma_k");
    const int nvars = sigma[0].nvars();
    auto sum = Polynomial<Rational>::zero(nvars);
    for (const auto& pi : partitions(k, k)) {
        int total = 0;
        Rational coeff = 1;
        for (int j = 1; j <= k; ++j) {
            total += pi.mult[j - 1];
            for (int c = 1; c <= pi.mult[j - 1]; ++c)
                coeff /= c; // builds 1/(i_j!)
        }
        for (int t = 1; t <= total - 1; ++t)
            coeff *= t; // (i_1+...+i_k-1)!
        if (total % 2 != 0)
            coeff = -coeff;
        auto term = Polynomial<Rational>::constant(nvars, coeff);
        for (int j = 1; j <= k; ++j)
            if (pi.mult[j - 1] > 0)
                term *= sigma[j - 1].pow(pi.mult[j - 1]);
        sum += term;
    }
    Rational scale = (k % 2 == 0) ? Rational(k) : Rational(-k);
    return scale * sum;
}

bool sigma_vanishing_condition(const CohomologyRing<Gf2>& R,
                               const std::vector<Polynomial<Gf2>>& y_forms, int l)
{
    if (l < 1 || (l & (l + 1)) != 0) // l+1 must be a power of two
        throw Error(Errc::BadL, "l must be 2^k - 1");
    auto e = elementary_symmetric(y_forms, R.m());
    for (int i = 1; i <= l; ++i) {
        bool exempt = false;
        for (int p = 1; p <= l + 1; p <<= 1)
            if (l + 1 - p == i)
                exempt = true;
        if (exempt)
            continue;
        if (static_cast<int>(e.size()) <= i)
            continue;
        if (!R.normal_form(e[i]).is_zero_poly())
            return false;
    }
    return true;
}

Polynomial<Gf2> first_sw(const CohomologyRing<Gf2>& R)
{
    auto s = Polynomial<Gf2>::zero(R.m());
    for (const auto& f : R.polytope().facet_list())
        s += R.facet_class(f);
    return R.normal_form(s);
}

Rational power_sum_obstruction(const CohomologyRing<Rational>& R)
{
    if (!R.triangular_engine())
        throw Error(Errc::ModeMismatch, "power-sum obstruction needs the triangular engine");
    const int n = R.n();
    if (n % 2 != 0)
        throw Error(Errc::OddDegree, "power-sum obstruction needs even n");
    // Last factor in the triangular (internal) order.
    const auto& Ai = R.internal_matrix();
    const int m = R.m();
    auto um = Polynomial<Rational>::var(m, m);
    auto q = um.pow(n);
    for (int k = 1; k <= Ai.polytope().dims()[m - 1]; ++k) {
        auto y = Polynomial<Rational>::zero(m);
        for (int l = 1; l < m; ++l)
            y += Rational(Ai.entry(l, m, k)) * Polynomial<Rational>::var(m, l);
        q += (um + y).pow(n);
    }
    return R.pair_top(R.to_external(q));
}

} // namespace bottbord
