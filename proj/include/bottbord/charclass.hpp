#pragma once

#include <string>

#include "bottbord/ring.hpp"

namespace bottbord {

// Multiplicity vector (i_1..i_r) with sum j*i_j = target.
struct PartitionIndex {
    std::vector<int> mult; // mult[j-1] = i_j

    int target() const
    {
        int s = 0;
        for (size_t j = 0; j < mult.size(); ++j)
            s += static_cast<int>(j + 1) * mult[j];
        return s;
    }

    // Parts in descending order, optionally scaled (geometric degree labels).
    std::vector<int> parts(int scale = 1) const
    {
        std::vector<int> out;
        for (int j = static_cast<int>(mult.size()); j >= 1; --j)
            for (int c = 0; c < mult[j - 1]; ++c)
                out.push_back(scale * j);
        return out;
    }

    friend bool operator==(const PartitionIndex&, const PartitionIndex&) = default;
};

// All partitions of target with parts <= max_part, largest-part-first order.
std::vector<PartitionIndex> partitions(int target, int max_part);

std::string partition_label(const std::vector<int>& parts);

enum class ClassKind { SW, Pontryagin };

template <class C>
struct GradedClass {
    ClassKind kind;
    int degree_scale;
    std::vector<Polynomial<C>> comp; // comp[t] = normal form of internal degree t

    const Polynomial<C>& component(int t) const { return comp.at(t); }
};

struct CharNumberEntry {
    std::vector<int> parts; // geometric degree labels, descending
    Rational value;
};

struct CharNumberReport {
    ClassKind kind = ClassKind::SW;
    bool not_applicable = false; // Pontryagin with n odd: no Pontryagin numbers
    bool sign_convention_dependent = false;
    std::vector<CharNumberEntry> values;
    bool all_zero = true;
};

// Total Stiefel-Whitney class: product over all facets of (1 + v_F),
// reduced after every factor.
template <class C>
GradedClass<C> total_sw(const CohomologyRing<C>& R)
{
    static_assert(std::is_same_v<C, Gf2>, "SW classes live in mod-two cohomology");
    auto p = Polynomial<C>::constant(R.m(), C(1));
    for (const auto& f : R.polytope().facet_list()) {
        p *= Polynomial<C>::constant(R.m(), C(1)) + R.facet_class(f);
        p = R.normal_form(p);
    }
    GradedClass<C> cls{ClassKind::SW, R.degree_scale(), {}};
    for (int t = 0; t <= R.n(); ++t)
        cls.comp.push_back(p.homogeneous_part(t));
    return cls;
}

// Total Pontryagin class: product over all facets of (1 - v_F^2).
inline GradedClass<Rational> total_pontryagin(const CohomologyRing<Rational>& R)
{
    if (R.degree_scale() != 2)
        throw Error(Errc::ModeMismatch, "Pontryagin classes need a quasitoric (d=2) ring");
    auto one = Polynomial<Rational>::constant(R.m(), Rational(1));
    auto p = one;
    for (const auto& f : R.polytope().facet_list()) {
        auto v = R.facet_class(f);
        p *= one - v * v;
        p = R.normal_form(p);
    }
    GradedClass<Rational> cls{ClassKind::Pontryagin, 2, {}};
    for (int t = 0; t <= R.n(); ++t)
        cls.comp.push_back(p.homogeneous_part(t));
    return cls;
}

template <class C>
Rational pairing_to_rational(const C& c)
{
    if constexpr (std::is_same_v<C, Gf2>)
        return Rational(int(c.v));
    else
        return c;
}

// Characteristic numbers: one pairing per partition of the top degree.
// SW: partitions of n, factor w_j at internal degree j, labels scaled by d.
// Pontryagin: partitions of k = n/2, factor p_j at internal degree 2j.
template <class C>
CharNumberReport char_numbers(const CohomologyRing<C>& R, const GradedClass<C>& cls)
{
    CharNumberReport rep;
    rep.kind = cls.kind;
    const int n = R.n();
    int internal_step = 1, label_scale = cls.degree_scale, top = n;
    if (cls.kind == ClassKind::Pontryagin) {
        rep.sign_convention_dependent = true;
        if (n % 2 != 0) {
            rep.not_applicable = true; // dimension 2n not divisible by 4
            return rep;
        }
        internal_step = 2;
        label_scale = 1;
        top = n / 2;
    }
    for (const auto& pi : partitions(top, top)) {
        auto prod = Polynomial<C>::constant(R.m(), C(1));
        bool zero = false;
        for (size_t j = 1; j <= pi.mult.size() && !zero; ++j)
            for (int c = 0; c < pi.mult[j - 1]; ++c) {
                const auto& comp = cls.component(internal_step * static_cast<int>(j));
                if (comp.is_zero_poly()) { zero = true; break; }
                prod *= comp;
                prod = R.normal_form(prod);
            }
        Rational v = zero ? Rational(0) : pairing_to_rational(R.pair_top(prod));
        if constexpr (std::is_same_v<C, Rational>) {
            if (denominator(v) != 1)
                throw Error(Errc::NonIntegralPairing, "characteristic number is not an integer");
        }
        if (v != 0)
            rep.all_zero = false;
        rep.values.push_back({pi.parts(label_scale), v});
    }
    return rep;
}

// s_k from sigma_1..sigma_k by the Newton-Girard partition formula,
// exact rational arithmetic.
Polynomial<Rational> newton_power_sum(const std::vector<Polynomial<Rational>>& sigma, int k);

// Linear forms y_1..y_{n_m} of the last factor's block column of A
// (external labels): y_k = sum_{l != m} a^m_{lk} u_l.
template <class C>
std::vector<Polynomial<C>> last_factor_y_forms(const ReducedVectorMatrix& A)
{
    const auto& P = A.polytope();
    const int m = P.m();
    std::vector<Polynomial<C>> ys;
    for (int k = 1; k <= P.dims()[m - 1]; ++k) {
        auto y = Polynomial<C>::zero(m);
        for (int l = 1; l <= m; ++l)
            if (l != m)
                y += C(A.entry(l, m, k)) * Polynomial<C>::var(m, l);
        ys.push_back(std::move(y));
    }
    return ys;
}

// The sigma-condition for l = 2^k - 1: every elementary symmetric
// polynomial sigma_i of the y-forms with i not of the form l+1-2^j must
// reduce to zero.
bool sigma_vanishing_condition(const CohomologyRing<Gf2>& R,
                               const std::vector<Polynomial<Gf2>>& y_forms, int l);

Polynomial<Gf2> first_sw(const CohomologyRing<Gf2>& R);

// Thm-4.7-style predicate: pairing of u_m^n + sum_k (u_m + y_k)^n for the
// last factor in the triangular order; nonzero forces a nonzero Pontryagin
// number.
Rational power_sum_obstruction(const CohomologyRing<Rational>& R);

} // namespace bottbord
