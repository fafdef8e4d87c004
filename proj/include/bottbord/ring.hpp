#pragma once

#include <memory>
#include <mutex>
#include <numeric>
#include <optional>

#include "bottbord/charmatrix.hpp"
#include "bottbord/poly.hpp"

namespace bottbord {

template <class C>
struct CoeffTraits;

template <>
struct CoeffTraits<Gf2> {
    static constexpr CoeffMode mode = CoeffMode::Mod2;
    static constexpr int elimination_sign = 1; // v_i^(k) = u_i + y_ik
};

template <>
struct CoeffTraits<Rational> {
    static constexpr CoeffMode mode = CoeffMode::Integer;
    static constexpr int elimination_sign = -1; // v_i^(k) = -(u_i + y_ik)
};

enum class RingEngine { Auto, Triangular, Generic };

// All monomials of the given total degree, descending graded-lex.
std::vector<Monomial> monomials_of_degree(int nvars, int t);

// H^*(M) of the small cover / quasitoric manifold determined by (P, A),
// presented as Coeff[u_1..u_m] / (g_1..g_m). Two normal-form engines: a
// triangular rewriting engine for matrices conjugate to unipotent upper
// triangular vector form, and a per-degree linear-algebra engine for the
// rest. Whenever a triangularizing factor permutation exists both engines
// work in that permuted variable order, so their canonical forms agree.
template <class C>
class CohomologyRing {
public:
    static CohomologyRing build(const ReducedVectorMatrix& A, int degree_scale,
                                RingEngine choice = RingEngine::Auto)
    {
        if (A.mode() != CoeffTraits<C>::mode)
            throw Error(Errc::ModeMismatch, "coefficient type does not match matrix mode");
        if (!validate_characteristic(A).valid)
            throw Error(Errc::NotCharacteristic, "matrix fails the vertex condition");

        CohomologyRing R;
        R.A_ = A;
        R.d_ = degree_scale;
        auto tri = try_triangularize(A);
        if (choice == RingEngine::Triangular && !tri)
            throw Error(Errc::NotTriangularizable, "triangular engine requested");
        R.triangular_ = (choice != RingEngine::Generic) && tri.has_value();
        const int m = A.polytope().m();
        if (tri) {
            R.perm_ = tri->perm;
            R.Ai_ = tri->matrix;
        } else {
            R.perm_.resize(m);
            std::iota(R.perm_.begin(), R.perm_.end(), 0);
            R.Ai_ = A;
        }
        R.inv_perm_.resize(m);
        for (int p = 0; p < m; ++p)
            R.inv_perm_[R.perm_[p]] = p;

        for (int i = 0; i < m; ++i) {
            R.rels_ext_.push_back(relation_of(A, i));
            R.rels_int_.push_back(relation_of(R.Ai_, i));
        }
        if (R.triangular_)
            for (int j = 0; j < m; ++j)
                R.rewrite_.push_back(R.make_rewrite(j));
        return R;
    }

    const ReducedVectorMatrix& matrix() const { return A_; }
    const ReducedVectorMatrix& internal_matrix() const { return Ai_; }
    const SimplexProduct& polytope() const { return A_.polytope(); }
    int n() const { return A_.polytope().n(); }
    int m() const { return A_.polytope().m(); }
    int degree_scale() const { return d_; }
    bool triangular_engine() const { return triangular_; }
    const std::vector<int>& factor_perm() const { return perm_; }
    const std::vector<Polynomial<C>>& relations() const { return rels_ext_; }

    Polynomial<C> to_internal(const Polynomial<C>& p) const { return p.relabel(inv_perm_); }
    Polynomial<C> to_external(const Polynomial<C>& p) const { return p.relabel(perm_); }

    // Class of a facet in the u-variables (external labels).
    Polynomial<C> facet_class(FacetId f) const { return facet_class_of(A_, f.factor - 1, f.index); }

    Polynomial<C> normal_form(const Polynomial<C>& p) const
    {
        return to_external(nf_internal(to_internal(p)));
    }

    int degree_rank(int t) const
    {
        if (t < 0 || t > n())
            throw Error(Errc::DegreeOutOfRange, "degree must lie in 0..n");
        std::lock_guard<std::mutex> lock(*mu_);
        return static_cast<int>(degree_data(t).basis.size());
    }

    // Basis monomials of the degree-t component, external labels.
    std::vector<Monomial> degree_basis(int t) const
    {
        if (t < 0 || t > n())
            throw Error(Errc::DegreeOutOfRange, "degree must lie in 0..n");
        std::lock_guard<std::mutex> lock(*mu_);
        std::vector<Monomial> out;
        for (const auto& mo : degree_data(t).basis)
            out.push_back(relabel_mono(mo, perm_));
        return out;
    }

    void warm_up() const
    {
        std::lock_guard<std::mutex> lock(*mu_);
        for (int t = 0; t <= n(); ++t)
            degree_data(t);
        top_anchor();
    }

    // Fundamental-class pairing of a homogeneous degree-n element,
    // normalized so the vertex class at v_{0...0} pairs to +1.
    C pair_top(const Polynomial<C>& p) const
    {
        if (!p.is_homogeneous(n()))
            throw Error(Errc::NotTopDegree, "pair_top expects a homogeneous degree-n element");
        Polynomial<C> r = nf_internal(to_internal(p));
        if (r.is_zero_poly())
            return C(0);
        std::lock_guard<std::mutex> lock(*mu_);
        const auto& [mo, anchor] = top_anchor();
        return r.coeff(mo) / anchor;
    }

private:
    struct DegreeData {
        std::vector<Monomial> monos; // descending grlex
        std::map<Monomial, int, GrlexLess> index;
        std::map<int, std::map<int, C>> rows; // RREF, pivot col -> sparse row
        std::vector<Monomial> basis;          // internal labels, descending grlex
    };

    static Monomial relabel_mono(const Monomial& mo, const std::vector<int>& to)
    {
        Monomial r{std::vector<int>(mo.exp.size(), 0)};
        for (size_t i = 0; i < mo.exp.size(); ++i)
            r.exp[to[i]] = mo.exp[i];
        return r;
    }

    // v_j^(k) over the given matrix's own labels; j 0-based, k in 0..n_j.
    static Polynomial<C> facet_class_of(const ReducedVectorMatrix& A, int j, int k)
    {
        const int m = A.polytope().m();
        auto u = Polynomial<C>::var(m, j + 1);
        if (k == 0)
            return u;
        Polynomial<C> v = u;
        for (int l = 0; l < m; ++l)
            if (l != j)
                v += C(A.entry(l + 1, j + 1, k)) * Polynomial<C>::var(m, l + 1);
        return C(CoeffTraits<C>::elimination_sign) * v;
    }

    // g_j = product of the facet classes of the j-th factor.
    static Polynomial<C> relation_of(const ReducedVectorMatrix& A, int j)
    {
        auto g = Polynomial<C>::constant(A.polytope().m(), C(1));
        for (int k = 0; k <= A.polytope().dims()[j]; ++k)
            g *= facet_class_of(A, j, k);
        return g;
    }

    // u_j^{n_j+1} -> -sum_t u_j^{n_j+1-t} e_t(y_j1..y_jnj), internal labels.
    Polynomial<C> make_rewrite(int j) const
    {
        const int m = Ai_.polytope().m();
        const int nj = Ai_.polytope().dims()[j];
        std::vector<Polynomial<C>> ys;
        for (int k = 1; k <= nj; ++k) {
            auto y = Polynomial<C>::zero(m);
            for (int l = 0; l < m; ++l)
                if (l != j)
                    y += C(Ai_.entry(l + 1, j + 1, k)) * Polynomial<C>::var(m, l + 1);
            ys.push_back(std::move(y));
        }
        auto e = elementary_symmetric(ys, m);
        auto u = Polynomial<C>::var(m, j + 1);
        auto r = Polynomial<C>::zero(m);
        for (int t = 1; t <= nj; ++t)
            r -= u.pow(nj + 1 - t) * e[t];
        return r;
    }

    Polynomial<C> nf_internal(const Polynomial<C>& p) const
    {
        if (triangular_)
            return nf_triangular(p);
        Polynomial<C> out = Polynomial<C>::zero(p.nvars());
        if (p.is_zero_poly())
            return out;
        std::lock_guard<std::mutex> lock(*mu_);
        for (int t = 0; t <= p.degree(); ++t) {
            auto part = p.homogeneous_part(t);
            if (part.is_zero_poly())
                continue;
            out += nf_generic(part, t);
        }
        return out;
    }

    Polynomial<C> nf_triangular(const Polynomial<C>& p) const
    {
        const auto& dims = Ai_.polytope().dims();
        Polynomial<C> work = p;
        Polynomial<C> out = Polynomial<C>::zero(p.nvars());
        while (!work.is_zero_poly()) {
            // grlex-largest term; rewriting only introduces smaller ones
            auto it = std::prev(work.terms().end());
            Monomial mo = it->first;
            C c = it->second;
            int j = -1;
            for (int i = static_cast<int>(dims.size()) - 1; i >= 0; --i)
                if (mo.exp[i] > dims[i]) { j = i; break; }
            work.add_term(mo, -c);
            if (j < 0) {
                out.add_term(mo, c);
                continue;
            }
            Monomial rest = mo;
            rest.exp[j] -= dims[j] + 1;
            work += Polynomial<C>::monomial(p.nvars(), rest, c) * rewrite_[j];
        }
        return out;
    }

    // Callers hold mu_.
    Polynomial<C> nf_generic(const Polynomial<C>& part, int t) const
    {
        const auto& dd = degree_data(t);
        std::map<int, C> vec;
        for (const auto& [mo, c] : part.terms())
            vec.emplace(dd.index.at(mo), c);
        Polynomial<C> out = Polynomial<C>::zero(part.nvars());
        while (!vec.empty()) {
            auto [col, c] = *vec.begin();
            vec.erase(vec.begin());
            auto rit = dd.rows.find(col);
            if (rit == dd.rows.end()) {
                out.add_term(dd.monos[col], c);
                continue;
            }
            for (const auto& [rc, rv] : rit->second)
                if (rc != col) {
                    auto [vit, inserted] = vec.emplace(rc, C(0));
                    vit->second -= c * rv;
                    if (is_zero(vit->second))
                        vec.erase(vit);
                }
        }
        return out;
    }

    const DegreeData& degree_data(int t) const
    {
        auto it = cache_.find(t);
        if (it != cache_.end())
            return it->second;
        DegreeData dd;
        const int m = Ai_.polytope().m();
        dd.monos = monomials_of_degree(m, t);
        for (int i = 0; i < static_cast<int>(dd.monos.size()); ++i)
            dd.index.emplace(dd.monos[i], i);
        if (triangular_) {
            const auto& dims = Ai_.polytope().dims();
            for (const auto& mo : dd.monos) {
                bool inside = true;
                for (int i = 0; i < m; ++i)
                    if (mo.exp[i] > dims[i]) { inside = false; break; }
                if (inside)
                    dd.basis.push_back(mo);
            }
        } else {
            for (int j = 0; j < m; ++j) {
                int dg = Ai_.polytope().dims()[j] + 1;
                if (dg > t)
                    continue;
                for (const auto& q : monomials_of_degree(m, t - dg)) {
                    std::map<int, C> row;
                    for (const auto& [mo, c] : rels_int_[j].terms()) {
                        Monomial prod = mo;
                        for (int i = 0; i < m; ++i)
                            prod.exp[i] += q.exp[i];
                        int col = dd.index.at(prod);
                        auto [rit, inserted] = row.emplace(col, c);
                        if (!inserted) {
                            rit->second += c;
                            if (is_zero(rit->second))
                                row.erase(rit);
                        }
                    }
                    rref_insert(dd, std::move(row));
                }
            }
            for (int i = 0; i < static_cast<int>(dd.monos.size()); ++i)
                if (!dd.rows.count(i))
                    dd.basis.push_back(dd.monos[i]);
        }
        return cache_.emplace(t, std::move(dd)).first->second;
    }

    static void rref_insert(DegreeData& dd, std::map<int, C> row)
    {
        while (!row.empty()) {
            int piv = row.begin()->first;
            auto rit = dd.rows.find(piv);
            if (rit == dd.rows.end()) {
                C lead = row.begin()->second;
                for (auto& [c, v] : row)
                    v = v / lead;
                // Jordan step keeps stored rows fully reduced.
                for (auto& [p, r] : dd.rows) {
                    auto hit = r.find(piv);
                    if (hit == r.end())
                        continue;
                    C f = hit->second;
                    r.erase(hit);
                    for (const auto& [c, v] : row)
                        if (c != piv) {
                            auto [it2, ins] = r.emplace(c, C(0));
                            it2->second -= f * v;
                            if (is_zero(it2->second))
                                r.erase(it2);
                        }
                }
                dd.rows.emplace(piv, std::move(row));
                return;
            }
            C f = row.begin()->second;
            row.erase(row.begin());
            for (const auto& [c, v] : rit->second)
                if (c != piv) {
                    auto [it2, ins] = row.emplace(c, C(0));
                    it2->second -= f * v;
                    if (is_zero(it2->second))
                        row.erase(it2);
                }
        }
    }

    // Pairing anchor: the top basis monomial and the coefficient the vertex
    // class at v_{0...0} reduces to on it. Callers hold mu_.
    const std::pair<Monomial, C>& top_anchor() const
    {
        if (anchor_)
            return *anchor_;
        const auto& dd = degree_data(n());
        if (dd.basis.size() != 1)
            throw Error(Errc::NonUnitNormalization, "top degree component is not rank one");
        const int m = Ai_.polytope().m();
        auto V = Polynomial<C>::constant(m, C(1));
        for (int j = 0; j < m; ++j)
            for (int k = 1; k <= Ai_.polytope().dims()[j]; ++k)
                V *= facet_class_of(Ai_, j, k);
        Polynomial<C> r;
        if (triangular_)
            r = nf_triangular(V);
        else
            r = nf_generic(V, n());
        if (r.terms().size() != 1 || !(r.terms().begin()->first == dd.basis[0]))
            throw Error(Errc::NonUnitNormalization, "vertex class does not reduce to the top basis monomial");
        C c = r.terms().begin()->second;
        if constexpr (std::is_same_v<C, Rational>) {
            // The basis monomial is integral, so its pairing 1/c must be an
            // integer; c itself need not be (the RREF basis is only a Q-basis).
            BigInt num = numerator(c);
            if (num != 1 && num != -1)
                throw Error(Errc::NonUnitNormalization,
                            "vertex class pairing does not normalize to a unit");
        }
        anchor_.emplace(dd.basis[0], c);
        return *anchor_;
    }

    ReducedVectorMatrix A_;  // original
    ReducedVectorMatrix Ai_; // permuted (internal) copy
    int d_ = 1;
    bool triangular_ = false;
    std::vector<int> perm_;     // perm_[p] = original factor at internal position p
    std::vector<int> inv_perm_; // inverse
    std::vector<Polynomial<C>> rels_ext_;
    std::vector<Polynomial<C>> rels_int_;
    std::vector<Polynomial<C>> rewrite_;
    mutable std::unique_ptr<std::mutex> mu_ = std::make_unique<std::mutex>();
    mutable std::map<int, DegreeData> cache_;
    mutable std::optional<std::pair<Monomial, C>> anchor_;
};

template <class C>
CohomologyRing<C> build_ring(const ReducedVectorMatrix& A, int degree_scale,
                             RingEngine choice = RingEngine::Auto)
{
    return CohomologyRing<C>::build(A, degree_scale, choice);
}

} // namespace bottbord
