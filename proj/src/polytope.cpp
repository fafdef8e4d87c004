#include "bottbord/polytope.hpp"

namespace bottbord {

const char* errc_name(Errc c)
{
    switch (c) {
    case Errc::EmptyDims: return "EmptyDims";
    case Errc::NonPositiveDim: return "NonPositiveDim";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::DiagonalNotOne: return "DiagonalNotOne";
    case Errc::EntryOutOfRange: return "EntryOutOfRange";
    case Errc::NotTriangularizable: return "NotTriangularizable";
    case Errc::TooManyFactors: return "TooManyFactors";
    case Errc::NotACube: return "NotACube";
    case Errc::ReducedNotCharacteristic: return "ReducedNotCharacteristic";
    case Errc::NotCharacteristic: return "NotCharacteristic";
    case Errc::ModeMismatch: return "ModeMismatch";
    case Errc::DegreeOutOfRange: return "DegreeOutOfRange";
    case Errc::NotTopDegree: return "NotTopDegree";
    case Errc::NonUnitNormalization: return "NonUnitNormalization";
    case Errc::NonIntegralPairing: return "NonIntegralPairing";
    case Errc::OddTopDegree: return "OddTopDegree";
    case Errc::OddDegree: return "OddDegree";
    case Errc::BadL: return "BadL";
    case Errc::UnknownTheorem: return "UnknownTheorem";
    case Errc::BadParams: return "BadParams";
    case Errc::InfeasibleSpec: return "InfeasibleSpec";
    case Errc::IoFailure: return "IoFailure";
    case Errc::UsageError: return "UsageError";
    }
    return "UnknownError";
}

SimplexProduct SimplexProduct::make(std::vector<int> dims)
{
    if (dims.empty())
        throw Error(Errc::EmptyDims, "a product of simplices needs at least one factor");
    SimplexProduct P;
    for (int d : dims) {
        if (d < 1)
            throw Error(Errc::NonPositiveDim, "simplex dimension must be >= 1");
        P.n_ += d;
    }
    P.dims_ = std::move(dims);
    P.m_ = static_cast<int>(P.dims_.size());
    return P;
}

long long SimplexProduct::vertex_count() const
{
    long long c = 1;
    for (int d : dims_)
        c *= d + 1;
    return c;
}

std::vector<FacetId> SimplexProduct::facet_list() const
{
    std::vector<FacetId> out;
    out.reserve(facet_count());
    for (int i = 1; i <= m_; ++i)
        for (int k = 0; k <= dims_[i - 1]; ++k)
            out.push_back({i, k});
    return out;
}

std::vector<VertexId> SimplexProduct::vertex_list() const
{
    std::vector<VertexId> out;
    out.reserve(static_cast<size_t>(vertex_count()));
    std::vector<int> j(m_, 0);
    for (;;) {
        out.push_back({j});
        int i = m_ - 1;
        while (i >= 0 && j[i] == dims_[i])
            j[i--] = 0;
        if (i < 0)
            break;
        ++j[i];
    }
    return out;
}

std::vector<FacetId> SimplexProduct::facets_at_vertex(const VertexId& v) const
{
    std::vector<FacetId> out;
    out.reserve(n_);
    for (int i = 1; i <= m_; ++i)
        for (int k = 0; k <= dims_[i - 1]; ++k)
            if (k != v.choices[i - 1])
                out.push_back({i, k});
    return out;
}

std::vector<std::vector<FacetId>> SimplexProduct::sr_generators() const
{
    std::vector<std::vector<FacetId>> out(m_);
    for (int i = 1; i <= m_; ++i)
        for (int k = 0; k <= dims_[i - 1]; ++k)
            out[i - 1].push_back({i, k});
    return out;
}

int SimplexProduct::col_offset(int factor) const
{
    int off = 0;
    for (int i = 1; i < factor; ++i)
        off += dims_[i - 1];
    return off;
}

} // namespace bottbord
