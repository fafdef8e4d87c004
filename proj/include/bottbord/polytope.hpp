#pragma once

#include <vector>

#include "bottbord/errors.hpp"

namespace bottbord {

// Facet F^factor_index of a product of simplices; factor is 1-based,
// index runs over 0..n_factor.
struct FacetId {
    int factor;
    int index;
    friend bool operator==(const FacetId&, const FacetId&) = default;
    friend auto operator<=>(const FacetId&, const FacetId&) = default;
};

// Vertex v_{j_1...j_m}; choices[i] picks the vertex of the (i+1)-th simplex
// factor missing from facet F^{i+1}_{j_{i+1}}.
struct VertexId {
    std::vector<int> choices;
    friend bool operator==(const VertexId&, const VertexId&) = default;
};

class SimplexProduct {
public:
    static SimplexProduct make(std::vector<int> dims);

    friend bool operator==(const SimplexProduct&, const SimplexProduct&) = default;

    const std::vector<int>& dims() const { return dims_; }
    int n() const { return n_; }
    int m() const { return m_; }
    int facet_count() const { return n_ + m_; }
    long long vertex_count() const;

    // Canonical facet order: factor-major, index-ascending.
    std::vector<FacetId> facet_list() const;

    // Vertices in lexicographic order of (j_1...j_m).
    std::vector<VertexId> vertex_list() const;

    // The n facets meeting v: all (i,k) with k != j_i.
    std::vector<FacetId> facets_at_vertex(const VertexId& v) const;

    // Minimal non-faces: one full facet set per simplex factor.
    std::vector<std::vector<FacetId>> sr_generators() const;

    // Column offset of facet (factor, 1) in the n-column matrix layout
    // (only facets with index >= 1 own columns). factor is 1-based.
    int col_offset(int factor) const;

private:
    std::vector<int> dims_;
    int n_ = 0;
    int m_ = 0;
};

} // namespace bottbord
