#pragma once

#include "proxima/geometry.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace proxima {

using VertexId = std::int64_t;
using CellId = std::int64_t;
using CellSet = std::set<CellId>;

struct Cell {
    CellId id = 0;
    int dim = 0;
    std::vector<VertexId> vertices;
};

struct CellComplex {
    std::string name;
    CellSet cells;
    std::vector<VertexId> generators;
};

/// Name under which the universe is resolvable.
inline constexpr std::string_view kUniverseName = "K";

/// Finite planar space of 0-, 1- and 2-cells with a registry of named complexes.
///
/// Built once through the mutating members, then only queried. Queries are
/// const and safe to run concurrently.
class CWSpace {
public:
    void add_vertex(VertexId id, Point2 p);
    void add_cell(Cell cell);
    void register_complex(CellComplex complex);
    void replace_complex(CellComplex complex);
    void set_label(std::string name, VertexId v);

    bool has_vertex(VertexId id) const { return vertices_.contains(id); }
    bool has_cell(CellId id) const { return cells_.contains(id); }
    bool has_complex(std::string_view name) const;

    const Point2& point(VertexId id) const;
    const Cell& cell(CellId id) const;

    /// Registered complex, or the universe for "K". Throws NotFound otherwise.
    CellComplex complex(std::string_view name) const;

    const std::map<VertexId, Point2>& vertices() const { return vertices_; }
    const std::map<CellId, Cell>& cells() const { return cells_; }
    const std::map<std::string, CellComplex, std::less<>>& complexes() const { return complexes_; }
    const std::map<std::string, VertexId, std::less<>>& labels() const { return labels_; }

    /// Vertex id of a label, or the id itself when the text is numeric.
    VertexId resolve_vertex(std::string_view name_or_id) const;

    CellSet universe() const;

    std::optional<CellId> vertex_cell(VertexId v) const;
    std::optional<CellId> edge_cell(VertexId a, VertexId b) const;
    std::optional<CellId> triangle_cell(VertexId a, VertexId b, VertexId c) const;

    /// Existing immediate faces of a cell (dimension one lower).
    std::vector<CellId> faces(CellId id) const;
    /// Cells having `id` as an immediate face.
    const std::vector<CellId>& cofaces(CellId id) const;

    CellId next_cell_id() const { return cells_.empty() ? 0 : cells_.rbegin()->first + 1; }

private:
    std::map<VertexId, Point2> vertices_;
    std::map<CellId, Cell> cells_;
    std::map<std::string, CellComplex, std::less<>> complexes_;
    std::map<std::string, VertexId, std::less<>> labels_;

    std::map<VertexId, CellId> vertex_index_;
    std::map<std::pair<VertexId, VertexId>, CellId> edge_index_;
    std::map<std::vector<VertexId>, CellId> triangle_index_;
    std::map<CellId, std::vector<CellId>> cofaces_;
};

std::set<VertexId> vertices_of(const CWSpace& space, const CellSet& cells);
std::size_t count_dim(const CWSpace& space, const CellSet& cells, int dim);
CellSet cells_of_dim(const CWSpace& space, const CellSet& cells, int dim);

/// Subspace whose universe is `cells`, keeping registered complexes contained in it.
CWSpace restrict_space(const CWSpace& space, const CellSet& cells);

/// Copy of a space with vertex ids renamed through `rename`.
CWSpace relabel_vertices(const CWSpace& space, const std::map<VertexId, VertexId>& rename);

std::string format_cells(const CellSet& cells);

} // namespace proxima
