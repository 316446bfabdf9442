#include "proxima/space.hpp"

#include "proxima/error.hpp"

#include <algorithm>
#include <charconv>

namespace proxima {

namespace {

std::pair<VertexId, VertexId> edge_key(VertexId a, VertexId b) {
    return a < b ? std::pair{a, b} : std::pair{b, a};
}

std::vector<VertexId> sorted(std::vector<VertexId> v) {
    std::sort(v.begin(), v.end());
    return v;
}

const std::vector<CellId> kNoCells;

} // namespace

void CWSpace::add_vertex(VertexId id, Point2 p) {
    if (!vertices_.emplace(id, p).second) {
        throw Error(ErrorCode::DuplicateId, "vertex " + std::to_string(id));
    }
}

void CWSpace::add_cell(Cell cell) {
    if (cells_.contains(cell.id)) throw Error(ErrorCode::DuplicateId, "cell " + std::to_string(cell.id));
    if (cell.dim < 0 || cell.dim > 2 || cell.vertices.size() != static_cast<std::size_t>(cell.dim + 1)) {
        throw Error(ErrorCode::InvalidCell, "cell " + std::to_string(cell.id) + " has dim " +
                                                std::to_string(cell.dim) + " and " +
                                                std::to_string(cell.vertices.size()) + " vertices");
    }
    for (VertexId v : cell.vertices) {
        if (!vertices_.contains(v)) {
            throw Error(ErrorCode::NotFound, "cell " + std::to_string(cell.id) + " references vertex " +
                                                 std::to_string(v));
        }
    }
    auto key = sorted(cell.vertices);
    if (std::adjacent_find(key.begin(), key.end()) != key.end()) {
        throw Error(ErrorCode::InvalidCell, "cell " + std::to_string(cell.id) + " repeats a vertex");
    }
    if (cell.dim == 2 && orientation(point(key[0]), point(key[1]), point(key[2])) == 0) {
        throw Error(ErrorCode::InvalidCell, "cell " + std::to_string(cell.id) + " is degenerate");
    }

    bool fresh = true;
    if (cell.dim == 0) fresh = vertex_index_.emplace(key[0], cell.id).second;
    if (cell.dim == 1) fresh = edge_index_.emplace(edge_key(key[0], key[1]), cell.id).second;
    if (cell.dim == 2) fresh = triangle_index_.emplace(key, cell.id).second;
    if (!fresh) throw Error(ErrorCode::DuplicateId, "cell " + std::to_string(cell.id) + " repeats a realization");

    CellId id = cell.id;
    cells_.emplace(id, std::move(cell));
    for (CellId f : faces(id)) cofaces_[f].push_back(id);
    // cells of the next dimension that were added earlier
    const Cell& c = cells_.at(id);
    if (c.dim == 0) {
        for (const auto& [k, e] : edge_index_) {
            if (k.first == key[0] || k.second == key[0]) cofaces_[id].push_back(e);
        }
    } else if (c.dim == 1) {
        for (const auto& [k, t] : triangle_index_) {
            if (std::includes(k.begin(), k.end(), key.begin(), key.end())) cofaces_[id].push_back(t);
        }
    }
    if (auto it = cofaces_.find(id); it != cofaces_.end()) std::sort(it->second.begin(), it->second.end());
}

void CWSpace::register_complex(CellComplex complex) {
    if (complex.name.empty() || complex.name == kUniverseName) {
        throw Error(ErrorCode::InvalidArgument, "reserved complex name '" + complex.name + "'");
    }
    if (complexes_.contains(complex.name)) throw Error(ErrorCode::DuplicateId, "complex " + complex.name);
    replace_complex(std::move(complex));
}

void CWSpace::replace_complex(CellComplex complex) {
    for (CellId c : complex.cells) {
        if (!cells_.contains(c)) {
            throw Error(ErrorCode::NotFound, "complex " + complex.name + " references cell " + std::to_string(c));
        }
    }
    for (VertexId v : complex.generators) {
        if (!vertices_.contains(v)) {
            throw Error(ErrorCode::NotFound, "complex " + complex.name + " generator " + std::to_string(v));
        }
    }
    std::string name = complex.name;
    complexes_.insert_or_assign(std::move(name), std::move(complex));
}

void CWSpace::set_label(std::string name, VertexId v) {
    if (!vertices_.contains(v)) throw Error(ErrorCode::NotFound, "label " + name + " vertex " + std::to_string(v));
    labels_.insert_or_assign(std::move(name), v);
}

bool CWSpace::has_complex(std::string_view name) const {
    return name == kUniverseName || complexes_.find(name) != complexes_.end();
}

const Point2& CWSpace::point(VertexId id) const {
    auto it = vertices_.find(id);
    if (it == vertices_.end()) throw Error(ErrorCode::NotFound, "vertex " + std::to_string(id));
    return it->second;
}

const Cell& CWSpace::cell(CellId id) const {
    auto it = cells_.find(id);
    if (it == cells_.end()) throw Error(ErrorCode::NotFound, "cell " + std::to_string(id));
    return it->second;
}

CellComplex CWSpace::complex(std::string_view name) const {
    if (name == kUniverseName) return CellComplex{std::string(kUniverseName), universe(), {}};
    auto it = complexes_.find(name);
    if (it == complexes_.end()) throw Error(ErrorCode::NotFound, "complex '" + std::string(name) + "'");
    return it->second;
}

VertexId CWSpace::resolve_vertex(std::string_view name_or_id) const {
    if (auto it = labels_.find(name_or_id); it != labels_.end()) return it->second;
    VertexId v = 0;
    auto [ptr, ec] = std::from_chars(name_or_id.data(), name_or_id.data() + name_or_id.size(), v);
    if (ec != std::errc() || ptr != name_or_id.data() + name_or_id.size() || !vertices_.contains(v)) {
        throw Error(ErrorCode::NotFound, "vertex '" + std::string(name_or_id) + "'");
    }
    return v;
}

CellSet CWSpace::universe() const {
    CellSet all;
    for (const auto& [id, c] : cells_) all.insert(all.end(), id);
    return all;
}

std::optional<CellId> CWSpace::vertex_cell(VertexId v) const {
    if (auto it = vertex_index_.find(v); it != vertex_index_.end()) return it->second;
    return std::nullopt;
}

std::optional<CellId> CWSpace::edge_cell(VertexId a, VertexId b) const {
    if (auto it = edge_index_.find(edge_key(a, b)); it != edge_index_.end()) return it->second;
    return std::nullopt;
}

std::optional<CellId> CWSpace::triangle_cell(VertexId a, VertexId b, VertexId c) const {
    if (auto it = triangle_index_.find(sorted({a, b, c})); it != triangle_index_.end()) return it->second;
    return std::nullopt;
}

std::vector<CellId> CWSpace::faces(CellId id) const {
    const Cell& c = cell(id);
    std::vector<CellId> out;
    if (c.dim == 1) {
        for (VertexId v : c.vertices) {
            if (auto f = vertex_cell(v)) out.push_back(*f);
        }
    } else if (c.dim == 2) {
        const auto& v = c.vertices;
        for (auto [a, b] : {std::pair{v[0], v[1]}, std::pair{v[1], v[2]}, std::pair{v[0], v[2]}}) {
            if (auto f = edge_cell(a, b)) out.push_back(*f);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

const std::vector<CellId>& CWSpace::cofaces(CellId id) const {
    auto it = cofaces_.find(id);
    return it == cofaces_.end() ? kNoCells : it->second;
}

std::set<VertexId> vertices_of(const CWSpace& space, const CellSet& cells) {
    std::set<VertexId> out;
    for (CellId id : cells) {
        const Cell& c = space.cell(id);
        out.insert(c.vertices.begin(), c.vertices.end());
    }
    return out;
}

std::size_t count_dim(const CWSpace& space, const CellSet& cells, int dim) {
    return static_cast<std::size_t>(
        std::count_if(cells.begin(), cells.end(), [&](CellId id) { return space.cell(id).dim == dim; }));
}

CellSet cells_of_dim(const CWSpace& space, const CellSet& cells, int dim) {
    CellSet out;
    for (CellId id : cells) {
        if (space.cell(id).dim == dim) out.insert(out.end(), id);
    }
    return out;
}

CWSpace restrict_space(const CWSpace& space, const CellSet& cells) {
    CWSpace sub;
    for (VertexId v : vertices_of(space, cells)) sub.add_vertex(v, space.point(v));
    for (CellId id : cells) sub.add_cell(space.cell(id));
    for (const auto& [name, c] : space.complexes()) {
        if (std::includes(cells.begin(), cells.end(), c.cells.begin(), c.cells.end())) sub.register_complex(c);
    }
    for (const auto& [name, v] : space.labels()) {
        if (sub.has_vertex(v)) sub.set_label(name, v);
    }
    return sub;
}

CWSpace relabel_vertices(const CWSpace& space, const std::map<VertexId, VertexId>& rename) {
    auto map = [&](VertexId v) {
        auto it = rename.find(v);
        return it == rename.end() ? v : it->second;
    };
    CWSpace out;
    for (const auto& [v, p] : space.vertices()) out.add_vertex(map(v), p);
    for (const auto& [id, c] : space.cells()) {
        Cell copy = c;
        for (VertexId& v : copy.vertices) v = map(v);
        out.add_cell(std::move(copy));
    }
    for (const auto& [name, c] : space.complexes()) {
        CellComplex copy = c;
        for (VertexId& v : copy.generators) v = map(v);
        out.register_complex(std::move(copy));
    }
    for (const auto& [name, v] : space.labels()) out.set_label(name, map(v));
    return out;
}

std::string format_cells(const CellSet& cells) {
    std::string out = "{";
    bool first = true;
    for (CellId id : cells) {
        if (!first) out += ',';
        out += std::to_string(id);
        first = false;
    }
    return out + "}";
}

} // namespace proxima
