#pragma once

#include "proxima/cycles.hpp"

#include <string>
#include <vector>

namespace proxima {

enum class Direction { None, Forward, Backward, Path };

/// v = k * generator: `vertex` is reached from `generator` in k edge moves.
struct MoveCertificate {
    VertexId vertex = 0;
    VertexId generator = 0;
    int k = 0;
    Direction direction = Direction::None;

    friend bool operator==(const MoveCertificate&, const MoveCertificate&) = default;
};

struct FreeAbelianRep {
    std::vector<VertexId> generators;
    std::vector<MoveCertificate> certificates;
    std::string group_name;
    /// Edges along which moves are counted.
    EdgeList edges;

    const MoveCertificate* certificate(VertexId v) const;
};

struct BettiNumbers {
    std::size_t beta0 = 0;
    std::size_t beta_alpha = 0;

    friend bool operator==(const BettiNumbers&, const BettiNumbers&) = default;
};

/// Single-generator representation of a loop; ties in distance go forward.
FreeAbelianRep cyclic_rep(const CWSpace& space, const Cycle& c, VertexId generator);

/// Certifies every cycle and contour vertex of cl(A) against its nearest generator.
FreeAbelianRep free_fg_rep(const CWSpace& space, const CellSet& cells, const std::vector<VertexId>& generators);

/// Keeps the usable preferred generators and adds the smallest vertex of each
/// cycle or contour component left without one.
std::vector<VertexId> select_generators(const CWSpace& space, const CellSet& cells,
                                        const std::vector<VertexId>& preferred);

BettiNumbers betti(const CWSpace& space, const CellSet& cells, const FreeAbelianRep& rep);

/// Rechecks uniqueness and minimality of every certificate from scratch.
bool verify_free(const FreeAbelianRep& rep);

std::string_view to_string(Direction d) noexcept;

} // namespace proxima
