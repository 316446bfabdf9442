#pragma once

#include "proxima/space.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace proxima {

struct Description {
    std::vector<double> values;
    std::vector<bool> integral;

    std::size_t arity() const { return values.size(); }
};

inline constexpr double kDescriptionTolerance = 1e-9;

/// Integral components compare exactly, real ones within kDescriptionTolerance.
bool same_description(const Description& a, const Description& b);
std::string to_string(const Description& d);

enum class Extractor { Beta0, BetaAlpha, CellCount, VertexCount, ContourLength };

using ProbeFn = std::function<Description(const CWSpace&, const CellComplex&)>;

class ProbeFunction {
public:
    ProbeFunction(std::string name, std::size_t arity, ProbeFn fn);

    /// A built-in extractor, or several joined by commas ("beta0,cell_count").
    static ProbeFunction builtin(std::string_view spec);

    const std::string& name() const { return name_; }
    std::size_t arity() const { return arity_; }

    Description operator()(const CWSpace& space, const CellComplex& complex) const;

private:
    std::string name_;
    std::size_t arity_;
    ProbeFn fn_;
};

Extractor parse_extractor(std::string_view name);
std::string_view to_string(Extractor e) noexcept;
Description extract(const CWSpace& space, const CellComplex& complex, Extractor e);

Description describe(const CWSpace& space, const CellComplex& complex, const ProbeFunction& probe);

/// Closure overlap.
bool near(const CWSpace& space, const CellSet& a, const CellSet& b);
bool near(const CWSpace& space, std::string_view a, std::string_view b);

/// Description of a single cell: its owner's description, then (dim, vertex count).
struct ElementDescription {
    Description owner;
    int dim = 0;
    int vertex_count = 0;
};

bool same_element(const ElementDescription& a, const ElementDescription& b);

/// Element descriptions of every cell of a space under one probe.
///
/// A cell is owned by the smallest registered complex whose closure holds
/// it (ties by name), or by the universe when no complex does.
class DescriptionTable {
public:
    DescriptionTable(const CWSpace& space, const ProbeFunction& probe);

    const CWSpace& space() const { return *space_; }
    const ElementDescription& at(CellId id) const;
    const std::string& owner(CellId id) const;

    /// Distinct element descriptions of a set.
    std::vector<ElementDescription> describe_set(const CellSet& cells) const;

private:
    const CWSpace* space_;
    std::map<CellId, std::string> owner_;
    std::map<std::string, Description> owner_description_;
    std::map<CellId, ElementDescription> table_;
};

struct ElementRef {
    int side = 0;
    CellId cell = 0;

    friend bool operator==(const ElementRef&, const ElementRef&) = default;
    friend auto operator<=>(const ElementRef&, const ElementRef&) = default;
};

bool descriptions_overlap(const std::vector<ElementDescription>& a, const std::vector<ElementDescription>& b);

/// Elements of A and B whose description lies in Phi(A) and Phi(B).
///
/// With `same_space` both operands must come from one space and the result
/// holds plain cells (side 0). Otherwise elements are tagged with the side
/// they come from, so the operands never share an element.
std::vector<ElementRef> descriptive_intersection(const DescriptionTable& ta, const CellSet& a,
                                                 const DescriptionTable& tb, const CellSet& b, bool same_space);
std::vector<ElementRef> descriptive_intersection(const CWSpace& sa, const CellSet& a, const CWSpace& sb,
                                                 const CellSet& b, const ProbeFunction& probe, bool same_space);

bool dnear(const DescriptionTable& ta, const CellSet& a, const DescriptionTable& tb, const CellSet& b);
bool dnear(const CWSpace& sa, const CellSet& a, const CWSpace& sb, const CellSet& b, const ProbeFunction& probe,
           bool same_space);

/// Registered complexes descriptively near E.
std::vector<std::string> descriptive_closure(const CWSpace& space, std::string_view name,
                                             const ProbeFunction& probe);
std::vector<std::string> descriptive_closure(const DescriptionTable& table, const CellSet& cells);

// Axiom checking.

using SpatialRelation = std::function<bool(const CellSet&, const CellSet&)>;

struct AxiomResult {
    std::string axiom;
    bool passed = true;
    std::size_t trials = 0;
    std::string witness;
};

struct AxiomReport {
    std::vector<AxiomResult> results;

    bool passed() const;
    const AxiomResult& at(std::string_view axiom) const;
};

/// Random connected subsets of a space, grown along the face relation.
class SubcomplexSampler {
public:
    SubcomplexSampler(const CWSpace& space, std::uint64_t seed);

    CellSet connected(std::size_t max_size);
    CellSet grow_from(const CellSet& start, std::size_t max_size);
    /// Empty set, a registered complex, or a connected subset of at most 8 cells.
    CellSet sample();

    std::uint64_t next(std::uint64_t bound);

private:
    const CWSpace* space_;
    std::vector<CellId> cells_;
    std::vector<std::string> names_;
    std::mt19937_64 rng_;
};

AxiomReport check_cech_axioms(const CWSpace& space, const SpatialRelation& relation, std::size_t trials,
                              std::uint64_t seed);

/// dP.0 to dP.3 and the converse of dP.2. dnear evaluates Phi(A) and Phi(B)
/// through two separately built tables, while the descriptive intersection
/// uses the first one only, so the converse catches an unstable probe.
AxiomReport check_descriptive_axioms(const CWSpace& space, const ProbeFunction& probe, std::size_t trials,
                                     std::uint64_t seed);

std::string format_witness(std::initializer_list<const CellSet*> sets);

} // namespace proxima
