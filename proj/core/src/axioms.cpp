#include "proxima/error.hpp"
#include "proxima/kernel.hpp"
#include "proxima/proximity.hpp"

#include <algorithm>

namespace proxima {

bool AxiomReport::passed() const {
    return std::all_of(results.begin(), results.end(), [](const AxiomResult& r) { return r.passed; });
}

const AxiomResult& AxiomReport::at(std::string_view axiom) const {
    for (const AxiomResult& r : results) {
        if (r.axiom == axiom) return r;
    }
    throw Error(ErrorCode::NotFound, "axiom " + std::string(axiom));
}

std::string format_witness(std::initializer_list<const CellSet*> sets) {
    std::string out = "<";
    bool first = true;
    for (const CellSet* s : sets) {
        if (!first) out += ',';
        out += format_cells(*s);
        first = false;
    }
    return out + ">";
}

SubcomplexSampler::SubcomplexSampler(const CWSpace& space, std::uint64_t seed) : space_(&space), rng_(seed) {
    for (const auto& [id, c] : space.cells()) cells_.push_back(id);
    for (const auto& [name, c] : space.complexes()) names_.push_back(name);
}

std::uint64_t SubcomplexSampler::next(std::uint64_t bound) {
    return bound == 0 ? 0 : rng_() % bound;
}

CellSet SubcomplexSampler::grow_from(const CellSet& start, std::size_t max_size) {
    CellSet out = start;
    std::size_t target = 1 + next(max_size);
    std::vector<CellId> frontier;
    auto push_neighbours = [&](CellId id) {
        for (CellId f : space_->faces(id)) {
            if (!out.contains(f)) frontier.push_back(f);
        }
        for (CellId f : space_->cofaces(id)) {
            if (!out.contains(f)) frontier.push_back(f);
        }
    };
    for (CellId id : out) push_neighbours(id);
    while (out.size() < target && !frontier.empty()) {
        std::size_t pick = next(frontier.size());
        CellId id = frontier[pick];
        frontier[pick] = frontier.back();
        frontier.pop_back();
        if (out.insert(id).second) push_neighbours(id);
    }
    return out;
}

CellSet SubcomplexSampler::connected(std::size_t max_size) {
    if (cells_.empty()) return {};
    return grow_from({cells_[next(cells_.size())]}, max_size);
}

CellSet SubcomplexSampler::sample() {
    std::uint64_t kind = next(20);
    if (kind < 2) return {};
    if (kind < 5 && !names_.empty()) return space_->complex(names_[next(names_.size())]).cells;
    return connected(8);
}

namespace {

struct Tally {
    explicit Tally(std::string name) { result.axiom = std::move(name); }

    AxiomResult result;

    void check(bool ok, const std::string& witness) {
        ++result.trials;
        if (!ok && result.passed) {
            result.passed = false;
            result.witness = witness;
        }
    }
};

// B shares a cell with A about a quarter of the time so P.2 and dP.2 see both cases.
void sample_triple(SubcomplexSampler& sampler, CellSet& a, CellSet& b, CellSet& c) {
    a = sampler.sample();
    if (!a.empty() && sampler.next(4) == 0) {
        auto it = a.begin();
        std::advance(it, static_cast<std::ptrdiff_t>(sampler.next(a.size())));
        b = sampler.grow_from({*it}, 8);
    } else {
        b = sampler.sample();
    }
    c = sampler.sample();
}

} // namespace

AxiomReport check_cech_axioms(const CWSpace& space, const SpatialRelation& relation, std::size_t trials,
                              std::uint64_t seed) {
    if (trials == 0) throw Error(ErrorCode::InvalidArgument, "trials must be positive");
    SubcomplexSampler sampler(space, seed);
    Tally p0{"P.0"}, p1{"P.1"}, p2{"P.2"}, p3{"P.3"};
    const CellSet empty;
    for (std::size_t t = 0; t < trials; ++t) {
        CellSet a, b, c;
        sample_triple(sampler, a, b, c);
        p0.check(!relation(a, empty) && !relation(empty, a), format_witness({&a, &empty}));
        p1.check(relation(a, b) == relation(b, a), format_witness({&a, &b}));
        p2.check(set_intersection(a, b).empty() || relation(a, b), format_witness({&a, &b}));
        CellSet bc = set_union(b, c);
        p3.check(relation(a, bc) == (relation(a, b) || relation(a, c)), format_witness({&a, &b, &c}));
    }
    return {{p0.result, p1.result, p2.result, p3.result}};
}

AxiomReport check_descriptive_axioms(const CWSpace& space, const ProbeFunction& probe, std::size_t trials,
                                     std::uint64_t seed) {
    if (trials == 0) throw Error(ErrorCode::InvalidArgument, "trials must be positive");
    DescriptionTable first(space, probe);
    DescriptionTable second(space, probe);
    auto dn = [&](const CellSet& a, const CellSet& b) { return dnear(first, a, second, b); };
    auto dcap = [&](const CellSet& a, const CellSet& b) {
        return descriptive_intersection(first, a, first, b, true);
    };

    SubcomplexSampler sampler(space, seed);
    Tally d0{"dP.0"}, d1{"dP.1"}, d2{"dP.2"}, d3{"dP.3"}, conv{"dP.converse"};
    const CellSet empty;
    for (std::size_t t = 0; t < trials; ++t) {
        CellSet a, b, c;
        sample_triple(sampler, a, b, c);
        d0.check(!dn(a, empty) && !dn(empty, a), format_witness({&a, &empty}));
        bool ab = dn(a, b);
        d1.check(ab == dn(b, a), format_witness({&a, &b}));
        bool overlap = !dcap(a, b).empty();
        d2.check(!overlap || ab, format_witness({&a, &b}));
        conv.check(ab == overlap, format_witness({&a, &b}));
        CellSet bc = set_union(b, c);
        d3.check(dn(a, bc) == (ab || dn(a, c)), format_witness({&a, &b, &c}));
    }
    return {{d0.result, d1.result, d2.result, d3.result, conv.result}};
}

} // namespace proxima
