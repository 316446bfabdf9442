#include "proxima/proximity.hpp"

#include "proxima/algebra.hpp"
#include "proxima/error.hpp"
#include "proxima/kernel.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

namespace proxima {

bool same_description(const Description& a, const Description& b) {
    if (a.values.size() != b.values.size()) return false;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        bool exact = a.integral[i] && b.integral[i];
        if (exact ? a.values[i] != b.values[i] : std::abs(a.values[i] - b.values[i]) > kDescriptionTolerance) {
            return false;
        }
    }
    return true;
}

std::string to_string(const Description& d) {
    std::string out = "(";
    for (std::size_t i = 0; i < d.values.size(); ++i) {
        if (i) out += ',';
        char buf[64];
        auto res = d.integral[i] ? std::to_chars(buf, buf + sizeof buf, static_cast<long long>(d.values[i]))
                                 : std::to_chars(buf, buf + sizeof buf, d.values[i]);
        out.append(buf, res.ptr);
    }
    return out + ")";
}

Extractor parse_extractor(std::string_view name) {
    if (name == "beta0") return Extractor::Beta0;
    if (name == "beta_alpha") return Extractor::BetaAlpha;
    if (name == "cell_count") return Extractor::CellCount;
    if (name == "vertex_count") return Extractor::VertexCount;
    if (name == "contour_length") return Extractor::ContourLength;
    throw Error(ErrorCode::NotFound, "unknown extractor '" + std::string(name) + "'");
}

std::string_view to_string(Extractor e) noexcept {
    switch (e) {
    case Extractor::Beta0: return "beta0";
    case Extractor::BetaAlpha: return "beta_alpha";
    case Extractor::CellCount: return "cell_count";
    case Extractor::VertexCount: return "vertex_count";
    case Extractor::ContourLength: return "contour_length";
    }
    return "beta0";
}

Description extract(const CWSpace& space, const CellComplex& complex, Extractor e) {
    CellSet cl = closure(space, complex.cells);
    auto integral = [](std::size_t v) { return Description{{static_cast<double>(v)}, {true}}; };
    switch (e) {
    case Extractor::Beta0: return integral(count_dim(space, cl, 2));
    case Extractor::BetaAlpha:
        return integral(cl.empty() ? 0 : select_generators(space, cl, complex.generators).size());
    case Extractor::CellCount: return integral(cl.size());
    case Extractor::VertexCount: return integral(vertices_of(space, cl).size());
    case Extractor::ContourLength: {
        double length = 0;
        for (auto [a, b] : edge_list(space, contour(space, cl).cells)) {
            length += std::sqrt(squared_distance(space.point(a), space.point(b)).to_double());
        }
        return Description{{length}, {false}};
    }
    }
    return {};
}

ProbeFunction::ProbeFunction(std::string name, std::size_t arity, ProbeFn fn)
    : name_(std::move(name)), arity_(arity), fn_(std::move(fn)) {}

ProbeFunction ProbeFunction::builtin(std::string_view spec) {
    std::vector<Extractor> parts;
    std::size_t start = 0;
    while (start <= spec.size()) {
        std::size_t comma = spec.find(',', start);
        if (comma == std::string_view::npos) comma = spec.size();
        parts.push_back(parse_extractor(spec.substr(start, comma - start)));
        start = comma + 1;
    }
    return ProbeFunction(std::string(spec), parts.size(), [parts](const CWSpace& s, const CellComplex& c) {
        Description out;
        for (Extractor e : parts) {
            Description d = extract(s, c, e);
            out.values.insert(out.values.end(), d.values.begin(), d.values.end());
            out.integral.insert(out.integral.end(), d.integral.begin(), d.integral.end());
        }
        return out;
    });
}

Description ProbeFunction::operator()(const CWSpace& space, const CellComplex& complex) const {
    Description d = fn_(space, complex);
    if (d.values.size() != arity_ || d.integral.size() != arity_) {
        throw Error(ErrorCode::InvalidArgument, "probe " + name_ + " produced the wrong arity");
    }
    return d;
}

Description describe(const CWSpace& space, const CellComplex& complex, const ProbeFunction& probe) {
    if (complex.cells.empty()) {
        return Description{std::vector<double>(probe.arity(), 0.0), std::vector<bool>(probe.arity(), true)};
    }
    return probe(space, complex);
}

bool near(const CWSpace& space, const CellSet& a, const CellSet& b) {
    if (a.empty() || b.empty()) return false;
    CellSet ca = closure(space, a);
    CellSet cb = closure(space, b);
    auto i = ca.begin();
    auto j = cb.begin();
    while (i != ca.end() && j != cb.end()) {
        if (*i == *j) return true;
        if (*i < *j) ++i; else ++j;
    }
    return false;
}

bool near(const CWSpace& space, std::string_view a, std::string_view b) {
    return near(space, space.complex(a).cells, space.complex(b).cells);
}

bool same_element(const ElementDescription& a, const ElementDescription& b) {
    return a.dim == b.dim && a.vertex_count == b.vertex_count && same_description(a.owner, b.owner);
}

DescriptionTable::DescriptionTable(const CWSpace& space, const ProbeFunction& probe) : space_(&space) {
    std::vector<std::pair<std::size_t, std::string>> by_size;
    std::map<std::string, CellSet> closures;
    for (const auto& [name, c] : space.complexes()) {
        closures[name] = closure(space, c.cells);
        by_size.emplace_back(closures[name].size(), name);
    }
    std::sort(by_size.begin(), by_size.end());
    for (const auto& [size, name] : by_size) {
        for (CellId id : closures[name]) owner_.emplace(id, name);
    }
    for (const auto& [id, c] : space.cells()) {
        std::string& name = owner_.try_emplace(id, std::string(kUniverseName)).first->second;
        if (!owner_description_.contains(name)) owner_description_[name] = describe(space, space.complex(name), probe);
        table_[id] = ElementDescription{owner_description_[name], c.dim, static_cast<int>(c.vertices.size())};
    }
}

const ElementDescription& DescriptionTable::at(CellId id) const {
    auto it = table_.find(id);
    if (it == table_.end()) throw Error(ErrorCode::NotFound, "cell " + std::to_string(id));
    return it->second;
}

const std::string& DescriptionTable::owner(CellId id) const {
    auto it = owner_.find(id);
    if (it == owner_.end()) throw Error(ErrorCode::NotFound, "cell " + std::to_string(id));
    return it->second;
}

std::vector<ElementDescription> DescriptionTable::describe_set(const CellSet& cells) const {
    std::vector<ElementDescription> out;
    for (CellId id : cells) {
        const ElementDescription& d = at(id);
        bool known = std::any_of(out.begin(), out.end(), [&](const ElementDescription& e) { return same_element(e, d); });
        if (!known) out.push_back(d);
    }
    return out;
}

bool descriptions_overlap(const std::vector<ElementDescription>& a, const std::vector<ElementDescription>& b) {
    for (const auto& x : a) {
        for (const auto& y : b) {
            if (same_element(x, y)) return true;
        }
    }
    return false;
}

std::vector<ElementRef> descriptive_intersection(const DescriptionTable& ta, const CellSet& a,
                                                 const DescriptionTable& tb, const CellSet& b, bool same_space) {
    if (same_space && &ta.space() != &tb.space()) {
        throw Error(ErrorCode::SpaceMismatch, "operands live in different spaces");
    }
    std::vector<ElementRef> out;
    if (a.empty() || b.empty()) return out;
    auto phi_a = ta.describe_set(a);
    auto phi_b = tb.describe_set(b);
    auto in = [](const std::vector<ElementDescription>& phi, const ElementDescription& d) {
        return std::any_of(phi.begin(), phi.end(), [&](const ElementDescription& e) { return same_element(e, d); });
    };
    auto keep = [&](const ElementDescription& d) { return in(phi_a, d) && in(phi_b, d); };
    if (same_space) {
        for (CellId id : set_union(a, b)) {
            if (keep(ta.at(id))) out.push_back({0, id});
        }
        return out;
    }
    for (CellId id : a) {
        if (keep(ta.at(id))) out.push_back({0, id});
    }
    for (CellId id : b) {
        if (keep(tb.at(id))) out.push_back({1, id});
    }
    return out;
}

std::vector<ElementRef> descriptive_intersection(const CWSpace& sa, const CellSet& a, const CWSpace& sb,
                                                 const CellSet& b, const ProbeFunction& probe, bool same_space) {
    if (same_space && &sa != &sb) throw Error(ErrorCode::SpaceMismatch, "operands live in different spaces");
    DescriptionTable ta(sa, probe);
    if (&sa == &sb) return descriptive_intersection(ta, a, ta, b, same_space);
    DescriptionTable tb(sb, probe);
    return descriptive_intersection(ta, a, tb, b, same_space);
}

bool dnear(const DescriptionTable& ta, const CellSet& a, const DescriptionTable& tb, const CellSet& b) {
    if (a.empty() || b.empty()) return false;
    return descriptions_overlap(ta.describe_set(a), tb.describe_set(b));
}

bool dnear(const CWSpace& sa, const CellSet& a, const CWSpace& sb, const CellSet& b, const ProbeFunction& probe,
           bool same_space) {
    if (same_space && &sa != &sb) throw Error(ErrorCode::SpaceMismatch, "operands live in different spaces");
    DescriptionTable ta(sa, probe);
    if (&sa == &sb) return dnear(ta, a, ta, b);
    DescriptionTable tb(sb, probe);
    return dnear(ta, a, tb, b);
}

std::vector<std::string> descriptive_closure(const DescriptionTable& table, const CellSet& cells) {
    std::vector<std::string> out;
    for (const auto& [name, c] : table.space().complexes()) {
        if (dnear(table, c.cells, table, cells)) out.push_back(name);
    }
    return out;
}

std::vector<std::string> descriptive_closure(const CWSpace& space, std::string_view name,
                                             const ProbeFunction& probe) {
    CellComplex e = space.complex(name);
    DescriptionTable table(space, probe);
    return descriptive_closure(table, e.cells);
}

} // namespace proxima
