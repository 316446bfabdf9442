#include "proxima/document.hpp"

#include "proxima/error.hpp"
#include "proxima/fixtures.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace proxima {

namespace {

struct Token {
    std::string_view text;
    int column = 0;
};

struct Line {
    int number = 0;
    std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        ++number;
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
            std::size_t start = i;
            while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t') ++i;
            if (i > start) line.tokens.push_back({raw.substr(start, i - start), static_cast<int>(start) + 1});
        }
        if (!line.tokens.empty()) lines.push_back(std::move(line));
        if (end == text.size()) break;
        pos = end + 1;
    }
    return lines;
}

[[noreturn]] void fail(ErrorCode code, const Line& line, const Token& tok, const std::string& what) {
    throw ParseError(code, line.number, tok.column, what);
}

std::int64_t integer(const Line& line, const Token& tok) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), v);
    if (ec != std::errc() || ptr != tok.text.data() + tok.text.size()) {
        fail(ErrorCode::SyntaxError, line, tok, "expected an integer, got '" + std::string(tok.text) + "'");
    }
    return v;
}

Rational rational(const Line& line, const Token& tok) {
    try {
        return Rational::parse(tok.text);
    } catch (const Error&) {
        fail(ErrorCode::SyntaxError, line, tok, "expected a rational p/q, got '" + std::string(tok.text) + "'");
    }
}

void need(const Line& line, std::size_t count) {
    if (line.tokens.size() < count) {
        const Token& last = line.tokens.back();
        throw ParseError(ErrorCode::SyntaxError, line.number,
                         last.column + static_cast<int>(last.text.size()), "missing field");
    }
}

struct CellRecord {
    const Line* line;
    Cell cell;
};

struct ComplexRecord {
    const Line* line;
    CellComplex complex;
    std::vector<const Token*> cell_tokens;
    std::vector<const Token*> generator_tokens;
};

} // namespace

SpaceDocument parse_document(std::string_view text) {
    std::vector<Line> lines = tokenize(text);
    if (lines.empty()) throw ParseError(ErrorCode::SyntaxError, 1, 1, "empty document");
    const Line& head = lines.front();
    if (head.tokens[0].text != kDocumentHeader) {
        fail(ErrorCode::SyntaxError, head, head.tokens[0], "expected header '" + std::string(kDocumentHeader) + "'");
    }
    need(head, 2);
    if (head.tokens[1].text != kDocumentVersion) {
        fail(ErrorCode::SyntaxError, head, head.tokens[1], "unsupported version '" + std::string(head.tokens[1].text) + "'");
    }

    SpaceDocument doc;
    std::vector<CellRecord> cells;
    std::vector<ComplexRecord> complexes;
    std::vector<std::pair<const Line*, std::pair<std::string, const Token*>>> labels;
    std::vector<const Line*> maps;
    const Line* default_line = nullptr;
    std::set<std::string> probe_names;

    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        std::string_view kind = line.tokens[0].text;
        if (kind == "vertex") {
            need(line, 4);
            if (line.tokens.size() > 4) fail(ErrorCode::SyntaxError, line, line.tokens[4], "unexpected field");
            VertexId id = integer(line, line.tokens[1]);
            Point2 p{rational(line, line.tokens[2]), rational(line, line.tokens[3])};
            if (doc.space.has_vertex(id)) fail(ErrorCode::DuplicateId, line, line.tokens[1], "duplicate vertex id");
            doc.space.add_vertex(id, p);
        } else if (kind == "cell") {
            need(line, 4);
            Cell c{integer(line, line.tokens[1]), static_cast<int>(integer(line, line.tokens[2])), {}};
            for (std::size_t t = 3; t < line.tokens.size(); ++t) c.vertices.push_back(integer(line, line.tokens[t]));
            cells.push_back({&line, std::move(c)});
        } else if (kind == "complex") {
            need(line, 3);
            ComplexRecord rec{&line, {std::string(line.tokens[1].text), {}, {}}, {}, {}};
            if (line.tokens[2].text != "cells") fail(ErrorCode::SyntaxError, line, line.tokens[2], "expected 'cells'");
            bool gens = false;
            for (std::size_t t = 3; t < line.tokens.size(); ++t) {
                if (line.tokens[t].text == "generators" && !gens) {
                    gens = true;
                    continue;
                }
                integer(line, line.tokens[t]);
                (gens ? rec.generator_tokens : rec.cell_tokens).push_back(&line.tokens[t]);
            }
            complexes.push_back(std::move(rec));
        } else if (kind == "label") {
            need(line, 3);
            integer(line, line.tokens[2]);
            labels.push_back({&line, {std::string(line.tokens[1].text), &line.tokens[2]}});
        } else if (kind == "probe") {
            need(line, 3);
            if (!probe_names.insert(std::string(line.tokens[1].text)).second) {
                fail(ErrorCode::DuplicateId, line, line.tokens[1], "duplicate probe");
            }
            try {
                ProbeFunction::builtin(line.tokens[2].text);
            } catch (const Error&) {
                fail(ErrorCode::SyntaxError, line, line.tokens[2], "unknown extractor");
            }
            doc.probes.push_back({std::string(line.tokens[1].text), std::string(line.tokens[2].text)});
        } else if (kind == "map") {
            need(line, 3);
            maps.push_back(&line);
        } else if (kind == "default") {
            need(line, 2);
            if (default_line) fail(ErrorCode::DuplicateId, line, line.tokens[0], "second default");
            default_line = &line;
        } else {
            fail(ErrorCode::SyntaxError, line, line.tokens[0], "unknown record '" + std::string(kind) + "'");
        }
    }

    for (CellRecord& rec : cells) {
        const Line& line = *rec.line;
        if (doc.space.has_cell(rec.cell.id)) fail(ErrorCode::DuplicateId, line, line.tokens[1], "duplicate cell id");
        for (std::size_t t = 0; t < rec.cell.vertices.size(); ++t) {
            if (!doc.space.has_vertex(rec.cell.vertices[t])) {
                fail(ErrorCode::DanglingReference, line, line.tokens[3 + t], "unknown vertex");
            }
        }
        try {
            doc.space.add_cell(rec.cell);
        } catch (const Error& e) {
            fail(e.code() == ErrorCode::DuplicateId ? ErrorCode::DuplicateId : ErrorCode::InvalidCell, line,
                 line.tokens[1], e.what());
        }
    }
    for (ComplexRecord& rec : complexes) {
        const Line& line = *rec.line;
        for (const Token* tok : rec.cell_tokens) {
            CellId id = integer(line, *tok);
            if (!doc.space.has_cell(id)) fail(ErrorCode::DanglingReference, line, *tok, "unknown cell");
            rec.complex.cells.insert(id);
        }
        for (const Token* tok : rec.generator_tokens) {
            VertexId v = integer(line, *tok);
            if (!doc.space.has_vertex(v)) fail(ErrorCode::DanglingReference, line, *tok, "unknown vertex");
            rec.complex.generators.push_back(v);
        }
        if (doc.space.has_complex(rec.complex.name)) {
            fail(ErrorCode::DuplicateId, line, line.tokens[1], "duplicate complex name");
        }
        doc.space.register_complex(std::move(rec.complex));
    }
    for (const auto& [line, entry] : labels) {
        VertexId v = integer(*line, *entry.second);
        if (!doc.space.has_vertex(v)) fail(ErrorCode::DanglingReference, *line, *entry.second, "unknown vertex");
        if (doc.space.labels().contains(entry.first)) fail(ErrorCode::DuplicateId, *line, line->tokens[1], "duplicate label");
        doc.space.set_label(entry.first, v);
    }
    std::set<std::string> map_names;
    for (const Line* line : maps) {
        DpcMap m;
        m.name = std::string(line->tokens[1].text);
        if (!map_names.insert(m.name).second) fail(ErrorCode::DuplicateId, *line, line->tokens[1], "duplicate map");
        try {
            m.kind = parse_map_kind(line->tokens[2].text);
        } catch (const Error&) {
            fail(ErrorCode::SyntaxError, *line, line->tokens[2], "unknown map kind");
        }
        for (std::size_t t = 3; t < line->tokens.size(); ++t) {
            const Token& tok = line->tokens[t];
            auto eq = tok.text.find('=');
            if (m.kind != MapKind::Table || eq == std::string_view::npos || eq == 0 || eq + 1 == tok.text.size()) {
                fail(ErrorCode::SyntaxError, *line, tok, "expected from=to");
            }
            std::string from(tok.text.substr(0, eq)), to(tok.text.substr(eq + 1));
            if (!doc.space.has_complex(from) || !doc.space.has_complex(to)) {
                fail(ErrorCode::DanglingReference, *line, tok, "unknown complex in map entry");
            }
            if (!m.table.emplace(from, to).second) fail(ErrorCode::DuplicateId, *line, tok, "repeated map entry");
        }
        doc.maps.push_back(std::move(m));
    }
    if (default_line) {
        doc.default_complex = std::string(default_line->tokens[1].text);
        if (!doc.space.has_complex(doc.default_complex)) {
            fail(ErrorCode::DanglingReference, *default_line, default_line->tokens[1], "unknown complex");
        }
    }
    std::sort(doc.probes.begin(), doc.probes.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    std::sort(doc.maps.begin(), doc.maps.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    return doc;
}

std::string serialize(const SpaceDocument& doc) {
    std::ostringstream out;
    out << kDocumentHeader << ' ' << doc.version << '\n';
    for (const auto& [id, p] : doc.space.vertices()) out << "vertex " << id << ' ' << p.x.str() << ' ' << p.y.str() << '\n';
    for (const auto& [id, c] : doc.space.cells()) {
        out << "cell " << id << ' ' << c.dim;
        for (VertexId v : c.vertices) out << ' ' << v;
        out << '\n';
    }
    for (const auto& [name, c] : doc.space.complexes()) {
        out << "complex " << name << " cells";
        for (CellId id : c.cells) out << ' ' << id;
        if (!c.generators.empty()) {
            out << " generators";
            for (VertexId v : c.generators) out << ' ' << v;
        }
        out << '\n';
    }
    for (const auto& [name, v] : doc.space.labels()) out << "label " << name << ' ' << v << '\n';
    auto probes = doc.probes;
    std::sort(probes.begin(), probes.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    for (const ProbeConfig& p : probes) out << "probe " << p.name << ' ' << p.extractor << '\n';
    auto maps = doc.maps;
    std::sort(maps.begin(), maps.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    for (const DpcMap& m : maps) {
        out << "map " << m.name << ' ' << to_string(m.kind);
        for (const auto& [from, to] : m.table) out << ' ' << from << '=' << to;
        out << '\n';
    }
    if (!doc.default_complex.empty()) out << "default " << doc.default_complex << '\n';
    return out.str();
}

SpaceDocument load_document(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::NotFound, "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str());
}

SpaceDocument fixture_document(std::string_view name) {
    ShapeFixture f = build_fixture(name);
    SpaceDocument doc;
    doc.space = std::move(f.space);
    for (std::string_view e : {"beta0", "beta_alpha", "cell_count", "vertex_count", "contour_length"}) {
        doc.probes.push_back({std::string(e), std::string(e)});
    }
    doc.maps.push_back(DpcMap{"f", MapKind::BoundaryComplement, {}});
    doc.maps.push_back(DpcMap{"id", MapKind::Identity, {}});
    doc.default_complex = f.shape;
    return doc;
}

ProbeFunction resolve_probe(const SpaceDocument& doc, std::string_view name) {
    for (const ProbeConfig& p : doc.probes) {
        if (p.name == name) {
            ProbeFunction fn = ProbeFunction::builtin(p.extractor);
            return fn;
        }
    }
    return ProbeFunction::builtin(name);
}

DpcMap resolve_map(const SpaceDocument& doc, std::string_view name) {
    for (const DpcMap& m : doc.maps) {
        if (m.name == name) return m;
    }
    MapKind kind = parse_map_kind(name);
    if (kind == MapKind::Table) throw Error(ErrorCode::NotFound, "a table map must be declared in the document");
    return DpcMap{std::string(name), kind, {}};
}

} // namespace proxima
