#include "hgdual/io.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace hgdual {
namespace io {

namespace {

struct RawSection {
    std::vector<std::vector<std::string>> edges;
    bool explicit_empty_hg = false;
    std::size_t start_line = 0;
};

struct RawFile {
    std::vector<RawSection> sections;
    std::size_t last_line = 0;
};

/// Token edges per section; blank lines split sections.
RawFile read_sections(std::istream& in) {
    RawFile file;
    bool in_section = false;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
        if (tokens.empty()) {
            in_section = false;
            continue;
        }
        if (!in_section) {
            file.sections.emplace_back();
            file.sections.back().start_line = lineno;
            in_section = true;
        }
        RawSection& sec = file.sections.back();
        bool has_emptyedge = std::find(tokens.begin(), tokens.end(), "EMPTYEDGE") != tokens.end();
        bool has_emptyhg = std::find(tokens.begin(), tokens.end(), "EMPTYHG") != tokens.end();
        if ((has_emptyedge || has_emptyhg) && tokens.size() != 1)
            throw ParseError(lineno, "EMPTYEDGE/EMPTYHG must stand alone on a line");
        if (has_emptyhg) {
            if (!sec.edges.empty())
                throw ParseError(lineno, "EMPTYHG cannot follow edges in the same section");
            sec.explicit_empty_hg = true;
        } else if (has_emptyedge) {
            if (sec.explicit_empty_hg) throw ParseError(lineno, "edge after EMPTYHG");
            sec.edges.emplace_back();
        } else {
            if (sec.explicit_empty_hg) throw ParseError(lineno, "edge after EMPTYHG");
            sec.edges.push_back(std::move(tokens));
        }
    }
    file.last_line = lineno;
    return file;
}

std::shared_ptr<const std::vector<std::string>> build_universe(
    const std::vector<const std::vector<std::vector<std::string>>*>& sections,
    const std::vector<std::string>& extra) {
    std::vector<std::string> tokens(extra);
    for (const auto* sec : sections)
        for (const auto& edge : *sec)
            for (const auto& t : edge) tokens.push_back(t);
    std::sort(tokens.begin(), tokens.end());
    tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());
    return std::make_shared<const std::vector<std::string>>(std::move(tokens));
}

Hypergraph build_hypergraph(const std::vector<std::vector<std::string>>& edges,
                            std::shared_ptr<const std::vector<std::string>> names) {
    Hypergraph g(names->size());
    g.names = names;
    for (const auto& edge : edges) {
        Bitset e(names->size());
        for (const auto& t : edge) {
            auto it = std::lower_bound(names->begin(), names->end(), t);
            e.set(static_cast<std::size_t>(it - names->begin()));
        }
        g.edges.push_back(std::move(e));
    }
    return g;
}

} // namespace

Hypergraph from_token_edges(const std::vector<std::vector<std::string>>& edges,
                            const std::vector<std::string>& extra_tokens) {
    auto names = build_universe({&edges}, extra_tokens);
    return build_hypergraph(edges, names);
}

Instance pair_from_token_edges(const std::vector<std::vector<std::string>>& g_edges,
                               const std::vector<std::vector<std::string>>& h_edges) {
    auto names = build_universe({&g_edges, &h_edges}, {});
    return Instance(build_hypergraph(g_edges, names), build_hypergraph(h_edges, names));
}

Hypergraph parse_hypergraph(std::istream& in) {
    RawFile file = read_sections(in);
    if (file.sections.empty()) throw ParseError(file.last_line, "no hypergraph in input");
    if (file.sections.size() > 1)
        throw ParseError(file.sections[1].start_line,
                         "expected one hypergraph, found another section");
    return from_token_edges(file.sections[0].edges);
}

Instance parse_pair(std::istream& in) {
    RawFile file = read_sections(in);
    if (file.sections.size() < 2)
        throw ParseError(file.last_line,
                         "a pair file needs two sections separated by a blank line, found " +
                             std::to_string(file.sections.size()));
    if (file.sections.size() > 2)
        throw ParseError(file.sections[2].start_line, "more than two sections in a pair file");
    return pair_from_token_edges(file.sections[0].edges, file.sections[1].edges);
}

Hypergraph parse_dnf(std::istream& in) {
    RawFile file = read_sections(in);
    if (file.sections.empty()) throw ParseError(file.last_line, "no terms in DNF input");
    if (file.sections.size() > 1)
        throw ParseError(file.sections[1].start_line, "DNF input must be a single section");
    for (const auto& term : file.sections[0].edges)
        if (term.empty()) throw ParseError(file.sections[0].start_line,
                                           "the empty term is not a monotone DNF term");
    return from_token_edges(file.sections[0].edges);
}

std::string vertex_name(const Hypergraph& g, VertexId v) {
    if (g.names && v < g.names->size()) return (*g.names)[v];
    return "v" + std::to_string(v);
}

std::vector<std::string> vertex_names(const Hypergraph& g, const Bitset& s) {
    std::vector<std::string> out;
    s.for_each([&](std::size_t v) { out.push_back(vertex_name(g, v)); });
    return out;
}

void emit_hypergraph(std::ostream& out, const Hypergraph& g) {
    if (g.edges.empty()) {
        out << "EMPTYHG\n";
        return;
    }
    for (const Bitset& e : g.edges) {
        if (e.none()) {
            out << "EMPTYEDGE\n";
            continue;
        }
        bool first = true;
        e.for_each([&](std::size_t v) {
            if (!first) out << ' ';
            out << vertex_name(g, v);
            first = false;
        });
        out << '\n';
    }
}

void emit_pair(std::ostream& out, const Instance& i) {
    emit_hypergraph(out, i.g);
    out << '\n';
    emit_hypergraph(out, i.h);
}

std::vector<std::string> isolated_vertices(const Hypergraph& g) {
    Bitset support = g.vertex_support();
    std::vector<std::string> out;
    for (VertexId v = 0; v < g.universe_size; ++v)
        if (!support.test(v)) out.push_back(vertex_name(g, v));
    return out;
}

Instance drop_isolated(const Instance& i) {
    Bitset keep = i.g.vertex_support() | i.h.vertex_support();
    std::vector<std::size_t> old_of_new = keep.to_vector();
    std::vector<std::size_t> new_of_old(i.universe_size(), SIZE_MAX);
    std::vector<std::string> names;
    for (std::size_t n = 0; n < old_of_new.size(); ++n) {
        new_of_old[old_of_new[n]] = n;
        names.push_back(vertex_name(i.g, old_of_new[n]));
    }
    auto shared = std::make_shared<const std::vector<std::string>>(std::move(names));
    auto remap = [&](const Hypergraph& src) {
        Hypergraph dst(old_of_new.size());
        dst.names = shared;
        for (const Bitset& e : src.edges) {
            Bitset ne(old_of_new.size());
            e.for_each([&](std::size_t v) { ne.set(new_of_old[v]); });
            dst.edges.push_back(std::move(ne));
        }
        return dst;
    };
    return Instance(remap(i.g), remap(i.h));
}

} // namespace io
} // namespace hgdual
