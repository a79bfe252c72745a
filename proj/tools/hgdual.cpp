#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hgdual/io.hpp"
#include "hgdual/oracle.hpp"
#include "hgdual/solver.hpp"

using nlohmann::json;
using namespace hgdual;

namespace {

constexpr int kExitDual = 0;
constexpr int kExitNotDual = 1;
constexpr int kExitFound = 0;
constexpr int kExitNone = 1;
constexpr int kExitInputError = 2;

Instance load_pair(const std::string& path, bool drop_isolated_flag) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    Instance i = io::parse_pair(in);
    for (const auto& v : io::isolated_vertices(i.g))
        std::cerr << "warning: vertex " << v << " belongs to no edge of G\n";
    for (const auto& v : io::isolated_vertices(i.h))
        std::cerr << "warning: vertex " << v << " belongs to no edge of H\n";
    if (drop_isolated_flag) i = io::drop_isolated(i);
    return i;
}

json names_json(const Hypergraph& g, const Bitset& s) {
    return json(io::vertex_names(g, s));
}

json stats_json(const SearchStats& s) {
    return json{{"calls", s.calls},
                {"recursion_depth_max", s.recursion_depth_max},
                {"label_sets_tried", s.label_sets_tried},
                {"halving_violations", s.halving_violations}};
}

std::string join(const std::vector<std::string>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ' ';
        out += v[i];
    }
    return out.empty() ? "{}" : out;
}

std::string label_text(const Hypergraph& g, const Label& l) {
    if (l.kind == Label::Kind::Exclude) return "Exc(" + io::vertex_name(g, l.v) + ")";
    return "Inc(" + io::vertex_name(g, l.v) + ",G" + std::to_string(l.g) + ")";
}

int cmd_check(const std::string& path, bool as_json, bool drop_isolated_flag) {
    Instance inst = load_pair(path, drop_isolated_flag);
    Verdict v = check_dual(inst);

    if (as_json) {
        json cert;
        if (v.certificate.witness) {
            cert["in"] = names_json(inst.g, v.certificate.witness->a);
            cert["ex"] = names_json(inst.g, v.certificate.witness->b);
        } else {
            cert["in"] = nullptr;
            cert["ex"] = nullptr;
        }
        cert["new_transversal"] = v.certificate.new_transversal
                                      ? names_json(inst.g, *v.certificate.new_transversal)
                                      : json(nullptr);
        if (v.certificate.offending_edges)
            cert["offending_edges"] = {v.certificate.offending_edges->first,
                                       v.certificate.offending_edges->second};
        json stats = stats_json(v.stats);
        stats["input_size"] = inst.input_size();
        json out{{"status", to_string(v.status)},
                 {"reason", to_string(v.reason)},
                 {"certificate", cert},
                 {"stats", stats}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "status: " << to_string(v.status) << "\n";
        std::cout << "reason: " << to_string(v.reason) << "\n";
        if (v.certificate.new_transversal)
            std::cout << "new-transversal: "
                      << join(io::vertex_names(inst.g, *v.certificate.new_transversal)) << "\n";
        if (v.certificate.witness) {
            std::cout << "witness-in: " << join(io::vertex_names(inst.g, v.certificate.witness->a))
                      << "\n";
            std::cout << "witness-ex: " << join(io::vertex_names(inst.g, v.certificate.witness->b))
                      << "\n";
        }
        if (v.certificate.offending_edges)
            std::cout << "offending-edges: " << v.certificate.offending_edges->first << " "
                      << v.certificate.offending_edges->second << "\n";
        std::cout << "stats: calls=" << v.stats.calls
                  << " depth=" << v.stats.recursion_depth_max
                  << " halving-violations=" << v.stats.halving_violations
                  << " input-size=" << inst.input_size() << "\n";
    }
    return v.status == DualStatus::Dual ? kExitDual : kExitNotDual;
}

int cmd_find(const std::string& path, const std::string& mode, std::uint64_t trials,
             std::uint64_t seed, int jobs, std::optional<std::size_t> max_guess, bool as_json,
             bool drop_isolated_flag) {
    Instance inst = load_pair(path, drop_isolated_flag);

    std::optional<Bitset> found;
    json extra;
    std::ostringstream text;

    if (mode == "gaur") {
        if (check_simple_ip(inst))
            std::cerr << "warning: input is not simple or lacks the intersection property; "
                         "the deterministic search assumes both\n";
        SearchStats stats;
        auto w = det_new_transversal(inst, Assignment::empty(inst.universe_size()), stats);
        if (w) found = w->a;
        extra["stats"] = stats_json(stats);
        text << "stats: calls=" << stats.calls << " depth=" << stats.recursion_depth_max << "\n";
    } else if (mode == "enum") {
        ComputeNtResult r = compute_new_transversal(inst, max_guess, jobs);
        found = r.transversal;
        extra["label_sets_tried"] = r.label_sets_tried;
        text << "label-sets-tried: " << r.label_sets_tried << "\n";
        if (r.sigma) {
            extra["branch"] = r.branch;
            std::vector<std::string> ls;
            for (const Label& l : r.sigma->labels) ls.push_back(label_text(inst.g, l));
            extra["sigma"] = ls;
            text << "branch: " << r.branch << "\n";
            text << "sigma: " << join(ls) << "\n";
        }
    } else if (mode == "random") {
        auto screen = check_simple_ip(inst);
        auto sigma = nd_check_random(inst, trials, seed);
        if (sigma && screen) {
            // accepted by the simplicity/intersection screen before any
            // guess mattered; non-duality is proven, no transversal derived
            if (as_json) {
                json out{{"mode", mode},
                         {"accepted_by", to_string(screen->reason)},
                         {"new_transversal", nullptr}};
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << "refuted: " << to_string(screen->reason) << "\n";
            }
            return kExitFound;
        }
        if (sigma) {
            // an accepted guess yields the transversal through the same
            // augmentation that accepted it
            LoosePair p = sigma_of_labels(inst, *sigma);
            AugmentedPair ap = augment(inst, p);
            bool branch1 = sep(inst, ap).empty() && cov(inst, ap).empty();
            found = branch1 ? ap.a : ap.b.complement();
            std::vector<std::string> ls;
            for (const Label& l : sigma->labels) ls.push_back(label_text(inst.g, l));
            extra["sigma"] = ls;
            text << "sigma: " << join(ls) << "\n";
        }
    } else {
        std::cerr << "unknown mode: " << mode << "\n";
        return kExitInputError;
    }

    if (as_json) {
        json out = extra;
        out["mode"] = mode;
        if (found) {
            out["new_transversal"] = names_json(inst.g, *found);
            out["minimized"] = names_json(inst.g, minimize_transversal(inst.g, *found));
        } else {
            out["new_transversal"] = nullptr;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        if (found) {
            std::cout << "new-transversal: " << join(io::vertex_names(inst.g, *found)) << "\n";
            std::cout << "minimized: "
                      << join(io::vertex_names(inst.g, minimize_transversal(inst.g, *found)))
                      << "\n";
        } else {
            std::cout << "none\n";
        }
        std::cout << text.str();
    }
    return found ? kExitFound : kExitNone;
}

int cmd_dualize(const std::string& path, bool minimize_first, const std::string& out_path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    Hypergraph g = io::parse_hypergraph(in);
    if (!is_simple(g)) {
        if (!minimize_first) {
            std::cerr << "error: input is not simple; rerun with --minimize-first\n";
            return kExitInputError;
        }
        g = minimize(g);
    }
    Hypergraph tr = dualize(g);
    std::sort(tr.edges.begin(), tr.edges.end());  // canonical: ascending bit pattern

    if (out_path.empty()) {
        io::emit_hypergraph(std::cout, tr);
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        io::emit_hypergraph(out, tr);
    }
    return 0;
}

std::string padded(const char* prefix, std::size_t value, int width) {
    std::string s = std::to_string(value);
    while (static_cast<int>(s.size()) < width) s.insert(s.begin(), '0');
    return prefix + s;
}

int cmd_gen(const std::string& kind, std::size_t family_i, std::size_t vertices,
            std::size_t edge_count, std::size_t max_edge_size, std::uint64_t seed,
            const std::string& dnf_path, const std::string& out_path) {
    std::ostringstream buf;
    if (kind == "exp-family") {
        if (family_i < 1 || 2 * family_i > kMaxUniverse) {
            std::cerr << "error: exp-family index out of range\n";
            return kExitInputError;
        }
        std::vector<std::vector<std::string>> g_edges, h_edges;
        std::vector<std::string> xs, ys;
        for (std::size_t j = 1; j <= family_i; ++j) {
            std::string x = "x" + std::to_string(j);
            std::string y = "y" + std::to_string(j);
            g_edges.push_back({x, y});
            xs.push_back(x);
            ys.push_back(y);
        }
        h_edges.push_back(xs);
        h_edges.push_back(ys);
        io::emit_pair(buf, io::pair_from_token_edges(g_edges, h_edges));
    } else if (kind == "random") {
        if (vertices == 0 || vertices > kMaxUniverse || edge_count == 0 || max_edge_size == 0) {
            std::cerr << "error: random generator parameters out of range\n";
            return kExitInputError;
        }
        const int width = static_cast<int>(std::to_string(vertices - 1).size());
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> pick_size(1, std::min(max_edge_size, vertices));
        std::uniform_int_distribution<std::size_t> pick_vertex(0, vertices - 1);
        std::vector<std::vector<std::string>> edges;
        for (std::size_t e = 0; e < edge_count; ++e) {
            std::size_t sz = pick_size(rng);
            std::vector<std::size_t> vs;
            while (vs.size() < sz) {
                std::size_t v = pick_vertex(rng);
                if (std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
            }
            std::sort(vs.begin(), vs.end());
            std::vector<std::string> edge;
            for (std::size_t v : vs) edge.push_back(padded("v", v, width));
            edges.push_back(std::move(edge));
        }
        io::emit_hypergraph(buf, io::from_token_edges(edges));
    } else if (kind == "from-dnf") {
        std::ifstream in(dnf_path);
        if (!in) throw std::runtime_error("cannot open " + dnf_path);
        Hypergraph raw = io::parse_dnf(in);
        Hypergraph hyp = minimize(raw);
        if (hyp.edges.size() != raw.edges.size())
            std::cerr << "warning: DNF is not prime; " << raw.edges.size() - hyp.edges.size()
                      << " redundant term(s) dropped\n";
        io::emit_hypergraph(buf, hyp);
    } else {
        std::cerr << "unknown generator kind: " << kind << "\n";
        return kExitInputError;
    }

    if (out_path.empty()) {
        std::cout << buf.str();
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << buf.str();
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hypergraph duality: decide, refute, dualize"};
    app.require_subcommand(1);

    std::string pair_path, hg_path, out_path, dnf_path;
    std::string mode = "gaur";
    std::string gen_kind;
    bool as_json = false, drop_isolated_flag = false, minimize_first = false;
    std::uint64_t trials = 100000, seed = 0;
    int jobs = 1;
    std::size_t max_guess = 0;
    std::size_t family_i = 2, vertices = 8, edge_count = 6, max_edge_size = 3;

    auto* check = app.add_subcommand("check", "decide duality of a pair file");
    check->add_option("pair", pair_path, "pair file")->required();
    check->add_flag("--json", as_json, "structured report");
    check->add_flag("--drop-isolated", drop_isolated_flag, "drop vertices in no edge of either side");

    auto* find = app.add_subcommand("find", "find a new transversal of G wrt H");
    find->add_option("pair", pair_path, "pair file")->required();
    find->add_option("--mode", mode, "gaur | enum | random")->default_str("gaur");
    find->add_option("--trials", trials, "random-mode sample budget");
    find->add_option("--seed", seed, "random-mode seed");
    find->add_option("--jobs", jobs, "enum-mode worker count");
    find->add_option("--max-guess-size", max_guess, "override the guess-size bound");
    find->add_flag("--json", as_json, "structured report");
    find->add_flag("--drop-isolated", drop_isolated_flag, "drop vertices in no edge of either side");

    auto* dual = app.add_subcommand("dualize", "compute the transversal hypergraph");
    dual->add_option("hypergraph", hg_path, "hypergraph file")->required();
    dual->add_flag("--minimize-first", minimize_first, "minimize a non-simple input");
    dual->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* gen = app.add_subcommand("gen", "emit instances");
    gen->add_option("kind", gen_kind, "random | exp-family | from-dnf")->required();
    gen->add_option("--i", family_i, "exp-family index");
    gen->add_option("--vertices", vertices, "random: universe size");
    gen->add_option("--edges", edge_count, "random: edge count");
    gen->add_option("--max-edge-size", max_edge_size, "random: largest edge");
    gen->add_option("--seed", seed, "random: generator seed");
    gen->add_option("--input", dnf_path, "from-dnf: DNF file");
    gen->add_option("-o,--output", out_path, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        std::optional<std::size_t> guess_override;
        if (max_guess > 0) guess_override = max_guess;
        if (check->parsed()) return cmd_check(pair_path, as_json, drop_isolated_flag);
        if (find->parsed())
            return cmd_find(pair_path, mode, trials, seed, jobs, guess_override, as_json,
                            drop_isolated_flag);
        if (dual->parsed()) return cmd_dualize(hg_path, minimize_first, out_path);
        if (gen->parsed())
            return cmd_gen(gen_kind, family_i, vertices, edge_count, max_edge_size, seed, dnf_path,
                           out_path);
    } catch (const io::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const IntersectionPropertyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
