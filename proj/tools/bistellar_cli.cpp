#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bistellar/facet_io.hpp"
#include "bistellar/fixtures.hpp"
#include "bistellar/pl_chain.hpp"
#include "bistellar/verify.hpp"

namespace {

using namespace bistellar;

Simplex parse_simplex_arg(const std::string& arg) {
    std::vector<int> verts;
    std::string token;
    std::istringstream in(arg);
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        verts.push_back(std::stoi(token));
    }
    if (verts.empty()) throw Error(Errc::ParseError, "empty simplex argument");
    return Simplex(verts);
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw Error(Errc::ParseError, "cannot open '" + out_path + "' for writing");
    out << text;
}

std::string pair_counts_line(const TriangulatedManifold& K) {
    std::string out;
    for (int h = 0; h <= K.dim(); ++h) {
        if (h) out += " ";
        out += "type" + std::to_string(h) + "=" +
               std::to_string(find_bistellar_pairs(K, h).size());
    }
    return out;
}

std::string render_vector(const std::vector<long long>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out + ")";
}

int cmd_info(const std::string& path, const std::string& format,
             const std::string& out_path) {
    TriangulatedManifold K = parse_facet_file(path);
    FaceVector fv = face_vectors(K);
    if (format == "structured") {
        nlohmann::json j;
        j["dimension"] = K.dim();
        j["vertices"] = K.vertices().size();
        j["facets"] = K.oriented_facets().size();
        j["f"] = fv.f;
        j["h"] = fv.h;
        j["g"] = fv.g;
        j["orientable"] = true;
        nlohmann::json pairs;
        for (int h = 0; h <= K.dim(); ++h)
            pairs["type" + std::to_string(h)] = find_bistellar_pairs(K, h).size();
        j["pairs"] = pairs;
        write_output(j.dump(2) + "\n", out_path);
        return 0;
    }
    std::string text;
    text += "n=" + std::to_string(K.dim()) + "\n";
    text += "vertices=" + std::to_string(K.vertices().size()) +
            " facets=" + std::to_string(K.oriented_facets().size()) + "\n";
    text += "f=" + render_vector(fv.f) + "\n";
    text += "h=" + render_vector(fv.h) + "\n";
    text += "g=" + render_vector(fv.g) + "\n";
    text += "orientable: yes\n";
    text += "pairs: " + pair_counts_line(K) + "\n";
    write_output(text, out_path);
    return 0;
}

std::string matrix_structured(const ExchangeMatrix& B) {
    nlohmann::json j;
    j["index"] = nlohmann::json::array();
    for (const auto& f : B.index()) j["index"].push_back(f.vertices());
    j["entries"] = nlohmann::json::array();
    for (std::size_t i = 0; i < B.size(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t k = 0; k < B.size(); ++k) row.push_back(B.entry(i, k));
        j["entries"].push_back(std::move(row));
    }
    return j.dump(2) + "\n";
}

int cmd_bmatrix(const std::string& path, const std::string& format, bool signed_input,
                const std::string& out_path) {
    ExchangeMatrix B = signed_input
                           ? exchange_matrix(parse_signed_facet_file(path))
                           : exchange_matrix(parse_facet_file(path));
    write_output(format == "structured" ? matrix_structured(B) : to_text(B, true),
                 out_path);
    return 0;
}

int cmd_move(const std::string& path, const std::string& alpha_arg, int fresh_vertex,
             const std::string& out_path) {
    TriangulatedManifold K = parse_facet_file(path);
    Simplex alpha = parse_simplex_arg(alpha_arg);
    BistellarPair chosen;
    bool found = false;
    if (alpha.dim() == K.dim()) {
        int fresh = fresh_vertex > 0 ? fresh_vertex : K.vertex_universe() + 1;
        chosen = {alpha, Simplex{fresh}, 0};
        found = pair_is_valid(K, chosen);
    } else {
        for (int h = 1; h <= K.dim() && !found; ++h) {
            if (alpha.dim() != K.dim() - h) continue;
            for (const auto& p : find_bistellar_pairs(K, h)) {
                if (p.alpha == alpha) {
                    chosen = p;
                    found = true;
                    break;
                }
            }
        }
    }
    if (!found) {
        std::cerr << "error: no bistellar pair at alpha = " << alpha.str() << "\n";
        return 1;
    }
    write_output(emit_facets(apply_move(K, chosen)), out_path);
    return 0;
}

int cmd_orbit(const std::string& path, const std::string& format, std::size_t cap,
              const std::string& out_path) {
    TriangulatedManifold K = parse_facet_file(path);
    ExchangeGraph graph = enumerate_class(K, cap);
    if (format == "dot") {
        write_output(to_dot(graph), out_path);
    } else if (format == "structured") {
        write_output(to_structured(graph), out_path);
    } else {
        std::string text = std::to_string(graph.nodes.size()) + " nodes, " +
                           std::to_string(graph.edges.size()) + " edges, " +
                           std::to_string(pair_set(graph).size()) +
                           " directed pairs\n";
        write_output(text, out_path);
    }
    return 0;
}

template <class S>
std::string relations_text(const ExchangeGraph& graph, const S& s,
                           const std::string& format) {
    Presentation<S> pres = presentation(graph, s);
    auto monomial_str = [&](const ClusterMonomial<S>& m) {
        std::string out = "[" + s.str(m.coeff) + "]";
        for (const auto& [g, e] : m.exps) {
            out += " x" + g.str();
            if (e != 1) out += "^" + std::to_string(e);
        }
        return out;
    };
    if (format == "structured") {
        nlohmann::json j;
        j["generators"] = nlohmann::json::array();
        for (const auto& g : pres.generators) j["generators"].push_back(g.vertices());
        j["exchangeable"] = nlohmann::json::array();
        for (const auto& g : pres.exchangeable) j["exchangeable"].push_back(g.vertices());
        j["relations"] = nlohmann::json::array();
        for (const auto& r : pres.relations) {
            nlohmann::json jr;
            jr["left"] = {r.f.vertices(), r.sigma_f.vertices()};
            nlohmann::json mp, mm;
            mp["coefficient"] = s.str(r.m_plus.coeff);
            mm["coefficient"] = s.str(r.m_minus.coeff);
            mp["exponents"] = nlohmann::json::array();
            for (const auto& [g, e] : r.m_plus.exps)
                mp["exponents"].push_back({{"face", g.vertices()}, {"power", e}});
            mm["exponents"] = nlohmann::json::array();
            for (const auto& [g, e] : r.m_minus.exps)
                mm["exponents"].push_back({{"face", g.vertices()}, {"power", e}});
            jr["m_plus"] = std::move(mp);
            jr["m_minus"] = std::move(mm);
            j["relations"].push_back(std::move(jr));
        }
        return j.dump(2) + "\n";
    }
    std::string text = "generators: " + std::to_string(pres.generators.size()) +
                       ", exchangeable: " + std::to_string(pres.exchangeable.size()) +
                       ", relations: " + std::to_string(pres.relations.size()) + "\n";
    for (const auto& r : pres.relations) {
        text += "x" + r.f.str() + "*x" + r.sigma_f.str() + " = " +
                monomial_str(r.m_plus) + " + " + monomial_str(r.m_minus) + "\n";
    }
    return text;
}

int cmd_relations(const std::string& path, const std::string& semifield,
                  const std::string& format, std::size_t cap,
                  const std::string& out_path) {
    TriangulatedManifold K = parse_facet_file(path);
    ExchangeGraph graph = enumerate_class(K, cap);
    std::string text;
    if (semifield == "trivial")
        text = relations_text(graph, TrivialSemifield{}, format);
    else if (semifield == "tropical")
        text = relations_text(graph, TropicalSemifield{}, format);
    else
        text = relations_text(graph, PosRatSemifield{}, format);
    write_output(text, out_path);
    return 0;
}

int cmd_mutate(const std::string& path, const std::string& alpha_arg,
               const std::string& format, const std::string& out_path) {
    TriangulatedManifold K = parse_facet_file(path);
    Simplex alpha = parse_simplex_arg(alpha_arg);
    BistellarPair chosen;
    bool found = false;
    for (const auto& p : find_middle_pairs(K)) {
        if (p.alpha == alpha) {
            chosen = p;
            found = true;
            break;
        }
    }
    if (!found) {
        std::cerr << "error: no middle bistellar pair at alpha = " << alpha.str()
                  << "\n";
        return 1;
    }
    MoveLocalFrame frame = local_frame(K, chosen);
    ExchangeMatrix mutated = mutate(exchange_matrix(K), frame, local_face_sets(frame));
    write_output(format == "structured" ? matrix_structured(mutated)
                                        : to_text(mutated, true),
                 out_path);
    return 0;
}

int cmd_chain(const std::string& path, int m_max, std::size_t cap,
              const std::string& format, const std::string& out_path) {
    TriangulatedManifold K = parse_facet_file(path);
    Chain2D chain = build_chain_2d(K, m_max, cap);
    if (format == "structured") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& level : chain.levels)
            j.push_back({{"m", level.vertex_count},
                         {"class_size", level.class_size},
                         {"generators", level.algebra.generators.size()},
                         {"relations", level.algebra.relations.size()},
                         {"embedding", "identity-inclusion-verified"}});
        write_output(j.dump(2) + "\n", out_path);
        return 0;
    }
    std::string text;
    for (const auto& level : chain.levels)
        text += "m=" + std::to_string(level.vertex_count) +
                " class_size=" + std::to_string(level.class_size) +
                " generators=" + std::to_string(level.algebra.generators.size()) +
                " relations=" + std::to_string(level.algebra.relations.size()) +
                " embedding=identity-inclusion-verified\n";
    write_output(text, out_path);
    return 0;
}

int cmd_verify_paper() {
    auto results = verify::run_all();
    for (const auto& r : results) {
        std::cout << (r.passed ? "PASS" : "FAIL") << " " << r.name;
        if (!r.passed) std::cout << " -- " << r.detail;
        std::cout << "\n";
    }
    return verify::all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bistellar cluster algebra engine"};
    app.require_subcommand(1);

    std::size_t default_cap = 10000;
    if (const char* env_cap = std::getenv("BISTELLAR_NODE_CAP")) {
        char* end = nullptr;
        unsigned long parsed = std::strtoul(env_cap, &end, 10);
        if (end && *end == '\0' && parsed >= 1) default_cap = parsed;
    }

    std::string path, alpha_arg, out_path;
    std::string format = "text";
    std::string semifield = "trivial";
    std::size_t cap = default_cap;
    int fresh_vertex = 0;
    int m_max = 7;

    auto add_common = [&](CLI::App* cmd, bool needs_path = true) {
        if (needs_path)
            cmd->add_option("path", path, "facet-list file")->required();
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "structured", "dot"}));
        cmd->add_option("--out", out_path, "write output to a file");
    };

    CLI::App* info = app.add_subcommand("info", "f/h/g-vectors and pair counts");
    add_common(info);

    bool signed_input = false;
    CLI::App* bmatrix = app.add_subcommand("bmatrix", "exchange matrix B(K)");
    add_common(bmatrix);
    bmatrix->add_flag("--signed", signed_input,
                      "input carries orientation signs; skip manifold validation");

    CLI::App* move = app.add_subcommand("move", "apply a bistellar move");
    add_common(move);
    move->add_option("--alpha", alpha_arg, "comma-separated vertices of alpha")
        ->required();
    move->add_option("--fresh-vertex", fresh_vertex,
                     "label for the vertex added by a 0-move");

    CLI::App* orbit = app.add_subcommand("orbit", "enumerate the exchange graph");
    add_common(orbit);
    orbit->add_option("--cap", cap, "node cap for the enumeration");

    CLI::App* relations = app.add_subcommand("relations", "exchange relations");
    add_common(relations);
    relations->add_option("--semifield", semifield, "coefficient semifield")
        ->check(CLI::IsMember({"trivial", "tropical", "posrat"}));
    relations->add_option("--cap", cap, "node cap for the enumeration");

    CLI::App* mutate_cmd = app.add_subcommand("mutate", "mutated exchange matrix");
    add_common(mutate_cmd);
    mutate_cmd->add_option("--alpha", alpha_arg, "comma-separated vertices of alpha")
        ->required();

    CLI::App* chain = app.add_subcommand("chain", "2-dimensional class chain");
    add_common(chain);
    chain->add_option("--m-max", m_max, "largest vertex count in the chain");
    chain->add_option("--cap", cap, "node cap per level");

    app.add_subcommand("verify-paper", "run all built-in fixture checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (info->parsed()) return cmd_info(path, format, out_path);
        if (bmatrix->parsed()) return cmd_bmatrix(path, format, signed_input, out_path);
        if (move->parsed()) return cmd_move(path, alpha_arg, fresh_vertex, out_path);
        if (orbit->parsed()) return cmd_orbit(path, format, cap, out_path);
        if (relations->parsed())
            return cmd_relations(path, semifield, format, cap, out_path);
        if (mutate_cmd->parsed()) return cmd_mutate(path, alpha_arg, format, out_path);
        if (chain->parsed()) return cmd_chain(path, m_max, cap, format, out_path);
        return cmd_verify_paper();
    } catch (const bistellar::Error& e) {
        std::cerr << "error [" << bistellar::errc_name(e.code()) << "]: " << e.what()
                  << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
