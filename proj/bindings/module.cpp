#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "bistellar/facet_io.hpp"
#include "bistellar/fixtures.hpp"
#include "bistellar/pl_chain.hpp"
#include "bistellar/verify.hpp"

namespace py = pybind11;
using namespace bistellar;

namespace {

TriangulatedManifold manifold_from_facets(const std::vector<std::vector<int>>& facets) {
    if (facets.empty()) throw Error(Errc::ParseError, "empty facet list");
    std::vector<Simplex> simplices;
    for (const auto& f : facets) simplices.emplace_back(f);
    return TriangulatedManifold::from_facets(simplices,
                                             static_cast<int>(facets.front().size()) - 1);
}

std::vector<std::vector<int>> facet_lists(const TriangulatedManifold& K) {
    std::vector<std::vector<int>> out;
    for (const auto& of : K.oriented_facets()) out.push_back(of.simplex.vertices());
    return out;
}

py::dict matrix_dict(const ExchangeMatrix& B) {
    py::list index;
    for (const auto& f : B.index()) index.append(f.vertices());
    py::list rows;
    for (std::size_t i = 0; i < B.size(); ++i) {
        py::list row;
        for (std::size_t j = 0; j < B.size(); ++j) row.append(B.entry(i, j));
        rows.append(std::move(row));
    }
    py::dict out;
    out["index"] = std::move(index);
    out["entries"] = std::move(rows);
    return out;
}

BistellarPair resolve_pair(const TriangulatedManifold& K, const std::vector<int>& alpha,
                           int fresh_vertex) {
    Simplex a(alpha);
    if (a.dim() == K.dim()) {
        int fresh = fresh_vertex > 0 ? fresh_vertex : K.vertex_universe() + 1;
        BistellarPair p{a, Simplex{fresh}, 0};
        if (!pair_is_valid(K, p))
            throw Error(Errc::PairNotValid, "no 0-move at " + a.str());
        return p;
    }
    for (int h = 1; h <= K.dim(); ++h) {
        if (a.dim() != K.dim() - h) continue;
        for (const auto& p : find_bistellar_pairs(K, h))
            if (p.alpha == a) return p;
    }
    throw Error(Errc::PairNotValid, "no bistellar pair at " + a.str());
}

}  // namespace

PYBIND11_MODULE(_bistellar, m) {
    m.doc() = "Bistellar cluster algebras over triangulated manifolds";

    py::register_exception<Error>(m, "BistellarError");

    py::class_<TriangulatedManifold>(m, "Manifold")
        .def_static("from_facets", &manifold_from_facets, py::arg("facets"))
        .def_static("from_text",
                    [](const std::string& text) { return parse_facet_string(text); },
                    py::arg("text"))
        .def_property_readonly("dimension", &TriangulatedManifold::dim)
        .def_property_readonly("facets", &facet_lists)
        .def_property_readonly("vertices", &TriangulatedManifold::vertices)
        .def("oriented_facets",
             [](const TriangulatedManifold& K) {
                 std::vector<std::pair<std::vector<int>, int>> out;
                 for (const auto& of : K.oriented_facets())
                     out.emplace_back(of.simplex.vertices(), of.sign);
                 return out;
             })
        .def("face_vectors",
             [](const TriangulatedManifold& K) {
                 FaceVector fv = face_vectors(K);
                 py::dict out;
                 out["f"] = fv.f;
                 out["h"] = fv.h;
                 out["g"] = fv.g;
                 return out;
             })
        .def("key", &TriangulatedManifold::key)
        .def("to_text", [](const TriangulatedManifold& K) { return emit_facets(K); })
        .def("find_pairs",
             [](const TriangulatedManifold& K, int h) {
                 std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
                 for (const auto& p : find_bistellar_pairs(K, h))
                     out.emplace_back(p.alpha.vertices(), p.beta.vertices());
                 return out;
             },
             py::arg("move_type"))
        .def("apply_move",
             [](const TriangulatedManifold& K, const std::vector<int>& alpha,
                int fresh_vertex) {
                 return apply_move(K, resolve_pair(K, alpha, fresh_vertex));
             },
             py::arg("alpha"), py::arg("fresh_vertex") = 0)
        .def("exchange_matrix",
             [](const TriangulatedManifold& K) { return matrix_dict(exchange_matrix(K)); })
        .def("mutated_matrix",
             [](const TriangulatedManifold& K, const std::vector<int>& alpha) {
                 BistellarPair p = resolve_pair(K, alpha, 0);
                 MoveLocalFrame frame = local_frame(K, p);
                 return matrix_dict(
                     mutate(exchange_matrix(K), frame, local_face_sets(frame)));
             },
             py::arg("alpha"))
        .def("__eq__", [](const TriangulatedManifold& a,
                          const TriangulatedManifold& b) { return complexes_equal(a, b); })
        .def("__repr__", [](const TriangulatedManifold& K) {
            return "<Manifold n=" + std::to_string(K.dim()) + " [" + K.key() + "]>";
        });

    m.def("orbit",
          [](const TriangulatedManifold& K, std::size_t cap) {
              ExchangeGraph graph = enumerate_class(K, cap);
              py::dict out;
              out["nodes"] = static_cast<int>(graph.nodes.size());
              out["edges"] = static_cast<int>(graph.edges.size());
              out["directed_pairs"] = static_cast<int>(pair_set(graph).size());
              out["dot"] = to_dot(graph);
              return out;
          },
          py::arg("manifold"), py::arg("cap") = 10000);

    m.def("relations",
          [](const TriangulatedManifold& K, const std::string& semifield,
             std::size_t cap) {
              ExchangeGraph graph = enumerate_class(K, cap);
              auto render = [&](auto s) {
                  auto pres = presentation(graph, s);
                  py::list rel;
                  for (const auto& r : pres.relations) {
                      py::dict jr;
                      jr["left"] = std::make_pair(r.f.vertices(), r.sigma_f.vertices());
                      py::list mp, mm;
                      for (const auto& [g, e] : r.m_plus.exps)
                          mp.append(std::make_pair(g.vertices(), e));
                      for (const auto& [g, e] : r.m_minus.exps)
                          mm.append(std::make_pair(g.vertices(), e));
                      jr["m_plus"] = std::move(mp);
                      jr["m_minus"] = std::move(mm);
                      jr["coeff_plus"] = s.str(r.m_plus.coeff);
                      jr["coeff_minus"] = s.str(r.m_minus.coeff);
                      rel.append(std::move(jr));
                  }
                  py::dict out;
                  py::list gens;
                  for (const auto& g : pres.generators) gens.append(g.vertices());
                  out["generators"] = std::move(gens);
                  out["exchangeable"] = static_cast<int>(pres.exchangeable.size());
                  out["relations"] = std::move(rel);
                  return out;
              };
              if (semifield == "tropical") return render(TropicalSemifield{});
              if (semifield == "posrat") return render(PosRatSemifield{});
              return render(TrivialSemifield{});
          },
          py::arg("manifold"), py::arg("semifield") = "trivial",
          py::arg("cap") = 10000);

    m.def("chain2d",
          [](const TriangulatedManifold& K, int m_max, std::size_t cap) {
              Chain2D chain = build_chain_2d(K, m_max, cap);
              py::list out;
              for (const auto& level : chain.levels) {
                  py::dict jl;
                  jl["m"] = level.vertex_count;
                  jl["class_size"] = static_cast<int>(level.class_size);
                  jl["generators"] = static_cast<int>(level.algebra.generators.size());
                  jl["relations"] = static_cast<int>(level.algebra.relations.size());
                  out.append(std::move(jl));
              }
              return out;
          },
          py::arg("manifold"), py::arg("m_max"), py::arg("cap") = 10000);

    m.def("verify_paper", []() {
        auto results = verify::run_all();
        py::list out;
        for (const auto& r : results) {
            py::dict jr;
            jr["name"] = r.name;
            jr["passed"] = r.passed;
            jr["detail"] = r.detail;
            out.append(std::move(jr));
        }
        return out;
    });

    m.def("random_sphere2",
          [](std::uint64_t seed, int max_vertices) {
              return fixtures::random_sphere2(seed, max_vertices);
          },
          py::arg("seed"), py::arg("max_vertices") = 8);

    m.attr("__version__") = "0.1.0";
}
