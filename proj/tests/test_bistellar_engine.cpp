#include <doctest.h>

#include "bistellar/fixtures.hpp"

using namespace bistellar;

TEST_CASE("pair detection") {
    SUBCASE("boundary of a simplex has no positive-type pairs") {
        TriangulatedManifold K = fixtures::boundary_simplex(3);
        for (int h = 1; h <= 3; ++h) CHECK(find_bistellar_pairs(K, h).empty());
    }
    SUBCASE("the 5-vertex sphere has exactly three flips, all onto (4,5)") {
        auto pairs = find_bistellar_pairs(fixtures::sphere5(), 1);
        std::vector<BistellarPair> expected = {{Simplex{1, 2}, Simplex{4, 5}, 1},
                                               {Simplex{1, 3}, Simplex{4, 5}, 1},
                                               {Simplex{2, 3}, Simplex{4, 5}, 1}};
        CHECK(pairs == expected);
    }
    SUBCASE("one 0-move per facet with a fresh vertex") {
        TriangulatedManifold K = fixtures::sphere5();
        auto pairs = find_bistellar_pairs(K, 0);
        CHECK(pairs.size() == K.oriented_facets().size());
        for (const auto& p : pairs) CHECK(p.beta == (Simplex{6}));
        auto overridden = find_bistellar_pairs(K, 0, 9);
        CHECK(overridden.front().beta == (Simplex{9}));
    }
    SUBCASE("type-n pairs of the 5-vertex sphere are the two apex removals") {
        auto pairs = find_bistellar_pairs(fixtures::sphere5(), 2);
        std::vector<BistellarPair> expected = {{Simplex{4}, Simplex{1, 2, 3}, 2},
                                               {Simplex{5}, Simplex{1, 2, 3}, 2}};
        CHECK(pairs == expected);
    }
}

TEST_CASE("local frames") {
    SUBCASE("h = 1 sigma table") {
        // The h = 1 local structure read off the 5-vertex sphere pair
        // ((1,2),(4,5)).
        TriangulatedManifold K = fixtures::sphere5();
        MoveLocalFrame frame = local_frame(K, {Simplex{1, 2}, Simplex{4, 5}, 1});
        CHECK(frame.ordering == std::vector<int>{1, 2, 4, 5});
        CHECK(frame.sigma_face(Simplex{1, 2}) == (Simplex{4, 5}));
        CHECK(frame.sigma_face(Simplex{1, 4}) == (Simplex{2, 5}));
        CHECK(frame.sigma_face(Simplex{1, 5}) == (Simplex{1, 5}));
        CHECK(frame.sigma_face(Simplex{2, 4}) == (Simplex{2, 4}));
        CHECK(frame.sigma_face(Simplex{2, 5}) == (Simplex{1, 4}));
    }
    SUBCASE("h = 2 signed facets") {
        TriangulatedManifold K = fixtures::sphere4d_with_middle_pair();
        MoveLocalFrame frame = local_frame(K, {Simplex{1, 2, 3}, Simplex{4, 5, 6}, 2});
        // The host orientation fixes the frame up to a global class; the
        // reference F/H lists appear when (1,2,3,4,5) is positive.
        REQUIRE(frame.old_facets.size() == 3);
        REQUIRE(frame.new_facets.size() == 3);
        int global = K.facet_sign(Simplex{1, 2, 3, 4, 5});
        std::vector<OrientedSimplex> expected_old = {
            {Simplex{1, 2, 3, 4, 5}, +global},
            {Simplex{1, 2, 3, 4, 6}, -global},
            {Simplex{1, 2, 3, 5, 6}, +global}};
        std::vector<OrientedSimplex> expected_new = {
            {Simplex{2, 3, 4, 5, 6}, +global},
            {Simplex{1, 3, 4, 5, 6}, -global},
            {Simplex{1, 2, 4, 5, 6}, +global}};
        CHECK(frame.old_facets == expected_old);
        CHECK(frame.new_facets == expected_new);
    }
    SUBCASE("sigma is an involution on every frame") {
        for (std::uint64_t seed : {41u, 42u, 43u}) {
            TriangulatedManifold K = fixtures::random_sphere2(seed);
            for (const auto& p : find_middle_pairs(K)) {
                MoveLocalFrame frame = local_frame(K, p);
                for (int v : frame.ordering)
                    CHECK(frame.sigma_vertex(frame.sigma_vertex(v)) == v);
            }
        }
    }
    SUBCASE("frames of invalid pairs are rejected") {
        CHECK_THROWS_AS(
            local_frame(fixtures::sphere5(), {Simplex{1, 4}, Simplex{2, 5}, 1}), Error);
    }
}

TEST_CASE("applying moves") {
    TriangulatedManifold K = fixtures::sphere5();
    SUBCASE("flip at (1,2) lands on the double pyramid over (3,4,5)") {
        TriangulatedManifold K1 = apply_move(K, {Simplex{1, 2}, Simplex{4, 5}, 1});
        std::vector<Simplex> expected = {Simplex{1, 3, 4}, Simplex{1, 3, 5},
                                         Simplex{1, 4, 5}, Simplex{2, 3, 4},
                                         Simplex{2, 3, 5}, Simplex{2, 4, 5}};
        CHECK(K1.facet_simplices() == expected);
    }
    SUBCASE("involution restores identical orientations") {
        BistellarPair p{Simplex{1, 2}, Simplex{4, 5}, 1};
        TriangulatedManifold round = apply_move(apply_move(K, p), p.inverse());
        CHECK(round.oriented_facets() == K.oriented_facets());
    }
    SUBCASE("0-move on the tetrahedron gives the 5-vertex count") {
        TriangulatedManifold grown =
            apply_move(fixtures::sphere4(), {Simplex{1, 2, 3}, Simplex{5}, 0});
        CHECK(face_vectors(grown).f == std::vector<long long>{5, 9, 6});
        CHECK(complexes_equal(grown, fixtures::sphere5()));
    }
    SUBCASE("type-n move removes a vertex") {
        TriangulatedManifold shrunk = apply_move(K, {Simplex{5}, Simplex{1, 2, 3}, 2});
        CHECK(complexes_equal(shrunk, fixtures::sphere4()));
        CHECK(shrunk.vertices() == std::vector<int>{1, 2, 3, 4});
    }
    SUBCASE("middle moves preserve the vertex set") {
        TriangulatedManifold K1 = apply_move(K, {Simplex{1, 3}, Simplex{4, 5}, 1});
        CHECK(K1.vertices() == K.vertices());
    }
}

TEST_CASE("local face sets") {
    SUBCASE("h = 1") {
        TriangulatedManifold K = fixtures::sphere5();
        MoveLocalFrame frame = local_frame(K, {Simplex{1, 2}, Simplex{4, 5}, 1});
        LocalFaceSets sets = local_face_sets(frame);
        CHECK(sets.d_alpha == std::vector<Simplex>{Simplex{1, 2}});
        CHECK(sets.d_beta == std::vector<Simplex>{Simplex{4, 5}});
        CHECK(sets.common().size() == 4);
    }
    SUBCASE("h = 2") {
        TriangulatedManifold K = fixtures::sphere4d_with_middle_pair();
        MoveLocalFrame frame = local_frame(K, {Simplex{1, 2, 3}, Simplex{4, 5, 6}, 2});
        LocalFaceSets sets = local_face_sets(frame);
        CHECK(sets.d_alpha == std::vector<Simplex>{Simplex{1, 2, 3, 4}, Simplex{1, 2, 3, 5},
                                                   Simplex{1, 2, 3, 6}});
        CHECK(sets.d_beta == std::vector<Simplex>{Simplex{1, 4, 5, 6}, Simplex{2, 4, 5, 6},
                                                  Simplex{3, 4, 5, 6}});
        CHECK(sets.common().size() == 9);
        CHECK(sets.lambda_alpha_faces.size() == 12);
    }
    SUBCASE("sigma exchanges the D-sets and fixes the common part") {
        TriangulatedManifold K = fixtures::sphere4d_with_middle_pair();
        MoveLocalFrame frame = local_frame(K, {Simplex{1, 2, 3}, Simplex{4, 5, 6}, 2});
        LocalFaceSets sets = local_face_sets(frame);
        std::set<Simplex> db(sets.d_beta.begin(), sets.d_beta.end());
        for (const Simplex& f : sets.d_alpha) CHECK(db.count(frame.sigma_face(f)));
        std::set<Simplex> common_set;
        for (const Simplex& f : sets.common()) common_set.insert(f);
        for (const Simplex& f : sets.common())
            CHECK(common_set.count(frame.sigma_face(f)));
    }
    SUBCASE("D-sets of distinct pairs in one complex are disjoint") {
        TriangulatedManifold K = fixtures::sphere4d_with_middle_pair();
        auto pairs = find_middle_pairs(K);
        REQUIRE(pairs.size() >= 2);
        std::vector<std::set<Simplex>> d_sets;
        for (const auto& p : pairs) {
            MoveLocalFrame frame = local_frame(K, p);
            LocalFaceSets sets = local_face_sets(frame);
            d_sets.emplace_back(sets.d_alpha.begin(), sets.d_alpha.end());
        }
        for (std::size_t i = 0; i < d_sets.size(); ++i)
            for (std::size_t j = i + 1; j < d_sets.size(); ++j)
                for (const Simplex& f : d_sets[i]) CHECK(!d_sets[j].count(f));
    }
    SUBCASE("non-middle frames have no D-sets") {
        TriangulatedManifold L = fixtures::sphere4d_stacked();
        MoveLocalFrame frame = local_frame(L, {Simplex{1, 2, 3, 4}, Simplex{6, 7}, 1});
        CHECK_THROWS_AS(local_face_sets(frame), Error);
    }
}

TEST_CASE("move sequences") {
    TriangulatedManifold K = fixtures::sphere5();
    SUBCASE("inverse pair cancels") {
        BistellarPair p{Simplex{1, 2}, Simplex{4, 5}, 1};
        MoveTrace trace = apply_sequence(K, {p, p.inverse()});
        CHECK(trace.states.size() == 3);
        CHECK(complexes_equal(trace.result(), K));
    }
    SUBCASE("two flips land on the expected triangulation") {
        MoveTrace trace = apply_sequence(K, {{Simplex{1, 2}, Simplex{4, 5}, 1},
                                             {Simplex{3, 5}, Simplex{1, 2}, 1}});
        std::vector<Simplex> expected = {Simplex{1, 2, 3}, Simplex{1, 2, 5},
                                         Simplex{1, 3, 4}, Simplex{1, 4, 5},
                                         Simplex{2, 3, 4}, Simplex{2, 4, 5}};
        CHECK(trace.result().facet_simplices() == expected);
    }
    SUBCASE("disjoint-support moves commute") {
        // Needs at least seven vertices so a facet can avoid the four
        // vertices of a flip's support.
        TriangulatedManifold host = apply_move(
            apply_move(fixtures::sphere5(), {Simplex{1, 2, 4}, Simplex{6}, 0}),
            {Simplex{1, 3, 5}, Simplex{7}, 0});
        bool found = false;
        for (const auto& flip : find_bistellar_pairs(host, 1)) {
            Simplex support = flip.alpha.unite(flip.beta);
            for (const auto& of : host.oriented_facets()) {
                if (!of.simplex.disjoint(support)) continue;
                BistellarPair zero{of.simplex, Simplex{host.vertex_universe() + 1}, 0};
                TriangulatedManifold ab = apply_sequence(host, {flip, zero}).result();
                TriangulatedManifold ba = apply_sequence(host, {zero, flip}).result();
                CHECK(complexes_equal(ab, ba));
                found = true;
            }
        }
        REQUIRE(found);
    }
    SUBCASE("invalid step is reported with its index") {
        try {
            apply_sequence(K, {{Simplex{1, 2}, Simplex{4, 5}, 1},
                               {Simplex{1, 2}, Simplex{4, 5}, 1}});
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code() == Errc::PairNotValidAtStep);
            CHECK(e.detail() == 1);
        }
    }
}

TEST_CASE("labeled equality") {
    TriangulatedManifold K = fixtures::sphere5();
    CHECK(complexes_equal(K, K));
    TriangulatedManifold K1 = apply_move(K, {Simplex{1, 2}, Simplex{4, 5}, 1});
    CHECK(!complexes_equal(K, K1));
    CHECK(complexes_equal(
        apply_move(K1, BistellarPair{Simplex{1, 2}, Simplex{4, 5}, 1}.inverse()), K));
}

TEST_CASE("f-vector and g-vector laws") {
    auto run_f_law = [](const TriangulatedManifold& K) {
        const int n = K.dim();
        for (int h = 0; h <= n; ++h)
            for (const auto& p : find_bistellar_pairs(K, h)) {
                bool same = face_vectors(K).f == face_vectors(apply_move(K, p)).f;
                CHECK(same == (n == 2 * h));
            }
    };
    run_f_law(fixtures::sphere5());
    run_f_law(fixtures::random_sphere2(51));
    run_f_law(fixtures::sphere4d_with_middle_pair());
    run_f_law(fixtures::sphere4d_stacked());

    SUBCASE("type-0 move bumps g_1") {
        TriangulatedManifold K = fixtures::sphere4();
        FaceVector before = face_vectors(K);
        FaceVector after =
            face_vectors(apply_move(K, {Simplex{1, 2, 3}, Simplex{5}, 0}));
        CHECK(after.g[0] == before.g[0]);
        CHECK(after.g[1] == before.g[1] + 1);
    }
    SUBCASE("type-1 move on a 4-manifold bumps g_2") {
        TriangulatedManifold L = fixtures::sphere4d_stacked();
        FaceVector before = face_vectors(L);
        FaceVector after =
            face_vectors(apply_move(L, {Simplex{1, 2, 3, 4}, Simplex{6, 7}, 1}));
        CHECK(after.g[1] == before.g[1]);
        CHECK(after.g[2] == before.g[2] + 1);
    }
    SUBCASE("type-0 adds a vertex, type-n removes one") {
        TriangulatedManifold K = fixtures::sphere5();
        CHECK(apply_move(K, {Simplex{1, 2, 4}, Simplex{6}, 0}).vertices().size() == 6);
        CHECK(apply_move(K, {Simplex{4}, Simplex{1, 2, 3}, 2}).vertices().size() == 4);
    }
}
