#include <doctest.h>

#include <random>

#include "liegraph/catalog.hpp"

using namespace liegraph;

TEST_CASE("bracket bilinearity and antisymmetry") {
    auto su2 = catalog_get("su2").algebra;
    CHECK(su2.bracket(su2.basis_vec(0), su2.basis_vec(1)) == su2.basis_vec(2));

    auto l3 = l3_alpha(Rat(7, 3));
    Vec expect = l3.zero();
    expect[0] = Scalar(Rat(-7, 3));
    expect[1] = Scalar(-1);
    CHECK(l3.bracket(l3.basis_vec(1), l3.basis_vec(2)) == expect);

    std::mt19937 rng(17);
    std::uniform_int_distribution<long> c(-5, 5);
    for (int trial = 0; trial < 20; ++trial) {
        Vec x(3), y(3);
        for (int i = 0; i < 3; ++i) {
            x[i] = Scalar(c(rng));
            y[i] = Scalar(c(rng));
        }
        CHECK(is_zero(su2.bracket(x, x)));
        CHECK(su2.bracket(x, y) == Scalar(-1) * su2.bracket(y, x));
    }
}

TEST_CASE("verify_lie flags the Jacobi-violating table") {
    CHECK(catalog_get("heisenberg").algebra.verify_lie().ok);
    auto bad = type_viii_table();
    auto rep = bad.verify_lie();
    REQUIRE_FALSE(rep.ok);
    REQUIRE(rep.violations.size() == 1);
    const auto& v = rep.violations[0];
    CHECK(v.j == 0);
    CHECK(v.k == 1);
    CHECK(v.l == 2);
    CHECK(proportional(v.residual, bad.basis_vec(0)));  // residual proportional to a
}

TEST_CASE("change_basis identity and rotated sl2") {
    auto su2 = catalog_get("su2").algebra;
    std::vector<Vec> id = {su2.basis_vec(0), su2.basis_vec(1), su2.basis_vec(2)};
    auto same = su2.change_basis(id);
    for (int j = 0; j < 3; ++j)
        for (int k = j + 1; k < 3; ++k) CHECK(same.bracket_basis(j, k) == su2.bracket_basis(j, k));

    // rotated sl(2,R): every bracket lands on a single basis vector, so the
    // graph comes out identical to the su(2) one
    auto rot = catalog_get("sl2r_rotated").algebra;
    CHECK(proportional(rot.bracket_basis(0, 1), rot.basis_vec(2)));
    CHECK(proportional(rot.bracket_basis(1, 2), rot.basis_vec(0)));
    CHECK(proportional(rot.bracket_basis(2, 0), rot.basis_vec(1)));
    CHECK_THROWS(su2.change_basis({su2.basis_vec(0), su2.basis_vec(0), su2.basis_vec(1)}));
}

TEST_CASE("complex-context change of basis splits the boost/rotation algebra") {
    // the commuting-block split needs the imaginary unit: d = -1 context
    LieAlgebra lz(6, {"J1", "J2", "J3", "K1", "K2", "K3"}, -1);
    Scalar i(Rat(0), Rat(1), -1);
    auto set = [&](int a, int b, int target, Scalar coeff) {
        Vec v(6);
        v[target] = coeff;
        lz.set_bracket(a, b, v);
    };
    // [J,J] = i eps J; [J,K] = i eps K; [K,K] = -i eps J
    set(0, 1, 2, i);
    set(1, 2, 0, i);
    set(2, 0, 1, i);
    set(0, 4, 5, i);
    set(1, 5, 3, i);
    set(2, 3, 4, i);
    set(4, 2, 3, i);
    set(5, 0, 4, i);
    set(3, 1, 5, i);
    set(3, 4, 2, -i);
    set(4, 5, 0, -i);
    set(5, 3, 1, -i);
    REQUIRE(lz.verify_lie().ok);
    // N1_j = J_j - i K_j, N2_j = J_j + i K_j
    std::vector<Vec> nb;
    for (int s : {-1, 1})
        for (int j = 0; j < 3; ++j) {
            Vec v(6);
            v[j] = Scalar(1);
            v[3 + j] = Scalar(Rat(0), Rat(s), -1);
            nb.push_back(v);
        }
    auto split = lz.change_basis(nb, {"N1_1", "N1_2", "N1_3", "N2_1", "N2_2", "N2_3"});
    REQUIRE(split.verify_lie().ok);
    // two commuting three-dimensional blocks
    for (int j = 0; j < 3; ++j)
        for (int k = 3; k < 6; ++k) CHECK(is_zero(split.bracket_basis(j, k)));
    // block coefficient is 2i, not the 4i sometimes quoted
    Vec b12 = split.bracket_basis(0, 1);
    CHECK(b12[2] == Scalar(2) * i);
    CHECK(b12[5].is_zero());
}

TEST_CASE("subspace_bracket on abelian, simple and solvable algebras") {
    auto ab = catalog_get("abelian3").algebra;
    CHECK(subspace_bracket(ab, Subspace::full(3), Subspace::full(3)).is_zero());

    auto su2 = catalog_get("su2").algebra;
    CHECK(subspace_bracket(su2, Subspace::full(3), Subspace::full(3)).dim() == 3);

    auto s7 = catalog_get("solvable7").algebra;
    Subspace d1 = subspace_bracket(s7, Subspace::full(7), Subspace::full(7));
    CHECK(d1.dim() == 6);
    CHECK_FALSE(d1.contains(s7.basis_vec(0)));  // the loose end drops out
}

TEST_CASE("derived and lower central series oracles") {
    auto dims = [](const SeriesOracle& s) {
        std::vector<int> d;
        for (const auto& st : s.stages) d.push_back(st.dim());
        return d;
    };
    CHECK(dims(derived_series_oracle(catalog_get("abelian3").algebra)) == std::vector<int>{3, 0});
    CHECK(dims(derived_series_oracle(catalog_get("solvable7").algebra)) ==
          std::vector<int>{7, 6, 4, 0});
    auto su2_series = derived_series_oracle(catalog_get("su2").algebra);
    CHECK_FALSE(su2_series.terminated);
    CHECK(dims(su2_series) == std::vector<int>{3});  // immediately stable

    CHECK(dims(lower_central_series_oracle(catalog_get("nilpotent7").algebra)) ==
          std::vector<int>{7, 5, 4, 3, 2, 1, 0});
    auto sl2h1 = lower_central_series_oracle(catalog_get("schrodinger_m1").algebra);
    CHECK_FALSE(sl2h1.terminated);
    CHECK(sl2h1.stages.back().dim() >= 1);

    // agreement at stage one, containment of the derived stages in the lower
    // central stages, and nilpotent => solvable
    for (const auto& name : catalog_names()) {
        auto g = catalog_get(name).algebra;
        auto ds = derived_series_oracle(g);
        auto cs = lower_central_series_oracle(g);
        if (ds.stages.size() > 1 && cs.stages.size() > 1) CHECK(ds.stages[1] == cs.stages[1]);
        for (size_t k = 0; k < cs.stages.size(); ++k) {
            const Subspace& dk = k < ds.stages.size() ? ds.stages[k] : ds.stages.back();
            CHECK(cs.stages[k].contains(dk));
        }
        if (is_nilpotent_oracle(g)) CHECK(is_solvable_oracle(g));
    }
}

TEST_CASE("center oracle") {
    auto h = catalog_get("heisenberg").algebra;
    CHECK(center_oracle(h) == Subspace::span(3, {h.basis_vec(0)}));
    CHECK(center_oracle(catalog_get("su2").algebra).is_zero());

    // aff(R) + R in the basis {x1, x3, x2}: center spanned by x1 + x2
    LieAlgebra g(3, {"x1", "x3", "x2"}, 0);
    Vec v(3);
    v[1] = Scalar(1);
    g.set_bracket(2, 1, v);  // [x2, x3] = x3
    Vec w(3);
    w[1] = Scalar(1);
    g.set_bracket(1, 0, w);  // [x3, x1] = x3
    REQUIRE(g.verify_lie().ok);
    Vec center(3);
    center[0] = Scalar(1);
    center[2] = Scalar(1);
    CHECK(center_oracle(g) == Subspace::span(3, {center}));
}

TEST_CASE("killing form and the semisimplicity criterion") {
    auto su2 = catalog_get("su2").algebra;
    Mat b = killing_form(su2);
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) CHECK(b.at(j, k) == (j == k ? Scalar(-2) : Scalar(0)));
    CHECK(is_semisimple_cartan(su2));

    Mat hb = killing_form(catalog_get("heisenberg").algebra);
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) CHECK(hb.at(j, k).is_zero());
    CHECK_FALSE(is_semisimple_cartan(catalog_get("heisenberg").algebra));
    CHECK_FALSE(is_semisimple_cartan(catalog_get("abelian3").algebra));

    // invariance spot-check: B([x,y],z) == B(x,[y,z])
    std::mt19937 rng(23);
    std::uniform_int_distribution<long> c(-3, 3);
    auto sl2 = catalog_get("sl2r").algebra;
    Mat bs = killing_form(sl2);
    auto form = [&](const Vec& x, const Vec& y) {
        Scalar s;
        Vec by = bs.apply(y);
        for (int i = 0; i < 3; ++i) s += x[i] * by[i];
        return s;
    };
    for (int trial = 0; trial < 20; ++trial) {
        Vec x(3), y(3), z(3);
        for (int i = 0; i < 3; ++i) {
            x[i] = Scalar(c(rng));
            y[i] = Scalar(c(rng));
            z[i] = Scalar(c(rng));
        }
        CHECK(form(sl2.bracket(x, y), z) == form(x, sl2.bracket(y, z)));
    }
}

TEST_CASE("radical oracle") {
    CHECK(radical_oracle(catalog_get("su2").algebra).is_zero());
    CHECK(radical_oracle(catalog_get("abelian4").algebra).dim() == 4);

    auto s = catalog_get("schrodinger_m1").algebra;  // vertices h x y q p z
    Subspace rad = radical_oracle(s);
    CHECK(rad.dim() == 3);
    CHECK(rad.contains(s.basis_vec(3)));
    CHECK(rad.contains(s.basis_vec(4)));
    CHECK(rad.contains(s.basis_vec(5)));
}

TEST_CASE("ideal membership, normalizer and reductivity") {
    auto s = catalog_get("schrodinger_m1").algebra;
    Subspace h1 = Subspace::span(6, {s.basis_vec(3), s.basis_vec(4), s.basis_vec(5)});
    CHECK(is_ideal(s, h1));
    CHECK_FALSE(is_ideal(s, Subspace::span(6, {s.basis_vec(0)})));

    auto sl2 = catalog_get("sl2r").algebra;  // h, x, y with [h,x] = 2x
    Subspace x_line = Subspace::span(3, {sl2.basis_vec(1)});
    Subspace nrm = normalizer(sl2, x_line);
    CHECK(nrm.dim() == 2);
    CHECK(nrm.contains(sl2.basis_vec(0)));
    CHECK(nrm.contains(sl2.basis_vec(1)));
    CHECK_FALSE(nrm.contains(sl2.basis_vec(2)));

    CHECK(is_reductive_oracle(catalog_get("su2").algebra));
    CHECK(is_reductive_oracle(catalog_get("abelian3").algebra));
    CHECK_FALSE(is_reductive_oracle(catalog_get("optomech14").algebra));

    // the center is an ideal commuting with everything
    for (const std::string name : {"heisenberg", "wigner_heisenberg", "schrodinger_m2"}) {
        auto g = catalog_get(name).algebra;
        Subspace z = center_oracle(g);
        CHECK(is_ideal(g, z));
        for (int i = 0; i < z.dim(); ++i)
            for (int j = 0; j < g.dim(); ++j)
                CHECK(is_zero(g.bracket(z.basis().row(i), g.basis_vec(j))));
    }
}

TEST_CASE("restriction to a closed subspace") {
    auto s = catalog_get("schrodinger_m1").algebra;
    Subspace rad = radical_oracle(s);
    auto h1 = s.restrict_to(rad);
    CHECK(h1.dim() == 3);
    CHECK(is_nilpotent_oracle(h1));
    auto lcs = lower_central_series_oracle(h1);
    CHECK(lcs.terminated);
    CHECK(lcs.stages.size() == 3);  // two-step nilpotent
    CHECK_THROWS(s.restrict_to(Subspace::span(6, {s.basis_vec(1), s.basis_vec(2)})));  // [x,y] = h escapes
}
