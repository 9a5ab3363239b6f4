#include "liegraph/catalog.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace liegraph {

namespace {

using Terms = std::vector<std::pair<int, Rat>>;  // 1-based target index, coefficient

LieAlgebra make(int dim, std::vector<std::string> names,
                const std::vector<std::tuple<int, int, Terms>>& brackets, int field_d = 0) {
    LieAlgebra g(dim, std::move(names), field_d);
    for (const auto& [i, j, terms] : brackets) {
        Vec v(dim);
        for (const auto& [t, c] : terms) v[t - 1] = Scalar(c);
        g.set_bracket(i - 1, j - 1, std::move(v));
    }
    return g;
}

AdmissibleBasis reference_basis(const LieAlgebra& g) {
    std::vector<Vec> elems;
    for (int i = 0; i < g.dim(); ++i) elems.push_back(g.basis_vec(i));
    auto chk = check_admissible(g, elems, g.names());
    if (!chk.ok())
        throw std::logic_error("catalog entry reference basis not admissible: " + to_string(chk.error));
    return *chk.basis;
}

Vec combo(int dim, std::initializer_list<std::pair<int, Rat>> terms) {
    Vec v(dim);
    for (const auto& [i, c] : terms) v[i - 1] = Scalar(c);
    return v;
}

// part_indices and delta entries are 1-based (0 marks a vanishing bracket)
MagmaGradation two_part_gradation(const LieAlgebra& g, const std::vector<std::vector<int>>& part_indices,
                                  const std::vector<std::vector<int>>& delta) {
    std::vector<Subspace> parts;
    for (const auto& idx : part_indices) {
        std::vector<Vec> gens;
        for (int i : idx) gens.push_back(g.basis_vec(i - 1));
        parts.push_back(Subspace::span(g.dim(), gens));
    }
    std::vector<std::vector<int>> delta0;
    for (const auto& row : delta) {
        std::vector<int> r;
        for (int v : row) r.push_back(v == 0 ? kNoTarget : v - 1);
        delta0.push_back(std::move(r));
    }
    auto chk = verify_gradation(g, parts, delta0);
    if (!chk.ok()) throw std::logic_error("catalog gradation invalid: " + chk.error);
    return *chk.gradation;
}

// square-free part of a positive rational's numerator*denominator
int squarefree_part(const Rat& q) {
    Int v = numerator(q) * denominator(q);
    if (v <= 0) return 0;
    Int out = 1;
    for (Int p = 2; p * p <= v && p < 100000; ++p)
        while (v % (p * p) == 0) v /= p * p;
    out = v;
    return out.convert_to<int>();
}

CatalogEntry abelian_entry(int n) {
    CatalogEntry e;
    e.name = "abelian" + std::to_string(n);
    e.description = "abelian algebra of dimension " + std::to_string(n);
    e.algebra = make(n, {}, {});
    e.basis = reference_basis(e.algebra);
    e.expected.abelian = true;
    e.expected.solvable = true;
    e.expected.nilpotent = true;
    e.expected.center_dim = n;
    e.expected.radical_dim = n;
    e.expected.semisimple = false;
    e.expected.components = n;
    e.expected.graph_edges = 0;
    e.expected.derived_dims = {n, 0};
    e.expected.lcs_dims = {n, 0};
    return e;
}

}  // namespace

LieAlgebra l3_alpha(const Rat& alpha) {
    // quadratic context sized to the eigenvalue discriminant 1 + 4*alpha
    Rat disc = 1 + 4 * alpha;
    int d = disc > 0 ? squarefree_part(disc) : 0;
    if (d == 1) d = 0;
    return make(3, {"x1", "x2", "x3"},
                {{1, 3, {{2, -1}}}, {2, 3, {{1, -alpha}, {2, -1}}}}, d);
}

LieAlgebra nq_algebra(const Rat& q) {
    return make(6, {"x1", "x2", "x3", "x4", "y1", "y2"},
                {{1, 2, {{5, 1}}}, {1, 3, {{6, 1}}}, {2, 4, {{6, 1}}}, {3, 4, {{5, q}}}});
}

LieAlgebra type_viii_table() {
    return make(3, {"a", "b", "c"}, {{1, 3, {{3, 1}}}, {2, 3, {{1, 1}}}});
}

LieAlgebra improper_scan_table() {
    return make(5, {"a", "b", "c", "d", "e"}, {{1, 3, {{4, 1}}}, {2, 4, {{5, 1}}}});
}

namespace {

CatalogEntry entry_aff_r() {
    CatalogEntry e;
    e.name = "aff_r";
    e.description = "two-dimensional affine algebra ([e1,e2]=e2)";
    e.algebra = make(2, {"e1", "e2"}, {{1, 2, {{2, 1}}}});
    e.basis = reference_basis(e.algebra);
    e.expected = {};
    e.expected.abelian = false;
    e.expected.solvable = true;
    e.expected.nilpotent = false;
    e.expected.center_dim = 0;
    e.expected.radical_dim = 2;
    e.expected.semisimple = false;
    e.expected.graph_edges = 2;
    e.expected.derived_dims = {2, 1, 0};
    return e;
}

CatalogEntry entry_heisenberg() {
    CatalogEntry e;
    e.name = "heisenberg";
    e.description = "three-dimensional Heisenberg algebra ([e2,e3]=e1)";
    e.algebra = make(3, {"e1", "e2", "e3"}, {{2, 3, {{1, 1}}}});
    e.basis = reference_basis(e.algebra);
    e.expected.solvable = true;
    e.expected.nilpotent = true;
    e.expected.nilpotency_index = 2;
    e.expected.center_dim = 1;
    e.expected.radical_dim = 3;
    e.expected.semisimple = false;
    e.expected.graph_edges = 2;
    e.expected.lcs_dims = {3, 1, 0};
    return e;
}

CatalogEntry entry_l3(const std::string& name, const Rat& alpha) {
    CatalogEntry e;
    e.name = name;
    e.description = "solvable three-dimensional family member (parameter " + rational_str(alpha) + ")";
    e.algebra = l3_alpha(alpha);
    e.expected.solvable = true;
    e.expected.nilpotent = false;
    e.expected.semisimple = false;
    e.expected.derived_dims = {3, 2, 0};
    if (alpha == 0) e.expected.derived_dims = {3, 1, 0};
    // reference basis is admissible only when the bracket of x2 and x3 stays
    // proportional to a basis vector, i.e. alpha == 0
    if (alpha == 0) e.basis = reference_basis(e.algebra);
    if (alpha == -1) {
        // redundant spanning set: {x1, x2, x3, x1 - x2}
        std::vector<Vec> elems = {e.algebra.basis_vec(0), e.algebra.basis_vec(1),
                                  e.algebra.basis_vec(2), combo(3, {{1, 1}, {2, -1}})};
        auto chk = check_admissible(e.algebra, elems, {"x1", "x2", "x3", "x1-x2"});
        if (!chk.ok()) throw std::logic_error("l3(-1) redundant basis rejected");
        e.basis = chk.basis;
        e.expected.graph_edges = 6;
    }
    if (alpha <= Rat(-1, 4)) {
        // two-part gradation: {x1,x2} and {x3}
        e.gradation = two_part_gradation(e.algebra, {{1, 2}, {3}}, {{0, 1}, {1, 0}});
    }
    return e;
}

CatalogEntry entry_su2() {
    CatalogEntry e;
    e.name = "su2";
    e.description = "compact real form su(2)";
    e.algebra = make(3, {"e1", "e2", "e3"},
                     {{1, 2, {{3, 1}}}, {2, 3, {{1, 1}}}, {3, 1, {{2, 1}}}});
    e.basis = reference_basis(e.algebra);
    e.expected.solvable = false;
    e.expected.nilpotent = false;
    e.expected.center_dim = 0;
    e.expected.radical_dim = 0;
    e.expected.semisimple = true;
    e.expected.simple_candidate = true;
    e.expected.reductive = true;
    e.expected.components = 1;
    e.expected.graph_edges = 6;
    return e;
}

CatalogEntry entry_sl2r() {
    CatalogEntry e;
    e.name = "sl2r";
    e.description = "split real form sl(2,R), standard basis {h,x,y}";
    e.algebra = make(3, {"h", "x", "y"},
                     {{1, 2, {{2, 2}}}, {1, 3, {{3, -2}}}, {2, 3, {{1, 1}}}});
    e.basis = reference_basis(e.algebra);
    e.expected.solvable = false;
    e.expected.semisimple = true;
    e.expected.simple_candidate = true;
    e.expected.components = 1;
    e.expected.graph_edges = 6;
    return e;
}

CatalogEntry entry_sl2r_rotated() {
    CatalogEntry e;
    e.name = "sl2r_rotated";
    e.description = "sl(2,R) in the rotated basis {h, (x-y)/sqrt2, (x+y)/sqrt2}";
    LieAlgebra sl2 = entry_sl2r().algebra;
    Scalar inv_sqrt2 = Scalar(Rat(0), Rat(1, 2), 2);  // 1/sqrt(2) = sqrt(2)/2
    std::vector<Vec> nb = {sl2.basis_vec(0),
                           inv_sqrt2 * (sl2.basis_vec(1) - sl2.basis_vec(2)),
                           inv_sqrt2 * (sl2.basis_vec(1) + sl2.basis_vec(2))};
    e.algebra = sl2.change_basis(nb, {"e1", "e2", "e3"});
    e.basis = reference_basis(e.algebra);
    e.expected.solvable = false;
    e.expected.semisimple = true;
    e.expected.simple_candidate = true;
    e.expected.graph_edges = 6;
    return e;
}

CatalogEntry entry_l3_3() {
    CatalogEntry e;
    e.name = "l3_3";
    e.description = "Bianchi V ([e1,e3]=e1, [e2,e3]=e2)";
    e.algebra = make(3, {"e1", "e2", "e3"}, {{1, 3, {{1, 1}}}, {2, 3, {{2, 1}}}});
    e.basis = reference_basis(e.algebra);
    e.expected.solvable = true;
    e.expected.nilpotent = false;
    e.expected.graph_edges = 4;
    return e;
}

CatalogEntry entry_l3_4() {
    CatalogEntry e;
    e.name = "l3_4";
    e.description = "Bianchi VI ([e1,e3]=e1, [e2,e3]=-e2)";
    e.algebra = make(3, {"e1", "e2", "e3"}, {{1, 3, {{1, 1}}}, {2, 3, {{2, -1}}}});
    e.basis = reference_basis(e.algebra);
    e.expected.solvable = true;
    e.expected.nilpotent = false;
    return e;
}

CatalogEntry entry_l3_5() {
    CatalogEntry e;
    e.name = "l3_5";
    e.description = "Bianchi VII ([e1,e3]=-e2, [e2,e3]=e1)";
    e.algebra = make(3, {"e1", "e2", "e3"}, {{1, 3, {{2, -1}}}, {2, 3, {{1, 1}}}});
    e.basis = reference_basis(e.algebra);
    e.expected.solvable = true;
    e.expected.nilpotent = false;
    e.expected.graph_edges = 4;
    return e;
}

CatalogEntry entry_l4(const std::string& name) {
    CatalogEntry e;
    e.name = name;
    e.expected.solvable = true;
    auto& g = e.algebra;
    if (name == "l4_1") {
        e.description = "nilpotent four-dimensional algebra";
        g = make(4, {}, {{2, 4, {{1, 1}}}, {3, 4, {{2, 1}}}});
        e.basis = reference_basis(g);
        e.expected.nilpotent = true;
        e.expected.nilpotency_index = 3;
    } else if (name == "l4_2") {
        e.description = "solvable family member (parameter 2)";
        g = make(4, {}, {{1, 4, {{1, 2}}}, {2, 4, {{2, 1}}}, {3, 4, {{2, 1}, {3, 1}}}});
        e.gradation = two_part_gradation(g, {{1}, {2, 3}, {4}},
                                         {{0, 0, 1}, {0, 0, 2}, {1, 2, 0}});
        e.expected.nilpotent = false;
    } else if (name == "l4_3") {
        e.description = "solvable four-dimensional algebra";
        g = make(4, {}, {{1, 4, {{1, 1}}}, {3, 4, {{2, 1}}}});
        e.basis = reference_basis(g);
        e.expected.nilpotent = false;
    } else if (name == "l4_4") {
        e.description = "solvable four-dimensional algebra (coupled chain)";
        g = make(4, {}, {{1, 4, {{1, 1}}}, {2, 4, {{1, 1}, {2, 1}}}, {3, 4, {{2, 1}, {3, 1}}}});
        e.gradation = two_part_gradation(g, {{1, 2, 3}, {4}}, {{0, 1}, {1, 0}});
        e.expected.nilpotent = false;
    } else if (name == "l4_5") {
        e.description = "diagonal solvable family member (parameters 1,2,3)";
        g = make(4, {}, {{1, 4, {{1, 1}}}, {2, 4, {{2, 2}}}, {3, 4, {{3, 3}}}});
        e.basis = reference_basis(g);
        e.expected.nilpotent = false;
    } else if (name == "l4_6") {
        e.description = "solvable family member with a rotation block (parameters 1,1)";
        g = make(4, {},
                 {{1, 4, {{1, 1}}}, {2, 4, {{2, 1}, {3, -1}}}, {3, 4, {{2, 1}, {3, 1}}}});
        e.gradation = two_part_gradation(g, {{1}, {2, 3}, {4}},
                                         {{0, 0, 1}, {0, 0, 2}, {1, 2, 0}});
        e.expected.nilpotent = false;
    } else if (name == "l4_7") {
        e.description = "solvable four-dimensional algebra with central chain";
        g = make(4, {},
                 {{2, 3, {{1, 1}}}, {1, 4, {{1, 2}}}, {2, 4, {{2, 1}}}, {3, 4, {{2, 1}, {3, 1}}}});
        e.gradation = two_part_gradation(g, {{1}, {2, 3}, {4}},
                                         {{0, 0, 1}, {0, 1, 2}, {1, 2, 0}});
        e.expected.nilpotent = false;
    } else if (name == "l4_8") {
        e.description = "solvable family member (parameter 1/2)";
        g = make(4, {},
                 {{2, 3, {{1, 1}}},
                  {1, 4, {{1, Rat(3, 2)}}},
                  {2, 4, {{2, 1}}},
                  {3, 4, {{3, Rat(1, 2)}}}});
        e.basis = reference_basis(g);
        e.expected.nilpotent = false;
    } else if (name == "l4_9") {
        e.description = "solvable family member with a rotation block (parameter 1)";
        g = make(4, {},
                 {{2, 3, {{1, 1}}},
                  {1, 4, {{1, 2}}},
                  {2, 4, {{2, 1}, {3, -1}}},
                  {3, 4, {{2, 1}, {3, 1}}}});
        e.gradation = two_part_gradation(g, {{1}, {2, 3}, {4}},
                                         {{0, 0, 1}, {0, 1, 2}, {1, 2, 0}});
        e.expected.nilpotent = false;
    } else if (name == "l4_9_0") {
        e.description = "solvable four-dimensional algebra (oscillator form)";
        g = make(4, {}, {{2, 3, {{1, 1}}}, {2, 4, {{3, -1}}}, {3, 4, {{2, 1}}}});
        e.basis = reference_basis(g);
        e.expected.nilpotent = false;
    } else if (name == "l4_10") {
        e.description = "solvable four-dimensional algebra with a rotation pair";
        g = make(4, {},
                 {{1, 3, {{1, 1}}}, {2, 3, {{2, 1}}}, {1, 4, {{2, -1}}}, {2, 4, {{1, 1}}}});
        e.basis = reference_basis(g);
        e.expected.nilpotent = false;
    } else {
        throw std::invalid_argument("unknown four-dimensional entry " + name);
    }
    return e;
}

CatalogEntry entry_schrodinger(int m) {
    CatalogEntry e;
    e.name = "schrodinger_m" + std::to_string(m);
    e.description = "sl(2,R) acting on a Heisenberg radical (" + std::to_string(m) + " mode pairs)";
    int dim = 3 + 2 * m + 1;
    std::vector<std::string> names = {"h", "x", "y"};
    for (int j = 1; j <= m; ++j) {
        names.push_back("q" + std::to_string(j));
        names.push_back("p" + std::to_string(j));
    }
    names.push_back("z");
    std::vector<std::tuple<int, int, Terms>> br = {
        {1, 2, {{2, 2}}}, {1, 3, {{3, -2}}}, {2, 3, {{1, 1}}}};
    int z = dim;
    for (int j = 0; j < m; ++j) {
        int q = 4 + 2 * j, p = 5 + 2 * j;
        br.push_back({1, q, {{q, 1}}});    // [h,q]=q
        br.push_back({3, q, {{p, 1}}});    // [y,q]=p
        br.push_back({1, p, {{p, -1}}});   // [h,p]=-p
        br.push_back({2, p, {{q, 1}}});    // [x,p]=q
        br.push_back({q, p, {{z, 1}}});    // [q,p]=z
    }
    e.algebra = make(dim, names, br);
    e.basis = reference_basis(e.algebra);
    e.expected.solvable = false;
    e.expected.nilpotent = false;
    e.expected.semisimple = false;
    e.expected.center_dim = 1;
    e.expected.radical_dim = 2 * m + 1;
    e.expected.components = 1;
    return e;
}

CatalogEntry entry_lorentz_jk() {
    CatalogEntry e;
    e.name = "lorentz_jk";
    e.description = "Lorentz algebra, rotation/boost basis (imaginary units absorbed)";
    // [iJ_a, iJ_b] = -eps iJ_c ; [iJ_a, iK_b] = -eps iK_c ; [iK_a, iK_b] = +eps iJ_c
    std::vector<std::tuple<int, int, Terms>> br;
    auto eps = [&](int a, int b, int c, int tbase, const Rat& s) {
        br.push_back({a, b, {{tbase + 2, s}}});
        br.push_back({b, c, {{tbase + 0, s}}});
        br.push_back({c, a, {{tbase + 1, s}}});
    };
    eps(1, 2, 3, 1, -1);  // J with J -> J
    eps(4, 5, 6, 1, 1);   // K with K -> +J
    // [J_a, K_b] = -eps K_c expanded explicitly
    br.push_back({1, 5, {{6, -1}}});
    br.push_back({5, 3, {{4, -1}}});  // = [K2, J3] = -eps_{231}... [J3,K1]? keep via antisymmetry
    br.push_back({3, 4, {{5, -1}}});
    br.push_back({2, 6, {{4, -1}}});
    br.push_back({6, 1, {{5, -1}}});
    br.push_back({4, 2, {{6, -1}}});
    e.algebra = make(6, {"iJ1", "iJ2", "iJ3", "iK1", "iK2", "iK3"}, br);
    e.basis = reference_basis(e.algebra);
    e.expected.solvable = false;
    e.expected.semisimple = true;
    e.expected.components = 1;
    e.expected.simple_candidate = true;  // one component: the graph cannot rule simplicity out
    return e;
}

CatalogEntry entry_lorentz_n() {
    CatalogEntry e;
    e.name = "lorentz_n";
    e.description = "Lorentz algebra, commuting-block basis (imaginary units absorbed)";
    std::vector<std::tuple<int, int, Terms>> br;
    auto eps = [&](int base, const Rat& s) {
        br.push_back({base + 0, base + 1, {{base + 2, s}}});
        br.push_back({base + 1, base + 2, {{base + 0, s}}});
        br.push_back({base + 2, base + 0, {{base + 1, s}}});
    };
    eps(1, -2);
    eps(4, -2);
    e.algebra = make(6, {"iN1_1", "iN1_2", "iN1_3", "iN2_1", "iN2_2", "iN2_3"}, br);
    e.basis = reference_basis(e.algebra);
    e.expected.solvable = false;
    e.expected.semisimple = true;
    e.expected.components = 2;
    e.expected.simple_candidate = false;
    return e;
}

std::vector<std::tuple<int, int, Terms>> kinematic_brackets(bool relativistic) {
    // index map: 1 = iH, 2..4 = iP, 5..7 = iJ, 8..10 = iK
    std::vector<std::tuple<int, int, Terms>> br;
    auto eps_action = [&](int abase, int bbase, int tbase, const Rat& s) {
        // [a_x, b_y] = s * eps_{xyz} t_z for all x != y
        const int E[3][3] = {{0, 3, -2}, {-3, 0, 1}, {2, -1, 0}};  // eps with target index
        for (int x = 0; x < 3; ++x)
            for (int y = 0; y < 3; ++y) {
                if (E[x][y] == 0) continue;
                int t = std::abs(E[x][y]);
                Rat sign = E[x][y] > 0 ? s : -s;
                if (abase + x < bbase + y)
                    br.push_back({abase + x, bbase + y, {{tbase + t - 1, sign}}});
                else
                    br.push_back({bbase + y, abase + x, {{tbase + t - 1, -sign}}});
            }
    };
    eps_action(5, 5, 5, -1);  // [iJ,iJ] = -eps iJ  (each pair appears twice; dedupe below)
    eps_action(5, 8, 8, -1);  // [iJ,iK] = -eps iK
    eps_action(5, 2, 2, -1);  // [iJ,iP] = -eps iP
    if (relativistic) {
        eps_action(8, 8, 5, 1);  // [iK,iK] = +eps iJ
        for (int a = 0; a < 3; ++a) br.push_back({2 + a, 8 + a, {{1, -1}}});  // [iP,iK] = -iH
    }
    for (int a = 0; a < 3; ++a) br.push_back({1, 8 + a, {{2 + a, -1}}});  // [iH,iK] = -iP
    // deduplicate the self-paired eps blocks
    std::map<std::pair<int, int>, Terms> dedup;
    for (auto& [i, j, t] : br) dedup.emplace(std::make_pair(i, j), t);
    std::vector<std::tuple<int, int, Terms>> out;
    for (auto& [ij, t] : dedup) out.push_back({ij.first, ij.second, t});
    return out;
}

CatalogEntry entry_poincare() {
    CatalogEntry e;
    e.name = "poincare";
    e.description = "Poincare algebra p(1,3) (imaginary units absorbed)";
    e.algebra = make(10,
                     {"iH", "iP1", "iP2", "iP3", "iJ1", "iJ2", "iJ3", "iK1", "iK2", "iK3"},
                     kinematic_brackets(true));
    e.basis = reference_basis(e.algebra);
    e.expected.solvable = false;
    e.expected.semisimple = false;
    e.expected.radical_dim = 4;
    return e;
}

CatalogEntry entry_galileo() {
    CatalogEntry e;
    e.name = "galileo";
    e.description = "Galileo algebra (non-relativistic limit, imaginary units absorbed)";
    e.algebra = make(10,
                     {"iH", "iP1", "iP2", "iP3", "iJ1", "iJ2", "iJ3", "iK1", "iK2", "iK3"},
                     kinematic_brackets(false));
    e.basis = reference_basis(e.algebra);
    e.expected.solvable = false;
    e.expected.semisimple = false;
    e.expected.radical_dim = 7;
    return e;
}

CatalogEntry entry_wigner_heisenberg() {
    CatalogEntry e;
    e.name = "wigner_heisenberg";
    e.description = "Wigner-Heisenberg algebra wh2 {i adag a, i(a+adag), a-adag, i}";
    e.algebra = make(4, {"iN", "iX", "P", "i"},
                     {{1, 2, {{3, 1}}}, {1, 3, {{2, -1}}}, {2, 3, {{4, -2}}}});
    e.basis = reference_basis(e.algebra);
    e.expected.solvable = true;
    e.expected.nilpotent = false;
    e.expected.center_dim = 1;
    e.expected.radical_dim = 4;
    return e;
}

CatalogEntry entry_solvable7() {
    CatalogEntry e;
    e.name = "solvable7";
    e.description = "seven-dimensional solvable algebra with a non-abelian derived chain";
    std::vector<std::tuple<int, int, Terms>> br = {{1, 2, {{2, 1}}}};  // [x0,x1]=x1
    for (int j = 2; j <= 6; ++j) br.push_back({1, j + 1, {{j + 1, -(7 - j)}}});
    for (int j = 2; j <= 5; ++j) br.push_back({2, j + 1, {{j + 2, 1}}});
    e.algebra = make(7, {"x0", "x1", "x2", "x3", "x4", "x5", "x6"}, br);
    e.basis = reference_basis(e.algebra);
    e.expected.solvable = true;
    e.expected.nilpotent = false;
    e.expected.derived_dims = {7, 6, 4, 0};
    return e;
}

CatalogEntry entry_nilpotent7() {
    CatalogEntry e;
    e.name = "nilpotent7";
    e.description = "seven-dimensional filiform-type nilpotent algebra";
    std::vector<std::tuple<int, int, Terms>> br;
    for (int j = 2; j <= 6; ++j) br.push_back({1, j, {{j + 1, 1}}});
    e.algebra = make(7, {"v1", "v2", "v3", "v4", "v5", "v6", "v7"}, br);
    e.basis = reference_basis(e.algebra);
    e.expected.solvable = true;
    e.expected.nilpotent = true;
    e.expected.nilpotency_index = 6;
    e.expected.lcs_dims = {7, 5, 4, 3, 2, 1, 0};
    return e;
}

CatalogEntry entry_nq() {
    CatalogEntry e;
    e.name = "nq";
    e.description = "two-step nilpotent algebra with a rational weight (q = 1/2)";
    e.algebra = nq_algebra(Rat(1, 2));
    e.basis = reference_basis(e.algebra);
    e.expected.solvable = true;
    e.expected.nilpotent = true;
    e.expected.nilpotency_index = 2;
    e.expected.center_dim = 2;
    return e;
}

CatalogEntry entry_optomech14() {
    CatalogEntry e;
    e.name = "optomech14";
    e.description = "fourteen-dimensional optomechanical interaction algebra, 15-element spanning set";
    // reference basis: a b c p1 q1 z1 p2 q2 p3 q3 z3 y1 y2 y3 (z2 = y1 + y2)
    std::vector<std::string> names = {"a",  "b",  "c",  "p1", "q1", "z1", "p2",
                                      "q2", "p3", "q3", "z3", "y1", "y2", "y3"};
    std::vector<std::tuple<int, int, Terms>> br = {
        {1, 2, {{3, -2}}},      {1, 3, {{2, 2}}},        {1, 4, {{5, -1}}},
        {1, 5, {{4, 1}}},       {1, 7, {{8, -1}}},       {1, 8, {{7, 1}}},
        {1, 9, {{10, -1}}},     {1, 10, {{9, 1}}},       {2, 3, {{1, 8}}},
        {2, 4, {{4, -2}}},      {2, 5, {{5, 2}}},        {2, 7, {{7, -2}}},
        {2, 8, {{8, 2}}},       {2, 9, {{9, -2}}},       {2, 10, {{10, 2}}},
        {3, 4, {{5, -2}}},      {3, 5, {{4, -2}}},       {3, 7, {{8, -2}}},
        {3, 8, {{7, -2}}},      {3, 9, {{10, -2}}},      {3, 10, {{9, -2}}},
        {4, 5, {{6, 2}}},       {4, 8, {{13, 2}}},       {4, 10, {{12, 2}}},
        {5, 7, {{13, -2}}},     {5, 9, {{12, -2}}},      {7, 8, {{12, 2}, {13, 2}}},
        {7, 10, {{14, 2}}},     {8, 9, {{14, -2}}},      {9, 10, {{11, 2}}}};
    e.algebra = make(14, names, br);
    // the 15-element spanning set adds z2 = y1 + y2
    std::vector<Vec> elems;
    std::vector<std::string> enames;
    for (int i = 0; i < 14; ++i) {
        elems.push_back(e.algebra.basis_vec(i));
        enames.push_back(names[i]);
        if (i == 7) {  // insert z2 after q2 to mirror the conventional ordering
            elems.push_back(combo(14, {{12, 1}, {13, 1}}));
            enames.push_back("z2");
        }
    }
    auto chk = check_admissible(e.algebra, elems, enames);
    if (!chk.ok()) throw std::logic_error("optomech spanning set rejected: " + to_string(chk.error));
    e.basis = chk.basis;
    e.expected.solvable = false;
    e.expected.nilpotent = false;
    e.expected.semisimple = false;
    e.expected.reductive = false;
    e.expected.radical_dim = 11;
    return e;
}

CatalogEntry entry_sl3() {
    CatalogEntry e;
    e.name = "sl3";
    e.description = "sl(3) with its root-space gradation (seven parts)";
    // basis: h1 h2 e12 e21 e13 e31 e23 e32  (indices 1..8)
    std::vector<std::tuple<int, int, Terms>> br = {
        {1, 3, {{3, 2}}},   {1, 4, {{4, -2}}}, {1, 5, {{5, 1}}},   {1, 6, {{6, -1}}},
        {1, 7, {{7, -1}}},  {1, 8, {{8, 1}}},  {2, 3, {{3, -1}}},  {2, 4, {{4, 1}}},
        {2, 5, {{5, 1}}},   {2, 6, {{6, -1}}}, {2, 7, {{7, 2}}},   {2, 8, {{8, -2}}},
        {3, 4, {{1, 1}}},   {3, 6, {{8, -1}}}, {3, 7, {{5, 1}}},   {4, 5, {{7, 1}}},
        {4, 8, {{6, -1}}},  {5, 6, {{1, 1}, {2, 1}}}, {5, 8, {{3, 1}}},  {6, 7, {{4, -1}}},
        {7, 8, {{2, 1}}}};
    e.algebra = make(8, {"h1", "h2", "e12", "e21", "e13", "e31", "e23", "e32"}, br);
    // root-space parts: g0, +a, -a, +b, -b, +(a+b), -(a+b)
    std::vector<std::vector<int>> parts = {{1, 2}, {3}, {4}, {7}, {8}, {5}, {6}};
    std::vector<std::vector<int>> delta = {
        {0, 2, 3, 4, 5, 6, 7},
        {2, 0, 1, 6, 0, 0, 5},
        {3, 1, 0, 0, 7, 4, 0},
        {4, 6, 0, 0, 1, 0, 3},
        {5, 0, 7, 1, 0, 2, 0},
        {6, 0, 4, 0, 2, 0, 1},
        {7, 5, 0, 3, 0, 1, 0}};
    e.gradation = two_part_gradation(e.algebra, parts, delta);
    e.expected.solvable = false;
    e.expected.semisimple = true;
    e.expected.simple_candidate = true;
    return e;
}

CatalogEntry entry_tight3() {
    CatalogEntry e;
    e.name = "tight3";
    e.description = "three-dimensional construction saturating the edge and degree bounds";
    e.algebra = make(3, {"x1", "x2", "x3"},
                     {{1, 2, {{1, 1}}}, {1, 3, {{1, 1}}}, {2, 3, {{1, -1}}}});
    e.basis = reference_basis(e.algebra);
    e.expected.solvable = true;
    e.expected.graph_edges = 6;
    return e;
}

using Factory = std::function<CatalogEntry()>;

const std::vector<std::pair<std::string, Factory>>& factories() {
    static const std::vector<std::pair<std::string, Factory>> f = {
        {"abelian2", [] { return abelian_entry(2); }},
        {"abelian3", [] { return abelian_entry(3); }},
        {"abelian4", [] { return abelian_entry(4); }},
        {"aff_r", entry_aff_r},
        {"heisenberg", entry_heisenberg},
        {"l3_0", [] { return entry_l3("l3_0", Rat(0)); }},
        {"l3_1", [] { return entry_l3("l3_1", Rat(1)); }},
        {"l3_2", [] { return entry_l3("l3_2", Rat(2)); }},
        {"l3_m1", [] { return entry_l3("l3_m1", Rat(-1)); }},
        {"l3_m12", [] { return entry_l3("l3_m12", Rat(-1, 2)); }},
        {"l3_m14", [] { return entry_l3("l3_m14", Rat(-1, 4)); }},
        {"su2", entry_su2},
        {"sl2r", entry_sl2r},
        {"sl2r_rotated", entry_sl2r_rotated},
        {"l3_3", entry_l3_3},
        {"l3_4", entry_l3_4},
        {"l3_5", entry_l3_5},
        {"l4_1", [] { return entry_l4("l4_1"); }},
        {"l4_2", [] { return entry_l4("l4_2"); }},
        {"l4_3", [] { return entry_l4("l4_3"); }},
        {"l4_4", [] { return entry_l4("l4_4"); }},
        {"l4_5", [] { return entry_l4("l4_5"); }},
        {"l4_6", [] { return entry_l4("l4_6"); }},
        {"l4_7", [] { return entry_l4("l4_7"); }},
        {"l4_8", [] { return entry_l4("l4_8"); }},
        {"l4_9", [] { return entry_l4("l4_9"); }},
        {"l4_9_0", [] { return entry_l4("l4_9_0"); }},
        {"l4_10", [] { return entry_l4("l4_10"); }},
        {"schrodinger_m1", [] { return entry_schrodinger(1); }},
        {"schrodinger_m2", [] { return entry_schrodinger(2); }},
        {"lorentz_jk", entry_lorentz_jk},
        {"lorentz_n", entry_lorentz_n},
        {"poincare", entry_poincare},
        {"galileo", entry_galileo},
        {"wigner_heisenberg", entry_wigner_heisenberg},
        {"solvable7", entry_solvable7},
        {"nilpotent7", entry_nilpotent7},
        {"nq", entry_nq},
        {"optomech14", entry_optomech14},
        {"sl3", entry_sl3},
        {"tight3", entry_tight3},
    };
    return f;
}

}  // namespace

std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (const auto& [n, f] : factories()) names.push_back(n);
    return names;
}

CatalogEntry catalog_get(const std::string& name) {
    for (const auto& [n, f] : factories())
        if (n == name) return f();
    throw std::invalid_argument("unknown catalog entry '" + name + "'");
}

}  // namespace liegraph
