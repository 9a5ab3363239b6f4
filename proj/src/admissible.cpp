#include "liegraph/admissible.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace liegraph {

std::string to_string(AdmissibleError e) {
    switch (e) {
        case AdmissibleError::none: return "ok";
        case AdmissibleError::zero_element: return "zero element in spanning set";
        case AdmissibleError::proportional_duplicates: return "proportional duplicate elements";
        case AdmissibleError::not_spanning: return "set does not span the algebra";
        case AdmissibleError::not_closed: return "bracket result is not proportional to any element";
    }
    return "?";
}

std::string pretty_combination(const Vec& v, const std::vector<std::string>& names) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        Scalar c = v[i];
        std::string cs = c.str();
        if (first) {
            if (cs == "1")
                os << names[i];
            else if (cs == "-1")
                os << "-" << names[i];
            else
                os << cs << "*" << names[i];
            first = false;
        } else {
            if (cs == "1")
                os << "+" << names[i];
            else if (cs == "-1")
                os << "-" << names[i];
            else if (!cs.empty() && cs[0] == '-')
                os << cs << "*" << names[i];
            else
                os << "+" << cs << "*" << names[i];
        }
    }
    if (first) os << "0";
    return os.str();
}

AdmissibleCheck check_admissible(const LieAlgebra& g, const std::vector<Vec>& elements,
                                 std::vector<std::string> names) {
    AdmissibleCheck res;
    int m = static_cast<int>(elements.size());
    if (m == 0) {
        res.error = AdmissibleError::not_spanning;
        return res;
    }
    for (int j = 0; j < m; ++j)
        if (is_zero(elements[j])) {
            res.error = AdmissibleError::zero_element;
            res.witness_j = j;
            return res;
        }
    for (int j = 0; j < m; ++j)
        for (int k = j + 1; k < m; ++k)
            if (proportional(elements[j], elements[k])) {
                res.error = AdmissibleError::proportional_duplicates;
                res.witness_j = j;
                res.witness_k = k;
                return res;
            }
    if (Subspace::span(g.dim(), elements).dim() != g.dim()) {
        res.error = AdmissibleError::not_spanning;
        return res;
    }

    AdmissibleBasis b;
    b.elements = elements;
    b.alpha = Mat(m, m);
    b.delta.assign(m, std::vector<int>(m, kNoTarget));
    for (int j = 0; j < m; ++j)
        for (int k = j + 1; k < m; ++k) {
            Vec br = g.bracket(elements[j], elements[k]);
            if (is_zero(br)) continue;
            int target = kNoTarget;
            Scalar kappa;
            for (int l = 0; l < m; ++l) {
                if (auto p = proportional(br, elements[l])) {
                    target = l;
                    kappa = *p;
                    break;  // elements are pairwise non-proportional, so unique
                }
            }
            if (target == kNoTarget) {
                res.error = AdmissibleError::not_closed;
                res.witness_j = j;
                res.witness_k = k;
                res.witness_bracket = std::move(br);
                return res;
            }
            b.alpha.at(j, k) = kappa;
            b.alpha.at(k, j) = -kappa;
            b.delta[j][k] = target;
            b.delta[k][j] = target;
        }
    b.minimal = (m == g.dim());
    if (!names.empty()) {
        if (static_cast<int>(names.size()) != m)
            throw std::invalid_argument("basis name count mismatch");
        b.names = std::move(names);
    } else {
        for (int j = 0; j < m; ++j) b.names.push_back(pretty_combination(elements[j], g.names()));
    }
    res.basis = std::move(b);
    return res;
}

AdmissibleBasis nilpotent_closure_basis(const LieAlgebra& g) {
    if (!is_nilpotent_oracle(g)) throw std::invalid_argument("algebra is not nilpotent");
    std::vector<Vec> set;
    for (int i = 0; i < g.dim(); ++i) set.push_back(g.basis_vec(i));
    bool grew = true;
    while (grew) {
        grew = false;
        int cur = static_cast<int>(set.size());
        for (int j = 0; j < cur; ++j)
            for (int k = j + 1; k < cur; ++k) {
                Vec br = g.bracket(set[j], set[k]);
                if (is_zero(br)) continue;
                bool found = false;
                for (const auto& e : set)
                    if (proportional(br, e)) {
                        found = true;
                        break;
                    }
                if (!found) {
                    set.push_back(std::move(br));
                    grew = true;
                }
            }
    }
    auto chk = check_admissible(g, set);
    if (!chk.ok()) throw std::logic_error("nilpotent closure failed admissibility re-check");
    return *chk.basis;
}

std::vector<Scalar> char_poly(const Mat& m) {
    // Faddeev-LeVerrier: exact over any field of characteristic zero
    int n = m.rows();
    std::vector<Scalar> coeffs(n + 1);
    coeffs[n] = Scalar(1);
    Mat mk = Mat(n, n);
    Scalar ck(1);
    Mat acc = m;
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            Mat shifted = mk;
            for (int i = 0; i < n; ++i) shifted.at(i, i) += ck;
            acc = m * shifted;
        }
        ck = -(acc.trace() / Scalar(static_cast<long>(k)));
        coeffs[n - k] = ck;
        mk = acc;
    }
    return coeffs;
}

static Scalar poly_eval(const std::vector<Scalar>& coeffs, const Scalar& x) {
    Scalar acc;
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) acc = acc * x + coeffs[i];
    return acc;
}

static std::vector<Scalar> deflate(const std::vector<Scalar>& coeffs, const Scalar& root) {
    // synthetic division by (x - root)
    int n = static_cast<int>(coeffs.size()) - 1;
    std::vector<Scalar> out(n);
    Scalar carry = coeffs[n];
    for (int i = n - 1; i >= 0; --i) {
        out[i] = carry;
        carry = coeffs[i] + carry * root;
    }
    return out;
}

static std::vector<Int> small_divisors(Int v, int cap) {
    if (v < 0) v = -v;
    std::vector<Int> divs;
    if (v == 0) return divs;
    for (Int d = 1; d * d <= v; ++d) {
        if (v % d == 0) {
            divs.push_back(d);
            if (d * d != v) divs.push_back(v / d);
            if (static_cast<int>(divs.size()) > cap) return {};
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::vector<Scalar> field_roots(const std::vector<Scalar>& coeffs_in, int d, int budget) {
    std::vector<Scalar> roots;
    std::vector<Scalar> p = coeffs_in;
    while (p.size() > 1 && p.back().is_zero()) p.pop_back();
    // strip zero roots
    while (p.size() > 1 && p.front().is_zero()) {
        roots.push_back(Scalar(0));
        p.erase(p.begin());
    }
    bool rational_coeffs = true;
    for (const auto& c : p) rational_coeffs = rational_coeffs && c.is_rational();

    if (rational_coeffs && p.size() > 3) {
        // rational-root enumeration on the primitive integer polynomial
        Int lcm = 1;
        for (const auto& c : p) {
            Int den = denominator(c.a());
            lcm = lcm / gcd(lcm, den) * den;
        }
        std::vector<Int> ic;
        for (const auto& c : p) ic.push_back(numerator(c.a() * Rat(lcm)));
        auto ps = small_divisors(ic.front(), budget);
        auto qs = small_divisors(ic.back(), budget);
        bool changed = true;
        while (changed && p.size() > 3) {
            changed = false;
            for (const auto& pp : ps) {
                for (const auto& qq : qs) {
                    for (int sign : {1, -1}) {
                        Scalar cand(Rat(sign * pp, qq));
                        if (poly_eval(p, cand).is_zero()) {
                            roots.push_back(cand);
                            p = deflate(p, cand);
                            changed = true;
                            break;
                        }
                    }
                    if (changed) break;
                }
                if (changed) break;
            }
        }
    }
    if (p.size() == 2) {  // linear: c0 + c1 x
        roots.push_back(-(p[0] / p[1]));
    } else if (p.size() == 3) {  // quadratic: exact formula with field square root
        Scalar a = p[2], b = p[1], c = p[0];
        Scalar disc = b * b - Scalar(4) * a * c;
        if (auto s = field_sqrt(disc, d)) {
            Scalar two_a = Scalar(2) * a;
            roots.push_back((-b + *s) / two_a);
            if (!s->is_zero()) roots.push_back((-b - *s) / two_a);
        }
    }
    // degree >= 3 leftovers after deflation are abandoned (best-effort search)
    return roots;
}

std::optional<AdmissibleBasis> eigen_basis_search(const LieAlgebra& g, int budget) {
    int attempts = 0;
    auto attempt = [&](const std::vector<Vec>& cand) -> std::optional<AdmissibleBasis> {
        if (attempts >= budget) return std::nullopt;
        ++attempts;
        auto chk = check_admissible(g, cand);
        if (chk.ok()) return chk.basis;
        return std::nullopt;
    };

    std::vector<Vec> ref;
    for (int i = 0; i < g.dim(); ++i) ref.push_back(g.basis_vec(i));
    if (auto b = attempt(ref)) return b;

    if (is_nilpotent_oracle(g)) return nilpotent_closure_basis(g);

    int n = g.dim();
    for (int v = 0; v < n && attempts < budget; ++v) {
        Mat advm = g.ad(g.basis_vec(v));
        auto eigvals = field_roots(char_poly(advm), g.field_d(), budget);
        std::vector<Vec> eigvecs;
        for (const auto& lambda : eigvals) {
            Mat shifted = advm;
            for (int i = 0; i < n; ++i) shifted.at(i, i) -= lambda;
            for (auto& k : kernel(shifted)) {
                bool dup = false;
                for (const auto& e : eigvecs)
                    if (proportional(k, e)) dup = true;
                if (!dup) eigvecs.push_back(std::move(k));
            }
        }
        if (static_cast<int>(eigvecs.size()) < n - 1) continue;
        // candidate bases: the generator plus n-1 of its eigenvectors
        std::vector<int> pick(eigvecs.size(), 0);
        std::fill(pick.end() - (n - 1), pick.end(), 1);
        std::sort(pick.begin(), pick.end());
        do {
            // deterministic ordering: the seed vector, then its eigenvectors
            std::vector<Vec> cand{g.basis_vec(v)};
            for (size_t i = 0; i < eigvecs.size(); ++i)
                if (pick[i]) cand.push_back(eigvecs[i]);
            if (auto b = attempt(cand)) return b;
        } while (std::next_permutation(pick.begin(), pick.end()) && attempts < budget);
    }
    return std::nullopt;
}

}  // namespace liegraph
