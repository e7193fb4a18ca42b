#pragma once

#include <map>
#include <string>
#include <vector>

#include "superyang/ops.hpp"
#include "superyang/rational.hpp"

namespace superyang {

// ============================================================================
// Permutations (0-based one-line notation; text form is 1-based)
// ============================================================================

using PermVec = std::vector<int>;

PermVec perm_identity(int d);
/// Composition acting right-to-left: (a . b)(i) = a[b[i]].
PermVec perm_compose(const PermVec& a, const PermVec& b);
PermVec perm_inverse(const PermVec& a);
int perm_sign(const PermVec& a);
/// Transposition (i j) in S_d, 0-based slots.
PermVec perm_transposition(int d, int i, int j);
/// Parses the 1-based text form "2,1,3"; DomainError if not a permutation.
PermVec perm_parse(const std::string& text);
std::string perm_str(const PermVec& p);

// ============================================================================
// Partitions and standard tableaux
// ============================================================================

using Partition = std::vector<int>;           ///< weakly decreasing positive parts
using Tableau = std::vector<std::vector<int>>;  ///< rows of entries 1..d

/// All partitions of d, largest-part-first order (e.g. 4, 31, 22, 211, 1111).
std::vector<Partition> partitions_of(int d);
Partition conjugate_partition(const Partition& p);
/// Product of all hook lengths.
Int hook_product(const Partition& p);
/// Number of standard tableaux, d! / hook_product.
Int standard_tableau_count(const Partition& p);
/// Whether the diagram fits in the (m, n) hook, i.e. row m+1 has at most n boxes.
bool fits_hook(const Partition& p, int m, int n);

/// All standard tableaux of the shape in a fixed deterministic order; the
/// first one is always the row filling (rows filled consecutively).
std::vector<Tableau> standard_tableaux(const Partition& p);
Tableau first_standard_tableau(const Partition& p);
Partition tableau_shape(const Tableau& t);
/// contents[k-1] = column - row of the box containing entry k.
std::vector<int> tableau_contents(const Tableau& t);
/// Parses rows separated by ';', entries by ',' ("1,3;2"); validates
/// standardness (DomainError otherwise).
Tableau tableau_parse(const std::string& text);
std::string tableau_str(const Tableau& t);

// ============================================================================
// Group algebra of S_d
// ============================================================================

/// Element of the group algebra K[S_d] with deterministic term order.
template <class K>
class GroupAlg {
public:
    explicit GroupAlg(int d) : d_(d) {}

    static GroupAlg one(int d) {
        GroupAlg e(d);
        e.add(perm_identity(d), ScalarTraits<K>::one());
        return e;
    }
    static GroupAlg from_perm(const PermVec& p, const K& c) {
        GroupAlg e(static_cast<int>(p.size()));
        e.add(p, c);
        return e;
    }

    int degree() const { return d_; }

    void add(const PermVec& p, const K& c) {
        if (static_cast<int>(p.size()) != d_) throw DomainError("permutation degree mismatch");
        if (ScalarTraits<K>::is_zero(c)) return;
        auto it = t_.find(p);
        if (it == t_.end()) {
            t_.emplace(p, c);
            return;
        }
        it->second = it->second + c;
        if (ScalarTraits<K>::is_zero(it->second)) t_.erase(it);
    }

    K coeff(const PermVec& p) const {
        auto it = t_.find(p);
        return it == t_.end() ? ScalarTraits<K>::zero() : it->second;
    }
    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }
    const std::map<PermVec, K>& terms() const { return t_; }

    friend GroupAlg operator+(const GroupAlg& a, const GroupAlg& b) {
        GroupAlg out = a;
        for (const auto& [p, c] : b.t_) out.add(p, c);
        return out;
    }
    friend GroupAlg operator-(const GroupAlg& a, const GroupAlg& b) {
        GroupAlg out = a;
        for (const auto& [p, c] : b.t_) out.add(p, ScalarTraits<K>::zero() - c);
        return out;
    }
    /// Convolution product; composition matches perm_compose.
    friend GroupAlg operator*(const GroupAlg& a, const GroupAlg& b) {
        if (a.d_ != b.d_) throw DomainError("group algebra degree mismatch");
        GroupAlg out(a.d_);
        for (const auto& [p, c] : a.t_)
            for (const auto& [q, e] : b.t_) out.add(perm_compose(p, q), c * e);
        return out;
    }
    GroupAlg scaled(const K& s) const {
        GroupAlg out(d_);
        for (const auto& [p, c] : t_) out.add(p, c * s);
        return out;
    }

    friend bool operator==(const GroupAlg& a, const GroupAlg& b) {
        return a.d_ == b.d_ && a.t_ == b.t_;
    }
    friend bool operator!=(const GroupAlg& a, const GroupAlg& b) { return !(a == b); }

    /// Same element seen in S_new_d via the embedding fixing the added points.
    GroupAlg lifted(int new_d) const {
        if (new_d < d_) throw DomainError("cannot lower the degree of a group algebra element");
        GroupAlg out(new_d);
        for (const auto& [p, c] : t_) {
            PermVec q = p;
            for (int i = d_; i < new_d; ++i) q.push_back(i);
            out.add(q, c);
        }
        return out;
    }

private:
    int d_;
    std::map<PermVec, K> t_;
};

/// Jucys-Murphy element x_a = sum of (b a) over b < a; 1-based a, x_1 = 0.
GroupAlg<Rational> jm_element(int d, int a);

/// Primitive idempotent of the standard tableau via the interpolation
/// recursion on Jucys-Murphy elements.
GroupAlg<Rational> murphy_idempotent(const Tableau& u);

/// The same idempotent from the rational-function product formula, evaluated
/// by consecutive substitution over the fraction-field tower and divided by
/// the hook product. ResourceBound if the tableau has more than bound boxes.
GroupAlg<Rational> fusion_idempotent(const Tableau& u, int bound);

GroupAlg<Rational> symmetrizer(int d);
GroupAlg<Rational> antisymmetrizer(int d);

/// Action on a tensor power by graded place permutations.
template <class V>
SparseVec<V> act_groupalg(const TensorSpace& t, const GroupAlg<Rational>& e,
                          const SparseVec<V>& v) {
    SparseVec<V> out;
    for (const auto& [p, c] : e.terms())
        out.add_scaled(act_permutation(t, p, v), ScalarTraits<V>::from_rational(c));
    return out;
}

}  // namespace superyang
