#pragma once

#include <map>
#include <vector>

#include "superyang/linalg.hpp"
#include "superyang/space.hpp"

namespace superyang {

/// Sparse vector in a tensor space. Terms are kept index-ordered so every
/// traversal (and hence every printed or serialized form) is deterministic.
template <class K>
class SparseVec {
public:
    SparseVec() = default;

    static SparseVec unit(long idx, const K& c) {
        SparseVec v;
        v.add(idx, c);
        return v;
    }
    static SparseVec unit(long idx) { return unit(idx, ScalarTraits<K>::one()); }

    void add(long idx, const K& v) {
        if (ScalarTraits<K>::is_zero(v)) return;
        auto it = t_.find(idx);
        if (it == t_.end()) {
            t_.emplace(idx, v);
            return;
        }
        it->second = it->second + v;
        if (ScalarTraits<K>::is_zero(it->second)) t_.erase(it);
    }
    void add_scaled(const SparseVec& other, const K& c) {
        if (ScalarTraits<K>::is_zero(c)) return;
        for (const auto& [idx, val] : other.t_) add(idx, val * c);
    }

    [[nodiscard]] SparseVec scaled(const K& c) const {
        SparseVec out;
        out.add_scaled(*this, c);
        return out;
    }
    friend SparseVec operator+(const SparseVec& a, const SparseVec& b) {
        SparseVec out = a;
        for (const auto& [idx, val] : b.t_) out.add(idx, val);
        return out;
    }
    friend SparseVec operator-(const SparseVec& a, const SparseVec& b) {
        SparseVec out = a;
        out.add_scaled(b, ScalarTraits<K>::zero() - ScalarTraits<K>::one());
        return out;
    }

    K coeff(long idx) const {
        auto it = t_.find(idx);
        return it == t_.end() ? ScalarTraits<K>::zero() : it->second;
    }
    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }
    const std::map<long, K>& terms() const { return t_; }

    std::vector<K> dense(long dim) const {
        std::vector<K> out(dim, ScalarTraits<K>::zero());
        for (const auto& [idx, val] : t_) out[idx] = val;
        return out;
    }
    static SparseVec from_dense(const std::vector<K>& v) {
        SparseVec out;
        for (std::size_t i = 0; i < v.size(); ++i) out.add(static_cast<long>(i), v[i]);
        return out;
    }

    friend bool operator==(const SparseVec& a, const SparseVec& b) { return a.t_ == b.t_; }
    friend bool operator!=(const SparseVec& a, const SparseVec& b) { return !(a == b); }

private:
    std::map<long, K> t_;
};

/// Operator on an ordered pair of tensor slots, tabulated per input digit
/// pair. The table stores the action on the bare two-fold tensor, internal
/// grading signs already folded in; the extra signs from embedding the two
/// slots into a larger tensor product are applied by apply_two_slot.
template <class K>
class TwoSlotOp {
public:
    struct Term {
        int out_a, out_b;
        K coeff;
    };

    TwoSlotOp(int dim_a, int dim_b)
        : da_(dim_a), db_(dim_b), t_(static_cast<std::size_t>(dim_a) * dim_b) {}

    static TwoSlotOp identity(int dim_a, int dim_b, const K& c) {
        TwoSlotOp op(dim_a, dim_b);
        for (int a = 0; a < dim_a; ++a)
            for (int b = 0; b < dim_b; ++b) op.add(a, b, a, b, c);
        return op;
    }

    int dim_a() const { return da_; }
    int dim_b() const { return db_; }

    /// Adds c * (e_{out_a,in_a} (x) e_{out_b,in_b}) as seen on the bare
    /// two-fold tensor, merging with an existing term at the same position.
    void add(int in_a, int in_b, int out_a, int out_b, const K& c) {
        if (ScalarTraits<K>::is_zero(c)) return;
        auto& cell = t_[static_cast<std::size_t>(in_a) * db_ + in_b];
        for (auto& term : cell) {
            if (term.out_a == out_a && term.out_b == out_b) {
                term.coeff = term.coeff + c;
                if (ScalarTraits<K>::is_zero(term.coeff))
                    cell.erase(cell.begin() + (&term - cell.data()));
                return;
            }
        }
        cell.push_back(Term{out_a, out_b, c});
    }

    /// this += c * op for a rational-coefficient building block.
    void axpy(const K& c, const TwoSlotOp<Rational>& op) {
        if (op.dim_a() != da_ || op.dim_b() != db_) throw DomainError("slot dimension mismatch");
        for (int a = 0; a < da_; ++a)
            for (int b = 0; b < db_; ++b)
                for (const auto& term : op.at(a, b))
                    add(a, b, term.out_a, term.out_b,
                        c * ScalarTraits<K>::from_rational(term.coeff));
    }

    const std::vector<Term>& at(int in_a, int in_b) const {
        return t_[static_cast<std::size_t>(in_a) * db_ + in_b];
    }

private:
    int da_, db_;
    std::vector<std::vector<Term>> t_;
};

/// Graded swap: P(e_a (x) e_b) = (-1)^{|a||b|} e_b (x) e_a.
TwoSlotOp<Rational> op_swap(const SuperSpace& v);
/// Rank-one block on the GL kind: nonzero only on e_a (x) e_a, with image
/// sum_i (-1)^{|i|} e_i (x) e_i.
TwoSlotOp<Rational> op_block_gl(const SuperSpace& v);
/// Rank-one block of the orthosymplectic form: nonzero only on e_a (x) e_a',
/// with image (-1)^{|a|} tau_a sum_i tau_i e_i (x) e_i'.
TwoSlotOp<Rational> op_block_osp(const SuperSpace& v);

/// Applies a two-slot operator at slots (slot_a, slot_b), slot_a < slot_b, of
/// the tensor space, inserting the grading signs of the embedding: a term
/// changing slot parities by (pa, pb) picks up
///   (-1)^{pa * (parity before slot_a) + pb * (parity before slot_a + parity
///    strictly between the slots)},
/// parities taken from the input digits.
template <class K>
SparseVec<K> apply_two_slot(const TensorSpace& t, const TwoSlotOp<K>& op, int slot_a, int slot_b,
                            const SparseVec<K>& v) {
    if (slot_a >= slot_b) throw DomainError("two-slot application needs slot_a < slot_b");
    SparseVec<K> out;
    std::vector<int> digits(t.sites());
    for (const auto& [idx, val] : v.terms()) {
        t.digits_of(idx, digits);
        int before = 0, between = 0;
        for (int s = 0; s < slot_a; ++s) before += t.factor(s).parity(digits[s]);
        for (int s = slot_a + 1; s < slot_b; ++s) between += t.factor(s).parity(digits[s]);
        const int in_a = digits[slot_a], in_b = digits[slot_b];
        const int par_in_a = t.factor(slot_a).parity(in_a);
        const int par_in_b = t.factor(slot_b).parity(in_b);
        for (const auto& term : op.at(in_a, in_b)) {
            const int pa = (t.factor(slot_a).parity(term.out_a) + par_in_a) & 1;
            const int pb = (t.factor(slot_b).parity(term.out_b) + par_in_b) & 1;
            const int sign = (pa * before + pb * (before + between)) & 1;
            digits[slot_a] = term.out_a;
            digits[slot_b] = term.out_b;
            const long out_idx = t.index_of(digits);
            digits[slot_a] = in_a;
            digits[slot_b] = in_b;
            K contrib = val * term.coeff;
            if (sign) contrib = ScalarTraits<K>::zero() - contrib;
            out.add(out_idx, contrib);
        }
    }
    return out;
}

/// Applies c * e_{out,in} at one slot with the grading sign of the embedding.
template <class K>
SparseVec<K> apply_one_slot(const TensorSpace& t, int slot, int out_i, int in_j, const K& c,
                            const SparseVec<K>& v) {
    SparseVec<K> out;
    if (ScalarTraits<K>::is_zero(c)) return out;
    const int op_par = (t.factor(slot).parity(out_i) + t.factor(slot).parity(in_j)) & 1;
    std::vector<int> digits(t.sites());
    for (const auto& [idx, val] : v.terms()) {
        t.digits_of(idx, digits);
        if (digits[slot] != in_j) continue;
        int before = 0;
        for (int s = 0; s < slot; ++s) before += t.factor(s).parity(digits[s]);
        digits[slot] = out_i;
        const long out_idx = t.index_of(digits);
        digits[slot] = in_j;
        K contrib = val * c;
        if ((op_par * before) & 1) contrib = ScalarTraits<K>::zero() - contrib;
        out.add(out_idx, contrib);
    }
    return out;
}

/// Graded place permutation of tensor factors: the vector in slot a moves to
/// slot sigma[a], with sign -1 each time two odd factors cross. This is the
/// left action generated by adjacent graded swaps; the permuted slots must
/// all carry the same factor space.
template <class K>
SparseVec<K> act_permutation(const TensorSpace& t, const std::vector<int>& sigma,
                             const SparseVec<K>& v) {
    if (static_cast<int>(sigma.size()) != t.sites())
        throw DomainError("permutation length mismatch");
    SparseVec<K> out;
    std::vector<int> digits(t.sites());
    std::vector<int> word = sigma;
    for (const auto& [idx, val] : v.terms()) {
        t.digits_of(idx, digits);
        word = sigma;
        int sign = 0;
        // Bubble-sort the one-line word to the identity; each adjacent swap
        // applied to the word corresponds to the graded swap of those slots.
        bool moved = true;
        while (moved) {
            moved = false;
            for (int i = 0; i + 1 < t.sites(); ++i) {
                if (word[i] > word[i + 1]) {
                    sign ^= t.factor(i).parity(digits[i]) & t.factor(i + 1).parity(digits[i + 1]);
                    std::swap(word[i], word[i + 1]);
                    std::swap(digits[i], digits[i + 1]);
                    moved = true;
                }
            }
        }
        K contrib = val;
        if (sign) contrib = ScalarTraits<K>::zero() - contrib;
        out.add(t.index_of(digits), contrib);
    }
    return out;
}

/// Dense matrix of a linear map given by its action on basis vectors.
template <class K, class ColumnFn>
Mat<K> materialize_columns(long dim, ColumnFn&& column_of) {
    Mat<K> m(dim, dim);
    for (long j = 0; j < dim; ++j) {
        const SparseVec<K> col = column_of(j);
        for (const auto& [idx, val] : col.terms()) m.at(idx, j) = val;
    }
    return m;
}

}  // namespace superyang
