#pragma once

#include <string>
#include <vector>

#include "superyang/errors.hpp"
#include "superyang/rational.hpp"

namespace superyang {

/// Families of graded vector spaces the toolkit works over.
enum class SpaceKind {
    GL,    ///< C^{m|n}: first m basis vectors even, last n odd
    OSP,   ///< dim 2n+2 with a bilinear form: even ends, odd middle block
    OSP0,  ///< dim 2n, all basis vectors odd, with a bilinear form
};

/// A finite-dimensional graded vector space. The orthosymplectic kinds carry
/// the extra data of their bilinear form: the index involution i -> prime(i)
/// and the signs tau(i). All indices are 0-based.
class SuperSpace {
public:
    static SuperSpace gl(int m, int n);
    static SuperSpace osp(int n);   ///< even part of dimension 2, odd of 2n
    static SuperSpace osp0(int n);  ///< purely odd, dimension 2n

    SpaceKind kind() const { return kind_; }
    int dim() const { return dim_; }
    /// Number of even basis vectors (GL kind only).
    int gl_m() const { return m_; }
    /// The family parameter n (odd dimension is 2n for OSP kinds).
    int n() const { return n_; }

    /// Parity of basis vector i: 0 even, 1 odd.
    int parity(int i) const {
        switch (kind_) {
            case SpaceKind::GL: return i < m_ ? 0 : 1;
            case SpaceKind::OSP: return (i == 0 || i == dim_ - 1) ? 0 : 1;
            case SpaceKind::OSP0: return 1;
        }
        return 0;
    }

    /// Index involution of the bilinear form; DomainError for the GL kind.
    int prime(int i) const {
        require_form();
        return dim_ - 1 - i;
    }

    /// Sign tau(i) in {+1, -1} of the bilinear form; DomainError for GL.
    int tau(int i) const {
        require_form();
        if (kind_ == SpaceKind::OSP) return (i <= n_ || i == dim_ - 1) ? 1 : -1;
        return i < n_ ? 1 : -1;
    }

    /// The distinguished pole shift of the orthosymplectic rational R-matrix.
    Rational kappa() const {
        require_form();
        return kind_ == SpaceKind::OSP ? Rational(-n_) : Rational(-n_ - 1);
    }

    bool has_form() const { return kind_ != SpaceKind::GL; }

    std::string str() const;

    friend bool operator==(const SuperSpace& a, const SuperSpace& b) {
        return a.kind_ == b.kind_ && a.m_ == b.m_ && a.n_ == b.n_;
    }
    friend bool operator!=(const SuperSpace& a, const SuperSpace& b) { return !(a == b); }

private:
    SuperSpace(SpaceKind kind, int m, int n, int dim) : kind_(kind), m_(m), n_(n), dim_(dim) {}
    void require_form() const {
        if (!has_form()) throw DomainError("space carries no bilinear form");
    }

    SpaceKind kind_;
    int m_;
    int n_;
    int dim_;
};

/// Tensor product of graded spaces with mixed-radix basis indexing. Factor 0
/// is the most significant digit, so basis order is lexicographic in the
/// factor indices.
class TensorSpace {
public:
    TensorSpace() = default;
    explicit TensorSpace(std::vector<SuperSpace> factors);
    /// d copies of the same factor.
    static TensorSpace power(const SuperSpace& v, int d);

    int sites() const { return static_cast<int>(factors_.size()); }
    const SuperSpace& factor(int a) const { return factors_[a]; }
    long dim() const { return dim_; }

    long index_of(const std::vector<int>& digits) const;
    void digits_of(long index, std::vector<int>& out) const;
    std::vector<int> digits_of(long index) const;

    /// Parity of the basis vector with the given digits (sum mod 2).
    int parity(const std::vector<int>& digits) const;

private:
    std::vector<SuperSpace> factors_;
    std::vector<long> stride_;
    long dim_ = 1;
};

}  // namespace superyang
