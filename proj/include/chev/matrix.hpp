#pragma once

#include "chev/poly.hpp"

#include <string>
#include <vector>

namespace chev {

// Dense square matrix over a CoefficientRing. Products skip zero entries, so
// the unipotent and diagonal matrices of the models multiply cheaply.
class ModelMatrix {
public:
    ModelMatrix() = default;
    ModelMatrix(std::size_t dim, std::int64_t modulus);
    static ModelMatrix identity(std::size_t dim, std::int64_t modulus);

    std::size_t dim() const { return dim_; }
    std::int64_t modulus() const { return mod_; }
    Poly& at(std::size_t i, std::size_t j) { return e_[i * dim_ + j]; }
    const Poly& at(std::size_t i, std::size_t j) const { return e_[i * dim_ + j]; }

    ModelMatrix operator*(const ModelMatrix& o) const;
    ModelMatrix operator+(const ModelMatrix& o) const;
    ModelMatrix operator-(const ModelMatrix& o) const;
    bool operator==(const ModelMatrix& o) const { return dim_ == o.dim_ && e_ == o.e_; }
    bool operator!=(const ModelMatrix& o) const { return !(*this == o); }
    bool is_identity() const;
    bool is_diagonal() const;
    std::size_t nonzeros() const;

    struct EntryDiff {
        std::size_t row, col;
        std::string lhs, rhs;
    };
    // Entries where the two matrices differ, at most `limit` of them.
    std::vector<EntryDiff> diff(const ModelMatrix& o, const CoefficientRing& ring, std::size_t limit = 8) const;

private:
    std::size_t dim_ = 0;
    std::int64_t mod_ = 0;
    std::vector<Poly> e_;
};

}  // namespace chev
