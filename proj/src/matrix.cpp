#include "chev/matrix.hpp"

#include <stdexcept>

namespace chev {

ModelMatrix::ModelMatrix(std::size_t dim, std::int64_t modulus)
    : dim_(dim), mod_(modulus), e_(dim * dim, Poly(modulus))
{
}

ModelMatrix ModelMatrix::identity(std::size_t dim, std::int64_t modulus)
{
    ModelMatrix m(dim, modulus);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = Poly::constant(1, modulus);
    return m;
}

ModelMatrix ModelMatrix::operator*(const ModelMatrix& o) const
{
    if (dim_ != o.dim_) throw std::invalid_argument("matrix dimension mismatch");
    std::vector<std::vector<std::size_t>> row_nz(dim_);
    for (std::size_t k = 0; k < dim_; ++k)
        for (std::size_t j = 0; j < dim_; ++j)
            if (!o.at(k, j).is_zero()) row_nz[k].push_back(j);
    ModelMatrix r(dim_, mod_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t k = 0; k < dim_; ++k) {
            const Poly& a = at(i, k);
            if (a.is_zero()) continue;
            bool a_one = a.is_one();
            for (std::size_t j : row_nz[k]) {
                if (a_one) r.at(i, j) += o.at(k, j);
                else r.at(i, j) += a * o.at(k, j);
            }
        }
    }
    return r;
}

ModelMatrix ModelMatrix::operator+(const ModelMatrix& o) const
{
    if (dim_ != o.dim_) throw std::invalid_argument("matrix dimension mismatch");
    ModelMatrix r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

ModelMatrix ModelMatrix::operator-(const ModelMatrix& o) const
{
    if (dim_ != o.dim_) throw std::invalid_argument("matrix dimension mismatch");
    ModelMatrix r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += -o.e_[i];
    return r;
}

bool ModelMatrix::is_identity() const
{
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) {
            const Poly& p = at(i, j);
            if (i == j ? !p.is_one() : !p.is_zero()) return false;
        }
    return true;
}

bool ModelMatrix::is_diagonal() const
{
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            if (i != j && !at(i, j).is_zero()) return false;
    return true;
}

std::size_t ModelMatrix::nonzeros() const
{
    std::size_t n = 0;
    for (const auto& p : e_) n += !p.is_zero();
    return n;
}

std::vector<ModelMatrix::EntryDiff> ModelMatrix::diff(const ModelMatrix& o, const CoefficientRing& ring,
                                                      std::size_t limit) const
{
    std::vector<EntryDiff> out;
    for (std::size_t i = 0; i < dim_ && out.size() < limit; ++i)
        for (std::size_t j = 0; j < dim_ && out.size() < limit; ++j)
            if (at(i, j) != o.at(i, j)) out.push_back({i, j, ring.str(at(i, j)), ring.str(o.at(i, j))});
    return out;
}

}  // namespace chev
