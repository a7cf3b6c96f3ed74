#pragma once

#include "chev/matrix.hpp"
#include "chev/rootsys.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace chev {

// Chevalley basis {X_a} u {H_i} of the Lie algebra: [X_a, X_b] = N(a,b) X_{a+b},
// [X_a, X_{-a}] = H_a (coroot), [H_i, X_b] = (b, alpha_i) X_b.
class ChevalleyBasisData {
public:
    static std::shared_ptr<const ChevalleyBasisData> build(const RootSystem& rs);

    const RootSystem& rs() const { return rs_; }
    // Zero when a + b is not a root.
    int bracket(const Root& a, const Root& b) const;
    int bracket_by_index(int i, int j) const { return n_[static_cast<std::size_t>(i) * nroots_ + j]; }
    int cartan_action(int simple, const Root& b) const { return rs_.cartan_int(b, rs_.simple(simple)); }
    // Pairs (a, b) of positive roots whose bracket sign was fixed by hand.
    const std::vector<std::pair<Root, Root>>& extraspecial_pairs() const { return extraspecial_; }

    std::size_t adjoint_dim() const { return nroots_ + static_cast<std::size_t>(rs_.rank()); }
    // Sparse integer entries (row, col, power k, value) of ad(X_a)^k / k!, k >= 1.
    struct DividedPowerEntry {
        int row, col, power;
        long long value;
    };
    const std::vector<DividedPowerEntry>& divided_powers(const Root& a) const;
    // Brackets of basis vectors in the adjoint basis (roots then H_i), as a
    // sparse vector.
    std::map<int, long long> bracket_basis(int u, int v) const;

private:
    RootSystem rs_;
    std::size_t nroots_ = 0;
    std::vector<int> n_;
    std::vector<std::pair<Root, Root>> extraspecial_;
    std::vector<std::vector<DividedPowerEntry>> dp_;
};

// A matrix model of the elementary group: images of x_a(f) and h_a(u).
class GroupModel {
public:
    virtual ~GroupModel() = default;
    virtual std::string name() const = 0;
    virtual const RootSystem& rs() const = 0;
    virtual std::size_t dim() const = 0;
    virtual ModelMatrix x(const Root& a, const Poly& f) const = 0;
    virtual ModelMatrix h(const Root& a, const Poly& u) const = 0;
    // For M = x_g(c) * (factors at roots that cannot produce g), returns c.
    virtual Poly root_coordinate(const ModelMatrix& M, const Root& g) const = 0;

    ModelMatrix x_inv(const Root& a, const Poly& f) const { return x(a, -f); }
    ModelMatrix h_inv(const Root& a, const Poly& u) const { return h(a, u.unit_inverse()); }
    ModelMatrix w(const Root& a, std::int64_t modulus) const;
    ModelMatrix commutator(const ModelMatrix& A, const ModelMatrix& Ainv, const ModelMatrix& B,
                           const ModelMatrix& Binv) const
    {
        return A * B * Ainv * Binv;
    }
};

class AdjointModel : public GroupModel {
public:
    explicit AdjointModel(std::shared_ptr<const ChevalleyBasisData> cb) : cb_(std::move(cb)) {}
    std::string name() const override { return "adjoint"; }
    const RootSystem& rs() const override { return cb_->rs(); }
    std::size_t dim() const override { return cb_->adjoint_dim(); }
    ModelMatrix x(const Root& a, const Poly& f) const override;
    ModelMatrix h(const Root& a, const Poly& u) const override;
    Poly root_coordinate(const ModelMatrix& M, const Root& g) const override;
    const ChevalleyBasisData& basis() const { return *cb_; }

private:
    std::shared_ptr<const ChevalleyBasisData> cb_;
};

// Natural representation of SL_n for type A_{n-1}: x_a(f) = e_ij(sign(a) f)
// with the sign map that makes the commutator constants agree with the
// adjoint model.
class SlnModel : public GroupModel {
public:
    explicit SlnModel(std::shared_ptr<const ChevalleyBasisData> cb);
    std::string name() const override { return "sln"; }
    const RootSystem& rs() const override { return cb_->rs(); }
    std::size_t dim() const override { return n_; }
    ModelMatrix x(const Root& a, const Poly& f) const override;
    ModelMatrix h(const Root& a, const Poly& u) const override;
    Poly root_coordinate(const ModelMatrix& M, const Root& g) const override;
    // (i, j), 0-based, with x_a landing in entry (i, j).
    std::pair<int, int> position(const Root& a) const;
    int sign(const Root& a) const { return sign_.at(a.c); }
    const std::map<std::vector<int>, int>& sign_map() const { return sign_; }

private:
    std::shared_ptr<const ChevalleyBasisData> cb_;
    int n_;
    std::map<std::vector<int>, int> sign_;
};

ModelMatrix x_sln(int n, int i, int j, const Poly& f);
ModelMatrix h_sln(int n, int i, int j, const Poly& u);

// Structure constants of the commutator formula
// [x_a(r), x_b(s)] = prod_{(m,n)} x_{ma+nb}(C_{m,n} r^m s^n), product ordered by
// m + n, then m.
struct StructureConstant {
    int m, n, C;
};
std::vector<StructureConstant> structure_constants(const AdjointModel& model, const Root& a, const Root& b);

// All ordered pairs (a, b), a != +-b, a + b a root, computed once.
class StructureConstantTable {
public:
    explicit StructureConstantTable(const AdjointModel& model);
    const std::vector<StructureConstant>& get(const Root& a, const Root& b) const;
    const std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<StructureConstant>>& all() const
    {
        return table_;
    }

private:
    std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<StructureConstant>> table_;
    std::vector<StructureConstant> empty_;
};

struct CheckReport {
    bool equal = true;
    std::string detail;
    std::vector<ModelMatrix::EntryDiff> diffs;
};

// Ring Z or F_p with polynomial indeterminates r, s and a Laurent unit u.
CoefficientRing symbolic_ring(std::int64_t modulus = 0);

// Both sides of the commutator formula with symbolic r, s.
CheckReport check_commutator(const GroupModel& model, const std::vector<StructureConstant>& constants,
                             const Root& a, const Root& b, std::int64_t modulus = 0);
// h_b(u) x_a(r) h_b(u)^-1 = x_a(u^{(a,b)} r) with symbolic r and Laurent u.
CheckReport check_torus_conjugation(const GroupModel& model, const Root& a, const Root& b, std::int64_t modulus = 0);
// w_a x_b(s) w_a^-1 = x_{r_a(b)}(eta s); reports eta in `sign`.
struct WeylReport : CheckReport {
    int sign = 0;
};
WeylReport check_weyl_conjugation(const GroupModel& model, const Root& a, const Root& b, std::int64_t modulus = 0);

}  // namespace chev
