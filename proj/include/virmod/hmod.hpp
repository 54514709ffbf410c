#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "virmod/matrix.hpp"
#include "virmod/scalar.hpp"

namespace virmod {

// The Witt subalgebras in play: a = span{L_i | i >= -1} and its positive
// part B = span{L_i | i >= 0}, with bracket [L_i, L_j] = (j - i) L_{i+j}.

/// Finite-dimensional B-module given by explicit generator matrices
/// M_0..M_r (M_i represents L_i; L_j acts as zero for j > r). The
/// constructor enforces the bracket consistency
///   M_i M_j - M_j M_i = (j - i) M_{i+j}
/// for all 0 <= i, j <= r (with M_{i+j} = 0 past r), and M_r != 0 when a
/// positive order r is declared.
class BModuleSpec {
public:
    /// One-dimensional module where L_0 acts by beta and L_i (i >= 1) by
    /// zero: the highest-weight data with weight beta.
    static BModuleSpec highest_weight(const GaussianRational& beta);

    /// dim-dimensional module on which every generator acts as zero.
    static BModuleSpec trivial(int dim);

    static BModuleSpec from_matrices(int dim, int order, std::vector<Matrix> gens);

    int dim() const { return dim_; }
    int order() const { return order_; }

    /// Matrix of L_i for i in [0, order]; the zero matrix past the order.
    const Matrix& gen(int i) const;

    bool is_trivial() const { return trivial_; }
    bool is_highest_weight() const { return dim_ == 1 && order_ == 0; }

    /// The L_0 scalar of a one-dimensional spec.
    GaussianRational beta() const;

    /// True when M_order has full rank (the bijectivity hypothesis of the
    /// order-additivity law).
    bool top_generator_invertible() const;

    friend bool operator==(const BModuleSpec& a, const BModuleSpec& b) {
        return a.dim_ == b.dim_ && a.order_ == b.order_ && a.gens_ == b.gens_;
    }

private:
    BModuleSpec(int dim, int order, std::vector<Matrix> gens);

    int dim_;
    int order_;
    std::vector<Matrix> gens_;
    bool trivial_;
};

/// Element of the module attached to a BModuleSpec: a finite sum of
/// L_{-1}^k w with w in the underlying d-dimensional space, stored as a
/// map from the exponent k to a coefficient vector. Zero vectors are never
/// stored, so equality is exact map equality.
class InducedElement {
public:
    InducedElement() = default;

    static InducedElement basis(int k, int s, int dim);

    bool is_zero() const { return terms_.empty(); }
    int max_exponent() const;

    const std::map<int, std::vector<GaussianRational>>& terms() const {
        return terms_;
    }

    void add_term(int k, int s, int dim, const GaussianRational& c);
    void add_vector(int k, const std::vector<GaussianRational>& v);

    InducedElement& operator+=(const InducedElement& o);
    InducedElement& operator-=(const InducedElement& o);
    friend InducedElement operator+(InducedElement a, const InducedElement& b) {
        return a += b;
    }
    friend InducedElement operator-(InducedElement a, const InducedElement& b) {
        return a -= b;
    }
    InducedElement scale(const GaussianRational& c) const;

    friend bool operator==(const InducedElement& a, const InducedElement& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const InducedElement& a, const InducedElement& b) {
        return !(a == b);
    }

    std::string str() const;

private:
    std::map<int, std::vector<GaussianRational>> terms_;
};

/// Result of the order computation: the minimal r >= 0 such that L_j
/// annihilates the vector for every j > r. A vector killed by the whole of
/// B still reports order 0, with the flag set to preserve the distinction.
struct OrdResult {
    int order = 0;
    bool annihilated_by_b = false;
};

/// How a BModuleSpec is realized as a module over a = span{L_i | i >= -1}:
/// either the PBW-induced module C[L_{-1}] (x) V_B on which L_{-1} acts
/// freely, or (only consistent for trivial specs) the space V_B itself
/// with every generator of a acting as zero.
enum class Realization { Induced, TrivialDirect };

/// The a-module attached to a spec, with the generator action computed by
/// normal-ordering L_i past powers of L_{-1} via repeated single swaps
///   L_i L_{-1} = L_{-1} L_i + (-1 - i) L_{i-1}.
/// Default realization: TrivialDirect for trivial specs (so that every
/// generator, including L_{-1}, kills the module), Induced otherwise.
class HModule {
public:
    explicit HModule(BModuleSpec spec);
    HModule(BModuleSpec spec, Realization realization);

    /// Force the PBW-induced realization even for a trivial spec.
    static HModule induced(BModuleSpec spec);

    const BModuleSpec& spec() const { return spec_; }
    Realization realization() const { return realization_; }

    /// Action of L_i (i >= -1). Rejects i < -1 (outside the subalgebra).
    InducedElement h_action(int i, const InducedElement& x) const;

    /// Order of a nonzero vector; throws on zero input.
    OrdResult ord(const InducedElement& x) const;

    /// The derivation e^{mt} d/dt = sum_i (m^i / i!) L_{i-1}, truncated at
    /// i = ord(x) + 1; the truncation is exact because higher generators
    /// annihilate x.
    InducedElement exp_derivation(long m, const InducedElement& x) const;

    /// Both-sides check of the operator identity
    ///   (e^{kt} d/dt) L_{-1}^i = (L_{-1} - k)^i e^{kt} d/dt.
    bool check_exp_shift_identity(long k, int i, const InducedElement& x) const;

    /// (L_i L_j - L_j L_i) x == (j - i) L_{i+j} x, exactly.
    bool bracket_check(int i, int j, const InducedElement& x) const;

private:
    InducedElement basis_action(int i, int k, int s) const;

    BModuleSpec spec_;
    Realization realization_;
    // Normal-ordering results on basis monomials, keyed by (i, k, s).
    mutable std::map<std::tuple<int, int, int>, InducedElement> cache_;
};

// Free-function forms operating on the default realization of the spec.
InducedElement h_action(const BModuleSpec& spec, int i, const InducedElement& x);
OrdResult ord(const BModuleSpec& spec, const InducedElement& x);
InducedElement exp_derivation(const BModuleSpec& spec, long m, const InducedElement& x);
bool check_exp_shift_identity(const BModuleSpec& spec, long k, int i,
                              const InducedElement& x);
bool bracket_check_h(const BModuleSpec& spec, int i, int j, const InducedElement& x);

}  // namespace virmod
