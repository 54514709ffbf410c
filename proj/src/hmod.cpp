#include "virmod/hmod.hpp"

#include <stdexcept>

namespace virmod {

namespace {

bool vector_is_zero(const std::vector<GaussianRational>& v) {
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

}  // namespace

BModuleSpec::BModuleSpec(int dim, int order, std::vector<Matrix> gens)
    : dim_(dim), order_(order), gens_(std::move(gens)) {
    trivial_ = true;
    for (const auto& m : gens_)
        if (!m.is_zero()) trivial_ = false;
}

BModuleSpec BModuleSpec::highest_weight(const GaussianRational& beta) {
    Matrix m(1, 1);
    m.at(0, 0) = beta;
    return from_matrices(1, 0, {m});
}

BModuleSpec BModuleSpec::trivial(int dim) {
    if (dim <= 0) throw std::invalid_argument("trivial spec needs dim >= 1");
    return from_matrices(dim, 0, {Matrix(dim, dim)});
}

BModuleSpec BModuleSpec::from_matrices(int dim, int order, std::vector<Matrix> gens) {
    if (dim <= 0) throw std::invalid_argument("spec dim must be positive");
    if (order < 0) throw std::invalid_argument("spec order must be >= 0");
    if (static_cast<int>(gens.size()) != order + 1)
        throw std::invalid_argument("spec needs exactly order+1 matrices");
    for (const auto& m : gens)
        if (m.rows() != dim || m.cols() != dim)
            throw std::invalid_argument("spec matrices must be dim x dim");
    if (order > 0 && gens[static_cast<std::size_t>(order)].is_zero())
        throw std::invalid_argument("declared order requires a nonzero top generator");

    // Bracket consistency: M_i M_j - M_j M_i = (j - i) M_{i+j}.
    const Matrix zero(dim, dim);
    for (int i = 0; i <= order; ++i) {
        for (int j = 0; j <= order; ++j) {
            const Matrix& mi = gens[static_cast<std::size_t>(i)];
            const Matrix& mj = gens[static_cast<std::size_t>(j)];
            Matrix lhs = mi * mj - mj * mi;
            const Matrix& target =
                (i + j <= order) ? gens[static_cast<std::size_t>(i + j)] : zero;
            if (!(lhs == target.scale(GaussianRational(j - i))))
                throw std::invalid_argument("generator matrices violate the Witt bracket");
        }
    }
    return BModuleSpec(dim, order, std::move(gens));
}

const Matrix& BModuleSpec::gen(int i) const {
    static const std::map<int, Matrix>* zeros = new std::map<int, Matrix>();
    if (i < 0) throw std::invalid_argument("generator index must be >= 0");
    if (i <= order_) return gens_[static_cast<std::size_t>(i)];
    auto* table = const_cast<std::map<int, Matrix>*>(zeros);
    auto it = table->find(dim_);
    if (it == table->end()) it = table->emplace(dim_, Matrix(dim_, dim_)).first;
    return it->second;
}

GaussianRational BModuleSpec::beta() const {
    if (dim_ != 1) throw std::invalid_argument("beta only defined for dim-1 specs");
    return gens_[0].at(0, 0);
}

bool BModuleSpec::top_generator_invertible() const {
    return gens_[static_cast<std::size_t>(order_)].rank() == dim_;
}

InducedElement InducedElement::basis(int k, int s, int dim) {
    if (k < 0 || s < 0 || s >= dim)
        throw std::invalid_argument("invalid basis indices");
    InducedElement e;
    std::vector<GaussianRational> v(static_cast<std::size_t>(dim), GaussianRational(0));
    v[static_cast<std::size_t>(s)] = GaussianRational(1);
    e.terms_.emplace(k, std::move(v));
    return e;
}

int InducedElement::max_exponent() const {
    if (terms_.empty()) return -1;
    return terms_.rbegin()->first;
}

void InducedElement::add_term(int k, int s, int dim, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        it = terms_
                 .emplace(k, std::vector<GaussianRational>(
                                 static_cast<std::size_t>(dim), GaussianRational(0)))
                 .first;
    }
    it->second[static_cast<std::size_t>(s)] += c;
    if (vector_is_zero(it->second)) terms_.erase(it);
}

void InducedElement::add_vector(int k, const std::vector<GaussianRational>& v) {
    if (vector_is_zero(v)) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, v);
        return;
    }
    for (std::size_t i = 0; i < v.size(); ++i) it->second[i] += v[i];
    if (vector_is_zero(it->second)) terms_.erase(it);
}

InducedElement& InducedElement::operator+=(const InducedElement& o) {
    for (const auto& [k, v] : o.terms_) add_vector(k, v);
    return *this;
}

InducedElement& InducedElement::operator-=(const InducedElement& o) {
    for (const auto& [k, v] : o.terms_) {
        std::vector<GaussianRational> neg = v;
        for (auto& c : neg) c = -c;
        add_vector(k, neg);
    }
    return *this;
}

InducedElement InducedElement::scale(const GaussianRational& c) const {
    InducedElement out;
    if (c.is_zero()) return out;
    for (const auto& [k, v] : terms_) {
        std::vector<GaussianRational> sv = v;
        for (auto& x : sv) x *= c;
        out.terms_.emplace(k, std::move(sv));
    }
    return out;
}

std::string InducedElement::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, v] : terms_) {
        for (std::size_t s = 0; s < v.size(); ++s) {
            if (v[s].is_zero()) continue;
            if (!out.empty()) out += " + ";
            if (k > 0) out += "L-1^" + std::to_string(k) + " ";
            out += "e_" + std::to_string(s) + " * " + v[s].str();
        }
    }
    return out;
}

HModule::HModule(BModuleSpec spec)
    : spec_(std::move(spec)),
      realization_(spec_.is_trivial() ? Realization::TrivialDirect
                                      : Realization::Induced) {}

HModule::HModule(BModuleSpec spec, Realization realization)
    : spec_(std::move(spec)), realization_(realization) {
    if (realization_ == Realization::TrivialDirect && !spec_.is_trivial())
        throw std::invalid_argument(
            "only a trivial spec extends to an a-module with L_{-1} = 0");
}

HModule HModule::induced(BModuleSpec spec) {
    return HModule(std::move(spec), Realization::Induced);
}

InducedElement HModule::basis_action(int i, int k, int s) const {
    auto key = std::make_tuple(i, k, s);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;

    InducedElement result;
    if (i == -1) {
        result = InducedElement::basis(k + 1, s, spec_.dim());
    } else if (k == 0) {
        if (i <= spec_.order()) {
            std::vector<GaussianRational> v(static_cast<std::size_t>(spec_.dim()),
                                            GaussianRational(0));
            v[static_cast<std::size_t>(s)] = GaussianRational(1);
            result.add_vector(0, spec_.gen(i).apply(v));
        }
    } else {
        // L_i L_{-1}^k w = L_{-1} (L_i L_{-1}^{k-1} w)
        //                + (-1 - i) (L_{i-1} L_{-1}^{k-1} w)
        InducedElement inner = basis_action(i, k - 1, s);
        for (const auto& [kk, v] : inner.terms()) result.add_vector(kk + 1, v);
        result += basis_action(i - 1, k - 1, s).scale(GaussianRational(-1 - i));
    }
    cache_.emplace(std::move(key), result);
    return result;
}

InducedElement HModule::h_action(int i, const InducedElement& x) const {
    if (i < -1)
        throw std::invalid_argument("generator index outside the subalgebra (i < -1)");

    if (realization_ == Realization::TrivialDirect) {
        if (x.max_exponent() > 0)
            throw std::invalid_argument(
                "element carries an L_{-1} part absent from the trivial module");
        return InducedElement();
    }

    InducedElement out;
    for (const auto& [k, v] : x.terms()) {
        for (std::size_t s = 0; s < v.size(); ++s) {
            if (v[s].is_zero()) continue;
            out += basis_action(i, k, static_cast<int>(s)).scale(v[s]);
        }
    }
    return out;
}

OrdResult HModule::ord(const InducedElement& x) const {
    if (x.is_zero()) throw std::invalid_argument("ord of the zero vector");
    // L_j x vanishes automatically for j > max exponent + spec order, so a
    // finite scan decides the order.
    int bound = std::max(0, x.max_exponent()) + spec_.order();
    int highest = -1;
    for (int j = 0; j <= bound; ++j) {
        if (!h_action(j, x).is_zero()) highest = j;
    }
    if (highest < 0) return OrdResult{0, true};
    return OrdResult{highest, false};
}

InducedElement HModule::exp_derivation(long m, const InducedElement& x) const {
    InducedElement out;
    if (x.is_zero()) return out;
    if (realization_ == Realization::TrivialDirect) {
        h_action(0, x);  // validates the element shape
        return out;      // every generator kills the module
    }
    int bound = ord(x).order + 1;
    for (int i = 0; i <= bound; ++i) {
        GaussianRational coeff =
            pow(GaussianRational(m), i) / factorial(static_cast<unsigned long>(i));
        out += h_action(i - 1, x).scale(coeff);
    }
    return out;
}

bool HModule::check_exp_shift_identity(long k, int i, const InducedElement& x) const {
    if (i < 0) throw std::invalid_argument("exponent i must be >= 0");
    // Left side: (e^{kt} d/dt) L_{-1}^i x.
    InducedElement shifted = x;
    for (int p = 0; p < i; ++p) shifted = h_action(-1, shifted);
    InducedElement lhs = exp_derivation(k, shifted);

    // Right side: (L_{-1} - k)^i (e^{kt} d/dt) x, by binomial expansion.
    InducedElement base = exp_derivation(k, x);
    InducedElement rhs;
    InducedElement power = base;  // L_{-1}^p applied to base, p ascending
    for (int p = 0; p <= i; ++p) {
        GaussianRational coeff =
            binomial(static_cast<unsigned long>(i), p) *
            pow(GaussianRational(-k), static_cast<long>(i - p));
        rhs += power.scale(coeff);
        if (p < i) power = h_action(-1, power);
    }
    return lhs == rhs;
}

bool HModule::bracket_check(int i, int j, const InducedElement& x) const {
    InducedElement lhs = h_action(i, h_action(j, x)) - h_action(j, h_action(i, x));
    InducedElement rhs;
    if (i != j)  // i == j gives zero on both sides; i + j >= -1 otherwise
        rhs = h_action(i + j, x).scale(GaussianRational(j - i));
    return lhs == rhs;
}

InducedElement h_action(const BModuleSpec& spec, int i, const InducedElement& x) {
    return HModule(spec).h_action(i, x);
}

OrdResult ord(const BModuleSpec& spec, const InducedElement& x) {
    return HModule(spec).ord(x);
}

InducedElement exp_derivation(const BModuleSpec& spec, long m, const InducedElement& x) {
    return HModule(spec).exp_derivation(m, x);
}

bool check_exp_shift_identity(const BModuleSpec& spec, long k, int i,
                              const InducedElement& x) {
    return HModule(spec).check_exp_shift_identity(k, i, x);
}

bool bracket_check_h(const BModuleSpec& spec, int i, int j, const InducedElement& x) {
    return HModule(spec).bracket_check(i, j, x);
}

}  // namespace virmod
